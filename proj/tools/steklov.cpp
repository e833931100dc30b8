// Command-line front end: spectra, families, clump certificates, nodal
// domains and extremal sweeps. Reports go to stdout (or --out), diagnostics
// to stderr.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steklov/clump_combinatorics.hpp"
#include "steklov/enumeration.hpp"
#include "steklov/error.hpp"
#include "steklov/extremal.hpp"
#include "steklov/families.hpp"
#include "steklov/geometry.hpp"
#include "steklov/graph_io.hpp"
#include "steklov/report.hpp"
#include "steklov/spectral.hpp"
#include "thread_pool.hpp"

namespace fs = std::filesystem;
using namespace steklov;

namespace {

enum Exit { kOk = 0, kUsage = 1, kAssertion = 2, kRigidity = 3, kRange = 4 };

struct RunConfig {
  double tol = 1e-9;
  double zero_tol = 1e-9;
  double solver_tol = 1e-12;
  unsigned jobs = 1;
  std::string cache_dir;
  std::string format = "json";
  std::string out;
};

struct Outcome {
  ordered_json payload;
  int exit = kOk;
  std::string csv;  // used instead of the JSON envelope when set
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_graph(text);
  }
  return load_graph(path);
}

ClassKind parse_class(const std::string& name) {
  if (name == "trees") return ClassKind::Trees;
  if (name == "connected") return ClassKind::ConnectedGraphs;
  throw UsageError("--class must be 'trees' or 'connected'");
}

ClassCache make_cache(const RunConfig& cfg) {
  return cfg.cache_dir.empty() ? ClassCache::from_environment() : ClassCache(cfg.cache_dir);
}

void write_atomically(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) fail(ErrorCode::IoError, "cannot write " + tmp.string());
    os << text << '\n';
  }
  fs::rename(tmp, path);
}

// --- commands ------------------------------------------------------------------

struct SpectrumArgs {
  std::string input;
  std::string kind = "steklov";
  bool vectors = false;
};

Outcome cmd_spectrum(const SpectrumArgs& a, const RunConfig& cfg) {
  const Graph g = read_graph(a.input);
  SpectralOptions opt;
  opt.pivot_tol = cfg.solver_tol;
  SpectralResult r;
  if (a.kind == "steklov") r = steklov_spectrum(g, opt);
  else if (a.kind == "dirichlet") r = dirichlet_steklov_spectrum(g, opt);
  else if (a.kind == "laplacian") r = laplacian_spectrum(g, opt);
  else throw UsageError("--kind must be steklov, dirichlet or laplacian");
  return {spectrum_json(r, cfg.tol, a.vectors)};
}

struct FamilyArgs {
  std::string name;
  std::string l = "1";
  int i = 0, d = 0, d0 = 0, d1 = 0, n = 0, r = 0, k = 0;
  std::string base = "path";
  int tooth_i = 0, tooth_d = 0;
};

ordered_json family_json(const FamilyGraph& fg) {
  ordered_json marks = ordered_json::object();
  for (const auto& [name, v] : fg.landmarks) marks[name] = v;
  return ordered_json{{"family", fg.family}, {"params", fg.params}, {"landmarks", marks}, {"graph", graph_to_json(fg.graph)}};
}

Outcome cmd_family(const FamilyArgs& a, const RunConfig& cfg) {
  ordered_json out;
  if (a.name == "broom") {
    const BroomParams p = BroomParams{parse_rational(a.l), a.i, a.d}.normalized();
    out = family_json(build_broom(p));
    out["lambda1"] = rational_json(broom_lambda1(p));
    ordered_json f = ordered_json::array();
    for (const Rational& q : broom_eigenfunction(p)) f.push_back(to_string(q));
    out["eigenfunction"] = f;
  } else if (a.name == "min-broom") {
    const Rational l = parse_rational(a.l);
    const MinimalBroomSolution s = a.n > 0 ? minimal_broom(l, a.n) : minimal_broom_total(l);
    ordered_json mins = ordered_json::array();
    for (const BroomParams& p : s.minimizers) mins.push_back(ordered_json{{"l", to_string(p.l)}, {"i", p.i}, {"d", p.d}});
    out = ordered_json{{"family", a.n > 0 ? "minimal_broom_ln" : "minimal_broom_l"},
                       {"requested", ordered_json{{"l", to_string(l)}, {"n", a.n > 0 ? ordered_json(a.n) : ordered_json(nullptr)}}},
                       {"dirichlet_length", rational_json(s.l)},
                       {"n", s.n},
                       {"value", rational_json(s.value)},
                       {"minimizers", mins},
                       {"split_indices", s.split_indices}};
  } else if (a.name == "dumbbell") {
    out = family_json(build_dumbbell(a.d0, a.i, a.d1));
  } else if (a.name == "star") {
    out = family_json(build_star_paths(a.r, a.k));
  } else if (a.name == "path") {
    out = family_json(build_path(a.n));
  } else if (a.name == "cycle") {
    out = family_json(build_cycle(a.n));
  } else if (a.name == "comb") {
    const Graph base = a.base == "cycle" ? build_cycle(a.n).graph : build_path(a.n).graph;
    if (a.base != "cycle" && a.base != "path") throw UsageError("--base must be path or cycle");
    const RootedTree tooth = broom_tooth(a.tooth_i, a.tooth_d);
    out = family_json(build_comb(base, tooth));
    const CombSpectrum cs = comb_spectrum(base, tooth);
    ordered_json vals = ordered_json::array();
    for (double v : cs.values) vals.push_back(v);
    out["closed_form_sigma"] = vals;
  } else {
    throw UsageError("unknown family '" + a.name + "' (broom, min-broom, dumbbell, star, path, cycle, comb)");
  }
  if (out.contains("graph")) {
    const Graph g = graph_from_json(nlohmann::json::parse(out["graph"].dump()));
    if (!g.boundary().empty() && g.dirichlet().empty()) out["steklov"] = spectrum_json(steklov_spectrum(g), cfg.tol, false);
  }
  return {out};
}

struct ClumpArgs {
  std::string input;
  int k = 0;
};

Outcome cmd_clump(const ClumpArgs& a, const RunConfig&) {
  const Graph t = read_graph(a.input);
  ordered_json out = clump_json(clump_number(t));
  if (a.k > 0) out["sub_k"] = sub_k_json(is_sub_k(t, a.k));
  return {out};
}

struct CertArgs {
  std::string input;
  std::string mode = "clump";
  int k = 1;
  int r = 0;
  bool half = false;
};

Outcome cmd_clump_cert(const CertArgs& a, const RunConfig&) {
  const Graph t = read_graph(a.input);
  if (a.mode == "clump") {
    const auto cert = find_removal_for_clump(t, a.r, a.k, a.half);
    const bool hyp = removal_hypothesis_holds(t.edge_count(), a.r, a.k, a.half);
    ordered_json out{{"mode", "clump"}, {"r", a.r}, {"k", a.k}, {"half", a.half}, {"hypothesis_holds", hyp}};
    out["found"] = cert.has_value();
    out["certificate"] = cert ? certificate_json(*cert) : ordered_json(nullptr);
    return {out, hyp && !cert ? kAssertion : kOk};
  }
  if (a.mode == "sub-k") {
    const SubKRemoval s = find_removal_sub_k(t, a.r, a.k);
    const char* kind = s.kind == SubKRemoval::Kind::Removal         ? "removal"
                       : s.kind == SubKRemoval::Kind::StarException ? "star_exception"
                                                                    : "not_found";
    ordered_json out{{"mode", "sub-k"}, {"r", a.r}, {"k", a.k}, {"outcome", kind}};
    out["certificate"] = s.certificate ? certificate_json(*s.certificate) : ordered_json(nullptr);
    return {out, s.kind == SubKRemoval::Kind::NotFound ? kAssertion : kOk};
  }
  if (a.mode == "type-ab") return {type_ab_json(classify_type_AB(t, a.k))};
  throw UsageError("--mode must be clump, sub-k or type-ab");
}

struct NodalArgs {
  std::string input;
  int index = 0;  // 0: every eigenpair with sigma > 0
};

Outcome cmd_nodal(const NodalArgs& a, const RunConfig& cfg) {
  const Graph g = read_graph(a.input);
  const SpectralResult s = steklov_spectrum(g);
  ordered_json pairs = ordered_json::array();
  bool ok = true;
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    if (a.index > 0 && k + 1 != static_cast<std::size_t>(a.index)) continue;
    if (s.values[k] <= cfg.zero_tol) continue;
    const NodalDecomposition d = nodal_domains(g, s.extended[k], cfg.zero_tol);
    const NodalVerdict v = verify_nodal_theorem(g, s.values[k], s.extended[k], 1e-8, cfg.zero_tol);
    ok = ok && (v.ok || v.degenerate);
    ordered_json e = nodal_json(d, v);
    e["index"] = k + 1;
    e["sigma"] = s.values[k];
    pairs.push_back(e);
  }
  return {ordered_json{{"eigenpairs", pairs}, {"ok", ok}}, ok ? kOk : kAssertion};
}

struct VerifyArgs {
  int n = 0;
  int i = 2;
  std::string cls = "trees";
  std::string checkpoint;
  bool resume = false;
};

ExtremalReport run_sweep(int n, int i, ClassKind kind, const RunConfig& cfg, cli::ThreadPool& pool,
                         const ClassCache& cache, const std::string& checkpoint, bool resume) {
  SweepOptions opt;
  opt.tol = cfg.tol;
  opt.cache = &cache;
  opt.parallel_for = [&pool](std::size_t count, const std::function<void(std::size_t)>& body) {
    pool.parallel_for(count, body);
  };
  const ordered_json key{{"n", n}, {"i", i}, {"class", kind_name(kind)}, {"tol", cfg.tol}};
  if (!checkpoint.empty()) {
    opt.on_checkpoint = [&](const SweepState& s) {
      write_atomically(checkpoint, render(ordered_json{{"key", key}, {"state", sweep_state_json(s)}}, -1));
    };
    if (resume && fs::exists(checkpoint)) {
      std::ifstream is(checkpoint);
      const auto doc = nlohmann::json::parse(is, nullptr, false);
      if (doc.is_discarded() || !doc.contains("key") || !doc.contains("state"))
        fail(ErrorCode::ParseError, "unreadable checkpoint " + checkpoint);
      if (nlohmann::json::parse(key.dump()) != doc["key"])
        throw UsageError("checkpoint " + checkpoint + " belongs to a different sweep");
      opt.resume = sweep_state_from_json(doc["state"]);
      std::cerr << "resuming at class " << opt.resume->next << '\n';
    }
  }
  return verify_extremal(n, i, kind, opt);
}

Outcome cmd_verify(const VerifyArgs& a, const RunConfig& cfg, cli::ThreadPool& pool) {
  const ClassKind kind = parse_class(a.cls);
  const ClassCache cache = make_cache(cfg);
  const ExtremalReport r = run_sweep(a.n, a.i, kind, cfg, pool, cache, a.checkpoint, a.resume);
  Outcome o{extremal_json(r), r.exit_code()};
  if (cfg.format == "csv") o.csv = extremal_csv_header() + '\n' + extremal_csv_row(r) + '\n';
  return o;
}

struct SweepArgs {
  int n_min = 3;
  int n_max = 7;
  std::string cls = "trees";
};

Outcome cmd_sweep(const SweepArgs& a, const RunConfig& cfg, cli::ThreadPool& pool) {
  const ClassKind kind = parse_class(a.cls);
  const ClassCache cache = make_cache(cfg);
  ordered_json rows = ordered_json::array();
  std::string csv = extremal_csv_header() + '\n';
  bool violated = false, mismatch = false;
  for (int n = std::max(3, a.n_min); n <= a.n_max; ++n)
    for (int i = 2; i < n; ++i) {
      const ExtremalReport r = run_sweep(n, i, kind, cfg, pool, cache, "", false);
      std::cerr << "n=" << n << " i=" << i << " " << (r.certified() ? "certified" : "NOT certified") << '\n';
      rows.push_back(extremal_json(r));
      csv += extremal_csv_row(r) + '\n';
      violated = violated || r.exit_code() == kAssertion;
      mismatch = mismatch || r.exit_code() == kRigidity;
    }
  // Bound violations dominate argmin mismatches.
  const int exit = violated ? kAssertion : mismatch ? kRigidity : kOk;
  Outcome o{ordered_json{{"class", kind_name(kind)}, {"rows", rows}}, exit};
  if (cfg.format == "csv") o.csv = csv;
  return o;
}

Outcome cmd_selftest(const RunConfig& cfg, cli::ThreadPool& pool) {
  ordered_json checks = ordered_json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok, ordered_json detail = nullptr) {
    checks.push_back(ordered_json{{"check", name}, {"ok", ok}, {"detail", detail}});
    std::cerr << (ok ? "PASS " : "FAIL ") << name << '\n';
    all = all && ok;
  };

  const SpectralResult p2 = steklov_spectrum(build_path(2).graph);
  record("P2 Steklov spectrum is {0, 2}", std::abs(p2.values[0]) < 1e-12 && std::abs(p2.values[1] - 2) < 1e-12);

  double worst = 0.0;
  for (const Rational l : {Rational(1, 3), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(10, 3)})
    for (int i = 0; i <= 4; ++i)
      for (int d = 0; d <= 4; ++d) {
        const BroomParams p{l, i, d};
        const double num = dirichlet_steklov_spectrum(build_broom(p).graph).eigenvalue(1);
        worst = std::max(worst, std::abs(num - to_double(broom_lambda1(p))));
      }
  record("broom closed form", worst <= 1e-10, worst);

  const ClassCache cache = make_cache(cfg);
  for (auto [n, i, kind] : {std::tuple{7, 2, ClassKind::Trees}, std::tuple{7, 3, ClassKind::Trees},
                            std::tuple{6, 3, ClassKind::ConnectedGraphs}, std::tuple{8, 4, ClassKind::Trees}}) {
    const ExtremalReport r = run_sweep(n, i, kind, cfg, pool, cache, "", false);
    record("extremal n=" + std::to_string(n) + " i=" + std::to_string(i) + " " + kind_name(kind), r.certified(),
           number_json(r.minimum));
  }
  const auto comb = comb_spectrum(build_path(3).graph, rooted_path(1));
  record("sigma_3(Comb(P3;edge)) = 3/4", std::abs(comb.values[2] - 0.75) < 1e-12, comb.values[2]);
  return {ordered_json{{"checks", checks}, {"ok", all}}, all ? kOk : kAssertion};
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfSupportedRange: return kRange;
    case ErrorCode::CertificationFailed: return kAssertion;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steklov eigenvalues on graphs with boundary: spectra, extremal families and exhaustive certification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "equality tolerance")->check(CLI::PositiveNumber);
  app.add_option("--zero-tol", cfg.zero_tol, "relative zero threshold for eigenfunctions")->check(CLI::PositiveNumber);
  app.add_option("--solver-tol", cfg.solver_tol, "pivot tolerance of the linear solvers")->check(CLI::PositiveNumber);
  app.add_option("--jobs,-j", cfg.jobs, "worker threads for sweeps")->check(CLI::Range(1u, 1024u));
  app.add_option("--cache-dir", cfg.cache_dir, "class cache directory (default $STEKLOV_CACHE_DIR or .steklov-cache)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out,-o", cfg.out, "write the report here instead of stdout");

  SpectrumArgs spectrum;
  auto* c_spec = app.add_subcommand("spectrum", "eigenvalues of a graph read from JSON");
  c_spec->add_option("graph", spectrum.input, "graph JSON file, or - for stdin")->required();
  c_spec->add_option("--kind", spectrum.kind, "steklov | dirichlet | laplacian");
  c_spec->add_flag("--vectors", spectrum.vectors, "include eigenfunctions");

  FamilyArgs family;
  auto* c_fam = app.add_subcommand("family", "build an extremal family member with its closed-form data");
  c_fam->add_option("name", family.name, "broom | min-broom | dumbbell | star | path | cycle | comb")->required();
  c_fam->add_option("--l", family.l, "broom length (p/q or decimal)");
  c_fam->add_option("--i", family.i, "broom / dumbbell path length");
  c_fam->add_option("--d", family.d, "broom pendant count");
  c_fam->add_option("--d0", family.d0, "dumbbell pendants at the start");
  c_fam->add_option("--d1", family.d1, "dumbbell pendants at the end");
  c_fam->add_option("--n", family.n, "vertex count (path, cycle, comb base) or n of Lambda(l, n)");
  c_fam->add_option("--r", family.r, "star degree");
  c_fam->add_option("--arm", family.k, "star arm length");
  c_fam->add_option("--base", family.base, "comb base: path | cycle");
  c_fam->add_option("--tooth-i", family.tooth_i, "comb tooth path length");
  c_fam->add_option("--tooth-d", family.tooth_d, "comb tooth pendant count");

  ClumpArgs clump;
  auto* c_clump = app.add_subcommand("clump", "clump number and equilibrium point of a tree");
  c_clump->add_option("graph", clump.input, "tree JSON file, or -")->required();
  c_clump->add_option("--k", clump.k, "also decide whether the tree is sub-k");

  CertArgs cert;
  auto* c_cert = app.add_subcommand("clump-cert", "edge-removal certificates on a tree");
  c_cert->add_option("graph", cert.input, "tree JSON file, or -")->required();
  c_cert->add_option("--mode", cert.mode, "clump | sub-k | type-ab");
  c_cert->add_option("--k", cert.k, "clump bound k")->required();
  c_cert->add_option("--r", cert.r, "number of edges that may be removed");
  c_cert->add_flag("--half", cert.half, "bound the clump numbers by k + 1/2");

  NodalArgs nodal;
  auto* c_nodal = app.add_subcommand("nodal", "nodal domains of Steklov eigenfunctions");
  c_nodal->add_option("graph", nodal.input, "graph JSON file, or -")->required();
  c_nodal->add_option("--index", nodal.index, "1-based eigenpair (default: all with sigma > 0)");

  VerifyArgs verify;
  auto* c_ver = app.add_subcommand("verify", "exhaustive minimisation of sigma_i over a class");
  c_ver->add_option("--n", verify.n, "vertex count")->required();
  c_ver->add_option("--i", verify.i, "eigenvalue index")->required();
  c_ver->add_option("--class", verify.cls, "trees | connected");
  c_ver->add_option("--checkpoint", verify.checkpoint, "checkpoint file written every 1000 classes");
  c_ver->add_flag("--resume", verify.resume, "continue from --checkpoint when it exists");

  SweepArgs sweep;
  auto* c_sweep = app.add_subcommand("sweep", "verify every (n, i) with 2 <= i < n over a range of n");
  c_sweep->add_option("--n-min", sweep.n_min, "smallest n");
  c_sweep->add_option("--n-max", sweep.n_max, "largest n");
  c_sweep->add_option("--class", sweep.cls, "trees | connected");

  auto* c_self = app.add_subcommand("selftest", "quick end-to-end checks");

  std::vector<std::string> echo(argv, argv + argc);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ERROR Usage: " << e.what() << '\n';
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    cli::ThreadPool pool(cfg.jobs);
    if (*c_spec) outcome = cmd_spectrum(spectrum, cfg);
    else if (*c_fam) outcome = cmd_family(family, cfg);
    else if (*c_clump) outcome = cmd_clump(clump, cfg);
    else if (*c_cert) outcome = cmd_clump_cert(cert, cfg);
    else if (*c_nodal) outcome = cmd_nodal(nodal, cfg);
    else if (*c_ver) outcome = cmd_verify(verify, cfg, pool);
    else if (*c_sweep) outcome = cmd_sweep(sweep, cfg, pool);
    else if (*c_self) outcome = cmd_selftest(cfg, pool);
  } catch (const UsageError& e) {
    std::cerr << "ERROR Usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "ERROR " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "ERROR Internal: " << e.what() << '\n';
    return kAssertion;
  }

  RunReport report;
  report.command = echo;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.payload = outcome.payload;
  const std::string text = outcome.csv.empty() ? render(report.to_json()) + '\n' : outcome.csv;
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(cfg.out, std::ios::trunc);
    if (!os) {
      std::cerr << "ERROR IoError: cannot write " << cfg.out << '\n';
      return kUsage;
    }
    os << text;
  }
  if (outcome.exit == kAssertion) std::cerr << "ERROR AssertionFailed: a checked bound or statement failed\n";
  if (outcome.exit == kRigidity) std::cerr << "ERROR RigidityMismatch: argmin set differs from the predicted minimizers\n";
  return outcome.exit;
}
