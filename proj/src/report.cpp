#include "steklov/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "steklov/error.hpp"

namespace steklov {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_extended(const Extended& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

namespace {

void render_into(const ordered_json& j, int indent, int depth, std::string& out) {
  const auto pad = [&](int d) {
    if (indent >= 0) out += '\n' + std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        out += ordered_json(it.key()).dump();
        out += indent >= 0 ? ": " : ":";
        render_into(it.value(), indent, depth + 1, out);
      }
      pad(depth);
      out += '}';
      return;
    }
    case ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const ordered_json& e) { return !e.is_structured(); });
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat && indent >= 0 ? ", " : ",";
        first = false;
        if (!flat) pad(depth + 1);
        render_into(e, indent, depth + 1, out);
      }
      if (!flat) pad(depth);
      out += ']';
      return;
    }
    case ordered_json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_double(x) : ordered_json(format_double(x)).dump();
      return;
    }
    default:
      out += j.dump();
  }
}

ordered_json codes_json(const std::vector<CanonicalCode>& codes) {
  ordered_json a = ordered_json::array();
  for (const auto& c : codes) a.push_back(c);
  return a;
}

}  // namespace

std::string render(const ordered_json& doc, int indent) {
  std::string out;
  render_into(doc, indent, 0, out);
  return out;
}

ordered_json rational_json(const Rational& q) {
  return ordered_json{{"exact", to_string(q)}, {"value", to_double(q)}};
}

ordered_json number_json(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

ordered_json spectrum_json(const SpectralResult& r, double tol, bool vectors) {
  ordered_json j;
  j["kind"] = kind_name(r.kind);
  ordered_json vals = ordered_json::array();
  for (double v : r.values) vals.push_back(v);
  j["eigenvalues"] = vals;
  j["tol"] = tol;
  j["domain"] = r.domain;
  j["max_residual"] = r.max_residual;
  if (vectors) {
    ordered_json vs = ordered_json::array();
    for (const auto& v : r.extended) vs.push_back(v);
    j["vectors"] = vs;
  }
  return j;
}

ordered_json point_json(const GeometricPoint& p) {
  if (p.is_vertex()) return ordered_json{{"kind", "vertex"}, {"vertex", p.vertex}};
  return ordered_json{{"kind", "edge"}, {"edge", p.edge}, {"offset", p.offset}};
}

ordered_json clump_json(const ClumpNumber& c) {
  ordered_json clumps = ordered_json::array();
  for (const Clump& cl : c.report.clumps) clumps.push_back(ordered_json{{"length", cl.length}, {"vertices", cl.vertices}});
  return ordered_json{{"clump_number", rational_json(c.value)}, {"equilibrium", point_json(c.equilibrium)}, {"clumps", clumps}};
}

ordered_json certificate_json(const RemovalCertificate& c) {
  ordered_json j;
  j["removed_edges"] = c.removed;
  j["components"] = c.components;
  ordered_json cl = ordered_json::array();
  for (const Rational& q : c.clump_numbers) cl.push_back(rational_json(q));
  j["clump_numbers"] = cl;
  if (!c.sub_k.empty()) {
    ordered_json s = ordered_json::array();
    for (bool b : c.sub_k) s.push_back(b);
    j["sub_k"] = s;
  }
  return j;
}

ordered_json sub_k_json(const SubKWitness& w) {
  ordered_json cands = ordered_json::array();
  for (const auto& [v, count] : w.candidates) cands.push_back(ordered_json{{"vertex", v}, {"broom_clumps", count}});
  ordered_json j{{"sub_k", w.sub_k}, {"clump_number", rational_json(w.clump)}, {"candidates", cands}};
  j["witness"] = w.witness ? ordered_json(*w.witness) : ordered_json(nullptr);
  return j;
}

ordered_json type_ab_json(const TypeABClassification& t) {
  ordered_json j{{"k", t.k}, {"verdict", verdict_name(t.verdict)}};
  j["type_a"] = t.witness_a ? ordered_json{{"r", *t.r_a}, {"certificate", certificate_json(*t.witness_a)}} : ordered_json(nullptr);
  j["type_b"] = t.witness_b ? ordered_json{{"r", *t.r_b}, {"certificate", certificate_json(*t.witness_b)}} : ordered_json(nullptr);
  return j;
}

ordered_json nodal_json(const NodalDecomposition& d, const NodalVerdict& v) {
  ordered_json doms = ordered_json::array();
  for (std::size_t k = 0; k < d.domains.size(); ++k) {
    const NodalDomain& dom = d.domains[k];
    ordered_json cuts = ordered_json::array();
    for (const auto& p : dom.cut_points) cuts.push_back(point_json(p));
    ordered_json e{{"sign", dom.sign}, {"vertices", dom.vertices}, {"zero_vertices", dom.zero_vertices}, {"cut_points", cuts}};
    if (k < v.domains.size()) {
      const DomainVerdict& dv = v.domains[k];
      e["lambda1"] = dv.lambda1;
      e["deviation"] = dv.deviation;
      e["one_signed"] = dv.one_signed;
      e["ok"] = dv.ok;
    }
    doms.push_back(e);
  }
  return ordered_json{{"degenerate", d.degenerate}, {"domains", doms}, {"ok", v.ok}};
}

ordered_json target_json(const ExtremalTarget& t) {
  ordered_json j;
  j["n"] = t.n;
  j["i"] = t.i;
  j["case"] = case_name(t.tag);
  j["m"] = rational_json(t.m);
  j["bound"] = static_cast<double>(t.bound);
  j["bound_extended"] = format_extended(t.bound);
  j["bound_exact"] = t.exact_bound ? ordered_json(to_string(*t.exact_bound)) : ordered_json(nullptr);
  j["theta"] = t.theta ? ordered_json(format_extended(*t.theta)) : ordered_json(nullptr);
  ordered_json mins = ordered_json::array();
  for (const auto& pm : t.minimizers) mins.push_back(pm.description);
  j["predicted_minimizers"] = mins;
  j["characterized"] = t.characterized;
  return j;
}

ordered_json extremal_json(const ExtremalReport& r) {
  ordered_json j;
  j["target"] = target_json(r.target);
  j["class"] = kind_name(r.kind);
  j["class_size"] = r.class_size;
  j["minimum"] = number_json(r.minimum);
  j["argmin"] = codes_json(r.argmin);
  j["predicted"] = codes_json(r.predicted);
  j["bound_ok"] = r.bound_ok;
  j["attains_bound"] = r.attains_bound;
  j["match"] = match_name(r.match);
  j["certified"] = r.certified();
  j["tol"] = r.tol;
  j["max_residual"] = r.max_residual;
  j["classes_with_small_boundary"] = r.infinite;
  j["seconds"] = r.seconds;
  return j;
}

ordered_json sweep_state_json(const SweepState& s) {
  ordered_json c = ordered_json::array();
  for (const auto& [code, v] : s.candidates) c.push_back(ordered_json{{"code", code}, {"value", v}});
  return ordered_json{{"next", s.next},
                      {"minimum", number_json(s.minimum)},
                      {"candidates", c},
                      {"max_residual", s.max_residual},
                      {"infinite", s.infinite}};
}

SweepState sweep_state_from_json(const nlohmann::json& doc) {
  try {
    SweepState s;
    s.next = doc.at("next").get<std::size_t>();
    const auto& m = doc.at("minimum");
    s.minimum = m.is_string() ? std::numeric_limits<double>::infinity() : m.get<double>();
    for (const auto& c : doc.at("candidates")) s.candidates.emplace_back(c.at("code").get<std::string>(), c.at("value").get<double>());
    s.max_residual = doc.at("max_residual").get<double>();
    s.infinite = doc.at("infinite").get<std::size_t>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed sweep checkpoint: ") + e.what());
  }
}

std::string extremal_csv_header() {
  return "n,i,case,class,class_size,minimum,bound,bound_exact,argmin_count,argmin,match,certified";
}

std::string extremal_csv_row(const ExtremalReport& r) {
  std::string argmin;
  for (std::size_t k = 0; k < r.argmin.size(); ++k) argmin += (k ? ";" : "") + r.argmin[k];
  std::ostringstream os;
  os << r.target.n << ',' << r.target.i << ',' << case_name(r.target.tag) << ',' << kind_name(r.kind) << ','
     << r.class_size << ',' << format_double(r.minimum) << ',' << format_double(static_cast<double>(r.target.bound))
     << ',' << (r.target.exact_bound ? to_string(*r.target.exact_bound) : "") << ',' << r.argmin.size() << ",\""
     << argmin << "\"," << match_name(r.match) << ',' << (r.certified() ? "true" : "false");
  return os.str();
}

ordered_json RunReport::to_json() const {
  return ordered_json{{"command", command}, {"version", kVersion}, {"timing", {{"seconds", seconds}}}, {"payload", payload}};
}

}  // namespace steklov
