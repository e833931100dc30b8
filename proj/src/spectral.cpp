#include "steklov/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "steklov/error.hpp"
#include "steklov/kernels.hpp"

namespace steklov {

LaplacianForm laplacian_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  LaplacianForm form{Matrix(n, n), std::vector<double>(g.measures().begin(), g.measures().end())};
  for (const Edge& e : g.edges()) {
    form.matrix(e.u, e.u) += e.weight;
    form.matrix(e.v, e.v) += e.weight;
    form.matrix(e.u, e.v) -= e.weight;
    form.matrix(e.v, e.u) -= e.weight;
  }
  return form;
}

std::vector<double> apply_laplacian(const Graph& g, std::span<const double> f) {
  std::vector<double> out(g.vertex_count(), 0.0);
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    double sum = 0.0;
    for (const Incidence& inc : g.incident(x)) sum += (f[inc.neighbor] - f[x]) * g.edge(inc.edge).weight;
    out[x] = sum / g.measure(x);
  }
  return out;
}

double dirichlet_form(const Graph& g, std::span<const double> f, std::span<const double> h) {
  double sum = 0.0;
  for (const Edge& e : g.edges()) sum += (f[e.u] - f[e.v]) * (h[e.u] - h[e.v]) * e.weight;
  return sum;
}

double measure_inner(const Graph& g, std::span<const VertexId> subset, std::span<const double> f,
                     std::span<const double> h) {
  double sum = 0.0;
  for (VertexId x : subset) sum += f[x] * h[x] * g.measure(x);
  return sum;
}

std::vector<double> harmonic_extension(const Graph& g, std::span<const double> data, double pivot_tol) {
  if (data.size() != g.vertex_count()) fail(ErrorCode::IndexOutOfRange, "harmonic_extension: one value per vertex");
  std::vector<VertexId> interior = g.vertices_with(VertexRole::Interior);
  if (interior.size() == g.vertex_count() && g.vertex_count() > 0)
    fail(ErrorCode::NoBoundary, "harmonic extension needs B or B_D to be non-empty");
  for (const auto& comp : g.components()) {
    const bool anchored = std::any_of(comp.begin(), comp.end(), [&](VertexId x) { return g.role(x) != VertexRole::Interior; });
    if (!anchored)
      fail(ErrorCode::Disconnected, "component containing vertex " + std::to_string(comp.front()) + " has no boundary");
  }

  std::vector<double> f(data.begin(), data.end());
  if (interior.empty()) return f;
  std::vector<std::size_t> slot(g.vertex_count(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < interior.size(); ++k) slot[interior[k]] = k;

  Matrix block(interior.size(), interior.size());
  std::vector<double> rhs(interior.size(), 0.0);
  for (std::size_t k = 0; k < interior.size(); ++k) {
    for (const Incidence& inc : g.incident(interior[k])) {
      const double w = g.edge(inc.edge).weight;
      block(k, k) += w;
      if (slot[inc.neighbor] != static_cast<std::size_t>(-1)) block(k, slot[inc.neighbor]) -= w;
      else rhs[k] += w * data[inc.neighbor];
    }
  }
  Cholesky chol;
  if (!chol.factor(block, pivot_tol)) fail(ErrorCode::SingularInterior, "interior block is singular");
  const auto values = chol.solve(rhs);
  for (std::size_t k = 0; k < interior.size(); ++k) f[interior[k]] = values[k];
  return f;
}

std::vector<double> normal_derivative(const Graph& g, std::span<const double> f) {
  std::vector<double> out;
  for (VertexId x : g.boundary()) {
    double sum = 0.0;
    for (const Incidence& inc : g.incident(x)) sum += (f[x] - f[inc.neighbor]) * g.edge(inc.edge).weight;
    out.push_back(sum / g.measure(x));
  }
  return out;
}

std::vector<double> DtnOperator::extend(std::span<const double> u, std::size_t vertex_count) const {
  std::vector<double> f(vertex_count, 0.0);
  for (std::size_t b = 0; b < boundary.size(); ++b) f[boundary[b]] = u[b];
  for (std::size_t k = 0; k < interior.size(); ++k) f[interior[k]] = kernels::dot(extension.row(k), u);
  return f;
}

DtnOperator dtn_matrix(const Graph& g, DtnVariant variant, double pivot_tol) {
  DtnOperator op;
  op.variant = variant;
  op.boundary = g.boundary();
  op.interior = g.vertices_with(VertexRole::Interior);
  if (op.boundary.empty()) fail(ErrorCode::NoBoundary, "the boundary B is empty");
  if (variant == DtnVariant::Steklov && !g.dirichlet().empty())
    fail(ErrorCode::InvalidParams, "Steklov variant requires B_D to be empty; use the Dirichlet variant");

  const std::size_t nb = op.boundary.size();
  const std::size_t ni = op.interior.size();
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> bslot(g.vertex_count(), none);
  std::vector<std::size_t> islot(g.vertex_count(), none);
  for (std::size_t k = 0; k < nb; ++k) bslot[op.boundary[k]] = k;
  for (std::size_t k = 0; k < ni; ++k) islot[op.interior[k]] = k;
  for (VertexId x : op.boundary) op.boundary_measure.push_back(g.measure(x));

  // Blocks of L restricted to B and the interior; Dirichlet columns vanish
  // but their weights stay on the diagonal.
  Matrix lbb(nb, nb);
  Matrix lii(ni, ni);
  Matrix lib(ni, nb);
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    double degree = 0.0;
    for (const Incidence& inc : g.incident(x)) degree += g.edge(inc.edge).weight;
    if (bslot[x] != none) lbb(bslot[x], bslot[x]) = degree;
    if (islot[x] != none) lii(islot[x], islot[x]) = degree;
  }
  for (const Edge& e : g.edges()) {
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (bslot[x] != none && bslot[y] != none) lbb(bslot[x], bslot[y]) -= e.weight;
      if (islot[x] != none && islot[y] != none) lii(islot[x], islot[y]) -= e.weight;
      if (islot[x] != none && bslot[y] != none) lib(islot[x], bslot[y]) -= e.weight;
    }
  }

  op.extension = Matrix(ni, nb);
  op.schur = lbb;
  if (ni > 0) {
    Cholesky chol;
    if (!chol.factor(lii, pivot_tol))
      fail(ErrorCode::SingularInterior, "interior block is singular: some component touches neither B nor B_D");
    std::vector<double> column(ni);
    for (std::size_t b = 0; b < nb; ++b) {
      for (std::size_t k = 0; k < ni; ++k) column[k] = -lib(k, b);
      const auto x = chol.solve(column);
      for (std::size_t k = 0; k < ni; ++k) op.extension(k, b) = x[k];
    }
    // S = L_BB + L_BI X with X = -L_II^{-1} L_IB; L_BI = L_IB^T.
    const Matrix lbi = lib.transposed();
    for (std::size_t r = 0; r < nb; ++r) {
      for (std::size_t c = 0; c < nb; ++c) {
        double sum = 0.0;
        for (std::size_t k = 0; k < ni; ++k) sum += lbi(r, k) * op.extension(k, c);
        op.schur(r, c) += sum;
      }
    }
  }
  for (std::size_t r = 0; r < nb; ++r)
    for (std::size_t c = r + 1; c < nb; ++c) op.schur(r, c) = op.schur(c, r) = 0.5 * (op.schur(r, c) + op.schur(c, r));
  return op;
}

std::string_view kind_name(SpectrumKind kind) noexcept {
  switch (kind) {
    case SpectrumKind::Steklov: return "steklov";
    case SpectrumKind::Dirichlet: return "dirichlet";
    case SpectrumKind::Laplacian: return "laplacian";
  }
  return "steklov";
}

namespace {

// Solves A u = s M u with diagonal M by conjugating with M^{-1/2}.
void diagonal_pencil(const Matrix& a, std::span<const double> measure, SpectralResult& out) {
  const std::size_t n = a.rows();
  std::vector<double> inv_sqrt(n);
  for (std::size_t k = 0; k < n; ++k) inv_sqrt[k] = 1.0 / std::sqrt(measure[k]);
  Matrix scaled(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) scaled(r, c) = inv_sqrt[r] * a(r, c) * inv_sqrt[c];

  const SymmetricEigen eig = symmetric_eigen(scaled);
  out.operator_norm = a.frobenius_norm();
  const double norm = std::max(1.0, out.operator_norm);
  const double zero_snap = 1e-13 * std::max(1.0, scaled.frobenius_norm());

  out.values.resize(n);
  out.vectors.resize(n);
  out.max_residual = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double value = eig.values[k];
    if (std::fabs(value) <= zero_snap) value = 0.0;
    out.values[k] = value;
    std::vector<double> u(n);
    for (std::size_t j = 0; j < n; ++j) u[j] = inv_sqrt[j] * eig.vectors[k][j];
    const auto au = a.multiply(u);
    double res = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double r = au[j] - value * measure[j] * u[j];
      res += r * r;
    }
    out.max_residual = std::max(out.max_residual, std::sqrt(res) / norm);
    out.vectors[k] = std::move(u);
  }
}

SpectralResult boundary_spectrum(const Graph& g, DtnVariant variant, SpectrumKind kind, const SpectralOptions& options) {
  const DtnOperator op = dtn_matrix(g, variant, options.pivot_tol);
  SpectralResult out;
  out.kind = kind;
  out.domain = op.boundary;
  diagonal_pencil(op.schur, op.boundary_measure, out);
  if (options.vectors) {
    out.extended.reserve(out.vectors.size());
    for (const auto& u : out.vectors) out.extended.push_back(op.extend(u, g.vertex_count()));
  } else {
    out.vectors.clear();
  }
  return out;
}

}  // namespace

SpectralResult steklov_spectrum(const Graph& g, const SpectralOptions& options) {
  return boundary_spectrum(g, DtnVariant::Steklov, SpectrumKind::Steklov, options);
}

SpectralResult dirichlet_steklov_spectrum(const Graph& g, const SpectralOptions& options) {
  return boundary_spectrum(g, DtnVariant::Dirichlet, SpectrumKind::Dirichlet, options);
}

SpectralResult laplacian_spectrum(const Graph& g, const SpectralOptions& options) {
  const LaplacianForm form = laplacian_matrix(g);
  SpectralResult out;
  out.kind = SpectrumKind::Laplacian;
  for (VertexId x = 0; x < g.vertex_count(); ++x) out.domain.push_back(x);
  diagonal_pencil(form.matrix, form.measures, out);
  if (options.vectors) out.extended = out.vectors;
  else out.vectors.clear();
  return out;
}

bool eigen_equal(double a, double b, double rel) noexcept {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= rel * std::max(1.0, std::fabs(a));
}

std::size_t multiplicity(std::span<const double> values, std::size_t index, double rel) {
  std::size_t count = 0;
  for (double v : values)
    if (eigen_equal(values[index], v, rel)) ++count;
  return count;
}

}  // namespace steklov
