#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "steklov/graph.hpp"
#include "steklov/linalg.hpp"

namespace steklov {

/// L = D_w - W together with the vertex measures; Delta_G f = -M^{-1} L f.
struct LaplacianForm {
  Matrix matrix;
  std::vector<double> measures;
};

LaplacianForm laplacian_matrix(const Graph& g);

/// (Delta_G f)(x) = (1/m_x) sum_y (f(y) - f(x)) w_xy
std::vector<double> apply_laplacian(const Graph& g, std::span<const double> f);

/// <df, dg>_G = sum over edges (f(x)-f(y)) (g(x)-g(y)) w_xy
double dirichlet_form(const Graph& g, std::span<const double> f, std::span<const double> h);

/// <f, h>_A = sum_{x in A} f(x) h(x) m_x
double measure_inner(const Graph& g, std::span<const VertexId> subset, std::span<const double> f,
                     std::span<const double> h);

/// Unique function equal to `data` on B and B_D and harmonic on the interior.
/// `data` has one entry per vertex; interior entries are ignored. Throws
/// NoBoundary when B and B_D are both empty and Disconnected when some
/// component has neither.
std::vector<double> harmonic_extension(const Graph& g, std::span<const double> data, double pivot_tol = 1e-12);

/// (df/dn)(x) = -(Delta_G f)(x) for x in B, in the order of g.boundary().
std::vector<double> normal_derivative(const Graph& g, std::span<const double> f);

enum class DtnVariant {
  Steklov,    // no Dirichlet vertices allowed
  Dirichlet,  // vanishing data on B_D (the operator Lambda_0)
};

/// Dirichlet-to-Neumann map as the Schur complement of L onto B:
///   S = L_BB - L_BO L_OO^{-1} L_OB,  O = interior vertices,
/// with B_D rows and columns dropped. `extension` maps boundary data to the
/// values of its harmonic extension on `interior`.
struct DtnOperator {
  DtnVariant variant = DtnVariant::Steklov;
  std::vector<VertexId> boundary;
  std::vector<VertexId> interior;
  std::vector<double> boundary_measure;
  Matrix schur;
  Matrix extension;  // |interior| x |boundary|

  /// Extends boundary data u (in `boundary` order) to a function on all of V;
  /// Dirichlet vertices get 0.
  std::vector<double> extend(std::span<const double> u, std::size_t vertex_count) const;
};

/// Throws NoBoundary when B is empty, SingularInterior when the interior
/// block is singular (a component touching neither B nor B_D), and
/// InvalidParams for the Steklov variant on a graph with Dirichlet vertices.
DtnOperator dtn_matrix(const Graph& g, DtnVariant variant, double pivot_tol = 1e-12);

enum class SpectrumKind { Steklov, Dirichlet, Laplacian };
std::string_view kind_name(SpectrumKind kind) noexcept;

struct SpectralOptions {
  double pivot_tol = 1e-12;
  bool vectors = true;
};

struct SpectralResult {
  SpectrumKind kind = SpectrumKind::Steklov;
  std::vector<VertexId> domain;               // boundary vertices, or all of V for the Laplacian
  std::vector<double> values;                 // ascending, with multiplicity
  std::vector<std::vector<double>> vectors;   // on `domain`, orthonormal in the measure inner product
  std::vector<std::vector<double>> extended;  // the same eigenfunctions on all of V
  double operator_norm = 0.0;                 // Frobenius norm of the operator
  double max_residual = 0.0;                  // max ||A u - s M u|| / max(1, ||A||)

  /// 1-based; +infinity beyond the operator's dimension.
  double eigenvalue(std::size_t i) const {
    return i >= 1 && i <= values.size() ? values[i - 1] : std::numeric_limits<double>::infinity();
  }
};

SpectralResult steklov_spectrum(const Graph& g, const SpectralOptions& options = {});
SpectralResult dirichlet_steklov_spectrum(const Graph& g, const SpectralOptions& options = {});
SpectralResult laplacian_spectrum(const Graph& g, const SpectralOptions& options = {});

/// Eigenvalue equality used for multiplicity and rigidity decisions:
/// |a - b| <= rel * max(1, |a|).
bool eigen_equal(double a, double b, double rel = 1e-8) noexcept;
/// Number of values equal (in the sense above) to values[index].
std::size_t multiplicity(std::span<const double> values, std::size_t index, double rel = 1e-8);

}  // namespace steklov
