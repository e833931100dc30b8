#pragma once

// Dense inner loops used by the linear algebra layer. Each kernel has a
// portable scalar reference and, on x86-64, an AVX2+FMA variant. The variant
// is chosen once at startup from CPUID; STEKLOV_KERNELS=scalar forces the
// reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace steklov::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // (x, y) <- (c x - s y, s x + c y)
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
  // max_k |x_k|
  double (*max_abs)(const double* x, std::size_t n);
};

std::string_view isa_name(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;
/// Table for a specific ISA; falls back to scalar when unavailable.
const KernelTable& table(Isa isa) noexcept;
const KernelTable& active() noexcept;
Isa active_isa() noexcept;

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}
inline void rotate(std::span<double> x, std::span<double> y, double c, double s) {
  active().rotate(x.data(), y.data(), x.size(), c, s);
}
inline double max_abs(std::span<const double> x) {
  return active().max_abs(x.data(), x.size());
}

namespace detail {
extern const KernelTable scalar_table;
#if defined(STEKLOV_HAVE_AVX2_TU)
extern const KernelTable avx2_table;
#endif
}  // namespace detail

}  // namespace steklov::kernels
