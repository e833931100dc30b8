#include <cstdlib>
#include <string_view>

#include "steklov/kernels.hpp"

namespace steklov::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(STEKLOV_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa select() noexcept {
  if (const char* forced = std::getenv("STEKLOV_KERNELS"); forced && std::string_view(forced) == "scalar")
    return Isa::Scalar;
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) noexcept {
  return isa == Isa::Scalar || cpu_has_avx2();
}

const KernelTable& table(Isa isa) noexcept {
#if defined(STEKLOV_HAVE_AVX2_TU)
  if (isa == Isa::Avx2 && cpu_has_avx2()) return detail::avx2_table;
#else
  (void)isa;
#endif
  return detail::scalar_table;
}

Isa active_isa() noexcept {
  static const Isa chosen = select();
  return chosen;
}

const KernelTable& active() noexcept {
  static const KernelTable& chosen = table(active_isa());
  return chosen;
}

}  // namespace steklov::kernels
