#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "tables.hpp"

namespace lerchzeta::simd {

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
      return detail::avx2_table() != nullptr && __builtin_cpu_supports("avx2") &&
             __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("SIMD variant not supported on this CPU");
  return isa == Isa::Avx2 ? *detail::avx2_table() : detail::scalar_table();
}

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* env = std::getenv("LERCHZETA_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return detail::scalar_table();
    if (isa_supported(Isa::Avx2)) return *detail::avx2_table();
    return detail::scalar_table();
  }();
  return chosen;
}

}  // namespace lerchzeta::simd
