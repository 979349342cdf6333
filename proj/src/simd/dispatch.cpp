#include "delsub/simd/kernels.hpp"

namespace delsub::simd {

namespace detail {
#if !DELSUB_HAVE_AVX2
const KernelTable* avx2_table() { return nullptr; }
#endif
#if !DELSUB_HAVE_NEON
const KernelTable* neon_table() { return nullptr; }
#endif
}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if DELSUB_HAVE_AVX2 && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& select_best() {
  if (const KernelTable* t = kernels_for(Isa::avx2)) return *t;
  if (const KernelTable* t = kernels_for(Isa::neon)) return *t;
  return detail::scalar_table();
}

}  // namespace

const KernelTable* kernels_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &detail::scalar_table();
    case Isa::avx2:
      return cpu_has_avx2() ? detail::avx2_table() : nullptr;
    case Isa::neon:
      return detail::neon_table();
  }
  return nullptr;
}

const KernelTable& kernels() {
  static const KernelTable& best = select_best();
  return best;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (kernels_for(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

}  // namespace delsub::simd
