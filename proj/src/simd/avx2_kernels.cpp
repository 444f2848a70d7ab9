#include "tables.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))

#include <immintrin.h>

#include <cfloat>
#include <cmath>

#define LZ_AVX2 __attribute__((target("avx2,fma")))

namespace lerchzeta::simd::detail {
namespace {

LZ_AVX2 inline __m256d set1(double v) { return _mm256_set1_pd(v); }

// Integral-valued doubles with |n| < 2^51 to int64 lanes.
LZ_AVX2 inline __m256i to_int64(__m256d n) {
  const __m256d magic = set1(0x1.8p52);
  return _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(n, magic)),
                          _mm256_castpd_si256(magic));
}

// 2^k for integral k in the normal exponent range.
LZ_AVX2 inline __m256d pow2(__m256d k) {
  const __m256i biased = _mm256_add_epi64(to_int64(k), _mm256_set1_epi64x(1023));
  return _mm256_castsi256_pd(_mm256_slli_epi64(biased, 52));
}

LZ_AVX2 inline __m256d exp4(__m256d x) {
  x = _mm256_min_pd(_mm256_max_pd(x, set1(-746.0)), set1(710.0));
  const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, set1(1.4426950408889634)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, set1(6.93147180369123816490e-01), x);
  r = _mm256_fnmadd_pd(n, set1(1.90821492927058770002e-10), r);

  // Taylor polynomial of degree 13; |r| <= ln2/2.
  static constexpr double kInvFact[] = {
      1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0,
      1.0 / 362880.0,     1.0 / 40320.0,     1.0 / 5040.0,      1.0 / 720.0,
      1.0 / 120.0,        1.0 / 24.0,        1.0 / 6.0,         0.5,
      1.0,                1.0};
  __m256d p = set1(kInvFact[0]);
  for (int i = 1; i < 14; ++i) p = _mm256_fmadd_pd(p, r, set1(kInvFact[i]));

  // Two half-scalings keep each factor a normal number down to subnormal results.
  const __m256d n1 = _mm256_floor_pd(_mm256_mul_pd(n, set1(0.5)));
  const __m256d n2 = _mm256_sub_pd(n, n1);
  return _mm256_mul_pd(_mm256_mul_pd(p, pow2(n1)), pow2(n2));
}

LZ_AVX2 inline __m256d expm1_4(__m256d x) {
  // x * sum_{k=0}^{14} x^k / (k+1)! on |x| < 1/2
  static constexpr double kCoef[] = {
      1.0 / 1307674368000.0, 1.0 / 87178291200.0, 1.0 / 6227020800.0, 1.0 / 479001600.0,
      1.0 / 39916800.0,      1.0 / 3628800.0,     1.0 / 362880.0,     1.0 / 40320.0,
      1.0 / 5040.0,          1.0 / 720.0,         1.0 / 120.0,        1.0 / 24.0,
      1.0 / 6.0,             0.5,                 1.0};
  __m256d p = set1(kCoef[0]);
  for (int i = 1; i < 15; ++i) p = _mm256_fmadd_pd(p, x, set1(kCoef[i]));
  const __m256d small = _mm256_mul_pd(p, x);
  const __m256d large = _mm256_sub_pd(exp4(x), set1(1.0));
  const __m256d abs_x = _mm256_andnot_pd(set1(-0.0), x);
  const __m256d use_small = _mm256_cmp_pd(abs_x, set1(0.5), _CMP_LT_OQ);
  return _mm256_blendv_pd(large, small, use_small);
}

LZ_AVX2 inline __m256d log4(__m256d x) {
  const __m256d sub = _mm256_cmp_pd(x, set1(DBL_MIN), _CMP_LT_OQ);
  x = _mm256_blendv_pd(x, _mm256_mul_pd(x, set1(0x1p54)), sub);
  const __m256d ecorr = _mm256_and_pd(sub, set1(54.0));

  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i biased = _mm256_srli_epi64(bits, 52);
  const __m256d two52 = set1(0x1p52);
  __m256d e = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(biased, _mm256_castpd_si256(two52))), two52);
  e = _mm256_sub_pd(e, _mm256_add_pd(set1(1023.0), ecorr));

  const __m256i mant = _mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
      _mm256_set1_epi64x(0x3FF0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mant);
  const __m256d big = _mm256_cmp_pd(m, set1(1.4142135623730951), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, set1(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, set1(1.0)));

  const __m256d f = _mm256_sub_pd(m, set1(1.0));
  const __m256d s = _mm256_div_pd(f, _mm256_add_pd(f, set1(2.0)));
  const __m256d z = _mm256_mul_pd(s, s);
  __m256d p = set1(1.0 / 23.0);
  for (int k = 21; k >= 3; k -= 2) p = _mm256_fmadd_pd(p, z, set1(1.0 / k));
  p = _mm256_fmadd_pd(p, z, set1(1.0));
  const __m256d lm = _mm256_mul_pd(_mm256_add_pd(s, s), p);
  return _mm256_fmadd_pd(e, set1(6.93147180369123816490e-01),
                         _mm256_fmadd_pd(e, set1(1.90821492927058770002e-10), lm));
}

template <class Op>
LZ_AVX2 inline void for_each4(const double* x, double* out, std::size_t n, double pad, Op op) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, op(_mm256_loadu_pd(x + i)));
  if (i < n) {
    alignas(32) double buf[4] = {pad, pad, pad, pad};
    for (std::size_t j = 0; i + j < n; ++j) buf[j] = x[i + j];
    _mm256_store_pd(buf, op(_mm256_load_pd(buf)));
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] = buf[j];
  }
}

struct ExpOp {
  LZ_AVX2 __m256d operator()(__m256d v) const { return exp4(v); }
};
struct Expm1Op {
  LZ_AVX2 __m256d operator()(__m256d v) const { return expm1_4(v); }
};
struct LogOp {
  LZ_AVX2 __m256d operator()(__m256d v) const { return log4(v); }
};
struct PowOp {
  double exponent;
  LZ_AVX2 __m256d operator()(__m256d v) const { return exp4(_mm256_mul_pd(set1(exponent), log4(v))); }
};
struct HDirectOp {
  double a;
  LZ_AVX2 __m256d operator()(__m256d v) const {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d num = exp4(_mm256_mul_pd(set1(-a), v));
    const __m256d den = _mm256_sub_pd(zero, expm1_4(_mm256_sub_pd(zero, v)));
    return _mm256_sub_pd(_mm256_div_pd(num, den), _mm256_div_pd(set1(1.0), v));
  }
};

LZ_AVX2 void exp_avx2(const double* x, double* out, std::size_t n) { for_each4(x, out, n, 0.0, ExpOp{}); }

LZ_AVX2 void expm1_avx2(const double* x, double* out, std::size_t n) {
  for_each4(x, out, n, 0.0, Expm1Op{});
}

LZ_AVX2 void log_avx2(const double* x, double* out, std::size_t n) { for_each4(x, out, n, 1.0, LogOp{}); }

LZ_AVX2 void pow_avx2(const double* x, double exponent, double* out, std::size_t n) {
  for_each4(x, out, n, 1.0, PowOp{exponent});
}

LZ_AVX2 void h_direct_avx2(double a, const double* x, double* out, std::size_t n) {
  for_each4(x, out, n, 1.0, HDirectOp{a});
}

LZ_AVX2 double power_sum_avx2(double shift, std::size_t count, double exponent) {
  const __m256d neg_exp = set1(-exponent);
  const __m256d sign = set1(-0.0);
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();
  __m256d idx = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  const __m256d limit = set1(static_cast<double>(count));
  for (std::size_t k = 0; k < count; k += 4) {
    const __m256d live = _mm256_cmp_pd(idx, limit, _CMP_LT_OQ);
    const __m256d base = _mm256_blendv_pd(set1(1.0), _mm256_add_pd(idx, set1(shift)), live);
    const __m256d term = _mm256_and_pd(live, exp4(_mm256_mul_pd(neg_exp, log4(base))));
    const __m256d t = _mm256_add_pd(sum, term);
    const __m256d sum_bigger =
        _mm256_cmp_pd(_mm256_andnot_pd(sign, sum), _mm256_andnot_pd(sign, term), _CMP_GE_OQ);
    const __m256d c1 = _mm256_add_pd(_mm256_sub_pd(sum, t), term);
    const __m256d c2 = _mm256_add_pd(_mm256_sub_pd(term, t), sum);
    comp = _mm256_add_pd(comp, _mm256_blendv_pd(c2, c1, sum_bigger));
    sum = t;
    idx = _mm256_add_pd(idx, set1(4.0));
  }
  alignas(32) double s[4];
  alignas(32) double c[4];
  _mm256_store_pd(s, sum);
  _mm256_store_pd(c, comp);
  CompensatedSum acc;
  for (int i = 0; i < 4; ++i) acc.add(s[i]);
  for (int i = 0; i < 4; ++i) acc.add(c[i]);
  return acc.value();
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{Isa::Avx2, "avx2",   exp_avx2,      expm1_avx2,
                                 log_avx2,  pow_avx2, h_direct_avx2, power_sum_avx2};
  return &table;
}

}  // namespace lerchzeta::simd::detail

#else

namespace lerchzeta::simd::detail {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace lerchzeta::simd::detail

#endif
