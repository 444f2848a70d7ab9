#pragma once

#include "lerchzeta/simd/kernels.hpp"

namespace lerchzeta::simd::detail {

const KernelTable& scalar_table();
// nullptr when the translation unit was built without x86 support.
const KernelTable* avx2_table();

// Neumaier-compensated accumulator shared by the reference kernels.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if ((sum < 0 ? -sum : sum) >= (x < 0 ? -x : x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace lerchzeta::simd::detail
