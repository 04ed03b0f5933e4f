#pragma once

#include <cstdint>

#include "qudit/random.hpp"
#include "qudit/types.hpp"

namespace testing_support {

inline qudit::Rng rng_for(std::uint64_t salt) { return qudit::Rng(0x5eed0000ULL + salt); }

inline qudit::CMatrix diag(std::initializer_list<double> values) {
  qudit::CMatrix m = qudit::CMatrix::Zero(values.size(), values.size());
  int i = 0;
  for (double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

}  // namespace testing_support
