// Copyright 2026 The lrss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "lrss/kernels.hpp"

#if defined(LRSS_AVX2_TU) && (defined(__x86_64__) || defined(_M_X64))

#include <immintrin.h>

#include <cassert>

namespace lrss::kernels::avx2 {

using algebra::Element;
using algebra::kMersenne31;

namespace {

// x < 2^63 per lane; returns x mod (2^31 - 1).
inline __m256i reduce_m31(__m256i x) {
  const __m256i p = _mm256_set1_epi64x(static_cast<long long>(kMersenne31));
  const __m256i p_minus_1 = _mm256_set1_epi64x(static_cast<long long>(kMersenne31 - 1));
  __m256i r = _mm256_add_epi64(_mm256_and_si256(x, p), _mm256_srli_epi64(x, 31));
  r = _mm256_add_epi64(_mm256_and_si256(r, p), _mm256_srli_epi64(r, 31));
  const __m256i over = _mm256_cmpgt_epi64(r, p_minus_1);
  return _mm256_sub_epi64(r, _mm256_and_si256(over, p));
}

inline std::uint64_t reduce_m31(std::uint64_t x) {
  std::uint64_t r = (x & kMersenne31) + (x >> 31U);
  r = (r & kMersenne31) + (r >> 31U);
  return r >= kMersenne31 ? r - kMersenne31 : r;
}

inline __m256i load(const Element* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Element* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

}  // namespace

bool compiled() noexcept { return true; }

void eval_many_m31(std::span<const Element> coefficients, std::span<const Element> points, std::span<Element> out) {
  assert(points.size() == out.size());
  const std::size_t count = points.size();
  const std::size_t vec_end = count & ~std::size_t{3};
  std::size_t i = 0;
  for (; i < vec_end; i += 4) {
    const __m256i x = load(&points[i]);
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t j = coefficients.size(); j-- > 0;) {
      const __m256i c = _mm256_set1_epi64x(static_cast<long long>(coefficients[j].value));
      acc = reduce_m31(_mm256_add_epi64(_mm256_mul_epu32(acc, x), c));
    }
    store(&out[i], acc);
  }
  for (; i < count; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = coefficients.size(); j-- > 0;) {
      acc = reduce_m31(acc * points[i].value + coefficients[j].value);
    }
    out[i] = Element{acc};
  }
}

void mul_add_m31(Element scale, std::span<const Element> src, std::span<Element> acc) {
  assert(src.size() == acc.size());
  const std::size_t count = src.size();
  const std::size_t vec_end = count & ~std::size_t{3};
  const __m256i s = _mm256_set1_epi64x(static_cast<long long>(scale.value));
  std::size_t i = 0;
  for (; i < vec_end; i += 4) {
    const __m256i prod = _mm256_mul_epu32(s, load(&src[i]));
    store(&acc[i], reduce_m31(_mm256_add_epi64(prod, load(&acc[i]))));
  }
  for (; i < count; ++i) {
    acc[i] = Element{reduce_m31(scale.value * src[i].value + acc[i].value)};
  }
}

}  // namespace lrss::kernels::avx2

#else

#include <cstdlib>

namespace lrss::kernels::avx2 {

bool compiled() noexcept { return false; }

void eval_many_m31(std::span<const algebra::Element>, std::span<const algebra::Element>,
                   std::span<algebra::Element>) {
  std::abort();
}

void mul_add_m31(algebra::Element, std::span<const algebra::Element>, std::span<algebra::Element>) { std::abort(); }

}  // namespace lrss::kernels::avx2

#endif
