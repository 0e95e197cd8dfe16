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


#include <cstdlib>

#include "lrss/kernels.hpp"

namespace lrss::kernels {

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool cpu_has_avx2() noexcept {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

Backend select_backend(const algebra::PrimeField& field) noexcept {
  static const bool forced_scalar = std::getenv("LRSS_FORCE_SCALAR") != nullptr;
  if (!forced_scalar && field.is_mersenne31() && avx2::compiled() && cpu_has_avx2()) return Backend::kAvx2;
  return Backend::kScalar;
}

void eval_many(const algebra::PrimeField& field, std::span<const algebra::Element> coefficients,
               std::span<const algebra::Element> points, std::span<algebra::Element> out) {
  if (select_backend(field) == Backend::kAvx2) {
    avx2::eval_many_m31(coefficients, points, out);
  } else {
    scalar::eval_many(field, coefficients, points, out);
  }
}

void mul_add(const algebra::PrimeField& field, algebra::Element scale, std::span<const algebra::Element> src,
             std::span<algebra::Element> acc) {
  if (select_backend(field) == Backend::kAvx2) {
    avx2::mul_add_m31(scale, src, acc);
  } else {
    scalar::mul_add(field, scale, src, acc);
  }
}

}  // namespace lrss::kernels
