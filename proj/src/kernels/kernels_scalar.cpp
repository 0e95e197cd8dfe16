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


#include <cassert>

#include "lrss/kernels.hpp"

namespace lrss::kernels::scalar {

using algebra::Element;

void eval_many(const algebra::PrimeField& field, std::span<const Element> coefficients,
               std::span<const Element> points, std::span<Element> out) {
  assert(points.size() == out.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    Element acc = field.zero();
    for (std::size_t j = coefficients.size(); j-- > 0;) {
      acc = field.add(field.mul(acc, points[i]), coefficients[j]);
    }
    out[i] = acc;
  }
}

void mul_add(const algebra::PrimeField& field, Element scale, std::span<const Element> src,
             std::span<Element> acc) {
  assert(src.size() == acc.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    acc[i] = field.add(acc[i], field.mul(scale, src[i]));
  }
}

}  // namespace lrss::kernels::scalar
