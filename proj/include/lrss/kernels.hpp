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


#pragma once

#include <span>
#include <string_view>

#include "lrss/field.hpp"

// Data-parallel modular kernels.
//
// Each kernel has a portable scalar reference in namespace `scalar` and,
// where the target supports it, a vectorized variant. The dispatching
// entry points at the bottom pick the variant at runtime; tests compare
// every variant against the scalar reference.
namespace lrss::kernels {

enum class Backend { kScalar, kAvx2 };

[[nodiscard]] std::string_view backend_name(Backend b) noexcept;

namespace scalar {

/// out[i] = f(points[i]) by Horner. coefficients are constant term first.
void eval_many(const algebra::PrimeField& field, std::span<const algebra::Element> coefficients,
               std::span<const algebra::Element> points, std::span<algebra::Element> out);

/// acc[i] = acc[i] + scale * src[i]
void mul_add(const algebra::PrimeField& field, algebra::Element scale, std::span<const algebra::Element> src,
             std::span<algebra::Element> acc);

}  // namespace scalar

namespace avx2 {

// Specialized for p = 2^31 - 1: 4 lanes of 64-bit products, Mersenne fold
// reduction. Callers must check cpu_has_avx2() first.
[[nodiscard]] bool compiled() noexcept;

void eval_many_m31(std::span<const algebra::Element> coefficients, std::span<const algebra::Element> points,
                   std::span<algebra::Element> out);

void mul_add_m31(algebra::Element scale, std::span<const algebra::Element> src, std::span<algebra::Element> acc);

}  // namespace avx2

[[nodiscard]] bool cpu_has_avx2() noexcept;

/// The variant the dispatcher would use for this field. Setting the
/// environment variable LRSS_FORCE_SCALAR pins everything to scalar.
[[nodiscard]] Backend select_backend(const algebra::PrimeField& field) noexcept;

void eval_many(const algebra::PrimeField& field, std::span<const algebra::Element> coefficients,
               std::span<const algebra::Element> points, std::span<algebra::Element> out);

void mul_add(const algebra::PrimeField& field, algebra::Element scale, std::span<const algebra::Element> src,
             std::span<algebra::Element> acc);

}  // namespace lrss::kernels
