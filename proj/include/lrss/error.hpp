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

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrss {

// Every failure raised by the library derives from Error. name() is the
// stable identifier printed by the CLI on protocol failures.
class Error : public std::runtime_error {
 public:
  Error(std::string_view name, const std::string& what)
      : std::runtime_error(what), name_(name) {}

  [[nodiscard]] std::string_view name() const noexcept { return name_; }

 private:
  std::string_view name_;
};

#define LRSS_DEFINE_ERROR(Type, label)                                   \
  class Type : public Error {                                            \
   public:                                                               \
    explicit Type(const std::string& what) : Error(label, what) {}       \
  }

// Math and sharing.
LRSS_DEFINE_ERROR(DomainError, "domain-error");
LRSS_DEFINE_ERROR(InsufficientSharesError, "insufficient-shares");
LRSS_DEFINE_ERROR(InsufficientPointsError, "insufficient-points");
LRSS_DEFINE_ERROR(CorruptionError, "corruption");

// Setup and operator input.
LRSS_DEFINE_ERROR(ConfigurationError, "configuration-error");
LRSS_DEFINE_ERROR(EnumerationRefusedError, "enumeration-refused");

// Protocol.
LRSS_DEFINE_ERROR(AuthorizationError, "authorization-error");
LRSS_DEFINE_ERROR(HolderLostError, "holder-lost");
LRSS_DEFINE_ERROR(IntegrityError, "integrity-error");
LRSS_DEFINE_ERROR(PlacementError, "placement-error");

// Persistence.
LRSS_DEFINE_ERROR(IoError, "io-error");

#undef LRSS_DEFINE_ERROR

}  // namespace lrss
