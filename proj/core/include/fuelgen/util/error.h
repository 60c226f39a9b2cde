//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_UTIL_ERROR_H_
#define FUELGEN_UTIL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuelgen {

/// Base of every error raised by the library. kind() is a stable,
/// machine-readable name used in CLI error records.
class Error: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;

  virtual std::string_view kind() const noexcept { return "Error"; }
};

#define FUELGEN_DEFINE_ERROR(Name)                                            \
  class Name: public Error {                                                   \
  public:                                                                      \
    using Error::Error;                                                        \
    std::string_view kind() const noexcept override { return #Name; }          \
  }

FUELGEN_DEFINE_ERROR(SyntaxError);
FUELGEN_DEFINE_ERROR(CapacityError);
FUELGEN_DEFINE_ERROR(LengthError);
FUELGEN_DEFINE_ERROR(AlphabetError);
FUELGEN_DEFINE_ERROR(ShapeError);
FUELGEN_DEFINE_ERROR(DomainError);
FUELGEN_DEFINE_ERROR(DivergenceError);
FUELGEN_DEFINE_ERROR(SingularityError);
FUELGEN_DEFINE_ERROR(FoldError);
FUELGEN_DEFINE_ERROR(EmptyFrontError);
FUELGEN_DEFINE_ERROR(EncodingError);
FUELGEN_DEFINE_ERROR(VersionError);
FUELGEN_DEFINE_ERROR(ValidationError);
FUELGEN_DEFINE_ERROR(MissingArtifactError);
FUELGEN_DEFINE_ERROR(IoError);

#undef FUELGEN_DEFINE_ERROR

}  // namespace fuelgen

#endif  // FUELGEN_UTIL_ERROR_H_
