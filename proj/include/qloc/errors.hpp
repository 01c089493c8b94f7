#pragma once

#include <stdexcept>
#include <string>

namespace qloc {

struct NonInvertibleCoefficient : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotUnitalSeries : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotInCommutativeSubalgebra : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnknownObservable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace qloc
