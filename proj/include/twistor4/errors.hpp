#pragma once

#include <stdexcept>
#include <string>

namespace twistor4 {

struct NotSpecialOrthogonal : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SymmetryViolationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonPositiveT : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotTraceless : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnknownCheckName : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnknownTheoremId : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ClosedFormMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace twistor4
