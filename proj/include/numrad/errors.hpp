#pragma once

#include <stdexcept>

namespace numrad {

// Base class for every failure this library raises on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct NotPD : Error { using Error::Error; };
struct NotHyponormal : Error { using Error::Error; };
struct NotUnit : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct ZeroMatrix : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct PremiseFailed : Error { using Error::Error; };
struct PremiseUndefined : Error { using Error::Error; };
struct RatioUndefined : Error { using Error::Error; };
struct BadSpec : Error { using Error::Error; };
struct BadInput : Error { using Error::Error; };

}  // namespace numrad
