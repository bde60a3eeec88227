#pragma once

#include <stdexcept>
#include <string>

namespace siegellab {

// Base class for all failures raised by the library. The CLI maps these to
// exit code 1 (invariant/assertion failure), as opposed to configuration
// problems which map to exit code 2.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// cfrac
struct NotIrrationalAtPrecision : error { using error::error; };
struct DepthExceeded : error { using error::error; };

// circlegeo
struct DegenerateArc : error { using error::error; };
struct NotProperlyContained : error { using error::error; };
struct OnCircle : error { using error::error; };

// hypgeo
struct NonPositiveT : error { using error::error; };
struct NonPositiveModulus : error { using error::error; };
struct OutsideDisk : error { using error::error; };
struct CoincidentPoints : error { using error::error; };
struct OutsideDomain : error { using error::error; };
struct ArcTooLong : error { using error::error; };
struct EmptyInterior : error { using error::error; };

// blaschke
struct AtPole : error { using error::error; };
struct NotHomeomorphism : error { using error::error; };
struct NotMonotone : error { using error::error; };
struct NoBracket : error { using error::error; };
struct BisectionFailure : error { using error::error; };
struct RootFindingFailure : error { using error::error; };

// linearize
struct NoConvergence : error { using error::error; };
struct OrderMismatch : error { using error::error; };
struct DisjointnessViolation : error { using error::error; };

// siegel
struct SmallDivisorUnderflow : error { using error::error; };
struct UnstableEstimate : error { using error::error; };
struct RadiusTooLarge : error { using error::error; };
struct TooFewPoints : error { using error::error; };

// cli/config
struct ConfigError : error { using error::error; };

}  // namespace siegellab
