#pragma once

#include <stdexcept>

namespace stripcover {

// Parameters violate a formula domain or an operation precondition.
struct InvalidParametersError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search region contains no feasible point.
struct EmptyDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative search hit its cap before reaching tolerance.
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A generated placement failed its own coverage gate; indicates the requested
// layout cannot be realized at these parameters (or a geometry bug).
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stripcover
