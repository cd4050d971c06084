#ifndef BLOCKTF_ERRORS_HPP
#define BLOCKTF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blocktf {

// Base class for all library-thrown failures.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Mathematical failure: division by the zero rational function, evaluation at
// a pole, region-of-convergence violation, algebraic loop, root-finding
// non-convergence, ODE divergence, improper transfer function.
class MathError : public Error {
  public:
    using Error::Error;
};

} // namespace blocktf

#endif
