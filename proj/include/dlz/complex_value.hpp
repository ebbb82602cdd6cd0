#pragma once

#include <complex>

namespace dlz {

using Complex = std::complex<double>;

// A complex evaluation result together with an estimated absolute error
// bound, so precision loss is visible to callers instead of silent.
struct ComplexValue {
    Complex value{0.0, 0.0};
    double abs_error_bound = 0.0;

    double re() const { return value.real(); }
    double im() const { return value.imag(); }
};

}  // namespace dlz
