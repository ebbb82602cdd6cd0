#pragma once

#include <complex>

namespace dlz {

using Complex = std::complex<double>;

// B_{2k} for k = 0..30 (index k).
extern const double kBernoulli2k[31];
// B_{2k}/(2k)! for k = 1..31 (index k-1).
extern const double kBernoulli2kOverFact[31];

// log Gamma(z).  Principal branch for Re(z) >= 1/2 (Stirling after shifting
// Re above 12); for Re(z) < 1/2 the reflection formula is used and the
// branch is only guaranteed up to 2 pi i (exp of the result is always
// Gamma(z)).  Poles (z a nonpositive integer) raise PoleError.
Complex log_gamma(Complex z);

// Digamma psi(z).  Stirling after shifting, reflection for Re(z) < 1/2.
Complex digamma(Complex z);

// log(sin z), evaluated stably for large |Im z| (value branch: exp of the
// result equals sin z; the imaginary part is not a continuous branch).
Complex log_sin(Complex z);

// cot z, stable for large |Im z|.
Complex cot(Complex z);

}  // namespace dlz
