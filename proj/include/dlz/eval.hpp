#pragma once

#include <array>
#include <complex>
#include <span>

#include "dlz/characters.hpp"
#include "dlz/complex_value.hpp"
#include "dlz/types.hpp"

namespace dlz {

// Euler-Maclaurin evaluation parameters.  euler_maclaurin_shift = 0 means
// the number of directly summed terms is chosen adaptively as
// max(50, ceil(1.3 |Im s|) + 20) and grown until the tail bound meets the
// target.
struct EvalConfig {
    int euler_maclaurin_shift = 0;
    int bernoulli_terms = 12;
    double target_abs_error = 1e-10;

    void validate() const;
};

// d-th s-derivative of the Hurwitz zeta zeta(s, a), d in {0,1,2}, by
// Euler-Maclaurin summation with Bernoulli corrections.  a in (0,1], s != 1.
ComplexValue hurwitz_zeta(Complex s, double a, int deriv, const EvalConfig& cfg);

// L(s,chi), L'(s,chi) or L''(s,chi) for nonprincipal chi.  Entire in s; the
// Hurwitz pole terms are grouped so s = 1 is evaluated directly.
ComplexValue l_value(const DirichletCharacter& chi, Complex s, int deriv,
                     const EvalConfig& cfg);

// All derivatives up to max_deriv in one pass (shared summation).
std::array<ComplexValue, 3> l_derivs(const DirichletCharacter& chi, Complex s,
                                     int max_deriv, const EvalConfig& cfg);

// Functional-equation factor F with L(s,chi) = F(s,chi) L(1-s, conj chi):
// F(s,chi) = eps(chi) 2^s pi^{s-1} q^{1/2-s} sin(pi(s+kappa)/2) Gamma(1-s),
// evaluated in log form and exponentiated once.  chi must be primitive;
// points s on the real axis with Re(s) a positive integer are rejected.
ComplexValue f_factor(const DirichletCharacter& chi, Complex s);

enum class LogDerivMode { direct, asymptotic };

// (F'/F)(s,chi) for Re(s) < 1, |Im(s)| > 1.  direct: analytic derivative of
// log F (digamma and cotangent terms).  asymptotic:
// -log(q(1-s)) + log 2pi -+ pi i/2 + 1/(2(1-s)), sign tied to sign(Im s).
ComplexValue f_logderiv(const DirichletCharacter& chi, Complex s, LogDerivMode mode);

// G1(s,chi) = -m^s / (chi(m) log m) * L'(s,chi), m the smallest prime not
// dividing q.  Shares its zeros with L' and tends to 1 as Re(s) -> inf.
ComplexValue g1_value(const DirichletCharacter& chi, Complex s, const EvalConfig& cfg);

// (L'/L)(s,chi) - sum over supplied zeros with |gamma - Im s| <= 1 of
// multiplicity/(s - rho).  Requires -1 <= Re(s) <= 2 and s off the zeros.
ComplexValue logderiv_zero_sum_residual(const DirichletCharacter& chi, Complex s,
                                        std::span<const ZeroRecord> zeros,
                                        const EvalConfig& cfg);

// Character-bound evaluation facade used by the zero machinery.
class Evaluator {
public:
    Evaluator(DirichletCharacter chi, EvalConfig cfg);

    const DirichletCharacter& chi() const { return chi_; }
    const EvalConfig& config() const { return cfg_; }
    int m() const { return m_; }

    ComplexValue l(Complex s, int deriv) const { return l_value(chi_, s, deriv, cfg_); }
    std::array<ComplexValue, 3> derivs(Complex s, int max_deriv) const {
        return l_derivs(chi_, s, max_deriv, cfg_);
    }
    ComplexValue g1(Complex s) const { return g1_value(chi_, s, cfg_); }

    // Value of the tagged function at s.
    Complex value(FunctionTag tag, Complex s) const;
    // Value and first derivative of the tagged function (L or Lprime or G1).
    std::array<Complex, 2> value_and_derivative(FunctionTag tag, Complex s) const;

private:
    DirichletCharacter chi_;
    EvalConfig cfg_;
    int m_;
};

}  // namespace dlz
