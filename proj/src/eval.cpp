#include "dlz/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "dlz/special.hpp"

namespace dlz {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr long long kMaxDirectTerms = 4'000'000;

// Value and first two s-derivatives of an analytic expression.
struct Triple {
    Complex d0{0.0, 0.0};
    Complex d1{0.0, 0.0};
    Complex d2{0.0, 0.0};

    Triple& operator+=(const Triple& o) {
        d0 += o.d0;
        d1 += o.d1;
        d2 += o.d2;
        return *this;
    }
    Complex at(int d) const { return d == 0 ? d0 : (d == 1 ? d1 : d2); }
};

Triple product(const Triple& a, const Triple& b) {
    return {a.d0 * b.d0, a.d1 * b.d0 + a.d0 * b.d1,
            a.d2 * b.d0 + 2.0 * a.d1 * b.d1 + a.d0 * b.d2};
}

Triple scale(double c, const Triple& a) { return {c * a.d0, c * a.d1, c * a.d2}; }

// Triple of x^{e(s)} where e' = -1: given p = x^{e(s)} and L = log x.
Triple power_triple(Complex p, double L) { return {p, -L * p, L * L * p}; }

// Append the factor (s + i) to a rising-factorial triple.
void extend_rising(Triple& r, Complex s, double i) {
    Complex f = s + i;
    r.d2 = r.d2 * f + 2.0 * r.d1;
    r.d1 = r.d1 * f + r.d0;
    r.d0 = r.d0 * f;
}

// phi0(x) = (e^x - 1)/x and its first two derivatives, stable near 0.
Complex phi0(Complex x) {
    if (std::abs(x) >= 0.5) return (std::exp(x) - 1.0) / x;
    Complex sum(1.0, 0.0), term(1.0, 0.0);
    for (int k = 1; k <= 16; ++k) {
        term *= x / static_cast<double>(k + 1);
        sum += term;
    }
    return sum;
}
Complex phi1(Complex x) {
    if (std::abs(x) >= 0.5) return (std::exp(x) * (x - 1.0) + 1.0) / (x * x);
    Complex sum(0.5, 0.0);
    Complex xp(1.0, 0.0);
    double fact = 2.0;  // (j+2)!
    for (int j = 1; j <= 16; ++j) {
        xp *= x;
        fact *= static_cast<double>(j + 2);
        sum += static_cast<double>(j + 1) / fact * xp;
    }
    return sum;
}
Complex phi2(Complex x) {
    if (std::abs(x) >= 0.5)
        return (std::exp(x) * (x * x - 2.0 * x + 2.0) - 2.0) / (x * x * x);
    Complex sum(1.0 / 3.0, 0.0);
    Complex xp(1.0, 0.0);
    double fact = 6.0;  // (j+3)!
    for (int j = 1; j <= 16; ++j) {
        xp *= x;
        fact *= static_cast<double>(j + 3);
        sum += static_cast<double>((j + 1) * (j + 2)) / fact * xp;
    }
    return sum;
}

struct EmEstimate {
    Triple sum;
    std::array<double, 3> tail{};   // Euler-Maclaurin truncation bound per derivative
    std::array<double, 3> round{};  // floating-point noise estimate per derivative
    bool tail_valid = true;
};

double rounding_eps(Complex s, double log_top) {
    return 1e-16 * (4.0 + 0.4 * std::abs(s) * std::max(1.0, log_top));
}

// Euler-Maclaurin pieces shared by Hurwitz zeta and L: boundary point U,
// Bernoulli corrections scaled by `stride` (stride = 1 for zeta(s,a),
// stride = q for the character sum), tail estimate from the first omitted
// correction term.
void em_corrections(Complex s, double U, double stride, int M, EmEstimate& est,
                    double* max_mag) {
    double LU = std::log(U);
    Complex pU = std::exp(-s * LU);

    // integral term: U^{1-s}/(s-1), derivatives via log factors
    Complex inv = 1.0 / (s - 1.0);
    Complex i0 = pU * U * inv;
    est.sum += {i0, -i0 * (LU + inv), i0 * (LU * LU + 2.0 * LU * inv + 2.0 * inv * inv)};

    // half term
    est.sum += scale(0.5, power_triple(pU, LU));

    double am = std::abs(pU * U * inv);
    max_mag[0] = std::max(max_mag[0], am);
    max_mag[1] = std::max(max_mag[1], am * (LU + std::abs(inv)));
    max_mag[2] = std::max(max_mag[2], am * (LU + std::abs(inv)) * (LU + std::abs(inv)));

    Triple rising{Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0)};
    int factors = 0;
    Complex upow = pU / U;  // U^{-s-(2k-1)} at k=1
    double stride_pow = stride;
    for (int k = 1; k <= M; ++k) {
        while (factors < 2 * k - 1) extend_rising(rising, s, factors++);
        Triple w = power_triple(upow, LU);
        Triple term = scale(kBernoulli2kOverFact[k - 1] * stride_pow, product(rising, w));
        est.sum += term;
        for (int d = 0; d < 3; ++d)
            max_mag[d] = std::max(max_mag[d], std::abs(term.at(d)));
        upow /= U * U;
        stride_pow *= stride * stride;
    }

    // first omitted term, inflated by the standard remainder factor
    while (factors < 2 * (M + 1) - 1) extend_rising(rising, s, factors++);
    Triple w = power_triple(upow, LU);
    Triple omitted = scale(kBernoulli2kOverFact[M] * stride_pow, product(rising, w));
    double denom = s.real() + 2.0 * M + 1.0;
    if (denom <= 0.0) {
        est.tail_valid = false;
        return;
    }
    double inflate = 2.0 * std::abs(s + (2.0 * M + 1.0)) / denom;
    for (int d = 0; d < 3; ++d) est.tail[d] = std::abs(omitted.at(d)) * inflate;
}

EmEstimate hurwitz_em(Complex s, double a, int N, int M) {
    EmEstimate est;
    double max_mag[3] = {0.0, 0.0, 0.0};
    for (int n = 0; n < N; ++n) {
        double u = n + a;
        double L = std::log(u);
        Complex p = std::exp(-s * L);
        est.sum += power_triple(p, L);
        double ap = std::abs(p), aL = std::fabs(L);
        max_mag[0] = std::max(max_mag[0], ap);
        max_mag[1] = std::max(max_mag[1], aL * ap);
        max_mag[2] = std::max(max_mag[2], aL * aL * ap);
    }
    em_corrections(s, N + a, 1.0, M, est, max_mag);
    double eps = rounding_eps(s, std::log(N + a));
    double scale_n = std::sqrt(static_cast<double>(N + M + 2));
    for (int d = 0; d < 3; ++d) est.round[d] = eps * scale_n * max_mag[d];
    return est;
}

// L-series Euler-Maclaurin: direct Dirichlet sum to qN, then the grouped
// pole term (the chi-sum cancels the 1/(s-1) poles analytically) and the
// remaining boundary corrections.
EmEstimate l_em(const DirichletCharacter& chi, Complex s, int N, int M) {
    const int q = chi.q;
    EmEstimate est;
    double max_mag[3] = {0.0, 0.0, 0.0};

    const long long top = static_cast<long long>(q) * N;
    for (long long k = 1; k <= top; ++k) {
        int r = static_cast<int>(k % q);
        if (chi.exponent[static_cast<std::size_t>(r)] < 0) continue;
        Complex cv = chi.values[static_cast<std::size_t>(r)];
        double L = std::log(static_cast<double>(k));
        Complex p = cv * std::exp(-s * L);
        est.sum += power_triple(p, L);
        double ap = std::abs(p);
        max_mag[0] = std::max(max_mag[0], ap);
        max_mag[1] = std::max(max_mag[1], L * ap);
        max_mag[2] = std::max(max_mag[2], L * L * ap);
    }

    // Pole group: sum_a chi(a) (qN+a)^{1-s} / (q(s-1)) written via
    // (e^x-1)/x so the cancellation from sum chi(a) = 0 is analytic.
    const double u1 = static_cast<double>(top) + 1.0;
    const double L1 = std::log(u1);
    Complex A0(0.0, 0.0), A1(0.0, 0.0), A2(0.0, 0.0);
    for (int a = 1; a <= q; ++a) {
        if (chi.exponent[static_cast<std::size_t>(a % q)] < 0) continue;
        Complex cv = chi.values[static_cast<std::size_t>(a % q)];
        double ra = std::log1p((a - 1.0) / u1);
        Complex xa = (1.0 - s) * ra;
        A0 += cv * ra * phi0(xa);
        A1 += cv * ra * ra * phi1(xa);
        A2 += cv * ra * ra * ra * phi2(xa);
    }
    A1 = -A1;  // dA/ds
    Complex U = std::exp((1.0 - s) * L1);
    double invq = 1.0 / q;
    est.sum += {-invq * U * A0, -invq * U * (-L1 * A0 + A1),
                -invq * U * (L1 * L1 * A0 - 2.0 * L1 * A1 + A2)};

    // Half term and Bernoulli corrections, per residue class a at u_a = qN+a.
    // The k-th correction carries q^{2k-1} from rescaling zeta(s, a/q).
    std::vector<double> ua(q + 1), La(q + 1);
    std::vector<Complex> wa(q + 1);
    for (int a = 1; a <= q; ++a) {
        ua[a] = static_cast<double>(top) + a;
        La[a] = std::log(ua[a]);
        wa[a] = std::exp(-s * La[a]);  // u_a^{-s}
    }
    for (int a = 1; a <= q; ++a) {
        if (chi.exponent[static_cast<std::size_t>(a % q)] < 0) continue;
        Complex cv = chi.values[static_cast<std::size_t>(a % q)];
        est.sum += scale(0.5, {cv * wa[a], -La[a] * cv * wa[a], La[a] * La[a] * cv * wa[a]});
        wa[a] /= ua[a];  // advance to u_a^{-s-1} for k=1
    }

    Triple rising{Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0)};
    int factors = 0;
    double qpow = static_cast<double>(q);  // q^{2k-1}
    std::array<double, 3> tail_sum{};
    bool tail_done = false;
    for (int k = 1; k <= M + 1; ++k) {
        while (factors < 2 * k - 1) extend_rising(rising, s, factors++);
        double coeff = kBernoulli2kOverFact[k - 1] * qpow;
        Triple sk;
        for (int a = 1; a <= q; ++a) {
            if (chi.exponent[static_cast<std::size_t>(a % q)] < 0) continue;
            Complex cv = chi.values[static_cast<std::size_t>(a % q)];
            Triple w = power_triple(cv * wa[a], La[a]);
            sk += w;
            wa[a] /= ua[a] * ua[a];
        }
        Triple term = scale(coeff, product(rising, sk));
        if (k <= M) {
            est.sum += term;
            for (int d = 0; d < 3; ++d)
                max_mag[d] = std::max(max_mag[d], std::abs(term.at(d)));
        } else {
            double denom = s.real() + 2.0 * M + 1.0;
            if (denom <= 0.0) {
                est.tail_valid = false;
            } else {
                double inflate = 2.0 * std::abs(s + (2.0 * M + 1.0)) / denom;
                for (int d = 0; d < 3; ++d) tail_sum[d] = std::abs(term.at(d)) * inflate;
            }
            tail_done = true;
        }
        qpow *= static_cast<double>(q) * q;
    }
    if (tail_done) est.tail = tail_sum;

    double eps = rounding_eps(s, std::log(u1));
    double scale_n = std::sqrt(static_cast<double>(top + M + 2));
    for (int d = 0; d < 3; ++d) est.round[d] = eps * scale_n * max_mag[d];
    return est;
}

int adaptive_start_n(Complex s, const EvalConfig& cfg) {
    int n = std::max(50, static_cast<int>(std::ceil(1.3 * std::fabs(s.imag()))) + 20);
    n = std::max(n, static_cast<int>(std::ceil(0.2 * std::abs(s))));
    return std::max(n, cfg.euler_maclaurin_shift);
}

}  // namespace

void EvalConfig::validate() const {
    if (bernoulli_terms < 5 || bernoulli_terms > 30)
        throw DomainError("bernoulli_terms must be in [5, 30]");
    if (!(target_abs_error >= 1e-14 && target_abs_error <= 1e-6))
        throw DomainError("target_abs_error must be in [1e-14, 1e-6]");
    if (euler_maclaurin_shift < 0)
        throw DomainError("euler_maclaurin_shift must be >= 0");
}

ComplexValue hurwitz_zeta(Complex s, double a, int deriv, const EvalConfig& cfg) {
    cfg.validate();
    if (deriv < 0 || deriv > 2) throw DomainError("deriv must be 0, 1 or 2");
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("a must lie in (0, 1]");
    if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz_zeta has a pole at s = 1");

    int n = adaptive_start_n(s, cfg);
    double achieved = std::numeric_limits<double>::infinity();
    while (true) {
        EmEstimate est = hurwitz_em(s, a, n, cfg.bernoulli_terms);
        double allowed = cfg.target_abs_error *
                         std::max(1.0, std::abs(est.sum.at(deriv)));
        double err = est.tail[deriv] + est.round[deriv];
        if (est.tail_valid && err <= allowed)
            return {est.sum.at(deriv), err};
        achieved = std::min(achieved, err);
        bool tail_dominates = !est.tail_valid || est.tail[deriv] > 0.5 * allowed;
        if (tail_dominates && n < kMaxDirectTerms) {
            n = static_cast<int>(std::min<long long>(
                kMaxDirectTerms, static_cast<long long>(n * 1.6) + 8));
            continue;
        }
        throw AccuracyError("hurwitz_zeta: target accuracy unreachable", achieved);
    }
}

std::array<ComplexValue, 3> l_derivs(const DirichletCharacter& chi, Complex s,
                                     int max_deriv, const EvalConfig& cfg) {
    cfg.validate();
    if (max_deriv < 0 || max_deriv > 2) throw DomainError("deriv must be 0, 1 or 2");
    if (chi.is_principal())
        throw DomainError("l_value requires a nonprincipal character");

    int n = adaptive_start_n(s, cfg);
    double achieved = std::numeric_limits<double>::infinity();
    while (true) {
        EmEstimate est = l_em(chi, s, n, cfg.bernoulli_terms);
        bool ok = est.tail_valid;
        double worst = 0.0;
        bool tail_dominates = !est.tail_valid;
        for (int d = 0; d <= max_deriv && ok; ++d) {
            double allowed = cfg.target_abs_error *
                             std::max(1.0, std::abs(est.sum.at(d)));
            double err = est.tail[d] + est.round[d];
            if (err > allowed) {
                ok = false;
                if (est.tail[d] > 0.5 * allowed) tail_dominates = true;
            }
            worst = std::max(worst, err);
        }
        if (ok) {
            std::array<ComplexValue, 3> out;
            for (int d = 0; d < 3; ++d)
                out[d] = {est.sum.at(d), est.tail[d] + est.round[d]};
            return out;
        }
        achieved = std::min(achieved, worst);
        long long top = static_cast<long long>(chi.q) * n;
        if (tail_dominates && top < kMaxDirectTerms) {
            n = static_cast<int>(std::min<long long>(
                kMaxDirectTerms / chi.q, static_cast<long long>(n * 1.6) + 8));
            continue;
        }
        throw AccuracyError("l_value: target accuracy unreachable", achieved);
    }
}

ComplexValue l_value(const DirichletCharacter& chi, Complex s, int deriv,
                     const EvalConfig& cfg) {
    return l_derivs(chi, s, deriv, cfg)[static_cast<std::size_t>(deriv)];
}

ComplexValue f_factor(const DirichletCharacter& chi, Complex s) {
    if (!chi.primitive) throw DomainError("f_factor requires a primitive character");
    if (s.imag() == 0.0 && s.real() >= 1.0 && s.real() == std::floor(s.real()))
        throw DomainError("f_factor rejects real s with Re(s) a positive integer");

    Complex eps = root_number(chi);
    Complex expo = s * std::log(2.0) + (s - 1.0) * std::log(kPi) +
                   (0.5 - s) * std::log(static_cast<double>(chi.q)) +
                   log_sin(kPi * (s + static_cast<double>(chi.kappa)) / 2.0) +
                   log_gamma(1.0 - s);
    Complex f = eps * std::exp(expo);
    double err = std::abs(f) * 8e-16 * (8.0 + std::abs(expo));
    return {f, err};
}

ComplexValue f_logderiv(const DirichletCharacter& chi, Complex s, LogDerivMode mode) {
    if (!chi.primitive)
        throw DomainError("f_logderiv requires a primitive character");
    if (!(s.real() < 1.0 && std::fabs(s.imag()) > 1.0))
        throw DomainError("f_logderiv requires Re(s) < 1 and |Im(s)| > 1");

    if (mode == LogDerivMode::direct) {
        Complex v = std::log(2.0) + std::log(kPi) -
                    std::log(static_cast<double>(chi.q)) +
                    kPi / 2.0 * cot(kPi * (s + static_cast<double>(chi.kappa)) / 2.0) -
                    digamma(1.0 - s);
        return {v, 2e-14 * (1.0 + std::abs(v))};
    }
    double half_pi = s.imag() > 0.0 ? -kPi / 2.0 : kPi / 2.0;
    Complex one_minus_s = 1.0 - s;
    Complex v = -std::log(static_cast<double>(chi.q) * one_minus_s) +
                std::log(2.0 * kPi) + Complex(0.0, half_pi) +
                0.5 / one_minus_s;
    return {v, 5e-15 * (1.0 + std::abs(v))};
}

ComplexValue g1_value(const DirichletCharacter& chi, Complex s, const EvalConfig& cfg) {
    int m = smallest_nondividing_prime(chi.q);
    ComplexValue lp = l_value(chi, s, 1, cfg);
    double logm = std::log(static_cast<double>(m));
    Complex pref = -std::exp(s * logm) / (chi.eval(m) * logm);
    return {pref * lp.value, std::abs(pref) * lp.abs_error_bound};
}

ComplexValue logderiv_zero_sum_residual(const DirichletCharacter& chi, Complex s,
                                        std::span<const ZeroRecord> zeros,
                                        const EvalConfig& cfg) {
    if (s.real() < -1.0 || s.real() > 2.0)
        throw DomainError("logderiv_zero_sum_residual requires -1 <= Re(s) <= 2");
    auto d = l_derivs(chi, s, 1, cfg);
    if (std::abs(d[0].value) < 1e-13)
        throw DomainError("logderiv_zero_sum_residual: s is at a zero of L");
    Complex r = d[1].value / d[0].value;
    double err = (d[1].abs_error_bound + std::abs(r) * d[0].abs_error_bound) /
                 std::abs(d[0].value);
    for (const auto& z : zeros) {
        if (std::fabs(z.gamma - s.imag()) > 1.0) continue;
        Complex rho(z.beta, z.gamma);
        if (std::abs(s - rho) < 1e-12)
            throw DomainError("logderiv_zero_sum_residual: s equals a supplied zero");
        r -= static_cast<double>(z.multiplicity) / (s - rho);
    }
    return {r, err};
}

Evaluator::Evaluator(DirichletCharacter chi, EvalConfig cfg)
    : chi_(std::move(chi)), cfg_(cfg), m_(smallest_nondividing_prime(chi_.q)) {
    cfg_.validate();
}

Complex Evaluator::value(FunctionTag tag, Complex s) const {
    switch (tag) {
        case FunctionTag::L: return l_value(chi_, s, 0, cfg_).value;
        case FunctionTag::Lprime: return l_value(chi_, s, 1, cfg_).value;
        case FunctionTag::G1: return g1_value(chi_, s, cfg_).value;
        case FunctionTag::FlogF: return f_logderiv(chi_, s, LogDerivMode::direct).value;
    }
    throw DomainError("unknown function tag");
}

std::array<Complex, 2> Evaluator::value_and_derivative(FunctionTag tag, Complex s) const {
    switch (tag) {
        case FunctionTag::L: {
            auto d = l_derivs(chi_, s, 1, cfg_);
            return {d[0].value, d[1].value};
        }
        case FunctionTag::Lprime: {
            auto d = l_derivs(chi_, s, 2, cfg_);
            return {d[1].value, d[2].value};
        }
        case FunctionTag::G1: {
            auto d = l_derivs(chi_, s, 2, cfg_);
            double logm = std::log(static_cast<double>(m_));
            Complex pref = -std::exp(s * logm) / (chi_.eval(m_) * logm);
            return {pref * d[1].value, pref * (logm * d[1].value + d[2].value)};
        }
        case FunctionTag::FlogF:
            break;
    }
    throw DomainError("value_and_derivative: unsupported function tag");
}

}  // namespace dlz
