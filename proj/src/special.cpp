#include "dlz/special.hpp"

#include <cmath>
#include <numbers>

#include "dlz/errors.hpp"

namespace dlz {

const double kBernoulli2k[31] = {
    1.0,
    0.16666666666666666,
    -0.033333333333333333,
    0.023809523809523808,
    -0.033333333333333333,
    0.07575757575757576,
    -0.2531135531135531,
    1.1666666666666667,
    -7.0921568627450977,
    54.971177944862156,
    -529.12424242424242,
    6192.123188405797,
    -86580.253113553117,
    1425517.1666666667,
    -27298231.067816094,
    601580873.9006424,
    -15116315767.092157,
    429614643061.16669,
    -13711655205088.332,
    488332318973593.19,
    -19296579341940068.0,
    8.4169304757368256e+17,
    -4.0338071854059454e+19,
    2.1150748638081993e+21,
    -1.2086626522296526e+23,
    7.5008667460769642e+24,
    -5.0387781014810688e+26,
    3.6528776484818122e+28,
    -2.8498769302450882e+30,
    2.3865427499683627e+32,
    -2.1399949257225335e+34,
};

const double kBernoulli2kOverFact[31] = {
    0.083333333333333329,
    -0.0013888888888888889,
    3.3068783068783071e-05,
    -8.2671957671957675e-07,
    2.08767569878681e-08,
    -5.2841901386874932e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.5860620562778452e-15,
    -2.1748686985580619e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
    3.5347070396294673e-21,
    -8.9535174270375463e-23,
    2.2679524523376829e-24,
    -5.7447906688722025e-26,
    1.455172475614865e-27,
    -3.6859949406653103e-29,
    9.3367342570950451e-31,
    -2.36502241570063e-32,
    5.9906717624821341e-34,
    -1.5174548844682903e-35,
    3.8437581254541886e-37,
    -9.7363530726466913e-39,
    2.4662470442006811e-40,
    -6.2470767418207434e-42,
    1.5824030244644914e-43,
    -4.0082736859489357e-45,
    1.0153075855569557e-46,
    -2.5718041582418717e-48,
    6.5144560352338152e-50,
};

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kStirlingTerms = 10;
constexpr double kStirlingShiftTo = 12.0;

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 &&
           z.real() == std::floor(z.real());
}

// Stirling series for log Gamma, valid for Re(z) >= kStirlingShiftTo.
Complex log_gamma_stirling(Complex z) {
    Complex lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
    Complex zinv2 = 1.0 / (z * z);
    Complex zpow = 1.0 / z;  // z^{-(2j-1)}
    for (int j = 1; j <= kStirlingTerms; ++j) {
        double b2j = kBernoulli2k[j];
        lg += b2j / (2.0 * j * (2.0 * j - 1.0)) * zpow;
        zpow *= zinv2;
    }
    return lg;
}

Complex digamma_stirling(Complex z) {
    Complex psi = std::log(z) - 0.5 / z;
    Complex zinv2 = 1.0 / (z * z);
    Complex zpow = zinv2;  // z^{-2j}
    for (int j = 1; j <= kStirlingTerms; ++j) {
        psi -= kBernoulli2k[j] / (2.0 * j) * zpow;
        zpow *= zinv2;
    }
    return psi;
}

}  // namespace

Complex log_sin(Complex z) {
    const Complex i(0.0, 1.0);
    if (z.imag() > 0.0) {
        // sin z = e^{-iz} (1 - e^{2iz}) * (i/2)
        Complex w = std::exp(2.0 * i * z);  // |w| = e^{-2 Im z} < 1
        return -i * z + std::log(1.0 - w) + Complex(-std::log(2.0), kPi / 2.0);
    }
    // sin z = e^{iz} (1 - e^{-2iz}) / (2i)
    Complex w = std::exp(-2.0 * i * z);
    return i * z + std::log(1.0 - w) + Complex(-std::log(2.0), -kPi / 2.0);
}

Complex cot(Complex z) {
    const Complex i(0.0, 1.0);
    if (z.imag() > 0.0) {
        Complex w = std::exp(2.0 * i * z);
        return -i * (1.0 + w) / (1.0 - w);
    }
    Complex w = std::exp(-2.0 * i * z);
    return i * (1.0 + w) / (1.0 - w);
}

Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("log_gamma at a pole");
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return std::log(kPi) - log_sin(kPi * z) - log_gamma(1.0 - z);
    }
    int shift = 0;
    while (z.real() + shift < kStirlingShiftTo) ++shift;
    Complex lg = log_gamma_stirling(z + static_cast<double>(shift));
    for (int k = 0; k < shift; ++k) lg -= std::log(z + static_cast<double>(k));
    return lg;
}

Complex digamma(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("digamma at a pole");
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        return digamma(1.0 - z) - kPi * cot(kPi * z);
    }
    int shift = 0;
    while (z.real() + shift < kStirlingShiftTo) ++shift;
    Complex psi = digamma_stirling(z + static_cast<double>(shift));
    for (int k = 0; k < shift; ++k) psi -= 1.0 / (z + static_cast<double>(k));
    return psi;
}

}  // namespace dlz
