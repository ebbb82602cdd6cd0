#include "dlz/quadrature.hpp"

#include <cmath>
#include <string>

namespace dlz {
namespace {

const double kNodes[16] = {
    -0.98940093499164994, -0.9445750230732326,  -0.86563120238783176,
    -0.755404408355003,   -0.61787624440264377, -0.45801677765722737,
    -0.28160355077925892, -0.095012509837637454, 0.095012509837637454,
    0.28160355077925892,   0.45801677765722737,  0.61787624440264377,
    0.755404408355003,     0.86563120238783176,  0.9445750230732326,
    0.98940093499164994,
};
const double kWeights[16] = {
    0.027152459411754037, 0.062253523938647706, 0.095158511682492591,
    0.12462897125553403,  0.14959598881657676,  0.16915651939500262,
    0.18260341504492361,  0.18945061045506859,  0.18945061045506859,
    0.18260341504492361,  0.16915651939500262,  0.14959598881657676,
    0.12462897125553403,  0.095158511682492591, 0.062253523938647706,
    0.027152459411754037,
};

double gl16(const std::function<double(double)>& f, double a, double b) {
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 16; ++i) sum += kWeights[i] * f(mid + half * kNodes[i]);
    return half * sum;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int depth, int max_depth, double whole) {
    double mid = 0.5 * (a + b);
    double left = gl16(f, a, mid);
    double right = gl16(f, mid, b);
    double split = left + right;
    if (std::fabs(split - whole) < tol) return split;
    if (depth >= max_depth)
        throw AccuracyError("quadrature panel did not converge (last estimates " +
                                std::to_string(whole) + ", " + std::to_string(split) + ")",
                            std::fabs(split - whole));
    return adapt(f, a, mid, 0.5 * tol, depth + 1, max_depth, left) +
           adapt(f, mid, b, 0.5 * tol, depth + 1, max_depth, right);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opts) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    return sign * adapt(f, a, b, opts.tol, 0, opts.max_depth, gl16(f, a, b));
}

}  // namespace dlz
