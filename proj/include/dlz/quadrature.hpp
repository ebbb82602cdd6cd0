#pragma once

#include <functional>

#include "dlz/errors.hpp"

namespace dlz {

struct QuadOptions {
    double tol = 1e-8;   // per-panel convergence of successive estimates
    int max_depth = 44;  // panel halving limit
};

// Adaptive composite 16-point Gauss-Legendre quadrature of f over [a, b].
// Panels are halved until the one-panel and two-panel estimates agree to
// tol (scaled by panel length / total length).  Throws AccuracyError with
// the last two estimates encoded when a panel fails to converge.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opts = {});

}  // namespace dlz
