#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "dlz/eval.hpp"

namespace dlz {

using ComplexFn = std::function<Complex(Complex)>;

struct ArgTrackOptions {
    double zero_threshold = 1e-13;  // |f| below this -> PathThroughZeroError
    double max_jump = 1.2;          // accepted per-step phase jump (< pi/2)
    double seed_step = 0.2;         // initial subdivision length of segments
    int max_depth = 48;
};

// Continuous argument increment of f along the polyline, by phase
// unwrapping with adaptive step halving.  Throws PathThroughZeroError if
// the path runs into a zero of f.
double arg_increment_along(const ComplexFn& f, std::span<const Complex> vertices,
                           const ArgTrackOptions& opts = {});

// Spec-level operation: continuous argument along a path of one of the
// named targets, for a fixed character and config.
double arg_along_path(const Evaluator& ev, FunctionTag tag,
                      std::span<const Complex> vertices,
                      const ArgTrackOptions& opts = {});

// Incremental tracker along a straight segment: returns continuously
// unwrapped arg values at requested points (monotone progression along the
// segment).  Used by the Littlewood edge integrals.
class SegmentArgTracker {
public:
    SegmentArgTracker(const ComplexFn& f, Complex start, Complex end,
                      double start_arg, const ArgTrackOptions& opts = {});

    // Continuous arg at start + x*(end-start), 0 <= x, nondecreasing calls.
    double arg_at(double x);
    double final_arg();  // arg at the end point

private:
    const ComplexFn& f_;
    Complex start_, dir_;
    ArgTrackOptions opts_;
    double pos_ = 0.0;
    double arg_;
    Complex val_;
};

}  // namespace dlz
