#include "dlz/path.hpp"

#include <cmath>
#include <numbers>

namespace dlz {
namespace {

constexpr double kPi = std::numbers::pi;

void check_not_zero(Complex z, Complex v, double threshold) {
    if (std::abs(v) < threshold)
        throw PathThroughZeroError("path passes through a zero of the target",
                                   z.real(), z.imag());
}

// Unwrapped phase increment from (z0,f0) to (z1,f1); halves the step until
// each jump is below opts.max_jump.
double segment_increment(const ComplexFn& f, Complex z0, Complex f0, Complex z1,
                         Complex f1, const ArgTrackOptions& opts, int depth) {
    double jump = std::arg(f1 / f0);
    if (std::fabs(jump) < opts.max_jump) return jump;
    if (depth >= opts.max_depth) {
        Complex mid = 0.5 * (z0 + z1);
        Complex fm = f(mid);
        if (std::abs(fm) < opts.zero_threshold)
            throw PathThroughZeroError("phase unwrapping hit a zero",
                                       mid.real(), mid.imag());
        throw AccuracyError("phase unwrapping did not converge", std::fabs(jump));
    }
    Complex mid = 0.5 * (z0 + z1);
    Complex fm = f(mid);
    check_not_zero(mid, fm, opts.zero_threshold);
    return segment_increment(f, z0, f0, mid, fm, opts, depth + 1) +
           segment_increment(f, mid, fm, z1, f1, opts, depth + 1);
}

}  // namespace

double arg_increment_along(const ComplexFn& f, std::span<const Complex> vertices,
                           const ArgTrackOptions& opts) {
    if (vertices.size() < 2) return 0.0;
    double total = 0.0;
    Complex z0 = vertices[0];
    Complex f0 = f(z0);
    check_not_zero(z0, f0, opts.zero_threshold);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        Complex z1 = vertices[i];
        double len = std::abs(z1 - z0);
        if (len == 0.0) continue;
        int pieces = std::max(1, static_cast<int>(std::ceil(len / opts.seed_step)));
        for (int p = 1; p <= pieces; ++p) {
            Complex zp = z0 + (z1 - z0) * (static_cast<double>(p) / pieces);
            Complex fp = f(zp);
            check_not_zero(zp, fp, opts.zero_threshold);
            total += segment_increment(f, z0 + (z1 - z0) * (static_cast<double>(p - 1) / pieces),
                                       f0, zp, fp, opts, 0);
            f0 = fp;
        }
        z0 = z1;
    }
    return total;
}

double arg_along_path(const Evaluator& ev, FunctionTag tag,
                      std::span<const Complex> vertices, const ArgTrackOptions& opts) {
    ComplexFn f = [&ev, tag](Complex s) { return ev.value(tag, s); };
    return arg_increment_along(f, vertices, opts);
}

SegmentArgTracker::SegmentArgTracker(const ComplexFn& f, Complex start, Complex end,
                                     double start_arg, const ArgTrackOptions& opts)
    : f_(f), start_(start), dir_(end - start), opts_(opts), arg_(start_arg) {
    val_ = f_(start_);
    check_not_zero(start_, val_, opts_.zero_threshold);
}

double SegmentArgTracker::arg_at(double x) {
    if (x < pos_)
        throw DomainError("SegmentArgTracker requires nondecreasing positions");
    if (x > pos_) {
        Complex z0 = start_ + pos_ * dir_;
        Complex z1 = start_ + x * dir_;
        double len = std::abs(z1 - z0);
        int pieces = std::max(1, static_cast<int>(std::ceil(len / opts_.seed_step)));
        Complex zprev = z0;
        Complex fprev = val_;
        for (int p = 1; p <= pieces; ++p) {
            Complex zp = z0 + (z1 - z0) * (static_cast<double>(p) / pieces);
            Complex fp = f_(zp);
            check_not_zero(zp, fp, opts_.zero_threshold);
            arg_ += segment_increment(f_, zprev, fprev, zp, fp, opts_, 0);
            zprev = zp;
            fprev = fp;
        }
        val_ = fprev;
        pos_ = x;
    }
    return arg_;
}

double SegmentArgTracker::final_arg() { return arg_at(1.0); }

}  // namespace dlz
