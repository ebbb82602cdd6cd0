#pragma once

#include <string>

#include "dlz/errors.hpp"

namespace dlz {

// Which function a zero or a contour computation refers to.
enum class FunctionTag { L, Lprime, G1, FlogF };

std::string to_string(FunctionTag tag);
FunctionTag function_tag_from_string(const std::string& s);

// Closed axis-aligned box in the s-plane.
struct Rectangle {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;

    Rectangle() = default;
    Rectangle(double smin, double smax, double tmin, double tmax)
        : sigma_min(smin), sigma_max(smax), t_min(tmin), t_max(tmax) {
        if (!(sigma_min < sigma_max) || !(t_min < t_max))
            throw DomainError("degenerate rectangle");
    }

    double width() const { return sigma_max - sigma_min; }
    double height() const { return t_max - t_min; }
    bool contains(double sigma, double t) const {
        return sigma_min <= sigma && sigma <= sigma_max && t_min <= t && t <= t_max;
    }
};

// One located zero.
struct ZeroRecord {
    double beta = 0.0;
    double gamma = 0.0;
    int multiplicity = 1;
    double residual = 0.0;  // |f| at the refined point
    FunctionTag function_tag = FunctionTag::L;
    int q = 0;
    int chi_index = 0;
};

}  // namespace dlz
