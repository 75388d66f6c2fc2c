// Newton polygons and a limited Puiseux toolkit: branch certification over
// the rationals (no field extensions), parametrization verification, and
// the parametrization route to the multiplicity along a branch.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "folinv/foliation.hpp"
#include "folinv/poly.hpp"

namespace folinv {

struct NewtonSegment {
    // Lattice endpoints (x-exponent, y-exponent), listed from the y-axis
    // side downwards; from.y > to.y.
    std::pair<std::uint32_t, std::uint32_t> from;
    std::pair<std::uint32_t, std::uint32_t> to;
    // (to.x - from.x) / (from.y - to.y), in lowest terms.
    Rat inclination;

    bool operator==(const NewtonSegment&) const = default;
};

struct NewtonPolygon {
    // Compact faces of the lower-left hull of the support, inclinations
    // strictly increasing.  A single support vertex yields no segments.
    std::vector<NewtonSegment> segments;
};

// Requires f != 0 vanishing at the origin.
NewtonPolygon newton_polygon(const Poly& f);

enum class BranchCertificate { Yes, No, Unknown };

// Rational Newton-Puiseux certification.  Yes and No are proofs; Unknown
// is returned whenever an irrational root would be needed to continue.
BranchCertificate certify_branch(const Poly& f);

struct Parametrization {
    Poly x_series, y_series; // univariate in t (exponent in the x slot)
    std::uint32_t truncation = 0;

    // Validates: not both series zero, no constant terms, and primitivity
    // (gcd of all exponents equal to 1).  Throws NotPrimitive.
    static Parametrization make(Poly x_series, Poly y_series, std::uint32_t truncation);
};

// True iff f(x(t), y(t)) vanishes through degree N.
bool verify_parametrization(const Poly& f, const Parametrization& gamma);

// Default sufficient truncation order for verify_parametrization:
// 4 * ord(f) * degree(f).
std::uint32_t default_truncation(const Poly& f);

// ord_t of the pulled-back vector field along gamma; throws
// TruncationInsufficient when the order is not visible below N.
std::uint64_t mult_via_parametrization(const Foliation& F, const Parametrization& gamma);

} // namespace folinv
