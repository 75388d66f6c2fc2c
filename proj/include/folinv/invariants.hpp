// Numerical invariants of a foliation germ along an invariant curve:
// curve Milnor/Tjurina numbers, tau and mu of the pair, the GSV index,
// their divisor-level versions, and the inequality checkers
//   GSV <= 4*tau - 3*mu           (branch form; equality iff smooth)
//   GSV < 4*T - 3*mu              (effective reduced divisors)
#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "folinv/foliation.hpp"
#include "folinv/localalg.hpp"

namespace folinv {

struct IdentityChecks {
    bool difference_identity = false;          // mu_FB - tau_FB = mu_B - tau_B
    bool milnor_decomposition = false;         // mu_FB = gsv + mu_B
    bool tjurina_bounded_by_multiplicity = false; // tau_FB <= mu_FB
    bool smooth_equalities = false;            // smooth: tau_FB = mu_FB = gsv

    bool all() const {
        return difference_identity && milnor_decomposition &&
               tjurina_bounded_by_multiplicity && smooth_equalities;
    }
};

struct InvariantReport {
    std::uint32_t nu_F = 0;
    std::uint32_t nu_B = 0;
    std::uint64_t mu_B = 0, tau_B = 0;
    std::uint64_t mu_FB = 0, tau_FB = 0;
    std::int64_t gsv = 0;
    std::int64_t slack = 0; // 4*tau_FB - 3*mu_FB - gsv
    bool smooth = false;
    IdentityChecks identity_checks;
    Irreducibility irreducibility = Irreducibility::Assumed;

    bool theorem_holds() const { return slack >= 0 && (slack == 0) == smooth; }
    nlohmann::json to_json() const;
};

struct SeparatrixDivisor {
    struct Component {
        Separatrix branch;
        long long coefficient = 1;
    };
    std::vector<Component> components;

    // Validates nonzero coefficients and pairwise distinct branches
    // (pairwise gcd must be constant).
    static SeparatrixDivisor make(std::vector<Component> components);

    bool effective() const;
    bool reduced() const; // all coefficients equal to 1
    long long degree() const;
};

struct DivisorReport {
    std::int64_t mu_div = 0;
    std::int64_t gsv_div = 0;
    std::uint64_t T = 0;
    std::int64_t rhs = 0; // 4*T - 3*mu_div
    bool strict = false;  // gsv_div < rhs
    nlohmann::json to_json() const;
};

// Curve invariants at the origin; throw NotIsolated on infinite colength.
std::uint64_t milnor_curve(const Poly& f);
std::uint64_t tjurina_curve(const Poly& f);

// tau of the pair: colength of (P, Q, f).  Throws NotInvariant first.
std::uint64_t tjurina_foliation(const Foliation& F, const Poly& f);

// mu of the pair via local intersection numbers along the branch.
std::uint64_t mult_foliation(const Foliation& F, const Poly& f);

// GSV index, computed as tau_FB - tau_B; may be negative.
std::int64_t gsv(const Foliation& F, const Poly& f);

// Multiplicity along a divisor with arbitrary integer coefficients:
// sum a_B * mu(F, B) - deg + 1 (empty divisor gives 1).
std::int64_t divisor_multiplicity(const Foliation& F, const SeparatrixDivisor& D);

// Full divisor report; requires an effective reduced divisor for the GSV
// and T sums (throws NonReducedForGSV otherwise).
DivisorReport divisor_invariants(const Foliation& F, const SeparatrixDivisor& D);

// Branch inequality checker; refuses regular foliations (nu = 0).
InvariantReport check_theorem(const Foliation& F, const Separatrix& B);

// Divisor inequality checker on an effective reduced divisor.
DivisorReport check_corollary(const Foliation& F, const SeparatrixDivisor& D);

} // namespace folinv
