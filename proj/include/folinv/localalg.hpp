// Zero-dimensional local-ideal engine: Mora standard bases for the fixed
// local order, colengths of quotients of the local ring, an independent
// truncation oracle, and local intersection numbers.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "folinv/poly.hpp"

namespace folinv {

struct LocalIdeal {
    // Nonzero generators; the zero ideal is represented by an empty vector.
    std::vector<Poly> generators;

    // Drops zero generators.  Throws InvalidInput on an empty input list.
    static LocalIdeal of(std::vector<Poly> gens);
};

struct StandardBasis {
    // Mora standard basis w.r.t. the local order, leading coefficients 1,
    // lead-interreduced (no element's leading term divides another's).
    std::vector<Poly> elements;
};

StandardBasis standard_basis(const LocalIdeal& ideal);

// Weak Mora normal form of f against the reducers; the result is zero
// exactly when f lies in the local ideal generated by them.
Poly mora_normal_form(Poly f, const std::vector<Poly>& reducers);

// Vector-space dimension of the local ring modulo the ideal; nullopt means
// infinity (staircase misses a pure power of x or of y).
std::optional<std::uint64_t> colength(const StandardBasis& basis);
std::optional<std::uint64_t> colength(const LocalIdeal& ideal);

struct OracleOptions {
    // Number of consecutive truncation levels tried past the starting one.
    std::uint32_t cap = 64;
};

// Independent brute-force colength: exact integer linear algebra on the
// truncations I + m^k for k = k0, k0+1, ... until two consecutive
// dimensions agree.  Infinite colength is decided exactly beforehand (the
// gcd of the generators vanishes at the origin).  Throws CapExceeded when
// the finite value has not stabilized within the cap.
std::optional<std::uint64_t> colength_oracle(const LocalIdeal& ideal, OracleOptions opts = {});

// Dimension of the truncated quotient ring/(I + m^k); exposed for tests.
std::uint64_t truncated_quotient_dim(const LocalIdeal& ideal, std::uint32_t k);

// i_0(f, g) = colength of (f, g); nullopt iff f and g share a factor
// through the origin.  Zero when one input is a unit.
std::optional<std::uint64_t> intersection_multiplicity(const Poly& f, const Poly& g);

} // namespace folinv
