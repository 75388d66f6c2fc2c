// Foliation germs omega = P dx + Q dy with germ-coprime components, their
// separatrices, cofactors and the hamiltonian constructor.
#pragma once

#include <cstdint>

#include "folinv/poly.hpp"

namespace folinv {

class Foliation {
public:
    // Validates the pair: throws ZeroForm when both components vanish and
    // NotCoprime when they share a polynomial factor through the origin.
    static Foliation make(Poly P, Poly Q);

    const Poly& p() const { return p_; }
    const Poly& q() const { return q_; }

    // nu = min(ord P, ord Q); zero at a regular point.
    std::uint32_t algebraic_multiplicity() const { return nu_; }

private:
    Foliation(Poly P, Poly Q, std::uint32_t nu)
        : p_(std::move(P)), q_(std::move(Q)), nu_(nu) {}
    Poly p_, q_;
    std::uint32_t nu_;
};

enum class Irreducibility { Certified, Assumed };

struct Separatrix {
    Poly equation;
    Irreducibility status = Irreducibility::Assumed;

    // Validates: nonzero, squarefree, vanishing at the origin.
    static Separatrix make(Poly f, Irreducibility status);
};

// Cofactor h with P*df/dy - Q*df/dx = f*h; its existence is the invariance
// criterion for the curve f = 0.  Throws NotInvariant.
Poly separatrix_cofactor(const Foliation& F, const Poly& f);

bool is_invariant(const Foliation& F, const Poly& f);

// Foliation df = 0, i.e. (P, Q) = (df/dx, df/dy).
Foliation hamiltonian(const Poly& f);

std::uint32_t algebraic_multiplicity(const Foliation& F);

} // namespace folinv
