#include "folinv/foliation.hpp"

#include <algorithm>

namespace folinv {

Foliation Foliation::make(Poly P, Poly Q) {
    if (P.is_zero() && Q.is_zero()) throw ZeroForm("both components of the 1-form are zero");
    Poly d = gcd(P, Q);
    if (d.degree() > 0 && d.vanishes_at_origin())
        throw NotCoprime("form components share a common factor through the origin");
    std::uint32_t nu = kMaxExponent;
    if (auto o = P.ord()) nu = std::min(nu, *o);
    if (auto o = Q.ord()) nu = std::min(nu, *o);
    return Foliation(std::move(P), std::move(Q), nu);
}

Separatrix Separatrix::make(Poly f, Irreducibility status) {
    if (f.is_zero()) throw ZeroPolynomial("separatrix equation is zero");
    if (!f.vanishes_at_origin())
        throw InvalidInput("separatrix equation must vanish at the origin");
    if (!is_squarefree(f)) throw NotSquarefree("separatrix equation must be squarefree");
    return Separatrix{std::move(f), status};
}

Poly separatrix_cofactor(const Foliation& F, const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("invariance test on the zero polynomial");
    if (!f.vanishes_at_origin())
        throw InvalidInput("candidate invariant curve must vanish at the origin");
    Poly w = F.p() * f.dy() - F.q() * f.dx();
    try {
        return exact_divide(w, f);
    } catch (const NotDivisible&) {
        throw NotInvariant("curve is not invariant for the foliation");
    }
}

bool is_invariant(const Foliation& F, const Poly& f) {
    try {
        separatrix_cofactor(F, f);
        return true;
    } catch (const NotInvariant&) {
        return false;
    }
}

Foliation hamiltonian(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("hamiltonian of the zero polynomial");
    return Foliation::make(f.dx(), f.dy());
}

std::uint32_t algebraic_multiplicity(const Foliation& F) {
    return F.algebraic_multiplicity();
}

} // namespace folinv
