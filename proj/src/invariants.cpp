#include "folinv/invariants.hpp"

namespace folinv {

namespace {

std::uint64_t finite_or_throw(std::optional<std::uint64_t> v, const char* what) {
    if (!v) throw NotIsolated(what);
    return *v;
}

} // namespace

std::uint64_t milnor_curve(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("milnor number of zero");
    return finite_or_throw(colength(LocalIdeal::of({f.dx(), f.dy()})),
                           "jacobian ideal has infinite colength");
}

std::uint64_t tjurina_curve(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("tjurina number of zero");
    return finite_or_throw(colength(LocalIdeal::of({f.dx(), f.dy(), f})),
                           "tjurina ideal has infinite colength");
}

std::uint64_t tjurina_foliation(const Foliation& F, const Poly& f) {
    separatrix_cofactor(F, f); // NotInvariant when the curve fails the test
    return finite_or_throw(colength(LocalIdeal::of({F.p(), F.q(), f})),
                           "tjurina ideal of the pair has infinite colength");
}

std::uint64_t mult_foliation(const Foliation& F, const Poly& f) {
    separatrix_cofactor(F, f);
    const Poly px = Poly::var_x();
    const Poly py = Poly::var_y();
    bool x_divides_f = f.min_exponent_x() >= 1;

    // ord_t of a series pulled back along the branch equals the local
    // intersection number with f, which turns the parametrized definition
    // into two colength differences.  Branch choice follows the vanishing
    // coordinate; if the chosen component lies on the curve, switch.
    auto difference = [](std::optional<std::uint64_t> a,
                         std::optional<std::uint64_t> b) -> std::optional<std::int64_t> {
        if (!a || !b) return std::nullopt;
        return static_cast<std::int64_t>(*a) - static_cast<std::int64_t>(*b) + 1;
    };
    auto along_x = [&] {
        return difference(intersection_multiplicity(f, F.q()),
                          intersection_multiplicity(f, px));
    };
    auto along_y = [&] {
        return difference(intersection_multiplicity(f, F.p()),
                          intersection_multiplicity(f, py));
    };

    std::optional<std::int64_t> r = x_divides_f ? along_y() : along_x();
    if (!r) r = x_divides_f ? along_x() : along_y();
    if (!r)
        throw InfiniteIntersection(
            "both multiplicity formulas hit an infinite intersection number");
    if (*r < 0) throw InternalError("negative multiplicity along a branch");
    return static_cast<std::uint64_t>(*r);
}

std::int64_t gsv(const Foliation& F, const Poly& f) {
    return static_cast<std::int64_t>(tjurina_foliation(F, f)) -
           static_cast<std::int64_t>(tjurina_curve(f));
}

SeparatrixDivisor SeparatrixDivisor::make(std::vector<Component> components) {
    for (const auto& c : components)
        if (c.coefficient == 0)
            throw InvalidInput("divisor coefficients must be nonzero");
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = i + 1; j < components.size(); ++j) {
            Poly d = gcd(components[i].branch.equation, components[j].branch.equation);
            if (d.degree() > 0)
                throw InvalidInput("divisor components must be pairwise distinct branches");
        }
    return SeparatrixDivisor{std::move(components)};
}

bool SeparatrixDivisor::effective() const {
    for (const auto& c : components)
        if (c.coefficient < 0) return false;
    return true;
}

bool SeparatrixDivisor::reduced() const {
    for (const auto& c : components)
        if (c.coefficient != 1) return false;
    return true;
}

long long SeparatrixDivisor::degree() const {
    long long d = 0;
    for (const auto& c : components) d += c.coefficient;
    return d;
}

std::int64_t divisor_multiplicity(const Foliation& F, const SeparatrixDivisor& D) {
    std::int64_t sum = 0;
    for (const auto& c : D.components)
        sum += c.coefficient * static_cast<std::int64_t>(mult_foliation(F, c.branch.equation));
    return sum - D.degree() + 1;
}

DivisorReport divisor_invariants(const Foliation& F, const SeparatrixDivisor& D) {
    if (!D.effective() || !D.reduced())
        throw NonReducedForGSV("GSV and T are defined for effective reduced divisors only");
    DivisorReport rep;
    rep.mu_div = divisor_multiplicity(F, D);
    std::int64_t gsv_sum = 0;
    for (const auto& c : D.components) {
        rep.T += tjurina_foliation(F, c.branch.equation);
        gsv_sum += gsv(F, c.branch.equation);
    }
    std::int64_t crossings = 0;
    for (std::size_t i = 0; i < D.components.size(); ++i)
        for (std::size_t j = i + 1; j < D.components.size(); ++j) {
            auto m = intersection_multiplicity(D.components[i].branch.equation,
                                               D.components[j].branch.equation);
            if (!m) throw InvalidInput("divisor components share a branch");
            crossings += static_cast<std::int64_t>(*m);
        }
    rep.gsv_div = gsv_sum - 2 * crossings;
    rep.rhs = 4 * static_cast<std::int64_t>(rep.T) - 3 * rep.mu_div;
    rep.strict = rep.gsv_div < rep.rhs;
    return rep;
}

InvariantReport check_theorem(const Foliation& F, const Separatrix& B) {
    if (F.algebraic_multiplicity() == 0)
        throw RegularFoliation("the foliation is regular at the origin");
    const Poly& f = B.equation;
    InvariantReport rep;
    rep.irreducibility = B.status;
    rep.nu_F = F.algebraic_multiplicity();
    rep.nu_B = *f.ord();
    rep.mu_B = milnor_curve(f);
    rep.tau_B = tjurina_curve(f);
    rep.tau_FB = tjurina_foliation(F, f);
    rep.mu_FB = mult_foliation(F, f);
    rep.gsv = static_cast<std::int64_t>(rep.tau_FB) - static_cast<std::int64_t>(rep.tau_B);
    rep.slack = 4 * static_cast<std::int64_t>(rep.tau_FB) -
                3 * static_cast<std::int64_t>(rep.mu_FB) - rep.gsv;
    rep.smooth = rep.nu_B == 1;
    rep.identity_checks.difference_identity =
        static_cast<std::int64_t>(rep.mu_FB) - static_cast<std::int64_t>(rep.tau_FB) ==
        static_cast<std::int64_t>(rep.mu_B) - static_cast<std::int64_t>(rep.tau_B);
    rep.identity_checks.milnor_decomposition =
        static_cast<std::int64_t>(rep.mu_FB) == rep.gsv + static_cast<std::int64_t>(rep.mu_B);
    rep.identity_checks.tjurina_bounded_by_multiplicity = rep.tau_FB <= rep.mu_FB;
    rep.identity_checks.smooth_equalities =
        !rep.smooth || (rep.tau_FB == rep.mu_FB &&
                        rep.gsv == static_cast<std::int64_t>(rep.tau_FB));
    return rep;
}

DivisorReport check_corollary(const Foliation& F, const SeparatrixDivisor& D) {
    if (F.algebraic_multiplicity() == 0)
        throw RegularFoliation("the foliation is regular at the origin");
    if (D.components.empty()) throw InvalidInput("corollary check needs a nonempty divisor");
    return divisor_invariants(F, D);
}

nlohmann::json InvariantReport::to_json() const {
    return nlohmann::json{
        {"nu_F", nu_F},
        {"nu_B", nu_B},
        {"mu_B", mu_B},
        {"tau_B", tau_B},
        {"mu_FB", mu_FB},
        {"tau_FB", tau_FB},
        {"gsv", gsv},
        {"slack", slack},
        {"smooth", smooth},
        {"irreducibility",
         irreducibility == Irreducibility::Certified ? "certified" : "assumed"},
        {"identity_checks",
         {{"difference_identity", identity_checks.difference_identity},
          {"milnor_decomposition", identity_checks.milnor_decomposition},
          {"tjurina_bounded_by_multiplicity",
           identity_checks.tjurina_bounded_by_multiplicity},
          {"smooth_equalities", identity_checks.smooth_equalities}}},
    };
}

nlohmann::json DivisorReport::to_json() const {
    return nlohmann::json{
        {"mu_div", mu_div}, {"gsv_div", gsv_div}, {"T", T}, {"rhs", rhs}, {"strict", strict},
    };
}

} // namespace folinv
