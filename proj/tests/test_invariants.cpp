#include <doctest.h>

#include "folinv/invariants.hpp"
#include "support.hpp"

using namespace folinv;
using testsupport::P;

namespace {

Foliation weighted_linear(int m, int n) {
    // m x dy - n y dx
    return Foliation::make(Poly::var_y().scaled(-n), Poly::var_x().scaled(m));
}

Foliation cuspidal_pencil(int m) {
    Poly p = Poly::term({std::uint32_t(m + 1), 1}, 2 * m + 1) +
             Poly::term({0, std::uint32_t(m + 2)}, m);
    Poly q = Poly::term({1, std::uint32_t(m + 1)}, 1 - m) +
             Poly::term({std::uint32_t(m + 2), 0}, -2 * m);
    return Foliation::make(p, q);
}

Poly cuspidal_branch(int m) {
    Poly f = Poly::term({std::uint32_t(2 * m + 1), 0}, 1);
    f += Poly::term({std::uint32_t(m), std::uint32_t(m + 1)}, 1);
    f += Poly::term({0, std::uint32_t(2 * m)}, 1);
    return f;
}

const char* kQuinticForm[2] = {"2x^7+5y^5", "-5x*y^4-3x^6*y^2"};

} // namespace

TEST_CASE("curve milnor and tjurina numbers") {
    CHECK(milnor_curve(P("y^2 - x^3")) == 2);
    CHECK(milnor_curve(cuspidal_branch(2)) == 12);
    CHECK(milnor_curve(P("x")) == 0);
    CHECK(tjurina_curve(cuspidal_branch(1)) == 2);
    CHECK(tjurina_curve(cuspidal_branch(2)) == 12);
    CHECK_THROWS_AS(milnor_curve(P("x^2*y^2")), NotIsolated);
}

TEST_CASE("quasihomogeneous branches have tau = mu = (a-1)(b-1)") {
    const std::pair<int, int> pairs[] = {{2, 3}, {2, 5}, {3, 4}, {4, 5}, {2, 9}, {5, 6}};
    for (auto [a, b] : pairs) {
        Poly f = P("y^" + std::to_string(a) + " - x^" + std::to_string(b));
        std::uint64_t expected = std::uint64_t(a - 1) * (b - 1);
        CHECK(tjurina_curve(f) == expected);
        CHECK(milnor_curve(f) == expected);
    }
    // independent route for one sample
    Poly f = P("y^3 - x^4");
    CHECK(colength_oracle(LocalIdeal::of({f.dx(), f.dy(), f})) == 6);
}

TEST_CASE("tau of the pair") {
    CHECK(tjurina_foliation(weighted_linear(2, 3), P("y^2 - x^3")) == 1);
    CHECK(tjurina_foliation(weighted_linear(3, 4), P("y^3 - x^4")) == 1);
    CHECK(tjurina_foliation(cuspidal_pencil(2), cuspidal_branch(2)) == 13);
    Foliation quintic = Foliation::make(P(kQuinticForm[0]), P(kQuinticForm[1]));
    CHECK(tjurina_foliation(quintic, P("x")) == 5);
    CHECK_THROWS_AS(tjurina_foliation(weighted_linear(2, 3), P("y - x")), NotInvariant);
}

TEST_CASE("mu of the pair") {
    CHECK(mult_foliation(weighted_linear(2, 3), P("y^2 - x^3")) == 1);
    CHECK(mult_foliation(weighted_linear(5, 6), P("y^5 - x^6")) == 1);
    Foliation quintic = Foliation::make(P(kQuinticForm[0]), P(kQuinticForm[1]));
    CHECK(mult_foliation(quintic, P("x")) == 5);
    CHECK(mult_foliation(cuspidal_pencil(1), cuspidal_branch(1)) == 5);
}

TEST_CASE("gsv index") {
    for (auto [m, n] : {std::pair{2, 3}, {3, 4}, {2, 5}, {4, 5}}) {
        Poly f = P("y^" + std::to_string(m) + " - x^" + std::to_string(n));
        CHECK(gsv(weighted_linear(m, n), f) == m + n - m * n);
    }
    CHECK(gsv(cuspidal_pencil(3), cuspidal_branch(3)) == -5);
    // exact forms have vanishing index
    for (const char* s : {"y^2 - x^3", "y^3 - x^4", "y^2 - x^5"}) {
        Poly f = P(s);
        CHECK(gsv(hamiltonian(f), f) == 0);
    }
}

TEST_CASE("theorem checker on the cuspidal pencil") {
    InvariantReport r1 =
        check_theorem(cuspidal_pencil(1),
                      Separatrix::make(cuspidal_branch(1), Irreducibility::Certified));
    CHECK(r1.slack == 2);
    CHECK(r1.theorem_holds());
    CHECK(r1.identity_checks.all());

    InvariantReport r4 =
        check_theorem(cuspidal_pencil(4),
                      Separatrix::make(cuspidal_branch(4), Irreducibility::Certified));
    CHECK(r4.slack == 24);
    CHECK(r4.mu_B == 56);
    CHECK(r4.tau_B == 48);
    CHECK(r4.mu_FB == 41);
    CHECK(r4.tau_FB == 33);
    CHECK(r4.gsv == -15);
    CHECK(r4.theorem_holds());
    CHECK(r4.identity_checks.all());
}

TEST_CASE("theorem equality on smooth branches") {
    for (int n = 1; n <= 6; ++n) {
        Poly f = P("y - x^" + std::to_string(n));
        InvariantReport r =
            check_theorem(weighted_linear(1, n), Separatrix::make(f, Irreducibility::Certified));
        CHECK(r.slack == 0);
        CHECK(r.smooth);
        CHECK(r.gsv == 1);
        CHECK(r.theorem_holds());
        CHECK(r.identity_checks.all());
    }
}

TEST_CASE("theorem checker refuses regular foliations") {
    Foliation regular = Foliation::make(P("1"), Poly());
    CHECK_THROWS_AS(
        check_theorem(regular, Separatrix::make(P("y"), Irreducibility::Certified)),
        RegularFoliation);
}

TEST_CASE("divisor invariants on the quintic pencil") {
    Foliation F = Foliation::make(P(kQuinticForm[0]), P(kQuinticForm[1]));
    SeparatrixDivisor D = SeparatrixDivisor::make(
        {{Separatrix::make(P("x"), Irreducibility::Certified), 1},
         {Separatrix::make(P("y^5 - x^7 + x^5*y^3 - x^5"), Irreducibility::Assumed), 1}});
    DivisorReport rep = divisor_invariants(F, D);
    CHECK(rep.mu_div == 25);
    CHECK(rep.gsv_div == 0);
    CHECK(rep.T == 26);
    CHECK(rep.rhs == 29);
    CHECK(rep.strict);
    CHECK(check_corollary(F, D).strict);
}

TEST_CASE("single-branch divisor collapses to the scalar invariants") {
    Foliation F = cuspidal_pencil(2);
    Poly f = cuspidal_branch(2);
    SeparatrixDivisor D =
        SeparatrixDivisor::make({{Separatrix::make(f, Irreducibility::Certified), 1}});
    DivisorReport rep = divisor_invariants(F, D);
    CHECK(rep.mu_div == std::int64_t(mult_foliation(F, f)));
    CHECK(rep.T == tjurina_foliation(F, f));
    CHECK(rep.gsv_div == gsv(F, f));
}

TEST_CASE("empty divisor has multiplicity one") {
    Foliation F = weighted_linear(2, 3);
    CHECK(divisor_multiplicity(F, SeparatrixDivisor{}) == 1);
}

TEST_CASE("signed divisors: only the multiplicity is defined") {
    Foliation radial = Foliation::make(P("-y"), P("x"));
    SeparatrixDivisor D = SeparatrixDivisor::make(
        {{Separatrix::make(P("x"), Irreducibility::Certified), 1},
         {Separatrix::make(P("y"), Irreducibility::Certified), -1}});
    // split route: mu(B0) - mu(Binf) + 1 = 1 - 1 + 1
    CHECK(divisor_multiplicity(radial, D) == 1);
    CHECK_THROWS_AS(divisor_invariants(radial, D), NonReducedForGSV);
    SeparatrixDivisor doubled = SeparatrixDivisor::make(
        {{Separatrix::make(P("y^2 - x^3"), Irreducibility::Certified), 2}});
    CHECK_THROWS_AS(divisor_invariants(radial, doubled), NonReducedForGSV);
}

TEST_CASE("duplicate divisor components are rejected") {
    CHECK_THROWS_AS(SeparatrixDivisor::make(
                        {{Separatrix::make(P("x"), Irreducibility::Certified), 1},
                         {Separatrix::make(P("x"), Irreducibility::Certified), 1}}),
                    InvalidInput);
}

TEST_CASE("corollary boundary: one smooth branch reaches equality") {
    // On a single smooth branch gsv = tau = mu, so 4T - 3mu = gsv exactly
    // and the strict divisor inequality degenerates.  Recorded as the
    // boundary case: strict must come out false, not be forced true.
    Foliation F = Foliation::make(P(kQuinticForm[0]), P(kQuinticForm[1]));
    SeparatrixDivisor D = SeparatrixDivisor::make(
        {{Separatrix::make(P("x"), Irreducibility::Certified), 1}});
    DivisorReport rep = divisor_invariants(F, D);
    CHECK(rep.gsv_div == 5);
    CHECK(rep.rhs == 5);
    CHECK(!rep.strict);
}

TEST_CASE("corollary on two transverse invariant lines of the radial form") {
    Foliation radial = Foliation::make(P("-y"), P("x"));
    SeparatrixDivisor D = SeparatrixDivisor::make(
        {{Separatrix::make(P("x"), Irreducibility::Certified), 1},
         {Separatrix::make(P("y"), Irreducibility::Certified), 1}});
    DivisorReport rep = check_corollary(radial, D);
    CHECK(rep.gsv_div == 0);
    CHECK(rep.mu_div == 1);
    CHECK(rep.T == 2);
    CHECK(rep.rhs == 5);
    CHECK(rep.strict);
}

TEST_CASE("identity suite on generated pairs") {
    auto pairs = testsupport::generated_pairs(1, 101);
    REQUIRE(pairs.size() >= 10);
    for (const auto& pr : pairs) {
        InvariantReport r = check_theorem(pr.F, pr.B);
        CAPTURE(pr.name);
        CHECK(r.identity_checks.all());
        CHECK(r.theorem_holds());
    }
}

TEST_CASE("report serialization carries the schema fields") {
    InvariantReport r =
        check_theorem(weighted_linear(2, 3),
                      Separatrix::make(P("y^2 - x^3"), Irreducibility::Certified));
    nlohmann::json j = r.to_json();
    for (const char* key : {"nu_F", "nu_B", "mu_B", "tau_B", "mu_FB", "tau_FB", "gsv",
                            "slack", "smooth", "identity_checks"})
        CHECK(j.contains(key));
    CHECK(j["tau_FB"] == 1);
    CHECK(j["irreducibility"] == "certified");
}
