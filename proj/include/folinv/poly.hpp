// Sparse exact bivariate polynomials over Q — the ambient ring for all germ
// computations.  Terms are kept in a map ordered by the fixed local term
// order (smaller total degree first, ties x-lexicographically), so begin()
// is the leading term of the germ and equality of polynomials is equality
// of the term maps.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "folinv/rat.hpp"

namespace folinv {

struct Monomial {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    std::uint32_t total() const { return x + y; }
    bool is_one() const { return x == 0 && y == 0; }
    bool divides(Monomial m) const { return x <= m.x && y <= m.y; }

    friend bool operator==(Monomial, Monomial) = default;

    Monomial operator*(Monomial o) const;
    // Requires o.divides(*this).
    Monomial operator/(Monomial o) const;
    static Monomial lcm(Monomial a, Monomial b);
};

// Degrees in scope are tiny; anything past this bound is a runaway
// computation, not a legitimate germ.
inline constexpr std::uint32_t kMaxExponent = 1u << 20;

// Local order: m precedes m' when m has smaller total degree, ties broken
// lexicographically with x > y.  The map comparator sorts leading-first.
struct LocalTermOrder {
    static bool greater(Monomial a, Monomial b) {
        if (a.total() != b.total()) return a.total() < b.total();
        if (a.x != b.x) return a.x > b.x;
        return a.y > b.y;
    }
    bool operator()(Monomial a, Monomial b) const { return greater(a, b); }
};

// Global degree-lex order (largest degree first), used where a well-founded
// order is needed: exact division and canonical printing.
struct GlobalTermOrder {
    static bool greater(Monomial a, Monomial b) {
        if (a.total() != b.total()) return a.total() > b.total();
        if (a.x != b.x) return a.x > b.x;
        return a.y > b.y;
    }
    bool operator()(Monomial a, Monomial b) const { return greater(a, b); }
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rat, LocalTermOrder>;

    Poly() = default;

    static Poly constant(const Rat& c);
    static Poly var_x() { return term({1, 0}, 1); }
    static Poly var_y() { return term({0, 1}, 1); }
    static Poly term(Monomial m, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of m; zero when absent.
    Rat coeff(Monomial m) const;
    Rat constant_term() const { return coeff({0, 0}); }
    bool vanishes_at_origin() const { return constant_term() == 0; }

    // Minimal total degree of a term; nullopt for the zero polynomial.
    std::optional<std::uint32_t> ord() const;
    // Maximal total degree (0 for the zero polynomial).
    std::uint32_t degree() const;
    std::uint32_t degree_x() const;
    std::uint32_t degree_y() const;
    // Smallest x-exponent over all terms (0 for the zero polynomial).
    std::uint32_t min_exponent_x() const;
    std::uint32_t min_exponent_y() const;

    // Leading data w.r.t. the local order; both require a nonzero value.
    Monomial leading_monomial() const;
    const Rat& leading_coeff() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator*(const Poly& o) const;
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rat& c) const;
    // this * c * m, the workhorse of reduction loops.
    Poly times_term(Monomial m, const Rat& c) const;
    Poly pow(std::uint32_t n) const;

    Poly dx() const;
    Poly dy() const;

    // Simultaneous substitution x <- ux, y <- vy.
    Poly substitute(const Poly& ux, const Poly& vy) const;
    // Divide every term by x^k (resp. y^k); requires divisibility.
    Poly shift_down_x(std::uint32_t k) const;
    Poly shift_down_y(std::uint32_t k) const;

    bool operator==(const Poly& o) const = default;

    // Builder access: adds c*m, erasing the slot if the sum cancels.
    void add_term(Monomial m, const Rat& c);

private:
    TermMap terms_;
};

std::optional<std::uint32_t> ord_at_origin(const Poly& f);

struct HomogeneousForm {
    std::uint32_t degree = 0;
    // coeffs[i] multiplies x^i y^(degree - i); size degree + 1.
    std::vector<Rat> coeffs;

    Poly to_poly() const;
    bool operator==(const HomogeneousForm&) const = default;
};

// Sum of the terms of minimal total degree.  Throws ZeroPolynomial on 0.
HomogeneousForm lowest_form(const Poly& f);

// Decides whether form = c*(a*x + b*y)^degree and returns (a, b) with the
// leading nonzero entry normalized to 1.  Throws NotUnitangent otherwise.
std::pair<Rat, Rat> unitangent_root(const HomogeneousForm& form);

// Exact quotient f / g; throws NotDivisible when no polynomial quotient
// exists and ZeroPolynomial when g = 0.
Poly exact_divide(const Poly& f, const Poly& g);

// Polynomial gcd over Q[x,y], normalized so the global leading coefficient
// is 1.  gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);

// No repeated nonconstant factor (characteristic zero test via gcd with
// both partials).  Requires f != 0.
bool is_squarefree(const Poly& f);

// True when f = g * h for some h, i.e. exact_divide succeeds.
bool divides(const Poly& g, const Poly& f);

} // namespace folinv
