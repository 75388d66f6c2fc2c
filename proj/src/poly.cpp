#include "folinv/poly.hpp"

#include <algorithm>

namespace folinv {

namespace {

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= kMaxExponent) throw ExponentOverflow("monomial exponent overflow");
    return static_cast<std::uint32_t>(s);
}

} // namespace

Monomial Monomial::operator*(Monomial o) const {
    return {checked_add(x, o.x), checked_add(y, o.y)};
}

Monomial Monomial::operator/(Monomial o) const {
    if (!o.divides(*this)) throw InternalError("monomial division mismatch");
    return {x - o.x, y - o.y};
}

Monomial Monomial::lcm(Monomial a, Monomial b) {
    return {std::max(a.x, b.x), std::max(a.y, b.y)};
}

Poly Poly::constant(const Rat& c) { return term({0, 0}, c); }

Poly Poly::term(Monomial m, const Rat& c) {
    Poly p;
    p.add_term(m, c);
    return p;
}

void Poly::add_term(Monomial m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat Poly::coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<std::uint32_t> Poly::ord() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.total();
}

std::uint32_t Poly::degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
}

std::uint32_t Poly::degree_x() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
}

std::uint32_t Poly::degree_y() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.y);
    return d;
}

std::uint32_t Poly::min_exponent_x() const {
    std::uint32_t d = kMaxExponent;
    for (const auto& [m, c] : terms_) d = std::min(d, m.x);
    return terms_.empty() ? 0 : d;
}

std::uint32_t Poly::min_exponent_y() const {
    std::uint32_t d = kMaxExponent;
    for (const auto& [m, c] : terms_) d = std::min(d, m.y);
    return terms_.empty() ? 0 : d;
}

Monomial Poly::leading_monomial() const {
    if (terms_.empty()) throw ZeroPolynomial("leading monomial of zero");
    return terms_.begin()->first;
}

const Rat& Poly::leading_coeff() const {
    if (terms_.empty()) throw ZeroPolynomial("leading coefficient of zero");
    return terms_.begin()->second;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, k * c);
    return r;
}

Poly Poly::times_term(Monomial m, const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [mm, k] : terms_) r.add_term(mm * m, k * c);
    return r;
}

Poly Poly::pow(std::uint32_t n) const {
    Poly acc = Poly::constant(1);
    Poly base = *this;
    while (n) {
        if (n & 1) acc *= base;
        if (n >>= 1) base *= base;
    }
    return acc;
}

Poly Poly::dx() const {
    Poly r;
    for (const auto& [m, c] : terms_)
        if (m.x > 0) r.add_term({m.x - 1, m.y}, c * m.x);
    return r;
}

Poly Poly::dy() const {
    Poly r;
    for (const auto& [m, c] : terms_)
        if (m.y > 0) r.add_term({m.x, m.y - 1}, c * m.y);
    return r;
}

Poly Poly::substitute(const Poly& ux, const Poly& vy) const {
    // Cache the powers of both substituents once.
    std::vector<Poly> xp{Poly::constant(1)}, yp{Poly::constant(1)};
    xp.reserve(degree_x() + 1);
    yp.reserve(degree_y() + 1);
    for (std::uint32_t i = 1; i <= degree_x(); ++i) xp.push_back(xp.back() * ux);
    for (std::uint32_t j = 1; j <= degree_y(); ++j) yp.push_back(yp.back() * vy);
    Poly r;
    for (const auto& [m, c] : terms_) r += (xp[m.x] * yp[m.y]).scaled(c);
    return r;
}

Poly Poly::shift_down_x(std::uint32_t k) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m.x < k) throw NotDivisible("not divisible by the requested power of x");
        r.terms_.emplace(Monomial{m.x - k, m.y}, c);
    }
    return r;
}

Poly Poly::shift_down_y(std::uint32_t k) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m.y < k) throw NotDivisible("not divisible by the requested power of y");
        r.terms_.emplace(Monomial{m.x, m.y - k}, c);
    }
    return r;
}

std::optional<std::uint32_t> ord_at_origin(const Poly& f) { return f.ord(); }

Poly HomogeneousForm::to_poly() const {
    Poly p;
    for (std::uint32_t i = 0; i < coeffs.size(); ++i)
        p.add_term({i, degree - i}, coeffs[i]);
    return p;
}

HomogeneousForm lowest_form(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("lowest form of the zero polynomial");
    std::uint32_t d = *f.ord();
    HomogeneousForm form;
    form.degree = d;
    form.coeffs.assign(d + 1, Rat(0));
    for (const auto& [m, c] : f.terms()) {
        if (m.total() != d) break; // map is ordered by total degree first
        form.coeffs[m.x] = c;
    }
    return form;
}

std::pair<Rat, Rat> unitangent_root(const HomogeneousForm& form) {
    std::uint32_t d = form.degree;
    if (d == 0) throw NotUnitangent("degree zero form has no tangent");
    const Rat& cx = form.coeffs[d]; // coefficient of x^d
    if (cx == 0) {
        // A power of a linear form without x^d must be c*y^d.
        for (std::uint32_t i = 1; i <= d; ++i)
            if (form.coeffs[i] != 0)
                throw NotUnitangent("form is not a power of a single rational linear form");
        if (form.coeffs[0] == 0) throw NotUnitangent("zero form");
        return {Rat(0), Rat(1)};
    }
    // form = cx*(x + t*y)^d forces t = coeff(x^{d-1}y) / (d*cx).
    Rat t = form.coeffs[d - 1] / (Rat(d) * cx);
    Rat binom(1);
    for (std::uint32_t i = 0; i <= d; ++i) {
        // coefficient of x^{d-i} y^i in (x + t*y)^d is C(d,i) t^i
        if (form.coeffs[d - i] != cx * binom * rat_pow(t, i))
            throw NotUnitangent("form is not a power of a single rational linear form");
        binom *= Rat(d - i);
        binom /= Rat(i + 1);
    }
    return {Rat(1), t};
}

Poly exact_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (f.is_zero()) return Poly();

    // Work against the global order, where each cancellation strictly
    // lowers the remainder's leading term.
    std::map<Monomial, Rat, GlobalTermOrder> rem;
    for (const auto& [m, c] : f.terms()) rem.emplace(m, c);
    Monomial gm{0, 0};
    Rat gc;
    {
        std::map<Monomial, Rat, GlobalTermOrder> gt;
        for (const auto& [m, c] : g.terms()) gt.emplace(m, c);
        gm = gt.begin()->first;
        gc = gt.begin()->second;
    }

    Poly q;
    while (!rem.empty()) {
        Monomial lm = rem.begin()->first;
        if (!gm.divides(lm)) throw NotDivisible("no exact polynomial quotient");
        Monomial qm = lm / gm;
        Rat qc = rem.begin()->second / gc;
        q.add_term(qm, qc);
        for (const auto& [m, c] : g.terms()) {
            Monomial t = m * qm;
            auto [it, inserted] = rem.emplace(t, -c * qc);
            if (!inserted) {
                it->second -= c * qc;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return q;
}

bool divides(const Poly& g, const Poly& f) {
    try {
        exact_divide(f, g);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

namespace {

// ---- gcd machinery: primitive PRS in (Q[x])[y] -------------------------

// View of a polynomial as coefficients in y: index j -> x-only Poly.
std::map<std::uint32_t, Poly> y_coefficients(const Poly& f) {
    std::map<std::uint32_t, Poly> out;
    for (const auto& [m, c] : f.terms()) out[m.y].add_term({m.x, 0}, c);
    return out;
}

std::uint32_t deg_y(const Poly& f) { return f.degree_y(); }

// Univariate gcd over Q[x] (inputs are x-only), returned monic.
Poly univariate_gcd_x(Poly a, Poly b) {
    auto deg = [](const Poly& p) { return p.degree_x(); };
    auto lc = [&](const Poly& p) { return p.coeff({deg(p), 0}); };
    while (!b.is_zero()) {
        // a mod b by long division
        while (!a.is_zero() && deg(a) >= deg(b)) {
            Rat q = lc(a) / lc(b);
            a -= b.times_term({deg(a) - deg(b), 0}, q);
        }
        std::swap(a, b);
    }
    if (a.is_zero()) return a;
    return a.scaled(1 / lc(a));
}

Poly content_y(const Poly& f) {
    Poly c;
    for (const auto& [j, cf] : y_coefficients(f)) c = univariate_gcd_x(c, cf);
    return c;
}

Poly primitive_part_y(const Poly& f, const Poly& content) {
    if (f.is_zero()) return f;
    return exact_divide(f, content);
}

// Pseudo-remainder of a by b in (Q[x])[y]; deg_y(b) >= 1.
Poly pseudo_rem_y(Poly a, const Poly& b) {
    auto bc = y_coefficients(b);
    std::uint32_t db = deg_y(b);
    Poly lb = bc.rbegin()->second; // leading y-coefficient of b, in Q[x]
    std::uint32_t guard = 0;
    while (!a.is_zero() && deg_y(a) >= db) {
        if (++guard > 10000) throw InternalError("pseudo-division runaway");
        auto ac = y_coefficients(a);
        std::uint32_t da = deg_y(a);
        Poly la = ac.rbegin()->second;
        Poly shift = Poly::term({0, da - db}, 1);
        a = a * lb - b * shift * la;
    }
    return a;
}

} // namespace

Poly gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) return Poly();
    auto monic = [](const Poly& p) {
        std::map<Monomial, Rat, GlobalTermOrder> t;
        for (const auto& [m, c] : p.terms()) t.emplace(m, c);
        return p.scaled(1 / t.begin()->second);
    };
    if (f.is_zero()) return monic(g);
    if (g.is_zero()) return monic(f);

    if (deg_y(f) == 0 && deg_y(g) == 0) return univariate_gcd_x(f, g);
    if (deg_y(f) == 0) return univariate_gcd_x(f, content_y(g));
    if (deg_y(g) == 0) return univariate_gcd_x(g, content_y(f));

    Poly cf = content_y(f), cg = content_y(g);
    Poly c = univariate_gcd_x(cf, cg);
    Poly a = primitive_part_y(f, cf);
    Poly b = primitive_part_y(g, cg);
    if (deg_y(a) < deg_y(b)) std::swap(a, b);
    while (!b.is_zero() && deg_y(b) > 0) {
        Poly r = pseudo_rem_y(a, b);
        a = b;
        b = r.is_zero() ? r : primitive_part_y(r, content_y(r));
    }
    Poly pp = b.is_zero() ? a : Poly::constant(1);
    return monic(c * pp);
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree test on zero");
    Poly d = gcd(f, f.dx());
    d = gcd(d, f.dy());
    return d.degree() == 0;
}

} // namespace folinv
