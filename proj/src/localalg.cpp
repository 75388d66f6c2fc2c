#include "folinv/localalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace folinv {

LocalIdeal LocalIdeal::of(std::vector<Poly> gens) {
    if (gens.empty()) throw InvalidInput("ideal needs at least one generator");
    LocalIdeal ideal;
    for (auto& g : gens)
        if (!g.is_zero()) ideal.generators.push_back(std::move(g));
    return ideal;
}

namespace {

std::uint32_t ecart(const Poly& f) {
    return f.degree() - f.leading_monomial().total();
}

// Primitive integer representative with positive leading coefficient: the
// canonical scaling that keeps pseudo-reduction chains from blowing up.
Poly make_primitive(const Poly& f) {
    if (f.is_zero()) return f;
    Int denom = 1;
    for (const auto& [m, c] : f.terms()) denom = ::lcm(denom, Int(c.get_den()));
    Int content = 0;
    for (const auto& [m, c] : f.terms()) content = ::gcd(content, Int(Rat(c * denom).get_num()));
    Rat scale = rat_from_parts(denom, content);
    if (f.leading_coeff() < 0) scale = -scale;
    return f.scaled(scale);
}

// Cross-multiplied reduction step: cancels the leading term of h against g
// using integer scalars only.  Both inputs are primitive-integer.
Poly reduce_step(const Poly& h, const Poly& g) {
    Rat ratio = h.leading_coeff() / g.leading_coeff();
    Int p = ratio.get_num(), q = ratio.get_den();
    Poly r = h.scaled(Rat(q)) - g.times_term(h.leading_monomial() / g.leading_monomial(), Rat(p));
    return make_primitive(r);
}

Poly s_polynomial(const Poly& f, const Poly& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Rat ratio = f.leading_coeff() / g.leading_coeff();
    Poly a = f.times_term(l / f.leading_monomial(), Rat(ratio.get_den()));
    Poly b = g.times_term(l / g.leading_monomial(), Rat(ratio.get_num()));
    return make_primitive(a - b);
}

// Single-term pool elements kill every multiple of their monomial; stripping
// those multiples keeps the tails short without changing the ideal class.
void strip_by_monomials(Poly& h, const std::vector<Monomial>& pure) {
    if (pure.empty() || h.is_zero()) return;
    Poly cleaned;
    for (const auto& [m, c] : h.terms()) {
        bool killed = false;
        for (Monomial p : pure)
            if (p.divides(m)) {
                killed = true;
                break;
            }
        if (!killed) cleaned.add_term(m, c);
    }
    h = std::move(cleaned);
}

} // namespace

Poly mora_normal_form(Poly h, const std::vector<Poly>& reducers) {
    std::vector<const Poly*> pool;
    std::vector<Monomial> pure; // leading monomials of single-term reducers
    pool.reserve(reducers.size());
    for (const auto& g : reducers) {
        if (g.is_zero()) continue;
        pool.push_back(&g);
        if (g.term_count() == 1) pure.push_back(g.leading_monomial());
    }
    std::deque<Poly> added; // intermediate reducers; deque keeps addresses stable

    h = make_primitive(h);
    strip_by_monomials(h, pure);
    std::uint64_t guard = 0;
    while (!h.is_zero()) {
        if (++guard > 2'000'000) throw InternalError("Mora normal form runaway");
#ifdef FOLINV_MORA_TRACE
        if (guard % 100 == 0) {
            std::size_t bits = 0;
            for (const auto& [m, c] : h.terms())
                bits = std::max(bits, mpz_sizeinbase(c.get_num().get_mpz_t(), 2));
            std::fprintf(stderr, "[mora] step %llu pool %zu terms %zu deg %u maxbits %zu\n",
                         (unsigned long long)guard, pool.size(), h.term_count(), h.degree(),
                         bits);
        }
#endif
        Monomial lm = h.leading_monomial();
        const Poly* best = nullptr;
        std::uint32_t best_ecart = 0;
        for (const Poly* g : pool) {
            if (!g->leading_monomial().divides(lm)) continue;
            std::uint32_t e = ecart(*g);
            if (!best || e < best_ecart ||
                (e == best_ecart && g->term_count() < best->term_count())) {
                best = g;
                best_ecart = e;
            }
        }
        if (!best) return h;
        if (best_ecart > ecart(h)) {
            added.push_back(h);
            pool.push_back(&added.back());
        }
        h = reduce_step(h, *best);
        strip_by_monomials(h, pure);
    }
    return h;
}

StandardBasis standard_basis(const LocalIdeal& ideal) {
    StandardBasis basis;
    std::vector<Poly>& S = basis.elements;
    for (const auto& g : ideal.generators) S.push_back(make_primitive(g));
    if (S.empty()) return basis;

    // S-pair queue keyed by (lcm degree, creation order) for determinism.
    struct Pair {
        std::uint32_t deg;
        std::uint64_t serial;
        std::size_t i, j;
        bool operator<(const Pair& o) const {
            return deg != o.deg ? deg < o.deg : serial < o.serial;
        }
    };
    std::set<Pair> queue;
    std::uint64_t serial = 0;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(S[i].leading_monomial(), S[j].leading_monomial());
            queue.insert({l.total(), serial++, i, j});
        }
    };
    for (std::size_t j = 1; j < S.size(); ++j) push_pairs(j);

    std::uint64_t guard = 0;
    while (!queue.empty()) {
        if (++guard > 200'000) throw InternalError("standard basis runaway");
#ifdef FOLINV_MORA_TRACE
        if (guard % 50 == 0) {
            const Poly& last = S.back();
            std::size_t bits = 0;
            for (const auto& [m, c] : last.terms())
                bits = std::max(bits, mpz_sizeinbase(c.get_num().get_mpz_t(), 2));
            std::fprintf(stderr,
                         "[sb] pair %llu queue %zu basis %zu lastLT (%u,%u) terms %zu bits %zu\n",
                         (unsigned long long)guard, queue.size(), S.size(),
                         last.leading_monomial().x, last.leading_monomial().y,
                         last.term_count(), bits);
        }
#endif
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        Monomial mi = S[p.i].leading_monomial();
        Monomial mj = S[p.j].leading_monomial();
        // Product criterion: coprime leading monomials reduce to zero.
        if (Monomial::lcm(mi, mj) == mi * mj) continue;
        Poly h = mora_normal_form(s_polynomial(S[p.i], S[p.j]), S);
        if (h.is_zero()) continue;
        S.push_back(make_primitive(h));
        push_pairs(S.size() - 1);
    }

    // Lead interreduction: drop elements whose leading term is divisible by
    // another's; equal leading terms keep the earliest element.
    std::vector<Poly> kept;
    for (std::size_t i = 0; i < S.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < S.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial mi = S[i].leading_monomial();
            Monomial mj = S[j].leading_monomial();
            if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
        }
        if (!redundant) kept.push_back(S[i]);
    }
    basis.elements = std::move(kept);
    return basis;
}

std::optional<std::uint64_t> colength(const StandardBasis& basis) {
    if (basis.elements.empty()) return std::nullopt; // zero ideal
    std::vector<Monomial> lead;
    for (const auto& g : basis.elements) {
        Monomial m = g.leading_monomial();
        if (m.is_one()) return 0;
        lead.push_back(m);
    }
    // Finite staircase needs a pure power of x and a pure power of y.
    std::uint32_t bound_x = kMaxExponent, bound_y = kMaxExponent;
    for (Monomial m : lead) {
        if (m.y == 0) bound_x = std::min(bound_x, m.x);
        if (m.x == 0) bound_y = std::min(bound_y, m.y);
    }
    if (bound_x == kMaxExponent || bound_y == kMaxExponent) return std::nullopt;
    std::uint64_t count = 0;
    for (std::uint32_t i = 0; i < bound_x; ++i)
        for (std::uint32_t j = 0; j < bound_y; ++j) {
            Monomial m{i, j};
            bool inside = false;
            for (Monomial l : lead)
                if (l.divides(m)) {
                    inside = true;
                    break;
                }
            if (!inside) ++count;
        }
    return count;
}

std::optional<std::uint64_t> colength(const LocalIdeal& ideal) {
    return colength(standard_basis(ideal));
}

// ---- truncation oracle --------------------------------------------------

namespace {

// Sparse integer row: sorted (column, coefficient) pairs.
using Row = std::vector<std::pair<std::uint32_t, Int>>;

void normalize_row(Row& row) {
    Int content = 0;
    for (const auto& [c, v] : row) content = ::gcd(content, v);
    if (content == 0) {
        row.clear();
        return;
    }
    if (row.front().second < 0) content = -content;
    for (auto& [c, v] : row) v /= content;
}

// row := pivot_lead * row - row_lead * pivot (leading columns cancel).
Row eliminate(const Row& row, const Row& pivot) {
    const Int a = pivot.front().second;
    const Int b = row.front().second;
    Row out;
    out.reserve(row.size() + pivot.size());
    auto it = row.begin();
    auto jt = pivot.begin();
    while (it != row.end() || jt != pivot.end()) {
        if (jt == pivot.end() || (it != row.end() && it->first < jt->first)) {
            out.emplace_back(it->first, it->second * a);
            ++it;
        } else if (it == row.end() || jt->first < it->first) {
            out.emplace_back(jt->first, -(jt->second * b));
            ++jt;
        } else {
            Int v = it->second * a - jt->second * b;
            if (v != 0) out.emplace_back(it->first, std::move(v));
            ++it;
            ++jt;
        }
    }
    normalize_row(out);
    return out;
}

} // namespace

std::uint64_t truncated_quotient_dim(const LocalIdeal& ideal, std::uint32_t k) {
    // Column index of every monomial of total degree < k, lowest degree
    // first so pivots align with the local staircase.
    std::map<Monomial, std::uint32_t, LocalTermOrder> columns;
    {
        std::uint32_t idx = 0;
        for (std::uint32_t d = 0; d < k; ++d)
            for (std::uint32_t i = d + 1; i-- > 0;) columns.emplace(Monomial{i, d - i}, idx++);
    }
    const std::uint64_t total = columns.size();

    std::map<std::uint32_t, Row> pivots;
    std::uint64_t rank = 0;
    for (const auto& g : ideal.generators) {
        std::uint32_t og = g.ord() ? *g.ord() : k;
        if (og >= k) continue;
        // Clear denominators of g once.
        Int denom = 1;
        for (const auto& [m, c] : g.terms()) denom = ::lcm(denom, Int(c.get_den()));
        for (std::uint32_t a = 0; a + og < k; ++a) {
            for (std::uint32_t b = 0; a + b + og < k; ++b) {
                Row row;
                for (const auto& [m, c] : g.terms()) {
                    if (m.total() + a + b >= k) continue;
                    Rat scaled = c * denom;
                    row.emplace_back(columns.at(Monomial{m.x + a, m.y + b}), Int(scaled.get_num()));
                }
                std::sort(row.begin(), row.end(),
                          [](const auto& l, const auto& r) { return l.first < r.first; });
                normalize_row(row);
                while (!row.empty()) {
                    auto it = pivots.find(row.front().first);
                    if (it == pivots.end()) {
                        pivots.emplace(row.front().first, std::move(row));
                        ++rank;
                        break;
                    }
                    row = eliminate(row, it->second);
                }
            }
        }
    }
    return total - rank;
}

std::optional<std::uint64_t> colength_oracle(const LocalIdeal& ideal, OracleOptions opts) {
    if (ideal.generators.empty()) return std::nullopt; // zero ideal
    // Exact finiteness test: the quotient is infinite-dimensional exactly
    // when every generator is divisible by a common factor vanishing at the
    // origin, i.e. when the polynomial gcd of the generators vanishes there.
    Poly g = ideal.generators.front();
    for (std::size_t i = 1; i < ideal.generators.size() && g.degree() > 0; ++i)
        g = gcd(g, ideal.generators[i]);
    if (g.degree() > 0 && g.vanishes_at_origin()) return std::nullopt;

    std::uint32_t min_ord = kMaxExponent;
    for (const auto& gen : ideal.generators) min_ord = std::min(min_ord, *gen.ord());
    std::uint32_t k0 = 2 * min_ord + 2;

    std::uint64_t prev = 0;
    bool have_prev = false;
    for (std::uint32_t step = 0; step < opts.cap; ++step) {
        std::uint64_t dim = truncated_quotient_dim(ideal, k0 + step);
        if (have_prev && dim == prev) return dim;
        prev = dim;
        have_prev = true;
    }
    throw CapExceeded("colength oracle undecided within the truncation cap");
}

std::optional<std::uint64_t> intersection_multiplicity(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) return std::nullopt;
    return colength(LocalIdeal::of({f, g}));
}

} // namespace folinv
