#include "folinv/puiseux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace folinv {

NewtonPolygon newton_polygon(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("newton polygon of zero");
    if (!f.vanishes_at_origin())
        throw InvalidInput("newton polygon expects a germ vanishing at the origin");
    // Candidate vertices: for each x-exponent keep the least y-exponent.
    std::map<std::uint32_t, std::uint32_t> lowest;
    for (const auto& [m, c] : f.terms()) {
        auto [it, inserted] = lowest.emplace(m.x, m.y);
        if (!inserted) it->second = std::min(it->second, m.y);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pts(lowest.begin(), lowest.end());
    // Lower-left hull by the monotone chain over points sorted in x.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> hull;
    auto cross = [](auto o, auto a, auto b) {
        return (std::int64_t(a.first) - o.first) * (std::int64_t(b.second) - o.second) -
               (std::int64_t(a.second) - o.second) * (std::int64_t(b.first) - o.first);
    };
    for (auto p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    // Trailing points with non-decreasing y belong to the vertical shadow,
    // not the compact boundary; the chain above already discards them via
    // the convexity test because y strictly decreases along the hull.
    NewtonPolygon np;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        auto a = hull[i];
        auto b = hull[i + 1];
        if (a.second <= b.second) continue;
        NewtonSegment seg;
        seg.from = a;
        seg.to = b;
        seg.inclination = rat_from_parts(Int(b.first - a.first), Int(a.second - b.second));
        np.segments.push_back(std::move(seg));
    }
    return np;
}

namespace {

// One rational Newton-Puiseux step.  The polygon must be a single segment
// (0, a) -- (b, 0); with e = gcd(a, b), m = a/e, n = b/e the equation on
// the segment is phi(w) = sum c_k w^{e-k} in w = (y/x^{n/m})^m.
struct SegmentData {
    std::uint32_t a = 0, b = 0, e = 0, m = 0, n = 0;
    std::vector<Rat> phi; // phi[i] = coefficient of w^i, degree e
};

enum class StepOutcome { Smooth, Reducible, Irrational, Continue };

StepOutcome analyze(const Poly& f, SegmentData& out) {
    if (*f.ord() == 1) return StepOutcome::Smooth;
    // An axis factor together with anything else splits the germ.
    if (f.min_exponent_x() >= 1 || f.min_exponent_y() >= 1) return StepOutcome::Reducible;
    NewtonPolygon np = newton_polygon(f);
    if (np.segments.size() != 1) return StepOutcome::Reducible;
    const NewtonSegment& seg = np.segments.front();
    if (seg.from.first != 0 || seg.to.second != 0)
        return StepOutcome::Reducible; // does not join the two axes
    out.a = seg.from.second;
    out.b = seg.to.first;
    out.e = std::gcd(out.a, out.b);
    out.m = out.a / out.e;
    out.n = out.b / out.e;
    out.phi.assign(out.e + 1, Rat(0));
    for (const auto& [mono, c] : f.terms()) {
        // Lattice points on the segment are (k*n, (e-k)*m), k = 0..e.
        if (std::uint64_t(mono.x) * out.a + std::uint64_t(mono.y) * out.b !=
            std::uint64_t(out.a) * out.b)
            continue;
        std::uint32_t k = mono.x / out.n;
        out.phi[out.e - k] = c;
    }
    return StepOutcome::Continue;
}

// phi = c*(w - r)^e test; r is forced by the subleading coefficient.
bool is_perfect_power(const std::vector<Rat>& phi, Rat& root) {
    std::uint32_t e = phi.size() - 1;
    const Rat& lead = phi[e];
    root = -phi[e - 1] / (Rat(e) * lead);
    Rat binom(1);
    for (std::uint32_t i = 0; i <= e; ++i) {
        // coefficient of w^{e-i} in (w - r)^e is C(e,i)(-r)^i
        if (phi[e - i] != lead * binom * rat_pow(-root, i)) return false;
        binom *= Rat(e - i);
        binom /= Rat(i + 1);
    }
    return true;
}

// Count distinct rational roots of phi (degree <= a few dozen) by trial
// division with the rational root bound on a primitive integer form.
std::size_t rational_root_count(const std::vector<Rat>& phi) {
    // Clear denominators.
    Int denom = 1;
    for (const Rat& c : phi) denom = ::lcm(denom, Int(c.get_den()));
    std::vector<Int> ic;
    ic.reserve(phi.size());
    for (const Rat& c : phi) ic.push_back(Int(Rat(c * denom).get_num()));
    while (!ic.empty() && ic.back() == 0) ic.pop_back();
    // Strip content.
    Int content = 0;
    for (const Int& v : ic) content = ::gcd(content, v);
    for (Int& v : ic) v /= content;

    // Roots are nonzero here (both segment endpoints are present), so
    // candidates are ±p/q with p | ic[0], q | ic.back().
    auto divisors = [](Int v) {
        v = abs(v);
        std::vector<Int> ds;
        for (Int d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                if (d * d != v) ds.push_back(v / d);
            }
        return ds;
    };
    auto evaluates_to_zero = [&](const Rat& r) {
        Rat acc(0);
        for (std::size_t i = ic.size(); i-- > 0;) acc = acc * r + Rat(ic[i]);
        return acc == 0;
    };
    std::set<Rat> roots;
    for (const Int& p : divisors(ic.front()))
        for (const Int& q : divisors(ic.back())) {
            Rat r = rat_from_parts(p, q);
            if (evaluates_to_zero(r)) roots.insert(r);
            if (evaluates_to_zero(-r)) roots.insert(-r);
        }
    return roots.size();
}

BranchCertificate certify_rec(Poly f, std::uint32_t depth) {
    if (depth > 128) return BranchCertificate::Unknown;
    SegmentData seg;
    switch (analyze(f, seg)) {
        case StepOutcome::Smooth: return BranchCertificate::Yes;
        case StepOutcome::Reducible: return BranchCertificate::No;
        case StepOutcome::Irrational: return BranchCertificate::Unknown;
        case StepOutcome::Continue: break;
    }
    if (seg.e == 1) return BranchCertificate::Yes; // one characteristic pair left

    Rat w0;
    if (is_perfect_power(seg.phi, w0)) {
        Rat z0 = w0;
        if (seg.m > 1 && !rat_nth_root(w0, seg.m, z0)) return BranchCertificate::Unknown;
        // Zoom in along y = z0 * x^{n/m}: substitute x = t^m, y = t^n(z0 + y1)
        // and divide by t^{a*n}.
        Poly t_m = Poly::term({seg.m, 0}, 1);
        Poly t_n_shift = Poly::term({seg.n, 0}, 1) *
                         (Poly::var_y() + Poly::constant(z0));
        Poly g = f.substitute(t_m, t_n_shift).shift_down_x(seg.a * seg.n);
        return certify_rec(std::move(g), depth + 1);
    }
    // Not a single root: any rational root detected certifies a visible
    // splitting; otherwise deciding needs an extension field.
    return rational_root_count(seg.phi) >= 1 ? BranchCertificate::No
                                             : BranchCertificate::Unknown;
}

} // namespace

BranchCertificate certify_branch(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("branch certificate of zero");
    if (!f.vanishes_at_origin())
        throw InvalidInput("branch certificate expects a germ vanishing at the origin");
    return certify_rec(f, 0);
}

Parametrization Parametrization::make(Poly x_series, Poly y_series,
                                      std::uint32_t truncation) {
    if (x_series.is_zero() && y_series.is_zero())
        throw InvalidInput("parametrization must have a nonzero component");
    for (const Poly* s : {&x_series, &y_series}) {
        if (!s->is_zero() && *s->ord() == 0)
            throw InvalidInput("parametrization components must vanish at t = 0");
        if (s->degree_y() != 0)
            throw InvalidInput("series use the single variable t");
    }
    std::uint32_t g = 0;
    for (const Poly* s : {&x_series, &y_series})
        for (const auto& [m, c] : s->terms()) g = std::gcd(g, m.x);
    if (g != 1)
        throw NotPrimitive("parametrization is a reparametrization by t^" + std::to_string(g));
    return Parametrization{std::move(x_series), std::move(y_series), truncation};
}

bool verify_parametrization(const Poly& f, const Parametrization& gamma) {
    Poly pulled = f.substitute(gamma.x_series, gamma.y_series);
    for (const auto& [m, c] : pulled.terms())
        if (m.x <= gamma.truncation) return false;
    return true;
}

std::uint32_t default_truncation(const Poly& f) {
    auto o = f.ord();
    if (!o) throw ZeroPolynomial("truncation bound of zero");
    return 4 * *o * f.degree();
}

std::uint64_t mult_via_parametrization(const Foliation& F, const Parametrization& gamma) {
    const bool use_x = !gamma.x_series.is_zero();
    const Poly& component = use_x ? F.q() : F.p();
    const Poly& coordinate = use_x ? gamma.x_series : gamma.y_series;
    Poly pulled = component.substitute(gamma.x_series, gamma.y_series);
    auto o = pulled.ord();
    if (!o || *o > gamma.truncation)
        throw TruncationInsufficient(
            "pulled-back component vanishes through the truncation order");
    std::int64_t v = static_cast<std::int64_t>(*o) -
                     static_cast<std::int64_t>(*coordinate.ord()) + 1;
    if (v < 0) throw InternalError("negative order along the parametrization");
    return static_cast<std::uint64_t>(v);
}

} // namespace folinv
