#include "folinv/blowup.hpp"

#include <sstream>

#include "folinv/parse.hpp"

namespace folinv {

namespace {

// Pullback of omega through the chart map with a translated center, strict
// components returned before division by the exceptional power.
struct Pullback {
    Poly dx_comp;
    Poly dy_comp;
};

Pullback pull_back(const Foliation& F, Chart chart, const Rat& center) {
    const Poly x = Poly::var_x();
    const Poly y = Poly::var_y();
    if (chart == Chart::Chart1) {
        // (x, y) -> (x, x*(y + c)):  dX = dx, dY = (y + c)dx + x dy
        Poly shift = y + Poly::constant(center);
        Poly X = x;
        Poly Y = x * shift;
        Poly P = F.p().substitute(X, Y);
        Poly Q = F.q().substitute(X, Y);
        return {P + shift * Q, x * Q};
    }
    // (x, y) -> ((x + c)*y, y):  dX = y dx + (x + c)dy, dY = dy
    Poly shift = x + Poly::constant(center);
    Poly X = shift * y;
    Poly Y = y;
    Poly P = F.p().substitute(X, Y);
    Poly Q = F.q().substitute(X, Y);
    return {y * P, shift * P + Q};
}

BlowupResult blowup_foliation_at(const Foliation& F, Chart chart, const Rat& center) {
    std::uint32_t nu = F.algebraic_multiplicity();
    if (nu == 0) throw RegularFoliation("blow-up needs a singular foliation");
    Pullback pb = pull_back(F, chart, center);

    std::uint32_t k;
    Poly sp, sq;
    bool exceptional_invariant;
    if (chart == Chart::Chart1) {
        k = std::min(pb.dx_comp.is_zero() ? kMaxExponent : pb.dx_comp.min_exponent_x(),
                     pb.dy_comp.is_zero() ? kMaxExponent : pb.dy_comp.min_exponent_x());
        sp = pb.dx_comp.shift_down_x(k);
        sq = pb.dy_comp.shift_down_x(k);
        // {x = 0} is invariant iff x divides the dy-component.
        exceptional_invariant = sq.is_zero() || sq.min_exponent_x() >= 1;
    } else {
        k = std::min(pb.dx_comp.is_zero() ? kMaxExponent : pb.dx_comp.min_exponent_y(),
                     pb.dy_comp.is_zero() ? kMaxExponent : pb.dy_comp.min_exponent_y());
        sp = pb.dx_comp.shift_down_y(k);
        sq = pb.dy_comp.shift_down_y(k);
        // {y = 0} is invariant iff y divides the dx-component.
        exceptional_invariant = sp.is_zero() || sp.min_exponent_y() >= 1;
    }

    if (k != nu && k != nu + 1)
        throw InternalError("divided power escaped {nu, nu+1}");
    bool dicritical = (k == nu + 1);
    if (dicritical == exceptional_invariant)
        throw InternalError("dicriticality tests disagree");

    BlowupResult res{chart, Foliation::make(std::move(sp), std::move(sq)), k, dicritical,
                     dicritical ? nu + 1 : nu, std::nullopt};
    return res;
}

} // namespace

BlowupResult blowup_foliation(const Foliation& F, Chart chart) {
    return blowup_foliation_at(F, chart, Rat(0));
}

BranchBlowup blowup_branch(const Poly& f) {
    auto o = f.ord();
    if (!o || *o == 0) throw InvalidInput("branch blow-up needs ord >= 1");
    auto [a, b] = unitangent_root(lowest_form(f));
    const Poly x = Poly::var_x();
    const Poly y = Poly::var_y();
    if (b == 0) {
        // Tangent line x = 0 lives in Chart2 at center 0.
        Poly strict = f.substitute(x * y, y).shift_down_y(*o);
        return {Chart::Chart2, Rat(0), std::move(strict)};
    }
    // Tangent line a*x + b*y = 0 has slope -a/b in Chart1.
    Rat center = -a / b;
    Poly strict = f.substitute(x, x * (y + Poly::constant(center))).shift_down_x(*o);
    return {Chart::Chart1, std::move(center), std::move(strict)};
}

PairBlowup blowup_pair(const Foliation& F, const Poly& f) {
    separatrix_cofactor(F, f); // invariance is a precondition
    BranchBlowup bb = blowup_branch(f);
    BlowupResult res = blowup_foliation_at(F, bb.chart, bb.center);
    res.center = bb.center;
    if (!is_invariant(res.strict_form, bb.strict))
        throw InternalError("strict branch lost invariance under blow-up");
    return {res.strict_form, std::move(bb.strict), std::move(res)};
}

ResolutionTrace resolve_branch(const Foliation& F, const Separatrix& B,
                               std::uint32_t max_steps) {
    ResolutionTrace trace;
    Foliation cur_F = F;
    Poly cur_f = B.equation;
    separatrix_cofactor(cur_F, cur_f);

    std::optional<ResolutionStep::Arrival> arrival;
    for (std::uint32_t step = 0;; ++step) {
        ResolutionStep rec{cur_F, cur_f, 0, 0, 0, 0, 0, std::nullopt};
        rec.branch_ord = *cur_f.ord();
        rec.mu = mult_foliation(cur_F, cur_f);
        rec.tau = tjurina_foliation(cur_F, cur_f);
        rec.gsv = static_cast<std::int64_t>(rec.tau) -
                  static_cast<std::int64_t>(tjurina_curve(cur_f));
        rec.phi = 3 * static_cast<std::int64_t>(rec.mu) -
                  4 * static_cast<std::int64_t>(rec.tau) + rec.gsv;
        rec.arrival = arrival;
        trace.steps.push_back(std::move(rec));

        if (*cur_f.ord() == 1) break;
        if (step == max_steps)
            throw MaxStepsExceeded("branch not smooth after the step limit");

        PairBlowup next = blowup_pair(cur_F, cur_f);
        arrival = ResolutionStep::Arrival{next.result.chart, *next.result.center,
                                          next.result.divided_power, next.result.dicritical,
                                          next.result.m_p};
        cur_F = std::move(next.foliation);
        cur_f = std::move(next.branch);
    }
    return trace;
}

nlohmann::json ResolutionTrace::to_json() const {
    nlohmann::json steps_json = nlohmann::json::array();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const ResolutionStep& s = steps[i];
        nlohmann::json j{
            {"index", i},
            {"dx", to_string(s.foliation.p())},
            {"dy", to_string(s.foliation.q())},
            {"branch", to_string(s.branch)},
            {"branch_ord", s.branch_ord},
            {"mu", s.mu},
            {"tau", s.tau},
            {"gsv", s.gsv},
            {"phi", s.phi},
        };
        if (s.arrival) {
            j["arrival"] = {
                {"chart", s.arrival->chart == Chart::Chart1 ? 1 : 2},
                {"center", rat_to_string(s.arrival->center)},
                {"divided_power", s.arrival->divided_power},
                {"dicritical", s.arrival->dicritical},
                {"m_p", s.arrival->m_p},
            };
        } else {
            j["arrival"] = nullptr;
        }
        steps_json.push_back(std::move(j));
    }
    return nlohmann::json{{"steps", std::move(steps_json)}};
}

std::string ResolutionTrace::to_dot() const {
    std::ostringstream os;
    os << "digraph resolution {\n  rankdir=LR;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const ResolutionStep& s = steps[i];
        os << "  p" << i << " [label=\"step " << i << "\\nord " << s.branch_ord << "\\nmu "
           << s.mu << " tau " << s.tau << " gsv " << s.gsv << "\\nphi " << s.phi << "\"];\n";
    }
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        const auto& a = steps[i + 1].arrival;
        os << "  p" << i << " -> p" << i + 1;
        if (a)
            os << " [label=\"chart " << (a->chart == Chart::Chart1 ? 1 : 2) << ", center "
               << rat_to_string(a->center) << ", k " << a->divided_power
               << (a->dicritical ? ", dicritical" : "") << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace folinv
