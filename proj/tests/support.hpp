// Shared helpers for the unit and acceptance suites: deterministic corpus
// generators, parsing shorthands, and a small structural validator for the
// shipped JSON schemas.
#pragma once

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "folinv/foliation.hpp"
#include "folinv/localalg.hpp"
#include "folinv/parse.hpp"
#include "folinv/poly.hpp"
#include "folinv/puiseux.hpp"

namespace testsupport {

inline folinv::Poly P(const std::string& text) { return folinv::parse_polynomial(text); }

// ---- deterministic generator corpus -------------------------------------

struct CatalogBranch {
    folinv::Poly f;
    bool smooth = false;
    std::string name;
};

// Certified irreducible branches: quasihomogeneous cusps y^a - x^b with
// gcd(a, b) = 1, perturbations above their Newton segment, and smooth
// graphs y - x^k.
inline std::vector<CatalogBranch> branch_catalog() {
    std::vector<CatalogBranch> out;
    const std::pair<int, int> cusps[] = {{2, 3}, {2, 5}, {2, 7}, {3, 4},
                                          {3, 5}, {4, 5}, {5, 6}, {3, 7}};
    for (auto [a, b] : cusps) {
        folinv::Poly f = P("y^" + std::to_string(a) + " - x^" + std::to_string(b));
        out.push_back({f, false, "cusp_" + std::to_string(a) + "_" + std::to_string(b)});
    }
    // Perturbations that keep the Newton segment (hence the certificate).
    out.push_back({P("y^2 - x^5 + x^4*y"), false, "perturbed_2_5"});
    out.push_back({P("y^3 - x^7 + x^5*y"), false, "perturbed_3_7"});
    out.push_back({P("y^3 - x^4 + x^3*y + x^2*y^2"), false, "perturbed_3_4"});
    out.push_back({P("y^4 - x^5 + x^4*y^2"), false, "perturbed_4_5"});
    for (int k = 1; k <= 4; ++k)
        out.push_back({P("y - x^" + std::to_string(k)), true, "smooth_" + std::to_string(k)});
    out.push_back({P("x - y^3"), true, "smooth_vertical"});
    return out;
}

struct CatalogPair {
    folinv::Foliation F;
    folinv::Separatrix B;
    std::string name;
};

inline folinv::Poly random_small_poly(std::mt19937_64& rng, int max_deg, int max_terms,
                                      bool vanish_at_origin) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(vanish_at_origin ? 1 : 0, max_deg);
    folinv::Poly f;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        int d = deg(rng);
        std::uniform_int_distribution<int> split(0, d);
        int i = split(rng);
        int c = coeff(rng);
        if (c == 0) c = 1;
        f.add_term({std::uint32_t(i), std::uint32_t(d - i)}, folinv::Rat(c));
    }
    return f;
}

// Pairs omega = h*df + f*eta with f from the catalog; h is a unit for
// singular branches and a small non-unit for smooth ones so the foliation
// stays singular at the origin.  Deterministic via the seed.
inline std::vector<CatalogPair> generated_pairs(std::size_t per_branch, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CatalogPair> out;
    for (const CatalogBranch& br : branch_catalog()) {
        std::size_t made = 0;
        std::size_t attempts = 0;
        while (made < per_branch && attempts < 200) {
            ++attempts;
            folinv::Poly h;
            if (br.smooth) {
                h = random_small_poly(rng, 2, 2, true); // non-unit factor
                if (h.is_zero()) continue;
            } else {
                h = folinv::Poly::constant(1) + random_small_poly(rng, 2, 2, true);
            }
            folinv::Poly eta_p = random_small_poly(rng, 2, 2, false);
            folinv::Poly eta_q = random_small_poly(rng, 2, 2, false);
            folinv::Poly Pc = h * br.f.dx() + br.f * eta_p;
            folinv::Poly Qc = h * br.f.dy() + br.f * eta_q;
            try {
                folinv::Foliation F = folinv::Foliation::make(Pc, Qc);
                if (F.algebraic_multiplicity() == 0) continue;
                folinv::separatrix_cofactor(F, br.f);
                out.push_back({F,
                               folinv::Separatrix::make(br.f, folinv::Irreducibility::Certified),
                               br.name + "#" + std::to_string(made)});
                ++made;
            } catch (const folinv::Error&) {
                continue;
            }
        }
    }
    return out;
}

// Random ideals for the oracle-equivalence suite; finite colength is
// enforced with the staircase test and a size bound keeps the truncation
// runs cheap.
inline std::vector<std::vector<folinv::Poly>> random_zero_dim_ideals(std::size_t count,
                                                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<folinv::Poly>> out;
    std::uniform_int_distribution<int> exp_a(1, 8), gens3(0, 2);
    std::size_t attempts = 0;
    while (out.size() < count && ++attempts < 50 * count) {
        std::vector<folinv::Poly> gens;
        int shape = gens3(rng);
        if (shape == 0) {
            // monomial corners with noise: staircase-friendly, always finite
            int a = exp_a(rng), b = exp_a(rng);
            gens.push_back(folinv::Poly::term({std::uint32_t(a), 0}, 1) +
                           random_small_poly(rng, std::min(a + b, 8), 2, true));
            gens.push_back(folinv::Poly::term({0, std::uint32_t(b)}, 1) +
                           random_small_poly(rng, std::min(a + b, 8), 2, true));
        } else {
            gens.push_back(random_small_poly(rng, 8, 4, true));
            gens.push_back(random_small_poly(rng, 8, 4, true));
            if (shape == 2) gens.push_back(random_small_poly(rng, 8, 3, true));
        }
        bool bad = false;
        for (const auto& g : gens) bad = bad || g.is_zero();
        if (bad) continue;
        auto len = folinv::colength(folinv::LocalIdeal::of(gens));
        if (!len || *len == 0 || *len > 40) continue; // keep the oracle cheap
        out.push_back(std::move(gens));
    }
    return out;
}

// ---- minimal JSON-schema checks ------------------------------------------

// Structural validation covering the subset of JSON Schema used by the
// shipped files: type (single or list), required, properties, items, enum.
inline bool validate_schema(const nlohmann::json& value, const nlohmann::json& schema,
                            std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (schema.contains("type")) {
        const auto& ty = schema.at("type");
        auto matches = [&](const std::string& t) {
            if (t == "object") return value.is_object();
            if (t == "array") return value.is_array();
            if (t == "string") return value.is_string();
            if (t == "integer") return value.is_number_integer();
            if (t == "number") return value.is_number();
            if (t == "boolean") return value.is_boolean();
            if (t == "null") return value.is_null();
            return false;
        };
        bool ok = false;
        if (ty.is_string()) ok = matches(ty.get<std::string>());
        else
            for (const auto& t : ty) ok = ok || matches(t.get<std::string>());
        if (!ok) return fail("type mismatch: " + value.dump());
        if (value.is_null()) return true; // nullable object: nothing more to check
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& e : schema.at("enum")) ok = ok || (e == value);
        if (!ok) return fail("enum mismatch: " + value.dump());
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!value.contains(key.get<std::string>()))
                    return fail("missing required key " + key.get<std::string>());
        if (schema.contains("properties"))
            for (const auto& [key, sub] : schema.at("properties").items())
                if (value.contains(key) && !validate_schema(value.at(key), sub, why))
                    return false;
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& item : value)
            if (!validate_schema(item, schema.at("items"), why)) return false;
    return true;
}

} // namespace testsupport
