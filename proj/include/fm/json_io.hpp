#pragma once

// JSON views of the core types. Rationals serialize as "p/q" strings (plain
// "p" when the denominator is 1); series and polynomials as coefficient
// arrays ascending by degree. Documents carry a "schema" name/version tag.

#include <json.hpp>

#include "fm/measures.hpp"
#include "fm/meixner.hpp"
#include "fm/operators.hpp"
#include "fm/polysys.hpp"

namespace fm {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& q) { return rat_str(q); }

inline Json to_json(const RatVec& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(rat_str(q));
    return a;
}

inline Json to_json(const Polynomial& p) { return Json{{"coeffs", to_json(p.coeffs())}}; }

inline Json to_json(const FormalPowerSeries& f) {
    return Json{{"coeffs", to_json(f.coeffs())}, {"order", f.order()}};
}

inline Json to_json(const MomentSequence& m) { return Json{{"moments", to_json(m.moments())}}; }

inline Json to_json(const JacobiParameters& j) {
    return Json{{"beta", to_json(j.beta())},
                {"gamma", to_json(j.gamma())},
                {"terminated", j.terminated()}};
}

inline Json to_json(const QuadExt& x) {
    if (x.is_rational()) return rat_str(x.a);
    return Json{{"rational", rat_str(x.a)},
                {"radical_coefficient", rat_str(x.b)},
                {"radicand", rat_str(x.D)},
                {"value", x.value()}};
}

inline Json to_json(const DensitySpec& ds) {
    Json atoms = Json::array();
    for (const auto& atom : ds.atoms)
        atoms.push_back(Json{{"location", to_json(atom.location)},
                             {"weight", to_json(atom.weight)},
                             {"location_value", atom.location.value()},
                             {"weight_value", atom.weight.value()}});
    Json out{{"radicand", to_json(RatVec(ds.radicand.begin(), ds.radicand.end()))},
             {"denominator", to_json(RatVec(ds.denominator.begin(), ds.denominator.end()))},
             {"has_ac", ds.has_ac},
             {"atoms", atoms}};
    if (ds.has_ac) {
        out["support"] = Json{{"lo", to_json(ds.support_lo)},
                              {"hi", to_json(ds.support_hi)},
                              {"lo_value", ds.support_lo.value()},
                              {"hi_value", ds.support_hi.value()}};
    }
    return out;
}

inline Json to_json(const BochnerOperator& op) {
    return Json{{"a", rat_str(op.a)}, {"b", rat_str(op.b)}, {"c", rat_str(op.c)},
                {"d", rat_str(op.d)}, {"e", rat_str(op.e)},
                {"two_measure", op.nu.has_value()}};
}

inline Json to_json(const EigenReport& rep) {
    Json levels = Json::array();
    for (const auto& lvl : rep.levels) {
        levels.push_back(Json{{"degree", lvl.degree},
                              {"eigenvalue", rat_str(lvl.eigenvalue)},
                              {"eigenfunction", to_json(lvl.eigenfunction.coeffs())},
                              {"residual", to_json(lvl.residual.coeffs())},
                              {"exists", lvl.exists},
                              {"degenerate", lvl.degenerate}});
    }
    Json out{{"alpha", rat_str(rep.alpha)}, {"all_exist", rep.all_exist}, {"levels", levels}};
    if (rep.closed_form_checked) {
        out["closed_form"] = Json{{"beta_match", rep.beta_match}, {"gamma_match", rep.gamma_match}};
    }
    return out;
}

inline Json to_json(const NullspaceReport& rep) {
    Json basis = Json::array();
    for (const auto& v : rep.basis) basis.push_back(to_json(v));
    return Json{{"dimension", rep.dimension()},
                {"basis", basis},
                {"linear_coefficient_residuals", to_json(rep.linear_coefficient_residuals)}};
}

inline RatVec rationals_from_csv(const std::string& text) {
    RatVec out;
    std::string token;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(parse_rational(token));
            token.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            token += ch;
        }
    }
    if (!token.empty()) out.push_back(parse_rational(token));
    return out;
}

}  // namespace fm
