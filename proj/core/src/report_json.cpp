#include "triplane/report_json.hpp"

#include "triplane/poly_io.hpp"

namespace triplane {

using nlohmann::json;

json to_json(const QPoly& p) { return format(p); }
json to_json(const HPoly& p) { return format(p); }

json to_json(const XHPoly& p) {
    auto split = split_ext(p.poly());
    json j;
    j["rational_part"] = format(split.rational_part);
    j["radical_part"] = format(split.radical_part);
    j["radicand"] = split.radicand.str();
    return j;
}

namespace {

json quadext_json(const QuadExt& q) {
    if (q.is_rational()) return to_string(q.as_rational());
    json j;
    j["rational_part"] = to_string(q.rational_part());
    j["radical_part"] = to_string(q.radical_coeff());
    j["radicand"] = q.radicand().str();
    return j;
}

} // namespace

json to_json(const XPlanePoint& p) { return json::array({quadext_json(p[0]), quadext_json(p[1]), quadext_json(p[2])}); }

json to_json(const PlanePoint& p) {
    return json::array({to_string(p[0]), to_string(p[1]), to_string(p[2])});
}

json to_json(const cover::BranchCurve& b) {
    json j;
    j["schema"] = 1;
    j["full"] = format(b.full);
    j["reduced"] = format(b.reduced);
    j["double_part"] = format(b.double_part);
    j["content"] = to_string(b.content);
    j["has_triple_component"] = b.has_triple_component;
    j["degree"] = b.full.degree() ? *b.full.degree() : -1;
    json factors = json::array();
    for (const auto& [f, e] : b.factors) factors.push_back({{"factor", format(f)}, {"exponent", e}});
    j["factors"] = factors;
    return j;
}

json to_json(const cover::DoubleBranchWitness& w) {
    json j;
    j["schema"] = 1;
    j["g"] = format(w.g);
    j["lambda"] = to_string(w.lambda);
    if (w.radicand)
        j["field"] = {{"type", "quadratic-extension"}, {"radicand", w.radicand->str()}};
    else
        j["field"] = {{"type", "rational"}};
    j["h"] = to_json(w.h);
    j["k"] = to_json(w.k);
    j["unit"] = quadext_json(w.unit);
    return j;
}

json to_json(const cover::PencilOfLines& p) {
    json j;
    j["schema"] = 1;
    j["center"] = to_json(p.center);
    json lines = json::array();
    for (const auto& [f, m] : p.lines)
        lines.push_back({{"factor", format(f)}, {"multiplicity", m}, {"degree", *f.degree()}});
    j["lines"] = lines;
    j["line_count_with_multiplicity"] = p.line_count_with_multiplicity();
    return j;
}

json to_json(const cover::CommonSquarePart& c) {
    json j;
    j["schema"] = 1;
    j["c"] = format(c.c);
    j["alpha"] = format(c.alpha);
    j["beta"] = format(c.beta);
    j["singular_locus_indicator"] = "z = c = beta = 0";
    return j;
}

json to_json(const sing::SingularityRecord& r) {
    json j;
    j["point"] = to_json(r.point);
    j["multiplicity"] = r.multiplicity;
    j["kind"] = sing::kind_name(r.kind, r.k);
    if (r.k) j["k"] = *r.k;
    return j;
}

json to_json(const sing::SingularCensus& c) {
    json j;
    j["schema"] = 1;
    j["completeness"] = c.completeness();
    j["extended"] = c.extended;
    j["aggregate_degree"] = c.aggregate_degree;
    j["reduced_input"] = c.reduced_input;
    j["cusp_count"] = c.cusp_count;
    j["cusp_count_certified"] = c.cusp_count_certified;
    json records = json::array();
    for (const auto& r : c.records) records.push_back(to_json(r));
    j["records"] = records;
    return j;
}

json to_json(const sing::CuspCensus& c) {
    json j;
    j["schema"] = 1;
    j["expected"] = c.expected;
    j["certified_transversal"] = c.certified_transversal;
    json pts = json::array();
    for (const auto& p : c.transversal_points) pts.push_back(to_json(p));
    j["transversal_points"] = pts;
    json corr = json::array();
    for (const auto& r : c.corrections) corr.push_back(to_json(r));
    j["corrections"] = corr;
    return j;
}

json to_json(const algebra::StructureConstants& sc, const algebra::DerivedABC& abc,
             const algebra::RelationResiduals& residuals) {
    json j;
    j["schema"] = 1;
    j["a"] = format(sc.a);
    j["b"] = format(sc.b);
    j["c"] = format(sc.c);
    j["d"] = format(sc.d);
    j["A"] = format(abc.A);
    j["B"] = format(abc.B);
    j["C"] = format(abc.C);
    j["D"] = format(abc.D);
    j["residuals"] = {{"A", format(residuals.res_A)},
                      {"B", format(residuals.res_B)},
                      {"C", format(residuals.res_C)}};
    j["residuals_all_zero"] = residuals.all_zero();
    return j;
}

json to_json(const algebra::FlexTangentReport& r) {
    json j;
    j["schema"] = 1;
    j["flex_configuration"] = r.flex_configuration;
    j["discriminant"] = format(r.discriminant);
    if (r.residual_cubic) j["residual_cubic"] = format(*r.residual_cubic);
    if (r.flex_point) j["flex_point"] = to_json(*r.flex_point);
    if (r.cusp_point) j["cusp_point"] = to_json(*r.cusp_point);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const linsys::LinearSystem& s) { return s.str(); }

json to_json(const linsys::NumericalInvariants& inv) {
    json j;
    j["virtual_dim"] = inv.virtual_dim;
    j["genus"] = inv.genus;
    j["self_int"] = inv.self_int;
    j["k_dot_c"] = inv.k_dot_c;
    return j;
}

json to_json(const linsys::EmptinessCertificate& c) {
    json j;
    j["schema"] = 1;
    j["empty"] = c.empty;
    j["reason"] = c.reason;
    json steps = json::array();
    for (const auto& s : c.chain) steps.push_back(s.describe());
    j["chain"] = steps;
    return j;
}

json to_json(const classify::CatalogEntry& e) {
    json j;
    j["name"] = e.name;
    j["branch_degree"] = e.branch_degree;
    j["component_profile"] = e.component_profile;
    if (e.expected_cusps) j["expected_cusps"] = *e.expected_cusps;
    j["tschirnhausen"] = e.tschirnhausen.label;
    j["p_g"] = e.p_g ? json(*e.p_g) : json("open");
    j["q"] = e.q ? json(*e.q) : json("open");
    j["kodaira"] = classify::kodaira_name(e.kodaira);
    j["source"] = e.source;
    if (!e.notes.empty()) j["notes"] = e.notes;
    if (e.plane_system) j["plane_system"] = e.plane_system->str();
    if (!e.sc_degrees.empty()) j["sc_degrees"] = e.sc_degrees;
    if (e.moduli) j["moduli"] = *e.moduli;
    return j;
}

json to_json(const classify::ClassificationReport& r) {
    json j;
    j["schema"] = 1;
    j["branch"] = to_json(r.branch);
    j["cyclic"] = r.cyclic;
    if (r.common_square) j["common_square_part"] = to_json(*r.common_square);
    if (r.double_witness) j["double_witness"] = to_json(*r.double_witness);
    if (!r.double_witness_note.empty()) j["double_witness_note"] = r.double_witness_note;
    if (r.pencil_of_lines) j["pencil_of_lines"] = to_json(*r.pencil_of_lines);
    j["component_degrees"] = r.component_degrees;
    j["unfactored_remainder_degree"] = r.unfactored_remainder_degree;
    j["census"] = to_json(r.census);
    if (r.cusp_census) j["cusp_census"] = to_json(*r.cusp_census);
    json matches = json::array();
    for (const auto& m : r.matches) matches.push_back({{"name", m.name}, {"confidence", m.confidence}});
    j["matches"] = matches;
    j["annotations"] = r.annotations;
    return j;
}

json to_json(const classify::ConsistencyReport& r) {
    json j;
    j["schema"] = 1;
    j["all_ok"] = r.all_ok();
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    j["checks"] = checks;
    return j;
}

} // namespace triplane
