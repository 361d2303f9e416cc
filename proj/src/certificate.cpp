#include "polycert/certificate.hpp"

#include "polycert/errors.hpp"
#include "polycert/parse.hpp"

namespace polycert {

Json rational_json(const Rational& r) { return to_fraction_string(r); }

Json point_json(std::span<const Rational> x) {
    Json out = Json::array();
    for (const auto& v : x) out.push_back(rational_json(v));
    return out;
}

Json exponent_json(const MultiIndex& w) {
    Json out = Json::array();
    for (auto e : w) out.push_back(e);
    return out;
}

Json points_json(const std::vector<MultiIndex>& points) {
    Json out = Json::array();
    for (const auto& w : points) out.push_back(exponent_json(w));
    return out;
}

Json form_json(const Form& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms()) {
        terms.push_back(Json{{"exponent", exponent_json(t.exponent)}, {"coeff", rational_json(t.coeff)}});
    }
    return Json{{"nvars", f.nvars()}, {"degree", f.degree()}, {"printed", to_string(f)}, {"terms", std::move(terms)}};
}

namespace {

Json integers_json(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

Json placement_json(const Placement& pl) {
    Json z = Json::array();
    for (auto v : pl.z) z.push_back(v);
    return Json{{"k", pl.k}, {"z", std::move(z)}};
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json trace_json(const HandelmanTrace& t) {
    Json children = Json::array();
    for (const auto& c : t.children) children.push_back(trace_json(c));
    return Json{{"p", t.p},
                {"q", t.q},
                {"nvars", t.nvars},
                {"variables", t.variables},
                {"conditions", to_string(t.conditions)},
                {"notes", t.notes},
                {"children", std::move(children)}};
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json face_json(const RelativeFace& face) {
    Json out{{"points", points_json(face.points)}, {"improper", face.is_improper()}};
    if (face.witness) {
        out["witness"] = Json{{"normal", integers_json(face.witness->normal)}, {"offset", face.witness->offset.get_str()}};
    } else {
        out["witness"] = nullptr;
    }
    if (face.zero_coordinates) out["zero_coordinates"] = *face.zero_coordinates;
    return out;
}

Json stratum_json(const Stratum& st) {
    Json placements = Json::array();
    for (const auto& pl : st.placements) placements.push_back(placement_json(pl));
    Json out{{"points", points_json(st.points)},
             {"dominance", to_string(st.dominant)},
             {"exact", st.exact},
             {"k_max", st.k_max},
             {"placements", std::move(placements)},
             {"violation", st.violation ? placement_json(*st.violation) : Json(nullptr)}};
    if (st.beta) out["beta"] = *st.beta;
    return out;
}

Json orthant_json(const OrthantPositivityOutcome& o) {
    return Json{{"verdict", to_string(o.verdict)},
                {"polya_exponent", optional_json(o.polya_exponent)},
                {"witness", o.witness ? point_json(*o.witness) : Json(nullptr)},
                {"witness_value", o.witness_value ? rational_json(*o.witness_value) : Json(nullptr)},
                {"exponents_tried", o.exponents_tried},
                {"grid_levels_scanned", o.grid_levels_scanned},
                {"grid_points_evaluated", o.grid_points_evaluated}};
}

Json power_json(const PowerSearchResult& r, CoefficientMode mode) {
    return Json{{"mode", to_string(mode)},
                {"exponent", optional_json(r.exponent)},
                {"provably_never", r.provably_never},
                {"refutation_point", r.refutation_point ? point_json(*r.refutation_point) : Json(nullptr)},
                {"next_m", r.next_m}};
}

Json conditions_json(const TheoremConditionsReport& r) {
    Json positive = nullptr;
    if (r.positive_point) {
        positive = Json{{"power", r.positive_point->first}, {"point", point_json(r.positive_point->second)}};
    }
    return Json{{"least_power", optional_json(r.least_power)},
                {"least_odd_power", optional_json(r.least_odd_power)},
                {"positive_point", std::move(positive)},
                {"value_at_ones", rational_json(r.value_at_ones)},
                {"provably_never", r.provably_never},
                {"refutation", r.refutation},
                {"searched_up_to", r.searched_up_to}};
}

Json certify_json(const CertifyOutcome& o) {
    Json cert = nullptr;
    if (o.certificate) {
        const auto& c = *o.certificate;
        cert = Json{{"p", form_json(c.p)}, {"q", form_json(c.q)}, {"s", c.s}, {"m0", c.m0}, {"window", c.window}};
    }
    return Json{{"status", to_string(o.status)},
                {"certificate", std::move(cert)},
                {"q_positivity", orthant_json(o.q_outcome)},
                {"p_conditions", o.p_conditions ? conditions_json(*o.p_conditions) : Json(nullptr)},
                {"refutation_point", o.refutation_point ? point_json(*o.refutation_point) : Json(nullptr)},
                {"definitive_at_ones", o.definitive_at_ones},
                {"reason", o.reason},
                {"next_m0", o.next_m0}};
}

Json handelman_json(const HandelmanVerdict& v) {
    Json failing = nullptr;
    if (v.failing) {
        const auto& f = *v.failing;
        failing = Json{{"kind", to_string(f.kind)},
                       {"face", points_json(f.face)},
                       {"stratum", points_json(f.stratum)},
                       {"witness", f.witness ? point_json(*f.witness) : Json(nullptr)},
                       {"value", f.value ? rational_json(*f.value) : Json(nullptr)},
                       {"negative_exponent", f.negative_exponent ? exponent_json(*f.negative_exponent) : Json(nullptr)}};
    }
    return Json{{"verdict", to_string(v.status)},
                {"m", optional_json(v.m)},
                {"failing_condition", std::move(failing)},
                {"trace", trace_json(v.trace)}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw DocumentError("rational must be a \"num/den\" string");
    try {
        return parse_fraction_string(j.get<std::string>());
    } catch (const Error& e) {
        throw DocumentError(e.what());
    }
}

std::vector<Rational> point_from_json(const Json& j) {
    if (!j.is_array()) throw DocumentError("point must be an array");
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(rational_from_json(v));
    return out;
}

MultiIndex exponent_from_json(const Json& j) {
    if (!j.is_array()) throw DocumentError("exponent must be an array");
    std::vector<Exponent> w;
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) throw DocumentError("exponent entries must be nonnegative integers");
        w.push_back(v.get<Exponent>());
    }
    return MultiIndex(std::move(w));
}

std::vector<MultiIndex> points_from_json(const Json& j) {
    if (!j.is_array()) throw DocumentError("point list must be an array");
    std::vector<MultiIndex> out;
    for (const auto& w : j) out.push_back(exponent_from_json(w));
    return out;
}

Form form_from_json(const Json& j) {
    const auto nvars = field(j, "nvars").get<std::size_t>();
    const auto degree = field(j, "degree").get<Exponent>();
    std::vector<Term> terms;
    for (const auto& t : field(j, "terms")) {
        terms.push_back({exponent_from_json(field(t, "exponent")), rational_from_json(field(t, "coeff"))});
    }
    for (const auto& t : terms) {
        if (t.exponent.size() != nvars) throw DocumentError("exponent length differs from nvars");
    }
    try {
        return Form::from_terms(nvars, degree, std::move(terms));
    } catch (const Error& e) {
        throw DocumentError(e.what());
    }
}

Json CertificateDocument::to_json() const {
    Json out{{"schema_version", schema_version},
             {"command", command},
             {"inputs", inputs},
             {"outcome", outcome},
             {"budgets", budgets}};
    if (timings) out["timings"] = *timings;
    return out;
}

std::string CertificateDocument::serialize() const { return to_json().dump(2) + "\n"; }

CertificateDocument CertificateDocument::from_json(const Json& j) {
    CertificateDocument doc;
    const auto& version = field(j, "schema_version");
    const auto& command = field(j, "command");
    if (!version.is_string() || !command.is_string()) throw DocumentError("schema_version and command must be strings");
    doc.schema_version = version.get<std::string>();
    if (doc.schema_version != kSchemaVersion) throw DocumentError("unsupported schema_version " + doc.schema_version);
    doc.command = command.get<std::string>();
    doc.inputs = field(j, "inputs");
    doc.outcome = field(j, "outcome");
    doc.budgets = field(j, "budgets");
    if (j.contains("timings")) doc.timings = j.at("timings");
    return doc;
}

CertificateDocument CertificateDocument::parse(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(e.what());
    }
    return from_json(j);
}

}  // namespace polycert
