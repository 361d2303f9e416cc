#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polycert/form.hpp"
#include "polycert/handelman.hpp"
#include "polycert/newton.hpp"
#include "polycert/positivity.hpp"
#include "polycert/strata.hpp"

namespace polycert {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1.0";

// Rationals are "num/den" strings, exponent vectors are integer arrays.
Json rational_json(const Rational& r);
Json point_json(std::span<const Rational> x);
Json exponent_json(const MultiIndex& w);
Json points_json(const std::vector<MultiIndex>& points);
Json form_json(const Form& f);
Json face_json(const RelativeFace& face);
Json stratum_json(const Stratum& st);
Json orthant_json(const OrthantPositivityOutcome& o);
Json power_json(const PowerSearchResult& r, CoefficientMode mode);
Json conditions_json(const TheoremConditionsReport& r);
Json certify_json(const CertifyOutcome& o);
Json handelman_json(const HandelmanVerdict& v);

Rational rational_from_json(const Json& j);
std::vector<Rational> point_from_json(const Json& j);
MultiIndex exponent_from_json(const Json& j);
std::vector<MultiIndex> points_from_json(const Json& j);
Form form_from_json(const Json& j);

/// One run of one command. serialize(parse(serialize(d))) == serialize(d).
struct CertificateDocument {
    std::string schema_version{kSchemaVersion};
    std::string command;
    Json inputs = Json::object();
    Json outcome = Json::object();
    Json budgets = Json::object();
    std::optional<Json> timings;  // omitted for byte-stable output

    Json to_json() const;
    /// Two-space indented text with a trailing newline.
    std::string serialize() const;

    /// Throws DocumentError on malformed JSON or missing fields.
    static CertificateDocument from_json(const Json& j);
    static CertificateDocument parse(std::string_view text);
};

}  // namespace polycert
