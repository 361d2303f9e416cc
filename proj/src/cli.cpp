#include "polycert/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <unistd.h>

#include "polycert/errors.hpp"
#include "polycert/handelman.hpp"
#include "polycert/newton.hpp"
#include "polycert/parse.hpp"
#include "polycert/positivity.hpp"
#include "polycert/simplex_index.hpp"
#include "polycert/strata.hpp"
#include "polycert/verify.hpp"

namespace polycert::cli {

namespace {

struct Options {
    std::size_t nvars = 0;
    std::string p;
    std::string q;
    unsigned m = 1;
    std::string mode = "nonneg";
    std::optional<unsigned> k_max;
    unsigned n_max = PolyaBudget{}.n_max;
    unsigned grid_depth = PolyaBudget{}.grid_depth;
    std::size_t max_grid_points = PolyaBudget{}.max_grid_points;
    unsigned m_max = 200;
    unsigned s_cap = 200;
    std::size_t max_face_points = FaceEnumerationBudget{}.max_points;
    std::size_t max_terms = Limits{}.max_terms;
    std::string document;
    std::string output;
    bool no_timings = false;
};

PolyaBudget polya_budget(const Options& o) { return {o.n_max, o.grid_depth, o.max_grid_points}; }

Json polya_budget_json(const Options& o) {
    return Json{{"n_max", o.n_max}, {"grid_depth", o.grid_depth}, {"max_grid_points", o.max_grid_points}};
}

Json k_max_json(const std::optional<unsigned>& k) { return k ? Json(*k) : Json("ceil(e/d)+2"); }

std::vector<RelativeFace> faces_of(const NewtonDiagram& s, std::size_t max_points) {
    const auto d = s.homogeneous_degree();
    if (d && *d > 0 && s.is_full_simplex()) return simplex_faces(s.nvars(), static_cast<Exponent>(*d));
    return enumerate_relative_faces(s, {max_points});
}

Form input_form(const Json& inputs, const char* key) {
    if (!inputs.contains(key) || !inputs.at(key).is_string()) throw DocumentError(std::string("inputs lack '") + key + "'");
    return parse_form(inputs.at(key).get<std::string>(), inputs.at("nvars").get<std::size_t>());
}

Form one(std::size_t nvars) { return Form::constant(nvars, Rational(1)); }

struct Result {
    CertificateDocument doc;
    int code = kInconclusive;
};

Json summary_json(const Form& f) {
    std::size_t negative = 0;
    std::optional<Rational> least;
    for (const auto& t : f.terms()) {
        if (t.coeff < 0) ++negative;
        if (!least || t.coeff < *least) least = t.coeff;
    }
    const auto full = simplex_size(f.nvars(), f.degree());
    return Json{{"terms", f.size()},
                {"full_support", f.size() == full},
                {"nonnegative", has_nonnegative_coefficients(f)},
                {"strictly_positive", has_strictly_positive_coefficients(f)},
                {"negative_terms", negative},
                {"least_coefficient", least ? rational_json(*least) : Json(nullptr)}};
}

Result run_expand(const Options& o) {
    Result r;
    const Form p = parse_form(o.p, o.nvars);
    const Form pm = pow(p, o.m, {o.max_terms});
    r.doc.inputs = Json{{"nvars", o.nvars}, {"p", to_string(p)}, {"m", o.m}};
    r.doc.outcome = Json{{"result", form_json(pm)}, {"summary", summary_json(pm)}};
    r.doc.budgets = Json{{"max_terms", o.max_terms}};
    r.code = kCertified;
    return r;
}

Result run_faces(const Options& o) {
    Result r;
    const Form p = parse_form(o.p, o.nvars);
    if (p.is_zero()) throw PreconditionError("faces needs a nonzero form");
    const auto s = support(p);
    Json faces = Json::array();
    for (const auto& f : faces_of(s, o.max_face_points)) faces.push_back(face_json(f));
    r.doc.inputs = Json{{"nvars", o.nvars}, {"p", to_string(p)}};
    r.doc.outcome = Json{{"support", points_json(s.points())}, {"faces", std::move(faces)}};
    r.doc.budgets = Json{{"max_face_points", o.max_face_points}};
    r.code = kCertified;
    return r;
}

Result run_strata(const Options& o) {
    Result r;
    const Form p = parse_form(o.p, o.nvars);
    const Form q = parse_form(o.q, o.nvars);
    if (p.is_zero() || q.is_zero()) throw PreconditionError("strata needs nonzero p and q");
    const auto logp = support(p);
    const auto logq = support(q);
    Json faces = Json::array();
    bool decided = true;
    for (const auto& f : faces_of(logp, o.max_face_points)) {
        if (f.is_empty()) continue;
        const auto bounds = o.k_max ? StratumBounds{*o.k_max}
                                    : StratumBounds::for_degrees(f.points.front().total(), q.degree());
        Json strata = Json::array();
        for (const auto& st : enumerate_strata_bounded(logq, f, bounds)) {
            if (st.dominant == Dominance::unknown_at_bound) decided = false;
            strata.push_back(stratum_json(st));
        }
        Json entry = face_json(f);
        entry["strata"] = std::move(strata);
        faces.push_back(std::move(entry));
    }
    r.doc.inputs = Json{{"nvars", o.nvars}, {"p", to_string(p)}, {"q", to_string(q)}};
    r.doc.outcome = Json{{"all_dominance_decided", decided}, {"faces", std::move(faces)}};
    r.doc.budgets = Json{{"max_face_points", o.max_face_points}, {"k_max", k_max_json(o.k_max)}};
    r.code = kCertified;
    return r;
}

Result run_polya(const Options& o) {
    Result r;
    const Form q = parse_form(o.q, o.nvars);
    const auto outcome = orthant_positivity(q, polya_budget(o));
    r.doc.inputs = Json{{"nvars", o.nvars}, {"q", to_string(q)}};
    r.doc.outcome = orthant_json(outcome);
    r.doc.budgets = polya_budget_json(o);
    r.code = outcome.verdict == OrthantVerdict::certified_positive ? kCertified
             : outcome.verdict == OrthantVerdict::refuted          ? kRefuted
                                                                   : kInconclusive;
    return r;
}

Result run_power(const Options& o) {
    Result r;
    const Form p = parse_form(o.p, o.nvars);
    const Form q = parse_form(o.q, o.nvars);
    const auto mode = o.mode == "strict" ? CoefficientMode::strict : CoefficientMode::nonnegative;
    const auto res = find_power_exponent(p, q, mode, o.m_max, 1, {o.max_terms});
    r.doc.inputs = Json{{"nvars", o.nvars}, {"p", to_string(p)}, {"q", to_string(q)}};
    r.doc.outcome = power_json(res, mode);
    r.doc.budgets = Json{{"m_max", o.m_max}, {"max_terms", o.max_terms}};
    r.code = res.exponent ? kCertified : res.provably_never ? kRefuted : kInconclusive;
    return r;
}

Result run_certify(const Options& o) {
    Result r;
    const Form p = parse_form(o.p, o.nvars);
    const Form q = parse_form(o.q, o.nvars);
    const CertifyBudget budget{o.s_cap, o.m_max, polya_budget(o), {o.max_terms}};
    const auto res = certify_eventual_positivity(p, q, budget);
    r.doc.inputs = Json{{"nvars", o.nvars}, {"p", to_string(p)}, {"q", to_string(q)}};
    r.doc.outcome = certify_json(res);
    Json b{{"s_cap", o.s_cap}, {"m_max", o.m_max}};
    b.update(polya_budget_json(o));
    b["max_terms"] = o.max_terms;
    r.doc.budgets = std::move(b);
    r.code = res.status == CertifyStatus::certified ? kCertified
             : res.status == CertifyStatus::refuted ? kRefuted
                                                    : kInconclusive;
    return r;
}

Result run_handelman(const Options& o) {
    Result r;
    const Form p = parse_form(o.p, o.nvars);
    const Form q = parse_form(o.q, o.nvars);
    HandelmanBudget budget;
    budget.m_max = o.m_max;
    budget.k_max = o.k_max;
    budget.polya = polya_budget(o);
    budget.faces = {o.max_face_points};
    budget.limits = {o.max_terms};
    const auto v = handelman_decide(p, q, budget);
    r.doc.inputs = Json{{"nvars", o.nvars}, {"p", to_string(p)}, {"q", to_string(q)}};
    r.doc.outcome = handelman_json(v);
    Json b{{"m_max", o.m_max}, {"k_max", k_max_json(o.k_max)}};
    b.update(polya_budget_json(o));
    b["max_face_points"] = o.max_face_points;
    b["max_terms"] = o.max_terms;
    r.doc.budgets = std::move(b);
    r.code = v.status == HandelmanStatus::yes  ? kCertified
             : v.status == HandelmanStatus::no ? kRefuted
                                               : kInconclusive;
    return r;
}

std::string read_document(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

Result run_verify(const Options& o) {
    Result r;
    const auto doc = CertificateDocument::parse(read_document(o.document));
    const auto check = recheck(doc);
    r.doc.inputs = Json{{"document", o.document}, {"command", doc.command}};
    r.doc.outcome = Json{{"checkable", check.checkable}, {"passed", check.passed}, {"detail", check.detail}};
    r.doc.budgets = Json::object();
    r.code = !check.checkable ? kInconclusive : check.passed ? kCertified : kRefuted;
    return r;
}

// --- re-checks -------------------------------------------------------------

Recheck pass(std::string detail) { return {true, true, std::move(detail)}; }
Recheck fail(std::string detail) { return {true, false, std::move(detail)}; }
Recheck skip(std::string detail) { return {false, false, std::move(detail)}; }

bool same_point(const std::vector<Rational>& x, const std::vector<Rational>& y) { return x == y; }

Recheck recheck_faces(const Form& p, const Json& faces) {
    const auto s = support(p);
    for (const auto& f : faces) {
        const auto points = points_from_json(f.at("points"));
        const auto& w = f.at("witness");
        if (w.is_null()) return fail("face without witness");
        FaceWitness witness;
        for (const auto& v : w.at("normal")) witness.normal.emplace_back(v.get<std::string>());
        witness.offset = Integer(w.at("offset").get<std::string>());
        if (!verify_face_witness(s, points, witness)) return fail("face witness does not separate");
    }
    return pass("every face witness separates");
}

Recheck recheck_orthant(const Form& q, const Json& o) {
    const auto verdict = o.at("verdict").get<std::string>();
    if (verdict == to_string(OrthantVerdict::certified_positive)) {
        return verify::polya_certificate(q, o.at("polya_exponent").get<unsigned>())
                   ? pass("Polya product has strictly positive coefficients")
                   : fail("Polya product is not strictly positive");
    }
    if (verdict == to_string(OrthantVerdict::refuted)) {
        return verify::orthant_refutation(q, point_from_json(o.at("witness")))
                   ? pass("witness evaluates <= 0")
                   : fail("witness does not refute");
    }
    return skip("inconclusive outcome carries no claim");
}

}  // namespace

Recheck recheck(const CertificateDocument& doc) {
    try {
        const auto& in = doc.inputs;
        const auto& out = doc.outcome;
        if (doc.command == "expand") {
            const Form p = input_form(in, "p");
            const Form expected = verify::expand_power_times(p, in.at("m").get<unsigned>(), one(p.nvars()));
            return form_from_json(out.at("result")) == expected ? pass("expansion matches")
                                                                : fail("expansion differs");
        }
        if (doc.command == "faces") return recheck_faces(input_form(in, "p"), out.at("faces"));
        if (doc.command == "strata") {
            const Form q = input_form(in, "q");
            const auto logq = support(q);
            for (const auto& f : out.at("faces")) {
                for (const auto& st : f.at("strata")) {
                    for (const auto& w : points_from_json(st.at("points"))) {
                        if (!logq.contains(w)) return fail("stratum point outside Log(q)");
                    }
                    if (st.at("dominance") == "no" && st.at("violation").is_null()) {
                        return fail("non-dominant stratum without violation");
                    }
                }
            }
            return recheck_faces(input_form(in, "p"), out.at("faces"));
        }
        if (doc.command == "polya") return recheck_orthant(input_form(in, "q"), out);
        if (doc.command == "power") {
            const Form p = input_form(in, "p");
            const Form q = input_form(in, "q");
            const auto mode = out.at("mode") == "strict" ? CoefficientMode::strict : CoefficientMode::nonnegative;
            if (!out.at("exponent").is_null()) {
                return verify::power_exponent(p, q, out.at("exponent").get<unsigned>(), mode)
                           ? pass("product coefficients re-verified")
                           : fail("product coefficients fail");
            }
            if (out.at("provably_never").get<bool>()) {
                return verify::interior_refutation(q, point_from_json(out.at("refutation_point")))
                           ? pass("q <= 0 at an interior point")
                           : fail("refutation point does not refute");
            }
            return skip("no exponent within budget");
        }
        if (doc.command == "certify") {
            const Form p = input_form(in, "p");
            const Form q = input_form(in, "q");
            const auto status = out.at("status").get<std::string>();
            if (status == to_string(CertifyStatus::certified)) {
                const auto& c = out.at("certificate");
                EventualPositivityCertificate cert{form_from_json(c.at("p")), form_from_json(c.at("q")),
                                                   c.at("s").get<unsigned>(), c.at("m0").get<unsigned>(),
                                                   c.at("window").get<std::vector<unsigned>>()};
                if (!(cert.p == p) || !(cert.q == q)) return fail("certificate forms differ from inputs");
                return verify::eventual_positivity(cert) ? pass("p^s and the window re-verified")
                                                         : fail("window does not re-verify");
            }
            if (status == to_string(CertifyStatus::refuted)) {
                const auto x = point_from_json(out.at("refutation_point"));
                if (same_point(x, ones(p.nvars())) && out.at("definitive_at_ones").get<bool>()) {
                    return eval(p, x) <= 0 || eval(q, x) <= 0 ? pass("p or q is <= 0 at (1,...,1)")
                                                              : fail("both p and q positive at (1,...,1)");
                }
                return verify::orthant_refutation(q, x) ? pass("q <= 0 at the witness")
                                                        : fail("witness does not refute q");
            }
            return skip("inconclusive outcome carries no claim");
        }
        if (doc.command == "handelman") {
            const Form p = input_form(in, "p");
            const Form q = input_form(in, "q");
            const auto verdict = out.at("verdict").get<std::string>();
            if (verdict == "yes") {
                return verify::handelman_exponent(p, q, out.at("m").get<unsigned>())
                           ? pass("p^m q has nonnegative coefficients")
                           : fail("p^m q has a negative coefficient");
            }
            if (verdict == "no") {
                const auto& f = out.at("failing_condition");
                const auto kind = f.at("kind").get<std::string>();
                if (kind == to_string(FailingCondition::Kind::interior_positivity)) {
                    const Form q_e = restrict_to_exponents(q, points_from_json(f.at("stratum")));
                    return verify::interior_refutation(q_e, point_from_json(f.at("witness")))
                               ? pass("q_E <= 0 at an interior point")
                               : fail("witness does not refute q_E");
                }
                if (kind == to_string(FailingCondition::Kind::monomial_base)) {
                    return p.size() == 1 && q.coefficient(exponent_from_json(f.at("negative_exponent"))) < 0
                               ? pass("p is a monomial and q has a negative coefficient")
                               : fail("monomial base claim fails");
                }
                return skip("face condition failures are re-derived only by rerunning the recursion");
            }
            return skip("inconclusive outcome carries no claim");
        }
        return skip("command '" + doc.command + "' carries no certificate");
    } catch (const nlohmann::json::exception& e) {
        return fail(std::string("malformed outcome: ") + e.what());
    } catch (const Error& e) {
        return fail(e.what());
    }
}

void write_atomically(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot write " + tmp.string());
        f << text;
        f.flush();
        if (!f) throw Error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot rename onto " + path + ": " + ec.message());
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact certificates for coefficient positivity of powers of forms", "polycert"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", o.output, "Also write the JSON document to this path");
        sub->add_flag("--no-timings", o.no_timings, "Omit wall-clock timings (byte-stable output)");
        sub->add_option("--max-terms", o.max_terms, "Term budget for products");
    };
    auto add_n = [&](CLI::App* sub) { sub->add_option("-n,--nvars", o.nvars, "Number of variables")->required()->check(CLI::PositiveNumber); };
    auto add_polya = [&](CLI::App* sub) {
        sub->add_option("--n-max", o.n_max, "Largest Polya exponent tried");
        sub->add_option("--grid-depth", o.grid_depth, "Grid refinement levels for refutation");
        sub->add_option("--max-grid-points", o.max_grid_points, "Skip grid levels larger than this");
    };

    auto* expand = app.add_subcommand("expand", "Print p^m and a coefficient summary");
    add_n(expand);
    expand->add_option("-p", o.p, "Form")->required();
    expand->add_option("-m", o.m, "Exponent")->required();
    add_common(expand);

    auto* faces = app.add_subcommand("faces", "Relative faces of Log(p) with witnesses");
    add_n(faces);
    faces->add_option("-p", o.p, "Form")->required();
    faces->add_option("--max-face-points", o.max_face_points, "Largest support for generic enumeration");
    add_common(faces);

    auto* strata = app.add_subcommand("strata", "Strata of Log(q) for each face of Log(p)");
    add_n(strata);
    strata->add_option("-p", o.p, "Form")->required();
    strata->add_option("-q", o.q, "Form")->required();
    strata->add_option("--k-max", o.k_max, "Largest dilation searched");
    strata->add_option("--max-face-points", o.max_face_points, "Largest support for generic enumeration");
    add_common(strata);

    auto* polya = app.add_subcommand("polya", "Positivity of q on the punctured orthant");
    add_n(polya);
    polya->add_option("-q", o.q, "Form")->required();
    add_polya(polya);
    add_common(polya);

    auto* power = app.add_subcommand("power", "Least m with p^m q nonnegative or strictly positive");
    add_n(power);
    power->add_option("-p", o.p, "Form with strictly positive coefficients")->required();
    power->add_option("-q", o.q, "Form")->required();
    power->add_option("--mode", o.mode, "nonneg or strict")->check(CLI::IsMember({"nonneg", "strict"}));
    power->add_option("--m-max", o.m_max, "Largest exponent tried");
    add_common(power);

    auto* certify = app.add_subcommand("certify", "Certificate that p^m q is strictly positive for all m >= m0");
    add_n(certify);
    certify->add_option("-p", o.p, "Form")->required();
    certify->add_option("-q", o.q, "Form")->required();
    certify->add_option("--s-cap", o.s_cap, "Largest power of p searched for strict positivity");
    certify->add_option("--m-max", o.m_max, "Largest window start searched");
    add_polya(certify);
    add_common(certify);

    auto* handelman = app.add_subcommand("handelman", "Does p^m q have nonnegative coefficients for some m?");
    add_n(handelman);
    handelman->add_option("-p", o.p, "Form with nonnegative coefficients")->required();
    handelman->add_option("-q", o.q, "Form")->required();
    handelman->add_option("--m-max", o.m_max, "Largest exponent tried");
    handelman->add_option("--k-max", o.k_max, "Largest dilation searched for strata");
    handelman->add_option("--max-face-points", o.max_face_points, "Largest support for generic enumeration");
    add_polya(handelman);
    add_common(handelman);

    auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate document");
    verify_cmd->add_option("document", o.document, "Path, or - for standard input")->required();
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, err, err);
        return code == 0 ? 0 : kInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    Result r;
    std::string command;
    try {
        if (*expand) command = "expand", r = run_expand(o);
        else if (*faces) command = "faces", r = run_faces(o);
        else if (*strata) command = "strata", r = run_strata(o);
        else if (*polya) command = "polya", r = run_polya(o);
        else if (*power) command = "power", r = run_power(o);
        else if (*certify) command = "certify", r = run_certify(o);
        else if (*handelman) command = "handelman", r = run_handelman(o);
        else command = "verify", r = run_verify(o);
    } catch (const ResourceError& e) {
        err << "polycert: budget exhausted: " << e.what() << "\n";
        r.doc.inputs = Json{{"nvars", o.nvars}, {"p", o.p}, {"q", o.q}};
        r.doc.outcome = Json{{"status", "inconclusive"}, {"reason", e.what()}};
        r.code = kInconclusive;
    } catch (const Error& e) {
        err << "polycert: " << e.what() << "\n";
        return kInputError;
    }
    r.doc.command = command;

    if (r.code == kCertified && command != "verify") {
        const auto check = recheck(r.doc);
        if (check.checkable && !check.passed) {
            err << "polycert: certificate failed re-verification: " << check.detail << "\n";
            r.doc.outcome["recheck"] = "failed";
            r.code = kInconclusive;
        } else {
            r.doc.outcome["recheck"] = check.checkable ? "passed" : "not-applicable";
        }
    }
    if (!o.no_timings) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        r.doc.timings = Json{{"wall_ms", ms.count()}};
    }

    const auto text = r.doc.serialize();
    out << text;
    if (!o.output.empty()) {
        try {
            write_atomically(o.output, text);
        } catch (const Error& e) {
            err << "polycert: " << e.what() << "\n";
            return kInputError;
        }
    }
    return r.code;
}

}  // namespace polycert::cli
