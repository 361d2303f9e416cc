#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polycert/form.hpp"

namespace polycert {

// ---------------------------------------------------------------------------
// Positivity on the punctured orthant R_+^n \ {0}.
//
// Certificates are Pólya exponents N with (x_1 + ... + x_n)^N q strictly
// positive; refutations are exact rational points with q <= 0. The search
// is budgeted, so a third verdict, inconclusive, is possible.
// ---------------------------------------------------------------------------

struct PolyaBudget {
    unsigned n_max = 64;
    unsigned grid_depth = 6;
    /// Grid levels with more points than this are skipped.
    std::size_t max_grid_points = 250'000;
};

enum class OrthantVerdict { certified_positive, refuted, inconclusive };

const char* to_string(OrthantVerdict v);

struct OrthantPositivityOutcome {
    OrthantVerdict verdict = OrthantVerdict::inconclusive;
    std::optional<unsigned> polya_exponent;
    std::optional<std::vector<Rational>> witness;  // on the standard simplex
    std::optional<Rational> witness_value;
    unsigned exponents_tried = 0;
    unsigned grid_levels_scanned = 0;
    std::size_t grid_points_evaluated = 0;
};

OrthantPositivityOutcome orthant_positivity(const Form& q, const PolyaBudget& budget = {});

struct SplitBudget {
    unsigned max_halvings = 64;
    PolyaBudget polya;
};

/// g = c (x_1 + ... + x_n)^deg(g) + h with h fully supported and certified
/// positive on the punctured orthant.
struct PositiveSplit {
    Rational c;
    Form g_prime;
    Form h;
    OrthantPositivityOutcome h_outcome;
    unsigned halvings = 0;
};

/// Halves c from 1/2 until both conditions on h certify. Throws
/// PreconditionError if g itself does not certify, ResourceError if the
/// halving budget runs out.
PositiveSplit positive_split(const Form& g, const SplitBudget& budget = {});

enum class CoefficientMode { nonnegative, strict };

const char* to_string(CoefficientMode m);

struct PowerSearchResult {
    std::optional<unsigned> exponent;  // minimal m >= first searched
    /// Set when no exponent can ever work: g <= 0 at an interior point.
    bool provably_never = false;
    std::optional<std::vector<Rational>> refutation_point;
    /// First exponent not yet examined; pass back as `start` to resume.
    unsigned next_m = 1;
};

/// Minimal m in [start, m_max] with f^m g nonnegative (or strictly
/// positive). f must be nonconstant with strictly positive coefficients.
PowerSearchResult find_power_exponent(const Form& f, const Form& g, CoefficientMode mode, unsigned m_max = 200,
                                      unsigned start = 1, const Limits& limits = {});

struct TheoremConditionsReport {
    std::optional<unsigned> least_power;      // least m with p^m strictly positive
    std::optional<unsigned> least_odd_power;  // condition (A)
    /// Condition (B): a strictly positive power and a point where p > 0.
    std::optional<std::pair<unsigned, std::vector<Rational>>> positive_point;
    Rational value_at_ones;
    bool provably_never = false;
    std::string refutation;
    unsigned searched_up_to = 0;
};

TheoremConditionsReport check_theorem_conditions(const Form& p, unsigned search_cap = 200,
                                                 const Limits& limits = {});

struct CertifyBudget {
    unsigned s_cap = 200;
    unsigned m_max = 200;
    PolyaBudget polya;
    Limits limits;
};

/// p^m q has strictly positive coefficients for every m >= m0: p^s is
/// strictly positive and so is every p^m q with m0 <= m < m0 + s, and any
/// m >= m0 is m0 + i + t s with 0 <= i < s.
struct EventualPositivityCertificate {
    Form p;
    Form q;
    unsigned s = 1;
    unsigned m0 = 0;
    std::vector<unsigned> window;
};

enum class CertifyStatus { certified, refuted, inconclusive };

const char* to_string(CertifyStatus s);

struct CertifyOutcome {
    CertifyStatus status = CertifyStatus::inconclusive;
    std::optional<EventualPositivityCertificate> certificate;
    OrthantPositivityOutcome q_outcome;
    std::optional<TheoremConditionsReport> p_conditions;
    std::optional<std::vector<Rational>> refutation_point;
    /// p(1)^m q(1) <= 0 for infinitely many m, so no m0 exists.
    bool definitive_at_ones = false;
    std::string reason;
    unsigned next_m0 = 0;
};

CertifyOutcome certify_eventual_positivity(const Form& p, const Form& q, const CertifyBudget& budget = {});

}  // namespace polycert
