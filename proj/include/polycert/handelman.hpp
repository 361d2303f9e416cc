#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polycert/form.hpp"
#include "polycert/positivity.hpp"
#include "polycert/strata.hpp"

namespace polycert {

struct HandelmanBudget {
    unsigned m_max = 200;
    /// Overrides ceil(e/d) + 2 for every stratum computation.
    std::optional<unsigned> k_max;
    PolyaBudget polya;
    FaceEnumerationBudget faces;
    Limits limits;
};

struct FaceStratumPair {
    RelativeFace face;
    Stratum stratum;
};

/// Every nonempty relative face F of Log(p) paired with each stratum of
/// Log(q) that is dominant or undecided under the bound. Undecided strata
/// are kept so that failures on them can only weaken a verdict.
std::vector<FaceStratumPair> dominant_strata_of_pair(const Form& p, const Form& q,
                                                     const HandelmanBudget& budget = {});

enum class HandelmanStatus { yes, no, inconclusive };

const char* to_string(HandelmanStatus s);

struct FailingCondition {
    enum class Kind {
        interior_positivity,  // q_E fails to be positive on the open orthant
        face_condition,       // p_F^m q_E never becomes nonnegative
        monomial_base,        // p is a monomial and q has a negative coefficient
    };
    Kind kind = Kind::interior_positivity;
    std::vector<MultiIndex> face;
    std::vector<MultiIndex> stratum;
    std::optional<std::vector<Rational>> witness;  // interior point, in the caller's variables
    std::optional<Rational> value;
    std::optional<MultiIndex> negative_exponent;
};

const char* to_string(FailingCondition::Kind k);

/// One node of the recursion over faces and strata.
struct HandelmanTrace {
    std::string p;
    std::string q;
    std::size_t nvars = 0;
    std::vector<std::size_t> variables;  // positions in the parent's variables
    HandelmanStatus conditions = HandelmanStatus::inconclusive;
    std::vector<std::string> notes;
    std::vector<HandelmanTrace> children;
};

struct HandelmanVerdict {
    HandelmanStatus status = HandelmanStatus::inconclusive;
    std::optional<unsigned> m;
    std::optional<FailingCondition> failing;
    HandelmanTrace trace;
};

/// Decides whether p^m q has nonnegative coefficients for some m >= 1, by
/// checking the face/stratum conditions recursively and then searching for
/// the smallest such m. p must have nonnegative coefficients.
HandelmanVerdict handelman_decide(const Form& p, const Form& q, const HandelmanBudget& budget = {});

}  // namespace polycert
