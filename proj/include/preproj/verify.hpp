#pragma once

#include "preproj/classify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace preproj {

class UnknownSuite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    /// One "PASS name" / "FAIL name: detail" line per check, then a summary.
    std::string render() const;
};

struct VerifyConfig {
    Scalar p = PrimeField::kDefaultCharacteristic;
    std::optional<DynkinType> type;            // restricts suites to one preprojective algebra
    std::optional<std::pair<int, int>> nakayama;
    int ext_bound = 12;
    std::size_t max_registry = 16;
    unsigned threads = 0;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);

// individual suites
SuiteReport suite_table44(const VerifyConfig& cfg);
SuiteReport suite_theorem_a(const VerifyConfig& cfg);
SuiteReport suite_theorem_b(const VerifyConfig& cfg);
SuiteReport suite_tachikawa(const VerifyConfig& cfg);
SuiteReport suite_stratifying(const VerifyConfig& cfg);
SuiteReport suite_nakayama(const VerifyConfig& cfg);
SuiteReport suite_cy2(const VerifyConfig& cfg);
SuiteReport suite_ideals(const VerifyConfig& cfg);

/// dim e_v A e_v for every vertex, with a check that each is at least 2.
std::vector<Check> corner_dimension_checks(const AlgebraPtr& a);
/// All reduced words of every Weyl element give the same ideal.
std::vector<Check> reduced_word_checks(const Setting& s);
/// dim Tor_1(A/I_v, A/I_v) = dim I_v - dim I_v^2 and I_v idempotent iff A/I_v self-injective.
std::vector<Check> tor_idempotency_checks(const Setting& s);

struct GoldenRow {
    std::string sigma4;
    std::string torsion;
    std::string wide;
    std::string tag;
};
std::vector<GoldenRow> a3_golden_table();
/// Each golden wide as a list of names ("mod(A)" for the whole category).
std::vector<std::vector<std::string>> nakayama33_golden_wides();

/// Members of a rendered class "mod(A)", "{0}", "add(X⊕Y)" or "gen(X⊕Y)".
Subcat parse_class(const Setting& s, const std::string& text);
/// The same class string with summands in registry order.
std::string normalize_class(const Setting& s, const std::string& text);

}  // namespace preproj
