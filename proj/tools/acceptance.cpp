#include "preproj/verify.hpp"

#include <algorithm>
#include <iostream>

using namespace preproj;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<Check> checks;

    bool passed() const
    {
        return !checks.empty() &&
               std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
};

std::vector<Check> only(const SuiteReport& r, const std::string& needle)
{
    std::vector<Check> out;
    for (const auto& c : r.checks)
        if (c.name.find(needle) != std::string::npos)
            out.push_back(c);
    return out;
}

std::string classify_tsv(int n, Scalar p)
{
    Setting s = make_setting(preprojective_algebra(DynkinType{DynkinFamily::A, n}, PrimeField(p)));
    return to_tsv(table_rows(s, classify_all(s)));
}

}  // namespace

int main(int argc, char** argv)
{
    bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    VerifyConfig cfg;
    std::vector<Criterion> criteria;

    criteria.push_back({1, "A3 classification table reproduced", suite_table44(cfg).checks});

    criteria.push_back({2, "weakly homological embeddings of A2, A3 biject with the Weyl group", suite_theorem_a(cfg).checks});

    auto b = suite_theorem_b(cfg);
    std::vector<Check> b_type_a;
    for (const auto& c : b.checks)
        if (c.name.rfind("D4", 0) != 0)
            b_type_a.push_back(c);
    criteria.push_back({3, "exactly two nontrivial homological embeddings for A2, A3; none for A1", b_type_a});

    criteria.push_back({4, "D4 preprojective: dim e_i A e_i >= 2 at every vertex", only(b, "D4")});

    criteria.push_back({5, "Tachikawa conjecture on A2, A3 and Nakayama(3,3)", suite_tachikawa(cfg).checks});

    criteria.push_back({6, "stable 2-Calabi-Yau and Omega-periodicity on A2, A3", suite_cy2(cfg).checks});

    auto ideals = suite_ideals(cfg);
    criteria.push_back({7, "I_w independent of the reduced word on A3", only(ideals, "reduced words")});
    std::vector<Check> tor = only(ideals, "Tor_1");
    for (const auto& c : only(ideals, "iff"))
        tor.push_back(c);
    criteria.push_back({8, "Tor_1 defect and idempotent iff self-injective on A3", tor});

    criteria.push_back({9, "Nakayama(3,3): 9 indecomposables and 7 nonzero homological wide subcategories", suite_nakayama(cfg).checks});

    auto strat = suite_stratifying(cfg);
    std::vector<Check> strat_checks = only(strat, "A3");
    for (const auto& c : only(strat, "Nakayama"))
        strat_checks.push_back(c);
    criteria.push_back({10, "only trivial stratifying ideals on A3 and Nakayama(3,3)", strat_checks});

    std::vector<Check> cross;
    for (Scalar p : {1009u, 2u, 3u}) {
        VerifyConfig c = cfg;
        c.p = p;
        for (const auto& r : {suite_table44(c), suite_theorem_a(c), suite_theorem_b(c)})
            cross.push_back({r.suite + " at p = " + std::to_string(p), r.passed(), r.passed() ? "" : "some checks failed"});
    }
    for (int n : {1, 2, 3}) {
        const std::string reference = classify_tsv(n, 1009);
        for (Scalar p : {2u, 3u})
            cross.push_back({"A" + std::to_string(n) + " table at p = " + std::to_string(p) + " equals p = 1009",
                             classify_tsv(n, p) == reference});
    }
    criteria.push_back({11, "criteria 1-3 identical at p = 2, 3, 1009", cross});

    bool all = true;
    for (const auto& c : criteria) {
        std::cout << "criterion " << c.number << ": " << (c.passed() ? "PASS" : "FAIL") << " - " << c.title << " ("
                  << std::count_if(c.checks.begin(), c.checks.end(), [](const Check& k) { return k.passed; }) << "/"
                  << c.checks.size() << " checks)\n";
        for (const auto& k : c.checks)
            if (verbose || !k.passed)
                std::cout << "    " << (k.passed ? "PASS " : "FAIL ") << k.name << (k.detail.empty() ? "" : ": " + k.detail)
                          << "\n";
        all = all && c.passed();
    }
    return all ? 0 : 1;
}
