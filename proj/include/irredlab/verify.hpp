#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "irredlab/chainstats.hpp"

namespace irredlab {
namespace verify {

/// Provenance of an expected value:
///  - closed_form: a stated closed-form claim for these exact parameters
///  - definition: forced by definitions, conventions or order arithmetic
///  - exhaustive: established by this tool's own exhaustive computation
///    (used where the closed-form claims have hypotheses our desk-scale
///    parameters do not meet)
extern const char* const kClosedForm;
extern const char* const kDefinition;
extern const char* const kExhaustive;

struct Check {
    std::string label;
    std::string expected;
    std::string actual;
    std::string provenance;
    bool pass = false;
    bool gating = true;  // informational checks do not affect the status
};

struct Experiment {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Check> checks;
    std::string status = "pass";  // pass | fail | skipped-budget
    uint64_t nodes = 0;
    double ms = 0;
    uint64_t seed = 0;
    std::vector<std::string> notes;

    void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
    bool add(const std::string& label, const std::string& expected, const std::string& actual,
             const char* provenance, bool gating = true);
    template <typename T, typename U>
    bool add_eq(const std::string& label, const T& expected, const U& actual,
                const char* provenance, bool gating = true) {
        return add(label, std::to_string(expected), std::to_string(actual), provenance, gating);
    }
    void finish();
    bool passed() const { return status == "pass"; }
    std::string to_json() const;
};

struct Budget {
    bool stretch = false;  // also run the large flagged instances
    chainstats::SearchLimits limits;
    uint64_t seed = 0x5eed1ab5;
};

/// Irred(PGammaL_2(p^f), P1) = 3 + pi(f), with the explicit witness chain
/// through subfield primitive elements, and the C_f three-point stabilizers.
Experiment run_pif(uint64_t p, unsigned f, const Budget& b = {});

/// Base(SL_2(2^c), H-cosets) = c: the linear-hyperplane chain is a minimal
/// base of size c; exhaustive maximum for small c.
Experiment run_hyperplane(unsigned c, bool exhaustive, const Budget& b = {},
                          bool sweep_index2 = false);

/// The decomposition chain D_1..D_{n-1} for PSL_n(q) acting on direct-sum
/// decompositions: base/minimality checks at desk-scale parameters.
Experiment run_decompositions(unsigned n, uint64_t q, const Budget& b = {});

/// SL_r(2) on Singer-normalizer cosets: trivial pairwise intersections of
/// the cycle conjugates and Irred <= 3.
Experiment run_singer(unsigned r, const Budget& b = {});

/// The subfield-subgroup intersection identity
/// G_1 cap G_1^x = C_{G_1}(x^{-1} x^{F_0}) for G = SL_2(q_0^e).
Experiment run_subfield_lemma(uint64_t q0, unsigned e, unsigned samples, const Budget& b = {});

/// Field-automorphism stabilizer formula for the two-decomposition chain
/// over F_{2^{f1 f2}}; the full independence check in PGammaL_2(q) runs only
/// under the stretch budget.
Experiment run_gammal_partial(unsigned f1, unsigned f2, const Budget& b = {});

/// The default experiment set (every planned parameter point; stretch
/// instances only when the budget allows).
std::vector<Experiment> run_registry(const Budget& b = {});

}  // namespace verify
}  // namespace irredlab
