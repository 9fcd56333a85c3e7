#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irredlab/gaction.hpp"

namespace irredlab {
namespace chainstats {

using gaction::Action;
using grp::GroupPtr;
using grp::Subgroup;

enum class Stat { base_min, base_max, height, irred };
const char* stat_name(Stat s);

/// Result of one statistic computation. The witness is re-verified against
/// the literal defining predicate before the report is returned; `exact` is
/// false only when the node budget was exhausted, in which case `value` is
/// the best bound found (lower bound for the max statistics, size of the
/// best base found for base_min).
struct ChainReport {
    Stat stat = Stat::irred;
    uint32_t value = 0;
    std::vector<uint32_t> witness;
    uint64_t nodes = 0;
    uint64_t memo_hits = 0;
    double ms = 0;
    bool exact = true;

    std::string to_json(const Action& a) const;
};

struct PredicateReport {
    bool is_base = false;
    bool is_irredundant = false;
    bool is_independent = false;
    bool is_minimal_base = false;
};

/// Literal evaluation of the four sequence predicates via pointwise
/// stabilizers, relative to the subgroup `members` (defaults to the whole
/// group).
PredicateReport predicates(const Action& a, const std::vector<uint32_t>& seq);
PredicateReport predicates(const Action& a, const std::vector<uint32_t>& members,
                           const std::vector<uint32_t>& seq);

struct SearchLimits {
    uint64_t node_cap = 100'000'000;
    size_t memo_cap = size_t(1) << 20;  // entries; cleared when exceeded
};

/// The four exact engines. `members` is the acting subgroup (default: whole
/// group), `domain` the allowed points (default: all of Omega). The
/// restricted action of `members` on `domain` must be faithful.
ChainReport irred_max(const Action& a, const SearchLimits& lim = {});
ChainReport base_min(const Action& a, const SearchLimits& lim = {});
ChainReport height_max(const Action& a, const SearchLimits& lim = {});
ChainReport base_max_minimal(const Action& a, const SearchLimits& lim = {});

ChainReport irred_max(const Action& a, std::vector<uint32_t> members,
                      std::vector<uint32_t> domain, const SearchLimits& lim = {});
ChainReport base_min(const Action& a, std::vector<uint32_t> members,
                     std::vector<uint32_t> domain, const SearchLimits& lim = {});
ChainReport height_max(const Action& a, std::vector<uint32_t> members,
                       std::vector<uint32_t> domain, const SearchLimits& lim = {});
ChainReport base_max_minimal(const Action& a, std::vector<uint32_t> members,
                             std::vector<uint32_t> domain, const SearchLimits& lim = {});

/// Unpruned brute-force reference: subset enumeration for base/Base/Height,
/// literal duplicate-free sequence enumeration for Irred. Guarded to
/// |Omega| <= 12 and |G| <= 10^4.
struct OracleStats {
    uint32_t base = 0, base_max = 0, height = 0, irred = 0;
};
OracleStats oracle_stats(const Action& a);

/// base <= Base <= Height <= Irred, plus the emitted relational-complexity
/// bound RC <= Height + 1 (RC itself is not computed).
struct InequalityReport {
    uint32_t base = 0, base_max = 0, height = 0, irred = 0;
    uint32_t rc_bound = 0;
    bool ok = false;
};
InequalityReport check_inequalities(const OracleStats& s);
InequalityReport check_inequalities(uint32_t base, uint32_t base_max, uint32_t height,
                                    uint32_t irred);

/// Verifies Irred(G, Omega) <= Irred(S, Omega) + log2 |G:S| for a normal
/// subgroup S, computing both sides on the same action. The comparison is
/// exact: 2^{Irred(G)-Irred(S)} <= |G:S|.
struct SocleReport {
    uint32_t irred_group = 0, irred_socle = 0;
    uint64_t index = 0;
    bool ok = false;
};
SocleReport socle_chain_check(const Action& a, const Subgroup& s, const SearchLimits& lim = {});

}  // namespace chainstats
}  // namespace irredlab
