#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "irredlab/grp.hpp"

namespace irredlab {
namespace gaction {

using grp::Group;
using grp::GroupElem;
using grp::GroupPtr;
using grp::Subgroup;
using ffield::Field;

/// Normalized representative of a 1-space: first nonzero coordinate scaled
/// to 1.
std::vector<uint32_t> normalize_projective(const Field& F, std::vector<uint32_t> v);

/// A decomposition of V into 1-spaces: sorted list of normalized
/// representatives.
using Decomp = std::vector<std::vector<uint32_t>>;

Decomp decomp_normalize(const Field& F, Decomp d);
Decomp decomp_apply(const Field& F, const GroupElem& e, const Decomp& d);
bool decomp_spans(const Field& F, const Decomp& d);

enum class ActionKind { projective_line, decomposition, cosets };

class Action;
using ActionPtr = std::shared_ptr<const Action>;

/// A finite transitive G-set with interned points. All search logic works
/// with integer point ids; the id order is the canonical encoding order.
/// Images are precomputed into a full |G| x |Omega| table when that fits the
/// table budget and computed on demand otherwise.
class Action : public std::enable_shared_from_this<Action> {
public:
    static constexpr uint64_t kDefaultPointCap = 2'000'000;
    static constexpr uint64_t kDefaultTableCap = uint64_t(1) << 24;  // entries

    /// Action of a 2-dimensional group on the 1-spaces of (F_q)^2.
    static ActionPtr projective_line(GroupPtr g, uint64_t table_cap = kDefaultTableCap);

    /// Action on decompositions of (F_q)^n into n 1-spaces.
    static ActionPtr decomposition_action(GroupPtr g, uint64_t point_cap = kDefaultPointCap,
                                          uint64_t table_cap = kDefaultTableCap);

    /// Right-multiplication action on the right cosets of h, canonically
    /// represented by their least member id.
    static ActionPtr coset_action(GroupPtr g, const Subgroup& h,
                                  uint64_t point_cap = kDefaultPointCap,
                                  uint64_t table_cap = kDefaultTableCap);

    ActionKind kind() const { return kind_; }
    const Group& group() const { return *grp_; }
    GroupPtr group_ptr() const { return grp_; }
    const std::string& name() const { return name_; }
    uint32_t size() const { return omega_; }
    bool faithful() const { return faithful_; }

    uint32_t apply(uint32_t elem_id, uint32_t pt) const;
    bool fixes(uint32_t elem_id, const std::vector<uint32_t>& pts) const;
    bool fixes_all(uint32_t elem_id) const;

    std::string label(uint32_t pt) const;

    /// Projective point lookup (projective_line actions).
    std::optional<uint32_t> find_point(const std::vector<uint32_t>& v) const;
    /// Decomposition lookup (decomposition actions).
    std::optional<uint32_t> find_decomp(const Decomp& d) const;
    /// Coset point of a group element (coset actions).
    uint32_t coset_point(uint32_t elem_id) const;
    /// Least member id representing the point's coset (coset actions).
    uint32_t coset_rep(uint32_t pt) const;

    /// Orbit partition of Omega under the set of members (a subgroup);
    /// orbits are sorted internally and listed by least point.
    std::vector<std::vector<uint32_t>> orbits(const std::vector<uint32_t>& members) const;

    /// { g in members : pt^g = pt for all pts }; empty pts returns members.
    std::vector<uint32_t> pointwise_stabilizer(const std::vector<uint32_t>& members,
                                               const std::vector<uint32_t>& pts) const;

    std::string to_json() const;

private:
    Action() = default;
    void finish(uint64_t table_cap);  // table, faithfulness, transitivity
    uint32_t apply_direct(uint32_t elem_id, uint32_t pt) const;

    ActionKind kind_ = ActionKind::cosets;
    GroupPtr grp_;
    std::string name_;
    uint32_t omega_ = 0;
    bool faithful_ = false;

    unsigned ebits_ = 0;
    std::vector<uint64_t> point_codes_;                   // sorted (vector kinds)
    std::unordered_map<uint64_t, uint32_t> point_index_;  // code -> pt
    unsigned vecs_per_point_ = 0;                         // 1-spaces per point

    std::vector<uint32_t> coset_rep_;       // cosets: pt -> least member id
    std::vector<uint32_t> point_of_elem_;   // cosets: member id -> pt

    std::vector<uint32_t> table_;  // |G| x |Omega| images when built
    bool tabled_ = false;

    uint64_t pack_point(const std::vector<std::vector<uint32_t>>& vecs) const;
    std::vector<std::vector<uint32_t>> unpack_point(uint64_t code) const;
};

}  // namespace gaction
}  // namespace irredlab
