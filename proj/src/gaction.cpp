#include "irredlab/gaction.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace irredlab {
namespace gaction {

using grp::Mat;
using grp::mat_det;
using grp::vec_apply;

std::vector<uint32_t> normalize_projective(const Field& F, std::vector<uint32_t> v) {
    for (uint32_t c : v)
        if (c) {
            if (c != 1) {
                uint32_t s = F.inv(c);
                for (auto& x : v) x = F.mul(x, s);
            }
            return v;
        }
    throw Error("normalize_projective: zero vector");
}

Decomp decomp_normalize(const Field& F, Decomp d) {
    for (auto& v : d) v = normalize_projective(F, std::move(v));
    std::sort(d.begin(), d.end());
    return d;
}

Decomp decomp_apply(const Field& F, const GroupElem& e, const Decomp& d) {
    Decomp out;
    out.reserve(d.size());
    for (const auto& v : d) out.push_back(vec_apply(F, v, e.m, e.frobexp));
    return decomp_normalize(F, std::move(out));
}

bool decomp_spans(const Field& F, const Decomp& d) {
    Mat m;
    m.n = uint8_t(d.size());
    for (unsigned i = 0; i < d.size(); ++i)
        for (unsigned j = 0; j < d.size(); ++j) m.at(i, j) = d[i][j];
    return mat_det(F, m) != 0;
}

uint64_t Action::pack_point(const std::vector<std::vector<uint32_t>>& vecs) const {
    uint64_t code = 0;
    for (const auto& v : vecs)
        for (uint32_t c : v) code = (code << ebits_) | c;
    return code;
}

std::vector<std::vector<uint32_t>> Action::unpack_point(uint64_t code) const {
    unsigned n = grp_->dim();
    std::vector<std::vector<uint32_t>> vecs(vecs_per_point_, std::vector<uint32_t>(n));
    uint64_t mask = (uint64_t(1) << ebits_) - 1;
    for (unsigned i = vecs_per_point_; i-- > 0;)
        for (unsigned j = n; j-- > 0;) {
            vecs[i][j] = uint32_t(code & mask);
            code >>= ebits_;
        }
    return vecs;
}

ActionPtr Action::projective_line(GroupPtr g, uint64_t table_cap) {
    if (g->dim() != 2) throw Error("projective_line: group must be 2-dimensional");
    auto a = std::shared_ptr<Action>(new Action());
    a->kind_ = ActionKind::projective_line;
    a->grp_ = std::move(g);
    const Field& F = a->grp_->field();
    a->name_ = "P1(" + std::to_string(F.q()) + ")";
    a->ebits_ = std::max(1u, unsigned(std::bit_width(uint32_t(F.q() - 1))));
    a->vecs_per_point_ = 1;
    // normalized vectors in lexicographic order: (0,1) then (1,x)
    std::vector<std::vector<uint32_t>> pts;
    pts.push_back({0, 1});
    for (uint32_t x = 0; x < F.q(); ++x) pts.push_back({1, x});
    for (auto& v : pts) a->point_codes_.push_back(a->pack_point({v}));
    std::sort(a->point_codes_.begin(), a->point_codes_.end());
    a->omega_ = uint32_t(a->point_codes_.size());
    for (uint32_t i = 0; i < a->omega_; ++i) a->point_index_[a->point_codes_[i]] = i;
    a->finish(table_cap);
    return a;
}

ActionPtr Action::decomposition_action(GroupPtr g, uint64_t point_cap, uint64_t table_cap) {
    auto a = std::shared_ptr<Action>(new Action());
    a->kind_ = ActionKind::decomposition;
    a->grp_ = std::move(g);
    const Field& F = a->grp_->field();
    unsigned n = a->grp_->dim();
    a->name_ = "Decomp(" + std::to_string(n) + "," + std::to_string(F.q()) + ")";
    a->ebits_ = std::max(1u, unsigned(std::bit_width(uint32_t(F.q() - 1))));
    a->vecs_per_point_ = n;
    if (uint64_t(n) * n * a->ebits_ > 64) throw Error("decomposition_action: encoding overflow");

    // expected count |GL_n(q)| / ((q-1)^n n!), computed up front for the cap
    {
        long double cnt = 1.0L;
        uint64_t qn = 1;
        for (unsigned i = 0; i < n; ++i) qn *= F.q();
        uint64_t qi = 1;
        for (unsigned i = 0; i < n; ++i) {
            cnt *= (long double)(qn - qi);
            qi *= F.q();
        }
        for (unsigned i = 0; i < n; ++i) cnt /= (long double)(F.q() - 1);
        for (unsigned i = 2; i <= n; ++i) cnt /= (long double)i;
        if (cnt > (long double)point_cap)
            throw Error("decomposition_action: point count " + std::to_string((double)cnt) +
                        " exceeds cap " + std::to_string(point_cap));
    }

    // all 1-spaces
    std::vector<std::vector<uint32_t>> spaces;
    {
        std::vector<uint32_t> v(n, 0);
        uint64_t total = 1;
        for (unsigned i = 0; i < n; ++i) total *= F.q();
        for (uint64_t code = 1; code < total; ++code) {
            uint64_t c = code;
            for (unsigned i = n; i-- > 0;) {
                v[i] = uint32_t(c % F.q());
                c /= F.q();
            }
            bool normalized = false;
            for (unsigned i = 0; i < n; ++i) {
                if (v[i] == 0) continue;
                normalized = (v[i] == 1);
                break;
            }
            if (normalized) spaces.push_back(v);
        }
    }
    // spanning n-subsets
    std::vector<unsigned> idx(n);
    for (unsigned i = 0; i < n; ++i) idx[i] = i;
    Decomp cur(n);
    auto emit = [&]() {
        for (unsigned i = 0; i < n; ++i) cur[i] = spaces[idx[i]];
        if (decomp_spans(F, cur)) a->point_codes_.push_back(a->pack_point(cur));
    };
    while (true) {
        emit();
        int i = int(n) - 1;
        while (i >= 0 && idx[i] == spaces.size() - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (unsigned j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(a->point_codes_.begin(), a->point_codes_.end());
    a->omega_ = uint32_t(a->point_codes_.size());
    a->point_index_.reserve(a->omega_ * 2);
    for (uint32_t i = 0; i < a->omega_; ++i) a->point_index_[a->point_codes_[i]] = i;
    a->finish(table_cap);
    return a;
}

ActionPtr Action::coset_action(GroupPtr g, const Subgroup& h, uint64_t point_cap,
                               uint64_t table_cap) {
    if (h.parent != g) throw Error("coset_action: subgroup of a different group");
    if (h.ids.empty()) throw Error("coset_action: empty subgroup");
    uint64_t index = g->order() / h.order();
    if (index > point_cap) throw Error("coset_action: index exceeds point cap");
    auto a = std::shared_ptr<Action>(new Action());
    a->kind_ = ActionKind::cosets;
    a->grp_ = g;
    a->name_ = "Cosets(" + g->name() + ":" + std::to_string(h.order()) + ")";
    a->point_of_elem_.assign(g->order(), UINT32_MAX);
    for (uint32_t id = 0; id < g->order(); ++id) {
        if (a->point_of_elem_[id] != UINT32_MAX) continue;
        uint32_t pt = uint32_t(a->coset_rep_.size());
        a->coset_rep_.push_back(id);  // ids ascend, so the first hit is least
        for (uint32_t m : h.ids) a->point_of_elem_[g->mul(m, id)] = pt;
        if (a->point_of_elem_[id] != pt) throw Error("coset_action: rep escaped its own coset");
    }
    a->omega_ = uint32_t(a->coset_rep_.size());
    if (a->omega_ != index) throw Error("coset_action: coset count mismatch (subgroup not closed?)");
    a->finish(table_cap);
    return a;
}

uint32_t Action::apply_direct(uint32_t elem_id, uint32_t pt) const {
    const Field& F = grp_->field();
    switch (kind_) {
        case ActionKind::cosets:
            return point_of_elem_[grp_->mul(coset_rep_[pt], elem_id)];
        case ActionKind::projective_line: {
            GroupElem e = grp_->elem(elem_id);
            auto vecs = unpack_point(point_codes_[pt]);
            auto w = normalize_projective(F, vec_apply(F, vecs[0], e.m, e.frobexp));
            return point_index_.at(pack_point({w}));
        }
        case ActionKind::decomposition: {
            GroupElem e = grp_->elem(elem_id);
            auto d = decomp_apply(F, e, unpack_point(point_codes_[pt]));
            return point_index_.at(pack_point(d));
        }
    }
    throw Error("apply: unknown action kind");
}

uint32_t Action::apply(uint32_t elem_id, uint32_t pt) const {
    if (tabled_) return table_[size_t(elem_id) * omega_ + pt];
    return apply_direct(elem_id, pt);
}

bool Action::fixes(uint32_t elem_id, const std::vector<uint32_t>& pts) const {
    for (uint32_t pt : pts)
        if (apply(elem_id, pt) != pt) return false;
    return true;
}

bool Action::fixes_all(uint32_t elem_id) const {
    for (uint32_t pt = 0; pt < omega_; ++pt)
        if (apply(elem_id, pt) != pt) return false;
    return true;
}

void Action::finish(uint64_t table_cap) {
    uint64_t entries = uint64_t(grp_->order()) * omega_;
    if (entries <= table_cap) {
        table_.resize(entries);
        for (uint32_t e = 0; e < grp_->order(); ++e)
            for (uint32_t pt = 0; pt < omega_; ++pt)
                table_[size_t(e) * omega_ + pt] = apply_direct(e, pt);
        tabled_ = true;
    }
    // identity fixes every point
    for (uint32_t pt = 0; pt < omega_; ++pt)
        if (apply(grp_->identity_id(), pt) != pt)
            throw Error("action: identity moves a point");
    // transitivity: orbit of point 0 under the full (enumerated) group
    {
        std::vector<bool> hit(omega_, false);
        uint32_t count = 0;
        for (uint32_t e = 0; e < grp_->order(); ++e) {
            uint32_t im = apply(e, 0);
            if (!hit[im]) {
                hit[im] = true;
                ++count;
            }
        }
        if (count != omega_) throw Error("action: not transitive");
    }
    // faithfulness: triviality of the kernel
    faithful_ = true;
    for (uint32_t e = 0; e < grp_->order() && faithful_; ++e) {
        if (e == grp_->identity_id()) continue;
        if (fixes_all(e)) faithful_ = false;
    }
}

std::string Action::label(uint32_t pt) const {
    const Field& F = grp_->field();
    std::ostringstream os;
    if (kind_ == ActionKind::cosets) {
        os << "H*g" << coset_rep_[pt];
        return os.str();
    }
    auto vecs = unpack_point(point_codes_[pt]);
    if (vecs.size() > 1) os << "{";
    for (size_t k = 0; k < vecs.size(); ++k) {
        if (k) os << ",";
        os << "<";
        for (size_t i = 0; i < vecs[k].size(); ++i) {
            if (i) os << " ";
            os << F.str(vecs[k][i]);
        }
        os << ">";
    }
    if (vecs.size() > 1) os << "}";
    return os.str();
}

std::optional<uint32_t> Action::find_point(const std::vector<uint32_t>& v) const {
    if (kind_ != ActionKind::projective_line) throw Error("find_point: wrong action kind");
    auto w = normalize_projective(grp_->field(), v);
    auto it = point_index_.find(pack_point({w}));
    if (it == point_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<uint32_t> Action::find_decomp(const Decomp& d) const {
    if (kind_ != ActionKind::decomposition) throw Error("find_decomp: wrong action kind");
    auto dd = decomp_normalize(grp_->field(), d);
    auto it = point_index_.find(pack_point(dd));
    if (it == point_index_.end()) return std::nullopt;
    return it->second;
}

uint32_t Action::coset_point(uint32_t elem_id) const {
    if (kind_ != ActionKind::cosets) throw Error("coset_point: wrong action kind");
    return point_of_elem_.at(elem_id);
}

uint32_t Action::coset_rep(uint32_t pt) const {
    if (kind_ != ActionKind::cosets) throw Error("coset_rep: wrong action kind");
    return coset_rep_.at(pt);
}

std::vector<std::vector<uint32_t>> Action::orbits(const std::vector<uint32_t>& members) const {
    std::vector<std::vector<uint32_t>> out;
    std::vector<bool> seen(omega_, false);
    for (uint32_t pt = 0; pt < omega_; ++pt) {
        if (seen[pt]) continue;
        std::vector<uint32_t> orb;
        for (uint32_t m : members) {
            uint32_t im = apply(m, pt);
            if (!seen[im]) {
                seen[im] = true;
                orb.push_back(im);
            }
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

std::vector<uint32_t> Action::pointwise_stabilizer(const std::vector<uint32_t>& members,
                                                   const std::vector<uint32_t>& pts) const {
    if (pts.empty()) return members;  // empty sequence stabilizes to the whole subgroup
    std::vector<uint32_t> out;
    for (uint32_t m : members)
        if (fixes(m, pts)) out.push_back(m);
    return out;
}

std::string Action::to_json() const {
    std::ostringstream os;
    os << "{\"action_name\":\"" << name_ << "\",\"group_name\":\"" << grp_->name()
       << "\",\"omega_size\":" << omega_ << ",\"points\":[";
    for (uint32_t pt = 0; pt < omega_; ++pt) {
        if (pt) os << ",";
        os << "\"" << label(pt) << "\"";
    }
    os << "]}";
    return os.str();
}

}  // namespace gaction
}  // namespace irredlab
