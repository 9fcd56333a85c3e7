#include "irredlab/chainstats.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace irredlab {
namespace chainstats {

const char* stat_name(Stat s) {
    switch (s) {
        case Stat::base_min: return "base";
        case Stat::base_max: return "Base";
        case Stat::height: return "Height";
        case Stat::irred: return "Irred";
    }
    return "?";
}

std::string ChainReport::to_json(const Action& a) const {
    std::ostringstream os;
    os << "{\"stat\":\"" << stat_name(stat) << "\",\"value\":" << value << ",\"witness\":[";
    for (size_t i = 0; i < witness.size(); ++i) {
        if (i) os << ",";
        os << "\"" << a.label(witness[i]) << "\"";
    }
    os << "],\"nodes\":" << nodes << ",\"memo_hits\":" << memo_hits << ",\"ms\":" << ms
       << ",\"exact\":" << (exact ? "true" : "false") << "}";
    return os.str();
}

PredicateReport predicates(const Action& a, const std::vector<uint32_t>& seq) {
    return predicates(a, a.group().whole().ids, seq);
}

PredicateReport predicates(const Action& a, const std::vector<uint32_t>& members,
                           const std::vector<uint32_t>& seq) {
    PredicateReport r;
    // irredundance: strict descent at every prefix
    r.is_irredundant = true;
    std::vector<uint32_t> cur = members;
    for (uint32_t pt : seq) {
        auto next = a.pointwise_stabilizer(cur, {pt});
        if (next.size() == cur.size()) r.is_irredundant = false;
        cur = std::move(next);
    }
    r.is_base = cur.size() == 1;
    // independence and minimality: one-deleted stabilizers
    r.is_independent = true;
    bool every_deletion_not_base = true;
    for (size_t k = 0; k < seq.size(); ++k) {
        std::vector<uint32_t> del;
        del.reserve(seq.size() - 1);
        for (size_t i = 0; i < seq.size(); ++i)
            if (i != k) del.push_back(seq[i]);
        auto dk = a.pointwise_stabilizer(members, del);
        if (dk.size() == cur.size()) r.is_independent = false;
        if (dk.size() == 1) every_deletion_not_base = false;
    }
    r.is_minimal_base = r.is_base && every_deletion_not_base;
    return r;
}

namespace {

struct SubgroupPool {
    std::vector<std::vector<uint32_t>> by_id;
    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;

    static uint64_t hash(const std::vector<uint32_t>& v) {
        uint64_t h = 1469598103934665603ull;
        for (uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h ^ (uint64_t(v.size()) << 32);
    }

    uint32_t intern(std::vector<uint32_t> v) {
        uint64_t h = hash(v);
        auto& bucket = buckets[h];
        for (uint32_t sid : bucket)
            if (by_id[sid] == v) return sid;
        uint32_t sid = uint32_t(by_id.size());
        by_id.push_back(std::move(v));
        bucket.push_back(sid);
        return sid;
    }
};

struct BudgetHit {};

// Shared machinery of the four engines: interned subgroups, a
// (subgroup, point) -> stabilizer cache, and per-subgroup orbit partitions of
// the search domain.
struct Search {
    const Action& act;
    const SearchLimits& lim;
    std::vector<uint32_t> domain;
    SubgroupPool pool;
    std::unordered_map<uint64_t, uint32_t> stab_cache;
    std::unordered_map<uint32_t, std::vector<std::vector<uint32_t>>> orbit_cache;
    uint64_t nodes = 0;
    uint64_t memo_hits = 0;

    Search(const Action& a, std::vector<uint32_t> dom, const SearchLimits& l)
        : act(a), lim(l), domain(std::move(dom)) {}

    void bump() {
        if (++nodes > lim.node_cap) throw BudgetHit{};
    }

    uint32_t stab(uint32_t sid, uint32_t pt) {
        uint64_t key = uint64_t(sid) * act.size() + pt;
        auto it = stab_cache.find(key);
        if (it != stab_cache.end()) return it->second;
        if (stab_cache.size() > lim.memo_cap) stab_cache.clear();
        uint32_t out = pool.intern(act.pointwise_stabilizer(pool.by_id[sid], {pt}));
        stab_cache.emplace(key, out);
        return out;
    }

    // orbits of subgroup `sid` on the domain, each sorted, listed by least pt
    const std::vector<std::vector<uint32_t>>& orbits(uint32_t sid) {
        auto it = orbit_cache.find(sid);
        if (it != orbit_cache.end()) return it->second;
        if (orbit_cache.size() > lim.memo_cap / 64 + 16) orbit_cache.clear();
        const auto& members = pool.by_id[sid];
        std::vector<std::vector<uint32_t>> out;
        std::vector<bool> seen(act.size(), false);
        for (uint32_t pt : domain) {
            if (seen[pt]) continue;
            std::vector<uint32_t> orb;
            for (uint32_t m : members) {
                uint32_t im = act.apply(m, pt);
                if (!seen[im]) {
                    seen[im] = true;
                    orb.push_back(im);
                }
            }
            std::sort(orb.begin(), orb.end());
            out.push_back(std::move(orb));
        }
        return orbit_cache.emplace(sid, std::move(out)).first->second;
    }

    // least element of pt's orbit under `sid` that is greater than `last`;
    // `pt` survives the canonical-image pruning iff that element is pt itself
    bool min_of_orbit_above(uint32_t sid, uint32_t pt, int64_t last) {
        for (const auto& orb : orbits(sid)) {
            if (!std::binary_search(orb.begin(), orb.end(), pt)) continue;
            for (uint32_t x : orb)
                if (int64_t(x) > last) return x == pt;
            return false;  // unreachable: pt itself is > last
        }
        throw Error("min_of_orbit_above: point not in domain partition");
    }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void check_restricted_faithful(const Action& a, const std::vector<uint32_t>& members,
                               const std::vector<uint32_t>& domain) {
    auto kernel = a.pointwise_stabilizer(members, domain);
    if (kernel.size() != 1)
        throw Error("search engine: the restricted action is not faithful (kernel order " +
                    std::to_string(kernel.size()) + ")");
}

// ---- Irred / base: chain searches memoized on the stabilizer subgroup ----
//
// For a faithful action, Irred is the length of the longest strictly
// descending chain of pointwise stabilizers (every maximal strict chain ends
// at the trivial group), and base is the length of the shortest. Both values
// are conjugation-invariant functions of the current stabilizer, so
// branching over orbit representatives and memoizing on the subgroup is
// sound.
struct ChainEngine {
    Search s;
    bool minimize;
    struct Entry {
        int32_t value;
        uint32_t best_pt;
    };
    std::unordered_map<uint32_t, Entry> memo;
    uint32_t deepest = 0;
    std::vector<uint32_t> deepest_path, path;

    ChainEngine(const Action& a, std::vector<uint32_t> dom, const SearchLimits& l, bool mini)
        : s(a, std::move(dom), l), minimize(mini) {}

    int32_t run(uint32_t sid, uint32_t depth) {
        if (s.pool.by_id[sid].size() == 1) {
            // completed strict chain ends at the trivial subgroup
            if (depth > deepest) {
                deepest = depth;
                deepest_path = path;
            }
            return 0;
        }
        auto it = memo.find(sid);
        if (it != memo.end()) {
            ++s.memo_hits;
            return it->second.value;
        }
        s.bump();
        if (memo.size() > s.lim.memo_cap) memo.clear();
        size_t cur = s.pool.by_id[sid].size();
        int32_t best = minimize ? INT32_MAX : -1;
        uint32_t best_pt = 0;
        for (const auto& orb : s.orbits(sid)) {
            uint32_t rep = orb[0];
            uint32_t child = s.stab(sid, rep);
            if (s.pool.by_id[child].size() == cur) continue;  // no strict drop
            path.push_back(rep);
            int32_t v = 1 + run(child, depth + 1);
            path.pop_back();
            if (minimize ? v < best : v > best) {
                best = v;
                best_pt = rep;
            }
        }
        if (best < 0 || best == INT32_MAX)
            throw Error("chain search: faithful action but no dropping point");
        memo.emplace(sid, Entry{best, best_pt});
        return best;
    }

    std::vector<uint32_t> witness(uint32_t root_sid) {
        std::vector<uint32_t> w;
        uint32_t sid = root_sid;
        while (s.pool.by_id[sid].size() > 1) {
            auto& e = memo.at(sid);
            w.push_back(e.best_pt);
            sid = s.stab(sid, e.best_pt);
        }
        return w;
    }
};

// greedy seed for base_min diagnostics: repeatedly pick the point with the
// largest stabilizer drop, ties by least point id
std::vector<uint32_t> greedy_base(const Action& a, const std::vector<uint32_t>& members,
                                  const std::vector<uint32_t>& domain) {
    std::vector<uint32_t> seq, cur = members;
    while (cur.size() > 1) {
        size_t best_size = cur.size() + 1;
        uint32_t best_pt = 0;
        std::vector<uint32_t> best_stab;
        for (uint32_t pt : domain) {
            auto st = a.pointwise_stabilizer(cur, {pt});
            if (st.size() < best_size) {
                best_size = st.size();
                best_pt = pt;
                best_stab = std::move(st);
            }
        }
        if (best_size >= cur.size()) throw Error("greedy_base: stuck (non-faithful action?)");
        seq.push_back(best_pt);
        cur = std::move(best_stab);
    }
    return seq;
}

// ---- Height / Base: independent-set search over sorted point sets ----
//
// Independence is hereditary (deleting a point of an independent set leaves
// an independent set), so independent sets are enumerated by extending in
// increasing point order, rejecting extensions that violate any deletion
// condition. Along the path we carry, for each chosen point, the interned
// pointwise stabilizer of the set with that point deleted; a candidate is
// vetoed when some deleted-stabilizer would collapse onto the new full
// stabilizer. A candidate must also be the least element of its orbit under
// the current stabilizer among points above the previous pick: the
// lexicographically least image of any independent set survives this rule,
// because each deleted-stabilizer contains the current stabilizer and is
// therefore fixed by the conjugations used.
//
// The memo key is (stabilizer, last point, sorted deleted-stabilizer set):
// those three data determine the set of valid extensions exactly. The value
// is the best extension size (-1 when mode requires a trivial finish and
// none exists).
struct SetEngine {
    Search s;
    bool need_trivial;  // Base: only extensions ending with trivial stabilizer count
    struct Key {
        uint32_t sid;
        int64_t last;
        std::vector<uint32_t> dsids;
        bool operator==(const Key& o) const {
            return sid == o.sid && last == o.last && dsids == o.dsids;
        }
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            uint64_t h = SubgroupPool::hash(k.dsids);
            h ^= (uint64_t(k.sid) << 1) ^ (uint64_t(k.last + 1) << 24);
            return size_t(h * 0x9e3779b97f4a7c15ull);
        }
    };
    struct Entry {
        int32_t ext;
        uint32_t best_pt;
    };
    std::unordered_map<Key, Entry, KeyHash> memo;
    int32_t incumbent = -1;
    std::vector<uint32_t> incumbent_set, path;

    SetEngine(const Action& a, std::vector<uint32_t> dom, const SearchLimits& l, bool trivial)
        : s(a, std::move(dom), l), need_trivial(trivial) {}

    int32_t run(uint32_t sid, int64_t last, std::vector<uint32_t> dsids) {
        size_t cur = s.pool.by_id[sid].size();
        // the path itself is a valid incumbent: an independent set, and for
        // Base an independent base once the stabilizer is trivial
        if ((!need_trivial || cur == 1) && int32_t(path.size()) > incumbent) {
            incumbent = int32_t(path.size());
            incumbent_set = path;
        }
        std::sort(dsids.begin(), dsids.end());
        dsids.erase(std::unique(dsids.begin(), dsids.end()), dsids.end());
        Key key{sid, last, dsids};
        auto it = memo.find(key);
        if (it != memo.end()) {
            ++s.memo_hits;
            return it->second.ext;
        }
        s.bump();
        if (memo.size() > s.lim.memo_cap) memo.clear();
        int32_t best = (!need_trivial || cur == 1) ? 0 : -1;
        uint32_t best_pt = 0;
        if (cur > 1) {  // a trivial stabilizer admits no further drop
            for (uint32_t pt : s.domain) {
                if (int64_t(pt) <= last) continue;
                if (!s.min_of_orbit_above(sid, pt, last)) continue;
                uint32_t child = s.stab(sid, pt);
                size_t child_size = s.pool.by_id[child].size();
                if (child_size == cur) continue;  // new point must drop
                // deletion conditions for the old points
                std::vector<uint32_t> nd;
                nd.reserve(dsids.size() + 1);
                bool ok = true;
                for (uint32_t d : dsids) {
                    uint32_t ndd = s.stab(d, pt);
                    if (s.pool.by_id[ndd].size() == child_size) {
                        ok = false;
                        break;
                    }
                    nd.push_back(ndd);
                }
                if (!ok) continue;
                nd.push_back(sid);  // deleting the new point recovers the old stabilizer
                path.push_back(pt);
                int32_t sub = run(child, pt, std::move(nd));
                path.pop_back();
                if (sub >= 0 && sub + 1 > best) {
                    best = sub + 1;
                    best_pt = pt;
                }
            }
        }
        memo.emplace(std::move(key), Entry{best, best_pt});
        return best;
    }

    std::vector<uint32_t> witness(uint32_t root_sid) {
        std::vector<uint32_t> w;
        uint32_t sid = root_sid;
        int64_t last = -1;
        std::vector<uint32_t> dsids;
        while (true) {
            std::vector<uint32_t> sorted_d = dsids;
            std::sort(sorted_d.begin(), sorted_d.end());
            sorted_d.erase(std::unique(sorted_d.begin(), sorted_d.end()), sorted_d.end());
            auto& e = memo.at(Key{sid, last, sorted_d});
            if (e.ext == 0 || e.ext < 0) break;
            uint32_t pt = e.best_pt;
            std::vector<uint32_t> nd;
            for (uint32_t d : dsids) nd.push_back(s.stab(d, pt));
            nd.push_back(sid);
            sid = s.stab(sid, pt);
            dsids = std::move(nd);
            last = pt;
            w.push_back(pt);
        }
        return w;
    }
};

std::vector<uint32_t> full_domain(const Action& a) {
    std::vector<uint32_t> d(a.size());
    for (uint32_t i = 0; i < a.size(); ++i) d[i] = i;
    return d;
}

void verify_report(const Action& a, const std::vector<uint32_t>& members, ChainReport& r) {
    // any of the four values is the length of some strict subgroup chain,
    // so it is at most floor(log2 |G|)
    if (r.value >= 64 || (uint64_t(1) << r.value) > members.size())
        throw Error("engine: value exceeds log2 of the group order");
    if (r.value != r.witness.size()) throw Error("engine: witness length mismatch");
    auto pr = predicates(a, members, r.witness);
    switch (r.stat) {
        case Stat::irred:
            if (!pr.is_irredundant || (r.exact && !pr.is_base))
                throw Error("engine: Irred witness failed re-verification");
            break;
        case Stat::base_min:
            if (r.exact && !(pr.is_base && pr.is_minimal_base))
                throw Error("engine: base witness failed re-verification");
            break;
        case Stat::height:
            if (!pr.is_independent) throw Error("engine: Height witness failed re-verification");
            break;
        case Stat::base_max:
            if (!(pr.is_independent && (!r.exact || pr.is_base) && (!r.exact || pr.is_minimal_base)))
                throw Error("engine: Base witness failed re-verification");
            break;
    }
}

ChainReport run_chain(const Action& a, std::vector<uint32_t> members, std::vector<uint32_t> domain,
                      const SearchLimits& lim, bool minimize) {
    auto t0 = std::chrono::steady_clock::now();
    check_restricted_faithful(a, members, domain);
    ChainReport r;
    r.stat = minimize ? Stat::base_min : Stat::irred;
    ChainEngine eng(a, std::move(domain), lim, minimize);
    uint32_t root = eng.s.pool.intern(std::move(members));
    try {
        r.value = uint32_t(eng.run(root, 0));
        r.witness = eng.witness(root);
        r.exact = true;
    } catch (const BudgetHit&) {
        r.exact = false;
        if (minimize) {
            r.witness = greedy_base(a, eng.s.pool.by_id[root], eng.s.domain);
            r.value = uint32_t(r.witness.size());
        } else {
            r.witness = eng.deepest_path;
            r.value = eng.deepest;
        }
    }
    r.nodes = eng.s.nodes;
    r.memo_hits = eng.s.memo_hits;
    r.ms = ms_since(t0);
    verify_report(a, eng.s.pool.by_id[root], r);
    return r;
}

ChainReport run_set(const Action& a, std::vector<uint32_t> members, std::vector<uint32_t> domain,
                    const SearchLimits& lim, bool need_trivial) {
    auto t0 = std::chrono::steady_clock::now();
    check_restricted_faithful(a, members, domain);
    ChainReport r;
    r.stat = need_trivial ? Stat::base_max : Stat::height;
    SetEngine eng(a, std::move(domain), lim, need_trivial);
    uint32_t root = eng.s.pool.intern(std::move(members));
    try {
        int32_t v = eng.run(root, -1, {});
        if (v < 0) throw Error("set search: no base exists for a faithful action");
        r.value = uint32_t(v);
        r.witness = eng.witness(root);
        r.exact = true;
    } catch (const BudgetHit&) {
        r.exact = false;
        r.value = uint32_t(std::max<int32_t>(eng.incumbent, 0));
        r.witness = eng.incumbent_set;
    }
    r.nodes = eng.s.nodes;
    r.memo_hits = eng.s.memo_hits;
    r.ms = ms_since(t0);
    verify_report(a, eng.s.pool.by_id[root], r);
    return r;
}

}  // namespace

ChainReport irred_max(const Action& a, const SearchLimits& lim) {
    return irred_max(a, a.group().whole().ids, full_domain(a), lim);
}
ChainReport base_min(const Action& a, const SearchLimits& lim) {
    return base_min(a, a.group().whole().ids, full_domain(a), lim);
}
ChainReport height_max(const Action& a, const SearchLimits& lim) {
    return height_max(a, a.group().whole().ids, full_domain(a), lim);
}
ChainReport base_max_minimal(const Action& a, const SearchLimits& lim) {
    return base_max_minimal(a, a.group().whole().ids, full_domain(a), lim);
}

ChainReport irred_max(const Action& a, std::vector<uint32_t> members,
                      std::vector<uint32_t> domain, const SearchLimits& lim) {
    return run_chain(a, std::move(members), std::move(domain), lim, false);
}
ChainReport base_min(const Action& a, std::vector<uint32_t> members, std::vector<uint32_t> domain,
                     const SearchLimits& lim) {
    return run_chain(a, std::move(members), std::move(domain), lim, true);
}
ChainReport height_max(const Action& a, std::vector<uint32_t> members,
                       std::vector<uint32_t> domain, const SearchLimits& lim) {
    return run_set(a, std::move(members), std::move(domain), lim, false);
}
ChainReport base_max_minimal(const Action& a, std::vector<uint32_t> members,
                             std::vector<uint32_t> domain, const SearchLimits& lim) {
    return run_set(a, std::move(members), std::move(domain), lim, true);
}

OracleStats oracle_stats(const Action& a) {
    if (a.size() > 12) throw Error("oracle_stats: |Omega| > 12");
    if (a.group().order() > 10'000) throw Error("oracle_stats: |G| > 10^4");
    const auto members = a.group().whole().ids;
    const uint32_t n = a.size();
    const uint32_t nsub = uint32_t(1) << n;

    // subset pass: base, Base, Height from all subsets, each stabilizer
    // filtered from scratch
    std::vector<size_t> stab_size(nsub);
    std::vector<std::vector<uint32_t>> stab(nsub);
    for (uint32_t mask = 0; mask < nsub; ++mask) {
        std::vector<uint32_t> pts;
        for (uint32_t i = 0; i < n; ++i)
            if (mask & (1u << i)) pts.push_back(i);
        stab[mask] = a.pointwise_stabilizer(members, pts);
        stab_size[mask] = stab[mask].size();
    }
    OracleStats out;
    out.base = n + 1;
    for (uint32_t mask = 0; mask < nsub; ++mask) {
        uint32_t k = uint32_t(std::popcount(mask));
        bool indep = true;
        for (uint32_t i = 0; i < n && indep; ++i)
            if ((mask & (1u << i)) && stab_size[mask ^ (1u << i)] == stab_size[mask]) indep = false;
        bool is_base = stab_size[mask] == 1;
        if (is_base) out.base = std::min(out.base, k);
        if (indep) out.height = std::max(out.height, k);
        if (indep && is_base) out.base_max = std::max(out.base_max, k);
    }
    if (out.base == n + 1) throw Error("oracle_stats: no base (non-faithful action)");

    // sequence pass for Irred: duplicate-free sequences with strict descent,
    // counting those that end at the trivial stabilizer
    uint32_t irred_best = 0;
    struct Frame {
        std::vector<uint32_t> stab;
        uint32_t mask;
        uint32_t len;
    };
    std::vector<Frame> dfs;
    dfs.push_back({members, 0, 0});
    while (!dfs.empty()) {
        Frame fr = std::move(dfs.back());
        dfs.pop_back();
        if (fr.stab.size() == 1) irred_best = std::max(irred_best, fr.len);
        for (uint32_t pt = 0; pt < n; ++pt) {
            if (fr.mask & (1u << pt)) continue;
            auto next = a.pointwise_stabilizer(fr.stab, {pt});
            if (next.size() < fr.stab.size())
                dfs.push_back({std::move(next), fr.mask | (1u << pt), fr.len + 1});
        }
    }
    out.irred = irred_best;
    return out;
}

InequalityReport check_inequalities(uint32_t base, uint32_t base_max, uint32_t height,
                                    uint32_t irred) {
    InequalityReport r;
    r.base = base;
    r.base_max = base_max;
    r.height = height;
    r.irred = irred;
    r.rc_bound = height + 1;
    r.ok = base <= base_max && base_max <= height && height <= irred;
    return r;
}

InequalityReport check_inequalities(const OracleStats& s) {
    return check_inequalities(s.base, s.base_max, s.height, s.irred);
}

SocleReport socle_chain_check(const Action& a, const Subgroup& s, const SearchLimits& lim) {
    if (s.parent != a.group_ptr()) throw Error("socle_chain_check: subgroup of a different group");
    if (!a.group().is_normal(s)) throw Error("socle_chain_check: subgroup is not normal");
    SocleReport r;
    r.irred_group = irred_max(a, lim).value;
    r.irred_socle = irred_max(a, s.ids, full_domain(a), lim).value;
    r.index = a.group().order() / s.order();
    uint32_t diff = r.irred_group > r.irred_socle ? r.irred_group - r.irred_socle : 0;
    r.ok = diff < 64 && (uint64_t(1) << diff) <= r.index;
    return r;
}

}  // namespace chainstats
}  // namespace irredlab
