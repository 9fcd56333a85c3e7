#include "doctest.h"
#include "irredlab/grp.hpp"

#include <cstdio>
#include <random>
#include <set>

using namespace irredlab;
using namespace irredlab::grp;
using ffield::Field;

TEST_CASE("grp: closure basics") {
    auto f4 = Field::make(2, 2);
    auto triv = Group::closure(f4, 2, {GroupElem{Mat::identity(2), 0}}, "trivial");
    CHECK(triv->order() == 1);

    auto sl24 = special_linear(2, f4);
    CHECK(sl24->order() == 60);  // q(q^2-1)

    auto f2 = Field::make(2, 1);
    auto gl32 = special_linear(3, f2);  // SL_3(2) = GL_3(2)
    CHECK(gl32->order() == 168);        // (8-1)(8-2)(8-4)

    CHECK_THROWS_AS(special_linear(2, Field::make(2, 4), 100), Error);  // cap
}

TEST_CASE("grp: full closure check on small groups") {
    auto sl22 = special_linear(2, Field::make(2, 1));
    CHECK(sl22->order() == 6);  // isomorphic to the symmetric group on 3 letters
    CHECK(sl22->whole().is_closed());
    auto sl24 = special_linear(2, Field::make(2, 2));
    CHECK(sl24->whole().is_closed());
}

TEST_CASE("grp: orders of larger linear groups") {
    CHECK(special_linear(2, Field::make(2, 4))->order() == 4080);
    CHECK(general_linear(2, Field::make(2, 2))->order() == 180);
    CHECK(general_linear(2, Field::make(3, 2))->order() == 5760);
}

TEST_CASE("grp: SL_3(5) order") {
    CHECK(special_linear(3, Field::make(5, 1))->order() == 372000);  // q^3(q^2-1)(q^3-1)
}

TEST_CASE("grp: semilinear extension") {
    auto f2 = Field::make(2, 1);
    auto sl32 = special_linear(3, f2);
    CHECK(semilinear_extension(sl32) == sl32);  // f = 1: unchanged

    auto gl24 = general_linear(2, Field::make(2, 2));
    auto gml24 = semilinear_extension(gl24);
    CHECK(gml24->order() == 360);  // |GL_2(4)| * 2
    CHECK(gml24->name() == "GammaL(2,4)");

    auto gml216 = semilinear_extension(general_linear(2, Field::make(2, 4)));
    CHECK(gml216->order() == 61200 * 4);

    // associativity of the pair multiplication on random triples
    const Field& F = gml216->field();
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10000; ++t) {
        GroupElem a = gml216->elem(uint32_t(rng() % gml216->order()));
        GroupElem b = gml216->elem(uint32_t(rng() % gml216->order()));
        GroupElem c = gml216->elem(uint32_t(rng() % gml216->order()));
        GroupElem l = elem_mul(F, elem_mul(F, a, b), c);
        GroupElem r = elem_mul(F, a, elem_mul(F, b, c));
        REQUIRE(l.m == r.m);
        REQUIRE(l.frobexp == r.frobexp);
    }
}

TEST_CASE("grp: semilinear pairs act compatibly on row vectors") {
    auto gml = semilinear_extension(general_linear(2, Field::make(2, 2)));
    const Field& F = gml->field();
    std::mt19937_64 rng(11);
    for (int t = 0; t < 2000; ++t) {
        GroupElem a = gml->elem(uint32_t(rng() % gml->order()));
        GroupElem b = gml->elem(uint32_t(rng() % gml->order()));
        std::vector<uint32_t> v{uint32_t(rng() % F.q()), uint32_t(rng() % F.q())};
        GroupElem ab = elem_mul(F, a, b);
        auto lhs = vec_apply(F, v, ab.m, ab.frobexp);
        auto mid = vec_apply(F, v, a.m, a.frobexp);
        auto rhs = vec_apply(F, mid, b.m, b.frobexp);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("grp: projective quotients") {
    auto psl24 = projective_quotient(special_linear(2, Field::make(2, 2)));
    CHECK(psl24->order() == 60);  // the only scalar in SL_2(4) is the identity

    auto pgml216 = projective_quotient(semilinear_extension(general_linear(2, Field::make(2, 4))));
    CHECK(pgml216->order() == 16320);  // 16*15*17*4
    CHECK(pgml216->name() == "PGammaL(2,16)");
    CHECK(pgml216->scalars().size() == 15);
    // |projective| * |scalars| = |input|
    CHECK(pgml216->order() * pgml216->scalars().size() == 61200u * 4);

    // scalar-free group: bijective relabeling
    auto sl24 = special_linear(2, Field::make(2, 2));
    auto p = projective_quotient(sl24);
    CHECK(p->order() == sl24->order());
}

TEST_CASE("grp: product-by-id matches raw multiplication") {
    auto g = projective_quotient(semilinear_extension(general_linear(2, Field::make(3, 2))));
    CHECK(g->order() == 1440);  // PGammaL(2,9)
    const Field& F = g->field();
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10000; ++t) {
        uint32_t a = uint32_t(rng() % g->order()), b = uint32_t(rng() % g->order());
        GroupElem raw = elem_mul(F, g->elem(a), g->elem(b));
        REQUIRE(g->canonical_code(raw) == g->canonical_code(g->elem(g->mul(a, b))));
        REQUIRE(g->inverse(g->inverse(a)) == a);
    }
    CHECK(g->mul(g->identity_id(), 5) == 5);
}

TEST_CASE("grp: singer normalizer at r = 3") {
    auto sd = singer_normalizer(3);
    CHECK(sd.group->order() == 168);
    CHECK(sd.normalizer.order() == 21);  // (2^3-1)*3
    CHECK(sd.cycle.order() == 7);
    CHECK(sd.group->order() / sd.normalizer.order() == 8);
    CHECK(sd.normalizer.is_closed());
    CHECK(sd.cycle.is_closed());

    // Singer property: the cycle acts irreducibly, so the orbit of a nonzero
    // vector covers all seven of them
    const Field& F = sd.group->field();
    uint32_t gen = 0;
    for (uint32_t id : sd.cycle.ids)
        if (sd.group->elem_order(id) == 7) { gen = id; break; }
    std::vector<uint32_t> v{1, 0, 0};
    std::set<std::vector<uint32_t>> orbit;
    for (int i = 0; i < 7; ++i) {
        orbit.insert(v);
        v = vec_apply(F, v, sd.group->elem(gen).m, 0);
    }
    CHECK(orbit.size() == 7);

    // distinct conjugates of the Singer cycle intersect trivially (exhaustive)
    std::set<std::vector<uint32_t>> conjugates;
    for (uint32_t g = 0; g < sd.group->order(); ++g)
        conjugates.insert(sd.cycle.conjugate(g).ids);
    CHECK(conjugates.size() == 8);
    std::vector<std::vector<uint32_t>> cs(conjugates.begin(), conjugates.end());
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j) {
            std::vector<uint32_t> common;
            std::set_intersection(cs[i].begin(), cs[i].end(), cs[j].begin(), cs[j].end(),
                                  std::back_inserter(common));
            REQUIRE(common.size() == 1);  // identity only
        }
}

TEST_CASE("grp: sylow2 and index-2 subgroup") {
    auto s2 = sylow2_and_index2(2);
    CHECK(s2.sylow.order() == 4);
    CHECK(s2.index2.order() == 2);
    CHECK(s2.sylow.is_closed());
    CHECK(s2.index2.is_closed());

    auto s3 = sylow2_and_index2(3);
    CHECK(s3.group->order() == 504);
    CHECK(s3.group->order() / s3.index2.order() == 126);  // 2(q^2-1)
    // H normal in U of index 2
    for (uint32_t u : s3.sylow.ids) CHECK(s3.group->normalizes(s3.index2, u));
    CHECK(s3.sylow.order() / s3.index2.order() == 2);
}

TEST_CASE("grp: centralizers") {
    auto sl24 = special_linear(2, Field::make(2, 2));
    CHECK(sl24->centralizer(GroupElem{Mat::identity(2), 0}).order() == 60);

    // regular semisimple elements centralize to a torus of order q-1 or q+1
    int seen3 = 0, seen5 = 0;
    for (uint32_t id = 0; id < sl24->order(); ++id) {
        GroupElem e = sl24->elem(id);
        if (mat_is_scalar(e.m)) continue;
        uint64_t mo = sl24->elem_order(id);
        if (mo == 3 || mo == 5) {
            size_t c = sl24->centralizer(e).order();
            if (c == 3) ++seen3;
            if (c == 5) ++seen5;
            REQUIRE((c == 3 || c == 5));
        }
    }
    CHECK(seen3 > 0);
    CHECK(seen5 > 0);
}

TEST_CASE("grp: normality checks") {
    auto sd = singer_normalizer(3);
    CHECK(!sd.group->is_normal(sd.normalizer));
    CHECK(sd.group->is_normal(sd.group->whole()));
}

TEST_CASE("grp: cache round-trip") {
    auto fld = Field::make(2, 2);
    auto g = projective_quotient(semilinear_extension(general_linear(2, fld)));
    std::string path = "/tmp/irredlab_test_group.bin";
    g->save(path);
    auto h = Group::load(path, fld);
    CHECK(h->order() == g->order());
    CHECK(h->name() == g->name());
    CHECK(h->identity_id() == g->identity_id());
    CHECK(h->scalars() == g->scalars());
    for (uint32_t i = 1; i < 50; ++i)
        CHECK(h->mul(i % h->order(), (i * 7) % h->order()) ==
              g->mul(i % g->order(), (i * 7) % g->order()));
    std::remove(path.c_str());
}
