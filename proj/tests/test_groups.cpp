#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "burnside/groups.hpp"
#include "oracles.hpp"

using namespace burnside;

namespace {

oracle::Table to_table(const GroupPtr& g) {
    oracle::Table t(g->order(), std::vector<int>(g->order()));
    for (int a = 0; a < g->order(); ++a)
        for (int b = 0; b < g->order(); ++b) t[a][b] = g->mul(a, b);
    return t;
}

GroupSpec named_spec(const std::string& n) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::named;
    s.name = n;
    return s;
}

}  // namespace

TEST_CASE("named groups") {
    auto c5 = named_group("cyclic(5)");
    CHECK(c5->order() == 5);
    CHECK(c5->is_abelian());
    CHECK(named_group("C12")->order() == 12);
    CHECK(named_group("S3")->order() == 6);
    CHECK_FALSE(named_group("S3")->is_abelian());
    CHECK(named_group("A4")->order() == 12);
    CHECK(named_group("D6")->order() == 12);
    CHECK(named_group("Q8")->order() == 8);
    CHECK(named_group("Q8")->element_order(2) == 4);  // a unit quaternion axis
    CHECK_THROWS_AS(named_group("C500"), too_large_error);
    CHECK_THROWS_AS(named_group("frobnicate"), group_error);
}

TEST_CASE("permutation generators: closure order") {
    GroupSpec s;
    s.kind = GroupSpec::Kind::perm;
    s.degree = 4;
    s.generators = {{{0, 1}}, {{0, 1, 2, 3}}};  // (1 2), (1 2 3 4) in 0-based form
    auto g = build_group(s);
    CHECK(g->order() == 24);
}

TEST_CASE("products") {
    GroupSpec s;
    s.kind = GroupSpec::Kind::product;
    s.factors = {named_spec("C2"), named_spec("C4")};
    auto g = build_group(s);
    CHECK(g->order() == 8);
    CHECK(g->is_abelian());
}

TEST_CASE("bad cayley tables are rejected") {
    GroupSpec s;
    s.kind = GroupSpec::Kind::cayley;
    s.table = {{0, 1}, {1, 1}};  // 1 has no inverse
    CHECK_THROWS_AS(build_group(s), not_a_group_error);
}

TEST_CASE("subgroup enumeration against brute force") {
    for (const char* name : {"C5", "S3", "Q8", "A4", "D4"}) {
        auto g = named_group(name);
        auto subs = enumerate_subgroups(g);
        auto brute = oracle::subgroups_bruteforce(to_table(g), g->identity());
        std::set<std::vector<int>> got;
        for (const auto& s : subs) got.insert(s.elements());
        CHECK(got == brute);
    }
    CHECK(enumerate_subgroups(named_group("C7")).size() == 2);
    CHECK(enumerate_subgroups(named_group("S3")).size() == 6);
    CHECK(enumerate_subgroups(named_group("Q8")).size() == 6);
}

TEST_CASE("subgroup count of cyclic groups equals divisor count") {
    for (int n = 1; n <= 60; ++n) {
        auto g = named_group("cyclic(" + std::to_string(n) + ")");
        size_t divisors = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) ++divisors;
        CHECK(enumerate_subgroups(g).size() == divisors);
    }
}

TEST_CASE("conjugacy classes of subgroups") {
    auto s3 = named_group("S3");
    CcsTable ccs(s3);
    REQUIRE(ccs.size() == 4);
    CHECK(ccs.classes()[0].rep.order() == 1);
    CHECK(ccs.classes()[1].rep.order() == 2);
    CHECK(ccs.classes()[1].conjugates.size() == 3);
    CHECK(ccs.classes()[2].rep.order() == 3);
    CHECK(ccs.classes()[3].rep.order() == 6);
    CHECK(ccs.label(1) == "2:0");

    CHECK(CcsTable(named_group("C7")).size() == 2);

    GroupSpec v4;
    v4.kind = GroupSpec::Kind::product;
    v4.factors = {named_spec("C2"), named_spec("C2")};
    CHECK(CcsTable(build_group(v4)).size() == 5);
}

TEST_CASE("ccs partitions the subgroup list exactly") {
    for (const char* name : {"S3", "D4", "Q8", "A4"}) {
        auto g = named_group(name);
        auto subs = enumerate_subgroups(g);
        CcsTable ccs(g);
        size_t total = 0;
        std::set<std::vector<int>> seen;
        for (const auto& cl : ccs.classes()) {
            total += cl.conjugates.size();
            for (const auto& c : cl.conjugates) CHECK(seen.insert(c).second);
        }
        CHECK(total == subs.size());
        for (const auto& s : subs) CHECK(seen.count(s.elements()) == 1);
    }
}

TEST_CASE("weyl groups: |W| = |N|/|H| and diagonal-mark identity") {
    for (const char* name : {"S3", "D4", "Q8", "A4", "C12"}) {
        auto g = named_group(name);
        CcsTable ccs(g);
        for (const auto& cl : ccs.classes()) {
            CHECK(cl.weyl_order == cl.normalizer.order() / cl.rep.order());
            CHECK(cl.weyl->order() == cl.weyl_order);
            CHECK(mark(g, cl.rep, cl.rep) * cl.rep.order() == cl.normalizer.order());
        }
    }
}

TEST_CASE("marks") {
    auto g = named_group("S3");
    CcsTable ccs(g);
    Subgroup one = trivial_subgroup(g), whole = full_subgroup(g);
    CHECK(mark(g, whole, one) == 1);
    CHECK(mark(g, whole, whole) == 1);
    CHECK(mark(g, one, one) == 6);
    const Subgroup& c2 = ccs.classes()[1].rep;
    CHECK(mark(g, c2, c2) == 1);
}

TEST_CASE("double cosets partition the group") {
    for (const char* name : {"S3", "D4", "Q8", "A4", "S4"}) {
        auto g = named_group(name);
        auto subs = enumerate_subgroups(g);
        for (const auto& h : subs)
            for (const auto& k : subs) {
                auto reps = double_cosets(g, h, k);
                // disjointness and coverage: sum of double coset sizes = |G|
                std::set<int> all;
                for (int r : reps) {
                    std::set<int> dc;
                    for (int x : h.elements())
                        for (int y : k.elements()) dc.insert(g->mul(g->mul(x, r), y));
                    for (int e : dc) CHECK(all.insert(e).second);
                }
                CHECK((int)all.size() == g->order());
            }
    }
    // an order-48 witness, checked with exact-once element marking
    {
        auto big = named_group("D24", 48);
        auto subs = enumerate_subgroups(big);
        for (const auto& h : subs)
            for (const auto& k : subs) {
                std::vector<int> hits(big->order(), 0);
                for (int rep : double_cosets(big, h, k)) {
                    std::vector<char> coset(big->order(), 0);
                    for (int x : h.elements()) {
                        int xr = big->mul(x, rep);
                        for (int y : k.elements()) coset[big->mul(xr, y)] = 1;
                    }
                    for (int e = 0; e < big->order(); ++e) hits[e] += coset[e];
                }
                for (int e = 0; e < big->order(); ++e) CHECK(hits[e] == 1);
            }
    }

    auto g = named_group("S3");
    CHECK(double_cosets(g, full_subgroup(g), full_subgroup(g)).size() == 1);
    CHECK(double_cosets(g, trivial_subgroup(g), trivial_subgroup(g)).size() == 6);
    CcsTable ccs(g);
    CHECK(double_cosets(g, ccs.classes()[1].rep, ccs.classes()[2].rep).size() == 1);
}

TEST_CASE("cyclic subgroup data") {
    auto zp = named_group("C5");
    auto data = cyclic_subgroup_data(zp);
    REQUIRE(data.size() == 2);
    CHECK(data[0].generator_count == 1);
    CHECK(data[0].normalizer_index == 1);
    CHECK(data[1].generator_count == 4);
    CHECK(data[1].normalizer_index == 1);

    auto s3 = named_group("S3");
    bool found_c2 = false;
    for (const auto& d : cyclic_subgroup_data(s3))
        if (d.rep.order() == 2) {
            found_c2 = true;
            CHECK(d.generator_count == 1);
            CHECK(d.normalizer_index == 3);
        }
    CHECK(found_c2);

    auto c12 = named_group("C12");
    for (const auto& d : cyclic_subgroup_data(c12))
        if (d.rep.order() == 12) CHECK(d.generator_count == 4);  // phi(12)
}

TEST_CASE("quotient groups") {
    auto s3 = named_group("S3");
    CcsTable ccs(s3);
    auto q = quotient_group(s3, ccs.classes()[2].rep);  // by C3
    CHECK(q.group->order() == 2);
    CHECK(q.proj.map(s3->identity()) == q.group->identity());

    auto qq = quotient_group(s3, full_subgroup(s3));
    CHECK(qq.group->order() == 1);
    auto qt = quotient_group(s3, trivial_subgroup(s3));
    CHECK(qt.group->order() == 6);
    CHECK(qt.proj.injective);

    CHECK_THROWS_AS(quotient_group(s3, ccs.classes()[1].rep), not_normal_error);
}

TEST_CASE("subconjugacy order") {
    auto s3 = named_group("S3");
    CcsTable ccs(s3);
    auto rel = subconjugacy_order(ccs);
    for (size_t j = 0; j < ccs.size(); ++j) {
        CHECK(rel[0][j]);        // trivial below everything
        CHECK(rel[j][j]);        // reflexive
    }
    CHECK(rel[1][3]);            // (C2) below (S3)
    CHECK_FALSE(rel[1][2]);      // (C2) not below (C3)
    // compatible with the canonical order
    for (size_t i = 0; i < ccs.size(); ++i)
        for (size_t j = 0; j < ccs.size(); ++j)
            if (rel[i][j]) CHECK(i <= j);
}

TEST_CASE("homs, embeddings, preimages") {
    auto s3 = named_group("S3");
    CcsTable ccs(s3);
    EmbeddedGroup h = subgroup_as_group(ccs.classes()[2].rep);  // C3
    CHECK(h.group->order() == 3);
    CHECK(h.incl.injective);
    Subgroup img = hom_image(h.incl, full_subgroup(h.group));
    CHECK(img == ccs.classes()[2].rep);
    Subgroup pre = hom_preimage(h.incl, trivial_subgroup(s3));
    CHECK(pre.order() == 1);

    auto c4 = named_group("C4");
    std::vector<int> doubling = {0, 2, 0, 2};
    GroupHom f(c4, c4, doubling);
    CHECK_FALSE(f.injective);
    CHECK_THROWS_AS(GroupHom(c4, c4, std::vector<int>{0, 1, 3, 2}), group_error);
}

TEST_CASE("weyl preimage classes are conjugation independent") {
    // the congruence formula indexes ghost coordinates by p_H^{-1}(C); the
    // class must not depend on which W-conjugate of C is used
    for (const char* name : {"S4", "D6", "A4"}) {
        auto g = named_group(name);
        CcsTable ccs(g);
        for (size_t i = 0; i < ccs.size(); ++i) {
            const auto& cl = ccs.classes()[i];
            for (const auto& cd : cyclic_subgroup_data(cl.weyl)) {
                int expect = -1;
                for (int w = 0; w < cl.weyl->order(); ++w) {
                    Subgroup conj = conjugate_subgroup(cd.rep, w);
                    int got = ccs.class_of(ccs.weyl_preimage((int)i, conj));
                    if (expect < 0) expect = got;
                    CHECK(got == expect);
                }
            }
        }
    }
}

TEST_CASE("element classes") {
    auto s3 = named_group("S3");
    auto ec = element_classes(s3);
    CHECK(ec.classes.size() == 3);
    size_t total = 0;
    for (const auto& c : ec.classes) total += c.size();
    CHECK(total == 6);

    auto c6 = named_group("C6");
    CHECK(element_classes(c6).classes.size() == 6);
}
