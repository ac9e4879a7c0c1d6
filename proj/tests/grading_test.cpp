#include <doctest.h>

#include <random>

#include "skcat/grading.hpp"

using namespace skcat;

namespace {

// Z-grading on the broken ladder (1,0): deg alpha1 = 1, all other edges 0.
Grading ladder_z_grading(const SchurianCategory& cat)
{
    GradingGroup z = GradingGroup::abelian({1, {}});
    std::vector<GroupElt> deg(cat.edge_count(), z.identity());
    deg[cat.edge_index("alpha1")] = std::vector<Int>{1};
    return Grading(z, std::move(deg));
}

// Its mod-q reduction: same nonzero edge, target Z/q.
Grading ladder_mod_grading(const SchurianCategory& cat, int q)
{
    GradingGroup g = GradingGroup::abelian({0, {q}});
    std::vector<GroupElt> deg(cat.edge_count(), g.identity());
    deg[cat.edge_index("alpha1")] = std::vector<Int>{1};
    return Grading(g, std::move(deg));
}

// C2-grading of the complete groupoid on 2 objects: both edges map to g.
Grading groupoid_c2_grading(const SchurianCategory& cat)
{
    GradingGroup c2 = GradingGroup::finite(FiniteGroup::cyclic(2));
    std::vector<GroupElt> deg(cat.edge_count(), GroupElt{1});
    return Grading(c2, std::move(deg));
}

} // namespace

TEST_CASE("finite group tables are validated")
{
    CHECK_NOTHROW(FiniteGroup::cyclic(4));
    CHECK(FiniteGroup::cyclic(2).inv(1) == 1);
    CHECK(FiniteGroup::trivial().size() == 1);
    // No identity:
    CHECK_THROWS_AS(FiniteGroup({"a", "b"}, {{0, 0}, {0, 0}}), InputError);
    // Not associative: a Latin square that is not a group table.
    CHECK_THROWS_AS(FiniteGroup({"e", "a", "b", "c", "d"},
                                {{0, 1, 2, 3, 4},
                                 {1, 0, 3, 4, 2},
                                 {2, 4, 0, 1, 3},
                                 {3, 2, 4, 0, 1},
                                 {4, 3, 1, 2, 0}}),
                    InputError);
    // Out of range entries:
    CHECK_THROWS_AS(FiniteGroup({"e"}, {{1}}), InputError);
}

TEST_CASE("abelian group elements normalize into canonical range")
{
    GradingGroup g = GradingGroup::abelian({1, {3}});
    GroupElt e = g.normalized(std::vector<Int>{-2, 7});
    CHECK(g.format(e) == "[-2,1]");
    CHECK(g.format(g.inv(e)) == "[2,2]");
    CHECK(g.is_identity(g.mul(e, g.inv(e))));
    CHECK_THROWS_AS(g.normalized(std::vector<Int>{1}), InputError);
    CHECK_THROWS_AS(GradingGroup::abelian({0, {1}}), InputError);
}

TEST_CASE("the trivial grading is valid and connected everywhere")
{
    for (const SchurianCategory& cat : {build_complete_groupoid(3), build_broken_ladder(2, 0)}) {
        Grading triv = trivial_grading(cat);
        CHECK(check_grading(cat, triv).empty());
        CHECK(is_connected_grading(cat, triv, 0));
        ConnectorSet u = connector_walks(cat, triv, 0);
        SpanningTree tree = spanning_tree(cat, 0);
        for (int v = 0; v < cat.object_count(); ++v)
            CHECK(u.to_object[v] == tree.walk_from_base[v]);
    }
}

TEST_CASE("grading law on the C2-graded groupoid and Z-graded ladder")
{
    SchurianCategory two = build_complete_groupoid(2);
    CHECK(check_grading(two, groupoid_c2_grading(two)).empty());

    SchurianCategory ladder = build_broken_ladder(1, 0);
    CHECK(check_grading(ladder, ladder_z_grading(ladder)).empty());
    CHECK(check_grading(ladder, ladder_mod_grading(ladder, 2)).empty());

    // Violations are reported: putting the nonzero degree on alpha0 breaks
    // both triangles.
    GradingGroup z = GradingGroup::abelian({1, {}});
    std::vector<GroupElt> bad(ladder.edge_count(), z.identity());
    bad[ladder.edge_index("alpha0")] = std::vector<Int>{1};
    CHECK(check_grading(ladder, Grading(z, std::move(bad))).size() == 2);
}

TEST_CASE("walk degrees multiply along the walk, rightmost step first")
{
    SchurianCategory ladder = build_broken_ladder(1, 0);
    Grading x = ladder_z_grading(ladder);
    int a0 = ladder.object_index("a0");

    CHECK(x.group().is_identity(walk_degree(x, make_walk(ladder, a0, {}))));

    int alpha1 = ladder.edge_index("alpha1");
    Walk forth_back = make_walk(ladder, ladder.object_index("a1"), {{alpha1, +1}, {alpha1, -1}});
    CHECK(x.group().is_identity(walk_degree(x, forth_back)));

    Walk w = make_walk(ladder, a0,
                       {{ladder.edge_index("beta1"), -1},
                        {alpha1, +1},
                        {ladder.edge_index("m0_1"), -1}});
    CHECK(std::get<std::vector<Int>>(walk_degree(x, w)) == std::vector<Int>{1});
}

TEST_CASE("the degree of an inverse walk is the inverse degree")
{
    SchurianCategory ladder = build_broken_ladder(1, 0);
    Grading x = ladder_z_grading(ladder);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, ladder.edge_count() - 1);
    for (int it = 0; it < 20; ++it) {
        // Random walk: stitch random virtual morphisms where they chain.
        Walk w{0, 0, {}};
        int at = 0;
        for (int len = 0; len < 6; ++len) {
            int e = pick(rng);
            const BasisMorphism& h = ladder.hom(e);
            if (h.from == at) {
                w.steps.push_back({e, +1});
                at = h.to;
            } else if (h.to == at) {
                w.steps.push_back({e, -1});
                at = h.from;
            }
        }
        w.target = at;
        GroupElt d = walk_degree(x, w);
        CHECK(x.group().equal(walk_degree(x, inverse_walk(w)), x.group().inv(d)));
    }
}

TEST_CASE("connectedness of gradings via the loop-degree subgroup")
{
    SchurianCategory two = build_complete_groupoid(2);
    // Every closed walk has even g-exponent: the subgroup is trivial.
    CHECK(!is_connected_grading(two, groupoid_c2_grading(two), 0));

    // A C3 attempt on the groupoid also fails.
    GradingGroup c3 = GradingGroup::finite(FiniteGroup::cyclic(3));
    std::vector<GroupElt> deg(two.edge_count());
    deg[two.edge_index("e2_1")] = 1;
    deg[two.edge_index("e1_2")] = 2;
    Grading xc3(c3, std::move(deg));
    CHECK(check_grading(two, xc3).empty());
    CHECK(!is_connected_grading(two, xc3, 0));

    SchurianCategory ladder = build_broken_ladder(1, 0);
    CHECK(is_connected_grading(ladder, ladder_z_grading(ladder), 0));
    CHECK(is_connected_grading(ladder, ladder_mod_grading(ladder, 2), 0));
}

TEST_CASE("mixed rank-and-torsion targets use the lattice membership test")
{
    // Z x Z/2 grading of the ladder: valid, but the loop degrees generate
    // only the diagonal subgroup, so it is not connected and cannot be a
    // quotient of pi1.
    SchurianCategory ladder = build_broken_ladder(1, 0);
    GradingGroup g = GradingGroup::abelian({1, {2}});
    std::vector<GroupElt> deg(ladder.edge_count(), g.identity());
    deg[ladder.edge_index("alpha1")] = std::vector<Int>{1, 1};
    Grading x(g, std::move(deg));
    CHECK(check_grading(ladder, x).empty());
    CHECK(!is_connected_grading(ladder, x, 0));
    QuotientReport r = quotient_morphism(ladder, x, 0);
    CHECK(r.relators_killed);
    CHECK(!r.surjective);
    // Degree-1 connectors still exist here: the tree walks qualify.
    ConnectorSet u = connector_walks(ladder, x, 0);
    for (int v = 0; v < ladder.object_count(); ++v)
        CHECK(g.is_identity(walk_degree(x, u.to_object[v])));
}

TEST_CASE("connector walks")
{
    SchurianCategory ladder = build_broken_ladder(1, 0);

    SUBCASE("the Z-grading keeps the tree connectors")
    {
        ConnectorSet u = connector_walks(ladder, ladder_z_grading(ladder), 0);
        SpanningTree tree = spanning_tree(ladder, 0);
        for (int v = 0; v < ladder.object_count(); ++v)
            CHECK(u.to_object[v] == tree.walk_from_base[v]);
    }
    SUBCASE("every connector has degree 1 and the right endpoints")
    {
        Grading x = ladder_mod_grading(ladder, 2);
        ConnectorSet u = connector_walks(ladder, x, 0);
        for (int v = 0; v < ladder.object_count(); ++v) {
            CHECK(u.to_object[v].source == 0);
            CHECK(u.to_object[v].target == v);
            CHECK(x.group().is_identity(walk_degree(x, u.to_object[v])));
        }
    }
    SUBCASE("a disconnected grading admits no connector set")
    {
        SchurianCategory two = build_complete_groupoid(2);
        CHECK_THROWS_AS(connector_walks(two, groupoid_c2_grading(two), 0), MathError);
    }
    SUBCASE("finite-table groups use the product-graph search")
    {
        SchurianCategory two = build_complete_groupoid(2);
        GradingGroup c2 = GradingGroup::finite(FiniteGroup::cyclic(2));
        Grading triv(c2, std::vector<GroupElt>(two.edge_count(), c2.identity()));
        // Trivial degrees in C2: the subgroup is trivial, not all of C2, so
        // the grading is disconnected but degree-1 walks exist everywhere.
        ConnectorSet u = connector_walks(two, triv, 0);
        CHECK(u.to_object[1].target == 1);
        CHECK(c2.is_identity(walk_degree(triv, u.to_object[1])));
    }
}

TEST_CASE("the universal grading assigns generators to non-tree edges")
{
    SchurianCategory ladder = build_broken_ladder(1, 0);
    CwComplex cw = build_cw(ladder);
    Grading u = universal_grading(cw, 0);
    const GroupPresentation& pres = u.group().presentation();

    for (int e = 0; e < ladder.edge_count(); ++e) {
        const Word& w = std::get<Word>(u.degree(e));
        if (pres.tree->in_tree[e]) {
            CHECK(w.empty());
        } else {
            REQUIRE(w.size() == 1);
            CHECK(pres.generators[w[0].first] == ladder.hom(e).name);
        }
    }
    // The relators encode exactly the 2-cell constraints, so the universal
    // grading passes the grading law.
    CHECK(check_grading(ladder, u).empty());
    CHECK(check_grading(ladder, universal_grading(build_cw(build_complete_groupoid(3)), 0)).empty());
}

TEST_CASE("universal grading of a tree-shaped category is trivial")
{
    SchurianCategory cat(Field::rationals(), {"x", "y"});
    cat.add_hom("f", 0, 1);
    Grading u = universal_grading(build_cw(cat), 0);
    CHECK(u.group().presentation().generators.empty());
    CHECK(std::get<Word>(u.degree(0)).empty());
}

TEST_CASE("undecidable word comparisons raise rather than guess")
{
    SchurianCategory three = build_complete_groupoid(3);
    CwComplex cw = build_cw(three);
    Grading u = universal_grading(cw, 0);
    const GradingGroup& grp = u.group();
    // deg(g) deg(f) against the *wrong* composite is not settled by free
    // reduction or one relator.
    GroupElt left = grp.mul(u.degree(0), grp.mul(u.degree(1), u.degree(2)));
    CHECK_THROWS_AS((void)grp.equal(left, u.degree(3)), MathError);
}

TEST_CASE("quotient morphism onto the suite gradings")
{
    SchurianCategory ladder = build_broken_ladder(1, 0);

    SUBCASE("trivial grading")
    {
        QuotientReport r = quotient_morphism(ladder, trivial_grading(ladder), 0);
        CHECK(r.ok());
    }
    SUBCASE("Z-grading: the surviving generator maps to 1")
    {
        Grading x = ladder_z_grading(ladder);
        QuotientReport r = quotient_morphism(ladder, x, 0);
        CHECK(r.ok());
        CwComplex cw = build_cw(ladder);
        GroupPresentation pres = pi1_presentation(cw, 0);
        for (std::size_t g = 0; g < pres.generators.size(); ++g) {
            const auto& img = std::get<std::vector<Int>>(r.generator_images[g]);
            if (pres.generators[g] == "alpha1")
                CHECK(img == std::vector<Int>{1});
            else
                CHECK(img == std::vector<Int>{0});
        }
    }
    SUBCASE("mod-2 reduction stays surjective with killed relators")
    {
        QuotientReport r = quotient_morphism(ladder, ladder_mod_grading(ladder, 2), 0);
        CHECK(r.ok());
    }
    SUBCASE("a non-connected grading fails surjectivity")
    {
        SchurianCategory two = build_complete_groupoid(2);
        QuotientReport r = quotient_morphism(two, groupoid_c2_grading(two), 0);
        CHECK(r.relators_killed);
        CHECK(!r.surjective);
        CHECK(!r.ok());
    }
}

TEST_CASE("conjugated gradings")
{
    SchurianCategory ladder = build_broken_ladder(1, 0);
    Grading x = ladder_z_grading(ladder);
    const GradingGroup& z = x.group();

    std::vector<GroupElt> a(ladder.object_count(), z.identity());
    a[ladder.object_index("a1")] = std::vector<Int>{1};

    Grading conj = conjugate_grading(ladder, x, a);
    // deg'(beta1) = -a_{a0} + deg(beta1) + a_{a1} = 1
    CHECK(std::get<std::vector<Int>>(conj.degree(ladder.edge_index("beta1")))
          == std::vector<Int>{1});
    // deg'(alpha1) = -a_{b1} + 1 + a_{a1} = 2
    CHECK(std::get<std::vector<Int>>(conj.degree(ladder.edge_index("alpha1")))
          == std::vector<Int>{2});
    CHECK(check_grading(ladder, conj).empty());

    // Conjugating back with the inverse family restores the grading.
    std::vector<GroupElt> ainv;
    for (const GroupElt& e : a)
        ainv.push_back(z.inv(e));
    Grading back = conjugate_grading(ladder, conj, ainv);
    for (int e = 0; e < ladder.edge_count(); ++e)
        CHECK(z.equal(back.degree(e), x.degree(e)));

    // Identity conjugator is a no-op.
    Grading same = conjugate_grading(ladder, x, std::vector<GroupElt>(4, z.identity()));
    for (int e = 0; e < ladder.edge_count(); ++e)
        CHECK(z.equal(same.degree(e), x.degree(e)));
}

TEST_CASE("smash product of the trivial grading is the category itself")
{
    SchurianCategory cat = build_broken_ladder(1, 0);
    SmashProduct smash = smash_product(cat, trivial_grading(cat));
    CHECK(smash.category.object_count() == cat.object_count());
    CHECK(smash.category.edge_count() == cat.edge_count());
    CHECK(smash.category.validate().empty());
    CHECK(connected_component_count(smash.category) == 1);
}

TEST_CASE("smash product of the C2-graded groupoid splits into two components")
{
    SchurianCategory two = build_complete_groupoid(2);
    Grading x = groupoid_c2_grading(two);
    SmashProduct smash = smash_product(two, x);
    CHECK(smash.category.object_count() == 4);
    CHECK(smash.category.edge_count() == 4);
    CHECK(smash.category.validate().empty());
    CHECK(connected_component_count(smash.category) == 2);
    CHECK(!is_connected_grading(two, x, 0));

    // The components pair (1,1) with (2,g) and (1,g) with (2,1).
    int o11 = smash.category.object_index("1@1");
    int o2g = smash.category.object_index("2@g1");
    CHECK(smash.category.edge_between(o11, o2g) >= 0);
}

TEST_CASE("smash product of the mod-2 ladder grading is connected")
{
    SchurianCategory ladder = build_broken_ladder(1, 0);
    Grading x = ladder_mod_grading(ladder, 2);
    SmashProduct smash = smash_product(ladder, x);
    CHECK(smash.category.object_count() == 8);
    CHECK(smash.category.validate().empty());
    CHECK(connected_component_count(smash.category) == 1);
    CHECK(is_connected_grading(ladder, x, 0));
}

TEST_CASE("covering property: one lift per source object")
{
    SchurianCategory ladder = build_broken_ladder(1, 0);
    for (const Grading& x : {trivial_grading(ladder), ladder_mod_grading(ladder, 2)}) {
        SmashProduct smash = smash_product(ladder, x);
        for (int o = 0; o < smash.category.object_count(); ++o) {
            auto [v, s] = smash.object_origin[o];
            for (int e = 0; e < ladder.edge_count(); ++e) {
                if (ladder.hom(e).from != v)
                    continue;
                int lifts = 0;
                for (int se = 0; se < smash.category.edge_count(); ++se)
                    if (smash.hom_origin[se] == e && smash.category.hom(se).from == o)
                        ++lifts;
                CHECK(lifts == 1);
            }
        }
    }
}

TEST_CASE("an infinite grading group cannot be smashed")
{
    SchurianCategory ladder = build_broken_ladder(1, 0);
    CHECK_THROWS_AS(smash_product(ladder, ladder_z_grading(ladder)), MathError);
}

TEST_CASE("smash iso witness for conjugated gradings")
{
    SchurianCategory two = build_complete_groupoid(2);
    Grading xc2 = groupoid_c2_grading(two);
    const GradingGroup& c2 = xc2.group();

    SUBCASE("trivial conjugator")
    {
        CHECK(smash_iso_witness(two, xc2, std::vector<GroupElt>(2, c2.identity())).ok);
    }
    SUBCASE("swapping the components of the groupoid covering")
    {
        std::vector<GroupElt> a{c2.identity(), GroupElt{1}};
        CHECK(smash_iso_witness(two, xc2, a).ok);
    }
    SUBCASE("random conjugators on the mod-2 ladder")
    {
        SchurianCategory ladder = build_broken_ladder(1, 0);
        Grading x = ladder_mod_grading(ladder, 2);
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<int> bit(0, 1);
        for (int it = 0; it < 3; ++it) {
            std::vector<GroupElt> a;
            for (int v = 0; v < ladder.object_count(); ++v)
                a.push_back(std::vector<Int>{bit(rng)});
            CHECK(smash_iso_witness(ladder, x, a).ok);
        }
    }
}

TEST_CASE("component count equals the index of the loop-degree subgroup")
{
    // C2 on the groupoid: subgroup trivial, index 2, two components.
    SchurianCategory two = build_complete_groupoid(2);
    CHECK(connected_component_count(smash_product(two, groupoid_c2_grading(two)).category) == 2);
    // Mod-2 ladder: subgroup is everything, index 1, one component.
    SchurianCategory ladder = build_broken_ladder(1, 0);
    CHECK(connected_component_count(smash_product(ladder, ladder_mod_grading(ladder, 2)).category)
          == 1);
}
