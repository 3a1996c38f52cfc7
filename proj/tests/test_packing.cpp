#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "packnu/packing.hpp"
#include "packnu/setalg.hpp"
#include "packnu/subgroup.hpp"
#include "packnu/verify.hpp"

using namespace packnu;

namespace {

elem r13(std::uint64_t x) { return elem(x - 1); }

// Exhaustive oracle: max |B| over all subsets with |A*B| = |A||B|,
// by direct product counting only. Usable for |G| <= ~16.
std::uint64_t nu_brute_force(const GroupSet& a) {
    const Group& g = a.group();
    std::uint64_t n = g.order();
    std::uint64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        GroupSet b(g);
        for (elem x = 0; x < n; ++x) {
            if ((mask >> x) & 1) b.add(x);
        }
        if (b.size() <= best) continue;
        GroupSet ab(g);
        for (elem x : a.elements()) {
            for (elem y : b.elements()) ab.add(g.op(x, y));
        }
        if (ab.size() == a.size() * b.size()) best = b.size();
    }
    return best;
}

}  // namespace

TEST_CASE("is_packing examples") {
    Group f13 = Group::mult_mod_p(13);
    GroupSet a = GroupSet::of(f13, {r13(1), r13(2), r13(3)});

    PackingCertificate yes = is_packing(a, GroupSet::of(f13, {r13(1), r13(4), r13(11)}));
    CHECK(yes.is_packing);
    CHECK(yes.product_cardinality == 9);

    PackingCertificate no = is_packing(a, GroupSet::of(f13, {r13(1), r13(2)}));
    CHECK(!no.is_packing);

    // subgroup and transversal tile the group
    Group c10 = Group::cyclic(10);
    Subgroup h = cyclic_subgroup(c10, 5);
    GroupSet b = coset_transversal(c10, h);
    PackingCertificate tile = is_packing(h.elements, b);
    CHECK(tile.is_packing);
    CHECK(tile.product_cardinality == 10);

    // empty B is vacuously packing; empty A rejected
    CHECK(is_packing(a, GroupSet(f13)).is_packing);
    CHECK_THROWS_AS(is_packing(GroupSet(f13), a), std::invalid_argument);
    CHECK_THROWS_AS(is_packing(a, GroupSet(Group::cyclic(4))), std::invalid_argument);
}

TEST_CASE("packing bounds examples") {
    Group f13 = Group::mult_mod_p(13);
    PackingBounds b1 = packing_bounds(GroupSet::of(f13, {r13(1), r13(2), r13(3)}));
    CHECK(b1.lower_weak == 2);     // ceil(12/9)
    CHECK(b1.lower_ruzsa == 2);    // ceil(12/7)
    CHECK(b1.upper_trivial == 4);  // floor(12/3)

    PackingBounds b2 = packing_bounds(GroupSet::of(f13, {f13.id()}));
    CHECK(b2.lower_weak == 12);
    CHECK(b2.lower_ruzsa == 12);
    CHECK(b2.upper_trivial == 12);

    Group c36 = Group::cyclic(36);
    PackingBounds b3 = packing_bounds(GroupSet::of(c36, {0, 6, 12, 18}));
    CHECK(b3.lower_weak == 3);     // ceil(36/16)
    CHECK(b3.lower_ruzsa == 6);    // ratio set is <6>, size 6
    CHECK(b3.upper_trivial == 9);
}

TEST_CASE("greedy packing") {
    Group f13 = Group::mult_mod_p(13);
    GroupSet a = GroupSet::of(f13, {r13(1), r13(2), r13(3)});
    GroupSet b = greedy_packing(a);
    CHECK(b == GroupSet::of(f13, {r13(1), r13(4), r13(11)}));

    // A = {id} packs everything
    Group c12 = Group::cyclic(12);
    CHECK(greedy_packing(GroupSet::of(c12, {0})) == GroupSet::full(c12));

    // subgroup: one per coset
    Group c36 = Group::cyclic(36);
    Subgroup h = cyclic_subgroup(c36, 6);
    CHECK(greedy_packing(h.elements) == GroupSet::of(c36, {0, 1, 2, 3, 4, 5}));
}

TEST_CASE("greedy packing is maximal") {
    std::mt19937_64 rng(31);
    for (const Group& g : {Group::cyclic(21), Group::mult_mod_p(19)}) {
        for (int i = 0; i < 20; ++i) {
            GroupSet a = random_subset(g, rng, true);
            GroupSet b = greedy_packing(a);
            for (elem x = 0; x < g.order(); ++x) {
                if (b.contains(x)) continue;
                GroupSet bx = b;
                bx.add(x);
                CHECK(!is_packing(a, bx).is_packing);
            }
        }
    }
}

TEST_CASE("exact nu against brute force") {
    std::mt19937_64 rng(37);
    for (const Group& g : {Group::cyclic(11), Group::product({2, 6}),
                           Group::mult_mod_p(13)}) {
        for (int i = 0; i < 12; ++i) {
            GroupSet a = random_subset(g, rng, true);
            ExactResult r = exact_nu(a);
            REQUIRE(r.status == SolveStatus::Optimal);
            CHECK(r.value == nu_brute_force(a));
            CHECK(is_packing(a, r.witness).is_packing);
            CHECK(r.witness.size() == r.value);
        }
    }
}

TEST_CASE("exact nu examples") {
    Group f13 = Group::mult_mod_p(13);
    ExactResult r = exact_nu(GroupSet::of(f13, {r13(1), r13(2), r13(3)}));
    CHECK(r.value == 3);

    // subgroup gives |G|/|H|
    Group c36 = Group::cyclic(36);
    Subgroup h = cyclic_subgroup(c36, 6);
    CHECK(exact_nu(h.elements).value == 6);

    // tightness set in cyclic(36)
    CHECK(exact_nu(GroupSet::of(c36, {0, 6, 12, 18})).value == 6);

    // singleton A packs the whole group
    CHECK(exact_nu(GroupSet::of(f13, {r13(5)})).value == 12);
}

TEST_CASE("exact nu invariances") {
    std::mt19937_64 rng(41);
    Group g = Group::cyclic(24);
    for (int i = 0; i < 8; ++i) {
        GroupSet a = random_subset(g, rng, true);
        std::uint64_t base = exact_nu(a).value;

        // order of branching never changes the value
        std::vector<elem> order(g.order());
        for (elem x = 0; x < g.order(); ++x) order[x] = x;
        for (int k = 0; k < 3; ++k) {
            std::shuffle(order.begin(), order.end(), rng);
            CHECK(exact_nu(a, kDefaultNodeBudget, order).value == base);
        }

        // translation invariance
        elem t = elem(rng() % g.order());
        CHECK(exact_nu(translate(t, a)).value == base);
    }
}

TEST_CASE("node counts are reproducible") {
    Group g = Group::mult_mod_p(29);
    GroupSet a = GroupSet::of(g, {0, 1, 2});
    ExactResult r1 = exact_nu(a);
    ExactResult r2 = exact_nu(a);
    CHECK(r1.nodes == r2.nodes);
    CHECK(r1.witness == r2.witness);
}

TEST_CASE("budget exhaustion is reported, never silent") {
    Group g = Group::cyclic(60);
    GroupSet a = GroupSet::of(g, {0, 7});
    ExactResult r = exact_nu(a, 5);
    CHECK(r.status == SolveStatus::BudgetExhausted);
    CHECK(r.value >= 1);
    CHECK(is_packing(a, r.witness).is_packing);
}

TEST_CASE("sandwich property on random instances") {
    std::mt19937_64 rng(43);
    for (const Group& g : {Group::cyclic(30), Group::mult_mod_p(31)}) {
        for (int i = 0; i < 15; ++i) {
            GroupSet a = random_subset(g, rng, true);
            PackingBounds pb = packing_bounds(a);
            std::uint64_t greedy = greedy_packing(a).size();
            std::uint64_t nu = exact_nu(a).value;
            CHECK(pb.lower_weak <= pb.lower_ruzsa);
            CHECK(pb.lower_ruzsa <= greedy);
            CHECK(greedy <= nu);
            CHECK(nu <= pb.upper_trivial);
        }
    }
}

TEST_CASE("symmetry proposition") {
    Group f13 = Group::mult_mod_p(13);
    GroupSet a = GroupSet::of(f13, {r13(1), r13(2), r13(3)});
    ExactResult nu = exact_nu(a);
    SymmetryReport rep = check_symmetry_proposition(a, nu.witness);
    CHECK(rep.pass);

    // subgroup/transversal case
    Group c36 = Group::cyclic(36);
    Subgroup h = cyclic_subgroup(c36, 6);
    GroupSet b = coset_transversal(c36, h);
    CHECK(check_symmetry_proposition(h.elements, b).pass);

    // cyclic(12), A = {0,1}
    Group c12 = Group::cyclic(12);
    GroupSet a12 = GroupSet::of(c12, {0, 1});
    CHECK(check_symmetry_proposition(a12, exact_nu(a12).witness).pass);

    // non-packing B rejected
    CHECK_THROWS_AS(check_symmetry_proposition(a, GroupSet::of(f13, {r13(1), r13(2)})),
                    std::invalid_argument);
}

TEST_CASE("packing report json") {
    Group f13 = Group::mult_mod_p(13);
    GroupSet a = GroupSet::of(f13, {r13(1), r13(2), r13(3)});
    ExactResult r = exact_nu(a);
    PackingReport rep{a, r.witness, true, 9, packing_bounds(a), r.value, r.nodes};
    std::string j = to_json(rep);
    CHECK(j.find("\"nuExact\": 3") != std::string::npos);
    CHECK(j.find("\"lowerRuzsa\": 2") != std::string::npos);
    CHECK(j.find("\"group\": \"multmod:13\"") != std::string::npos);
}
