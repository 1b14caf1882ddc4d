#include "oracles.hpp"

#include <semideg/cycles.hpp>
#include <semideg/families.hpp>

#include <doctest.h>

using namespace semideg;

namespace
{
    auto transitive_tournament(int p) -> Digraph
    {
        std::vector<Arc> arcs;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                arcs.emplace_back(i, j);
        return Digraph::build(p, arcs);
    }

    auto path(std::vector<Vertex> vs) -> VertexSeq { return {std::move(vs), SeqKind::path}; }
    auto cycle(std::vector<Vertex> vs) -> VertexSeq { return {std::move(vs), SeqKind::cycle}; }
}

TEST_CASE("fixed-length cycles in D6 and C*(5)")
{
    auto d6 = gen_d6(false);
    auto c = find_cycle(d6, 5);
    REQUIRE(c);
    CHECK(c->size() == 5);
    CHECK(c->kind == SeqKind::cycle);
    CHECK(is_valid_in(*c, d6));
    CHECK_FALSE(find_cycle(d6, 6));
    CHECK_FALSE(find_cycle(gen_c5_star(), 3));
    CHECK(find_cycle(gen_c5_star(), 5));

    CHECK_THROWS_AS(find_cycle(d6, 1), PreconditionError);
    CHECK_THROWS_AS(find_cycle(d6, 7), PreconditionError);
}

TEST_CASE("hamiltonicity")
{
    for (int n = 3; n <= 8; ++n) {
        auto k = complete_symmetric(n);
        auto h = hamiltonian_cycle(k);
        REQUIRE(h);
        CHECK(is_valid_in(*h, k));
        CHECK(h->size() == n);
    }
    CHECK_FALSE(is_hamiltonian(gen_h2n(3, true)));
    CHECK_FALSE(is_hamiltonian(gen_d6(false)));
    CHECK_FALSE(is_hamiltonian(gen_d6(true)));
    for (auto o : {HnOrientation::in, HnOrientation::out}) {
        auto free = hn_n1_1_free_arcs(2, o);
        CHECK_FALSE(is_hamiltonian(gen_hn_n1_1(2, o, {})));
        CHECK_FALSE(is_hamiltonian(gen_hn_n1_1(2, o, free)));
    }
    CHECK_FALSE(is_hamiltonian(transitive_tournament(4)));
}

TEST_CASE("spectrum and pancyclicity")
{
    CHECK(cycle_spectrum(complete_symmetric(4)).to_vector() == std::vector<int>{2, 3, 4});
    CHECK(is_pancyclic(complete_symmetric(4)));

    auto k22 = gen_knn_star(2, 2);
    CHECK(cycle_spectrum(k22).to_vector() == std::vector<int>{2, 4});
    CHECK_FALSE(is_pancyclic(k22));

    auto d6 = cycle_spectrum(gen_d6(false));
    CHECK(d6.contains(5));
    CHECK_FALSE(d6.contains(6));

    // A directed triangle has no 2-cycle.
    auto tri = Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(is_pancyclic(tri));
    CHECK_FALSE(is_pancyclic(tri, PancyclicConvention::from_two));
    CHECK(cycle_spectrum(transitive_tournament(5)).lengths == 0);
}

TEST_CASE("longest cycle")
{
    auto d6 = longest_cycle(gen_d6(false));
    REQUIRE(d6);
    CHECK(d6->size() == 5);
    CHECK(longest_cycle(complete_symmetric(4))->size() == 4);
    CHECK_FALSE(longest_cycle(transitive_tournament(4)));
}

TEST_CASE("longest path")
{
    auto t = transitive_tournament(5);
    auto p = longest_path(t, 0, 4, t.vertices());
    REQUIRE(p);
    CHECK(p->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK_FALSE(longest_path(t, 4, 0, t.vertices()));
    auto short_p = longest_path(t, 0, 4, VertexSet::of({0, 2, 4}));
    REQUIRE(short_p);
    CHECK(short_p->vertices == std::vector<Vertex>{0, 2, 4});
}

TEST_CASE("find_cycle agrees with the subset oracle")
{
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 1500; ++trial) {
        int p = 2 + trial % 6;
        auto d = oracle::random_digraph(p, 0.2 + 0.1 * (trial % 6), rng);
        for (int k = 2; k <= p; ++k) {
            auto c = find_cycle(d, k);
            CHECK(c.has_value() == oracle::has_cycle(d, k));
            CHECK(has_cycle(d, k) == c.has_value());
            if (c) {
                CHECK(c->size() == k);
                CHECK(is_valid_in(*c, d));
            }
        }
    }
}

TEST_CASE("hamiltonicity is invariant under converse")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100000; ++trial) {
        int p = 3 + trial % 6;
        auto d = oracle::random_digraph(p, 0.35 + 0.05 * (trial % 5), rng);
        if (is_hamiltonian(d) != is_hamiltonian(d.converse()))
            FAIL("converse changed hamiltonicity");
    }
}

TEST_CASE("adding an arc never removes a cycle length")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 3000; ++trial) {
        int p = 3 + trial % 6;
        auto d = oracle::random_digraph(p, 0.3, rng);
        std::uniform_int_distribution<int> pick(0, p - 1);
        int u = pick(rng), v = pick(rng);
        if (u == v)
            continue;
        auto before = cycle_spectrum(d).lengths;
        auto after = cycle_spectrum(d.with_arc(u, v)).lengths;
        CHECK((before & ~after) == 0);
    }
}

TEST_CASE("insert_vertex")
{
    auto d = Digraph::build(3, {{0, 1}, {0, 2}, {2, 1}});
    CHECK(insert_vertex(d, path({0, 1}), 2) == 1);
    auto e = Digraph::build(3, {{0, 1}, {2, 0}});
    CHECK_FALSE(insert_vertex(e, path({0, 1}), 2));

    // Smallest slot wins.
    auto k4 = complete_symmetric(4);
    CHECK(insert_vertex(k4, path({0, 1, 2}), 3) == 1);
    auto late = Digraph::build(4, {{0, 1}, {1, 2}, {1, 3}, {3, 2}, {0, 3}});
    CHECK(insert_vertex(late, path({0, 1, 2}), 3) == 2);

    CHECK_THROWS_AS(insert_vertex(d, path({0, 1}), 1), PreconditionError);
    CHECK_THROWS_AS(insert_vertex(d, path({1, 0}), 2), PreconditionError);
    CHECK_THROWS_AS(insert_vertex(d, path({0}), 2), PreconditionError);
}

TEST_CASE("insertion conditions")
{
    // x = 3 fully joined to the path 0 -> 1 -> 2: d(x,P) = 6 = m + 3.
    auto k4 = complete_symmetric(4);
    auto all = insertion_conditions(k4, path({0, 1, 2}), 3);
    CHECK(all.case_i);
    CHECK(all.case_ii == false); // both end arcs present
    CHECK_FALSE(all.case_iii);

    // Remove x -> x1 and x_m -> x: d = 4 = m + 1.
    auto cut = k4.without_arc(3, 0).without_arc(2, 3);
    auto c = insertion_conditions(cut, path({0, 1, 2}), 3);
    CHECK_FALSE(c.case_i);
    CHECK(c.case_ii);
    CHECK(c.case_iii);
    CHECK(insert_vertex(cut, path({0, 1, 2}), 3));
}

TEST_CASE("expand_cycle")
{
    // 2-cycle {0,1} and x = 2 joined both ways to both.
    auto k3 = complete_symmetric(3);
    auto cycles = expand_cycle(k3, cycle({0, 1}), 2);
    CHECK(cycles.size() == 2);
    for (auto &[k, c] : cycles) {
        CHECK(c.size() == k);
        CHECK(is_valid_in(c, k3));
    }

    // Triangle plus x with d(x,C) = 3 < 4.
    auto d = Digraph::build(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}, {3, 0}, {0, 3}, {3, 1}});
    CHECK_THROWS_AS(expand_cycle(d, cycle({0, 1, 2}), 3), PreconditionError);
    CHECK_THROWS_AS(expand_cycle(d, cycle({0, 1, 2}), 2), PreconditionError);
    CHECK_THROWS_AS(expand_cycle(d, cycle({0, 2, 3}), 1), PreconditionError); // not a cycle
}

TEST_CASE("expand_cycle stays inside V(C) + x")
{
    // Arcs to a fifth vertex must not be used.
    auto d = complete_symmetric(5);
    auto cycles = expand_cycle(d, cycle({0, 1, 2}), 3);
    for (auto &[k, c] : cycles)
        CHECK_FALSE(c.vertex_set().contains(4));
    CHECK(cycles.size() == 3);
}

TEST_CASE("neighbourhood profile")
{
    // P = 0 -> 1, x = 2 with x -> 0, 0 -> x, 1 -> x.
    auto d = Digraph::build(3, {{0, 1}, {2, 0}, {0, 2}, {1, 2}});
    CHECK(neighbourhood_profile(d, path({0, 1}), 2) == 1);
    auto e = Digraph::build(3, {{0, 1}, {2, 1}, {0, 2}});
    CHECK_FALSE(neighbourhood_profile(e, path({0, 1}), 2));
    CHECK_THROWS_AS(neighbourhood_profile(d, path({0, 1}), 0), PreconditionError);
}
