#include "oracles.hpp"

#include <semideg/conditions.hpp>
#include <semideg/families.hpp>
#include <semideg/verify.hpp>

#include <doctest.h>

using namespace semideg;

TEST_CASE("semi-degree threshold is the least integer >= p/2 - 1")
{
    CHECK(semi_threshold(4) == 1);
    CHECK(semi_threshold(5) == 2);
    CHECK(semi_threshold(6) == 2);
    for (int p = 3; p <= 16; ++p) {
        int t = semi_threshold(p);
        // t >= p/2 - 1 and t - 1 < p/2 - 1, in integers: 2t >= p - 2 > 2t - 2
        CHECK(2 * t >= p - 2);
        CHECK(2 * (t - 1) < p - 2);
    }
}

TEST_CASE("profiles of named digraphs")
{
    auto d6 = profile(gen_d6(false));
    CHECK(d6.min_degree == 5);
    CHECK(std::min(d6.min_out_degree, d6.min_in_degree) == 2);
    CHECK(d6.satisfies_ds);

    auto c5 = gen_c5_star();
    for (int v = 0; v < 5; ++v) {
        CHECK(c5.out_degree(v) == 2);
        CHECK(c5.in_degree(v) == 2);
    }
    CHECK(profile(c5).satisfies_ds);

    CHECK(profile(complete_symmetric(5)).satisfies_gh);

    std::vector<Arc> cross{{0, 3}, {1, 4}, {2, 5}};
    auto h33 = profile(gen_hnn(3, cross));
    CHECK(h33.satisfies_ds);
    CHECK_FALSE(h33.is_strong);
    CHECK_FALSE(h33.satisfies_gh);
}

TEST_CASE("nonadjacent pairs")
{
    CHECK(nonadjacent_pairs(complete_symmetric(3)).empty());
    CHECK(nonadjacent_pairs(Digraph(2)) == std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
    using P = std::vector<std::pair<Vertex, Vertex>>;
    CHECK(nonadjacent_pairs(gen_c5_star()) == P{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
}

TEST_CASE("profile agrees with core and the arc-count oracle")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 3000; ++trial) {
        int p = 3 + trial % 6;
        auto d = oracle::random_digraph(p, 0.55 + 0.05 * (trial % 7), rng);
        auto c = profile(d);
        int min_degree = 4 * p, min_out = p, min_in = p;
        for (int v = 0; v < p; ++v) {
            min_degree = std::min(min_degree, d.degree(v));
            min_out = std::min(min_out, d.out_degree(v));
            min_in = std::min(min_in, d.in_degree(v));
        }
        CHECK(c.order == p);
        CHECK(c.min_degree == min_degree);
        CHECK(c.min_out_degree == min_out);
        CHECK(c.min_in_degree == min_in);
        CHECK(c.min_degree <= 2 * (p - 1));
        CHECK(c.satisfies_ds == oracle::satisfies_ds(d));
        CHECK(c.satisfies_ds == satisfies_ds(d));
        CHECK(c.is_strong == oracle::is_strong(d));
        CHECK(c.satisfies_gh == (c.is_strong && min_degree >= p));

        bool ore = c.is_strong;
        for (auto [x, y] : nonadjacent_pairs(d))
            ore = ore && d.degree(x) + d.degree(y) >= 2 * p;
        CHECK(c.satisfies_ore == ore);
    }
}

TEST_CASE("Ghouila-Houri digraphs are hamiltonian at p = 4, 5")
{
    for (int p : {4, 5}) {
        const std::uint64_t total = std::uint64_t{1} << (p * (p - 1));
        std::uint64_t gh = 0, semi_short = 0;
        for (std::uint64_t code = 0; code < total; ++code) {
            auto d = Digraph::from_arc_code(p, code);
            auto c = profile(d);
            if (c.satisfies_gh) {
                ++gh;
                CHECK(oracle::has_cycle(d, p));
                semi_short += ! c.satisfies_ds;
            }
        }
        CHECK(gh > 0);
        // Strong forces semi-degree 1, enough at p = 4 but not at p = 5.
        CHECK((semi_short > 0) == (p == 5));
    }
}

TEST_CASE("profile JSON field names")
{
    nlohmann::json j = profile(complete_symmetric(3));
    for (auto key : {"order", "min_degree", "min_out_degree", "min_in_degree", "is_strong", "satisfies_ds",
             "satisfies_gh", "satisfies_ore"})
        CHECK(j.contains(key));
    CHECK(j.size() == 8);
}
