#include "oracles.hpp"

#include <semideg/conditions.hpp>
#include <semideg/cycles.hpp>
#include <semideg/families.hpp>

#include <doctest.h>

#include <set>

using namespace semideg;

namespace
{
    enum : Vertex
    {
        x = 0, y, z, u, v, w
    };

    auto k33() -> Digraph { return gen_knn_star(3, 3); }
}

TEST_CASE("H(n,n) generator")
{
    std::vector<Arc> one{{0, 1}};
    auto smallest = gen_hnn(1, one);
    CHECK(smallest.order() == 2);
    CHECK(smallest.arc_count() == 1);

    std::vector<Arc> full;
    for (int a = 0; a < 2; ++a)
        for (int b = 2; b < 4; ++b)
            full.emplace_back(a, b);
    auto h = gen_hnn(2, full);
    CHECK(profile(h).min_degree == 4);
    CHECK_FALSE(is_strong(h));

    std::vector<Arc> uncovered{{0, 2}};
    CHECK_THROWS_AS(gen_hnn(2, uncovered), DigraphError);
    std::vector<Arc> backwards{{0, 2}, {1, 3}, {2, 0}};
    CHECK_THROWS_AS(gen_hnn(2, backwards), DigraphError);
}

TEST_CASE("H(n,n-1,1) generator")
{
    auto out = gen_hn_n1_1(2, HnOrientation::out, hn_n1_1_free_arcs(2, HnOrientation::out));
    CHECK(out.order() == 4);
    CHECK_FALSE(is_hamiltonian(out));
    auto in = gen_hn_n1_1(2, HnOrientation::in, hn_n1_1_free_arcs(2, HnOrientation::in));
    CHECK(in == out.converse());

    for (int n = 2; n <= 4; ++n)
        for (auto o : {HnOrientation::in, HnOrientation::out}) {
            auto d = gen_hn_n1_1(n, o, hn_n1_1_free_arcs(n, o));
            // A is the first n labels and independent.
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    CHECK_FALSE(d.has_arc(i, j));
        }

    // a -> b is free for one orientation only.
    const int a = 3;
    std::vector<Arc> wrong{{2, a}};
    CHECK_THROWS_AS(gen_hn_n1_1(2, HnOrientation::in, wrong), DigraphError);
    CHECK_NOTHROW(gen_hn_n1_1(2, HnOrientation::out, wrong));
}

TEST_CASE("H(2n) generators")
{
    // n = 3 by hand: A = {0,1}, B = {2,3}, x = 4, y = 5.
    const Vertex hx = 4, hy = 5;
    std::vector<Arc> arcs{{0, 1}, {1, 0}, {2, 3}, {3, 2}, {hx, hy}};
    for (Vertex a : {0, 1})
        arcs.insert(arcs.end(), {{hx, a}, {a, hx}, {hy, a}});
    for (Vertex b : {2, 3})
        arcs.insert(arcs.end(), {{b, hx}, {hy, b}, {b, hy}});
    CHECK(gen_h2n(3, false) == Digraph::build(6, arcs));
    CHECK(gen_h2n(3, true) == Digraph::build(6, arcs).with_arc(hy, hx));

    for (int n = 2; n <= 4; ++n) {
        CHECK(gen_h2n(n, true).arc_count() == gen_h2n(n, false).arc_count() + 1);
        CHECK(gen_h2n(n, false).order() == 2 * n);
        // Longest cycle is x -> y -> B -> x (or y -> A -> x -> y): n + 1 vertices.
        for (bool primed : {false, true})
            CHECK(longest_cycle(gen_h2n(n, primed))->size() == n + 1);
    }
    // So C(2n-1) is missing from n = 3 on; H(4) has a triangle.
    CHECK(has_cycle(gen_h2n(2, false), 3));
    CHECK_FALSE(has_cycle(gen_h2n(3, false), 5));
    CHECK_FALSE(has_cycle(gen_h2n(4, true), 7));
    CHECK_THROWS_AS(gen_h2n(1, false), DigraphError);
}

TEST_CASE("D6 and D6'")
{
    auto d6 = gen_d6(false), d6p = gen_d6(true);
    CHECK(d6.arc_count() == 15);
    CHECK(d6p.arc_count() == 16);
    CHECK(d6p == d6.with_arc(1, 3));
    for (const auto &d : {d6, d6p}) {
        CHECK_FALSE(is_hamiltonian(d));
        CHECK(has_cycle(d, 5));
    }
}

TEST_CASE("symmetric sporadic digraphs")
{
    auto c5 = gen_c5_star();
    CHECK(c5.arc_count() == 10);
    CHECK(c5.is_symmetric());
    CHECK(c5 == symmetric_closure(5, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));

    auto j = gen_join_knknk1(2);
    CHECK(j.order() == 5);
    CHECK(j.arc_count() == 2 * (1 + 1 + 4));
    CHECK(j.is_symmetric());

    auto k = gen_knn_star(2, 3);
    CHECK(k.arc_count() == 12);
    CHECK(k.is_symmetric());
}

TEST_CASE("Theorem 3 sporadic digraphs from their arc lists")
{
    // C*6(1) with x1..x6 = 0..5.
    std::vector<Arc> c6;
    for (int i = 0; i < 5; ++i)
        c6.insert(c6.end(), {{i, i + 1}, {i + 1, i}});
    c6.insert(c6.end(), {{0, 5}, {5, 0}, {0, 2}, {0, 4}, {1, 3}, {5, 3}});
    CHECK(gen_c6_star_1() == Digraph::build(6, c6));
    CHECK(gen_c6_star_1().arc_count() == 16);

    auto h6p = Digraph::build(6, {{u, x}, {x, u}, {x, v}, {v, x}, {y, z}, {z, y}, {z, w}, {w, z}, {x, w}, {x, y},
                                     {u, z}, {v, z}, {w, u}, {w, v}, {y, u}, {y, v}});
    CHECK(gen_h6_prime() == h6p);
    CHECK(h6p.arc_count() == 16);

    auto h6pp = Digraph::build(6, {{u, x}, {x, u}, {x, w}, {x, y}, {v, x}, {v, z}, {v, w}, {w, v}, {w, u}, {z, w},
                                      {z, y}, {y, z}, {u, z}, {y, u}, {y, v}});
    CHECK(gen_h6_double_prime() == h6pp);

    for (const auto &d : {gen_c6_star_1(), h6p, h6pp}) {
        CHECK(satisfies_ds(d));
        CHECK_FALSE(has_cycle(d, 4));
    }
}

TEST_CASE("classify examples")
{
    auto d6 = classify(gen_d6(false), ClassifyContext::theorem2);
    CHECK(d6.tag == FamilyTag::d6);
    CHECK(validate_witness(gen_d6(false), d6));

    auto sub = classify(k33(), ClassifyContext::theorem1);
    CHECK(sub.tag == FamilyTag::sub_knn);
    REQUIRE(sub.witness.parts.size() == 2);
    CHECK(sub.witness.parts[0].size() == 3);

    CHECK(classify(complete_symmetric(5), ClassifyContext::theorem2).tag == FamilyTag::none);
    CHECK_THROWS_AS(classify(Digraph(11), ClassifyContext::theorem1), UnsupportedSize);
}

TEST_CASE("witnesses survive relabeling")
{
    std::mt19937_64 rng(47);
    struct Case
    {
        Digraph d;
        ClassifyContext context;
        FamilyTag tag;
    };
    std::vector<Arc> cross{{0, 3}, {1, 4}, {2, 5}, {0, 4}};
    std::vector<Case> cases{
        {gen_c5_star(), ClassifyContext::theorem3_c3, FamilyTag::c5_star},
        {gen_hnn(3, cross), ClassifyContext::theorem1, FamilyTag::hnn},
        {gen_hn_n1_1(3, HnOrientation::in, {}), ClassifyContext::theorem2, FamilyTag::hn_n1_1},
        {gen_h2n(4, false), ClassifyContext::theorem1, FamilyTag::h2n},
        {gen_h2n(3, true), ClassifyContext::theorem2, FamilyTag::h2n_prime},
        {gen_join_knknk1(3), ClassifyContext::theorem1, FamilyTag::join_kn_kn_k1},
        {gen_knn_star(3, 4), ClassifyContext::theorem3_c3, FamilyTag::knn1_star},
        {gen_h6_prime(), ClassifyContext::theorem3_c4, FamilyTag::h6_prime},
    };
    for (const auto &c : cases)
        for (int trial = 0; trial < 5; ++trial) {
            auto d = c.d.relabeled(oracle::random_permutation(c.d.order(), rng));
            auto label = classify(d, c.context);
            CHECK(label.tag == c.tag);
            CHECK(validate_witness(d, label));
        }
}

TEST_CASE("validate_witness rejects wrong evidence")
{
    auto d = k33();
    FamilyLabel bad{FamilyTag::sub_knn, {{VertexSet::of({0, 1, 3}), VertexSet::of({2, 4, 5})}, {}}};
    CHECK_FALSE(validate_witness(d, bad));
    FamilyLabel good{FamilyTag::sub_knn, {{VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5})}, {}}};
    CHECK(validate_witness(d, good));
    // 0-1 would land on 0-2, a pentagon diagonal.
    FamilyLabel scrambled{FamilyTag::c5_star, {{}, {0, 2, 4, 1, 3}}};
    CHECK_FALSE(validate_witness(gen_c5_star(), scrambled));
    FamilyLabel identity{FamilyTag::c5_star, {{}, {0, 1, 2, 3, 4}}};
    CHECK(validate_witness(gen_c5_star(), identity));
}

TEST_CASE("sandwich recognition")
{
    auto k56 = gen_knn_star(5, 6);
    CHECK(k56.order() == 11);
    auto w = recognize(FamilyTag::knn1_sandwich, k56);
    REQUIRE(w);
    CHECK(w->parts[0].size() == 5);
    CHECK_FALSE(is_pancyclic(k56));
    CHECK_FALSE(has_cycle(k56, 3));

    // Filling in the small side keeps the sandwich; an arc inside the big side breaks it.
    auto filled = k56;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j)
                filled = filled.with_arc(i, j);
    CHECK(recognize(FamilyTag::knn1_sandwich, filled));
    CHECK_FALSE(recognize(FamilyTag::knn1_sandwich, k56.with_arc(5, 6)));
    CHECK_FALSE(recognize(FamilyTag::knn1_sandwich, k56.without_arc(0, 5)));
}

TEST_CASE("enumerate_family counts")
{
    auto d6 = enumerate_family(FamilyTag::d6, 6);
    CHECK(d6.size() == oracle::factorial(6) / oracle::automorphisms(gen_d6(false)));
    CHECK(enumerate_family(FamilyTag::c5_star, 5).size() == 12);
    CHECK(enumerate_family(FamilyTag::c5_star, 6).empty());
    CHECK(enumerate_family(FamilyTag::join_kn_kn_k1, 5).size() ==
        oracle::factorial(5) / oracle::automorphisms(gen_join_knknk1(2)));

    for (const auto &m : enumerate_family(FamilyTag::hnn, 4))
        CHECK_FALSE(is_strong(m));
    CHECK_THROWS_AS(enumerate_family(FamilyTag::hnn, 9), UnsupportedSize);
    CHECK_THROWS_AS(enumerate_family(FamilyTag::none, 4), DigraphError);
}

TEST_CASE("H(n,n) enumeration against generator labelings")
{
    // Every spanning cross pattern, every choice of A: the labeled family.
    for (int n : {2, 3}) {
        const int p = 2 * n;
        std::set<Digraph> expected;
        std::vector<Arc> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = n; b < p; ++b)
                pairs.emplace_back(a, b);
        std::vector<Vertex> perm(static_cast<std::size_t>(p));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<Digraph> base;
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::vector<Arc> cross;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1u)
                    cross.push_back(pairs[i]);
            try {
                base.push_back(gen_hnn(n, cross));
            }
            catch (const DigraphError &) {
            }
        }
        do {
            for (const auto &d : base)
                expected.insert(d.relabeled(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        auto got = enumerate_family(FamilyTag::hnn, p);
        CHECK(std::set<Digraph>(got.begin(), got.end()) == expected);
        CHECK(got.size() == expected.size());
    }
}

TEST_CASE("tag names round trip")
{
    for (auto t : all_family_tags()) {
        CHECK(tag_from_name(tag_name(t)) == t);
        CHECK(converse_tag(converse_tag(t)) == t);
    }
    CHECK(converse_tag(FamilyTag::d6) == FamilyTag::d6_conv);
    CHECK_FALSE(tag_from_name("nope"));
    CHECK(cli_family_names().size() == 12);
}

TEST_CASE("no false positives on random hamiltonian hypothesis digraphs")
{
    std::mt19937_64 rng(53);
    int seen = 0;
    for (int trial = 0; seen < 2000 && trial < 200000; ++trial) {
        int p = 5 + trial % 4;
        auto d = oracle::random_digraph(p, 0.7, rng);
        if (! satisfies_ds(d) || ! is_hamiltonian(d))
            continue;
        ++seen;
        if (has_cycle(d, p - 1))
            CHECK(classify(d, ClassifyContext::theorem1).tag == FamilyTag::none);
        if (p % 2 == 0)
            CHECK(classify(d, ClassifyContext::theorem2).tag == FamilyTag::none);
    }
    CHECK(seen == 2000);
}
