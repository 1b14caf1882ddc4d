#include "lemma_checks.hpp"

#include <doctest.h>

using namespace semideg;

namespace
{
    void require_clean(const lemma::Tally &t)
    {
        CHECK(t.instances > 0);
        CHECK(t.violations == 0);
        CHECK(t.mismatches == 0);
    }
}

TEST_CASE("insertion over every small neighbourhood")
{
    for (int m = 2; m <= 4; ++m)
        require_clean(lemma::insertion_reduced(m));
}

TEST_CASE("insertion over every digraph of order 4")
{
    require_clean(lemma::insertion_literal(4));
}

TEST_CASE("insertion on sampled instances")
{
    std::mt19937_64 rng(61);
    for (int p : {6, 7})
        require_clean(lemma::insertion_sampled(p, 5000, rng));
}

TEST_CASE("expansion over every small neighbourhood")
{
    for (int m = 2; m <= 4; ++m)
        require_clean(lemma::expansion_reduced(m));
}

TEST_CASE("expansion over every digraph of order 4")
{
    require_clean(lemma::expansion_literal(4));
}

TEST_CASE("expansion on sampled instances")
{
    std::mt19937_64 rng(67);
    for (int p : {6, 7})
        require_clean(lemma::expansion_sampled(p, 5000, rng));
}

TEST_CASE("neighbourhood shape over every digraph of order 4")
{
    require_clean(lemma::profile_literal(4));
}

TEST_CASE("neighbourhood shape on planted instances")
{
    std::mt19937_64 rng(71);
    for (int p : {5, 6, 7})
        require_clean(lemma::profile_sampled(p, 500, 2000000, rng));
}
