#pragma once

// Degree hypotheses.
//
//   ds   min degree >= p-1 and min semi-degree >= ceil(p/2 - 1)
//   gh   strong and min degree >= p                      (Ghouila-Houri)
//   ore  strong and d(x)+d(y) >= 2p for nonadjacent x,y  (Thomassen)

#include <semideg/digraph.hpp>

#include <nlohmann/json.hpp>

#include <vector>

namespace semideg
{
    /// Least integer t with t >= p/2 - 1, i.e. ceil((p-2)/2).
    constexpr auto semi_threshold(int p) -> int { return (p - 1) / 2; }

    struct ConditionProfile
    {
        int order = 0;
        int min_degree = 0;
        int min_out_degree = 0;
        int min_in_degree = 0;
        bool is_strong = false;
        bool satisfies_ds = false;
        bool satisfies_gh = false;
        bool satisfies_ore = false;

        auto operator==(const ConditionProfile &) const -> bool = default;
    };

    auto profile(const Digraph &d) -> ConditionProfile;

    /// Fast check of the ds hypothesis alone; no strongness computation.
    auto satisfies_ds(const Digraph &d) -> bool;

    /// Unordered nonadjacent pairs (i < j), sorted.
    auto nonadjacent_pairs(const Digraph &d) -> std::vector<std::pair<Vertex, Vertex>>;

    void to_json(nlohmann::json &j, const ConditionProfile &c);
}
