#include <semideg/conditions.hpp>

#include <algorithm>

namespace semideg
{
    auto satisfies_ds(const Digraph &d) -> bool
    {
        const int p = d.order();
        const int t = semi_threshold(p);
        for (int v = 0; v < p; ++v) {
            int od = std::popcount(d.out_row(v)), id = std::popcount(d.in_row(v));
            if (od < t || id < t || od + id < p - 1)
                return false;
        }
        return true;
    }

    auto profile(const Digraph &d) -> ConditionProfile
    {
        const int p = d.order();
        ConditionProfile c;
        c.order = p;
        c.min_degree = 2 * p;
        c.min_out_degree = p;
        c.min_in_degree = p;
        for (int v = 0; v < p; ++v) {
            c.min_degree = std::min(c.min_degree, d.degree(v));
            c.min_out_degree = std::min(c.min_out_degree, d.out_degree(v));
            c.min_in_degree = std::min(c.min_in_degree, d.in_degree(v));
        }
        c.is_strong = is_strong(d);
        c.satisfies_ds = c.min_degree >= p - 1 && std::min(c.min_out_degree, c.min_in_degree) >= semi_threshold(p);
        c.satisfies_gh = c.is_strong && c.min_degree >= p;

        bool ore = c.is_strong;
        for (auto [x, y] : nonadjacent_pairs(d))
            if (d.degree(x) + d.degree(y) < 2 * p) {
                ore = false;
                break;
            }
        c.satisfies_ore = ore;
        return c;
    }

    auto nonadjacent_pairs(const Digraph &d) -> std::vector<std::pair<Vertex, Vertex>>
    {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (int i = 0; i < d.order(); ++i)
            for (int j = i + 1; j < d.order(); ++j)
                if (! d.adjacent(i, j))
                    pairs.emplace_back(i, j);
        return pairs;
    }

    void to_json(nlohmann::json &j, const ConditionProfile &c)
    {
        j = {
            {"order", c.order},
            {"min_degree", c.min_degree},
            {"min_out_degree", c.min_out_degree},
            {"min_in_degree", c.min_in_degree},
            {"is_strong", c.is_strong},
            {"satisfies_ds", c.satisfies_ds},
            {"satisfies_gh", c.satisfies_gh},
            {"satisfies_ore", c.satisfies_ore},
        };
    }
}
