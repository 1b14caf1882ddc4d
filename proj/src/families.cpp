#include <semideg/families.hpp>

#include <semideg/cycles.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace semideg
{
    namespace
    {
        constexpr std::array all_tags{
            FamilyTag::hnn,
            FamilyTag::hn_n1_1,
            FamilyTag::h2n,
            FamilyTag::h2n_prime,
            FamilyTag::d6,
            FamilyTag::d6_prime,
            FamilyTag::d6_conv,
            FamilyTag::d6_prime_conv,
            FamilyTag::c5_star,
            FamilyTag::join_kn_kn_k1,
            FamilyTag::sub_knn,
            FamilyTag::knn1_star,
            FamilyTag::knn_star,
            FamilyTag::knn1_sandwich,
            FamilyTag::c6_star_1,
            FamilyTag::h6_prime,
            FamilyTag::h6_double_prime,
        };

        constexpr std::array<std::string_view, 12> cli_names{
            "h-nn", "h-n-n1-1", "h-2n", "h-2n-prime", "d6", "d6-prime", "c5-star",
            "join-kn-kn-k1", "knn-star", "c6-star-1", "h6-prime", "h6-double-prime"};

        auto bit(Vertex v) -> std::uint16_t { return static_cast<std::uint16_t>(1u << v); }

        auto complete_on(const Digraph &d, VertexSet s) -> bool
        {
            for (auto v : s) {
                auto others = s.without(v).bits();
                if ((d.out_row(v) & s.bits()) != others || (d.in_row(v) & s.bits()) != others)
                    return false;
            }
            return true;
        }

        auto independent(const Digraph &d, VertexSet s) -> bool
        {
            for (auto v : s)
                if (d.out_row(v) & s.bits())
                    return false;
            return true;
        }

        auto no_arcs_from_to(const Digraph &d, VertexSet from, VertexSet to) -> bool
        {
            for (auto v : from)
                if (d.out_row(v) & to.bits())
                    return false;
            return true;
        }

        auto is_partition(const Digraph &d, std::initializer_list<VertexSet> parts) -> bool
        {
            std::uint16_t seen = 0;
            for (auto s : parts) {
                if (seen & s.bits())
                    return false;
                seen |= s.bits();
            }
            return seen == d.vertices().bits();
        }

        /// k-subsets of 0..p-1 in lexicographic order of their sorted elements.
        auto lex_subsets(int p, int k) -> std::vector<VertexSet>
        {
            std::vector<VertexSet> result;
            if (k < 0 || k > p)
                return result;
            std::vector<int> c(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                c[static_cast<std::size_t>(i)] = i;
            while (true) {
                VertexSet s;
                for (auto v : c)
                    s = s.with(v);
                result.push_back(s);
                int i = k - 1;
                while (i >= 0 && c[static_cast<std::size_t>(i)] == p - k + i)
                    --i;
                if (i < 0)
                    break;
                ++c[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            }
            return result;
        }

        // --- defining constraints, given the parts -----------------------------

        auto check_hnn(const Digraph &d, VertexSet a, VertexSet b) -> bool
        {
            const int p = d.order();
            if (p % 2 != 0 || a.size() != p / 2 || ! is_partition(d, {a, b}))
                return false;
            if (! complete_on(d, a) || ! complete_on(d, b) || ! no_arcs_from_to(d, b, a))
                return false;
            for (auto v : a)
                if (! (d.out_row(v) & b.bits()))
                    return false;
            for (auto v : b)
                if (! (d.in_row(v) & a.bits()))
                    return false;
            return true;
        }

        auto check_hn_n1_1(const Digraph &d, VertexSet a_part, VertexSet b_part, Vertex a) -> bool
        {
            const int p = d.order();
            if (p % 2 != 0 || p < 4)
                return false;
            const int n = p / 2;
            const VertexSet centre = VertexSet{}.with(a);
            if (a_part.size() != n || b_part.size() != n - 1 || ! is_partition(d, {a_part, b_part, centre}))
                return false;
            if (! independent(d, a_part))
                return false;
            for (auto y : a_part)
                if ((d.out_row(y) & b_part.bits()) != b_part.bits() || (d.in_row(y) & b_part.bits()) != b_part.bits())
                    return false;
            const bool in_form = d.in_row(a) == b_part.bits() && (d.out_row(a) & a_part.bits()) == a_part.bits();
            const bool out_form = d.out_row(a) == b_part.bits() && (d.in_row(a) & a_part.bits()) == a_part.bits();
            return in_form || out_form;
        }

        auto check_h2n(const Digraph &d, VertexSet a, VertexSet b, Vertex x, Vertex y, bool primed) -> bool
        {
            const int p = d.order();
            if (p % 2 != 0 || p < 4)
                return false;
            const int n = p / 2;
            if (a.size() != n - 1 || b.size() != n - 1 || x == y)
                return false;
            if (! is_partition(d, {a, b, VertexSet{}.with(x), VertexSet{}.with(y)}))
                return false;
            if (! complete_on(d, a) || ! complete_on(d, b) || ! no_arcs_from_to(d, a, b) || ! no_arcs_from_to(d, b, a))
                return false;
            const auto ab = (a | b).bits();
            const std::uint16_t yx = primed ? bit(y) : 0, xy = primed ? bit(x) : 0;
            return d.out_row(x) == (a.bits() | bit(y)) && d.in_row(x) == (ab | yx) &&
                d.out_row(y) == (ab | xy) && d.in_row(y) == (b.bits() | bit(x));
        }

        auto check_join(const Digraph &d, VertexSet a, VertexSet b, Vertex c) -> bool
        {
            const int p = d.order();
            if (p % 2 != 1 || p < 3)
                return false;
            const int n = p / 2;
            if (a.size() != n || b.size() != n || ! is_partition(d, {a, b, VertexSet{}.with(c)}))
                return false;
            const auto rest = d.vertices().without(c).bits();
            if (d.out_row(c) != rest || d.in_row(c) != rest)
                return false;
            return complete_on(d, a) && complete_on(d, b) && no_arcs_from_to(d, a, b) && no_arcs_from_to(d, b, a);
        }

        auto check_sub_knn(const Digraph &d, VertexSet a, VertexSet b) -> bool
        {
            const int p = d.order();
            return p % 2 == 0 && a.size() == p / 2 && is_partition(d, {a, b}) && independent(d, a) && independent(d, b);
        }

        auto check_complete_bipartite(const Digraph &d, VertexSet a, VertexSet b) -> bool
        {
            if (! is_partition(d, {a, b}))
                return false;
            for (auto v : a)
                if (d.out_row(v) != b.bits() || d.in_row(v) != b.bits())
                    return false;
            for (auto v : b)
                if (d.out_row(v) != a.bits() || d.in_row(v) != a.bits())
                    return false;
            return true;
        }

        auto check_sandwich(const Digraph &d, VertexSet small, VertexSet large) -> bool
        {
            const int p = d.order();
            if (p % 2 != 1 || small.size() != p / 2 || ! is_partition(d, {small, large}))
                return false;
            if (! independent(d, large))
                return false;
            for (auto v : small)
                if ((d.out_row(v) & large.bits()) != large.bits() || (d.in_row(v) & large.bits()) != large.bits())
                    return false;
            return true;
        }

        auto is_sporadic(FamilyTag tag) -> bool
        {
            switch (tag) {
            case FamilyTag::d6:
            case FamilyTag::d6_prime:
            case FamilyTag::d6_conv:
            case FamilyTag::d6_prime_conv:
            case FamilyTag::c5_star:
            case FamilyTag::c6_star_1:
            case FamilyTag::h6_prime:
            case FamilyTag::h6_double_prime:
                return true;
            default:
                return false;
            }
        }

        auto single_vertex(VertexSet s) -> std::optional<Vertex>
        {
            if (s.size() != 1)
                return std::nullopt;
            return s.first();
        }
    }

    auto tag_name(FamilyTag tag) -> std::string_view
    {
        switch (tag) {
        case FamilyTag::hnn: return "HNN";
        case FamilyTag::hn_n1_1: return "HN_N1_1";
        case FamilyTag::h2n: return "H2N";
        case FamilyTag::h2n_prime: return "H2N_PRIME";
        case FamilyTag::d6: return "D6";
        case FamilyTag::d6_prime: return "D6_PRIME";
        case FamilyTag::d6_conv: return "D6_CONV";
        case FamilyTag::d6_prime_conv: return "D6_PRIME_CONV";
        case FamilyTag::c5_star: return "C5_STAR";
        case FamilyTag::join_kn_kn_k1: return "JOIN_KN_KN_K1";
        case FamilyTag::sub_knn: return "SUB_KNN";
        case FamilyTag::knn1_star: return "KNN1_STAR";
        case FamilyTag::knn_star: return "KNN_STAR";
        case FamilyTag::knn1_sandwich: return "KNN1_SANDWICH";
        case FamilyTag::c6_star_1: return "C6_STAR_1";
        case FamilyTag::h6_prime: return "H6_PRIME";
        case FamilyTag::h6_double_prime: return "H6_DOUBLE_PRIME";
        case FamilyTag::none: return "NONE";
        }
        return "NONE";
    }

    auto tag_from_name(std::string_view name) -> std::optional<FamilyTag>
    {
        for (auto t : all_tags)
            if (tag_name(t) == name)
                return t;
        if (name == "NONE")
            return FamilyTag::none;
        return std::nullopt;
    }

    auto all_family_tags() -> std::span<const FamilyTag>
    {
        return all_tags;
    }

    auto converse_tag(FamilyTag tag) -> FamilyTag
    {
        switch (tag) {
        case FamilyTag::d6: return FamilyTag::d6_conv;
        case FamilyTag::d6_conv: return FamilyTag::d6;
        case FamilyTag::d6_prime: return FamilyTag::d6_prime_conv;
        case FamilyTag::d6_prime_conv: return FamilyTag::d6_prime;
        default: return tag;
        }
    }

    auto cli_family_names() -> std::span<const std::string_view>
    {
        return cli_names;
    }

    // --- generators -----------------------------------------------------------

    auto gen_hnn(int n, std::span<const Arc> cross_arcs) -> Digraph
    {
        if (n < 1 || 2 * n > Digraph::max_order)
            throw DigraphError("H(n,n) needs 1 <= n <= 8");
        const int p = 2 * n;
        const auto a = VertexSet{static_cast<std::uint16_t>((1u << n) - 1u)};
        const auto b = VertexSet::all(p) - a;
        std::vector<Arc> arcs;
        for (auto [u, v] : cross_arcs) {
            if (! a.contains(u) || ! b.contains(v) || u < 0 || v >= p)
                throw DigraphError("cross arc (" + std::to_string(u) + "," + std::to_string(v) + ") is not from A to B");
            arcs.emplace_back(u, v);
        }
        for (auto part : {a, b})
            for (auto u : part)
                for (auto v : part)
                    if (u != v)
                        arcs.emplace_back(u, v);
        auto d = Digraph::build(p, arcs);
        for (auto u : a)
            if (! (d.out_row(u) & b.bits()))
                throw DigraphError("vertex " + std::to_string(u) + " of A has no arc to B");
        for (auto v : b)
            if (! (d.in_row(v) & a.bits()))
                throw DigraphError("vertex " + std::to_string(v) + " of B has no arc from A");
        return d;
    }

    auto hn_n1_1_free_arcs(int n, HnOrientation orientation) -> std::vector<Arc>
    {
        if (n < 2 || 2 * n > Digraph::max_order)
            throw DigraphError("H(n,n-1,1) needs 2 <= n <= 8");
        const Vertex a = 2 * n - 1;
        std::vector<Arc> free;
        for (Vertex u = n; u < a; ++u)
            for (Vertex v = n; v < a; ++v)
                if (u != v)
                    free.emplace_back(u, v);
        for (Vertex b = n; b < a; ++b)
            free.push_back(orientation == HnOrientation::in ? Arc{a, b} : Arc{b, a});
        std::sort(free.begin(), free.end());
        return free;
    }

    auto gen_hn_n1_1(int n, HnOrientation orientation, std::span<const Arc> chosen) -> Digraph
    {
        const auto free = hn_n1_1_free_arcs(n, orientation);
        const Vertex a = 2 * n - 1;
        std::vector<Arc> arcs;
        for (auto arc : chosen) {
            if (! std::binary_search(free.begin(), free.end(), arc))
                throw DigraphError("arc (" + std::to_string(arc.first) + "," + std::to_string(arc.second) +
                    ") conflicts with the fixed structure of H(n,n-1,1)");
            arcs.push_back(arc);
        }
        for (Vertex y = 0; y < n; ++y) {
            for (Vertex z = n; z < a; ++z) {
                arcs.emplace_back(y, z);
                arcs.emplace_back(z, y);
            }
            arcs.push_back(orientation == HnOrientation::in ? Arc{a, y} : Arc{y, a});
        }
        for (Vertex b = n; b < a; ++b)
            arcs.push_back(orientation == HnOrientation::in ? Arc{b, a} : Arc{a, b});
        return Digraph::build(2 * n, arcs);
    }

    auto gen_h2n(int n, bool primed) -> Digraph
    {
        if (n < 2 || 2 * n > Digraph::max_order)
            throw DigraphError("H(2n) needs 2 <= n <= 8");
        const Vertex x = 2 * n - 2, y = 2 * n - 1;
        std::vector<Vertex> a, b;
        for (Vertex v = 0; v < n - 1; ++v)
            a.push_back(v);
        for (Vertex v = n - 1; v < 2 * n - 2; ++v)
            b.push_back(v);

        std::vector<Arc> arcs;
        for (const auto &part : {a, b})
            for (auto u : part)
                for (auto v : part)
                    if (u != v)
                        arcs.emplace_back(u, v);
        arcs.emplace_back(x, y);
        for (auto v : a) {
            arcs.emplace_back(x, v);
            arcs.emplace_back(v, x);
            arcs.emplace_back(y, v);
        }
        for (auto v : b) {
            arcs.emplace_back(v, x);
            arcs.emplace_back(y, v);
            arcs.emplace_back(v, y);
        }
        if (primed)
            arcs.emplace_back(y, x);
        return Digraph::build(2 * n, arcs);
    }

    auto gen_d6(bool primed) -> Digraph
    {
        // x1..x5 -> 0..4, x -> 5
        constexpr Vertex x = 5;
        std::vector<Arc> arcs{
            {0, 1}, {1, 2}, {2, 3}, {3, 4},
            {x, 0}, {x, 1}, {x, 2},
            {0, 4}, {1, 4}, {4, 0}, {4, 3}, {2, 1}, {2, x}, {3, 0}, {3, x},
        };
        if (primed)
            arcs.emplace_back(1, 3);
        return Digraph::build(6, arcs);
    }

    auto gen_c5_star() -> Digraph
    {
        const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
        return symmetric_closure(5, edges);
    }

    auto gen_join_knknk1(int n) -> Digraph
    {
        if (n < 1 || 2 * n + 1 > Digraph::max_order)
            throw DigraphError("[(Kn u Kn)+K1]* needs 1 <= n <= 7");
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int block = 0; block < 2; ++block)
            for (Vertex u = block * n; u < (block + 1) * n; ++u)
                for (Vertex v = u + 1; v < (block + 1) * n; ++v)
                    edges.emplace_back(u, v);
        for (Vertex u = 0; u < 2 * n; ++u)
            edges.emplace_back(u, 2 * n);
        return symmetric_closure(2 * n + 1, edges);
    }

    auto gen_knn_star(int n, int m) -> Digraph
    {
        if (n < 1 || m < 1 || n + m > Digraph::max_order)
            throw DigraphError("K*_{n,m} needs n, m >= 1 and n + m <= 16");
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = n; v < n + m; ++v)
                edges.emplace_back(u, v);
        return symmetric_closure(n + m, edges);
    }

    auto gen_c6_star_1() -> Digraph
    {
        // x1..x6 -> 0..5
        std::vector<Arc> arcs;
        for (Vertex i = 0; i < 5; ++i) {
            arcs.emplace_back(i, i + 1);
            arcs.emplace_back(i + 1, i);
        }
        for (Arc a : {Arc{0, 5}, Arc{5, 0}, Arc{0, 2}, Arc{0, 4}, Arc{1, 3}, Arc{5, 3}})
            arcs.push_back(a);
        return Digraph::build(6, arcs);
    }

    namespace
    {
        enum H6 : Vertex
        {
            hx, hy, hz, hu, hv, hw
        };
    }

    auto gen_h6_prime() -> Digraph
    {
        return Digraph::build(6, {
            {hu, hx}, {hx, hu}, {hx, hv}, {hv, hx}, {hy, hz}, {hz, hy}, {hz, hw}, {hw, hz},
            {hx, hw}, {hx, hy}, {hu, hz}, {hv, hz}, {hw, hu}, {hw, hv}, {hy, hu}, {hy, hv},
        });
    }

    auto gen_h6_double_prime() -> Digraph
    {
        return Digraph::build(6, {
            {hu, hx}, {hx, hu}, {hx, hw}, {hx, hy}, {hv, hx}, {hv, hz}, {hv, hw}, {hw, hv},
            {hw, hu}, {hz, hw}, {hz, hy}, {hy, hz}, {hu, hz}, {hy, hu}, {hy, hv},
        });
    }

    auto gen_sub_knn(int n, std::span<const Arc> arcs) -> Digraph
    {
        if (n < 1 || 2 * n > Digraph::max_order)
            throw DigraphError("K*_{n,n} needs 1 <= n <= 8");
        for (auto [u, v] : arcs)
            if ((u < n) == (v < n))
                throw DigraphError("arc (" + std::to_string(u) + "," + std::to_string(v) + ") does not cross the bipartition");
        return Digraph::build(2 * n, arcs);
    }

    auto canonical_member(FamilyTag tag, int order) -> std::optional<Digraph>
    {
        const bool even = order % 2 == 0;
        switch (tag) {
        case FamilyTag::d6:
            return order == 6 ? std::optional{gen_d6(false)} : std::nullopt;
        case FamilyTag::d6_prime:
            return order == 6 ? std::optional{gen_d6(true)} : std::nullopt;
        case FamilyTag::d6_conv:
            return order == 6 ? std::optional{gen_d6(false).converse()} : std::nullopt;
        case FamilyTag::d6_prime_conv:
            return order == 6 ? std::optional{gen_d6(true).converse()} : std::nullopt;
        case FamilyTag::c5_star:
            return order == 5 ? std::optional{gen_c5_star()} : std::nullopt;
        case FamilyTag::c6_star_1:
            return order == 6 ? std::optional{gen_c6_star_1()} : std::nullopt;
        case FamilyTag::h6_prime:
            return order == 6 ? std::optional{gen_h6_prime()} : std::nullopt;
        case FamilyTag::h6_double_prime:
            return order == 6 ? std::optional{gen_h6_double_prime()} : std::nullopt;
        case FamilyTag::h2n:
        case FamilyTag::h2n_prime:
            if (! even || order < 4 || order > Digraph::max_order)
                return std::nullopt;
            return gen_h2n(order / 2, tag == FamilyTag::h2n_prime);
        case FamilyTag::join_kn_kn_k1:
            if (even || order < 3 || order > Digraph::max_order)
                return std::nullopt;
            return gen_join_knknk1(order / 2);
        case FamilyTag::knn1_star:
            if (even || order < 3 || order > Digraph::max_order)
                return std::nullopt;
            return gen_knn_star(order / 2, order / 2 + 1);
        case FamilyTag::knn_star:
            if (! even || order < 2 || order > Digraph::max_order)
                return std::nullopt;
            return gen_knn_star(order / 2, order / 2);
        default:
            return std::nullopt;
        }
    }

    // --- recognition ----------------------------------------------------------

    auto recognize(FamilyTag tag, const Digraph &d) -> std::optional<FamilyWitness>
    {
        const int p = d.order();
        const auto all = d.vertices();

        if (is_sporadic(tag)) {
            auto member = canonical_member(tag, p);
            if (! member)
                return std::nullopt;
            auto iso = find_isomorphism(*member, d);
            if (! iso)
                return std::nullopt;
            return FamilyWitness{{}, std::move(*iso)};
        }

        switch (tag) {
        case FamilyTag::hnn:
            if (p % 2 != 0 || is_strong(d))
                return std::nullopt;
            for (auto a : lex_subsets(p, p / 2))
                if (check_hnn(d, a, all - a))
                    return FamilyWitness{{a, all - a}, {}};
            return std::nullopt;

        case FamilyTag::hn_n1_1:
            if (p % 2 != 0 || p < 4)
                return std::nullopt;
            for (auto a_part : lex_subsets(p, p / 2)) {
                if (! independent(d, a_part))
                    continue;
                for (auto a : all - a_part) {
                    auto b_part = (all - a_part).without(a);
                    if (check_hn_n1_1(d, a_part, b_part, a))
                        return FamilyWitness{{a_part, b_part, VertexSet{}.with(a)}, {}};
                }
            }
            return std::nullopt;

        case FamilyTag::h2n:
        case FamilyTag::h2n_prime:
            if (p % 2 != 0 || p < 4)
                return std::nullopt;
            for (Vertex x = 0; x < p; ++x)
                for (auto y : d.out_neighbours(x)) {
                    auto a = d.out_neighbours(x).without(y);
                    auto b = all - a - VertexSet{}.with(x).with(y);
                    if (check_h2n(d, a, b, x, y, tag == FamilyTag::h2n_prime))
                        return FamilyWitness{{a, b, VertexSet{}.with(x), VertexSet{}.with(y)}, {}};
                }
            return std::nullopt;

        case FamilyTag::join_kn_kn_k1:
            if (p % 2 != 1 || p < 3)
                return std::nullopt;
            for (Vertex c = 0; c < p; ++c) {
                auto rest = all.without(c);
                if (d.out_row(c) != rest.bits() || d.in_row(c) != rest.bits())
                    continue;
                auto v = rest.first();
                auto a = (d.out_neighbours(v) & rest).with(v);
                if (check_join(d, a, rest - a, c))
                    return FamilyWitness{{a, rest - a, VertexSet{}.with(c)}, {}};
            }
            return std::nullopt;

        case FamilyTag::sub_knn:
            if (p % 2 != 0)
                return std::nullopt;
            for (auto a : lex_subsets(p, p / 2))
                if (check_sub_knn(d, a, all - a))
                    return FamilyWitness{{a, all - a}, {}};
            return std::nullopt;

        case FamilyTag::knn_star:
            if (p % 2 != 0)
                return std::nullopt;
            for (auto a : lex_subsets(p, p / 2))
                if (check_complete_bipartite(d, a, all - a))
                    return FamilyWitness{{a, all - a}, {}};
            return std::nullopt;

        case FamilyTag::knn1_star:
        case FamilyTag::knn1_sandwich:
            if (p % 2 != 1 || p < 3)
                return std::nullopt;
            for (auto s : lex_subsets(p, p / 2)) {
                bool ok = tag == FamilyTag::knn1_star ? check_complete_bipartite(d, s, all - s) : check_sandwich(d, s, all - s);
                if (ok)
                    return FamilyWitness{{s, all - s}, {}};
            }
            return std::nullopt;

        default:
            return std::nullopt;
        }
    }

    auto validate_witness(const Digraph &d, const FamilyLabel &label) -> bool
    {
        const auto &parts = label.witness.parts;
        if (is_sporadic(label.tag)) {
            auto member = canonical_member(label.tag, d.order());
            if (! member || static_cast<int>(label.witness.isomorphism.size()) != d.order())
                return false;
            try {
                return member->relabeled(label.witness.isomorphism) == d;
            }
            catch (const DigraphError &) {
                return false;
            }
        }

        switch (label.tag) {
        case FamilyTag::hnn:
            return parts.size() == 2 && check_hnn(d, parts[0], parts[1]);
        case FamilyTag::sub_knn:
            return parts.size() == 2 && check_sub_knn(d, parts[0], parts[1]);
        case FamilyTag::knn_star:
            return parts.size() == 2 && d.order() % 2 == 0 && parts[0].size() == d.order() / 2 &&
                check_complete_bipartite(d, parts[0], parts[1]);
        case FamilyTag::knn1_star:
            return parts.size() == 2 && d.order() % 2 == 1 && parts[0].size() == d.order() / 2 &&
                check_complete_bipartite(d, parts[0], parts[1]);
        case FamilyTag::knn1_sandwich:
            return parts.size() == 2 && check_sandwich(d, parts[0], parts[1]);
        case FamilyTag::hn_n1_1: {
            auto a = parts.size() == 3 ? single_vertex(parts[2]) : std::nullopt;
            return a && check_hn_n1_1(d, parts[0], parts[1], *a);
        }
        case FamilyTag::h2n:
        case FamilyTag::h2n_prime: {
            if (parts.size() != 4)
                return false;
            auto x = single_vertex(parts[2]), y = single_vertex(parts[3]);
            return x && y && check_h2n(d, parts[0], parts[1], *x, *y, label.tag == FamilyTag::h2n_prime);
        }
        case FamilyTag::join_kn_kn_k1: {
            auto c = parts.size() == 3 ? single_vertex(parts[2]) : std::nullopt;
            return c && check_join(d, parts[0], parts[1], *c);
        }
        default:
            return false;
        }
    }

    // --- classification -------------------------------------------------------

    auto context_name(ClassifyContext c) -> std::string_view
    {
        switch (c) {
        case ClassifyContext::theorem1: return "theorem1";
        case ClassifyContext::theorem2: return "theorem2";
        case ClassifyContext::theorem3_c3: return "theorem3_c3";
        case ClassifyContext::theorem3_c4: return "theorem3_c4";
        case ClassifyContext::pancyclic: return "pancyclic";
        case ClassifyContext::ore: return "ore";
        }
        return "theorem1";
    }

    auto context_from_name(std::string_view name) -> std::optional<ClassifyContext>
    {
        for (auto c : {ClassifyContext::theorem1, ClassifyContext::theorem2, ClassifyContext::theorem3_c3,
                 ClassifyContext::theorem3_c4, ClassifyContext::pancyclic, ClassifyContext::ore})
            if (context_name(c) == name)
                return c;
        return std::nullopt;
    }

    auto admissible_tags(ClassifyContext context, int p) -> std::vector<FamilyTag>
    {
        using enum FamilyTag;
        const bool even = p % 2 == 0;
        std::vector<FamilyTag> tags;
        auto add_if = [&](bool cond, std::initializer_list<FamilyTag> ts) {
            if (cond)
                tags.insert(tags.end(), ts);
        };

        switch (context) {
        case ClassifyContext::theorem1:
            add_if(p == 5, {c5_star});
            add_if(even, {hnn});
            add_if(! even, {join_kn_kn_k1});
            add_if(even, {h2n, h2n_prime, sub_knn});
            break;
        case ClassifyContext::theorem2:
            add_if(p == 6, {d6, d6_prime, d6_conv, d6_prime_conv});
            add_if(even, {hnn, hn_n1_1, h2n, h2n_prime});
            break;
        case ClassifyContext::theorem3_c3:
            add_if(p == 5, {c5_star});
            add_if(even, {sub_knn});
            add_if(! even, {knn1_star});
            break;
        case ClassifyContext::theorem3_c4:
            add_if(p == 5, {c5_star});
            add_if(p == 6, {h6_prime, h6_double_prime, c6_star_1, hnn});
            add_if(p == 5, {join_kn_kn_k1});
            break;
        case ClassifyContext::pancyclic:
            add_if(! even, {knn1_sandwich});
            add_if(even, {sub_knn, hnn, hn_n1_1});
            add_if(! even, {join_kn_kn_k1});
            add_if(even, {h2n, h2n_prime});
            break;
        case ClassifyContext::ore:
            add_if(even, {knn_star});
            break;
        }
        return tags;
    }

    auto classify(const Digraph &d, ClassifyContext context) -> FamilyLabel
    {
        if (d.order() > max_isomorphism_order)
            throw UnsupportedSize("classification is limited to order 10");
        for (auto tag : admissible_tags(context, d.order()))
            if (auto w = recognize(tag, d))
                return {tag, std::move(*w)};
        return {};
    }

    // --- enumeration ----------------------------------------------------------

    namespace
    {
        auto sorted_unique(std::vector<Digraph> v) -> std::vector<Digraph>
        {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return v;
        }

        auto enumerate_hnn(int p) -> std::vector<Digraph>
        {
            const int n = p / 2;
            std::vector<Digraph> out;
            std::array<std::uint16_t, Digraph::max_order> rows{};
            for (auto a : lex_subsets(p, n)) {
                auto b = VertexSet::all(p) - a;
                auto av = a.to_vector(), bv = b.to_vector();
                const std::uint32_t cells = static_cast<std::uint32_t>(n * n);
                for (std::uint32_t m = 0; m < (1u << cells); ++m) {
                    bool covered = true;
                    std::uint16_t hit = 0;
                    for (int i = 0; i < n; ++i) {
                        std::uint16_t row = 0;
                        for (int j = 0; j < n; ++j)
                            if ((m >> (i * n + j)) & 1u)
                                row |= bit(bv[static_cast<std::size_t>(j)]);
                        if (! row)
                            covered = false;
                        hit |= row;
                        rows[static_cast<std::size_t>(av[static_cast<std::size_t>(i)])] =
                            static_cast<std::uint16_t>(row | a.without(av[static_cast<std::size_t>(i)]).bits());
                    }
                    if (! covered || hit != b.bits())
                        continue;
                    for (auto v : bv)
                        rows[static_cast<std::size_t>(v)] = b.without(v).bits();
                    out.push_back(Digraph::from_out_rows(p, {rows.data(), static_cast<std::size_t>(p)}));
                }
            }
            return sorted_unique(std::move(out));
        }

        auto enumerate_hn_n1_1(int p) -> std::vector<Digraph>
        {
            const int n = p / 2;
            std::vector<Digraph> out;
            for (auto orientation : {HnOrientation::in, HnOrientation::out}) {
                const auto free = hn_n1_1_free_arcs(n, orientation);
                for (std::uint32_t m = 0; m < (1u << free.size()); ++m) {
                    std::vector<Arc> chosen;
                    for (std::size_t k = 0; k < free.size(); ++k)
                        if ((m >> k) & 1u)
                            chosen.push_back(free[k]);
                    auto base = gen_hn_n1_1(n, orientation, chosen);
                    // Relabel onto every (A, a) placement; B takes the rest in order.
                    for (auto a_part : lex_subsets(p, n))
                        for (auto a : VertexSet::all(p) - a_part) {
                            auto b_part = (VertexSet::all(p) - a_part).without(a);
                            std::vector<Vertex> perm;
                            for (auto v : a_part)
                                perm.push_back(v);
                            for (auto v : b_part)
                                perm.push_back(v);
                            perm.push_back(a);
                            out.push_back(base.relabeled(perm));
                        }
                }
            }
            return sorted_unique(std::move(out));
        }

        auto enumerate_sub_knn(int p) -> std::vector<Digraph>
        {
            const int n = p / 2;
            std::vector<Digraph> out;
            for (auto a : lex_subsets(p, n)) {
                auto b = VertexSet::all(p) - a;
                std::vector<Arc> cross;
                for (auto u : a)
                    for (auto v : b) {
                        cross.emplace_back(u, v);
                        cross.emplace_back(v, u);
                    }
                for (std::uint32_t m = 0; m < (1u << cross.size()); ++m) {
                    std::vector<Arc> chosen;
                    for (std::size_t k = 0; k < cross.size(); ++k)
                        if ((m >> k) & 1u)
                            chosen.push_back(cross[k]);
                    out.push_back(Digraph::build(p, chosen));
                }
            }
            return sorted_unique(std::move(out));
        }
    }

    namespace
    {
        auto enumerate_sandwich(int p) -> std::vector<Digraph>
        {
            std::vector<Digraph> out;
            for (auto s : lex_subsets(p, p / 2)) {
                auto t = VertexSet::all(p) - s;
                std::vector<Arc> fixed, inner;
                for (auto u : s) {
                    for (auto v : t) {
                        fixed.emplace_back(u, v);
                        fixed.emplace_back(v, u);
                    }
                    for (auto v : s)
                        if (u != v)
                            inner.emplace_back(u, v);
                }
                for (std::uint32_t m = 0; m < (1u << inner.size()); ++m) {
                    auto arcs = fixed;
                    for (std::size_t k = 0; k < inner.size(); ++k)
                        if ((m >> k) & 1u)
                            arcs.push_back(inner[k]);
                    out.push_back(Digraph::build(p, arcs));
                }
            }
            return sorted_unique(std::move(out));
        }
    }

    auto enumerate_family(FamilyTag tag, int order) -> std::vector<Digraph>
    {
        if (order > 8)
            throw UnsupportedSize("family enumeration is limited to order 8");
        if (order < 2)
            return {};
        if (auto member = canonical_member(tag, order))
            return all_labelings(*member);
        const bool even = order % 2 == 0;
        switch (tag) {
        case FamilyTag::hnn:
            return even ? enumerate_hnn(order) : std::vector<Digraph>{};
        case FamilyTag::hn_n1_1:
            return even && order >= 4 ? enumerate_hn_n1_1(order) : std::vector<Digraph>{};
        case FamilyTag::sub_knn:
            if (order > 4)
                throw UnsupportedSize("SUB_KNN enumeration is limited to order 4");
            return even ? enumerate_sub_knn(order) : std::vector<Digraph>{};
        case FamilyTag::knn1_sandwich:
            return even ? std::vector<Digraph>{} : enumerate_sandwich(order);
        case FamilyTag::none:
            throw DigraphError("NONE is not a family");
        default:
            return {};
        }
    }
}
