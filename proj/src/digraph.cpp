#include <semideg/digraph.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace semideg
{
    namespace
    {
        auto check_order(int order) -> int
        {
            if (order < 1 || order > Digraph::max_order)
                throw DigraphError("order " + std::to_string(order) + " outside [1, 16]");
            return order;
        }

        auto mask_of(int order) -> std::uint16_t { return static_cast<std::uint16_t>((1u << order) - 1u); }
    }

    auto VertexSet::to_vector() const -> std::vector<Vertex>
    {
        return {begin(), end()};
    }

    Digraph::Digraph(int order) : order_(check_order(order)) {}

    auto Digraph::build(int order, std::span<const Arc> arcs) -> Digraph
    {
        if (order < 2 || order > max_order)
            throw DigraphError("order " + std::to_string(order) + " outside [2, 16]");
        Digraph d(order);
        for (auto [from, to] : arcs) {
            if (from < 0 || from >= order || to < 0 || to >= order)
                throw DigraphError("arc (" + std::to_string(from) + "," + std::to_string(to) + ") has a vertex out of range");
            if (from == to)
                throw DigraphError("loop at vertex " + std::to_string(from));
            d.out_[static_cast<std::size_t>(from)] |= static_cast<std::uint16_t>(1u << to);
            d.in_[static_cast<std::size_t>(to)] |= static_cast<std::uint16_t>(1u << from);
        }
        return d;
    }

    auto Digraph::from_out_rows(int order, std::span<const std::uint16_t> rows) -> Digraph
    {
        Digraph d(order);
        if (static_cast<int>(rows.size()) < order)
            throw DigraphError("expected " + std::to_string(order) + " rows");
        const auto full = mask_of(order);
        for (int i = 0; i < order; ++i) {
            auto row = rows[static_cast<std::size_t>(i)];
            if (row & ~full)
                throw DigraphError("row " + std::to_string(i) + " has bits beyond the order");
            if ((row >> i) & 1u)
                throw DigraphError("loop at vertex " + std::to_string(i));
            d.out_[static_cast<std::size_t>(i)] = row;
            for (auto j : VertexSet{row})
                d.in_[static_cast<std::size_t>(j)] |= static_cast<std::uint16_t>(1u << i);
        }
        return d;
    }

    auto Digraph::degree_toward(Vertex v, VertexSet s) const -> int
    {
        s = s.without(check(v)) & vertices();
        return std::popcount(static_cast<std::uint16_t>(out_row(v) & s.bits())) +
            std::popcount(static_cast<std::uint16_t>(in_row(v) & s.bits()));
    }

    auto Digraph::arc_count() const -> int
    {
        int n = 0;
        for (int i = 0; i < order_; ++i)
            n += std::popcount(out_row(i));
        return n;
    }

    auto Digraph::arcs() const -> std::vector<Arc>
    {
        std::vector<Arc> result;
        for (int i = 0; i < order_; ++i)
            for (auto j : VertexSet{out_row(i)})
                result.emplace_back(i, j);
        return result;
    }

    auto Digraph::converse() const -> Digraph
    {
        Digraph d(*this);
        std::swap(d.out_, d.in_);
        return d;
    }

    auto Digraph::with_arc(Vertex from, Vertex to) const -> Digraph
    {
        check(from);
        check(to);
        if (from == to)
            throw DigraphError("loop at vertex " + std::to_string(from));
        Digraph d(*this);
        d.out_[static_cast<std::size_t>(from)] |= static_cast<std::uint16_t>(1u << to);
        d.in_[static_cast<std::size_t>(to)] |= static_cast<std::uint16_t>(1u << from);
        return d;
    }

    auto Digraph::without_arc(Vertex from, Vertex to) const -> Digraph
    {
        check(from);
        check(to);
        Digraph d(*this);
        d.out_[static_cast<std::size_t>(from)] &= static_cast<std::uint16_t>(~(1u << to));
        d.in_[static_cast<std::size_t>(to)] &= static_cast<std::uint16_t>(~(1u << from));
        return d;
    }

    auto Digraph::relabeled(std::span<const Vertex> perm) const -> Digraph
    {
        if (static_cast<int>(perm.size()) != order_)
            throw DigraphError("relabeling has the wrong length");
        std::uint16_t seen = 0;
        for (auto v : perm) {
            check(v);
            seen |= static_cast<std::uint16_t>(1u << v);
        }
        if (seen != mask_of(order_))
            throw DigraphError("relabeling is not a permutation");

        Digraph d(order_);
        for (int i = 0; i < order_; ++i) {
            auto pi = static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]);
            for (auto j : VertexSet{out_row(i)}) {
                auto pj = static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]);
                d.out_[pi] |= static_cast<std::uint16_t>(1u << pj);
                d.in_[pj] |= static_cast<std::uint16_t>(1u << pi);
            }
        }
        return d;
    }

    auto Digraph::is_symmetric() const -> bool
    {
        return out_ == in_;
    }

    auto Digraph::arc_code() const -> std::uint64_t
    {
        if (order_ > 8)
            throw UnsupportedSize("arc codes are limited to order 8");
        std::uint64_t code = 0;
        for (int i = 0; i < order_; ++i)
            for (int j = 0; j < order_; ++j)
                if (i != j)
                    code = (code << 1) | (has_arc(i, j) ? 1u : 0u);
        return code;
    }

    auto Digraph::from_arc_code(int order, std::uint64_t code) -> Digraph
    {
        if (order > 8)
            throw UnsupportedSize("arc codes are limited to order 8");
        Digraph d(order);
        int bit = order * (order - 1);
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j)
                if (i != j && ((code >> --bit) & 1u)) {
                    d.out_[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1u << j);
                    d.in_[static_cast<std::size_t>(j)] |= static_cast<std::uint16_t>(1u << i);
                }
        return d;
    }

    auto DigraphHash::operator()(const Digraph &d) const noexcept -> std::size_t
    {
        std::size_t h = static_cast<std::size_t>(d.order());
        for (int i = 0; i < d.order(); ++i)
            h = h * 0x100000001b3ull ^ d.out_row(i);
        return h;
    }

    auto complete_symmetric(int order) -> Digraph
    {
        std::vector<std::uint16_t> rows(static_cast<std::size_t>(order));
        for (int i = 0; i < order; ++i)
            rows[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(mask_of(order) & ~(1u << i));
        return Digraph::from_out_rows(order, rows);
    }

    auto symmetric_closure(int order, std::span<const std::pair<Vertex, Vertex>> edges) -> Digraph
    {
        std::vector<Arc> arcs;
        for (auto [a, b] : edges) {
            arcs.emplace_back(a, b);
            arcs.emplace_back(b, a);
        }
        return Digraph::build(order, arcs);
    }

    auto VertexSeq::vertex_set() const -> VertexSet
    {
        VertexSet s;
        for (auto v : vertices)
            s = s.with(v);
        return s;
    }

    auto is_valid_in(const VertexSeq &seq, const Digraph &d) -> bool
    {
        const auto n = seq.vertices.size();
        if (n < 2 && seq.kind == SeqKind::cycle)
            return false;
        if (n == 0)
            return false;
        std::uint16_t seen = 0;
        for (auto v : seq.vertices) {
            if (v < 0 || v >= d.order() || ((seen >> v) & 1u))
                return false;
            seen |= static_cast<std::uint16_t>(1u << v);
        }
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (! d.has_arc(seq.vertices[i], seq.vertices[i + 1]))
                return false;
        if (seq.kind == SeqKind::cycle && ! d.has_arc(seq.vertices.back(), seq.vertices.front()))
            return false;
        return true;
    }

    auto induced(const Digraph &d, VertexSet s) -> InducedSubdigraph
    {
        s = s & d.vertices();
        if (s.empty())
            throw DigraphError("induced subdigraph of an empty vertex set");
        std::vector<Vertex> original = s.to_vector();
        std::array<int, Digraph::max_order> label{};
        for (std::size_t i = 0; i < original.size(); ++i)
            label[static_cast<std::size_t>(original[i])] = static_cast<int>(i);

        std::vector<std::uint16_t> rows(original.size());
        for (std::size_t i = 0; i < original.size(); ++i)
            for (auto j : VertexSet{static_cast<std::uint16_t>(d.out_row(original[i]) & s.bits())})
                rows[i] |= static_cast<std::uint16_t>(1u << label[static_cast<std::size_t>(j)]);
        return {Digraph::from_out_rows(static_cast<int>(original.size()), rows), std::move(original)};
    }

    auto reachable_from(const Digraph &d, Vertex v) -> VertexSet
    {
        std::uint16_t seen = static_cast<std::uint16_t>(1u << v), frontier = seen;
        while (frontier) {
            std::uint16_t next = 0;
            for (auto u : VertexSet{frontier})
                next |= d.out_row(u);
            frontier = static_cast<std::uint16_t>(next & ~seen);
            seen |= next;
        }
        return VertexSet{seen};
    }

    auto is_strong(const Digraph &d) -> bool
    {
        const auto full = mask_of(d.order());
        if (reachable_from(d, 0).bits() != full)
            return false;
        return reachable_from(d.converse(), 0).bits() == full;
    }

    namespace
    {
        struct Tarjan
        {
            const Digraph &d;
            std::array<int, Digraph::max_order> index{}, low{};
            std::array<bool, Digraph::max_order> on_stack{};
            std::vector<Vertex> stack;
            std::vector<VertexSet> components;
            int counter = 0;

            void visit(Vertex v)
            {
                auto vi = static_cast<std::size_t>(v);
                index[vi] = low[vi] = ++counter;
                stack.push_back(v);
                on_stack[vi] = true;
                for (auto w : VertexSet{d.out_row(v)}) {
                    auto wi = static_cast<std::size_t>(w);
                    if (index[wi] == 0) {
                        visit(w);
                        low[vi] = std::min(low[vi], low[wi]);
                    }
                    else if (on_stack[wi])
                        low[vi] = std::min(low[vi], index[wi]);
                }
                if (low[vi] == index[vi]) {
                    VertexSet component;
                    Vertex w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = false;
                        component = component.with(w);
                    } while (w != v);
                    components.push_back(component);
                }
            }
        };
    }

    auto strong_components(const Digraph &d) -> std::vector<VertexSet>
    {
        Tarjan t{d, {}, {}, {}, {}, {}, 0};
        for (int v = 0; v < d.order(); ++v)
            if (t.index[static_cast<std::size_t>(v)] == 0)
                t.visit(v);
        // Tarjan emits sink components first.
        std::reverse(t.components.begin(), t.components.end());
        return std::move(t.components);
    }

    namespace
    {
        // Extends a partial map a -> b vertex by vertex in order 0..n-1.
        struct IsoSearch
        {
            const Digraph &a;
            const Digraph &b;
            int n;
            std::array<Vertex, Digraph::max_order> map{};
            std::uint16_t used = 0;
            std::uint64_t count = 0;
            bool stop_at_first;

            auto consistent(Vertex v, Vertex image) const -> bool
            {
                if (a.out_degree(v) != b.out_degree(image) || a.in_degree(v) != b.in_degree(image))
                    return false;
                for (Vertex u = 0; u < v; ++u) {
                    auto mu = map[static_cast<std::size_t>(u)];
                    if (a.has_arc(u, v) != b.has_arc(mu, image) || a.has_arc(v, u) != b.has_arc(image, mu))
                        return false;
                }
                return true;
            }

            auto extend(Vertex v) -> bool
            {
                if (v == n) {
                    ++count;
                    return stop_at_first;
                }
                for (Vertex image = 0; image < n; ++image) {
                    if ((used >> image) & 1u)
                        continue;
                    if (! consistent(v, image))
                        continue;
                    map[static_cast<std::size_t>(v)] = image;
                    used |= static_cast<std::uint16_t>(1u << image);
                    bool done = extend(v + 1);
                    used &= static_cast<std::uint16_t>(~(1u << image));
                    if (done)
                        return true;
                }
                return false;
            }
        };

        auto degree_profile(const Digraph &d) -> std::vector<std::pair<int, int>>
        {
            std::vector<std::pair<int, int>> p;
            for (int v = 0; v < d.order(); ++v)
                p.emplace_back(d.out_degree(v), d.in_degree(v));
            std::sort(p.begin(), p.end());
            return p;
        }

        void check_iso_size(const Digraph &a, const Digraph &b)
        {
            if (a.order() > max_isomorphism_order || b.order() > max_isomorphism_order)
                throw UnsupportedSize("isomorphism search is limited to order 10");
        }

        auto quick_reject(const Digraph &a, const Digraph &b) -> bool
        {
            return a.order() != b.order() || a.arc_count() != b.arc_count() || degree_profile(a) != degree_profile(b);
        }
    }

    auto find_isomorphism(const Digraph &a, const Digraph &b) -> std::optional<std::vector<Vertex>>
    {
        check_iso_size(a, b);
        if (quick_reject(a, b))
            return std::nullopt;
        IsoSearch s{a, b, a.order(), {}, 0, 0, true};
        if (! s.extend(0))
            return std::nullopt;
        return std::vector<Vertex>(s.map.begin(), s.map.begin() + a.order());
    }

    auto are_isomorphic(const Digraph &a, const Digraph &b) -> bool
    {
        return find_isomorphism(a, b).has_value();
    }

    auto count_isomorphisms(const Digraph &a, const Digraph &b) -> std::uint64_t
    {
        check_iso_size(a, b);
        if (quick_reject(a, b))
            return 0;
        IsoSearch s{a, b, a.order(), {}, 0, 0, false};
        s.extend(0);
        return s.count;
    }

    auto all_labelings(const Digraph &d) -> std::vector<Digraph>
    {
        if (d.order() > max_isomorphism_order)
            throw UnsupportedSize("labeling enumeration is limited to order 10");
        std::vector<Vertex> perm(static_cast<std::size_t>(d.order()));
        std::iota(perm.begin(), perm.end(), 0);
        std::set<Digraph> seen;
        do
            seen.insert(d.relabeled(perm));
        while (std::next_permutation(perm.begin(), perm.end()));
        return {seen.begin(), seen.end()};
    }
}
