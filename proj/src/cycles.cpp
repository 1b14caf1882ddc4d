#include <semideg/cycles.hpp>

#include <algorithm>
#include <array>

namespace semideg
{
    namespace
    {
        // Looks for a path anchor=v0, v1, ..., v_{k-1} with v_{k-1} -> anchor,
        // all v_i in `avail` for i >= 1.
        struct CycleSearch
        {
            const Digraph &d;
            Vertex anchor;
            std::array<Vertex, Digraph::max_order> path{};

            // `remaining` counts vertices still to place after `v`.
            auto extend(Vertex v, std::uint16_t avail, int depth, int remaining) -> bool
            {
                path[static_cast<std::size_t>(depth)] = v;
                if (remaining == 0)
                    return (d.out_row(v) >> anchor) & 1u;
                std::uint16_t next = d.out_row(v) & avail;
                if (remaining == 1)
                    next &= d.in_row(anchor);
                if (std::popcount(avail) < remaining)
                    return false;
                while (next) {
                    Vertex u = std::countr_zero(next);
                    next &= static_cast<std::uint16_t>(next - 1u);
                    if (extend(u, static_cast<std::uint16_t>(avail & ~(1u << u)), depth + 1, remaining - 1))
                        return true;
                }
                return false;
            }
        };

        auto search(const Digraph &d, int k, std::uint16_t allowed, VertexSeq *witness) -> bool
        {
            std::uint16_t anchors = allowed;
            while (anchors) {
                Vertex s = std::countr_zero(anchors);
                anchors &= static_cast<std::uint16_t>(anchors - 1u);
                // Remaining candidates are the allowed vertices above s.
                std::uint16_t avail = static_cast<std::uint16_t>(allowed & ~((2u << s) - 1u));
                if (std::popcount(avail) < k - 1)
                    break;
                CycleSearch cs{d, s};
                if (cs.extend(s, avail, 0, k - 1)) {
                    if (witness) {
                        witness->kind = SeqKind::cycle;
                        witness->vertices.assign(cs.path.begin(), cs.path.begin() + k);
                    }
                    return true;
                }
            }
            return false;
        }

        void check_length(const Digraph &d, int k)
        {
            if (k < 2 || k > d.order())
                throw PreconditionError("cycle length " + std::to_string(k) + " outside [2, " + std::to_string(d.order()) + "]");
        }

        void check_path(const Digraph &d, const VertexSeq &path, Vertex x)
        {
            if (path.kind != SeqKind::path || path.size() < 2 || ! is_valid_in(path, d))
                throw PreconditionError("not a path of at least two vertices");
            if (x < 0 || x >= d.order())
                throw PreconditionError("vertex " + std::to_string(x) + " out of range");
            if (path.vertex_set().contains(x))
                throw PreconditionError("vertex " + std::to_string(x) + " lies on the path");
        }
    }

    auto CycleSpectrum::to_vector() const -> std::vector<int>
    {
        std::vector<int> result;
        for (int k = 0; k < 32; ++k)
            if (contains(k))
                result.push_back(k);
        return result;
    }

    auto find_cycle(const Digraph &d, int k) -> std::optional<VertexSeq>
    {
        check_length(d, k);
        VertexSeq w;
        if (search(d, k, d.vertices().bits(), &w))
            return w;
        return std::nullopt;
    }

    auto has_cycle(const Digraph &d, int k) -> bool
    {
        check_length(d, k);
        return search(d, k, d.vertices().bits(), nullptr);
    }

    namespace
    {
        auto hamiltonian_filters_pass(const Digraph &d) -> bool
        {
            for (int v = 0; v < d.order(); ++v)
                if (d.out_row(v) == 0 || d.in_row(v) == 0)
                    return false;
            return is_strong(d);
        }
    }

    auto hamiltonian_cycle(const Digraph &d) -> std::optional<VertexSeq>
    {
        if (d.order() < 2 || ! hamiltonian_filters_pass(d))
            return std::nullopt;
        return find_cycle(d, d.order());
    }

    auto is_hamiltonian(const Digraph &d) -> bool
    {
        if (d.order() < 2 || ! hamiltonian_filters_pass(d))
            return false;
        return search(d, d.order(), d.vertices().bits(), nullptr);
    }

    auto cycle_spectrum(const Digraph &d) -> CycleSpectrum
    {
        CycleSpectrum s;
        for (int k = 2; k <= d.order(); ++k)
            if (search(d, k, d.vertices().bits(), nullptr))
                s.lengths |= 1u << k;
        return s;
    }

    auto is_pancyclic(const Digraph &d, PancyclicConvention convention) -> bool
    {
        int low = convention == PancyclicConvention::from_two ? 2 : 3;
        for (int k = low; k <= d.order(); ++k)
            if (! search(d, k, d.vertices().bits(), nullptr))
                return false;
        return true;
    }

    auto longest_cycle(const Digraph &d) -> std::optional<VertexSeq>
    {
        for (int k = d.order(); k >= 2; --k) {
            VertexSeq w;
            if (search(d, k, d.vertices().bits(), &w))
                return w;
        }
        return std::nullopt;
    }

    namespace
    {
        struct PathSearch
        {
            const Digraph &d;
            Vertex target;
            std::array<Vertex, Digraph::max_order> path{};
            std::array<Vertex, Digraph::max_order> best{};
            int best_len = 0;

            void extend(Vertex v, std::uint16_t avail, int len)
            {
                path[static_cast<std::size_t>(len - 1)] = v;
                if (v == target) {
                    if (len > best_len) {
                        best_len = len;
                        best = path;
                    }
                    return;
                }
                // Even visiting every available vertex cannot beat the record.
                if (len + std::popcount(avail) <= best_len)
                    return;
                std::uint16_t next = d.out_row(v) & avail;
                while (next) {
                    Vertex u = std::countr_zero(next);
                    next &= static_cast<std::uint16_t>(next - 1u);
                    extend(u, static_cast<std::uint16_t>(avail & ~(1u << u)), len + 1);
                }
            }
        };
    }

    auto longest_path(const Digraph &d, Vertex from, Vertex to, VertexSet within) -> std::optional<VertexSeq>
    {
        if (from == to || ! within.contains(from) || ! within.contains(to))
            throw PreconditionError("longest_path needs distinct endpoints inside the vertex set");
        PathSearch s{d, to};
        s.extend(from, within.without(from).bits() & d.vertices().bits(), 1);
        if (s.best_len == 0)
            return std::nullopt;
        return VertexSeq{{s.best.begin(), s.best.begin() + s.best_len}, SeqKind::path};
    }

    auto insert_vertex(const Digraph &d, const VertexSeq &path, Vertex x) -> std::optional<int>
    {
        check_path(d, path, x);
        const auto &v = path.vertices;
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (d.has_arc(v[i], x) && d.has_arc(x, v[i + 1]))
                return static_cast<int>(i) + 1;
        return std::nullopt;
    }

    auto insertion_conditions(const Digraph &d, const VertexSeq &path, Vertex x) -> InsertionConditions
    {
        check_path(d, path, x);
        const int m = path.size();
        const int deg = d.degree_toward(x, path.vertex_set());
        const bool x_to_first = d.has_arc(x, path.vertices.front());
        const bool last_to_x = d.has_arc(path.vertices.back(), x);
        return {
            .case_i = deg >= m + 2,
            .case_ii = deg >= m + 1 && (! x_to_first || ! last_to_x),
            .case_iii = deg >= m && ! x_to_first && ! last_to_x,
        };
    }

    auto expand_cycle(const Digraph &d, const VertexSeq &cycle, Vertex x) -> std::map<int, VertexSeq>
    {
        if (cycle.kind != SeqKind::cycle || ! is_valid_in(cycle, d))
            throw PreconditionError("not a cycle of the digraph");
        if (x < 0 || x >= d.order() || cycle.vertex_set().contains(x))
            throw PreconditionError("vertex must be off the cycle");
        const int m = cycle.size();
        const int deg = d.degree_toward(x, cycle.vertex_set());
        if (deg < m + 1)
            throw PreconditionError("d(x, C) = " + std::to_string(deg) + " but at least " + std::to_string(m + 1) + " is required");

        const auto allowed = cycle.vertex_set().with(x).bits();
        std::map<int, VertexSeq> result;
        for (int k = 2; k <= m + 1; ++k) {
            VertexSeq w;
            if (! search(d, k, allowed, &w))
                throw GuaranteeViolation("no cycle of length " + std::to_string(k) + " in <V(C) + x>");
            result.emplace(k, std::move(w));
        }
        return result;
    }

    auto neighbourhood_profile(const Digraph &d, const VertexSeq &path, Vertex x) -> std::optional<int>
    {
        if (path.vertex_set().contains(x))
            throw PreconditionError("vertex " + std::to_string(x) + " lies on the path");
        const auto &v = path.vertices;
        const int m = path.size();
        int l = 0;
        while (l < m && d.has_arc(x, v[static_cast<std::size_t>(l)]))
            ++l;
        if (l == 0)
            return std::nullopt;
        for (int i = l; i < m; ++i)
            if (d.has_arc(x, v[static_cast<std::size_t>(i)]))
                return std::nullopt;
        // In-neighbours must be exactly x_l..x_m (1-based).
        for (int i = 0; i < m; ++i)
            if (d.has_arc(v[static_cast<std::size_t>(i)], x) != (i >= l - 1))
                return std::nullopt;
        return l;
    }
}
