#pragma once

// Dense labeled digraphs on at most 16 vertices.
//
// Vertex labels are 0..order-1. Every adjacency row is a 16-bit mask;
// out_row(v) bit j is set iff the arc v->j exists, in_row(v) bit j is set
// iff j->v exists. Both directions are stored so that in- and out-degree
// queries are single popcounts.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semideg
{
    using Vertex = int;
    using Arc = std::pair<Vertex, Vertex>;

    class DigraphError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class UnsupportedSize : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    /// A set of vertices of a digraph with at most 16 vertices.
    class VertexSet
    {
    public:
        constexpr VertexSet() = default;
        constexpr explicit VertexSet(std::uint16_t bits) : bits_(bits) {}

        static constexpr auto all(int order) -> VertexSet
        {
            return VertexSet{static_cast<std::uint16_t>((1u << order) - 1u)};
        }

        static auto of(std::initializer_list<Vertex> vs) -> VertexSet
        {
            VertexSet s;
            for (auto v : vs)
                s = s.with(v);
            return s;
        }

        [[nodiscard]] constexpr auto bits() const -> std::uint16_t { return bits_; }
        [[nodiscard]] constexpr auto size() const -> int { return std::popcount(bits_); }
        [[nodiscard]] constexpr auto empty() const -> bool { return bits_ == 0; }
        [[nodiscard]] constexpr auto contains(Vertex v) const -> bool { return (bits_ >> v) & 1u; }
        [[nodiscard]] constexpr auto with(Vertex v) const -> VertexSet
        {
            return VertexSet{static_cast<std::uint16_t>(bits_ | (1u << v))};
        }
        [[nodiscard]] constexpr auto without(Vertex v) const -> VertexSet
        {
            return VertexSet{static_cast<std::uint16_t>(bits_ & ~(1u << v))};
        }
        [[nodiscard]] constexpr auto first() const -> Vertex { return std::countr_zero(bits_); }

        constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet{static_cast<std::uint16_t>(bits_ | o.bits_)}; }
        constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet{static_cast<std::uint16_t>(bits_ & o.bits_)}; }
        constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet{static_cast<std::uint16_t>(bits_ & ~o.bits_)}; }
        constexpr auto operator<=>(const VertexSet &) const = default;

        [[nodiscard]] auto to_vector() const -> std::vector<Vertex>;

        class iterator
        {
        public:
            using value_type = Vertex;
            using difference_type = std::ptrdiff_t;

            constexpr iterator() = default;
            constexpr explicit iterator(std::uint16_t rest) : rest_(rest) {}
            constexpr auto operator*() const -> Vertex { return std::countr_zero(rest_); }
            constexpr auto operator++() -> iterator &
            {
                rest_ &= static_cast<std::uint16_t>(rest_ - 1u);
                return *this;
            }
            constexpr auto operator++(int) -> iterator
            {
                auto old = *this;
                ++*this;
                return old;
            }
            constexpr auto operator==(const iterator &) const -> bool = default;

        private:
            std::uint16_t rest_ = 0;
        };

        [[nodiscard]] constexpr auto begin() const -> iterator { return iterator{bits_}; }
        [[nodiscard]] constexpr auto end() const -> iterator { return iterator{}; }

    private:
        std::uint16_t bits_ = 0;
    };

    class Digraph
    {
    public:
        static constexpr int max_order = 16;

        /// Arcless digraph. Orders 1..16 are representable; build() and decode()
        /// only accept 2..16.
        explicit Digraph(int order);

        /// Checked construction from an arc list. Duplicate arcs collapse.
        static auto build(int order, std::span<const Arc> arcs) -> Digraph;
        static auto build(int order, std::initializer_list<Arc> arcs) -> Digraph
        {
            return build(order, std::span<const Arc>{arcs.begin(), arcs.size()});
        }

        /// Construction from out-neighbour masks; rejects loops and bits >= order.
        static auto from_out_rows(int order, std::span<const std::uint16_t> rows) -> Digraph;

        /// No validation; both row arrays must describe the same arc set.
        static auto from_rows_unchecked(int order, const std::array<std::uint16_t, max_order> &out,
            const std::array<std::uint16_t, max_order> &in) -> Digraph
        {
            Digraph d;
            d.order_ = order;
            d.out_ = out;
            d.in_ = in;
            return d;
        }

        [[nodiscard]] auto order() const -> int { return order_; }
        [[nodiscard]] auto vertices() const -> VertexSet { return VertexSet::all(order_); }

        [[nodiscard]] auto has_arc(Vertex from, Vertex to) const -> bool
        {
            return (out_[static_cast<std::size_t>(from)] >> to) & 1u;
        }
        /// Either direction.
        [[nodiscard]] auto adjacent(Vertex a, Vertex b) const -> bool { return has_arc(a, b) || has_arc(b, a); }

        // Unchecked row access for hot loops.
        [[nodiscard]] auto out_row(Vertex v) const -> std::uint16_t { return out_[static_cast<std::size_t>(v)]; }
        [[nodiscard]] auto in_row(Vertex v) const -> std::uint16_t { return in_[static_cast<std::size_t>(v)]; }

        [[nodiscard]] auto out_neighbours(Vertex v) const -> VertexSet { return VertexSet{out_row(check(v))}; }
        [[nodiscard]] auto in_neighbours(Vertex v) const -> VertexSet { return VertexSet{in_row(check(v))}; }

        [[nodiscard]] auto out_degree(Vertex v) const -> int { return std::popcount(out_row(check(v))); }
        [[nodiscard]] auto in_degree(Vertex v) const -> int { return std::popcount(in_row(check(v))); }
        [[nodiscard]] auto degree(Vertex v) const -> int { return out_degree(v) + in_degree(v); }

        /// d(v,S) = od(v,S) + id(v,S); v itself is ignored when it lies in S.
        [[nodiscard]] auto degree_toward(Vertex v, VertexSet s) const -> int;

        [[nodiscard]] auto arc_count() const -> int;
        /// Arcs in lexicographic order.
        [[nodiscard]] auto arcs() const -> std::vector<Arc>;

        [[nodiscard]] auto converse() const -> Digraph;
        [[nodiscard]] auto with_arc(Vertex from, Vertex to) const -> Digraph;
        [[nodiscard]] auto without_arc(Vertex from, Vertex to) const -> Digraph;

        /// Image under the relabeling v -> perm[v]; perm must be a permutation
        /// of 0..order-1.
        [[nodiscard]] auto relabeled(std::span<const Vertex> perm) const -> Digraph;

        /// True iff for every arc u->v the reverse arc v->u exists.
        [[nodiscard]] auto is_symmetric() const -> bool;

        /// Row-major off-diagonal arc bits, row 0 in the most significant
        /// position. Only defined for order <= 8.
        [[nodiscard]] auto arc_code() const -> std::uint64_t;
        static auto from_arc_code(int order, std::uint64_t code) -> Digraph;

        auto operator==(const Digraph &o) const -> bool { return order_ == o.order_ && out_ == o.out_; }
        auto operator<=>(const Digraph &o) const -> std::strong_ordering
        {
            if (auto c = order_ <=> o.order_; c != 0)
                return c;
            return out_ <=> o.out_;
        }

    private:
        Digraph() = default;

        auto check(Vertex v) const -> Vertex
        {
            if (v < 0 || v >= order_)
                throw DigraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order_));
            return v;
        }

        int order_ = 0;
        std::array<std::uint16_t, max_order> out_{};
        std::array<std::uint16_t, max_order> in_{};
    };

    struct DigraphHash
    {
        auto operator()(const Digraph &d) const noexcept -> std::size_t;
    };

    /// Complete symmetric digraph K*_n.
    auto complete_symmetric(int order) -> Digraph;

    /// Symmetric digraph G* of an undirected graph given by its edges.
    auto symmetric_closure(int order, std::span<const std::pair<Vertex, Vertex>> edges) -> Digraph;

    enum class SeqKind
    {
        path,
        cycle
    };

    /// An ordered list of distinct vertices witnessing a path or cycle.
    struct VertexSeq
    {
        std::vector<Vertex> vertices;
        SeqKind kind = SeqKind::path;

        [[nodiscard]] auto size() const -> int { return static_cast<int>(vertices.size()); }
        [[nodiscard]] auto vertex_set() const -> VertexSet;

        auto operator==(const VertexSeq &) const -> bool = default;
    };

    /// Re-checks a witness arc by arc against the digraph.
    [[nodiscard]] auto is_valid_in(const VertexSeq &seq, const Digraph &d) -> bool;

    struct InducedSubdigraph
    {
        Digraph digraph;
        /// original[new label] = old label
        std::vector<Vertex> original;
    };

    auto induced(const Digraph &d, VertexSet s) -> InducedSubdigraph;

    /// Strong components in the condensation's topological order: no vertex
    /// of component i dominates a vertex of component j whenever i > j.
    /// Components list their vertices in increasing order.
    auto strong_components(const Digraph &d) -> std::vector<VertexSet>;

    auto is_strong(const Digraph &d) -> bool;

    /// Vertices reachable from v by directed paths (including v).
    auto reachable_from(const Digraph &d, Vertex v) -> VertexSet;

    // Isomorphism by permutation search with (out-degree, in-degree) pruning.
    // All three throw UnsupportedSize beyond order 10.
    inline constexpr int max_isomorphism_order = 10;

    /// map[v] is the image in b of vertex v of a.
    auto find_isomorphism(const Digraph &a, const Digraph &b) -> std::optional<std::vector<Vertex>>;
    auto are_isomorphic(const Digraph &a, const Digraph &b) -> bool;
    auto count_isomorphisms(const Digraph &a, const Digraph &b) -> std::uint64_t;
    inline auto automorphism_count(const Digraph &d) -> std::uint64_t { return count_isomorphisms(d, d); }

    /// Every labeling of d, deduplicated, sorted.
    auto all_labelings(const Digraph &d) -> std::vector<Digraph>;
}
