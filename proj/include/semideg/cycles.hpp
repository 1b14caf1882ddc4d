#pragma once

// Exact cycle and path search, plus the vertex insertion / cycle expansion /
// neighbourhood-shape operations used when reasoning about longest cycles.
//
// All searches are exhaustive backtracking over bitmasks. A cycle is
// anchored at its smallest vertex, so each cycle is explored from exactly
// one starting point.

#include <semideg/digraph.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace semideg
{
    /// The caller broke an operation's documented precondition.
    class PreconditionError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// A search failed where a proven guarantee says it must succeed.
    class GuaranteeViolation : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    /// A cycle on exactly k vertices, or nullopt. Throws PreconditionError
    /// unless 2 <= k <= order.
    auto find_cycle(const Digraph &d, int k) -> std::optional<VertexSeq>;

    /// Same decision as find_cycle without building a witness.
    auto has_cycle(const Digraph &d, int k) -> bool;

    /// Hamiltonian cycle witness. Returns nullopt at once for digraphs that
    /// are not strong.
    auto hamiltonian_cycle(const Digraph &d) -> std::optional<VertexSeq>;
    auto is_hamiltonian(const Digraph &d) -> bool;

    /// Bit k set iff the digraph has a cycle of length k (2 <= k <= order).
    struct CycleSpectrum
    {
        std::uint32_t lengths = 0;

        [[nodiscard]] auto contains(int k) const -> bool { return (lengths >> k) & 1u; }
        [[nodiscard]] auto to_vector() const -> std::vector<int>;
        auto operator==(const CycleSpectrum &) const -> bool = default;
    };

    auto cycle_spectrum(const Digraph &d) -> CycleSpectrum;

    enum class PancyclicConvention
    {
        from_three, ///< cycles of every length 3..p
        from_two    ///< cycles of every length 2..p
    };

    auto is_pancyclic(const Digraph &d, PancyclicConvention convention = PancyclicConvention::from_three) -> bool;

    /// Maximum-length cycle, nullopt for acyclic digraphs.
    auto longest_cycle(const Digraph &d) -> std::optional<VertexSeq>;

    /// Longest path from `from` to `to` (from != to) using only vertices of
    /// `within`; nullopt when `to` is unreachable.
    auto longest_path(const Digraph &d, Vertex from, Vertex to, VertexSet within) -> std::optional<VertexSeq>;

    /// Smallest 1-based i in [1, m-1] with x_i -> x and x -> x_{i+1}, or
    /// nullopt. Throws PreconditionError when p is not a path of at least
    /// two vertices in d or x lies on it.
    auto insert_vertex(const Digraph &d, const VertexSeq &path, Vertex x) -> std::optional<int>;

    /// Which of the sufficient conditions for insertability hold, with
    /// m = |P| and d = d(x, V(P)):
    ///   (i)   d >= m+2
    ///   (ii)  d >= m+1 and (x -> x_1 absent or x_m -> x absent)
    ///   (iii) d >= m   and  x -> x_1 absent and x_m -> x absent
    struct InsertionConditions
    {
        bool case_i = false;
        bool case_ii = false;
        bool case_iii = false;

        [[nodiscard]] auto any() const -> bool { return case_i || case_ii || case_iii; }
    };

    auto insertion_conditions(const Digraph &d, const VertexSeq &path, Vertex x) -> InsertionConditions;

    /// Given a cycle C of length m and a vertex x off C with d(x, V(C)) >=
    /// m+1, a cycle of every length k in [2, m+1] inside <V(C) + x>.
    /// Throws PreconditionError if the hypothesis fails, GuaranteeViolation
    /// if some length cannot be found.
    auto expand_cycle(const Digraph &d, const VertexSeq &cycle, Vertex x) -> std::map<int, VertexSeq>;

    /// The 1-based l in [1, m] with O(x, V(P)) = {x_1..x_l} and
    /// I(x, V(P)) = {x_l..x_m}, or nullopt when the neighbourhoods are not a
    /// prefix and a suffix overlapping in exactly x_l.
    auto neighbourhood_profile(const Digraph &d, const VertexSeq &path, Vertex x) -> std::optional<int>;
}
