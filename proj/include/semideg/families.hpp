#pragma once

// The exceptional digraphs that escape the cycle and hamiltonicity results:
// generators with fixed labelings, structural or isomorphism recognizers,
// and labeled enumeration.
//
// Generator labelings:
//   H(n,n)          A = 0..n-1, B = n..2n-1
//   H(n,n-1,1)      A = 0..n-1 (independent), B = n..2n-2, a = 2n-1
//   H(2n), H'(2n)   A = 0..n-2, B = n-1..2n-3, x = 2n-2, y = 2n-1
//   D6, D6'         x1..x5 = 0..4, x = 5
//   C*(5)           pentagon 0-1-2-3-4-0
//   C*6(1)          x1..x6 = 0..5
//   H'6, H''6       x, y, z, u, v, w = 0..5
//   [(Kn u Kn)+K1]* blocks 0..n-1 and n..2n-1, centre 2n
//   K*_{n,m}        sides 0..n-1 and n..n+m-1

#include <semideg/digraph.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semideg
{
    enum class FamilyTag
    {
        hnn,             ///< H(n,n)
        hn_n1_1,         ///< H(n,n-1,1)
        h2n,             ///< H(2n)
        h2n_prime,       ///< H'(2n)
        d6,
        d6_prime,
        d6_conv,
        d6_prime_conv,
        c5_star,         ///< C*(5)
        join_kn_kn_k1,   ///< [(Kn u Kn)+K1]*
        sub_knn,         ///< spanning subdigraph of K*_{n,n}
        knn1_star,       ///< exactly K*_{n,n+1}
        knn_star,        ///< exactly K*_{n,n}
        knn1_sandwich,   ///< K*_{n,n+1} <= D <= (Kn + complement of K_{n+1})*
        c6_star_1,       ///< C*6(1)
        h6_prime,        ///< H'6
        h6_double_prime, ///< H''6
        none
    };

    /// Upper-case identifier used in reports ("HNN", "D6_CONV", ...).
    auto tag_name(FamilyTag tag) -> std::string_view;
    auto tag_from_name(std::string_view name) -> std::optional<FamilyTag>;
    auto all_family_tags() -> std::span<const FamilyTag>;

    /// The tag of the converse family (D6 <-> D6_CONV, ...); the tag itself
    /// for families closed under converse.
    auto converse_tag(FamilyTag tag) -> FamilyTag;

    /// Structural evidence for a classification.
    ///
    /// `parts` per tag:
    ///   HNN, SUB_KNN, KNN_STAR      {A, B}
    ///   HN_N1_1                     {A, B, {a}}
    ///   H2N, H2N_PRIME              {A, B, {x}, {y}}
    ///   JOIN_KN_KN_K1               {A, B, {centre}}
    ///   KNN1_STAR, KNN1_SANDWICH    {side of size n, side of size n+1}
    /// Sporadic digraphs carry `isomorphism` instead: generator vertex v is
    /// mapped to isomorphism[v].
    struct FamilyWitness
    {
        std::vector<VertexSet> parts;
        std::vector<Vertex> isomorphism;

        auto operator==(const FamilyWitness &) const -> bool = default;
    };

    struct FamilyLabel
    {
        FamilyTag tag = FamilyTag::none;
        FamilyWitness witness;
    };

    enum class HnOrientation
    {
        in,  ///< I(a) = B and a -> A
        out  ///< O(a) = B and A -> a
    };

    /// H(n,n) member: K*_n on each part, the given A->B arcs, nothing B->A.
    /// Throws DigraphError unless every a has a cross arc and every b is hit.
    auto gen_hnn(int n, std::span<const Arc> cross_arcs) -> Digraph;

    /// Arcs that a H(n,n-1,1) member may include or omit.
    auto hn_n1_1_free_arcs(int n, HnOrientation orientation) -> std::vector<Arc>;

    /// H(n,n-1,1) member with the chosen subset of the free arcs. Throws
    /// DigraphError for arcs that are not free.
    auto gen_hn_n1_1(int n, HnOrientation orientation, std::span<const Arc> chosen) -> Digraph;

    auto gen_h2n(int n, bool primed) -> Digraph;
    auto gen_d6(bool primed) -> Digraph;
    auto gen_c5_star() -> Digraph;
    auto gen_join_knknk1(int n) -> Digraph;
    auto gen_knn_star(int n, int m) -> Digraph;
    auto gen_c6_star_1() -> Digraph;
    auto gen_h6_prime() -> Digraph;
    auto gen_h6_double_prime() -> Digraph;

    /// Spanning subdigraph of K*_{n,n} with sides 0..n-1, n..2n-1; every arc
    /// must cross.
    auto gen_sub_knn(int n, std::span<const Arc> arcs) -> Digraph;

    /// The fixed digraph behind a tag at order p, for tags that have exactly
    /// one member up to isomorphism at that order.
    auto canonical_member(FamilyTag tag, int order) -> std::optional<Digraph>;

    /// Witness search for a single family; nullopt if d is not a member.
    auto recognize(FamilyTag tag, const Digraph &d) -> std::optional<FamilyWitness>;

    /// Re-checks a witness against the family's defining constraints.
    auto validate_witness(const Digraph &d, const FamilyLabel &label) -> bool;

    enum class ClassifyContext
    {
        theorem1,    ///< no cycle of length p-1
        theorem2,    ///< not hamiltonian, p even
        theorem3_c3, ///< no cycle of length 3
        theorem3_c4, ///< no cycle of length 4
        pancyclic,   ///< not pancyclic, p >= 10
        ore          ///< not pancyclic under the Ore-type condition
    };

    auto context_name(ClassifyContext c) -> std::string_view;
    auto context_from_name(std::string_view name) -> std::optional<ClassifyContext>;

    /// Families admissible in the context at order p, in the order classify
    /// tries them: sporadic digraphs first, then parameterized families.
    auto admissible_tags(ClassifyContext context, int order) -> std::vector<FamilyTag>;

    /// First admissible family containing d, or tag none. Throws
    /// UnsupportedSize beyond order 10.
    auto classify(const Digraph &d, ClassifyContext context) -> FamilyLabel;

    /// Every labeled member at order p (p <= 8), deduplicated and sorted;
    /// empty when the family has no member of that order. Throws
    /// UnsupportedSize beyond order 8, and for SUB_KNN beyond order 4.
    auto enumerate_family(FamilyTag tag, int order) -> std::vector<Digraph>;

    /// Kebab-case family names accepted on the command line.
    auto cli_family_names() -> std::span<const std::string_view>;
}
