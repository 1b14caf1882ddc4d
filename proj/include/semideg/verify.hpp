#pragma once

// Exhaustive and sampled verification runs.
//
// Every run streams the digraphs satisfying a hypothesis, tests the
// conclusion, and sorts each failure of the conclusion into an exceptional
// family or the counterexample list. Exhaustive runs split the arc space by
// the first two adjacency rows; each work item owns a partial report and the
// partials are merged in item order, so the result does not depend on the
// number of workers.

#include <semideg/digraph.hpp>
#include <semideg/families.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace semideg
{
    enum class RunMode
    {
        exhaustive,
        sampled
    };

    inline constexpr std::uint64_t default_seed = 20240601;
    inline constexpr std::size_t default_counterexample_cap = 100;

    class SamplingBudgetExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct VerifyOptions
    {
        int order = 5;
        RunMode mode = RunMode::exhaustive;
        std::uint64_t seed = default_seed;
        std::uint64_t samples = 0;
        /// Uniform draws allowed per accepted sample before giving up.
        std::uint64_t trials_per_sample = 20000;
        int workers = 1;
        std::size_t counterexample_cap = default_counterexample_cap;
        /// Feed converse(D) instead of D into the checks.
        bool converse_stream = false;
        /// Scan the whole arc space and filter, instead of the pruned enumerator.
        bool unpruned = false;
        /// Called after each finished work item with (done, total).
        std::function<void(std::size_t, std::size_t)> progress;
    };

    struct VerificationReport
    {
        std::string theorem;
        int order = 0;
        RunMode mode = RunMode::exhaustive;
        std::optional<std::uint64_t> seed;
        std::optional<std::uint64_t> sample_count;
        std::string rng;
        std::uint64_t trials = 0;

        std::uint64_t total_candidates = 0;
        std::uint64_t conclusion_holds = 0;
        std::map<std::string, std::uint64_t> exceptions;
        std::vector<std::string> counterexamples;
        std::uint64_t counterexample_total = 0;
        std::size_t counterexample_cap = default_counterexample_cap;
        double wall_time_seconds = 0.0;

        /// Run-specific secondary checks.
        nlohmann::json checks = nlohmann::json::object();

        void record_holds() { ++total_candidates, ++conclusion_holds; }
        void record_exception(FamilyTag tag);
        void record_counterexample(const Digraph &d);

        /// Count-summing merge; counterexample lists concatenate and are cut
        /// back to the cap.
        void merge(const VerificationReport &other);

        [[nodiscard]] auto exception_total() const -> std::uint64_t;
        /// total = holds + sum(exceptions) + counterexamples
        [[nodiscard]] auto accounting_holds() const -> bool;
        [[nodiscard]] auto passed() const -> bool { return counterexample_total == 0; }
    };

    auto to_json(const VerificationReport &r) -> nlohmann::json;
    auto format_table(const VerificationReport &r) -> std::string;

    // --- hypothesis streams ----------------------------------------------------

    /// Every labeled digraph on p <= 6 vertices satisfying the degree and
    /// semi-degree hypothesis, via row-by-row generation that cuts a partial
    /// assignment as soon as some in-degree or degree bound fails.
    void for_each_condition_digraph(int order, const std::function<void(const Digraph &)> &visit);

    /// The same stream restricted to digraphs whose first two rows are fixed.
    void for_each_condition_digraph_with_prefix(
        int order, std::uint16_t row0, std::uint16_t row1, const std::function<void(const Digraph &)> &visit);

    /// Counts hypothesis digraphs by a plain scan of all 2^(p(p-1)) arc sets.
    auto count_condition_digraphs_unpruned(int order) -> std::uint64_t;

    /// Derives independent generator seeds for numbered chunks of a run.
    class SplitMix64
    {
    public:
        explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
        auto next() -> std::uint64_t;

    private:
        std::uint64_t state_;
    };

    /// Uniformly random digraph on p vertices: each of the p(p-1) arcs
    /// present independently with probability 1/2.
    auto random_digraph(int order, std::mt19937_64 &rng) -> Digraph;

    /// `count` uniform samples from the hypothesis set, reproducible from
    /// the seed. Throws SamplingBudgetExceeded when the trial budget runs out.
    void for_each_sampled_condition_digraph(int order, std::uint64_t seed, std::uint64_t count,
        std::uint64_t trials_per_sample, const std::function<void(const Digraph &)> &visit);

    /// Identifier embedded in sampled reports.
    auto sampler_name() -> std::string;

    // --- runs ------------------------------------------------------------------

    /// Cycle of length p-1, p >= 5.
    auto verify_theorem1(const VerifyOptions &options) -> VerificationReport;

    /// Hamiltonicity at even p >= 6. An exhaustive run at p <= 8 also
    /// compares the non-hamiltonian hypothesis digraphs against the listed
    /// families (checks.family_cross_check).
    auto verify_theorem2(const VerifyOptions &options) -> VerificationReport;

    /// Cycles of length 3 and 4, p >= 5: {C3 report, C4 report}.
    auto verify_theorem3(const VerifyOptions &options) -> std::pair<VerificationReport, VerificationReport>;

    /// Strong or H(n,n); every large vertex set is entered and left by each
    /// outside vertex.
    auto verify_lemma4(const VerifyOptions &options) -> VerificationReport;

    /// Ghouila-Houri and the Ore-type pancyclicity condition over every
    /// labeled digraph of order p <= 6: {Ghouila-Houri report, Ore report}.
    auto verify_oracles(const VerifyOptions &options) -> std::pair<VerificationReport, VerificationReport>;

    /// Sampled pancyclicity at p >= 10.
    auto sample_pancyclicity(const VerifyOptions &options) -> VerificationReport;

    /// For every x and every B with |B| >= (p+1)/2 and x not in B, both
    /// x -> B and B -> x contain an arc. Checked by listing the subsets.
    auto lemma4_part_ii_holds(const Digraph &d) -> bool;
}
