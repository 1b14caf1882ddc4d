#include <semideg/verify.hpp>

#include <semideg/conditions.hpp>
#include <semideg/cycles.hpp>
#include <semideg/serialize.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace semideg
{
    // --- report ----------------------------------------------------------------

    namespace
    {
        // Sums unsigned counters, recursing into objects; other values keep
        // the first one seen.
        void merge_checks(nlohmann::json &into, const nlohmann::json &from)
        {
            for (const auto &[key, value] : from.items()) {
                if (! into.contains(key))
                    into[key] = value;
                else if (value.is_number_unsigned() && into[key].is_number_unsigned())
                    into[key] = into[key].get<std::uint64_t>() + value.get<std::uint64_t>();
                else if (value.is_object() && into[key].is_object())
                    merge_checks(into[key], value);
            }
        }

        void bump(nlohmann::json &counter)
        {
            counter = counter.is_number_unsigned() ? counter.get<std::uint64_t>() + 1 : std::uint64_t{1};
        }
    }

    void VerificationReport::record_exception(FamilyTag tag)
    {
        ++total_candidates;
        ++exceptions[std::string(tag_name(tag))];
    }

    void VerificationReport::record_counterexample(const Digraph &d)
    {
        ++total_candidates;
        ++counterexample_total;
        if (counterexamples.size() < counterexample_cap)
            counterexamples.push_back(encode(d));
    }

    void VerificationReport::merge(const VerificationReport &other)
    {
        total_candidates += other.total_candidates;
        conclusion_holds += other.conclusion_holds;
        trials += other.trials;
        for (const auto &[tag, n] : other.exceptions)
            exceptions[tag] += n;
        counterexample_total += other.counterexample_total;
        for (const auto &c : other.counterexamples)
            if (counterexamples.size() < counterexample_cap)
                counterexamples.push_back(c);
        merge_checks(checks, other.checks);
    }

    auto VerificationReport::exception_total() const -> std::uint64_t
    {
        std::uint64_t n = 0;
        for (const auto &[tag, count] : exceptions)
            n += count;
        return n;
    }

    auto VerificationReport::accounting_holds() const -> bool
    {
        return total_candidates == conclusion_holds + exception_total() + counterexample_total &&
            counterexamples.size() == std::min<std::uint64_t>(counterexample_total, counterexample_cap);
    }

    auto to_json(const VerificationReport &r) -> nlohmann::json
    {
        nlohmann::json j{
            {"theorem", r.theorem},
            {"order", r.order},
            {"mode", r.mode == RunMode::exhaustive ? "exhaustive" : "sampled"},
            {"total_candidates", r.total_candidates},
            {"conclusion_holds", r.conclusion_holds},
            {"exceptions", r.exceptions},
            {"counterexamples", r.counterexamples},
            {"counterexample_total", r.counterexample_total},
            {"counterexample_cap", r.counterexample_cap},
            {"wall_time", r.wall_time_seconds},
            {"checks", r.checks},
        };
        if (r.mode == RunMode::sampled) {
            j["seed"] = r.seed.value_or(0);
            j["sample_count"] = r.sample_count.value_or(0);
            j["rng"] = r.rng;
            j["trials"] = r.trials;
        }
        return j;
    }

    auto format_table(const VerificationReport &r) -> std::string
    {
        std::ostringstream s;
        s << r.theorem << "  p=" << r.order << "  " << (r.mode == RunMode::exhaustive ? "exhaustive" : "sampled");
        if (r.mode == RunMode::sampled)
            s << " (seed " << r.seed.value_or(0) << ", " << r.sample_count.value_or(0) << " samples, " << r.rng << ")";
        s << "\n";
        auto row = [&](std::string_view label, std::uint64_t value) {
            s << "  " << std::left << std::setw(24) << label << std::right << std::setw(14) << value << "\n";
        };
        row("candidates", r.total_candidates);
        row("conclusion holds", r.conclusion_holds);
        for (const auto &[tag, n] : r.exceptions)
            row("exception " + tag, n);
        row("counterexamples", r.counterexample_total);
        for (const auto &c : r.counterexamples)
            s << "    " << c << "\n";
        if (! r.checks.empty())
            s << "  checks " << r.checks.dump() << "\n";
        s << "  " << std::left << std::setw(24) << "wall time (s)" << std::right << std::setw(14) << std::fixed
          << std::setprecision(2) << r.wall_time_seconds << "\n";
        return s.str();
    }

    // --- streams ---------------------------------------------------------------

    namespace
    {
        using Rows = std::array<std::uint16_t, Digraph::max_order>;

        /// Row-by-row generator of the hypothesis set.
        class RowEnumerator
        {
        public:
            RowEnumerator(int order, const std::function<void(const Digraph &)> &visit) :
                p_(order), t_(semi_threshold(order)), visit_(visit)
            {
                for (int r = 0; r < p_; ++r)
                    for (std::uint32_t m = 0; m < (1u << p_); ++m)
                        if (! ((m >> r) & 1u) && std::popcount(m) >= t_)
                            candidates_[static_cast<std::size_t>(r)].push_back(static_cast<std::uint16_t>(m));
            }

            [[nodiscard]] auto candidates(int row) const -> const std::vector<std::uint16_t> &
            {
                return candidates_[static_cast<std::size_t>(row)];
            }

            /// Places `mask` as row r; false if the partial assignment is already
            /// infeasible (the row is then not placed).
            auto place(int r, std::uint16_t mask) -> bool
            {
                const auto ri = static_cast<std::size_t>(r);
                // Row r's in-degree can still grow by one per later row.
                if (std::popcount(mask) + std::popcount(in_[ri]) + (p_ - 1 - r) < p_ - 1)
                    return false;
                out_[ri] = mask;
                for (std::uint16_t m = mask; m; m &= static_cast<std::uint16_t>(m - 1u))
                    in_[static_cast<std::size_t>(std::countr_zero(m))] |= static_cast<std::uint16_t>(1u << r);
                const int later = p_ - 1 - r;
                for (int j = 0; j < p_; ++j) {
                    const auto ji = static_cast<std::size_t>(j);
                    int bound = std::popcount(in_[ji]) + later - (j > r ? 1 : 0);
                    if (bound < t_ || (j <= r && std::popcount(out_[ji]) + bound < p_ - 1)) {
                        unplace(r);
                        return false;
                    }
                }
                return true;
            }

            void unplace(int r)
            {
                const auto ri = static_cast<std::size_t>(r);
                for (std::uint16_t m = out_[ri]; m; m &= static_cast<std::uint16_t>(m - 1u))
                    in_[static_cast<std::size_t>(std::countr_zero(m))] &= static_cast<std::uint16_t>(~(1u << r));
                out_[ri] = 0;
            }

            void rows_from(int r)
            {
                if (r == p_) {
                    visit_(Digraph::from_rows_unchecked(p_, out_, in_));
                    return;
                }
                for (auto mask : candidates_[static_cast<std::size_t>(r)])
                    if (place(r, mask)) {
                        rows_from(r + 1);
                        unplace(r);
                    }
            }

        private:
            int p_;
            int t_;
            const std::function<void(const Digraph &)> &visit_;
            std::array<std::vector<std::uint16_t>, Digraph::max_order> candidates_;
            Rows out_{};
            Rows in_{};
        };

        void check_exhaustive_order(int order)
        {
            if (order < 3 || order > 6)
                throw PreconditionError("exhaustive enumeration needs 3 <= p <= 6, got " + std::to_string(order));
        }

        // Builds the digraph for `rest` (the arc bits below the first two rows).
        auto with_prefix(int p, std::uint16_t row0, std::uint16_t row1, std::uint64_t rest) -> Digraph
        {
            Rows out{}, in{};
            out[0] = row0;
            out[1] = row1;
            int bit = (p - 2) * (p - 1);
            for (int i = 2; i < p; ++i)
                for (int j = 0; j < p; ++j)
                    if (i != j && ((rest >> --bit) & 1u))
                        out[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1u << j);
            for (int i = 0; i < p; ++i)
                for (std::uint16_t m = out[static_cast<std::size_t>(i)]; m; m &= static_cast<std::uint16_t>(m - 1u))
                    in[static_cast<std::size_t>(std::countr_zero(m))] |= static_cast<std::uint16_t>(1u << i);
            return Digraph::from_rows_unchecked(p, out, in);
        }

        auto all_rows(int p, int r) -> std::vector<std::uint16_t>
        {
            std::vector<std::uint16_t> rows;
            for (std::uint32_t m = 0; m < (1u << p); ++m)
                if (! ((m >> r) & 1u))
                    rows.push_back(static_cast<std::uint16_t>(m));
            return rows;
        }
    }

    void for_each_condition_digraph(int order, const std::function<void(const Digraph &)> &visit)
    {
        check_exhaustive_order(order);
        RowEnumerator e(order, visit);
        e.rows_from(0);
    }

    void for_each_condition_digraph_with_prefix(
        int order, std::uint16_t row0, std::uint16_t row1, const std::function<void(const Digraph &)> &visit)
    {
        check_exhaustive_order(order);
        RowEnumerator e(order, visit);
        const auto &c0 = e.candidates(0);
        const auto &c1 = e.candidates(1);
        if (std::find(c0.begin(), c0.end(), row0) == c0.end() || std::find(c1.begin(), c1.end(), row1) == c1.end())
            return;
        if (! e.place(0, row0))
            return;
        if (! e.place(1, row1))
            return;
        e.rows_from(2);
    }

    auto count_condition_digraphs_unpruned(int order) -> std::uint64_t
    {
        check_exhaustive_order(order);
        std::uint64_t n = 0;
        const std::uint64_t total = std::uint64_t{1} << (order * (order - 1));
        for (std::uint64_t code = 0; code < total; ++code)
            if (satisfies_ds(Digraph::from_arc_code(order, code)))
                ++n;
        return n;
    }

    auto SplitMix64::next() -> std::uint64_t
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    auto random_digraph(int order, std::mt19937_64 &rng) -> Digraph
    {
        Rows out{}, in{};
        std::uint64_t bits = rng();
        int left = 64;
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) {
                if (i == j)
                    continue;
                if (left == 0) {
                    bits = rng();
                    left = 64;
                }
                if (bits & 1u) {
                    out[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1u << j);
                    in[static_cast<std::size_t>(j)] |= static_cast<std::uint16_t>(1u << i);
                }
                bits >>= 1;
                --left;
            }
        return Digraph::from_rows_unchecked(order, out, in);
    }

    namespace
    {
        constexpr std::uint64_t sample_chunk = 4096;

        auto chunk_generator(std::uint64_t seed, std::uint64_t chunk) -> std::mt19937_64
        {
            SplitMix64 s(seed ^ (chunk * 0xd1b54a32d192ed03ull));
            return std::mt19937_64{s.next()};
        }

        // Draws `count` hypothesis digraphs for one chunk; returns the number of
        // uniform draws used.
        auto sample_chunk_digraphs(int order, std::uint64_t seed, std::uint64_t chunk, std::uint64_t count,
            std::uint64_t trials_per_sample, const std::function<void(const Digraph &)> &visit) -> std::uint64_t
        {
            auto rng = chunk_generator(seed, chunk);
            const std::uint64_t budget = trials_per_sample * count;
            std::uint64_t trials = 0, accepted = 0;
            while (accepted < count) {
                if (trials++ >= budget)
                    throw SamplingBudgetExceeded("sampling at p=" + std::to_string(order) + " exhausted " +
                        std::to_string(budget) + " trials in chunk " + std::to_string(chunk));
                auto d = random_digraph(order, rng);
                if (satisfies_ds(d)) {
                    ++accepted;
                    visit(d);
                }
            }
            return trials;
        }

        void check_sample_order(int order)
        {
            if (order < 3 || order > 12)
                throw PreconditionError("sampled mode needs 3 <= p <= 12, got " + std::to_string(order));
        }
    }

    void for_each_sampled_condition_digraph(int order, std::uint64_t seed, std::uint64_t count,
        std::uint64_t trials_per_sample, const std::function<void(const Digraph &)> &visit)
    {
        check_sample_order(order);
        for (std::uint64_t chunk = 0; chunk * sample_chunk < count; ++chunk)
            sample_chunk_digraphs(order, seed, chunk, std::min(sample_chunk, count - chunk * sample_chunk),
                trials_per_sample, visit);
    }

    auto sampler_name() -> std::string
    {
        return "mt19937_64 seeded per " + std::to_string(sample_chunk) + "-sample chunk by splitmix64";
    }

    // --- run driver ------------------------------------------------------------

    namespace
    {
        struct ItemState
        {
            std::vector<VerificationReport> reports;
            std::vector<std::uint64_t> codes;
        };

        using Checker = std::function<void(const Digraph &, ItemState &)>;

        enum class Stream
        {
            hypothesis,
            all_digraphs
        };

        // Runs `count` independent work items on a pool and merges their states
        // in item order.
        auto run_items(std::size_t count, const VerifyOptions &options, const ItemState &blank,
            const std::function<void(std::size_t, ItemState &)> &work) -> ItemState
        {
            std::vector<ItemState> states(count, blank);
            std::atomic<std::size_t> next{0}, done{0};
            std::exception_ptr failure;
            std::mutex failure_mutex, progress_mutex;

            auto worker = [&] {
                while (true) {
                    auto i = next.fetch_add(1);
                    if (i >= count)
                        return;
                    try {
                        work(i, states[i]);
                    }
                    catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (! failure)
                            failure = std::current_exception();
                        next = count;
                        return;
                    }
                    auto finished = ++done;
                    if (options.progress) {
                        std::lock_guard lock(progress_mutex);
                        options.progress(finished, count);
                    }
                }
            };

            const int workers = std::max(1, options.workers);
            if (workers == 1)
                worker();
            else {
                std::vector<std::jthread> pool;
                for (int w = 0; w < workers; ++w)
                    pool.emplace_back(worker);
            }
            if (failure)
                std::rethrow_exception(failure);

            ItemState merged = blank;
            for (auto &s : states) {
                for (std::size_t r = 0; r < merged.reports.size(); ++r)
                    merged.reports[r].merge(s.reports[r]);
                merged.codes.insert(merged.codes.end(), s.codes.begin(), s.codes.end());
            }
            return merged;
        }

        auto blank_report(std::string theorem, const VerifyOptions &options) -> VerificationReport
        {
            VerificationReport r;
            r.theorem = std::move(theorem);
            r.order = options.order;
            r.mode = options.mode;
            r.counterexample_cap = options.counterexample_cap;
            if (options.mode == RunMode::sampled) {
                r.seed = options.seed;
                r.sample_count = options.samples;
                r.rng = sampler_name();
            }
            return r;
        }

        auto run(const VerifyOptions &options, Stream stream, std::vector<VerificationReport> blanks,
            const Checker &check) -> ItemState
        {
            const auto start = std::chrono::steady_clock::now();
            const int p = options.order;
            ItemState blank{std::move(blanks), {}};

            auto feed = [&](ItemState &state) {
                return [&](const Digraph &d) {
                    if (options.converse_stream)
                        check(d.converse(), state);
                    else
                        check(d, state);
                };
            };

            ItemState merged;
            if (options.mode == RunMode::sampled) {
                if (stream != Stream::hypothesis)
                    throw PreconditionError("this run has no sampled mode");
                check_sample_order(p);
                if (options.samples == 0)
                    throw PreconditionError("sampled mode needs a positive sample count");
                const std::size_t chunks = static_cast<std::size_t>((options.samples + sample_chunk - 1) / sample_chunk);
                merged = run_items(chunks, options, blank, [&](std::size_t c, ItemState &state) {
                    auto n = std::min<std::uint64_t>(sample_chunk, options.samples - c * sample_chunk);
                    auto trials = sample_chunk_digraphs(p, options.seed, c, n, options.trials_per_sample, feed(state));
                    for (auto &r : state.reports)
                        r.trials += trials;
                });
            }
            else {
                check_exhaustive_order(p);
                const bool filtered_scan = stream == Stream::all_digraphs || options.unpruned;
                std::vector<std::pair<std::uint16_t, std::uint16_t>> items;
                if (filtered_scan) {
                    for (auto r0 : all_rows(p, 0))
                        for (auto r1 : all_rows(p, 1))
                            items.emplace_back(r0, r1);
                }
                else {
                    RowEnumerator probe(p, [](const Digraph &) {});
                    for (auto r0 : probe.candidates(0)) {
                        if (! probe.place(0, r0))
                            continue;
                        for (auto r1 : probe.candidates(1))
                            if (probe.place(1, r1)) {
                                items.emplace_back(r0, r1);
                                probe.unplace(1);
                            }
                        probe.unplace(0);
                    }
                }
                merged = run_items(items.size(), options, blank, [&](std::size_t i, ItemState &state) {
                    auto [r0, r1] = items[i];
                    auto visit = feed(state);
                    if (! filtered_scan) {
                        for_each_condition_digraph_with_prefix(p, r0, r1, visit);
                        return;
                    }
                    const std::uint64_t rest = std::uint64_t{1} << ((p - 2) * (p - 1));
                    for (std::uint64_t code = 0; code < rest; ++code) {
                        auto d = with_prefix(p, r0, r1, code);
                        if (stream == Stream::all_digraphs || satisfies_ds(d))
                            visit(d);
                    }
                });
            }

            const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            for (auto &r : merged.reports) {
                r.wall_time_seconds = seconds;
                std::sort(r.counterexamples.begin(), r.counterexamples.end());
            }
            return merged;
        }

        void require(bool ok, const std::string &what, int order)
        {
            if (! ok)
                throw PreconditionError(what + ", got p = " + std::to_string(order));
        }

        // The census credits the first matching family; checks.family_membership
        // counts every admissible family the digraph belongs to.
        void classify_into(VerificationReport &r, const Digraph &d, ClassifyContext context)
        {
            auto label = classify(d, context);
            if (label.tag == FamilyTag::none) {
                r.record_counterexample(d);
                return;
            }
            r.record_exception(label.tag);
            auto &membership = r.checks["family_membership"];
            for (auto tag : admissible_tags(context, d.order()))
                if (tag == label.tag || recognize(tag, d))
                    bump(membership[std::string(tag_name(tag))]);
        }
    }

    // --- runs ------------------------------------------------------------------

    auto verify_theorem1(const VerifyOptions &options) -> VerificationReport
    {
        require(options.order >= 5, "the (p-1)-cycle run needs p >= 5", options.order);
        const int p = options.order;
        auto merged = run(options, Stream::hypothesis, {blank_report("theorem1", options)},
            [p](const Digraph &d, ItemState &s) {
                if (has_cycle(d, p - 1))
                    s.reports[0].record_holds();
                else
                    classify_into(s.reports[0], d, ClassifyContext::theorem1);
            });
        return std::move(merged.reports[0]);
    }

    auto verify_theorem2(const VerifyOptions &options) -> VerificationReport
    {
        require(options.order >= 6 && options.order % 2 == 0, "the hamiltonicity run needs even p >= 6", options.order);
        const bool collect = options.mode == RunMode::exhaustive && options.order <= 8;
        auto merged = run(options, Stream::hypothesis, {blank_report("theorem2", options)},
            [collect](const Digraph &d, ItemState &s) {
                if (is_hamiltonian(d)) {
                    s.reports[0].record_holds();
                    return;
                }
                if (collect)
                    s.codes.push_back(d.arc_code());
                classify_into(s.reports[0], d, ClassifyContext::theorem2);
            });

        auto report = std::move(merged.reports[0]);
        if (collect) {
            auto &found = merged.codes;
            std::sort(found.begin(), found.end());
            found.erase(std::unique(found.begin(), found.end()), found.end());

            std::vector<std::uint64_t> members;
            for (auto tag : admissible_tags(ClassifyContext::theorem2, options.order))
                for (const auto &m : enumerate_family(tag, options.order))
                    if (satisfies_ds(m))
                        members.push_back(m.arc_code());
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());

            std::vector<std::uint64_t> missing, extra;
            std::set_difference(found.begin(), found.end(), members.begin(), members.end(), std::back_inserter(missing));
            std::set_difference(members.begin(), members.end(), found.begin(), found.end(), std::back_inserter(extra));
            report.checks["family_cross_check"] = {
                {"non_hamiltonian", found.size()},
                {"family_members", members.size()},
                {"not_in_families", missing.size()},
                {"hamiltonian_family_members", extra.size()},
                {"equal", missing.empty() && extra.empty()},
            };
        }
        return report;
    }

    auto verify_theorem3(const VerifyOptions &options) -> std::pair<VerificationReport, VerificationReport>
    {
        require(options.order >= 5, "the short-cycle run needs p >= 5", options.order);
        auto merged = run(options, Stream::hypothesis,
            {blank_report("theorem3_c3", options), blank_report("theorem3_c4", options)},
            [](const Digraph &d, ItemState &s) {
                if (has_cycle(d, 3))
                    s.reports[0].record_holds();
                else
                    classify_into(s.reports[0], d, ClassifyContext::theorem3_c3);
                if (has_cycle(d, 4))
                    s.reports[1].record_holds();
                else
                    classify_into(s.reports[1], d, ClassifyContext::theorem3_c4);
            });
        return {std::move(merged.reports[0]), std::move(merged.reports[1])};
    }

    namespace
    {
        struct Lemma4Subsets
        {
            // large[x]: every B avoiding x with |B| >= (p+1)/2
            std::vector<std::vector<std::uint16_t>> large;

            explicit Lemma4Subsets(int p) : large(static_cast<std::size_t>(p))
            {
                const int need = (p + 2) / 2;
                for (int x = 0; x < p; ++x) {
                    const std::uint32_t others = ((1u << p) - 1u) & ~(1u << x);
                    for (std::uint32_t b = others;; b = (b - 1) & others) {
                        if (std::popcount(b) >= need)
                            large[static_cast<std::size_t>(x)].push_back(static_cast<std::uint16_t>(b));
                        if (b == 0)
                            break;
                    }
                }
            }

            auto holds(const Digraph &d) const -> bool
            {
                for (int x = 0; x < d.order(); ++x)
                    for (auto b : large[static_cast<std::size_t>(x)])
                        if (! (d.out_row(x) & b) || ! (d.in_row(x) & b))
                            return false;
                return true;
            }
        };
    }

    auto lemma4_part_ii_holds(const Digraph &d) -> bool
    {
        return Lemma4Subsets(d.order()).holds(d);
    }

    auto verify_lemma4(const VerifyOptions &options) -> VerificationReport
    {
        require(options.order >= 3, "the strongness run needs p >= 3", options.order);
        const Lemma4Subsets subsets(options.order);
        auto blank = blank_report("lemma4", options);
        blank.checks["non_strong"] = std::uint64_t{0};
        blank.checks["part_ii_violations"] = std::uint64_t{0};
        auto merged = run(options, Stream::hypothesis, {blank}, [&subsets](const Digraph &d, ItemState &s) {
            auto &r = s.reports[0];
            const bool part_ii = subsets.holds(d);
            if (! part_ii)
                bump(r.checks["part_ii_violations"]);
            if (is_strong(d)) {
                if (part_ii)
                    r.record_holds();
                else
                    r.record_counterexample(d);
                return;
            }
            bump(r.checks["non_strong"]);
            if (part_ii && recognize(FamilyTag::hnn, d))
                r.record_exception(FamilyTag::hnn);
            else
                r.record_counterexample(d);
        });
        return std::move(merged.reports[0]);
    }

    auto verify_oracles(const VerifyOptions &options) -> std::pair<VerificationReport, VerificationReport>
    {
        if (options.mode != RunMode::exhaustive)
            throw PreconditionError("the condition oracles run exhaustively only");
        const int p = options.order;
        auto ore = blank_report("ore_pancyclic", options);
        // Same candidates judged with 2-cycles required as well.
        ore.checks["not_pancyclic_from_two"] = std::uint64_t{0};
        ore.checks["from_two_beyond_exception"] = std::uint64_t{0};
        auto merged = run(options, Stream::all_digraphs, {blank_report("ghouila_houri", options), ore},
            [p](const Digraph &d, ItemState &s) {
                int min_degree = 2 * p;
                for (int v = 0; v < p; ++v)
                    min_degree = std::min(min_degree, std::popcount(d.out_row(v)) + std::popcount(d.in_row(v)));
                const bool gh = min_degree >= p;
                bool ore_pairs = true;
                for (int x = 0; x < p && ore_pairs; ++x) {
                    const std::uint16_t adj = d.out_row(x) | d.in_row(x);
                    for (int y = x + 1; y < p; ++y)
                        if (! ((adj >> y) & 1u) && d.degree(x) + d.degree(y) < 2 * p) {
                            ore_pairs = false;
                            break;
                        }
                }
                if (! gh && ! ore_pairs)
                    return;
                if (! is_strong(d))
                    return;

                if (gh) {
                    if (is_hamiltonian(d))
                        s.reports[0].record_holds();
                    else
                        s.reports[0].record_counterexample(d);
                }
                if (ore_pairs) {
                    auto &r = s.reports[1];
                    const bool escape = recognize(FamilyTag::knn_star, d).has_value();
                    if (is_pancyclic(d, PancyclicConvention::from_three))
                        r.record_holds();
                    else if (escape)
                        r.record_exception(FamilyTag::knn_star);
                    else
                        r.record_counterexample(d);
                    if (! is_pancyclic(d, PancyclicConvention::from_two)) {
                        bump(r.checks["not_pancyclic_from_two"]);
                        if (! escape)
                            bump(r.checks["from_two_beyond_exception"]);
                    }
                }
            });
        return {std::move(merged.reports[0]), std::move(merged.reports[1])};
    }

    auto sample_pancyclicity(const VerifyOptions &options) -> VerificationReport
    {
        require(options.order >= 10, "the pancyclicity run needs p >= 10", options.order);
        auto merged = run(options, Stream::hypothesis, {blank_report("pancyclic", options)},
            [](const Digraph &d, ItemState &s) {
                if (is_pancyclic(d))
                    s.reports[0].record_holds();
                else
                    classify_into(s.reports[0], d, ClassifyContext::pancyclic);
            });
        return std::move(merged.reports[0]);
    }
}
