// semideg: command-line front end.
//
// Exit status: 0 success, 1 a verification run found counterexamples,
// 2 usage error (bad flag, unknown name, malformed digraph, parameter out of
// range).

#include <semideg/conditions.hpp>
#include <semideg/cycles.hpp>
#include <semideg/families.hpp>
#include <semideg/serialize.hpp>
#include <semideg/verify.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace semideg;
using nlohmann::json;

namespace
{
    class UsageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    enum class Format
    {
        automatic,
        json,
        table
    };

    // Only verification reports switch to JSON automatically when stdout is
    // not a terminal; the other commands print plain text unless asked.
    struct Output
    {
        Format format = Format::automatic;
        std::string path;
        bool auto_json = false;

        [[nodiscard]] auto is_json() const -> bool
        {
            if (format == Format::automatic)
                return auto_json && (! path.empty() || ! isatty(fileno(stdout)));
            return format == Format::json;
        }

        void write(const std::string &text) const
        {
            if (path.empty()) {
                std::cout << text;
                return;
            }
            std::ofstream file(path);
            if (! file)
                throw UsageError("cannot write '" + path + "'");
            file << text;
        }
    };

    // A "D<p>:<hex>" literal, inline JSON, or the path of a JSON file.
    auto read_digraph(const std::string &arg) -> Digraph
    {
        try {
            if (arg.starts_with("D"))
                return decode(arg);
            if (arg.starts_with("{"))
                return digraph_from_json(json::parse(arg));
            std::ifstream file(arg);
            if (! file)
                throw UsageError("'" + arg + "' is neither a digraph literal nor a readable file");
            return digraph_from_json(json::parse(file));
        }
        catch (const json::exception &e) {
            throw UsageError("'" + arg + "': " + e.what());
        }
        catch (const DigraphError &e) {
            throw UsageError("'" + arg + "': " + e.what());
        }
    }

    // "0-3,1-4" -> {(0,3), (1,4)}
    auto parse_arcs(const std::string &text) -> std::vector<Arc>
    {
        std::vector<Arc> arcs;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto dash = item.find('-');
            try {
                if (dash == std::string::npos)
                    throw std::invalid_argument(item);
                std::size_t used = 0;
                int u = std::stoi(item.substr(0, dash), &used);
                if (used != dash)
                    throw std::invalid_argument(item);
                auto rest = item.substr(dash + 1);
                int v = std::stoi(rest, &used);
                if (used != rest.size())
                    throw std::invalid_argument(item);
                arcs.emplace_back(u, v);
            }
            catch (const std::logic_error &) {
                throw UsageError("malformed arc '" + item + "' (expected u-v)");
            }
        }
        return arcs;
    }

    auto family_tag(const std::string &cli_name) -> FamilyTag
    {
        static const std::map<std::string, FamilyTag, std::less<>> tags{
            {"h-nn", FamilyTag::hnn},
            {"h-n-n1-1", FamilyTag::hn_n1_1},
            {"h-2n", FamilyTag::h2n},
            {"h-2n-prime", FamilyTag::h2n_prime},
            {"d6", FamilyTag::d6},
            {"d6-prime", FamilyTag::d6_prime},
            {"c5-star", FamilyTag::c5_star},
            {"join-kn-kn-k1", FamilyTag::join_kn_kn_k1},
            {"knn-star", FamilyTag::knn_star},
            {"c6-star-1", FamilyTag::c6_star_1},
            {"h6-prime", FamilyTag::h6_prime},
            {"h6-double-prime", FamilyTag::h6_double_prime},
        };
        if (auto it = tags.find(cli_name); it != tags.end())
            return it->second;
        throw UsageError("unknown family '" + cli_name + "'");
    }

    struct GenArgs
    {
        std::string family;
        int n = 3;
        int m = 0;
        std::string orientation = "in";
        std::string arcs;
        bool converse = false;
        int all_order = 0;
    };

    auto generate(const GenArgs &a) -> std::vector<Digraph>
    {
        const auto tag = family_tag(a.family);
        if (a.all_order > 0) {
            auto t = a.converse ? converse_tag(tag) : tag;
            return enumerate_family(t, a.all_order);
        }
        Digraph d(1);
        switch (tag) {
        case FamilyTag::hnn: {
            auto cross = parse_arcs(a.arcs);
            if (a.arcs.empty())
                for (int i = 0; i < a.n; ++i)
                    cross.emplace_back(i, a.n + i);
            d = gen_hnn(a.n, cross);
            break;
        }
        case FamilyTag::hn_n1_1: {
            if (a.orientation != "in" && a.orientation != "out")
                throw UsageError("orientation must be 'in' or 'out', got '" + a.orientation + "'");
            auto o = a.orientation == "in" ? HnOrientation::in : HnOrientation::out;
            d = gen_hn_n1_1(a.n, o, parse_arcs(a.arcs));
            break;
        }
        case FamilyTag::h2n:
        case FamilyTag::h2n_prime: d = gen_h2n(a.n, tag == FamilyTag::h2n_prime); break;
        case FamilyTag::d6:
        case FamilyTag::d6_prime: d = gen_d6(tag == FamilyTag::d6_prime); break;
        case FamilyTag::c5_star: d = gen_c5_star(); break;
        case FamilyTag::join_kn_kn_k1: d = gen_join_knknk1(a.n); break;
        case FamilyTag::knn_star: d = gen_knn_star(a.n, a.m > 0 ? a.m : a.n); break;
        case FamilyTag::c6_star_1: d = gen_c6_star_1(); break;
        case FamilyTag::h6_prime: d = gen_h6_prime(); break;
        case FamilyTag::h6_double_prime: d = gen_h6_double_prime(); break;
        default: throw UsageError("family '" + a.family + "' has no generator");
        }
        return {a.converse ? d.converse() : d};
    }

    auto witness_json(const FamilyWitness &w) -> json
    {
        json parts = json::array();
        for (auto s : w.parts)
            parts.push_back(s.to_vector());
        return {{"parts", parts}, {"isomorphism", w.isomorphism}};
    }

    auto seq_or_null(const std::optional<VertexSeq> &s) -> json
    {
        return s ? to_json(*s) : json(nullptr);
    }

    struct VerifyArgs
    {
        std::string run;
        VerifyOptions options;
        std::string mode = "exhaustive";
        bool progress = false;
    };

    auto verify(VerifyArgs &a) -> std::vector<VerificationReport>
    {
        auto &o = a.options;
        if (a.mode == "sampled")
            o.mode = RunMode::sampled;
        else if (a.mode == "exhaustive")
            o.mode = RunMode::exhaustive;
        else
            throw UsageError("mode must be 'exhaustive' or 'sampled', got '" + a.mode + "'");
        if (o.mode == RunMode::sampled && o.samples == 0)
            throw UsageError("sampled mode needs --samples");
        if (o.workers < 1)
            throw UsageError("--workers must be at least 1");
        if (a.progress || isatty(fileno(stderr)))
            o.progress = [](std::size_t done, std::size_t total) {
                if (done == total || done % 16 == 0)
                    std::cerr << "\r" << done << "/" << total << (done == total ? "\n" : "") << std::flush;
            };

        if (a.run == "theorem1")
            return {verify_theorem1(o)};
        if (a.run == "theorem2")
            return {verify_theorem2(o)};
        if (a.run == "theorem3") {
            auto [c3, c4] = verify_theorem3(o);
            return {c3, c4};
        }
        if (a.run == "lemma4")
            return {verify_lemma4(o)};
        if (a.run == "oracles") {
            auto [gh, ore] = verify_oracles(o);
            return {gh, ore};
        }
        if (a.run == "pancyclic-sample")
            return {sample_pancyclicity(o)};
        throw UsageError("unknown run '" + a.run + "'");
    }
}

auto main(int argc, char **argv) -> int
{
    CLI::App app{"Degree-condition cycle and hamiltonicity toolkit for small digraphs"};
    app.require_subcommand(1);

    Output out;
    auto add_output = [&out](CLI::App *cmd) {
        cmd->add_option("-o,--output", out.path, "Write to this file instead of stdout");
        cmd->add_option_function<std::string>(
               "--format",
               [&out](const std::string &f) { out.format = f == "json" ? Format::json : Format::table; },
               "json or table")
            ->check(CLI::IsMember({"json", "table"}));
    };

    GenArgs gen_args;
    auto *gen = app.add_subcommand("gen", "Print a member of an exceptional family");
    gen->add_option("family", gen_args.family, "Family name")->required();
    gen->add_option("-n", gen_args.n, "Family parameter n")->capture_default_str();
    gen->add_option("-m", gen_args.m, "Second side for knn-star (default n)");
    gen->add_option("--orientation", gen_args.orientation, "h-n-n1-1: in or out")->capture_default_str();
    gen->add_option("--arcs", gen_args.arcs, "Optional arcs as u-v,u-v (h-nn cross arcs, h-n-n1-1 free arcs)");
    gen->add_flag("--converse", gen_args.converse, "Reverse every arc");
    gen->add_option("--all", gen_args.all_order, "Print every labeled member of order p");
    add_output(gen);

    std::string digraph_arg, context = "theorem1";
    auto *cls = app.add_subcommand("classify", "Find the exceptional family containing a digraph");
    cls->add_option("digraph", digraph_arg, "D<p>:<hex>, inline JSON or a JSON file")->required();
    cls->add_option("--context", context, "theorem1, theorem2, theorem3_c3, theorem3_c4, pancyclic or ore")
        ->capture_default_str();
    add_output(cls);

    int length = 0;
    bool spectrum = false, hamiltonian = false;
    auto *cyc = app.add_subcommand("cycles", "Cycle queries");
    cyc->add_option("digraph", digraph_arg, "D<p>:<hex>, inline JSON or a JSON file")->required();
    auto *len_opt = cyc->add_option("--length", length, "Find a cycle of this length");
    auto *spec_opt = cyc->add_flag("--spectrum", spectrum, "List every cycle length");
    auto *ham_opt = cyc->add_flag("--hamiltonian", hamiltonian, "Hamiltonicity with a witness");
    len_opt->excludes(spec_opt, ham_opt);
    spec_opt->excludes(ham_opt);
    add_output(cyc);

    VerifyArgs va;
    va.options.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto *ver = app.add_subcommand("verify", "Check a theorem over all or sampled hypothesis digraphs");
    ver->add_option("run", va.run, "theorem1, theorem2, theorem3, lemma4, oracles or pancyclic-sample")->required();
    ver->add_option("-p,--order", va.options.order, "Order p")->required();
    ver->add_option("--mode", va.mode, "exhaustive or sampled")->capture_default_str();
    ver->add_option("--seed", va.options.seed, "Sampling seed")->capture_default_str();
    ver->add_option("--samples", va.options.samples, "Hypothesis digraphs to sample");
    ver->add_option("--workers", va.options.workers, "Worker threads (default: available cores)");
    ver->add_option("--cap", va.options.counterexample_cap, "Counterexamples kept in the report")->capture_default_str();
    ver->add_flag("--converse", va.options.converse_stream, "Check the converse of every digraph");
    ver->add_flag("--unpruned", va.options.unpruned, "Scan the whole arc space instead of pruning");
    ver->add_flag("--progress", va.progress, "Report progress on stderr");
    add_output(ver);

    auto *enc = app.add_subcommand("encode", "Print the D<p>:<hex> form of a digraph");
    enc->add_option("digraph", digraph_arg, "Inline JSON, a JSON file or a literal")->required();
    add_output(enc);
    auto *dec = app.add_subcommand("decode", "Print the JSON form of a digraph");
    dec->add_option("digraph", digraph_arg, "D<p>:<hex>")->required();
    add_output(dec);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            auto members = generate(gen_args);
            std::string text;
            if (out.is_json() && gen_args.all_order > 0) {
                json list = json::array();
                for (const auto &d : members)
                    list.push_back(encode(d));
                text = list.dump() + "\n";
            }
            else
                for (const auto &d : members)
                    text += (out.is_json() ? to_json(d).dump() : encode(d)) + "\n";
            out.write(text);
        }
        else if (cls->parsed()) {
            auto c = context_from_name(context);
            if (! c)
                throw UsageError("unknown context '" + context + "'");
            auto d = read_digraph(digraph_arg);
            auto label = classify(d, *c);
            if (out.is_json())
                out.write(json{{"tag", tag_name(label.tag)}, {"witness", witness_json(label.witness)}}.dump() + "\n");
            else
                out.write(std::string(tag_name(label.tag)) + "\n");
        }
        else if (cyc->parsed()) {
            auto d = read_digraph(digraph_arg);
            json j;
            std::string text;
            if (spectrum) {
                auto s = cycle_spectrum(d).to_vector();
                j = {{"spectrum", s}, {"pancyclic", is_pancyclic(d)}};
                for (std::size_t i = 0; i < s.size(); ++i)
                    text += (i ? " " : "") + std::to_string(s[i]);
                text += "\n";
            }
            else if (len_opt->count() > 0) {
                if (length < 2 || length > d.order())
                    throw UsageError("--length " + std::to_string(length) + " is outside 2.." +
                        std::to_string(d.order()));
                auto c = find_cycle(d, length);
                j = {{"length", length}, {"found", c.has_value()}, {"cycle", seq_or_null(c)}};
                text = c ? "true " + to_json(*c).dump() + "\n" : "false\n";
            }
            else {
                auto c = hamiltonian_cycle(d);
                j = {{"hamiltonian", c.has_value()}, {"cycle", seq_or_null(c)}};
                text = c ? "true " + to_json(*c).dump() + "\n" : "false\n";
            }
            out.write(out.is_json() ? j.dump() + "\n" : text);
        }
        else if (ver->parsed()) {
            out.auto_json = true;
            auto reports = verify(va);
            bool failed = false;
            std::string text;
            if (out.is_json()) {
                json j = json::array();
                for (const auto &r : reports)
                    j.push_back(to_json(r));
                text = (reports.size() == 1 ? j[0] : j).dump(2) + "\n";
            }
            else
                for (const auto &r : reports)
                    text += format_table(r);
            for (const auto &r : reports)
                failed = failed || ! r.passed();
            out.write(text);
            return failed ? 1 : 0;
        }
        else if (enc->parsed())
            out.write(encode(read_digraph(digraph_arg)) + "\n");
        else if (dec->parsed())
            out.write(to_json(read_digraph(digraph_arg)).dump() + "\n");
    }
    catch (const SamplingBudgetExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument &e) { // DigraphError, PreconditionError
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::domain_error &e) { // UnsupportedSize
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
