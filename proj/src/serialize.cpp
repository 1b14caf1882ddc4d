#include <semideg/serialize.hpp>

#include <algorithm>
#include <charconv>

namespace semideg
{
    namespace
    {
        constexpr char hex_digits[] = "0123456789ABCDEF";

        auto hex_value(char c) -> int
        {
            if (c >= '0' && c <= '9')
                return c - '0';
            if (c >= 'A' && c <= 'F')
                return c - 'A' + 10;
            if (c >= 'a' && c <= 'f')
                return c - 'a' + 10;
            return -1;
        }
    }

    auto encode(const Digraph &d) -> std::string
    {
        const int p = d.order();
        const int nibbles = (p * p + 3) / 4;
        std::string out = "D" + std::to_string(p) + ":";
        for (int k = 0; k < nibbles; ++k) {
            int value = 0;
            for (int b = 0; b < 4; ++b) {
                int pos = 4 * k + b;
                bool bit = pos < p * p && d.has_arc(pos / p, pos % p);
                value = (value << 1) | (bit ? 1 : 0);
            }
            out.push_back(hex_digits[value]);
        }
        return out;
    }

    auto decode(std::string_view text) -> Digraph
    {
        auto fail = [&](const std::string &why) -> DigraphError {
            return DigraphError("cannot decode '" + std::string(text) + "': " + why);
        };

        if (text.size() < 4 || text.front() != 'D')
            throw fail("expected D<p>:<hex>");
        auto colon = text.find(':');
        if (colon == std::string_view::npos || colon == 1)
            throw fail("missing order");
        int p = 0;
        auto header = text.substr(1, colon - 1);
        auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), p);
        if (ec != std::errc{} || ptr != header.data() + header.size())
            throw fail("order is not an integer");
        if (p < 2 || p > Digraph::max_order)
            throw fail("order outside [2, 16]");

        auto hex = text.substr(colon + 1);
        const auto nibbles = static_cast<std::size_t>((p * p + 3) / 4);
        if (hex.size() != nibbles)
            throw fail("expected " + std::to_string(nibbles) + " hex digits, got " + std::to_string(hex.size()));

        std::vector<Arc> arcs;
        for (std::size_t k = 0; k < nibbles; ++k) {
            int value = hex_value(hex[k]);
            if (value < 0)
                throw fail("invalid hex digit '" + std::string(1, hex[k]) + "'");
            for (int b = 0; b < 4; ++b) {
                if (! ((value >> (3 - b)) & 1))
                    continue;
                int pos = static_cast<int>(4 * k) + b;
                if (pos >= p * p)
                    throw fail("padding bit set");
                int i = pos / p, j = pos % p;
                if (i == j)
                    throw fail("diagonal bit set at vertex " + std::to_string(i));
                arcs.emplace_back(i, j);
            }
        }
        return Digraph::build(p, arcs);
    }

    auto to_json(const Digraph &d) -> nlohmann::json
    {
        auto arcs = nlohmann::json::array();
        for (auto [i, j] : d.arcs())
            arcs.push_back({i, j});
        return {{"order", d.order()}, {"arcs", arcs}};
    }

    auto digraph_from_json(const nlohmann::json &j) -> Digraph
    {
        if (! j.is_object() || ! j.contains("order") || ! j.contains("arcs"))
            throw DigraphError("digraph JSON needs \"order\" and \"arcs\"");
        if (! j["order"].is_number_integer() || ! j["arcs"].is_array())
            throw DigraphError("digraph JSON has mistyped fields");
        std::vector<Arc> arcs;
        for (const auto &a : j["arcs"]) {
            if (! a.is_array() || a.size() != 2 || ! a[0].is_number_integer() || ! a[1].is_number_integer())
                throw DigraphError("each arc must be a pair of integers");
            arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
        }
        return Digraph::build(j["order"].get<int>(), arcs);
    }

    auto to_json(const VertexSeq &seq) -> nlohmann::json
    {
        return seq.vertices;
    }
}
