#pragma once

// Text and JSON forms of digraphs and witnesses.
//
// Text form: "D<p>:<hex>", the p*p row-major adjacency bits (bit (i,j) at
// position i*p+j, most significant first), zero-padded at the end to a
// multiple of 4 bits, upper-case hex. Diagonal and padding bits must be 0.
//
// JSON form: {"order": p, "arcs": [[i,j], ...]} with arcs sorted.

#include <semideg/digraph.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace semideg
{
    auto encode(const Digraph &d) -> std::string;

    /// Throws DigraphError on a malformed header, wrong length, a set
    /// diagonal bit, or a set padding bit. Lower-case hex is accepted.
    auto decode(std::string_view text) -> Digraph;

    auto to_json(const Digraph &d) -> nlohmann::json;
    auto digraph_from_json(const nlohmann::json &j) -> Digraph;

    /// A witness as a plain JSON array of vertex indices.
    auto to_json(const VertexSeq &seq) -> nlohmann::json;
}
