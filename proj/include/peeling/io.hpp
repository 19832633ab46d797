#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "peeling/digraph.hpp"

namespace peeling {

// Text format, one digraph per file:
//
//   vdg <n>
//   vertex <id> <theta> [label]     (n lines, ids 0..n-1 in any order)
//   arc <src> <dst>
//
// Blank lines and lines starting with '#' are ignored.

/// Throws ParseError with the offending line number.
DigraphDescription read_vdg(std::istream& in);
DigraphDescription read_vdg_file(const std::string& path);
void write_vdg(std::ostream& out, const ValuedDigraph& g);

/// JSON mirror: {"vertices":[{"id":..,"theta":..,"label":..}], "arcs":[[s,d],...]}
nlohmann::json to_json(const ValuedDigraph& g);
DigraphDescription digraph_from_json(const nlohmann::json& j);

} // namespace peeling
