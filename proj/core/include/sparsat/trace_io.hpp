#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sparsat/engine.hpp"

namespace sparsat {

/// JSON rendering of a trace. Keys are emitted in sorted order and values
/// are integers and strings only, so equal traces always produce identical
/// bytes. Layout:
///   {root, mode, width_cap, t_value,
///    levels: [{level_index, entering[], stages[
///        {kind, queries: [{index, query, label?}], removed_index?,
///         collision_pair?}], surviving[]}],
///    outcome, query_count}
std::string trace_json(const PruneTrace& trace, int indent = 2);

/// Structural validation of trace JSON against the layout above; returns
/// one message per violation, empty when the document conforms. The same
/// constraints are published in docs/trace-schema.json.
std::vector<std::string> trace_json_errors(const std::string& json_text);

/// Graphviz rendering: one node per formula per level labeled with its
/// serialization, solid edges into formulas that survived their level's
/// pruning, dashed edges into pruned ones.
std::string trace_dot(const PruneTrace& trace);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace sparsat
