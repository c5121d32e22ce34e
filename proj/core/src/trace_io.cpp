#include "sparsat/trace_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace sparsat {

using nlohmann::json;

namespace {

json query_to_json(const QueryRecord& record) {
  json q;
  q["index"] = record.index;
  q["query"] = record.query;
  if (record.label) q["label"] = to_string(*record.label);
  return q;
}

json stage_to_json(const StageEvent& stage) {
  json s;
  s["kind"] = to_string(stage.kind);
  s["queries"] = json::array();
  for (const auto& q : stage.queries) s["queries"].push_back(query_to_json(q));
  if (stage.removed_index) s["removed_index"] = *stage.removed_index;
  if (stage.collision_pair)
    s["collision_pair"] = json::array({stage.collision_pair->first, stage.collision_pair->second});
  return s;
}

}  // namespace

std::string trace_json(const PruneTrace& trace, int indent) {
  json j;
  j["root"] = trace.root;
  j["mode"] = to_string(trace.mode);
  j["width_cap"] = trace.width_cap;
  j["t_value"] = trace.t_value;
  j["levels"] = json::array();
  for (const LevelRecord& level : trace.levels) {
    json l;
    l["level_index"] = level.level_index;
    l["entering"] = level.entering;
    l["stages"] = json::array();
    for (const StageEvent& stage : level.stages) l["stages"].push_back(stage_to_json(stage));
    l["surviving"] = level.surviving;
    j["levels"].push_back(std::move(l));
  }
  j["outcome"] = to_string(trace.outcome);
  j["query_count"] = trace.query_count;
  return j.dump(indent) + "\n";
}

namespace {

bool is_string_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (!e.is_string()) return false;
  return true;
}

void check_stage(const json& s, const std::string& where, std::vector<std::string>& errors) {
  static const std::set<std::string> kKinds = {"CASE1_REMOVE_FIRST", "CASE2_REMOVE_COLLIDER",
                                               "ONE_TT_ACCEPT", "FORTUNE_REJECT"};
  if (!s.is_object()) {
    errors.push_back(where + ": stage is not an object");
    return;
  }
  if (!s.contains("kind") || !s["kind"].is_string() || !kKinds.count(s["kind"].get<std::string>()))
    errors.push_back(where + ": missing or invalid kind");
  if (!s.contains("queries") || !s["queries"].is_array()) {
    errors.push_back(where + ": missing queries array");
  } else {
    for (const auto& q : s["queries"]) {
      if (!q.is_object() || !q.contains("index") || !q["index"].is_number_unsigned() ||
          !q.contains("query") || !q["query"].is_string() ||
          (q.contains("label") && (!q["label"].is_string() ||
                                   (q["label"] != "ORIG" && q["label"] != "NEG")))) {
        errors.push_back(where + ": malformed query record");
        break;
      }
    }
  }
  if (s.contains("removed_index") && !s["removed_index"].is_number_unsigned())
    errors.push_back(where + ": removed_index not an unsigned integer");
  if (s.contains("collision_pair")) {
    const auto& p = s["collision_pair"];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned())
      errors.push_back(where + ": collision_pair not a pair of indices");
  }
}

}  // namespace

std::vector<std::string> trace_json_errors(const std::string& json_text) {
  std::vector<std::string> errors;
  json j = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    errors.push_back("not valid JSON");
    return errors;
  }
  if (!j.is_object()) {
    errors.push_back("top level is not an object");
    return errors;
  }
  if (!j.contains("root") || !j["root"].is_string()) errors.push_back("missing string root");
  if (!j.contains("mode") || !j["mode"].is_string() ||
      (j["mode"] != "MAHANEY" && j["mode"] != "FORTUNE" && j["mode"] != "ONE_TT"))
    errors.push_back("missing or invalid mode");
  if (!j.contains("width_cap") || !j["width_cap"].is_number_unsigned())
    errors.push_back("missing unsigned width_cap");
  if (!j.contains("t_value") || !j["t_value"].is_number_unsigned())
    errors.push_back("missing unsigned t_value");
  if (!j.contains("outcome") || !j["outcome"].is_string() ||
      (j["outcome"] != "ACCEPT" && j["outcome"] != "REJECT"))
    errors.push_back("missing or invalid outcome");
  if (!j.contains("query_count") || !j["query_count"].is_number_unsigned())
    errors.push_back("missing unsigned query_count");
  if (!j.contains("levels") || !j["levels"].is_array()) {
    errors.push_back("missing levels array");
    return errors;
  }
  std::size_t idx = 0;
  for (const auto& level : j["levels"]) {
    const std::string where = "levels[" + std::to_string(idx++) + "]";
    if (!level.is_object()) {
      errors.push_back(where + ": not an object");
      continue;
    }
    if (!level.contains("level_index") || !level["level_index"].is_number_unsigned())
      errors.push_back(where + ": missing unsigned level_index");
    if (!level.contains("entering") || !is_string_array(level["entering"]))
      errors.push_back(where + ": missing entering string array");
    if (!level.contains("surviving") || !is_string_array(level["surviving"]))
      errors.push_back(where + ": missing surviving string array");
    if (!level.contains("stages") || !level["stages"].is_array()) {
      errors.push_back(where + ": missing stages array");
      continue;
    }
    std::size_t sidx = 0;
    for (const auto& stage : level["stages"])
      check_stage(stage, where + ".stages[" + std::to_string(sidx++) + "]", errors);
  }
  return errors;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string trace_dot(const PruneTrace& trace) {
  std::ostringstream out;
  out << "digraph prune_trace {\n";
  out << "  graph [label=\"mode=" << to_string(trace.mode)
      << " outcome=" << to_string(trace.outcome) << " root=" << dot_escape(trace.root)
      << "\", labelloc=t];\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";

  // Node per (level, entering formula).
  std::vector<std::unordered_map<std::string, std::size_t>> position;
  position.reserve(trace.levels.size());
  for (const LevelRecord& level : trace.levels) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < level.entering.size(); ++i) {
      out << "  L" << level.level_index << "_" << i << " [label=\""
          << dot_escape(level.entering[i]) << "\"];\n";
      index.emplace(level.entering[i], i);
    }
    position.push_back(std::move(index));
  }

  // Branch edges: each survivor of level l-1 substitutes the level's
  // variable both ways; edges land on the children that entered level l.
  // Dashed means the child did not survive its level.
  for (std::size_t li = 1; li < trace.levels.size(); ++li) {
    const LevelRecord& prev = trace.levels[li - 1];
    const LevelRecord& cur = trace.levels[li];
    const auto branch_var = static_cast<VarIndex>(cur.level_index);
    std::set<std::string> survivors(cur.surviving.begin(), cur.surviving.end());
    for (const std::string& parent : prev.surviving) {
      const auto parent_pos = position[li - 1].find(parent);
      if (parent_pos == position[li - 1].end()) continue;
      const Formula parent_formula = parse_formula(parent);
      std::set<std::string> children;
      for (bool bit : {false, true})
        children.insert(substitute(parent_formula, branch_var, bit).str());
      for (const std::string& child : children) {
        const auto child_pos = position[li].find(child);
        if (child_pos == position[li].end()) continue;  // dropped leaf
        out << "  L" << prev.level_index << "_" << parent_pos->second << " -> L"
            << cur.level_index << "_" << child_pos->second
            << (survivors.count(child) ? " [style=solid];\n" : " [style=dashed];\n");
      }
    }
  }

  out << "}\n";
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace sparsat
