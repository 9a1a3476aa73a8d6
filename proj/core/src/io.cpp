#include "fixfactor/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "fixfactor/errors.hpp"

namespace fixfactor::io {

namespace {

[[noreturn]] void format_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::format, where + ": " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const std::string& expect_string(const json& v, const std::string& where) {
  if (!v.is_string()) format_error(where, "expected a string");
  return v.get_ref<const std::string&>();
}

}  // namespace

FiniteSystem system_from_json(const json& doc) {
  if (!doc.is_object()) format_error("document", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "points" && key != "specializes" && key != "map") format_error(key, "unknown field");
  }
  if (!doc.contains("points")) format_error("points", "missing field");
  if (!doc.contains("map")) format_error("map", "missing field");

  const json& points = doc.at("points");
  if (!points.is_array()) format_error("points", "expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < points.size(); ++i) {
    names.push_back(expect_string(points[i], "points[" + std::to_string(i) + "]"));
  }

  std::vector<FiniteSpace::NamePair> pairs;
  if (doc.contains("specializes")) {
    const json& relation = doc.at("specializes");
    if (!relation.is_array()) format_error("specializes", "expected an array");
    for (std::size_t i = 0; i < relation.size(); ++i) {
      const std::string where = "specializes[" + std::to_string(i) + "]";
      if (!relation[i].is_array() || relation[i].size() != 2) format_error(where, "expected a pair of point names");
      pairs.emplace_back(expect_string(relation[i][0], where + "[0]"), expect_string(relation[i][1], where + "[1]"));
    }
  }

  const json& map = doc.at("map");
  if (!map.is_object()) format_error("map", "expected an object");
  std::map<std::string, std::string> assignment;
  for (const auto& [from, to] : map.items()) assignment[from] = expect_string(to, "map." + from);

  FiniteSpace space = FiniteSpace::build(std::move(names), pairs);
  SelfMap f = validate_map(space, assignment);
  return FiniteSystem{std::move(space), std::move(f)};
}

FiniteSystem parse_system(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    format_error(line_column(text, e.byte), "invalid JSON");
  }
  return system_from_json(doc);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::io, "write failed for '" + path.string() + "'");
}

FiniteSystem read_system_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_system(text);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::format) {
      throw Error(ErrorCode::format, path.string() + ": " + e.detail());
    }
    throw;
  }
}

json system_to_json(const FiniteSystem& sys) {
  const auto& space = sys.space;
  json doc;
  doc["points"] = space.names();
  json relation = json::array();
  for (auto [x, y] : space.covering_pairs()) relation.push_back({space.name(x), space.name(y)});
  doc["specializes"] = std::move(relation);
  json map = json::object();
  for (std::size_t x = 0; x < space.size(); ++x) map[space.name(x)] = space.name(sys.map(x));
  doc["map"] = std::move(map);
  return doc;
}

std::string dump_system(const FiniteSystem& sys) { return system_to_json(sys).dump(2) + "\n"; }

std::string system_hash(const FiniteSystem& sys) {
  const std::string canonical = system_to_json(sys).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

json point_set_to_json(const FiniteSpace& space, const PointSet& s) {
  json out = json::array();
  s.for_each([&](std::size_t x) { out.push_back(space.name(x)); });
  return out;
}

PointSet parse_point_list(const FiniteSpace& space, std::string_view list) {
  PointSet out = space.empty_set();
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const auto comma = list.find(',', pos);
    const auto item = list.substr(pos, comma == std::string_view::npos ? list.npos : comma - pos);
    if (!item.empty()) out.insert(space.require(std::string(item)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

json partition_to_json(const FiniteSpace& space, const Partition& p) {
  json out = json::array();
  for (const auto& c : p.classes()) out.push_back(point_set_to_json(space, c));
  return out;
}

json trace_to_json(const FiniteSpace& space, const DegreeTrace& trace) {
  json entries = json::array();
  for (const auto& e : trace.entries) {
    entries.push_back({{"degree", e.degree.format()}, {"classes", partition_to_json(space, e.partition)}});
  }
  return {{"entries", std::move(entries)}, {"stabilization_degree", trace.stabilization_degree.format()}};
}

json decomposition_report(const FiniteSystem& sys) {
  const DegreeTrace trace = stabilize(sys);
  json out;
  out["system_hash"] = system_hash(sys);
  out["points"] = sys.space.names();
  out["trace"] = trace_to_json(sys.space, trace)["entries"];
  out["stabilization_degree"] = trace.stabilization_degree.format();
  out["classes"] = partition_to_json(sys.space, trace.stationary());
  out["dim_fix"] = fixed_space_dimension(sys);
  out["ergodic"] = trace.stationary().class_count() == 1;
  return out;
}

json stability_report_to_json(const FiniteSpace& space, const StabilityReport& report) {
  json degrees = json::array();
  for (const auto& [d, s] : report.stable_by_degree) degrees.push_back({{"degree", d.format()}, {"stable", s}});
  return {{"set", point_set_to_json(space, report.set)},
          {"stable_plain", report.stable_plain},
          {"stable_by_degree", std::move(degrees)},
          {"absolutely_stable", report.absolutely_stable}};
}

json quotient_to_json(const FiniteSystem& sys, const QuotientResult& q) {
  json projection = json::object();
  for (std::size_t x = 0; x < sys.size(); ++x) {
    projection[sys.space.name(x)] = q.quotient.space.name(q.projection[x]);
  }
  return {{"quotient", system_to_json(q.quotient)},
          {"projection", std::move(projection)},
          {"discrete", q.quotient.space.is_discrete()}};
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const FiniteSystem& sys, const Partition& classes) {
  static constexpr const char* palette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                            "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
  const auto& space = sys.space;
  std::ostringstream out;
  out << "digraph system {\n  node [shape=box, style=filled];\n";
  for (std::size_t x = 0; x < space.size(); ++x) {
    const std::size_t c = classes.class_of(x);
    out << "  " << dot_quote(space.name(x)) << " [label=" << dot_quote(space.name(x) + "|" + std::to_string(c))
        << ", fillcolor=\"" << palette[c % std::size(palette)] << "\"];\n";
  }
  for (std::size_t x = 0; x < space.size(); ++x) {
    out << "  " << dot_quote(space.name(x)) << " -> " << dot_quote(space.name(sys.map(x))) << ";\n";
  }
  for (auto [x, y] : space.covering_pairs()) {
    out << "  " << dot_quote(space.name(x)) << " -> " << dot_quote(space.name(y)) << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fixfactor::io
