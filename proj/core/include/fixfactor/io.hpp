#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fixfactor/decomposition.hpp"
#include "fixfactor/stability.hpp"

namespace fixfactor::io {

using nlohmann::json;

// {"points": [...], "specializes": [[x, y], ...], "map": {x: y, ...}}.
// "specializes" may be omitted. Unknown fields, wrong types and JSON syntax
// errors raise E_FORMAT with the field path or line:column; bad names raise
// E_NAME and non-monotone maps E_CONTINUITY.
FiniteSystem parse_system(std::string_view text);
FiniteSystem system_from_json(const json& doc);
// Throws E_IO when the file cannot be read.
FiniteSystem read_system_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Emits covering pairs only; re-parsing restores the same preorder.
json system_to_json(const FiniteSystem& sys);
std::string dump_system(const FiniteSystem& sys);
// FNV-1a of the compact canonical JSON, as 16 hex digits.
std::string system_hash(const FiniteSystem& sys);

json point_set_to_json(const FiniteSpace& space, const PointSet& s);
// Comma-separated point names; throws E_NAME on unknown names.
PointSet parse_point_list(const FiniteSpace& space, std::string_view list);
json partition_to_json(const FiniteSpace& space, const Partition& p);
json trace_to_json(const FiniteSpace& space, const DegreeTrace& trace);

json decomposition_report(const FiniteSystem& sys);
json stability_report_to_json(const FiniteSpace& space, const StabilityReport& report);
json quotient_to_json(const FiniteSystem& sys, const QuotientResult& q);

// Nodes labeled "name|class"; map edges solid, covering specialization
// pairs dashed.
std::string export_dot(const FiniteSystem& sys, const Partition& classes);

}  // namespace fixfactor::io
