#pragma once

#include <string>

// Vendored single-header nlohmann/json.
#include <json.hpp>

#include "unmix/certify.hpp"
#include "unmix/generators.hpp"
#include "unmix/support.hpp"
#include "unmix/triangulate.hpp"

namespace unmix {

using json = nlohmann::json;

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

/// System file: {"dim": n, "supports": [[[c,...],...],...]} with
/// coordinates as integers or "p/q" strings; optional "labels".
json system_to_json(const SupportSystem& sys);
SupportSystem system_from_json(const json& j);

/// Points file: {"dim": n, "points": [[c,...],...]}.
json points_to_json(const Support& s);
Support points_from_json(const json& j);

/// Edge list: one "i j" pair per line, "#" comments, 0-indexed.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

json triangulation_to_json(const Triangulation& t);

json report_to_json(const UnmixReport& rep);
json semimixed_to_json(const SemiMixedReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// FNV-1a (64-bit) content hash used to echo inputs in run reports.
std::string fnv1a_hex(const std::string& data);

}  // namespace unmix
