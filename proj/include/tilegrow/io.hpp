#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "tilegrow/analysis.hpp"
#include "tilegrow/sources.hpp"

namespace tilegrow {

using json = nlohmann::json;

inline constexpr int kSchema = 1;

json to_json(const Source& src);

/// Throws InvalidSpec for malformed documents and the usual validation errors otherwise.
Source source_from_json(const json& j);
Source load_source(const std::string& path);

json patch_json(const Generated& g, const std::string& source, const NeighborRule& rule);
json form_json(const GrowthForm& f, const std::string& source);
json report_json(const ConvergenceReport& r);
json no_growth_json(const NoGrowthReport& r);

void write_json(const std::string& path, const json& j);

/// Tiles filled by shell parity (odd green, even yellow, unreached grey) when shell_index is
/// given, else plain.
void write_svg_patch(const std::string& path, const Patch<2>& p, const std::vector<int>* shell_index = nullptr);

/// Scaled shells as dots, coloured by the parity of n.
void write_svg_shells(const std::string& path, const std::vector<std::vector<Vec2>>& shells,
                      const std::vector<int>& n);

void write_svg_forms(const std::string& path, const std::vector<GrowthForm>& forms);

/// 3D forms as polyhedra, 2D forms as a single face in the z = 0 plane.
void write_off(const std::string& path, const GrowthForm& f);
void write_off_patch(const std::string& path, const Patch<3>& p);

/// "8,16,24", "16..256" (step 16) or "16..256:8". Throws InvalidSpec.
std::vector<int> parse_shell_list(const std::string& text);

/// n,count per line.
void write_csv_counts(const std::string& path, const std::vector<long>& counts);

}  // namespace tilegrow
