#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilegrow/multigrid.hpp"
#include "tilegrow/periodic.hpp"
#include "tilegrow/substitution.hpp"

namespace tilegrow {

enum class SourceKind { Periodic, Grid, Substitution, Strips };

/// Anything that generates a tiling patch.
struct Source {
  SourceKind kind = SourceKind::Periodic;
  std::string name;
  PeriodicSpec periodic;
  GridSpec grid;
  SubstitutionSystem substitution;
  std::string seed_label;      // substitution: prototile of the supertile
  int level = 0;               // substitution: minimum supertile level
  int strips_levels = 5;
  int strips_half_height = 560;

  int dim() const { return kind == SourceKind::Grid ? grid.d : 2; }
  void validate(const Tolerance& tol = {}) const;
};

std::string_view to_string(SourceKind k);

Source source_preset(const std::string& name);
std::vector<std::string> source_preset_names();

struct Generated {
  int dim = 2;
  Patch<2> p2;
  Patch<3> p3;
  std::vector<int> seeds;
  double radius = 0.0;
  int level = 0;

  std::size_t size() const { return dim == 2 ? p2.size() : p3.size(); }
};

/// Patch within radius of the natural centre of the source. For strips, radius only bounds
/// the window from below.
Generated generate(const Source& src, double radius, const NeighborRule& rule = NeighborRule::edge_share(),
                   const Tolerance& tol = {});

/// Patch large enough for shells up to n: starts from a size estimate and doubles the radius
/// while BFS hits the guard band, at most six times.
Generated generate_for_shells(const Source& src, int n, const NeighborRule& rule = NeighborRule::edge_share(),
                              const Tolerance& tol = {});

}  // namespace tilegrow
