#pragma once

#include <span>
#include <string_view>

#include "tilegrow/geom.hpp"

namespace tilegrow {

enum class Provenance { Algorithm1, OrthoplexSection, GridFormula2D, GridFormula3D, Empirical };

std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

/// Convex polytope given by its vertices. Only one of polygon / polytope is populated,
/// according to dim.
struct GrowthForm {
  int dim = 2;
  Provenance provenance = Provenance::Empirical;
  Polygon polygon;
  ConvexPolytope3 polytope;

  static GrowthForm from_points(std::span<const Vec2> pts, Provenance prov, const Tolerance& tol = {});
  static GrowthForm from_points(std::span<const Vec3> pts, Provenance prov, const Tolerance& tol = {});

  std::size_t vertex_count() const { return dim == 2 ? polygon.size() : polytope.vertices.size(); }
  double circumradius() const;

  /// For every vertex v there is a vertex within eps of -v.
  bool is_centrosymmetric(double eps) const;
};

/// Hausdorff distance between the vertex sets of two forms of the same dimension.
/// It bounds the Hausdorff distance of the polytopes themselves from above.
double form_hausdorff(const GrowthForm& a, const GrowthForm& b);

/// True if every vertex of inner lies in outer (within eps).
bool form_contains(const GrowthForm& outer, const GrowthForm& inner, double eps = 1e-9);

}  // namespace tilegrow
