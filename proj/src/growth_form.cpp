#include "tilegrow/growth_form.hpp"

#include <string>

namespace tilegrow {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Algorithm1: return "Algorithm1";
    case Provenance::OrthoplexSection: return "OrthoplexSection";
    case Provenance::GridFormula2D: return "GridFormula2D";
    case Provenance::GridFormula3D: return "GridFormula3D";
    case Provenance::Empirical: return "Empirical";
  }
  return "Empirical";
}

Provenance provenance_from_string(std::string_view s) {
  for (auto p : {Provenance::Algorithm1, Provenance::OrthoplexSection, Provenance::GridFormula2D,
                 Provenance::GridFormula3D, Provenance::Empirical})
    if (to_string(p) == s) return p;
  throw Error(ErrorKind::InvalidSpec, "unknown provenance '" + std::string(s) + "'");
}

GrowthForm GrowthForm::from_points(std::span<const Vec2> pts, Provenance prov, const Tolerance& tol) {
  GrowthForm f;
  f.dim = 2;
  f.provenance = prov;
  f.polygon = convex_hull_2d(pts, tol);
  return f;
}

GrowthForm GrowthForm::from_points(std::span<const Vec3> pts, Provenance prov, const Tolerance& tol) {
  GrowthForm f;
  f.dim = 3;
  f.provenance = prov;
  f.polytope = convex_hull_3d(pts, tol);
  return f;
}

double GrowthForm::circumradius() const {
  double r = 0.0;
  if (dim == 2)
    for (const auto& v : polygon.vertices) r = std::max(r, v.norm());
  else
    for (const auto& v : polytope.vertices) r = std::max(r, v.norm());
  return r;
}

namespace {

template <int Dim>
bool symmetric(const std::vector<Vec<Dim>>& v, double eps) {
  for (const auto& a : v) {
    bool found = false;
    for (const auto& b : v)
      if ((a + b).norm() <= eps) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool GrowthForm::is_centrosymmetric(double eps) const {
  return dim == 2 ? symmetric<2>(polygon.vertices, eps) : symmetric<3>(polytope.vertices, eps);
}

double form_hausdorff(const GrowthForm& a, const GrowthForm& b) {
  if (a.dim != b.dim) throw Error(ErrorKind::MethodMismatch, "forms of different dimension");
  if (a.dim == 2) return hausdorff_distance<2>(a.polygon.vertices, b.polygon.vertices);
  return hausdorff_distance<3>(a.polytope.vertices, b.polytope.vertices);
}

bool form_contains(const GrowthForm& outer, const GrowthForm& inner, double eps) {
  if (outer.dim != inner.dim) throw Error(ErrorKind::MethodMismatch, "forms of different dimension");
  if (outer.dim == 2) {
    for (const auto& v : inner.polygon.vertices)
      for (std::size_t i = 0; i < outer.polygon.size(); ++i)
        if (orient2(outer.polygon[i], outer.polygon.next(i), v) < -eps) return false;
    return true;
  }
  const auto hs = facet_halfspaces(outer.polytope);
  for (const auto& v : inner.polytope.vertices)
    for (const auto& h : hs)
      if (h.normal.dot(v) > h.offset + eps) return false;
  return true;
}

}  // namespace tilegrow
