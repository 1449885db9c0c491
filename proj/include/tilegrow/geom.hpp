#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "tilegrow/error.hpp"

namespace tilegrow {

template <typename Scalar, int Dim>
using VecT = Eigen::Matrix<Scalar, Dim, 1>;

template <int Dim>
using Vec = VecT<double, Dim>;

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

template <int Dim>
using PointList = std::vector<Vec<Dim>>;

/// Numerical tolerances. eps_geom decides point coincidence and incidence,
/// eps_form is the resolution used when two growth forms are compared.
struct Tolerance {
  double eps_geom = 1e-9;
  double eps_form = 1e-6;

  void validate() const;
};

/// z-component of the 2D cross product.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cross2(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Orientation of c relative to the directed line a->b (positive when c is to the left).
template <typename DA, typename DB, typename DC>
typename DA::Scalar orient2(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                            const Eigen::MatrixBase<DC>& c) {
  return cross2(b - a, c - a);
}

template <int Dim>
bool lex_less(const Vec<Dim>& a, const Vec<Dim>& b) {
  for (int k = 0; k < Dim; ++k) {
    if (a[k] < b[k]) return true;
    if (a[k] > b[k]) return false;
  }
  return false;
}

template <int Dim>
double point_segment_distance(const Vec<Dim>& p, const Vec<Dim>& a, const Vec<Dim>& b) {
  const Vec<Dim> ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

// ---------------------------------------------------------------------------
// Polygons

/// Simple polygon with counterclockwise vertex order.
struct Polygon {
  std::vector<Vec2> vertices;

  Polygon() = default;
  explicit Polygon(std::vector<Vec2> v) : vertices(std::move(v)) {}

  std::size_t size() const { return vertices.size(); }
  const Vec2& operator[](std::size_t i) const { return vertices[i]; }
  const Vec2& next(std::size_t i) const { return vertices[(i + 1) % vertices.size()]; }
};

double signed_area(const Polygon& p);

/// Shoelace area. Throws InvalidSpec for fewer than 3 vertices or non-positive orientation.
double polygon_area(const Polygon& p);

Vec2 polygon_centroid(const Polygon& p);

/// Rotates the vertex list so the lexicographically smallest vertex comes first.
void canonicalize(Polygon& p);

/// Checks the Polygon invariants: >= 3 vertices, positive area, no self-intersections.
bool is_valid_polygon(const Polygon& p, double eps = 1e-9);

bool is_convex(const Polygon& p, double eps = 1e-9);

/// Largest distance between two vertices.
double diameter(const Polygon& p);

/// Largest distance from the area centroid to a vertex.
double circumradius_about_centroid(const Polygon& p);

/// Point-in-polygon (even-odd); points within eps of the boundary count as inside.
bool contains(const Polygon& p, const Vec2& q, double eps = 1e-9);

double distance_to_boundary(const Polygon& p, const Vec2& q);

Polygon translated(const Polygon& p, const Vec2& v);
Polygon scaled(const Polygon& p, double s);

/// Applies x -> A x + t and restores counterclockwise order if A reverses orientation.
Polygon transformed(const Polygon& p, const Eigen::Matrix2d& A, const Vec2& t);

/// Ear-clipping triangulation of a simple counterclockwise polygon.
std::vector<std::array<Vec2, 3>> triangulate(const Polygon& p);

/// Area of the intersection of two convex counterclockwise polygons (Sutherland-Hodgman).
double convex_intersection_area(std::span<const Vec2> a, std::span<const Vec2> b);

/// Area of the intersection of two simple polygons via triangulation.
double intersection_area(const Polygon& a, const Polygon& b);

/// Sum over boundary segment pairs of the collinear overlap length.
double shared_boundary_length(const Polygon& a, const Polygon& b, double eps = 1e-9);

/// True if the two boundaries come within eps of each other anywhere.
bool boundaries_touch(const Polygon& a, const Polygon& b, double eps = 1e-9);

// ---------------------------------------------------------------------------
// Convex hulls

/// Counterclockwise convex hull starting at the lexicographically smallest vertex.
/// Collinear boundary points and duplicates (within eps_geom) are dropped.
Polygon convex_hull_2d(std::span<const Vec2> points, const Tolerance& tol = {});

struct ConvexPolytope3 {
  std::vector<Vec3> vertices;            // lexicographically sorted
  std::vector<std::vector<int>> faces;   // counterclockwise seen from outside

  std::size_t edge_count() const;
  int euler_characteristic() const {
    return static_cast<int>(vertices.size()) - static_cast<int>(edge_count()) + static_cast<int>(faces.size());
  }
  Vec3 face_normal(std::size_t f) const;
};

ConvexPolytope3 convex_hull_3d(std::span<const Vec3> points, const Tolerance& tol = {});

template <int Dim>
PointList<Dim> dedupe_points(std::span<const Vec<Dim>> points, double eps);

// ---------------------------------------------------------------------------
// Halfspaces {x : <normal, x> <= offset}

template <int Dim>
struct Halfspace {
  Vec<Dim> normal;
  double offset;
};

Polygon halfspace_intersection_2d(std::span<const Halfspace<2>> halfspaces, const Tolerance& tol = {});
ConvexPolytope3 halfspace_intersection_3d(std::span<const Halfspace<3>> halfspaces, const Tolerance& tol = {});

/// Facet halfspaces of a hull, normals of unit length.
std::vector<Halfspace<2>> facet_halfspaces(const Polygon& convex);
std::vector<Halfspace<3>> facet_halfspaces(const ConvexPolytope3& hull);

// ---------------------------------------------------------------------------
// Hausdorff distances

/// sup_{a in A} inf_{b in B} |a - b|, early-break scan.
template <int Dim>
double directed_hausdorff(std::span<const Vec<Dim>> a, std::span<const Vec<Dim>> b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptySet, "Hausdorff distance of an empty set");
  // Visiting B in a fixed pseudo-random order makes the early break effective on ordered inputs.
  std::vector<std::size_t> order(b.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), std::mt19937_64(0x5eed));
  double cmax = 0.0;
  for (const auto& p : a) {
    double cmin = std::numeric_limits<double>::infinity();
    for (std::size_t j : order) {
      const double d = (p - b[j]).squaredNorm();
      if (d < cmax) {
        cmin = 0.0;
        break;
      }
      cmin = std::min(cmin, d);
    }
    cmax = std::max(cmax, cmin);
  }
  return std::sqrt(cmax);
}

template <int Dim>
double hausdorff_distance(std::span<const Vec<Dim>> a, std::span<const Vec<Dim>> b) {
  return std::max(directed_hausdorff<Dim>(a, b), directed_hausdorff<Dim>(b, a));
}

/// Points along the boundary, consecutive samples at most step apart; vertices included.
std::vector<Vec2> sample_boundary(const Polygon& p, double step);

/// Hausdorff distance between two polygon boundaries. One side is sampled at `step`,
/// the distance to the other side is exact, so the error is at most step / 2.
double hausdorff_boundary(const Polygon& a, const Polygon& b, double step);

/// Hausdorff distance between a finite point set and a polygon boundary sampled at `step`.
double hausdorff_points_boundary(std::span<const Vec2> points, const Polygon& p, double step);

// ---------------------------------------------------------------------------
// 3D cells

/// origin + edges * [0,1]^3, edges stored as columns.
struct Parallelepiped {
  Vec3 origin = Vec3::Zero();
  Eigen::Matrix3d edges = Eigen::Matrix3d::Identity();

  double volume() const { return std::abs(edges.determinant()); }
  Vec3 centroid() const { return origin + 0.5 * edges.rowwise().sum(); }
  std::array<Vec3, 8> corners() const;
  double diameter() const;
};

/// Area of the coplanar overlap of two faces (0 if the cells share no facet).
double shared_facet_area(const Parallelepiped& a, const Parallelepiped& b, double eps = 1e-9);

/// True if the two closed cells touch or overlap.
bool cells_touch(const Parallelepiped& a, const Parallelepiped& b, double eps = 1e-9);

/// Separating-axis test: true if the interiors overlap by more than eps along every axis.
bool interiors_overlap(const Parallelepiped& a, const Parallelepiped& b, double eps = 1e-9);

}  // namespace tilegrow
