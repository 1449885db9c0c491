#include "tilegrow/gridform.hpp"

#include <cmath>

namespace tilegrow {

namespace {

int sign(double v, double eps) { return v > eps ? 1 : (v < -eps ? -1 : 0); }

}  // namespace

GridFormTables2D tables_2d(const GridSpec& spec, const Tolerance& tol) {
  if (spec.d != 2) throw Error(ErrorKind::MethodMismatch, "planar tables need a planar grid");
  spec.validate(tol);
  const int N = spec.N();
  GridFormTables2D t;
  t.N = N;
  t.alpha = Eigen::MatrixXd::Zero(N, N);
  t.delta = Eigen::MatrixXd::Zero(N, N);
  t.D = Eigen::MatrixXd::Zero(N, N);
  t.epsilon = Eigen::MatrixXi::Zero(N, N);
  t.Delta = Eigen::VectorXd::Zero(N);
  t.upsilon = Eigen::Matrix2Xd::Zero(2, N);
  for (int i = 0; i < N; ++i) {
    const Vec2 gi = spec.vectors.col(i);
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      const Vec2 gj = spec.vectors.col(j);
      t.alpha(i, j) = std::acos(std::min(1.0, std::abs(gi.dot(gj))));
      t.D(i, j) = cross2(gi, gj);
      t.epsilon(i, j) = sign(t.D(i, j), 0.0);
      if (t.epsilon(i, j) == 0 || std::abs(t.D(i, j)) <= tol.eps_geom)
        throw Error(ErrorKind::ParallelGridVectors,
                    "g_" + std::to_string(i) + " and g_" + std::to_string(j) + " are parallel");
      // |sin alpha_ij| equals |det(g_i, g_j)| for unit vectors.
      t.delta(i, j) = 1.0 / std::abs(t.D(i, j));
      t.Delta[i] += 1.0 / t.delta(i, j);
      t.upsilon.col(i) += t.epsilon(i, j) * gj / t.delta(i, j);
    }
  }
  return t;
}

GridFormTables3D tables_3d(const GridSpec& spec, const Tolerance& tol) {
  if (spec.d != 3) throw Error(ErrorKind::MethodMismatch, "spatial tables need a spatial grid");
  spec.validate(tol);
  const int N = spec.N();
  GridFormTables3D t;
  t.N = N;
  const std::size_t n2 = static_cast<std::size_t>(N * N), n3 = n2 * static_cast<std::size_t>(N);
  t.h.assign(n2, Vec3::Zero());
  t.Delta.assign(n2, 0.0);
  t.upsilon.assign(n2, Vec3::Zero());
  t.alpha.assign(n3, 0.0);
  t.delta.assign(n3, std::numeric_limits<double>::infinity());
  t.D.assign(n3, 0.0);
  t.epsilon.assign(n3, 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      const Vec3 h = Vec3(spec.vectors.col(i)).cross(Vec3(spec.vectors.col(j)));
      t.h[t.pair(i, j)] = h;
      const double hn = h.norm();
      for (int k = 0; k < N; ++k) {
        if (k == i || k == j) continue;
        const Vec3 gk = spec.vectors.col(k);
        const double hg = h.dot(gk);  // equals det(g_i, g_j, g_k)
        const std::size_t q = t.triple(i, j, k);
        t.D[q] = hg;
        t.alpha[q] = std::asin(std::clamp(hg / hn, -1.0, 1.0));
        t.epsilon[q] = sign(hg, tol.eps_geom);
        // A plane family parallel to l_ij never meets it and contributes nothing.
        if (t.epsilon[q] == 0) continue;
        t.delta[q] = hn / std::abs(hg);
        t.Delta[t.pair(i, j)] += 1.0 / t.delta[q];
        t.upsilon[t.pair(i, j)] += t.epsilon[q] * gk / t.delta[q];
      }
      if (!(t.Delta[t.pair(i, j)] > 0.0))
        throw Error(ErrorKind::DegenerateTriple, "line g_" + std::to_string(i) + " x g_" + std::to_string(j) +
                                                     " is parallel to every other grid plane");
    }
  return t;
}

GrowthForm growth_form_formula_2d(const GridSpec& spec, const Tolerance& tol) {
  const auto t = tables_2d(spec, tol);
  std::vector<Vec2> pts;
  for (int i = 0; i < t.N; ++i) {
    const Vec2 v = t.upsilon.col(i) / t.Delta[i];
    pts.push_back(v);
    pts.push_back(-v);
  }
  // Coinciding candidates are merged at form resolution before the hull.
  return GrowthForm::from_points(dedupe_points<2>(pts, tol.eps_form), Provenance::GridFormula2D, tol);
}

GrowthForm growth_form_formula_3d(const GridSpec& spec, const Tolerance& tol) {
  const auto t = tables_3d(spec, tol);
  std::vector<Vec3> pts;
  for (int i = 0; i < t.N; ++i)
    for (int j = i + 1; j < t.N; ++j) {
      const Vec3 v = t.upsilon[t.pair(i, j)] / t.Delta[t.pair(i, j)];
      pts.push_back(v);
      pts.push_back(-v);
    }
  return GrowthForm::from_points(dedupe_points<3>(pts, tol.eps_form), Provenance::GridFormula3D, tol);
}

GrowthForm growth_form_orthoplex(const GridSpec& spec, const Tolerance& tol) {
  spec.validate(tol);
  const int N = spec.N(), d = spec.d;
  if (N > 16) throw Error(ErrorKind::TooManyGridVectors, "sign-pattern enumeration is limited to N <= 16");
  const Eigen::MatrixXd& G = spec.vectors;
  const Eigen::MatrixXd GGt = G * G.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(GGt);
  const auto sv = svd.singularValues();
  const double cond = sv[0] / sv[sv.size() - 1];
  if (!(cond <= 1e8)) throw Error(ErrorKind::NumericallySingular, "G G^T is ill-conditioned");

  // sum_i |<g_i, y>| <= 1 is the set of halfspaces <a_s, y> <= 1 with a_s = sum_i s_i g_i over
  // all sign patterns s. Only the vertices of the zonotope spanned by the a_s are needed.
  const std::size_t patterns = std::size_t(1) << N;
  if (d == 2) {
    std::vector<Vec2> normals;
    normals.reserve(patterns);
    for (std::size_t s = 0; s < patterns; ++s) {
      Vec2 a = Vec2::Zero();
      for (int i = 0; i < N; ++i) a += ((s >> i) & 1 ? 1.0 : -1.0) * Vec2(G.col(i));
      normals.push_back(a);
    }
    const Polygon zono = convex_hull_2d(normals, tol);
    std::vector<Halfspace<2>> hs;
    for (const auto& a : zono.vertices) hs.push_back({a, 1.0});
    const Polygon section = halfspace_intersection_2d(hs, tol);
    std::vector<Vec2> pts;
    for (const auto& y : section.vertices) pts.push_back(GGt * y);
    return GrowthForm::from_points(pts, Provenance::OrthoplexSection, tol);
  }
  std::vector<Vec3> normals;
  normals.reserve(patterns);
  for (std::size_t s = 0; s < patterns; ++s) {
    Vec3 a = Vec3::Zero();
    for (int i = 0; i < N; ++i) a += ((s >> i) & 1 ? 1.0 : -1.0) * Vec3(G.col(i));
    normals.push_back(a);
  }
  const ConvexPolytope3 zono = convex_hull_3d(normals, tol);
  std::vector<Halfspace<3>> hs;
  for (const auto& a : zono.vertices) hs.push_back({a, 1.0});
  const ConvexPolytope3 section = halfspace_intersection_3d(hs, tol);
  std::vector<Vec3> pts;
  for (const auto& y : section.vertices) pts.push_back(GGt * y);
  return GrowthForm::from_points(pts, Provenance::OrthoplexSection, tol);
}

}  // namespace tilegrow
