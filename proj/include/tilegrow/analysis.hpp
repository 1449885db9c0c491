#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tilegrow/growth_form.hpp"
#include "tilegrow/tiling.hpp"

namespace tilegrow {

/// Convergence of the scaled shells P_n / n, taken relative to the seed centroid.
struct ConvergenceReport {
  std::vector<int> n;
  std::vector<long> count;                  // |P_n|
  std::vector<double> d_successive;         // between hulls at n[k] and n[k + 1]
  std::vector<double> d_to_candidate;       // empty without a candidate
  double fitted_C = 0.0;                    // least squares d ~ C / n
};

struct GrowthEstimate {
  GrowthForm form;                   // hull at the largest n
  ConvergenceReport report;
  std::vector<Polygon> hulls;        // per n
  std::vector<std::vector<Vec2>> scaled_shells;
};

/// Hausdorff distance between polygon boundaries after moving both area centroids to the
/// origin.
double recentred_hausdorff(const Polygon& a, const Polygon& b, double step);

/// Boundary sampling step used for form comparisons at unit scale.
inline constexpr double kCompareStep = 1e-3;

GrowthEstimate estimate_growth_form(const Patch<2>& patch, std::span<const int> seeds, std::vector<int> n_list,
                                    const GrowthForm* candidate = nullptr, const Tolerance& tol = {});

/// Largest distance from a point of the hull boundary (sampled at step) to the point set.
/// Throws DegenerateHull for fewer than three points or collinear points.
double nonconvexity_measure(std::span<const Vec2> points, double step = kCompareStep, const Tolerance& tol = {});

struct NoGrowthReport {
  std::vector<int> n;
  std::vector<double> ratio;   // max x over P_n / n, relative to the seed
  double range = 0.0;          // max ratio - min ratio
  double gap = 0.0;
  bool non_convergent = false; // range > gap
};

/// Throws InsufficientSamples for fewer than two shell indices.
NoGrowthReport detect_no_growth_form(const Patch<2>& patch, std::span<const int> seeds, std::vector<int> n_list,
                                     double gap);

/// Drops vertices of a convex polygon while the dropped vertex is within tol of the chord
/// joining its neighbours, smallest deviation first.
Polygon simplify_convex(const Polygon& p, double tol);

struct SquareFit {
  Polygon simplified;
  double edge_spread = 0.0;  // (max - min) / mean edge length of the simplified hull
  double scale = 0.0;        // s minimising Hausdorff(hull, s * reference)
  double hausdorff = 0.0;
};

/// Compares a hull with scaled copies of reference over s in (0, max_scale].
SquareFit fit_square(const Polygon& hull, const Polygon& reference, double simplify_tol, double max_scale = 4.0,
                     double step = kCompareStep);

/// Golden ratio.
inline const double kTau = (1.0 + std::sqrt(5.0)) / 2.0;

struct HatParams {
  double b = 0.0;
  double tau = kTau;
  double area_tile = 0.0;
  double area_growth = 0.0;
  double edge_length = 0.0;
  std::optional<double> tilt;
};

/// Throws InvalidB unless b > 0 and b != 1.
HatParams hat_params(double b);

}  // namespace tilegrow
