#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "segrekit/cr_manifold.hpp"

namespace segrekit {

using Rng = std::mt19937_64;

/// Gaussian rational with real and imaginary parts a/b, |a| <= span, 1 <= b <= span.
GaussianRational random_gaussian(Rng& rng, long span = 6);

/// ((1 - t^2) + 2t i) / (1 + t^2), a point of the unit circle in Q(i).
GaussianRational unit_gaussian(const mpq_class& t);
GaussianRational random_unit(Rng& rng);

/// Every term has equal exponents in z_k and ~z_k, so the manifold is invariant
/// under coordinatewise unit rotations and rho(z, ~w) depends only on z_k ~w_k.
bool hermitian_diagonal(const CRManifold& manifold);

/// Further rational points of M from the given ones: second intersections of
/// real secant lines and, for Hermitian-diagonal manifolds, torus rotations.
std::vector<Point> sample_manifold_points(const CRManifold& manifold, const std::vector<Point>& base,
                                          std::size_t count, Rng& rng);

/// g_j(z) = rho_j(z, conj w) over the manifold table (conjugate slots frozen).
std::vector<Poly> segre_equations(const CRManifold& manifold, const Point& w);

/// Points z in Q_w (d = 1): exact roots along coordinate lines, then complex secants
/// through points already found. Empty when nothing rational is reached.
std::vector<Point> sample_segre_points(const CRManifold& manifold, const Point& w, std::size_t count, Rng& rng);

/// Pairs (z, w) with z in Q_w; w ranges over M and, for Hermitian-diagonal
/// manifolds, over rescalings w_k / conj(l_k) paired with l_k z_k.
std::vector<std::pair<Point, Point>> sample_segre_pairs(const CRManifold& manifold, const std::vector<Point>& base,
                                                        std::size_t count, Rng& rng);

}  // namespace segrekit
