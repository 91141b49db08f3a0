#pragma once

#include <cstddef>
#include <random>

#include "hypkonvex/even_fn.hpp"
#include "hypkonvex/mobius.hpp"
#include "hypkonvex/shapes.hpp"

namespace hypkonvex::rnd {

using Rng = std::mt19937_64;

/// R(phi1) diag(sigma, 1/sigma) R(phi2) with sigma^2 log-uniform in [1, max_condition].
Ellipse random_ellipse(Rng& rng, double max_condition = 20.0);

/// Symmetric hull of 2..6 random pairs +-r u(phi) with log-normal radii.
Polygon random_polygon(Rng& rng);

/// Support function of a random ellipse or polygon (equal odds), tagged.
EvenFn random_body(Rng& rng, std::size_t M);

/// a0 + sum over even n in [2, degree] of (a_n cos n theta + b_n sin n theta),
/// coefficients standard normal divided by n. With mean_zero the constant term is 0.
EvenFn random_band_limited(Rng& rng, std::size_t M, int degree, bool mean_zero);

/// R(phi1) T_s R(phi2) with operator norm e^{s/2} <= max_norm.
mobius::Mobius random_mobius(Rng& rng, double max_norm = 3.0);

/// x uniform in [-2, 2], log y uniform in [-2, 2].
mobius::HalfPlanePoint random_half_plane_point(Rng& rng);

}  // namespace hypkonvex::rnd
