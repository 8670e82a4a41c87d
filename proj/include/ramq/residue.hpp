#pragma once

#include "ramq/rational.hpp"

namespace ramq {

/// Weight e^{inz} z^s log^m z multiplying f(z).
struct WeightParams {
  double n = 0.0;
  Complex s = 0.0;
  int m = 0;
};

/// Extra jet order beyond multiplicity - 1 carried in residue extraction.
inline constexpr int kResidueGuardOrder = 2;

/**
 * Residue of e^{inz} f(z) z^s log^m z at an upper-half-plane pole, with the
 * log branch -pi/2 < arg z <= 3pi/2. The analytic part
 * alpha(z) = (z - z0)^mult * integrand is expanded as a jet about z0 and its
 * coefficient of (z - z0)^(mult-1) is returned.
 */
Complex residue_at(const RationalFunction& f, const Pole& pole, const WeightParams& w);

/// 2 pi i times the sum of residues over all upper-half-plane poles.
Complex residue_sum(const RationalFunction& f, const WeightParams& w);

/// Half the distance to the nearest other pole, capped at 0.5 Im(z0).
double default_oracle_radius(const RationalFunction& f, const Pole& pole);

struct ContourOracleOptions {
  double rel_tol = 1e-13;
  int min_points = 16;
  int max_points = 1 << 16;
};

/**
 * Independent residue estimate: (1/2 pi i) times the contour integral over a
 * circle about the pole, by the trapezoid rule with the number of nodes
 * doubled until two successive values agree. Uses the principal log directly.
 * Throws RadiusTooLarge if another pole lies within 2 * radius.
 */
Complex contour_oracle(const RationalFunction& f, const Pole& pole, const WeightParams& w, double radius,
                       const ContourOracleOptions& options = {});

}  // namespace ramq
