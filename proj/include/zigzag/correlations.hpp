#pragma once

// Crossing probabilities of weighted path ensembles.

#include <utility>
#include <vector>

#include "zigzag/lattice.hpp"
#include "zigzag/partition.hpp"
#include "zigzag/qpoly.hpp"
#include "zigzag/weights.hpp"

namespace zigzag {

struct CorrelationQuery {
    WeightScheme scheme;
    Point from;
    Point to;
    std::vector<Point> waypoints;
};

/// Z(I, F | Q1; ...; Qr) = Z(I, Q1) Z(Q1, Q2) ... Z(Qr, F). Any segment whose
/// end does not dominate its start makes the product 0.
LaurentPoly conditioned_partition(const CorrelationQuery& query);

/// conditioned_partition / Z(I, F) at q0. Throws DegenerateEnsemble when
/// Z(I, F) vanishes at q0 and PreconditionError unless 0 < q0 < 1.
Rational crossing_probability(const CorrelationQuery& query, const Rational& q0);

/// Probability that site x of the pinned chain carries a down spin, for
/// every x in [-L, K]. Each site is an H step of the rep1 path; its
/// probability is the sum of two-point crossing probabilities over the bonds
/// of the corresponding sphere.
std::vector<std::pair<int, Rational>> magnetization_profile(const PinnedInstance& inst, const Rational& q0);

} // namespace zigzag
