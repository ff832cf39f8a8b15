#pragma once

// Exact sampling from Prob(p) = w(p) / Z(I, F) by sequential steps driven by
// a backward partition table, and Monte Carlo crossing estimates built on it.

#include <cstdint>
#include <limits>
#include <vector>

#include "zigzag/lattice.hpp"
#include "zigzag/partition.hpp"
#include "zigzag/qpoly.hpp"
#include "zigzag/weights.hpp"

namespace zigzag {

/// Counter-based generator: output k of stream s under seed is a SplitMix64
/// finalizer applied to a key derived from (seed, s) plus k times the golden
/// gamma. Distinct streams never share state, so sample i can be drawn on any
/// worker and still come out identical.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

class Sampler {
public:
    /// Throws DegenerateEnsemble when Z(I, F) vanishes at q0 (or F does not
    /// dominate I) and PreconditionError unless 0 < q0 < 1.
    Sampler(WeightScheme scheme, Point from, Point to, Rational q0, std::uint64_t seed);

    Point from() const noexcept { return from_; }
    Point to() const noexcept { return to_; }
    const Rational& q0() const noexcept { return q0_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// Exact probability of a horizontal step out of q.
    const Rational& horizontal_probability(Point q) const;

    /// Sample number `index` of this sampler's stream.
    LatticePath sample(std::uint64_t index) const;

    /// The next sample of the stream.
    LatticePath next() { return sample(cursor_++); }

    /// Samples first..first+count-1, split over `workers` threads.
    std::vector<LatticePath> sample_many(std::uint64_t first, std::uint64_t count, unsigned workers = 1) const;

private:
    std::size_t index(Point q) const noexcept;

    Point from_;
    Point to_;
    Rational q0_;
    std::uint64_t seed_;
    std::uint64_t cursor_ = 0;
    int width_;
    std::vector<Rational> exact_;
    std::vector<double> threshold_;
};

struct CrossingEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;
};

/// Fraction of samples 0..samples-1 passing through q, with the binomial
/// standard error sqrt(p(1-p)/n).
CrossingEstimate estimate_crossing(const Sampler& sampler, Point q, std::uint64_t samples, unsigned workers = 1);

} // namespace zigzag
