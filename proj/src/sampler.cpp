#include "zigzag/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "zigzag/errors.hpp"

namespace zigzag {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed) ^ mix64(stream + kGoldenGamma))) {}

CounterRng::result_type CounterRng::operator()() {
    return mix64(key_ + (++counter_) * kGoldenGamma);
}

double CounterRng::uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

Sampler::Sampler(WeightScheme scheme, Point from, Point to, Rational q0, std::uint64_t seed)
    : from_(from), to_(to), q0_(std::move(q0)), seed_(seed), width_(to.i - from.i + 1) {
    if (!(q0_ > 0 && q0_ < 1))
        throw PreconditionError("Sampler: q must satisfy 0 < q < 1, got " + to_string(q0_));
    if (!dominates(to, from))
        throw DegenerateEnsemble("Sampler: no path from " + to_string(from) + " to " + to_string(to));

    const PartitionTable remaining(scheme, to, from, Direction::Backward);
    if (eval(remaining.at(from), q0_) == 0)
        throw DegenerateEnsemble("Sampler: Z vanishes at q = " + to_string(q0_));

    const int height = to.j - from.j + 1;
    exact_.assign(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height), Rational(0));
    threshold_.assign(exact_.size(), 0.0);
    for (int i = from.i; i <= to.i; ++i) {
        for (int j = from.j; j <= to.j; ++j) {
            const Point q{i, j};
            if (q == to)
                continue;
            const Rational here = eval(remaining.at(q), q0_);
            Rational p_h = 0;
            if (i < to.i && here != 0) {
                const Point right = q + Point{1, 0};
                p_h = eval(bond_weight(scheme, horizontal_bond_into(right)) * remaining.at(right), q0_) / here;
            }
            exact_[index(q)] = p_h;
            threshold_[index(q)] = to_double(p_h);
        }
    }
}

std::size_t Sampler::index(Point q) const noexcept {
    return static_cast<std::size_t>(q.j - from_.j) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(q.i - from_.i);
}

const Rational& Sampler::horizontal_probability(Point q) const {
    if (!(dominates(q, from_) && dominates(to_, q)))
        throw PreconditionError("horizontal_probability: " + to_string(q) + " outside the rectangle");
    return exact_[index(q)];
}

LatticePath Sampler::sample(std::uint64_t index_in_stream) const {
    CounterRng rng(seed_, index_in_stream);
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(path_length(from_, to_)));
    Point at = from_;
    while (at != to_) {
        // Along the top or right edge only one move remains; no draw is spent.
        Step s;
        if (at.i == to_.i)
            s = Step::V;
        else if (at.j == to_.j)
            s = Step::H;
        else
            s = rng.uniform() < threshold_[index(at)] ? Step::H : Step::V;
        steps.push_back(s);
        at = at + (s == Step::H ? Point{1, 0} : Point{0, 1});
    }
    return {from_, std::move(steps)};
}

std::vector<LatticePath> Sampler::sample_many(std::uint64_t first, std::uint64_t count, unsigned workers) const {
    std::vector<LatticePath> out(count);
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
    if (workers == 1) {
        for (std::uint64_t k = 0; k < count; ++k)
            out[k] = sample(first + k);
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t k = w; k < count; k += workers)
                out[k] = sample(first + k);
        });
    }
    for (auto& t : pool)
        t.join();
    return out;
}

CrossingEstimate estimate_crossing(const Sampler& sampler, Point q, std::uint64_t samples, unsigned workers) {
    if (samples < 1)
        throw PreconditionError("estimate_crossing needs at least one sample");
    std::uint64_t hits = 0;
    for (const auto& p : sampler.sample_many(0, samples, workers))
        hits += passes_through(p, q) ? 1 : 0;
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / n;
    return {p, std::sqrt(p * (1.0 - p) / n)};
}

} // namespace zigzag
