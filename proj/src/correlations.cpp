#include "zigzag/correlations.hpp"

#include "zigzag/errors.hpp"

namespace zigzag {

LaurentPoly conditioned_partition(const CorrelationQuery& query) {
    LaurentPoly z = 1;
    Point at = query.from;
    for (Point q : query.waypoints) {
        if (!dominates(q, at))
            return {};
        z *= partition_dp(query.scheme, at, q);
        at = q;
    }
    if (!dominates(query.to, at))
        return {};
    return z * partition_dp(query.scheme, at, query.to);
}

Rational crossing_probability(const CorrelationQuery& query, const Rational& q0) {
    if (!(q0 > 0 && q0 < 1))
        throw PreconditionError("crossing_probability: q must satisfy 0 < q < 1, got " + to_string(q0));
    const Rational total = eval(partition_dp(query.scheme, query.from, query.to), q0);
    if (total == 0)
        throw DegenerateEnsemble("crossing_probability: Z" + to_string(query.from) + "->" + to_string(query.to) +
                                 " vanishes");
    return eval(conditioned_partition(query), q0) / total;
}

std::vector<std::pair<int, Rational>> magnetization_profile(const PinnedInstance& inst, const Rational& q0) {
    inst.validate();
    const Point far{inst.N, inst.M};
    const auto scheme = WeightScheme::rep1(inst.K, inst.L);

    std::vector<std::pair<int, Rational>> out;
    for (int x = -inst.L; x <= inst.K; ++x) {
        // Site x is visited by step t; sites 1..K come first, then -L..0.
        const int t = x >= 1 ? x : x + inst.L + inst.K + 1;
        Rational p = 0;
        for (Point q : sphere({0, 0}, t - 1, Direction::Forward)) {
            const Point next = q + Point{1, 0};
            if (!dominates(far, next))
                continue;
            p += crossing_probability({scheme, {0, 0}, far, {q, next}}, q0);
        }
        out.emplace_back(x, p);
    }
    return out;
}

} // namespace zigzag
