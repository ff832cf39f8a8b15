#include "zigzag/partition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "zigzag/errors.hpp"

namespace zigzag {

namespace {

const Point kRight{1, 0};
const Point kUp{0, 1};

bool in_unit_interval(const Rational& q0) {
    return q0 > 0 && q0 < 1;
}

void require_unit_interval(const Rational& q0, const char* who) {
    if (!in_unit_interval(q0))
        throw PreconditionError(std::string(who) + ": q must satisfy 0 < q < 1, got " + to_string(q0));
}

} // namespace

PartitionTable::PartitionTable(WeightScheme scheme, Point origin, Point corner, Direction direction)
    : scheme_(std::move(scheme)), origin_(origin), corner_(corner), direction_(direction) {
    const bool forward = direction == Direction::Forward;
    if (forward ? !dominates(corner, origin) : !dominates(origin, corner))
        throw PreconditionError("PartitionTable: corner " + to_string(corner) + " is not " +
                                (forward ? "above-right" : "below-left") + " of origin " + to_string(origin));
    width_ = std::abs(corner.i - origin.i) + 1;
    height_ = std::abs(corner.j - origin.j) + 1;
    values_.resize(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_));

    const int radius_max = std::abs(path_length(origin, corner));
    values_[index(origin)] = 1;
    for (int r = 1; r <= radius_max; ++r) {
        for (Point q : sphere(origin, r, direction)) {
            if (!contains(q))
                continue;
            LaurentPoly z;
            if (forward) {
                // Z(origin, q) = w(b_h) Z(origin, q_h) + w(b_v) Z(origin, q_v)
                if (contains(q - kRight))
                    z += bond_weight(scheme_, horizontal_bond_into(q)) * at(q - kRight);
                if (contains(q - kUp))
                    z += bond_weight(scheme_, vertical_bond_into(q)) * at(q - kUp);
            } else {
                if (contains(q + kRight))
                    z += bond_weight(scheme_, horizontal_bond_into(q + kRight)) * at(q + kRight);
                if (contains(q + kUp))
                    z += bond_weight(scheme_, vertical_bond_into(q + kUp)) * at(q + kUp);
            }
            values_[index(q)] = std::move(z);
        }
    }
}

bool PartitionTable::contains(Point q) const noexcept {
    const Point lo{std::min(origin_.i, corner_.i), std::min(origin_.j, corner_.j)};
    const Point hi{std::max(origin_.i, corner_.i), std::max(origin_.j, corner_.j)};
    return dominates(q, lo) && dominates(hi, q);
}

std::size_t PartitionTable::index(Point q) const noexcept {
    const int di = std::abs(q.i - origin_.i);
    const int dj = std::abs(q.j - origin_.j);
    return static_cast<std::size_t>(dj) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(di);
}

const LaurentPoly& PartitionTable::at(Point q) const {
    static const LaurentPoly zero;
    return contains(q) ? values_[index(q)] : zero;
}

LaurentPoly partition_dp(const WeightScheme& s, Point I, Point F) {
    if (!dominates(F, I))
        return {};
    return PartitionTable(s, I, F, Direction::Forward).at(F);
}

LaurentPoly partition_bruteforce(const WeightScheme& s, Point I, Point F) {
    LaurentPoly z;
    for (const auto& p : enumerate_paths(I, F))
        z += path_weight(s, p);
    return z;
}

LaurentPoly interface_closed_form(int n, int m) {
    if (n < 0 || m < 0)
        return {};
    const LaurentPoly numerator = qsquare_factorial_product(n + m);
    const LaurentPoly denominator = qsquare_factorial_product(n) * qsquare_factorial_product(m);
    try {
        return div_exact(numerator, denominator).shifted(static_cast<LaurentPoly::Exponent>(n) * (n + 1));
    } catch (const NotDivisible& e) {
        throw InternalIdentityFailure(std::string("interface_closed_form: ") + e.what());
    }
}

LaurentPoly interface_two_point(Point from, Point to) {
    return partition_dp(WeightScheme::interface(), from, to);
}

LaurentPoly translated_interface(Point I, Point F, Point P) {
    if (!(dominates(I, P) && dominates(F, I)))
        throw PreconditionError("translated_interface: need P <= I <= F, got P=" + to_string(P) + " I=" + to_string(I) +
                                " F=" + to_string(F));
    const auto horizontal = static_cast<LaurentPoly::Exponent>(F.i - I.i);
    return interface_two_point(I - P, F - P).shifted(2 * static_cast<LaurentPoly::Exponent>(P.i + P.j) * horizontal);
}

PinnedInstance PinnedInstance::make(int K, int L, int N) {
    PinnedInstance inst{K, L, N, K + L + 1 - N};
    inst.validate();
    return inst;
}

void PinnedInstance::validate() const {
    if (K < 0 || L < 0)
        throw PreconditionError("pinned instance needs K >= 0 and L >= 0");
    if (N < 0 || N > K + L + 1)
        throw PreconditionError("pinned instance needs 0 <= N <= K+L+1, got N=" + std::to_string(N));
    if (N + M != K + L + 1)
        throw PreconditionError("pinned instance needs N + M = K + L + 1");
}

LaurentPoly pinned_rep1(const PinnedInstance& inst) {
    inst.validate();
    return partition_dp(WeightScheme::rep1(inst.K, inst.L), {0, 0}, {inst.N, inst.M});
}

LaurentPoly pinned_rep2(const PinnedInstance& inst) {
    inst.validate();
    const auto scheme = WeightScheme::rep2();
    const Point origin{0, 0};
    const int depth = inst.L + 1;
    const PartitionTable incoming(scheme, origin, {-depth, -depth}, Direction::Backward);
    const PartitionTable outgoing(scheme, origin, {inst.K, inst.K}, Direction::Forward);

    // `a` horizontal steps before the origin, N - a after it.
    LaurentPoly z;
    for (int a = 0; a <= std::min(depth, inst.N); ++a) {
        const int b = inst.N - a;
        if (b > inst.K)
            continue;
        const Point start{-a, -(depth - a)};
        const Point end{b, inst.K - b};
        z += incoming.at(start) * outgoing.at(end);
    }
    return z;
}

LaurentPoly pinned_via_convolution(const PinnedInstance& inst) {
    inst.validate();
    LaurentPoly z;
    for (int n = 0; n <= inst.N; ++n) {
        const int np = inst.N - n;
        const LaurentPoly left = interface_closed_form(np - 1, inst.L - np + 1) + interface_closed_form(np, inst.L - np);
        z += interface_closed_form(n, inst.K - n) * left;
    }
    return z;
}

namespace {

IdentityReport make_report(std::string identity, const PinnedInstance& inst, LaurentPoly lhs, LaurentPoly rhs,
                           std::string note = {}) {
    IdentityReport r;
    r.identity = std::move(identity);
    r.parameters = {{"K", inst.K}, {"L", inst.L}, {"N", inst.N}, {"M", inst.M}};
    r.holds = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.note = std::move(note);
    return r;
}

} // namespace

IdentityReport verify_rec1_with(const WeightScheme& s, int N, int M) {
    if (N < 1 || M < 1)
        throw PreconditionError("rec1 needs N >= 1 and M >= 1");
    const PartitionTable table(s, {0, 0}, {N, M}, Direction::Forward);
    IdentityReport r;
    r.identity = "rec1";
    r.parameters = {{"N", N}, {"M", M}};
    r.lhs = table.at({N, M});
    r.rhs = table.at({N - 1, M}) + table.at({N, M - 1});
    r.holds = r.lhs == r.rhs;
    r.note = "scheme " + s.name() + "; right side uses the same weights to the interior endpoints";
    return r;
}

IdentityReport verify_rec1(const PinnedInstance& inst) {
    inst.validate();
    auto r = verify_rec1_with(WeightScheme::rep1(inst.K, inst.L), inst.N, inst.M);
    r.parameters = {{"K", inst.K}, {"L", inst.L}, {"N", inst.N}, {"M", inst.M}};
    r.note = "fixed-weights reading: Z(N-1,M) and Z(N,M-1) are rep1(K,L) partition functions to the interior "
             "endpoints; the last bond into (N,M) has weight 1";
    return r;
}

IdentityReport rec1_repinned_reading(const PinnedInstance& inst, bool shorten_left) {
    inst.validate();
    if (inst.N < 1 || inst.M < 1)
        throw PreconditionError("rec1 needs N >= 1 and M >= 1");
    const int K = shorten_left ? inst.K : inst.K - 1;
    const int L = shorten_left ? inst.L - 1 : inst.L;
    LaurentPoly rhs;
    if (K >= 0 && L >= 0) {
        rhs = pinned_rep1(PinnedInstance{K, L, inst.N - 1, inst.M}) + pinned_rep1(PinnedInstance{K, L, inst.N, inst.M - 1});
    }
    std::string note = std::string("re-pinned reading: right side on the chain [") + std::to_string(-L) + "," +
                       std::to_string(K) + "]";
    if (K < 0 || L < 0)
        note += " (empty chain, right side taken as 0)";
    return make_report(shorten_left ? "rec1-repinned-left" : "rec1-repinned-right", inst, pinned_rep1(inst),
                       std::move(rhs), std::move(note));
}

IdentityReport verify_rec2(const PinnedInstance& inst) {
    inst.validate();
    LaurentPoly rhs;
    for (int n = 0; n <= inst.K; ++n) {
        const int m = inst.K - n;
        rhs += interface_closed_form(n, m) * (interface_closed_form(inst.N - n, inst.M - m - 1) +
                                               interface_closed_form(inst.N - n - 1, inst.M - m));
    }
    return make_report("rec2", inst, pinned_rep1(inst), std::move(rhs));
}

IdentityReport verify_convolution(const PinnedInstance& inst) {
    return make_report("pf", inst, pinned_rep2(inst), pinned_via_convolution(inst),
                       "Z_q(n,m) = 0 when n < 0 or m < 0");
}

IdentityReport verify_representations(const PinnedInstance& inst) {
    return make_report("rep1-rep2", inst, pinned_rep1(inst), pinned_rep2(inst));
}

IdentityReport verify_translation(Point I, Point F, Point P) {
    IdentityReport r;
    r.identity = "TF";
    r.parameters = {{"I.i", I.i}, {"I.j", I.j}, {"F.i", F.i}, {"F.j", F.j}, {"P.x", P.i}, {"P.y", P.j}};
    r.lhs = interface_two_point(I, F);
    r.rhs = translated_interface(I, F, P);
    r.holds = r.lhs == r.rhs;
    return r;
}

std::vector<std::pair<int, Rational>> pinning_distribution(const PinnedInstance& inst, const Rational& q0) {
    inst.validate();
    require_unit_interval(q0, "pinning_distribution");
    const auto scheme = WeightScheme::rep1(inst.K, inst.L);
    const Point far{inst.N, inst.M};
    const PartitionTable from_origin(scheme, {0, 0}, far, Direction::Forward);
    const PartitionTable to_far(scheme, far, {0, 0}, Direction::Backward);
    const Rational total = eval(from_origin.at(far), q0);

    std::vector<std::pair<int, Rational>> out;
    for (int n = std::max(0, inst.K - inst.M); n <= std::min(inst.N, inst.K); ++n) {
        const Point crossing{n, inst.K - n};
        out.emplace_back(n, eval(from_origin.at(crossing) * to_far.at(crossing), q0) / total);
    }
    return out;
}

AverageReport verify_average_representation(const PinnedInstance& inst, const Rational& q0) {
    inst.validate();
    require_unit_interval(q0, "verify_average_representation");
    AverageReport rep;
    rep.instance = inst;
    rep.q0 = q0;
    rep.lhs = eval(pinned_rep2(inst), q0);

    const int sites = inst.sites();
    const auto shift = -2 * static_cast<LaurentPoly::Exponent>(inst.K + 1);

    // Canonical ensemble of the interface chain on sites t = 1..N+M,
    // configuration weight q^{2 sum t alpha_t}.
    LaurentPoly partition;
    LaurentPoly weighted;
    for (std::uint32_t mask = 0; mask < (1u << sites); ++mask) {
        if (std::popcount(mask) != inst.N)
            continue;
        LaurentPoly::Exponent energy = 0;
        LaurentPoly::Exponent tail = 0;
        for (int t = 1; t <= sites; ++t) {
            if (mask & (1u << (t - 1))) {
                energy += 2 * t;
                if (t > inst.K)
                    ++tail;
            }
        }
        partition += LaurentPoly::monomial(energy);
        weighted += LaurentPoly::monomial(energy + shift * tail);
    }
    rep.interface_partition = eval(partition, q0);
    rep.average = eval(weighted, q0) / rep.interface_partition;
    rep.rhs = rep.interface_partition * rep.average;
    rep.holds = rep.lhs == rep.rhs;
    if (!rep.holds && rep.rhs != 0)
        rep.ratio = Rational(rep.lhs / rep.rhs);

    // Intermediate steps of the derivation, each checked exactly.
    const Point far{inst.N, inst.M};
    bool first = true;
    bool second = true;
    LaurentPoly through_point;
    for (int n = 0; n <= inst.N; ++n) {
        const int np = inst.N - n;
        const LaurentPoly lhs1 = interface_closed_form(np - 1, inst.L + 1 - np);
        const LaurentPoly rhs1 =
            np >= 1 ? interface_two_point({inst.N - np + 1, inst.M - inst.L - 1 + np}, far).shifted(shift * (np - 1))
                    : LaurentPoly{};
        first = first && lhs1 == rhs1;
        const LaurentPoly lhs2 = interface_closed_form(np, inst.L - np);
        const LaurentPoly rhs2 =
            np <= inst.L ? interface_two_point({inst.N - np, inst.M - inst.L + np}, far).shifted(shift * np)
                         : LaurentPoly{};
        second = second && lhs2 == rhs2;
        if (n <= inst.K)
            through_point += interface_closed_form(n, inst.K - n) * interface_two_point({n, inst.K - n}, far).shifted(shift * np);
    }
    rep.translation_first_term = first;
    rep.translation_second_term = second;
    rep.through_point_form = through_point == pinned_rep2(inst);

    const Rational zq = eval(interface_closed_form(inst.N, inst.M), q0);
    for (int n = std::max(0, inst.K - inst.M); n <= std::min(inst.N, inst.K); ++n) {
        const Point crossing{n, inst.K - n};
        rep.interface_distribution.emplace_back(
            n, eval(interface_closed_form(n, inst.K - n) * interface_two_point(crossing, far), q0) / zq);
    }

    // The printed law uses Z_q(n, n-N) and Z_q(n, n-N; N, M).
    Rational literal_norm = 0;
    Rational literal_sum = 0;
    for (int n = 0; n <= inst.N; ++n) {
        const Point crossing{n, n - inst.N};
        const Rational weight = eval(interface_closed_form(n, n - inst.N) * interface_two_point(crossing, far), q0);
        literal_norm += weight;
        literal_sum += weight * eval(LaurentPoly::monomial(shift * (inst.N - n)), q0);
    }
    if (literal_norm != 0)
        rep.literal_distribution_value = Rational(zq * literal_sum / literal_norm);
    return rep;
}

} // namespace zigzag
