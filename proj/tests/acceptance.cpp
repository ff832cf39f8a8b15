// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "zigzag/correlations.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/partition.hpp"
#include "zigzag/sampler.hpp"
#include "zigzag/spin.hpp"

using namespace zigzag;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome closed_form_equivalence() {
    long checked = 0;
    for (int n = 0; n <= 8; ++n)
        for (int m = 0; m <= 8; ++m) {
            const auto cf = interface_closed_form(n, m);
            const auto dp = partition_dp(WeightScheme::interface(), {0, 0}, {n, m});
            const auto bf = partition_bruteforce(WeightScheme::interface(), {0, 0}, {n, m});
            ++checked;
            if (cf != dp || dp != bf)
                return {false, "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m)};
        }
    return {true, std::to_string(checked) + " rectangles, 0<=n,m<=8"};
}

Outcome triple_agreement() {
    long checked = 0;
    for (int L = 0; L <= 4; ++L)
        for (int K = 0; K <= 4; ++K)
            for (int N = 0; N <= L + K + 1; ++N) {
                const auto inst = PinnedInstance::make(K, L, N);
                const auto norm = norm_squared(L, K, N);
                ++checked;
                if (norm != pinned_rep1(inst) || norm != pinned_rep2(inst))
                    return {false, "mismatch at L=" + std::to_string(L) + " K=" + std::to_string(K) +
                                       " N=" + std::to_string(N)};
            }
    const bool spot = norm_squared(1, 1, 1) == LaurentPoly::from_terms({{0, 1}, {2, 2}});
    return {spot, std::to_string(checked) + " sectors, 0<=L,K<=4; L=K=N=1 gives " + norm_squared(1, 1, 1).to_string()};
}

Outcome identity_suite() {
    long rec1 = 0;
    long others = 0;
    long repinned_failures = 0;
    for (int K = 0; K <= 4; ++K)
        for (int L = 0; L <= 4; ++L)
            for (int N = 0; N <= K + L + 1; ++N) {
                const auto inst = PinnedInstance::make(K, L, N);
                for (const auto& r : {verify_convolution(inst), verify_rec2(inst)}) {
                    ++others;
                    if (!r.holds)
                        return {false, r.identity + " fails at K=" + std::to_string(K) + " L=" + std::to_string(L) +
                                           " N=" + std::to_string(N)};
                }
                if (N >= 1 && inst.M >= 1) {
                    const auto r = verify_rec1(inst);
                    ++rec1;
                    if (!r.holds)
                        return {false, "rec1 (fixed rep1 weights) fails at K=" + std::to_string(K) +
                                           " L=" + std::to_string(L) + " N=" + std::to_string(N)};
                    for (bool left : {true, false})
                        repinned_failures += rec1_repinned_reading(inst, left).holds ? 0 : 1;
                }
            }
    std::ostringstream d;
    d << others << " pf/rec2 checks, " << rec1 << " rec1 checks under fixed rep1 weights; re-pinned reading fails "
      << repinned_failures << "/" << 2 * rec1;
    return {true, d.str()};
}

Outcome translation() {
    long checked = 0;
    for (int Pi = -3; Pi <= 3; ++Pi)
        for (int Pj = -3; Pj <= 3; ++Pj)
            for (int Ii = Pi; Ii <= 3; ++Ii)
                for (int Ij = Pj; Ij <= 3; ++Ij)
                    for (int Fi = Ii; Fi <= 3; ++Fi)
                        for (int Fj = Ij; Fj <= 3; ++Fj) {
                            ++checked;
                            if (!verify_translation({Ii, Ij}, {Fi, Fj}, {Pi, Pj}).holds)
                                return {false, "fails at I=" + to_string(Point{Ii, Ij}) + " F=" +
                                                   to_string(Point{Fi, Fj}) + " P=" + to_string(Point{Pi, Pj})};
                        }
    return {true, std::to_string(checked) + " (I,F,P) triples in [-3,3]^2"};
}

// Path-enumeration check of the factorization Z(I,F|Q) = Z(I,Q) Z(Q,F), its
// two-point version, and the sphere decomposition Z(I,F) = sum_Q Z(I,F|Q).
bool markov_on_rectangle(const WeightScheme& s, Point I, Point F, bool pairs) {
    std::map<Point, LaurentPoly> through;
    std::map<std::pair<Point, Point>, LaurentPoly> through_pair;
    LaurentPoly total;
    for (const auto& p : enumerate_paths(I, F)) {
        const auto w = path_weight(s, p);
        total += w;
        const auto pts = p.points();
        for (std::size_t a = 0; a < pts.size(); ++a) {
            through[pts[a]] += w;
            if (pairs)
                for (std::size_t b = a + 1; b < pts.size(); ++b)
                    through_pair[{pts[a], pts[b]}] += w;
        }
    }
    for (int l = 0; l <= path_length(I, F); ++l) {
        LaurentPoly sum;
        for (Point q : sphere(I, l, Direction::Forward)) {
            const auto conditioned = conditioned_partition({s, I, F, {q}});
            const auto it = through.find(q);
            const LaurentPoly enumerated = it == through.end() ? LaurentPoly() : it->second;
            if (conditioned != enumerated)
                return false;
            sum += conditioned;
        }
        if (sum != total)
            return false;
    }
    if (pairs)
        for (int a = I.i; a <= F.i; ++a)
            for (int b = I.j; b <= F.j; ++b)
                for (int c = a; c <= F.i; ++c)
                    for (int d = b; d <= F.j; ++d) {
                        const Point q{a, b};
                        const Point r{c, d};
                        if (q == r)
                            continue;
                        const auto it = through_pair.find({q, r});
                        const LaurentPoly enumerated = it == through_pair.end() ? LaurentPoly() : it->second;
                        if (conditioned_partition({s, I, F, {q, r}}) != enumerated)
                            return false;
                    }
    return true;
}

Outcome markov_laws() {
    struct Case {
        WeightScheme scheme;
        Point origin;
    };
    const std::vector<Case> cases = {
        {WeightScheme::interface(), {0, 0}}, {WeightScheme::rep1(5, 5), {0, 0}}, {WeightScheme::rep2(), {-3, -3}}};
    long rectangles = 0;
    for (const auto& c : cases)
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; b <= 5; ++b) {
                ++rectangles;
                const Point F = c.origin + Point{a, b};
                if (!markov_on_rectangle(c.scheme, c.origin, F, a == 5 && b == 5))
                    return {false, c.scheme.name() + " fails on " + to_string(c.origin) + "->" + to_string(F)};
            }
    return {true, std::to_string(rectangles) + " rectangles up to 5x5 over interface, rep1, rep2"};
}

Outcome average_representation() {
    long checked = 0;
    long equal = 0;
    bool stated = true;
    std::string discrepancies;
    for (const Rational q0 : {Rational(3, 10), Rational(1, 2), Rational(4, 5)})
        for (int K = 0; K <= 3; ++K)
            for (int L = 0; L <= 3; ++L)
                for (int N = 0; N <= K + L + 1; ++N) {
                    const auto r = verify_average_representation(PinnedInstance::make(K, L, N), q0);
                    ++checked;
                    if (r.holds) {
                        ++equal;
                        continue;
                    }
                    stated = stated && r.ratio.has_value();
                    if (discrepancies.size() < 200) {
                        discrepancies += " [K=" + std::to_string(K) + " L=" + std::to_string(L) +
                                         " N=" + std::to_string(N) + " q=" + to_string(q0) +
                                         " ratio=" + (r.ratio ? to_string(*r.ratio) : std::string("undefined")) + "]";
                    }
                }
    // An exact stated ratio is an acceptable outcome; an unstated one is not.
    return {stated, std::to_string(equal) + "/" + std::to_string(checked) + " exact equalities" + discrepancies};
}

Outcome quantum_oracle() {
    double worst = 0.0;
    long sectors = 0;
    for (int L = 0; L <= 7; ++L)
        for (int K = 0; K <= 7; ++K)
            for (int N = 0; N <= L + K + 1; ++N) {
                if (count_paths({0, 0}, {N, L + K + 1 - N}) > kHamiltonianDimensionLimit)
                    continue;
                for (double q0 : {0.3, 0.5, 0.8}) {
                    const double r = verify_ground_state(build_hamiltonian(L, K, N, q0));
                    worst = std::max(worst, r);
                    ++sectors;
                }
            }
    std::ostringstream d;
    d << sectors << " (sector, q) pairs with dimension <= 4096, 0<=L,K<=7; worst residual " << worst;
    return {worst <= 1e-10, d.str()};
}

Outcome sampler_consistency() {
    constexpr std::uint64_t kSeed = 20030603;
    constexpr std::uint64_t kSamples = 100000;
    const Rational half(1, 2);

    const auto inst = PinnedInstance::make(2, 2, 2);
    const auto rep1 = WeightScheme::rep1(2, 2);
    const Point F{inst.N, inst.M};
    const Sampler pinned(rep1, {0, 0}, F, half, kSeed);
    double worst_sigma = 0.0;
    int points = 0;
    for (int a = 0; a <= F.i; ++a)
        for (int b = 0; b <= F.j; ++b) {
            const Point q{a, b};
            const double exact = to_double(crossing_probability({rep1, {0, 0}, F, {q}}, half));
            const auto est = estimate_crossing(pinned, q, kSamples);
            ++points;
            const double diff = std::abs(est.estimate - exact);
            if (est.standard_error == 0.0) {
                if (diff != 0.0)
                    return {false, "degenerate estimate differs at " + to_string(q)};
                continue;
            }
            worst_sigma = std::max(worst_sigma, diff / est.standard_error);
        }
    if (worst_sigma > 3.0) {
        std::ostringstream d;
        d << "one-point estimates: worst deviation " << worst_sigma << " standard errors";
        return {false, d.str()};
    }

    const auto iface = WeightScheme::interface();
    const Sampler square(iface, {0, 0}, {2, 2}, half, kSeed);
    std::map<LatticePath, std::uint64_t> counts;
    for (const auto& p : square.sample_many(0, kSamples))
        ++counts[p];
    const Rational z = eval(partition_dp(iface, {0, 0}, {2, 2}), half);
    double chi2 = 0.0;
    const auto paths = enumerate_paths({0, 0}, {2, 2});
    for (const auto& p : paths) {
        const double expected = to_double(eval(path_weight(iface, p), half) / z) * kSamples;
        const double observed = static_cast<double>(counts[p]);
        chi2 += (observed - expected) * (observed - expected) / expected;
    }
    const boost::math::chi_squared_distribution<double> dist(static_cast<double>(paths.size() - 1));
    const double p_value = boost::math::cdf(boost::math::complement(dist, chi2));

    std::ostringstream d;
    d << points << " points on L=K=2 N=2, worst " << worst_sigma << " sigma; chi-square " << chi2 << " on "
      << paths.size() - 1 << " dof, p=" << p_value << " (seed " << kSeed << ")";
    return {p_value > 1e-3, d.str()};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"closed-form equivalence", closed_form_equivalence},
        {"pinned triple agreement", triple_agreement},
        {"identity suite (pf, rec2, rec1)", identity_suite},
        {"translation property", translation},
        {"Markov and sphere laws", markov_laws},
        {"average representation", average_representation},
        {"quantum ground-state oracle", quantum_oracle},
        {"sampler consistency", sampler_consistency},
    };
    bool all = true;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s [%d] %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str(), secs);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
