#pragma once

// Partition functions of weighted monotone path ensembles, the closed form
// for the interface chain, the two pinned-chain representations, and the
// recursion / convolution identities that tie them together.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zigzag/lattice.hpp"
#include "zigzag/qpoly.hpp"
#include "zigzag/weights.hpp"

namespace zigzag {

/// Sums of path weights between a fixed origin and every point of a
/// rectangle, filled sphere by sphere. Forward tables hold Z(origin, Q) for Q
/// in [origin, corner]; backward tables hold Z(Q, origin) for Q in
/// [corner, origin]. Points outside the rectangle read as 0.
class PartitionTable {
public:
    PartitionTable(WeightScheme scheme, Point origin, Point corner, Direction direction);

    const WeightScheme& scheme() const noexcept { return scheme_; }
    Point origin() const noexcept { return origin_; }
    Point corner() const noexcept { return corner_; }
    Direction direction() const noexcept { return direction_; }

    bool contains(Point q) const noexcept;
    /// Z(origin, q) or Z(q, origin); 0 outside the rectangle.
    const LaurentPoly& at(Point q) const;

private:
    std::size_t index(Point q) const noexcept;

    WeightScheme scheme_;
    Point origin_;
    Point corner_;
    Direction direction_;
    int width_ = 0;
    int height_ = 0;
    std::vector<LaurentPoly> values_;
};

/// Z(I, F) by the sphere sweep. 0 when F does not dominate I.
LaurentPoly partition_dp(const WeightScheme& s, Point I, Point F);

/// Z(I, F) as a direct sum over enumerate_paths. Throws OracleSizeError for
/// rectangles past the enumeration limit.
LaurentPoly partition_bruteforce(const WeightScheme& s, Point I, Point F);

/// q^{n(n+1)} times the q^2-binomial [n+m, n], assembled from
/// prod(1 - q^{2i}) factors with exact division. Returns 0 if n or m is
/// negative.
LaurentPoly interface_closed_form(int n, int m);

/// Interface partition function between two arbitrary points, Z_q(a,b;n,m),
/// i.e. partition_dp on the rectangle [(a,b),(n,m)].
LaurentPoly interface_two_point(Point from, Point to);

/// Z_q(I, F) rebuilt from the rectangle shifted by -P, times
/// q^{2(x+y)(n-n')}. Requires P <= I <= F coordinate-wise.
LaurentPoly translated_interface(Point I, Point F, Point P);

/// A pinned chain on sites [-L, K] in the sector with N down and M up spins.
struct PinnedInstance {
    int K = 0;
    int L = 0;
    int N = 0;
    int M = 0;

    /// Derives M = L + K + 1 - N. Throws PreconditionError if out of range.
    static PinnedInstance make(int K, int L, int N);
    int sites() const noexcept { return K + L + 1; }
    void validate() const;
};

/// Z(N, M): rep1 weights on paths from the origin to (N, M).
LaurentPoly pinned_rep1(const PinnedInstance& inst);

/// Z(N, M) in the second representation: paths from the third-quadrant
/// sphere of radius L+1 through the origin to the first-quadrant sphere of
/// radius K with exactly N horizontal steps, summed as start/end segment
/// products.
LaurentPoly pinned_rep2(const PinnedInstance& inst);

/// Z(N, M) = sum_{n+n'=N} Z_q(n, K-n) [Z_q(n'-1, L-n'+1) + Z_q(n', L-n')].
LaurentPoly pinned_via_convolution(const PinnedInstance& inst);

struct IdentityReport {
    std::string identity;
    std::vector<std::pair<std::string, long>> parameters;
    bool holds = false;
    LaurentPoly lhs;
    LaurentPoly rhs;
    std::string note;
};

/// Z(N,M) = Z(N-1,M) + Z(N,M-1) with the partial partition functions taken
/// under the same rep1{K,L} weights (interior endpoints). Requires N, M >= 1.
IdentityReport verify_rec1(const PinnedInstance& inst);

/// The same three-point identity for an arbitrary scheme, paths from the
/// origin. Used to show the reading matters.
IdentityReport verify_rec1_with(const WeightScheme& s, int N, int M);

/// Alternative reading of the first recursion: both right-hand terms as
/// pinned partition functions of a chain one site shorter, with the site
/// removed at the left end (shorten_left) or at the right end.
IdentityReport rec1_repinned_reading(const PinnedInstance& inst, bool shorten_left);

/// Z(N,M) = sum_{n+m=K} Z_q(n,m) [Z_q(N-n, M-m-1) + Z_q(N-n-1, M-m)].
IdentityReport verify_rec2(const PinnedInstance& inst);

/// pinned_rep2 against pinned_via_convolution.
IdentityReport verify_convolution(const PinnedInstance& inst);

/// pinned_rep1 against pinned_rep2.
IdentityReport verify_representations(const PinnedInstance& inst);

/// Translation property for one (I, F, P) triple: translated_interface
/// against partition_dp on the original rectangle.
IdentityReport verify_translation(Point I, Point F, Point P);

/// Distribution of n = down spins on sites 1..K under the pinned measure:
/// the rep1 through-point ratio at (n, K-n). Requires 0 < q0 < 1.
std::vector<std::pair<int, Rational>> pinning_distribution(const PinnedInstance& inst, const Rational& q0);

struct AverageReport {
    PinnedInstance instance;
    Rational q0;
    Rational lhs;                     // pinned partition function at q0
    Rational rhs;                     // Z_q(N,M) * <q^{-2(K+1) S_L}>
    Rational interface_partition;     // Z_q(N,M)
    Rational average;                 // <q^{-2(K+1) S_L}>
    bool holds = false;
    std::optional<Rational> ratio;    // lhs / rhs when they differ and rhs != 0
    bool translation_first_term = false;   // Z_q(n'-1, L+1-n') rewritten at the far corner
    bool translation_second_term = false;  // Z_q(n', L-n') likewise
    bool through_point_form = false;       // sum_n q^{-2(K+1)(N-n)} Z_q(n,K-n) Z_q(n,K-n;N,M)
    /// Interface-measure law of n, Z_q(n,K-n) Z_q(n,K-n;N,M) / Z_q(N,M).
    std::vector<std::pair<int, Rational>> interface_distribution;
    /// Z_q(N,M) * sum_n p(n) q^{-2(K+1)(N-n)} with p built from the printed
    /// Z_q(n, n-N) factors (normalized by their own sum); null when every
    /// such factor vanishes.
    std::optional<Rational> literal_distribution_value;
};

/// Both sides of Z(N,M) = Z_q(N,M) <q^{-2(K+1) S_L}>_{N,M} at q0. The right
/// side is a brute-force canonical average over interface configurations on
/// sites 1..N+M, with S_L the number of down spins among the last L+1 of
/// them (rep1 step order). Requires 0 < q0 < 1.
AverageReport verify_average_representation(const PinnedInstance& inst, const Rational& q0);

} // namespace zigzag
