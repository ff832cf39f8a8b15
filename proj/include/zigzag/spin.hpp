#pragma once

// The quantum side: spin-1/2 configurations on the chain [-L, K], the
// ground-state amplitudes, the maps onto lattice paths, and a dense
// Hamiltonian used as a numerical witness.

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zigzag/lattice.hpp"
#include "zigzag/qpoly.hpp"

namespace zigzag {

/// Occupation word on sites -L..K; alpha = 1 is a down spin.
class SpinConfig {
public:
    SpinConfig(int L, int K, std::vector<std::uint8_t> alpha);
    /// All spins up.
    SpinConfig(int L, int K);

    int L() const noexcept { return L_; }
    int K() const noexcept { return K_; }
    int sites() const noexcept { return L_ + K_ + 1; }
    const std::vector<std::uint8_t>& word() const noexcept { return alpha_; }

    /// Occupation at site x in [-L, K].
    int at(int x) const;
    void set(int x, int value);
    int down_count() const noexcept;

    /// '1' for down, '0' for up, site -L first.
    std::string to_string() const;

    friend bool operator==(const SpinConfig&, const SpinConfig&) = default;

private:
    int L_;
    int K_;
    std::vector<std::uint8_t> alpha_;
};

/// Accepts 0/1 or +/- words ('-' and '1' are down spins) of length L+K+1.
SpinConfig parse_config(int L, int K, const std::string& text);

/// Configurations with N down spins in lexicographic order of the word read
/// from site -L to K. Throws OracleSizeError past `limit` configurations.
std::vector<SpinConfig> sector_basis(int L, int K, int N, std::uint64_t limit = 1'000'000);

/// phi(alpha) = prod_x q^{|x| alpha_x}.
LaurentPoly amplitude(const SpinConfig& c);

/// Checks phi(.., alpha_x=1, alpha_{x+1}=0, ..) / phi(.., 0, 1, ..) against
/// q for x < 0 and 1/q for x >= 0, with the remaining sites taken from c.
/// Requires -L <= x < K.
bool eigen_ratio_check(const SpinConfig& c, int x);

/// Sum of phi^2 over the N-down sector, by enumeration (at most 10^6 terms).
LaurentPoly norm_squared(int L, int K, int N);

/// Path from the origin to (N, M): steps 1..K read sites 1..K, steps
/// K+1..K+L+1 read sites -L..0.
LatticePath config_to_path_rep1(const SpinConfig& c);

/// Path of L+K+1 steps reading sites -L..K in order, started at
/// (-a, -(L+1-a)) with a the number of down spins on sites -L..0, so it
/// crosses the origin after L+1 steps.
LatticePath config_to_path_rep2(const SpinConfig& c);

/// Dense XXZ Hamiltonian restricted to one sector. Bonds x < 0 use the
/// projector with parameter 1/q, bonds x >= 0 the one with q.
struct HamiltonianOracle {
    int L = 0;
    int K = 0;
    int N = 0;
    double q0 = 0.5;
    std::vector<SpinConfig> basis;
    Eigen::MatrixXd matrix;
};

inline constexpr std::size_t kHamiltonianDimensionLimit = 4096;

/// Throws OracleSizeError above kHamiltonianDimensionLimit and
/// PreconditionError unless 0 < q0 < 1.
HamiltonianOracle build_hamiltonian(int L, int K, int N, double q0);

/// phi evaluated at q0 over the oracle's basis.
Eigen::VectorXd ground_state_vector(const HamiltonianOracle& h);

/// |H v| / |v|.
double residual(const HamiltonianOracle& h, const Eigen::VectorXd& v);

/// |H psi_N| / |psi_N|.
double verify_ground_state(const HamiltonianOracle& h);

} // namespace zigzag
