#include "zigzag/spin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "zigzag/errors.hpp"

namespace zigzag {

SpinConfig::SpinConfig(int L, int K, std::vector<std::uint8_t> alpha) : L_(L), K_(K), alpha_(std::move(alpha)) {
    if (L < 0 || K < 0)
        throw PreconditionError("spin chain needs L >= 0 and K >= 0");
    if (alpha_.size() != static_cast<std::size_t>(sites()))
        throw PreconditionError("configuration has " + std::to_string(alpha_.size()) + " sites, chain has " +
                                std::to_string(sites()));
    for (auto a : alpha_)
        if (a > 1)
            throw PreconditionError("occupations must be 0 or 1");
}

SpinConfig::SpinConfig(int L, int K) : SpinConfig(L, K, std::vector<std::uint8_t>(static_cast<std::size_t>(L + K + 1), 0)) {}

int SpinConfig::at(int x) const {
    if (x < -L_ || x > K_)
        throw PreconditionError("site " + std::to_string(x) + " outside [-L, K]");
    return alpha_[static_cast<std::size_t>(x + L_)];
}

void SpinConfig::set(int x, int value) {
    if (x < -L_ || x > K_)
        throw PreconditionError("site " + std::to_string(x) + " outside [-L, K]");
    alpha_[static_cast<std::size_t>(x + L_)] = value ? 1 : 0;
}

int SpinConfig::down_count() const noexcept {
    return static_cast<int>(std::count(alpha_.begin(), alpha_.end(), 1));
}

std::string SpinConfig::to_string() const {
    std::string out;
    for (auto a : alpha_)
        out += a ? '1' : '0';
    return out;
}

SpinConfig parse_config(int L, int K, const std::string& text) {
    std::vector<std::uint8_t> alpha;
    for (char ch : text) {
        if (ch == '1' || ch == '-')
            alpha.push_back(1);
        else if (ch == '0' || ch == '+')
            alpha.push_back(0);
        else
            throw PreconditionError(std::string("invalid spin '") + ch + "' (expected 0/1 or +/-)");
    }
    return {L, K, std::move(alpha)};
}

std::vector<SpinConfig> sector_basis(int L, int K, int N, std::uint64_t limit) {
    const int n = L + K + 1;
    if (L < 0 || K < 0 || N < 0 || N > n)
        throw PreconditionError("sector needs L, K >= 0 and 0 <= N <= L+K+1");
    if (count_paths({0, 0}, {N, n - N}) > limit)
        throw OracleSizeError("sector of " + std::to_string(n) + " sites with N=" + std::to_string(N) +
                              " exceeds the enumeration limit");
    std::vector<std::uint8_t> word(static_cast<std::size_t>(n), 0);
    std::fill(word.end() - N, word.end(), 1);
    std::vector<SpinConfig> out;
    do {
        out.emplace_back(L, K, word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

LaurentPoly amplitude(const SpinConfig& c) {
    LaurentPoly::Exponent e = 0;
    for (int x = -c.L(); x <= c.K(); ++x)
        e += std::abs(x) * c.at(x);
    return LaurentPoly::monomial(e);
}

bool eigen_ratio_check(const SpinConfig& c, int x) {
    if (x < -c.L() || x >= c.K())
        throw PreconditionError("eigen_ratio_check needs -L <= x < K");
    SpinConfig down_up = c;
    down_up.set(x, 1);
    down_up.set(x + 1, 0);
    SpinConfig up_down = c;
    up_down.set(x, 0);
    up_down.set(x + 1, 1);
    const LaurentPoly ratio = div_exact(amplitude(down_up), amplitude(up_down));
    return ratio == LaurentPoly::monomial(x < 0 ? 1 : -1);
}

LaurentPoly norm_squared(int L, int K, int N) {
    LaurentPoly z;
    for (const auto& c : sector_basis(L, K, N)) {
        const LaurentPoly phi = amplitude(c);
        z += phi * phi;
    }
    return z;
}

LatticePath config_to_path_rep1(const SpinConfig& c) {
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(c.sites()));
    for (int t = 1; t <= c.K(); ++t)
        steps.push_back(c.at(t) ? Step::H : Step::V);
    for (int x = -c.L(); x <= 0; ++x)
        steps.push_back(c.at(x) ? Step::H : Step::V);
    return {{0, 0}, std::move(steps)};
}

LatticePath config_to_path_rep2(const SpinConfig& c) {
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(c.sites()));
    int before_origin = 0;
    for (int x = -c.L(); x <= c.K(); ++x) {
        steps.push_back(c.at(x) ? Step::H : Step::V);
        if (x <= 0)
            before_origin += c.at(x);
    }
    return {{-before_origin, -(c.L() + 1 - before_origin)}, std::move(steps)};
}

HamiltonianOracle build_hamiltonian(int L, int K, int N, double q0) {
    if (!(q0 > 0.0 && q0 < 1.0))
        throw PreconditionError("build_hamiltonian: q must satisfy 0 < q < 1");
    if (count_paths({0, 0}, {N, L + K + 1 - N}) > kHamiltonianDimensionLimit)
        throw OracleSizeError("build_hamiltonian: sector dimension exceeds " +
                              std::to_string(kHamiltonianDimensionLimit));

    HamiltonianOracle h{L, K, N, q0, sector_basis(L, K, N, kHamiltonianDimensionLimit), {}};
    const auto dim = static_cast<Eigen::Index>(h.basis.size());
    h.matrix = Eigen::MatrixXd::Zero(dim, dim);

    auto index_of = [&](const SpinConfig& c) {
        auto it = std::lower_bound(h.basis.begin(), h.basis.end(), c,
                                   [](const SpinConfig& a, const SpinConfig& b) { return a.word() < b.word(); });
        return static_cast<Eigen::Index>(it - h.basis.begin());
    };

    for (Eigen::Index col = 0; col < dim; ++col) {
        const SpinConfig& c = h.basis[static_cast<std::size_t>(col)];
        for (int x = -L; x < K; ++x) {
            const int left = c.at(x);
            const int right = c.at(x + 1);
            if (left == right)
                continue; // aligned pairs are annihilated
            const double q = x < 0 ? 1.0 / q0 : q0;
            const double scale = 1.0 / (q + 1.0 / q);
            SpinConfig swapped = c;
            swapped.set(x, right);
            swapped.set(x + 1, left);
            const Eigen::Index row = index_of(swapped);
            // h|down up> = (q|down up> - |up down>) / (q + 1/q)
            // h|up down> = (|up down>/q - |down up>) / (q + 1/q)
            h.matrix(col, col) += scale * (left == 1 ? q : 1.0 / q);
            h.matrix(row, col) -= scale;
        }
    }
    return h;
}

Eigen::VectorXd ground_state_vector(const HamiltonianOracle& h) {
    Eigen::VectorXd psi(static_cast<Eigen::Index>(h.basis.size()));
    for (std::size_t k = 0; k < h.basis.size(); ++k)
        psi(static_cast<Eigen::Index>(k)) = eval_double(amplitude(h.basis[k]), h.q0);
    return psi;
}

double residual(const HamiltonianOracle& h, const Eigen::VectorXd& v) {
    const double norm = v.norm();
    if (norm == 0.0)
        throw PreconditionError("residual of the zero vector");
    return (h.matrix * v).norm() / norm;
}

double verify_ground_state(const HamiltonianOracle& h) {
    return residual(h, ground_state_vector(h));
}

} // namespace zigzag
