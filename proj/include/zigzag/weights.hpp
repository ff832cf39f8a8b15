#pragma once

// Bond-local weight schemes. Vertical bonds always weigh 1; a horizontal
// bond's weight depends on the coordinate sum i + j of its right end.

#include <map>
#include <string>
#include <variant>

#include "zigzag/lattice.hpp"
#include "zigzag/qpoly.hpp"

namespace zigzag {

/// q^{2(i+j)} on horizontal bonds: the unpinned interface chain.
struct InterfaceXXZ {};

/// Pinned chain on sites [-L, K], paths leaving the origin. Horizontal
/// bonds with i + j <= K weigh q^{2(i+j)}; for K < i + j <= K + L + 1 they
/// weigh q^{2(K+L+1) - 2(i+j)}. Bonds reaching past i + j = K + L + 1 are
/// outside the scheme.
struct PinnedRep1 {
    int K = 0;
    int L = 0;
};

/// q^{2|i+j|} on horizontal bonds: paths crossing the origin diagonally.
struct PinnedRep2 {};

/// Explicit bond table; unlisted bonds get `fallback`.
struct CustomTable {
    std::map<Bond, LaurentPoly> table;
    LaurentPoly fallback = 1;
};

class WeightScheme {
public:
    using Variant = std::variant<InterfaceXXZ, PinnedRep1, PinnedRep2, CustomTable>;

    WeightScheme() = default;
    /// Throws PreconditionError for PinnedRep1 with negative K or L.
    WeightScheme(Variant v); // NOLINT(google-explicit-constructor)

    static WeightScheme interface() { return Variant(InterfaceXXZ{}); }
    static WeightScheme rep1(int K, int L) { return Variant(PinnedRep1{K, L}); }
    static WeightScheme rep2() { return Variant(PinnedRep2{}); }
    static WeightScheme custom(CustomTable t) { return Variant(std::move(t)); }

    const Variant& variant() const noexcept { return v_; }

    /// "interface", "rep1(K=..,L=..)", "rep2" or "custom".
    std::string name() const;

private:
    Variant v_;
};

/// Parses the CLI scheme names "interface", "rep1", "rep2"; rep1 takes K, L.
WeightScheme parse_scheme(const std::string& name, int K = 0, int L = 0);

/// Throws OutOfDomain for PinnedRep1 bonds ending beyond i + j = K + L + 1.
LaurentPoly bond_weight(const WeightScheme& s, const Bond& b);

/// Product of bond weights along the path; the empty path weighs 1.
LaurentPoly path_weight(const WeightScheme& s, const LatticePath& p);

} // namespace zigzag
