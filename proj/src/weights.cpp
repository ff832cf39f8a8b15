#include "zigzag/weights.hpp"

#include <cstdlib>

#include "zigzag/errors.hpp"

namespace zigzag {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

WeightScheme::WeightScheme(Variant v) : v_(std::move(v)) {
    if (const auto* r = std::get_if<PinnedRep1>(&v_); r && (r->K < 0 || r->L < 0))
        throw PreconditionError("rep1 requires K >= 0 and L >= 0");
}

std::string WeightScheme::name() const {
    return std::visit(overloaded{
                          [](const InterfaceXXZ&) -> std::string { return "interface"; },
                          [](const PinnedRep1& r) -> std::string {
                              return "rep1(K=" + std::to_string(r.K) + ",L=" + std::to_string(r.L) + ")";
                          },
                          [](const PinnedRep2&) -> std::string { return "rep2"; },
                          [](const CustomTable&) -> std::string { return "custom"; },
                      },
                      v_);
}

WeightScheme parse_scheme(const std::string& name, int K, int L) {
    if (name == "interface")
        return WeightScheme::interface();
    if (name == "rep1")
        return WeightScheme::rep1(K, L);
    if (name == "rep2")
        return WeightScheme::rep2();
    throw PreconditionError("unknown weight scheme '" + name + "' (expected interface, rep1 or rep2)");
}

LaurentPoly bond_weight(const WeightScheme& s, const Bond& b) {
    const int sum = b.to.i + b.to.j;
    return std::visit(overloaded{
                          [&](const InterfaceXXZ&) -> LaurentPoly {
                              return b.orientation == Orientation::Horizontal ? LaurentPoly::monomial(2 * sum) : 1;
                          },
                          [&](const PinnedRep1& r) -> LaurentPoly {
                              const int top = r.K + r.L + 1;
                              if (sum > top)
                                  throw OutOfDomain("rep1(K=" + std::to_string(r.K) + ",L=" + std::to_string(r.L) +
                                                    "): bond ending at " + to_string(b.to) + " lies past i+j=" +
                                                    std::to_string(top));
                              if (b.orientation == Orientation::Vertical)
                                  return 1;
                              // i + j == K belongs to the first branch.
                              return LaurentPoly::monomial(sum <= r.K ? 2 * sum : 2 * (top - sum));
                          },
                          [&](const PinnedRep2&) -> LaurentPoly {
                              return b.orientation == Orientation::Horizontal ? LaurentPoly::monomial(2 * std::abs(sum))
                                                                              : 1;
                          },
                          [&](const CustomTable& t) -> LaurentPoly {
                              auto it = t.table.find(b);
                              return it == t.table.end() ? t.fallback : it->second;
                          },
                      },
                      s.variant());
}

LaurentPoly path_weight(const WeightScheme& s, const LatticePath& p) {
    LaurentPoly w = 1;
    for (const auto& b : bonds_of(p))
        w *= bond_weight(s, b);
    return w;
}

} // namespace zigzag
