#include "zigzag/lattice.hpp"

#include <algorithm>
#include <limits>
#include <regex>

#include <gmpxx.h>

#include "zigzag/errors.hpp"

namespace zigzag {

std::string to_string(Point p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

Point parse_point(const std::string& text) {
    static const std::regex pattern(R"(^\s*\(?\s*([+-]?[0-9]+)\s*,\s*([+-]?[0-9]+)\s*\)?\s*$)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern))
        throw PreconditionError("not a lattice point (expected i,j): '" + text + "'");
    return {std::stoi(match[1].str()), std::stoi(match[2].str())};
}

Bond horizontal_bond_into(Point right_end) {
    return {right_end - Point{1, 0}, right_end, Orientation::Horizontal};
}

Bond vertical_bond_into(Point top_end) {
    return {top_end - Point{0, 1}, top_end, Orientation::Vertical};
}

int LatticePath::horizontal_steps() const noexcept {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::H));
}

std::vector<Point> LatticePath::points() const {
    std::vector<Point> out;
    out.reserve(steps_.size() + 1);
    Point at = start_;
    out.push_back(at);
    for (Step s : steps_) {
        at = at + (s == Step::H ? Point{1, 0} : Point{0, 1});
        out.push_back(at);
    }
    return out;
}

LatticePath LatticePath::concat(const LatticePath& tail) const {
    if (tail.start() != endpoint(*this))
        throw PreconditionError("concat: " + to_string(tail) + " does not start where " + to_string(*this) + " ends");
    std::vector<Step> steps = steps_;
    steps.insert(steps.end(), tail.steps().begin(), tail.steps().end());
    return {start_, std::move(steps)};
}

Point endpoint(const LatticePath& p) {
    const int h = p.horizontal_steps();
    return p.start() + Point{h, static_cast<int>(p.length()) - h};
}

bool passes_through(const LatticePath& p, Point q) {
    const auto pts = p.points();
    return std::find(pts.begin(), pts.end(), q) != pts.end();
}

std::vector<Bond> bonds_of(const LatticePath& p) {
    std::vector<Bond> out;
    out.reserve(p.length());
    const auto pts = p.points();
    for (std::size_t t = 0; t < p.length(); ++t) {
        const auto orientation = p.steps()[t] == Step::H ? Orientation::Horizontal : Orientation::Vertical;
        out.push_back({pts[t], pts[t + 1], orientation});
    }
    return out;
}

std::uint64_t count_paths(Point a, Point b) {
    if (!dominates(b, a))
        return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(path_length(a, b)), static_cast<unsigned long>(b.i - a.i));
    if (!c.fits_ulong_p())
        return std::numeric_limits<std::uint64_t>::max();
    return c.get_ui();
}

namespace {

void extend(Point at, Point to, std::vector<Step>& word, Point start, std::vector<LatticePath>& out) {
    if (at == to) {
        out.emplace_back(start, word);
        return;
    }
    if (at.j < to.j) {
        word.push_back(Step::V);
        extend(at + Point{0, 1}, to, word, start, out);
        word.pop_back();
    }
    if (at.i < to.i) {
        word.push_back(Step::H);
        extend(at + Point{1, 0}, to, word, start, out);
        word.pop_back();
    }
}

} // namespace

std::vector<LatticePath> enumerate_paths(Point from, Point to) {
    std::vector<LatticePath> out;
    if (!dominates(to, from))
        return out;
    const auto count = count_paths(from, to);
    if (count > kEnumerationLimit)
        throw OracleSizeError("enumerate_paths: " + std::to_string(count) + " paths from " + to_string(from) + " to " +
                              to_string(to) + " exceeds the oracle limit");
    out.reserve(count);
    std::vector<Step> word;
    word.reserve(static_cast<std::size_t>(path_length(from, to)));
    extend(from, to, word, from, out);
    return out;
}

std::vector<Point> sphere(Point center, int radius, Direction direction) {
    std::vector<Point> out;
    if (radius < 0)
        return out;
    out.reserve(static_cast<std::size_t>(radius) + 1);
    const int sign = direction == Direction::Forward ? 1 : -1;
    for (int a = 0; a <= radius; ++a)
        out.push_back(center + Point{sign * a, sign * (radius - a)});
    return out;
}

std::string to_string(const LatticePath& p) {
    std::string out = to_string(p.start()) + ":";
    for (Step s : p.steps())
        out += s == Step::H ? 'H' : 'V';
    return out;
}

LatticePath parse_path(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw PreconditionError("not a path (expected (i,j):STEPS): '" + text + "'");
    const Point start = parse_point(text.substr(0, colon));
    std::vector<Step> steps;
    for (char c : text.substr(colon + 1)) {
        if (c == 'H' || c == 'h')
            steps.push_back(Step::H);
        else if (c == 'V' || c == 'v')
            steps.push_back(Step::V);
        else
            throw PreconditionError(std::string("invalid step '") + c + "' in path '" + text + "'");
    }
    return {start, std::move(steps)};
}

} // namespace zigzag
