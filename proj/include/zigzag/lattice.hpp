#pragma once

// Monotone ("zig-zag") lattice paths on Z^2.

#include <cstdint>
#include <string>
#include <vector>

namespace zigzag {

struct Point {
    int i = 0;
    int j = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
    friend Point operator+(Point a, Point b) { return {a.i + b.i, a.j + b.j}; }
    friend Point operator-(Point a, Point b) { return {a.i - b.i, a.j - b.j}; }
};

/// True iff b can be reached from a by a monotone path.
inline bool dominates(Point b, Point a) {
    return b.i >= a.i && b.j >= a.j;
}

/// Taxicab distance, i.e. the length of every monotone path from a to b.
inline int path_length(Point a, Point b) {
    return (b.i - a.i) + (b.j - a.j);
}

std::string to_string(Point p);
/// Accepts "i,j" or "(i,j)".
Point parse_point(const std::string& text);

enum class Step : std::uint8_t { V = 0, H = 1 };
enum class Orientation : std::uint8_t { Vertical, Horizontal };
enum class Direction : std::uint8_t { Forward, Backward };

struct Bond {
    Point from;
    Point to;
    Orientation orientation = Orientation::Horizontal;

    friend bool operator==(const Bond&, const Bond&) = default;
    friend auto operator<=>(const Bond&, const Bond&) = default;
};

Bond horizontal_bond_into(Point right_end);
Bond vertical_bond_into(Point top_end);

/// A start point plus a step word. Horizontal steps are encoded as 1 and
/// vertical ones as 0, so monotonicity holds by construction.
class LatticePath {
public:
    LatticePath() = default;
    LatticePath(Point start, std::vector<Step> steps) : start_(start), steps_(std::move(steps)) {}

    Point start() const noexcept { return start_; }
    const std::vector<Step>& steps() const noexcept { return steps_; }
    std::size_t length() const noexcept { return steps_.size(); }
    int horizontal_steps() const noexcept;

    /// All visited points, start through end (length() + 1 entries).
    std::vector<Point> points() const;

    /// Path followed by `tail`. Throws PreconditionError unless tail starts
    /// at this path's endpoint.
    LatticePath concat(const LatticePath& tail) const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

private:
    Point start_;
    std::vector<Step> steps_;
};

Point endpoint(const LatticePath& p);
bool passes_through(const LatticePath& p, Point q);
std::vector<Bond> bonds_of(const LatticePath& p);

/// Upper bound on the number of paths enumerate_paths will materialize.
inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;

/// Number of monotone paths from a to b (0 when b does not dominate a).
/// Saturates at UINT64_MAX.
std::uint64_t count_paths(Point a, Point b);

/// Every monotone path from `from` to `to`, in lexicographic order of the step
/// word (V before H). Returns an empty list when `to` does not dominate
/// `from`; throws OracleSizeError above kEnumerationLimit paths.
std::vector<LatticePath> enumerate_paths(Point from, Point to);

/// Points at taxicab distance `radius` from `center` reachable by monotone
/// paths out of (Forward) or into (Backward) the center, ordered by
/// increasing horizontal offset.
std::vector<Point> sphere(Point center, int radius, Direction direction);

/// Text form "(i,j):HVH".
std::string to_string(const LatticePath& p);
LatticePath parse_path(const std::string& text);

} // namespace zigzag
