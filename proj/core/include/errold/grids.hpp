#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errold/graph.hpp"
#include "errold/vertex_set.hpp"

namespace errold::grids {

using Rational = boost::rational<std::int64_t>;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

enum class GridName { SQR, TRI, KNG };

struct GridKind {
  GridName name = GridName::SQR;
  std::span<const Point> offsets;
};

// TRI is the integer plane with the (1,1), (-1,-1) diagonals added.
GridKind grid_kind(GridName name);
// Accepts "SQR", "TRI", "KNG". Throws std::invalid_argument.
GridKind parse_grid_kind(std::string_view name);
std::string_view to_string(GridName name);

// Period lattice spanned by two integer vectors.
class Lattice {
 public:
  // Throws std::invalid_argument when the basis is degenerate.
  Lattice(Point b1, Point b2);

  Point basis1() const { return b1_; }
  Point basis2() const { return b2_; }
  std::int64_t index() const { return a_ * b_; }

  // Hermite normal form (a,0), (c,b) with 0 <= c < a.
  std::int64_t hnf_a() const { return a_; }
  std::int64_t hnf_b() const { return b_; }
  std::int64_t hnf_c() const { return c_; }

  // Representative in {0..a-1} x {0..b-1}.
  Point reduce(Point p) const;
  // y * a + x of the representative, in [0, index).
  int class_of(Point p) const;
  Point representative(int cls) const;
  bool contains(Point p) const { return class_of(p) == 0; }

 private:
  Point b1_, b2_;
  std::int64_t a_ = 1, b_ = 1, c_ = 0;
};

struct PeriodicPattern {
  GridKind kind;
  Point basis1{1, 0};
  Point basis2{0, 1};
  std::vector<Point> detectors;

  Lattice lattice() const { return Lattice(basis1, basis2); }
};

// Throws std::invalid_argument for a zero-index basis or repeated residues.
void validate(const PeriodicPattern& p);

Rational pattern_density(const PeriodicPattern& p);

struct DominationFailure {
  Point vertex;
  int domination = 0;
};

struct PairFailure {
  Point vertex;
  Point displacement;
  int value = 0;
};

struct GridCertificate {
  bool pass = true;
  std::vector<int> domination;  // indexed by residue class
  std::optional<std::variant<DominationFailure, PairFailure>> failure;
};

// ERR:OLD certification of the infinite periodic set: every class is
// 3-dominated, and every vertex u and u + d with 0 < dist(0, d) <= 2 have
// dominator sets (as plane points) differing in at least 3 points.
GridCertificate certify_pattern(const PeriodicPattern& p);

// Nonzero displacements expressible as o1 or o1 + o2, sorted.
std::vector<Point> short_displacements(const GridKind& kind);

struct DetectorShare {
  Point detector;
  Rational share;
};

// sum over u in N(v) of 1/dom(u) for every detector class v. Throws
// std::invalid_argument when the pattern is not certified.
std::vector<DetectorShare> detector_shares(const PeriodicPattern& p);
Rational max_share(const PeriodicPattern& p);

inline constexpr int kMaxSearchIndex = 18;

// Least-density certified pattern over all Hermite-normal-form lattices of
// index <= max_index and all detector subsets. Ties go to the smaller index,
// then the lexicographically smaller detector list, then the smaller (a, c).
// Throws std::invalid_argument when max_index is outside 1..kMaxSearchIndex.
std::optional<PeriodicPattern> search_patterns(const GridKind& kind, int max_index, int jobs = 1);

// W x W torus with the grid's adjacency; W must be at least 5.
Graph torus_graph(const GridKind& kind, int width);
// Smallest W >= min_width such that (W,0) and (0,W) are lattice vectors.
int compatible_torus_width(const Lattice& lattice, int min_width);
// Torus vertices (x, y) -> y*W + x whose residue class holds a detector.
VertexSet torus_detectors(const PeriodicPattern& p, int width);

// Pattern file: "grid <SQR|TRI|KNG>", "basis <a1> <a2> <b1> <b2>", then one
// "detector <x> <y>" per residue; '#' comment lines allowed.
PeriodicPattern parse_pattern(std::istream& in);
PeriodicPattern parse_pattern(std::string_view text);
PeriodicPattern read_pattern_file(const std::string& path);
void write_pattern(std::ostream& out, const PeriodicPattern& p);

// window x window characters, row y = window-1 first, '#' for detectors.
std::string render_pattern(const PeriodicPattern& p, int window);

}  // namespace errold::grids
