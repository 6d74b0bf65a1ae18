#include "errold/grids.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "errold/errors.hpp"

namespace errold::grids {
namespace {

constexpr std::array<Point, 4> kSqrOffsets{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
constexpr std::array<Point, 6> kTriOffsets{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}};
constexpr std::array<Point, 8> kKngOffsets{
    {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

// Returns g = gcd(a, b) >= 0 with s*a + t*b = g.
std::int64_t extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(cur_s, old_s - q * cur_s);
    old_t = std::exchange(cur_t, old_t - q * cur_t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

bool contains_point(std::span<const Point> pts, Point p) { return std::find(pts.begin(), pts.end(), p) != pts.end(); }

// Relative points of N(0) xor N(d) for every short displacement d.
struct DisplacementTable {
  std::vector<Point> displacements;
  std::vector<std::vector<Point>> difference;
};

DisplacementTable displacement_table(const GridKind& kind) {
  DisplacementTable t;
  t.displacements = short_displacements(kind);
  for (Point d : t.displacements) {
    std::vector<Point> diff;
    for (Point o : kind.offsets) {
      if (!contains_point(kind.offsets, o - d)) diff.push_back(o);
    }
    for (Point o : kind.offsets) {
      if (!contains_point(kind.offsets, o + d)) diff.push_back(o + d);
    }
    t.difference.push_back(std::move(diff));
  }
  return t;
}

// Class-level view of one lattice: for each class r, the classes of r + o
// and the class lists for every displacement's symmetric difference.
struct CompiledLattice {
  int index = 0;
  int degree = 0;
  std::vector<int> neighbor_class;           // [r * degree + i]
  std::vector<std::vector<int>> pair_class;  // [r * D + k] -> classes
  int displacement_count = 0;
};

CompiledLattice compile(const Lattice& lat, const GridKind& kind, const DisplacementTable& table) {
  CompiledLattice c;
  c.index = static_cast<int>(lat.index());
  c.degree = static_cast<int>(kind.offsets.size());
  c.displacement_count = static_cast<int>(table.displacements.size());
  for (int r = 0; r < c.index; ++r) {
    const Point base = lat.representative(r);
    for (Point o : kind.offsets) c.neighbor_class.push_back(lat.class_of(base + o));
    for (const auto& diff : table.difference) {
      std::vector<int> classes;
      for (Point p : diff) classes.push_back(lat.class_of(base + p));
      c.pair_class.push_back(std::move(classes));
    }
  }
  return c;
}

bool passes(const CompiledLattice& c, std::uint64_t mask) {
  for (int r = 0; r < c.index; ++r) {
    int dom = 0;
    for (int i = 0; i < c.degree; ++i) dom += static_cast<int>((mask >> c.neighbor_class[static_cast<std::size_t>(r * c.degree + i)]) & 1U);
    if (dom < 3) return false;
  }
  for (const auto& classes : c.pair_class) {
    int value = 0;
    for (int cls : classes) value += static_cast<int>((mask >> cls) & 1U);
    if (value < 3) return false;
  }
  return true;
}

struct LatticeHit {
  std::int64_t a = 0;
  std::int64_t c = 0;
  std::vector<Point> detectors;  // sorted residues
};

// Lexicographically least sorted residue list of `size` points that certifies
// on this lattice. The least such list always contains the origin, since
// translates of certified patterns are certified.
std::optional<std::vector<Point>> least_certified(const Lattice& lat, const CompiledLattice& c, int size) {
  const int index = c.index;
  std::vector<Point> points;
  for (int r = 0; r < index; ++r) points.push_back(lat.representative(r));
  std::vector<int> order(static_cast<std::size_t>(index));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int l, int r) { return points[static_cast<std::size_t>(l)] < points[static_cast<std::size_t>(r)]; });
  // order[0] is the class of the origin.
  std::vector<int> combo(static_cast<std::size_t>(size));
  std::iota(combo.begin(), combo.end(), 0);
  if (size == 0 || size > index) return std::nullopt;
  while (combo[0] == 0) {
    std::uint64_t mask = 0;
    for (int i : combo) mask |= std::uint64_t{1} << order[static_cast<std::size_t>(i)];
    if (passes(c, mask)) {
      std::vector<Point> out;
      for (int i : combo) out.push_back(points[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
      return out;
    }
    int i = size - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == index - size + i) --i;
    if (i <= 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
  return std::nullopt;
}

Point parse_point_pair(std::istringstream& fields, int line) {
  Point p;
  if (!(fields >> p.x >> p.y)) throw ParseError(line, "expected two integers");
  return p;
}

}  // namespace

GridKind grid_kind(GridName name) {
  switch (name) {
    case GridName::SQR:
      return {name, kSqrOffsets};
    case GridName::TRI:
      return {name, kTriOffsets};
    case GridName::KNG:
      return {name, kKngOffsets};
  }
  throw std::invalid_argument("unknown grid");
}

GridKind parse_grid_kind(std::string_view name) {
  if (name == "SQR") return grid_kind(GridName::SQR);
  if (name == "TRI") return grid_kind(GridName::TRI);
  if (name == "KNG") return grid_kind(GridName::KNG);
  throw std::invalid_argument("unknown grid '" + std::string(name) + "' (expected SQR, TRI or KNG)");
}

std::string_view to_string(GridName name) {
  switch (name) {
    case GridName::SQR:
      return "SQR";
    case GridName::TRI:
      return "TRI";
    case GridName::KNG:
      return "KNG";
  }
  return "?";
}

Lattice::Lattice(Point b1, Point b2) : b1_(b1), b2_(b2) {
  const std::int64_t det = b1.x * b2.y - b1.y * b2.x;
  if (det == 0) throw std::invalid_argument("degenerate lattice basis");
  std::int64_t s = 0, t = 0;
  const std::int64_t g = extended_gcd(b1.y, b2.y, s, t);
  const Point w{s * b1.x + t * b2.x, g};
  const std::int64_t horizontal = (b2.y / g) * b1.x - (b1.y / g) * b2.x;
  a_ = horizontal < 0 ? -horizontal : horizontal;
  b_ = g;
  c_ = floor_mod(w.x, a_);
}

Point Lattice::reduce(Point p) const {
  const std::int64_t q = floor_div(p.y, b_);
  const std::int64_t y = p.y - q * b_;
  const std::int64_t x = floor_mod(p.x - q * c_, a_);
  return {x, y};
}

int Lattice::class_of(Point p) const {
  const Point r = reduce(p);
  return static_cast<int>(r.y * a_ + r.x);
}

Point Lattice::representative(int cls) const {
  if (cls < 0 || cls >= index()) throw std::invalid_argument("residue class out of range");
  return {cls % a_, cls / a_};
}

void validate(const PeriodicPattern& p) {
  const Lattice lat = p.lattice();
  std::set<int> seen;
  for (Point d : p.detectors) {
    if (!seen.insert(lat.class_of(d)).second) {
      throw std::invalid_argument("detector (" + std::to_string(d.x) + "," + std::to_string(d.y) +
                                  ") repeats a residue class");
    }
  }
}

Rational pattern_density(const PeriodicPattern& p) {
  validate(p);
  return Rational(static_cast<std::int64_t>(p.detectors.size()), p.lattice().index());
}

std::vector<Point> short_displacements(const GridKind& kind) {
  std::set<Point> out;
  for (Point o1 : kind.offsets) {
    out.insert(o1);
    for (Point o2 : kind.offsets) out.insert(o1 + o2);
  }
  out.erase(Point{0, 0});
  return {out.begin(), out.end()};
}

GridCertificate certify_pattern(const PeriodicPattern& p) {
  validate(p);
  const Lattice lat = p.lattice();
  const int index = static_cast<int>(lat.index());
  std::vector<bool> detector(static_cast<std::size_t>(index), false);
  for (Point d : p.detectors) detector[static_cast<std::size_t>(lat.class_of(d))] = true;
  auto is_detector = [&](Point q) { return detector[static_cast<std::size_t>(lat.class_of(q))]; };

  GridCertificate cert;
  for (int r = 0; r < index; ++r) {
    const Point u = lat.representative(r);
    int dom = 0;
    for (Point o : p.kind.offsets) dom += is_detector(u + o) ? 1 : 0;
    cert.domination.push_back(dom);
    if (dom < 3 && cert.pass) {
      cert.pass = false;
      cert.failure = DominationFailure{u, dom};
    }
  }
  if (!cert.pass) return cert;

  const DisplacementTable table = displacement_table(p.kind);
  for (int r = 0; r < index; ++r) {
    const Point u = lat.representative(r);
    for (std::size_t k = 0; k < table.displacements.size(); ++k) {
      int value = 0;
      for (Point q : table.difference[k]) value += is_detector(u + q) ? 1 : 0;
      if (value < 3) {
        cert.pass = false;
        cert.failure = PairFailure{u, table.displacements[k], value};
        return cert;
      }
    }
  }
  return cert;
}

std::vector<DetectorShare> detector_shares(const PeriodicPattern& p) {
  const GridCertificate cert = certify_pattern(p);
  if (!cert.pass) throw std::invalid_argument("shares need a certified pattern");
  const Lattice lat = p.lattice();
  std::vector<DetectorShare> out;
  for (Point v : p.detectors) {
    Rational share(0);
    for (Point o : p.kind.offsets) share += Rational(1, cert.domination[static_cast<std::size_t>(lat.class_of(v + o))]);
    out.push_back({v, share});
  }
  return out;
}

Rational max_share(const PeriodicPattern& p) {
  Rational best(0);
  for (const DetectorShare& s : detector_shares(p)) best = std::max(best, s.share);
  return best;
}

std::optional<PeriodicPattern> search_patterns(const GridKind& kind, int max_index, int jobs) {
  if (max_index < 1 || max_index > kMaxSearchIndex) {
    throw std::invalid_argument("max_index must be in 1.." + std::to_string(kMaxSearchIndex));
  }
  const DisplacementTable table = displacement_table(kind);
  const int degree = static_cast<int>(kind.offsets.size());

  // Candidate (size, index) pairs by density, then index. Fewer than
  // 3/degree of the plane cannot 3-dominate every vertex.
  std::vector<std::pair<int, int>> candidates;
  for (int index = 1; index <= max_index; ++index) {
    for (int size = 1; size <= index; ++size) {
      if (size * degree >= 3 * index) candidates.emplace_back(size, index);
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](auto l, auto r) {
    const Rational dl(l.first, l.second), dr(r.first, r.second);
    if (dl != dr) return dl < dr;
    return l.second < r.second;
  });

  for (auto [size, index] : candidates) {
    std::vector<std::pair<std::int64_t, std::int64_t>> lattices;
    for (std::int64_t a = 1; a <= index; ++a) {
      if (index % a != 0) continue;
      for (std::int64_t c = 0; c < a; ++c) lattices.emplace_back(a, c);
    }
    std::vector<std::optional<LatticeHit>> hits(lattices.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < lattices.size(); i = next++) {
        const auto [a, c] = lattices[i];
        const Lattice lat({a, 0}, {c, index / a});
        const CompiledLattice compiled = compile(lat, kind, table);
        if (auto found = least_certified(lat, compiled, size)) hits[i] = LatticeHit{a, c, std::move(*found)};
      }
    };
    if (jobs <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    const LatticeHit* best = nullptr;
    for (const auto& h : hits) {
      if (!h) continue;
      if (best == nullptr || h->detectors < best->detectors) best = &*h;
    }
    if (best != nullptr) {
      PeriodicPattern p;
      p.kind = kind;
      p.basis1 = {best->a, 0};
      p.basis2 = {best->c, index / best->a};
      p.detectors = best->detectors;
      return p;
    }
  }
  return std::nullopt;
}

Graph torus_graph(const GridKind& kind, int width) {
  if (width < 5) throw std::invalid_argument("torus width must be at least 5");
  std::set<Edge> edges;
  for (int y = 0; y < width; ++y) {
    for (int x = 0; x < width; ++x) {
      for (Point o : kind.offsets) {
        const int nx = static_cast<int>(floor_mod(x + o.x, width));
        const int ny = static_cast<int>(floor_mod(y + o.y, width));
        edges.insert(Edge(y * width + x, ny * width + nx));
      }
    }
  }
  return Graph::from_edges(width * width, {edges.begin(), edges.end()});
}

int compatible_torus_width(const Lattice& lattice, int min_width) {
  for (int w = std::max(min_width, 1);; ++w) {
    if (lattice.contains({w, 0}) && lattice.contains({0, w})) return w;
  }
}

VertexSet torus_detectors(const PeriodicPattern& p, int width) {
  const Lattice lat = p.lattice();
  if (!lat.contains({width, 0}) || !lat.contains({0, width})) {
    throw std::invalid_argument("torus width " + std::to_string(width) + " is not a lattice period");
  }
  std::set<int> classes;
  for (Point d : p.detectors) classes.insert(lat.class_of(d));
  VertexSet s(width * width);
  for (int y = 0; y < width; ++y) {
    for (int x = 0; x < width; ++x) {
      if (classes.contains(lat.class_of({x, y}))) s.insert(y * width + x);
    }
  }
  return s;
}

PeriodicPattern parse_pattern(std::istream& in) {
  PeriodicPattern p;
  bool have_grid = false, have_basis = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string key;
    fields >> key;
    if (key == "grid") {
      if (have_grid) throw ParseError(line_no, "repeated grid line");
      std::string name;
      fields >> name;
      try {
        p.kind = parse_grid_kind(name);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      have_grid = true;
    } else if (key == "basis") {
      if (!have_grid) throw ParseError(line_no, "basis before grid");
      if (have_basis) throw ParseError(line_no, "repeated basis line");
      p.basis1 = parse_point_pair(fields, line_no);
      p.basis2 = parse_point_pair(fields, line_no);
      if (p.basis1.x * p.basis2.y - p.basis1.y * p.basis2.x == 0) {
        throw ValidationError("line " + std::to_string(line_no) + ": lattice index is zero");
      }
      have_basis = true;
    } else if (key == "detector") {
      if (!have_basis) throw ParseError(line_no, "detector before basis");
      p.detectors.push_back(parse_point_pair(fields, line_no));
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
  }
  if (!have_grid) throw ParseError(0, "missing grid line");
  if (!have_basis) throw ParseError(0, "missing basis line");
  try {
    validate(p);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  return p;
}

PeriodicPattern parse_pattern(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_pattern(in);
}

PeriodicPattern read_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("file-not-found: " + path);
  return parse_pattern(in);
}

void write_pattern(std::ostream& out, const PeriodicPattern& p) {
  out << "grid " << to_string(p.kind.name) << '\n';
  out << "basis " << p.basis1.x << ' ' << p.basis1.y << ' ' << p.basis2.x << ' ' << p.basis2.y << '\n';
  for (Point d : p.detectors) out << "detector " << d.x << ' ' << d.y << '\n';
}

std::string render_pattern(const PeriodicPattern& p, int window) {
  if (window < 1) throw std::invalid_argument("window must be positive");
  const Lattice lat = p.lattice();
  std::set<int> classes;
  for (Point d : p.detectors) classes.insert(lat.class_of(d));
  std::string out;
  for (int y = window - 1; y >= 0; --y) {
    for (int x = 0; x < window; ++x) out += classes.contains(lat.class_of({x, y})) ? '#' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace errold::grids
