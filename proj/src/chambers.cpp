#include "git1/chambers.hpp"

#include <algorithm>

#include "git1/errors.hpp"
#include "git1/lp.hpp"
#include "git1/stability.hpp"

namespace git1 {

Rational Wall::value(const RatVec& x) const {
  if (kind == Kind::Axis) return x[axis - 1];
  Rational s = -1;
  for (int i : subset) s += x[i - 1];
  return s;
}

std::string Wall::label() const {
  if (kind == Kind::Axis) return "a" + std::to_string(axis) + "=0";
  std::string s;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (k) s += "+";
    s += "a" + std::to_string(subset[k]);
  }
  return s + "=1";
}

std::vector<Wall> wall_arrangement(int n) {
  std::vector<Wall> walls;
  for (int i = 1; i <= n; ++i) walls.push_back({Wall::Kind::Axis, i, {}});
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (auto& s : subsets) walls.push_back({Wall::Kind::Level, 0, std::move(s)});
  return walls;
}

Box Box::standard(int n) { return {RatVec(n, Rational(-1)), RatVec(n, Rational(n + 1))}; }

std::string Chamber::sign_string() const {
  std::string s;
  for (int v : signs) s += v > 0 ? '+' : '-';
  return s;
}

namespace {

// Rows g(x) >= 0 describing the open cell: sign * wall(x) > 0 plus the box.
struct Halfspace {
  RatVec a;
  Rational b;  // a.x - b
};

Halfspace wall_halfspace(const Wall& w, int sign, int n) {
  Halfspace h{RatVec(n, Rational(0)), Rational(0)};
  if (w.kind == Wall::Kind::Axis) {
    h.a[w.axis - 1] = 1;
  } else {
    for (int i : w.subset) h.a[i - 1] = 1;
    h.b = 1;
  }
  if (sign < 0) {
    for (auto& v : h.a) v = -v;
    h.b = -h.b;
  }
  return h;
}

std::vector<Halfspace> box_halfspaces(const Box& box) {
  const int n = static_cast<int>(box.lo.size());
  std::vector<Halfspace> out;
  for (int i = 0; i < n; ++i) {
    Halfspace lo{RatVec(n, Rational(0)), box.lo[i]};
    lo.a[i] = 1;
    Halfspace hi{RatVec(n, Rational(0)), -box.hi[i]};
    hi.a[i] = -1;
    out.push_back(lo);
    out.push_back(hi);
  }
  return out;
}

struct SlackResult {
  bool open = false;
  RatVec x;
  Rational eps;
};

// max eps subject to a.x - b >= eps for every row, eps <= 1.
SlackResult max_slack(const std::vector<Halfspace>& rows, int n) {
  std::vector<lp::Constraint> cons;
  for (const auto& h : rows) {
    lp::Constraint c;
    c.coeffs = h.a;
    c.coeffs.push_back(-1);
    c.rel = lp::Relation::GE;
    c.rhs = h.b;
    cons.push_back(std::move(c));
  }
  lp::Constraint cap;
  cap.coeffs.assign(n + 1, Rational(0));
  cap.coeffs[n] = 1;
  cap.rel = lp::Relation::LE;
  cap.rhs = 1;
  cons.push_back(cap);
  RatVec obj(n + 1, Rational(0));
  obj[n] = 1;
  lp::Result r = lp::maximize(obj, cons, true);
  SlackResult out;
  if (r.status != lp::Status::Optimal || r.value <= 0) return out;
  out.open = true;
  out.eps = r.value;
  out.x.assign(r.x.begin(), r.x.begin() + n);
  return out;
}

std::vector<Halfspace> cell_rows(const std::vector<int>& signs, const std::vector<Wall>& walls, const Box& box) {
  const int n = static_cast<int>(box.lo.size());
  std::vector<Halfspace> rows = box_halfspaces(box);
  for (std::size_t w = 0; w < signs.size(); ++w) rows.push_back(wall_halfspace(walls[w], signs[w], n));
  return rows;
}

}  // namespace

std::vector<Chamber> enumerate_chambers(int n, const Box& box, std::uint64_t budget) {
  if (n < 1) throw Error(ErrorKind::Parse, "n must be at least 1");
  if (static_cast<int>(box.lo.size()) != n || static_cast<int>(box.hi.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "box dimension");
  if (!budget) budget = default_budget();
  const auto walls = wall_arrangement(n);
  struct Cell {
    std::vector<int> signs;
    RatVec witness;
  };
  std::vector<Cell> cells;
  {
    SlackResult s = max_slack(box_halfspaces(box), n);
    if (!s.open) return {};
    cells.push_back({{}, s.x});
  }
  for (std::size_t w = 0; w < walls.size(); ++w) {
    std::vector<Cell> next;
    for (const Cell& c : cells) {
      Rational v = walls[w].value(c.witness);
      for (int side : {-1, +1}) {
        Cell child{c.signs, {}};
        child.signs.push_back(side);
        if (v * side > 0) {
          child.witness = c.witness;
        } else {
          SlackResult s = max_slack(cell_rows(child.signs, walls, box), n);
          if (!s.open) continue;
          child.witness = s.x;
        }
        next.push_back(std::move(child));
      }
    }
    if (next.size() > budget) throw Error(ErrorKind::BudgetExceeded, "chamber count exceeds budget");
    cells = std::move(next);
  }
  std::vector<Chamber> out;
  for (const Cell& c : cells) {
    SlackResult s = max_slack(cell_rows(c.signs, walls, box), n);
    if (!s.open) throw Error(ErrorKind::ConstancyViolation, "cell lost its interior");
    out.push_back({c.signs, s.x, s.eps});
  }
  std::sort(out.begin(), out.end(),
            [](const Chamber& a, const Chamber& b) { return a.sign_string() < b.sign_string(); });
  return out;
}

std::vector<Chamber> enumerate_chambers(int n) { return enumerate_chambers(n, Box::standard(n)); }

bool strictly_inside(const Chamber& ch, const std::vector<Wall>& walls, const Box& box, const RatVec& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] <= box.lo[i] || x[i] >= box.hi[i]) return false;
  for (std::size_t w = 0; w < walls.size(); ++w)
    if (walls[w].value(x) * ch.signs[w] <= 0) return false;
  return true;
}

std::vector<RatVec> sample_interior(const Chamber& ch, const std::vector<Wall>& walls, const Box& box, int count,
                                    std::mt19937_64& rng) {
  const int n = static_cast<int>(box.lo.size());
  std::vector<Halfspace> rows = cell_rows(ch.signs, walls, box);
  std::vector<lp::Constraint> cons;
  Rational margin = ch.slack / 2;
  for (const auto& h : rows) cons.push_back({h.a, lp::Relation::GE, h.b + margin});
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> weight(1, 15);
  std::vector<RatVec> out;
  while (static_cast<int>(out.size()) < count) {
    RatVec d(n);
    bool zero = true;
    for (auto& v : d) {
      v = coeff(rng);
      if (v != 0) zero = false;
    }
    if (zero) continue;
    lp::Result r = lp::maximize(d, cons, true);
    if (r.status != lp::Status::Optimal) throw Error(ErrorKind::ConstancyViolation, "sampling LP failed");
    Rational t(weight(rng), 16);
    RatVec p(n);
    for (int i = 0; i < n; ++i) p[i] = t * r.x[i] + (1 - t) * ch.witness[i];
    if (!strictly_inside(ch, walls, box, p)) throw Error(ErrorKind::ConstancyViolation, "sample left its chamber");
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<bool> classify_chamber(const Chamber& ch, const std::vector<Wall>& walls, const Box& box,
                                   const std::vector<Curve>& curves, int extra_points, std::mt19937_64& rng) {
  if (!strictly_inside(ch, walls, box, ch.witness))
    throw Error(ErrorKind::ConstancyViolation, "witness not strictly inside chamber " + ch.sign_string());
  std::vector<bool> verdict;
  for (const Curve& c : curves) {
    StabilityVerdict v = is_semistable(c, ch.witness);
    if (v.semistable != v.stable)
      throw Error(ErrorKind::ConstancyViolation,
                  "semistable and stable differ off the walls for " + canonical_form(c));
    verdict.push_back(v.stable);
  }
  for (const RatVec& p : sample_interior(ch, walls, box, extra_points, rng)) {
    for (std::size_t k = 0; k < curves.size(); ++k) {
      StabilityVerdict v = is_semistable(curves[k], p);
      if (v.semistable != v.stable || v.stable != verdict[k])
        throw Error(ErrorKind::ConstancyViolation,
                    "classification of " + canonical_form(curves[k]) + " changes inside chamber " +
                        ch.sign_string() + " at " + to_string(p));
    }
  }
  return verdict;
}

AtlasReport atlas_report(int n, std::uint64_t seed, int extra_points) {
  AtlasReport r;
  r.n = n;
  r.walls = wall_arrangement(n);
  Box box = Box::standard(n);
  r.chambers = enumerate_chambers(n, box);
  r.curves = enumerate_curves(n);
  for (const Curve& c : r.curves) r.classes.push_back(canonical_form(c));
  std::mt19937_64 rng(seed);
  for (const Chamber& ch : r.chambers) r.stable.push_back(classify_chamber(ch, r.walls, box, r.curves, extra_points, rng));
  for (std::size_t a = 0; a < r.chambers.size(); ++a) {
    for (std::size_t b = 0; b < r.chambers.size(); ++b) {
      int differ = -1, count = 0;
      for (std::size_t w = 0; w < r.walls.size(); ++w)
        if (r.chambers[a].signs[w] != r.chambers[b].signs[w]) {
          differ = static_cast<int>(w);
          ++count;
        }
      if (count != 1 || r.chambers[a].signs[differ] > 0) continue;
      WallFlip f;
      f.wall = differ;
      f.below = static_cast<int>(a);
      f.above = static_cast<int>(b);
      for (std::size_t k = 0; k < r.curves.size(); ++k) {
        if (r.stable[b][k] && !r.stable[a][k]) f.entered.push_back(static_cast<int>(k));
        if (r.stable[a][k] && !r.stable[b][k]) f.left.push_back(static_cast<int>(k));
      }
      r.flips.push_back(std::move(f));
    }
  }
  return r;
}

std::string chambers_tsv(const std::vector<Wall>& walls, const std::vector<Chamber>& chambers) {
  std::string out = "# walls:";
  for (const Wall& w : walls) out += " " + w.label();
  out += "\nchamber\tsigns\twitness\n";
  for (std::size_t i = 0; i < chambers.size(); ++i)
    out += std::to_string(i) + "\t" + chambers[i].sign_string() + "\t" + to_string(chambers[i].witness) + "\n";
  return out;
}

std::string atlas_tsv(const AtlasReport& r) {
  std::string out = "chamber\tsigns\twitness\tclass\tverdict\n";
  for (std::size_t i = 0; i < r.chambers.size(); ++i) {
    std::string prefix =
        std::to_string(i) + "\t" + r.chambers[i].sign_string() + "\t" + to_string(r.chambers[i].witness) + "\t";
    for (std::size_t k = 0; k < r.classes.size(); ++k)
      out += prefix + r.classes[k] + "\t" + (r.stable[i][k] ? "stable" : "unstable") + "\n";
  }
  return out;
}

}  // namespace git1
