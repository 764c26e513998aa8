#include "git1/lp.hpp"

#include "git1/errors.hpp"

namespace git1::lp {

namespace {

struct Tableau {
  std::vector<RatVec> rows;  // each row: cols entries then rhs
  RatVec obj;                // reduced costs, then objective value
  std::vector<int> basis;
  int cols = 0;

  void pivot(int r, int c) {
    RatVec& pr = rows[r];
    Rational inv = 1 / pr[c];
    for (auto& v : pr)
      if (v != 0) v *= inv;
    auto eliminate = [&](RatVec& row) {
      if (row[c] == 0) return;
      Rational f = row[c];
      for (int j = 0; j <= cols; ++j)
        if (pr[j] != 0) row[j] -= f * pr[j];
    };
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != r) eliminate(rows[i]);
    eliminate(obj);
    basis[r] = c;
  }

  // Returns false when unbounded. Only columns below `limit` may enter.
  bool run(int limit) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < limit; ++j)
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Result maximize(const RatVec& objective, const std::vector<Constraint>& cons, bool free_vars) {
  const int nv = static_cast<int>(objective.size());
  const int ns = free_vars ? 2 * nv : nv;
  int nslack = 0;
  for (const auto& c : cons) {
    if (static_cast<int>(c.coeffs.size()) != nv) throw Error(ErrorKind::DimensionMismatch, "constraint width");
    if (c.rel != Relation::EQ) ++nslack;
  }
  const int m = static_cast<int>(cons.size());
  const int art0 = ns + nslack;
  Tableau t;
  t.cols = art0 + m;
  t.rows.assign(m, RatVec(t.cols + 1));
  t.basis.assign(m, 0);
  int slack = ns;
  for (int i = 0; i < m; ++i) {
    const Constraint& c = cons[i];
    RatVec& row = t.rows[i];
    for (int j = 0; j < nv; ++j) {
      row[j] = c.coeffs[j];
      if (free_vars) row[nv + j] = -c.coeffs[j];
    }
    if (c.rel == Relation::LE) row[slack++] = 1;
    if (c.rel == Relation::GE) row[slack++] = -1;
    row[t.cols] = c.rhs;
    if (row[t.cols] < 0)
      for (auto& v : row) v = -v;
    row[art0 + i] = 1;
    t.basis[i] = art0 + i;
  }

  // Phase 1: maximize -(sum of artificials).
  t.obj.assign(t.cols + 1, Rational(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= t.cols; ++j)
      if (j < art0 || j == t.cols) t.obj[j] -= t.rows[i][j];
  t.run(t.cols);
  Result res;
  if (t.obj[t.cols] != 0) {
    res.status = Status::Infeasible;
    return res;
  }
  // Drive remaining artificials out of the basis; drop redundant rows.
  for (int i = 0; i < static_cast<int>(t.rows.size());) {
    if (t.basis[i] < art0) {
      ++i;
      continue;
    }
    int c = -1;
    for (int j = 0; j < art0; ++j)
      if (t.rows[i][j] != 0) {
        c = j;
        break;
      }
    if (c < 0) {
      t.rows.erase(t.rows.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    } else {
      t.pivot(i, c);
      ++i;
    }
  }
  for (auto& row : t.rows) {
    row[art0] = row[t.cols];
    row.resize(art0 + 1);
  }
  t.cols = art0;

  // Phase 2.
  RatVec cost(t.cols, Rational(0));
  for (int j = 0; j < nv; ++j) {
    cost[j] = objective[j];
    if (free_vars) cost[nv + j] = -objective[j];
  }
  t.obj.assign(t.cols + 1, Rational(0));
  for (int j = 0; j < t.cols; ++j) t.obj[j] = -cost[j];
  for (int i = 0; i < static_cast<int>(t.rows.size()); ++i) {
    const Rational& cb = cost[t.basis[i]];
    if (cb == 0) continue;
    for (int j = 0; j <= t.cols; ++j) t.obj[j] += cb * t.rows[i][j];
  }
  if (!t.run(t.cols)) {
    res.status = Status::Unbounded;
    return res;
  }
  res.status = Status::Optimal;
  res.value = t.obj[t.cols];
  RatVec full(t.cols, Rational(0));
  for (int i = 0; i < static_cast<int>(t.rows.size()); ++i) full[t.basis[i]] = t.rows[i][t.cols];
  res.x.assign(nv, Rational(0));
  for (int j = 0; j < nv; ++j) res.x[j] = free_vars ? full[j] - full[nv + j] : full[j];
  return res;
}

bool feasible(std::size_t nvars, const std::vector<Constraint>& cons, bool free_vars) {
  return maximize(RatVec(nvars, Rational(0)), cons, free_vars).status != Status::Infeasible;
}

}  // namespace git1::lp
