#include <functional>

#include "git1/function_field.hpp"

namespace git1 {

namespace {

template <class K>
class Checker {
 public:
  explicit Checker(IdentityReport& r) : r_(r) {}

  void scalar(const std::string& tag, const K& lhs, const K& rhs, const std::string& where) {
    add(tag, lhs == rhs, where);
  }

  // lhs(k) == rhs(k) on every component k.
  void functional(const std::string& tag, int comps, const std::function<RF<K>(int)>& lhs,
                  const std::function<RF<K>(int)>& rhs, const std::string& where) {
    bool ok = true;
    for (int k = 0; k < comps && ok; ++k) ok = lhs(k) == rhs(k);
    add(tag, ok, where);
  }

  void add(const std::string& tag, bool ok, const std::string& where) {
    IdentityCheck& c = r_.entry(tag);
    ++c.instances;
    if (!ok) {
      ++c.failures;
      if (c.witness.empty()) c.witness = where;
    }
  }

 private:
  IdentityReport& r_;
};

std::string at(std::initializer_list<std::pair<const char*, int>> parts) {
  std::string s;
  for (const auto& [name, v] : parts) {
    if (!s.empty()) s += " ";
    s += std::string(name) + "=" + std::to_string(v);
  }
  return s;
}

template <class K>
K pw(const K& v, int e) {
  K r(1);
  for (int i = 0; i < e; ++i) r *= v;
  return r;
}

}  // namespace

template <class K>
IdentityReport verify_identities(const Table<K>& t) {
  IdentityReport report;
  Checker<K> chk(report);
  const int n = t.n;
  const int comps = t.total_components;
  const auto& a = t.a;
  const auto& b = t.b;
  const auto& e = t.e;
  const auto& c = t.c;  // c[i][j][j'] = c_{jj'}(i)
  const auto& x = t.x;
  auto distinct = [](std::initializer_list<int> v) {
    for (auto p = v.begin(); p != v.end(); ++p)
      for (auto q = p + 1; q != v.end(); ++q)
        if (*p == *q) return false;
    return true;
  };
  auto cst = [](const K& v) { return RF<K>(v); };

  for (int i = 1; i <= n; ++i) {
    if (!t.chart[i]) continue;
    const Fn<K>& f = t.f[i];
    const Fn<K>& h = t.h[i];
    const K& pi = t.pi[i];
    const K& s = t.s[i];
    chk.functional(
        "g1-curve-eq", comps, [&](int k) { return h[k] * h[k]; },
        [&](int k) { return f[k] * f[k] * f[k] + cst(pi) * f[k] + cst(s); }, at({{"i", i}}));
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const Fn<K>& hij = t.hij[i][j];
      const K aij = a[i][j], bij = b[i][j], eij = e[i][j];
      chk.functional(
          "g1-curve-eq", comps, [&](int k) { return f[k] * hij[k]; },
          [&](int k) { return cst(bij) * hij[k] + cst(aij) * h[k] + cst(aij * eij); }, at({{"i", i}, {"j", j}}));
      chk.functional(
          "g1-curve-eq", comps, [&](int k) { return h[k] * hij[k]; },
          [&](int k) {
            return cst(eij) * hij[k] + cst(aij) * f[k] * f[k] + cst(aij * bij) * f[k] + cst(aij * (pi + bij * bij));
          },
          at({{"i", i}, {"j", j}}));
      chk.scalar("s-for-eq", s, eij * eij - bij * (pi + bij * bij), at({{"i", i}, {"j", j}}));
      chk.scalar("a-x-ij-eq", x[j], -(aij * x[i]), at({{"i", i}, {"j", j}}));
    }

    for (int j = 1; j <= n; ++j)
      for (int jp = 1; jp <= n; ++jp) {
        if (!distinct({i, j, jp})) continue;
        const Fn<K>& g1 = t.hij[i][j];
        const Fn<K>& g2 = t.hij[i][jp];
        const K aa = a[i][j] * a[i][jp];
        std::vector<RF<K>> residual(comps);
        for (int k = 0; k < comps; ++k)
          residual[k] = g1[k] * g2[k] - cst(c[i][jp][j]) * g1[k] - cst(c[i][j][jp]) * g2[k] - cst(aa) * f[k];
        bool constant = true;
        for (int k = 0; k < comps; ++k)
          if (!residual[k].is_constant() || !(residual[k] == residual[0])) constant = false;
        const std::string w = at({{"i", i}, {"j", j}, {"j'", jp}});
        chk.add("h-ij-ij'-eq", constant, w);
        chk.add("d-jj'-i-eq", constant && residual[0].constant_value() == aa * (b[i][j] + b[i][jp]), w);
      }

    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (!distinct({i, j, k})) continue;
        const std::string w = at({{"i", i}, {"j", j}, {"k", k}});
        const K cjk = c[i][j][k];
        chk.scalar("c-kj-jk-eq", a[i][j] * c[i][k][j], -(a[i][k] * cjk), w);
        chk.scalar("b-c-e-eq", (b[i][k] - b[i][j]) * cjk, a[i][j] * (e[i][j] + e[i][k]), w);
        chk.scalar("e-c-pi-b-eq", (e[i][k] - e[i][j]) * cjk,
                   a[i][j] * (t.pi[i] + b[i][j] * b[i][j] + b[i][j] * b[i][k] + b[i][k] * b[i][k]), w);
        for (int jp = 1; jp <= n; ++jp) {
          if (!distinct({i, j, k, jp})) continue;
          chk.scalar("c-quadr-eq", cjk * c[i][jp][k] - c[i][jp][j] * cjk - c[i][j][jp] * c[i][jp][k],
                     a[i][j] * a[i][jp] * (b[i][k] + b[i][j] + b[i][jp]), at({{"i", i}, {"j", j}, {"j'", jp}, {"k", k}}));
        }
      }
  }

  // Two overlapping charts i and j.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || !t.chart[i] || !t.chart[j]) continue;
      const std::string w = at({{"i", i}, {"j", j}});
      const K aij = a[i][j];
      const Fn<K>& hij = t.hij[i][j];
      const Fn<K>& hji = t.hij[j][i];
      const Fn<K>& fi = t.f[i];
      const Fn<K>& hi = t.h[i];
      chk.functional(
          "h-ji-ij-eq", comps, [&](int k) { return hji[k]; }, [&](int k) { return cst(a[j][i]) * hij[k]; }, w);
      chk.functional(
          "f-ji-eq", comps, [&](int k) { return t.f[j][k]; },
          [&](int k) { return hij[k] * hij[k] - cst(aij * aij) * fi[k] - cst(aij * aij * b[i][j]); }, w);
      chk.functional(
          "h-ji-eq", comps, [&](int k) { return t.h[j][k]; },
          [&](int k) {
            return hij[k] * hij[k] * hij[k] - cst(pw(aij, 3)) * hi[k] - cst(K(3) * aij * aij * b[i][j]) * hij[k] -
                   cst(K(2) * pw(aij, 3) * e[i][j]);
          },
          w);
      chk.scalar("b-e-pi-ji-eq", b[j][i], aij * aij * b[i][j], w + " b");
      chk.scalar("b-e-pi-ji-eq", e[j][i], pw(aij, 3) * e[i][j], w + " e");
      chk.scalar("b-e-pi-ji-eq", t.pi[j], pw(aij, 4) * t.pi[i], w + " pi");
      chk.scalar("b-e-pi-ji-eq", t.s[j], pw(aij, 6) * t.s[i], w + " s");

      for (int k = 1; k <= n; ++k) {
        if (!distinct({i, j, k})) continue;
        const std::string wk = at({{"i", i}, {"j", j}, {"k", k}});
        chk.scalar("a-ijk-eq", a[i][k], -(aij * a[j][k]), wk);
        chk.scalar("c-ijk-eq", c[j][i][k], a[j][i] * c[i][j][k], wk);
        chk.scalar("c-ijk-bis-eq", c[j][k][i], a[i][k] * c[j][i][k], wk);
        chk.scalar("c-ijk-bis-eq", c[j][k][i], -(a[j][k] * c[i][j][k]), wk);
        const Fn<K>& hjk = t.hij[j][k];
        const Fn<K>& hik = t.hij[i][k];
        chk.functional(
            "h-jk-i-eq", comps, [&](int q) { return hjk[q]; },
            [&](int q) { return hik[q] + cst(a[j][k]) * hij[q] - cst(c[i][k][j]); }, wk);
        for (int mm = 1; mm <= n; ++mm) {
          if (!distinct({i, j, k, mm})) continue;
          chk.scalar("c-ijkm-eq", c[j][k][mm], c[i][k][mm] + a[j][k] * c[i][j][mm] - c[i][k][j],
                     at({{"i", i}, {"j", j}, {"k", k}, {"m", mm}}));
        }
      }
    }

  // Chart-k expressions for quantities of chart i.
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i) {
      if (i == k || !t.chart[k] || !t.chart[i]) continue;
      const K aki = a[k][i];
      for (int j = 1; j <= n; ++j) {
        if (!distinct({i, j, k})) continue;
        const std::string w = at({{"i", i}, {"j", j}, {"k", k}});
        const K cij = c[k][i][j];
        chk.scalar("b-c-ijk-eq", b[i][j], cij * cij - aki * aki * b[k][j] - aki * aki * b[k][i], w);
        chk.scalar("e-c-ijk-eq", e[i][j],
                   pw(cij, 3) - pw(aki, 3) * e[k][j] - K(3) * aki * aki * b[k][i] * cij - K(2) * pw(aki, 3) * e[k][i], w);
      }
    }

  const Globals<K> g = global_sections(t, &report);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const std::string w = at({{"i", i}, {"j", j}});
      const K& Bij = g.B[i][j];
      chk.scalar("S-Pi-eq", g.S[i], g.E[i][j] * g.E[i][j] - Bij * (g.Pi[i] + Bij * Bij), w);
      chk.scalar("global-B-sym", Bij * x[j] * x[j], g.B[j][i] * x[i] * x[i], w);
      chk.scalar("global-E-sym", g.E[i][j] * pw(x[j], 3), -(g.E[j][i] * pw(x[i], 3)), w);
      chk.scalar("global-Pi-sym", g.Pi[i] * pw(x[j], 4), g.Pi[j] * pw(x[i], 4), w);
      for (int jp = 1; jp <= n; ++jp) {
        if (!distinct({i, j, jp})) continue;
        const std::string w3 = at({{"i", i}, {"j", j}, {"j'", jp}});
        const K& C = g.C[i][j][jp];
        chk.scalar("C-sq-identity-eq", C * C, g.B[j][jp] * x[i] * x[i] + (Bij + g.B[i][jp]) * x[j] * x[j], w3);
        chk.scalar("global-C-antisym", C, -g.C[j][i][jp], w3);
        chk.scalar("global-C-swap", C * x[jp], g.C[jp][i][j] * x[j], w3);
        chk.scalar("global-C-cube", pw(C, 3),
                   g.E[j][jp] * pw(x[i], 3) - g.E[i][jp] * pw(x[j], 3) + K(3) * C * Bij * x[j] * x[j] -
                       K(2) * g.E[i][j] * pw(x[j], 3),
                   w3);
        for (int mm = 1; mm <= n; ++mm) {
          if (!distinct({i, j, jp, mm})) continue;
          chk.scalar("global-C-change", C * x[mm],
                     g.C[mm][j][jp] * x[i] - g.C[mm][i][jp] * x[j] - g.C[mm][j][i] * x[i],
                     at({{"i", i}, {"j", j}, {"j'", jp}, {"m", mm}}));
        }
      }
      for (int k = 1; k <= n; ++k) {
        if (!distinct({i, j, k})) continue;
        const std::string wk = at({{"i", i}, {"j", j}, {"k", k}});
        const K& Cjk = g.C[i][j][k];
        chk.scalar("global-b-c-e", (g.B[i][k] - Bij) * Cjk, -((g.E[i][j] + g.E[i][k]) * x[j]), wk);
        chk.scalar("global-e-c-pi-b", (g.E[i][k] - g.E[i][j]) * Cjk,
                   -((g.Pi[i] + Bij * Bij + Bij * g.B[i][k] + g.B[i][k] * g.B[i][k]) * x[j]), wk);
        for (int jp = 1; jp <= n; ++jp) {
          if (!distinct({i, j, k, jp})) continue;
          chk.scalar("global-c-quadr", Cjk * g.C[i][jp][k] - g.C[i][jp][j] * Cjk - g.C[i][j][jp] * g.C[i][jp][k],
                     (g.B[i][k] + Bij + g.B[i][jp]) * x[j] * x[jp], at({{"i", i}, {"j", j}, {"j'", jp}, {"k", k}}));
        }
      }
    }
  return report;
}

template IdentityReport verify_identities(const Table<Rational>&);
template IdentityReport verify_identities(const Table<Sym>&);

}  // namespace git1
