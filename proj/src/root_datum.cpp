#include "rootdatum/root_datum.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rootdatum {

namespace {

IMat int_inverse(const IMat& m) {
  QMat qi = inverse(to_qmat(m));
  IMat out(qi.nr, qi.nc);
  for (int i = 0; i < qi.nr; ++i)
    for (int j = 0; j < qi.nc; ++j) {
      if (!is_integral(qi.at(i, j)))
        throw Error("construction_failure", "inverse is not integral");
      out.at(i, j) = num(qi.at(i, j));
    }
  return out;
}

[[noreturn]] void axiom_fail(const std::string& axiom, const std::string& detail) {
  throw Error("invalid_root_datum", axiom + ": " + detail);
}

int find_root(const std::vector<IVec>& roots, const IVec& v) {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return int(i);
  return -1;
}

}  // namespace

IMat reflection_matrix(const IVec& root, const IVec& coroot) {
  int n = int(root.size());
  IMat m = IMat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) -= root[i] * coroot[j];
  return m;
}

IMat cartan_matrix(const BasedRootDatum& d) {
  int s = d.nsimple();
  IMat c(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) c.at(i, j) = dot(d.simple_root(i), d.simple_coroot(j));
  return c;
}

std::optional<QVec> simple_coordinates(const BasedRootDatum& d, const QVec& v) {
  int s = d.nsimple();
  QMat m(d.rank, s);
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < d.rank; ++i) m.at(i, j) = Rat(d.simple_root(j)[i]);
  QVec out;
  if (!solve_rational(m, v, out)) return std::nullopt;
  return out;
}

void validate(const BasedRootDatum& d) {
  if (d.rank < 0) axiom_fail("shape", "negative rank");
  if (d.roots.size() != d.coroots.size())
    axiom_fail("shape", "root and coroot counts differ");
  for (const auto& r : d.roots)
    if (r.size() != size_t(d.rank)) axiom_fail("shape", "root length != rank");
  for (const auto& c : d.coroots)
    if (c.size() != size_t(d.rank)) axiom_fail("shape", "coroot length != rank");
  for (const auto& r : d.roots)
    if (is_zero(r)) axiom_fail("shape", "zero root");
  for (size_t i = 0; i < d.roots.size(); ++i)
    for (size_t j = i + 1; j < d.roots.size(); ++j)
      if (d.roots[i] == d.roots[j]) axiom_fail("shape", "duplicate root");
  std::set<int> seen;
  for (int k : d.simple) {
    if (k < 0 || size_t(k) >= d.roots.size()) axiom_fail("shape", "simple index out of range");
    if (!seen.insert(k).second) axiom_fail("shape", "repeated simple index");
  }
  if (d.nsimple() > 0) {
    IMat m(d.rank, d.nsimple());
    for (int j = 0; j < d.nsimple(); ++j) m.set_col(j, d.simple_root(j));
    if (rank(m) != d.nsimple()) axiom_fail("shape", "simple roots are dependent");
  }

  for (size_t k = 0; k < d.roots.size(); ++k)
    if (dot(d.roots[k], d.coroots[k]) != 2)
      axiom_fail("pairing", "<alpha, alpha^vee> != 2 at index " + std::to_string(k));

  for (size_t k = 0; k < d.roots.size(); ++k) {
    int j = find_root(d.roots, -d.roots[k]);
    if (j < 0 || d.coroots[j] != -d.coroots[k])
      axiom_fail("plus_minus", "missing negative of root " + std::to_string(k));
  }
  for (size_t k = 0; k < d.roots.size(); ++k)
    for (size_t j = 0; j < d.roots.size(); ++j)
      if (d.roots[j] == scale(2, d.roots[k]))
        axiom_fail("reduced", "root has a double");

  // each reflection permutes the roots, compatibly on both sides
  for (size_t k = 0; k < d.roots.size(); ++k) {
    for (size_t j = 0; j < d.roots.size(); ++j) {
      IVec r = d.roots[j] - scale(dot(d.roots[j], d.coroots[k]), d.roots[k]);
      int p = find_root(d.roots, r);
      if (p < 0) axiom_fail("reflection", "reflection moves a root outside the set");
      IVec c = d.coroots[j] - scale(dot(d.roots[k], d.coroots[j]), d.coroots[k]);
      if (d.coroots[p] != c)
        axiom_fail("reflection", "coroot side disagrees with root side");
    }
  }

  for (size_t k = 0; k < d.roots.size(); ++k) {
    auto coords = simple_coordinates(d, to_qvec(d.roots[k]));
    if (!coords) axiom_fail("simple_span", "root outside span of simple roots");
    bool pos = true, neg = true;
    for (const auto& c : *coords) {
      if (!is_integral(c)) axiom_fail("simple_span", "non-integer simple coordinates");
      if (c > 0) neg = false;
      if (c < 0) pos = false;
    }
    if (!pos && !neg) axiom_fail("simple_span", "mixed-sign simple coordinates");
  }
}

void validate(const GroupData& gd) {
  validate(gd.datum);
  const auto& g = gd.galois;
  int m = g.order();
  if (m < 1 || int(g.table.size()) != m)
    axiom_fail("galois", "bad table size");
  for (const auto& row : g.table) {
    if (int(row.size()) != m) axiom_fail("galois", "bad table row");
    for (int x : row)
      if (x < 0 || x >= m) axiom_fail("galois", "table entry out of range");
  }
  for (int a = 0; a < m; ++a)
    if (g.table[0][a] != a || g.table[a][0] != a)
      axiom_fail("galois", "element 0 is not the identity");
  for (int a = 0; a < m; ++a) {
    std::set<int> row(g.table[a].begin(), g.table[a].end());
    if (int(row.size()) != m) axiom_fail("galois", "table row is not a permutation");
    bool inv = false;
    for (int b = 0; b < m; ++b) inv |= (g.table[a][b] == 0 && g.table[b][a] == 0);
    if (!inv) axiom_fail("galois", "element without inverse");
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          axiom_fail("galois", "table is not associative");

  if (g.mats[0] != IMat::identity(gd.datum.rank))
    axiom_fail("galois", "matrix of the identity is not the identity");
  for (int a = 0; a < m; ++a) {
    if (g.mats[a].nr != gd.datum.rank || g.mats[a].nc != gd.datum.rank)
      axiom_fail("galois", "action matrix shape");
    if (!is_unimodular(g.mats[a])) axiom_fail("galois", "action matrix not unimodular");
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (g.mats[a] * g.mats[b] != g.mats[g.table[a][b]])
        axiom_fail("galois", "matrices do not realize the table");

  for (int a = 0; a < m; ++a) {
    IMat bt = transpose(int_inverse(g.mats[a]));  // action on X_*
    for (size_t k = 0; k < gd.datum.roots.size(); ++k) {
      int j = find_root(gd.datum.roots, g.mats[a] * gd.datum.roots[k]);
      if (j < 0) axiom_fail("galois", "action does not preserve the roots");
      if (gd.datum.coroots[j] != bt * gd.datum.coroots[k])
        axiom_fail("galois", "action breaks the root/coroot pairing");
    }
    for (int i = 0; i < gd.datum.nsimple(); ++i) {
      IVec im = g.mats[a] * gd.datum.simple_root(i);
      bool found = false;
      for (int j = 0; j < gd.datum.nsimple(); ++j) found |= (gd.datum.simple_root(j) == im);
      if (!found) axiom_fail("galois", "action does not preserve the simple roots");
    }
  }
}

ValidationReport check(const BasedRootDatum& d) {
  try {
    validate(d);
  } catch (const Error& e) {
    return {false, e.what()};
  }
  return {};
}

ValidationReport check(const GroupData& gd) {
  try {
    validate(gd);
  } catch (const Error& e) {
    return {false, e.what()};
  }
  return {};
}

BasedRootDatum dual(const BasedRootDatum& d) {
  return BasedRootDatum{d.rank, d.coroots, d.roots, d.simple};
}

GaloisAction dual_action(const GaloisAction& g) {
  GaloisAction out;
  out.table = g.table;
  for (const auto& m : g.mats) out.mats.push_back(transpose(int_inverse(m)));
  return out;
}

GroupData l_group(const GroupData& gd) {
  return GroupData{dual(gd.datum), dual_action(gd.galois)};
}

std::vector<IMat> weyl_group(const BasedRootDatum& d) {
  if (d.rank > 8) throw Error("rank_guard", "Weyl group generation limited to rank <= 8");
  std::vector<IMat> gens;
  for (int i = 0; i < d.nsimple(); ++i)
    gens.push_back(reflection_matrix(d.simple_root(i), d.simple_coroot(i)));
  std::set<std::vector<Int>> seen;
  std::vector<IMat> group{IMat::identity(d.rank)};
  seen.insert(group[0].a);
  for (size_t head = 0; head < group.size(); ++head) {
    IMat cur = group[head];  // copy: group may reallocate below
    for (const auto& s : gens) {
      IMat nx = s * cur;
      if (seen.insert(nx.a).second) {
        group.push_back(nx);
        if (group.size() > 1000000)
          throw Error("rank_guard", "Weyl group exceeds the order bound");
      }
    }
  }
  std::sort(group.begin(), group.end(),
            [](const IMat& x, const IMat& y) { return x.a < y.a; });
  return group;
}

std::vector<int> positive_root_indices(const BasedRootDatum& d) {
  std::vector<int> out;
  for (size_t k = 0; k < d.roots.size(); ++k) {
    auto coords = simple_coordinates(d, to_qvec(d.roots[k]));
    if (!coords) continue;
    bool pos = true;
    for (const auto& c : *coords) pos &= (c >= 0);
    if (pos) out.push_back(int(k));
  }
  return out;
}

QVec half_sum_positive_roots(const BasedRootDatum& d) {
  QVec sum(d.rank, Rat(0));
  for (int k : positive_root_indices(d)) sum = sum + to_qvec(d.roots[k]);
  return scale(Rat(1, 2), sum);
}

BasedRootDatum datum_from_simple(int rank, const std::vector<IVec>& sroots,
                                 const std::vector<IVec>& scoroots) {
  if (sroots.size() != scoroots.size())
    throw Error("dimension_mismatch", "simple root/coroot counts differ");
  std::map<IVec, IVec> by_root;
  std::vector<std::pair<IVec, IVec>> queue;
  for (size_t i = 0; i < sroots.size(); ++i) {
    by_root[sroots[i]] = scoroots[i];
    queue.emplace_back(sroots[i], scoroots[i]);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [r, c] = queue[head];
    for (size_t i = 0; i < sroots.size(); ++i) {
      IVec nr = r - scale(dot(r, scoroots[i]), sroots[i]);
      IVec nc = c - scale(dot(sroots[i], c), scoroots[i]);
      auto it = by_root.find(nr);
      if (it == by_root.end()) {
        by_root[nr] = nc;
        queue.emplace_back(nr, nc);
        if (by_root.size() > 10000)
          throw Error("rank_guard", "reflection closure exceeds the root bound");
      } else if (it->second != nc) {
        throw Error("construction_failure", "inconsistent coroot in reflection closure");
      }
    }
  }
  BasedRootDatum d;
  d.rank = rank;
  for (auto& [r, c] : by_root) {
    d.roots.push_back(r);
    d.coroots.push_back(c);
  }
  for (const auto& sr : sroots) {
    int k = find_root(d.roots, sr);
    if (k < 0) throw Error("construction_failure", "lost a simple root");
    d.simple.push_back(k);
  }
  return d;
}

GroupData standard_group(const std::string& name, int n) {
  auto bad = [&] {
    return Error("unknown_group", "no catalog entry '" + name + "' with parameter " +
                                      std::to_string(n));
  };
  if (n < 1) throw bad();
  if (name == "Torus") {
    BasedRootDatum d;
    d.rank = n;
    return GroupData{d, GaloisAction::trivial(n)};
  }
  if (name == "GL" || name == "UnitaryQuasiSplit" || name == "U") {
    std::vector<IVec> sr, sc;
    for (int i = 0; i + 1 < n; ++i) {
      IVec v(n, Int(0));
      v[i] = 1;
      v[i + 1] = -1;
      sr.push_back(v);
      sc.push_back(v);
    }
    BasedRootDatum d = datum_from_simple(n, sr, sc);
    if (name == "GL") return GroupData{d, GaloisAction::trivial(n)};
    IMat c(n, n);
    for (int i = 0; i < n; ++i) c.at(i, n - 1 - i) = -1;
    GaloisAction g{{{0, 1}, {1, 0}}, {IMat::identity(n), c}};
    return GroupData{d, g};
  }
  auto cartan_a = [](int s) {
    IMat c(s, s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) c.at(i, j) = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
    return c;
  };
  if (name == "SL") {
    int s = n - 1;
    IMat c = cartan_a(s);
    std::vector<IVec> sr, sc;
    for (int i = 0; i < s; ++i) {
      sr.push_back(c.row(i));  // roots in fundamental-weight coordinates
      IVec e(s, Int(0));
      e[i] = 1;
      sc.push_back(e);
    }
    return GroupData{datum_from_simple(s, sr, sc), GaloisAction::trivial(s)};
  }
  if (name == "PGL") {
    int s = n - 1;
    IMat c = cartan_a(s);
    std::vector<IVec> sr, sc;
    for (int i = 0; i < s; ++i) {
      IVec e(s, Int(0));
      e[i] = 1;
      sr.push_back(e);  // roots in root-lattice coordinates
      sc.push_back(c.col(i));
    }
    return GroupData{datum_from_simple(s, sr, sc), GaloisAction::trivial(s)};
  }
  if (name == "Sp") {
    std::vector<IVec> sr, sc;
    for (int i = 0; i + 1 < n; ++i) {
      IVec v(n, Int(0));
      v[i] = 1;
      v[i + 1] = -1;
      sr.push_back(v);
      sc.push_back(v);
    }
    IVec lng(n, Int(0)), sht(n, Int(0));
    lng[n - 1] = 2;
    sht[n - 1] = 1;
    sr.push_back(lng);
    sc.push_back(sht);
    return GroupData{datum_from_simple(n, sr, sc), GaloisAction::trivial(n)};
  }
  throw bad();
}

std::vector<std::pair<std::string, int>> catalog_entries() {
  std::vector<std::pair<std::string, int>> out;
  for (int n = 1; n <= 3; ++n) out.emplace_back("Torus", n);
  for (int n = 1; n <= 4; ++n) out.emplace_back("GL", n);
  for (int n = 1; n <= 4; ++n) out.emplace_back("SL", n);
  for (int n = 1; n <= 4; ++n) out.emplace_back("PGL", n);
  for (int n = 1; n <= 2; ++n) out.emplace_back("Sp", n);
  for (int n = 1; n <= 4; ++n) out.emplace_back("UnitaryQuasiSplit", n);
  return out;
}

GroupData direct_sum(const GroupData& a, const GroupData& b) {
  GroupData out;
  int ra = a.datum.rank, rb = b.datum.rank;
  out.datum.rank = ra + rb;
  auto pad_front = [&](const IVec& v) {
    IVec w(ra + rb, Int(0));
    for (int i = 0; i < ra; ++i) w[i] = v[i];
    return w;
  };
  auto pad_back = [&](const IVec& v) {
    IVec w(ra + rb, Int(0));
    for (int i = 0; i < rb; ++i) w[ra + i] = v[i];
    return w;
  };
  for (const auto& r : a.datum.roots) out.datum.roots.push_back(pad_front(r));
  for (const auto& c : a.datum.coroots) out.datum.coroots.push_back(pad_front(c));
  for (const auto& r : b.datum.roots) out.datum.roots.push_back(pad_back(r));
  for (const auto& c : b.datum.coroots) out.datum.coroots.push_back(pad_back(c));
  out.datum.simple = a.datum.simple;
  for (int k : b.datum.simple) out.datum.simple.push_back(int(a.datum.roots.size()) + k);

  if (a.galois.table == b.galois.table) {
    out.galois.table = a.galois.table;
    for (int g = 0; g < a.galois.order(); ++g)
      out.galois.mats.push_back(dsum(a.galois.mats[g], b.galois.mats[g]));
  } else if (a.galois.order() == 1) {
    out.galois.table = b.galois.table;
    for (int g = 0; g < b.galois.order(); ++g)
      out.galois.mats.push_back(dsum(IMat::identity(ra), b.galois.mats[g]));
  } else if (b.galois.order() == 1) {
    out.galois.table = a.galois.table;
    for (int g = 0; g < a.galois.order(); ++g)
      out.galois.mats.push_back(dsum(a.galois.mats[g], IMat::identity(rb)));
  } else {
    throw Error("unsupported", "direct sum of incompatible actions");
  }
  return out;
}

namespace {

// Search state for a determinant +-1 element of m0 + <kernel columns>.
struct UnimodularSearch {
  int r;
  const IMat& kernel;  // (r*r) x m
  IVec base;           // vec(M0), row-major

  bool unimodular(const IVec& flat, IMat& out) const {
    IMat m(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) m.at(i, j) = flat[size_t(i) * r + j];
    if (!is_unimodular(m)) return false;
    out = m;
    return true;
  }

  bool run(long budget, IMat& out) const {
    int dims = kernel.nc;
    if (dims == 0) return unimodular(base, out);
    long bound = 0;
    double total = 1;
    for (long b = 1; b <= 3; ++b) {
      total = 1;
      bool ok = true;
      for (int i = 0; i < dims && ok; ++i) {
        total *= (2 * b + 1);
        ok = total <= double(budget);
      }
      if (ok)
        bound = b;
      else
        break;
    }
    if (bound == 0) {
      // dimension too high for a box: probe single-coordinate perturbations
      IVec flat = base;
      if (unimodular(flat, out)) return true;
      for (int i = 0; i < dims; ++i)
        for (long c : {1L, -1L, 2L, -2L, 3L, -3L}) {
          flat = base;
          for (int k = 0; k < kernel.nr; ++k) flat[k] += Int(c) * kernel.at(k, i);
          if (unimodular(flat, out)) return true;
        }
      return false;
    }
    std::vector<long> coef(dims, -bound);
    for (;;) {
      IVec flat = base;
      for (int i = 0; i < dims; ++i) {
        if (coef[i] == 0) continue;
        for (int k = 0; k < kernel.nr; ++k) flat[k] += Int(coef[i]) * kernel.at(k, i);
      }
      if (unimodular(flat, out)) return true;
      int i = 0;
      while (i < dims && coef[i] == bound) coef[i++] = -bound;
      if (i == dims) return false;
      ++coef[i];
    }
  }
};

void size_reduce(IVec& v, const IMat& kernel) {
  for (int pass = 0; pass < 4; ++pass) {
    bool moved = false;
    for (int j = 0; j < kernel.nc; ++j) {
      IVec k = kernel.col(j);
      Int kk = dot(k, k);
      if (kk == 0) continue;
      Int t = dot(v, k);
      // nearest integer to t/kk
      Int q = (2 * t + kk) / (2 * kk);
      if (2 * t + kk < 0 && (2 * t + kk) % (2 * kk) != 0) --q;
      if (q != 0) {
        v = v - scale(q, k);
        moved = true;
      }
    }
    if (!moved) break;
  }
}

std::optional<IMat> based_isomorphism_impl(const BasedRootDatum& a, const BasedRootDatum& b,
                                           const GaloisAction* ga, const GaloisAction* gb) {
  if (a.rank != b.rank || a.roots.size() != b.roots.size() || a.nsimple() != b.nsimple())
    return std::nullopt;
  if (a.rank > 6) throw Error("rank_guard", "based isomorphism search limited to rank <= 6");
  if (ga && (ga->order() != gb->order() || ga->table != gb->table)) return std::nullopt;

  int r = a.rank, s = a.nsimple();
  IMat ca = cartan_matrix(a), cb = cartan_matrix(b);

  std::map<IVec, int> b_root_index;
  for (size_t k = 0; k < b.roots.size(); ++k) b_root_index[b.roots[k]] = int(k);

  auto full_verify = [&](const IMat& m) {
    if (!is_unimodular(m)) return false;
    IMat mt = transpose(int_inverse(m));
    for (size_t k = 0; k < a.roots.size(); ++k) {
      auto it = b_root_index.find(m * a.roots[k]);
      if (it == b_root_index.end()) return false;
      if (b.coroots[it->second] != mt * a.coroots[k]) return false;
    }
    return true;
  };

  std::vector<int> perm(s);
  for (int i = 0; i < s; ++i) perm[i] = i;
  do {
    bool dynkin = true;
    for (int i = 0; i < s && dynkin; ++i)
      for (int j = 0; j < s && dynkin; ++j)
        dynkin = (ca.at(i, j) == cb.at(perm[i], perm[j]));
    if (!dynkin) continue;

    // linear constraints on vec(M), row-major
    std::vector<IVec> rows;
    IVec rhs;
    auto add_row = [&](IVec row, Int v) {
      rows.push_back(std::move(row));
      rhs.push_back(std::move(v));
    };
    for (int i = 0; i < s; ++i) {
      const IVec& al = a.simple_root(i);
      const IVec& be = b.simple_root(perm[i]);
      for (int c = 0; c < r; ++c) {
        IVec row(size_t(r) * r, Int(0));
        for (int j = 0; j < r; ++j) row[size_t(c) * r + j] = al[j];
        add_row(std::move(row), be[c]);
      }
      const IVec& alv = a.simple_coroot(i);
      const IVec& bev = b.simple_coroot(perm[i]);
      for (int c = 0; c < r; ++c) {
        IVec row(size_t(r) * r, Int(0));
        for (int j = 0; j < r; ++j) row[size_t(j) * r + c] = bev[j];
        add_row(std::move(row), alv[c]);
      }
    }
    if (ga) {
      for (int g = 1; g < ga->order(); ++g) {
        const IMat& ag = ga->mats[g];
        const IMat& bg = gb->mats[g];
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) {
            IVec row(size_t(r) * r, Int(0));
            for (int k = 0; k < r; ++k) {
              row[size_t(i) * r + k] += ag.at(k, j);
              row[size_t(k) * r + j] -= bg.at(i, k);
            }
            add_row(std::move(row), Int(0));
          }
      }
    }

    IMat sys(int(rows.size()), r * r);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < r * r; ++j) sys.at(int(i), j) = rows[i][j];

    IVec m0;
    if (sys.nr == 0) {
      m0 = IMat::identity(r).a;  // unconstrained: the identity will do
    } else if (!solve_integer(sys, rhs, m0)) {
      continue;
    }
    IMat kernel = sys.nr == 0 ? IMat(r * r, 0) : integer_kernel(sys);
    size_reduce(m0, kernel);

    UnimodularSearch search{r, kernel, m0};
    IMat m;
    if (search.run(2000000, m) && full_verify(m)) {
      if (ga) {
        bool ok = true;
        for (int g = 0; g < ga->order() && ok; ++g)
          ok = (m * ga->mats[g] == gb->mats[g] * m);
        if (!ok) continue;
      }
      return m;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

std::optional<IMat> based_isomorphism(const BasedRootDatum& a, const BasedRootDatum& b) {
  return based_isomorphism_impl(a, b, nullptr, nullptr);
}

std::optional<IMat> based_isomorphism(const BasedRootDatum& a, const BasedRootDatum& b,
                                      const GaloisAction& ga, const GaloisAction& gb) {
  return based_isomorphism_impl(a, b, &ga, &gb);
}

DerivedCovers derived_covers(const GroupData& gd) {
  const BasedRootDatum& d = gd.datum;
  int s = d.nsimple();
  IMat c = cartan_matrix(d);

  std::vector<IVec> sc_roots, sc_coroots, ad_roots, ad_coroots;
  for (int i = 0; i < s; ++i) {
    sc_roots.push_back(c.row(i));
    IVec e(s, Int(0));
    e[i] = 1;
    sc_coroots.push_back(e);
    ad_roots.push_back(e);
    ad_coroots.push_back(c.col(i));
  }

  DerivedCovers out;
  out.sc.datum = datum_from_simple(s, sc_roots, sc_coroots);
  out.ad.datum = datum_from_simple(s, ad_roots, ad_coroots);

  // transport the action as the permutation it induces on the simple roots
  int m = gd.galois.order();
  out.sc.galois.table = gd.galois.table;
  out.ad.galois.table = gd.galois.table;
  for (int g = 0; g < m; ++g) {
    IMat p(s, s);
    for (int i = 0; i < s; ++i) {
      IVec im = gd.galois.mats[g] * d.simple_root(i);
      int j = -1;
      for (int t = 0; t < s; ++t)
        if (d.simple_root(t) == im) { j = t; break; }
      if (j < 0) throw Error("construction_failure", "action does not permute simple roots");
      p.at(j, i) = 1;
    }
    out.sc.galois.mats.push_back(p);
    out.ad.galois.mats.push_back(p);
  }

  IMat a2f(d.rank, s), f2s(s, d.rank);
  for (int i = 0; i < s; ++i) {
    a2f.set_col(i, d.simple_root(i));
    for (int j = 0; j < d.rank; ++j) f2s.at(i, j) = d.simple_coroot(i)[j];
  }
  out.ad_to_full = LatticeMap(s, d.rank, a2f);
  out.full_to_sc = LatticeMap(d.rank, s, f2s);
  out.ad_to_sc = compose(out.full_to_sc, out.ad_to_full);
  if (out.ad_to_sc.m != transpose(c))
    throw Error("construction_failure", "cover inclusion is not the Cartan transpose");
  validate(out.sc);
  validate(out.ad);
  return out;
}

}  // namespace rootdatum
