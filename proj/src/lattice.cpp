#include "rootdatum/lattice.hpp"

namespace rootdatum {

namespace {

Int fdiv(const Int& a, const Int& b) {
  // floor division; cpp_int '/' truncates toward zero
  Int q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

void swap_rows(IMat& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.nc; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IMat& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.nr; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void addmul_row(IMat& m, int dst, int src, const Int& c) {
  if (c == 0) return;
  for (int j = 0; j < m.nc; ++j) m.at(dst, j) += c * m.at(src, j);
}

void addmul_col(IMat& m, int dst, int src, const Int& c) {
  if (c == 0) return;
  for (int i = 0; i < m.nr; ++i) m.at(i, dst) += c * m.at(i, src);
}

void negate_row(IMat& m, int i) {
  for (int j = 0; j < m.nc; ++j) m.at(i, j) = -m.at(i, j);
}

}  // namespace

Snf smith_normal_form(const IMat& m) {
  int nr = m.nr, nc = m.nc;
  Snf s{IMat::identity(nr), m, IMat::identity(nc)};
  IMat& d = s.d;
  int steps = std::min(nr, nc);
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix into the pivot slot
      int pi = -1, pj = -1;
      for (int i = t; i < nr; ++i)
        for (int j = t; j < nc; ++j) {
          if (d.at(i, j) == 0) continue;
          if (pi < 0 || abs(d.at(i, j)) < abs(d.at(pi, pj))) { pi = i; pj = j; }
        }
      if (pi < 0) { t = steps; break; }
      swap_rows(d, t, pi); swap_rows(s.u, t, pi);
      swap_cols(d, t, pj); swap_cols(s.v, t, pj);

      bool clean = true;
      for (int i = t + 1; i < nr; ++i) {
        Int q = d.at(i, t) / d.at(t, t);
        addmul_row(d, i, t, -q); addmul_row(s.u, i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < nc; ++j) {
        Int q = d.at(t, j) / d.at(t, t);
        addmul_col(d, j, t, -q); addmul_col(s.v, j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest of the submatrix
      bool fixed = true;
      for (int i = t + 1; i < nr && fixed; ++i)
        for (int j = t + 1; j < nc && fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            addmul_row(d, t, i, 1); addmul_row(s.u, t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (t >= steps) break;
  }
  for (int t = 0; t < steps; ++t)
    if (d.at(t, t) < 0) { negate_row(d, t); negate_row(s.u, t); }
  return s;
}

IMat row_hnf(const IMat& m) {
  IMat w = m;
  int r = 0;
  for (int j = 0; j < w.nc && r < w.nr; ++j) {
    int p = -1;
    for (int i = r; i < w.nr; ++i)
      if (w.at(i, j) != 0) { p = i; break; }
    if (p < 0) continue;
    swap_rows(w, r, p);
    for (int i = r + 1; i < w.nr; ++i) {
      while (w.at(i, j) != 0) {
        Int q = w.at(r, j) / w.at(i, j);
        addmul_row(w, r, i, -q);
        swap_rows(w, r, i);
      }
    }
    if (w.at(r, j) < 0) negate_row(w, r);
    for (int i = 0; i < r; ++i) {
      Int q = fdiv(w.at(i, j), w.at(r, j));
      addmul_row(w, i, r, -q);
    }
    ++r;
  }
  IMat h(r, w.nc);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < w.nc; ++j) h.at(i, j) = w.at(i, j);
  return h;
}

IMat col_hnf(const IMat& m) { return transpose(row_hnf(transpose(m))); }

int rank(const IMat& m) { return row_hnf(m).nr; }

IMat integer_kernel(const IMat& m) {
  Snf s = smith_normal_form(m);
  int steps = std::min(m.nr, m.nc);
  std::vector<int> free_cols;
  for (int j = 0; j < m.nc; ++j)
    if (j >= steps || s.d.at(j, j) == 0) free_cols.push_back(j);
  IMat k(m.nc, int(free_cols.size()));
  for (size_t c = 0; c < free_cols.size(); ++c)
    k.set_col(int(c), s.v.col(free_cols[c]));
  return col_hnf(k);
}

bool solve_integer(const IMat& m, const IVec& b, IVec& out) {
  if (b.size() != size_t(m.nr)) throw Error("dimension_mismatch", "solve shapes");
  Snf s = smith_normal_form(m);
  IVec ub = s.u * b;
  IVec y(m.nc, Int(0));
  int steps = std::min(m.nr, m.nc);
  for (int i = 0; i < m.nr; ++i) {
    Int di = (i < steps) ? s.d.at(i, i) : Int(0);
    if (di == 0) {
      if (ub[i] != 0) return false;
    } else {
      if (ub[i] % di != 0) return false;
      y[i] = ub[i] / di;
    }
  }
  out = s.v * y;
  return true;
}

CokernelInvariants cokernel_invariants(const LatticeMap& f) {
  Snf s = smith_normal_form(f.m);
  CokernelInvariants ci;
  int r = 0;
  int steps = std::min(f.m.nr, f.m.nc);
  for (int i = 0; i < steps; ++i) {
    if (s.d.at(i, i) == 0) break;
    ++r;
    if (s.d.at(i, i) > 1) ci.torsion.push_back(s.d.at(i, i));
  }
  ci.free_rank = f.dst - r;
  return ci;
}

bool contains(const LatticeMap& f, const IVec& v) {
  IVec x;
  return solve_integer(f.m, v, x);
}

bool contains(const LatticeMap& f, const QVec& v) {
  if (!is_integral(v)) return false;  // the image consists of integer vectors
  return contains(f, to_ivec(v));
}

std::optional<IVec> preimage(const LatticeMap& f, const IVec& v) {
  IVec x;
  if (!solve_integer(f.m, v, x)) return std::nullopt;
  return x;
}

Pullback pullback_lattice(const LatticeMap& f, const LatticeMap& g) {
  if (f.dst != g.dst) throw Error("dimension_mismatch", "pullback targets differ");
  IMat neg_g = g.m;
  for (auto& x : neg_g.a) x = -x;
  IMat k = integer_kernel(hcat(f.m, neg_g));
  Pullback pb;
  pb.rank = k.nc;
  IMat ta(f.src, k.nc), tb(g.src, k.nc);
  for (int i = 0; i < f.src; ++i)
    for (int j = 0; j < k.nc; ++j) ta.at(i, j) = k.at(i, j);
  for (int i = 0; i < g.src; ++i)
    for (int j = 0; j < k.nc; ++j) tb.at(i, j) = k.at(f.src + i, j);
  pb.to_a = LatticeMap(pb.rank, f.src, ta);
  pb.to_b = LatticeMap(pb.rank, g.src, tb);
  if (compose(f, pb.to_a).m != compose(g, pb.to_b).m)
    throw Error("construction_failure", "pullback projections do not agree");
  return pb;
}

Pushout pushout_lattice(const LatticeMap& f, const LatticeMap& g) {
  if (f.src != g.src) throw Error("dimension_mismatch", "pushout sources differ");
  IMat neg_g = g.m;
  for (auto& x : neg_g.a) x = -x;
  IMat d = vcat(f.m, neg_g);  // (b1+b2) x a
  Snf s = smith_normal_form(d);
  int steps = std::min(d.nr, d.nc);
  int r = 0;
  for (int i = 0; i < steps; ++i) {
    if (s.d.at(i, i) == 0) break;
    if (s.d.at(i, i) != 1)
      throw Error("torsion_cokernel", "pushout quotient has torsion");
    ++r;
  }
  if (r != f.src)
    throw Error("torsion_cokernel", "anti-diagonal embedding is not injective");
  int n = d.nr, rank_q = n - r;
  IMat p(rank_q, n);
  for (int i = 0; i < rank_q; ++i)
    for (int j = 0; j < n; ++j) p.at(i, j) = s.u.at(r + i, j);
  p = row_hnf(p);
  if (p.nr != rank_q) throw Error("construction_failure", "pushout projection lost rank");
  Pushout po;
  po.rank = rank_q;
  IMat p1(rank_q, f.dst), p2(rank_q, g.dst);
  for (int i = 0; i < rank_q; ++i) {
    for (int j = 0; j < f.dst; ++j) p1.at(i, j) = p.at(i, j);
    for (int j = 0; j < g.dst; ++j) p2.at(i, j) = p.at(i, f.dst + j);
  }
  po.from_b1 = LatticeMap(f.dst, rank_q, p1);
  po.from_b2 = LatticeMap(g.dst, rank_q, p2);
  if (compose(po.from_b1, f).m != compose(po.from_b2, g).m)
    throw Error("construction_failure", "pushout inclusions do not agree");
  return po;
}

IMat right_inverse(const IMat& p) {
  Snf s = smith_normal_form(p);
  int m = p.nr, n = p.nc;
  if (m > n) throw Error("dimension_mismatch", "not a surjection");
  for (int i = 0; i < m; ++i)
    if (s.d.at(i, i) != 1) throw Error("construction_failure", "matrix is not surjective");
  // p = u^-1 [I 0] v^-1, so v [I; 0] u is a right inverse
  IMat e(n, m);
  for (int i = 0; i < m; ++i) e.at(i, i) = 1;
  return s.v * (e * s.u);
}

bool is_unimodular(const IMat& m) {
  if (m.nr != m.nc) return false;
  Int d = det(m);
  return d == 1 || d == -1;
}

}  // namespace rootdatum
