#include "preproj/bimodule.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <tuple>
#include <unordered_map>

namespace preproj {

int BimoduleComplex::length() const {
  int l = -1;
  for (int i = 0; i < num_stages(); ++i)
    if (!gens[i].empty()) l = i;
  return l;
}

Element BimoduleComplex::gen_path(int stage, int g) const {
  if (stage == 0) return Element(Path::trivial(gens[0][g].x));
  Element out;
  for (const auto& t : diff[stage][g]) {
    if (!t.right.is_trivial()) continue;
    Element inner = gen_path(stage - 1, t.gen);
    out += Element(t.left, t.c).mul(inner);
  }
  return out;
}

namespace {

// Basis of a free bimodule block at (x, y, n): (generator, |lambda|, lambda, mu).
struct TripleBlock {
  std::vector<std::array<int, 4>> items;
  std::map<std::array<int, 4>, int> index;
  int size() const { return static_cast<int>(items.size()); }
  int at(const std::array<int, 4>& k) const { return index.at(k); }
};

TripleBlock triple_block(const GradedAlgebra& A, const std::vector<BGen>& gens, int x, int y, int n) {
  TripleBlock tb;
  for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
    int r = n - gens[g].degree;
    if (r < 0) continue;
    for (int k = 0; k <= r; ++k)
      for (int l : A.words(k, x, gens[g].x))
        for (int m : A.words(r - k, gens[g].y, y)) {
          std::array<int, 4> key{g, k, l, m};
          tb.index[key] = tb.size();
          tb.items.push_back(key);
        }
  }
  return tb;
}

// image of a triple basis element of stage i under delta_i (i >= 1) as a sparse vector
// over the stage i-1 block `tgt`; for i == 0, over the global basis of Lambda_n
SparseVec diff_image(const GradedAlgebra& A, const BimoduleComplex& C, int i, const std::array<int, 4>& item, int n,
                     const TripleBlock* tgt) {
  auto [g, k, l, m] = item;
  int r = n - C.gens[i][g].degree - k;
  SparseAcc acc;
  if (i == 0) {
    AVec prod = A.mul_path(AVec{k, sv_unit(l)}, A.basis(r)[m]);
    acc.add(prod.v);
    return acc.take();
  }
  const Path& mu = A.basis(r)[m];
  for (const auto& t : C.diff[i][g]) {
    AVec L = A.mul_path(AVec{k, sv_unit(l)}, t.left);
    if (L.is_zero()) continue;
    AVec R = A.mul_path(A.nf_path(t.right), mu);
    if (R.is_zero()) continue;
    for (const auto& [lw, lc] : L.v)
      for (const auto& [rw, rc] : R.v) acc.add(tgt->at({t.gen, L.degree, lw, rw}), t.c * lc * rc);
  }
  return acc.take();
}

struct KernelBlock {
  TripleBlock tb;
  std::vector<SparseVec> ker;
};

}  // namespace

BimoduleComplex bimodule_resolution(const GradedAlgebra& A, int m) {
  if (!A.finite()) throw TruncationError("bimodule resolution needs a finite-dimensional algebra");
  const int nv = A.quiver().num_vertices();
  const Quiver& q = A.quiver();
  const int top = A.top_degree();
  BimoduleComplex C;
  C.gens.emplace_back();
  C.diff.emplace_back();
  for (int v = 0; v < nv; ++v) C.gens[0].push_back({v, v, 0});
  for (int stage = 0; stage < m; ++stage) {
    const auto& G = C.gens[stage];
    if (G.empty()) break;
    int dmin = INT_MAX, dmax = INT_MIN;
    for (const auto& g : G) {
      dmin = std::min(dmin, g.degree);
      dmax = std::max(dmax, g.degree);
    }
    std::vector<BGen> next;
    std::vector<std::vector<BTerm>> next_diff;
    std::map<std::pair<int, int>, KernelBlock> prev, cur;
    for (int n = dmin + 1; n <= dmax + 2 * top; ++n) {
      cur.clear();
      for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y) {
          KernelBlock kb;
          kb.tb = triple_block(A, G, x, y, n);
          if (kb.tb.items.empty()) continue;
          std::vector<SparseVec> rows;
          int ncols;
          if (stage == 0) {
            ncols = A.dim(n);
            for (const auto& it : kb.tb.items) rows.push_back(diff_image(A, C, 0, it, n, nullptr));
          } else {
            TripleBlock tgt = triple_block(A, C.gens[stage - 1], x, y, n);
            ncols = tgt.size();
            for (const auto& it : kb.tb.items) rows.push_back(diff_image(A, C, stage, it, n, &tgt));
          }
          kb.ker = left_kernel(rows, ncols);
          if (kb.ker.empty()) continue;
          // part of the kernel generated from degree n-1 by arrows on either side
          Echelon e(kb.tb.size());
          for (int a = 0; a < q.num_arrows(); ++a) {
            if (q.arrows[a].src == x) {
              auto it = prev.find({q.arrows[a].tgt, y});
              if (it != prev.end())
                for (const auto& z : it->second.ker) {
                  SparseAcc acc;
                  for (const auto& [i, c] : z) {
                    auto [g, k, l, mm] = it->second.tb.items[i];
                    AVec al = A.lmul_arrow(a, k, l);
                    for (const auto& [w, x2] : al.v) acc.add(kb.tb.at({g, k + 1, w, mm}), c * x2);
                  }
                  e.insert(acc.take());
                }
            }
            if (q.arrows[a].tgt == y) {
              auto it = prev.find({x, q.arrows[a].src});
              if (it != prev.end())
                for (const auto& z : it->second.ker) {
                  SparseAcc acc;
                  for (const auto& [i, c] : z) {
                    auto [g, k, l, mm] = it->second.tb.items[i];
                    int r = n - 1 - G[g].degree - k;
                    for (const auto& [w, x2] : A.rmul(r, mm, a)) acc.add(kb.tb.at({g, k, l, w}), c * x2);
                  }
                  e.insert(acc.take());
                }
            }
          }
          for (const auto& z : kb.ker) {
            SparseVec rem = e.reduce(z);
            if (rem.empty()) continue;
            e.insert(z);
            next.push_back({x, y, n});
            std::vector<BTerm> terms;
            for (const auto& [i, c] : rem) {
              auto [g, k, l, mm] = kb.tb.items[i];
              int r = n - G[g].degree - k;
              terms.push_back({c, A.basis(k)[l], g, A.basis(r)[mm]});
            }
            next_diff.push_back(std::move(terms));
          }
          cur[{x, y}] = std::move(kb);
        }
      prev.swap(cur);
    }
    if (next.empty()) break;
    C.gens.push_back(std::move(next));
    C.diff.push_back(std::move(next_diff));
  }
  return C;
}

bool complex_squares_to_zero(const GradedAlgebra& A, const BimoduleComplex& C) {
  for (int i = 1; i < C.num_stages(); ++i)
    for (const auto& terms : C.diff[i]) {
      std::map<std::tuple<int, int, int, int, int>, Scalar> acc;  // gen, ldeg, l, rdeg, r
      SparseAcc lam;  // for i == 1: element of Lambda
      for (const auto& t : terms) {
        if (i == 1) {
          AVec p = A.nf_path(t.left.then(t.right));
          lam.add(p.v, t.c);
          continue;
        }
        for (const auto& t2 : C.diff[i - 1][t.gen]) {
          AVec L = A.nf_path(t.left.then(t2.left));
          AVec R = A.nf_path(t2.right.then(t.right));
          for (const auto& [l, lc] : L.v)
            for (const auto& [r, rc] : R.v) acc[{t2.gen, L.degree, l, R.degree, r}] += t.c * t2.c * lc * rc;
        }
      }
      if (!lam.empty()) return false;
      for (const auto& [k, c] : acc)
        if (!c.is_zero()) return false;
    }
  return true;
}

bool is_minimal(const BimoduleComplex& C) {
  for (int i = 1; i < C.num_stages(); ++i)
    for (const auto& terms : C.diff[i])
      for (const auto& t : terms)
        if (t.left.is_trivial() && t.right.is_trivial()) return false;
  return true;
}

bool complex_is_exact(const GradedAlgebra& A, const BimoduleComplex& C, int upto, int max_degree) {
  const int nv = A.quiver().num_vertices();
  auto rank_at = [&](int i, int x, int y, int n) {
    if (i >= C.num_stages()) return 0;
    TripleBlock src = triple_block(A, C.gens[i], x, y, n);
    if (src.items.empty()) return 0;
    std::vector<SparseVec> rows;
    int ncols;
    if (i == 0) {
      ncols = A.dim(n);
      for (const auto& it : src.items) rows.push_back(diff_image(A, C, 0, it, n, nullptr));
    } else {
      TripleBlock tgt = triple_block(A, C.gens[i - 1], x, y, n);
      ncols = tgt.size();
      for (const auto& it : src.items) rows.push_back(diff_image(A, C, i, it, n, &tgt));
    }
    return rank_of(rows, ncols);
  };
  for (int n = 0; n <= max_degree; ++n)
    for (int x = 0; x < nv; ++x)
      for (int y = 0; y < nv; ++y) {
        int lam = static_cast<int>(A.words(n, x, y).size());
        std::vector<int> rk(upto + 2);
        for (int i = 0; i <= upto + 1; ++i) rk[i] = rank_at(i, x, y, n);
        if (rk[0] != lam) return false;
        for (int i = 0; i <= upto; ++i) {
          int dimp = i < C.num_stages() ? triple_block(A, C.gens[i], x, y, n).size() : 0;
          if (dimp != rk[i] + rk[i + 1]) return false;
        }
      }
  return true;
}

DoubledQuiver doubled_quiver(const Quiver& q, const BimoduleComplex& C, int d) {
  DoubledQuiver dq;
  dq.quiver = q;
  dq.first_new = q.num_arrows();
  dq.stage = d;
  if (d >= C.num_stages()) return dq;
  for (int g = 0; g < static_cast<int>(C.gens[d].size()); ++g) {
    Element p = C.gen_path(d, g);
    std::string name;
    if (p.size() == 1 && !p.first_path().is_trivial()) {
      for (int a : p.first_path().arrows) name += (name.empty() ? "" : ".") + q.arrows[a].name;
      name += "^v";
    } else {
      name = "k" + std::to_string(g + 1) + "^v";
    }
    while (dq.quiver.arrow_index(name) >= 0) name += "'";
    dq.quiver.add_arrow(name, C.gens[d][g].y, C.gens[d][g].x);
  }
  return dq;
}

std::vector<Element> dualized_relations(const DoubledQuiver& dq, const BimoduleComplex& C) {
  int d = dq.stage;
  std::vector<Element> out;
  if (d < 1 || d >= C.num_stages()) return out;
  std::vector<Element> rel(C.gens[d - 1].size());
  for (int g = 0; g < static_cast<int>(C.gens[d].size()); ++g)
    for (const auto& t : C.diff[d][g]) {
      Path p;
      p.src = t.right.src;
      p.tgt = t.left.tgt;
      p.arrows = t.right.arrows;
      p.arrows.push_back(dq.first_new + g);
      p.arrows.insert(p.arrows.end(), t.left.arrows.begin(), t.left.arrows.end());
      rel[t.gen].add(p, t.c);
    }
  for (auto& r : rel)
    if (!r.is_zero()) out.push_back(r);
  return out;
}

int dual_linear_kernel_dim(const BimoduleComplex& C, int i) {
  if (i >= C.num_stages()) return 0;
  int nh = static_cast<int>(C.gens[i].size());
  if (i + 1 >= C.num_stages()) return nh;
  std::map<std::tuple<Path, int, Path>, int> col;
  std::vector<SparseAcc> rows(nh);
  for (int g = 0; g < static_cast<int>(C.gens[i + 1].size()); ++g)
    for (const auto& t : C.diff[i + 1][g]) {
      if (t.left.length() + t.right.length() != 1) continue;
      auto key = std::make_tuple(t.right, g, t.left);
      auto [it, ins] = col.emplace(key, static_cast<int>(col.size()));
      rows[t.gen].add(it->second, t.c);
    }
  std::vector<SparseVec> rs;
  for (auto& r : rows) rs.push_back(r.take());
  return nh - rank_of(rs, static_cast<int>(col.size()));
}

std::map<int, int> BimoduleRep::graded_dims() const {
  std::map<int, int> out;
  for (const auto& b : basis) ++out[b.degree];
  return out;
}

int BimoduleRep::dim_in_degree(int n) const {
  int c = 0;
  for (const auto& b : basis) c += b.degree == n;
  return c;
}

BimoduleRep from_module(const Quiver& q, const ModuleRep& m) {
  BimoduleRep b;
  b.left_acts = false;
  std::vector<int> off(m.nv, 0);
  for (int v = 0; v < m.nv; ++v) {
    off[v] = b.dim();
    for (int d : m.degrees[v]) b.basis.push_back({0, v, d});
  }
  b.left.assign(q.num_arrows(), std::vector<SparseVec>(b.dim()));
  b.right.assign(q.num_arrows(), std::vector<SparseVec>(b.dim()));
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    for (int i = 0; i < static_cast<int>(m.act[a].size()); ++i) {
      SparseVec r;
      for (const auto& [k, c] : m.act[a][i]) r.emplace_back(k + off[t], c);
      b.right[a][off[s] + i] = std::move(r);
    }
  }
  return b;
}

ModuleRep to_module(const Quiver& q, const BimoduleRep& b) {
  ModuleRep m = ModuleRep::zero(q);
  std::vector<int> local(b.dim());
  for (int i = 0; i < b.dim(); ++i) {
    int v = b.basis[i].y;
    local[i] = m.dim(v);
    m.degrees[v].push_back(b.basis[i].degree);
  }
  for (int a = 0; a < q.num_arrows(); ++a) m.act[a].assign(m.dim(q.arrows[a].src), {});
  for (int a = 0; a < q.num_arrows(); ++a)
    for (int i = 0; i < b.dim(); ++i) {
      if (b.basis[i].y != q.arrows[a].src) continue;
      SparseVec r;
      for (const auto& [k, c] : b.right[a][i]) r.emplace_back(local[k], c);
      std::sort(r.begin(), r.end(), [](const auto& l, const auto& rr) { return l.first < rr.first; });
      m.act[a][local[i]] = std::move(r);
    }
  return m;
}

namespace {

using BlockKey = std::tuple<int, int, int>;

BlockKey key_of(const BimoduleRep& F, int i) {
  const auto& b = F.basis[i];
  return {F.left_acts ? b.x : 0, b.y, b.degree};
}

// Quotient of F by the span of `sub`. The span must be a sub-bimodule and every
// vector must lie in one (x, y, degree) block.
BimoduleRep quotient(const Quiver& q, const BimoduleRep& F, const std::vector<SparseVec>& sub) {
  std::map<BlockKey, std::vector<int>> members;
  std::vector<int> local(F.dim());
  for (int i = 0; i < F.dim(); ++i) {
    auto& mem = members[key_of(F, i)];
    local[i] = static_cast<int>(mem.size());
    mem.push_back(i);
  }
  std::map<BlockKey, Echelon> ech;
  for (const auto& [k, mem] : members) ech.emplace(k, Echelon(static_cast<int>(mem.size())));
  for (const auto& v : sub) {
    if (v.empty()) continue;
    BlockKey k = key_of(F, v.front().first);
    SparseVec lv;
    for (const auto& [i, c] : v) lv.emplace_back(local[i], c);
    std::sort(lv.begin(), lv.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    ech.at(k).insert(lv);
  }
  BimoduleRep out;
  out.left_acts = F.left_acts;
  std::vector<int> newidx(F.dim(), -1);
  for (int i = 0; i < F.dim(); ++i)
    if (!ech.at(key_of(F, i)).is_pivot(local[i])) {
      newidx[i] = out.dim();
      out.basis.push_back(F.basis[i]);
    }
  auto reduce_global = [&](const SparseVec& v) {
    SparseVec r;
    if (v.empty()) return r;
    BlockKey k = key_of(F, v.front().first);
    const auto& mem = members.at(k);
    SparseVec lv;
    for (const auto& [i, c] : v) lv.emplace_back(local[i], c);
    std::sort(lv.begin(), lv.end(), [](const auto& l, const auto& rr) { return l.first < rr.first; });
    for (const auto& [li, c] : ech.at(k).reduce(lv)) r.emplace_back(newidx[mem[li]], c);
    std::sort(r.begin(), r.end(), [](const auto& l, const auto& rr) { return l.first < rr.first; });
    return r;
  };
  out.left.assign(q.num_arrows(), std::vector<SparseVec>(out.dim()));
  out.right.assign(q.num_arrows(), std::vector<SparseVec>(out.dim()));
  for (int a = 0; a < q.num_arrows(); ++a)
    for (int i = 0; i < F.dim(); ++i) {
      if (newidx[i] < 0) continue;
      if (F.left_acts && !F.left[a][i].empty()) out.left[a][newidx[i]] = reduce_global(F.left[a][i]);
      if (!F.right[a][i].empty()) out.right[a][newidx[i]] = reduce_global(F.right[a][i]);
    }
  return out;
}

}  // namespace

BimoduleRep ext_bimodule(const GradedAlgebra& A, const BimoduleComplex& C, int d) {
  if (!A.finite()) throw TruncationError("Ext bimodule needs a finite-dimensional algebra");
  if (d < 1 || d >= C.num_stages() || C.gens[d].empty())
    throw std::invalid_argument("no generators at stage " + std::to_string(d));
  const Quiver& q = A.quiver();
  const int top = A.top_degree();
  const auto& G = C.gens[d];
  // free bimodule on a_g : y_g -> x_g
  BimoduleRep F;
  std::map<std::array<int, 5>, int> idx;  // g, |lambda|, lambda, |mu|, mu
  for (int g = 0; g < static_cast<int>(G.size()); ++g)
    for (int k = 0; k <= top; ++k)
      for (int l = 0; l < A.dim(k); ++l) {
        if (A.basis(k)[l].tgt != G[g].y) continue;
        for (int r = 0; r <= top; ++r)
          for (int m = 0; m < A.dim(r); ++m) {
            if (A.basis(r)[m].src != G[g].x) continue;
            idx[{g, k, l, r, m}] = F.dim();
            F.basis.push_back({A.basis(k)[l].src, A.basis(r)[m].tgt, k + r - G[g].degree});
          }
      }
  F.left.assign(q.num_arrows(), std::vector<SparseVec>(F.dim()));
  F.right.assign(q.num_arrows(), std::vector<SparseVec>(F.dim()));
  for (const auto& [key, i] : idx) {
    auto [g, k, l, r, m] = key;
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrows[a].tgt == F.basis[i].x) {
        SparseAcc acc;
        for (const auto& [w, c] : A.lmul_arrow(a, k, l).v) acc.add(idx.at({g, k + 1, w, r, m}), c);
        F.left[a][i] = acc.take();
      }
      if (q.arrows[a].src == F.basis[i].y) {
        SparseAcc acc;
        for (const auto& [w, c] : A.rmul(r, m, a)) acc.add(idx.at({g, k, l, r + 1, w}), c);
        F.right[a][i] = acc.take();
      }
    }
  }
  // relations delta'_d(h^dual) = sum c mu (x) a_g (x) lambda, and their two-sided multiples
  std::vector<std::vector<std::tuple<Scalar, AVec, int, AVec>>> rel(C.gens[d - 1].size());
  for (int g = 0; g < static_cast<int>(G.size()); ++g)
    for (const auto& t : C.diff[d][g]) rel[t.gen].emplace_back(t.c, A.nf_path(t.right), g, A.nf_path(t.left));
  std::vector<SparseVec> sub;
  for (int h = 0; h < static_cast<int>(rel.size()); ++h) {
    if (rel[h].empty()) continue;
    int ly = C.gens[d - 1][h].y, rx = C.gens[d - 1][h].x;
    for (int k = 0; k <= top; ++k)
      for (int u = 0; u < A.dim(k); ++u) {
        if (A.basis(k)[u].tgt != ly) continue;
        for (int r = 0; r <= top; ++r)
          for (int v = 0; v < A.dim(r); ++v) {
            if (A.basis(r)[v].src != rx) continue;
            SparseAcc acc;
            for (const auto& [c, mu, g, lam] : rel[h]) {
              AVec L = A.mul(AVec{k, sv_unit(u)}, mu);
              if (L.is_zero()) continue;
              AVec R = A.mul(lam, AVec{r, sv_unit(v)});
              for (const auto& [lw, lc] : L.v)
                for (const auto& [rw, rc] : R.v) acc.add(idx.at({g, L.degree, lw, R.degree, rw}), c * lc * rc);
            }
            SparseVec s = acc.take();
            if (!s.empty()) sub.push_back(std::move(s));
          }
      }
  }
  return quotient(q, F, sub);
}

BimoduleRep tensor(const Quiver& q, const BimoduleRep& X, const BimoduleRep& Y) {
  BimoduleRep F;
  F.left_acts = X.left_acts;
  std::unordered_map<long long, int> pair_idx;
  const long long ny = Y.dim();
  std::vector<std::vector<int>> y_by_left(q.num_vertices());
  for (int j = 0; j < Y.dim(); ++j) y_by_left[Y.basis[j].x].push_back(j);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < X.dim(); ++i)
    for (int j : y_by_left[X.basis[i].y]) {
      pair_idx[i * ny + j] = F.dim();
      pairs.emplace_back(i, j);
      F.basis.push_back({X.basis[i].x, Y.basis[j].y, X.basis[i].degree + Y.basis[j].degree});
    }
  F.left.assign(q.num_arrows(), std::vector<SparseVec>(F.dim()));
  F.right.assign(q.num_arrows(), std::vector<SparseVec>(F.dim()));
  auto to_sv = [](SparseAcc& acc) { return acc.take(); };
  for (int p = 0; p < F.dim(); ++p) {
    auto [i, j] = pairs[p];
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (X.left_acts && !X.left[a][i].empty()) {
        SparseAcc acc;
        for (const auto& [k, c] : X.left[a][i]) acc.add(pair_idx.at(k * ny + j), c);
        F.left[a][p] = to_sv(acc);
      }
      if (!Y.right[a][j].empty()) {
        SparseAcc acc;
        for (const auto& [k, c] : Y.right[a][j]) acc.add(pair_idx.at(i * ny + k), c);
        F.right[a][p] = to_sv(acc);
      }
    }
  }
  // balancing relations (x a) (x) y - x (x) (a y)
  std::vector<SparseVec> sub;
  for (int i = 0; i < X.dim(); ++i)
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrows[a].src != X.basis[i].y) continue;
      for (int j : y_by_left[q.arrows[a].tgt]) {
        SparseAcc acc;
        for (const auto& [k, c] : X.right[a][i]) acc.add(pair_idx.at(k * ny + j), c);
        for (const auto& [k, c] : Y.left[a][j]) acc.add(pair_idx.at(i * ny + k), -c);
        SparseVec s = acc.take();
        if (!s.empty()) sub.push_back(std::move(s));
      }
    }
  return quotient(q, F, sub);
}

bool complexes_isomorphic(const GradedAlgebra& A, const BimoduleComplex& C1, const BimoduleComplex& C2, int upto) {
  if (C1.gens.empty() || C2.gens.empty() || C1.gens[0].size() != C2.gens[0].size()) return false;
  // T[g] = image of generator g of C1 as scalar combination of generators of C2
  std::vector<SparseVec> T;
  for (int v = 0; v < static_cast<int>(C1.gens[0].size()); ++v) T.push_back(sv_unit(v));
  int last = std::min(upto, std::max(C1.num_stages(), C2.num_stages()) - 1);
  for (int i = 1; i <= last; ++i) {
    const std::vector<BGen> none;
    const auto& G1 = i < C1.num_stages() ? C1.gens[i] : none;
    const auto& G2 = i < C2.num_stages() ? C2.gens[i] : none;
    if (G1.size() != G2.size()) return false;
    std::vector<SparseVec> Tn(G1.size());
    std::map<std::tuple<int, int, int>, std::vector<int>> blocks2;
    for (int h = 0; h < static_cast<int>(G2.size()); ++h) blocks2[{G2[h].x, G2[h].y, G2[h].degree}].push_back(h);
    std::map<std::tuple<int, int, int>, int> count1;
    for (const auto& g : G1) ++count1[{g.x, g.y, g.degree}];
    for (const auto& [k, hs] : blocks2)
      if (count1[k] != static_cast<int>(hs.size())) return false;
    for (const auto& [k, hs] : blocks2) {
      auto [x, y, n] = k;
      TripleBlock tb = triple_block(A, C2.gens[i - 1], x, y, n);
      auto vec_of = [&](const std::vector<BTerm>& terms, bool through_T) {
        SparseAcc acc;
        for (const auto& t : terms) {
          int l = A.index(t.left), r = A.index(t.right);
          if (through_T) {
            for (const auto& [g2, c2] : T[t.gen]) acc.add(tb.at({g2, t.left.length(), l, r}), t.c * c2);
          } else {
            acc.add(tb.at({t.gen, t.left.length(), l, r}), t.c);
          }
        }
        return acc.take();
      };
      std::vector<SparseVec> rows;
      for (int h : hs) rows.push_back(vec_of(C2.diff[i][h], false));
      SpanSolver solver(rows, tb.size());
      std::vector<SparseVec> mat;
      for (int g = 0; g < static_cast<int>(G1.size()); ++g) {
        if (G1[g].x != x || G1[g].y != y || G1[g].degree != n) continue;
        SparseVec coeffs;
        if (!solver.solve(vec_of(C1.diff[i][g], true), coeffs)) return false;
        SparseVec img;
        for (const auto& [j, c] : coeffs) img.emplace_back(hs[j], c);
        std::sort(img.begin(), img.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Tn[g] = img;
        mat.push_back(img);
      }
      if (rank_of(mat, static_cast<int>(G2.size())) != static_cast<int>(hs.size())) return false;
    }
    T = std::move(Tn);
  }
  return true;
}

}  // namespace preproj
