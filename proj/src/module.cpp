#include "preproj/module.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace preproj {

ModuleRep ModuleRep::zero(const Quiver& q) {
  ModuleRep m;
  m.nv = q.num_vertices();
  m.degrees.assign(m.nv, {});
  m.act.assign(q.num_arrows(), {});
  return m;
}

int ModuleRep::total_dim() const {
  int s = 0;
  for (const auto& d : degrees) s += static_cast<int>(d.size());
  return s;
}

std::vector<int> ModuleRep::dim_vector() const {
  std::vector<int> v;
  for (const auto& d : degrees) v.push_back(static_cast<int>(d.size()));
  return v;
}

int ModuleRep::min_degree() const {
  int m = INT_MAX;
  for (const auto& d : degrees)
    for (int x : d) m = std::min(m, x);
  return m;
}

int ModuleRep::max_degree() const {
  int m = INT_MIN;
  for (const auto& d : degrees)
    for (int x : d) m = std::max(m, x);
  return m;
}

std::vector<int> ModuleRep::block(int v, int n) const {
  std::vector<int> out;
  for (int i = 0; i < dim(v); ++i)
    if (degrees[v][i] == n) out.push_back(i);
  return out;
}

SparseVec ModuleRep::apply_arrow(int a, const SparseVec& x) const {
  SparseAcc acc;
  for (const auto& [i, c] : x) acc.add(act[a][i], c);
  return acc.take();
}

SparseVec ModuleRep::apply_path(const Path& p, const SparseVec& x) const {
  SparseVec cur = x;
  for (int a : p.arrows) {
    if (cur.empty()) break;
    cur = apply_arrow(a, cur);
  }
  return cur;
}

SparseVec ModuleRep::apply(const GradedAlgebra& A, const AVec& lambda, const SparseVec& x) const {
  SparseAcc acc;
  const auto& words = A.basis(lambda.degree);
  for (const auto& [b, c] : lambda.v) {
    if (lambda.degree == 0) {
      // idempotent: x is already at one vertex, keep it only if it matches
      acc.add(x, c);
      continue;
    }
    acc.add(apply_path(words[b], x), c);
  }
  return acc.take();
}

bool ModuleRep::satisfies(const Presentation& p) const {
  for (const auto& r : p.relations) {
    int s = r.source();
    for (int i = 0; i < dim(s); ++i) {
      SparseAcc acc;
      for (const auto& [path, c] : r.terms()) acc.add(apply_path(path, sv_unit(i)), c);
      if (!acc.empty()) return false;
    }
  }
  return true;
}

std::map<std::pair<int, int>, int> ModuleRep::graded_dims() const {
  std::map<std::pair<int, int>, int> out;
  for (int v = 0; v < nv; ++v)
    for (int d : degrees[v]) ++out[{v, d}];
  return out;
}

ModuleRep direct_sum(const Quiver& q, const std::vector<ModuleRep>& ms) {
  ModuleRep out = ModuleRep::zero(q);
  std::vector<int> offset(out.nv, 0);
  for (const auto& m : ms) {
    out.truncated = out.truncated || m.truncated;
    for (int a = 0; a < q.num_arrows(); ++a) {
      int t = q.arrows[a].tgt;
      for (const auto& row : m.act[a]) {
        SparseVec r;
        for (const auto& [k, c] : row) r.emplace_back(k + offset[t], c);
        out.act[a].push_back(std::move(r));
      }
    }
    for (int v = 0; v < out.nv; ++v) {
      out.degrees[v].insert(out.degrees[v].end(), m.degrees[v].begin(), m.degrees[v].end());
      offset[v] += m.dim(v);
    }
  }
  return out;
}


ModuleRep projective_module(const GradedAlgebra& A, int v, int shift) {
  const Quiver& q = A.quiver();
  ModuleRep m = ModuleRep::zero(q);
  int top = A.finite() ? A.top_degree() : A.computed_degree();
  m.truncated = !A.finite();
  // local index of (degree, basis index)
  std::map<std::pair<int, int>, int> loc;
  for (int n = 0; n <= top; ++n) {
    const auto& bs = A.basis(n);
    for (int b = 0; b < static_cast<int>(bs.size()); ++b)
      if (bs[b].src == v) {
        int w = bs[b].tgt;
        loc[{n, b}] = m.dim(w);
        m.degrees[w].push_back(n + shift);
      }
  }
  for (int a = 0; a < q.num_arrows(); ++a) m.act[a].assign(m.dim(q.arrows[a].src), {});
  for (const auto& [key, i] : loc) {
    auto [n, b] = key;
    int w = A.basis(n)[b].tgt;
    if (n == top && !A.finite()) continue;
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrows[a].src != w) continue;
      SparseVec row;
      for (const auto& [c, x] : A.rmul(n, b, a)) row.emplace_back(loc.at({n + 1, c}), x);
      std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
      m.act[a][i] = std::move(row);
    }
  }
  return m;
}

ModuleRep regular_module(const GradedAlgebra& A) {
  std::vector<ModuleRep> ps;
  for (int v = 0; v < A.quiver().num_vertices(); ++v) ps.push_back(projective_module(A, v));
  return direct_sum(A.quiver(), ps);
}

ModuleRep dual_regular_module(const GradedAlgebra& A) {
  if (!A.finite()) throw std::invalid_argument("dual of an infinite-dimensional algebra");
  const Quiver& q = A.quiver();
  ModuleRep m = ModuleRep::zero(q);
  int top = A.top_degree();
  std::map<std::pair<int, int>, int> loc;  // (degree, basis) -> local index at src vertex
  for (int n = 0; n <= top; ++n) {
    const auto& bs = A.basis(n);
    for (int b = 0; b < static_cast<int>(bs.size()); ++b) {
      int u = bs[b].src;
      loc[{n, b}] = m.dim(u);
      m.degrees[u].push_back(-n);
    }
  }
  for (int a = 0; a < q.num_arrows(); ++a) m.act[a].assign(m.dim(q.arrows[a].src), {});
  std::vector<std::vector<std::map<int, Scalar>>> rows(q.num_arrows());
  for (int a = 0; a < q.num_arrows(); ++a) rows[a].resize(m.dim(q.arrows[a].src));
  for (int n = 0; n < top; ++n) {
    const auto& bs = A.basis(n);
    for (int y = 0; y < static_cast<int>(bs.size()); ++y)
      for (int a = 0; a < q.num_arrows(); ++a) {
        if (q.arrows[a].tgt != bs[y].src) continue;
        AVec ay = A.lmul_arrow(a, n, y);
        int ycol = loc.at({n, y});
        for (const auto& [p, c] : ay.v) rows[a][loc.at({n + 1, p})][ycol] += c;
      }
  }
  for (int a = 0; a < q.num_arrows(); ++a)
    for (std::size_t i = 0; i < rows[a].size(); ++i)
      for (const auto& [k, c] : rows[a][i])
        if (!c.is_zero()) m.act[a][i].emplace_back(k, c);
  return m;
}

ModuleRep simple_module(const Quiver& q, int v, int degree) {
  ModuleRep m = ModuleRep::zero(q);
  m.degrees[v].push_back(degree);
  for (int a = 0; a < q.num_arrows(); ++a) m.act[a].assign(m.dim(q.arrows[a].src), {});
  return m;
}

ModuleRep shift_module(const ModuleRep& m, int s) {
  ModuleRep r = m;
  for (auto& d : r.degrees)
    for (int& x : d) x += s;
  return r;
}

ModuleRep quotient_module(const Quiver& q, const ModuleRep& F, const std::vector<std::vector<SparseVec>>& vectors) {
  ModuleRep out = ModuleRep::zero(q);
  out.truncated = F.truncated;
  // per vertex: echelon over F's basis at v; vectors are homogeneous so a single
  // echelon per vertex keeps blocks separate
  std::vector<Echelon> ech;
  std::vector<std::vector<int>> newidx(F.nv);
  for (int v = 0; v < F.nv; ++v) {
    // order columns by degree so pivots stay inside blocks
    ech.emplace_back(F.dim(v));
    for (const auto& x : vectors[v]) ech[v].insert(x);
    newidx[v].assign(F.dim(v), -1);
    for (int i = 0; i < F.dim(v); ++i)
      if (!ech[v].is_pivot(i)) {
        newidx[v][i] = out.dim(v);
        out.degrees[v].push_back(F.degrees[v][i]);
      }
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    out.act[a].assign(out.dim(s), {});
    for (int i = 0; i < F.dim(s); ++i) {
      if (newidx[s][i] < 0) continue;
      SparseVec img = ech[t].reduce(F.act[a][i]);
      SparseVec row;
      for (const auto& [k, c] : img) row.emplace_back(newidx[t][k], c);
      std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
      out.act[a][newidx[s][i]] = std::move(row);
    }
  }
  return out;
}

int GradedResolution::length() const {
  int l = -1;
  for (int i = 0; i < static_cast<int>(gens.size()); ++i)
    if (!gens[i].empty()) l = i;
  return l;
}

bool GradedResolution::is_linear(int stage, int shift) const {
  if (stage >= static_cast<int>(gens.size())) return true;
  for (const auto& g : gens[stage])
    if (g.degree != stage + shift) return false;
  return true;
}

int GradedResolution::syzygy_dim(int k) const {
  if (k >= static_cast<int>(syzygy.size())) return 0;
  int s = 0;
  for (const auto& [key, d] : syzygy[k]) s += d;
  return s;
}

namespace {

struct FreeBlock {
  std::vector<std::pair<int, int>> items;  // (generator, word)
  std::map<std::pair<int, int>, int> index;
};

FreeBlock free_block(const GradedAlgebra& W, const std::vector<Generator>& gens, int v, int n) {
  FreeBlock fb;
  for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
    for (int b : W.words(n - gens[g].degree, gens[g].vertex, v)) {
      fb.index[{g, b}] = static_cast<int>(fb.items.size());
      fb.items.emplace_back(g, b);
    }
  }
  return fb;
}

}  // namespace

GradedResolution resolve_module(const GradedAlgebra& A, const ModuleRep& X, int m) {
  const Quiver& q = A.quiver();
  const int nv = q.num_vertices();
  GradedResolution R;
  R.partial = !A.finite();
  const GradedAlgebra& W = A;
  R.syzygy.emplace_back();
  if (X.is_zero()) return R;
  const int top = A.finite() ? A.top_degree() : A.computed_degree();
  const int xmin = X.min_degree(), xmax = X.max_degree();
  R.window = A.finite() ? INT_MAX : A.computed_degree() + std::min(0, xmin);

  // stage 0: top of X
  std::vector<Generator> g0;
  for (int n = xmin; n <= xmax; ++n)
    for (int v = 0; v < nv; ++v) {
      auto blk = X.block(v, n);
      if (blk.empty()) continue;
      std::map<int, int> loc;
      for (std::size_t i = 0; i < blk.size(); ++i) loc[blk[i]] = static_cast<int>(i);
      Echelon e(static_cast<int>(blk.size()));
      for (int a = 0; a < q.num_arrows(); ++a) {
        if (q.arrows[a].tgt != v) continue;
        int u = q.arrows[a].src;
        for (int i : X.block(u, n - 1)) {
          SparseVec img;
          for (const auto& [k, c] : X.act[a][i]) img.emplace_back(loc.at(k), c);
          std::sort(img.begin(), img.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
          e.insert(img);
        }
      }
      for (std::size_t i = 0; i < blk.size(); ++i)
        if (e.insert(sv_unit(static_cast<int>(i)))) {
          g0.push_back({v, n});
          R.aug.push_back(sv_unit(blk[i]));
        }
    }
  R.gens.push_back(g0);
  R.diff.emplace_back();

  for (int stage = 0; stage <= m; ++stage) {
    const auto& G = R.gens[stage];
    if (G.empty()) {
      R.syzygy.emplace_back();
      break;
    }
    int dmin = INT_MAX, dmax = INT_MIN;
    for (const auto& g : G) {
      dmin = std::min(dmin, g.degree);
      dmax = std::max(dmax, g.degree);
    }
    int hi = dmax + top;
    if (!A.finite()) hi = std::min(hi, R.window);
    std::map<std::pair<int, int>, int> syz;
    std::vector<Generator> next;
    std::vector<std::vector<std::pair<int, AVec>>> next_diff;
    // kernel per (v, n), kept for the generated-from-below computation
    std::map<std::pair<int, int>, std::pair<FreeBlock, std::vector<SparseVec>>> ker;
    for (int n = dmin; n <= hi; ++n) {
      for (int v = 0; v < nv; ++v) {
        FreeBlock fb = free_block(W, G, v, n);
        if (fb.items.empty()) continue;
        std::vector<SparseVec> rows;
        int tcols = 0;
        if (stage == 0) {
          auto blk = X.block(v, n);
          std::map<int, int> loc;
          for (std::size_t i = 0; i < blk.size(); ++i) loc[blk[i]] = static_cast<int>(i);
          tcols = static_cast<int>(blk.size());
          for (const auto& [g, b] : fb.items) {
            SparseVec img = X.apply_path(A.basis(n - G[g].degree)[b], R.aug[g]);
            SparseVec r;
            for (const auto& [k, c] : img) r.emplace_back(loc.at(k), c);
            std::sort(r.begin(), r.end(), [](const auto& l, const auto& rr) { return l.first < rr.first; });
            rows.push_back(std::move(r));
          }
        } else {
          const auto& Gp = R.gens[stage - 1];
          FreeBlock tb = free_block(W, Gp, v, n);
          tcols = static_cast<int>(tb.items.size());
          for (const auto& [g, b] : fb.items) {
            const Path& word = A.basis(n - G[g].degree)[b];
            SparseAcc acc;
            for (const auto& [gp, lam] : R.diff[stage][g]) {
              AVec prod = A.mul_path(lam, word);
              for (const auto& [c, x] : prod.v) acc.add(tb.index.at({gp, c}), x);
            }
            rows.push_back(acc.take());
          }
        }
        std::vector<SparseVec> K = left_kernel(rows, tcols);
        if (!K.empty()) syz[{v, n}] = static_cast<int>(K.size());
        // generated from below
        Echelon e(static_cast<int>(fb.items.size()));
        for (int a = 0; a < q.num_arrows(); ++a) {
          if (q.arrows[a].tgt != v) continue;
          auto it = ker.find({q.arrows[a].src, n - 1});
          if (it == ker.end()) continue;
          const FreeBlock& pb = it->second.first;
          for (const auto& z : it->second.second) {
            SparseAcc acc;
            for (const auto& [i, c] : z) {
              auto [g, b] = pb.items[i];
              int deg = n - 1 - G[g].degree;
              for (const auto& [bb, x] : A.rmul(deg, b, a)) acc.add(fb.index.at({g, bb}), c * x);
            }
            e.insert(acc.take());
          }
        }
        for (const auto& z : K) {
          SparseVec r = e.reduce(z);
          if (r.empty()) continue;
          e.insert(z);
          next.push_back({v, n});
          std::map<int, SparseAcc> parts;
          for (const auto& [i, c] : r) {
            auto [g, b] = fb.items[i];
            parts[g].add(b, c);
          }
          std::vector<std::pair<int, AVec>> img;
          for (auto& [g, acc] : parts) img.emplace_back(g, AVec{n - G[g].degree, acc.take()});
          next_diff.push_back(std::move(img));
        }
        ker[{v, n}] = {std::move(fb), std::move(K)};
      }
    }
    R.syzygy.push_back(std::move(syz));
    if (stage == m) break;
    R.gens.push_back(std::move(next));
    R.diff.push_back(std::move(next_diff));
  }
  return R;
}

std::vector<std::map<int, int>> ext_dims(const GradedAlgebra& A, const GradedResolution& R, const ModuleRep& Y,
                                         int imax, int jmin, int jmax) {
  std::vector<std::map<int, int>> out(imax + 1);
  // Hom(P_i, Y)_j basis: (generator g, basis index of Y at (v_g, deg_g + j))
  auto hom_basis = [&](int i, int j) {
    std::vector<std::pair<int, int>> items;
    if (i >= static_cast<int>(R.gens.size())) return items;
    for (int g = 0; g < static_cast<int>(R.gens[i].size()); ++g) {
      const auto& gen = R.gens[i][g];
      for (int y : Y.block(gen.vertex, gen.degree + j)) items.emplace_back(g, y);
    }
    return items;
  };
  // rank of Hom(P_i,Y)_j -> Hom(P_{i+1},Y)_j
  auto cobound_rank = [&](int i, int j) {
    if (i + 1 >= static_cast<int>(R.gens.size())) return 0;
    auto src = hom_basis(i, j);
    auto tgt = hom_basis(i + 1, j);
    if (src.empty() || tgt.empty()) return 0;
    std::map<std::pair<int, int>, int> tidx;
    for (std::size_t k = 0; k < tgt.size(); ++k) tidx[tgt[k]] = static_cast<int>(k);
    // f = (g, y): (f o d)(h) = y * lambda_{g,h}
    std::vector<SparseAcc> rows(src.size());
    std::map<std::pair<int, int>, int> sidx;
    for (std::size_t k = 0; k < src.size(); ++k) sidx[src[k]] = static_cast<int>(k);
    for (int h = 0; h < static_cast<int>(R.gens[i + 1].size()); ++h)
      for (const auto& [g, lam] : R.diff[i + 1][h]) {
        for (int y : Y.block(R.gens[i][g].vertex, R.gens[i][g].degree + j)) {
          SparseVec img = Y.apply(A, lam, sv_unit(y));
          int row = sidx.at({g, y});
          for (const auto& [yy, c] : img) rows[row].add(tidx.at({h, yy}), c);
        }
      }
    std::vector<SparseVec> rs;
    for (auto& r : rows) rs.push_back(r.take());
    return rank_of(rs, static_cast<int>(tgt.size()));
  };
  for (int j = jmin; j <= jmax; ++j) {
    std::vector<int> rk(imax + 2, 0);
    for (int i = 0; i <= imax; ++i) rk[i] = cobound_rank(i, j);
    for (int i = 0; i <= imax; ++i) {
      int h = static_cast<int>(hom_basis(i, j).size());
      int d = h - rk[i] - (i > 0 ? rk[i - 1] : 0);
      if (d) out[i][j] = d;
    }
  }
  return out;
}

std::vector<std::map<int, int>> ext_dims(const GradedAlgebra& A, const GradedResolution& R, const ModuleRep& Y,
                                         int imax) {
  if (Y.is_zero()) return std::vector<std::map<int, int>>(imax + 1);
  int gmin = INT_MAX, gmax = INT_MIN;
  for (const auto& st : R.gens)
    for (const auto& g : st) {
      gmin = std::min(gmin, g.degree);
      gmax = std::max(gmax, g.degree);
    }
  if (gmin == INT_MAX) return std::vector<std::map<int, int>>(imax + 1);
  return ext_dims(A, R, Y, imax, Y.min_degree() - gmax, Y.max_degree() - gmin);
}

}  // namespace preproj
