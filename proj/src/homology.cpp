#include "preproj/homology.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

namespace preproj {

std::vector<GradedResolution> graded_simple_resolutions(const GradedAlgebra& A, int m) {
  std::vector<GradedResolution> out;
  for (int v = 0; v < A.quiver().num_vertices(); ++v)
    out.push_back(resolve_module(A, simple_module(A.quiver(), v), m));
  return out;
}

namespace {

// basis of P_i at (v, n): (generator, standard word index)
std::vector<std::pair<int, int>> free_items(const GradedAlgebra& A, const std::vector<Generator>& G, int v, int n) {
  std::vector<std::pair<int, int>> items;
  for (int g = 0; g < static_cast<int>(G.size()); ++g) {
    int k = n - G[g].degree;
    if (k < 0) continue;
    for (int b : A.words(k, G[g].vertex, v)) items.emplace_back(g, b);
  }
  return items;
}

int top_of(const GradedAlgebra& A) { return A.finite() ? A.top_degree() : A.computed_degree(); }

}  // namespace

bool resolution_is_exact(const GradedAlgebra& A, const ModuleRep& X, const GradedResolution& R) {
  const Quiver& q = A.quiver();
  const int nv = q.num_vertices();
  const int S = static_cast<int>(R.gens.size());
  if (S == 0) return X.is_zero();
  int gmin = X.is_zero() ? 0 : X.min_degree(), gmax = X.is_zero() ? 0 : X.max_degree();
  for (const auto& st : R.gens)
    for (const auto& g : st) gmax = std::max(gmax, g.degree);
  int hi = gmax + top_of(A);
  if (R.partial) hi = std::min(hi, R.window);
  bool terminated = R.gens.back().empty();
  for (int n = gmin; n <= hi; ++n)
    for (int v = 0; v < nv; ++v) {
      // ranks of P_i -> P_{i-1} (i >= 1) and P_0 -> X in this block
      std::vector<int> dims(S), ranks(S + 1, 0);
      std::vector<std::vector<std::pair<int, int>>> items(S);
      for (int i = 0; i < S; ++i) {
        items[i] = free_items(A, R.gens[i], v, n);
        dims[i] = static_cast<int>(items[i].size());
      }
      auto xb = X.block(v, n);
      {
        std::map<int, int> loc;
        for (std::size_t k = 0; k < xb.size(); ++k) loc[xb[k]] = static_cast<int>(k);
        std::vector<SparseVec> rows;
        for (const auto& [g, b] : items[0]) {
          SparseVec img = X.apply_path(A.basis(n - R.gens[0][g].degree)[b], R.aug[g]);
          SparseVec r;
          for (const auto& [k, c] : img) r.emplace_back(loc.at(k), c);
          std::sort(r.begin(), r.end(), [](const auto& l, const auto& rr) { return l.first < rr.first; });
          rows.push_back(r);
        }
        ranks[0] = rank_of(rows, static_cast<int>(xb.size()));
        if (ranks[0] != static_cast<int>(xb.size())) return false;
      }
      for (int i = 1; i < S; ++i) {
        std::map<std::pair<int, int>, int> tidx;
        for (std::size_t k = 0; k < items[i - 1].size(); ++k) tidx[items[i - 1][k]] = static_cast<int>(k);
        std::vector<SparseVec> rows;
        for (const auto& [g, b] : items[i]) {
          const Path& word = A.basis(n - R.gens[i][g].degree)[b];
          SparseAcc acc;
          for (const auto& [gp, lam] : R.diff[i][g]) {
            AVec prod = A.mul_path(lam, word);
            for (const auto& [c, x] : prod.v) acc.add(tidx.at({gp, c}), x);
          }
          rows.push_back(acc.take());
        }
        ranks[i] = rank_of(rows, dims[i - 1]);
      }
      // exact at P_i for i < S-1; the last stage only when the resolution terminated
      int last = terminated ? S - 1 : S - 2;
      for (int i = 0; i <= last; ++i)
        if (dims[i] != ranks[i] + (i + 1 < S ? ranks[i + 1] : 0)) return false;
    }
  return true;
}

bool resolution_is_minimal(const GradedResolution& R) {
  for (const auto& st : R.diff)
    for (const auto& img : st)
      for (const auto& [g, lam] : img)
        if (!lam.is_zero() && lam.degree <= 0) return false;
  return true;
}

SelfInjectivity is_selfinjective(const GradedAlgebra& A) {
  if (!A.finite()) throw std::invalid_argument("self-injectivity test needs a finite-dimensional algebra");
  const Quiver& q = A.quiver();
  SelfInjectivity out;
  out.dual_dim = A.total_dim();
  ModuleRep D = dual_regular_module(A);
  GradedResolution R = resolve_module(A, D, 0);
  std::vector<int> pdim(q.num_vertices());
  for (int v = 0; v < q.num_vertices(); ++v) pdim[v] = projective_module(A, v).total_dim();
  for (const auto& g : R.gens[0]) out.cover_dim += pdim[g.vertex];
  out.selfinjective = out.cover_dim == out.dual_dim;
  if (!out.selfinjective) return out;
  // Nakayama permutation from the (simple) socles of the indecomposable projectives
  for (int v = 0; v < q.num_vertices(); ++v) {
    ModuleRep P = projective_module(A, v);
    int where = -1, total = 0;
    for (int w = 0; w < q.num_vertices(); ++w) {
      if (P.dim(w) == 0) continue;
      std::vector<SparseVec> rows(P.dim(w));
      int off = 0;
      for (int a = 0; a < q.num_arrows(); ++a) {
        if (q.arrows[a].src != w) continue;
        int tw = q.arrows[a].tgt;
        for (int i = 0; i < P.dim(w); ++i)
          for (const auto& [k, c] : P.act[a][i]) rows[i].emplace_back(off + k, c);
        off += P.dim(tw);
      }
      int s = static_cast<int>(left_kernel(rows, off).size());
      if (s) where = w;
      total += s;
    }
    if (total != 1) {
      out.selfinjective = false;
      out.nakayama.clear();
      return out;
    }
    out.nakayama.push_back(where);
  }
  return out;
}

std::string AlmostKoszul::str() const {
  if (q.empty()) return "none";
  if (q.size() == 1) return "(" + std::to_string(p) + "," + std::to_string(q.front()) + ")";
  std::string s = "(" + std::to_string(p) + ",q) for q in {";
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + std::to_string(q[i]);
  return s + "}";
}

AlmostKoszul almost_koszul_verdict(const GradedAlgebra& A, int qmax) {
  if (!A.finite()) throw std::invalid_argument("almost-Koszul verdict needs a finite-dimensional algebra");
  AlmostKoszul out;
  out.p = A.top_degree();
  GradedResolution R = resolve_module(A, degree_zero_module(A.quiver()), qmax + 1);
  for (int i = 0; i <= qmax + 1; ++i) {
    if (!R.is_linear(i)) break;
    out.linear_through = i;
  }
  for (int q = 1; q <= std::min(qmax, out.linear_through); ++q) {
    if (q + 1 >= static_cast<int>(R.syzygy.size())) break;
    const auto& syz = R.syzygy[q + 1];
    if (syz.empty()) continue;
    bool conc = true;
    for (const auto& [key, n] : syz) conc = conc && key.second == out.p + q;
    if (conc) out.q.push_back(q);
  }
  return out;
}

Periodicity simple_periodicity(const GradedAlgebra& A, int d) {
  Periodicity out;
  out.expected = d + 2;
  out.all_expected = true;
  for (const auto& R : graded_simple_resolutions(A, d + 1)) {
    int per = -1;
    for (int k = 1; k <= d + 2; ++k)
      if (R.syzygy_dim(k) == 1) {
        per = k;
        break;
      }
    out.period.push_back(per);
    if (R.syzygy_dim(d + 2) != 1) out.all_expected = false;
    if (per > 0 && per < d + 2 && (d + 2) % per == 0) out.proper_divisor = true;
  }
  return out;
}

bool RiExtReport::pass() const {
  if (entries.empty()) return false;
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

RiExtReport ri_ext_pattern(const GradedAlgebra& Pi, int d, int window) {
  const int N = Pi.computed_degree();
  if (Pi.finite() || N < window + d + 2)
    throw std::invalid_argument("Ext pattern needs an infinite algebra truncated at >= window + d + 2");
  RiExtReport rep;
  rep.d = d;
  rep.truncation = N;
  rep.window = window;
  const Quiver& q = Pi.quiver();
  ModuleRep Y = regular_module(Pi);  // Pi / Pi_{>N}
  for (int j = 0; j < window; ++j)
    for (int v = 0; v < q.num_vertices(); ++v) {
      RiExtEntry e;
      e.vertex = v;
      e.grade = j;
      GradedResolution R = resolve_module(Pi, simple_module(q, v, j), d + 2);
      auto maxgen = [&](int i) {
        int m = INT_MIN;
        if (i < static_cast<int>(R.gens.size()))
          for (const auto& g : R.gens[i]) m = std::max(m, g.degree);
        return m;
      };
      int gmax = j;
      for (int i = 0; i <= d + 2; ++i) gmax = std::max(gmax, maxgen(i));
      // Ext^i agrees with Ext^i(T, Pi) in map degrees m where both Hom(P_i, Pi_{>N})_m and
      // Hom(P_{i+1}, Pi_{>N})_m vanish
      int hi = INT_MIN;
      for (int i = 0; i <= d + 1; ++i) {
        int g = std::max({maxgen(i), maxgen(i + 1), j});
        e.reliable_max.push_back(N - g);
        hi = std::max(hi, N - g);
      }
      auto ext = ext_dims(Pi, R, Y, d + 1, -gmax, hi);
      e.pass = true;
      for (int i = 0; i <= d + 1; ++i) {
        std::map<int, int> kept;
        for (const auto& [m, n] : ext[i])
          if (m <= e.reliable_max[i]) kept[m] = n;
        e.ext.push_back(kept);
        if (i <= d && !kept.empty()) e.pass = false;
      }
      int want = -(j + d + 1);
      e.pass = e.pass && e.reliable_max[d + 1] >= want && e.ext[d + 1] == std::map<int, int>{{want, 1}};
      rep.entries.push_back(std::move(e));
    }
  return rep;
}

TrivialExtension::TrivialExtension(const GradedAlgebra& gamma, int d) : G_(gamma), d_(d) {
  if (!G_.finite()) throw std::invalid_argument("trivial extension of an infinite-dimensional algebra");
  for (int n = 0; n <= G_.top_degree(); ++n) {
    off_.push_back(n_);
    for (int b = 0; b < G_.dim(n); ++b) pos_.emplace_back(n, b);
    n_ += G_.dim(n);
  }
}

int TrivialExtension::degree(int i) const {
  return i < n_ ? pos_[i].first : d_ + 1 - pos_[i - n_].first;
}

std::map<int, int> TrivialExtension::graded_dims() const {
  std::map<int, int> out;
  for (int i = 0; i < dim(); ++i) ++out[degree(i)];
  return out;
}

SparseVec TrivialExtension::mul(int i, int j) const {
  const int top = G_.top_degree();
  if (i >= n_ && j >= n_) return {};
  if (i < n_ && j < n_) {
    auto [di, bi] = pos_[i];
    auto [dj, bj] = pos_[j];
    if (di + dj > top) return {};
    AVec r = G_.mul(G_.unit(di, bi), G_.unit(dj, bj));
    SparseVec out;
    for (const auto& [k, c] : r.v) out.emplace_back(off_[r.degree] + k, c);
    return out;
  }
  SparseVec out;
  if (i < n_) {
    // a f_c = sum_b [b a]_c f_b
    auto [da, ba] = pos_[i];
    auto [dc, bc] = pos_[j - n_];
    int db = dc - da;
    if (db < 0) return {};
    for (int b = 0; b < G_.dim(db); ++b) {
      Scalar c = sv_get(G_.mul(G_.unit(db, b), G_.unit(da, ba)).v, bc);
      if (!c.is_zero()) out.emplace_back(n_ + off_[db] + b, c);
    }
    return out;
  }
  // f_c b' = (-1)^{d deg b'} sum_x [b' x]_c f_x
  auto [dc, bc] = pos_[i - n_];
  auto [db, bb] = pos_[j];
  int dx = dc - db;
  if (dx < 0) return {};
  Scalar sign = (d_ * db) % 2 ? Scalar(-1) : Scalar(1);
  for (int x = 0; x < G_.dim(dx); ++x) {
    Scalar c = sv_get(G_.mul(G_.unit(db, bb), G_.unit(dx, x)).v, bc);
    if (!c.is_zero()) out.emplace_back(n_ + off_[dx] + x, c * sign);
  }
  return out;
}

SparseVec TrivialExtension::mul(const SparseVec& x, const SparseVec& y) const {
  SparseAcc acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) acc.add(mul(i, j), a * b);
  return acc.take();
}

bool TrivialExtension::is_associative() const {
  const int n = dim();
  std::vector<std::vector<SparseVec>> tab(n, std::vector<SparseVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tab[i][j] = mul(i, j);
  auto prod = [&](const SparseVec& x, int k, bool left) {
    SparseAcc acc;
    for (const auto& [i, c] : x) acc.add(left ? tab[k][i] : tab[i][k], c);
    return acc.take();
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (tab[i][j].empty()) {
        // (ij)k = 0 for all k; check i(jk) = 0
        for (int k = 0; k < n; ++k)
          if (!prod(tab[j][k], i, true).empty()) return false;
        continue;
      }
      for (int k = 0; k < n; ++k)
        if (prod(tab[i][j], k, false) != prod(tab[j][k], i, true)) return false;
    }
  return true;
}

bool PhiComparison::surjective() const {
  for (const auto& [n, c] : cokernel)
    if (c) return false;
  return true;
}

bool PhiComparison::injective() const {
  for (const auto& [n, k] : kernel)
    if (k) return false;
  return true;
}

std::string PhiComparison::verdict() const {
  if (!surjective()) return "not surjective";
  return injective() ? "iso" : "surjective";
}

PhiComparison phi_compare(const Preprojective& P, int bound) {
  if (!P.koszul) throw std::invalid_argument("phi comparison needs a Koszul input");
  const int d = P.d;
  PhiComparison out;
  out.bound = bound;
  Presentation gp = quadratic_dual(P.lambda);
  GradedAlgebra Gam(gp, d + 2);
  TrivialExtension T(Gam, d);
  Presentation pd = quadratic_dual(P.pi);
  GradedAlgebra Pd(pd, bound);
  const Quiver& gq = gp.quiver;
  const Quiver& lq = P.lambda.quiver;
  const Quiver& pq = pd.quiver;

  // images of vertices and arrows
  std::vector<SparseVec> vimg(pq.num_vertices()), aimg(pq.num_arrows());
  for (int v = 0; v < pq.num_vertices(); ++v) vimg[v] = sv_unit(T.gamma_index(0, Gam.index(Path::trivial(v))));
  for (int a = 0; a < pq.num_arrows(); ++a) {
    if (a < P.doubled.first_new) {
      aimg[a] = sv_unit(T.gamma_index(1, Gam.index(Path::arrow(gq, a))));
      continue;
    }
    // dual arrow of a_t: the functional <-, k_t> on Gamma_d, <x, k> = coefficient of reversed x in k
    Element k = P.resolution.gen_path(d, a - P.doubled.first_new);
    SparseVec f;
    if (d <= Gam.top_degree())
      for (int b = 0; b < Gam.dim(d); ++b) {
        const Path& x = Gam.basis(d)[b];
        Path rx{x.tgt, x.src, std::vector<int>(x.arrows.rbegin(), x.arrows.rend())};
        Scalar c = k.coeff(rx);
        if (!c.is_zero()) f.emplace_back(T.dual_index(d, b), c);
      }
    aimg[a] = f;
  }
  (void)lq;
  auto image = [&](const Path& p) {
    SparseVec x = vimg[p.src];
    for (int a : p.arrows) {
      x = T.mul(x, aimg[a]);
      if (x.empty()) break;
    }
    return x;
  };
  out.well_defined = true;
  for (const auto& r : pd.relations) {
    SparseAcc acc;
    for (const auto& [p, c] : r.terms()) acc.add(image(p), c);
    if (!acc.take().empty()) out.well_defined = false;
  }
  out.triv_dims = T.graded_dims();
  int top = Pd.finite() ? Pd.top_degree() : Pd.computed_degree();
  for (int n = 0; n <= bound; ++n) {
    int dn = n <= top ? Pd.dim(n) : 0;
    std::vector<SparseVec> rows;
    for (int b = 0; b < dn; ++b) rows.push_back(image(Pd.basis(n)[b]));
    int rk = rank_of(rows, T.dim());
    int tn = out.triv_dims.count(n) ? out.triv_dims.at(n) : 0;
    if (dn) out.pi_dual_dims[n] = dn;
    out.kernel[n] = dn - rk;
    out.cokernel[n] = tn - rk;
  }
  // surjectivity criterion: the socle of Lambda^! is exactly (Lambda^!)_d
  auto soc = dual_socle_profile(P.lambda, d + 1);
  std::map<int, int> want;
  if (d <= Gam.top_degree() && Gam.dim(d)) want[d] = Gam.dim(d);
  out.socle_criterion = soc == want;
  return out;
}

}  // namespace preproj
