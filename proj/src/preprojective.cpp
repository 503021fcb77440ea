#include "preproj/preprojective.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace preproj {

int Preprojective::top_generator_degree() const {
  const auto& G = resolution.gens[d];
  int D = G.front().degree;
  for (const auto& g : G)
    if (g.degree != D) throw std::invalid_argument("top generators in several internal degrees");
  return D;
}

Preprojective preprojective(const Presentation& p, int max_stage) {
  Preprojective P;
  P.lambda = p;
  // degrees past the longest path vanish for acyclic quivers; cap generously otherwise
  int cap = 0;
  for (const auto& r : p.relations) cap = std::max(cap, r.max_degree());
  cap = std::max(cap, 2) * std::max(1, p.quiver.num_vertices()) + 4;
  P.A = GradedAlgebra(p, cap);
  if (!P.A.finite()) throw std::invalid_argument("algebra is not finite-dimensional (checked to degree " +
                                                 std::to_string(cap) + ")");
  BimoduleComplex gen = bimodule_resolution(P.A, max_stage);
  P.d = gen.length();
  if (P.d >= max_stage) throw std::invalid_argument("resolution did not terminate by stage " + std::to_string(max_stage));
  if (P.d <= 0) throw std::invalid_argument("global dimension 0: no preprojective extension");
  bool linear = true;
  for (int i = 0; i < gen.num_stages(); ++i)
    for (const auto& g : gen.gens[i]) linear = linear && g.degree == i;
  P.koszul = linear && p.is_quadratic();
  if (P.koszul) {
    P.tower = koszul_tower(p, P.d + 1);
    P.resolution = koszul_complex(p, P.tower);
  } else {
    P.resolution = std::move(gen);
  }
  P.doubled = doubled_quiver(p.quiver, P.resolution, P.d);
  P.new_relations = dualized_relations(P.doubled, P.resolution);
  P.pi.quiver = P.doubled.quiver;
  P.pi.field = p.field;
  P.pi.relations = p.relations;
  for (const auto& r : P.new_relations) {
    if (!r.is_homogeneous())
      throw std::invalid_argument("lifted relation is not homogeneous in path length: " + r.str(P.pi.quiver));
    P.pi.relations.push_back(r.normalized());
  }
  return P;
}

bool ideal_contains(const Presentation& p, const std::vector<Element>& xs, int bound) {
  GradedAlgebra A(p, bound);
  for (const auto& x : xs) {
    for (const auto& piece : x.homogeneous_pieces()) {
      if (piece.min_degree() > bound) continue;
      if (A.finite() && piece.min_degree() > A.top_degree()) continue;
      if (!A.vec(piece).is_zero()) return false;
    }
  }
  return true;
}

bool ideals_equal(const Presentation& a, const Presentation& b, int bound) {
  if (!(a.quiver == b.quiver)) return false;
  return ideal_contains(a, b.relations, bound) && ideal_contains(b, a.relations, bound);
}

BimoduleRep regular_bimodule(const GradedAlgebra& A) {
  const Quiver& q = A.quiver();
  int top = A.finite() ? A.top_degree() : A.computed_degree();
  BimoduleRep R;
  std::vector<int> off;
  for (int n = 0; n <= top; ++n) {
    off.push_back(R.dim());
    for (const auto& w : A.basis(n)) R.basis.push_back({w.src, w.tgt, n});
  }
  R.left.assign(q.num_arrows(), std::vector<SparseVec>(R.dim()));
  R.right.assign(q.num_arrows(), std::vector<SparseVec>(R.dim()));
  for (int n = 0; n < top; ++n)
    for (int b = 0; b < A.dim(n); ++b)
      for (int a = 0; a < q.num_arrows(); ++a) {
        const Path& w = A.basis(n)[b];
        if (q.arrows[a].tgt == w.src)
          for (const auto& [k, c] : A.lmul_arrow(a, n, b).v) R.left[a][off[n] + b].emplace_back(off[n + 1] + k, c);
        if (q.arrows[a].src == w.tgt)
          for (const auto& [k, c] : A.rmul(n, b, a)) R.right[a][off[n] + b].emplace_back(off[n + 1] + k, c);
      }
  return R;
}

std::map<int, int> tensor_algebra_dims(const Preprojective& P, const BimoduleRep& E, int nmax) {
  const Quiver& q = P.lambda.quiver;
  int D = P.top_generator_degree();
  std::map<int, int> out;
  BimoduleRep cur = regular_bimodule(P.A);
  for (int i = 0; i <= nmax; ++i) {
    for (const auto& b : cur.basis) {
      int n = b.degree + i * (D + 1);
      if (n <= nmax) ++out[n];
    }
    if (i == nmax) break;
    cur = tensor(q, cur, E);
    if (cur.dim() == 0) break;
  }
  return out;
}

ModuleRep tau_minus(const Quiver& q, const ModuleRep& M, const BimoduleRep& E) {
  return to_module(q, tensor(q, from_module(q, M), E));
}

ModuleRep tau_plus(const Quiver& q, const ModuleRep& M, const BimoduleRep& E) {
  ModuleRep out = ModuleRep::zero(q);
  const int nv = q.num_vertices();
  if (M.is_zero() || E.dim() == 0) {
    for (int a = 0; a < q.num_arrows(); ++a) out.act[a].assign(0, {});
    return out;
  }
  // degree range of homogeneous maps
  int emin = INT_MAX, emax = INT_MIN;
  for (const auto& b : E.basis) {
    emin = std::min(emin, b.degree);
    emax = std::max(emax, b.degree);
  }
  int jmin = M.min_degree() - emax, jmax = M.max_degree() - emin;
  struct Block {
    std::vector<std::pair<int, int>> vars;  // (e, m)
    std::map<std::pair<int, int>, int> index;
    std::vector<SparseVec> sols;
  };
  std::map<std::pair<int, int>, Block> blocks;  // (v, j)
  for (int v = 0; v < nv; ++v)
    for (int j = jmin; j <= jmax; ++j) {
      Block B;
      for (int e = 0; e < E.dim(); ++e) {
        if (E.basis[e].x != v) continue;
        for (int m : M.block(E.basis[e].y, E.basis[e].degree + j)) {
          B.index[{e, m}] = static_cast<int>(B.vars.size());
          B.vars.emplace_back(e, m);
        }
      }
      if (B.vars.empty()) continue;
      // f(e.a) - f(e).a = 0, one row per (e, a, target basis vector of M)
      std::map<std::tuple<int, int, int>, SparseAcc> rows;
      for (int e = 0; e < E.dim(); ++e) {
        if (E.basis[e].x != v) continue;
        for (int a = 0; a < q.num_arrows(); ++a) {
          if (q.arrows[a].src != E.basis[e].y) continue;
          int t = q.arrows[a].tgt;
          for (int mp : M.block(t, E.basis[e].degree + 1 + j)) {
            auto& row = rows[{e, a, mp}];
            for (const auto& [k, c] : E.right[a][e]) {
              auto it = B.index.find({k, mp});
              if (it != B.index.end()) row.add(it->second, c);
            }
          }
          for (int m : M.block(E.basis[e].y, E.basis[e].degree + j))
            for (const auto& [mp, c] : M.act[a][m]) rows[{e, a, mp}].add(B.index.at({e, m}), -c);
        }
      }
      std::vector<SparseVec> rs;
      for (auto& [k, r] : rows) rs.push_back(r.take());
      B.sols = null_space(rs, static_cast<int>(B.vars.size()));
      if (B.sols.empty()) continue;
      for (std::size_t s = 0; s < B.sols.size(); ++s) out.degrees[v].push_back(j);
      blocks.emplace(std::make_pair(v, j), std::move(B));
    }
  // local offsets of each block inside its vertex
  std::map<std::pair<int, int>, int> off;
  std::vector<int> cnt(nv, 0);
  for (const auto& [k, B] : blocks) {
    off[k] = cnt[k.first];
    cnt[k.first] += static_cast<int>(B.sols.size());
  }
  // the degrees were pushed in (v, j) order, which matches the map order
  for (int a = 0; a < q.num_arrows(); ++a) {
    int v = q.arrows[a].src, w = q.arrows[a].tgt;
    out.act[a].assign(out.dim(v), {});
    for (const auto& [k, B] : blocks) {
      if (k.first != v) continue;
      auto jt = blocks.find({w, k.second + 1});
      for (std::size_t s = 0; s < B.sols.size(); ++s) {
        if (jt == blocks.end()) continue;
        const Block& T = jt->second;
        // (f.a)(e') = f(a e')
        SparseAcc img;
        std::map<int, Scalar> fval;  // var index -> coefficient
        for (const auto& [vi, c] : B.sols[s]) fval[vi] = c;
        for (int ep = 0; ep < E.dim(); ++ep) {
          if (E.basis[ep].x != w) continue;
          for (const auto& [e, c] : E.left[a][ep])
            for (int m : M.block(E.basis[e].y, E.basis[e].degree + k.second)) {
              auto it = fval.find(B.index.at({e, m}));
              if (it == fval.end()) continue;
              img.add(T.index.at({ep, m}), c * it->second);
            }
        }
        SparseVec iv = img.take();
        if (iv.empty()) continue;
        SpanSolver solver(T.sols, static_cast<int>(T.vars.size()));
        SparseVec coeffs;
        if (!solver.solve(iv, coeffs)) throw std::logic_error("tau_plus: image outside Hom space");
        SparseVec row;
        for (const auto& [c, x] : coeffs) row.emplace_back(off.at({w, k.second + 1}) + c, x);
        out.act[a][off.at(k) + s] = row;
      }
    }
  }
  return out;
}

std::string Classification::verdict() const {
  switch (kind) {
    case RF:
      return std::to_string(d) + "-RF (orbit length " + std::to_string(p_max + 1) + ")";
    case RI:
      return std::to_string(d) + "-RI (certified to " + std::to_string(bound) + ")";
    case NotHereditary:
      return "not " + std::to_string(d) + "-hereditary";
    case Inconclusive:
      break;
  }
  return "inconclusive (bound " + std::to_string(bound) + ")";
}

Classification classify_hereditary(const Preprojective& P, int bound, int dim_cap) {
  Classification cl;
  cl.d = P.d;
  cl.bound = bound;
  const Quiver& q = P.lambda.quiver;
  const int d = P.d;
  BimoduleRep E = ext_bimodule(P.A, P.resolution, d);
  ModuleRep D = dual_regular_module(P.A);
  GradedResolution RD = resolve_module(P.A, D, d);
  std::vector<ModuleRep> orbit;
  ModuleRep M = regular_module(P.A);
  bool saw_hom = false;
  for (int i = 0; i <= bound; ++i) {
    if (M.is_zero()) break;
    cl.orbit_dims.push_back(M.total_dim());
    auto ext = ext_dims(P.A, RD, M, d - 1);
    for (int j = 1; j < d; ++j)
      for (const auto& [deg, n] : ext[j]) cl.witnesses.push_back({i, j, deg, n});
    if (!cl.witnesses.empty()) {
      const auto& w = cl.witnesses.front();
      cl.kind = Classification::NotHereditary;
      cl.wit_i = w.i;
      cl.wit_j = w.j;
      cl.wit_degree = w.degree;
      cl.reason = "Ext^" + std::to_string(w.j) + "(D Lambda, tau^-" + std::to_string(i) + " Lambda) nonzero in degree " +
                  std::to_string(w.degree);
      return cl;
    }
    if (!ext[0].empty()) saw_hom = true;
    orbit.push_back(M);
    if (i == bound) break;
    M = tau_minus(q, M, E);
    if (M.total_dim() > dim_cap) {
      cl.reason = "orbit dimension " + std::to_string(M.total_dim()) + " exceeds cap";
      return cl;
    }
  }
  if (M.is_zero() || static_cast<int>(orbit.size()) < bound + 1) {
    // orbit terminated: check d-rigidity of the sum
    cl.p_max = static_cast<int>(orbit.size()) - 1;
    ModuleRep T = direct_sum(q, orbit);
    if (d > 1) {
      GradedResolution RT = resolve_module(P.A, T, d);
      auto ext = ext_dims(P.A, RT, T, d - 1);
      for (int j = 1; j < d; ++j)
        for (const auto& [deg, n] : ext[j]) cl.witnesses.push_back({-1, j, deg, n});
      if (!cl.witnesses.empty()) {
        const auto& w = cl.witnesses.front();
        cl.kind = Classification::NotHereditary;
        cl.rigidity_failure = true;
        cl.wit_j = w.j;
        cl.wit_degree = w.degree;
        cl.reason = "orbit sum is not rigid: Ext^" + std::to_string(w.j) + " nonzero";
        return cl;
      }
    }
    cl.kind = Classification::RF;
    return cl;
  }
  if (saw_hom) {
    cl.reason = "orbit did not terminate but Hom(D Lambda, orbit) is nonzero";
    return cl;
  }
  cl.kind = Classification::RI;
  return cl;
}

}  // namespace preproj
