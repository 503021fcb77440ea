#include "preproj/koszul.hpp"

#include <algorithm>
#include <climits>

namespace preproj {

namespace {

void require_quadratic(const Presentation& p) {
  if (!p.is_quadratic()) throw std::invalid_argument("presentation is not quadratic");
}

// x = sum over first arrows a of a * x_a; returns x_a per arrow
std::map<int, Element> split_first(const Quiver& q, const Element& x) {
  std::map<int, Element> out;
  for (const auto& [p, c] : x.terms()) {
    Path rest{q.arrows[p.arrows.front()].tgt, p.tgt, std::vector<int>(p.arrows.begin() + 1, p.arrows.end())};
    out[p.arrows.front()].add(rest, c);
  }
  return out;
}

std::map<int, Element> split_last(const Quiver& q, const Element& x) {
  std::map<int, Element> out;
  for (const auto& [p, c] : x.terms()) {
    Path rest{p.src, q.arrows[p.arrows.back()].src, std::vector<int>(p.arrows.begin(), p.arrows.end() - 1)};
    out[p.arrows.back()].add(rest, c);
  }
  return out;
}

}  // namespace

KoszulTower koszul_tower(const Presentation& p, int up_to) {
  require_quadratic(p);
  const Quiver& q = p.quiver;
  KoszulTower t;
  std::vector<Element> e0, e1;
  for (int v = 0; v < q.num_vertices(); ++v) e0.emplace_back(Path::trivial(v));
  t.K.push_back(Subspace::span(0, e0));
  if (up_to < 1 || q.num_arrows() == 0) return t;
  for (int a = 0; a < q.num_arrows(); ++a) e1.emplace_back(Path::arrow(q, a));
  t.K.push_back(Subspace::span(1, e1));
  if (up_to < 2) return t;
  Subspace R = Subspace::span(2, p.relations);
  if (R.dim() == 0) return t;
  t.K.push_back(R);
  for (int j = 3; j <= up_to; ++j) {
    const Subspace& prev = t.K.back();
    std::vector<Element> left, right;
    for (const auto& k : prev.basis)
      for (int a = 0; a < q.num_arrows(); ++a) {
        Element ak = Element(Path::arrow(q, a)).mul(k);
        if (!ak.is_zero()) left.push_back(ak);
        Element ka = k.mul(Element(Path::arrow(q, a)));
        if (!ka.is_zero()) right.push_back(ka);
      }
    Subspace L = Subspace::span(j, left), Rr = Subspace::span(j, right);
    if (L.dim() == 0 || Rr.dim() == 0) break;
    Subspace K = intersect_subspaces({L, Rr});
    if (K.dim() == 0) break;
    t.K.push_back(K);
  }
  return t;
}

BimoduleComplex koszul_complex(const Presentation& p, const KoszulTower& t) {
  const Quiver& q = p.quiver;
  BimoduleComplex C;
  C.gens.emplace_back();
  C.diff.emplace_back();
  for (int v = 0; v < q.num_vertices(); ++v) C.gens[0].push_back({v, v, 0});
  for (int i = 1; i <= t.top(); ++i) {
    const Subspace& K = t.K[i];
    const Subspace& Kp = t.K[i - 1];
    std::vector<BGen> gens;
    std::vector<std::vector<BTerm>> diff;
    Scalar sign = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
    for (const auto& k : K.basis) {
      gens.push_back({k.source(), k.target(), i});
      std::vector<BTerm> terms;
      for (const auto& [a, rest] : split_first(q, k)) {
        auto coords = Kp.coordinates(rest);
        for (int j = 0; j < Kp.dim(); ++j)
          if (!coords[j].is_zero()) terms.push_back({coords[j], Path::arrow(q, a), j, Path::trivial(k.target())});
      }
      for (const auto& [b, rest] : split_last(q, k)) {
        auto coords = Kp.coordinates(rest);
        for (int j = 0; j < Kp.dim(); ++j)
          if (!coords[j].is_zero()) terms.push_back({coords[j] * sign, Path::trivial(k.source()), j, Path::arrow(q, b)});
      }
      diff.push_back(std::move(terms));
    }
    C.gens.push_back(std::move(gens));
    C.diff.push_back(std::move(diff));
  }
  return C;
}

Presentation quadratic_dual(const Presentation& p) {
  require_quadratic(p);
  const Quiver& q = p.quiver;
  Presentation out;
  out.field = p.field;
  out.quiver.vertices = q.vertices;
  for (const auto& a : q.arrows) {
    std::string name = a.name;
    if (!name.empty() && name.back() == '!')
      name.pop_back();
    else
      name += '!';
    out.quiver.add_arrow(name, a.tgt, a.src);
  }
  std::vector<Path> v2 = paths_of_length(q, 2);
  PathIndex idx(v2);
  std::vector<SparseVec> rows;
  for (const auto& r : p.relations) rows.push_back(idx.vec(r));
  std::vector<Element> perp;
  for (const auto& x : null_space(rows, idx.size())) {
    Element e;
    for (const auto& [k, c] : x) {
      const Path& pp = idx.path(k);
      Path d{pp.tgt, pp.src, {pp.arrows[1], pp.arrows[0]}};
      e.add(d, c);
    }
    perp.push_back(e);
  }
  for (const auto& e : Subspace::span(2, perp).basis) out.relations.push_back(e.normalized());
  return out;
}

ModuleRep degree_zero_module(const Quiver& q) {
  ModuleRep m = ModuleRep::zero(q);
  for (int v = 0; v < q.num_vertices(); ++v) m.degrees[v].push_back(0);
  for (int a = 0; a < q.num_arrows(); ++a) m.act[a].assign(1, {});
  return m;
}

KoszulReport is_koszul_up_to(const Presentation& p, int N) {
  KoszulReport rep;
  rep.bound = N;
  GradedAlgebra A(p, N + 2);
  GradedResolution R = resolve_module(A, degree_zero_module(p.quiver), N);
  rep.partial = R.partial;
  rep.window = R.partial ? R.window : INT_MAX;
  for (int i = 0; i < static_cast<int>(R.gens.size()) && i <= N; ++i)
    if (!R.is_linear(i)) {
      rep.linear = false;
      rep.first_failure = i;
      break;
    }
  if (p.is_quadratic()) {
    KoszulTower t = koszul_tower(p, N + 1);
    BimoduleComplex C = koszul_complex(p, t);
    int maxdeg = A.finite() ? N + 1 : std::min(N + 1, A.computed_degree());
    rep.complex_exact = complex_is_exact(A, C, N, maxdeg);
  }
  return rep;
}

std::map<int, int> dual_socle_profile(const Presentation& p, int bound) {
  Presentation d = quadratic_dual(p);
  GradedAlgebra G(d, bound + 1);
  const Quiver& q = d.quiver;
  std::map<int, int> out;
  int top = G.finite() ? G.top_degree() : bound;
  for (int n = 0; n <= std::min(top, bound); ++n) {
    int dn = G.dim(n);
    if (dn == 0) continue;
    int dn1 = (G.finite() || n + 1 <= G.computed_degree()) ? G.dim(n + 1) : 0;
    std::vector<SparseVec> rows;
    for (int b = 0; b < dn; ++b) {
      SparseAcc acc;
      for (int a = 0; a < q.num_arrows(); ++a) {
        for (const auto& [k, c] : G.rmul(n, b, a)) acc.add(2 * a * dn1 + k, c);
        if (q.arrows[a].tgt == G.basis(n)[b].src)
          for (const auto& [k, c] : G.lmul_arrow(a, n, b).v) acc.add((2 * a + 1) * dn1 + k, c);
      }
      rows.push_back(acc.take());
    }
    int ker = dn - rank_of(rows, 2 * q.num_arrows() * std::max(dn1, 1));
    if (ker) out[n] = ker;
  }
  return out;
}

}  // namespace preproj
