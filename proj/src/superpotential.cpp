#include "preproj/superpotential.hpp"

#include <stdexcept>

namespace preproj {

Element cyclic_project(const Element& x) {
  if (!x.is_homogeneous()) throw std::invalid_argument("cyclic projection needs a homogeneous element");
  Element out;
  for (const auto& [p, c] : x.terms())
    if (p.is_closed()) out.add(p, c);
  return out;
}

Element rotate(const Quiver& q, const Element& w) {
  Element out;
  for (const auto& [p, c] : w.terms()) {
    if (!p.is_closed()) throw std::invalid_argument("rotation of an open path");
    if (p.length() <= 1) {
      out.add(p, c);
      continue;
    }
    std::vector<int> arr(p.arrows.begin() + 1, p.arrows.end());
    arr.push_back(p.arrows.front());
    int v = q.arrows[arr.front()].src;
    out.add(Path{v, v, arr}, c);
  }
  return out;
}

Element phi(const Quiver& q, const Element& w) {
  Element out;
  if (w.is_zero()) return out;
  const int l = w.max_degree();
  Element cur = w;
  for (int i = 0; i < std::max(l, 1); ++i) {
    bool neg = ((l - 1) * i) % 2 != 0;
    out += neg ? cur * Scalar(-1) : cur;
    cur = rotate(q, cur);
  }
  return out;
}

Element derivative(const Quiver& q, const Element& w, const Path& p) {
  Element out;
  const Element pw = phi(q, w);
  for (const auto& [t, c] : pw.terms()) {
    if (t.src != p.src || t.length() < p.length()) continue;
    if (!std::equal(p.arrows.begin(), p.arrows.end(), t.arrows.begin())) continue;
    if (p.length() > 0 && q.arrows[p.arrows.back()].tgt != p.tgt) continue;
    out.add(t.sub(q, p.length(), t.length()), c);
  }
  return out;
}

Presentation jacobi_presentation(const Quiver& q, const Field& f, const Element& W, int k) {
  Presentation out;
  out.quiver = q;
  out.field = f;
  std::vector<Path> ps;
  if (k == 0) {
    for (int v = 0; v < q.num_vertices(); ++v) ps.push_back(Path::trivial(v));
  } else {
    ps = paths_of_length(q, k);
  }
  for (const auto& p : ps) {
    Element r = derivative(q, W, p);
    if (!r.is_zero()) out.relations.push_back(r.normalized());
  }
  return out;
}

Element associated_superpotential(const Preprojective& P) {
  const int d = P.d;
  const Quiver& qq = P.doubled.quiver;
  Element W;
  for (int g = 0; g < static_cast<int>(P.resolution.gens[d].size()); ++g) {
    Element k = P.resolution.gen_path(d, g);
    Path a = Path::arrow(qq, P.doubled.first_new + g);
    for (const auto& [p, c] : k.terms())
      if (p.tgt == a.src) W.add(p.then(a), c);
  }
  return cyclic_project(W);
}

const JacobiOrder* JacobiReport::order(int k) const {
  for (const auto& o : orders)
    if (o.k == k) return &o;
  return nullptr;
}

JacobiReport verify_jacobi_theorems(const Preprojective& P, int bound) {
  JacobiReport rep;
  rep.d = P.d;
  rep.bound = bound;
  rep.koszul = P.koszul;
  rep.W = associated_superpotential(P);
  const Quiver& qq = P.pi.quiver;
  const int l = rep.W.is_zero() ? 0 : rep.W.max_degree();
  Presentation R;
  R.quiver = qq;
  R.field = P.pi.field;
  R.relations = P.lambda.relations;
  for (int k = 0; k < l; ++k) {
    JacobiOrder o;
    o.k = k;
    Presentation J = jacobi_presentation(qq, P.pi.field, rep.W, k);
    o.equal = ideals_equal(J, P.pi, bound);
    o.contains_R = ideal_contains(J, R.relations, bound);
    if (o.contains_R) {
      o.equal_with_R = o.equal;
    } else {
      Presentation JR = J;
      JR.relations.insert(JR.relations.end(), R.relations.begin(), R.relations.end());
      o.equal_with_R = ideals_equal(JR, P.pi, bound);
    }
    rep.orders.push_back(o);
  }
  if (P.koszul) {
    rep.socle = dual_socle_profile(P.lambda, P.d + 1);
    rep.socle_hypothesis = true;
    for (int i = 2; i < P.d; ++i) {
      auto it = rep.socle.find(i);
      if (it != rep.socle.end() && it->second > 0) {
        rep.socle_hypothesis = false;
        rep.socle_failure_degree = i;
        break;
      }
    }
    // derivatives along paths of the original quiver span exactly the delta' relations
    std::vector<Path> ps;
    if (P.d == 1) {
      for (int v = 0; v < P.lambda.quiver.num_vertices(); ++v) ps.push_back(Path::trivial(v));
    } else {
      ps = paths_of_length(P.lambda.quiver, P.d - 1);
    }
    std::vector<Element> ders;
    for (const auto& p : ps) {
      Element r = derivative(qq, rep.W, p);
      if (!r.is_zero()) ders.push_back(r);
    }
    rep.derivative_relations_match = Subspace::span(2, ders) == Subspace::span(2, P.new_relations);
  }
  return rep;
}

}  // namespace preproj
