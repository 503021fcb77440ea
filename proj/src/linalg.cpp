#include "preproj/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace preproj {

SparseVec sv_unit(int col, const Scalar& c) {
  if (c.is_zero()) return {};
  return {{col, c}};
}

SparseVec sv_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
  if (c.is_zero() || b.empty()) return a;
  SparseVec r;
  r.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      r.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      r.emplace_back(j->first, j->second * c);
      ++j;
    } else {
      Scalar s = i->second + j->second * c;
      if (!s.is_zero()) r.emplace_back(i->first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b) { return sv_axpy(a, Scalar(1), b); }

SparseVec sv_scale(const SparseVec& a, const Scalar& c) {
  if (c.is_zero()) return {};
  SparseVec r = a;
  for (auto& [k, v] : r) v *= c;
  return r;
}

Scalar sv_get(const SparseVec& a, int col) {
  auto it = std::lower_bound(a.begin(), a.end(), col, [](const auto& e, int c) { return e.first < c; });
  return (it != a.end() && it->first == col) ? it->second : Scalar(0);
}

void SparseAcc::add(int col, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = m_.emplace(col, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) m_.erase(it);
  }
}

void SparseAcc::add(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [k, x] : v) add(k, c.is_one() ? x : x * c);
}

SparseVec SparseAcc::take() {
  SparseVec r(m_.begin(), m_.end());
  m_.clear();
  return r;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  if (rows_.empty()) return v;
  std::map<int, Scalar> acc(v.begin(), v.end());
  SparseVec out;
  while (!acc.empty()) {
    auto it = std::prev(acc.end());
    int col = it->first;
    Scalar c = it->second;
    acc.erase(it);
    int r = pivot_row_[col];
    if (r < 0) {
      out.emplace_back(col, c);
      continue;
    }
    const SparseVec& row = rows_[r];
    for (std::size_t k = 0; k + 1 < row.size(); ++k) {
      auto [jt, ins] = acc.emplace(row[k].first, Scalar(0));
      jt->second -= c * row[k].second;
      if (jt->second.is_zero()) acc.erase(jt);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  Scalar lead = r.back().second;
  if (!lead.is_one()) r = sv_scale(r, lead.inverse());
  pivot_row_[r.back().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<int> Echelon::pivots() const {
  std::vector<int> p;
  for (const auto& r : rows_) p.push_back(r.back().first);
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<SparseVec> Echelon::rref() const {
  std::vector<SparseVec> out;
  std::vector<int> piv = pivots();
  Echelon reduced(ncols_);
  // process pivots in increasing order so each row is reduced against smaller ones
  for (int p : piv) {
    const SparseVec& row = rows_[pivot_row_[p]];
    SparseVec tail(row.begin(), row.end() - 1);
    SparseVec t = reduced.reduce(tail);
    t.emplace_back(p, Scalar(1));
    reduced.rows_.push_back(t);
    reduced.pivot_row_[p] = static_cast<int>(reduced.rows_.size()) - 1;
    out.push_back(t);
  }
  return out;
}

int rank_of(const std::vector<SparseVec>& rows, int ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows, int ncols) {
  int m = static_cast<int>(rows.size());
  Echelon e(m + ncols);
  for (int i = 0; i < m; ++i) {
    SparseVec v;
    v.emplace_back(i, Scalar(1));
    for (const auto& [k, x] : rows[i]) v.emplace_back(k + m, x);
    e.insert(v);
  }
  std::vector<SparseVec> ker;
  for (const auto& r : e.rref())
    if (r.back().first < m) ker.push_back(r);
  return ker;
}

std::vector<SparseVec> null_space(const std::vector<SparseVec>& rows, int ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) e.insert(r);
  auto rr = e.rref();
  std::vector<SparseVec> out;
  std::vector<char> piv(ncols, 0);
  for (const auto& r : rr) piv[r.back().first] = 1;
  for (int j = 0; j < ncols; ++j) {
    if (piv[j]) continue;
    SparseAcc acc;
    acc.add(j, Scalar(1));
    for (const auto& r : rr) {
      Scalar c = sv_get(r, j);
      if (!c.is_zero()) acc.add(r.back().first, -c);
    }
    out.push_back(acc.take());
  }
  return out;
}

SpanSolver::SpanSolver(const std::vector<SparseVec>& rows, int ncols)
    : m_(static_cast<int>(rows.size())), ncols_(ncols), ech_(m_ + ncols) {
  for (int i = 0; i < m_; ++i) {
    SparseVec v;
    v.emplace_back(i, Scalar(1));
    for (const auto& [k, x] : rows[i]) v.emplace_back(k + m_, x);
    ech_.insert(v);
  }
}

bool SpanSolver::solve(const SparseVec& v, SparseVec& coeffs) const {
  SparseVec w;
  for (const auto& [k, x] : v) w.emplace_back(k + m_, x);
  SparseVec r = ech_.reduce(w);
  // remainder = w - sum(rows combos); in span iff only tag columns remain
  coeffs.clear();
  for (const auto& [k, x] : r) {
    if (k >= m_) return false;
    coeffs.emplace_back(k, -x);
  }
  return true;
}

PathIndex::PathIndex(std::vector<Path> paths) : paths_(std::move(paths)) {
  std::sort(paths_.begin(), paths_.end());
  paths_.erase(std::unique(paths_.begin(), paths_.end()), paths_.end());
  for (int i = 0; i < size(); ++i) index_.emplace(paths_[i], i);
}

PathIndex PathIndex::of_elements(const std::vector<Element>& elems) {
  std::vector<Path> ps;
  for (const auto& e : elems)
    for (const auto& [p, c] : e.terms()) ps.push_back(p);
  return PathIndex(std::move(ps));
}

int PathIndex::find(const Path& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

SparseVec PathIndex::vec(const Element& e) const {
  SparseVec v;
  for (const auto& [p, c] : e.terms()) {
    int i = find(p);
    if (i < 0) throw std::logic_error("path outside index");
    v.emplace_back(i, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Element PathIndex::element(const SparseVec& v) const {
  Element e;
  for (const auto& [k, c] : v) e.add(paths_[k], c);
  return e;
}

Subspace Subspace::span(int degree, const std::vector<Element>& gens) {
  PathIndex idx = PathIndex::of_elements(gens);
  Echelon e(idx.size());
  for (const auto& g : gens) e.insert(idx.vec(g));
  Subspace s;
  s.degree = degree;
  for (const auto& r : e.rref()) s.basis.push_back(idx.element(r));
  return s;
}

bool Subspace::contains(const Element& x) const {
  std::vector<Element> all = basis;
  all.push_back(x);
  PathIndex idx = PathIndex::of_elements(all);
  Echelon e(idx.size());
  for (const auto& b : basis) e.insert(idx.vec(b));
  return e.contains(idx.vec(x));
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& b : o.basis)
    if (!contains(b)) return false;
  return true;
}

std::vector<Scalar> Subspace::coordinates(const Element& e) const {
  // RREF: coefficient of basis i is the coefficient of its pivot path
  std::vector<Scalar> c;
  Element rest = e;
  for (const auto& b : basis) {
    Scalar x = e.coeff(b.leading_path());
    c.push_back(x);
    rest = rest - b * x;
  }
  if (!rest.is_zero()) throw std::logic_error("element outside subspace");
  return c;
}

Subspace intersect_subspaces(const std::vector<Subspace>& spaces) {
  if (spaces.empty()) throw std::invalid_argument("no subspaces to intersect");
  for (const auto& s : spaces)
    if (s.degree != spaces[0].degree) throw std::invalid_argument("mismatched ambient degrees");
  Subspace cur = spaces[0];
  for (std::size_t k = 1; k < spaces.size(); ++k) {
    const Subspace& w = spaces[k];
    std::vector<Element> all = cur.basis;
    all.insert(all.end(), w.basis.begin(), w.basis.end());
    PathIndex idx = PathIndex::of_elements(all);
    std::vector<SparseVec> rows;
    for (const auto& e : all) rows.push_back(idx.vec(e));
    std::vector<Element> gens;
    int m = cur.dim();
    for (const auto& kv : left_kernel(rows, idx.size())) {
      Element x;
      for (const auto& [i, c] : kv)
        if (i < m) x += cur.basis[i] * c;
      if (!x.is_zero()) gens.push_back(x);
    }
    cur = Subspace::span(cur.degree, gens);
  }
  return cur;
}

}  // namespace preproj
