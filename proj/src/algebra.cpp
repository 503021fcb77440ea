#include "preproj/algebra.hpp"

#include <algorithm>

namespace preproj {

GradedAlgebra::GradedAlgebra(const Presentation& p, int max_degree) : pres_(p) {
  for (const auto& r : pres_.relations) {
    if (!r.is_homogeneous() || r.source() < 0 || r.target() < 0)
      throw std::invalid_argument("relation is not homogeneous: " + r.str(pres_.quiver));
    if (r.min_degree() < 1) throw std::invalid_argument("relation of degree 0");
  }
  int cap = max_degree;
  if (pres_.truncation) cap = std::min(cap, *pres_.truncation);
  basis_.emplace_back();
  index_.emplace_back();
  for (int v = 0; v < quiver().num_vertices(); ++v) {
    basis_[0].push_back(Path::trivial(v));
    index_[0].emplace(Path::trivial(v), v);
  }
  computed_ = 0;
  if (basis_[0].empty()) {
    finite_ = true;
    return;
  }
  for (int m = 1; m <= cap; ++m) {
    build_degree(m);
    computed_ = m;
    if (basis_[m].empty()) {
      finite_ = true;
      break;
    }
  }
  words_.resize(basis_.size());
  for (std::size_t n = 0; n < basis_.size(); ++n)
    for (int b = 0; b < static_cast<int>(basis_[n].size()); ++b)
      words_[n][{basis_[n][b].src, basis_[n][b].tgt}].push_back(b);
}

const std::vector<int>& GradedAlgebra::words(int n, int s, int t) const {
  static const std::vector<int> empty;
  if (n < 0) return empty;
  check_degree(n);
  if (n >= static_cast<int>(words_.size())) return empty;
  auto it = words_[n].find({s, t});
  return it == words_[n].end() ? empty : it->second;
}

void GradedAlgebra::build_degree(int m) {
  const Quiver& q = quiver();
  std::vector<Path> cols;
  std::map<std::pair<int, int>, int> col_of;
  if (m == 1) {
    for (int a = 0; a < q.num_arrows(); ++a) {
      col_of[{q.arrows[a].src, a}] = a;
      cols.push_back(Path::arrow(q, a));
    }
  } else {
    const auto& prev = basis_[m - 1];
    for (int b = 0; b < static_cast<int>(prev.size()); ++b)
      for (int a = 0; a < q.num_arrows(); ++a)
        if (q.arrows[a].src == prev[b].tgt) {
          col_of[{b, a}] = static_cast<int>(cols.size());
          cols.push_back(prev[b].then_arrow(q, a));
        }
  }
  int ncols = static_cast<int>(cols.size());
  Echelon ech(ncols);
  for (const auto& r : pres_.relations) {
    int k = r.max_degree();
    if (k > m) continue;
    const auto& us = basis_[m - k];
    for (int u = 0; u < static_cast<int>(us.size()); ++u) {
      if (us[u].tgt != r.source()) continue;
      SparseAcc row;
      for (const auto& [path, c] : r.terms()) {
        Path prefix = path.sub(q, 0, k - 1);
        int last = path.arrows.back();
        AVec x = mul_path(AVec{m - k, sv_unit(u)}, prefix);
        for (const auto& [b, xc] : x.v) row.add(col_of.at({b, last}), xc * c);
      }
      ech.insert(row.take());
    }
  }
  std::vector<int> newidx(ncols, -1);
  basis_.emplace_back();
  index_.emplace_back();
  for (int c = 0; c < ncols; ++c)
    if (!ech.is_pivot(c)) {
      newidx[c] = static_cast<int>(basis_[m].size());
      index_[m].emplace(cols[c], newidx[c]);
      basis_[m].push_back(cols[c]);
    }
  rmul_.emplace_back(basis_[m - 1].size());
  auto& tab = rmul_[m - 1];
  for (const auto& [key, c] : col_of) {
    SparseVec img;
    if (newidx[c] >= 0) {
      img = sv_unit(newidx[c]);
    } else {
      for (const auto& [k, x] : ech.reduce(sv_unit(c))) img.emplace_back(newidx[k], x);
    }
    tab[key.first][key.second] = std::move(img);
  }
}

int GradedAlgebra::top_degree() const {
  int t = 0;
  for (int n = 0; n < static_cast<int>(basis_.size()); ++n)
    if (!basis_[n].empty()) t = n;
  return t;
}

void GradedAlgebra::check_degree(int n) const {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (!finite_ && n > computed_)
    throw TruncationError("degree " + std::to_string(n) + " exceeds truncation " + std::to_string(computed_));
}

int GradedAlgebra::dim(int n) const {
  check_degree(n);
  return n < static_cast<int>(basis_.size()) ? static_cast<int>(basis_[n].size()) : 0;
}

int GradedAlgebra::total_dim() const {
  int s = 0;
  for (const auto& b : basis_) s += static_cast<int>(b.size());
  return s;
}

const std::vector<Path>& GradedAlgebra::basis(int n) const {
  static const std::vector<Path> empty;
  check_degree(n);
  return n < static_cast<int>(basis_.size()) ? basis_[n] : empty;
}

int GradedAlgebra::index(const Path& p) const {
  int n = p.length();
  if (n >= static_cast<int>(index_.size())) return -1;
  auto it = index_[n].find(p);
  return it == index_[n].end() ? -1 : it->second;
}

const SparseVec& GradedAlgebra::rmul(int n, int b, int a) const {
  static const SparseVec zero;
  check_degree(n + 1);
  if (n >= static_cast<int>(rmul_.size())) return zero;
  auto it = rmul_[n][b].find(a);
  return it == rmul_[n][b].end() ? zero : it->second;
}

AVec GradedAlgebra::mul_arrow(const AVec& x, int a) const {
  SparseAcc acc;
  for (const auto& [b, c] : x.v) acc.add(rmul(x.degree, b, a), c);
  return AVec{x.degree + 1, acc.take()};
}

AVec GradedAlgebra::mul_path(const AVec& x, const Path& p) const {
  AVec cur = x;
  if (p.is_trivial()) {
    // keep only terms ending at the vertex
    SparseVec kept;
    for (const auto& [b, c] : cur.v)
      if (basis_[cur.degree][b].tgt == p.src) kept.emplace_back(b, c);
    cur.v = std::move(kept);
    return cur;
  }
  for (int a : p.arrows) {
    cur = mul_arrow(cur, a);
    if (cur.v.empty()) {
      cur.degree = x.degree + p.length();
      check_degree(cur.degree);
      return cur;
    }
  }
  return cur;
}

AVec GradedAlgebra::nf_path(const Path& p) const {
  check_degree(p.length());
  return mul_path(AVec{0, sv_unit(p.src)}, p);
}

AVec GradedAlgebra::mul(const AVec& x, const AVec& y) const {
  SparseAcc acc;
  for (const auto& [b, c] : y.v) acc.add(mul_path(x, basis_[y.degree][b]).v, c);
  return AVec{x.degree + y.degree, acc.take()};
}

AVec GradedAlgebra::lmul_arrow(int a, int n, int b) const {
  return mul_path(AVec{1, nf_path(Path::arrow(quiver(), a)).v}, basis_[n][b]);
}

Element GradedAlgebra::element(const AVec& x) const {
  Element e;
  if (x.v.empty()) return e;
  const auto& bs = basis(x.degree);
  for (const auto& [b, c] : x.v) e.add(bs[b], c);
  return e;
}

AVec GradedAlgebra::vec(const Element& x) const {
  if (!x.is_homogeneous()) throw std::invalid_argument("inhomogeneous element");
  int n = x.min_degree();
  SparseAcc acc;
  for (const auto& [p, c] : x.terms()) acc.add(nf_path(p).v, c);
  return AVec{n, acc.take()};
}

Element GradedAlgebra::normal_form(const Element& x) const {
  Element out;
  for (const auto& [p, c] : x.terms()) out += element(nf_path(p)) * c;
  return out;
}

}  // namespace preproj
