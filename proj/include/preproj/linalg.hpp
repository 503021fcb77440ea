#pragma once

#include <map>
#include <utility>
#include <vector>

#include "preproj/quiver.hpp"
#include "preproj/scalar.hpp"

namespace preproj {

// sorted by column, no zeros
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sv_unit(int col, const Scalar& c = Scalar(1));
SparseVec sv_add(const SparseVec& a, const SparseVec& b);
SparseVec sv_scale(const SparseVec& a, const Scalar& c);
// a + c*b
SparseVec sv_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);
Scalar sv_get(const SparseVec& a, int col);

// Accumulates sparse vectors in a map; cheap for repeated scattered adds.
class SparseAcc {
 public:
  void add(int col, const Scalar& c);
  void add(const SparseVec& v, const Scalar& c = Scalar(1));
  SparseVec take();
  bool empty() const { return m_.empty(); }

 private:
  std::map<int, Scalar> m_;
};

// Row echelon form, pivot = largest column of each row, pivot coefficient 1.
class Echelon {
 public:
  explicit Echelon(int ncols = 0) : ncols_(ncols), pivot_row_(ncols, -1) {}
  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool insert(const SparseVec& v);  // true if rank grew
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
  const std::vector<SparseVec>& rows() const { return rows_; }
  // fully reduced rows sorted by pivot
  std::vector<SparseVec> rref() const;
  std::vector<int> pivots() const;

 private:
  int ncols_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivot_row_;
};

// rank of a list of rows
int rank_of(const std::vector<SparseVec>& rows, int ncols);

// all x with sum_i x_i rows[i] = 0; returned as sparse vectors over row indices
std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows, int ncols);

// null space {x : rows . x = 0} as sparse vectors over columns
std::vector<SparseVec> null_space(const std::vector<SparseVec>& rows, int ncols);

// Expresses vectors in terms of a fixed list of (independent or not) rows.
class SpanSolver {
 public:
  SpanSolver(const std::vector<SparseVec>& rows, int ncols);
  // coefficients c with sum c_i rows[i] = v, or false if v not in span
  bool solve(const SparseVec& v, SparseVec& coeffs) const;
  int rank() const { return ech_.rank(); }

 private:
  int m_, ncols_;
  Echelon ech_;
};

// Column index over a sorted set of paths.
class PathIndex {
 public:
  PathIndex() = default;
  explicit PathIndex(std::vector<Path> paths);
  static PathIndex of_elements(const std::vector<Element>& elems);
  int size() const { return static_cast<int>(paths_.size()); }
  int find(const Path& p) const;  // -1 if absent
  const Path& path(int i) const { return paths_[i]; }
  SparseVec vec(const Element& e) const;  // throws if a path is missing
  Element element(const SparseVec& v) const;

 private:
  std::vector<Path> paths_;
  std::map<Path, int> index_;
};

// Subspace of the span of paths, canonical RREF basis (pivot = largest path).
struct Subspace {
  int degree = 0;
  std::vector<Element> basis;

  static Subspace span(int degree, const std::vector<Element>& gens);
  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const Element& e) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return basis == o.basis; }
  // coordinates of e in the canonical basis; throws if e is outside
  std::vector<Scalar> coordinates(const Element& e) const;
};

Subspace intersect_subspaces(const std::vector<Subspace>& spaces);

}  // namespace preproj
