#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "preproj/linalg.hpp"
#include "preproj/presentation.hpp"

namespace preproj {

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Homogeneous element of a GradedAlgebra: coordinates over basis(degree).
struct AVec {
  int degree = 0;
  SparseVec v;
  bool is_zero() const { return v.empty(); }
};

// Quotient T_S(V)/(relations) computed degree by degree. Basis of degree n is
// the set of standard words: paths b*a with b standard in degree n-1 whose
// column is not a pivot of the relation images.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  // computes degrees 0..max_degree, capped by the presentation's truncation;
  // stops early once a degree vanishes
  GradedAlgebra(const Presentation& p, int max_degree);

  const Presentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  const Field& field() const { return pres_.field; }
  int computed_degree() const { return computed_; }
  bool finite() const { return finite_; }
  // highest nonzero degree (meaningful when finite)
  int top_degree() const;
  int dim(int n) const;
  int total_dim() const;
  const std::vector<Path>& basis(int n) const;
  int index(const Path& p) const;  // -1 if not a standard word
  // indices of standard words of degree n from s to t (empty beyond a finite top)
  const std::vector<int>& words(int n, int s, int t) const;
  void check_degree(int n) const;

  // x * a for basis element b of degree n
  const SparseVec& rmul(int n, int b, int a) const;
  AVec mul_arrow(const AVec& x, int a) const;
  AVec mul_path(const AVec& x, const Path& p) const;
  AVec nf_path(const Path& p) const;
  AVec mul(const AVec& x, const AVec& y) const;
  AVec unit(int n, int b) const { return AVec{n, sv_unit(b)}; }
  // a * (basis b of degree n)
  AVec lmul_arrow(int a, int n, int b) const;
  // normal form of a homogeneous or mixed element, returned as an Element of standard words
  Element normal_form(const Element& x) const;
  Element element(const AVec& x) const;
  AVec vec(const Element& homogeneous) const;

 private:
  Presentation pres_;
  int computed_ = -1;
  bool finite_ = false;
  std::vector<std::vector<Path>> basis_;
  std::vector<std::map<Path, int>> index_;
  // rmul_[n][b] maps arrow -> image in degree n+1
  std::vector<std::vector<std::map<int, SparseVec>>> rmul_;
  std::vector<std::map<std::pair<int, int>, std::vector<int>>> words_;
  void build_degree(int m);
};

}  // namespace preproj
