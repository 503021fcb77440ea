#pragma once

#include <map>
#include <string>
#include <vector>

#include "preproj/scalar.hpp"

namespace preproj {

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int vertex_index(const std::string& name) const;  // -1 if absent
  int arrow_index(const std::string& name) const;   // -1 if absent
  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, int src, int tgt);
  bool operator==(const Quiver& o) const;
};

// Trivial path e_v has no arrows and src == tgt == v.
struct Path {
  int src = 0;
  int tgt = 0;
  std::vector<int> arrows;

  static Path trivial(int v) { return Path{v, v, {}}; }
  static Path arrow(const Quiver& q, int a) { return Path{q.arrows[a].src, q.arrows[a].tgt, {a}}; }
  int length() const { return static_cast<int>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }
  bool is_closed() const { return src == tgt; }
  // nullopt-free: caller checks composability
  Path then(const Path& o) const;
  Path then_arrow(const Quiver& q, int a) const;
  // subpath of arrows [from, to)
  Path sub(const Quiver& q, int from, int to) const;
  std::string str(const Quiver& q) const;

  bool operator==(const Path& o) const { return src == o.src && tgt == o.tgt && arrows == o.arrows; }
  bool operator!=(const Path& o) const { return !(*this == o); }
  // graded lexicographic: length, then arrow sequence, then vertex for trivial paths
  bool operator<(const Path& o) const;
};

// Finite linear combination of paths; no zero coefficients are stored.
class Element {
 public:
  using Terms = std::map<Path, Scalar>;

  Element() = default;
  explicit Element(const Path& p, const Scalar& c = Scalar(1)) { add(p, c); }

  void add(const Path& p, const Scalar& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const Path& p) const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Scalar& c) const;
  Element& operator+=(const Element& o);
  bool operator==(const Element& o) const { return terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }
  bool operator<(const Element& o) const;

  // concatenation product; non-composable pairs vanish
  Element mul(const Element& o) const;

  int min_degree() const;
  int max_degree() const;
  bool is_homogeneous() const { return is_zero() || min_degree() == max_degree(); }
  // common source/target if bihomogeneous, else -1
  int source() const;
  int target() const;
  const Path& leading_path() const { return terms_.rbegin()->first; }
  const Path& first_path() const { return terms_.begin()->first; }

  // pieces e_i x e_j of fixed length
  std::vector<Element> homogeneous_pieces() const;
  // rescale so the smallest path has coefficient +1
  Element normalized() const;

  std::string str(const Quiver& q) const;

 private:
  Terms terms_;
};

// all paths of given length, sorted
std::vector<Path> paths_of_length(const Quiver& q, int n);

}  // namespace preproj
