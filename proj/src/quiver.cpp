#include "preproj/quiver.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace preproj {

int Quiver::vertex_index(const std::string& name) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices[i] == name) return i;
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].name == name) return i;
  return -1;
}

int Quiver::add_vertex(const std::string& name) {
  if (vertex_index(name) >= 0) throw std::invalid_argument("duplicate vertex " + name);
  vertices.push_back(name);
  return num_vertices() - 1;
}

int Quiver::add_arrow(const std::string& name, int src, int tgt) {
  if (arrow_index(name) >= 0) throw std::invalid_argument("duplicate arrow " + name);
  if (src < 0 || tgt < 0 || src >= num_vertices() || tgt >= num_vertices())
    throw std::invalid_argument("arrow " + name + " has unknown endpoint");
  arrows.push_back(Arrow{name, src, tgt});
  return num_arrows() - 1;
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertices != o.vertices || arrows.size() != o.arrows.size()) return false;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name != o.arrows[i].name || arrows[i].src != o.arrows[i].src ||
        arrows[i].tgt != o.arrows[i].tgt)
      return false;
  return true;
}

Path Path::then(const Path& o) const {
  Path r{src, o.tgt, arrows};
  r.arrows.insert(r.arrows.end(), o.arrows.begin(), o.arrows.end());
  return r;
}

Path Path::then_arrow(const Quiver& q, int a) const {
  Path r{src, q.arrows[a].tgt, arrows};
  r.arrows.push_back(a);
  return r;
}

Path Path::sub(const Quiver& q, int from, int to) const {
  if (from == to) {
    int v = from == 0 ? src : q.arrows[arrows[from - 1]].tgt;
    return trivial(v);
  }
  Path r{q.arrows[arrows[from]].src, q.arrows[arrows[to - 1]].tgt, {}};
  r.arrows.assign(arrows.begin() + from, arrows.begin() + to);
  return r;
}

bool Path::operator<(const Path& o) const {
  if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
  if (arrows != o.arrows) return arrows < o.arrows;
  return std::tie(src, tgt) < std::tie(o.src, o.tgt);
}

std::string Path::str(const Quiver& q) const {
  if (arrows.empty()) return "e_" + q.vertices[src];
  std::string s;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrows[arrows[i]].name;
  }
  return s;
}

void Element::add(const Path& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar Element::coeff(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

Element Element::operator-(const Element& o) const { return *this + o * Scalar(-1); }

Element Element::operator*(const Scalar& c) const {
  Element r;
  if (c.is_zero()) return r;
  for (const auto& [p, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), p, x * c);
  return r;
}

bool Element::operator<(const Element& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return a->second.to_mpq() < b->second.to_mpq();
  }
  return a == terms_.end() && b != o.terms_.end();
}

Element Element::mul(const Element& o) const {
  Element r;
  for (const auto& [p, x] : terms_)
    for (const auto& [q, y] : o.terms_)
      if (p.tgt == q.src) r.add(p.then(q), x * y);
  return r;
}

int Element::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.length(); }
int Element::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.length(); }

int Element::source() const {
  int s = -1;
  for (const auto& [p, c] : terms_) {
    if (s >= 0 && p.src != s) return -1;
    s = p.src;
  }
  return s;
}

int Element::target() const {
  int t = -1;
  for (const auto& [p, c] : terms_) {
    if (t >= 0 && p.tgt != t) return -1;
    t = p.tgt;
  }
  return t;
}

std::vector<Element> Element::homogeneous_pieces() const {
  std::map<std::tuple<int, int, int>, Element> parts;
  for (const auto& [p, c] : terms_) parts[{p.length(), p.src, p.tgt}].add(p, c);
  std::vector<Element> out;
  for (auto& [k, e] : parts) out.push_back(std::move(e));
  return out;
}

Element Element::normalized() const {
  if (terms_.empty()) return *this;
  return *this * terms_.begin()->second.inverse();
}

std::string Element::str(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Scalar a = c;
    bool neg = a.modulus() == 0 && a.sign() < 0;
    if (neg) a = -a;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (!a.is_one()) s += a.str() + " ";
    s += p.str(q);
  }
  return s;
}

std::vector<Path> paths_of_length(const Quiver& q, int n) {
  std::vector<Path> cur;
  for (int v = 0; v < q.num_vertices(); ++v) cur.push_back(Path::trivial(v));
  for (int k = 0; k < n; ++k) {
    std::vector<Path> next;
    for (const auto& p : cur)
      for (int a = 0; a < q.num_arrows(); ++a)
        if (q.arrows[a].src == p.tgt) next.push_back(p.then_arrow(q, a));
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

}  // namespace preproj
