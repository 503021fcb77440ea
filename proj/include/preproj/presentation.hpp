#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "preproj/quiver.hpp"

namespace preproj {

struct Presentation {
  Quiver quiver;
  Field field;
  std::vector<Element> relations;  // homogeneous, bihomogeneous
  std::optional<int> truncation;

  bool is_quadratic() const;
  int max_relation_degree() const;
  // reverses arrows and paths
  Presentation opposite() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_, col_;
};

Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);
// canonical text form; parse_presentation(print_presentation(p)) == p
std::string print_presentation(const Presentation& p);
// parses a linear combination of paths against a quiver (no splitting)
Element parse_element(const Quiver& q, const Field& f, const std::string& text);

bool operator==(const Presentation& a, const Presentation& b);

}  // namespace preproj
