#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "preproj/presentation.hpp"

namespace preproj {

// Ordered key/value report, optionally carrying a presentation. Text form prints
// "key: value" lines (as '#' comments when a presentation follows, so the output
// parses as a presentation file); kv form prints "key = value" lines.
class Report {
 public:
  enum Status { Ok = 0, Inconclusive = 3 };

  void set(const std::string& key, const std::string& value);
  void set_presentation(const Presentation& p) { pres_ = p; }
  const std::optional<Presentation>& presentation() const { return pres_; }
  // first value stored under key, or empty
  std::string get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string text() const;
  std::string kv() const;
  Status status = Ok;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::optional<Presentation> pres_;
};

Report compute_report(const Presentation& p);
Report dual_report(const Presentation& p);
Report jacobi_report(const Presentation& p, int order);
Report verify_jacobi_report(const Presentation& p, int bound);
Report classify_report(const Presentation& p, int bound, int dim_cap = 20000);
Report certify_report(const Presentation& p, int bound, int window = 3);
Report typea_report(int d, int s, bool expected_pi);
// minimal graded resolutions of simples; left = over the opposite algebra,
// over_pi = over the preprojective algebra (truncated at bound when infinite)
Report resolve_report(const Presentation& p, int steps, const std::optional<std::string>& vertex, bool left, bool over_pi,
                      int bound);

// replaces the field, reducing coefficients; throws std::invalid_argument on a bad reduction
Presentation with_field(const Presentation& p, const Field& f);

}  // namespace preproj
