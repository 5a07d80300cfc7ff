#ifndef DUALKIT_REPORT_HPP
#define DUALKIT_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace dualkit {

// Raised when input data violates a documented precondition (bad sizes,
// unknown identifiers, tables that are not what they claim to be).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an internal consistency assertion fails on valid input.
// These guard statements that are expected to hold on every instance the
// operation accepts; a throw here means a genuine discrepancy worth review.
struct TheoremViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct CheckResult {
  std::string check;
  bool pass = true;
  std::string witness;  // empty when pass
};

// A flat list of named check outcomes for one subject.
struct Report {
  std::string subject;
  std::vector<CheckResult> items;

  void add(std::string check, bool pass, std::string witness = "") {
    items.push_back({std::move(check), pass, std::move(witness)});
  }
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& it : other.items)
      items.push_back({prefix.empty() ? it.check : prefix + "." + it.check,
                       it.pass, it.witness});
  }
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  const CheckResult* find(const std::string& check) const {
    for (const auto& it : items)
      if (it.check == check) return &it;
    return nullptr;
  }
  std::string first_failure() const {
    for (const auto& it : items)
      if (!it.pass) return it.check + (it.witness.empty() ? "" : " " + it.witness);
    return "";
  }
};

}  // namespace dualkit

#endif
