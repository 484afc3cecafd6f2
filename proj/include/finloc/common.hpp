#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace finloc {

// Default candidate budget for exhaustive enumerators.
inline constexpr long long kDefaultCap = 10'000'000;

// A single failed law with the elements that witness the failure.
struct Violation {
  std::string law;
  std::vector<int> witness;
  std::string detail;

  Violation() = default;
  Violation(std::string l, std::vector<int> w, std::string d = {})
      : law(std::move(l)), witness(std::move(w)), detail(std::move(d)) {}
};

// Outcome of a validation pass: empty means every law held.
struct Report {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string law, std::vector<int> witness, std::string detail = {}) {
    violations.push_back({std::move(law), std::move(witness), std::move(detail)});
  }
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(const Violation& v)
      : std::runtime_error(format(v)), violation_(v) {}
  const Violation& violation() const { return violation_; }
  const std::string& law() const { return violation_.law; }
  const std::vector<int>& witness() const { return violation_.witness; }

 private:
  static std::string format(const Violation& v) {
    std::string s = v.law + "(";
    for (size_t i = 0; i < v.witness.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v.witness[i]);
    }
    s += ")";
    if (!v.detail.empty()) s += ": " + v.detail;
    return s;
  }
  Violation violation_;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(long long needed, long long cap)
      : std::runtime_error("CapExceeded: " + std::to_string(needed) +
                           " candidates exceed cap " + std::to_string(cap)),
        needed_(needed), cap_(cap) {}
  long long needed() const { return needed_; }
  long long cap() const { return cap_; }

 private:
  long long needed_, cap_;
};

}  // namespace finloc
