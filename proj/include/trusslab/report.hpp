#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "trusslab/algebra.hpp"

namespace trusslab {

struct Check {
  std::string name;
  bool pass = false;
  std::vector<Element> witness;  // first counterexample, lexicographic; empty if none
  std::string note;
  double elapsed_ms = 0.0;
};

struct CheckOutcome {
  bool pass = true;
  std::vector<Element> witness;
  std::string note;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  Check& add(std::string name, CheckOutcome outcome);

  template <class F>
  Check& run(std::string name, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    CheckOutcome out = f();
    auto& check = add(std::move(name), std::move(out));
    check.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return check;
  }

  void append(VerificationReport const& other);

  bool passed() const;
  Check const* find(std::string_view name) const;
  std::vector<Check> const& checks() const { return checks_; }
  std::string const& subject() const { return subject_; }
  std::string summary() const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
};

std::string set_to_string(std::span<Element const> xs);

}  // namespace trusslab
