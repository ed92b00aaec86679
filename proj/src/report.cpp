#include "trusslab/report.hpp"

#include <sstream>

namespace trusslab {

Check& VerificationReport::add(std::string name, CheckOutcome outcome) {
  checks_.push_back(
      Check{std::move(name), outcome.pass, std::move(outcome.witness), std::move(outcome.note)});
  return checks_.back();
}

void VerificationReport::append(VerificationReport const& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::passed() const {
  for (auto const& c : checks_)
    if (!c.pass) return false;
  return true;
}

Check const* VerificationReport::find(std::string_view name) const {
  for (auto const& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << subject_ << ": " << (passed() ? "pass" : "FAIL") << "\n";
  for (auto const& c : checks_) {
    os << "  [" << (c.pass ? " ok " : "FAIL") << "] " << c.name;
    if (!c.witness.empty()) {
      os << "  witness (";
      for (size_t i = 0; i < c.witness.size(); ++i) {
        if (i) os << ",";
        os << c.witness[i];
      }
      os << ")";
    }
    if (!c.note.empty()) os << "  -- " << c.note;
    os << "\n";
  }
  return os.str();
}

std::string set_to_string(std::span<Element const> xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  out += "}";
  return out;
}

}  // namespace trusslab
