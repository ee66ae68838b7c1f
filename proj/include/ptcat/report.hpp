// Report record shared by the axiom suites and the paracategory checkers.
#pragma once

#include <string>
#include <vector>

namespace ptcat {

struct AxiomReport {
  std::string axiom;     // law being checked, e.g. "dinaturality"
  std::string instance;  // which instance, with dims / corpus tag
  std::string relation;  // the Kleene relation demanded, "≃" or "⊑"
  bool pass = false;
  std::string left;      // printable Kleene values of both sides
  std::string right;
  std::string signature; // definedness pattern, used for float stability gating
};

inline int count_violations(const std::vector<AxiomReport>& reports) {
  int n = 0;
  for (const auto& r : reports)
    if (!r.pass) ++n;
  return n;
}

}  // namespace ptcat
