#include "frio/povm.hpp"

#include <cstdio>

namespace frio {

namespace {

std::string describe(const char* fmt, double magnitude) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, magnitude);
  return buf;
}

std::string describe_indexed(const char* fmt, std::size_t index, double magnitude) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, index, magnitude);
  return buf;
}

}  // namespace

std::vector<std::string> validate_povm(const Povm& povm) {
  std::vector<std::string> violations;

  if (povm.elements.size() != povm.roles.size()) {
    violations.push_back("element/role count mismatch");
    return violations;
  }
  if (povm.elements.empty()) {
    violations.push_back("POVM has no elements");
    return violations;
  }

  Mat2 sum = Mat2::zero();
  for (std::size_t k = 0; k < povm.elements.size(); ++k) {
    const Mat2& e = povm.elements[k];
    const double herm = hermiticity_defect(e);
    if (herm > 1e-10) {
      violations.push_back(describe_indexed("element %zu is not Hermitian (defect %.3e)", k, herm));
      continue;
    }
    const double lo = min_eigenvalue(e);
    if (lo < -1e-10) {
      violations.push_back(describe_indexed(
          "element %zu is not positive semidefinite (min eigenvalue %.3e)", k, lo));
    }
    sum = sum + e;
  }

  const double completeness = max_abs_entry(sum - Mat2::identity());
  if (completeness > 1e-10) {
    violations.push_back(
        describe("elements do not sum to identity (max entry deviation %.3e)", completeness));
  }

  std::size_t inconclusive_count = 0;
  for (const OutcomeRole& r : povm.roles) {
    if (r.kind == OutcomeRole::Kind::inconclusive) ++inconclusive_count;
  }
  if (inconclusive_count != 1) {
    violations.push_back(describe("expected exactly one inconclusive element, found %.0f",
                                  static_cast<double>(inconclusive_count)));
  }

  return violations;
}

}  // namespace frio
