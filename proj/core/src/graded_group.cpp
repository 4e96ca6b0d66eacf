#include "mfcalc/graded_group.hpp"

#include "mfcalc/error.hpp"

namespace mfcalc {

GradedGroup::GradedGroup(std::map<int, FgAbGroup> groups) {
  for (auto& [degree, group] : groups) set(degree, std::move(group));
}

GradedGroup GradedGroup::sphere(int n) {
  GradedGroup g;
  if (n == 0) {
    g.set(0, FgAbGroup::free(2));
  } else {
    g.set(0, FgAbGroup::free(1));
    g.set(n, FgAbGroup::free(1));
  }
  return g;
}

FgAbGroup GradedGroup::at(int degree) const {
  auto it = groups_.find(degree);
  return it == groups_.end() ? FgAbGroup() : it->second;
}

void GradedGroup::set(int degree, FgAbGroup group) {
  if (group.is_trivial()) {
    groups_.erase(degree);
  } else {
    groups_[degree] = std::move(group);
  }
}

int GradedGroup::top_degree() const {
  return groups_.empty() ? -1 : groups_.rbegin()->first;
}

std::string GradedGroup::to_string(const std::string& prefix) const {
  std::string out;
  for (const auto& [degree, group] : groups_) {
    out += prefix + "_" + std::to_string(degree) + " = " + group.to_string() + "\n";
  }
  return out;
}

GradedGroup graded_sum(const GradedGroup& a, const GradedGroup& b) {
  GradedGroup out = a;
  for (const auto& [degree, group] : b.groups()) {
    out.set(degree, direct_sum(out.at(degree), group));
  }
  return out;
}

GradedGroup shift(const GradedGroup& g, int d) {
  GradedGroup out;
  for (const auto& [degree, group] : g.groups()) {
    if (degree + d < 0) throw DomainError("negative degree");
    out.set(degree + d, group);
  }
  return out;
}

GradedGroup reduced(const GradedGroup& g) {
  FgAbGroup h0 = g.at(0);
  if (h0.free_rank() == 0) {
    throw DomainError("reduced homology needs a free summand in degree 0");
  }
  GradedGroup out = g;
  out.set(0, FgAbGroup::from_elementary_divisors(h0.free_rank() - 1, h0.torsion()));
  return out;
}

IntPolynomial poincare_polynomial(const GradedGroup& g) {
  if (g.groups().empty()) return {};
  int top = g.top_degree();
  std::vector<Integer> coeffs(static_cast<std::size_t>(top) + 1);
  for (const auto& [degree, group] : g.groups()) {
    if (degree < 0) continue;
    coeffs[static_cast<std::size_t>(degree)] =
        Integer(std::to_string(group.free_rank()));
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace mfcalc
