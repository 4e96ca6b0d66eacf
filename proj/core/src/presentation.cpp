#include "mfcalc/presentation.hpp"

#include <stdexcept>

#include "mfcalc/int_matrix.hpp"
#include "mfcalc/smith.hpp"

namespace mfcalc {

Word free_reduce(Word word) {
  Word out;
  out.reserve(word.size());
  for (const Letter& l : word) {
    if (!out.empty() && out.back().generator == l.generator &&
        out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

GroupPresentation::GroupPresentation(std::vector<std::string> generators,
                                     std::vector<Word> relators)
    : generators_(std::move(generators)) {
  for (auto& w : relators) {
    for (const Letter& l : w) {
      if (l.generator >= generators_.size()) {
        throw std::invalid_argument("relator uses undeclared generator");
      }
      if (l.exponent != 1 && l.exponent != -1) {
        throw std::invalid_argument("relator exponents must be +1 or -1");
      }
    }
    relators_.push_back(free_reduce(std::move(w)));
  }
}

std::string GroupPresentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += "*";
    out += generators_.at(l.generator);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

std::string GroupPresentation::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ",";
    out += generators_[i];
  }
  out += "|";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (i) out += ",";
    out += word_to_string(relators_[i]);
  }
  return out + ">";
}

FgAbGroup abelianization(const GroupPresentation& p) {
  const std::size_t n = p.generators().size();
  if (p.relators().empty()) return FgAbGroup::free(n);
  IntMatrix a(n, p.relators().size());
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    for (const Letter& l : p.relators()[r]) a(l.generator, r) += l.exponent;
  }
  return cokernel(a);
}

}  // namespace mfcalc
