#include "mfcalc/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "mfcalc/error.hpp"

namespace mfcalc {

std::vector<Integer> elementary_divisor_chain(std::vector<Integer> orders) {
  for (auto& d : orders) d = abs(d);
  // Pairwise (gcd, lcm) sweeps preserve the group and leave entry i dividing
  // every later entry once row i is done.
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      Integer g = gcd(orders[i], orders[j]);
      if (g == orders[i]) continue;
      Integer l = lcm(orders[i], orders[j]);
      orders[i] = std::move(g);
      orders[j] = std::move(l);
    }
  }
  std::erase_if(orders, [](const Integer& d) { return d == 1; });
  return orders;
}

FgAbGroup::FgAbGroup(std::uint64_t free_rank, std::vector<Integer> cyclic_orders)
    : free_rank_(free_rank) {
  std::vector<Integer> finite;
  finite.reserve(cyclic_orders.size());
  for (auto& c : cyclic_orders) {
    if (c == 0) {
      ++free_rank_;
    } else {
      finite.push_back(std::move(c));
    }
  }
  torsion_ = elementary_divisor_chain(std::move(finite));
}

FgAbGroup FgAbGroup::from_elementary_divisors(std::uint64_t free_rank,
                                              std::vector<Integer> divisors) {
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i] < 2) {
      throw std::invalid_argument("elementary divisor below 2: " +
                                  divisors[i].get_str());
    }
    if (i > 0 && !mpz_divisible_p(divisors[i].get_mpz_t(),
                                  divisors[i - 1].get_mpz_t())) {
      throw std::invalid_argument("torsion is not a divisibility chain");
    }
  }
  FgAbGroup g;
  g.free_rank_ = free_rank;
  g.torsion_ = std::move(divisors);
  return g;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank_ == 1) {
    out = "Z";
  } else if (free_rank_ > 1) {
    out = "Z^" + std::to_string(free_rank_);
  }
  for (const auto& d : torsion_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  if (b.torsion().empty()) {
    return FgAbGroup::from_elementary_divisors(a.free_rank() + b.free_rank(),
                                               a.torsion());
  }
  if (a.torsion().empty()) {
    return FgAbGroup::from_elementary_divisors(a.free_rank() + b.free_rank(),
                                               b.torsion());
  }
  std::vector<Integer> orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return FgAbGroup(a.free_rank() + b.free_rank(), std::move(orders));
}

FgAbGroup repeat(const FgAbGroup& g, std::uint64_t copies) {
  // Repeating every entry of a divisibility chain keeps it a chain.
  std::vector<Integer> divisors;
  divisors.reserve(g.torsion().size() * copies);
  for (const auto& d : g.torsion()) {
    for (std::uint64_t c = 0; c < copies; ++c) divisors.push_back(d);
  }
  return FgAbGroup::from_elementary_divisors(g.free_rank() * copies,
                                             std::move(divisors));
}

namespace {

class GroupParser {
 public:
  explicit GroupParser(std::string_view text) : text_(text) {}

  FgAbGroup parse() {
    std::uint64_t rank = 0;
    std::vector<Integer> orders;
    skip_space();
    if (pos_ == text_.size()) throw ParseError("expected group, got end of input", pos_);
    for (;;) {
      term(rank, orders);
      skip_space();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+') throw ParseError("expected '+' or end of input", pos_);
      ++pos_;
      skip_space();
    }
    return FgAbGroup(rank, std::move(orders));
  }

 private:
  void term(std::uint64_t& rank, std::vector<Integer>& orders) {
    if (pos_ < text_.size() && text_[pos_] == '0') {
      ++pos_;
      return;
    }
    if (pos_ >= text_.size() || text_[pos_] != 'Z') {
      throw ParseError("expected 'Z', 'Z^r', 'Z/d' or '0'", pos_);
    }
    ++pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      rank += to_uint64(number());
    } else if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_space();
      std::size_t at = pos_;
      Integer d = number();
      if (d < 1) throw ParseError("cyclic order must be positive", at);
      orders.push_back(std::move(d));
    } else {
      rank += 1;
    }
  }

  Integer number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Trial division; gives up on numbers with two huge prime factors.
std::vector<std::pair<Integer, unsigned>> factor(Integer n) {
  std::vector<std::pair<Integer, unsigned>> out;
  Integer p = 2;
  unsigned long steps = 0;
  while (p * p <= n) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) break;
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
    p += (p == 2) ? 1 : 2;
    if (++steps > 10'000'000UL) {
      throw DomainError("torsion coefficient too large to factor");
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

FgAbGroup parse_group(std::string_view text) { return GroupParser(text).parse(); }

std::vector<Integer> primary_decomposition(const FgAbGroup& g) {
  std::vector<Integer> powers;
  for (const auto& d : g.torsion()) {
    for (auto& [p, e] : factor(d)) {
      Integer q;
      mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), e);
      powers.push_back(std::move(q));
    }
  }
  std::sort(powers.begin(), powers.end());
  return powers;
}

}  // namespace mfcalc
