#include "dsl.hpp"

#include <cctype>
#include <limits>

#include "mfcalc/error.hpp"
#include "mfcalc/suspension.hpp"

namespace mfcalc::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ManifoldExpr parse() {
    ManifoldExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("expected '#' or end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::uint64_t integer() {
    if (!at_digit()) fail("expected an integer");
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("integer too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  int small_integer() {
    const std::size_t start = pos_;
    const std::uint64_t v = integer();
    if (v > 100000) {
      pos_ = start;
      fail("parameter out of range");
    }
    return static_cast<int>(v);
  }

  ManifoldExpr expr() {
    ManifoldExpr left = term();
    for (;;) {
      skip_space();
      const std::size_t hash = pos_;
      if (!accept('#')) return left;
      ManifoldExpr right = term();
      if (right.dim() != left.dim()) {
        pos_ = hash;
        fail("dimension mismatch " + std::to_string(left.dim()) + " vs " + std::to_string(right.dim()));
      }
      left = connected_sum(left, right);
    }
  }

  ManifoldExpr term() {
    if (at_digit()) {
      const std::uint64_t copies = integer();
      expect('*');
      return connected_sum_power(primary(), copies);
    }
    return primary();
  }

  ManifoldExpr primary() {
    if (accept('(')) {
      ManifoldExpr e = expr();
      expect(')');
      return e;
    }
    skip_space();
    const std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
    if (name.empty()) fail("expected an atom or '('");
    try {
      return atom(name);
    } catch (const DomainError& e) {
      throw ParseError(std::string("bad parameters for ") + name + ": " + e.what(), start);
    }
  }

  std::vector<int> arguments(std::size_t count) {
    expect('(');
    std::vector<int> args;
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0) expect(',');
      args.push_back(small_integer());
    }
    expect(')');
    return args;
  }

  ManifoldExpr atom(const std::string& name) {
    if (name == "W") return ManifoldExpr(Atom::wu());
    if (name == "Sig0" || name == "Sig1") {
      expect('(');
      ManifoldExpr inner = expr();
      expect(')');
      return suspend(inner, name == "Sig0" ? FramingIndex::Zero : FramingIndex::One);
    }
    if (name == "SxS") {
      auto a = arguments(2);
      return ManifoldExpr(Atom::sphere_product(a[0], a[1]));
    }
    if (name == "S") return ManifoldExpr::sphere(arguments(1)[0]);
    if (name == "TwS") return ManifoldExpr(Atom::twisted_product(arguments(1)[0]));
    if (name == "CP") return ManifoldExpr(Atom::projective_space(Field::Complex, arguments(1)[0]));
    if (name == "HP") return ManifoldExpr(Atom::projective_space(Field::Quaternion, arguments(1)[0]));
    if (name == "M") return ManifoldExpr(Atom::m(arguments(1)[0]));
    if (name == "X") return ManifoldExpr(Atom::x(arguments(1)[0]));
    if (name == "Surf") return ManifoldExpr(Atom::surface(arguments(1)[0]));
    pos_ -= name.size();
    fail("unknown atom '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ManifoldExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace mfcalc::cli
