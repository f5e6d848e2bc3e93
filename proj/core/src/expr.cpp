#include "hilbcenter/expr.hpp"

#include <algorithm>
#include <cctype>

#include "hilbcenter/errors.hpp"

namespace hilbcenter {

namespace {

// Recursive descent over:
//   pairing := sum ('|' sum)?
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '.') unary)*
//   unary   := '-' unary | primary
//   primary := INT ('/' INT)? | BASIS '[' parts? ']' | '(' pairing ')'
class Parser {
 public:
  Parser(const CenterAlgebra& algebra, const std::string& text)
      : algebra_(algebra), text_(text) {}

  ExprValue parse() {
    ExprValue v = parse_pairing();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected trailing input starting at '" +
           text_.substr(pos_, 8) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw InputError("expression error at offset " + std::to_string(pos_) +
                     ": " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  const CenterElement& as_element(const ExprValue& v,
                                  const char* context) const {
    if (!std::holds_alternative<CenterElement>(v))
      throw InputError(std::string("the scalar result of '|' cannot be ") +
                       context);
    return std::get<CenterElement>(v);
  }

  ExprValue parse_pairing() {
    ExprValue left = parse_sum();
    if (eat('|')) {
      ExprValue right = parse_sum();
      const CenterElement& a = as_element(left, "paired");
      const CenterElement& b = as_element(right, "paired");
      if (a.degree() != b.degree())
        fail("'|' needs equal degrees, got " + std::to_string(a.degree()) +
             " and " + std::to_string(b.degree()));
      if (peek() == '|') fail("'|' cannot be nested");
      return algebra_.scalar_product(a, b);
    }
    return left;
  }

  ExprValue parse_sum() {
    ExprValue acc = parse_product();
    while (true) {
      if (eat('+')) {
        ExprValue rhs = parse_product();
        acc = combine_sum(acc, rhs, false);
      } else if (peek() == '-') {
        // Only consume when it is a binary minus, i.e. there is a left side.
        ++pos_;
        ExprValue rhs = parse_product();
        acc = combine_sum(acc, rhs, true);
      } else {
        return acc;
      }
    }
  }

  ExprValue combine_sum(const ExprValue& a, const ExprValue& b,
                        bool negate) const {
    if (std::holds_alternative<Rat>(a) && std::holds_alternative<Rat>(b)) {
      Rat r = std::get<Rat>(b);
      return negate ? Rat(std::get<Rat>(a) - r) : Rat(std::get<Rat>(a) + r);
    }
    const CenterElement& x = as_element(a, "added");
    CenterElement y = as_element(b, "added");
    if (x.degree() != y.degree())
      throw InputError("adding elements of degrees " +
                       std::to_string(x.degree()) + " and " +
                       std::to_string(y.degree()));
    if (negate) y *= Rat(-1);
    return algebra_.add(x, y);
  }

  ExprValue parse_product() {
    ExprValue acc = parse_unary();
    while (true) {
      if (eat('*')) {
        acc = combine_product(acc, parse_unary(), false);
      } else if (eat('.')) {
        acc = combine_product(acc, parse_unary(), true);
      } else {
        return acc;
      }
    }
  }

  ExprValue combine_product(const ExprValue& a, const ExprValue& b,
                            bool convolution) const {
    // Scalars multiply anything; '*' between elements is the induction
    // product and '.' the convolution product.
    if (std::holds_alternative<Rat>(a) && std::holds_alternative<Rat>(b))
      return std::get<Rat>(a) * std::get<Rat>(b);
    if (std::holds_alternative<Rat>(a)) {
      CenterElement y = as_element(b, "multiplied");
      y *= std::get<Rat>(a);
      return y;
    }
    if (std::holds_alternative<Rat>(b)) {
      CenterElement x = as_element(a, "multiplied");
      x *= std::get<Rat>(b);
      return x;
    }
    const CenterElement& x = std::get<CenterElement>(a);
    const CenterElement& y = std::get<CenterElement>(b);
    if (convolution) {
      if (x.degree() != y.degree())
        throw InputError("'.' needs equal degrees, got " +
                         std::to_string(x.degree()) + " and " +
                         std::to_string(y.degree()));
      return algebra_.convolution_product(x, y);
    }
    return algebra_.induction_product(x, y);
  }

  ExprValue parse_unary() {
    if (eat('-')) {
      ExprValue v = parse_unary();
      if (std::holds_alternative<Rat>(v)) return -std::get<Rat>(v);
      CenterElement x = std::get<CenterElement>(v);
      x *= Rat(-1);
      return x;
    }
    return parse_primary();
  }

  ExprValue parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExprValue v = parse_pairing();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    if (c == 'c' || c == 's' || c == 'h' || c == 'm')
      return parse_basis_vector();
    fail(c == '\0' ? "unexpected end of expression"
                   : std::string("unexpected character '") + c + "'");
  }

  Rat parse_rational() {
    Int num = parse_integer();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_space();
      if (pos_ == text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a denominator after '/'");
      Int den = parse_integer();
      return make_rat(num, den);
    }
    return Rat(num);
  }

  Int parse_integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected digits");
    return Int(text_.substr(start, pos_ - start));
  }

  ExprValue parse_basis_vector() {
    Basis basis = basis_from_letter(text_[pos_]);
    ++pos_;
    if (!eat('[')) fail("expected '[' after basis letter");
    std::vector<int> parts;
    if (peek() != ']') {
      while (true) {
        Int part = parse_integer();
        if (part < 1 || part > 1000000) fail("part out of range");
        parts.push_back(static_cast<int>(part.get_si()));
        if (eat(',')) continue;
        break;
      }
    }
    if (!eat(']')) fail("expected ']' closing the partition");
    std::vector<int> sorted = parts;
    if (!std::is_sorted(sorted.rbegin(), sorted.rend()))
      fail("partition parts must be listed weakly decreasing");
    return CenterElement::basis_vector(basis, Partition(parts));
  }

  const CenterAlgebra& algebra_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprValue evaluate_center_expression(const CenterAlgebra& algebra,
                                     const std::string& text) {
  return Parser(algebra, text).parse();
}

}  // namespace hilbcenter
