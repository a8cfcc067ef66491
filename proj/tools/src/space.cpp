#include "space.hpp"

#include <cctype>

#include "declab/error.hpp"
#include "declab/hom.hpp"

namespace declab::cli {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  SSet space() {
    const auto start = skip();
    const auto name = identifier();
    expect('(');
    SSet out;
    if (name == "simplex" || name == "boundary") {
      const int n = number();
      out = name == "simplex" ? simplex(n) : boundary(n);
    } else if (name == "horn") {
      const int n = number();
      expect(',');
      const int k = number();
      if (n < 1 || k < 0 || k > n) throw ParseError("horn(n, k) needs 0 <= k <= n and n >= 1", start);
      out = horn(n, k);
    } else if (name == "product" || name == "quotient" || name == "disjoint") {
      const SSet a = space();
      expect(',');
      const auto at = skip();
      const SSet b = space();
      if (name == "product") {
        out = product(a, b).sset();
      } else if (name == "disjoint") {
        out = disjoint_union(a, b);
      } else {
        try {
          out = quotient(a, b);
        } catch (const ValidationError& e) {
          throw ValidationError(std::string(e.what()) + " (subcomplex at position " + std::to_string(at) + ")");
        }
      }
    } else {
      throw ParseError("unknown space '" + name + "'", start);
    }
    expect(')');
    return out;
  }

  BiSSet bispace() {
    const auto start = skip();
    const auto name = identifier();
    expect('(');
    BiSSet out;
    if (name == "external") {
      const SSet a = space();
      expect(',');
      const SSet b = space();
      out = external_product(a, b);
    } else if (name == "dec_simplex") {
      out = DecSimplex(number()).bisset();
    } else {
      throw ParseError("unknown bispace '" + name + "'", start);
    }
    expect(')');
    return out;
  }

  void finish() {
    if (skip() != text_.size()) throw ParseError("unexpected trailing input", pos_);
  }

 private:
  std::size_t skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_;
  }

  std::string identifier() {
    const auto start = skip();
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (pos_ == start) throw ParseError("expected a name", start);
    return text_.substr(start, pos_ - start);
  }

  int number() {
    const auto start = skip();
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 64) throw ParseError("dimension too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a non-negative integer", start);
    return static_cast<int>(value);
  }

  void expect(char c) {
    const auto at = skip();
    if (at == text_.size() || text_[at] != c) throw ParseError(std::string("expected '") + c + "'", at);
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

SSet parse_space(const std::string& expr) {
  Parser p(expr);
  SSet out = p.space();
  p.finish();
  return out;
}

BiSSet parse_bispace(const std::string& expr) {
  Parser p(expr);
  BiSSet out = p.bispace();
  p.finish();
  return out;
}

}  // namespace declab::cli
