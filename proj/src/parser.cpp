#include "invdiff/parser.hpp"

#include <cctype>
#include <limits>

namespace invdiff {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const Notation& names, const SymbolTable& symbols)
      : text_(text), names_(names), symbols_(symbols) {}

  OreOperator run() {
    skip();
    if (pos_ == text_.size()) throw SyntaxError("empty expression", pos_);
    OreOperator out = expr();
    skip();
    if (pos_ != text_.size()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return out;
  }

 private:
  SecondMode mode() const { return names_.mode; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }

  Int integer() {
    skip();
    const std::size_t start = pos_;
    Int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const Int d = text_[pos_] - '0';
      if (v > (std::numeric_limits<Int>::max() - d) / 10) throw SyntaxError("integer overflow", start);
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError("expected integer", pos_);
    return v;
  }

  Int signed_integer() {
    const bool neg = accept('-');
    const Int v = integer();
    return neg ? -v : v;
  }

  OreOperator expr() {
    OreOperator out = accept('-') ? -term() : term();
    for (;;) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  OreOperator term() {
    OreOperator out = factor();
    while (accept('*')) out = out * factor();
    return out;
  }

  OreOperator factor() {
    if (accept('-')) return -factor();
    OreOperator base = atom();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const Int e = signed_integer();
    if (e >= 0) {
      OreOperator out = OreOperator::scalar(mode(), 1);
      for (Int k = 0; k < e; ++k) out = out * base;
      return out;
    }
    // x^-k for a single derivative-free monomial c*x^a*chi^b.
    if (base.terms().size() != 1 || base.terms().begin()->first.order() != 0) {
      throw SyntaxError("negative power of a non-monomial", at);
    }
    const auto& [key, c] = *base.terms().begin();
    return OreOperator::monomial(mode(), key.coef * e, pow(c.inverse(), static_cast<unsigned>(-e)));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  OreOperator atom() {
    skip();
    if (pos_ == text_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      OreOperator inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational v(static_cast<long>(integer()));
      skip();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t at = pos_;
        const Int d = integer();
        if (d == 0) throw SyntaxError("division by zero", at);
        v /= Rational(static_cast<long>(d));
      }
      return OreOperator::scalar(mode(), GaussRational(v));
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) throw SyntaxError(std::string("unexpected '") + c + "'", pos_);

    const std::size_t start = pos_;
    const std::string id = identifier();
    if (id == "i") return OreOperator::scalar(mode(), GaussRational::i());
    if (id == names_.first) return OreOperator::monomial(mode(), {1, 0});
    if (id == "D1" || id == names_.d1) return OreOperator::d1(mode());
    if (id == "D2" || id == names_.d2) return OreOperator::d2(mode());
    if (id == names_.second) {
      if (mode() == SecondMode::Angular) {
        expect('(');
        const Int k = signed_integer();
        expect(')');
        return OreOperator::monomial(mode(), {0, k});
      }
      return OreOperator::monomial(mode(), {0, 1});
    }
    if (const auto it = symbols_.find(id); it != symbols_.end()) {
      if (it->second.mode() != mode()) throw SyntaxError("symbol '" + id + "' uses another convention", start);
      return it->second;
    }
    throw UnknownSymbol(id, start);
  }

  std::string_view text_;
  const Notation& names_;
  const SymbolTable& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

OreOperator parse_operator(std::string_view text, const Notation& names, const SymbolTable& symbols) {
  return Parser(text, names, symbols).run();
}

}  // namespace invdiff
