#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "affint/hat.hpp"

namespace affint {

// Polynomial expressions in the notation of the generating series:
//   h(r)        the variable h_r
//   hhat(k)     hhat_k            hbar(k)   hbar_k (k = degree; zero for odd k)
//   hcheck(k)   hcheck_k          htilde(k) htilde_k
//   hhatc(k)    hhat^{c}_k with c_r = 2^{r-1}
// combined with rational scalars, + - * / ^ and parentheses. Division and exponents take
// scalars and non-negative integers respectively.
class ExprError : public std::invalid_argument {
 public:
  ExprError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class ExprParser {
 public:
  explicit ExprParser(std::string src, Convention cv = Convention::Plain) : s_(std::move(src)), cv_(cv) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (i_ != s_.size()) throw ExprError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return p;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ExprError(std::string("expected '") + c + "'", i_);
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = factor();
    for (;;) {
      if (eat('*')) {
        p = p * factor();
      } else if (eat('/')) {
        std::size_t at = i_;
        Poly d = factor();
        if (!d.is_homogeneous(0) || d.is_zero()) throw ExprError("division by a non-scalar or zero", at);
        p *= 1 / d.coeff(Partition{});
      } else {
        return p;
      }
    }
  }

  // Unary signs bind looser than '^': -x^2 = -(x^2).
  Poly factor() {
    if (eat('-')) return factor() * Q(-1);
    if (eat('+')) return factor();
    return power();
  }

  Poly power() {
    Poly p = primary();
    if (eat('^')) {
      std::size_t at = i_;
      long e = integer();
      if (e < 0) throw ExprError("negative exponent", at);
      p = pow(p, static_cast<int>(e));
    }
    return p;
  }

  long integer() {
    skip();
    std::size_t st = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == st || (i_ == st + 1 && s_[st] == '-')) throw ExprError("expected integer", st);
    return std::stol(s_.substr(st, i_ - st));
  }

  Poly primary() {
    skip();
    if (i_ >= s_.size()) throw ExprError("unexpected end of input", i_);
    if (eat('(')) {
      Poly p = expr();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[i_]))) return Poly(Q(integer()));
    std::size_t st = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string name = s_.substr(st, i_ - st);
    if (name.empty()) throw ExprError("unexpected '" + std::string(1, s_[st]) + "'", st);
    expect('(');
    std::size_t at = i_;
    long k = integer();
    expect(')');
    if (name == "h") {
      if (k < 1) throw ExprError("h(r) needs r >= 1", at);
      return Poly::h(static_cast<int>(k));
    }
    if (k < 0) throw ExprError("negative index", at);
    int n = static_cast<int>(k);
    if (name == "hhat") return named_series(SeriesName::HAT, n, cv_)[n];
    if (name == "hbar") return named_series(SeriesName::BAR, n, cv_)[n];
    if (name == "hcheck") return named_series(SeriesName::CHECK, n, cv_)[n];
    if (name == "htilde") return named_series(SeriesName::TILDE, n, cv_)[n];
    if (name == "hhatc") return expand_hat_series(SequenceSpec::cpow2(), n, cv_)[n];
    throw ExprError("unknown symbol '" + name + "'", st);
  }

  std::string s_;
  Convention cv_;
  std::size_t i_ = 0;
};

inline Poly parse_expr(const std::string& s, Convention cv = Convention::Plain) {
  return ExprParser(s, cv).parse();
}

}  // namespace affint
