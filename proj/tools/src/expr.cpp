#include "expr.hpp"

#include <cctype>
#include <vector>

#include "polyring/poset.hpp"
#include "polyring/polytope.hpp"

namespace polyring::cli {

using ring::Ambient;
using ring::FormalSum;

namespace {

class Parser {
 public:
  Parser(const std::string& s, Ambient a) : s_(s), amb_(a) {}

  FormalSum parse() {
    FormalSum r = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  const std::string& s_;
  Ambient amb_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, "syntax error: " + msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
    if (s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  Int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(s_.substr(start, pos_ - start));
  }
  int small_integer() {
    std::size_t at = pos_;
    Int v = integer();
    if (v > 1000) throw ParseError(at, "parameter out of range");
    return static_cast<int>(v);
  }
  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  FormalSum sum() {
    FormalSum r(amb_);
    bool neg = false;
    if (peek('+') || peek('-')) neg = s_[pos_++] == '-';
    for (;;) {
      FormalSum t = term();
      if (neg)
        r -= t;
      else
        r += t;
      if (peek('+') || peek('-'))
        neg = s_[pos_++] == '-';
      else
        return r;
    }
  }

  FormalSum term() {
    if (at_digit()) {
      Int c = integer();
      if (peek('*')) {
        ++pos_;
        return c * unary();
      }
      return c * ring::unit(amb_);
    }
    return unary();
  }

  FormalSum apply(char op, const FormalSum& x) { return op == 'C' ? ring::cone_op(x) : ring::bipyramid_op(x); }

  FormalSum unary() {
    skip();
    const std::size_t start = pos_;
    std::string id = identifier();
    if (id.empty()) {
      if (peek('(')) {
        ++pos_;
        FormalSum r = sum();
        expect(')');
        return r;
      }
      if (pos_ >= s_.size()) fail("expected an expression but input ended");
      fail("expected an expression");
    }
    if (id == "C" || id == "B") return apply(id[0], unary());
    // run-together prefixes such as "BCC" before an atom or "("
    std::size_t k = 0;
    while (k < id.size() && (id[k] == 'B' || id[k] == 'C')) ++k;
    if (k > 0 && !is_keyword(id)) {
      std::string rest = id.substr(k);
      if (rest.empty() || is_keyword(rest)) {
        pos_ = start + k;
        FormalSum r = unary();
        for (std::size_t i = k; i-- > 0;) r = apply(id[i], r);
        return r;
      }
    }
    return primary(id, start);
  }

  static bool is_keyword(const std::string& id) {
    static const std::vector<std::string> kw{"empty", "pt",   "simplex", "cube", "cross", "polygon", "cell24",
                                             "word",  "prod", "join",    "dual", "lattice"};
    for (auto& k : kw)
      if (k == id) return true;
    return false;
  }

  FormalSum single(const polytope::Polytope& p) { return FormalSum(amb_, p); }

  FormalSum primary(const std::string& id, std::size_t start) {
    if (id == "empty" || id == "pt" || id == "cell24") {
      if (peek('(')) throw ParseError(pos_, "arity mismatch: " + id + " takes no arguments");
      return single(polytope::build_named(id, {}));
    }
    if (id == "simplex" || id == "cube" || id == "cross" || id == "polygon") {
      expect('(');
      if (peek(')')) throw ParseError(pos_, "arity mismatch: " + id + " takes one integer");
      int n = small_integer();
      if (peek(',')) throw ParseError(pos_, "arity mismatch: " + id + " takes one integer");
      expect(')');
      try {
        return single(polytope::build_named(id, {n}));
      } catch (const DomainError& e) {
        throw ParseError(start, e.what());
      }
    }
    if (id == "word") {
      expect('(');
      skip();
      std::size_t ws = pos_;
      while (pos_ < s_.size() && (s_[pos_] == 'B' || s_[pos_] == 'C')) ++pos_;
      std::string w = s_.substr(ws, pos_ - ws);
      if (w.empty()) fail("expected a B/C word");
      expect(')');
      return single(polytope::from_word(w));
    }
    if (id == "prod" || id == "join") {
      expect('(');
      FormalSum a = sum();
      if (peek(')')) throw ParseError(pos_, "arity mismatch: " + id + " takes two arguments");
      expect(',');
      FormalSum b = sum();
      if (peek(',')) throw ParseError(pos_, "arity mismatch: " + id + " takes two arguments");
      expect(')');
      return id == "prod" ? ring::mul_product(a, b) : ring::mul_join(a, b);
    }
    if (id == "dual") {
      expect('(');
      FormalSum a = sum();
      if (peek(',')) throw ParseError(pos_, "arity mismatch: dual takes one argument");
      expect(')');
      return ring::dual_op(a);
    }
    if (id == "lattice") {
      skip();
      if (!peek('{')) fail("expected '{'");
      std::size_t js = pos_;
      int depth = 0;
      bool in_string = false;
      for (; pos_ < s_.size(); ++pos_) {
        char c = s_[pos_];
        if (in_string) {
          if (c == '\\') ++pos_;
          else if (c == '"') in_string = false;
          continue;
        }
        if (c == '"') in_string = true;
        else if (c == '{') ++depth;
        else if (c == '}' && --depth == 0) break;
      }
      if (pos_ >= s_.size()) fail("unterminated lattice literal");
      ++pos_;
      try {
        return single(polytope::make_polytope(poset::poset_from_json(s_.substr(js, pos_ - js)), true));
      } catch (const std::exception& e) {
        throw ParseError(js, std::string("bad lattice literal: ") + e.what());
      }
    }
    throw ParseError(start, "unknown atom '" + id + "'");
  }
};

}  // namespace

FormalSum parse_expression(const std::string& text, Ambient a) {
  try {
    return Parser(text, a).parse();
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace polyring::cli
