#include "sextic/expr.hpp"

#include <cctype>

namespace sextic {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const Int& m, const ExprEnv& env) : s_(s), m_(m), env_(env) {}

  SexticNum parse() {
    SexticNum v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SexticNum constant(const Rat& q) const { return PureNum::constant(6, m_, q); }

  SexticNum expr() {
    SexticNum v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  SexticNum term() {
    SexticNum v = unary();
    for (;;) {
      if (accept('*')) v *= unary();
      else if (accept('/')) {
        SexticNum d = unary();
        if (!d.is_rational()) fail("division by an irrational value");
        if (d[0] == 0) fail("division by zero");
        v /= d[0];
      } else return v;
    }
  }

  SexticNum unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  SexticNum power() {
    SexticNum base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  SexticNum atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      SexticNum v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(Rat(Int(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "th") return theta(m_);
      if (name == "m") return constant(Rat(m_));
      auto it = env_.find(name);
      if (it == env_.end()) fail("unknown symbol '" + name + "'");
      if (!it->second) throw Error(ErrorCode::AuxUndefined, "constant " + name + " is not integral for m = " + m_.get_str());
      return constant(*it->second);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  const Int& m_;
  const ExprEnv& env_;
  std::size_t pos_ = 0;
};

}  // namespace

SexticNum eval_expr(const std::string& text, const Int& m, const ExprEnv& env) { return Parser(text, m, env).parse(); }

CubicNum eval_cubic_expr(const std::string& text, const Int& m, const ExprEnv& env) {
  SexticNum v = eval_expr(text, m, env);
  for (int t = 1; t < 6; t += 2)
    if (v[t] != 0) throw Error(ErrorCode::Parse, "odd power of th in '" + text + "'");
  return CubicNum(m, v[0], v[2], v[4]);
}

}  // namespace sextic
