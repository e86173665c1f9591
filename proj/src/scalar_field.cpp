#include "c2iga/scalar_field.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace c2iga {

struct ScalarField::Node {
  enum Kind { Num, X1, X2, Neg, Add, Sub, Mul, Div, Sin, Cos, Exp, Pow } kind;
  double value = 0.0;
  std::vector<std::shared_ptr<const Node>> args;

  double eval(double x1, double x2) const {
    auto a = [&](int i) { return args[i]->eval(x1, x2); };
    switch (kind) {
      case Num: return value;
      case X1: return x1;
      case X2: return x2;
      case Neg: return -a(0);
      case Add: return a(0) + a(1);
      case Sub: return a(0) - a(1);
      case Mul: return a(0) * a(1);
      case Div: return a(0) / a(1);
      case Sin: return std::sin(a(0));
      case Cos: return std::cos(a(0));
      case Exp: return std::exp(a(0));
      case Pow: return std::pow(a(0), a(1));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const ScalarField::Node>;
using Node = ScalarField::Node;

NodePtr make(Node::Kind k, std::vector<NodePtr> args = {}, double value = 0.0) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->value = value;
  n->args = std::move(args);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression error at position " +
                                std::to_string(pos_) + ": " + what + " in '" +
                                s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    NodePtr left = term();
    for (;;) {
      if (eat('+')) left = make(Node::Add, {left, term()});
      else if (eat('-')) left = make(Node::Sub, {left, term()});
      else return left;
    }
  }
  NodePtr term() {
    NodePtr left = unary();
    for (;;) {
      if (eat('*')) left = make(Node::Mul, {left, unary()});
      else if (eat('/')) left = make(Node::Div, {left, unary()});
      else return left;
    }
  }
  NodePtr unary() {
    if (eat('-')) return make(Node::Neg, {unary()});
    if (eat('+')) return unary();
    return primary();
  }
  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      NodePtr n = expr();
      expect(')');
      return n;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = s_.c_str() + pos_;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) fail("bad number");
      pos_ += static_cast<std::size_t>(end - begin);
      return make(Node::Num, {}, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      const std::string id = s_.substr(start, pos_ - start);
      if (id == "x1") return make(Node::X1);
      if (id == "x2") return make(Node::X2);
      Node::Kind k;
      int arity = 1;
      if (id == "sin") k = Node::Sin;
      else if (id == "cos") k = Node::Cos;
      else if (id == "exp") k = Node::Exp;
      else if (id == "pow") k = Node::Pow, arity = 2;
      else fail("unknown identifier '" + id + "'");
      expect('(');
      std::vector<NodePtr> args{expr()};
      if (arity == 2) {
        expect(',');
        args.push_back(expr());
      }
      expect(')');
      return make(k, std::move(args));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarField ScalarField::parse(const std::string& expr) {
  ScalarField f;
  f.root_ = Parser(expr).parse();
  f.text_ = expr;
  return f;
}

ScalarField ScalarField::lookup(const std::string& name_or_expr) {
  const auto& reg = named_fields();
  const auto it = reg.find(name_or_expr);
  return parse(it != reg.end() ? it->second : name_or_expr);
}

double ScalarField::operator()(double x1, double x2) const {
  return root_->eval(x1, x2);
}

const std::map<std::string, std::string>& named_fields() {
  static const std::map<std::string, std::string> reg{
      {"wave", "2*cos(2*x1)*sin(2*x2)"},
      {"one", "1"},
      {"zero", "0"},
      {"linear", "1 + 2*x1 - 3*x2"},
  };
  return reg;
}

}  // namespace c2iga
