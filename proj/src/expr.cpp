#include "coneham/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace coneham {

namespace {

using NodePtr = Expr::NodePtr;

template <class T>
NodePtr make(T value) {
  return std::make_shared<const Expr::Node>(Expr::Node{std::move(value)});
}

struct BuiltinInfo {
  std::string_view name;
  Builtin fn;
  std::size_t arity;
};

constexpr std::array<BuiltinInfo, 5> kBuiltins{{
    {"abs", Builtin::abs, 1},
    {"min", Builtin::min, 2},
    {"max", Builtin::max, 2},
    {"exp", Builtin::exp, 1},
    {"sqrt", Builtin::sqrt, 1},
}};

const BuiltinInfo& info(Builtin fn) {
  return *std::find_if(kBuiltins.begin(), kBuiltins.end(), [fn](const auto& b) { return b.fn == fn; });
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expression();
    skip_space();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') fail("unbalanced ')'", pos_);
      fail(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw Error(ErrorKind::syntax, message + " at offset " + std::to_string(at), at);
  }

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

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = make(Expr::Binary{'+', lhs, term(), at});
      } else if (accept('-')) {
        lhs = make(Expr::Binary{'-', lhs, term(), at});
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = make(Expr::Binary{'*', lhs, unary(), at});
      } else if (accept('/')) {
        lhs = make(Expr::Binary{'/', lhs, unary(), at});
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Expr::Negate{unary()});
    return primary();
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_++;
      NodePtr inner = expression();
      if (!accept(')')) fail("unbalanced '(' opened", open);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail(std::string("unexpected '") + c + "'", pos_);
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') ++pos_, digits();
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        pos_ = look;
        digits();
      }
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail("malformed number", start);
    return make(Expr::Number{value});
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      const auto it = std::find_if(kBuiltins.begin(), kBuiltins.end(), [&](const auto& b) { return b.name == name; });
      if (it == kBuiltins.end()) fail("unknown function '" + std::string(name) + "'", start);
      const std::size_t open = pos_++;
      std::vector<NodePtr> args;
      if (!accept(')')) {
        do {
          args.push_back(expression());
        } while (accept(','));
        if (!accept(')')) fail("unbalanced '(' opened", open);
      }
      if (args.size() != it->arity)
        fail(std::string(name) + " expects " + std::to_string(it->arity) + " argument(s), got " +
                 std::to_string(args.size()),
             start);
      return make(Expr::Call{it->fn, std::move(args), start});
    }
    if (name == "t" || name == "s" || name == "v") return make(Expr::Variable{name[0]});
    fail("unknown identifier '" + std::string(name) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

double eval_node(const Expr::Node& node, const Bindings& b) {
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Number>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          return n.name == 't' ? b.t : (n.name == 's' ? b.s : b.v);
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          return -eval_node(*n.operand, b);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          const double x = eval_node(*n.lhs, b), y = eval_node(*n.rhs, b);
          switch (n.op) {
            case '+': return x + y;
            case '-': return x - y;
            case '*': return x * y;
            default:
              if (y == 0.0)
                throw Error(ErrorKind::evaluation, "division by zero at offset " + std::to_string(n.offset),
                            n.offset);
              return x / y;
          }
        } else {
          const double x = eval_node(*n.args[0], b);
          switch (n.fn) {
            case Builtin::abs: return std::abs(x);
            case Builtin::exp: return std::exp(x);
            case Builtin::sqrt: return std::sqrt(x);
            case Builtin::min: return std::min(x, eval_node(*n.args[1], b));
            case Builtin::max: return std::max(x, eval_node(*n.args[1], b));
          }
          return 0.0;
        }
      },
      node.data);
}

void print_node(const Expr::Node& node, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Number>) {
          std::array<char, 32> buf;
          const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), n.value);
          out.append(buf.data(), res.ptr);
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          out += "(-";
          print_node(*n.operand, out);
          out += ')';
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          out += '(';
          print_node(*n.lhs, out);
          out += ' ';
          out += n.op;
          out += ' ';
          print_node(*n.rhs, out);
          out += ')';
        } else {
          out += info(n.fn).name;
          out += '(';
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i) out += ", ";
            print_node(*n.args[i], out);
          }
          out += ')';
        }
      },
      node.data);
}

void collect_variables(const Expr::Node& node, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Variable>) {
          if (out.find(n.name) == std::string::npos) out += n.name;
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          collect_variables(*n.operand, out);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          collect_variables(*n.lhs, out);
          collect_variables(*n.rhs, out);
        } else if constexpr (std::is_same_v<T, Expr::Call>) {
          for (const auto& a : n.args) collect_variables(*a, out);
        }
      },
      node.data);
}

bool equal_nodes(const Expr::Node& a, const Expr::Node& b) {
  if (a.data.index() != b.data.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.data);
        if constexpr (std::is_same_v<T, Expr::Number>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Expr::Negate>) {
          return equal_nodes(*x.operand, *y.operand);
        } else if constexpr (std::is_same_v<T, Expr::Binary>) {
          return x.op == y.op && equal_nodes(*x.lhs, *y.lhs) && equal_nodes(*x.rhs, *y.rhs);
        } else {
          if (x.fn != y.fn || x.args.size() != y.args.size()) return false;
          for (std::size_t i = 0; i < x.args.size(); ++i)
            if (!equal_nodes(*x.args[i], *y.args[i])) return false;
          return true;
        }
      },
      a.data);
}

}  // namespace

double Expr::eval(const Bindings& b) const {
  if (!root_) throw Error(ErrorKind::evaluation, "evaluating an empty expression");
  return eval_node(*root_, b);
}

std::string Expr::to_string() const {
  std::string out;
  if (root_) print_node(*root_, out);
  return out;
}

std::string Expr::variables() const {
  std::string out;
  if (root_) collect_variables(*root_, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Expr& a, const Expr& b) {
  if (!a.root_ || !b.root_) return !a.root_ && !b.root_;
  return equal_nodes(*a.root_, *b.root_);
}

Expr parse_expr(std::string_view text) {
  Parser parser(text);
  return Expr(parser.parse(), std::string(text));
}

Expr parse_expr(std::string_view text, std::string_view allowed) {
  Expr e = parse_expr(text);
  for (char c : e.variables())
    if (allowed.find(c) == std::string_view::npos)
      throw Error(ErrorKind::syntax, std::string("variable '") + c + "' is not allowed here (allowed: " +
                                         std::string(allowed.empty() ? "none" : allowed) + ")");
  return e;
}

}  // namespace coneham
