#include "coneham/problem_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace coneham {

namespace {

[[noreturn]] void fail(const std::string& message, std::optional<std::size_t> offset = {}) {
  throw Error(ErrorKind::problem_file, message, offset);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Splits on commas outside parentheses.
std::vector<std::string> split_args(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      out.emplace_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  const auto last = trim(text.substr(start));
  if (!last.empty() || !out.empty()) out.emplace_back(last);
  return out;
}

struct Call {
  std::string name;
  std::vector<std::string> args;
  bool has_parens = false;
};

Call split_call(std::string_view spec) {
  spec = trim(spec);
  const auto open = spec.find('(');
  if (open == std::string_view::npos) return {std::string(spec), {}, false};
  if (spec.back() != ')') fail("malformed spec '" + std::string(spec) + "': missing ')'");
  return {std::string(trim(spec.substr(0, open))), split_args(spec.substr(open + 1, spec.size() - open - 2)), true};
}

double parse_constant(const std::string& text, const std::string& what) {
  try {
    const Expr e = parse_expr(text, "");
    return e.eval({});
  } catch (const Error& err) {
    fail(what + ": " + err.what());
  }
}

std::optional<std::pair<std::string, std::string>> named_arg(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos) return std::nullopt;
  return std::pair{std::string(trim(std::string_view(arg).substr(0, eq))),
                   std::string(trim(std::string_view(arg).substr(eq + 1)))};
}

Expr checked_expr(const std::string& text, std::string_view vars, const std::string& field) {
  try {
    return parse_expr(text, vars);
  } catch (const Error& err) {
    fail("field " + field + ": " + err.what(), err.offset());
  }
}

ScalarFn scalar_of(Expr e, char var) {
  return [e = std::move(e), var](double x) {
    Bindings b;
    (var == 't' ? b.t : b.s) = x;
    return e.eval(b);
  };
}

// Which section each key belongs to; the top level accepts any key.
const std::map<std::string, std::set<std::string>, std::less<>> kKeySections{
    {"f", {"problem"}},          {"g", {"problem"}},
    {"e", {"problem"}},          {"kernel", {"kernel"}},
    {"cone", {"cone"}},          {"beta", {"cone"}},
    {"gamma", {"cone"}},         {"rule", {"quadrature"}},
    {"n", {"quadrature"}},       {"gauss_points", {"quadrature"}},
    {"strategy", {"levels"}},    {"rho", {"levels"}},
    {"tol", {"tolerances"}},     {"membership", {"tolerances"}},
    {"oracle_tol", {"tolerances"}}, {"damping", {"tolerances"}},
    {"max_iter", {"tolerances"}},   {"trials", {"tolerances"}},
    {"seed", {"tolerances"}},
};

const std::set<std::string, std::less<>> kSections{"problem", "kernel", "cone", "quadrature", "levels", "tolerances"};

template <class Int>
Int parse_integer(const std::string& text, const std::string& field) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) fail("field " + field + ": expected an integer, got '" + text + "'");
  return value;
}

}  // namespace

Functional parse_functional_spec(std::string_view spec_text) {
  const Call call = split_call(spec_text);
  const auto& name = call.name;
  const auto& args = call.args;
  if (!call.has_parens) {
    try {
      return builtin_functional(name);
    } catch (const Error&) {
      fail("unresolvable functional label '" + name + "'");
    }
  }
  if (name == "min_window") {
    if (args.size() < 2 || args.size() > 4) fail("min_window expects (a, b[, c[, sigma]])");
    const double a = parse_constant(args[0], "min_window a");
    const double b = parse_constant(args[1], "min_window b");
    const double c = args.size() > 2 ? parse_constant(args[2], "min_window c") : 0.0;
    ScalarFn sigma;
    if (args.size() > 3) sigma = scalar_of(checked_expr(args[3], "t", "min_window sigma"), 't');
    try {
      return min_window(a, b, c, std::move(sigma));
    } catch (const Error& err) {
      fail(std::string("min_window: ") + err.what());
    }
  }
  if (name == "family_inf") {
    if (args.empty()) fail("family_inf expects at least one expression");
    std::vector<ScalarFn> family;
    for (const auto& a : args) family.push_back(scalar_of(checked_expr(a, "t", "family_inf"), 't'));
    return family_inf(std::move(family));
  }
  if (name == "stieltjes") {
    std::optional<Expr> h;
    Measure measure;
    bool has_measure = false;
    for (const auto& a : args) {
      const auto named = named_arg(a);
      if (!named || named->first == "h") {
        if (h) fail("stieltjes: h given twice");
        h = checked_expr(named ? named->second : a, "tv", "stieltjes h");
      } else if (named->first == "density") {
        measure.density = scalar_of(checked_expr(named->second, "t", "stieltjes density"), 't');
        has_measure = true;
      } else if (named->first == "atom") {
        const auto colon = named->second.find(':');
        const double pos = parse_constant(named->second.substr(0, colon), "stieltjes atom position");
        const double mass =
            colon == std::string::npos ? 1.0 : parse_constant(named->second.substr(colon + 1), "stieltjes atom mass");
        measure.atoms.push_back({pos, mass});
        has_measure = true;
      } else {
        fail("stieltjes: unknown argument '" + named->first + "'");
      }
    }
    if (!h) fail("stieltjes: missing h");
    if (!has_measure) measure = Measure::lebesgue();
    BivariateFn fn = [e = *h](double t, double v) { return e.eval({t, 0.0, v}); };
    return stieltjes(std::move(fn), std::move(measure), h->source());
  }
  fail("unresolvable functional label '" + name + "'");
}

Kernel make_kernel(const std::string& spec) {
  const Call call = split_call(spec);
  if (!call.has_parens && call.name == "green_dirichlet") return green_dirichlet();
  if (call.name == "expr" && call.has_parens) {
    const auto open = spec.find('(');
    const auto close = spec.rfind(')');
    const std::string body(trim(std::string_view(spec).substr(open + 1, close - open - 1)));
    Expr e = checked_expr(body, "ts", "kernel");
    return Kernel("expr(" + body + ")", [e = std::move(e)](double t, double s) { return e.eval({t, s, 0.0}); });
  }
  fail("unresolvable kernel label '" + spec + "'");
}

ConeSpec make_cone(const std::string& spec, const std::string& beta, const std::string& gamma) {
  const Call call = split_call(spec);
  if (!call.has_parens && call.name == "concave_dirichlet") return concave_dirichlet_cone(beta, gamma);
  if (!call.has_parens && call.name == "nonneg") return nonneg_cone(beta, gamma);
  if (call.name == "custom" && call.has_parens) {
    // The functional spec may itself contain commas; take everything after "functional=".
    const auto open = spec.find('(');
    const auto close = spec.rfind(')');
    const auto named = named_arg(std::string(trim(std::string_view(spec).substr(open + 1, close - open - 1))));
    if (!named || named->first != "functional") fail("custom cone expects custom(functional=<spec>)");
    return custom_cone(parse_functional_spec(named->second));
  }
  fail("unresolvable cone label '" + spec + "'");
}

ProblemFile parse_problem_file(std::string_view text) {
  ProblemFile pf;
  std::map<std::string, std::string> values;
  std::string section;
  std::size_t line_start = 0;
  int line_no = 0;
  while (line_start <= text.size()) {
    const auto nl = text.find('\n', line_start);
    std::string_view line = text.substr(line_start, nl == std::string_view::npos ? text.size() - line_start : nl - line_start);
    const std::size_t offset = line_start;
    ++line_no;
    line_start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') fail(where + "malformed section header", offset);
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!kSections.contains(section)) fail(where + "unknown section [" + section + "]", offset);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(where + "expected 'key = value'", offset);
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    const auto it = kKeySections.find(key);
    if (it == kKeySections.end()) fail(where + "unknown field '" + key + "'", offset);
    if (!section.empty() && !it->second.contains(section))
      fail(where + "field '" + key + "' does not belong in [" + section + "]", offset);
    if (values.contains(key)) fail(where + "field '" + key + "' given twice", offset);
    if (value.empty()) fail(where + "field '" + key + "' has no value", offset);
    values[key] = value;
  }

  auto required = [&](const std::string& key) -> const std::string& {
    const auto it = values.find(key);
    if (it == values.end()) fail("missing required field '" + key + "'");
    return it->second;
  };
  auto optional = [&](const std::string& key) -> const std::string* {
    const auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  };

  pf.f = required("f");
  pf.e = required("e");
  pf.cone = required("cone");
  pf.beta = required("beta");
  pf.gamma = required("gamma");
  if (auto* v = optional("kernel")) pf.kernel = *v;
  if (auto* v = optional("g")) pf.g = *v;

  checked_expr(pf.f, "tv", "f");
  checked_expr(pf.g, "s", "g");
  checked_expr(pf.e, "t", "e");
  make_kernel(pf.kernel);
  parse_functional_spec(pf.beta);
  parse_functional_spec(pf.gamma);
  make_cone(pf.cone, pf.beta, pf.gamma);

  if (auto* v = optional("rule")) {
    try {
      pf.rule = parse_rule(*v);
    } catch (const Error& err) {
      fail(std::string("field rule: ") + err.what());
    }
  }
  if (auto* v = optional("n")) pf.n = parse_integer<int>(*v, "n");
  if (auto* v = optional("gauss_points")) pf.gauss_points = parse_integer<int>(*v, "gauss_points");
  if (pf.n < 1 || pf.gauss_points < 1) fail("field n: quadrature sizes must be positive");

  if (auto* v = optional("strategy")) {
    try {
      pf.strategy = parse_strategy(*v);
    } catch (const Error& err) {
      fail(std::string("field strategy: ") + err.what());
    }
  }
  for (const auto& r : split_args(required("rho"))) pf.rho.push_back(parse_constant(r, "field rho"));
  if (pf.rho.size() != level_count(pf.strategy))
    fail("field rho: strategy " + std::string(to_string(pf.strategy)) + " needs " +
         std::to_string(level_count(pf.strategy)) + " levels, got " + std::to_string(pf.rho.size()));

  auto& tol = pf.tolerances;
  if (auto* v = optional("tol")) tol.tol = parse_constant(*v, "field tol");
  if (auto* v = optional("membership")) tol.membership = parse_constant(*v, "field membership");
  if (auto* v = optional("oracle_tol")) tol.oracle_tol = parse_constant(*v, "field oracle_tol");
  if (auto* v = optional("damping")) tol.damping = parse_constant(*v, "field damping");
  if (auto* v = optional("max_iter")) tol.max_iter = parse_integer<int>(*v, "max_iter");
  if (auto* v = optional("trials")) tol.trials = parse_integer<int>(*v, "trials");
  if (auto* v = optional("seed")) tol.seed = parse_integer<std::uint64_t>(*v, "seed");
  if (!(tol.damping > 0.0 && tol.damping <= 1.0)) fail("field damping: must lie in (0, 1]");
  return pf;
}

ProblemFile load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open problem file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_file(buf.str());
}

HammersteinProblem build_problem(const ProblemFile& file, std::optional<Rule> rule, std::optional<int> n) {
  Expr f = checked_expr(file.f, "tv", "f");
  Expr e = checked_expr(file.e, "t", "e");
  Expr g = checked_expr(file.g, "s", "g");
  HammersteinProblem::Parts parts{
      make_kernel(file.kernel),
      scalar_of(g, 's'),
      [f](double t, double v) { return f.eval({t, 0.0, v}); },
      make_cone(file.cone, file.beta, file.gamma),
      parse_functional_spec(file.beta),
      parse_functional_spec(file.gamma),
      scalar_of(e, 't'),
      build_quadrature(rule.value_or(file.rule), n.value_or(file.n), file.gauss_points),
      file.f,
      file.g,
      file.e,
  };
  return HammersteinProblem(std::move(parts));
}

}  // namespace coneham
