#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <ostream>

#include "expression.hpp"
#include "omega/errors.hpp"
#include "omega/integration.hpp"
#include "omega/serialization.hpp"

namespace omega::cli {

namespace {

// Working depth grows on precision failures; the reported result is always
// cut back to the requested depth.
constexpr int kRetries = 4;

std::size_t grow(std::size_t working) { return working * 2 + 8; }

OmegaNumber evaluate_to_depth(const Expression& e, std::size_t depth) {
  std::size_t working = depth;
  for (int attempt = 0;; ++attempt, working = grow(working)) {
    try {
      OmegaNumber r = evaluate(e, working);
      return r.is_exact() ? r : truncate(r, static_cast<Exponent>(depth));
    } catch (const PrecisionError&) {
      if (attempt == kRetries) throw;
    }
  }
}

std::strong_ordering compare_to_depth(const Expression& a, const Expression& b, std::size_t depth) {
  std::size_t working = depth;
  for (int attempt = 0;; ++attempt, working = grow(working)) {
    try {
      return compare(evaluate(a, working), evaluate(b, working));
    } catch (const PrecisionError&) {
      if (attempt == kRetries) throw;
    }
  }
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) throw ParseError("empty entry in coefficient list '" + text + "'");
    out.push_back(Rational::parse(item));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += values[i].to_string();
  }
  return s;
}

const char* relation(std::strong_ordering c) {
  if (c < 0) return "<";
  if (c > 0) return ">";
  return "=";
}

std::size_t depth_from_env() {
  const char* env = std::getenv("OMEGA_DEPTH");
  if (env == nullptr || *env == '\0') return kDefaultDepth;
  Integer d = Integer::parse(env);
  if (d.sign() < 0 || !d.fits_long()) throw ParseError(std::string("invalid OMEGA_DEPTH '") + env + "'");
  return static_cast<std::size_t>(d.to_long());
}

struct Options {
  std::optional<std::size_t> depth;
  bool json = false;

  std::string expr;
  std::string expr2;

  std::string direction = "d_to_D";
  std::size_t max_order = 4;

  std::string poly;
  std::string t = "0";
  long k = 0;
  std::string g0 = "0";

  std::string kind = "X";

  std::string p;
  std::string q;
};

int eval_command(const Options& o, std::size_t depth, std::ostream& out) {
  OmegaNumber r = evaluate_to_depth(*parse(o.expr), depth);
  if (o.json) {
    out << to_json(r).dump() << '\n';
  } else {
    out << to_string(r) << '\n';
  }
  return kOk;
}

int compare_command(const Options& o, std::size_t depth, std::ostream& out) {
  auto a = parse(o.expr);
  auto b = parse(o.expr2);
  const char* rel = relation(compare_to_depth(*a, *b, depth));
  if (o.json) {
    out << Json{{"kind", "comparison"}, {"relation", rel}}.dump() << '\n';
  } else {
    out << rel << '\n';
  }
  return kOk;
}

int difftable_command(const Options& o, std::ostream& out) {
  TableDirection dir = parse_direction(o.direction);
  CoeffTable table = dir == TableDirection::kDToCapitalD ? d_to_D_table(o.max_order) : D_to_d_table(o.max_order);
  if (o.json) {
    out << to_json(table).dump() << '\n';
    return kOk;
  }
  for (std::size_t r = 1; r <= table.cutoff(); ++r) out << join(table.row_from_diagonal(r)) << '\n';
  return kOk;
}

int integrate_command(const Options& o, std::ostream& out, std::ostream& err) {
  PolynomialFn f(parse_list(o.poly));
  R1Point upper{Rational::parse(o.t), Integer(o.k)};
  Rational g0 = Rational::parse(o.g0);
  OmegaNumber g = discrete_integral(f, upper, g0);
  Rational standard = standard_part(g);
  Rational exact = riemann(f, upper.t);
  if (o.json) {
    Json j{{"kind", "integral"},
           {"omega", to_json(g)},
           {"standard", standard.to_fraction_string()},
           {"riemann", exact.to_fraction_string()}};
    out << j.dump() << '\n';
  } else {
    out << "omega: " << to_string(g) << '\n';
    out << "standard: " << standard << '\n';
    out << "riemann: " << exact << '\n';
  }
  if (standard != g0 + exact) {
    err << "internal error: standard part " << standard << " differs from G0 + riemann = " << g0 + exact << '\n';
    return kInternal;
  }
  return kOk;
}

int coeffs_command(const Options& o, std::ostream& out) {
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i <= o.max_order; ++i) {
    std::vector<Integer> row;
    if (o.kind == "X") {
      for (std::size_t n = 0; n <= o.max_order; ++n) row.push_back(x_coeff(i, n));
    } else {
      for (std::size_t j = 0; j <= i; ++j) row.push_back(k_coeff(i, j));
    }
    rows.push_back(std::move(row));
  }
  if (o.json) {
    Json table = Json::array();
    for (const auto& row : rows) {
      Json r = Json::array();
      for (const Integer& v : row) r.push_back(v.to_string());
      table.push_back(std::move(r));
    }
    out << Json{{"kind", "integer_table"}, {"name", o.kind}, {"max", o.max_order}, {"rows", table}}.dump() << '\n';
    return kOk;
  }
  // X_p^n for n = 0..max, or K_m^j for j = 0..m
  for (std::size_t i = 0; i < rows.size(); ++i) out << o.kind << '_' << i << ": " << join(rows[i]) << '\n';
  return kOk;
}

int expand_command(const Options& o, std::size_t depth, std::ostream& out) {
  OmegaNumber r = expand_rational(parse_list(o.p), parse_list(o.q), depth);
  if (o.json) {
    out << to_json(r).dump() << '\n';
  } else {
    out << to_string(r) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Exact arithmetic in the series algebra R_o, the infinite integers and the field Omega", "omega");
  app.require_subcommand(1);
  app.add_option("--depth", o.depth, "Depth in o-powers for series results (env OMEGA_DEPTH, default 16)");
  app.add_flag("--json", o.json, "Emit JSON");

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", o.expr, "Expression over numbers, o, S, + - * / ^, inv, sqrt, pow, trunc")->required();

  auto* cmp = app.add_subcommand("compare", "Print <, = or > between two expressions");
  cmp->add_option("lhs", o.expr, "Left expression")->required();
  cmp->add_option("rhs", o.expr2, "Right expression")->required();

  auto* difftable = app.add_subcommand("difftable", "Conversion table between differences and differentials");
  difftable->add_option("--dir", o.direction, "d_to_D or D_to_d")
      ->check(CLI::IsMember({"d_to_D", "D_to_d"}))
      ->capture_default_str();
  difftable->add_option("--max", o.max_order, "Largest order")->check(CLI::PositiveNumber)->capture_default_str();

  auto* integrate = app.add_subcommand("integrate", "Discrete integral of a polynomial up to t + k o");
  integrate->add_option("--poly", o.poly, "Coefficients a_0,a_1,... of f")->required();
  integrate->add_option("--t", o.t, "Standard part of the upper point")->capture_default_str();
  integrate->add_option("--k", o.k, "Multiple of o in the upper point")->capture_default_str();
  integrate->add_option("--g0", o.g0, "Value at 0")->capture_default_str();

  auto* coeffs = app.add_subcommand("coeffs", "Tables of the X or K coefficients");
  coeffs->add_option("--kind", o.kind, "X or K")->check(CLI::IsMember({"X", "K"}))->capture_default_str();
  coeffs->add_option("--max", o.max_order, "Largest index")->capture_default_str();

  auto* expand = app.add_subcommand("expand", "Series of P(o)/Q(o)");
  expand->add_option("--p", o.p, "Coefficients of P in ascending powers of o")->required();
  expand->add_option("--q", o.q, "Coefficients of Q in ascending powers of o")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::size_t depth = o.depth ? *o.depth : depth_from_env();
    if (eval->parsed()) return eval_command(o, depth, out);
    if (cmp->parsed()) return compare_command(o, depth, out);
    if (difftable->parsed()) return difftable_command(o, out);
    if (integrate->parsed()) return integrate_command(o, out, err);
    if (coeffs->parsed()) return coeffs_command(o, out);
    if (expand->parsed()) return expand_command(o, depth, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecision;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return kMath;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace omega::cli
