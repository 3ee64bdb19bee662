#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "psop/binet.hpp"
#include "psop/error.hpp"
#include "psop/pseudo_expr.hpp"
#include "psop/recurrence.hpp"
#include "psop/reference_tables.hpp"
#include "psop/root_solver.hpp"
#include "psop/unity_algebra.hpp"

namespace psop::cli {

namespace {

using Json = nlohmann::ordered_json;
using Row = std::vector<std::string>;

struct Options {
  std::vector<double> coeffs;
  std::vector<double> seeds;
  std::int64_t k = 0;
  std::size_t count = 0;
  std::size_t kmax = 40;
  double tol = 1e-8;
  std::string format = "json";
  std::string method = "closed";
  std::string group;
  std::string expr;
};

// Thrown for request problems CLI11 cannot see (e.g. mismatched lengths).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  if (!std::isfinite(v)) return "";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : "";
}

// Adding +0.0 turns a negative zero into a positive one.
Json complex_json(Complex z) { return Json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

// Integers stay JSON numbers while a double can hold them exactly.
Json integer_json(const BigInt& v) {
  static const BigInt limit = BigInt(1) << 53;
  if (abs(v) < limit) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

double principal_arg(Complex z) {
  const double a = std::arg(z);
  return a <= -std::numbers::pi ? std::numbers::pi : a;
}

class Emitter {
 public:
  Emitter(std::ostream& out, bool csv) : out_(out), csv_(csv) {}

  bool csv() const { return csv_; }

  void json(const Json& j) { out_ << j.dump(2) << '\n'; }

  void rows(const std::vector<Row>& rows) {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out_ << (i ? "," : "") << row[i];
      out_ << '\n';
    }
  }

 private:
  std::ostream& out_;
  bool csv_;
};

Recurrence make_recurrence(const Options& o) {
  if (o.coeffs.size() != o.seeds.size()) {
    throw UsageError("--coeffs and --seeds must have the same length (" +
                     std::to_string(o.coeffs.size()) + " vs " + std::to_string(o.seeds.size()) +
                     ")");
  }
  return Recurrence(o.coeffs, o.seeds);
}

RootStrategy strategy_of(const std::string& method) {
  return method == "numeric" ? RootStrategy::Numeric : RootStrategy::Closed;
}

// --- eval ------------------------------------------------------------------

void cmd_eval(const Options& o, Emitter& em) {
  const auto tree = expr::parse(o.expr);
  const Complex z = expr::evaluate(*tree);
  const double mod = std::abs(z);
  const double arg = principal_arg(z);
  if (em.csv()) {
    em.rows({{"re", "im", "mod", "arg"}, {num(z.real()), num(z.imag()), num(mod), num(arg)}});
    return;
  }
  em.json(Json{{"expr", expr::format(*tree)},
               {"re", z.real() + 0.0},
               {"im", z.imag() + 0.0},
               {"mod", mod},
               {"arg", arg}});
}

// --- roots / sigma -----------------------------------------------------------

Json resolvent_json(const std::vector<double>& c) {
  Json block;
  if (c.size() == 2) {
    const auto q = quadratic_roots(c[0], c[1]);
    block["sigmas"] = Json::array({complex_json(q.sigma1)});
    block["labelled_roots"] = Json::array({complex_json(q.r_plus), complex_json(q.r_minus)});
  } else {
    const auto cub = cubic_roots(c[0], c[1], c[2]);
    block["A"] = *cub.resolvents.A;
    block["B"] = *cub.resolvents.B;
    block["sigmas"] = Json::array();
    for (const auto& s : cub.resolvents.sigmas) block["sigmas"].push_back(complex_json(s));
    block["labelled_roots"] = Json::array();
    for (const auto& r : cub.labelled) block["labelled_roots"].push_back(complex_json(r));
  }
  return block;
}

void cmd_roots(const Options& o, Emitter& em) {
  if (o.method == "weights") throw UsageError("roots accepts --method closed or numeric");
  const CharPoly poly(o.coeffs);
  const RootSet set = solve_roots(poly, strategy_of(o.method));
  if (em.csv()) {
    std::vector<Row> rows{{"re", "im", "residual"}};
    for (std::size_t j = 0; j < set.roots.size(); ++j) {
      rows.push_back({num(set.roots[j].real()), num(set.roots[j].imag()), num(set.residuals[j])});
    }
    em.rows(rows);
    return;
  }
  Json j{{"method", std::string(to_string(set.method))}, {"roots", Json::array()}};
  for (std::size_t r = 0; r < set.roots.size(); ++r) {
    j["roots"].push_back(
        {{"re", set.roots[r].real() + 0.0}, {"im", set.roots[r].imag() + 0.0}, {"residual", set.residuals[r]}});
  }
  j["min_separation"] = set.min_separation;
  j["vieta_residuals"] = vieta_residuals(set, poly);
  if (o.coeffs.size() == 2 || o.coeffs.size() == 3) j["resolvents"] = resolvent_json(o.coeffs);
  em.json(j);
}

void cmd_sigma(const Options& o, Emitter& em) {
  if (o.coeffs.size() != 2 && o.coeffs.size() != 3) {
    throw Error(ErrorKind::UnsupportedDegree,
                "sigma covers orders 2 and 3, got " + std::to_string(o.coeffs.size()));
  }
  const Json block = resolvent_json(o.coeffs);
  if (em.csv()) {
    std::vector<Row> rows{{"name", "re", "im"}};
    if (block.contains("A")) {
      rows.push_back({"A", num(block["A"].get<double>()), "0"});
      rows.push_back({"B", num(block["B"].get<double>()), "0"});
    }
    for (std::size_t i = 0; i < block["sigmas"].size(); ++i) {
      const auto& s = block["sigmas"][i];
      rows.push_back({"sigma" + std::to_string(i + 1), num(s["re"].get<double>()),
                      num(s["im"].get<double>())});
    }
    em.rows(rows);
    return;
  }
  Json j{{"order", o.coeffs.size()}};
  j.update(block);
  em.json(j);
}

// --- solve / term / seq / verify ----------------------------------------------

void cmd_solve(const Options& o, Emitter& em) {
  const Recurrence rec = make_recurrence(o);
  const BinetForm form = solve_weights(rec, strategy_of(o.method));
  const auto& roots = form.roots.roots;
  if (em.csv()) {
    std::vector<Row> rows{{"index", "root_re", "root_im", "weight_re", "weight_im"}};
    for (std::size_t j = 0; j < roots.size(); ++j) {
      rows.push_back({std::to_string(j + 1), num(roots[j].real()), num(roots[j].imag()),
                      num(form.weights[j].real()), num(form.weights[j].imag())});
    }
    rows.push_back({"const", "", "", num(form.constant_term().real()),
                    num(form.constant_term().imag())});
    em.rows(rows);
    return;
  }
  Json j{{"method", std::string(to_string(form.roots.method))},
         {"roots", Json::array()},
         {"weights", Json::array()}};
  for (const auto& r : roots) j["roots"].push_back(complex_json(r));
  for (std::size_t w = 0; w < roots.size(); ++w) j["weights"].push_back(complex_json(form.weights[w]));
  j["constant_term"] = complex_json(form.constant_term());
  em.json(j);
}

void cmd_term(const Options& o, Emitter& em) {
  const Recurrence rec = make_recurrence(o);
  std::string path;
  double closed = 0.0;
  if (o.method == "closed" && rec.order() == 2) {
    path = "binet2";
    closed = binet2(rec, o.k);
  } else if (o.method == "closed" && rec.order() == 3) {
    path = "binet3";
    closed = binet3(rec, o.k);
  } else {
    path = "weights";
    closed = closed_term(solve_weights(rec, strategy_of(o.method)), o.k).value.real();
  }
  const Sequence seq = iterate(rec, static_cast<std::size_t>(o.k) + 1);
  const auto idx = static_cast<std::size_t>(o.k);
  if (em.csv()) {
    const std::string exact = seq.is_exact() ? seq.exact(idx).str() : num(seq.approx(idx));
    em.rows({{"k", "closed", "exact"}, {std::to_string(o.k), num(closed), exact}});
    return;
  }
  Json j{{"k", o.k}, {"path", path}, {"closed", closed}};
  if (seq.is_exact()) {
    j["exact"] = integer_json(seq.exact(idx));
  } else {
    j["iterate"] = seq.approx(idx);
  }
  em.json(j);
}

void cmd_seq(const Options& o, Emitter& em) {
  const Recurrence rec = make_recurrence(o);
  const Sequence seq = iterate(rec, o.count);
  auto text = [&](std::size_t k) {
    return seq.is_exact() ? seq.exact(k).str() : num(seq.approx(k));
  };
  if (em.csv()) {
    std::vector<Row> rows{{"k", "value"}};
    for (std::size_t k = 0; k < seq.size(); ++k) rows.push_back({std::to_string(k), text(k)});
    em.rows(rows);
    return;
  }
  Json terms = Json::array();
  for (std::size_t k = 0; k < seq.size(); ++k) {
    terms.push_back(seq.is_exact() ? integer_json(seq.exact(k)) : Json(seq.approx(k)));
  }
  em.json(Json{{"exact", seq.is_exact()}, {"terms", terms}});
}

int cmd_verify(const Options& o, Emitter& em) {
  const Recurrence rec = make_recurrence(o);
  const VerifyReport report = verify(rec, o.kmax, o.tol);
  if (em.csv()) {
    std::vector<Row> rows{{"path", "max_rel_err", "pass"}};
    for (const auto& p : report.paths) rows.push_back({p.path, num(p.max_rel_err), p.pass ? "true" : "false"});
    em.rows(rows);
  } else {
    Json paths = Json::object();
    for (const auto& p : report.paths) paths[p.path] = {{"max_rel_err", p.max_rel_err}, {"pass", p.pass}};
    em.json(Json{{"kmax", report.kmax},
                 {"tolerance", report.tolerance},
                 {"paths", paths},
                 {"pass", report.pass()}});
  }
  return report.pass() ? kOk : kDomainError;
}

// --- table -----------------------------------------------------------------

struct GroupSpec {
  std::vector<Rotor> elements;
  Notation family;
  std::optional<ReferenceTableId> reference;
};

GroupSpec group_spec(const std::string& name) {
  auto published = [](ReferenceTableId id, Notation family) {
    return GroupSpec{reference_table(id).header_rotors(), family, id};
  };
  if (name == "R3") return published(ReferenceTableId::R3, Notation::Ternary);
  if (name == "C3") return {negative_nth_roots(3), Notation::Ternary, std::nullopt};
  if (name == "R4") return published(ReferenceTableId::R4, Notation::Quaternary);
  if (name == "C4") return {negative_nth_roots(4), Notation::Quaternary, std::nullopt};
  if (name == "union3") return published(ReferenceTableId::Union3, Notation::Ternary);
  return published(ReferenceTableId::Union8, Notation::Quaternary);
}

void cmd_table(const Options& o, Emitter& em) {
  const GroupSpec spec = group_spec(o.group);
  const GroupTable table = multiplication_table(spec.elements);
  std::vector<std::string> labels;
  for (const auto& r : table.elements) labels.push_back(notation(r, spec.family));
  auto cell = [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
    if (const auto& p = table.products[i][j]) return labels[*p];
    return std::nullopt;
  };

  if (em.csv()) {
    std::vector<Row> rows;
    Row header{""};
    header.insert(header.end(), labels.begin(), labels.end());
    rows.push_back(header);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      Row row{labels[i]};
      for (std::size_t j = 0; j < labels.size(); ++j) {
        // Products outside the set print in rotor notation.
        row.push_back(cell(i, j).value_or(notation(table.elements[i] * table.elements[j], spec.family)));
      }
      rows.push_back(row);
    }
    em.rows(rows);
    return;
  }

  Json products = Json::array();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const auto c = cell(i, j);
      row.push_back(c ? Json(*c) : Json(nullptr));
    }
    products.push_back(row);
  }
  Json j{{"group", o.group},
         {"order", table.order()},
         {"elements", labels},
         {"products", products},
         {"axioms",
          {{"closure", table.axioms.closure},
           {"associativity", table.axioms.associativity},
           {"identity", table.axioms.identity},
           {"inverses", table.axioms.inverses},
           {"group", table.axioms.is_group()}}}};
  if (spec.reference) {
    Json found = Json::array();
    for (const auto& d : compare_with_reference(reference_table(*spec.reference), spec.family)) {
      found.push_back({{"row", d.row},
                       {"col", d.col},
                       {"row_label", d.row_label},
                       {"col_label", d.col_label},
                       {"published", d.published},
                       {"computed", d.computed}});
    }
    j["reference_discrepancies"] = found;
  }
  em.json(j);
}

// --- wiring ------------------------------------------------------------------

void add_recurrence_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--coeffs", o.coeffs, "c_0,...,c_{n-1} of x_{k+n} = sum c_j x_{k+j}")
      ->delimiter(',')
      ->required();
  cmd->add_option("--seeds", o.seeds, "x_0,...,x_{n-1}")->delimiter(',')->required();
}

void add_format_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

void add_method_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "closed, numeric or weights")
      ->check(CLI::IsMember({"closed", "numeric", "weights"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Pseudo-operator algebra, characteristic roots and closed-form recurrence terms",
               "psop"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate a pseudo-operator expression");
  eval->add_option("expr", o.expr, "expression, e.g. \"2 / 3\"")->required();
  add_format_flag(eval, o);

  auto* roots = app.add_subcommand("roots", "Roots of x^n = c_{n-1} x^{n-1} + ... + c_0");
  roots->add_option("--coeffs", o.coeffs, "c_0,...,c_{n-1}")->delimiter(',')->required();
  add_method_flag(roots, o);
  add_format_flag(roots, o);

  auto* sigma = app.add_subcommand("sigma", "Order-2/3 resolvents");
  sigma->add_option("--coeffs", o.coeffs, "c_0,...,c_{n-1}")->delimiter(',')->required();
  add_format_flag(sigma, o);

  auto* solve = app.add_subcommand("solve", "Roots and closed-form weights");
  add_recurrence_flags(solve, o);
  add_method_flag(solve, o);
  add_format_flag(solve, o);

  auto* term = app.add_subcommand("term", "One term, closed form against iteration");
  add_recurrence_flags(term, o);
  term->add_option("-k", o.k, "term index")->required()->check(CLI::NonNegativeNumber);
  add_method_flag(term, o);
  add_format_flag(term, o);

  auto* seq = app.add_subcommand("seq", "Iterate the recurrence");
  add_recurrence_flags(seq, o);
  seq->add_option("--count", o.count, "number of terms")->required();
  add_format_flag(seq, o);

  auto* ver = app.add_subcommand("verify", "Cross-check closed forms against iteration");
  add_recurrence_flags(ver, o);
  ver->add_option("--kmax", o.kmax, "largest index checked")->capture_default_str();
  ver->add_option("--tol", o.tol, "relative tolerance")->capture_default_str();
  add_format_flag(ver, o);

  auto* table = app.add_subcommand("table", "Multiplication table of a root-of-unity group");
  table->add_option("--group", o.group, "R3, C3, R4, C4, union3 or union8")
      ->required()
      ->check(CLI::IsMember({"R3", "C3", "R4", "C4", "union3", "union8"}));
  add_format_flag(table, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  // Commands render into a buffer so a failing command leaves stdout empty.
  std::ostringstream buffer;
  Emitter staged(buffer, o.format == "csv");
  try {
    int code = kOk;
    if (eval->parsed()) cmd_eval(o, staged);
    else if (roots->parsed()) cmd_roots(o, staged);
    else if (sigma->parsed()) cmd_sigma(o, staged);
    else if (solve->parsed()) cmd_solve(o, staged);
    else if (term->parsed()) cmd_term(o, staged);
    else if (seq->parsed()) cmd_seq(o, staged);
    else if (ver->parsed()) code = cmd_verify(o, staged);
    else if (table->parsed()) cmd_table(o, staged);
    out << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace psop::cli
