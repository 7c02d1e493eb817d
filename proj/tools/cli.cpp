#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <CLI11.hpp>

#include "braidlab/braid.hpp"
#include "braidlab/characters.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/gamma.hpp"
#include "braidlab/io.hpp"
#include "braidlab/matrix_model.hpp"
#include "braidlab/permutation.hpp"
#include "braidlab/symmetry.hpp"

namespace braidlab::cli
{

namespace
{

using io::Json;

std::vector<std::string> split_list(const std::string& text)
{
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text)
{
  std::vector<Rational> out;
  for (const auto& item : split_list(text))
    out.push_back(parse_rational(item));
  return out;
}

std::set<int> parse_index_set(const std::string& text)
{
  std::set<int> out;
  for (const auto& item : split_list(text)) {
    const auto w = parse_moment_word(item);
    if (w.size() != 1 || w[0].adjoint)
      throw ParseError("malformed index", item, 0);
    out.insert(w[0].index);
  }
  return out;
}

MomentOracle resolve_oracle(const std::string& name)
{
  if (name == "delta")
    return delta_gamma_oracle();
  const std::string prefix = "matrix:";
  if (name.rfind(prefix, 0) == 0) {
    const auto model = io::model_from_json(io::parse_json(io::read_text_argument(name.substr(prefix.size()))));
    return matrix_star_oracle(model);
  }
  throw ParseError("unknown oracle (expected 'delta' or 'matrix:<config>')", name, 0);
}

void emit(std::ostream& out, const Json& j)
{
  out << j.dump(2) << '\n';
}

std::string format_double(double x)
{
  std::ostringstream ss;
  ss.precision(12);
  ss << x;
  return ss.str();
}

struct Options
{
  bool json = false;
  std::optional<int> strands;
  std::string word1, word2, perm, params, poly, model, oracle, require = "exchangeable";
  std::string a_list, b_list, left, right;
  int gamma_index = 1;
  int maxlen = 5, maxidx = 5, kmin = 2, kmax = 4;
  double tol = 1e-10;
};

int cmd_normalize(const Options& o, std::ostream& out)
{
  const auto w = io::parse_braid_word(o.word1);
  const auto nf = garside_normal_form(w, o.strands);
  if (o.json) {
    Json j = io::normal_form_to_json(nf);
    j["word"] = io::format_braid_word(to_word(nf));
    emit(out, j);
    return ok;
  }
  out << "strands: " << nf.strands << '\n' << "delta_power: " << nf.delta_power << '\n' << "factors:";
  if (nf.factors.empty())
    out << " []";
  for (const auto& f : nf.factors)
    out << ' ' << io::format_cycles(f);
  out << '\n' << "word: " << io::format_braid_word(to_word(nf)) << '\n';
  return ok;
}

int cmd_eq(const Options& o, std::ostream& out)
{
  const auto lhs = io::parse_braid_word(o.word1);
  const auto rhs = io::parse_braid_word(o.word2);
  const bool equal = braid_equal(lhs, rhs, o.strands);
  if (o.json)
    emit(out, Json{{"equal", equal}});
  else
    out << (equal ? "equal" : "not equal") << '\n';
  return equal ? ok : check_failed;
}

int cmd_project(const Options& o, std::ostream& out)
{
  const auto p = project_to_permutation(io::parse_braid_word(o.word1));
  if (o.json)
    emit(out, Json{{"cycles", io::format_cycles(p)}, {"permutation", io::permutation_to_json(p)}});
  else
    out << io::format_cycles(p) << '\n';
  return ok;
}

int cmd_cycles(const Options& o, std::ostream& out)
{
  const auto p = io::parse_permutation(o.perm);
  const auto counts = cycle_type_counts(p);
  if (o.json) {
    Json m = Json::object();
    for (const auto& [k, n] : counts)
      m[std::to_string(k)] = n;
    emit(out, Json{{"cycles", io::format_cycles(p)}, {"m", m}});
    return ok;
  }
  out << io::format_cycles(p) << '\n';
  for (const auto& [k, n] : counts)
    out << "m_" << k << " = " << n << '\n';
  return ok;
}

int cmd_gamma(const Options& o, std::ostream& out)
{
  const auto g = gamma_word(o.gamma_index);
  const auto alt = gamma_word_alt(o.gamma_index);
  const bool equal = braid_equal(g, alt);
  const auto image = project_to_permutation(g);
  if (o.json) {
    emit(out, Json{{"i", o.gamma_index},
                   {"gamma", io::format_braid_word(g)},
                   {"gamma_alt", io::format_braid_word(alt)},
                   {"equal", equal},
                   {"image", io::format_cycles(image)}});
  } else {
    out << io::format_braid_word(g) << '\n'
        << io::format_braid_word(alt) << '\n'
        << "equal: " << (equal ? "true" : "false") << '\n'
        << "image: " << io::format_cycles(image) << '\n';
  }
  return equal ? ok : check_failed;
}

int cmd_thoma(const Options& o, std::ostream& out)
{
  ThomaParams p;
  if (!o.params.empty())
    p = io::thoma_from_json(io::parse_json(io::read_text_argument(o.params)));
  if (!o.a_list.empty())
    p.a = parse_rational_list(o.a_list);
  if (!o.b_list.empty())
    p.b = parse_rational_list(o.b_list);
  if (auto v = validate_thoma(p); !v)
    throw ValidationError("invalid Thoma parameters: " + v.violation);
  const auto sigma = io::parse_permutation(o.perm);
  const auto value = thoma_character(p, sigma);
  if (o.json)
    emit(out, Json{{"params", io::thoma_to_json(p)}, {"permutation", io::format_cycles(sigma)}, {"value", to_string(value)}});
  else
    out << to_string(value) << '\n';
  return ok;
}

int cmd_trace_delta(const Options& o, std::ostream& out)
{
  const auto x = io::polynomial_from_json(io::parse_json(io::read_text_argument(o.poly)));
  const auto value = delta_trace(x, o.strands);
  if (o.json)
    emit(out, Json{{"trace", Json::array({to_string(value.re), to_string(value.im)})}});
  else
    out << to_string(value) << '\n';
  return ok;
}

int cmd_model_trace(const Options& o, std::ostream& out)
{
  const auto model = io::model_from_json(io::parse_json(io::read_text_argument(o.model)));
  const auto sigma = io::parse_permutation(o.perm);
  const auto trace = trace_state(model, permutation_operator(model, sigma));
  const auto thoma = thoma_character(model.thoma_params(), sigma);
  const double error = std::abs(trace - std::complex<double>(to_double(thoma), 0.0));
  const bool match = error <= o.tol;
  if (o.json) {
    emit(out, Json{{"permutation", io::format_cycles(sigma)},
                   {"trace", Json::array({trace.real(), trace.imag()})},
                   {"thoma", to_string(thoma)},
                   {"error", error},
                   {"tol", o.tol},
                   {"match", match}});
  } else {
    out << "trace: " << format_double(trace.real()) << '\n'
        << "thoma: " << to_string(thoma) << '\n'
        << "match: " << (match ? "true" : "false") << '\n';
  }
  return match ? ok : check_failed;
}

Property parse_property(const std::string& name)
{
  for (auto p : {Property::identically_distributed, Property::stationary, Property::spreadable, Property::exchangeable})
    if (to_string(p) == name)
      return p;
  throw ParseError("unknown property", name, 0);
}

int cmd_symmetry(const Options& o, std::ostream& out)
{
  const Property required = parse_property(o.require);
  const auto oracle = resolve_oracle(o.oracle);
  const auto report = check_hierarchy(oracle, {o.maxlen, o.maxidx, o.tol});
  bool satisfied = true;
  for (const auto& r : report.reports)
    if (static_cast<int>(r.property) <= static_cast<int>(required) && !r.pass)
      satisfied = false;
  if (o.json) {
    Json reports = Json::array();
    for (const auto& r : report.reports)
      reports.push_back(io::report_to_json(r));
    emit(out, Json{{"oracle", oracle.name},
                   {"reports", reports},
                   {"strongest", report.strongest ? Json(to_string(*report.strongest)) : Json(nullptr)},
                   {"required", to_string(required)},
                   {"verdict", satisfied ? "pass" : "fail"}});
  } else {
    for (const auto& r : report.reports)
      out << to_string(r.property) << ": " << (r.pass ? "pass" : "fail") << '\n';
    out << "strongest: " << (report.strongest ? to_string(*report.strongest) : std::string("none")) << '\n';
  }
  return satisfied ? ok : check_failed;
}

int cmd_independence(const Options& o, std::ostream& out)
{
  const auto oracle = resolve_oracle(o.oracle);
  const auto report =
      check_scalar_independence(oracle, parse_index_set(o.left), parse_index_set(o.right), {o.maxlen, 0, o.tol});
  if (o.json)
    emit(out, io::report_to_json(report));
  else
    out << "independence: " << (report.pass ? "pass" : "fail") << '\n';
  return report.pass ? ok : check_failed;
}

int cmd_limit_cycles(const Options& o, std::ostream& out)
{
  if (o.kmin < 2 || o.kmax < o.kmin)
    throw PreconditionError("need 2 <= kmin <= kmax");
  const auto model = io::model_from_json(io::parse_json(io::read_text_argument(o.model)));
  const int stars = model.sites() - 1;
  const double bound = 4.0 / stars;
  bool within = true;
  Json rows = Json::array();
  if (!o.json)
    out << "k C_k sum_a^k error\n";
  for (int k = o.kmin; k <= o.kmax; ++k) {
    const double ck = limit_cycle_Ck(model, k);
    const double target = to_double(thoma_cycle_value(model.thoma_params(), static_cast<unsigned>(k)));
    const double error = std::abs(ck - target);
    // The 4/n bound is only claimed for k <= 4.
    if (k <= 4 && error > bound)
      within = false;
    if (o.json)
      rows.push_back(Json{{"k", k}, {"C_k", ck}, {"power_sum", target}, {"error", error}});
    else
      out << k << ' ' << format_double(ck) << ' ' << format_double(target) << ' ' << format_double(error) << '\n';
  }
  if (o.json)
    emit(out, Json{{"stars", stars}, {"bound", bound}, {"rows", rows}, {"verdict", within ? "pass" : "fail"}});
  return within ? ok : check_failed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"braidlab: braid words, star generators, Thoma characters and distributional symmetries"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of human-readable text");

  auto strands_opt = [&](CLI::App* sub) {
    sub->add_option_function<int>("--strands,-n", [&](int n) { o.strands = n; }, "Strand count (default: 1 + max |letter|)");
  };

  auto* normalize = app.add_subcommand("normalize", "Left normal form of a braid word");
  normalize->add_option("word", o.word1, "Braid word, e.g. \"1 2 -1\"")->required();
  strands_opt(normalize);

  auto* eq = app.add_subcommand("eq", "Decide equality of two braid words");
  eq->add_option("lhs", o.word1)->required();
  eq->add_option("rhs", o.word2)->required();
  strands_opt(eq);

  auto* project = app.add_subcommand("project", "Image of a braid word in the symmetric group");
  project->add_option("word", o.word1)->required();

  auto* cycles = app.add_subcommand("cycles", "Cycle type counts m_k of a permutation");
  cycles->add_option("permutation", o.perm, "Cycle notation \"(0 1)(2 3 4)\" or {\"map\": {...}}")->required();

  auto* gamma = app.add_subcommand("gamma", "Both spellings of gamma_i and their equality");
  gamma->add_option("i", o.gamma_index)->required();
  gamma->footer("The sequence exported to the symmetry lab is x_n = gamma_{n+1}, so index n of an oracle "
                  "word refers to gamma_{n+1}.");

  auto* thoma = app.add_subcommand("thoma", "Evaluate a Thoma character on a permutation");
  thoma->add_option("--a", o.a_list, "Comma-separated rationals a_1,a_2,...");
  thoma->add_option("--b", o.b_list, "Comma-separated rationals b_1,b_2,...");
  thoma->add_option("--params", o.params, "Thoma parameter JSON file or inline JSON");
  thoma->add_option("permutation", o.perm)->required();

  auto* trace = app.add_subcommand("trace-delta", "Canonical trace of a group algebra polynomial");
  trace->add_option("polynomial", o.poly, "Polynomial JSON file or inline JSON")->required();
  strands_opt(trace);

  auto* model_trace = app.add_subcommand("model-trace", "Matrix model trace of a permutation with Thoma cross-check");
  model_trace->add_option("--model", o.model, "Model config JSON file or inline JSON")->required();
  model_trace->add_option("permutation", o.perm)->required();
  model_trace->add_option("--tol", o.tol);

  auto* symmetry = app.add_subcommand("symmetry", "Bounded check of the distributional symmetry hierarchy");
  symmetry->add_option("--oracle", o.oracle, "delta | matrix:<config>")->required();
  symmetry->add_option("--maxlen", o.maxlen)->check(CLI::PositiveNumber);
  symmetry->add_option("--maxidx", o.maxidx)->check(CLI::PositiveNumber);
  symmetry->add_option("--tol", o.tol)->check(CLI::NonNegativeNumber);
  symmetry->add_option("--require", o.require,
                       "Weakest failure that makes the command fail: identically_distributed, stationary, "
                       "spreadable or exchangeable (default)");
  symmetry->footer("Oracle index n stands for x_n = gamma_{n+1} (delta) or v_{n+1} (matrix).");

  auto* independence = app.add_subcommand("independence", "Factorization of traces over disjoint index sets");
  independence->add_option("--oracle", o.oracle, "delta | matrix:<config>")->required();
  independence->add_option("--I", o.left, "Comma-separated oracle indices")->required();
  independence->add_option("--J", o.right, "Comma-separated oracle indices")->required();
  independence->add_option("--maxlen", o.maxlen)->check(CLI::NonNegativeNumber);
  independence->add_option("--tol", o.tol)->check(CLI::NonNegativeNumber);

  auto* limits = app.add_subcommand("limit-cycles", "C_k = tr(A_0^(k-1)) against sum_i a_i^k");
  limits->add_option("--model", o.model, "Model config JSON file or inline JSON")->required();
  limits->add_option("--kmin", o.kmin);
  limits->add_option("--kmax", o.kmax);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*normalize)
      return cmd_normalize(o, out);
    if (*eq)
      return cmd_eq(o, out);
    if (*project)
      return cmd_project(o, out);
    if (*cycles)
      return cmd_cycles(o, out);
    if (*gamma)
      return cmd_gamma(o, out);
    if (*thoma)
      return cmd_thoma(o, out);
    if (*trace)
      return cmd_trace_delta(o, out);
    if (*model_trace)
      return cmd_model_trace(o, out);
    if (*symmetry)
      return cmd_symmetry(o, out);
    if (*independence)
      return cmd_independence(o, out);
    if (*limits)
      return cmd_limit_cycles(o, out);
  } catch (const HierarchyInversionError& e) {
    err << "error: " << e.what() << '\n';
    return check_failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

} // namespace braidlab::cli
