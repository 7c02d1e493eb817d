#include "braidlab/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "braidlab/errors.hpp"

namespace braidlab::io
{

namespace
{

bool is_space(char c)
{
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

long long parse_integer(std::string_view token, std::size_t position, const char* what)
{
  long long value = 0;
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+')
    digits.remove_prefix(1);
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size())
    throw ParseError(what, std::string(token), position);
  return value;
}

Rational rational_from_json(const Json& j, const char* field)
{
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<long>());
  throw ParseError(std::string("expected a rational string in ") + field, j.dump(), 0);
}

Json complex_json(MomentValue v)
{
  return Json::array({v.real(), v.imag()});
}

Json word_json(const MomentWord& w)
{
  return to_string(w);
}

} // namespace

BraidWord parse_braid_word(std::string_view text)
{
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos]))
      ++pos;
    const auto token = text.substr(start, pos - start);
    const long long value = parse_integer(token, start, "malformed braid letter");
    if (value == 0)
      throw ParseError("braid letter 0 is not a generator", std::string(token), start);
    if (value > 1000000 || value < -1000000)
      throw ParseError("braid letter out of range", std::string(token), start);
    letters.push_back(static_cast<Letter>(value));
  }
  return BraidWord(std::move(letters));
}

std::string format_braid_word(const BraidWord& w)
{
  std::string out;
  for (Letter k : w.letters()) {
    if (!out.empty())
      out += ' ';
    out += std::to_string(k);
  }
  return out;
}

Permutation parse_cycles(std::string_view text)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && is_space(text[pos]))
      ++pos;
  };
  skip();
  if (pos == text.size())
    throw ParseError("empty permutation, use () for the identity", "", pos);
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '('", std::string(1, text[pos]), pos);
    const std::size_t open = pos++;
    std::vector<Point> cycle;
    std::vector<std::size_t> positions;
    while (true) {
      skip();
      if (pos == text.size())
        throw ParseError("unterminated cycle", std::string(text.substr(open)), open);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      const std::size_t start = pos;
      while (pos < text.size() && !is_space(text[pos]) && text[pos] != ')' && text[pos] != '(' && text[pos] != ',')
        ++pos;
      if (pos == start)
        throw ParseError("unexpected character", std::string(1, text[pos]), pos);
      const auto token = text.substr(start, pos - start);
      const long long value = parse_integer(token, start, "malformed cycle entry");
      if (value < 0 || value > 100000)
        throw ParseError("cycle entry out of range", std::string(token), start);
      for (Point seen : cycle)
        if (seen == static_cast<Point>(value))
          throw ParseError("repeated entry in cycle", std::string(token), start);
      cycle.push_back(static_cast<Point>(value));
      skip();
      if (pos < text.size() && text[pos] == ',')
        ++pos;
    }
    cycles.push_back(std::move(cycle));
    skip();
  }
  return Permutation::from_cycles(cycles);
}

std::string format_cycles(const Permutation& p)
{
  const auto decomposition = cycle_decomposition(p);
  if (decomposition.cycles.empty())
    return "()";
  std::string out;
  for (const auto& c : decomposition.cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0)
        out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

Permutation permutation_from_json(const Json& j)
{
  if (!j.is_object() || !j.contains("map") || !j.at("map").is_object())
    throw ParseError("permutation JSON needs an object field \"map\"", j.dump(), 0);
  std::map<Point, Point> entries;
  Point top = 0;
  for (const auto& [key, value] : j.at("map").items()) {
    const long long from = parse_integer(key, 0, "malformed permutation key");
    if (!value.is_number_integer() || from < 0 || value.get<long long>() < 0)
      throw ParseError("permutation entries must be nonnegative integers", key, 0);
    const auto to = static_cast<Point>(value.get<long long>());
    entries[static_cast<Point>(from)] = to;
    top = std::max({top, static_cast<Point>(from) + 1, to + 1});
  }
  std::vector<Point> images(top);
  for (Point x = 0; x < top; ++x)
    images[x] = x;
  std::set<Point> domain, range;
  for (const auto& [from, to] : entries) {
    images[from] = to;
    domain.insert(from);
    range.insert(to);
  }
  if (domain != range)
    throw ParseError("permutation map must have equal domain and range", j.dump(), 0);
  return Permutation::from_images(std::move(images));
}

Json permutation_to_json(const Permutation& p)
{
  Json map = Json::object();
  for (const auto& [from, to] : p.support_map())
    map[std::to_string(from)] = to;
  return Json{{"map", map}};
}

Permutation parse_permutation(std::string_view text)
{
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos]))
    ++pos;
  if (pos < text.size() && text[pos] == '{')
    return permutation_from_json(parse_json(text));
  return parse_cycles(text);
}

ThomaParams thoma_from_json(const Json& j)
{
  if (!j.is_object())
    throw ParseError("Thoma parameters must be a JSON object", j.dump(), 0);
  ThomaParams p;
  for (const char* field : {"a", "b"}) {
    if (!j.contains(field))
      continue;
    if (!j.at(field).is_array())
      throw ParseError(std::string("field \"") + field + "\" must be an array", j.at(field).dump(), 0);
    auto& target = std::string_view(field) == "a" ? p.a : p.b;
    for (const auto& x : j.at(field))
      target.push_back(rational_from_json(x, field));
  }
  return p;
}

Json thoma_to_json(const ThomaParams& p)
{
  Json a = Json::array(), b = Json::array();
  for (const auto& x : p.a)
    a.push_back(to_string(x));
  for (const auto& x : p.b)
    b.push_back(to_string(x));
  return Json{{"a", a}, {"b", b}};
}

GroupPolynomial polynomial_from_json(const Json& j)
{
  if (!j.is_array())
    throw ParseError("polynomial JSON must be an array of terms", j.dump(), 0);
  GroupPolynomial x;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("c") || !term.contains("w"))
      throw ParseError("polynomial term needs fields \"c\" and \"w\"", term.dump(), 0);
    const auto& c = term.at("c");
    if (!c.is_array() || c.size() != 2)
      throw ParseError("coefficient must be [re, im]", c.dump(), 0);
    std::vector<Letter> letters;
    for (const auto& k : term.at("w")) {
      if (!k.is_number_integer() || k.get<long long>() == 0)
        throw ParseError("braid letters must be nonzero integers", k.dump(), 0);
      letters.push_back(k.get<Letter>());
    }
    x.add_term(BraidWord(std::move(letters)), {rational_from_json(c[0], "c"), rational_from_json(c[1], "c")});
  }
  return x;
}

Json polynomial_to_json(const GroupPolynomial& x)
{
  Json out = Json::array();
  for (const auto& [w, c] : x.terms())
    out.push_back(Json{{"c", Json::array({to_string(c.re), to_string(c.im)})}, {"w", w.letters()}});
  return out;
}

MatrixModel model_from_json(const Json& j)
{
  if (!j.is_object() || !j.contains("weights") || !j.contains("sites"))
    throw ParseError("model config needs \"weights\" and \"sites\"", j.dump(), 0);
  std::vector<Rational> weights;
  for (const auto& w : j.at("weights"))
    weights.push_back(rational_from_json(w, "weights"));
  if (j.contains("d") && j.at("d").get<std::size_t>() != weights.size())
    throw ValidationError("model config: d = " + j.at("d").dump() + " but " + std::to_string(weights.size()) +
                          " weights given");
  const int sites = j.at("sites").get<int>();
  const std::size_t cap = j.contains("cap") ? j.at("cap").get<std::size_t>() : MatrixModel::default_cap;
  return MatrixModel(std::move(weights), sites, cap);
}

Json model_to_json(const MatrixModel& m)
{
  Json weights = Json::array();
  for (const auto& w : m.weights())
    weights.push_back(to_string(w));
  return Json{{"d", m.local_dimension()}, {"weights", weights}, {"sites", m.sites()}, {"cap", m.cap()}};
}

Json normal_form_to_json(const GarsideNormalForm& nf)
{
  Json factors = Json::array();
  for (const auto& f : nf.factors)
    factors.push_back(format_cycles(f));
  return Json{{"strands", nf.strands}, {"delta_power", nf.delta_power}, {"factors", factors}};
}

Json report_to_json(const SymmetryReport& r)
{
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back(Json{{"word", word_json(w.word)},
                             {"transformed", word_json(w.transformed)},
                             {"values", Json::array({complex_json(w.value), complex_json(w.transformed_value)})}});
  return Json{{"property", to_string(r.property)},
              {"maxlen", r.maxlen},
              {"maxidx", r.maxidx},
              {"tol", r.tol},
              {"verdict", r.pass ? "pass" : "fail"},
              {"witnesses", witnesses}};
}

Json parse_json(std::string_view text)
{
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    const std::string token = at < text.size() ? std::string(1, text[at]) : std::string("<end>");
    throw ParseError("malformed JSON", token, at);
  }
}

std::string read_text_argument(const std::string& argument)
{
  std::size_t pos = 0;
  while (pos < argument.size() && is_space(argument[pos]))
    ++pos;
  if (pos < argument.size() && (argument[pos] == '{' || argument[pos] == '['))
    return argument;
  std::ifstream in(argument);
  if (!in)
    throw Error("cannot open '" + argument + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace braidlab::io
