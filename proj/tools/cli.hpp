#pragma once

// Command dispatch for the qtree tool. Kept separate from main() so the test
// suite can drive it in-process.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtree/diagram.hpp"
#include "qtree/json.hpp"
#include "qtree/qtree.hpp"
#include "qtree/testing/truncated_tree.hpp"

namespace qtree::cli {

using io::Json;

inline const std::vector<std::string>& verbs()
{
  static const std::vector<std::string> v{
      "saturate", "base-points", "rees",     "closed-points", "desingularize",      "join",       "minimal-model",
      "min-incomparable", "classify", "factorize", "closure", "transform", "point-of-valuation", "generators", "emit-dot"};
  return v;
}

struct Options {
  std::string verb;
  std::string input = "-";
  bool pretty = false;
  bool dot = false;
  bool generators = false;
  bool henselian = false;
  bool svg = false;
  std::optional<std::size_t> truncate;
};

struct Output {
  Json json;
  std::string text;
  std::optional<std::string> dot;
  std::optional<std::string> svg;
};

namespace detail {

inline std::string read_input(const std::string& input, std::istream& in)
{
  if (input == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (input[first] == '{' || input[first] == '[')) return input;
  std::ifstream f(input);
  if (!f) throw Error(Errc::ParseError, "cannot open input file " + input);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline Json tagged(Json body)
{
  Json out{{"schema", io::kSchema}};
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

inline std::string text_of(const Point& p)
{
  std::ostringstream os;
  os << p;
  return os.str();
}

template <class T>
std::string streamed(const T& v)
{
  std::ostringstream os;
  os << v;
  return os.str();
}

inline std::string text_of(const PointSet& s)
{
  std::string out = "{";
  bool first = true;
  for (const auto& p : s) {
    out += (first ? "" : ", ") + text_of(p);
    first = false;
  }
  return out + "}";
}

/// Members of s on the truncated tree, using the input's own labels too.
inline Json enumerate(const SymbolicPointSet& s, std::size_t level, const std::set<Direction>& extra)
{
  auto alphabet = testing::default_alphabet();
  for (const auto& d : extra) {
    if (std::find(alphabet.begin(), alphabet.end(), d) == alphabet.end()) alphabet.push_back(d);
  }
  testing::TruncatedTree tree(level, alphabet);
  Json out = Json::array();
  for (const auto& p : tree.points()) {
    if (s.contains(p)) out.push_back(io::to_json(p));
  }
  return out;
}

template <class Range>
std::set<Direction> labels_of(const Range& points)
{
  std::set<Direction> out;
  for (const Point& p : points) out.insert(p.path().begin(), p.path().end());
  return out;
}

inline Output model_output(const NonsingularModel& m)
{
  Output o;
  o.json = tagged(io::to_json(m));
  o.text = "base points: " + text_of(m.base().points()) + "\nterminal: " + text_of(m.terminal()) +
           "\nclosed points: " + streamed(closed_points(m)) + "\n";
  o.dot = to_dot(m);
  return o;
}

inline Output monomial_output(const monomial::MonomialIdeal& i)
{
  Output o;
  Json body = io::to_json(i);
  body["ideal"] = monomial::to_text(i);
  o.json = tagged(std::move(body));
  o.text = monomial::to_text(i) + "\n";
  if (i.is_m_primary() && !i.is_unit()) o.svg = to_svg(monomial::newton_region(i));
  return o;
}

inline Output dispatch(const Options& opt, const Json& in)
{
  const std::string& v = opt.verb;
  if (v == "saturate") {
    const auto sat = saturate(io::complete_ideal_from_json(in));
    Output o;
    Json body = io::to_json(sat);
    o.text = streamed(sat) + "\n";
    if (opt.generators) {
      const auto gens = monomial::to_text(monomial::generators_for_ideal(sat));
      body["generators"] = gens;
      o.text += "generators: " + gens + "\n";
    }
    o.json = tagged(std::move(body));
    o.dot = to_dot(model_from_ideal(sat));
    return o;
  }
  if (v == "base-points") {
    const auto j = io::complete_ideal_from_json(in);
    const auto b = base_points(j);
    Output o;
    o.json = tagged(Json{{"base", io::to_json(b)}, {"terminal", io::points_to_json(b.terminal())}});
    o.text = "base points: " + text_of(b.points()) + "\nterminal: " + text_of(b.terminal()) + "\n";
    o.dot = to_dot(NonsingularModel(b));
    return o;
  }
  if (v == "rees") {
    const auto r = rees_valuations(io::complete_ideal_from_json(in));
    Output o;
    Json arr = Json::array();
    for (const auto& val : r) {
      arr.push_back(Json{{"center", io::to_json(val.center)}});
      o.text += "ord" + text_of(val.center) + "\n";
    }
    o.json = tagged(Json{{"rees", std::move(arr)}});
    return o;
  }
  if (v == "closed-points") {
    const auto m = io::model_from_json(in);
    const auto u = closed_points(m);
    Output o;
    Json body = io::to_json(u);
    if (opt.truncate) body["enumerated"] = enumerate(u, *opt.truncate, labels_of(m.base()));
    o.json = tagged(std::move(body));
    o.text = streamed(u) + "\n";
    o.dot = to_dot(m);
    return o;
  }
  if (v == "desingularize") return model_output(minimal_desingularization(io::complete_ideal_from_json(in)));
  if (v == "join") {
    const Json& arr = in.is_array() ? in : io::detail::array_field(in, "models");
    if (arr.empty()) throw Error(Errc::EmptyInput, "join needs at least one model");
    NonsingularModel m = io::model_from_json(arr[0]);
    for (std::size_t k = 1; k < arr.size(); ++k) m = join(m, io::model_from_json(arr[k]));
    return model_output(m);
  }
  if (v == "minimal-model") {
    return model_output(minimal_model_containing(io::points_from_json(io::detail::field(in, "points"))));
  }
  if (v == "min-incomparable") {
    const auto pts = io::points_from_json(io::detail::field(in, "points"));
    const auto u = minimal_incomparable_set(pts);
    Output o;
    Json body = io::to_json(u);
    if (opt.truncate) body["enumerated"] = enumerate(u, *opt.truncate, labels_of(pts));
    o.json = tagged(std::move(body));
    o.text = streamed(u) + "\n";
    return o;
  }
  if (v == "classify") {
    auto d = io::descriptor_from_json(in);
    d.henselian = d.henselian || opt.henselian;
    const auto c = classify(d);
    const auto complete = is_complete_representation(d);
    Json body = io::to_json(c);
    body["complete"] = to_string(complete.verdict);
    body["completeCitation"] = complete.citation;
    body["minimalPoints"] = io::to_json(minimal_points(d));
    Output o;
    o.json = tagged(std::move(body));
    o.text = "noetherian: yes\nmaximal ideals: " +
             (c.maximal_ideal_count ? std::to_string(*c.maximal_ideal_count) : std::string("infinitely many")) +
             "\nirredundant: " + std::string(to_string(c.irredundant.verdict)) + "  (" + c.irredundant.citation +
             ")\nessential: " + std::string(to_string(c.essential.verdict)) + "  (" + c.essential.citation +
             ")\ncomplete: " + std::string(to_string(complete.verdict)) + "\n";
    if (c.ring_identity) o.text += "ring: " + text_of(*c.ring_identity) + "\n";
    if (c.singularity) o.text += "singularity: " + *c.singularity + "\n";
    o.dot = to_dot(d.model);
    return o;
  }
  if (v == "factorize") {
    const auto i = io::monomial_ideal_from_json(in);
    const auto f = monomial::factorize(i);
    Output o;
    o.json = tagged(io::to_json(f));
    for (const auto& [p, m] : f.factors()) {
      o.text += "(" + monomial::to_text(monomial::simple_ideal(monomial::valuation_for_point(p))) + ") at " +
                text_of(p) + (m > 1 ? " ^" + std::to_string(m) : std::string()) + "\n";
    }
    if (!i.is_unit()) o.svg = to_svg(monomial::newton_region(i));
    return o;
  }
  if (v == "closure") return monomial_output(monomial::integral_closure(io::monomial_ideal_from_json(in)));
  if (v == "transform") {
    const Json& dir = io::detail::field(in, "dir");
    if (!dir.is_string()) throw Error(Errc::ParseError, "\"dir\" must be \"X\" or \"Y\"");
    return monomial_output(
        monomial::quadratic_transform(io::monomial_ideal_from_json(in), Direction(dir.get<std::string>())));
  }
  if (v == "point-of-valuation") {
    Output o;
    if (in.is_object() && in.contains("path")) {
      const auto val = monomial::valuation_for_point(io::point_from_json(in));
      o.json = tagged(io::to_json(val));
      o.text = streamed(val) + "\n";
    } else {
      const auto p = monomial::point_for_valuation(io::valuation_from_json(in));
      o.json = tagged(io::to_json(p));
      o.text = text_of(p) + "\n";
    }
    return o;
  }
  if (v == "generators") return monomial_output(monomial::generators_for_ideal(io::complete_ideal_from_json(in)));
  if (v == "emit-dot") {
    const NonsingularModel m = in.contains("base") ? io::model_from_json(in)
                                                   : minimal_desingularization(io::complete_ideal_from_json(in));
    Output o = model_output(m);
    o.json = Json();
    return o;
  }
  throw Error(Errc::ParseError, "unknown verb " + v);
}

}  // namespace detail

/// Runs one command. Exit status: 0 success, 1 domain error, 2 parse error.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Calculus for the quadratic tree of a 2-dimensional regular local ring", "qtree"};
  Options opt;
  app.add_option("verb", opt.verb, "operation to run")->required()->check(CLI::IsMember(verbs()));
  app.add_option("input", opt.input, "JSON file, inline JSON, or - for stdin");
  app.add_flag("--pretty", opt.pretty, "human-readable text instead of JSON");
  app.add_flag("--dot", opt.dot, "Graphviz output where a model is involved");
  app.add_flag("--svg", opt.svg, "Newton region as SVG (monomial verbs)");
  app.add_flag("--generators", opt.generators, "also print monomial generators (toric ideals only)");
  app.add_flag("--henselian", opt.henselian, "treat D as Henselian when classifying");
  app.add_option("--truncate", opt.truncate, "also enumerate members up to this level")->check(CLI::Range(0, 8));

  std::vector<const char*> argv{"qtree"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return 2;
  }

  try {
    const Json input = io::parse(detail::read_input(opt.input, in));
    Output o = detail::dispatch(opt, input);
    if (opt.verb == "emit-dot" || (opt.dot && o.dot)) {
      out << *o.dot;
    } else if (opt.svg && o.svg) {
      out << *o.svg;
    } else if (opt.pretty) {
      out << o.text;
    } else {
      out << o.json.dump(2) << '\n';
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n  (" << e.citation() << ")\n";
    return e.code() == Errc::ParseError ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qtree::cli
