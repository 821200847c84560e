#include "odometer/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "odometer/analysis.hpp"
#include "odometer/codecs.hpp"
#include "odometer/interval_maps.hpp"
#include "odometer/odometers.hpp"
#include "odometer/trees.hpp"
#include "odometer/verify.hpp"
#include "odometer/word_actions.hpp"

namespace odometer::cli {

namespace {

using json = nlohmann::ordered_json;

// Invalid user input: reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Plain, Json, Csv };

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::Plain;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw UsageError("unknown format '" + name + "'");
}

std::string render_value(const Rational& x, std::optional<unsigned> decimal) {
  return decimal ? x.to_decimal(*decimal) : x.to_string();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Letter system_floor(System s) {
  switch (s) {
    case System::Cf:
      return 1;
    case System::Bcf:
      return 2;
    case System::Dyadic:
      return 0;
  }
  return 1;
}

Rational decode_in(System s, const FiniteWord& w) {
  const FiniteWord local = shift_alphabet(w, system_floor(s));
  switch (s) {
    case System::Cf:
      return cf_decode(local);
    case System::Bcf:
      return bcf_decode(local);
    case System::Dyadic:
      return dyadic_decode(local);
  }
  return Rational(0);
}

// enumerate -------------------------------------------------------------------

struct EnumerateOptions {
  std::string system;
  std::size_t count = 0;
  std::string offset;
  std::string format = "plain";
  std::optional<unsigned> decimal;
};

int run_enumerate(const EnumerateOptions& opt, std::ostream& out) {
  const System system = parse_system(opt.system);
  const std::optional<Offset> offset = opt.offset.empty() ? std::nullopt : std::optional(parse_offset(opt.offset));
  const Format format = parse_format(opt.format);
  const auto values = enumerate_rationals(system, opt.count, offset);

  if (format == Format::Csv) out << "n,word,value\n";
  for (std::size_t n = 0; n < values.size(); ++n) {
    const std::string value = render_value(values[n], opt.decimal);
    switch (format) {
      case Format::Plain:
        out << value << '\n';
        break;
      case Format::Json: {
        const auto word = system_word(system, values[n]);
        json row{{"n", n}, {"word", word ? json(word->letters()) : json(nullptr)}, {"value", values[n].to_string()}};
        if (opt.decimal) row["decimal"] = value;
        out << row.dump() << '\n';
        break;
      }
      case Format::Csv: {
        const auto word = system_word(system, values[n]);
        out << n << ',' << csv_quote(word ? word->to_string() : "") << ',' << value << '\n';
        break;
      }
    }
  }
  return kSuccess;
}

// orbit -----------------------------------------------------------------------

struct OrbitOptions {
  std::string map;
  std::string start;
  std::size_t steps = 0;
  std::string policy = "topdown";
  std::int64_t k = 1;
  std::string boundary = "right";
  std::string format = "plain";
  std::optional<unsigned> decimal;
};

using Point = std::variant<FiniteWord, TailWord, Rational>;

json point_json(const Point& p) {
  if (const auto* w = std::get_if<FiniteWord>(&p)) return json(w->letters());
  if (const auto* t = std::get_if<TailWord>(&p))
    return json{{"pre", t->preperiod()}, {"per", t->period()}, {"floor", t->floor()}};
  return json(nullptr);
}

int run_orbit(const OrbitOptions& opt, std::ostream& out) {
  const Format format = parse_format(opt.format);
  if (format == Format::Csv) throw UsageError("orbit supports plain and json output");
  const Boundary boundary = parse_boundary(opt.boundary);
  const Policy policy = parse_policy(opt.policy);
  if (opt.k < 0) throw UsageError("--k must be non-negative");

  Point point = Rational(0);
  std::function<std::optional<Point>(const Point&)> next;
  const std::string& m = opt.map;
  const bool tail_syntax = opt.start.find(';') != std::string::npos;

  if (m == "O") {
    TailWord w = TailWord::parse(0, opt.start);
    if (!w.is_binary()) throw UsageError("the dyadic odometer needs a binary word");
    point = w;
    next = [](const Point& p) -> std::optional<Point> { return dyadic_step(std::get<TailWord>(p)); };
  } else if (m == "O0" || m == "Ok") {
    const Letter floor = m == "O0" ? 0 : opt.k;
    if (tail_syntax) {
      point = TailWord::parse(floor, opt.start);
      next = [](const Point& p) -> std::optional<Point> { return baire_step(std::get<TailWord>(p)); };
    } else {
      point = parse_word(floor, opt.start);
      next = [policy](const Point& p) -> std::optional<Point> { return step(std::get<FiniteWord>(p), policy); };
    }
  } else {
    point = Rational::parse(opt.start);
    const std::int64_t k = opt.k;
    if (m == "OG") {
      next = [boundary](const Point& p) -> std::optional<Point> { return gauss_odometer(std::get<Rational>(p), boundary); };
    } else if (m == "OR") {
      next = [](const Point& p) -> std::optional<Point> { return renyi_odometer(std::get<Rational>(p)); };
    } else if (m == "OGk") {
      next = [k, boundary](const Point& p) -> std::optional<Point> {
        return k_gauss_odometer(std::get<Rational>(p), k, boundary);
      };
    } else if (m == "gauss") {
      next = [](const Point& p) -> std::optional<Point> {
        const auto& x = std::get<Rational>(p);
        if (x.is_zero()) return std::nullopt;
        return gauss(x);
      };
    } else if (m == "renyi") {
      next = [](const Point& p) -> std::optional<Point> { return renyi(std::get<Rational>(p)); };
    } else if (m == "interval-dyadic") {
      next = [](const Point& p) -> std::optional<Point> { return dyadic_interval_step(std::get<Rational>(p)); };
    } else {
      throw UsageError("unknown map '" + m + "'");
    }
  }

  std::optional<Point> current = point;
  for (std::size_t n = 0; n <= opt.steps && current; ++n) {
    const Point& p = *current;
    if (format == Format::Plain) {
      if (const auto* w = std::get_if<FiniteWord>(&p)) out << w->to_string();
      else if (const auto* t = std::get_if<TailWord>(&p)) out << t->to_string();
      else out << render_value(std::get<Rational>(p), opt.decimal);
      out << '\n';
    } else {
      json row{{"n", n}};
      if (const auto* x = std::get_if<Rational>(&p)) {
        row["value"] = x->to_string();
        if (opt.decimal) row["decimal"] = x->to_decimal(*opt.decimal);
      } else {
        row["word"] = point_json(p);
      }
      out << row.dump() << '\n';
    }
    if (n < opt.steps) current = next(p);
  }
  return kSuccess;
}

// tree ------------------------------------------------------------------------

struct TreeOptions {
  Letter floor = 1;
  std::int64_t levels = 4;
  std::string root;
  std::string values;
  bool mirror = false;
  std::string format = "rows";
};

int run_tree(const TreeOptions& opt, std::ostream& out) {
  if (opt.floor < 0) throw UsageError("--floor must be non-negative");
  if (opt.levels < 1) throw UsageError("--levels must be positive");
  const FiniteWord root = opt.root.empty() ? FiniteWord(opt.floor, {opt.floor}) : parse_word(opt.floor, opt.root);

  LeafValue value;
  if (!opt.values.empty()) {
    const System system = parse_system(opt.values);
    if (system_floor(system) != opt.floor)
      throw UsageError("--values " + opt.values + " needs --floor " + std::to_string(system_floor(system)));
    value = [system](const FiniteWord& w) -> std::optional<Rational> { return decode_in(system, w); };
  }

  if (opt.format == "rows") {
    out << render_rows(subtree_rows(root, opt.levels, opt.mirror), value);
  } else if (opt.format == "indent") {
    out << render_indented(root, opt.levels, value, opt.mirror);
  } else if (opt.format == "json") {
    out << render_json_rows(subtree_rows(root, opt.levels, opt.mirror), value);
  } else {
    throw UsageError("unknown tree format '" + opt.format + "'");
  }
  return kSuccess;
}

// codec -----------------------------------------------------------------------

struct CodecOptions {
  std::string from;
  std::string to;
  std::string input;
};

int run_codec(const CodecOptions& opt, std::ostream& out) {
  // A word in transit carries the floor of the system that produced it and is
  // shifted onto the floor of the target system.
  std::optional<FiniteWord> word;
  std::optional<System> source;
  if (opt.from == "word") {
    if (opt.to == "word") throw UsageError("--from word --to word is not a conversion");
    const Letter floor = system_floor(parse_system(opt.to));
    word = parse_word(floor, opt.input);
  } else {
    source = parse_system(opt.from);
    const Rational x = Rational::parse(opt.input);
    if (*source == System::Bcf && x.is_zero()) {
      if (opt.to == "word") {
        out << bcf_tail_form(CanonicalBCF::zero()).to_string() << '\n';
        return kSuccess;
      }
      if (opt.to == "bcf") {
        out << "0\n";
        return kSuccess;
      }
      throw UsageError("0 has no finite backward continued fraction word");
    }
    word = system_word(*source, x);
    if (!word) throw UsageError(opt.input + " has no word in the " + opt.from + " system");
  }

  if (opt.to == "word") {
    out << word->to_string() << '\n';
  } else {
    out << decode_in(parse_system(opt.to), *word).to_string() << '\n';
  }
  return kSuccess;
}

// verify ----------------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "all";
  unsigned budget = 12;
};

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  const std::vector<Suite> suites = parse_suites(opt.suite);
  if (opt.budget < 4) throw UsageError("--budget must be at least 4");
  bool ok = true;
  for (const SuiteResult& r : run_suites(suites, opt.budget)) {
    for (const CaseResult& c : r.cases) {
      out << (c.passed ? "PASS " : "FAIL ") << to_string(r.suite) << ": " << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ')';
      out << '\n';
    }
    out << to_string(r.suite) << ": " << (r.passed() ? "ok" : "FAILED") << " in " << std::fixed << std::setprecision(2)
        << r.seconds << "s\n";
    out.unsetf(std::ios::fixed);
    ok = ok && r.passed();
  }
  return ok ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odometers on the Baire space and their tree and interval realizations"};
  app.require_subcommand(1);

  EnumerateOptions en;
  auto* enumerate = app.add_subcommand("enumerate", "Rationals in odometer order");
  enumerate->add_option("--system", en.system, "cf | bcf | dyadic")->required();
  enumerate->add_option("--count", en.count, "Number of terms")->required();
  enumerate->add_option("--offset", en.offset, "root | zero (default: zero for bcf, root otherwise)");
  enumerate->add_option("--format", en.format, "plain | json | csv");
  enumerate->add_option("--decimal", en.decimal, "Also render values to BITS binary places");

  OrbitOptions orb;
  auto* orbit_cmd = app.add_subcommand("orbit", "Iterate a map");
  orbit_cmd->add_option("--map", orb.map, "O | O0 | Ok | OG | OR | OGk | gauss | renyi | interval-dyadic")->required();
  orbit_cmd->add_option("--start", orb.start, "Word \"(4,2,1)\", infinite word \"pre;per\", or p/q")->required();
  orbit_cmd->add_option("--steps", orb.steps, "Number of iterations")->required();
  orbit_cmd->add_option("--policy", orb.policy, "cyclic | topdown | subtree (finite words)");
  orbit_cmd->add_option("--k", orb.k, "Alphabet floor for Ok and OGk");
  orbit_cmd->add_option("--boundary", orb.boundary, "right | left (OG, OGk)");
  orbit_cmd->add_option("--format", orb.format, "plain | json");
  orbit_cmd->add_option("--decimal", orb.decimal, "Render values to BITS binary places");

  TreeOptions tr;
  auto* tree = app.add_subcommand("tree", "Print levels of an odometric tree");
  tree->add_option("--floor", tr.floor, "Alphabet floor");
  tree->add_option("--levels", tr.levels, "Number of levels")->required();
  tree->add_option("--root", tr.root, "Subtree root word");
  tree->add_option("--values", tr.values, "Label leaves by cf | bcf | dyadic values");
  tree->add_flag("--mirror", tr.mirror, "Reverse every level");
  tree->add_option("--format", tr.format, "rows | indent | json");

  CodecOptions co;
  auto* codec = app.add_subcommand("codec", "Convert between words and rationals");
  codec->add_option("--from", co.from, "cf | bcf | dyadic | word")->required();
  codec->add_option("--to", co.to, "cf | bcf | dyadic | word")->required();
  codec->add_option("input", co.input, "p/q or a word")->required();

  VerifyOptions ve;
  auto* verify_cmd = app.add_subcommand("verify", "Run self-check suites");
  verify_cmd->add_option("--suite", ve.suite, "conjugacy | renorm | counting | oracles | periods | distribution | all");
  verify_cmd->add_option("--budget", ve.budget, "Sweep depth (12 = full size)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*enumerate) return run_enumerate(en, out);
    if (*orbit_cmd) return run_orbit(orb, out);
    if (*tree) return run_tree(tr, out);
    if (*codec) return run_codec(co, out);
    if (*verify_cmd) return run_verify(ve, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace odometer::cli
