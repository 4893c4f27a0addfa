#include <CLI11.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "r3v/cyclic_r.hpp"
#include "r3v/fsd.hpp"
#include "r3v/io.hpp"
#include "r3v/verify.hpp"
#include "r3v/wenum.hpp"

using json = nlohmann::json;
using namespace r3v;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  u32 q = 3;
  bool q_given = false;
  u64 seed = 42;
  u64 budget = kDefaultBudget;
  std::string format = "text";
};

template <class F>
auto flag_value(const std::string& flag, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Ring make_ring(u32 q) {
  return flag_value("--q", [&] { return Ring(q); });
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::string weights_text(const WeightEnumerator& e) {
  std::string out = "{";
  bool first = true;
  for (std::size_t w = 0; w < e.counts.size(); ++w) {
    if (!e.counts[w]) continue;
    out += (first ? "" : ",") + std::to_string(w) + ":" + std::to_string(e.counts[w]);
    first = false;
  }
  return out + "}";
}

std::string code_text(const LinearCodeR& c) {
  std::ostringstream os;
  write_code_file(os, to_code_file(c));
  return os.str();
}

json generators_json(const LinearCodeR& c) {
  json gens = json::array();
  for (const auto& r : c.generators()) gens.push_back(format_vector(r));
  return gens;
}

std::string size_text(u32 q, std::size_t k) {
  using boost::multiprecision::cpp_int;
  return cpp_int(boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(k))).str();
}

// --------------------------------------------------------------- code input

struct CodeInput {
  std::string file;
  std::vector<std::string> gens;
  std::size_t n = 0;

  void add_to(CLI::App* app) {
    app->add_option("--code-file", file, "code file: header 'q=<q> n=<n>', one generator per line");
    app->add_option("--gen", gens, "generator row of ring elements, repeatable");
    app->add_option("--n", n, "code length (needed only with no generators)");
  }

  LinearCodeR load(Globals& g) const {
    if (!file.empty()) {
      if (!gens.empty()) throw UsageError("--gen: cannot be combined with --code-file");
      const CodeFile cf = flag_value("--code-file", [&] { return load_code_file(file); });
      if (g.q_given && cf.q != g.q)
        throw UsageError("--q: " + std::to_string(g.q) + " differs from q=" + std::to_string(cf.q) + " in " + file);
      g.q = cf.q;
      return LinearCodeR(Ring(cf.q), cf.n, cf.rows);
    }
    const Ring ring = make_ring(g.q);
    std::vector<RingVector> rows;
    for (const auto& s : gens) rows.push_back(flag_value("--gen", [&] { return parse_vector(ring, s); }));
    std::size_t len = rows.empty() ? n : rows.front().size();
    for (const auto& r : rows)
      if (r.size() != len) throw UsageError("--gen: rows have different lengths");
    if (n && n != len) throw UsageError("--n: " + std::to_string(n) + " differs from generator length");
    if (len == 0) throw UsageError("--gen: no code given (use --code-file or --gen)");
    return LinearCodeR(ring, len, rows);
  }
};

// --------------------------------------------------------------------- gray

struct GrayCmd {
  std::string element, vector, image;
};

int run_gray(Globals& g, const GrayCmd& c) {
  const Ring ring = make_ring(g.q);
  if (!c.image.empty()) {
    std::vector<u32> coords;
    {
      std::string s = c.image;
      for (char& ch : s)
        if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
      std::istringstream is(s);
      long long x;
      while (is >> x) {
        if (x < 0 || x >= static_cast<long long>(g.q)) throw UsageError("--image: coordinate out of range [0, q)");
        coords.push_back(static_cast<u32>(x));
      }
      if (!is.eof()) throw UsageError("--image: not a list of integers");
    }
    const RingVector x = flag_value("--image", [&] { return from_gray_vector(ring, coords); });
    emit(g, {{"preimage", format_vector(x)}, {"lee_weight", lee_weight(ring, x)}},
         format_vector(x) + " weight " + std::to_string(lee_weight(ring, x)) + "\n");
    return 0;
  }
  RingVector x;
  if (!c.element.empty())
    x = {flag_value("--element", [&] { return parse_elem(ring, c.element); })};
  else if (!c.vector.empty())
    x = flag_value("--vector", [&] { return parse_vector(ring, c.vector); });
  else
    throw UsageError("--element: one of --element, --vector, --image is required");
  const auto img = gray_vector(ring, x);
  std::string s = "[";
  for (std::size_t i = 0; i < img.size(); ++i) s += (i ? "," : "") + std::to_string(img[i]);
  s += "]";
  const int w = lee_weight(ring, x);
  emit(g, {{"input", format_vector(x)}, {"gray", img}, {"lee_weight", w}}, s + " weight " + std::to_string(w) + "\n");
  return 0;
}

// ------------------------------------------------------------------- weight

struct WeightCmd {
  std::string vector;
  CodeInput code;
  std::string strategy = "auto";
};

LeeDistance auto_distance(const LinearCodeR& c, u64 budget) {
  try {
    return min_lee_distance(c, DistanceStrategy::GrayImage, budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchSpaceTooLarge) throw;
  }
  if (c.ring().q() % 2) {
    try {
      return min_lee_distance(c, DistanceStrategy::CrtSplit, budget);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchSpaceTooLarge) throw;
    }
    return min_lee_distance(c, DistanceStrategy::ComponentLemma, budget);
  }
  throw Error(ErrorCode::SearchSpaceTooLarge, "code too large for exhaustive distance within budget");
}

LeeDistance distance(const LinearCodeR& c, const std::string& strategy, u64 budget) {
  static const std::map<std::string, DistanceStrategy> m{{"exhaustive", DistanceStrategy::Exhaustive},
                                                         {"gray-image", DistanceStrategy::GrayImage},
                                                         {"lemma5", DistanceStrategy::ComponentLemma},
                                                         {"crt-split", DistanceStrategy::CrtSplit}};
  if (strategy == "auto") return auto_distance(c, budget);
  return min_lee_distance(c, m.at(strategy), budget);
}

json params_json(const LinearCodeR& c, const LeeDistance& d) {
  return {{"length", 3 * c.length()},
          {"dimension", gray_image_code(c).dimension()},
          {"distance", d.distance},
          {"provenance", d.provenance}};
}

std::string params_text(const LinearCodeR& c, const LeeDistance& d) {
  return "[" + std::to_string(3 * c.length()) + "," + std::to_string(gray_image_code(c).dimension()) + "," +
         std::to_string(d.distance) + "]_" + std::to_string(c.ring().q()) + " (" + d.provenance + ")";
}

int run_weight(Globals& g, const WeightCmd& c) {
  if (!c.vector.empty()) {
    const Ring ring = make_ring(g.q);
    const RingVector x = flag_value("--vector", [&] { return parse_vector(ring, c.vector); });
    const int lee = lee_weight(ring, x), ham = hamming_weight_r(x);
    emit(g, {{"vector", format_vector(x)}, {"lee_weight", lee}, {"hamming_weight", ham}},
         "lee " + std::to_string(lee) + "\nhamming " + std::to_string(ham) + "\n");
    return 0;
  }
  const LinearCodeR code = c.code.load(g);
  if (code.size_exponent() == 0) throw UsageError("--gen: the zero code has no minimum distance");
  const LeeDistance d = distance(code, c.strategy, g.budget);
  emit(g, params_json(code, d), params_text(code, d) + "\n");
  return 0;
}

// --------------------------------------------------------------------- dual

struct DualCmd {
  CodeInput code;
  std::string method = "auto";
  bool check = false;
};

int run_dual(Globals& g, const DualCmd& c) {
  static const std::map<std::string, DualMethod> m{{"auto", DualMethod::Auto},
                                                   {"kernel", DualMethod::Kernel},
                                                   {"crt", DualMethod::Crt},
                                                   {"brute-force", DualMethod::BruteForce}};
  const LinearCodeR code = c.code.load(g);
  const LinearCodeR d = flag_value("--method", [&] { return dual(code, m.at(c.method), g.budget); });
  bool agree = true;
  if (c.check) {
    agree = d == dual(code, DualMethod::Kernel, g.budget) && d == dual(code, DualMethod::BruteForce, g.budget);
    if (code.ring().q() % 2) agree = agree && d == dual(code, DualMethod::Crt, g.budget);
  }
  const auto cls = classify_duality(code, g.budget);
  json j{{"q", code.ring().q()},
         {"n", code.length()},
         {"dual_generators", generators_json(d)},
         {"log_q_size", d.size_exponent()},
         {"self_orthogonal", cls.self_orthogonal},
         {"self_dual", cls.self_dual},
         {"formally_self_dual", cls.formally_self_dual}};
  std::string text = code_text(d);
  text += "# size " + size_text(code.ring().q(), d.size_exponent()) + ", self-orthogonal " +
          (cls.self_orthogonal ? "yes" : "no") + ", self-dual " + (cls.self_dual ? "yes" : "no") +
          ", formally self-dual " + (cls.formally_self_dual ? "yes" : "no") + "\n";
  if (c.check) {
    j["routes_agree"] = agree;
    text += std::string("# dual routes ") + (agree ? "agree" : "DISAGREE") + "\n";
  }
  emit(g, j, text);
  return agree ? 0 : 1;
}

// --------------------------------------------------------------------- enum

struct EnumCmd {
  CodeInput code;
  std::string kind = "lee";
  bool macwilliams = false;
};

int run_enum(Globals& g, const EnumCmd& c) {
  const LinearCodeR code = c.code.load(g);
  const Ring& ring = code.ring();
  json j;
  std::string text;
  if (c.kind == "lee" || c.kind == "hamming") {
    const bool lee = c.kind == "lee";
    const WeightEnumerator e = lee ? lee_enumerator(code, g.budget) : hamming_enumerator_r(code, g.budget);
    j = to_json(e, code.length(), c.kind);
    text = weights_text(e) + "\n";
    if (c.macwilliams) {
      const WeightEnumerator t = lee ? macwilliams_lee(e, code.size(), ring.q())
                                     : macwilliams_hamming(e, code.size(), ring.size());
      const LinearCodeR d = dual(code, DualMethod::Auto, g.budget);
      const WeightEnumerator direct = lee ? lee_enumerator(d, g.budget) : hamming_enumerator_r(d, g.budget);
      j["dual_by_transform"] = to_json(t, code.length(), c.kind)["counts"];
      j["transform_matches_dual"] = t == direct;
      text += "dual " + weights_text(t) + (t == direct ? "" : " MISMATCH") + "\n";
      emit(g, j, text);
      return t == direct ? 0 : 1;
    }
  } else if (c.kind == "swe") {
    const auto e = symmetrized_enumerator(code, g.budget);
    j = to_json(e);
    for (const auto& [a, n] : e.counts)
      text += "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "," +
              std::to_string(a[3]) + "):" + std::to_string(n) + "\n";
  } else {
    const auto e = complete_enumerator(code, g.budget);
    j = to_json(e);
    for (const auto& [t, n] : e.counts) {
      std::string key;
      for (std::size_t i = 0; i < t.size(); ++i) key += (i ? "," : "") + std::to_string(t[i]);
      text += "(" + key + "):" + std::to_string(n) + "\n";
    }
  }
  emit(g, j, text);
  return 0;
}

// ------------------------------------------------------------------- cyclic

struct CyclicCmd {
  std::size_t n = 0;
  std::string f1 = "1", f2 = "1", f3 = "1";
  std::string mode = "idempotent";
  std::string search;
  bool list = false;
};

int run_cyclic(Globals& g, const CyclicCmd& c) {
  const Ring ring = make_ring(g.q);
  if (c.n == 0) throw UsageError("--n: length must be positive");
  if (c.list) {
    const auto divs = monic_divisors_of_xn_minus_1(ring.field(), c.n);
    json arr = json::array();
    std::string text;
    for (const auto& d : divs) {
      arr.push_back(format_polynomial(d));
      text += format_polynomial(d) + "\n";
    }
    emit(g, {{"q", g.q}, {"n", c.n}, {"divisors", arr}}, text);
    return 0;
  }
  if (c.search == "self-dual") {
    const auto s = self_dual_cyclic_search(ring, c.n, g.budget);
    json j = to_json(s);
    j["q"] = g.q;
    j["n"] = c.n;
    std::string text = s.witness_code ? "witness\n" + code_text(*s.witness_code) : std::string("no self-dual cyclic code\n");
    text += "# tested " + std::to_string(s.tested) + ", exhausted " + (s.exhausted ? "yes" : "no") + "\n";
    emit(g, j, text);
    return 0;
  }
  if (!c.search.empty()) throw UsageError("--search: expected 'self-dual'");
  auto poly = [&](const std::string& flag, const std::string& s) {
    return flag_value(flag, [&] { return parse_polynomial(ring.field(), s); });
  };
  const Polynomial p1 = poly("--f1", c.f1), p2 = poly("--f2", c.f2), p3 = poly("--f3", c.f3);
  const Polynomial target = Polynomial::xn_minus_1(ring.field(), c.n);
  for (const auto& [flag, p] : {std::pair{"--f1", &p1}, std::pair{"--f2", &p2}, std::pair{"--f3", &p3}})
    if (p->is_zero() || !divides(*p, target))
      throw UsageError(std::string(flag) + ": " + format_polynomial(*p) + " does not divide x^" + std::to_string(c.n) + "-1");
  const CyclicSpecR spec = flag_value("--f1/--f2/--f3", [&] { return make_cyclic_spec(c.n, p1, p2, p3); });
  const CombineMode mode = c.mode == "paper-literal" ? CombineMode::PaperLiteral : CombineMode::Idempotent;
  const LinearCodeR code = flag_value("--mode", [&] { return cyclic_code_r(ring, spec, mode); });
  const std::size_t formula = cyclic_size_exponent(spec);
  const std::size_t k = code.size_exponent();
  json j = to_json(spec);
  j["q"] = g.q;
  j["mode"] = c.mode;
  j["size"] = size_text(g.q, k);
  j["log_q_size"] = k;
  j["formula_log_q_size"] = formula;
  j["cyclic"] = is_cyclic(code);
  j["generators"] = generators_json(code);
  j["dual"] = to_json(cyclic_dual_spec(spec));
  std::string text = "size " + size_text(g.q, k) + " = " + std::to_string(g.q) + "^" + std::to_string(k) + "\n";
  text += "formula " + std::to_string(g.q) + "^" + std::to_string(formula) + (k == formula ? "" : " (differs)") + "\n";
  text += std::string("cyclic ") + (is_cyclic(code) ? "yes" : "no") + "\n" + code_text(code);
  emit(g, j, text);
  return 0;
}

// ---------------------------------------------------------------- construct

struct ConstructCmd {
  std::string kind;
  std::string matrix_file;
  std::vector<std::string> rows;
  std::string mirror = "none";
  std::string first_row, alpha, omega;
  std::string strategy = "auto";
};

Construction build_construction(const Globals& g, const Ring& ring, const ConstructCmd& c) {
  if (c.kind == "a") {
    std::vector<RingVector> rows;
    if (!c.matrix_file.empty()) {
      const CodeFile cf = flag_value("--matrix-file", [&] { return load_code_file(c.matrix_file); });
      if (cf.q != g.q)
        throw UsageError("--matrix-file: q=" + std::to_string(cf.q) + " but --q " + std::to_string(g.q));
      rows = cf.rows;
    } else {
      for (const auto& r : c.rows) rows.push_back(flag_value("--row", [&] { return parse_vector(ring, r); }));
    }
    if (rows.empty()) throw UsageError("--matrix-file: construction a needs --matrix-file or --row");
    if (c.mirror == "lower")
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size() && j < rows[i].size(); ++j) rows[i][j] = rows[j][i];
    return flag_value("--matrix-file", [&] {
      return construction_a(ring, c.mirror == "none" ? SymmetricMatrixR(rows) : SymmetricMatrixR::from_upper(rows));
    });
  }
  if (c.first_row.empty()) throw UsageError("--first-row: required for construction " + c.kind);
  const CirculantSpecR circ{flag_value("--first-row", [&] { return parse_vector(ring, c.first_row); })};
  if (c.kind == "b") return flag_value("--first-row", [&] { return construction_b(ring, circ); });
  if (c.alpha.empty() || c.omega.empty()) throw UsageError("--alpha: construction c needs --alpha and --omega");
  const BorderedSpecR spec{flag_value("--alpha", [&] { return parse_elem(ring, c.alpha); }),
                           flag_value("--omega", [&] { return parse_elem(ring, c.omega); }), circ};
  return flag_value("--first-row", [&] { return construction_c(ring, spec); });
}

int run_construct(Globals& g, const ConstructCmd& c) {
  const Ring ring = make_ring(g.q);
  const Construction con = build_construction(g, ring, c);
  const auto check = isodual_witness_check(con.code, con.witness);
  const LeeDistance d = distance(con.code, c.strategy, g.budget);
  json j = to_json(con);
  j["parameters"] = params_json(con.code, d);
  j["companion_is_dual"] = check.companion_is_dual;
  j["witness_maps_to_dual"] = check.witness_maps_to_dual;
  std::string text = code_text(con.code);
  text += "# " + params_text(con.code, d) + "\n";
  text += std::string("# isodual witness ") + (check.ok() ? "verified" : "FAILED") + "\n";
  emit(g, j, text);
  return check.ok() ? 0 : 1;
}

// ------------------------------------------------------------- verify-paper

struct VerifyCmd {
  std::string scope = "all";
  std::string out;
  bool timings = false;
};

int run_verify(Globals& g, const VerifyCmd& c) {
  VerificationOptions o;
  o.scope = c.scope;
  o.seed = g.seed;
  o.budget = g.budget;
  o.timings = c.timings;
  const auto report = flag_value("--scope", [&] { return run_verification_suite(o); });
  const std::string j = report.to_json().dump(2) + "\n";
  if (!c.out.empty()) {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw UsageError("--out: cannot write " + c.out);
    f << j;
  }
  if (g.format == "json")
    std::cout << j;
  else
    std::cout << report.to_text();
  return report.consistent() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear codes over F_q + vF_q + v^2F_q with v^3 = v"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  auto* qopt = app.add_option("--q", g.q, "field size (prime)");
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--budget", g.budget, "maximum number of words any enumeration may visit");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));

  GrayCmd gray;
  auto* gray_app = app.add_subcommand("gray", "Gray image of an element or vector, or preimage of an image");
  gray_app->add_option("--element", gray.element, "ring element, e.g. [1,0,2] or 1+2v^2");
  gray_app->add_option("--vector", gray.vector, "whitespace-separated ring elements");
  gray_app->add_option("--image", gray.image, "F_q vector of length 3n in Gray layout");

  WeightCmd weight;
  auto* weight_app = app.add_subcommand("weight", "Lee/Hamming weight of a vector or minimum Lee distance of a code");
  weight_app->add_option("--vector", weight.vector, "whitespace-separated ring elements");
  weight.code.add_to(weight_app);
  weight_app->add_option("--strategy", weight.strategy, "distance strategy")
      ->check(CLI::IsMember({"auto", "exhaustive", "gray-image", "lemma5", "crt-split"}));

  DualCmd dualc;
  auto* dual_app = app.add_subcommand("dual", "dual code and duality classification");
  dualc.code.add_to(dual_app);
  dual_app->add_option("--method", dualc.method, "dual route")
      ->check(CLI::IsMember({"auto", "kernel", "crt", "brute-force"}));
  dual_app->add_flag("--check", dualc.check, "cross-check all dual routes");

  EnumCmd en;
  auto* enum_app = app.add_subcommand("enum", "weight enumerators");
  en.code.add_to(enum_app);
  enum_app->add_option("--kind", en.kind, "enumerator kind")->check(CLI::IsMember({"lee", "hamming", "swe", "cwe"}));
  enum_app->add_flag("--macwilliams", en.macwilliams, "also transform to the dual and compare with the direct count");

  CyclicCmd cyc;
  auto* cyc_app = app.add_subcommand("cyclic", "cyclic codes from divisor triples of x^n - 1");
  cyc_app->add_option("--n", cyc.n, "length")->required();
  cyc_app->add_option("--f1", cyc.f1, "generator of the component at v = 1");
  cyc_app->add_option("--f2", cyc.f2, "generator of the component at v = -1");
  cyc_app->add_option("--f3", cyc.f3, "generator of the component at v = 0");
  cyc_app->add_option("--mode", cyc.mode, "combination")->check(CLI::IsMember({"idempotent", "paper-literal"}));
  cyc_app->add_option("--search", cyc.search, "'self-dual' searches all cyclic codes of length n");
  cyc_app->add_flag("--list-divisors", cyc.list, "list the monic divisors of x^n - 1");

  ConstructCmd con;
  auto* con_app = app.add_subcommand("construct", "isodual constructions: a symmetric, b circulant, c bordered");
  con_app->add_option("kind", con.kind, "a, b or c")->required()->check(CLI::IsMember({"a", "b", "c"}));
  con_app->add_option("--matrix-file", con.matrix_file, "code file holding the n x n matrix (a)");
  con_app->add_option("--row", con.rows, "matrix row, repeatable (a)");
  con_app->add_option("--mirror", con.mirror, "symmetrize from a triangle (a)")
      ->check(CLI::IsMember({"none", "upper", "lower"}));
  con_app->add_option("--first-row", con.first_row, "first row of the circulant (b, c)");
  con_app->add_option("--alpha", con.alpha, "corner entry (c)");
  con_app->add_option("--omega", con.omega, "border entry (c)");
  con_app->add_option("--strategy", con.strategy, "distance strategy")
      ->check(CLI::IsMember({"auto", "exhaustive", "gray-image", "lemma5", "crt-split"}));

  VerifyCmd ver;
  auto* ver_app = app.add_subcommand("verify-paper", "run every claim check and print the report");
  ver_app->add_option("--scope", ver.scope, "claim scope")
      ->check(CLI::IsMember({"all", "gray", "enumerators", "cyclic", "fsd", "examples"}));
  ver_app->add_option("--out", ver.out, "write the JSON report to a file");
  ver_app->add_flag("--timings", ver.timings, "include per-claim runtime (not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  g.q_given = qopt->count() > 0;

  try {
    if (*gray_app) return run_gray(g, gray);
    if (*weight_app) return run_weight(g, weight);
    if (*dual_app) return run_dual(g, dualc);
    if (*enum_app) return run_enum(g, en);
    if (*cyc_app) return run_cyclic(g, cyc);
    if (*con_app) return run_construct(g, con);
    if (*ver_app) return run_verify(g, ver);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::SearchSpaceTooLarge:
      case ErrorCode::TransformInconsistent:
        std::cerr << "error: " << e.what() << '\n';
        return 1;
      default:
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
  }
  return 2;
}
