#include "subword/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "subword/acceptance.hpp"
#include "subword/automata.hpp"
#include "subword/embeddings.hpp"
#include "subword/error.hpp"
#include "subword/genfun.hpp"
#include "subword/ncseries.hpp"
#include "subword/poset.hpp"
#include "subword/shelling.hpp"

namespace subword::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string u;
  std::string w;
  int d = 3;
  std::size_t max_len = 8;
  std::string format = "text";
  std::string kind;
  std::string alpha;
  std::size_t terms = 10;
  std::string route = "auto";
  std::string emit;
  bool normal = false;
  bool check = false;
  bool quick = false;
};

json integer_json(const Integer& c) { return json(static_cast<long long>(c)); }

json integers_json(const std::vector<Integer>& cs) {
  json out = json::array();
  for (const Integer& c : cs) out.push_back(integer_json(c));
  return out;
}

std::string join(const std::vector<Integer>& cs) {
  std::string out;
  for (const Integer& c : cs) out += (out.empty() ? "" : " ") + c.str();
  return out;
}

struct Pair {
  Word u;
  Word w;
  RestrictionParam d;
};

Pair restricted_pair(const Options& o) {
  const RestrictionParam d(o.d);
  Word u = Word::parse(o.u);
  Word w = Word::parse(o.w);
  require_restricted(u, d, "u");
  require_restricted(w, d, "w");
  return {std::move(u), std::move(w), d};
}

int cmd_mobius(const Options& o, std::ostream& out) {
  const Pair p = restricted_pair(o);
  out << "mu=" << mobius_formula(p.u, p.w, p.d) << " normal=" << count_d_normal(p.u, p.w, p.d)
      << " oracle=" << mobius_recursive(p.u, p.w, p.d) << "\n";
  return 0;
}

int cmd_interval(const Options& o, std::ostream& out) {
  const Pair p = restricted_pair(o);
  const Interval iv = interval(p.u, p.w, p.d);
  if (o.format == "json") {
    out << interval_to_json(iv).dump(2) << "\n";
  } else if (o.format == "dot") {
    out << interval_to_dot(iv);
  } else {
    out << iv.size() << " elements\n";
    for (const Word& v : iv.elements()) out << v.display() << "\n";
  }
  return 0;
}

int cmd_chains(const Options& o, std::ostream& out) {
  const Pair p = restricted_pair(o);
  const Interval iv = interval(p.u, p.w, p.d);
  if (o.format == "dot") {
    out << labeled_interval_to_dot(iv);
    return 0;
  }
  json rows = json::array();
  for (const MaximalChain& c : all_maximal_chains(iv)) {
    const ChainLabel lab = label_chain(c);
    const char tag = chain_tag(lab);
    std::vector<std::string> top_down;
    for (auto it = c.words.rbegin(); it != c.words.rend(); ++it) top_down.push_back(it->str());
    if (o.format == "json") {
      rows.push_back({{"chain", top_down}, {"labels", lab.labels}, {"tag", std::string(1, tag)}});
      continue;
    }
    std::string labels;
    for (std::size_t l : lab.labels) labels += (labels.empty() ? "" : ",") + std::to_string(l);
    std::string words;
    for (auto it = c.words.rbegin(); it != c.words.rend(); ++it) words += (words.empty() ? "" : " > ") + it->display();
    out << tag << " " << (labels.empty() ? "-" : labels) << " " << words << "\n";
  }
  if (o.format == "json") out << rows.dump(2) << "\n";
  return 0;
}

int cmd_embeddings(const Options& o, std::ostream& out) {
  const Word u = Word::parse(o.u);
  const Word w = Word::parse(o.w);
  json rows = json::array();
  if (o.normal) {
    const Pair p = restricted_pair(o);
    for (const Embedding& e : all_embeddings(u, w)) {
      if (is_d_normal(e, p.u, p.w, p.d)) rows.push_back(e);
    }
  } else {
    for (const Embedding& e : all_embeddings(u, w)) rows.push_back(e);
  }
  out << rows.dump() << "\n";
  return 0;
}

int cmd_series(const Options& o, std::ostream& out) {
  const RestrictionParam d(o.d);
  const Word u = Word::parse(o.u);
  const RegExpr e = o.kind == "zeta" ? build_Z(u, d) : build_M(u, d);
  const TruncatedSeries s = expand(e, o.max_len);
  if (o.format == "json") {
    json terms = json::array();
    for (const auto& [w, c] : s.terms()) terms.push_back({{"word", w.str()}, {"coeff", integer_json(c)}});
    out << json{{"kind", o.kind}, {"u", u.str()}, {"d", o.d}, {"max_len", o.max_len}, {"terms", terms}}.dump(2)
        << "\n";
  } else {
    for (const auto& [w, c] : s.terms()) out << w.display() << "\t" << c << "\n";
  }
  return 0;
}

int cmd_automaton(const Options& o, std::ostream& out) {
  const RestrictionParam d(o.d);
  const bool mobius_kind = o.kind == "mobius";
  const PairAutomaton A = mobius_kind ? build_mobius_automaton(d) : build_zeta_automaton(d);
  if (o.emit == "dot") {
    out << automaton_to_dot(A);
  } else {
    out << o.kind << " automaton d=" << o.d << ": " << A.vertex_names().size() << " vertices, " << A.arcs().size()
        << " arcs\n";
    for (const PairArc& a : A.arcs()) {
      out << A.vertex_names()[a.from] << " -> " << A.vertex_names()[a.to] << " " << arc_label(a.label) << "\n";
    }
  }
  if (!o.check) return 0;
  CriterionResult r = automaton_check(mobius_kind, d, o.max_len);
  out << (r.pass ? "check PASS: " : "check FAIL: ") << r.detail << "\n";
  return r.pass ? 0 : 3;
}

int cmd_genfun(const Options& o, std::ostream& out) {
  const RestrictionParam d(o.d);
  const Composition alpha = Composition::parse(o.alpha);
  const bool zeta = o.kind == "zeta";
  RationalFunction f = zeta ? zeta_genfun(alpha, d) : mobius_genfun(alpha, d);
  if (o.route == "closed") {
    f = zeta ? zeta_genfun_closed(alpha, d) : mobius_genfun_closed(alpha, d);
  } else if (o.route == "image") {
    f = zeta ? zeta_genfun_image(alpha, d) : mobius_genfun_image(alpha, d);
  }
  const std::vector<Integer> coeffs = series_coeffs(f, o.terms);
  if (o.format == "json") {
    out << json{{"num", integers_json(f.numerator().coefficients())},
                {"den", integers_json(f.denominator().coefficients())},
                {"coeffs", integers_json(coeffs)}}
               .dump()
        << "\n";
  } else {
    out << "num: " << join(f.numerator().coefficients()) << "\n";
    out << "den: " << join(f.denominator().coefficients()) << "\n";
    out << "coeffs: " << join(coeffs) << "\n";
  }
  return 0;
}

void add_pair(CLI::App* sub, Options& o) {
  sub->add_option("--u", o.u, "lower word (letters a,b; eps for the empty word)")->required();
  sub->add_option("--w", o.w, "upper word")->required();
  sub->add_option("--d", o.d, "bound on runs of b's")->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Subword order on words with bounded runs of b's"};
  app.name("subword");
  app.require_subcommand(1);

  auto* mobius = app.add_subcommand("mobius", "Mobius value from d-normal embeddings, with the recursion");
  add_pair(mobius, o);

  auto* interval_cmd = app.add_subcommand("interval", "Elements of [u, w]");
  add_pair(interval_cmd, o);
  interval_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "dot"}));

  auto* chains = app.add_subcommand("chains", "Labeled maximal chains tagged A(scending), D(escending) or N");
  add_pair(chains, o);
  chains->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "dot"}));

  auto* embeddings = app.add_subcommand("embeddings", "Embeddings of u in w as position lists");
  add_pair(embeddings, o);
  embeddings->add_flag("--normal", o.normal, "only d-normal embeddings");

  auto* series = app.add_subcommand("series", "Expansion of the zeta or Mobius series of u");
  series->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"zeta", "mobius"}));
  series->add_option("--u", o.u)->required();
  series->add_option("--d", o.d)->capture_default_str();
  series->add_option("--max-len", o.max_len)->capture_default_str();
  series->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* automaton = app.add_subcommand("automaton", "Pair automaton for zeta or mu");
  automaton->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"zeta", "mobius"}));
  automaton->add_option("--d", o.d)->capture_default_str();
  automaton->add_flag("--check", o.check, "compare accepted coefficients with the oracle");
  automaton->add_option("--max-len", o.max_len, "longest w for --check")->capture_default_str();
  automaton->add_option("--emit", o.emit)->check(CLI::IsMember({"dot"}));

  auto* genfun = app.add_subcommand("genfun", "Norm generating function of a composition");
  genfun->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"zeta", "mobius"}));
  genfun->add_option("--alpha", o.alpha, "composition, e.g. 1,3,2")->required();
  genfun->add_option("--d", o.d)->capture_default_str();
  genfun->add_option("--terms", o.terms, "highest power of x to expand")->capture_default_str();
  genfun->add_option("--route", o.route)->check(CLI::IsMember({"auto", "closed", "image"}));
  genfun->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* selftest = app.add_subcommand("selftest", "Run every acceptance sweep");
  selftest->add_flag("--quick", o.quick, "smaller sweeps");

  std::vector<std::string> argv_storage{"subword"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (mobius->parsed()) return cmd_mobius(o, out);
    if (interval_cmd->parsed()) return cmd_interval(o, out);
    if (chains->parsed()) return cmd_chains(o, out);
    if (embeddings->parsed()) return cmd_embeddings(o, out);
    if (series->parsed()) return cmd_series(o, out);
    if (automaton->parsed()) return cmd_automaton(o, out);
    if (genfun->parsed()) return cmd_genfun(o, out);
    if (selftest->parsed()) {
      if (run_acceptance(o.quick, out)) return 0;
      err << "selftest failed\n";
      return 3;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

} // namespace subword::cli
