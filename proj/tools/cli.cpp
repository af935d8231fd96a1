//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qhl/ar_quiver.hpp"
#include "qhl/bq_algebra.hpp"
#include "qhl/error.hpp"
#include "qhl/hl.hpp"
#include "qhl/lambda.hpp"
#include "qhl/rep.hpp"
#include "qhl/selftest.hpp"
#include "qhl/serialize.hpp"

namespace qhl::cli {

namespace {

// Raised for malformed command lines that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string quiver;
  std::string format;  // empty means the command's first allowed format
  std::string xi;
  std::optional<std::uint64_t> seed;
  int window = 1;
  std::string m, n, d, input;
  bool quick = false;
  unsigned threads = 0;
  std::vector<int> criteria;
};

std::uint64_t effective_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("QHL_SEED")) {
    try {
      std::size_t used = 0;
      std::uint64_t v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("QHL_SEED must be an unsigned integer");
  }
  return kDefaultSeed;
}

void require_format(Options& o, std::initializer_list<const char*> allowed) {
  if (o.format.empty()) {
    o.format = *allowed.begin();
    return;
  }
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("--format " + o.format + " is not available here (choose " + list + ")");
}

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::string s(text);
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " '" + std::string(text) + "'");
    }
  }
  return out;
}

std::string read_input(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

HeightFunction chosen_height(const Quiver& q, const Options& o) {
  if (o.xi.empty()) return height_function(q);
  HeightFunction xi{parse_int_list(o.xi, "height function")};
  validate_height_function(q, xi);
  return xi;
}

MultVector require_mult(const ARData& ar, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_mult(ar, text);
}

std::string bound_quiver_text(const BoundQuiver& bq) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : bq.vertices()) out << " " << v.name;
  out << "\narrows:\n";
  for (const auto& a : bq.arrows())
    out << "  " << a.id << ": " << bq.vertex(a.source).name << " -> " << bq.vertex(a.target).name << "\n";
  out << "relations:\n";
  for (const auto& r : bq.relations()) {
    out << " ";
    for (const auto& t : r.terms) out << " " << (t.coeff < 0 ? "-" : "+") << abs(t.coeff) << "*(" << path_string(bq, t.path) << ")";
    out << " = 0\n";
  }
  return out.str();
}

// Each subcommand reads the shared options and writes its artifact.
int cmd_roots(Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  RootSystem rs(parse_quiver(o.quiver));
  if (o.format == "json") {
    out << roots_json(rs);
  } else {
    for (std::size_t r = 0; r < rs.size(); ++r) out << rs.name(r) << " " << to_string(rs.root(r)) << "\n";
  }
  return kExitOk;
}

int cmd_coxeter(Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  CoxeterWord c = adapted_coxeter(parse_quiver(o.quiver));
  out << (o.format == "json" ? coxeter_json(c) : to_string(c) + "\n");
  return kExitOk;
}

int cmd_xi(Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  Quiver q = parse_quiver(o.quiver);
  HeightFunction xi = chosen_height(q, o);
  if (o.format == "json") {
    out << height_json(xi);
  } else {
    for (std::size_t i = 0; i < xi.xi.size(); ++i) out << (i ? "," : "") << xi.xi[i];
    out << "\n";
  }
  return kExitOk;
}

int cmd_ar(Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "dot"});
  ARData ar(parse_quiver(o.quiver));
  if (o.format == "json") {
    out << ar_json(ar);
  } else if (o.format == "dot") {
    out << ar_dot(ar);
  } else {
    const RootSystem& rs = ar.roots();
    for (std::size_t u = 0; u < ar.size(); ++u) {
      const auto& x = ar.indec(u);
      out << std::left << std::setw(12) << rs.name(x.root) << std::setw(12) << to_string(x.dim)
          << (x.projective ? "P" : "-") << (x.injective ? "I" : "-");
      if (x.tau) out << "  tau=" << rs.name(ar.indec(*x.tau).root);
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_phi(Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  if (o.window < 1) throw UsageError("--window must be positive");
  Quiver q = parse_quiver(o.quiver);
  RootSystem rs(q);
  HeightFunction xi = chosen_height(q, o);
  // Display the full rectangle of degrees spanned by the window, as in the
  // staggered tables; the window alone leaves ragged ends.
  auto [lo, hi] = degree_range(phi_table(q, xi, o.window));
  PhiTable t = phi_table_range(q, xi, lo, hi);
  out << (o.format == "json" ? phi_json(rs, t) : phi_text(rs, t));
  return kExitOk;
}

int cmd_hl(Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "dot"});
  Quiver q = parse_quiver(o.quiver);
  BoundQuiver hl = hl_quiver(q, phi_table(q, chosen_height(q, o)));
  if (o.format == "json") out << bound_quiver_json(hl);
  else if (o.format == "dot") out << bound_quiver_dot(hl, "HL");
  else out << bound_quiver_text(hl);
  return kExitOk;
}

int cmd_bq(Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "dot"});
  ARData ar(parse_quiver(o.quiver));
  BoundQuiver bq = build_hat_quiver(ar);
  if (o.format == "json") out << bound_quiver_json(bq);
  else if (o.format == "dot") out << bound_quiver_dot(bq, "Qhat");
  else out << bound_quiver_text(bq);
  return kExitOk;
}

int cmd_iso(Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  Quiver q = parse_quiver(o.quiver);
  ARData ar(q);
  PhiTable t = phi_table(q, chosen_height(q, o));
  BoundQuiver hl = hl_quiver(q, t);
  BoundQuiver bq = build_hat_quiver(ar);
  HlIsomorphism iso = check_hl_iso(ar, bq, hl, t);
  if (o.format == "json") {
    std::ostringstream s;
    s << "{\n  \"vertices\": {";
    for (std::size_t v = 0; v < iso.vertex_map.size(); ++v)
      s << (v ? ", " : "") << "\"" << hl.vertex(v).name << "\": \"" << bq.vertex(iso.vertex_map[v]).name << "\"";
    s << "},\n  \"arrows\": {";
    for (std::size_t a = 0; a < iso.arrow_map.size(); ++a)
      s << (a ? ", " : "") << "\"" << hl.arrow(a).id << "\": \"" << bq.arrow(iso.arrow_map[a]).id << "\"";
    s << "}\n}\n";
    out << s.str();
  } else {
    for (std::size_t v = 0; v < iso.vertex_map.size(); ++v)
      out << hl.vertex(v).name << " -> " << bq.vertex(iso.vertex_map[v]).name << "\n";
  }
  return kExitOk;
}

int cmd_hat(Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  ARData ar(parse_quiver(o.quiver));
  BoundQuiver bq = build_hat_quiver(ar);
  HatDimVector d = hat_dim(ar, require_mult(ar, o.m, "--m"));
  if (o.format == "json") {
    out << hat_dim_json(bq, d);
  } else {
    for (std::size_t v = 0; v < d.size(); ++v) out << (v ? " " : "") << bq.vertex(v).name << "=" << d[v];
    out << "\n";
  }
  return kExitOk;
}

int cmd_deg(Options& o, std::ostream& out) {
  require_format(o, {"text"});
  ARData ar(parse_quiver(o.quiver));
  MultVector m = require_mult(ar, o.m, "--m");
  MultVector n = require_mult(ar, o.n, "--n");
  switch (degeneration_leq(ar, m, n)) {
    case Degeneration::kEqual: out << "N == M\n"; break;
    case Degeneration::kLessOrEqual: out << "N <= M\n"; break;
    case Degeneration::kGreater: out << "M <= N\n"; break;
    case Degeneration::kIncomparable: out << "incomparable\n"; break;
  }
  return kExitOk;
}

int cmd_deframe(Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "dot"});
  ARData ar(parse_quiver(o.quiver));
  BoundQuiver bq = build_hat_quiver(ar);
  std::optional<HatDimVector> hat;
  DimVector d;
  if (!o.m.empty()) {
    MultVector m = parse_mult(ar, o.m);
    hat = hat_dim(ar, m);
    d = dimension(ar, m);
  } else if (!o.d.empty()) {
    d = DimVector(parse_int_list(o.d, "dimension vector"));
  } else {
    throw UsageError("deframe needs --d or --m");
  }
  DeframedQuiver df = deframed_quiver(bq, d, hat);
  if (o.format == "json") out << bound_quiver_json(df.quiver);
  else if (o.format == "dot") out << bound_quiver_dot(df.quiver, "Deframed");
  else out << bound_quiver_text(df.quiver);
  return kExitOk;
}

int cmd_respath(Options& o, std::ostream& out) {
  require_format(o, {"text"});
  Quiver q = parse_quiver(o.quiver);
  ARData ar(q);
  BoundQuiver bq = build_hat_quiver(ar);
  for (std::size_t a = 0; a < q.arrows().size(); ++a)
    out << q.arrow(a).id << ": " << path_string(bq, res_path(bq, q, a)) << "\n";
  return kExitOk;
}

struct Lab {
  Quiver q;
  ARData ar;
  BoundQuiver bq;
  Catalog catalog;
  explicit Lab(const Options& o)
      : q(parse_quiver(o.quiver)), ar(q), bq(build_hat_quiver(ar)), catalog(ar, effective_seed(o)) {}
};

int cmd_lambda(Options& o, std::ostream& out) {
  require_format(o, {"json"});
  Lab lab(o);
  LambdaContext ctx(lab.ar, lab.bq, lab.catalog);
  Rep m = !o.m.empty() ? realize(lab.ar, lab.catalog, parse_mult(lab.ar, o.m))
                       : parse_rep_json(lab.q, read_input(o.input));
  out << bound_rep_json(lab.bq, lambda_explicit(ctx, m));
  return kExitOk;
}

int cmd_res(Options& o, std::ostream& out) {
  require_format(o, {"json"});
  Quiver q = parse_quiver(o.quiver);
  ARData ar(q);
  BoundQuiver bq = build_hat_quiver(ar);
  BoundRep f = parse_bound_rep_json(bq, read_input(o.input));
  out << rep_json(q, res_explicit(bq, q, f));
  return kExitOk;
}

int cmd_verify(Options& o, std::ostream& out) {
  require_format(o, {"text"});
  Quiver q = parse_quiver(o.quiver);
  ARData ar(q);
  BoundQuiver bq = build_hat_quiver(ar);
  BoundRep f = parse_bound_rep_json(bq, read_input(o.input));
  RelationCheck check = check_relations(bq, f);
  if (check.ok) {
    out << "relations hold\n";
    return kExitOk;
  }
  const Relation& r = bq.relations()[*check.witness];
  out << "relation violated at " << bq.vertex(r.source).name << " -> " << bq.vertex(r.target).name << "\n";
  return kExitDomain;
}

int cmd_decompose(Options& o, std::ostream& out) {
  require_format(o, {"text"});
  Lab lab(o);
  Rep m = parse_rep_json(lab.q, read_input(o.input));
  out << mult_string(lab.ar, decompose(lab.ar, lab.catalog, m)) << "\n";
  return kExitOk;
}

int cmd_selftest(Options& o, std::ostream& out) {
  require_format(o, {"text"});
  SelftestConfig config;
  config.seed = effective_seed(o);
  config.threads = o.threads;
  if (o.quick) {
    config.max_rank_a = 4;
    config.max_rank_d = 4;
    config.include_e6 = false;
    config.oracle_max_rank_a = 4;
    config.samples = 10;
    config.injectivity_total = 5;
    config.exact_sequence_samples = 10;
  }
  std::vector<int> ids = o.criteria;
  if (ids.empty())
    for (int i = 1; i <= kNumCriteria; ++i) ids.push_back(i);
  bool all = true;
  for (int id : ids) {
    CriterionResult r = run_criterion(id, config);
    all = all && r.passed;
    out << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left << std::setw(42)
        << r.title << std::right << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << "s  "
        << r.detail << "\n";
  }
  return all ? kExitOk : kExitDomain;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynkin quiver toolkit: AR quivers, HL quivers, B_Q and the functors Lambda and res", "qhl"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    int (*fn)(Options&, std::ostream&);
  };
  const Command commands[] = {
      {"roots", "positive roots", cmd_roots},
      {"coxeter", "adapted Coxeter element", cmd_coxeter},
      {"xi", "height function (canonical, or validate --xi)", cmd_xi},
      {"ar", "Auslander-Reiten quiver and hom table", cmd_ar},
      {"phi", "the bijection phi as a table", cmd_phi},
      {"hl", "HL quiver with its relations", cmd_hl},
      {"bq", "the bound quiver Q-hat", cmd_bq},
      {"iso", "isomorphism between the HL quiver and Q-hat", cmd_iso},
      {"hat", "d-hat of a module", cmd_hat},
      {"deg", "degeneration order between two modules", cmd_deg},
      {"deframe", "deframed quiver", cmd_deframe},
      {"respath", "paths of Q-hat restricting to the arrows of Q", cmd_respath},
      {"lambda", "explicit Lambda(M)", cmd_lambda},
      {"res", "restriction of a Q-hat representation", cmd_res},
      {"verify", "check the relations on a Q-hat representation", cmd_verify},
      {"decompose", "multiplicities of a Q-representation", cmd_decompose},
      {"selftest", "run the acceptance suite", cmd_selftest},
  };

  int (*chosen)(Options&, std::ostream&) = nullptr;
  for (const Command& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--seed", o.seed, "seed for random choices (default: $QHL_SEED)");
    std::string name = s.name;
    if (name == "selftest") {
      sub->add_flag("--quick", o.quick, "reduced caps for a fast smoke run");
      sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
      sub->add_option("--criterion", o.criteria, "run only these criteria")->check(CLI::Range(1, kNumCriteria));
    } else {
      sub->add_option("quiver", o.quiver, "quiver, e.g. 1->2<-3 or a:1->2;b:3->2;c:4->2")->required();
      sub->add_option("--xi", o.xi, "height function, e.g. 4,3,2,1");
    }
    if (name == "phi") sub->add_option("--window", o.window, "levels shown on each side of 0");
    if (name == "hat" || name == "deg" || name == "deframe" || name == "lambda")
      sub->add_option("--m", o.m, "module, e.g. a12:1,a11:2 or [1,1,0]:1");
    if (name == "deg") sub->add_option("--n", o.n, "second module");
    if (name == "deframe") sub->add_option("--d", o.d, "dimension vector, e.g. 1,1,0");
    if (name == "lambda" || name == "res" || name == "verify" || name == "decompose")
      sub->add_option("--input", o.input, "JSON file, or - for stdin");
    sub->callback([&chosen, fn = s.fn] { chosen = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qhl: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return chosen(o, out);
  } catch (const UsageError& e) {
    err << "qhl: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "qhl: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "qhl: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace qhl::cli
