#include "tglab/cli.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tglab/annot.hpp"
#include "tglab/core.hpp"
#include "tglab/cospan.hpp"
#include "tglab/dpo.hpp"
#include "tglab/graph_ops.hpp"
#include "tglab/hom.hpp"
#include "tglab/json_io.hpp"
#include "tglab/lang.hpp"
#include "tglab/tgl.hpp"
#include "tglab/universe.hpp"

namespace tglab {

namespace {

using nlohmann::json;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 64;
constexpr int kBadInput = 65;
constexpr int kSelfCheckFailed = 70;

struct Verdict {
  json result;
  json witness = nullptr;
  int exit_code = kTrue;
};

struct UniverseOption {
  std::string raw;
  bool given() const { return !raw.empty(); }
  GraphUniverse parse(const Alphabet& alphabet) const {
    int nodes = 0, edges = 0;
    char comma = 0;
    std::istringstream in(raw);
    if (!(in >> nodes >> comma >> edges) || comma != ',' || nodes < 0 || edges < 0 ||
        !(in >> std::ws).eof())
      throw ParseError("--universe: expected 'nodes,edges'");
    return GraphUniverse{alphabet, nodes, edges};
  }
};

Alphabet merged_alphabet(const Graph& a, const Graph& b) {
  std::vector<std::string> labels = a.alphabet().labels();
  for (const std::string& l : b.alphabet().labels())
    if (!a.alphabet().contains(l)) labels.push_back(l);
  return Alphabet(labels);
}

bool fits(const Graph& g, const GraphUniverse& u) {
  return g.node_count() <= u.max_nodes && g.edge_count() <= u.max_edges;
}

struct SelfCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void self_check_failed(const std::string& what) {
  throw SelfCheckError("self-check failed: " + what);
}

// ---- command implementations -------------------------------------------

Verdict cmd_tg_member(const std::string& gfile, const std::string& tfile) {
  Graph g = graph_from_json(load_json_file(gfile), gfile);
  TypeGraphSpec t{graph_from_json(load_json_file(tfile), tfile)};
  if (auto m = tg_membership(g, t)) return {true, morphism_to_json(*m), kTrue};
  return {false, nullptr, kFalse};
}

Verdict cmd_tg_empty(const std::string& tfile) {
  TypeGraphSpec t{graph_from_json(load_json_file(tfile), tfile)};
  // Never empty; the witness is the empty graph over the same alphabet.
  (void)tg_empty(t);
  return {false, graph_to_json(Graph(t.type_graph.alphabet())), kFalse};
}

Verdict cmd_tg_include(const std::string& f1, const std::string& f2, const UniverseOption& uni,
                       std::ostream& err, bool quiet) {
  TypeGraphSpec t1{graph_from_json(load_json_file(f1), f1)};
  TypeGraphSpec t2{graph_from_json(load_json_file(f2), f2)};
  TgInclusion inc = tg_included(t1, t2);
  if (uni.given()) {
    GraphUniverse u = uni.parse(t1.type_graph.alphabet());
    bool bounded = true;
    for (const Graph& g : enumerate_graphs(u))
      if (tg_member(g, t1) && !tg_member(g, t2)) {
        bounded = false;
        break;
      }
    if (inc.included && !bounded) self_check_failed("inclusion holds but a universe graph escapes");
    if (!inc.included && bounded && fits(*inc.counterexample, u))
      self_check_failed("counterexample lies in the universe yet the bounded check passed");
    if (!quiet) err << "universe cross-check passed\n";
  }
  if (inc.included) return {true, morphism_to_json(*inc.witness), kTrue};
  return {false, graph_to_json(*inc.counterexample), kFalse};
}

Verdict cmd_rg_member(const std::string& gfile, const std::string& rfile) {
  Graph g = graph_from_json(load_json_file(gfile), gfile);
  RestrictionGraphSpec r{graph_from_json(load_json_file(rfile), rfile)};
  if (auto blocking = rg_blocking_hom(g, r)) return {false, morphism_to_json(*blocking), kFalse};
  return {true, nullptr, kTrue};
}

Verdict cmd_rg_empty(const std::string& rfile) {
  RestrictionGraphSpec r{graph_from_json(load_json_file(rfile), rfile)};
  if (rg_empty(r)) return {true, nullptr, kTrue};
  return {false, graph_to_json(Graph(r.restriction_graph.alphabet())), kFalse};
}

Verdict cmd_rg_include(const std::string& f1, const std::string& f2, const UniverseOption& uni,
                       std::ostream& err, bool quiet) {
  RestrictionGraphSpec r1{graph_from_json(load_json_file(f1), f1)};
  RestrictionGraphSpec r2{graph_from_json(load_json_file(f2), f2)};
  RgInclusion inc = rg_included(r1, r2);
  if (uni.given()) {
    GraphUniverse u = uni.parse(r1.restriction_graph.alphabet());
    bool bounded = true;
    for (const Graph& g : enumerate_graphs(u))
      if (rg_member(g, r1) && !rg_member(g, r2)) {
        bounded = false;
        break;
      }
    if (inc.included && !bounded) self_check_failed("inclusion holds but a universe graph escapes");
    if (!inc.included && bounded && fits(*inc.counterexample, u))
      self_check_failed("counterexample lies in the universe yet the bounded check passed");
    if (!quiet) err << "universe cross-check passed\n";
  }
  if (inc.included) return {true, morphism_to_json(*inc.witness), kTrue};
  return {false, graph_to_json(*inc.counterexample), kFalse};
}

Verdict cmd_tgl_member(const std::string& gfile, const std::string& ffile) {
  Graph g = graph_from_json(load_json_file(gfile), gfile);
  Formula f = formula_from_json(load_json_file(ffile), ffile);
  bool in = tgl_member(g, f);
  return {in, nullptr, in ? kTrue : kFalse};
}

Verdict cmd_tgl_empty(const std::string& ffile) {
  Formula f = formula_from_json(load_json_file(ffile), ffile);
  TglEmptiness e = tgl_empty(f);
  if (e.empty) return {true, nullptr, kTrue};
  return {false, graph_to_json(*e.witness), kFalse};
}

Verdict cmd_tgl_include(const std::string& f1file, const std::string& f2file,
                        const UniverseOption& uni, std::ostream& err, bool quiet) {
  Formula f1 = formula_from_json(load_json_file(f1file), f1file);
  Formula f2 = formula_from_json(load_json_file(f2file), f2file);
  TglInclusion inc = tgl_included(f1, f2);
  if (uni.given()) {
    GraphUniverse u = uni.parse(f1.alphabet());
    for (const Graph& g : enumerate_graphs(u))
      if (inc.included && tgl_member(g, f1) && !tgl_member(g, f2))
        self_check_failed("inclusion holds but a universe graph escapes");
    if (!inc.included &&
        !(tgl_member(*inc.counterexample, f1) && !tgl_member(*inc.counterexample, f2)))
      self_check_failed("counterexample does not separate the two formulas");
    if (!quiet) err << "universe cross-check passed\n";
  }
  if (inc.included) return {true, nullptr, kTrue};
  return {false, graph_to_json(*inc.counterexample), kFalse};
}

Verdict cmd_atg_member(const std::string& gfile, const std::string& tfile) {
  Graph g = graph_from_json(load_json_file(gfile), gfile);
  MultiAnnotatedGraph t = atg_from_json(load_json_file(tfile), tfile);
  if (auto m = atg_membership(g, t)) return {true, morphism_to_json(*m), kTrue};
  return {false, nullptr, kFalse};
}

Verdict cmd_atg_empty(const std::string& tfile) {
  MultiAnnotatedGraph t = atg_from_json(load_json_file(tfile), tfile);
  if (atg_empty(t)) return {true, nullptr, kTrue};
  return {false, graph_to_json(*atg_nonempty_witness(t)), kFalse};
}

Verdict cmd_atg_include_sufficient(const std::string& f1, const std::string& f2,
                                   const UniverseOption& uni, std::ostream& err, bool quiet) {
  MultiAnnotatedGraph t1 = atg_from_json(load_json_file(f1), f1);
  MultiAnnotatedGraph t2 = atg_from_json(load_json_file(f2), f2);
  SufficientInclusion inc = atg_inclusion_sufficient(t1, t2);
  if (uni.given() && inc.verdict == InclusionHint::included) {
    GraphUniverse u = uni.parse(t1.graph.alphabet());
    for (const Graph& g : enumerate_graphs(u))
      if (atg_member(g, t1) && !atg_member(g, t2))
        self_check_failed("legal morphism found but a universe graph escapes");
    if (!quiet) err << "universe cross-check passed\n";
  }
  if (inc.verdict == InclusionHint::included)
    return {"included", morphism_to_json(*inc.witness), kTrue};
  return {"unknown", nullptr, kUnknown};
}

Verdict cmd_atg_include_bounded(const std::string& f1, const std::string& f2, int width,
                                bool antichain, const UniverseOption& uni, std::ostream& err,
                                bool quiet) {
  MultiAnnotatedGraph t1 = atg_from_json(load_json_file(f1), f1);
  MultiAnnotatedGraph t2 = atg_from_json(load_json_file(f2), f2);
  BoundedInclusion inc = atg_inclusion_bounded(t1, t2, width, antichain);
  if (uni.given()) {
    GraphUniverse u = uni.parse(t1.graph.alphabet());
    if (inc.included) {
      for (const Graph& g : enumerate_graphs(u)) {
        if (!decompose(g, width).ok) continue;
        if (atg_member(g, t1) && !atg_member(g, t2))
          self_check_failed("inclusion holds but a bounded-width universe graph escapes");
      }
    } else {
      const Graph& w = *inc.counterexample;
      if (!(atg_member(w, t1) && !atg_member(w, t2) && decompose(w, width).ok))
        self_check_failed("counterexample does not separate the two specifications");
    }
    if (!quiet) err << "universe cross-check passed\n";
  }
  if (inc.included) return {"included", nullptr, kTrue};
  return {"violation", graph_to_json(*inc.counterexample), kFalse};
}

Verdict cmd_dpo_closed(const std::string& tgfile, const std::string& rgfile,
                       const std::string& rulefile, const UniverseOption& uni, std::ostream& err,
                       bool quiet) {
  if (tgfile.empty() == rgfile.empty())
    throw CLI::ValidationError("dpo closed", "give exactly one of --tg or --rg");
  DpoRule rule = rule_from_json(load_json_file(rulefile), rulefile);

  bool closed = false;
  json witness = nullptr;
  std::function<bool(const Graph&)> member;
  Alphabet alphabet;
  if (!tgfile.empty()) {
    TypeGraphSpec t{graph_from_json(load_json_file(tgfile), tgfile)};
    alphabet = t.type_graph.alphabet();
    TgClosureVerdict v = tg_closed_under_rule(t, rule);
    closed = v.closed;
    if (!v.closed)
      witness = {{"match", morphism_to_json(*v.uncovered)},
                 {"core", graph_to_json(v.uncovered->cod)}};
    member = [t](const Graph& g) { return tg_member(g, t); };
  } else {
    RestrictionGraphSpec r{graph_from_json(load_json_file(rgfile), rgfile)};
    alphabet = r.restriction_graph.alphabet();
    RgClosureVerdict v = rg_closed_under_rule(r, rule);
    closed = v.closed;
    if (!v.closed)
      witness = {{"overlap", graph_to_json(*v.merged)},
                 {"rewritten", graph_to_json(*v.predecessor)}};
    member = [r](const Graph& g) { return rg_member(g, r); };
  }

  if (uni.given()) {
    GraphUniverse u = uni.parse(alphabet);
    ClosureOracleResult o = closure_oracle(member, rule, u);
    if (closed && o.violation_found)
      self_check_failed("checker says closed but the bounded oracle found a violation");
    if (!quiet) err << "universe cross-check passed\n";
  }
  if (closed) return {"closed", nullptr, kTrue};
  return {"violation", witness, kFalse};
}

Verdict cmd_core(const std::string& gfile) {
  Graph g = graph_from_json(load_json_file(gfile), gfile);
  CoreResult c = core(g);
  return {true,
          {{"graph", graph_to_json(c.core)},
           {"retraction", morphism_to_json(c.retraction)},
           {"inclusion", morphism_to_json(c.inclusion)}},
          kTrue};
}

Verdict cmd_product(const std::string& f1, const std::string& f2) {
  Graph g1 = graph_from_json(load_json_file(f1), f1);
  Graph g2 = graph_from_json(load_json_file(f2), f2);
  ProductResult p = product(g1, g2);
  return {true,
          {{"graph", graph_to_json(p.graph)},
           {"proj1", morphism_to_json(p.proj1)},
           {"proj2", morphism_to_json(p.proj2)}},
          kTrue};
}

Verdict cmd_coproduct(const std::string& f1, const std::string& f2) {
  Graph g1 = graph_from_json(load_json_file(f1), f1);
  Graph g2 = graph_from_json(load_json_file(f2), f2);
  CoproductResult c = coproduct(g1, g2);
  return {true,
          {{"graph", graph_to_json(c.graph)},
           {"inj1", morphism_to_json(c.inj1)},
           {"inj2", morphism_to_json(c.inj2)}},
          kTrue};
}

Verdict cmd_flower(const std::string& alphabet_csv) {
  std::vector<std::string> labels;
  std::string item;
  std::istringstream in(alphabet_csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) labels.push_back(item);
  return {true, graph_to_json(flower(Alphabet(labels))), kTrue};
}

Verdict cmd_duality_check(const std::string& rfile, const std::string& tfile,
                          const UniverseOption& uni) {
  Graph r = graph_from_json(load_json_file(rfile), rfile);
  Graph t = graph_from_json(load_json_file(tfile), tfile);
  GraphUniverse u = uni.parse(merged_alphabet(r, t));
  DualityVerdict v = duality_check_bounded(r, t, u);
  if (v.consistent) return {"consistent", nullptr, kTrue};
  return {"violation", graph_to_json(*v.counterexample), kFalse};
}

Verdict cmd_decompose(const std::string& gfile, int width) {
  Graph g = graph_from_json(load_json_file(gfile), gfile);
  Decomposition d = decompose(g, width);
  if (d.ok) return {true, word_to_json(d.word), kTrue};
  return {false, nullptr, kFalse};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graph language toolkit"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "suppress notes on standard error");

  std::string g_file, t_file, r_file, f_file, first_file, second_file, rule_file, tg_file,
      rg_file, alphabet_csv;
  int width = 1;
  UniverseOption uni;

  // Builders keep each subcommand's wiring short.
  std::function<Verdict()> action;
  auto set = [&](std::function<Verdict()> fn) { return [&action, fn]() { action = fn; }; };

  CLI::App* tg = app.add_subcommand("tg", "type graph language");
  CLI::App* tg_member_cmd = tg->add_subcommand("member", "is the graph in L(T)?");
  tg_member_cmd->add_option("-g,--graph", g_file)->required();
  tg_member_cmd->add_option("-t,--type-graph", t_file)->required();
  tg_member_cmd->callback(set([&]() { return cmd_tg_member(g_file, t_file); }));
  CLI::App* tg_empty_cmd = tg->add_subcommand("empty", "is L(T) empty?");
  tg_empty_cmd->add_option("-t,--type-graph", t_file)->required();
  tg_empty_cmd->callback(set([&]() { return cmd_tg_empty(t_file); }));
  CLI::App* tg_include_cmd = tg->add_subcommand("include", "is L(T1) included in L(T2)?");
  tg_include_cmd->add_option("-1,--first", first_file)->required();
  tg_include_cmd->add_option("-2,--second", second_file)->required();
  tg_include_cmd->add_option("-u,--universe", uni.raw, "nodes,edges bounded cross-check");
  tg_include_cmd->callback(
      set([&]() { return cmd_tg_include(first_file, second_file, uni, err, quiet); }));

  CLI::App* rg = app.add_subcommand("rg", "restriction graph language");
  CLI::App* rg_member_cmd = rg->add_subcommand("member", "is the graph in L_R(R)?");
  rg_member_cmd->add_option("-g,--graph", g_file)->required();
  rg_member_cmd->add_option("-r,--restriction-graph", r_file)->required();
  rg_member_cmd->callback(set([&]() { return cmd_rg_member(g_file, r_file); }));
  CLI::App* rg_empty_cmd = rg->add_subcommand("empty", "is L_R(R) empty?");
  rg_empty_cmd->add_option("-r,--restriction-graph", r_file)->required();
  rg_empty_cmd->callback(set([&]() { return cmd_rg_empty(r_file); }));
  CLI::App* rg_include_cmd = rg->add_subcommand("include", "is L_R(R1) included in L_R(R2)?");
  rg_include_cmd->add_option("-1,--first", first_file)->required();
  rg_include_cmd->add_option("-2,--second", second_file)->required();
  rg_include_cmd->add_option("-u,--universe", uni.raw, "nodes,edges bounded cross-check");
  rg_include_cmd->callback(
      set([&]() { return cmd_rg_include(first_file, second_file, uni, err, quiet); }));

  CLI::App* tgl = app.add_subcommand("tgl", "type graph logic");
  CLI::App* tgl_member_cmd = tgl->add_subcommand("member", "is the graph in L(F)?");
  tgl_member_cmd->add_option("-g,--graph", g_file)->required();
  tgl_member_cmd->add_option("-f,--formula", f_file)->required();
  tgl_member_cmd->callback(set([&]() { return cmd_tgl_member(g_file, f_file); }));
  CLI::App* tgl_empty_cmd = tgl->add_subcommand("empty", "is L(F) empty?");
  tgl_empty_cmd->add_option("-f,--formula", f_file)->required();
  tgl_empty_cmd->callback(set([&]() { return cmd_tgl_empty(f_file); }));
  CLI::App* tgl_include_cmd = tgl->add_subcommand("include", "is L(F1) included in L(F2)?");
  tgl_include_cmd->add_option("-1,--first", first_file)->required();
  tgl_include_cmd->add_option("-2,--second", second_file)->required();
  tgl_include_cmd->add_option("-u,--universe", uni.raw, "nodes,edges bounded cross-check");
  tgl_include_cmd->callback(
      set([&]() { return cmd_tgl_include(first_file, second_file, uni, err, quiet); }));

  CLI::App* atg = app.add_subcommand("atg", "annotated type graphs");
  CLI::App* atg_member_cmd = atg->add_subcommand("member", "is the graph in L(T[M])?");
  atg_member_cmd->add_option("-g,--graph", g_file)->required();
  atg_member_cmd->add_option("-t,--annotated-graph", t_file)->required();
  atg_member_cmd->callback(set([&]() { return cmd_atg_member(g_file, t_file); }));
  CLI::App* atg_empty_cmd = atg->add_subcommand("empty", "is L(T[M]) empty?");
  atg_empty_cmd->add_option("-t,--annotated-graph", t_file)->required();
  atg_empty_cmd->callback(set([&]() { return cmd_atg_empty(t_file); }));
  CLI::App* atg_sufficient_cmd =
      atg->add_subcommand("include-sufficient", "legal-morphism inclusion test");
  atg_sufficient_cmd->add_option("-1,--first", first_file)->required();
  atg_sufficient_cmd->add_option("-2,--second", second_file)->required();
  atg_sufficient_cmd->add_option("-u,--universe", uni.raw, "nodes,edges bounded cross-check");
  atg_sufficient_cmd->callback(
      set([&]() { return cmd_atg_include_sufficient(first_file, second_file, uni, err, quiet); }));
  CLI::App* atg_bounded_cmd =
      atg->add_subcommand("include-bounded", "bounded-width inclusion decision");
  bool antichain = false;
  atg_bounded_cmd->add_option("-1,--first", first_file)->required();
  atg_bounded_cmd->add_option("-2,--second", second_file)->required();
  atg_bounded_cmd->add_option("-k,--width", width, "pathwidth bound")->required();
  atg_bounded_cmd->add_flag("--antichain", antichain, "prune dominated search nodes");
  atg_bounded_cmd->add_option("-u,--universe", uni.raw, "nodes,edges bounded cross-check");
  atg_bounded_cmd->callback(set([&]() {
    return cmd_atg_include_bounded(first_file, second_file, width, antichain, uni, err, quiet);
  }));

  CLI::App* dpo = app.add_subcommand("dpo", "closure under rewriting");
  CLI::App* dpo_closed_cmd = dpo->add_subcommand("closed", "is the language rule-closed?");
  dpo_closed_cmd->add_option("--tg", tg_file, "type graph file");
  dpo_closed_cmd->add_option("--rg", rg_file, "restriction graph file");
  dpo_closed_cmd->add_option("--rule", rule_file)->required();
  dpo_closed_cmd->add_option("-u,--universe", uni.raw, "nodes,edges bounded cross-check");
  dpo_closed_cmd->callback(
      set([&]() { return cmd_dpo_closed(tg_file, rg_file, rule_file, uni, err, quiet); }));

  CLI::App* core_cmd = app.add_subcommand("core", "retract-minimal subgraph");
  core_cmd->add_option("-g,--graph", g_file)->required();
  core_cmd->callback(set([&]() { return cmd_core(g_file); }));

  CLI::App* product_cmd = app.add_subcommand("product", "categorical product");
  product_cmd->add_option("-1,--first", first_file)->required();
  product_cmd->add_option("-2,--second", second_file)->required();
  product_cmd->callback(set([&]() { return cmd_product(first_file, second_file); }));

  CLI::App* coproduct_cmd = app.add_subcommand("coproduct", "disjoint union");
  coproduct_cmd->add_option("-1,--first", first_file)->required();
  coproduct_cmd->add_option("-2,--second", second_file)->required();
  coproduct_cmd->callback(set([&]() { return cmd_coproduct(first_file, second_file); }));

  CLI::App* flower_cmd = app.add_subcommand("flower", "final object for an alphabet");
  flower_cmd->add_option("-a,--alphabet", alphabet_csv, "comma-separated labels")->required();
  flower_cmd->callback(set([&]() { return cmd_flower(alphabet_csv); }));

  CLI::App* duality_cmd = app.add_subcommand("duality-check", "bounded duality pair check");
  duality_cmd->add_option("-r,--restriction-graph", r_file)->required();
  duality_cmd->add_option("-t,--type-graph", t_file)->required();
  duality_cmd->add_option("-u,--universe", uni.raw, "nodes,edges universe")->required();
  duality_cmd->callback(set([&]() { return cmd_duality_check(r_file, t_file, uni); }));

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "bounded-width build script");
  decompose_cmd->add_option("-g,--graph", g_file)->required();
  decompose_cmd->add_option("-k,--width", width, "pathwidth bound")->required();
  decompose_cmd->callback(set([&]() { return cmd_decompose(g_file, width); }));

  // Let global flags like --quiet appear after the subcommand too.
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (CLI::App* sub : a->get_subcommands({})) allow_fallthrough(sub);
  };
  allow_fallthrough(&app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help() << "\n";
      return kTrue;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    auto started = std::chrono::steady_clock::now();
    Verdict v = action();
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             started);
    json doc = {{"result", v.result}, {"witness", v.witness}, {"timing_ms", elapsed.count()}};
    out << doc.dump(2) << "\n";
    return v.exit_code;
  } catch (const SelfCheckError& e) {
    err << e.what() << "\n";
    return kSelfCheckFailed;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace tglab
