#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qset/catalog.hpp"
#include "qset/constructions.hpp"
#include "qset/difference_graph.hpp"
#include "qset/errors.hpp"
#include "qset/intset.hpp"
#include "qset/quotient.hpp"
#include "qset/search.hpp"
#include "qset/stats.hpp"

namespace qset::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json element_list(const Group& g, const std::vector<Element>& elems) {
  json arr = json::array();
  for (const auto& e : elems) arr.push_back(g.format(e));
  return arr;
}

json subset_json(const Subset& a) { return element_list(a.group(), a.elements()); }

json checks_json(const std::vector<ClosedFormCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back({{"quantity", c.quantity},
                   {"formula", c.formula},
                   {"claimed", c.claimed},
                   {"computed", c.computed},
                   {"matches", c.matches()}});
  return arr;
}

/// Reports every mismatching check on err; true if all match.
bool report_checks(const std::string& label, const std::vector<ClosedFormCheck>& checks,
                   std::ostream& err) {
  bool ok = true;
  for (const auto& c : checks) {
    if (c.matches()) continue;
    ok = false;
    err << "verify: " << label << " " << c.quantity << " = " << c.formula << " claims "
        << c.claimed << ", enumeration gives " << c.computed << "\n";
  }
  return ok;
}

std::uint64_t parse_budget(const std::string& text) {
  const auto caret = text.find('^');
  try {
    if (caret == std::string::npos) {
      std::size_t used = 0;
      const auto v = std::stoull(text, &used);
      if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
      return v;
    }
    if (text.substr(0, caret) != "2") throw std::invalid_argument(text);
    std::size_t used = 0;
    const auto e = std::stoul(text.substr(caret + 1), &used);
    if (used != text.size() - caret - 1 || e >= 64) throw std::invalid_argument(text);
    return std::uint64_t{1} << e;
  } catch (const std::logic_error&) {
    throw UsageError("--budget: expected an integer or 2^b with b < 64, got `" + text + "`");
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void require_unset(const CLI::Option* opt, const std::string& context) {
  if (opt->count() != 0)
    throw UsageError(opt->get_name() + " does not apply to " + context);
}

// quotient

struct QuotientArgs {
  std::string group;
  std::string set;
  std::string format = "json";
};

void run_quotient(const QuotientArgs& q, std::ostream& out) {
  const Group g = make_group(q.group);
  const Subset a = parse_subset(g, q.set);
  const GapReport r = gap_report(a);
  if (q.format == "text") {
    out << "set " << format_subset(a) << "\n"
        << "right " << r.right_card << "\n"
        << "left " << r.left_card << "\n"
        << "gap " << r.gap << "\n"
        << "product " << r.product_card << "\n"
        << "energy " << r.right_energy << " " << r.left_energy << "\n";
    return;
  }
  emit(out, {{"group", g.name()},
             {"set", subset_json(a)},
             {"report", r},
             {"right_quotient_set", element_list(g, right_quotient_set(a))},
             {"left_quotient_set", element_list(g, left_quotient_set(a))}});
}

// graph

struct GraphArgs {
  std::string group;
  std::string set;
  std::string side = "right";
  std::string format = "json";
  std::string edges = "clique";
};

void run_graph(const GraphArgs& a, std::ostream& out, std::ostream& err) {
  const Group g = make_group(a.group);
  const Subset s = parse_subset(g, a.set);
  const Side side = a.side == "left" ? Side::left : Side::right;
  const DifferenceGraph dg = build_difference_graph(s, side);
  if (a.format == "dot") {
    if (dg.n() <= kMaxDotSize) {
      DotOptions opts;
      opts.edge_style = a.edges == "path" ? DotOptions::EdgeStyle::path
                                          : DotOptions::EdgeStyle::clique;
      out << export_dot(dg, opts);
      return;
    }
    err << "graph: |A| = " << dg.n() << " is above " << kMaxDotSize
        << " for DOT output; writing the JSON summary instead\n";
  }
  const bool order2free = !g.has_order_two();
  json j = component_summary(dg);
  j["group"] = g.name();
  j["order2free"] = order2free;
  const auto violations = validate_lemma_properties(dg, order2free);
  j["lemma_violations"] = violations.size();
  const auto cert = parity_certificate(dg, order2free);
  j["parity_certificate"] = {{"diagonal_component_count", cert.diagonal_component_count},
                             {"paired_components", cert.paired_components},
                             {"fixed_nondiagonal", cert.fixed_nondiagonal},
                             {"component_count", cert.component_count()},
                             {"certifies_odd", cert.certifies_odd()}};
  emit(out, j);
}

// construct

struct ConstructArgs {
  std::string family;
  std::uint32_t n = 1;
  std::uint32_t k = 1;
  std::int64_t t = 0;
  std::string intset;
  int window = 16;
  std::uint32_t threads = 1;
  bool verify = false;
};

int run_construct(const ConstructArgs& c, const CLI::App& sub, std::ostream& out,
                  std::ostream& err) {
  const auto* n_opt = sub.get_option("--n");
  const auto* k_opt = sub.get_option("--k");
  const auto* t_opt = sub.get_option("--t");
  const auto* b_opt = sub.get_option("--intset");
  const auto* w_opt = sub.get_option("--window");
  const std::string ctx = "`construct " + c.family + "`";
  if (c.family != "an") require_unset(n_opt, ctx);
  if (c.family != "ck") require_unset(k_opt, ctx);
  if (c.family != "gapset" && c.family != "dinfty") {
    require_unset(t_opt, ctx);
    require_unset(w_opt, ctx);
  }
  if (c.family != "dinfty") require_unset(b_opt, ctx);
  if (c.family == "gapset" && t_opt->count() == 0)
    throw UsageError("`construct gapset` needs --t");
  if (c.family == "dinfty" && t_opt->count() == 0 && b_opt->count() == 0)
    throw UsageError("`construct dinfty` needs --intset or --t");
  if (c.family == "an" && n_opt->count() == 0) throw UsageError("`construct an` needs --n");
  if (c.family == "ck" && k_opt->count() == 0) throw UsageError("`construct ck` needs --k");

  bool verified = true;
  json j{{"family", c.family}};
  GapSetOptions gopts;
  gopts.threads = c.threads;

  if (c.family == "gapset" || (c.family == "dinfty" && t_opt->count() != 0)) {
    const auto real = realize_gap(c.t, c.window, gopts);
    if (!real) {
      err << "construct: no set with gap " << c.t << " within window " << kMaxGapWindow << "\n";
      return kFailure;
    }
    json factors = json::array();
    for (const auto& f : real->factors) factors.push_back(format_intset(f));
    j["target"] = c.t;
    j["intset"] = format_intset(real->set);
    j["route"] = to_string(real->route);
    j["window"] = real->window;
    j["factors"] = factors;
    j["sumset_size"] = sumset(real->set).size();
    j["difference_set_size"] = difference_set(real->set).size();
    if (c.verify && difference_excess(real->set) != c.t) {
      err << "verify: |B-B| - |B+B| = " << difference_excess(real->set) << ", expected " << c.t
          << "\n";
      verified = false;
    }
    if (c.family == "dinfty") {
      const Subset a = dinfty_set(real->set);
      j["set"] = subset_json(a);
      j["report"] = gap_report(a);
    }
  } else if (c.family == "dinfty") {
    const IntSet b = parse_intset(c.intset);
    const Subset a = dinfty_set(b);
    const GapReport r = gap_report(a);
    j["intset"] = format_intset(b);
    j["set"] = subset_json(a);
    j["report"] = r;
    j["difference_excess"] = difference_excess(b);
    if (c.verify && r.gap != difference_excess(b)) {
      err << "verify: gap " << r.gap << " differs from |B-B| - |B+B| = "
          << difference_excess(b) << "\n";
      verified = false;
    }
  } else if (c.family == "f3") {
    const Subset a = f3_base_set();
    const Subset image = apply_hom(embed_free(3), a);
    const GapReport r = gap_report(a);
    j["set"] = subset_json(a);
    j["report"] = r;
    j["embedded"] = {{"set", subset_json(image)}, {"report", gap_report(image)}};
    if (c.verify) {
      const std::vector<ClosedFormCheck> checks{
          {"right_card", "17", 17, static_cast<std::int64_t>(r.right_card)},
          {"left_card", "15", 15, static_cast<std::int64_t>(r.left_card)},
          {"gap", "2", 2, r.gap}};
      j["checks"] = checks_json(checks);
      verified = report_checks("f3", checks, err);
    }
  } else if (c.family == "an") {
    const Subset a = construct_an(c.n);
    j["n"] = c.n;
    j["set"] = subset_json(a);
    j["report"] = gap_report(a);
    if (c.verify) {
      const auto published = an_published_checks(c.n);
      const auto exact = an_exact_checks(c.n);
      j["checks"] = checks_json(published);
      j["exact_checks"] = checks_json(exact);
      verified = report_checks("an", published, err) && report_checks("an", exact, err);
    }
  } else if (c.family == "ck") {
    const Subset a = construct_ck(c.k);
    j["k"] = c.k;
    j["set"] = subset_json(a);
    j["report"] = gap_report(a);
    if (c.verify) {
      const auto published = ck_published_checks(c.k);
      const auto exact = ck_exact_checks(c.k);
      j["checks"] = checks_json(published);
      j["exact_checks"] = checks_json(exact);
      verified = report_checks("ck", published, err) && report_checks("ck", exact, err);
    }
  }
  if (c.verify) j["verified"] = verified;
  emit(out, j);
  return verified ? kOk : kVerifyMismatch;
}

// search

struct SearchArgs {
  std::string group;
  std::uint32_t max_size = 0;
  std::string budget = "2^28";
  std::uint32_t threads = 1;
  bool no_prune = false;
  bool small_sets = false;
};

void run_search(const SearchArgs& s, const CLI::App& sub, std::ostream& out) {
  const Group g = make_group(s.group);
  SearchOptions opts;
  opts.budget = parse_budget(s.budget);
  opts.threads = s.threads;
  opts.use_inverse_symmetry = !s.no_prune;
  if (s.small_sets) {
    const SmallSetReport r = verify_small_sets_balanced(g, opts);
    json j{{"group", r.group},
           {"order2free", r.order2free},
           {"size3_balanced", r.size3_balanced},
           {"size4_checked", r.size4_checked},
           {"size4_balanced", r.size4_balanced},
           {"holds", r.holds()},
           {"subsets_examined", r.subsets_examined}};
    j["counterexample"] = r.counterexample ? subset_json(*r.counterexample) : json(nullptr);
    emit(out, j);
    return;
  }
  if (sub.get_option("--max-size")->count() == 0)
    throw UsageError("search needs --max-size (or --small-sets)");
  emit(out, json(exhaustive_balance_check(g, s.max_size, opts)));
}

// sample

struct SampleArgs {
  std::uint32_t radius = 1;
  std::string mode = "exact";
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  double probability = 0.5;
  std::uint32_t threads = 1;
  bool allow_large = false;
};

void run_sample(const SampleArgs& s, const CLI::App& sub, std::ostream& out) {
  GapStats stats;
  if (s.mode == "exact") {
    for (const char* name : {"--trials", "--seed", "--probability"})
      require_unset(sub.get_option(name), "`sample --mode exact`");
    stats = gap_distribution(s.radius, ExactMode{s.allow_large, s.threads});
  } else {
    require_unset(sub.get_option("--allow-large"), "`sample --mode mc`");
    stats = gap_distribution(s.radius,
                             MonteCarloMode{s.trials, s.seed, s.probability, s.threads});
  }
  emit(out, json(stats));
}

// catalog

struct CatalogArgs {
  bool list = false;
  std::string show;
  std::string format = "json";
};

json group_summary(const GroupSpec& spec) {
  const Group g = make_group(spec);
  json j{{"spec", spec.to_string()}};
  const auto order = g.order();
  j["order"] = order ? json(*order) : json(nullptr);
  j["abelian"] = g.is_abelian();
  j["has_order_two"] = g.has_order_two();
  return j;
}

void run_catalog(const CatalogArgs& c, std::ostream& out) {
  if (!c.show.empty()) {
    const GroupSpec spec = GroupSpec::parse(c.show);
    const Group g = make_group(spec);
    json j = group_summary(spec);
    j["elements"] = element_list(g, g.elements(kMaxCayleyOrder));
    if (g.kind() == GroupKind::cayley) {
      json gens = json::array();
      for (const auto& gen : g.table().generators()) gens.push_back(gen.name);
      j["generators"] = gens;
    }
    emit(out, j);
    return;
  }
  if (c.format == "text") {
    for (const auto& spec : catalog_specs()) {
      const Group g = make_group(spec);
      out << spec.to_string() << "\torder " << *g.order() << (g.is_abelian() ? "\tabelian" : "")
          << (g.has_order_two() ? "" : "\torder-2-free") << "\n";
    }
    return;
  }
  json arr = json::array();
  for (const auto& spec : catalog_specs()) arr.push_back(group_summary(spec));
  emit(out, arr);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qset: quotient sets AA^-1 and A^-1 A of finite subsets of groups", "qset"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  QuotientArgs qa;
  auto* quotient = app.add_subcommand("quotient", "Quotient-set sizes and energies of a subset");
  quotient->add_option("--group", qa.group, "Group spec, e.g. f:3, dinf, s:8, sd16")->required();
  quotient->add_option("--set", qa.set, "Comma-separated elements")->required();
  quotient->add_option("--format", qa.format)->check(CLI::IsMember({"json", "text"}));

  GraphArgs ga;
  auto* graph = app.add_subcommand("graph", "Difference graph of a subset");
  graph->add_option("--group", ga.group)->required();
  graph->add_option("--set", ga.set)->required();
  graph->add_option("--side", ga.side)->check(CLI::IsMember({"left", "right"}));
  graph->add_option("--format", ga.format)->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--edges", ga.edges, "DOT edge style")->check(CLI::IsMember({"clique", "path"}));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Built-in families of subsets");
  construct->add_option("family", ca.family)
      ->required()
      ->check(CLI::IsMember({"gapset", "dinfty", "f3", "an", "ck"}));
  construct->add_option("--n", ca.n, "Number of blocks for an")->check(CLI::Range(1U, 64U));
  construct->add_option("--k", ca.k, "Parameter of ck")->check(CLI::Range(1U, 1000U));
  auto* t_opt = construct->add_option("--t", ca.t, "Target gap for gapset / dinfty");
  auto* b_opt = construct->add_option("--intset", ca.intset, "Integer set for dinfty, {0,1,3}");
  t_opt->excludes(b_opt);
  construct->add_option("--window", ca.window, "Search window [0, w]")
      ->check(CLI::Range(0, kMaxGapWindow));
  construct->add_option("--threads", ca.threads, "0 = all cores");
  construct->add_flag("--verify", ca.verify, "Compare with closed forms; exit 4 on mismatch");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exhaustive search for unbalanced subsets");
  search->add_option("--group", sa.group)->required();
  auto* max_opt = search->add_option("--max-size", sa.max_size);
  search->add_option("--budget", sa.budget, "Subset evaluations, integer or 2^b");
  search->add_option("--threads", sa.threads, "0 = all cores");
  search->add_flag("--no-prune", sa.no_prune, "Do not skip sets whose inverse comes first");
  auto* small_opt = search->add_flag("--small-sets", sa.small_sets,
                                     "Check sizes <= 3 (<= 4 when order-2-free)");
  small_opt->excludes(max_opt);

  SampleArgs pa;
  auto* sample = app.add_subcommand("sample", "Gap statistics over subsets of a ball in F_2");
  sample->add_option("--radius", pa.radius)->required()->check(CLI::Range(0U, kMaxBallRadius));
  sample->add_option("--mode", pa.mode)->check(CLI::IsMember({"exact", "mc"}));
  sample->add_option("--trials", pa.trials)->check(CLI::PositiveNumber);
  sample->add_option("--seed", pa.seed);
  sample->add_option("--probability", pa.probability)->check(CLI::Range(0.0, 1.0));
  sample->add_option("--threads", pa.threads, "0 = all cores");
  sample->add_flag("--allow-large", pa.allow_large, "Exact mode up to 2^25 subsets");

  CatalogArgs cata;
  auto* catalog = app.add_subcommand("catalog", "Finite groups available by spec");
  auto* list_opt = catalog->add_flag("--list", cata.list);
  auto* show_opt = catalog->add_option("--show", cata.show, "Print one group's elements");
  catalog->add_option("--format", cata.format)->check(CLI::IsMember({"json", "text"}));
  list_opt->excludes(show_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (quotient->parsed()) {
      run_quotient(qa, out);
    } else if (graph->parsed()) {
      run_graph(ga, out, err);
    } else if (construct->parsed()) {
      return run_construct(ca, *construct, out, err);
    } else if (search->parsed()) {
      run_search(sa, *search, out);
    } else if (sample->parsed()) {
      run_sample(pa, *sample, out);
    } else if (catalog->parsed()) {
      if (!cata.list && cata.show.empty()) throw UsageError("catalog needs --list or --show");
      run_catalog(cata, out);
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    emit(out, {{"error", "budget_exceeded"},
               {"message", e.what()},
               {"subsets_examined", e.examined()},
               {"sizes_completed", e.sizes_completed()}});
    return kBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const MalformedWord& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedSpec& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const ContextMismatch& e) {
    err << "context mismatch: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

} // namespace qset::cli
