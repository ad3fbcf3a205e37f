#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "groupdepth/bases.hpp"
#include "groupdepth/corpus.hpp"
#include "groupdepth/depth.hpp"
#include "groupdepth/jobspec.hpp"
#include "groupdepth/report.hpp"

using namespace groupdepth;

namespace {

using Clock = std::chrono::steady_clock;

struct CommonOpts {
  std::string group_spec, subgroup_spec, out_path;
  std::uint64_t prime = 0;
  std::uint64_t seed = 271828;
  unsigned trials = 1000;
  Limits limits;
};

void add_common(CLI::App *cmd, CommonOpts &o, bool needs_subgroup) {
  cmd->add_option("--group", o.group_spec,
                  "group source (constructor, file, or inline generators)")
      ->required();
  if (needs_subgroup)
    cmd->add_option("--subgroup", o.subgroup_spec, "subgroup construction chain")
        ->required();
  cmd->add_option("--prime", o.prime,
                  "prime modulus override (must be 1 mod exp(G) and > |G|)");
  cmd->add_option("--seed", o.seed, "seed for randomized searches");
  cmd->add_option("--trials", o.trials, "trial count for randomized searches");
  cmd->add_option("--max-order", o.limits.max_order, "element-enumeration bound");
  cmd->add_option("--max-index", o.limits.max_index, "coset-action bound");
  cmd->add_option("--out", o.out_path, "write the JSON report to a file instead of stdout");
}

void emit(const CommonOpts &o, const Json &j) {
  std::string text = j.dump(2);
  text += '\n';
  if (o.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out_path);
    if (!out)
      throw ParseError("cannot write to " + o.out_path);
    out << text;
  }
}

std::optional<std::uint64_t> prime_opt(const CommonOpts &o) {
  if (o.prime == 0)
    return std::nullopt;
  return o.prime;
}

int cmd_depth(const CommonOpts &o) {
  auto t0 = Clock::now();
  auto g = parse_group_source(o.group_spec, o.limits);
  auto h = build_subgroup(g.group, o.subgroup_spec, o.limits);
  auto comp = compute_depth_full(g.group, h, o.limits, prime_opt(o));
  const DepthReport &rep = comp.report;

  Json extras;
  if (rep.core_order == 1 && comp.cdg && comp.cdh && rep.fusion) {
    auto chi = permutation_character(*rep.fusion, *comp.cdh, *comp.cdg, rep.prime);
    std::vector<std::uint64_t> counts(chi.v.begin(), chi.v.end());
    Json qj = Json::array();
    for (unsigned t : {2u, 3u}) {
      auto q = q_bound(*comp.cdg, counts, t);
      Json one;
      one["t"] = q.t;
      one["value"] = q.value.str();
      one["proves_base_at_most_t"] = q.proves_base_bound;
      if (q.proves_base_bound)
        one["depth_bound"] = q.depth_bound;
      qj.push_back(std::move(one));
    }
    extras["q_bounds"] = std::move(qj);

    if (auto w = random_base2_witness(g.group, h, o.trials, o.seed)) {
      if (rep.depth != 3)
        throw InternalError("a verified base-2 witness forces depth 3");
      extras["base2_witness"] = w->cycle_string();
    }
  }

  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  emit(o, depth_report_json(rep, g.label, o.subgroup_spec, o.seed, extras, ms));
  return 0;
}

int cmd_basesize(const CommonOpts &o) {
  auto t0 = Clock::now();
  auto g = parse_group_source(o.group_spec, o.limits);
  auto h = build_subgroup(g.group, o.subgroup_spec, o.limits);
  auto res = base_size_exact(g.group, h, o.limits);

  std::vector<QBound> qs;
  if (g.group.order() <= o.limits.max_order) {
    auto cdg = conjugacy_classes(g.group, o.limits);
    auto cdh = conjugacy_classes(h, o.limits);
    auto tab = character_table(cdg, prime_opt(o));
    auto fus = class_fusion(cdh, cdg);
    auto chi = permutation_character(fus, cdh, cdg, tab.p);
    std::vector<std::uint64_t> counts(chi.v.begin(), chi.v.end());
    for (unsigned t : {2u, 3u})
      qs.push_back(q_bound(cdg, counts, t));
  }
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  emit(o, basesize_json(res, g.label, o.subgroup_spec, qs, o.seed, ms));
  return 0;
}

int cmd_chartab(const CommonOpts &o) {
  auto g = parse_group_source(o.group_spec, o.limits);
  auto cd = conjugacy_classes(g.group, o.limits);
  auto tab = character_table(cd, prime_opt(o));
  emit(o, to_json(make_chartab_document(tab, cd, g.label)));
  return 0;
}

int cmd_kgraph(const CommonOpts &o, const std::string &dot_path) {
  auto g = parse_group_source(o.group_spec, o.limits);
  auto h = build_subgroup(g.group, o.subgroup_spec, o.limits);
  auto cdg = conjugacy_classes(g.group, o.limits);
  auto cdh = conjugacy_classes(h, o.limits);
  auto tabg = character_table(cdg, prime_opt(o));
  auto tabh = character_table(cdh, tabg.p);
  auto fus = class_fusion(cdh, cdg);
  auto m = inclusion_matrix(tabh, tabg, fus, cdh, cdg);
  auto graph = build_character_graph(m);
  std::optional<GraphDepthEstimate> est;
  if (graph.connected)
    est = depth_interval(graph, m);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out)
      throw ParseError("cannot write to " + dot_path);
    out << graph_dot(graph);
  }
  emit(o, graph_json(graph, est ? &*est : nullptr));
  return 0;
}

int cmd_corpus(const CommonOpts &o, const std::string &file, const std::string &filter,
               unsigned workers) {
  auto entries = load_corpus(file);
  auto run = run_corpus(entries, filter, workers, o.limits, o.seed);
  std::size_t passed = 0;
  for (const auto &r : run.results) {
    std::string line = r.ok ? "PASS " : "FAIL ";
    line += r.id;
    if (r.depth)
      line += "  depth=" + std::to_string(*r.depth);
    if (r.base)
      line += "  base=" + std::to_string(*r.base);
    char buf[32];
    std::snprintf(buf, sizeof buf, "  (%.1f ms)", r.wall_ms);
    line += buf;
    if (!r.ok)
      line += "  -- " + r.message;
    std::cout << line << "\n";
    passed += r.ok;
  }
  std::cout << passed << "/" << run.results.size() << " corpus entries passed\n";
  return run.all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{
      "subgroup depth, base sizes and character tables for small permutation groups"};
  app.require_subcommand(1);

  CommonOpts o_depth, o_base, o_chartab, o_kgraph, o_corpus;
  std::string dot_path, corpus_file, corpus_filter;
  unsigned workers = 1;

  add_common(app.add_subcommand("depth", "compute the subgroup depth with certificates"),
             o_depth, true);
  add_common(app.add_subcommand("basesize", "exact base size with a verified witness"),
             o_base, true);
  add_common(app.add_subcommand("chartab", "character table over a prime field"),
             o_chartab, false);
  auto *kg = app.add_subcommand("kgraph", "induced-character graph and depth windows");
  add_common(kg, o_kgraph, true);
  kg->add_option("--dot", dot_path, "also write the graph in DOT format");
  auto *cp = app.add_subcommand("corpus", "run the regression corpus");
  cp->add_option("--file", corpus_file, "corpus file")->required();
  cp->add_option("--filter", corpus_filter,
                 "only run entries whose id contains this string");
  cp->add_option("--workers", workers, "parallel workers");
  cp->add_option("--seed", o_corpus.seed, "seed for randomized searches");
  cp->add_option("--max-order", o_corpus.limits.max_order, "element-enumeration bound");
  cp->add_option("--max-index", o_corpus.limits.max_index, "coset-action bound");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand("depth"))
      return cmd_depth(o_depth);
    if (app.got_subcommand("basesize"))
      return cmd_basesize(o_base);
    if (app.got_subcommand("chartab"))
      return cmd_chartab(o_chartab);
    if (app.got_subcommand("kgraph"))
      return cmd_kgraph(o_kgraph, dot_path);
    if (app.got_subcommand("corpus"))
      return cmd_corpus(o_corpus, corpus_file, corpus_filter, workers);
    return 2;
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitError &e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InternalError &e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 4;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
