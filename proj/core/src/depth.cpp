#include "groupdepth/depth.hpp"

#include <algorithm>

namespace groupdepth {

const char *to_string(DepthMethod m) {
  switch (m) {
  case DepthMethod::depth1_test:
    return "depth1_test";
  case DepthMethod::normality:
    return "normality";
  case DepthMethod::inclusion_matrix_corefree:
    return "inclusion_matrix_corefree";
  case DepthMethod::inclusion_matrix_general:
    return "inclusion_matrix_general";
  case DepthMethod::graph_interval:
    return "graph_interval";
  }
  return "?";
}

namespace {

// |N_G(H)| = |H| * #{cosets Ht fixed by every element of H}
BigInt normalizer_order_from_cosets(const std::vector<Permutation> &coset_reps,
                                    const PermGroup &h) {
  std::uint64_t fixed = 0;
  for (const auto &t : coset_reps) {
    bool ok = true;
    for (const auto &hg : h.generators())
      if (!h.contains(t * hg * t.inverse())) {
        ok = false;
        break;
      }
    if (ok)
      ++fixed;
  }
  return h.order() * fixed;
}

} // namespace

DepthComputation compute_depth_full(const PermGroup &g, const PermGroup &h,
                                    const Limits &limits,
                                    std::optional<std::uint64_t> prime) {
  if (!is_subgroup(h, g))
    throw std::invalid_argument("depth requires H <= G of one degree");

  DepthComputation out;
  DepthReport &rep = out.report;
  rep.group_order = g.order();
  rep.subgroup_order = h.order();
  rep.index = g.order() / h.order();

  if (h.order() == g.order()) {
    rep.depth = 1;
    rep.method = DepthMethod::depth1_test;
    rep.core_order = h.order();
    rep.certs.normalizer_order = g.order();
    rep.certs.iteration_cap = 2;
    return out;
  }

  if (is_normal(h, g)) {
    rep.core_order = h.order();
    rep.certs.normalizer_order = g.order();
    rep.certs.iteration_cap = 2;
    // depth 1 iff every H-class equals its G-class, i.e. G = H C_G(x) for
    // all x in H; tested through the class sizes along the fusion
    auto cdg = conjugacy_classes(g, limits);
    auto cdh = conjugacy_classes(h, limits);
    auto fus = class_fusion(cdh, cdg);
    std::optional<unsigned> witness;
    for (std::size_t i = 0; i < cdh.count(); ++i)
      if (cdh.sizes[i] != cdg.sizes[fus.map[i]]) {
        witness = static_cast<unsigned>(i);
        break;
      }
    rep.fusion = std::move(fus);
    if (!witness) {
      rep.depth = 1;
      rep.method = DepthMethod::depth1_test;
    } else {
      rep.depth = 2;
      rep.method = DepthMethod::normality;
      rep.certs.normal_witness = cdh.reps[*witness].cycle_string();
    }
    out.cdg = std::move(cdg);
    out.cdh = std::move(cdh);
    return out;
  }

  // non-normal: inclusion-matrix route
  auto action = coset_action(g, h, limits);
  rep.core_order = action.kernel.order();

  BigInt norm_order = normalizer_order_from_cosets(action.coset_reps, h);
  rep.certs.normalizer_order = norm_order;
  BigInt cap_big = 2 * (g.order() / norm_order);
  rep.certs.iteration_cap =
      cap_big > 1'000'000 ? 1'000'000u : static_cast<unsigned>(cap_big);

  auto cdg = conjugacy_classes(g, limits);
  auto cdh = conjugacy_classes(h, limits);
  auto tabg = character_table(cdg, prime);
  rep.prime = tabg.p;
  auto tabh = character_table(cdh, tabg.p);
  auto fus = class_fusion(cdh, cdg);
  auto m = inclusion_matrix(tabh, tabg, fus, cdh, cdg);

  unsigned d = depth_general(m, rep.certs.iteration_cap);
  rep.certs.support_stable_level = d;
  rep.depth = d;
  rep.method = DepthMethod::inclusion_matrix_general;

  auto graph = build_character_graph(m);
  const bool core_free = rep.core_order == 1;
  if (graph.connected != core_free)
    throw InternalError("graph connectivity disagrees with the core computation");

  if (core_free) {
    unsigned d_cf = depth_core_free(m, rep.certs.iteration_cap);
    if (d_cf != d)
      throw InternalError("the core-free and general criteria disagree");
    rep.method = DepthMethod::inclusion_matrix_corefree;
    rep.certs.min_positive_level = d_cf - 1;

    auto est = depth_interval(graph, m);
    if (std::find(est.candidates.begin(), est.candidates.end(), d) ==
        est.candidates.end())
      throw InternalError("computed depth escapes the graph windows");
    rep.graph = std::move(est);

    if (auto w5 = depth5_witness(m)) {
      if (d < 5)
        throw InternalError("a depth>=5 witness exists but the depth is below 5");
      rep.certs.depth5_pair = *w5;
    }
  }

  // a vanishing pair of induced characters certifies depth >= 4
  for (std::size_t a = 0; a < graph.n && !rep.certs.vanishing_pair; ++a)
    for (std::size_t b = a + 1; b < graph.n; ++b)
      if (graph.gram[a][b] == 0) {
        rep.certs.vanishing_pair = {static_cast<unsigned>(a), static_cast<unsigned>(b)};
        break;
      }
  if (rep.certs.vanishing_pair && rep.depth < 4)
    throw InternalError("a vanishing pair exists but the depth is below 4");
  if (!rep.certs.vanishing_pair && core_free && rep.depth != 3)
    throw InternalError("complete graph must mean depth 3");

  rep.fusion = std::move(fus);
  rep.matrix = std::move(m);
  out.cdg = std::move(cdg);
  out.cdh = std::move(cdh);
  out.tabg = std::move(tabg);
  out.tabh = std::move(tabh);
  return out;
}

} // namespace groupdepth
