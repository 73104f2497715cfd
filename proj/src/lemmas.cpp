#include <algorithm>
#include <limits>
#include <set>

#include "cogrowth/error.hpp"
#include "cogrowth/verify.hpp"

namespace cogrowth {

  void require_lemma_hypotheses(Digraph const& g, bool binary) {
    if (g.empty()) {
      throw Error(ErrorCode::precondition_failed, "graph is empty");
    }
    if (!strongly_connected(g)) {
      throw Error(ErrorCode::precondition_failed,
                  "graph is not strongly connected");
    }
    if (is_cycle(g)) {
      throw Error(ErrorCode::precondition_failed, "graph is a cycle");
    }
    if (!entropy_regulator(g).is_finite()) {
      throw Error(ErrorCode::precondition_failed,
                  "entropy regulator is infinite");
    }
    if (binary && g.max_out_degree() > 2) {
      throw Error(ErrorCode::precondition_failed,
                  "some vertex has out-degree above 2");
    }
  }

  EvolVerdict check_lemma_evol(Digraph const& g) {
    require_lemma_hypotheses(g, false);
    auto const er   = entropy_regulator(g);
    auto const line = entropy_regulator(line_digraph(g).graph);
    return {er, line, er == line};
  }

  bool DelEdgeVerdict::pass() const {
    return std::all_of(
        cases.begin(), cases.end(), [](auto const& c) { return c.pass; });
  }

  DelEdgeVerdict check_lemma_del_edge(Digraph const& g) {
    require_lemma_hypotheses(g, true);
    DelEdgeVerdict verdict{entropy_regulator(g).value(), {}};
    auto const     l = verdict.er;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      if (g.out_indices(g.source_index(i)).size() < 2) {
        continue;
      }
      auto const id  = g.edges()[i].id;
      auto const sub = delete_edge_reachable(g, id);
      auto const sc  = strongly_connected(sub);
      auto const cy  = sc && is_cycle(sub);
      auto const er  = entropy_regulator(sub);
      bool const ok
          = sc
            && ((cy && sub.num_vertices() <= l)
                || (er.is_finite() && er.value() <= 2 * l));
      verdict.cases.push_back({id, sub.num_vertices(), sc, cy, er, ok});
    }
    return verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // Good paths
  ////////////////////////////////////////////////////////////////////////

  GoodPathContext::GoodPathContext(Digraph host, Path forbidden)
      : _host(std::move(host)), _forbidden(std::move(forbidden)), _fork(0) {
    if (_host.empty() || !strongly_connected(_host)) {
      throw Error(ErrorCode::precondition_failed,
                  "host graph must be nonempty and strongly connected");
    }
    if (_host.max_out_degree() > 2) {
      throw Error(ErrorCode::precondition_failed,
                  "host graph has a vertex of out-degree above 2");
    }
    if (_forbidden.edges().empty()) {
      throw Error(ErrorCode::precondition_failed,
                  "banned path needs at least one edge");
    }
    for (auto e : _forbidden.edges()) {
      if (!_host.has_edge(e)) {
        throw Error(ErrorCode::precondition_failed,
                    "banned path uses unknown edge " + std::to_string(e));
      }
    }
    _fork = _host.edge(_forbidden.edges().back()).source;
    if (_host.out_degree(_fork) < 2) {
      throw Error(ErrorCode::precondition_failed,
                  "last edge of the banned path does not leave a fork");
    }
  }

  bool GoodPathContext::is_good(std::span<EdgeId const> edges) const {
    return !find_path_occurrence(edges,
                                 std::span<EdgeId const>(_forbidden.edges()));
  }

  std::vector<EdgeId> good_path_extend(GoodPathContext const& ctx,
                                       Path const&            s) {
    if (!ctx.is_good(s)) {
      throw Error(ErrorCode::not_good, "path already contains the banned path");
    }
    auto const&         banned = ctx.forbidden().edges();
    std::vector<EdgeId> out;
    std::vector<EdgeId> tail;
    for (auto e : ctx.host().out_edges(s.back())) {
      // s is good, so s e can only contain the banned path as a suffix.
      tail.assign(s.edges().begin(), s.edges().end());
      tail.push_back(e);
      bool const bad
          = tail.size() >= banned.size()
            && std::equal(banned.begin(), banned.end(), tail.end() - banned.size());
      if (!bad) {
        out.push_back(e);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Main lemma
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(BRoute r) noexcept {
    switch (r) {
      case BRoute::none:
        return "none";
      case BRoute::strongly_connected_component:
        return "component";
      case BRoute::good_path_subgraph:
        return "good-path-subgraph";
    }
    return "none";
  }

  bool MainLemmaVerdict::pass() const {
    return bijection
           && std::all_of(cases.begin(), cases.end(), [](auto const& c) {
                return c.found();
              });
  }

  std::size_t MainLemmaVerdict::good_path_route_uses() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](auto const& c) {
          return c.route == BRoute::good_path_subgraph;
        }));
  }

  namespace {
    struct Candidate {
      std::size_t vertices = 0;
      std::size_t edges    = 0;
      ErValue     er       = ErValue::infinite();
    };

    // First strongly connected component (in component order) of the masked
    // graph that has an edge and entropy regulator <= threshold.
    std::optional<Candidate>
    find_component(Digraph const&           f,
                   std::vector<char> const* vertex_alive,
                   std::vector<char> const& edge_alive,
                   std::size_t              threshold,
                   std::vector<std::uint32_t>& comp,
                   std::vector<char>&          mask) {
      auto const count
          = detail::scc_indices(f, vertex_alive, &edge_alive, comp);
      std::vector<std::size_t> inner_edges(count, 0), size(count, 0);
      for (std::size_t v = 0; v < f.num_vertices(); ++v) {
        if (comp[v] != std::numeric_limits<std::uint32_t>::max()) {
          ++size[comp[v]];
        }
      }
      for (std::size_t e = 0; e < f.num_edges(); ++e) {
        auto s = comp[f.source_index(e)];
        if (edge_alive[e] && s != std::numeric_limits<std::uint32_t>::max()
            && s == comp[f.target_index(e)]) {
          ++inner_edges[s];
        }
      }
      for (std::uint32_t c = 0; c < count; ++c) {
        if (inner_edges[c] == 0) {
          continue;
        }
        mask.assign(f.num_vertices(), 0);
        for (std::size_t v = 0; v < f.num_vertices(); ++v) {
          mask[v] = comp[v] == c;
        }
        auto er = detail::entropy_regulator_masked(f, &mask, &edge_alive);
        if (er.is_finite() && er.value() <= threshold) {
          return Candidate{size[c], inner_edges[c], er};
        }
      }
      return std::nullopt;
    }

    MainLemmaVerdict check_iterated(Digraph const&          g,
                                    std::size_t             l,
                                    std::size_t             k,
                                    MainLemmaOptions const& opts) {
      auto const      it = iterate_line_digraph(g, k, opts.budget);
      auto const&     f  = it.graph();
      MainLemmaVerdict verdict{l, k, f.num_vertices(), f.num_edges(), true, {}};

      // Edges of f^k <-> paths of g with k + 1 edges.
      auto const paths
          = count_paths(g, k + 1, std::numeric_limits<std::size_t>::max() - 1);
      verdict.bijection = paths == f.num_edges();
      for (std::size_t e = 1; e < f.num_edges() && verdict.bijection; ++e) {
        auto prev = it.edge_path_edges(f.edges()[e - 1].id);
        auto cur  = it.edge_path_edges(f.edges()[e].id);
        verdict.bijection = std::lexicographical_compare(
            prev.begin(), prev.end(), cur.begin(), cur.end());
      }

      auto const                 threshold = 3 * l;
      std::vector<char>          edge_alive(f.num_edges(), 1);
      std::vector<char>          vertex_good, edge_good;
      std::vector<std::uint32_t> comp;
      std::vector<char>          mask;

      for (std::size_t u = 0; u < f.num_edges(); ++u) {
        MainLemmaCase c{};
        c.edge        = f.edges()[u].id;
        c.route       = BRoute::none;
        edge_alive[u] = 0;
        if (!opts.good_path_route_only) {
          if (auto b = find_component(
                  f, nullptr, edge_alive, threshold, comp, mask)) {
            c.route      = BRoute::strongly_connected_component;
            c.b_vertices = b->vertices;
            c.b_edges    = b->edges;
            c.er_b       = b->er;
          }
        }
        if (!c.found()) {
          // Banned sub-paths q of the path of u whose last edge leaves a
          // fork; B is sought among paths of g avoiding q.
          auto const p_u = it.edge_path_edges(c.edge);
          std::set<std::vector<EdgeId>> tried;
          for (std::size_t len = 1; len <= p_u.size() && !c.found(); ++len) {
            for (std::size_t i = 0; i + len <= p_u.size() && !c.found(); ++i) {
              std::vector<EdgeId> q(p_u.begin() + i, p_u.begin() + i + len);
              if (g.out_degree(g.edge(q.back()).source) < 2
                  || !tried.insert(q).second) {
                continue;
              }
              std::span<EdgeId const> qs(q);
              vertex_good.assign(f.num_vertices(), 0);
              for (std::size_t v = 0; v < f.num_vertices(); ++v) {
                vertex_good[v] = !find_path_occurrence(
                    it.vertex_path_edges(f.vertices()[v].id), qs);
              }
              edge_good.assign(f.num_edges(), 0);
              for (std::size_t e = 0; e < f.num_edges(); ++e) {
                edge_good[e]
                    = edge_alive[e]
                      && !find_path_occurrence(
                          it.edge_path_edges(f.edges()[e].id), qs);
              }
              if (auto b = find_component(
                      f, &vertex_good, edge_good, threshold, comp, mask)) {
                c.route      = BRoute::good_path_subgraph;
                c.b_vertices = b->vertices;
                c.b_edges    = b->edges;
                c.er_b       = b->er;
                c.banned     = std::move(q);
              }
            }
          }
        }
        edge_alive[u] = 1;
        verdict.cases.push_back(std::move(c));
      }
      return verdict;
    }
  }  // namespace

  MainLemmaVerdict check_main_lemma(Digraph const&          g,
                                    MainLemmaOptions const& opts) {
    require_lemma_hypotheses(g, true);
    auto const l = entropy_regulator(g).value();
    return check_iterated(g, l, 3 * l, opts);
  }

  MainLemmaVerdict check_corollary_main(Digraph const&          g,
                                        std::size_t             k,
                                        MainLemmaOptions const& opts) {
    require_lemma_hypotheses(g, true);
    auto const l = entropy_regulator(g).value();
    if (k < 3 * l) {
      throw Error(ErrorCode::precondition_failed,
                  "k = " + std::to_string(k) + " is below 3L = "
                      + std::to_string(3 * l));
    }
    return check_iterated(g, l, k, opts);
  }

}  // namespace cogrowth
