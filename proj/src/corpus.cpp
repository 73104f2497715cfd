#include <algorithm>
#include <exception>
#include <map>
#include <numeric>

#include <omp.h>

#include "cogrowth/error.hpp"
#include "cogrowth/verify.hpp"

namespace cogrowth {

  std::uint64_t Rng::next() noexcept {
    std::uint64_t z = (_state += 0x9e3779b97f4a7c15ULL);
    z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t Rng::below(std::uint64_t n) noexcept {
    std::uint64_t const limit = -n % n;  // 2^64 mod n
    std::uint64_t       x;
    do {
      x = next();
    } while (x < limit);
    return x % n;
  }

  double Rng::uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    Rng r(seed ^ (index * 0xd1b54a32d192ed03ULL));
    r.next();
    return r.next();
  }

  Digraph random_sc_digraph(std::size_t             n,
                            std::uint64_t           seed,
                            GeneratorOptions const& opts) {
    if (n < 2 || n > 16) {
      throw Error(ErrorCode::invalid_argument,
                  "vertex count must lie in [2, 16], got " + std::to_string(n));
    }
    Rng                        rng(seed);
    std::vector<VertexId>      perm(n);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
      std::iota(perm.begin(), perm.end(), VertexId(0));
      for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(perm[i], perm[rng.below(i + 1)]);
      }
      edges.clear();
      for (VertexId v = 0; v < n; ++v) {
        edges.emplace_back(v, perm[v]);
        if (rng.uniform() < opts.extra_edge_prob) {
          edges.emplace_back(v, static_cast<VertexId>(rng.below(n)));
        }
      }
      auto g = Digraph::from_edges(n, edges);
      if (strongly_connected(g) && !is_cycle(g)) {
        return g;
      }
    }
    throw Error(ErrorCode::generation_failed,
                "no strongly connected non-cycle digraph on "
                    + std::to_string(n) + " vertices after "
                    + std::to_string(opts.max_attempts) + " attempts");
  }

  std::vector<CorpusItem> make_corpus(CorpusSpec const& spec) {
    if (spec.min_vertices < 2 || spec.max_vertices > 16
        || spec.min_vertices > spec.max_vertices) {
      throw Error(ErrorCode::invalid_argument,
                  "corpus vertex range must satisfy 2 <= min <= max <= 16");
    }
    std::vector<CorpusItem> items;
    items.reserve(spec.count);
    std::size_t const max_attempts = 1000 * (spec.count + 1);
    for (std::size_t attempt = 0; items.size() < spec.count; ++attempt) {
      if (attempt == max_attempts) {
        throw Error(ErrorCode::generation_failed,
                    "corpus filter rejected " + std::to_string(max_attempts)
                        + " graphs in a row");
      }
      auto const s = mix_seed(spec.seed, attempt);
      Rng        rng(s);
      auto const n = spec.min_vertices
                     + rng.below(spec.max_vertices - spec.min_vertices + 1);
      auto g = random_sc_digraph(n, rng.next(), {spec.extra_edge_prob, 1000});
      if (spec.max_er) {
        auto er = entropy_regulator(g);
        if (!er.is_finite() || er.value() > *spec.max_er) {
          continue;
        }
      }
      items.push_back({items.size(), s, std::move(g)});
    }
    return items;
  }

  namespace corpus_defaults {
    CorpusSpec evol() {
      return {42, 300, 2, 12, std::nullopt, 0.5};
    }
    CorpusSpec del_edge() {
      return {7, 300, 2, 12, std::nullopt, 0.5};
    }
    CorpusSpec main_lemma() {
      return {3, 50, 2, 6, 2, 0.75};
    }
    CorpusSpec corollary_main() {
      return {11, 20, 2, 6, 2, 0.75};
    }
  }  // namespace corpus_defaults

  namespace {
    struct Outcome {
      bool        pass   = true;
      std::size_t checks = 0;
      std::size_t er     = 0;
      std::size_t extra  = 0;  // checker-specific tally
      std::string witness;
    };

    nlohmann::ordered_json corpus_json(CorpusSpec const& spec) {
      nlohmann::ordered_json j;
      j["seed"]         = spec.seed;
      j["count"]        = spec.count;
      j["min_vertices"] = spec.min_vertices;
      j["max_vertices"] = spec.max_vertices;
      if (spec.max_er) {
        j["max_er"] = *spec.max_er;
      } else {
        j["max_er"] = nullptr;
      }
      j["extra_edge_prob"] = spec.extra_edge_prob;
      return j;
    }

    template <typename Check>
    LemmaReport run_corpus(std::string       lemma,
                           CorpusSpec const& spec,
                           Check&&           check,
                           Execution         exec) {
      auto const           items = make_corpus(spec);
      std::vector<Outcome> outcomes(items.size());
      std::vector<std::exception_ptr> errors(items.size());

      auto one = [&](std::size_t i) {
        try {
          outcomes[i] = check(items[i].graph);
        } catch (Error const& e) {
          if (e.code() == ErrorCode::precondition_failed) {
            outcomes[i].pass    = false;
            outcomes[i].witness = e.what();
          } else {
            errors[i] = std::current_exception();
          }
        } catch (...) {
          errors[i] = std::current_exception();
        }
      };

      if (exec == Execution::parallel) {
        auto const n = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < n; ++i) {
          one(static_cast<std::size_t>(i));
        }
      } else {
        for (std::size_t i = 0; i < items.size(); ++i) {
          one(i);
        }
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }

      LemmaReport report;
      report.lemma       = std::move(lemma);
      report.corpus      = corpus_json(spec);
      report.corpus_size = items.size();
      std::map<std::size_t, std::size_t> histogram;
      std::size_t                        extra = 0;
      for (std::size_t i = 0; i < items.size(); ++i) {
        auto const& o = outcomes[i];
        report.checks += o.checks;
        extra += o.extra;
        if (o.er > 0) {
          ++histogram[o.er];
        }
        if (o.pass) {
          ++report.passes;
        } else {
          report.violations.push_back(
              {items[i].index, items[i].seed, items[i].graph, o.witness});
        }
      }
      nlohmann::ordered_json h = nlohmann::ordered_json::object();
      for (auto [l, c] : histogram) {
        h[std::to_string(l)] = c;
      }
      report.details["er_histogram"] = h;
      report.details["tally"]        = extra;
      return report;
    }

    std::string path_string(std::span<EdgeId const> edges) {
      std::string s = "[";
      for (std::size_t i = 0; i < edges.size(); ++i) {
        s += (i ? "," : "") + std::to_string(edges[i]);
      }
      return s + "]";
    }

    Outcome main_outcome(MainLemmaVerdict const& v) {
      Outcome o{v.pass(), v.cases.size(), v.er, v.good_path_route_uses(), {}};
      if (!v.bijection) {
        o.witness = "edges of f^" + std::to_string(v.order)
                    + " do not match the paths of g with "
                    + std::to_string(v.order + 1) + " edges";
      } else {
        for (auto const& c : v.cases) {
          if (!c.found()) {
            o.witness = "no B for edge " + std::to_string(c.edge) + " of f^"
                        + std::to_string(v.order) + " (er(g) = "
                        + std::to_string(v.er) + ")";
            break;
          }
        }
      }
      return o;
    }
  }  // namespace

  LemmaReport run_lemma_evol(CorpusSpec const& spec, Execution exec) {
    auto r = run_corpus(
        "evol",
        spec,
        [](Digraph const& g) {
          auto v = check_lemma_evol(g);
          Outcome o{v.pass, 1, v.er_graph.value(), 0, {}};
          if (!v.pass) {
            o.witness = "er(g) = " + v.er_graph.to_string()
                        + ", er(f(g)) = " + v.er_line.to_string();
          }
          return o;
        },
        exec);
    r.details.erase("tally");
    return r;
  }

  LemmaReport run_lemma_del_edge(CorpusSpec const& spec, Execution exec) {
    auto r = run_corpus(
        "del-edge",
        spec,
        [](Digraph const& g) {
          auto    v = check_lemma_del_edge(g);
          Outcome o{v.pass(), v.cases.size(), v.er, 0, {}};
          for (auto const& c : v.cases) {
            if (c.cycle) {
              ++o.extra;
            }
            if (!c.pass && o.witness.empty()) {
              o.witness = "deleting edge " + std::to_string(c.edge)
                          + " leaves " + std::to_string(c.vertices)
                          + " vertices, strongly connected = "
                          + (c.strongly_connected ? "yes" : "no")
                          + ", cycle = " + (c.cycle ? "yes" : "no")
                          + ", er = " + c.er.to_string() + ", L = "
                          + std::to_string(v.er);
            }
          }
          return o;
        },
        exec);
    r.details["cycle_cases"] = r.details["tally"];
    r.details.erase("tally");
    return r;
  }

  LemmaReport run_main_lemma(CorpusSpec const&       spec,
                             MainLemmaOptions const& opts,
                             Execution               exec) {
    auto r = run_corpus(
        "main",
        spec,
        [&opts](Digraph const& g) {
          return main_outcome(check_main_lemma(g, opts));
        },
        exec);
    r.details["good_path_route_uses"] = r.details["tally"];
    r.details.erase("tally");
    return r;
  }

  LemmaReport run_corollary_main(CorpusSpec const&       spec,
                                 std::size_t             offset,
                                 MainLemmaOptions const& opts,
                                 Execution               exec) {
    auto r = run_corpus(
        "corollary-main",
        spec,
        [&opts, offset](Digraph const& g) {
          require_lemma_hypotheses(g, true);
          auto const k = 3 * entropy_regulator(g).value() + offset;
          return main_outcome(check_corollary_main(g, k, opts));
        },
        exec);
    r.details["offset"]               = offset;
    r.details["good_path_route_uses"] = r.details["tally"];
    r.details.erase("tally");
    return r;
  }

  namespace {
    // All paths of g with at most max_edges edges, as edge sequences; paths
    // with no edges are represented by their vertex.
    void all_paths(Digraph const&                             g,
                   std::size_t                                max_edges,
                   std::vector<std::pair<VertexId, std::vector<EdgeId>>>& out) {
      std::vector<std::pair<VertexId, std::vector<EdgeId>>> frontier;
      for (auto const& v : g.vertices()) {
        frontier.push_back({v.id, {}});
      }
      for (std::size_t len = 0; len <= max_edges; ++len) {
        std::vector<std::pair<VertexId, std::vector<EdgeId>>> next;
        for (auto const& [start, p] : frontier) {
          out.push_back({start, p});
          if (len == max_edges) {
            continue;
          }
          auto const end = p.empty() ? start : g.edge(p.back()).target;
          for (auto e : g.out_edges(end)) {
            auto q = p;
            q.push_back(e);
            next.push_back({start, std::move(q)});
          }
        }
        frontier = std::move(next);
      }
    }
  }  // namespace

  LemmaReport run_good_path(CorpusSpec const&    spec,
                            GoodPathSweep const& sweep,
                            Execution            exec) {
    auto r = run_corpus(
        "good-path",
        spec,
        [&sweep](Digraph const& g) {
          require_lemma_hypotheses(g, true);
          Outcome o{true, 0, entropy_regulator(g).value(), 0, {}};
          std::vector<std::pair<VertexId, std::vector<EdgeId>>> banned, paths;
          all_paths(g, sweep.max_banned_edges, banned);
          all_paths(g, sweep.max_path_edges, paths);
          for (auto const& [b_start, b] : banned) {
            if (b.empty() || g.out_degree(g.edge(b.back()).source) < 2) {
              continue;
            }
            GoodPathContext ctx(g, Path::from_edges(g, b));
            ++o.extra;
            for (auto const& [start, p] : paths) {
              auto s = p.empty() ? Path::single(g, start)
                                 : Path::from_edges(g, p);
              if (!ctx.is_good(s)) {
                continue;
              }
              ++o.checks;
              auto const got = good_path_extend(ctx, s);
              std::vector<EdgeId> want;
              for (auto e : g.out_edges(s.back())) {
                auto q = p;
                q.push_back(e);
                if (ctx.is_good(q)) {
                  want.push_back(e);
                }
              }
              bool const two = g.out_degree(s.back()) >= 2
                               && s.back() != ctx.fork();
              if (got != want || got.empty() || (two && got.size() != 2)) {
                o.pass    = false;
                o.witness = "banned " + path_string(b) + ", path from v"
                            + std::to_string(start) + " " + path_string(p)
                            + ": extensions " + path_string(got)
                            + ", expected " + path_string(want);
                return o;
              }
            }
          }
          return o;
        },
        exec);
    r.details["banned_paths"] = r.details["tally"];
    r.details.erase("tally");
    r.details["max_banned_edges"] = sweep.max_banned_edges;
    r.details["max_path_edges"]   = sweep.max_path_edges;
    return r;
  }

}  // namespace cogrowth
