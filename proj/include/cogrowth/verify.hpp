#pragma once

// Property checks of the structural statements about Rauzy graphs, line
// digraphs and entropy regulators, run on seeded random digraph corpora and
// on Rauzy graphs of concrete sequences.
//
// Every checker verifies a statement's conclusion directly; a violation
// means an implementation bug and is reported with a replayable
// counterexample.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cogrowth/digraph.hpp"
#include "cogrowth/execution.hpp"
#include "cogrowth/factors.hpp"
#include "cogrowth/obstructions.hpp"
#include "cogrowth/rauzy.hpp"
#include "cogrowth/words.hpp"

namespace cogrowth {

  ////////////////////////////////////////////////////////////////////////
  // Random strongly connected digraphs
  ////////////////////////////////////////////////////////////////////////

  //! splitmix64; spelled out so corpora are identical on every platform.
  class Rng {
   public:
    explicit Rng(std::uint64_t seed) noexcept : _state(seed) {}
    std::uint64_t next() noexcept;
    //! Uniform in [0, n), n > 0, by rejection.
    std::uint64_t below(std::uint64_t n) noexcept;
    //! Uniform in [0, 1).
    double uniform() noexcept;

   private:
    std::uint64_t _state;
  };

  std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept;

  struct GeneratorOptions {
    //! Chance that a vertex receives a second out-edge.
    double      extra_edge_prob = 0.5;
    std::size_t max_attempts    = 1000;
  };

  //! A strongly connected digraph with 2 <= n <= 16 vertices, out-degrees
  //! at most 2, that is not a cycle: a random cycle cover plus random extra
  //! edges, rejection-sampled. Throws GenerationFailed after max_attempts
  //! and InvalidArgument if n is out of range.
  Digraph random_sc_digraph(std::size_t             n_vertices,
                            std::uint64_t           seed,
                            GeneratorOptions const& opts = {});

  struct CorpusSpec {
    std::uint64_t seed         = 42;
    std::size_t   count        = 300;
    std::size_t   min_vertices = 2;
    std::size_t   max_vertices = 12;
    //! Keep only graphs whose entropy regulator is at most this.
    std::optional<std::size_t> max_er = std::nullopt;
    double                     extra_edge_prob = 0.5;
  };

  struct CorpusItem {
    std::size_t   index;
    std::uint64_t seed;
    Digraph       graph;
  };

  //! Deterministic in \p spec; attempt i uses seed mix_seed(spec.seed, i).
  std::vector<CorpusItem> make_corpus(CorpusSpec const& spec);

  ////////////////////////////////////////////////////////////////////////
  // Per-graph checks
  ////////////////////////////////////////////////////////////////////////

  //! Throws PreconditionFailed naming the first failed hypothesis among:
  //! nonempty, strongly connected, not a cycle, finite entropy regulator,
  //! out-degrees at most 2 (when \p binary).
  void require_lemma_hypotheses(Digraph const& g, bool binary);

  struct EvolVerdict {
    ErValue er_graph;
    ErValue er_line;
    bool    pass;
  };

  //! er(f(g)) == er(g) for strongly connected non-cycle g of finite er.
  EvolVerdict check_lemma_evol(Digraph const& g);

  struct DelEdgeCase {
    EdgeId      edge;
    std::size_t vertices;
    bool        strongly_connected;
    bool        cycle;
    ErValue     er;
    bool        pass;
  };

  struct DelEdgeVerdict {
    std::size_t              er;  // L
    std::vector<DelEdgeCase> cases;
    [[nodiscard]] bool       pass() const;
  };

  //! For every edge leaving a fork: the part reachable from the fork after
  //! deleting the edge is strongly connected, and is either a cycle with at
  //! most L vertices or has entropy regulator at most 2L.
  DelEdgeVerdict check_lemma_del_edge(Digraph const& g);

  //! A host graph with a banned sub-path p; a path is good when it does not
  //! contain p. The last edge of p must leave a fork.
  class GoodPathContext {
   public:
    //! Throws PreconditionFailed if the host is not strongly connected with
    //! out-degrees <= 2, or p's last edge does not leave a fork.
    GoodPathContext(Digraph host, Path forbidden);

    [[nodiscard]] Digraph const& host() const noexcept {
      return _host;
    }
    [[nodiscard]] Path const& forbidden() const noexcept {
      return _forbidden;
    }
    //! Source of the last edge of the banned path.
    [[nodiscard]] VertexId fork() const noexcept {
      return _fork;
    }
    [[nodiscard]] bool is_good(std::span<EdgeId const> edges) const;
    [[nodiscard]] bool is_good(Path const& s) const {
      return is_good(std::span<EdgeId const>(s.edges()));
    }

   private:
    Digraph  _host;
    Path     _forbidden;
    VertexId _fork;
  };

  //! Out-edges e of the end of \p s, in id order, with s e good. Throws
  //! NotGood if \p s itself contains the banned path.
  std::vector<EdgeId> good_path_extend(GoodPathContext const& ctx,
                                       Path const&            s);

  enum class BRoute { none, strongly_connected_component, good_path_subgraph };
  std::string_view to_string(BRoute r) noexcept;

  struct MainLemmaCase {
    EdgeId      edge;  // edge u of f^k(g)
    BRoute      route;
    std::size_t b_vertices = 0;
    std::size_t b_edges    = 0;
    ErValue     er_b       = ErValue::infinite();
    //! Banned sub-path (base edge ids) defining the good-path subgraph, when
    //! that route found B.
    std::vector<EdgeId> banned;
    [[nodiscard]] bool  found() const noexcept {
      return route != BRoute::none;
    }
  };

  struct MainLemmaVerdict {
    std::size_t                er;  // L
    std::size_t                order;  // k
    std::size_t                line_vertices;
    std::size_t                line_edges;
    //! Edges of f^k(g) correspond one-to-one to paths of g with k + 2
    //! vertices.
    bool                       bijection;
    std::vector<MainLemmaCase> cases;
    [[nodiscard]] bool         pass() const;
    [[nodiscard]] std::size_t  good_path_route_uses() const;
  };

  struct MainLemmaOptions {
    std::size_t budget = default_budget;
    //! Skip the component search and use only good-path subgraphs built from
    //! banned sub-paths of the path of u.
    bool good_path_route_only = false;
  };

  //! For every edge u of f^{3L}(g), looks for a strongly connected B in
  //! f^{3L}(g) - u with at least one edge and er(B) <= 3L: first among the
  //! strongly connected components of f^{3L}(g) - u, then among the
  //! components of the subgraphs of paths avoiding a sub-path of u's path
  //! whose last edge leaves a fork.
  MainLemmaVerdict check_main_lemma(Digraph const&          g,
                                    MainLemmaOptions const& opts = {});

  //! Same conclusion for f^k(g), k >= 3L. Throws PreconditionFailed if
  //! k < 3L.
  MainLemmaVerdict check_corollary_main(Digraph const&          g,
                                        std::size_t             k,
                                        MainLemmaOptions const& opts = {});

  ////////////////////////////////////////////////////////////////////////
  // Sequence checks
  ////////////////////////////////////////////////////////////////////////

  struct CorollaryErRow {
    std::size_t n;
    ErValue     er;        // er(R_{n-1})
    std::size_t cogrowth;  // O_W(n)
    double      bound;     // 2^{O_W(n)}
    bool        pass;
  };

  struct CorollaryErReport {
    std::string                 source;
    Recurrence                  hypothesis;
    std::vector<CorollaryErRow> rows;
    std::vector<std::size_t>    violations;
  };

  //! er(R_{n-1}) <= 2^{O_W(n)} for n in [n_lo, n_hi], n_lo >= 1.
  CorollaryErReport check_corollary_er(SequenceSpec const&   spec,
                                       std::size_t           n_lo,
                                       std::size_t           n_hi,
                                       ExtractOptions const& opts = {});

  struct TheoremReport {
    CogrowthProfile profile;
    Recurrence      hypothesis;
    bool            asserted;  // false when the hypothesis does not hold
    std::string     skip_reason;
    bool            pass;  // running max of O_W(n)/log3(n) reaches 1.0
    //! O_F(n) / log_phi(n) per profile row, Fibonacci only.
    std::vector<double> log_phi_trend;
  };

  inline constexpr double theorem_threshold = 1.0;

  //! Throws PreconditionFailed if n_max < 10.
  TheoremReport check_theorem(SequenceSpec const&   spec,
                              std::size_t           n_max,
                              ExtractOptions const& opts = {});

  bool is_fibonacci(SequenceSpec const& spec);
  double log_phi(double x) noexcept;

  ////////////////////////////////////////////////////////////////////////
  // Corpus runs and reports
  ////////////////////////////////////////////////////////////////////////

  struct Violation {
    std::size_t    item;
    std::uint64_t  seed;
    Digraph        graph;
    std::string    witness;
  };

  struct LemmaReport {
    std::string            lemma;
    nlohmann::ordered_json corpus;
    std::size_t            corpus_size = 0;
    std::size_t            passes      = 0;
    std::size_t            checks      = 0;  // sub-checks (edges, paths, rows)
    std::vector<Violation> violations;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();

    [[nodiscard]] bool ok() const noexcept {
      return violations.empty() && passes == corpus_size;
    }
  };

  namespace corpus_defaults {
    CorpusSpec evol();
    CorpusSpec del_edge();
    CorpusSpec main_lemma();
    CorpusSpec corollary_main();
  }  // namespace corpus_defaults

  // Corpus items are checked independently: Execution::parallel spreads them
  // over OpenMP threads, Execution::serial is the reference loop. Reports are
  // assembled in item order, so both produce identical output.
  LemmaReport run_lemma_evol(CorpusSpec const& spec,
                             Execution         exec = Execution::parallel);
  LemmaReport run_lemma_del_edge(CorpusSpec const& spec,
                                 Execution exec = Execution::parallel);
  LemmaReport run_main_lemma(CorpusSpec const&       spec,
                             MainLemmaOptions const& opts = {},
                             Execution               exec = Execution::parallel);
  //! Checks f^k with k = 3L + \p offset for every corpus graph.
  LemmaReport run_corollary_main(CorpusSpec const&       spec,
                                 std::size_t             offset,
                                 MainLemmaOptions const& opts = {},
                                 Execution exec = Execution::parallel);

  struct GoodPathSweep {
    std::size_t max_banned_edges = 3;
    std::size_t max_path_edges   = 4;
  };

  //! For every banned path with at most max_banned_edges edges ending with an
  //! edge out of a fork, and every good path with at most max_path_edges
  //! edges: good_path_extend returns a nonempty list of exactly the good
  //! extensions, with two entries when the path ends at a fork other than
  //! the banned path's fork.
  LemmaReport run_good_path(CorpusSpec const&    spec,
                            GoodPathSweep const& sweep = {},
                            Execution            exec  = Execution::parallel);

  LemmaReport run_proposition1(SequenceSpec const&   spec,
                               std::size_t           k_lo,
                               std::size_t           k_hi,
                               ExtractOptions const& opts = {});
  LemmaReport run_corollary_er(SequenceSpec const&   spec,
                               std::size_t           n_lo,
                               std::size_t           n_hi,
                               ExtractOptions const& opts = {});
  LemmaReport run_theorem(SequenceSpec const&   spec,
                          std::size_t           n_max,
                          ExtractOptions const& opts = {});
  LemmaReport run_evolution(SequenceSpec const&   spec,
                            std::size_t           k_lo,
                            std::size_t           k_hi,
                            ExtractOptions const& opts = {});

}  // namespace cogrowth
