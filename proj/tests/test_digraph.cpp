#include <doctest.h>

#include "cogrowth/digraph.hpp"
#include "cogrowth/error.hpp"
#include "cogrowth/verify.hpp"
#include "oracles.hpp"

using namespace cogrowth;

namespace {
  Digraph cycle(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> es;
    for (VertexId v = 0; v < n; ++v) {
      es.emplace_back(v, static_cast<VertexId>((v + 1) % n));
    }
    return Digraph::from_edges(n, es);
  }

  Digraph two_loops() {
    return Digraph::from_edges(1, {{0, 0}, {0, 0}});
  }

  // R_1 of the Fibonacci word, written out by hand.
  Digraph fib_r1() {
    return Digraph({{0, "a"}, {1, "b"}},
                   {{0, 0, 0, "aa"}, {1, 0, 1, "ab"}, {2, 1, 0, "ba"}});
  }

  // Arbitrary multigraph, not necessarily strongly connected.
  Digraph random_multigraph(std::uint64_t seed) {
    Rng        rng(seed);
    auto const n = 1 + rng.below(7);
    auto const m = rng.below(2 * n + 1);
    std::vector<std::pair<VertexId, VertexId>> es;
    for (std::size_t i = 0; i < m; ++i) {
      es.emplace_back(static_cast<VertexId>(rng.below(n)),
                      static_cast<VertexId>(rng.below(n)));
    }
    return Digraph::from_edges(n, es);
  }

  std::vector<EdgeId> edge_ids(Digraph const& g) {
    std::vector<EdgeId> out;
    for (auto const& e : g.edges()) {
      out.push_back(e.id);
    }
    return out;
  }

  std::vector<VertexId> vertex_ids(Digraph const& g) {
    std::vector<VertexId> out;
    for (auto const& v : g.vertices()) {
      out.push_back(v.id);
    }
    return out;
  }
}  // namespace

TEST_SUITE("digraph") {
  TEST_CASE("construction checks") {
    CHECK_THROWS_AS(Digraph({{1, {}}, {0, {}}}, {}), Error);
    CHECK_THROWS_AS(Digraph({{0, {}}}, {{0, 0, 1, {}}}), Error);
    CHECK_THROWS_AS(Digraph({{0, {}}}, {{1, 0, 0, {}}, {1, 0, 0, {}}}), Error);
    auto const g = fib_r1();
    CHECK(g.is_word_labeled());
    CHECK_FALSE(cycle(3).is_word_labeled());
    CHECK(g.out_degree(0) == 2);
    CHECK(g.in_degree(0) == 2);
    CHECK(g.out_edges(0) == std::vector<EdgeId>{0, 1});
    CHECK_THROWS_AS((void) g.vertex(5), Error);
    CHECK_THROWS_AS((void) g.edge(5), Error);
  }

  TEST_CASE("strong connectivity and cycles") {
    CHECK(strongly_connected(cycle(3)));
    CHECK_FALSE(strongly_connected(Digraph::from_edges(2, {{0, 1}})));
    CHECK(strongly_connected(fib_r1()));
    CHECK_THROWS_AS(strongly_connected(Digraph()), Error);

    CHECK(is_cycle(cycle(3)));
    CHECK_FALSE(is_cycle(fib_r1()));
    CHECK(is_cycle(Digraph::from_edges(1, {{0, 0}})));
    CHECK_FALSE(is_cycle(two_loops()));
  }

  TEST_CASE("forks") {
    CHECK(forks(fib_r1()) == std::vector<VertexId>{0});
    CHECK(forks(cycle(4)).empty());
    CHECK(forks(two_loops()) == std::vector<VertexId>{0});
  }

  TEST_CASE("entropy regulator") {
    CHECK(entropy_regulator(fib_r1()) == ErValue::finite(2));
    CHECK_FALSE(entropy_regulator(cycle(5)).is_finite());
    CHECK(entropy_regulator(two_loops()) == ErValue::finite(1));
    CHECK(entropy_regulator(Digraph()) == ErValue::finite(1));
    CHECK(entropy_regulator(Digraph::from_edges(1, {})) == ErValue::finite(2));
    CHECK(ErValue::infinite().to_string() == "inf");
    CHECK(ErValue::finite(3).to_string() == "3");
    CHECK_THROWS_AS(ErValue::finite(0), Error);
    CHECK_THROWS_AS((void) ErValue::infinite().value(), Error);
  }

  TEST_CASE("random graphs against the oracles") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
      auto const g = random_multigraph(seed);
      CAPTURE(seed);
      CHECK(strongly_connected(g) == oracle::strongly_connected(g));
      CHECK(strongly_connected_components(g) == oracle::components(g));
      auto const er   = entropy_regulator(g);
      auto const want = oracle::entropy_regulator(g);
      CHECK(er.is_finite() == want.has_value());
      if (want) {
        CHECK(er.value() == *want);
      }
    }
  }

  TEST_CASE("line digraph") {
    auto const c = line_digraph(cycle(3));
    CHECK(c.graph.num_vertices() == 3);
    CHECK(is_cycle(c.graph));

    auto const k = line_digraph(two_loops());
    CHECK(k.graph.num_vertices() == 2);
    CHECK(k.graph.num_edges() == 4);
    CHECK(oracle::line_pairs(two_loops()).size() == 4);

    auto const f = line_digraph(fib_r1());
    CHECK(f.graph.num_vertices() == 3);
    std::vector<std::string> labels;
    for (auto const& e : f.graph.edges()) {
      labels.push_back(*e.label);
    }
    CHECK(labels
          == std::vector<std::string>{"aaa", "aab", "aba", "baa", "bab"});
    CHECK(*f.graph.vertex(1).label == "ab");
  }

  TEST_CASE("line digraph against the oracle") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      auto const g  = random_multigraph(seed);
      auto const ld = line_digraph(g);
      std::set<std::pair<EdgeId, EdgeId>> got;
      for (std::size_t i = 0; i < ld.graph.num_edges(); ++i) {
        auto const& e = ld.graph.edges()[i];
        got.insert({e.source, e.target});
        CHECK(ld.edge_path[i].edges()
              == std::vector<EdgeId>{e.source, e.target});
      }
      CHECK(got == oracle::line_pairs(g));
      CHECK(ld.graph.num_edges() == oracle::line_pairs(g).size());
      CHECK(vertex_ids(ld.graph) == edge_ids(g));
      CHECK(ld.vertex_edge == edge_ids(g));
    }
  }

  TEST_CASE("iterated line digraph") {
    auto const id = iterate_line_digraph(fib_r1(), 0);
    CHECK(id.graph() == fib_r1());

    auto const c5 = iterate_line_digraph(cycle(3), 5);
    CHECK(is_cycle(c5.graph()));
    CHECK(c5.graph().num_vertices() == 3);

    // Vertices of f^m are the paths with m edges: 2^m of them here.
    auto const t2 = iterate_line_digraph(two_loops(), 2);
    CHECK(t2.graph().num_vertices() == 4);
    CHECK(t2.graph().num_edges() == 8);
    auto const t = iterate_line_digraph(two_loops(), 3);
    CHECK(t.graph().num_vertices() == 8);
    CHECK(t.graph().num_edges() == 16);
    CHECK(t.vertex_path_edges(5).size() == 3);
    CHECK(t.vertex_path(5).length() == 4);
    CHECK(t.edge_path(3).length() == 5);
    CHECK(t.edge_path_edges(3).size() == 4);

    CHECK_THROWS_AS(iterate_line_digraph(two_loops(), 20, 1000), Error);
    CHECK(count_paths(two_loops(), 20, 1000) == 1001);
  }

  TEST_CASE("iterated line digraph equals repeated line digraphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      auto const g = random_sc_digraph(2 + seed % 6, seed);
      for (std::size_t m = 1; m <= 4; ++m) {
        auto const it = iterate_line_digraph(g, m);
        CHECK(it.graph().num_vertices() == oracle::walks(g, m));
        CHECK(it.graph().num_edges() == oracle::walks(g, m + 1));
        CHECK(count_paths(g, m, 1'000'000) == oracle::walks(g, m));
      }
      // f(f(g)) built twice: directly from paths and by composition.
      auto const it  = iterate_line_digraph(g, 2);
      auto const ld1 = line_digraph(g);
      auto const ld2 = line_digraph(ld1.graph);
      using Seq      = std::vector<EdgeId>;
      std::set<std::tuple<Seq, Seq, Seq>> direct, composed;
      for (auto const& e : it.graph().edges()) {
        auto span_of = [](std::span<EdgeId const> s) { return Seq(s.begin(), s.end()); };
        direct.insert({span_of(it.vertex_path_edges(e.source)),
                       span_of(it.vertex_path_edges(e.target)),
                       span_of(it.edge_path_edges(e.id))});
      }
      for (std::size_t i = 0; i < ld2.graph.num_edges(); ++i) {
        auto const& two = ld2.edge_path[i].edges();  // edges of f(g)
        auto const  src = ld1.edge_path[ld1.graph.edge_index(two[0])].edges();
        auto const  tgt = ld1.edge_path[ld1.graph.edge_index(two[1])].edges();
        Seq         all = src;
        all.push_back(tgt.back());
        composed.insert({src, tgt, all});
      }
      CHECK(direct == composed);
    }
  }

  TEST_CASE("iterated labels on word-labelled graphs") {
    auto const it = iterate_line_digraph(fib_r1(), 2);
    CHECK(it.graph().is_word_labeled());
    auto const twice = line_digraph(line_digraph(fib_r1()).graph).graph;
    CHECK(oracle::labelled_edges(it.graph()) == oracle::labelled_edges(twice));
  }

  TEST_CASE("delete_edge_reachable") {
    auto const a = delete_edge_reachable(fib_r1(), 1);
    CHECK(vertex_ids(a) == std::vector<VertexId>{0});
    CHECK(is_cycle(a));

    auto const b = delete_edge_reachable(fib_r1(), 0);
    CHECK(b.num_vertices() == 2);
    CHECK(is_cycle(b));

    auto const loops = delete_edge_reachable(two_loops(), 0);
    CHECK(loops.num_vertices() == 1);
    CHECK(loops.num_edges() == 1);

    auto const f = line_digraph(fib_r1()).graph;
    auto const c = delete_edge_reachable(f, 0);  // aaa out of the fork aa
    CHECK(vertex_ids(c) == std::vector<VertexId>{0, 1, 2});
    CHECK(edge_ids(c) == std::vector<EdgeId>{1, 2, 3, 4});
    CHECK(strongly_connected(c));

    CHECK_THROWS_AS(delete_edge_reachable(fib_r1(), 2), Error);
    CHECK_THROWS_AS(delete_edge_reachable(fib_r1(), 9), Error);
  }

  TEST_CASE("delete_edge_reachable against closure") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto const g = random_sc_digraph(2 + seed % 10, seed);
      for (auto const& e : g.edges()) {
        if (g.out_degree(e.source) < 2) {
          continue;
        }
        auto const got   = delete_edge_reachable(g, e.id);
        auto const rest  = remove_edge(g, e.id);
        auto const reach = oracle::closure(rest);
        auto const pos   = oracle::positions(rest);
        std::vector<VertexId> want;
        for (auto const& v : rest.vertices()) {
          if (v.id == e.source || reach[pos.at(e.source)][pos.at(v.id)]) {
            want.push_back(v.id);
          }
        }
        CHECK(vertex_ids(got) == want);
        CHECK(got == induced_subgraph(rest, want));
      }
    }
  }

  TEST_CASE("paths and occurrences") {
    auto const g  = cycle(3);
    auto const p  = Path::from_edges(g, {0, 1, 2, 0, 1, 2});
    auto const q  = Path::from_edges(g, {0, 1, 2});
    auto const r  = Path::from_edges(g, {1, 2});
    CHECK(p.length() == 7);
    CHECK(find_path_occurrence(p, q));
    CHECK(find_path_occurrence(q, q));
    CHECK_FALSE(find_path_occurrence(r, q));
    CHECK(find_path_occurrence(q, r));
    CHECK(concat(q, q).edges() == std::vector<EdgeId>{0, 1, 2, 0, 1, 2});
    CHECK_THROWS_AS(concat(r, r), Error);
    CHECK_THROWS_AS(Path::from_edges(g, {0, 2}), Error);
    CHECK_THROWS_AS(Path::from_edges(g, {}), Error);
    CHECK(Path::single(g, 2).length() == 1);
  }

  TEST_CASE("DOT output") {
    CHECK(to_dot(fib_r1(), "R_1")
          == "digraph \"R_1\" {\n"
             "  v0 [label=\"a\"];\n"
             "  v1 [label=\"b\"];\n"
             "  v0 -> v0 [label=\"aa\"];\n"
             "  v0 -> v1 [label=\"ab\"];\n"
             "  v1 -> v0 [label=\"ba\"];\n"
             "}\n");
    CHECK(to_dot(Digraph::from_edges(2, {{0, 1}}))
          == "digraph \"G\" {\n  v0 [label=\"0\"];\n  v1 [label=\"1\"];\n"
             "  v0 -> v1 [label=\"0\"];\n}\n");
  }
}
