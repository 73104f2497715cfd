#pragma once

// Finite directed multigraphs (parallel edges and loops allowed) and the
// operators used on Rauzy graphs: strong connectivity, forks, the directed
// line graph f, its iterates, the entropy regulator and edge deletion.
//
// Vertices and edges carry stable integer ids and optional word labels.
// Storage is ordered by id and ids never change under subgraph operations.
// Path lengths follow the vertex-counting convention: a path with m edges
// has length m + 1.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cogrowth {

  using VertexId = std::uint32_t;
  using EdgeId   = std::uint32_t;

  struct VertexRecord {
    VertexId                   id;
    std::optional<std::string> label = std::nullopt;

    bool operator==(VertexRecord const&) const = default;
  };

  struct EdgeRecord {
    EdgeId                     id;
    VertexId                   source;
    VertexId                   target;
    std::optional<std::string> label = std::nullopt;

    bool operator==(EdgeRecord const&) const = default;
  };

  class Digraph {
   public:
    Digraph() = default;

    //! Records must have strictly increasing ids and edge endpoints must name
    //! existing vertices; throws Error(invalid_argument) otherwise.
    Digraph(std::vector<VertexRecord> vertices, std::vector<EdgeRecord> edges);

    //! Unlabelled graph on vertices 0..n-1, edge ids in the given order.
    static Digraph from_edges(std::size_t                                n,
                              std::vector<std::pair<VertexId, VertexId>> edges);

    [[nodiscard]] std::size_t num_vertices() const noexcept {
      return _vertices.size();
    }
    [[nodiscard]] std::size_t num_edges() const noexcept {
      return _edges.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _vertices.empty();
    }

    [[nodiscard]] std::span<VertexRecord const> vertices() const noexcept {
      return _vertices;
    }
    [[nodiscard]] std::span<EdgeRecord const> edges() const noexcept {
      return _edges;
    }

    [[nodiscard]] bool has_vertex(VertexId v) const noexcept;
    [[nodiscard]] bool has_edge(EdgeId e) const noexcept;
    //! Throw UnknownVertex / UnknownEdge.
    [[nodiscard]] VertexRecord const& vertex(VertexId v) const;
    [[nodiscard]] EdgeRecord const&   edge(EdgeId e) const;

    [[nodiscard]] std::size_t out_degree(VertexId v) const;
    [[nodiscard]] std::size_t in_degree(VertexId v) const;
    [[nodiscard]] std::size_t max_out_degree() const noexcept;
    //! Out-edge ids of v in increasing order.
    [[nodiscard]] std::vector<EdgeId> out_edges(VertexId v) const;

    //! Every vertex and every edge is labelled, and each edge label is its
    //! source label followed by one letter and ends with its target label.
    [[nodiscard]] bool is_word_labeled() const;

    bool operator==(Digraph const& that) const {
      return _vertices == that._vertices && _edges == that._edges;
    }

    // Index-level access (positions in storage order) used by the algorithms.
    [[nodiscard]] std::size_t vertex_index(VertexId v) const;
    [[nodiscard]] std::size_t edge_index(EdgeId e) const;
    [[nodiscard]] std::uint32_t source_index(std::size_t edge_idx) const {
      return _src[edge_idx];
    }
    [[nodiscard]] std::uint32_t target_index(std::size_t edge_idx) const {
      return _tgt[edge_idx];
    }
    [[nodiscard]] std::span<std::uint32_t const>
    out_indices(std::size_t vertex_idx) const {
      return {_out.data() + _out_begin[vertex_idx],
              _out.data() + _out_begin[vertex_idx + 1]};
    }
    [[nodiscard]] std::span<std::uint32_t const>
    in_indices(std::size_t vertex_idx) const {
      return {_in.data() + _in_begin[vertex_idx],
              _in.data() + _in_begin[vertex_idx + 1]};
    }

   private:
    void build_index();

    std::vector<VertexRecord> _vertices;
    std::vector<EdgeRecord>   _edges;
    std::vector<std::uint32_t> _src, _tgt;
    std::vector<std::uint32_t> _out_begin, _out, _in_begin, _in;
  };

  //! A directed path given by consecutive edges, or a single vertex.
  class Path {
   public:
    static Path single(Digraph const& g, VertexId v);
    //! Throws InvalidArgument if the edges are not consecutive or empty.
    static Path from_edges(Digraph const& g, std::vector<EdgeId> edges);

    [[nodiscard]] std::vector<VertexId> const& vertices() const noexcept {
      return _vertices;
    }
    [[nodiscard]] std::vector<EdgeId> const& edges() const noexcept {
      return _edges;
    }
    //! Number of vertices (edges + 1).
    [[nodiscard]] std::size_t length() const noexcept {
      return _vertices.size();
    }
    [[nodiscard]] VertexId front() const noexcept {
      return _vertices.front();
    }
    [[nodiscard]] VertexId back() const noexcept {
      return _vertices.back();
    }

    bool operator==(Path const&) const = default;

   private:
    Path(std::vector<VertexId> vs, std::vector<EdgeId> es)
        : _vertices(std::move(vs)), _edges(std::move(es)) {}

    friend Path concat(Path const&, Path const&);

    std::vector<VertexId> _vertices;
    std::vector<EdgeId>   _edges;
  };

  //! p1 p2, defined when p2 starts at the end of p1; |p1 p2| = |p1| + |p2| - 1.
  Path concat(Path const& p1, Path const& p2);

  //! Entropy regulator value: a positive integer or infinity.
  class ErValue {
   public:
    static ErValue finite(std::size_t l);
    static ErValue infinite() noexcept {
      return ErValue();
    }

    [[nodiscard]] bool is_finite() const noexcept {
      return _value != 0;
    }
    //! Throws InvalidArgument if infinite.
    [[nodiscard]] std::size_t value() const;
    [[nodiscard]] std::string to_string() const;

    bool operator==(ErValue const&) const = default;

   private:
    ErValue() = default;
    std::size_t _value = 0;
  };

  //! Throws EmptyGraph on the empty graph.
  bool strongly_connected(Digraph const& g);

  //! Vertex ids of each strongly connected component, each sorted, listed by
  //! smallest member.
  std::vector<std::vector<VertexId>> strongly_connected_components(
      Digraph const& g);

  //! A single directed cycle: strongly connected, all in/out-degrees 1.
  bool is_cycle(Digraph const& g);

  //! Vertices of out-degree >= 2 (parallel edges counted separately).
  std::vector<VertexId> forks(Digraph const& g);

  //! Least L such that every path with L vertices contains a fork, or
  //! infinite when the non-fork vertices span a cycle.
  ErValue entropy_regulator(Digraph const& g);

  //! The directed line graph f(g): one vertex per edge of g (same id), one
  //! edge per pair of consecutive edges of g.
  struct LineDigraph {
    Digraph graph;
    //! vertex_edge[i]: edge of g represented by the i-th vertex.
    std::vector<EdgeId> vertex_edge;
    //! edge_path[i]: the two-edge path of g represented by the i-th edge.
    std::vector<Path> edge_path;
  };

  LineDigraph line_digraph(Digraph const& g);

  inline constexpr std::size_t default_budget = 1'000'000;

  //! f^m(g) built directly from the paths of g: vertices are the paths with
  //! m edges, edges the paths with m + 1 edges, both in lexicographic order
  //! of their edge-id sequences (ids 0, 1, ...). For m = 0 the graph is g.
  class IteratedLineDigraph {
   public:
    IteratedLineDigraph(Digraph const& base, std::size_t m, std::size_t budget);

    [[nodiscard]] Digraph const& graph() const noexcept {
      return _graph;
    }
    [[nodiscard]] Digraph const& base() const noexcept {
      return _base;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return _m;
    }

    //! Path of the base graph with m + 1 vertices.
    [[nodiscard]] Path vertex_path(VertexId v) const;
    //! Path of the base graph with m + 2 vertices.
    [[nodiscard]] Path edge_path(EdgeId e) const;
    //! Edge ids (in the base graph) of the path of edge \p e of f^m.
    [[nodiscard]] std::span<EdgeId const> edge_path_edges(EdgeId e) const;
    [[nodiscard]] std::span<EdgeId const> vertex_path_edges(VertexId v) const;

   private:
    Digraph             _base;
    std::size_t         _m;
    Digraph             _graph;
    std::vector<EdgeId> _vertex_seq;  // m entries per vertex (base edge ids)
    std::vector<EdgeId> _edge_seq;    // m + 1 entries per edge
  };

  //! Number of paths with m edges in g (the vertex count of f^m(g), m >= 1),
  //! saturating at \p cap + 1.
  std::size_t count_paths(Digraph const& g, std::size_t m, std::size_t cap);

  //! Throws BudgetExceeded if f^m(g) would have more than \p budget vertices.
  IteratedLineDigraph iterate_line_digraph(Digraph const& g,
                                           std::size_t    m,
                                           std::size_t budget = default_budget);

  //! Removes \p e and keeps what is reachable from its source. Throws
  //! UnknownEdge, or NotAFork if the source has out-degree < 2.
  Digraph delete_edge_reachable(Digraph const& g, EdgeId e);

  //! Subgraph on the given vertices and edges (edges must join kept vertices).
  Digraph subgraph(Digraph const&               g,
                   std::vector<VertexId> const& vertices,
                   std::vector<EdgeId> const&   edges);
  //! Subgraph on the given vertices and every edge between them.
  Digraph induced_subgraph(Digraph const& g, std::vector<VertexId> const& vs);
  Digraph remove_edge(Digraph const& g, EdgeId e);

  //! Whether needle's edge-id sequence is a contiguous block of haystack's.
  bool find_path_occurrence(Path const& haystack, Path const& needle);
  bool find_path_occurrence(std::span<EdgeId const> haystack,
                            std::span<EdgeId const> needle);

  //! Byte-stable DOT: vertices "v<id>" labelled by word label or id, edges in
  //! id order labelled by word label or id.
  void        write_dot(std::ostream&      out,
                        Digraph const&     g,
                        std::string const& name = "G");
  std::string to_dot(Digraph const& g, std::string const& name = "G");

  namespace detail {
    //! Component id of every vertex index, restricted to alive vertices and
    //! edges (null masks mean everything is alive). Dead vertices get
    //! UINT32_MAX. Returns the number of components.
    std::uint32_t scc_indices(Digraph const&             g,
                              std::vector<char> const*   vertex_alive,
                              std::vector<char> const*   edge_alive,
                              std::vector<std::uint32_t>& comp);

    //! Entropy regulator of the subgraph of alive vertices and alive edges
    //! between them; forks are counted inside that subgraph.
    ErValue entropy_regulator_masked(Digraph const&           g,
                                     std::vector<char> const* vertex_alive,
                                     std::vector<char> const* edge_alive);
  }  // namespace detail

}  // namespace cogrowth
