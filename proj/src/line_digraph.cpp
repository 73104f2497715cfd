#include <algorithm>
#include <limits>

#include "cogrowth/digraph.hpp"
#include "cogrowth/error.hpp"

namespace cogrowth {

  namespace {
    // Label of the word spelled by two overlapping edge labels, if they
    // overlap as consecutive Rauzy-graph edges do.
    std::optional<std::string>
    glue(std::optional<std::string> const& first,
         std::optional<std::string> const& second) {
      if (!first || !second || first->size() != second->size()
          || first->empty()) {
        return std::nullopt;
      }
      auto const k = first->size() - 1;
      if (first->compare(1, k, *second, 0, k) != 0) {
        return std::nullopt;
      }
      return *first + second->back();
    }

    double estimate_paths(Digraph const& g, std::size_t m) {
      std::vector<double> ending(g.num_edges(), 1.0), next(g.num_edges());
      for (std::size_t j = 1; j < m; ++j) {
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
          double total = 0;
          for (auto x : g.out_indices(g.target_index(e))) {
            total += ending[x];
          }
          next[e] = total;
        }
        ending.swap(next);
      }
      double total = 0;
      for (auto c : ending) {
        total += c;
      }
      return total;
    }
  }  // namespace

  LineDigraph line_digraph(Digraph const& g) {
    LineDigraph out;
    std::vector<VertexRecord> vs;
    vs.reserve(g.num_edges());
    for (auto const& e : g.edges()) {
      vs.push_back({e.id, e.label});
      out.vertex_edge.push_back(e.id);
    }
    std::vector<EdgeRecord> es;
    for (std::size_t first = 0; first < g.num_edges(); ++first) {
      for (auto second : g.out_indices(g.target_index(first))) {
        auto const& a = g.edges()[first];
        auto const& b = g.edges()[second];
        es.push_back({static_cast<EdgeId>(es.size()),
                      a.id,
                      b.id,
                      glue(a.label, b.label)});
        out.edge_path.push_back(Path::from_edges(g, {a.id, b.id}));
      }
    }
    out.graph = Digraph(std::move(vs), std::move(es));
    return out;
  }

  std::size_t count_paths(Digraph const& g, std::size_t m, std::size_t cap) {
    if (m == 0) {
      return std::min(g.num_vertices(), cap + 1);
    }
    auto const               limit = cap + 1;
    std::vector<std::size_t> ending(g.num_edges(), 1), next(g.num_edges());
    // ending[e] = number of paths with j edges starting with edge e.
    for (std::size_t j = 1; j < m; ++j) {
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        std::size_t total = 0;
        for (auto x : g.out_indices(g.target_index(e))) {
          total = std::min(limit, total + ending[x]);
        }
        next[e] = total;
      }
      ending.swap(next);
    }
    std::size_t total = 0;
    for (auto c : ending) {
      total = std::min(limit, total + c);
    }
    return total;
  }

  IteratedLineDigraph::IteratedLineDigraph(Digraph const& base,
                                           std::size_t    m,
                                           std::size_t    budget)
      : _base(base), _m(m) {
    if (m == 0) {
      _graph = base;
      return;
    }
    auto const nv = count_paths(base, m, budget);
    if (nv > budget) {
      throw Error(ErrorCode::budget_exceeded,
                  "f^" + std::to_string(m) + " would have about "
                      + std::to_string(static_cast<unsigned long long>(
                          estimate_paths(base, m)))
                      + " vertices, budget is " + std::to_string(budget));
    }

    // Enumerate paths with m edges (as base edge indices) in lexicographic
    // order by depth-first extension.
    std::vector<std::uint32_t> seq;
    seq.reserve(nv * m);
    std::vector<std::uint32_t>                            current;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack;
    for (std::size_t e0 = 0; e0 < base.num_edges(); ++e0) {
      current.assign(1, static_cast<std::uint32_t>(e0));
      stack.assign(1, {static_cast<std::uint32_t>(e0), 0});
      while (!stack.empty()) {
        if (current.size() == m) {
          seq.insert(seq.end(), current.begin(), current.end());
          stack.pop_back();
          current.pop_back();
          continue;
        }
        auto& [e, pos] = stack.back();
        auto  outs     = base.out_indices(base.target_index(e));
        if (pos == outs.size()) {
          stack.pop_back();
          current.pop_back();
          continue;
        }
        auto x = outs[pos++];
        current.push_back(x);
        stack.emplace_back(x, 0);
      }
    }
    auto const count = seq.size() / m;

    auto find_vertex = [&](std::uint32_t const* key) -> std::size_t {
      std::size_t lo = 0, hi = count;
      while (lo < hi) {
        auto mid = (lo + hi) / 2;
        if (std::lexicographical_compare(
                seq.data() + mid * m, seq.data() + (mid + 1) * m, key, key + m)) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      return lo;
    };

    bool const labeled = base.is_word_labeled();
    auto       spell   = [&](std::uint32_t const* es, std::size_t len) {
      std::string w = *base.vertices()[base.source_index(es[0])].label;
      for (std::size_t i = 0; i < len; ++i) {
        w += base.edges()[es[i]].label->back();
      }
      return w;
    };

    std::vector<VertexRecord> vs;
    vs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      vs.push_back({static_cast<VertexId>(i),
                    labeled ? std::optional(spell(seq.data() + i * m, m))
                            : std::nullopt});
    }

    std::vector<EdgeRecord>    es;
    std::vector<std::uint32_t> edge_seq;
    std::vector<std::uint32_t> key(m + 1);
    for (std::size_t i = 0; i < count; ++i) {
      auto const* p = seq.data() + i * m;
      for (auto x : base.out_indices(base.target_index(p[m - 1]))) {
        std::copy(p, p + m, key.begin());
        key[m]   = x;
        auto tgt = find_vertex(key.data() + 1);
        es.push_back({static_cast<EdgeId>(es.size()),
                      static_cast<VertexId>(i),
                      static_cast<VertexId>(tgt),
                      labeled ? std::optional(spell(key.data(), m + 1))
                              : std::nullopt});
        edge_seq.insert(edge_seq.end(), key.begin(), key.end());
      }
    }
    _graph = Digraph(std::move(vs), std::move(es));

    _vertex_seq.reserve(seq.size());
    for (auto x : seq) {
      _vertex_seq.push_back(base.edges()[x].id);
    }
    _edge_seq.reserve(edge_seq.size());
    for (auto x : edge_seq) {
      _edge_seq.push_back(base.edges()[x].id);
    }
  }

  std::span<EdgeId const>
  IteratedLineDigraph::vertex_path_edges(VertexId v) const {
    auto const i = _graph.vertex_index(v);
    return {_vertex_seq.data() + i * _m, _m};
  }

  std::span<EdgeId const>
  IteratedLineDigraph::edge_path_edges(EdgeId e) const {
    auto const i = _graph.edge_index(e);
    if (_m == 0) {
      return {&_graph.edges()[i].id, 1};
    }
    return {_edge_seq.data() + i * (_m + 1), _m + 1};
  }

  Path IteratedLineDigraph::vertex_path(VertexId v) const {
    if (_m == 0) {
      return Path::single(_base, v);
    }
    auto es = vertex_path_edges(v);
    return Path::from_edges(_base, {es.begin(), es.end()});
  }

  Path IteratedLineDigraph::edge_path(EdgeId e) const {
    auto es = edge_path_edges(e);
    return Path::from_edges(_base, {es.begin(), es.end()});
  }

  IteratedLineDigraph iterate_line_digraph(Digraph const& g,
                                           std::size_t    m,
                                           std::size_t    budget) {
    return IteratedLineDigraph(g, m, budget);
  }

}  // namespace cogrowth
