#include "cogrowth/digraph.hpp"

#include <algorithm>
#include <limits>

#include "cogrowth/error.hpp"

namespace cogrowth {

  ////////////////////////////////////////////////////////////////////////
  // Digraph
  ////////////////////////////////////////////////////////////////////////

  Digraph::Digraph(std::vector<VertexRecord> vertices,
                   std::vector<EdgeRecord>   edges)
      : _vertices(std::move(vertices)), _edges(std::move(edges)) {
    auto by_id = [](auto const& x, auto const& y) { return x.id >= y.id; };
    if (std::adjacent_find(_vertices.begin(), _vertices.end(), by_id)
        != _vertices.end()) {
      throw Error(ErrorCode::invalid_argument,
                  "vertex ids must be strictly increasing");
    }
    if (std::adjacent_find(_edges.begin(), _edges.end(), by_id)
        != _edges.end()) {
      throw Error(ErrorCode::invalid_argument,
                  "edge ids must be strictly increasing");
    }
    build_index();
  }

  Digraph Digraph::from_edges(std::size_t                                n,
                              std::vector<std::pair<VertexId, VertexId>> edges) {
    std::vector<VertexRecord> vs;
    vs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      vs.push_back({static_cast<VertexId>(i)});
    }
    std::vector<EdgeRecord> es;
    es.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      es.push_back(
          {static_cast<EdgeId>(i), edges[i].first, edges[i].second});
    }
    return Digraph(std::move(vs), std::move(es));
  }

  void Digraph::build_index() {
    auto const n = _vertices.size();
    auto const m = _edges.size();
    _src.resize(m);
    _tgt.resize(m);
    _out_begin.assign(n + 1, 0);
    _in_begin.assign(n + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!has_vertex(_edges[i].source) || !has_vertex(_edges[i].target)) {
        throw Error(ErrorCode::invalid_argument,
                    "edge " + std::to_string(_edges[i].id)
                        + " references a missing vertex");
      }
      _src[i] = static_cast<std::uint32_t>(vertex_index(_edges[i].source));
      _tgt[i] = static_cast<std::uint32_t>(vertex_index(_edges[i].target));
      ++_out_begin[_src[i] + 1];
      ++_in_begin[_tgt[i] + 1];
    }
    for (std::size_t v = 0; v < n; ++v) {
      _out_begin[v + 1] += _out_begin[v];
      _in_begin[v + 1] += _in_begin[v];
    }
    _out.resize(m);
    _in.resize(m);
    auto out_fill = _out_begin;
    auto in_fill  = _in_begin;
    for (std::size_t i = 0; i < m; ++i) {
      _out[out_fill[_src[i]]++] = static_cast<std::uint32_t>(i);
      _in[in_fill[_tgt[i]]++]   = static_cast<std::uint32_t>(i);
    }
  }

  namespace {
    template <typename Records>
    std::size_t find_index(Records const& rs, std::uint32_t id) {
      if (id < rs.size() && rs[id].id == id) {
        return id;
      }
      auto it = std::lower_bound(
          rs.begin(), rs.end(), id, [](auto const& r, std::uint32_t x) {
            return r.id < x;
          });
      if (it != rs.end() && it->id == id) {
        return static_cast<std::size_t>(it - rs.begin());
      }
      return rs.size();
    }
  }  // namespace

  bool Digraph::has_vertex(VertexId v) const noexcept {
    return find_index(_vertices, v) < _vertices.size();
  }

  bool Digraph::has_edge(EdgeId e) const noexcept {
    return find_index(_edges, e) < _edges.size();
  }

  std::size_t Digraph::vertex_index(VertexId v) const {
    auto i = find_index(_vertices, v);
    if (i == _vertices.size()) {
      throw Error(ErrorCode::unknown_vertex,
                  "no vertex with id " + std::to_string(v));
    }
    return i;
  }

  std::size_t Digraph::edge_index(EdgeId e) const {
    auto i = find_index(_edges, e);
    if (i == _edges.size()) {
      throw Error(ErrorCode::unknown_edge,
                  "no edge with id " + std::to_string(e));
    }
    return i;
  }

  VertexRecord const& Digraph::vertex(VertexId v) const {
    return _vertices[vertex_index(v)];
  }

  EdgeRecord const& Digraph::edge(EdgeId e) const {
    return _edges[edge_index(e)];
  }

  std::size_t Digraph::out_degree(VertexId v) const {
    return out_indices(vertex_index(v)).size();
  }

  std::size_t Digraph::in_degree(VertexId v) const {
    return in_indices(vertex_index(v)).size();
  }

  std::size_t Digraph::max_out_degree() const noexcept {
    std::size_t best = 0;
    for (std::size_t v = 0; v < _vertices.size(); ++v) {
      best = std::max<std::size_t>(best, _out_begin[v + 1] - _out_begin[v]);
    }
    return best;
  }

  std::vector<EdgeId> Digraph::out_edges(VertexId v) const {
    std::vector<EdgeId> out;
    for (auto i : out_indices(vertex_index(v))) {
      out.push_back(_edges[i].id);
    }
    return out;
  }

  bool Digraph::is_word_labeled() const {
    for (auto const& v : _vertices) {
      if (!v.label) {
        return false;
      }
    }
    for (std::size_t i = 0; i < _edges.size(); ++i) {
      auto const& label = _edges[i].label;
      auto const& from  = _vertices[_src[i]].label;
      auto const& to    = _vertices[_tgt[i]].label;
      if (!label || label->size() != from->size() + 1
          || to->size() != from->size() || !label->starts_with(*from)
          || !label->ends_with(*to)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Path
  ////////////////////////////////////////////////////////////////////////

  Path Path::single(Digraph const& g, VertexId v) {
    if (!g.has_vertex(v)) {
      throw Error(ErrorCode::unknown_vertex,
                  "no vertex with id " + std::to_string(v));
    }
    return Path({v}, {});
  }

  Path Path::from_edges(Digraph const& g, std::vector<EdgeId> edges) {
    if (edges.empty()) {
      throw Error(ErrorCode::invalid_argument,
                  "use Path::single for a path without edges");
    }
    std::vector<VertexId> vs;
    vs.reserve(edges.size() + 1);
    vs.push_back(g.edge(edges.front()).source);
    for (auto e : edges) {
      auto const& rec = g.edge(e);
      if (rec.source != vs.back()) {
        throw Error(ErrorCode::invalid_argument,
                    "edge " + std::to_string(e)
                        + " does not continue the path");
      }
      vs.push_back(rec.target);
    }
    return Path(std::move(vs), std::move(edges));
  }

  Path concat(Path const& p1, Path const& p2) {
    if (p1.back() != p2.front()) {
      throw Error(ErrorCode::invalid_argument,
                  "second path does not start where the first one ends");
    }
    auto vs = p1._vertices;
    vs.insert(vs.end(), p2._vertices.begin() + 1, p2._vertices.end());
    auto es = p1._edges;
    es.insert(es.end(), p2._edges.begin(), p2._edges.end());
    return Path(std::move(vs), std::move(es));
  }

  bool find_path_occurrence(std::span<EdgeId const> haystack,
                            std::span<EdgeId const> needle) {
    if (needle.size() > haystack.size()) {
      return false;
    }
    return std::search(
               haystack.begin(), haystack.end(), needle.begin(), needle.end())
           != haystack.end();
  }

  bool find_path_occurrence(Path const& haystack, Path const& needle) {
    return find_path_occurrence(std::span<EdgeId const>(haystack.edges()),
                                std::span<EdgeId const>(needle.edges()));
  }

  ////////////////////////////////////////////////////////////////////////
  // ErValue
  ////////////////////////////////////////////////////////////////////////

  ErValue ErValue::finite(std::size_t l) {
    if (l == 0) {
      throw Error(ErrorCode::invalid_argument,
                  "entropy regulator values are positive");
    }
    ErValue v;
    v._value = l;
    return v;
  }

  std::size_t ErValue::value() const {
    if (!is_finite()) {
      throw Error(ErrorCode::invalid_argument, "entropy regulator is infinite");
    }
    return _value;
  }

  std::string ErValue::to_string() const {
    return is_finite() ? std::to_string(_value) : std::string("inf");
  }

  ////////////////////////////////////////////////////////////////////////
  // Connectivity
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    std::uint32_t scc_indices(Digraph const&              g,
                              std::vector<char> const*    vertex_alive,
                              std::vector<char> const*    edge_alive,
                              std::vector<std::uint32_t>& comp) {
      constexpr auto none = std::numeric_limits<std::uint32_t>::max();
      auto const     n    = g.num_vertices();
      auto alive_v = [&](std::size_t v) {
        return vertex_alive == nullptr || (*vertex_alive)[v];
      };
      auto alive_e = [&](std::size_t e) {
        return (edge_alive == nullptr || (*edge_alive)[e])
               && alive_v(g.source_index(e)) && alive_v(g.target_index(e));
      };

      // Iterative Tarjan.
      comp.assign(n, none);
      std::vector<std::uint32_t> index(n, none), low(n, 0);
      std::vector<std::uint32_t> stack;
      std::vector<char>          on_stack(n, 0);
      std::vector<std::pair<std::uint32_t, std::size_t>> frames;
      std::uint32_t next_index = 0, count = 0;

      for (std::size_t root = 0; root < n; ++root) {
        if (!alive_v(root) || index[root] != none) {
          continue;
        }
        frames.emplace_back(static_cast<std::uint32_t>(root), 0);
        index[root] = low[root] = next_index++;
        stack.push_back(static_cast<std::uint32_t>(root));
        on_stack[root] = 1;
        while (!frames.empty()) {
          auto& [v, pos] = frames.back();
          auto  outs     = g.out_indices(v);
          if (pos < outs.size()) {
            auto e = outs[pos++];
            if (!alive_e(e)) {
              continue;
            }
            auto w = g.target_index(e);
            if (index[w] == none) {
              index[w] = low[w] = next_index++;
              stack.push_back(w);
              on_stack[w] = 1;
              frames.emplace_back(w, 0);
            } else if (on_stack[w]) {
              low[v] = std::min(low[v], index[w]);
            }
            continue;
          }
          auto const done = v;
          frames.pop_back();
          if (!frames.empty()) {
            auto parent = frames.back().first;
            low[parent] = std::min(low[parent], low[done]);
          }
          if (low[done] == index[done]) {
            std::uint32_t w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = 0;
              comp[w]     = count;
            } while (w != done);
            ++count;
          }
        }
      }
      return count;
    }

    ErValue entropy_regulator_masked(Digraph const&           g,
                                     std::vector<char> const* vertex_alive,
                                     std::vector<char> const* edge_alive) {
      auto const n       = g.num_vertices();
      auto       alive_v = [&](std::size_t v) {
        return vertex_alive == nullptr || (*vertex_alive)[v];
      };
      auto alive_e = [&](std::size_t e) {
        return (edge_alive == nullptr || (*edge_alive)[e])
               && alive_v(g.source_index(e)) && alive_v(g.target_index(e));
      };

      std::vector<char> plain(n, 0);
      for (std::size_t v = 0; v < n; ++v) {
        if (!alive_v(v)) {
          continue;
        }
        std::size_t deg = 0;
        for (auto e : g.out_indices(v)) {
          deg += alive_e(e) ? 1 : 0;
        }
        plain[v] = deg < 2;
      }

      // Longest path (in vertices) of the subgraph induced on non-forks, by
      // Kahn's algorithm; leftover vertices mean a fork-free cycle.
      std::vector<std::uint32_t> indeg(n, 0);
      std::size_t                total = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (!plain[v]) {
          continue;
        }
        ++total;
        for (auto e : g.out_indices(v)) {
          if (alive_e(e) && plain[g.target_index(e)]) {
            ++indeg[g.target_index(e)];
          }
        }
      }
      std::vector<std::uint32_t> queue;
      std::vector<std::size_t>   longest(n, 1);
      for (std::size_t v = 0; v < n; ++v) {
        if (plain[v] && indeg[v] == 0) {
          queue.push_back(static_cast<std::uint32_t>(v));
        }
      }
      std::size_t best = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        auto v = queue[head];
        best   = std::max(best, longest[v]);
        for (auto e : g.out_indices(v)) {
          auto w = g.target_index(e);
          if (!alive_e(e) || !plain[w]) {
            continue;
          }
          longest[w] = std::max(longest[w], longest[v] + 1);
          if (--indeg[w] == 0) {
            queue.push_back(w);
          }
        }
      }
      if (queue.size() != total) {
        return ErValue::infinite();
      }
      return ErValue::finite(best + 1);
    }
  }  // namespace detail

  bool strongly_connected(Digraph const& g) {
    if (g.empty()) {
      throw Error(ErrorCode::empty_graph,
                  "strong connectivity of the empty graph");
    }
    std::vector<std::uint32_t> comp;
    return detail::scc_indices(g, nullptr, nullptr, comp) == 1;
  }

  std::vector<std::vector<VertexId>> strongly_connected_components(
      Digraph const& g) {
    std::vector<std::uint32_t> comp;
    auto const count = detail::scc_indices(g, nullptr, nullptr, comp);
    std::vector<std::vector<VertexId>> out(count);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      out[comp[v]].push_back(g.vertices()[v].id);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_cycle(Digraph const& g) {
    if (g.empty()) {
      return false;
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      if (g.out_indices(v).size() != 1 || g.in_indices(v).size() != 1) {
        return false;
      }
    }
    return strongly_connected(g);
  }

  std::vector<VertexId> forks(Digraph const& g) {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      if (g.out_indices(v).size() >= 2) {
        out.push_back(g.vertices()[v].id);
      }
    }
    return out;
  }

  ErValue entropy_regulator(Digraph const& g) {
    return detail::entropy_regulator_masked(g, nullptr, nullptr);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgraphs
  ////////////////////////////////////////////////////////////////////////

  Digraph subgraph(Digraph const&               g,
                   std::vector<VertexId> const& vertices,
                   std::vector<EdgeId> const&   edges) {
    std::vector<std::size_t> vi, ei;
    for (auto v : vertices) {
      vi.push_back(g.vertex_index(v));
    }
    for (auto e : edges) {
      ei.push_back(g.edge_index(e));
    }
    std::sort(vi.begin(), vi.end());
    vi.erase(std::unique(vi.begin(), vi.end()), vi.end());
    std::sort(ei.begin(), ei.end());
    ei.erase(std::unique(ei.begin(), ei.end()), ei.end());

    std::vector<VertexRecord> vs;
    vs.reserve(vi.size());
    for (auto i : vi) {
      vs.push_back(g.vertices()[i]);
    }
    std::vector<EdgeRecord> es;
    es.reserve(ei.size());
    for (auto i : ei) {
      es.push_back(g.edges()[i]);
    }
    return Digraph(std::move(vs), std::move(es));
  }

  Digraph induced_subgraph(Digraph const& g, std::vector<VertexId> const& vs) {
    std::vector<char> keep(g.num_vertices(), 0);
    for (auto v : vs) {
      keep[g.vertex_index(v)] = 1;
    }
    std::vector<EdgeId> es;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (keep[g.source_index(e)] && keep[g.target_index(e)]) {
        es.push_back(g.edges()[e].id);
      }
    }
    return subgraph(g, vs, es);
  }

  Digraph remove_edge(Digraph const& g, EdgeId e) {
    auto const          skip = g.edge_index(e);
    std::vector<EdgeId> es;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      if (i != skip) {
        es.push_back(g.edges()[i].id);
      }
    }
    std::vector<VertexId> vs;
    for (auto const& v : g.vertices()) {
      vs.push_back(v.id);
    }
    return subgraph(g, vs, es);
  }

  Digraph delete_edge_reachable(Digraph const& g, EdgeId e) {
    auto const skip = g.edge_index(e);
    auto const root = g.source_index(skip);
    if (g.out_indices(root).size() < 2) {
      throw Error(ErrorCode::not_a_fork,
                  "source of edge " + std::to_string(e) + " is not a fork");
    }
    std::vector<char>          seen(g.num_vertices(), 0);
    std::vector<std::uint32_t> queue{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto x : g.out_indices(queue[head])) {
        if (x == skip) {
          continue;
        }
        auto w = g.target_index(x);
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::vector<VertexId> vs;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      if (seen[v]) {
        vs.push_back(g.vertices()[v].id);
      }
    }
    std::vector<EdgeId> es;
    for (std::size_t x = 0; x < g.num_edges(); ++x) {
      if (x != skip && seen[g.source_index(x)]) {
        es.push_back(g.edges()[x].id);
      }
    }
    return subgraph(g, vs, es);
  }

}  // namespace cogrowth
