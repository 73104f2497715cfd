#pragma once

// Slow reference implementations used only by the tests. Each one follows the
// textbook definition and shares no code with the library algorithm it checks.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cogrowth/digraph.hpp"

namespace oracle {

  using cogrowth::Digraph;

  inline std::set<std::string> factors(std::string const& text, std::size_t k) {
    std::set<std::string> out;
    for (std::size_t i = 0; i + k <= text.size(); ++i) {
      out.insert(text.substr(i, k));
    }
    return out;
  }

  // Vertex positions (storage order) of g, keyed by id.
  inline std::map<cogrowth::VertexId, std::size_t> positions(Digraph const& g) {
    std::map<cogrowth::VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
      pos[g.vertices()[i].id] = i;
    }
    return pos;
  }

  // reach[i][j]: a path with at least one edge from i to j.
  inline std::vector<std::vector<bool>> closure(Digraph const& g) {
    auto const n   = g.num_vertices();
    auto const pos = positions(g);
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (auto const& e : g.edges()) {
      reach[pos.at(e.source)][pos.at(e.target)] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (reach[i][k] && reach[k][j]) {
            reach[i][j] = true;
          }
        }
      }
    }
    return reach;
  }

  inline bool strongly_connected(Digraph const& g) {
    auto const reach = closure(g);
    for (std::size_t i = 0; i < reach.size(); ++i) {
      for (std::size_t j = 0; j < reach.size(); ++j) {
        if (i != j && !reach[i][j]) {
          return false;
        }
      }
    }
    return !reach.empty();
  }

  // Components as sorted id lists, listed by smallest member.
  inline std::vector<std::vector<cogrowth::VertexId>> components(Digraph const& g) {
    auto const reach = closure(g);
    auto const n     = g.num_vertices();
    std::vector<bool> done(n, false);
    std::vector<std::vector<cogrowth::VertexId>> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) {
        continue;
      }
      std::vector<cogrowth::VertexId> c{g.vertices()[i].id};
      done[i] = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (reach[i][j] && reach[j][i]) {
          c.push_back(g.vertices()[j].id);
          done[j] = true;
        }
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  inline std::size_t out_degree(Digraph const& g, cogrowth::VertexId v) {
    return static_cast<std::size_t>(
        std::count_if(g.edges().begin(), g.edges().end(), [v](auto const& e) {
          return e.source == v;
        }));
  }

  // Least L such that every walk with L vertices meets a fork, found by
  // enumerating the walks that avoid forks; nullopt means infinite.
  inline std::optional<std::size_t> entropy_regulator(Digraph const& g) {
    auto const n = g.num_vertices();
    std::set<cogrowth::VertexId> plain;
    for (auto const& v : g.vertices()) {
      if (out_degree(g, v.id) < 2) {
        plain.insert(v.id);
      }
    }
    // Walks of plain vertices, grown one vertex at a time.
    std::vector<std::vector<cogrowth::VertexId>> walks;
    for (auto v : plain) {
      walks.push_back({v});
    }
    std::size_t longest = 0;
    while (!walks.empty()) {
      longest = walks.front().size();
      if (longest > n) {
        return std::nullopt;  // a fork-free walk repeats a vertex
      }
      std::vector<std::vector<cogrowth::VertexId>> next;
      for (auto const& w : walks) {
        for (auto const& e : g.edges()) {
          if (e.source == w.back() && plain.contains(e.target)) {
            auto x = w;
            x.push_back(e.target);
            next.push_back(std::move(x));
          }
        }
      }
      walks = std::move(next);
    }
    return longest + 1;
  }

  // (source edge, target edge) pairs of consecutive edges, by edge ids.
  inline std::set<std::pair<cogrowth::EdgeId, cogrowth::EdgeId>>
  line_pairs(Digraph const& g) {
    std::set<std::pair<cogrowth::EdgeId, cogrowth::EdgeId>> out;
    for (auto const& a : g.edges()) {
      for (auto const& b : g.edges()) {
        if (a.target == b.source) {
          out.insert({a.id, b.id});
        }
      }
    }
    return out;
  }

  // Number of walks with m edges, by repeated matrix-vector products.
  inline std::size_t walks(Digraph const& g, std::size_t m) {
    auto const pos = positions(g);
    std::vector<std::size_t> count(g.num_vertices(), 1);
    for (std::size_t step = 0; step < m; ++step) {
      std::vector<std::size_t> next(g.num_vertices(), 0);
      for (auto const& e : g.edges()) {
        next[pos.at(e.source)] += count[pos.at(e.target)];
      }
      count = std::move(next);
    }
    std::size_t total = 0;
    for (auto c : count) {
      total += c;
    }
    return total;
  }

  // Labelled edge triples (source label, target label, edge label).
  inline std::set<std::tuple<std::string, std::string, std::string>>
  labelled_edges(Digraph const& g) {
    std::set<std::tuple<std::string, std::string, std::string>> out;
    for (auto const& e : g.edges()) {
      out.insert({g.vertex(e.source).label.value_or("?"),
                  g.vertex(e.target).label.value_or("?"),
                  e.label.value_or("?")});
    }
    return out;
  }

}  // namespace oracle
