#include "cogrowth/rauzy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cogrowth/error.hpp"

namespace cogrowth {

  RauzyGraph build_rauzy(FactorLanguage const& fl, std::size_t k) {
    if (k + 1 > fl.k_max()) {
      throw Error(ErrorCode::insufficient_strata,
                  "R_" + std::to_string(k) + " needs strata through "
                      + std::to_string(k + 1) + ", have "
                      + std::to_string(fl.k_max()));
    }
    std::vector<VertexRecord> vs;
    auto const                nv = fl.complexity(k);
    vs.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      vs.push_back({static_cast<VertexId>(i), std::string(fl.factor(k, i))});
    }
    std::vector<EdgeRecord> es;
    auto const              ne = fl.complexity(k + 1);
    es.reserve(ne);
    for (std::size_t i = 0; i < ne; ++i) {
      auto w = fl.factor(k + 1, i);
      es.push_back({static_cast<EdgeId>(i),
                    static_cast<VertexId>(fl.index_of(w.substr(0, k))),
                    static_cast<VertexId>(fl.index_of(w.substr(1, k))),
                    std::string(w)});
    }
    return {k, Digraph(std::move(vs), std::move(es)), fl.source()};
  }

  EvolutionReport check_evolution(FactorLanguage const& fl,
                                  ObstructionSet const& obs,
                                  std::size_t           k) {
    if (fl.k_max() < k + 2 || obs.n_max < k + 2) {
      throw Error(ErrorCode::insufficient_strata,
                  "evolution at k = " + std::to_string(k)
                      + " needs strata and obstructions through length "
                      + std::to_string(k + 2));
    }
    auto const rk   = build_rauzy(fl, k);
    auto const next = build_rauzy(fl, k + 1);
    auto const line = line_digraph(rk.graph);

    std::set<Word> forbidden;
    for (auto const& u : obs.words) {
      if (u.size() == k + 2) {
        forbidden.insert(u);
      }
    }

    EvolutionReport report{k, {}, true, {}, line.graph.num_edges(),
                           next.graph.num_edges()};
    auto mismatch = [&report](std::string msg) {
      report.isomorphic = false;
      report.mismatches.push_back(std::move(msg));
    };

    // Vertices of f(R_k) carry the edge labels of R_k, i.e. F_{k+1}.
    std::vector<std::string> line_vertices, next_vertices;
    for (auto const& v : line.graph.vertices()) {
      line_vertices.push_back(v.label.value_or(""));
    }
    for (auto const& v : next.graph.vertices()) {
      next_vertices.push_back(*v.label);
    }
    if (line_vertices != next_vertices) {
      mismatch("vertex label sets differ");
    }

    // label -> (source label, target label)
    using Ends = std::pair<std::string, std::string>;
    std::map<std::string, Ends> expected;
    for (auto const& e : next.graph.edges()) {
      expected[*e.label] = {*next.graph.vertex(e.source).label,
                            *next.graph.vertex(e.target).label};
    }

    std::set<std::string> survivors;
    for (auto const& e : line.graph.edges()) {
      if (!e.label) {
        mismatch("unlabelled edge " + std::to_string(e.id) + " in f(R_k)");
        continue;
      }
      if (forbidden.contains(*e.label)) {
        report.deleted.push_back(*e.label);
        if (expected.contains(*e.label)) {
          mismatch("obstruction \"" + *e.label + "\" is an edge of R_{k+1}");
        }
        continue;
      }
      survivors.insert(*e.label);
      auto it = expected.find(*e.label);
      if (it == expected.end()) {
        mismatch("surviving edge \"" + *e.label + "\" is not in R_{k+1}");
        continue;
      }
      Ends ends{*line.graph.vertex(e.source).label,
                *line.graph.vertex(e.target).label};
      if (ends != it->second) {
        mismatch("edge \"" + *e.label + "\" has different endpoints");
      }
    }
    for (auto const& [label, ends] : expected) {
      if (!survivors.contains(label)) {
        mismatch("edge \"" + label + "\" of R_{k+1} missing from f(R_k)");
      }
    }
    std::sort(report.deleted.begin(), report.deleted.end());
    return report;
  }

  bool Proposition1Report::all_cycles() const {
    return std::all_of(rows.begin(), rows.end(), [](auto const& r) {
      return r.cycle;
    });
  }

  Proposition1Report check_proposition1(FactorLanguage const& fl,
                                        Recurrence            hypothesis,
                                        std::size_t           k_lo,
                                        std::size_t           k_hi) {
    Proposition1Report report{fl.source(), hypothesis, {}, {}};
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
      auto const r  = build_rauzy(fl, k);
      auto const sc = strongly_connected(r.graph);
      auto const cy = sc && is_cycle(r.graph);
      report.rows.push_back(
          {k, r.graph.num_vertices(), r.graph.num_edges(), sc, cy});
      if (hypothesis == Recurrence::uniformly_recurrent_aperiodic
          && (!sc || cy)) {
        report.violations.push_back(k);
      }
    }
    return report;
  }

  Proposition1Report check_proposition1(SequenceSpec const&   spec,
                                        std::size_t           k_lo,
                                        std::size_t           k_hi,
                                        ExtractOptions const& opts) {
    auto const fl = extract_factors(spec, k_hi + 1, opts);
    return check_proposition1(fl, classify(spec), k_lo, k_hi);
  }

}  // namespace cogrowth
