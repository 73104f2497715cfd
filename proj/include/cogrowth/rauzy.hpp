#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cogrowth/digraph.hpp"
#include "cogrowth/factors.hpp"
#include "cogrowth/obstructions.hpp"
#include "cogrowth/words.hpp"

namespace cogrowth {

  //! Rauzy graph R_k: vertices are the length-k factors, edges the
  //! length-(k+1) factors, each joining its length-k prefix to its length-k
  //! suffix. Vertex and edge ids are lexicographic ranks.
  struct RauzyGraph {
    std::size_t k;
    Digraph     graph;
    std::string source;
  };

  //! Throws InsufficientStrata unless k + 1 <= fl.k_max().
  RauzyGraph build_rauzy(FactorLanguage const& fl, std::size_t k);

  struct EvolutionReport {
    std::size_t              k;
    std::vector<Word>        deleted;     // obstruction labels removed from f(R_k)
    bool                     isomorphic;  // f(R_k) - deleted == R_{k+1} on labels
    std::vector<std::string> mismatches;
    std::size_t              line_graph_edges;
    std::size_t              rauzy_edges;
  };

  //! Compares R_{k+1} with f(R_k) minus the edges labelled by obstructions of
  //! length k + 2. Throws InsufficientStrata unless strata and obstructions
  //! reach length k + 2.
  EvolutionReport check_evolution(FactorLanguage const& fl,
                                  ObstructionSet const& obs,
                                  std::size_t           k);

  struct Proposition1Row {
    std::size_t k;
    std::size_t vertices;
    std::size_t edges;
    bool        strongly_connected;
    bool        cycle;
  };

  struct Proposition1Report {
    std::string                  source;
    Recurrence                   hypothesis;
    std::vector<Proposition1Row> rows;
    //! Rows contradicting the proposition. Only meaningful when the
    //! hypothesis holds; for periodic words every R_k being a cycle is the
    //! expected outcome and is not a violation.
    std::vector<std::size_t> violations;
    [[nodiscard]] bool all_cycles() const;
  };

  Proposition1Report check_proposition1(FactorLanguage const& fl,
                                        Recurrence            hypothesis,
                                        std::size_t           k_lo,
                                        std::size_t           k_hi);

  //! Extracts strata through k_hi + 1 and checks every k in [k_lo, k_hi].
  Proposition1Report check_proposition1(SequenceSpec const&   spec,
                                        std::size_t           k_lo,
                                        std::size_t           k_hi,
                                        ExtractOptions const& opts = {});

}  // namespace cogrowth
