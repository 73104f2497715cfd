#pragma once

#include <json.hpp>

#include "cogrowth/digraph.hpp"
#include "cogrowth/rauzy.hpp"
#include "cogrowth/verify.hpp"

namespace cogrowth {

  //! {"vertices": [{"id", "label"?}], "edges": [{"id", "source", "target",
  //! "label"?}]}; labels are omitted when absent.
  nlohmann::ordered_json digraph_to_json(Digraph const& g);

  //! Inverse of digraph_to_json; throws InvalidArgument on malformed input.
  Digraph digraph_from_json(nlohmann::json const& doc);

  //! {lemma, corpus, corpus_size, passes, checks, violations: [{item, seed,
  //! witness, graph, dot}], details}.
  nlohmann::ordered_json report_to_json(LemmaReport const& report);

  //! {k, deleted, isomorphic, mismatches}.
  nlohmann::ordered_json report_to_json(EvolutionReport const& report);

}  // namespace cogrowth
