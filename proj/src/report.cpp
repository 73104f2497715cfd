#include "cogrowth/report.hpp"

#include "cogrowth/error.hpp"

namespace cogrowth {

  nlohmann::ordered_json digraph_to_json(Digraph const& g) {
    auto vs = nlohmann::ordered_json::array();
    for (auto const& v : g.vertices()) {
      nlohmann::ordered_json j;
      j["id"] = v.id;
      if (v.label) {
        j["label"] = *v.label;
      }
      vs.push_back(std::move(j));
    }
    auto es = nlohmann::ordered_json::array();
    for (auto const& e : g.edges()) {
      nlohmann::ordered_json j;
      j["id"]     = e.id;
      j["source"] = e.source;
      j["target"] = e.target;
      if (e.label) {
        j["label"] = *e.label;
      }
      es.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["vertices"] = std::move(vs);
    out["edges"]    = std::move(es);
    return out;
  }

  Digraph digraph_from_json(nlohmann::json const& doc) {
    try {
      std::vector<VertexRecord> vs;
      for (auto const& v : doc.at("vertices")) {
        VertexRecord r{v.at("id").get<VertexId>(), std::nullopt};
        if (v.contains("label")) {
          r.label = v.at("label").get<std::string>();
        }
        vs.push_back(std::move(r));
      }
      std::vector<EdgeRecord> es;
      for (auto const& e : doc.at("edges")) {
        EdgeRecord r{e.at("id").get<EdgeId>(),
                     e.at("source").get<VertexId>(),
                     e.at("target").get<VertexId>(),
                     std::nullopt};
        if (e.contains("label")) {
          r.label = e.at("label").get<std::string>();
        }
        es.push_back(std::move(r));
      }
      return Digraph(std::move(vs), std::move(es));
    } catch (nlohmann::json::exception const& e) {
      throw Error(ErrorCode::invalid_argument,
                  std::string("malformed graph JSON: ") + e.what());
    }
  }

  nlohmann::ordered_json report_to_json(LemmaReport const& report) {
    nlohmann::ordered_json j;
    j["lemma"]       = report.lemma;
    j["corpus"]      = report.corpus;
    j["corpus_size"] = report.corpus_size;
    j["passes"]      = report.passes;
    j["checks"]      = report.checks;
    auto vs          = nlohmann::ordered_json::array();
    for (auto const& v : report.violations) {
      nlohmann::ordered_json x;
      x["item"]    = v.item;
      x["seed"]    = v.seed;
      x["witness"] = v.witness;
      x["graph"]   = digraph_to_json(v.graph);
      x["dot"]     = to_dot(v.graph, report.lemma + "-" + std::to_string(v.item));
      vs.push_back(std::move(x));
    }
    j["violations"] = std::move(vs);
    j["details"]    = report.details;
    return j;
  }

  nlohmann::ordered_json report_to_json(EvolutionReport const& report) {
    nlohmann::ordered_json j;
    j["k"]          = report.k;
    j["deleted"]    = report.deleted;
    j["isomorphic"] = report.isomorphic;
    j["mismatches"] = report.mismatches;
    return j;
  }

}  // namespace cogrowth
