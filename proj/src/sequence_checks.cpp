#include <cmath>
#include <numbers>

#include "cogrowth/error.hpp"
#include "cogrowth/verify.hpp"

namespace cogrowth {

  CorollaryErReport check_corollary_er(SequenceSpec const&   spec,
                                       std::size_t           n_lo,
                                       std::size_t           n_hi,
                                       ExtractOptions const& opts) {
    if (n_lo < 1 || n_lo > n_hi) {
      throw Error(ErrorCode::invalid_argument,
                  "need 1 <= n_lo <= n_hi, got [" + std::to_string(n_lo) + ", "
                      + std::to_string(n_hi) + "]");
    }
    auto const fl  = extract_factors(spec, n_hi, opts);
    auto const obs = minimal_forbidden(fl, n_hi, opts.exec);
    CorollaryErReport report{fl.source(), classify(spec), {}, {}};
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
      auto const r     = build_rauzy(fl, n - 1);
      auto const er    = entropy_regulator(r.graph);
      auto const c     = cogrowth(obs, n);
      auto const bound = std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(c, 1000)));
      bool const ok    = er.is_finite() && static_cast<double>(er.value()) <= bound;
      report.rows.push_back({n, er, c, bound, ok});
      if (!ok && report.hypothesis == Recurrence::uniformly_recurrent_aperiodic) {
        report.violations.push_back(n);
      }
    }
    return report;
  }

  bool is_fibonacci(SequenceSpec const& spec) {
    auto const* m = std::get_if<MorphicFixedPoint>(&spec.variant());
    return m != nullptr && m->seed == 'a'
           && m->morphism.images() == builtin::fibonacci_morphism().images();
  }

  double log_phi(double x) noexcept {
    return std::log(x) / std::log(std::numbers::phi);
  }

  TheoremReport check_theorem(SequenceSpec const&   spec,
                              std::size_t           n_max,
                              ExtractOptions const& opts) {
    if (n_max < 10) {
      throw Error(ErrorCode::precondition_failed,
                  "theorem check needs n_max >= 10, got "
                      + std::to_string(n_max));
    }
    TheoremReport report{cogrowth_profile(spec, n_max, opts),
                         classify(spec), true, {}, true, {}};
    switch (report.hypothesis) {
      case Recurrence::uniformly_recurrent_aperiodic:
        break;
      case Recurrence::periodic:
        report.asserted    = false;
        report.skip_reason = "periodic: theorem hypothesis violated";
        break;
      case Recurrence::unknown:
        report.asserted    = false;
        report.skip_reason = "unknown recurrence: theorem hypothesis unverified";
        break;
    }
    if (report.asserted) {
      report.pass = report.profile.max_ratio() >= theorem_threshold;
    }
    if (is_fibonacci(spec)) {
      for (auto const& row : report.profile.rows) {
        report.log_phi_trend.push_back(static_cast<double>(row.cogrowth)
                                       / log_phi(static_cast<double>(row.n)));
      }
    }
    return report;
  }

  namespace {
    nlohmann::ordered_json source_json(FactorLanguage const& fl) {
      nlohmann::ordered_json j;
      j["source"]     = fl.source();
      j["prefix_len"] = fl.prefix_len();
      j["certified"]  = fl.certified();
      return j;
    }
  }  // namespace

  LemmaReport run_proposition1(SequenceSpec const&   spec,
                               std::size_t           k_lo,
                               std::size_t           k_hi,
                               ExtractOptions const& opts) {
    auto const fl  = extract_factors(spec, k_hi + 1, opts);
    auto const rep = check_proposition1(fl, classify(spec), k_lo, k_hi);

    LemmaReport r;
    r.lemma         = "prop1";
    r.corpus        = source_json(fl);
    r.corpus["k_lo"] = k_lo;
    r.corpus["k_hi"] = k_hi;
    r.corpus_size   = rep.rows.size();
    r.checks        = rep.rows.size();
    r.passes        = rep.rows.size() - rep.violations.size();
    for (auto k : rep.violations) {
      auto const& row = rep.rows[k - k_lo];
      r.violations.push_back(
          {k, 0, build_rauzy(fl, k).graph,
           "R_" + std::to_string(k) + (row.strongly_connected ? " is a cycle"
                                       : " is not strongly connected")});
    }
    r.details["hypothesis"] = std::string(to_string(rep.hypothesis));
    r.details["all_cycles"] = rep.all_cycles();
    auto rows = nlohmann::ordered_json::array();
    for (auto const& row : rep.rows) {
      rows.push_back({{"k", row.k},
                      {"vertices", row.vertices},
                      {"edges", row.edges},
                      {"strongly_connected", row.strongly_connected},
                      {"cycle", row.cycle}});
    }
    r.details["rows"] = std::move(rows);
    return r;
  }

  LemmaReport run_corollary_er(SequenceSpec const&   spec,
                               std::size_t           n_lo,
                               std::size_t           n_hi,
                               ExtractOptions const& opts) {
    auto const rep = check_corollary_er(spec, n_lo, n_hi, opts);

    LemmaReport r;
    r.lemma          = "corollary-er";
    r.corpus["source"] = rep.source;
    r.corpus["n_lo"]   = n_lo;
    r.corpus["n_hi"]   = n_hi;
    r.corpus_size      = rep.rows.size();
    r.checks           = rep.rows.size();
    r.passes           = rep.rows.size() - rep.violations.size();
    if (!rep.violations.empty()) {
      auto const fl = extract_factors(spec, n_hi, opts);
      for (auto n : rep.violations) {
        auto const& row = rep.rows[n - n_lo];
        r.violations.push_back({n, 0, build_rauzy(fl, n - 1).graph,
                                "er(R_" + std::to_string(n - 1)
                                    + ") = " + row.er.to_string()
                                    + " exceeds 2^" + std::to_string(row.cogrowth)});
      }
    }
    r.details["hypothesis"] = std::string(to_string(rep.hypothesis));
    auto rows = nlohmann::ordered_json::array();
    for (auto const& row : rep.rows) {
      nlohmann::ordered_json j;
      j["n"] = row.n;
      if (row.er.is_finite()) {
        j["er"] = row.er.value();
      } else {
        j["er"] = "inf";
      }
      j["cogrowth"] = row.cogrowth;
      j["pass"]     = row.pass;
      rows.push_back(std::move(j));
    }
    r.details["rows"] = std::move(rows);
    return r;
  }

  LemmaReport run_theorem(SequenceSpec const&   spec,
                          std::size_t           n_max,
                          ExtractOptions const& opts) {
    auto const rep = check_theorem(spec, n_max, opts);

    LemmaReport r;
    r.lemma             = "theorem";
    r.corpus["source"]    = rep.profile.source;
    r.corpus["n_max"]     = n_max;
    r.corpus["certified"] = rep.profile.certified;
    r.corpus_size         = 1;
    r.checks              = rep.profile.rows.size();
    r.passes              = rep.pass ? 1 : 0;
    if (!rep.pass) {
      r.violations.push_back(
          {0, 0, Digraph(),
           "max O_W(n)/log3(n) = " + std::to_string(rep.profile.max_ratio())
               + " < 1"});
    }
    r.details["hypothesis"] = std::string(to_string(rep.hypothesis));
    r.details["asserted"]   = rep.asserted;
    if (!rep.asserted) {
      r.details["skip_reason"] = rep.skip_reason;
    }
    r.details["max_ratio"] = rep.profile.max_ratio();
    for (auto const& row : rep.profile.rows) {
      if (row.ratio >= theorem_threshold) {
        r.details["first_n_at_threshold"] = row.n;
        break;
      }
    }
    r.details["cogrowth_at_n_max"] = rep.profile.rows.back().cogrowth;
    if (!rep.log_phi_trend.empty()) {
      r.details["log_phi_ratio_at_n_max"] = rep.log_phi_trend.back();
    }
    return r;
  }

  LemmaReport run_evolution(SequenceSpec const&   spec,
                            std::size_t           k_lo,
                            std::size_t           k_hi,
                            ExtractOptions const& opts) {
    auto const fl  = extract_factors(spec, k_hi + 2, opts);
    auto const obs = minimal_forbidden(fl, k_hi + 2, opts.exec);

    LemmaReport r;
    r.lemma          = "evolution";
    r.corpus         = source_json(fl);
    r.corpus["k_lo"] = k_lo;
    r.corpus["k_hi"] = k_hi;
    auto rows        = nlohmann::ordered_json::array();
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
      auto const ev = check_evolution(fl, obs, k);
      ++r.corpus_size;
      ++r.checks;
      if (ev.isomorphic) {
        ++r.passes;
      } else {
        r.violations.push_back(
            {k, 0, build_rauzy(fl, k).graph, ev.mismatches.front()});
      }
      nlohmann::ordered_json j;
      j["k"]          = ev.k;
      j["deleted"]    = ev.deleted;
      j["isomorphic"] = ev.isomorphic;
      rows.push_back(std::move(j));
    }
    r.details["rows"] = std::move(rows);
    return r;
  }

}  // namespace cogrowth
