#include "cogrowth/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cogrowth/factors.hpp"
#include "cogrowth/obstructions.hpp"
#include "cogrowth/rauzy.hpp"
#include "cogrowth/report.hpp"
#include "cogrowth/spec_io.hpp"
#include "cogrowth/verify.hpp"
#include "cogrowth/words.hpp"

namespace cogrowth {

  int exit_code(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::invalid_argument:
      case ErrorCode::invalid_spec:
        return exit_status::usage;
      case ErrorCode::budget_exceeded:
        return exit_status::budget;
      default:
        return exit_status::data;
    }
  }

  namespace {
    using json = nlohmann::ordered_json;

    struct Settings {
      std::string              spec = "fibonacci";
      std::string              out_path;
      std::size_t              n     = 0;
      std::size_t              n_max = 0;
      std::size_t              k_max = 0;
      std::vector<std::size_t> ks;
      std::size_t              k_lo = 0;
      std::size_t              k_hi = 0;
      std::string              lemma = "all";
      std::uint64_t            seed  = 0;
      std::size_t              count = 0;
      std::size_t              max_vertices = 0;
      std::size_t              budget       = default_budget;
      std::size_t              cap          = ExtractOptions{}.cap;
      bool                     serial       = false;
      bool                     line         = false;
    };

    // The budget flag wins over COGROWTH_BUDGET, which wins over the default.
    std::size_t resolve_budget(CLI::Option const* flag, std::size_t value) {
      if (flag->count() > 0) {
        return value;
      }
      if (char const* env = std::getenv("COGROWTH_BUDGET")) {
        try {
          std::size_t pos = 0;
          auto        v   = std::stoull(env, &pos);
          if (pos == std::string(env).size() && v > 0) {
            return static_cast<std::size_t>(v);
          }
        } catch (std::exception const&) {
        }
        throw Error(ErrorCode::invalid_argument,
                    std::string("COGROWTH_BUDGET is not a positive integer: ")
                        + env);
      }
      return default_budget;
    }

    ExtractOptions extract_options(Settings const& s) {
      return {s.cap, s.serial ? Execution::serial : Execution::parallel};
    }

    json base_config(std::string const& command, Settings const& s) {
      json c;
      c["command"] = command;
      c["spec"]    = s.spec;
      return c;
    }

    std::string one_line(json const& j) {
      return j.dump();
    }

    int emit(Settings const& s, std::string const& text, std::ostream& out,
             std::ostream& err) {
      if (s.out_path.empty()) {
        out << text;
        out.flush();
        return exit_status::ok;
      }
      std::ofstream file(s.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open output file " << s.out_path << '\n';
        return exit_status::usage;
      }
      file << text;
      return exit_status::ok;
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    int cmd_generate(Settings const& s, std::ostream& out, std::ostream& err) {
      auto const spec = resolve_spec(s.spec);
      auto       c    = base_config("generate", s);
      c["n"]          = s.n;
      err << "# config: " << one_line(c) << '\n';
      return emit(s, expand_prefix(spec, s.n) + "\n", out, err);
    }

    void note_certification(std::ostream& os, FactorLanguage const& fl,
                            std::ostream& err) {
      os << "# prefix_len: " << fl.prefix_len()
         << " certified: " << (fl.certified() ? "true" : "false") << '\n';
      if (fl.saturation_failed()) {
        err << "warning: strata not certified below the prefix cap\n";
      }
    }

    int cmd_factors(Settings const& s, std::ostream& out, std::ostream& err) {
      auto const spec = resolve_spec(s.spec);
      auto const fl   = extract_factors(spec, s.k_max, extract_options(s));
      auto       c    = base_config("factors", s);
      c["k_max"]      = s.k_max;
      c["cap"]        = s.cap;
      std::ostringstream os;
      os << "# config: " << one_line(c) << '\n';
      note_certification(os, fl, err);
      write_strata(os, fl);
      return emit(s, os.str(), out, err);
    }

    int cmd_obstructions(Settings const& s, std::ostream& out,
                         std::ostream& err) {
      auto const spec = resolve_spec(s.spec);
      auto const opts = extract_options(s);
      auto const fl   = extract_factors(spec, s.n_max, opts);
      auto const obs  = minimal_forbidden(fl, s.n_max, opts.exec);
      auto       c    = base_config("obstructions", s);
      c["n_max"]      = s.n_max;
      c["cap"]        = s.cap;
      std::ostringstream os;
      os << "# config: " << one_line(c) << '\n';
      note_certification(os, fl, err);
      write_obstructions(os, obs);
      return emit(s, os.str(), out, err);
    }

    int cmd_cogrowth(Settings const& s, std::ostream& out, std::ostream& err) {
      auto const spec    = resolve_spec(s.spec);
      auto const profile = cogrowth_profile(spec, s.n_max, extract_options(s));
      auto       c       = base_config("cogrowth", s);
      c["n_max"]         = s.n_max;
      c["cap"]           = s.cap;
      std::ostringstream os;
      os << "# config: " << one_line(c) << '\n';
      os << "# certified: " << (profile.certified ? "true" : "false") << '\n';
      if (!profile.certified) {
        err << "warning: strata not certified below the prefix cap\n";
      }
      write_profile_csv(os, profile);
      return emit(s, os.str(), out, err);
    }

    int cmd_rauzy(Settings const& s, std::ostream& out, std::ostream& err) {
      auto const  spec  = resolve_spec(s.spec);
      std::size_t k_top = 0;
      for (auto k : s.ks) {
        k_top = std::max(k_top, k);
      }
      auto const fl = extract_factors(spec, k_top + 1, extract_options(s));
      auto       c  = base_config("rauzy", s);
      c["k"]        = s.ks;
      c["line"]     = s.line;
      c["cap"]      = s.cap;
      std::ostringstream os;
      os << "// config: " << one_line(c) << '\n';
      for (auto k : s.ks) {
        auto const r = build_rauzy(fl, k);
        write_dot(os, r.graph, "R_" + std::to_string(k));
        if (s.line) {
          write_dot(os, line_digraph(r.graph).graph,
                    "f(R_" + std::to_string(k) + ")");
        }
      }
      (void) err;
      return emit(s, os.str(), out, err);
    }

    std::vector<std::string> const corpus_lemmas
        = {"evol", "del-edge", "main", "corollary-main", "good-path"};
    std::vector<std::string> const sequence_lemmas
        = {"corollary-er", "prop1", "theorem", "evolution"};

    int cmd_verify(Settings const&     s,
                   CLI::Option const*  spec_flag,
                   CLI::Option const*  seed_flag,
                   CLI::Option const*  count_flag,
                   CLI::Option const*  max_vertices_flag,
                   CLI::Option const*  n_max_flag,
                   CLI::Option const*  k_lo_flag,
                   CLI::Option const*  k_hi_flag,
                   CLI::Option const*  budget_flag,
                   std::ostream&       out,
                   std::ostream&       err) {
      auto const exec = s.serial ? Execution::serial : Execution::parallel;
      MainLemmaOptions mopts;
      mopts.budget = resolve_budget(budget_flag, s.budget);

      auto corpus = [&](CorpusSpec spec) {
        if (seed_flag->count() > 0) {
          spec.seed = s.seed;
        }
        if (count_flag->count() > 0) {
          spec.count = s.count;
        }
        if (max_vertices_flag->count() > 0) {
          spec.max_vertices = s.max_vertices;
          spec.min_vertices = std::min(spec.min_vertices, s.max_vertices);
        }
        return spec;
      };

      std::vector<SequenceSpec> specs;
      if (spec_flag->count() > 0) {
        specs.push_back(resolve_spec(s.spec));
      }
      auto specs_or = [&](std::vector<std::string> const& names) {
        if (!specs.empty()) {
          return specs;
        }
        std::vector<SequenceSpec> out_specs;
        for (auto const& n : names) {
          out_specs.push_back(builtin_spec(n));
        }
        return out_specs;
      };
      auto n_max_or = [&](std::size_t d) {
        return n_max_flag->count() > 0 ? s.n_max : d;
      };
      auto k_lo_or = [&](std::size_t d) {
        return k_lo_flag->count() > 0 ? s.k_lo : d;
      };
      auto k_hi_or = [&](std::size_t d) {
        return k_hi_flag->count() > 0 ? s.k_hi : d;
      };

      auto const opts = extract_options(s);
      std::vector<LemmaReport> reports;
      auto run = [&](std::string const& lemma) {
        if (lemma == "evol") {
          reports.push_back(run_lemma_evol(corpus(corpus_defaults::evol()), exec));
        } else if (lemma == "del-edge") {
          reports.push_back(
              run_lemma_del_edge(corpus(corpus_defaults::del_edge()), exec));
        } else if (lemma == "main") {
          reports.push_back(run_main_lemma(
              corpus(corpus_defaults::main_lemma()), mopts, exec));
        } else if (lemma == "corollary-main") {
          reports.push_back(run_corollary_main(
              corpus(corpus_defaults::corollary_main()), 1, mopts, exec));
        } else if (lemma == "good-path") {
          reports.push_back(
              run_good_path(corpus(corpus_defaults::main_lemma()), {}, exec));
        } else if (lemma == "corollary-er") {
          for (auto const& sp : specs_or({"fibonacci", "thue-morse"})) {
            reports.push_back(run_corollary_er(sp, 1, n_max_or(20), opts));
          }
        } else if (lemma == "prop1") {
          for (auto const& sp :
               specs_or({"fibonacci", "thue-morse", "periodic:ab"})) {
            reports.push_back(
                run_proposition1(sp, k_lo_or(1), k_hi_or(15), opts));
          }
        } else if (lemma == "theorem") {
          for (auto const& sp : specs_or({"fibonacci"})) {
            reports.push_back(run_theorem(sp, n_max_or(1000), opts));
          }
        } else if (lemma == "evolution") {
          for (auto const& sp : specs_or({"fibonacci", "thue-morse"})) {
            reports.push_back(run_evolution(sp, k_lo_or(0), k_hi_or(12), opts));
          }
        }
      };
      if (s.lemma == "all") {
        for (auto const& l : corpus_lemmas) {
          run(l);
        }
        for (auto const& l : sequence_lemmas) {
          run(l);
        }
      } else {
        run(s.lemma);
      }

      json c       = base_config("verify", s);
      c["lemma"]   = s.lemma;
      c["spec"]    = spec_flag->count() > 0 ? json(s.spec) : json(nullptr);
      c["seed"]    = seed_flag->count() > 0 ? json(s.seed) : json(nullptr);
      c["count"]   = count_flag->count() > 0 ? json(s.count) : json(nullptr);
      c["max_vertices"]
          = max_vertices_flag->count() > 0 ? json(s.max_vertices) : json(nullptr);
      c["n_max"]   = n_max_flag->count() > 0 ? json(s.n_max) : json(nullptr);
      c["k_lo"]    = k_lo_flag->count() > 0 ? json(s.k_lo) : json(nullptr);
      c["k_hi"]    = k_hi_flag->count() > 0 ? json(s.k_hi) : json(nullptr);
      c["budget"]  = mopts.budget;
      c["cap"]     = s.cap;
      c["serial"]  = s.serial;

      bool ok   = true;
      json list = json::array();
      for (auto const& r : reports) {
        ok = ok && r.ok();
        list.push_back(report_to_json(r));
        err << r.lemma << ": " << r.passes << "/" << r.corpus_size << " pass, "
            << r.violations.size() << " violation(s)\n";
      }
      json doc;
      doc["config"]  = std::move(c);
      doc["reports"] = std::move(list);
      doc["ok"]      = ok;
      auto status    = emit(s, doc.dump(2) + "\n", out, err);
      if (status != exit_status::ok) {
        return status;
      }
      return ok ? exit_status::ok : exit_status::violation;
    }
  }  // namespace

  int run_cli(int argc, char const* const* argv, std::ostream& out,
              std::ostream& err) {
    Settings s;
    CLI::App app{"Factor languages, obstructions and Rauzy graphs of "
                 "infinite words"};
    app.name("cogrowth");
    app.require_subcommand(1);

    auto add_spec = [&s](CLI::App* sub) {
      return sub
          ->add_option("--spec", s.spec,
                       "fibonacci, thue-morse, period-doubling, "
                       "periodic:<word> or a JSON file")
          ->capture_default_str();
    };
    auto add_common = [&s](CLI::App* sub) {
      sub->add_option("--out", s.out_path, "output file (default stdout)");
      sub->add_option("--cap", s.cap, "longest prefix scanned")
          ->capture_default_str()
          ->check(CLI::PositiveNumber);
      sub->add_flag("--serial", s.serial, "use the serial kernels");
    };

    auto* gen = app.add_subcommand("generate", "print a prefix of the word");
    add_spec(gen);
    gen->add_option("--n", s.n, "prefix length")->required()->check(
        CLI::PositiveNumber);
    gen->add_option("--out", s.out_path, "output file (default stdout)");

    auto* fac = app.add_subcommand("factors", "factor strata F_1..F_k");
    add_spec(fac);
    add_common(fac);
    fac->add_option("--k-max", s.k_max, "largest factor length")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* obs = app.add_subcommand("obstructions", "minimal forbidden words");
    add_spec(obs);
    add_common(obs);
    obs->add_option("--n-max", s.n_max, "largest obstruction length")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* cog = app.add_subcommand("cogrowth", "cogrowth profile as CSV");
    add_spec(cog);
    add_common(cog);
    cog->add_option("--n-max", s.n_max, "largest n")->required()->check(
        CLI::Range(std::size_t(2), std::size_t(1) << 20));

    auto* rz = app.add_subcommand("rauzy", "Rauzy graphs as DOT");
    add_spec(rz);
    add_common(rz);
    rz->add_option("--k", s.ks, "vertex word length (repeatable)")
        ->required()
        ->expected(1, 64);
    rz->add_flag("--line", s.line, "also export the line digraph of each R_k");

    auto* ver = app.add_subcommand("verify", "run property checks");
    auto* spec_flag = add_spec(ver);
    add_common(ver);
    std::vector<std::string> lemmas = {"all"};
    lemmas.insert(lemmas.end(), corpus_lemmas.begin(), corpus_lemmas.end());
    lemmas.insert(lemmas.end(), sequence_lemmas.begin(), sequence_lemmas.end());
    ver->add_option("--lemma", s.lemma, "which check to run")
        ->capture_default_str()
        ->check(CLI::IsMember(lemmas));
    auto* seed_flag  = ver->add_option("--seed", s.seed, "corpus seed");
    auto* count_flag = ver->add_option("--count", s.count, "corpus size")
                           ->check(CLI::PositiveNumber);
    auto* maxv_flag
        = ver->add_option("--max-vertices", s.max_vertices, "corpus vertex bound")
              ->check(CLI::Range(2, 16));
    auto* n_max_flag = ver->add_option("--n-max", s.n_max, "largest n");
    auto* k_lo_flag  = ver->add_option("--k-lo", s.k_lo, "smallest k");
    auto* k_hi_flag  = ver->add_option("--k-hi", s.k_hi, "largest k");
    auto* budget_flag
        = ver->add_option("--budget", s.budget,
                          "vertex budget for iterated line digraphs "
                          "(default 1000000 or COGROWTH_BUDGET)")
              ->check(CLI::PositiveNumber);

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_status::ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_status::ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_status::usage;
    }

    try {
      if (gen->parsed()) {
        return cmd_generate(s, out, err);
      }
      if (fac->parsed()) {
        return cmd_factors(s, out, err);
      }
      if (obs->parsed()) {
        return cmd_obstructions(s, out, err);
      }
      if (cog->parsed()) {
        return cmd_cogrowth(s, out, err);
      }
      if (rz->parsed()) {
        return cmd_rauzy(s, out, err);
      }
      return cmd_verify(s,
                        spec_flag,
                        seed_flag,
                        count_flag,
                        maxv_flag,
                        n_max_flag,
                        k_lo_flag,
                        k_hi_flag,
                        budget_flag,
                        out,
                        err);
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_code(e.code());
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return exit_status::data;
    }
  }

}  // namespace cogrowth
