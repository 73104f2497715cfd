#include "cogrowth/spec_io.hpp"

#include <fstream>
#include <map>

#include "cogrowth/error.hpp"

namespace cogrowth {

  namespace {
    std::string require_string(nlohmann::json const& doc, char const* key) {
      if (!doc.contains(key) || !doc[key].is_string()) {
        throw Error(ErrorCode::invalid_spec,
                    std::string("missing string field \"") + key + "\"");
      }
      return doc[key].get<std::string>();
    }

    char single_letter(std::string const& s, std::string const& what) {
      if (s.size() != 1) {
        throw Error(ErrorCode::invalid_spec,
                    what + " must be a single character, found \"" + s + "\"");
      }
      return s.front();
    }
  }  // namespace

  SequenceSpec spec_from_json(nlohmann::json const& doc) {
    if (!doc.is_object()) {
      throw Error(ErrorCode::invalid_spec, "spec must be a JSON object");
    }
    auto const name    = doc.contains("name") && doc["name"].is_string()
                             ? doc["name"].get<std::string>()
                             : std::string("unnamed");
    auto const variant = require_string(doc, "variant");

    if (variant == "morphic") {
      if (!doc.contains("images") || !doc["images"].is_object()) {
        throw Error(ErrorCode::invalid_spec,
                    "morphic spec needs an \"images\" object");
      }
      std::map<char, Word> images;
      std::string          letters;
      for (auto const& [key, value] : doc["images"].items()) {
        if (!value.is_string()) {
          throw Error(ErrorCode::invalid_spec, "image of '" + key
                                                   + "' must be a string");
        }
        char c    = single_letter(key, "image key");
        images[c] = value.get<std::string>();
        letters += c;
      }
      std::sort(letters.begin(), letters.end());
      auto seed = single_letter(require_string(doc, "seed"), "seed");
      return SequenceSpec::morphic(
          name, Morphism(Alphabet(letters), std::move(images)), seed);
    }
    if (variant == "periodic") {
      return SequenceSpec::periodic(name, require_string(doc, "word"));
    }
    if (variant == "explicit") {
      return SequenceSpec::explicit_prefix(name, require_string(doc, "word"));
    }
    throw Error(ErrorCode::invalid_spec, "unknown variant \"" + variant + "\"");
  }

  nlohmann::ordered_json spec_to_json(SequenceSpec const& spec) {
    nlohmann::ordered_json out;
    out["name"] = spec.name();
    std::visit(
        [&out](auto const& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, MorphicFixedPoint>) {
            out["variant"] = "morphic";
            nlohmann::ordered_json images;
            for (auto const& [c, img] : v.morphism.images()) {
              images[std::string(1, c)] = img;
            }
            out["images"] = images;
            out["seed"]   = std::string(1, v.seed);
          } else if constexpr (std::is_same_v<T, Periodic>) {
            out["variant"] = "periodic";
            out["word"]    = v.period;
          } else {
            out["variant"] = "explicit";
            out["word"]    = v.word;
          }
        },
        spec.variant());
    return out;
  }

  SequenceSpec load_spec_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::invalid_argument,
                  "cannot open spec file \"" + path + "\"");
    }
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (nlohmann::json::parse_error const& e) {
      throw Error(ErrorCode::invalid_spec,
                  "cannot parse \"" + path + "\": " + e.what());
    }
    return spec_from_json(doc);
  }

  bool is_builtin_spec(std::string_view name) {
    return name == "fibonacci" || name == "thue-morse"
           || name == "period-doubling" || name.starts_with("periodic:");
  }

  SequenceSpec builtin_spec(std::string_view name) {
    if (name == "fibonacci") {
      return builtin::fibonacci();
    }
    if (name == "thue-morse") {
      return builtin::thue_morse();
    }
    if (name == "period-doubling") {
      return builtin::period_doubling();
    }
    if (name.starts_with("periodic:")) {
      return SequenceSpec::periodic(std::string(name),
                                    std::string(name.substr(9)));
    }
    throw Error(ErrorCode::invalid_argument,
                "unknown built-in spec \"" + std::string(name) + "\"");
  }

  SequenceSpec resolve_spec(std::string const& name_or_path) {
    if (is_builtin_spec(name_or_path)) {
      return builtin_spec(name_or_path);
    }
    return load_spec_file(name_or_path);
  }

}  // namespace cogrowth
