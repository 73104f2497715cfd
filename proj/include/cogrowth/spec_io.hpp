#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cogrowth/words.hpp"

namespace cogrowth {

  //! Parses {"name", "variant": "morphic"|"periodic"|"explicit", "images",
  //! "seed", "word"}. Throws Error(invalid_spec) on malformed documents.
  SequenceSpec spec_from_json(nlohmann::json const& doc);
  nlohmann::ordered_json spec_to_json(SequenceSpec const& spec);

  //! Reads and parses a JSON spec file. Throws Error(invalid_argument) if
  //! the file cannot be opened.
  SequenceSpec load_spec_file(std::string const& path);

  //! Resolves "fibonacci", "thue-morse", "period-doubling" and
  //! "periodic:<word>"; returns false for anything else.
  bool is_builtin_spec(std::string_view name);
  SequenceSpec builtin_spec(std::string_view name);

  //! Built-in name if recognised, otherwise a path to a JSON document.
  SequenceSpec resolve_spec(std::string const& name_or_path);

}  // namespace cogrowth
