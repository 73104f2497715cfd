#include <ostream>
#include <sstream>

#include "cogrowth/digraph.hpp"

namespace cogrowth {

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + '"';
    }
  }  // namespace

  void write_dot(std::ostream& out, Digraph const& g, std::string const& name) {
    out << "digraph " << quoted(name) << " {\n";
    for (auto const& v : g.vertices()) {
      out << "  v" << v.id << " [label="
          << quoted(v.label ? *v.label : std::to_string(v.id)) << "];\n";
    }
    for (auto const& e : g.edges()) {
      out << "  v" << e.source << " -> v" << e.target << " [label="
          << quoted(e.label ? *e.label : std::to_string(e.id)) << "];\n";
    }
    out << "}\n";
  }

  std::string to_dot(Digraph const& g, std::string const& name) {
    std::ostringstream out;
    write_dot(out, g, name);
    return out.str();
  }

}  // namespace cogrowth
