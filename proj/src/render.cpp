#include "pbr/render.hpp"

#include <sstream>

namespace pbr {

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"' || ch == '\\') {
          out += '\\';
        }
        out += ch;
      }
      return out + '"';
    }

    std::string node_id(Pbr const& p, std::size_t i) {
      return p.is_domain_index(i) ? "d" + std::to_string(i)
                                  : "c" + std::to_string(i - p.domain_size());
    }

    void column(std::ostringstream& out, Pbr const& p, std::size_t begin,
                std::size_t end, char const* rank) {
      out << "  { rank=" << rank << ";\n";
      for (std::size_t i = begin; i < end; ++i) {
        out << "    " << node_id(p, i) << " [label=" << quoted(p.vertex(i).label)
            << "];\n";
      }
      // Invisible chain keeps declared order top to bottom.
      for (std::size_t i = begin; i + 1 < end; ++i) {
        out << "    " << node_id(p, i) << " -> " << node_id(p, i + 1)
            << " [style=invis];\n";
      }
      out << "  }\n";
    }
  }  // namespace

  std::string to_dot(Pbr const& p, std::string const& name) {
    std::ostringstream out;
    out << "digraph " << quoted(name) << " {\n";
    out << "  rankdir=LR;\n  node [shape=circle];\n";
    column(out, p, p.domain_size(), p.num_vertices(), "min");
    column(out, p, 0, p.domain_size(), "max");
    for (auto const& e : p.edges()) {
      auto s = *p.index_of(e.source);
      auto t = *p.index_of(e.target);
      out << "  " << node_id(p, s) << " -> " << node_id(p, t);
      if (p.is_domain_index(s) == p.is_domain_index(t)) {
        out << " [constraint=false]";
      }
      out << ";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace pbr
