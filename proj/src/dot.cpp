#include "ptcat/dot.hpp"

#include <sstream>

namespace ptcat {

std::string render_intp_path_dot(const intp::IObj& start,
                                 const std::vector<intp::IMor>& path) {
  using intp::show_iobj;
  std::ostringstream os;
  const size_t n = path.size();
  intp::IObj end = n == 0 ? start : path.back().dst;

  os << "digraph intp_composition {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  os << "  in [shape=point label=\"\"];\n";
  os << "  out [shape=point label=\"\"];\n";

  // The traced region: every arrow box sits inside one dashed box; the
  // feedback wires A₁⁻,…,A_{n−1}⁻ stay inside it.
  os << "  subgraph cluster_trace {\n";
  os << "    style=dashed;\n";
  os << "    label=\"Tr over";
  {
    intp::IObj cur = start;
    for (size_t i = 0; i < n; ++i) {
      os << (i ? " + " : " ") << cur.minus;
      cur = path[i].dst;
    }
    if (n == 0) os << " 0";
  }
  os << "\";\n";
  for (size_t i = 0; i < n; ++i) {
    os << "    p" << i + 1 << " [label=\"p" << i + 1 << ": "
       << show_iobj(path[i].src) << " -> " << show_iobj(path[i].dst) << "\"];\n";
  }
  if (n == 0) os << "    id [label=\"id " << show_iobj(start) << "\"];\n";
  for (size_t i = 0; i + 1 < n; ++i) {
    os << "    p" << i + 1 << " -> p" << i + 2 << " [label=\"+"
       << path[i].dst.plus << "\"];\n";
    os << "    p" << i + 2 << " -> p" << i + 1 << " [label=\"-"
       << path[i].dst.minus << "\" style=dotted constraint=false];\n";
  }
  os << "  }\n";

  if (n == 0) {
    os << "  in -> id [label=\"+" << start.plus << "\"];\n";
    os << "  id -> out [label=\"+" << start.plus << "\"];\n";
  } else {
    os << "  in -> p1 [label=\"+" << start.plus << "\"];\n";
    os << "  p" << n << " -> out [label=\"+" << end.plus << "\"];\n";
    os << "  in -> p" << n << " [label=\"-" << end.minus << "\" style=dotted];\n";
    os << "  p1 -> out [label=\"-" << start.minus << "\" style=dotted];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ptcat
