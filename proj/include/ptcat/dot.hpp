// Graphviz rendering of Intp path compositions: one box per arrow, forward
// wires carrying the plus components, feedback wires carrying the minus
// components, and a single dashed box delimiting the traced region.
#pragma once

#include <string>
#include <vector>

#include "ptcat/intp.hpp"

namespace ptcat {

std::string render_intp_path_dot(const intp::IObj& start,
                                 const std::vector<intp::IMor>& path);

}  // namespace ptcat
