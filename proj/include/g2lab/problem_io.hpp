#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "g2lab/form.hpp"

namespace g2lab {

/// A user-defined problem: structure equations plus a candidate 3-form.
/// Line-oriented format:
///   dim 7
///   de 3 = -1*e37        # omitted k default to 0
///   phi = e127 + ...     # '#' starts a comment
struct ProblemFile {
  int dim = 7;
  std::vector<Form> diffs;
  Form phi{7, 3};
};

/// Parse error positions are reported as "line L, col C: ..." in what().
ProblemFile parse_problem(std::string_view text);

std::string render_problem(const ProblemFile& p, int digits = 12);

}  // namespace g2lab
