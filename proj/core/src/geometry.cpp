#include "jordan2/geometry.hpp"

#include <functional>

namespace jordan2 {

std::vector<std::vector<int>> graded_monomials(std::size_t n, int max_degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  // Lexicographic descent with v1 > v2 > ...: give the earliest variable as
  // much of the remaining degree as possible first.
  const std::function<void(std::size_t, int)> fill = [&](std::size_t var, int left) {
    if (var + 1 == n) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int d = left; d >= 0; --d) {
      e[var] = d;
      fill(var + 1, left - d);
    }
  };
  for (int deg = 0; deg <= max_degree; ++deg) fill(0, deg);
  return out;
}

}  // namespace jordan2
