// core/src/assignment.cc

// Copyright 2026  The doalab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "doalab/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace doalab {

namespace {

void check_square(const std::vector<std::vector<double>>& cost) {
  const size_t n = cost.size();
  if (n == 0) throw std::invalid_argument("assignment: empty cost matrix");
  for (const auto& row : cost) {
    if (row.size() != n)
      throw std::invalid_argument("assignment: cost matrix is not square");
    for (double c : row)
      if (!std::isfinite(c))
        throw std::invalid_argument("assignment: non-finite cost entry");
  }
}

double assignment_cost(const std::vector<std::vector<double>>& cost,
                       const std::vector<int>& col_of_row) {
  double total = 0.0;
  for (size_t i = 0; i < col_of_row.size(); ++i)
    total += cost[i][static_cast<size_t>(col_of_row[i])];
  return total;
}

}  // namespace

Assignment hungarian_assign(const std::vector<std::vector<double>>& cost) {
  check_square(cost);
  const int n = static_cast<int>(cost.size());
  const double kInf = std::numeric_limits<double>::infinity();

  // 1-indexed potentials; p[j] is the row matched to column j.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment a;
  a.col_of_row.assign(n, -1);
  for (int j = 1; j <= n; ++j) a.col_of_row[p[j] - 1] = j - 1;
  a.cost = assignment_cost(cost, a.col_of_row);
  return a;
}

Assignment exhaustive_assign(const std::vector<std::vector<double>>& cost) {
  check_square(cost);
  const size_t n = cost.size();
  if (n > 8) throw std::invalid_argument("exhaustive_assign: n > 8");

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Assignment best;
  best.col_of_row = perm;
  best.cost = assignment_cost(cost, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double c = assignment_cost(cost, perm);
    if (c < best.cost) {
      best.cost = c;
      best.col_of_row = perm;
    }
  }
  return best;
}

}  // namespace doalab
