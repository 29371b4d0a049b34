// core/include/doalab/assignment.hpp

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

#ifndef DOALAB_ASSIGNMENT_HPP_
#define DOALAB_ASSIGNMENT_HPP_

#include <vector>

namespace doalab {

struct Assignment {
  std::vector<int> col_of_row;  // col assigned to each row
  double cost = 0.0;            // sum of cost[i][col_of_row[i]], in row order
};

// Exact minimum-cost perfect matching on a square cost matrix, O(n^3)
// shortest-augmenting-path form with dual potentials.
Assignment hungarian_assign(const std::vector<std::vector<double>>& cost);

// Reference solver: enumerates all n! column permutations in lexicographic
// order and keeps the first strict minimum, so ties resolve to the
// lexicographically smallest assignment. Requires n <= 8.
Assignment exhaustive_assign(const std::vector<std::vector<double>>& cost);

}  // namespace doalab

#endif  // DOALAB_ASSIGNMENT_HPP_
