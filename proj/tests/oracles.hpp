/*
   Copyright 2026 The skewtor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "skewtor/torus.hpp"
#include "skewtor/skewder.hpp"

namespace skewtor::test {

// Reorders the letter word of x^a x^b into ascending generator order one
// adjacent transposition at a time, using only x_j^s x_i^t = q_ji^{st} x_i^t x_j^s.
inline std::pair<UnitMonomial, ExponentVec> word_oracle(const CommutationMatrix& Q,
                                                        const ExponentVec& a,
                                                        const ExponentVec& b) {
  std::vector<std::pair<std::size_t, int>> w;
  for (const ExponentVec* v : {&a, &b})
    for (std::size_t i = 0; i < v->size(); ++i)
      for (std::int64_t k = 0; k < std::llabs((*v)[i]); ++k) w.push_back({i, (*v)[i] > 0 ? 1 : -1});
  UnitMonomial c;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k].first > w[k + 1].first) {
        c *= Q(w[k].first, w[k + 1].first).pow(w[k].second * w[k + 1].second);
        std::swap(w[k], w[k + 1]);
        swapped = true;
      }
  }
  ExponentVec e(Q.size());
  for (auto [i, s] : w) e[i] += s;
  return {c, e};
}

// Smallest-max-norm, then lexicographically least d in the box with
// q_j(d) = lambda_j for all j.
inline std::optional<ExponentVec> brute_inner_witness(const ToricAutomorphism& sig,
                                                       const CommutationMatrix& Q, int box) {
  std::size_t n = Q.size();
  std::optional<ExponentVec> best;
  std::int64_t best_norm = box + 1;
  ExponentVec d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = -box;
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = qrs(Q, d, j).q == sig[j];
    if (ok) {
      std::int64_t norm = 0;
      for (std::size_t i = 0; i < n; ++i) norm = std::max<std::int64_t>(norm, std::llabs(d[i]));
      if (norm < best_norm || (norm == best_norm && d < *best)) {
        best = d;
        best_norm = norm;
      }
    }
    std::size_t i = n;
    while (i > 0 && d[i - 1] == box) d[--i] = -box;
    if (i == 0) break;
    ++d[i - 1];
  }
  return best;
}

}  // namespace skewtor::test
