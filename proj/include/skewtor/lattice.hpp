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

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace skewtor::lattice {

using Vec = std::vector<mpz_class>;
using Mat = std::vector<Vec>;

// U * A * V = D with U, V unimodular and D diagonal.
struct DiagonalForm {
  Mat D, U, V;
  std::size_t rank = 0;
};
DiagonalForm diagonalize(const Mat& A, std::size_t cols);

struct SolutionSet {
  Vec particular;
  Mat kernel;  // Z-basis of { x : A x = 0 }
};
std::optional<SolutionSet> solve(const Mat& A, const Vec& b, std::size_t cols);

// Independent Z-basis of the lattice spanned by the given vectors.
Mat lattice_basis(const Mat& gens, std::size_t dim);
Mat lll_reduce(Mat basis);

// Point of x0 + span_Z(basis) with minimal max-norm, ties broken
// lexicographically. Returns nullopt if the search box exceeds cap.
std::optional<Vec> closest_to_origin(const Vec& x0, const Mat& basis,
                                     std::size_t cap = 4000000);

// Coprime base of a set of positive integers: pairwise coprime b_i > 1
// such that every input is a product of powers of them.
Vec coprime_base(const Vec& values);
long valuation(mpz_class v, const mpz_class& base);

}  // namespace skewtor::lattice
