// Copyright 2026 The skewrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SKEWRANK_SRC_EXACT_LINEAR_HPP
#define SKEWRANK_SRC_EXACT_LINEAR_HPP

#include <gmpxx.h>

#include <vector>

namespace skewrank::detail {

using VectorZ = std::vector<mpz_class>;

/// Basis of {x : rows * x = 0} in `dim` unknowns, from the reduced row
/// echelon form over Q. Each basis vector is scaled to a primitive integer
/// vector.
std::vector<VectorZ> integer_nullspace(const std::vector<VectorZ>& rows, std::size_t dim);

/// Divides by the gcd of the entries and fixes the sign of the first
/// nonzero entry to be positive. The zero vector is left alone.
void make_primitive(VectorZ& v);

}  // namespace skewrank::detail

#endif  // SKEWRANK_SRC_EXACT_LINEAR_HPP
