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

#include "skewrank/certificate.hpp"

#include <stdexcept>
#include <string>

#include "skewrank/witness.hpp"

namespace skewrank {

std::string_view to_string(LowerKind kind) {
  switch (kind) {
    case LowerKind::kParityOnly: return "parity-only";
    case LowerKind::kTriangularBlock: return "triangular-block";
    case LowerKind::kComponentSum: return "component-sum";
  }
  return "unknown";
}

LowerBound parity_lower_bound(const Graph& g) {
  return {g.edge_count() > 0 ? 2 : 0, LowerKind::kParityOnly, std::nullopt};
}

LowerBound lower_bound_certificate(const PowerSpec& spec) {
  spec.validate();
  const int n = spec.n, r = spec.r;
  if (r > n - 3)
    throw std::domain_error("triangular block bound needs r <= n - 3 (n=" + std::to_string(n) +
                            ", r=" + std::to_string(r) + ")");
  const TriangularBlock block{1, n - r, r + 1, n};
  for (int i = 1; i <= block.size(); ++i)
    for (int j = i; j <= block.size(); ++j) {
      const bool edge = path_power_edge(spec, block.row_first + i - 1, block.col_first + j - 1);
      if (j == i && !edge) throw std::logic_error("triangular block has a structural zero on its diagonal");
      if (j > i && edge) throw std::logic_error("triangular block has a structural nonzero above its diagonal");
    }
  const int size = block.size();
  return {size % 2 == 0 ? size : size + 1, LowerKind::kTriangularBlock, block};
}

RankCertificate certify(const PowerSpec& spec) {
  spec.validate();
  if (spec.n < 2) throw std::invalid_argument("certificates need n >= 2");
  RankCertificate cert;
  cert.spec = spec;
  cert.formula = mrs(spec);
  const Graph target = path_power(spec);
  cert.upper_witness =
      spec.strict ? witness_path_strict(spec.n, spec.r) : witness_path_power(spec.n, spec.r);
  if (pattern_of(cert.upper_witness) != target)
    throw std::logic_error("witness support differs from the path power");
  cert.value = rank_exact(cert.upper_witness);

  if (spec.strict && spec.r % 2 == 0 && spec.n >= 3) {
    const int half = spec.r / 2;
    const StrictSplit split = split_strict_even(spec.n, half);
    cert.lower_kind = LowerKind::kComponentSum;
    for (const Graph* block : {&split.even_block, &split.odd_block}) {
      if (block->order() < 2) continue;
      RankCertificate part = certify(PowerSpec{block->order(), half, false});
      cert.lower_bound += part.lower_bound;
      cert.components.push_back(std::move(part));
    }
  } else if (spec.r <= spec.n - 3) {
    LowerBound bound = lower_bound_certificate(spec);
    cert.lower_bound = bound.lower_bound;
    cert.lower_kind = bound.kind;
    cert.triangular_witness = bound.block;
  } else {
    cert.lower_bound = parity_lower_bound(target).lower_bound;
    cert.lower_kind = LowerKind::kParityOnly;
  }

  if (cert.lower_bound > cert.value)
    throw std::logic_error("lower bound exceeds the witness rank");
  if (cert.value != cert.formula.value)
    throw std::logic_error("witness rank " + std::to_string(cert.value) +
                           " differs from the closed form " + std::to_string(cert.formula.value));
  return cert;
}

}  // namespace skewrank
