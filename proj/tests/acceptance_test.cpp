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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "skewrank/certificate.hpp"
#include "skewrank/formulas.hpp"
#include "skewrank/graph.hpp"
#include "skewrank/oracle.hpp"
#include "skewrank/powers.hpp"
#include "skewrank/skew_matrix.hpp"
#include "skewrank/witness.hpp"

namespace {

using namespace skewrank;

struct Verdict {
  bool pass = true;
  std::string detail;
  int checked = 0;

  void require(bool ok, const std::string& what) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string name(int n, int r, bool strict) {
  std::ostringstream out;
  out << "n=" << n << " r=" << r << (strict ? " strict" : "");
  return out.str();
}

// 1. Witness rank and support for P_n^r, 4 <= n <= 20.
Verdict path_power_witnesses() {
  Verdict v;
  for (int n = 4; n <= 20; ++n)
    for (int r = 1; r <= n; ++r) {
      const SkewMatrixQ a = witness_path_power(n, r);
      v.require(pattern_of(a) == power(path(n), r), "support " + name(n, r, false));
      v.require(rank_exact(a) == mrs_path_power(n, r).value, "rank " + name(n, r, false));
    }
  v.require(mrs_path_power(5, 2).value == 4 && rank_exact(witness_path_power(5, 2)) == 4, "P_5^2 = 4");
  v.require(mrs_path_power(4, 2).value == 2 && rank_exact(witness_path_power(4, 2)) == 2, "P_4^2 = 2");
  v.require(mrs_path_power(5, 3).value == 2 && rank_exact(witness_path_power(5, 3)) == 2, "P_5^3 = 2");
  return v;
}

// 2. Same for strict powers, 2 <= n <= 20, with the order-2 and order-3 values.
Verdict strict_power_witnesses() {
  Verdict v;
  for (int n = 2; n <= 20; ++n)
    for (int r = 1; r <= n + 1; ++r) {
      const SkewMatrixQ a = witness_path_strict(n, r);
      v.require(pattern_of(a) == strict_power(path(n), r), "support " + name(n, r, true));
      v.require(rank_exact(a) == mrs_path_strict(n, r).value, "rank " + name(n, r, true));
    }
  for (int r = 1; r <= 12; ++r) {
    v.require(mrs_path_strict(2, r).value == (r % 2 != 0 ? 2 : 0), "order two " + std::to_string(r));
    v.require(rank_exact(witness_path_strict(2, r)) == (r % 2 != 0 ? 2 : 0), "order two witness");
    v.require(mrs_path_strict(3, r).value == 2, "order three " + std::to_string(r));
    v.require(rank_exact(witness_path_strict(3, r)) == 2, "order three witness");
  }
  return v;
}

// 3. Lower bounds meet the closed forms.
Verdict tight_lower_bounds() {
  Verdict v;
  for (int n = 4; n <= 20; ++n)
    for (int r = 1; r <= n - 3; ++r) {
      v.require(lower_bound_certificate({n, r, false}).lower_bound == mrs_path_power(n, r).value,
                "triangular " + name(n, r, false));
      if (r % 2 != 0) {
        v.require(lower_bound_certificate({n, r, true}).lower_bound == mrs_path_strict(n, r).value,
                  "triangular " + name(n, r, true));
      } else {
        const RankCertificate cert = certify({n, r, true});
        v.require(cert.lower_kind == LowerKind::kComponentSum &&
                      cert.lower_bound == mrs_path_strict(n, r).value && cert.tight(),
                  "component sum " + name(n, r, true));
      }
    }
  return v;
}

// 4. Exhaustive rank-two characterization on 6 vertices.
Verdict rank_two_exhaustive() {
  Verdict v;
  const int n = 6;
  std::vector<Edge> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  const Graph p4 = path(4), paw_graph = paw();
  int positives = 0;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1u) edges.push_back(pairs[k]);
    const Graph g(n, edges);
    if (!is_connected(g)) continue;
    const auto classes = complete_multipartite_partition(g);
    const bool free_of_both = !has_induced(g, p4) && !has_induced(g, paw_graph);
    v.require(classes.has_value() == free_of_both, "equivalence at mask " + std::to_string(mask));
    if (classes) {
      ++positives;
      const SkewMatrixQ a = witness_multipartite(n, *classes);
      v.require(rank_exact(a) == 2 && pattern_of(a) == g, "witness at mask " + std::to_string(mask));
    }
  }
  v.require(positives == 202, "expected 202 complete multipartite graphs, got " + std::to_string(positives));
  return v;
}

// 5. Parity split of P_n^(2m).
Verdict parity_split() {
  Verdict v;
  for (int n = 3; n <= 30; ++n)
    for (int m = 1; m <= 15; ++m) {
      const StrictSplit split = split_strict_even(n, m);
      v.require(split.even_block == power(path(n / 2), m) && split.odd_block == power(path(n - n / 2), m),
                "blocks n=" + std::to_string(n) + " m=" + std::to_string(m));
      v.require(is_isomorphism(strict_power(path(n), 2 * m),
                               disjoint_union(split.even_block, split.odd_block), split.phi),
                "phi n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  return v;
}

// 6. Consecutive windows of (strict) path powers.
Verdict windows() {
  Verdict v;
  for (int n = 1; n <= 12; ++n)
    for (int r = 1; r <= n + 1; ++r)
      for (bool strict : {false, true}) {
        const Graph whole = path_power({n, r, strict});
        for (int m = 1; m <= n; ++m) {
          const Graph small = path_power({m, r, strict});
          for (int i = 1; i + m - 1 <= n; ++i) {
            std::vector<int> window;
            for (int k = 0; k < m; ++k) window.push_back(i + k);
            const Graph sub = induced_subgraph(whole, window);
            const auto map = find_isomorphism(sub, small);
            v.require(map.has_value() && is_isomorphism(sub, small, *map),
                      name(n, r, strict) + " window " + std::to_string(i) + ".." + std::to_string(i + m - 1));
          }
        }
      }
  return v;
}

// 7. Search oracle agrees with the closed forms.
Verdict oracle_coherence() {
  Verdict v;
  constexpr int kRestarts = 200;
  for (int n = 2; n <= 8; ++n)
    for (int r = 1; r <= n; ++r)
      for (bool strict : {false, true}) {
        const PowerSpec spec{n, r, strict};
        const Graph g = path_power(spec);
        const int value = mrs(spec).value;
        const OracleResult hit = oracle_search(g, value, kRestarts, kDefaultSeed);
        v.require(hit.found() && pattern_of(*hit.witness) == g && rank_exact(*hit.witness) <= value,
                  "no witness at the closed form for " + name(n, r, strict));
        if (value < 2) continue;
        const OracleResult miss = oracle_search(g, value - 2, kRestarts, kDefaultSeed);
        v.require(!miss.found(), "witness below the closed form for " + name(n, r, strict));
        if (value == 4 || value == 2) v.require(miss.exact, "inexact miss for " + name(n, r, strict));
      }
  return v;
}

// 8. Byte-identical output across runs.
Verdict determinism() {
  Verdict v;
  auto capture = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return std::to_string(status) + "\n" + out.str();
  };
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "all", "--max-n", "8", "--seed", "1729"},
      {"verify", "oracle", "--max-n", "8", "--seed", "99"},
      {"witness", "--n", "20", "--r", "4", "--strict"},
      {"witness", "--n", "17", "--r", "3"},
  };
  for (const auto& cmd : commands) {
    const std::string first = capture(cmd), second = capture(cmd);
    v.require(first == second && !first.empty(), "output differs for " + cmd[0] + " " + cmd[1]);
    v.require(first.rfind("0\n", 0) == 0, "nonzero exit for " + cmd[0] + " " + cmd[1]);
  }
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1 path power witnesses match closed form (4<=n<=20)", path_power_witnesses},
      {"AC2 strict power witnesses match closed form (2<=n<=20)", strict_power_witnesses},
      {"AC3 lower bounds are tight", tight_lower_bounds},
      {"AC4 rank-two characterization, all graphs on 6 vertices", rank_two_exhaustive},
      {"AC5 parity split isomorphism (3<=n<=30, 1<=m<=15)", parity_split},
      {"AC6 consecutive windows are path powers (n<=12)", windows},
      {"AC7 oracle coherence (n<=8, 200 restarts)", oracle_coherence},
      {"AC8 deterministic verify and witness output", determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << c.label << " (" << v.checked << " checks, "
              << seconds << " s)";
    if (!v.pass) std::cout << ": " << v.detail;
    std::cout << std::endl;
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
