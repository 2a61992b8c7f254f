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

#include "skewrank/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "skewrank/certificate.hpp"
#include "skewrank/formulas.hpp"
#include "skewrank/powers.hpp"
#include "skewrank/witness.hpp"

namespace skewrank {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << id << ' ' << c.instance;
    if (!c.detail.empty()) out << ' ' << c.detail;
    out << '\n';
    if (!c.pass) ++failed;
  }
  out << "SUMMARY " << id << " max_n=" << max_n << " checks=" << checks.size()
      << " failed=" << failed << '\n';
  return out.str();
}

const std::vector<std::string_view>& verify_ids() {
  static const std::vector<std::string_view> ids = {
      "path",  "path-power", "strict-odd", "strict-even",  "strict-terminal",
      "windows", "split",    "rank-two",   "observations", "oracle"};
  return ids;
}

namespace {

std::string spec_name(const PowerSpec& spec) {
  std::ostringstream out;
  out << "n=" << spec.n << " r=" << spec.r << (spec.strict ? " strict" : "");
  return out.str();
}

// Runs `body`, turning any exception into a failed check.
void check(VerifyReport& report, std::string instance,
           const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [pass, detail] = body();
    report.checks.push_back({std::move(instance), pass, std::move(detail)});
  } catch (const std::exception& err) {
    report.checks.push_back({std::move(instance), false, std::string("error: ") + err.what()});
  }
}

std::string describe(const RankCertificate& cert) {
  std::ostringstream out;
  out << "value=" << cert.value << " lower=" << cert.lower_bound
      << " kind=" << to_string(cert.lower_kind) << " tag=" << to_string(cert.formula.case_tag);
  return out.str();
}

void sweep_path(VerifyReport& report, int max_n) {
  for (int n = 1; n <= max_n; ++n)
    check(report, "n=" + std::to_string(n), [n] {
      const SkewMatrixQ a = witness_path(n);
      const int rank = rank_exact(a);
      const int expected = mrs_path(n).value;
      bool ok = pattern_of(a) == path(n) && rank == expected;
      if (n >= 2) {
        ok = ok && mrs_path_power(n, 1).value == expected && mrs_path_strict(n, 1).value == expected;
      }
      return std::make_pair(ok, "value=" + std::to_string(expected) + " witness=" + std::to_string(rank));
    });
}

void sweep_certificates(VerifyReport& report, int max_n, bool strict, int parity) {
  for (int n = 2; n <= max_n; ++n)
    for (int r = 1; r <= n; ++r) {
      if (parity >= 0 && r % 2 != parity) continue;
      const PowerSpec spec{n, r, strict};
      check(report, spec_name(spec), [spec] {
        const RankCertificate cert = certify(spec);
        return std::make_pair(cert.tight(), describe(cert));
      });
    }
}

void sweep_strict_terminal(VerifyReport& report, int max_n) {
  for (int n = 3; n <= max_n; ++n)
    for (int r = std::max(1, n - 2); r <= n + 1; ++r) {
      const PowerSpec spec{n, r, true};
      check(report, spec_name(spec), [spec] {
        const int lo = spec.n / 2, hi = spec.n - spec.n / 2;
        const int parts[] = {lo, hi};
        const Graph expected = spec.r % 2 != 0 ? complete_multipartite(parts)
                                               : disjoint_union(complete(lo), complete(hi));
        const bool shape = find_isomorphism(path_power(spec), expected).has_value();
        const int value = spec.r % 2 != 0 ? 2 : (spec.n >= 4 ? 4 : 2);
        const RankCertificate cert = certify(spec);
        return std::make_pair(shape && cert.value == value && cert.tight(), describe(cert));
      });
    }
}

void sweep_windows(VerifyReport& report, int max_n) {
  for (int n = 1; n <= max_n; ++n)
    for (int r = 1; r <= n + 1; ++r)
      for (bool strict : {false, true}) {
        const PowerSpec spec{n, r, strict};
        check(report, spec_name(spec), [spec] {
          const Graph whole = path_power(spec);
          int windows = 0;
          for (int m = 1; m <= spec.n; ++m) {
            const Graph small = path_power({m, spec.r, spec.strict});
            for (int i = 1; i + m - 1 <= spec.n; ++i) {
              std::vector<int> window(static_cast<std::size_t>(m));
              for (int k = 0; k < m; ++k) window[static_cast<std::size_t>(k)] = i + k;
              auto map = find_isomorphism(induced_subgraph(whole, window), small);
              if (!map) return std::make_pair(false, "window m=" + std::to_string(m) + " i=" + std::to_string(i));
              ++windows;
            }
          }
          return std::make_pair(true, "windows=" + std::to_string(windows));
        });
      }
}

void sweep_split(VerifyReport& report, int max_n) {
  const int max_m = std::max(1, max_n / 2);
  for (int n = 3; n <= max_n; ++n)
    for (int m = 1; m <= max_m; ++m)
      check(report, "n=" + std::to_string(n) + " m=" + std::to_string(m), [n, m] {
        const StrictSplit split = split_strict_even(n, m);
        const bool ok = is_isomorphism(strict_power(path(n), 2 * m),
                                       disjoint_union(split.even_block, split.odd_block), split.phi);
        return std::make_pair(ok, "blocks=" + std::to_string(split.even_block.order()) + "+" +
                                      std::to_string(split.odd_block.order()));
      });
}

void sweep_rank_two(VerifyReport& report, int max_n) {
  const Graph p4 = path(4);
  const Graph paw_graph = paw();
  for (int n = 2; n <= max_n; ++n)
    check(report, "n=" + std::to_string(n), [&, n] {
      std::vector<Edge> pairs;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
      long connected = 0, positive = 0;
      const unsigned long total = 1UL << pairs.size();
      for (unsigned long mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
          if (mask >> k & 1UL) edges.push_back(pairs[k]);
        const Graph g(n, edges);
        if (!is_connected(g)) continue;
        ++connected;
        auto classes = complete_multipartite_partition(g);
        const bool forbidden_free = !has_induced(g, p4) && !has_induced(g, paw_graph);
        if (classes.has_value() != forbidden_free)
          return std::make_pair(false, "mismatch at mask=" + std::to_string(mask));
        if (!classes) continue;
        ++positive;
        const SkewMatrixQ a = witness_multipartite(n, *classes);
        if (rank_exact(a) != 2 || pattern_of(a) != g)
          return std::make_pair(false, "witness failed at mask=" + std::to_string(mask));
      }
      return std::make_pair(true, "graphs=" + std::to_string(total) + " connected=" +
                                      std::to_string(connected) + " multipartite=" +
                                      std::to_string(positive));
    });
}

void sweep_observations(VerifyReport& report, int max_n, std::uint64_t seed) {
  for (int n = 3; n <= max_n; ++n)
    for (int r = 2; r <= n; r += 2) {
      const PowerSpec spec{n, r, true};
      check(report, "components " + spec_name(spec), [spec] {
        const RankCertificate cert = certify(spec);
        int sum = 0;
        for (const auto& part : cert.components) sum += part.value;
        return std::make_pair(sum == cert.value && sum == cert.formula.value,
                              "sum=" + std::to_string(sum));
      });
    }

  for (int n = 4; n <= max_n; ++n)
    for (int r = 1; r <= n - 3; ++r)
      for (bool strict : {false, true}) {
        if (strict && r % 2 == 0) continue;
        const PowerSpec spec{n, r, strict};
        check(report, "union " + spec_name(spec), [spec] {
          std::vector<int> head, tail;
          SkewMatrixQ a(1), b(1);
          if (!spec.strict) {
            for (int v = 1; v <= spec.r + 2; ++v) head.push_back(v);
            for (int v = 3; v <= spec.n; ++v) tail.push_back(v);
            a = embed(witness_path_power(spec.r + 2, spec.r), spec.n, head);
            b = embed(witness_path_power(spec.n - 2, spec.r), spec.n, tail);
          } else {
            for (int v = 1; v <= spec.n - 2; ++v) head.push_back(v);
            for (int v = spec.n - spec.r - 1; v <= spec.n; ++v) tail.push_back(v);
            a = embed(witness_path_strict(spec.n - 2, spec.r), spec.n, head);
            b = embed(witness_path_strict(spec.r + 2, spec.r), spec.n, tail);
          }
          const SkewMatrixQ sum = overlay(a, b, path_power(spec));
          const int ra = rank_exact(a), rb = rank_exact(b), rs = rank_exact(sum);
          return std::make_pair(rs <= ra + rb, "rank=" + std::to_string(rs) + " parts=" +
                                                   std::to_string(ra) + "+" + std::to_string(rb));
        });
      }

  // Oracle ladder on every consecutive window, against the certified value.
  const int small_n = std::min(max_n, 8);
  std::map<std::vector<Edge>, int> ladder_cache;
  auto ladder = [&](const Graph& g) {
    auto key = g.edges();
    key.push_back({g.order(), 0});
    auto it = ladder_cache.find(key);
    if (it != ladder_cache.end()) return it->second;
    auto value = oracle_ladder_value(g, kOracleRestarts, seed);
    if (!value) throw std::runtime_error("oracle ladder found no realization");
    ladder_cache.emplace(std::move(key), *value);
    return *value;
  };
  for (int n = 2; n <= small_n; ++n)
    for (int r = 1; r <= n; ++r)
      for (bool strict : {false, true}) {
        const PowerSpec spec{n, r, strict};
        check(report, "monotone " + spec_name(spec), [&, spec] {
          const int whole = certify(spec).value;
          const Graph g = path_power(spec);
          int worst = 0;
          for (int m = 1; m <= spec.n; ++m)
            for (int i = 1; i + m - 1 <= spec.n; ++i) {
              std::vector<int> window;
              for (int k = 0; k < m; ++k) window.push_back(i + k);
              worst = std::max(worst, ladder(induced_subgraph(g, window)));
            }
          return std::make_pair(worst <= whole, "max_window=" + std::to_string(worst) +
                                                    " value=" + std::to_string(whole));
        });
      }
}

void sweep_oracle(VerifyReport& report, int max_n, std::uint64_t seed) {
  for (int n = 2; n <= max_n; ++n)
    for (int r = 1; r <= n; ++r)
      for (bool strict : {false, true}) {
        const PowerSpec spec{n, r, strict};
        check(report, spec_name(spec), [spec, seed] {
          const Graph g = path_power(spec);
          const int value = mrs(spec).value;
          const OracleResult hit = oracle_search(g, value, kOracleRestarts, seed);
          std::ostringstream detail;
          detail << "value=" << value << " found=" << (hit.found() ? "yes" : "no")
                 << " method=" << to_string(hit.method) << " restart=" << hit.restart;
          bool ok = hit.found();
          if (value >= 2) {
            const OracleResult miss = oracle_search(g, value - 2, kOracleRestarts, seed);
            ok = ok && !miss.found();
            if (value - 2 <= 2) ok = ok && miss.exact;
            detail << " below=" << (miss.found() ? "found" : "none")
                   << (miss.exact ? "(exact)" : "(evidence)");
          }
          return std::make_pair(ok, detail.str());
        });
      }
}

}  // namespace

VerifyReport run_verify(std::string_view id, int max_n, std::uint64_t seed) {
  const auto& ids = verify_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw std::invalid_argument("unknown verification id: " + std::string(id));
  if (max_n < 2 || max_n > kMaxOrder)
    throw std::invalid_argument("max_n must lie in 2.." + std::to_string(kMaxOrder));

  VerifyReport report;
  report.id = std::string(id);
  report.max_n = max_n;
  if (id == "path") {
    sweep_path(report, max_n);
  } else if (id == "path-power") {
    sweep_certificates(report, max_n, false, -1);
  } else if (id == "strict-odd") {
    sweep_certificates(report, max_n, true, 1);
  } else if (id == "strict-even") {
    sweep_certificates(report, max_n, true, 0);
  } else if (id == "strict-terminal") {
    sweep_strict_terminal(report, max_n);
  } else if (id == "windows") {
    report.max_n = std::min(max_n, 12);
    sweep_windows(report, report.max_n);
  } else if (id == "split") {
    sweep_split(report, max_n);
  } else if (id == "rank-two") {
    report.max_n = std::min(max_n, 6);
    sweep_rank_two(report, report.max_n);
  } else if (id == "observations") {
    sweep_observations(report, max_n, seed);
  } else if (id == "oracle") {
    report.max_n = std::min(max_n, 8);
    sweep_oracle(report, report.max_n, seed);
  }
  return report;
}

std::string run_table(int max_n, TableKind kind) {
  if (max_n < 2 || max_n > kMaxOrder)
    throw std::invalid_argument("max_n must lie in 2.." + std::to_string(kMaxOrder));
  std::ostringstream out;
  out << "schema_version,n,r,strict,value,case_tag,lower_bound,witness_rank\n";
  std::vector<bool> flavours;
  if (kind != TableKind::kStrict) flavours.push_back(false);
  if (kind != TableKind::kPlain) flavours.push_back(true);
  for (bool strict : flavours)
    for (int n = 2; n <= max_n; ++n)
      for (int r = 1; r <= n; ++r) {
        const RankCertificate cert = certify({n, r, strict});
        out << 1 << ',' << n << ',' << r << ',' << (strict ? "true" : "false") << ','
            << cert.formula.value << ',' << to_string(cert.formula.case_tag) << ','
            << cert.lower_bound << ',' << rank_exact(cert.upper_witness) << '\n';
      }
  return out.str();
}

}  // namespace skewrank
