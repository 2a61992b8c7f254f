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

#include "skewrank/skew_matrix.hpp"

#include <json.hpp>
#include <stdexcept>
#include <utility>

namespace skewrank {

SkewMatrixQ::SkewMatrixQ(int order) : n_(order) {
  if (order < 1) throw std::invalid_argument("matrix order must be at least 1");
  upper_.resize(static_cast<std::size_t>(order) * static_cast<std::size_t>(order - 1) / 2);
}

std::size_t SkewMatrixQ::slot(int i, int j) const {
  // Row i (1-based) starts after rows 1..i-1, which hold n-1, n-2, ... entries.
  const auto row = static_cast<std::size_t>(i - 1);
  const auto n = static_cast<std::size_t>(n_);
  return row * n - row * (row + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

mpq_class SkewMatrixQ::at(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("matrix index out of range");
  if (i == j) return 0;
  if (i < j) return upper_[slot(i, j)];
  return -upper_[slot(j, i)];
}

void SkewMatrixQ::set(int i, int j, const mpq_class& value) {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("matrix index out of range");
  if (i == j) {
    if (value != 0) throw std::invalid_argument("skew-symmetric diagonal must be zero");
    return;
  }
  if (i < j)
    upper_[slot(i, j)] = value;
  else
    upper_[slot(j, i)] = -value;
}

SkewMatrixQ SkewMatrixQ::operator+(const SkewMatrixQ& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("matrix orders differ");
  SkewMatrixQ out(*this);
  for (std::size_t k = 0; k < upper_.size(); ++k) out.upper_[k] += rhs.upper_[k];
  return out;
}

SkewMatrixQ SkewMatrixQ::operator*(const mpq_class& scale) const {
  SkewMatrixQ out(*this);
  for (auto& x : out.upper_) x *= scale;
  return out;
}

bool SkewMatrixQ::operator==(const SkewMatrixQ& rhs) const {
  return n_ == rhs.n_ && upper_ == rhs.upper_;
}

int rank_exact(const SkewMatrixQ& a) {
  const int n = a.order();
  // Integer rows: scale each row by the lcm of its denominators.
  std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(n),
                                        std::vector<mpz_class>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    mpz_class scale = 1;
    for (int j = 1; j <= n; ++j) {
      mpq_class x = a.at(i, j);
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    }
    for (int j = 1; j <= n; ++j) {
      mpq_class x = a.at(i, j) * scale;
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = x.get_num();
    }
  }

  std::size_t rank = 0;
  mpz_class previous = 1;
  const auto size = static_cast<std::size_t>(n);
  for (std::size_t col = 0; col < size && rank < size; ++col) {
    std::size_t pivot = rank;
    while (pivot < size && m[pivot][col] == 0) ++pivot;
    if (pivot == size) continue;
    std::swap(m[pivot], m[rank]);
    const mpz_class& p = m[rank][col];
    for (std::size_t i = rank + 1; i < size; ++i) {
      for (std::size_t j = col + 1; j < size; ++j) {
        m[i][j] = p * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      m[i][col] = 0;
    }
    previous = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

Graph pattern_of(const SkewMatrixQ& a) {
  return Graph::from_predicate(a.order(), [&](int i, int j) { return a.at(i, j) != 0; });
}

SkewMatrixQ embed(const SkewMatrixQ& block, int order, std::span<const int> window) {
  if (static_cast<int>(window.size()) != block.order())
    throw std::invalid_argument("embedding window does not match block order");
  SkewMatrixQ out(order);
  for (int i = 1; i <= block.order(); ++i)
    for (int j = i + 1; j <= block.order(); ++j) {
      const int u = window[static_cast<std::size_t>(i - 1)];
      const int v = window[static_cast<std::size_t>(j - 1)];
      if (u < 1 || v < 1 || u > order || v > order || u == v)
        throw std::invalid_argument("embedding window is not a set of distinct vertices");
      out.set(u, v, block.at(i, j));
    }
  return out;
}

std::string fraction_string(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class parse_fraction(std::string_view text) {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a fraction: \"" + std::string(text) + "\"");
  q.canonicalize();
  return q;
}

std::string matrix_to_json(const SkewMatrixQ& a) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["n"] = a.order();
  doc["upper"] = nlohmann::ordered_json::array();
  for (int i = 1; i <= a.order(); ++i)
    for (int j = i + 1; j <= a.order(); ++j) {
      mpq_class x = a.at(i, j);
      if (x != 0) doc["upper"].push_back({i, j, fraction_string(x)});
    }
  return doc.dump();
}

SkewMatrixQ matrix_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("matrix JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw std::invalid_argument("matrix JSON: missing integer field \"n\"");
  SkewMatrixQ a(doc["n"].get<int>());
  for (const auto& entry : doc.value("upper", nlohmann::json::array())) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer() || !entry[2].is_string())
      throw std::invalid_argument("matrix JSON: entries must be [i, j, \"p/q\"]");
    const int i = entry[0].get<int>(), j = entry[1].get<int>();
    if (i >= j) throw std::invalid_argument("matrix JSON: entries need i < j");
    a.set(i, j, parse_fraction(entry[2].get<std::string>()));
  }
  return a;
}

}  // namespace skewrank
