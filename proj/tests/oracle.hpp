// Copyright 2026 The Luroth Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent brute-force helpers for tests. Works directly on mpq_class and
// never calls into the library's element code.

#ifndef LUROTH_TESTS_ORACLE_HPP_
#define LUROTH_TESTS_ORACLE_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

struct Cell {
  std::vector<long> digits;
  mpq_class left;
  mpq_class length;
  mpq_class right() const { return left + length; }
};

inline Cell root() { return Cell{{}, mpq_class(0), mpq_class(1)}; }

inline Cell sub(const Cell& c, long a) {
  mpq_class len = c.length / mpq_class(a * (a - 1));
  len.canonicalize();
  mpq_class left = c.left + c.length / mpq_class(a);
  left.canonicalize();
  auto d = c.digits;
  d.push_back(a);
  return Cell{d, left, len};
}

// All generation-n cells whose closed interval meets [lo, hi] in more than a
// point; requires lo > 0.
inline void cells_meeting(const Cell& c, std::size_t n, const mpq_class& lo, const mpq_class& hi,
                          std::vector<Cell>& out) {
  if (c.digits.size() == n) {
    out.push_back(c);
    return;
  }
  for (long a = 2;; ++a) {
    Cell s = sub(c, a);
    if (s.right() <= lo) break;  // children move left as a grows
    if (s.left >= hi) continue;
    cells_meeting(s, n, lo, hi, out);
  }
}

// Does [lo, hi] contain a whole generation-n cell? A cell of generation
// <= n inside the window settles it (its 2-chain descendant fits); otherwise
// only the cells straddling an endpoint are refined.
inline bool contains_cell(const oracle::Cell& c, std::size_t n, const mpq_class& lo,
                          const mpq_class& hi) {
  if (lo <= c.left && c.right() <= hi) return true;
  if (c.digits.size() == n) return false;
  for (long a = 2;; ++a) {
    Cell s = sub(c, a);
    if (s.right() <= lo) break;
    if (s.left >= hi) continue;
    if (contains_cell(s, n, lo, hi)) return true;
  }
  return false;
}

inline bool contains_cell(const mpq_class& lo, const mpq_class& hi, std::size_t n) {
  return contains_cell(root(), n, lo, hi);
}

// Left endpoints of cells of generation 1..g lying in [lo, hi]; stops once
// `limit` points are known.
inline void left_points(const Cell& c, std::size_t g, const mpq_class& lo, const mpq_class& hi,
                        std::size_t limit, std::vector<mpq_class>& out) {
  if (out.size() >= limit) return;
  if (!c.digits.empty() && lo <= c.left && c.left <= hi) {
    bool seen = false;
    for (const auto& p : out) seen |= p == c.left;
    if (!seen) out.push_back(c.left);
  }
  if (c.digits.size() == g) return;
  for (long a = 2; out.size() < limit; ++a) {
    Cell s = sub(c, a);
    if (s.right() < lo) break;
    if (s.left > hi) continue;
    left_points(s, g, lo, hi, limit, out);
  }
}

// Digits of x, stopping after max_steps; the orbit of a rational is
// eventually periodic, so expansions need not terminate.
inline std::vector<long> expand(mpq_class x, std::size_t max_steps = 10000) {
  std::vector<long> out;
  while (x != 0 && out.size() < max_steps) {
    mpz_class n = 1 + mpz_class(x.get_den() / x.get_num());  // floor(1/x) + 1 unless 1/x integer
    mpq_class inv = 1 / x;
    inv.canonicalize();
    long a = inv.get_den() == 1 ? inv.get_num().get_si() : n.get_si();
    // x in [1/a, 1/(a-1)) -> digit a
    out.push_back(a);
    x = mpq_class(a * (a - 1)) * x - (a - 1);
    x.canonicalize();
  }
  return out;
}

inline mpq_class series(const std::vector<long>& digits) {
  mpq_class sum = 0, scale = 1;
  for (long a : digits) {
    sum += scale / a;
    scale /= a * (a - 1);
  }
  sum.canonicalize();
  return sum;
}

inline mpq_class random_unit(std::mt19937_64& rng, long max_den) {
  std::uniform_int_distribution<long> den(2, max_den);
  long q = den(rng);
  std::uniform_int_distribution<long> num(1, q - 1);
  mpq_class x(num(rng), q);
  x.canonicalize();
  return x;
}

}  // namespace oracle

#endif  // LUROTH_TESTS_ORACLE_HPP_
