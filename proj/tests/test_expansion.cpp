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

#include <random>

#include "doctest.h"
#include "luroth/error.hpp"
#include "luroth/expansion.hpp"
#include "oracle.hpp"

using namespace luroth;

namespace {

Rational q(long p, long d) { return Rational(p, d); }

std::vector<Digit> ds(std::initializer_list<long> xs) {
  std::vector<Digit> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

LurothElement random_element(std::mt19937_64& rng, std::size_t max_gen, long max_digit) {
  std::uniform_int_distribution<std::size_t> gen(0, max_gen);
  std::uniform_int_distribution<long> dig(2, max_digit);
  std::vector<Digit> d;
  for (std::size_t k = gen(rng); k > 0; --k) d.emplace_back(dig(rng));
  return element(d);
}

}  // namespace

TEST_CASE("luroth_map") {
  CHECK(luroth_map(Rational(0)) == Rational(0));
  CHECK(luroth_map(q(2, 3)) == q(1, 3));
  CHECK(luroth_map(q(1, 2)) == Rational(0));
  CHECK(luroth_map(q(5, 12)) == q(1, 2));
}

TEST_CASE("digits") {
  CHECK(digits(q(1, 2), 10) == DigitString{ds({2}), true});
  CHECK(digits(q(5, 12), 10) == DigitString{ds({3, 2}), true});
  CHECK(digits(q(2, 3), 10) == DigitString{ds({2, 3}), true});
  CHECK(digits(q(5, 12), 1) == DigitString{ds({3}), false});
  CHECK_THROWS_AS(digits(Rational(0), 3), Error);
  CHECK(first_digit(q(1, 3)) == 3);
  CHECK(first_digit(q(2, 5)) == 3);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(ds({2})) == q(1, 2));
  CHECK(evaluate(ds({3, 2})) == q(5, 12));
  CHECK(evaluate(ds({2, 2, 2})) == q(7, 8));
}

TEST_CASE("round trip against the oracle expansion") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    mpq_class x = oracle::random_unit(rng, 100000);
    auto ref = oracle::expand(x, 200);
    if (ref.size() == 200) {
      --i;  // periodic expansion; resample
      continue;
    }
    DigitString d = digits(Rational(x), 1000);
    REQUIRE(d.terminated);
    REQUIRE(d.size() == ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) CHECK(d.digits[k] == ref[k]);
    CHECK(evaluate(d) == Rational(x));
    CHECK(Rational(oracle::series(ref)) == Rational(x));
  }
}

TEST_CASE("element") {
  CHECK(element(ds({2})).interval() == ClosedInterval(q(1, 2), Rational(1)));
  CHECK(element(ds({3})).interval() == ClosedInterval(q(1, 3), q(1, 2)));
  CHECK(element(ds({2, 3})).interval() == ClosedInterval(q(2, 3), q(3, 4)));
  LurothElement x;
  CHECK(x.generation() == 0);
  CHECK(x.interval() == ClosedInterval(Rational(0), Rational(1)));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    LurothElement e = random_element(rng, 6, 15);
    oracle::Cell c = oracle::root();
    for (const auto& a : e.digits()) c = oracle::sub(c, a.get_si());
    CHECK(e.left() == Rational(c.left));
    CHECK(e.length() == Rational(c.length));
    CHECK(e.accumulation_point() == e.left());
  }
}

TEST_CASE("child") {
  CHECK(child(element(ds({2})), Digit(2)).interval() == ClosedInterval(q(3, 4), Rational(1)));
  for (long b = 2; b < 30; ++b) {
    CHECK(child(LurothElement(), Digit(b)).interval() == ClosedInterval(q(1, b), q(1, b - 1)));
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    LurothElement e = random_element(rng, 5, 20);
    long a = 2 + static_cast<long>(rng() % 40);
    LurothElement c = child(e, Digit(a));
    CHECK(c.length() / e.length() == q(1, a * (a - 1)));
    CHECK(parent(c) == e);
    CHECK(e.interval().contains(c.interval()));
  }
  CHECK_THROWS_AS(child(LurothElement(), Digit(1)), Error);
}

TEST_CASE("adjacency") {
  CHECK(left_adjacent(element(ds({2}))) == element(ds({3})));
  LurothElement la = left_adjacent(element(ds({2, 3})));
  CHECK(la == element(ds({2, 4})));
  CHECK(la.interval() == ClosedInterval(q(5, 8), q(2, 3)));
  CHECK(right_adjacent(element(ds({3}))) == element(ds({2})));
  CHECK(right_adjacent(element(ds({2, 3}))) == element(ds({2, 2})));
  CHECK_FALSE(right_adjacent(element(ds({2}))).has_value());
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    LurothElement e = random_element(rng, 5, 20);
    if (e.generation() == 0) continue;
    LurothElement l = left_adjacent(e);
    CHECK(l.right() == e.left());
    CHECK(right_adjacent(l) == e);
    CHECK(left_adjacent(l).right() == l.left());
  }
}

TEST_CASE("locate") {
  CHECK(locate(q(5, 12), 1) == element(ds({3})));
  CHECK(locate(q(1, 2), 2) == element(ds({3, 2})));
  CHECK(locate(q(1, 2), 2).interval() == ClosedInterval(q(5, 12), q(1, 2)));
  CHECK(locate(Rational(1), 3) == element(ds({2, 2, 2})));
  CHECK_THROWS_AS(locate(Rational(0), 1), Error);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    Rational x(oracle::random_unit(rng, 5000));
    DigitString d = digits(x, 64);
    for (std::size_t n = 1; n <= 8; ++n) {
      LurothElement e = locate(x, n);
      CHECK(e.generation() == n);
      CHECK(e.interval().contains(x));
      if (n > 1) CHECK(locate(x, n - 1).interval().contains(e.interval()));
      bool interior = e.left() < x && x < e.right();
      if (interior) {
        for (std::size_t k = 0; k < n; ++k) CHECK(e.digits()[k] == d.digits[k]);
      }
    }
  }
}

TEST_CASE("half-open cylinders follow the standard digits") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    Rational x(oracle::random_unit(rng, 5000));
    DigitString d = digits(x, 64);
    for (std::size_t n = 1; n <= 6; ++n) {
      auto e = half_open_cylinder(x, n);
      if (n <= d.size()) {
        REQUIRE(e.has_value());
        CHECK(e->left() <= x);
        CHECK(x < e->right());
      } else {
        CHECK_FALSE(e.has_value());
      }
    }
  }
}

TEST_CASE("tail measure") {
  CHECK(tail_measure(LurothElement(), Digit(2)) == q(1, 2));
  CHECK(tail_measure(element(ds({2})), Digit(4)) == q(1, 8));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    LurothElement e = random_element(rng, 4, 12);
    for (long b = 2; b <= 50; ++b) {
      Rational sum = tail_measure(e, Digit(b));
      for (long a = 2; a <= b; ++a) sum += child(e, Digit(a)).length();
      CHECK(sum == e.length());
      CHECK(tail_measure(e, Digit(b)) == e.length() / Rational(b));
    }
  }
}

TEST_CASE("tiling: children have disjoint interiors and are ordered right to left") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 50; ++i) {
    LurothElement e = random_element(rng, 4, 12);
    for (long a = 2; a < 40; ++a) {
      LurothElement c = child(e, Digit(a));
      LurothElement d = child(e, Digit(a + 1));
      CHECK(d.right() == c.left());
    }
    CHECK(child(e, Digit(2)).right() == e.right());
  }
}

TEST_CASE("diameter decay") {
  LurothElement e;
  for (std::size_t n = 1; n <= 20; ++n) {
    e = child(e, Digit(2));
    CHECK(e.length() == Rational(1) / Rational(mpz_class(1) << n, mpz_class(1)));
  }
}

TEST_CASE("danger interval") {
  CHECK(danger_interval(LurothElement(), Digit(2)) == OpenInterval{Rational(0), q(1, 2)});
  CHECK(danger_interval(element(ds({2})), Digit(4)) == OpenInterval{q(1, 2), q(5, 8)});
  // x lies in the danger interval of its generation k-1 cylinder iff a_k(x) > b
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    Rational x(oracle::random_unit(rng, 20000));
    DigitString d = digits(x, 64);
    for (std::size_t k = 1; k <= d.size() && k <= 6; ++k) {
      auto parent_cyl = k == 1 ? std::optional<LurothElement>(LurothElement())
                               : half_open_cylinder(x, k - 1);
      REQUIRE(parent_cyl.has_value());
      if (parent_cyl->accumulation_point() == x) continue;
      for (long b = 2; b <= 12; ++b) {
        CHECK(danger_interval(*parent_cyl, Digit(b)).contains(x) == (d.digits[k - 1] > b));
      }
    }
  }
}

TEST_CASE("window enumeration") {
  auto w = elements_in_window(ClosedInterval(q(3, 5), q(4, 5)), 2, 100);
  CHECK_FALSE(w.truncated);
  bool found = false;
  for (const auto& e : w.elements) found |= e.interval() == ClosedInterval(q(2, 3), q(3, 4));
  CHECK(found);
  // Below the window's scale only finitely many elements meet it.
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    mpq_class a = oracle::random_unit(rng, 500), b = oracle::random_unit(rng, 500);
    if (a > b) std::swap(a, b);
    if (a == b || a < mpq_class(1, 20)) continue;
    std::size_t n = 1;
    while (oracle::contains_cell(a, b, n) == false && n < 3) ++n;
    if (oracle::contains_cell(a, b, n)) --n;  // n is now below the c.w.g. generation
    std::vector<oracle::Cell> ref;
    oracle::cells_meeting(oracle::root(), n, a, b, ref);
    auto got = elements_in_window(ClosedInterval(Rational(a), Rational(b)), n, 100000);
    REQUIRE_FALSE(got.truncated);
    std::size_t matching = 0;
    for (const auto& e : got.elements) {
      if (e.right() > Rational(a) && e.left() < Rational(b)) ++matching;
    }
    CHECK(matching == ref.size());
  }
  // An accumulation point of generation 1 inside the window: infinitely many
  // generation-2 elements.
  CHECK(elements_in_window(ClosedInterval(q(9, 20), q(11, 20)), 2, 500).truncated);
  auto t = elements_in_window(ClosedInterval(q(1, 100), q(1, 2)), 1, 10);
  CHECK(t.truncated);
  CHECK(t.elements.size() == 10);
}
