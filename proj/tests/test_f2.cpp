#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lcs/f2.hpp"

using namespace lcs;

namespace {

std::mt19937 rng(12345);

F2Vector random_vector(std::size_t n) {
  F2Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
  return v;
}

F2Matrix random_matrix(std::size_t r, std::size_t c) {
  F2Matrix a(r, c);
  for (std::size_t i = 0; i < r; ++i) a.set_row(i, random_vector(c));
  return a;
}

F2Matrix random_invertible(std::size_t n) {
  for (;;) {
    F2Matrix a = random_matrix(n, n);
    if (rank(a) == n) return a;
  }
}

}  // namespace

TEST_CASE("vector basics") {
  F2Vector v = F2Vector::from_string("10110");
  CHECK(v.size() == 5);
  CHECK(v.get(0));
  CHECK(!v.get(1));
  CHECK(v.weight() == 3);
  CHECK(v.to_string() == "10110");
  v.flip(1);
  CHECK(v.to_string() == "11110");
  CHECK(!v.is_zero());
  CHECK(F2Vector(4).is_zero());

  F2Vector w = F2Vector::from_string("01010");
  CHECK((v + w).to_string() == "10100");
  CHECK(v.dot_int(w) == 2);  // 11110 & 01010 = 01010
  CHECK(v.dot(w) == false);
}

TEST_CASE("vector dot parity matches integer dot") {
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 130;
    F2Vector a = random_vector(n), b = random_vector(n);
    CHECK(a.dot(b) == (a.dot_int(b) % 2 == 1));
  }
}

TEST_CASE("lex order reads bit 0 first") {
  CHECK(F2Vector::from_string("011").lex_less(F2Vector::from_string("100")));
  CHECK(!F2Vector::from_string("100").lex_less(F2Vector::from_string("011")));
  CHECK(!F2Vector::from_string("101").lex_less(F2Vector::from_string("101")));
  // cross-word boundary: first difference is at bit 63
  F2Vector a(70), b(70);
  a.set(69, true);
  b.set(63, true);
  CHECK(a.lex_less(b));
  CHECK(!b.lex_less(a));
  CHECK(!b.lex_less(F2Vector(70)));
  CHECK(F2Vector(70).lex_less(b));
}

TEST_CASE("concat and slice round-trip") {
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 1 + rng() % 100, m = rng() % 80;
    F2Vector a = random_vector(n), b = random_vector(m);
    F2Vector c = a.concat(b);
    CHECK(c.size() == n + m);
    CHECK(c.slice(0, n) == a);
    CHECK(c.slice(n, n + m) == b);
  }
}

TEST_CASE("matrix construction and equality") {
  F2Matrix i3 = F2Matrix::identity(3);
  CHECK(i3.get(0, 0));
  CHECK(!i3.get(0, 1));
  F2Matrix a = F2Matrix::from_strings({"101", "010", "001"});
  CHECK(a != i3);
  a.set(0, 2, false);
  CHECK(a == i3);
  CHECK(a.is_symmetric());
  CHECK(!F2Matrix::from_strings({"01", "00"}).is_symmetric());
}

TEST_CASE("multiply agrees with by-hand example") {
  F2Matrix a = F2Matrix::from_strings({"110", "011"});
  F2Matrix b = F2Matrix::from_strings({"10", "11", "01"});
  F2Matrix c = a * b;
  CHECK(c == F2Matrix::from_strings({"01", "10"}));
  F2Vector v = F2Vector::from_string("11");
  CHECK((v * a) == F2Vector::from_string("101"));
}

TEST_CASE("transpose and block operations") {
  F2Matrix a = F2Matrix::from_strings({"110", "011"});
  CHECK(a.transposed() == F2Matrix::from_strings({"10", "11", "01"}));
  F2Matrix big(4, 4);
  big.paste(1, 1, a);
  CHECK(big.block(1, 1, 2, 3) == a);
  CHECK(big.block(0, 0, 1, 4).is_zero());
}

TEST_CASE("row_reduce invariants") {
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 10, c = 1 + rng() % 12;
    F2Matrix a = random_matrix(r, c);
    auto rr = row_reduce(a);
    CHECK(rr.transform * a == rr.rref);
    CHECK(rank(rr.transform) == r);  // invertible
    CHECK(rr.pivots.size() == rank(a));
    // pivot columns are unit columns, pivots strictly increasing
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      if (i) CHECK(rr.pivots[i - 1] < rr.pivots[i]);
      for (std::size_t j = 0; j < r; ++j)
        CHECK(rr.rref.get(j, rr.pivots[i]) == (j == i));
    }
    // rows past the rank are zero
    for (std::size_t j = rr.pivots.size(); j < r; ++j) CHECK(rr.rref.row(j).is_zero());
  }
}

TEST_CASE("inverse") {
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng() % 12;
    F2Matrix a = random_invertible(n);
    CHECK(a * inverse(a) == F2Matrix::identity(n));
    CHECK(inverse(a) * a == F2Matrix::identity(n));
  }
  CHECK_THROWS_AS(inverse(F2Matrix(3, 3)), SingularMatrix);
  CHECK_THROWS_AS(inverse(F2Matrix::from_strings({"11", "11"})), SingularMatrix);
}

TEST_CASE("solve_affine solves or reports none") {
  int solvable = 0;
  for (int t = 0; t < 300; ++t) {
    std::size_t r = 1 + rng() % 8, c = 1 + rng() % 10;
    F2Matrix a = random_matrix(r, c);
    F2Vector b = random_vector(r);
    auto sol = solve_affine(a, b);
    if (!sol) {
      // b really is outside the column space: check via rank
      F2Matrix aug(r, c + 1);
      aug.paste(0, 0, a);
      for (std::size_t i = 0; i < r; ++i) aug.set(i, c, b.get(i));
      CHECK(rank(aug) == rank(a) + 1);
      continue;
    }
    ++solvable;
    auto apply = [&](const F2Vector& x) {
      F2Vector out(r);
      for (std::size_t i = 0; i < r; ++i) out.set(i, a.row(i).dot(x));
      return out;
    };
    CHECK(apply(sol->particular) == b);
    for (const auto& k : sol->kernel_basis) CHECK(apply(sol->particular + k) == b);
    CHECK(sol->kernel_basis.size() == c - rank(a));
  }
  CHECK(solvable > 0);
}

TEST_CASE("lex_min_affine is the true coset minimum") {
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 8;
    F2Matrix a = random_matrix(r, c);
    F2Vector b = random_vector(r);
    auto sol = solve_affine(a, b);
    if (!sol) continue;
    F2Vector best = lex_min_affine(*sol);
    // brute force over the kernel span
    std::size_t kn = sol->kernel_basis.size();
    REQUIRE(kn <= 12);
    F2Vector truth = sol->particular;
    for (std::size_t mask = 0; mask < (std::size_t{1} << kn); ++mask) {
      F2Vector cand = sol->particular;
      for (std::size_t i = 0; i < kn; ++i)
        if ((mask >> i) & 1) cand ^= sol->kernel_basis[i];
      if (cand.lex_less(truth)) truth = cand;
    }
    CHECK(best == truth);
  }
}
