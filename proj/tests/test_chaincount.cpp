#include <doctest.h>

#include "oracles.hpp"
#include "subchains/chaincount.hpp"

using namespace subchains;

TEST_CASE("x_recurrence") {
  CHECK(x_recurrence(0, 2) == 1);
  CHECK(x_recurrence(2, 2) == 4);
  CHECK(x_recurrence(3, 2) == 36);
  CHECK(x_recurrence(4, 2) == 696);
  CHECK_THROWS_AS(x_recurrence(3, 1), std::domain_error);
  CHECK_THROWS_AS(x_recurrence(-1, 2), std::domain_error);
}

TEST_CASE("x_closed_form") {
  CHECK(x_closed_form(0, 2) == 1);
  CHECK(x_closed_form(1, 5) == 1);
  CHECK(x_closed_form(2, 3) == 5);
  CHECK(x_closed_form(4, 2) == 696);
  CHECK_THROWS_AS(x_closed_form(25, 2), std::length_error);
  CHECK_THROWS_AS(x_closed_form(8, 2, 7), std::length_error);
  CHECK_THROWS_AS(x_closed_form(3, 0), std::domain_error);
}

TEST_CASE("closed form equals recurrence") {
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int n = 0; n <= 12; ++n) CHECK(x_closed_form(n, p) == x_recurrence(n, p));
  }
  // Large enough to take the threaded path.
  CHECK(x_closed_form(17, 3) == x_recurrence(17, 3));
}

TEST_CASE("chain_counts") {
  CHECK(chain_counts(0, 2) == ChainCounts{1, 0, 1});
  CHECK(chain_counts(1, 7) == ChainCounts{2, 1, 3});
  CHECK(chain_counts(3, 2) == ChainCounts{72, 71, 143});
  CHECK(chain_counts(2, 3, Method::closed_form) == ChainCounts{10, 9, 19});
  CHECK(chain_counts(0, 2, Method::closed_form) == ChainCounts{1, 0, 1});
  CHECK_THROWS_AS(chain_counts(30, 2, Method::closed_form), std::length_error);
  for (long p : {2L, 3L, 13L}) {
    for (int n = 0; n <= 15; ++n) CHECK(chain_counts(n, p).consistent());
  }
}

TEST_CASE("chain_counts agrees with element-set brute force") {
  for (auto [p, n] : {std::pair{2L, 1}, {2L, 2}, {2L, 3}, {3L, 2}, {5L, 2}, {2L, 4}}) {
    const auto brute = oracle::brute_chains(oracle::brute_lattice(p, n));
    const auto c = chain_counts(n, p);
    CHECK(c.F == brute.F);
    CHECK(c.D == brute.D);
    CHECK(c.C == brute.C);
  }
}

TEST_CASE("reciprocal form equals the product form") {
  for (long p : {2L, 3L}) {
    for (int n = 1; n <= 6; ++n) {
      const mpq_class r = oracle::reciprocal_rooted_count(n, p);
      CHECK(r.get_den() == 1);
      CHECK(r.get_num() == chain_counts(n, p).F);
    }
  }
}

TEST_CASE("x_polynomial and f_n_polynomial") {
  CHECK(x_polynomial(0) == IntPolynomial{1});
  CHECK(x_polynomial(2) == IntPolynomial{2, 1});
  CHECK(x_polynomial(3) == IntPolynomial{4, 4, 4, 1});
  CHECK(f_n_polynomial(0) == IntPolynomial{1});
  CHECK(f_n_polynomial(1) == IntPolynomial{2});
  CHECK(f_n_polynomial(2) == IntPolynomial{4, 2});
  CHECK(f_n_polynomial(3) == IntPolynomial{8, 8, 8, 2});
  CHECK(f_n_polynomial(4) == IntPolynomial{16, 24, 36, 36, 24, 12, 2});
}

TEST_CASE("polynomial laws for n <= 10") {
  for (int n = 0; n <= 10; ++n) {
    for (long p : {2L, 3L, 5L, 7L, 11L}) {
      CHECK(poly_eval(x_polynomial(n), p) == x_recurrence(n, p));
      CHECK(poly_eval(f_n_polynomial(n), p) == chain_counts(n, p).F);
    }
    if (n >= 1) {
      const auto f = f_n_polynomial(n);
      CHECK(f.degree() == n * (n - 1) / 2);
      CHECK(f.leading() == 2);
      CHECK(f.coeff(0) == BigCount(1) << n);
    }
  }
}

TEST_CASE("monotonicity") {
  for (long p : {2L, 3L, 5L}) {
    ChainCounter counter(p);
    for (int n = 1; n <= 20; ++n) CHECK(counter.counts(n).F > counter.counts(n - 1).F);
  }
  for (int n = 2; n <= 8; ++n) {
    for (long p = 2; p < 12; ++p) CHECK(chain_counts(n, p + 1).F > chain_counts(n, p).F);
  }
}

TEST_CASE("method names") {
  CHECK(parse_method("recurrence") == Method::recurrence);
  CHECK(parse_method("closed_form") == Method::closed_form);
  CHECK(method_name(Method::closed_form) == "closed_form");
  CHECK_THROWS_AS(parse_method("oracle"), std::invalid_argument);
}
