#include <random>
#include <set>
#include <sstream>

#include <doctest.h>

#include "oracles.hpp"
#include "subchains/latoracle.hpp"
#include "subchains/qcalc.hpp"

using namespace subchains;

namespace {

std::vector<std::int64_t> rows_of(const Subspace& s) {
  std::vector<std::int64_t> out;
  for (int r = 0; r < s.dim(); ++r) {
    for (auto e : s.row(r)) out.push_back(e);
  }
  return out;
}

// Element-set form of a subspace, for comparison with the brute oracle.
oracle::ElementSet elements_of(const Subspace& s) {
  std::vector<std::uint32_t> gens;
  for (int r = 0; r < s.dim(); ++r) {
    std::vector<int> v(s.row(r).begin(), s.row(r).end());
    gens.push_back(oracle::encode(v, s.prime()));
  }
  return oracle::span_elements(gens, s.prime(), s.ambient_rank());
}

}  // namespace

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(-7));
}

TEST_CASE("span_of produces reduced row-echelon form") {
  const std::vector<std::int64_t> rows{1, 1, 0, 1};
  const Subspace s = Subspace::span_of(2, 2, rows);
  CHECK(s.dim() == 2);
  CHECK(s == Subspace::full(2, 2));

  const std::vector<std::int64_t> dup{2, 4, 1, 2, -1, -2};
  const Subspace line = Subspace::span_of(5, 2, dup);
  CHECK(line.dim() == 1);
  CHECK(line.at(0, 0) == 1);
  CHECK(line.at(0, 1) == 2);

  CHECK(Subspace::span_of(3, 3, std::vector<std::int64_t>{0, 0, 0}) == Subspace::zero(3, 3));
  CHECK_THROWS_AS(Subspace::span_of(4, 2, rows), std::domain_error);
  CHECK_THROWS_AS(Subspace::span_of(2, 3, rows), std::invalid_argument);
}

TEST_CASE("enumerate_subspaces examples") {
  const auto lines = enumerate_subspaces(2, 2, 1);
  REQUIRE(lines.size() == 3);
  std::set<std::vector<std::int64_t>> got;
  for (const auto& s : lines) got.insert(rows_of(s));
  CHECK(got == std::set<std::vector<std::int64_t>>{{1, 0}, {0, 1}, {1, 1}});

  CHECK(enumerate_subspaces(3, 1, 1).size() == 1);
  CHECK(enumerate_subspaces(2, 4, 2).size() == 35);
  CHECK(enumerate_subspaces(2, 0, 0).size() == 1);

  CHECK_THROWS_AS(enumerate_subspaces(4, 2, 1), std::domain_error);
  CHECK_THROWS_AS(enumerate_subspaces(2, 2, 3), std::out_of_range);
  CHECK_THROWS_AS(enumerate_subspaces(2, 10, 5, 1000), BudgetExceeded);
}

TEST_CASE("budget error carries the size estimate") {
  try {
    build_lattice(3, 6, 500);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == galois_number(3, 6));
    CHECK(std::string(e.what()).find(galois_number(3, 6).get_str()) != std::string::npos);
  }
}

TEST_CASE("enumeration yields canonical, distinct subspaces matching the element-set oracle") {
  for (auto [p, n] : {std::pair{2L, 3}, {3L, 2}, {2L, 4}, {3L, 3}, {5L, 2}}) {
    std::set<oracle::ElementSet> mine;
    std::size_t listed = 0;
    for (int k = 0; k <= n; ++k) {
      for (const auto& s : enumerate_subspaces(p, n, k)) {
        ++listed;
        CHECK(Subspace::span_of(p, n, rows_of(s)) == s);
        mine.insert(elements_of(s));
      }
    }
    const auto brute = oracle::brute_lattice(p, n);
    CHECK(listed == mine.size());
    CHECK(mine == std::set<oracle::ElementSet>(brute.spaces.begin(), brute.spaces.end()));
  }
}

TEST_CASE("random bases re-canonicalize onto the enumerated set") {
  std::mt19937_64 rng(11);
  for (auto [p, n] : {std::pair{2L, 3}, {3L, 2}}) {
    std::uniform_int_distribution<std::int64_t> coef(-3 * p, 3 * p);
    std::set<Subspace> listed;
    for (int k = 0; k <= n; ++k) {
      for (auto& s : enumerate_subspaces(p, n, k)) listed.insert(std::move(s));
    }
    int full_rank = 0;
    for (const auto& s : listed) {
      const int k = s.dim();
      for (int trial = 0; trial < 10; ++trial) {
        // Random combinations of the basis, plus redundant rows.
        const int extra = static_cast<int>(rng() % 3);
        std::vector<std::int64_t> mixed;
        for (int r = 0; r < k + extra; ++r) {
          std::vector<std::int64_t> row(static_cast<std::size_t>(n), 0);
          for (int b = 0; b < k; ++b) {
            const auto c = coef(rng);
            for (int col = 0; col < n; ++col) row[static_cast<std::size_t>(col)] += c * s.at(b, col);
          }
          mixed.insert(mixed.end(), row.begin(), row.end());
        }
        const Subspace back = Subspace::span_of(p, n, mixed);
        CHECK(listed.count(back) == 1);
        CHECK(is_subspace_of(back, s));
        if (back.dim() == k) {
          CHECK(back == s);
          ++full_rank;
        }
      }
    }
    CHECK(full_rank > static_cast<int>(listed.size()) * 5);
  }
}

TEST_CASE("is_subspace_of") {
  const auto e1 = Subspace::span_of(2, 2, std::vector<std::int64_t>{1, 0});
  const auto e2 = Subspace::span_of(2, 2, std::vector<std::int64_t>{0, 1});
  CHECK(is_subspace_of(e1, e1));
  CHECK(is_subspace_of(Subspace::zero(2, 2), e2));
  CHECK_FALSE(is_subspace_of(e1, e2));
  CHECK(is_subspace_of(e1, Subspace::full(2, 2)));
  CHECK_FALSE(is_subspace_of(Subspace::full(2, 2), e1));
  CHECK_THROWS_AS(is_subspace_of(e1, Subspace::zero(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(is_subspace_of(e1, Subspace::zero(2, 3)), std::invalid_argument);
}

TEST_CASE("inclusion is a partial order on small lattices") {
  for (auto [p, n] : {std::pair{2L, 3}, {3L, 2}}) {
    const auto lat = build_lattice(p, n);
    const auto& v = lat.nodes;
    for (const auto& a : v) {
      CHECK(is_subspace_of(a, a));
      for (const auto& b : v) {
        if (a != b && is_subspace_of(a, b)) CHECK_FALSE(is_subspace_of(b, a));
        for (const auto& c : v) {
          if (is_subspace_of(a, b) && is_subspace_of(b, c)) CHECK(is_subspace_of(a, c));
        }
      }
    }
  }
}

TEST_CASE("build_lattice") {
  CHECK(build_lattice(2, 2).nodes.size() == 5);
  CHECK(build_lattice(2, 3).nodes.size() == 16);
  CHECK(build_lattice(3, 3).nodes.size() == 28);

  const auto lat = build_lattice(2, 3);
  CHECK(lat.nodes.front() == Subspace::zero(2, 3));
  CHECK(lat.nodes.back() == Subspace::full(2, 3));
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    for (std::size_t j : lat.below[i]) CHECK(lat.nodes[j].dim() < lat.nodes[i].dim());
    if (i > 0) CHECK(lat.nodes[i - 1] < lat.nodes[i]);
  }
  // Top sits over every other node; bottom is under all of them.
  CHECK(lat.below.back().size() == lat.nodes.size() - 1);
  CHECK(lat.below.front().empty());
  CHECK_THROWS_AS(build_lattice(6, 2), std::domain_error);
}

TEST_CASE("count_chains examples") {
  auto z2 = count_chains(build_lattice(2, 1));
  CHECK(z2.counts == ChainCounts{2, 1, 3});
  CHECK(z2.total_subgroups == 2);
  CHECK(count_chains(build_lattice(2, 2)).counts == ChainCounts{8, 7, 15});
  CHECK(count_chains(build_lattice(3, 2)).counts == ChainCounts{10, 9, 19});
  const auto z0 = count_chains(build_lattice(5, 0));
  CHECK(z0.counts == ChainCounts{1, 0, 1});
}

TEST_CASE("oracle matches formulas on the validation grid") {
  const std::vector<std::pair<long, int>> grid{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2},
                                               {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}};
  for (auto [p, n] : grid) {
    const auto oc = count_chains(build_lattice(p, n));
    CHECK(oc.counts.F == chain_counts(n, p).F);
    CHECK(oc.counts.F == oc.counts.D + 1);
    CHECK(oc.counts.C == 2 * oc.counts.F - 1);
    BigCount sum = 0;
    for (int k = 0; k <= n; ++k) {
      CHECK(oc.subgroups_by_order[static_cast<std::size_t>(k)] == gaussian_binomial(n, k, p));
      sum += oc.subgroups_by_order[static_cast<std::size_t>(k)];
    }
    CHECK(sum == oc.total_subgroups);
    CHECK(oc.total_subgroups == galois_number(p, n));
  }
}

TEST_CASE("lattice dump format") {
  std::ostringstream out;
  write_lattice_dump(build_lattice(2, 2), out);
  CHECK(out.str() ==
        "lattice p=2 n=2 nodes=5 edges=7\n"
        "node 0 dim 0 :\n"
        "node 1 dim 1 : 0 1\n"
        "node 2 dim 1 : 1 0\n"
        "node 3 dim 1 : 1 1\n"
        "node 4 dim 2 : 1 0 | 0 1\n"
        "edge 1 0\n"
        "edge 2 0\n"
        "edge 3 0\n"
        "edge 4 0\n"
        "edge 4 1\n"
        "edge 4 2\n"
        "edge 4 3\n");
}
