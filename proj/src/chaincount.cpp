#include "subchains/chaincount.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace subchains {

ChainCounts ChainCounts::from_rooted(BigCount rooted) {
  ChainCounts c;
  c.D = rooted - 1;
  c.C = 2 * rooted - 1;
  c.F = std::move(rooted);
  return c;
}

bool ChainCounts::consistent() const { return F == D + 1 && C == F + D && C == 2 * F - 1; }

void RootedChainProblem::validate() const {
  require_base(p);
  require_rank(n);
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::recurrence:
      return "recurrence";
    case Method::closed_form:
      return "closed_form";
  }
  return "?";
}

Method parse_method(std::string_view s) {
  if (s == "recurrence") return Method::recurrence;
  if (s == "closed_form") return Method::closed_form;
  throw std::invalid_argument("unknown method '" + std::string(s) +
                              "' (expected recurrence or closed_form)");
}

ChainCounter::ChainCounter(std::int64_t p) : table_(p) { x_.emplace_back(1); }

const BigCount& ChainCounter::x(int n) {
  require_rank(n);
  while (static_cast<int>(x_.size()) <= n) {
    const int m = static_cast<int>(x_.size());
    BigCount sum = 0;
    for (int k = 0; k < m; ++k) {
      mpz_addmul(sum.get_mpz_t(), table_.binomial(m, k).get_mpz_t(),
                 x_[static_cast<std::size_t>(k)].get_mpz_t());
    }
    x_.push_back(std::move(sum));
  }
  return x_[static_cast<std::size_t>(n)];
}

ChainCounts ChainCounter::counts(int n) {
  if (n == 0) return ChainCounts::from_rooted(1);
  return ChainCounts::from_rooted(2 * x(n));
}

BigCount x_recurrence(int n, std::int64_t p) {
  RootedChainProblem{p, n}.validate();
  return ChainCounter(p).x(n);
}

namespace {

// Sums the subset products for masks in [begin, end). Bit i of a mask
// selects index i + 1; the chain is walked from n downward.
BigCount subset_sum(int n, std::uint64_t begin, std::uint64_t end,
                    const std::vector<std::vector<BigCount>>& a) {
  BigCount total = 0;
  BigCount prod;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    prod = 1;
    int top = n;
    for (int i = n - 2; i >= 0; --i) {
      if ((mask >> i) & 1U) {
        prod *= a[static_cast<std::size_t>(top)][static_cast<std::size_t>(i + 1)];
        top = i + 1;
      }
    }
    total += prod;
  }
  return total;
}

constexpr std::uint64_t kParallelThreshold = std::uint64_t{1} << 14;

}  // namespace

BigCount x_closed_form(int n, std::int64_t p, int max_n) {
  RootedChainProblem{p, n}.validate();
  if (n > max_n) {
    throw std::length_error("closed form enumerates 2^(n-1) subsets; n=" + std::to_string(n) +
                            " exceeds the limit " + std::to_string(max_n));
  }
  if (n > 63) throw std::length_error("closed form is limited to n <= 63");
  if (n <= 1) return 1;

  QTable table(p);
  std::vector<std::vector<BigCount>> a(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    auto& row = a[static_cast<std::size_t>(m)];
    for (int k = 0; k <= m; ++k) row.push_back(table.binomial(m, k));
  }

  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  if (count < kParallelThreshold || workers == 1) return subset_sum(n, 0, count, a);

  workers = std::min<unsigned>(workers, 16);
  std::vector<BigCount> partial(workers);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = std::min(count, w * chunk);
      const std::uint64_t hi = std::min(count, lo + chunk);
      pool.emplace_back([&, w, lo, hi] { partial[w] = subset_sum(n, lo, hi, a); });
    }
  }
  BigCount total = 0;
  for (const auto& s : partial) total += s;
  return total;
}

ChainCounts chain_counts(int n, std::int64_t p, Method method, int closed_form_max_n) {
  BigCount x = method == Method::recurrence ? x_recurrence(n, p)
                                            : x_closed_form(n, p, closed_form_max_n);
  // Types (1) and (2) coincide on the trivial group.
  if (n == 0) return ChainCounts::from_rooted(1);
  return ChainCounts::from_rooted(2 * x);
}

namespace {

std::mutex xpoly_mutex;
std::vector<IntPolynomial> xpoly_cache{IntPolynomial{1}};

}  // namespace

IntPolynomial x_polynomial(int n) {
  require_rank(n);
  std::lock_guard lock(xpoly_mutex);
  while (static_cast<int>(xpoly_cache.size()) <= n) {
    const int m = static_cast<int>(xpoly_cache.size());
    IntPolynomial sum;
    for (int k = 0; k < m; ++k) {
      sum += gaussian_binomial_polynomial(m, k) * xpoly_cache[static_cast<std::size_t>(k)];
    }
    xpoly_cache.push_back(std::move(sum));
  }
  return xpoly_cache[static_cast<std::size_t>(n)];
}

IntPolynomial f_n_polynomial(int n) {
  require_rank(n);
  if (n == 0) return IntPolynomial{1};
  return poly_scale(x_polynomial(n), 2);
}

}  // namespace subchains
