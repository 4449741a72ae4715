#pragma once

#include <cstdint>
#include <vector>

#include "subchains/bigcount.hpp"
#include "subchains/polyring.hpp"

namespace subchains {

/// Base p, ambient rank n and subspace rank k of a Gaussian binomial query.
struct QParams {
  std::int64_t p = 2;
  int n = 0;
  int k = 0;

  /// Throws std::domain_error for p < 2 and std::out_of_range unless 0 <= k <= n.
  void validate() const;
};

void require_base(std::int64_t p);
void require_rank(int n);

/// prod_{s=1}^{r} (p^s - 1); the empty product is 1.
BigCount f_value(int r, std::int64_t p);

/// Number of k-dimensional subspaces of an n-dimensional space over a field of
/// order p, f(n) / (f(k) f(n-k)). Defined for every integer p >= 2.
BigCount gaussian_binomial(int n, int k, std::int64_t p);

/// prod_{s=1}^{r} (X^s - 1).
IntPolynomial f_polynomial(int r);

/// q-binomial [n choose k]_X, built by the q-Pascal rule
///   [n k] = [n-1 k-1] + X^k [n-1 k],   [n 0] = [n n] = 1.
/// Results are cached process-wide behind a mutex.
IntPolynomial gaussian_binomial_polynomial(int n, int k);

/// Memoized numeric tables for one fixed base p.
///
/// Not synchronized: a table belongs to one thread. The free functions above
/// build a throwaway table per call.
class QTable {
 public:
  explicit QTable(std::int64_t p);

  std::int64_t base() const { return p_; }
  const BigCount& f(int r);
  /// a_{n,p}(k).
  const BigCount& binomial(int n, int k);

 private:
  std::int64_t p_;
  BigCount p_big_;
  std::vector<BigCount> f_;           // f_[r]
  std::vector<std::vector<BigCount>> rows_;  // rows_[n][k], filled a row at a time
};

}  // namespace subchains
