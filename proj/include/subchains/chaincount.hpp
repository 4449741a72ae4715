#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "subchains/bigcount.hpp"
#include "subchains/polyring.hpp"
#include "subchains/qcalc.hpp"

namespace subchains {

/// Rooted (F), unrooted (D) and total (C) chain counts of one group.
/// Satisfies F = D + 1 and C = F + D = 2F - 1.
struct ChainCounts {
  BigCount F;
  BigCount D;
  BigCount C;

  /// Builds the triple from F alone.
  static ChainCounts from_rooted(BigCount rooted);
  bool consistent() const;

  friend bool operator==(const ChainCounts&, const ChainCounts&) = default;
};

/// Elementary abelian group Z_p^n; p is only required to be >= 2 here.
struct RootedChainProblem {
  std::int64_t p = 2;
  int n = 0;

  void validate() const;
};

enum class Method { recurrence, closed_form };

std::string_view method_name(Method m);
/// Parses "recurrence" or "closed_form"; throws std::invalid_argument otherwise.
Method parse_method(std::string_view s);

/// Largest n accepted by the subset-sum closed form unless overridden.
inline constexpr int kDefaultClosedFormMaxN = 24;

/// x_n: the number of rooted chains of Z_p^n that contain the trivial subgroup.
/// x_0 = 1 and x_n = sum_{k<n} a_{n,p}(k) x_k.
BigCount x_recurrence(int n, std::int64_t p);

/// x_n as 1 plus the sum, over every nonempty subset {i_1 < ... < i_k} of
/// {1, ..., n-1}, of a_{n}(i_k) a_{i_k}(i_{k-1}) ... a_{i_2}(i_1).
/// Enumerates 2^(n-1) subsets. Throws std::length_error when n > max_n.
BigCount x_closed_form(int n, std::int64_t p, int max_n = kDefaultClosedFormMaxN);

/// F = 2 x_n for n >= 1 and F = 1 for the trivial group.
ChainCounts chain_counts(int n, std::int64_t p, Method method = Method::recurrence,
                         int closed_form_max_n = kDefaultClosedFormMaxN);

/// x_n as a polynomial in p. Cached process-wide.
IntPolynomial x_polynomial(int n);

/// F(Z_p^n) as a polynomial in p: 1 for n = 0, otherwise 2 x_n(p).
IntPolynomial f_n_polynomial(int n);

/// Memoized recurrence for one base p. Single-threaded; one per caller.
class ChainCounter {
 public:
  explicit ChainCounter(std::int64_t p);

  std::int64_t base() const { return table_.base(); }
  const BigCount& x(int n);
  ChainCounts counts(int n);

 private:
  QTable table_;
  std::vector<BigCount> x_;
};

}  // namespace subchains
