#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "subchains/bigcount.hpp"
#include "subchains/chaincount.hpp"

namespace subchains {

/// Default cap on the number of lattice nodes the oracle will materialize.
inline constexpr std::uint64_t kDefaultOracleBudget = 100'000;

/// Raised when a lattice would exceed the node budget.
class BudgetExceeded : public std::length_error {
 public:
  BudgetExceeded(const std::string& what, BigCount required)
      : std::length_error(what), required_(std::move(required)) {}
  const BigCount& required() const { return required_; }

 private:
  BigCount required_;
};

bool is_prime(std::int64_t p);

/// A subspace of F_p^n held as its reduced row-echelon basis.
///
/// Rows are stored row-major in a flat vector. Two values compare equal iff
/// they are the same subspace of the same ambient space.
class Subspace {
 public:
  using Entry = std::uint32_t;

  /// Canonical form of the row span of `rows` (dim x n is inferred from
  /// rows.size() / n). Entries are reduced mod p first.
  static Subspace span_of(std::int64_t p, int n, std::span<const std::int64_t> rows);
  static Subspace zero(std::int64_t p, int n);
  static Subspace full(std::int64_t p, int n);

  std::int64_t prime() const { return p_; }
  int ambient_rank() const { return n_; }
  int dim() const { return dim_; }
  Entry at(int row, int col) const {
    return rows_[static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(col)];
  }
  std::span<const Entry> row(int r) const {
    return std::span<const Entry>(rows_).subspan(
        static_cast<std::size_t>(r) * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  }
  const std::vector<int>& pivots() const { return pivots_; }

  /// True when v (length n, entries in [0, p)) lies in the span.
  bool contains(std::span<const Entry> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  /// Dim-major, then lexicographic on the basis entries.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  friend std::vector<Subspace> enumerate_subspaces(std::int64_t, int, int, std::uint64_t);

  Subspace(std::int64_t p, int n, int dim, std::vector<Entry> rows, std::vector<int> pivots)
      : p_(p), n_(n), dim_(dim), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

  std::int64_t p_ = 2;
  int n_ = 0;
  int dim_ = 0;
  std::vector<Entry> rows_;
  std::vector<int> pivots_;
};

/// Total number of subspaces of F_p^n, used as the size estimate for budgets.
BigCount galois_number(std::int64_t p, int n);

/// Every k-dimensional subspace of F_p^n, each once, in canonical form.
/// Throws std::domain_error for composite p, std::out_of_range for a bad k and
/// BudgetExceeded when the whole lattice of F_p^n exceeds `budget` nodes.
std::vector<Subspace> enumerate_subspaces(std::int64_t p, int n, int k,
                                          std::uint64_t budget = kDefaultOracleBudget);

/// a ⊆ b. Throws std::invalid_argument if the ambient spaces differ.
bool is_subspace_of(const Subspace& a, const Subspace& b);

/// All subspaces of F_p^n with the full strict-containment relation.
struct SubgroupLattice {
  std::int64_t p = 2;
  int n = 0;
  /// Sorted dim-major then lexicographically; nodes[0] is {0}, nodes.back() the whole space.
  std::vector<Subspace> nodes;
  /// below[i]: indices of every node strictly contained in nodes[i], ascending.
  std::vector<std::vector<std::size_t>> below;

  std::size_t edge_count() const;
};

SubgroupLattice build_lattice(std::int64_t p, int n, std::uint64_t budget = kDefaultOracleBudget);

struct OracleCounts {
  ChainCounts counts;
  std::vector<BigCount> subgroups_by_order;  // index k: subgroups of order p^k
  BigCount total_subgroups;
};

/// Counts nonempty chains by dynamic programming over the lattice:
/// r(H) = 1 + sum_{K ⊊ H} r(K). F, D and C are each tallied directly.
OracleCounts count_chains(const SubgroupLattice& lattice);

/// Plain-text dump:
///   lattice p=<p> n=<n> nodes=<N> edges=<E>
///   node <i> dim <d> : <row> | <row> ...      (entries space separated)
///   edge <i> <j>                               (nodes[j] ⊊ nodes[i])
/// Nodes appear in index order, edges by (i, j) ascending.
void write_lattice_dump(const SubgroupLattice& lattice, std::ostream& out);

}  // namespace subchains
