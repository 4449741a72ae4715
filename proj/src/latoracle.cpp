#include "subchains/latoracle.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "subchains/qcalc.hpp"

namespace subchains {

namespace {

using Entry = Subspace::Entry;

// Largest prime the oracle accepts; keeps every product of two entries in 64 bits.
constexpr std::int64_t kMaxOraclePrime = std::int64_t{1} << 31;

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // a^(p-2) mod p; p is prime.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

void require_oracle_prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw std::domain_error("p must be prime (got " + std::to_string(p) + ")");
  }
  if (p >= kMaxOraclePrime) {
    throw std::domain_error("p too large for the lattice oracle (got " + std::to_string(p) + ")");
  }
}

void require_budget(std::int64_t p, int n, std::uint64_t budget) {
  BigCount total = galois_number(p, n);
  if (total > BigCount(static_cast<unsigned long>(budget))) {
    throw BudgetExceeded("lattice of F_" + std::to_string(p) + "^" + std::to_string(n) +
                             " has " + total.get_str() + " subspaces, over the budget of " +
                             std::to_string(budget),
                         total);
  }
}

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::int64_t d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Subspace Subspace::span_of(std::int64_t p, int n, std::span<const std::int64_t> rows) {
  require_oracle_prime(p);
  require_rank(n);
  const auto width = static_cast<std::size_t>(n);
  if (width == 0 ? !rows.empty() : rows.size() % width != 0) {
    throw std::invalid_argument("row data is not a whole number of length-n rows");
  }
  const auto up = static_cast<std::uint64_t>(p);
  const std::size_t height = width == 0 ? 0 : rows.size() / width;

  std::vector<std::uint64_t> m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::int64_t r = rows[i] % p;
    m[i] = static_cast<std::uint64_t>(r < 0 ? r + p : r);
  }
  auto cell = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return m[r * width + c]; };

  std::vector<int> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < height; ++col) {
    std::size_t sel = rank;
    while (sel < height && cell(sel, col) == 0) ++sel;
    if (sel == height) continue;
    for (std::size_t c = 0; c < width; ++c) std::swap(cell(rank, c), cell(sel, c));
    const std::uint64_t inv = inverse_mod(cell(rank, col), up);
    for (std::size_t c = 0; c < width; ++c) cell(rank, c) = cell(rank, c) * inv % up;
    for (std::size_t r = 0; r < height; ++r) {
      if (r == rank || cell(r, col) == 0) continue;
      const std::uint64_t factor = cell(r, col);
      for (std::size_t c = 0; c < width; ++c) {
        cell(r, c) = (cell(r, c) + (up - factor) * cell(rank, c)) % up;
      }
    }
    pivots.push_back(static_cast<int>(col));
    ++rank;
  }

  std::vector<Entry> out(rank * width);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Entry>(m[i]);
  return Subspace(p, n, static_cast<int>(rank), std::move(out), std::move(pivots));
}

Subspace Subspace::zero(std::int64_t p, int n) { return span_of(p, n, {}); }

Subspace Subspace::full(std::int64_t p, int n) {
  std::vector<std::int64_t> id(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i * n + i)] = 1;
  return span_of(p, n, id);
}

bool Subspace::contains(std::span<const Entry> v) const {
  if (v.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("vector length does not match the ambient rank");
  }
  const auto up = static_cast<std::uint64_t>(p_);
  std::vector<std::uint64_t> w(v.begin(), v.end());
  // Pivot columns are zero outside their own row, so one pass suffices.
  for (int r = 0; r < dim_; ++r) {
    const std::uint64_t factor = w[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)])];
    if (factor == 0) continue;
    for (int c = 0; c < n_; ++c) {
      auto& x = w[static_cast<std::size_t>(c)];
      x = (x + (up - factor) * at(r, c)) % up;
    }
  }
  return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  return a.rows_ <=> b.rows_;
}

BigCount galois_number(std::int64_t p, int n) {
  QTable table(p);
  BigCount total = 0;
  for (int k = 0; k <= n; ++k) total += table.binomial(n, k);
  return total;
}

std::vector<Subspace> enumerate_subspaces(std::int64_t p, int n, int k, std::uint64_t budget) {
  require_oracle_prime(p);
  QParams{p, n, k}.validate();
  require_budget(p, n, budget);

  const auto width = static_cast<std::size_t>(n);
  const auto kk = static_cast<std::size_t>(k);
  const auto top = static_cast<Entry>(p - 1);
  std::vector<Subspace> out;

  // Pivot sets in lexicographic order.
  std::vector<int> piv(kk);
  for (std::size_t i = 0; i < kk; ++i) piv[i] = static_cast<int>(i);
  while (true) {
    std::vector<bool> is_pivot(width, false);
    for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
    // Free cells: right of the row's pivot, in a non-pivot column.
    std::vector<std::size_t> free_cells;
    for (std::size_t r = 0; r < kk; ++r) {
      for (std::size_t c = static_cast<std::size_t>(piv[r]) + 1; c < width; ++c) {
        if (!is_pivot[c]) free_cells.push_back(r * width + c);
      }
    }
    std::vector<Entry> rows(kk * width, 0);
    for (std::size_t r = 0; r < kk; ++r) rows[r * width + static_cast<std::size_t>(piv[r])] = 1;

    while (true) {
      out.push_back(Subspace(p, n, k, rows, piv));
      std::size_t i = free_cells.size();
      while (i > 0 && rows[free_cells[i - 1]] == top) rows[free_cells[--i]] = 0;
      if (i == 0) break;
      ++rows[free_cells[i - 1]];
    }

    std::size_t i = kk;
    while (i > 0 && piv[i - 1] == n - static_cast<int>(kk - i) - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < kk; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

bool is_subspace_of(const Subspace& a, const Subspace& b) {
  if (a.prime() != b.prime() || a.ambient_rank() != b.ambient_rank()) {
    throw std::invalid_argument("subspaces live in different ambient spaces");
  }
  if (a.dim() > b.dim()) return false;
  for (int r = 0; r < a.dim(); ++r) {
    if (!b.contains(a.row(r))) return false;
  }
  return true;
}

std::size_t SubgroupLattice::edge_count() const {
  std::size_t e = 0;
  for (const auto& b : below) e += b.size();
  return e;
}

SubgroupLattice build_lattice(std::int64_t p, int n, std::uint64_t budget) {
  require_oracle_prime(p);
  require_rank(n);
  require_budget(p, n, budget);

  SubgroupLattice lat;
  lat.p = p;
  lat.n = n;
  std::vector<std::size_t> dim_start;
  for (int k = 0; k <= n; ++k) {
    auto layer = enumerate_subspaces(p, n, k, budget);
    std::sort(layer.begin(), layer.end());
    dim_start.push_back(lat.nodes.size());
    std::move(layer.begin(), layer.end(), std::back_inserter(lat.nodes));
  }

  lat.below.resize(lat.nodes.size());
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    const int d = lat.nodes[i].dim();
    const std::size_t lower_end = dim_start[static_cast<std::size_t>(d)];
    for (std::size_t j = 0; j < lower_end; ++j) {
      if (is_subspace_of(lat.nodes[j], lat.nodes[i])) lat.below[i].push_back(j);
    }
  }
  return lat;
}

OracleCounts count_chains(const SubgroupLattice& lattice) {
  const std::size_t size = lattice.nodes.size();
  std::vector<BigCount> r(size);
  OracleCounts out;
  out.subgroups_by_order.assign(static_cast<std::size_t>(lattice.n) + 1, 0);

  BigCount all = 0;
  BigCount unrooted = 0;
  for (std::size_t i = 0; i < size; ++i) {
    BigCount v = 1;
    for (std::size_t j : lattice.below[i]) v += r[j];
    r[i] = v;
    all += v;
    // Any chain containing the whole group has it as its maximum.
    if (lattice.nodes[i].dim() != lattice.n) unrooted += v;
    out.subgroups_by_order[static_cast<std::size_t>(lattice.nodes[i].dim())] += 1;
    out.total_subgroups += 1;
  }
  out.counts.F = size ? r.back() : BigCount(0);
  out.counts.D = std::move(unrooted);
  out.counts.C = std::move(all);
  return out;
}

void write_lattice_dump(const SubgroupLattice& lattice, std::ostream& out) {
  out << "lattice p=" << lattice.p << " n=" << lattice.n << " nodes=" << lattice.nodes.size()
      << " edges=" << lattice.edge_count() << '\n';
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    const Subspace& s = lattice.nodes[i];
    out << "node " << i << " dim " << s.dim() << " :";
    for (int r = 0; r < s.dim(); ++r) {
      if (r > 0) out << " |";
      for (auto e : s.row(r)) out << ' ' << e;
    }
    out << '\n';
  }
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    for (std::size_t j : lattice.below[i]) out << "edge " << i << ' ' << j << '\n';
  }
}

}  // namespace subchains
