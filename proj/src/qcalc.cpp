#include "subchains/qcalc.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace subchains {

void require_base(std::int64_t p) {
  if (p < 2) throw std::domain_error("p must be >= 2 (got " + std::to_string(p) + ")");
}

void require_rank(int n) {
  if (n < 0) throw std::domain_error("n must be >= 0 (got " + std::to_string(n) + ")");
}

static void require_subrank(int n, int k) {
  require_rank(n);
  if (k < 0 || k > n) {
    throw std::out_of_range("k must satisfy 0 <= k <= n (got n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
  }
}

void QParams::validate() const {
  require_base(p);
  require_subrank(n, k);
}

QTable::QTable(std::int64_t p) : p_(p) {
  require_base(p);
  p_big_ = big(p);
  f_.emplace_back(1);
}

const BigCount& QTable::f(int r) {
  require_rank(r);
  while (static_cast<int>(f_.size()) <= r) {
    const auto s = static_cast<unsigned long>(f_.size());
    BigCount term;
    mpz_pow_ui(term.get_mpz_t(), p_big_.get_mpz_t(), s);
    term -= 1;
    f_.push_back(f_.back() * term);
  }
  return f_[static_cast<std::size_t>(r)];
}

const BigCount& QTable::binomial(int n, int k) {
  require_subrank(n, k);
  if (static_cast<int>(rows_.size()) <= n) rows_.resize(static_cast<std::size_t>(n) + 1);
  auto& row = rows_[static_cast<std::size_t>(n)];
  if (row.empty()) {
    row.resize(static_cast<std::size_t>(n) + 1);
    const BigCount& top = f(n);
    for (int j = 0; j <= n / 2; ++j) {
      BigCount den = f(j) * f(n - j);
      BigCount q;
      mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), den.get_mpz_t());
      row[static_cast<std::size_t>(n - j)] = q;
      row[static_cast<std::size_t>(j)] = std::move(q);
    }
  }
  return row[static_cast<std::size_t>(k)];
}

BigCount f_value(int r, std::int64_t p) {
  require_base(p);
  require_rank(r);
  return QTable(p).f(r);
}

BigCount gaussian_binomial(int n, int k, std::int64_t p) {
  QParams{p, n, k}.validate();
  return QTable(p).binomial(n, k);
}

IntPolynomial f_polynomial(int r) {
  require_rank(r);
  IntPolynomial out{1};
  for (int s = 1; s <= r; ++s) {
    out *= IntPolynomial::monomial(1, static_cast<std::size_t>(s)) - IntPolynomial{1};
  }
  return out;
}

namespace {

std::mutex qbinom_mutex;
std::map<std::pair<int, int>, IntPolynomial> qbinom_cache;

IntPolynomial qbinom_locked(int n, int k) {
  if (k == 0 || k == n) return IntPolynomial{1};
  auto key = std::make_pair(n, k);
  if (auto it = qbinom_cache.find(key); it != qbinom_cache.end()) return it->second;
  IntPolynomial v = qbinom_locked(n - 1, k - 1) +
                    qbinom_locked(n - 1, k).shifted(static_cast<std::size_t>(k));
  qbinom_cache.emplace(key, v);
  return v;
}

}  // namespace

IntPolynomial gaussian_binomial_polynomial(int n, int k) {
  require_subrank(n, k);
  std::lock_guard lock(qbinom_mutex);
  return qbinom_locked(n, k);
}

}  // namespace subchains
