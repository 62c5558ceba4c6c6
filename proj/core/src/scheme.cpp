#include "mms/scheme.hpp"

#include <algorithm>
#include <bit>

namespace mms {

namespace {

constexpr std::size_t kMaxRecordedMismatches = 8;

void check_dims(unsigned n, unsigned j, unsigned k) {
  if (n > 64) throw std::invalid_argument("scheme matrices support n <= 64");
  if (j > k || k > n) {
    throw std::invalid_argument("need 0 <= j <= k <= n (got n=" + std::to_string(n) + ", j=" +
                                std::to_string(j) + ", k=" + std::to_string(k) + ")");
  }
}

void check_budget(std::uint64_t rows, std::uint64_t cols, DenseBudget budget, const std::string& what) {
  const unsigned __int128 entries = static_cast<unsigned __int128>(rows) * cols;
  if (entries > budget.max_entries) {
    throw BudgetExceeded(what + " needs " + std::to_string(static_cast<std::uint64_t>(entries)) +
                         " dense entries, budget is " + std::to_string(budget.max_entries) +
                         "; use the entry accessor or row_dot instead");
  }
}

}  // namespace

std::string to_string(StructureKind kind) {
  return kind == StructureKind::inclusion ? "inclusion" : "kneser";
}

std::vector<std::uint64_t> subset_masks(unsigned n, unsigned r) {
  if (r > n) return {};
  if (r == 0) return {0};
  std::vector<std::uint64_t> masks;
  masks.reserve(binomial_u64(n, r));
  std::vector<unsigned> s(r);
  for (unsigned i = 0; i < r; ++i) s[i] = i;
  do {
    std::uint64_t m = 0;
    for (unsigned i : s) m |= std::uint64_t{1} << i;
    masks.push_back(m);
  } while (next_colex(s, n));
  return masks;
}

// Rows may be larger than columns here (W_1j with j = 0 is used internally
// as an all-zero block); build_structure_matrix enforces j <= k.
StructureMatrix::StructureMatrix(StructureKind kind, unsigned n, unsigned j, unsigned k, DenseBudget budget)
    : kind_(kind), n_(n), j_(j), k_(k) {
  if (n > 64 || j > n || k > n) throw std::invalid_argument("structure matrix needs j, k <= n <= 64");
  const auto row_masks = subset_masks(n, j);
  const auto col_masks = subset_masks(n, k);
  rows_ = row_masks.size();
  cols_ = col_masks.size();
  check_budget(rows_, cols_, budget, to_string(kind) + " matrix");
  entries_.assign(rows_ * cols_, 0);
  for (std::uint64_t r = 0; r < rows_; ++r) {
    for (std::uint64_t c = 0; c < cols_; ++c) {
      const bool one = kind == StructureKind::inclusion ? (row_masks[r] & ~col_masks[c]) == 0
                                                        : (row_masks[r] & col_masks[c]) == 0;
      entries_[r * cols_ + c] = one ? 1 : 0;
    }
  }
}

std::vector<std::uint64_t> StructureMatrix::row_sums() const {
  std::vector<std::uint64_t> sums(rows_, 0);
  for (std::uint64_t r = 0; r < rows_; ++r)
    for (std::uint64_t c = 0; c < cols_; ++c) sums[r] += (*this)(r, c);
  return sums;
}

std::vector<std::uint64_t> StructureMatrix::col_sums() const {
  std::vector<std::uint64_t> sums(cols_, 0);
  for (std::uint64_t r = 0; r < rows_; ++r)
    for (std::uint64_t c = 0; c < cols_; ++c) sums[c] += (*this)(r, c);
  return sums;
}

StructureMatrix build_structure_matrix(StructureKind kind, unsigned n, unsigned j, unsigned k, DenseBudget budget) {
  check_dims(n, j, k);
  return StructureMatrix(kind, n, j, k, budget);
}

BoseMesnerOperator::BoseMesnerOperator(unsigned n, unsigned j, unsigned k) : n_(n), j_(j), k_(k) {
  check_dims(n, j, k);
  if (k == 0) throw std::invalid_argument("Bose-Mesner operator needs k >= 1");
  by_overlap_.reserve(k + 1);
  for (unsigned overlap = 0; overlap <= k; ++overlap) {
    by_overlap_.push_back(binomial(static_cast<long long>(k) - overlap, j));
  }
  column_masks_ = subset_masks(n, k);
}

const Integer& BoseMesnerOperator::entry(const KSubset& s, const KSubset& t) const {
  if (s.k() != k_ || t.k() != k_ || s.n() != n_ || t.n() != n_) {
    throw std::invalid_argument("Bose-Mesner entry needs two k-subsets of [0,n)");
  }
  return by_overlap_[s.intersection_size(t)];
}

Integer BoseMesnerOperator::row_dot(std::uint64_t row_mask, std::span<const Integer> b) const {
  if (b.size() != column_masks_.size()) throw std::invalid_argument("row_dot: vector length mismatch");
  std::vector<Integer> bucket(k_ + 1, Integer(0));
  for (std::size_t c = 0; c < column_masks_.size(); ++c) {
    bucket[std::popcount(row_mask & column_masks_[c])] += b[c];
  }
  Integer dot = 0;
  for (unsigned overlap = 0; overlap <= k_; ++overlap) dot += by_overlap_[overlap] * bucket[overlap];
  return dot;
}

std::vector<Integer> BoseMesnerOperator::dense(DenseBudget budget) const {
  const std::uint64_t size = column_masks_.size();
  check_budget(size, size, budget, "Bose-Mesner matrix");
  std::vector<Integer> out(size * size);
  for (std::uint64_t r = 0; r < size; ++r)
    for (std::uint64_t c = 0; c < size; ++c)
      out[r * size + c] = by_overlap_[std::popcount(column_masks_[r] & column_masks_[c])];
  return out;
}

Integer bose_mesner_entry(const KSubset& s, const KSubset& t, unsigned j) {
  if (s.k() != t.k()) throw std::invalid_argument("Bose-Mesner entry needs |S| = |T|");
  if (j > s.k()) throw std::invalid_argument("Bose-Mesner entry needs j <= k");
  return binomial(static_cast<long long>(s.k()) - s.intersection_size(t), j);
}

Integer wilson_eigenvalue(unsigned n, unsigned j, unsigned k) {
  const long long nn = n, jj = j, kk = k;
  return -binomial(kk - 1, jj - 1) * binomial(nn - jj - 1, kk - 1);
}

FactorizationReport verify_factorization(unsigned n, unsigned j, unsigned k, DenseBudget budget) {
  check_dims(n, j, k);
  const StructureMatrix kneser(StructureKind::kneser, n, j, k, budget);
  const StructureMatrix inclusion(StructureKind::inclusion, n, j, k, budget);
  const std::uint64_t size = inclusion.cols();
  check_budget(size, size, budget, "Bose-Mesner product");
  const auto masks = subset_masks(n, k);

  FactorizationReport report;
  report.n = n;
  report.j = j;
  report.k = k;
  std::vector<std::uint64_t> product(size * size, 0);
  for (std::uint64_t s = 0; s < size; ++s) {
    for (std::uint64_t t = 0; t < size; ++t) {
      std::uint64_t acc = 0;
      for (std::uint64_t y = 0; y < inclusion.rows(); ++y) acc += kneser(y, s) * inclusion(y, t);
      product[s * size + t] = acc;
      const Integer closed = binomial(static_cast<long long>(k) - std::popcount(masks[s] & masks[t]), j);
      ++report.entries_checked;
      if (closed != acc) {
        ++report.mismatch_count;
        if (report.mismatches.size() < kMaxRecordedMismatches) report.mismatches.push_back({s, t, closed, acc});
      }
    }
  }
  for (std::uint64_t s = 0; s < size && report.symmetric; ++s)
    for (std::uint64_t t = s + 1; t < size; ++t)
      if (product[s * size + t] != product[t * size + s]) {
        report.symmetric = false;
        break;
      }
  return report;
}

EigenvectorReport verify_eigenvector(const WeightVector& weights, unsigned j, unsigned k) {
  const unsigned n = weights.n();
  check_dims(n, j, k);
  if (k == 0) throw std::invalid_argument("eigenvector check needs k >= 1");
  if (weights.is_zero()) throw std::invalid_argument("eigenvector check needs a nonzero weight vector");

  const std::vector<Integer> b = scaled_subset_sums(weights, k);
  const BoseMesnerOperator op(n, j, k);
  const auto masks = subset_masks(n, k);

  EigenvectorReport report;
  report.n = n;
  report.j = j;
  report.k = k;
  report.eigenvalue = wilson_eigenvalue(n, j, k);
  report.b_nonzero = std::any_of(b.begin(), b.end(), [](const Integer& v) { return v != 0; });
  for (std::size_t s = 0; s < masks.size(); ++s) {
    const Integer lhs = op.row_dot(masks[s], b);
    const Integer rhs = report.eigenvalue * b[s];
    ++report.entries_checked;
    if (lhs != rhs) {
      ++report.mismatch_count;
      if (!report.first_mismatch) report.first_mismatch = Mismatch{s, 0, rhs, lhs};
    }
  }
  return report;
}

bool WilsonReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.ok(); });
}

namespace {

IdentityCheck named(std::string name) {
  IdentityCheck check;
  check.name = std::move(name);
  return check;
}

void record(IdentityCheck& check, std::uint64_t row, std::uint64_t col, const Integer& expected,
            const Integer& actual) {
  ++check.entries_checked;
  if (expected != actual) {
    ++check.mismatch_count;
    if (!check.first_mismatch) check.first_mismatch = Mismatch{row, col, expected, actual};
  }
}

// Dense product through element accessors, so transposes need no copies.
template <typename LhsAt, typename RhsAt>
std::vector<std::int64_t> multiply(std::uint64_t rows, std::uint64_t inner, std::uint64_t cols, LhsAt lhs,
                                   RhsAt rhs) {
  std::vector<std::int64_t> out(rows * cols, 0);
  for (std::uint64_t r = 0; r < rows; ++r)
    for (std::uint64_t c = 0; c < cols; ++c) {
      std::int64_t acc = 0;
      for (std::uint64_t i = 0; i < inner; ++i) acc += lhs(r, i) * rhs(i, c);
      out[r * cols + c] = acc;
    }
  return out;
}

std::vector<Integer> apply(const std::vector<std::int64_t>& m, std::uint64_t rows, std::uint64_t cols,
                           std::span<const Integer> x) {
  std::vector<Integer> out(rows, Integer(0));
  for (std::uint64_t r = 0; r < rows; ++r)
    for (std::uint64_t c = 0; c < cols; ++c)
      if (m[r * cols + c] != 0) out[r] += m[r * cols + c] * x[c];
  return out;
}

}  // namespace

WilsonReport verify_wilson_identities(const WeightVector& weights, unsigned j, unsigned k, DenseBudget budget) {
  const unsigned n = weights.n();
  check_dims(n, j, k);
  if (k == 0) throw std::invalid_argument("Wilson identities need k >= 1");
  const long long nn = n, jj = j, kk = k;
  const auto x = weights.scaled();

  const StructureMatrix w_jk(StructureKind::inclusion, n, j, k, budget);
  const StructureMatrix w_1k(StructureKind::inclusion, n, 1, k, budget);
  const StructureMatrix w_1j(StructureKind::inclusion, n, 1, j, budget);
  const StructureMatrix kn_jk(StructureKind::kneser, n, j, k, budget);
  const StructureMatrix kn_1k(StructureKind::kneser, n, 1, k, budget);
  const std::uint64_t nj = w_jk.rows(), nk = w_jk.cols();
  check_budget(nk, nj, budget, "Kneser contraction");

  WilsonReport report;
  report.n = n;
  report.j = j;
  report.k = k;

  // W_jk W_1k^T : (nj x n)
  const auto jk_1k = multiply(nj, nk, n, [&](auto r, auto i) { return std::int64_t{w_jk(r, i)}; },
                              [&](auto i, auto c) { return std::int64_t{w_1k(c, i)}; });
  const auto j_masks = subset_masks(n, j);
  {
    IdentityCheck check = named("W_jk W_1k^T entries are C(n-j,k-j) on T in S, else C(n-j-1,k-j-1)");
    const Integer inside = binomial(nn - jj, kk - jj);
    const Integer outside = binomial(nn - jj - 1, kk - jj - 1);
    for (std::uint64_t r = 0; r < nj; ++r)
      for (unsigned t = 0; t < n; ++t) {
        const bool contained = (j_masks[r] >> t) & 1U;
        record(check, r, t, contained ? inside : outside, Integer(jk_1k[r * n + t]));
      }
    report.checks.push_back(std::move(check));
  }
  {
    IdentityCheck check = named("W_jk W_1k^T x = C(n-j-1,k-j) W_1j^T x");
    const auto lhs = apply(jk_1k, nj, n, x);
    const Integer coeff = binomial(nn - jj - 1, kk - jj);
    for (std::uint64_t r = 0; r < nj; ++r) {
      Integer w1j_x = 0;
      for (unsigned t = 0; t < n; ++t)
        if (w_1j(t, r)) w1j_x += x[t];
      record(check, r, 0, coeff * w1j_x, lhs[r]);
    }
    report.checks.push_back(std::move(check));
  }
  // (Kneser_jk)^T W_1j^T : (nk x n)
  const auto kn_1j = multiply(nk, nj, n, [&](auto r, auto i) { return std::int64_t{kn_jk(i, r)}; },
                              [&](auto i, auto c) { return std::int64_t{w_1j(c, i)}; });
  const Integer contraction = binomial(nn - kk - 1, jj - 1);
  {
    IdentityCheck check = named("Kneser_jk^T W_1j^T = C(n-k-1,j-1) Kneser_1k^T");
    for (std::uint64_t r = 0; r < nk; ++r)
      for (unsigned t = 0; t < n; ++t) record(check, r, t, contraction * kn_1k(t, r), Integer(kn_1j[r * n + t]));
    report.checks.push_back(std::move(check));
  }
  {
    IdentityCheck check = named("Kneser_jk^T W_1j^T x = -C(n-k-1,j-1) W_1k^T x");
    const auto lhs = apply(kn_1j, nk, n, x);
    for (std::uint64_t r = 0; r < nk; ++r) {
      Integer b = 0;
      for (unsigned t = 0; t < n; ++t)
        if (w_1k(t, r)) b += x[t];
      record(check, r, 0, -contraction * b, lhs[r]);
    }
    report.checks.push_back(std::move(check));
  }
  {
    IdentityCheck check = named("C(n-j-1,k-j) C(n-k-1,j-1) = C(k-1,j-1) C(n-j-1,k-1)");
    record(check, 0, 0, binomial(kk - 1, jj - 1) * binomial(nn - jj - 1, kk - 1),
           binomial(nn - jj - 1, kk - jj) * contraction);
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace mms
