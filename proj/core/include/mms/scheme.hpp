#ifndef MMS_SCHEME_HPP
#define MMS_SCHEME_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mms/combinatorics.hpp"
#include "mms/exact.hpp"
#include "mms/weights.hpp"

namespace mms {

/// Cap on densely materialized matrix entries.
struct DenseBudget {
  std::uint64_t max_entries = 10'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StructureKind { inclusion, kneser };

std::string to_string(StructureKind kind);

/// 0/1 matrix between j-subsets (rows) and k-subsets (columns) of [0, n),
/// both in colex order. Inclusion: Y subset of S. Kneser: Y and S disjoint.
class StructureMatrix {
 public:
  StructureMatrix(StructureKind kind, unsigned n, unsigned j, unsigned k, DenseBudget budget = {});

  StructureKind kind() const noexcept { return kind_; }
  unsigned n() const noexcept { return n_; }
  unsigned j() const noexcept { return j_; }
  unsigned k() const noexcept { return k_; }
  std::uint64_t rows() const noexcept { return rows_; }
  std::uint64_t cols() const noexcept { return cols_; }

  std::uint8_t operator()(std::uint64_t row, std::uint64_t col) const {
    return entries_[row * cols_ + col];
  }
  std::vector<std::uint64_t> row_sums() const;
  std::vector<std::uint64_t> col_sums() const;

 private:
  StructureKind kind_;
  unsigned n_, j_, k_;
  std::uint64_t rows_, cols_;
  std::vector<std::uint8_t> entries_;
};

StructureMatrix build_structure_matrix(StructureKind kind, unsigned n, unsigned j, unsigned k,
                                       DenseBudget budget = {});

/// Colex-ordered masks of every r-subset of [0, n) (r = 0 gives {0}).
std::vector<std::uint64_t> subset_masks(unsigned n, unsigned r);

/// B_j on k-subsets of [0, n), held by its closed form C(k - |S n T|, j).
class BoseMesnerOperator {
 public:
  BoseMesnerOperator(unsigned n, unsigned j, unsigned k);

  unsigned n() const noexcept { return n_; }
  unsigned j() const noexcept { return j_; }
  unsigned k() const noexcept { return k_; }

  const Integer& entry(const KSubset& s, const KSubset& t) const;
  const Integer& entry_by_overlap(unsigned overlap) const { return by_overlap_.at(overlap); }

  /// Row S of B_j dotted with `b` (indexed by colex rank); matrix-free.
  Integer row_dot(std::uint64_t row_mask, std::span<const Integer> b) const;

  /// Dense materialization in colex order.
  std::vector<Integer> dense(DenseBudget budget = {}) const;

 private:
  unsigned n_, j_, k_;
  std::vector<Integer> by_overlap_;
  std::vector<std::uint64_t> column_masks_;
};

/// C(k - |S n T|, j); throws std::invalid_argument on |S| != |T| or j > k.
Integer bose_mesner_entry(const KSubset& s, const KSubset& t, unsigned j);

/// -C(k-1, j-1) C(n-j-1, k-1), with C(., -1) = 0 at j = 0.
Integer wilson_eigenvalue(unsigned n, unsigned j, unsigned k);

struct Mismatch {
  std::uint64_t row;
  std::uint64_t col;
  Integer expected;
  Integer actual;
};

struct FactorizationReport {
  unsigned n = 0, j = 0, k = 0;
  std::uint64_t entries_checked = 0;
  std::uint64_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;  // first few only
  bool symmetric = true;
  bool ok() const { return mismatch_count == 0 && symmetric; }
};

/// Multiplies (Kneser_jk)^T by inclusion W_jk and compares with the closed
/// form entry-wise.
FactorizationReport verify_factorization(unsigned n, unsigned j, unsigned k, DenseBudget budget = {});

struct EigenvectorReport {
  unsigned n = 0, j = 0, k = 0;
  Integer eigenvalue = 0;
  std::uint64_t entries_checked = 0;
  std::uint64_t mismatch_count = 0;
  std::optional<Mismatch> first_mismatch;  // row = colex rank, values scaled by D
  bool b_nonzero = false;
  bool ok() const { return mismatch_count == 0 && b_nonzero; }
};

/// Checks B_j b = lambda b exactly, b = subset sums of `weights`.
/// Throws std::invalid_argument for the zero vector or bad (j, k).
EigenvectorReport verify_eigenvector(const WeightVector& weights, unsigned j, unsigned k);

struct IdentityCheck {
  std::string name;
  std::uint64_t entries_checked = 0;
  std::uint64_t mismatch_count = 0;
  std::optional<Mismatch> first_mismatch;
  bool ok() const { return mismatch_count == 0; }
};

struct WilsonReport {
  unsigned n = 0, j = 0, k = 0;
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

/// Dense checks of the identities behind the eigenvector lemma:
///  - entries of W_jk W_1k^T take C(n-j, k-j) on T in S, else C(n-j-1, k-j-1);
///  - W_jk W_1k^T x = C(n-j-1, k-j) W_1j^T x;
///  - (Kneser_jk)^T W_1j^T = C(n-k-1, j-1) (Kneser_1k)^T entry-wise, and
///    (Kneser_jk)^T W_1j^T x = -C(n-k-1, j-1) W_1k^T x.
WilsonReport verify_wilson_identities(const WeightVector& weights, unsigned j, unsigned k,
                                      DenseBudget budget = {});

}  // namespace mms

#endif  // MMS_SCHEME_HPP
