#include "mms/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mms {

namespace {
const Integer kZero = 0;
}

BinomialTable::BinomialTable(unsigned n_max) : n_max_(n_max), rows_(n_max + 1) {
  for (unsigned a = 0; a <= n_max; ++a) {
    auto& row = rows_[a];
    row.resize(a + 1);
    row[0] = 1;
    row[a] = 1;
    for (unsigned b = 1; b < a; ++b) {
      row[b] = rows_[a - 1][b - 1] + rows_[a - 1][b];
    }
  }
}

const Integer& BinomialTable::operator()(long long a, long long b) const {
  if (a < 0 || b < 0 || b > a) return kZero;
  if (a > static_cast<long long>(n_max_)) {
    throw std::out_of_range("binomial table built for n_max=" + std::to_string(n_max_) +
                            ", queried a=" + std::to_string(a));
  }
  return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

Integer binomial(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Integer result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

std::uint64_t binomial_u64(unsigned a, unsigned b) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  unsigned __int128 result = 1;
  for (unsigned i = 1; i <= b; ++i) {
    result = result * (a - b + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("C(" + std::to_string(a) + "," + std::to_string(b) +
                                ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

KSubset::KSubset(unsigned n, std::vector<unsigned> indices) : n_(n), indices_(std::move(indices)) {
  if (indices_.empty() || indices_.size() > n_) {
    throw std::invalid_argument("k-subset needs 1 <= k <= n");
  }
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] >= n_) {
      throw std::invalid_argument("k-subset index " + std::to_string(indices_[i]) +
                                  " outside [0," + std::to_string(n_) + ")");
    }
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw std::invalid_argument("k-subset indices must be strictly increasing");
    }
  }
}

bool KSubset::contains(unsigned index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

unsigned KSubset::intersection_size(const KSubset& other) const {
  unsigned count = 0;
  auto a = indices_.begin();
  auto b = other.indices_.begin();
  while (a != indices_.end() && b != other.indices_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

std::uint64_t KSubset::mask() const {
  if (n_ > 64) throw std::out_of_range("subset masks need n <= 64");
  std::uint64_t m = 0;
  for (unsigned i : indices_) m |= std::uint64_t{1} << i;
  return m;
}

std::string KSubset::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) out << ',';
    out << indices_[i];
  }
  out << '}';
  return out.str();
}

std::uint64_t rank_colex(std::span<const unsigned> sorted_indices) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted_indices.size(); ++i) {
    rank += binomial_u64(sorted_indices[i], static_cast<unsigned>(i + 1));
  }
  return rank;
}

std::uint64_t rank_colex(const KSubset& subset) { return rank_colex(subset.indices()); }

KSubset unrank_colex(std::uint64_t rank, unsigned k, unsigned n) {
  if (k == 0 || k > n || rank >= binomial_u64(n, k)) {
    throw std::out_of_range("colex rank " + std::to_string(rank) + " out of range for C(" +
                            std::to_string(n) + "," + std::to_string(k) + ")");
  }
  std::vector<unsigned> indices(k);
  unsigned upper = n;
  for (unsigned i = k; i >= 1; --i) {
    // Largest c < upper with C(c, i) <= rank.
    unsigned c = upper - 1;
    while (binomial_u64(c, i) > rank) --c;
    indices[i - 1] = c;
    rank -= binomial_u64(c, i);
    upper = c;
  }
  return KSubset(n, std::move(indices));
}

bool next_colex(std::span<unsigned> subset, unsigned n) {
  const std::size_t k = subset.size();
  for (std::size_t i = 0; i < k; ++i) {
    const unsigned limit = i + 1 < k ? subset[i + 1] : n;
    if (subset[i] + 1 < limit) {
      ++subset[i];
      for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<unsigned>(j);
      return true;
    }
  }
  return false;
}

void for_each_colex_range(unsigned n, unsigned k, std::uint64_t begin, std::uint64_t end,
                          const std::function<void(std::span<const unsigned>)>& visit) {
  if (begin >= end) return;
  KSubset first = unrank_colex(begin, k, n);
  std::vector<unsigned> current(first.indices().begin(), first.indices().end());
  for (std::uint64_t r = begin; r < end; ++r) {
    visit(current);
    if (r + 1 < end && !next_colex(current, n)) break;
  }
}

// Revolving-door generation (Knuth, TAOCP 7.2.1.3, Algorithm R), with c_
// holding c_1 < ... < c_k at positions 1..k.
RevolvingDoor::RevolvingDoor(unsigned n, unsigned k) : n_(n), k_(k) {
  if (k == 0 || k > n) {
    done_ = true;
    diagnostic_ = "no k-subsets to enumerate for n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                  " (need 1 <= k <= n)";
    k_ = 0;
    c_.assign(2, n);
    return;
  }
  if (n > 64) {
    throw std::out_of_range("revolving-door enumeration supports n <= 64");
  }
  c_.resize(k + 2);
  c_[0] = 0;
  for (unsigned j = 1; j <= k; ++j) {
    c_[j] = j - 1;
    mask_ |= std::uint64_t{1} << (j - 1);
  }
  c_[k + 1] = n;
}

std::optional<Swap> RevolvingDoor::apply(unsigned removed, unsigned added) {
  mask_ &= ~(std::uint64_t{1} << removed);
  mask_ |= std::uint64_t{1} << added;
  return Swap{removed, added};
}

std::optional<Swap> RevolvingDoor::advance() {
  if (done_) return std::nullopt;
  const unsigned t = k_;
  unsigned j = 2;
  bool increase_step = false;
  if (t % 2 == 1) {
    if (c_[1] + 1 < c_[2]) {
      const unsigned old = c_[1]++;
      return apply(old, c_[1]);
    }
  } else {
    if (c_[1] > 0) {
      const unsigned old = c_[1]--;
      return apply(old, c_[1]);
    }
    increase_step = true;
  }
  while (j <= t) {
    if (!increase_step) {
      // c_j = c_{j-1} + 1 here.
      if (c_[j] >= j) {
        const unsigned removed = c_[j];
        c_[j] = c_[j - 1];
        c_[j - 1] = j - 2;
        return apply(removed, j - 2);
      }
      ++j;
      if (j > t) break;
    }
    // c_{j-1} = j - 2 here.
    if (c_[j] + 1 < c_[j + 1]) {
      const unsigned removed = c_[j - 1];
      c_[j - 1] = c_[j];
      ++c_[j];
      return apply(removed, c_[j]);
    }
    ++j;
    increase_step = false;
  }
  done_ = true;
  return std::nullopt;
}

std::uint64_t iterate_ksubsets(
    unsigned n, unsigned k,
    const std::function<void(std::span<const unsigned>, const std::optional<Swap>&)>& visit) {
  RevolvingDoor door(n, k);
  if (!door.valid()) return 0;
  std::uint64_t emitted = 1;
  visit(door.current(), std::nullopt);
  while (auto swap = door.advance()) {
    visit(door.current(), swap);
    ++emitted;
  }
  return emitted;
}

}  // namespace mms
