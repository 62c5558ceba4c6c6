#include "mms/counting.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mms {

// Restriction ---------------------------------------------------------------

namespace {

std::uint64_t mask_of(const std::vector<unsigned>& indices) {
  std::uint64_t m = 0;
  for (unsigned i : indices) {
    if (i >= 64) throw std::invalid_argument("restriction index " + std::to_string(i) + " exceeds 63");
    m |= std::uint64_t{1} << i;
  }
  return m;
}

const char* kind_name(Restriction::Kind kind) {
  switch (kind) {
    case Restriction::Kind::contains:
      return "contains";
    case Restriction::Kind::intersects:
      return "intersects";
    case Restriction::Kind::disjoint:
      return "disjoint";
  }
  return "?";
}

}  // namespace

Restriction& Restriction::add(Atom atom) {
  if (atom.indices.empty()) throw std::invalid_argument("restriction atom needs at least one index");
  std::sort(atom.indices.begin(), atom.indices.end());
  atom.indices.erase(std::unique(atom.indices.begin(), atom.indices.end()), atom.indices.end());
  compiled_.push_back({atom.kind, mask_of(atom.indices)});
  atoms_.push_back(std::move(atom));
  return *this;
}

Restriction& Restriction::contains(unsigned index) { return add({Kind::contains, {index}}); }
Restriction& Restriction::intersects(std::vector<unsigned> indices) {
  return add({Kind::intersects, std::move(indices)});
}
Restriction& Restriction::disjoint(std::vector<unsigned> indices) {
  return add({Kind::disjoint, std::move(indices)});
}

Restriction::Atom Restriction::parse_atom(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("restriction '" + std::string(text) + "' needs the form kind:i,j,...");
  }
  const std::string_view head = text.substr(0, colon);
  Atom atom;
  if (head == "contains") {
    atom.kind = Kind::contains;
  } else if (head == "intersects") {
    atom.kind = Kind::intersects;
  } else if (head == "disjoint") {
    atom.kind = Kind::disjoint;
  } else {
    throw std::invalid_argument("unknown restriction kind '" + std::string(head) + "'");
  }
  std::string rest(text.substr(colon + 1));
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad index '" + item + "' in restriction '" + std::string(text) + "'");
    }
    atom.indices.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (atom.indices.empty()) throw std::invalid_argument("restriction '" + std::string(text) + "' has no indices");
  if (atom.kind == Kind::contains && atom.indices.size() != 1) {
    throw std::invalid_argument("contains takes exactly one index");
  }
  return atom;
}

void Restriction::validate(unsigned n) const {
  for (const Atom& atom : atoms_) {
    for (unsigned i : atom.indices) {
      if (i >= n) {
        throw std::invalid_argument("restriction " + std::string(kind_name(atom.kind)) + " references index " +
                                    std::to_string(i) + " but n=" + std::to_string(n));
      }
    }
  }
}

bool Restriction::admits(std::uint64_t subset_mask) const {
  for (const Compiled& atom : compiled_) {
    const bool hit = (subset_mask & atom.mask) != 0;
    switch (atom.kind) {
      case Kind::contains:
      case Kind::intersects:
        if (!hit) return false;
        break;
      case Kind::disjoint:
        if (hit) return false;
        break;
    }
  }
  return true;
}

std::string Restriction::describe() const {
  if (atoms_.empty()) return "none";
  std::ostringstream out;
  for (std::size_t a = 0; a < atoms_.size(); ++a) {
    if (a) out << " & ";
    out << kind_name(atoms_[a].kind) << ':';
    for (std::size_t i = 0; i < atoms_[a].indices.size(); ++i) {
      if (i) out << ',';
      out << atoms_[a].indices[i];
    }
  }
  return out.str();
}

// Enumeration engine --------------------------------------------------------

namespace {

struct Tally {
  std::uint64_t admitted = 0;
  std::uint64_t nonnegative = 0;
};

template <typename Value>
Tally tally_door(std::span<const Value> values, unsigned n, unsigned k, const Restriction& restriction) {
  Tally t;
  Value running = 0;
  RevolvingDoor door(n, k);
  for (unsigned i : door.current()) running += values[i];
  do {
    if (restriction.admits(door.mask())) {
      ++t.admitted;
      if (running >= 0) ++t.nonnegative;
    }
    const auto swap = door.advance();
    if (!swap) break;
    running -= values[swap->removed];
    running += values[swap->added];
  } while (true);
  return t;
}

template <typename Value>
Tally tally_range(std::span<const Value> values, unsigned n, unsigned k, std::uint64_t begin,
                  std::uint64_t end, const Restriction& restriction) {
  Tally t;
  for_each_colex_range(n, k, begin, end, [&](std::span<const unsigned> subset) {
    std::uint64_t mask = 0;
    for (unsigned i : subset) mask |= std::uint64_t{1} << i;
    if (!restriction.admits(mask)) return;
    ++t.admitted;
    Value sum = 0;
    for (unsigned i : subset) sum += values[i];
    if (sum >= 0) ++t.nonnegative;
  });
  return t;
}

template <typename Value>
Tally tally(std::span<const Value> values, unsigned n, unsigned k, const Restriction& restriction,
            const ExecutionOptions& exec) {
  const std::uint64_t total = binomial_u64(n, k);
  if (exec.threads <= 1) return tally_door(values, n, k, restriction);
  std::vector<Tally> parts(chunk_count(total, exec.threads));
  parallel_chunks(total, exec.threads, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    parts[chunk] = tally_range(values, n, k, begin, end, restriction);
  });
  Tally sum;
  for (const Tally& p : parts) {
    sum.admitted += p.admitted;
    sum.nonnegative += p.nonnegative;
  }
  return sum;
}

void check_enumeration_args(const WeightVector& weights, unsigned k, const Restriction& restriction) {
  const unsigned n = weights.n();
  if (k < 1 || k > n) {
    throw std::invalid_argument("k=" + std::to_string(k) + " outside [1," + std::to_string(n) + "]");
  }
  if (n > 64) throw std::invalid_argument("enumeration engine supports n <= 64");
  restriction.validate(n);
}

Tally run_tally(const WeightVector& weights, unsigned k, const Restriction& restriction,
                const ExecutionOptions& exec) {
  const auto scaled = weights.scaled();
  Integer largest = 0;
  for (const Integer& v : scaled) largest = std::max(largest, Integer(abs(v)));
  if (fits_int64(largest * weights.n())) {
    std::vector<std::int64_t> fast;
    fast.reserve(scaled.size());
    for (const Integer& v : scaled) fast.push_back(static_cast<std::int64_t>(v));
    return tally<std::int64_t>(fast, weights.n(), k, restriction, exec);
  }
  return tally<Integer>(scaled, weights.n(), k, restriction, exec);
}

}  // namespace

Integer count_nonnegative_raw(const WeightVector& weights, unsigned k, const Restriction& restriction,
                              const ExecutionOptions& exec) {
  check_enumeration_args(weights, k, restriction);
  return run_tally(weights, k, restriction, exec).nonnegative;
}

CountReport count_nonnegative(const WeightVector& weights, unsigned k, const Restriction& restriction,
                              const ExecutionOptions& exec) {
  check_enumeration_args(weights, k, restriction);
  const Tally t = run_tally(weights, k, restriction, exec);

  CountReport report;
  report.n = weights.n();
  report.k = k;
  report.total_checked = t.admitted;
  report.nonnegative_count = t.nonnegative;
  report.restriction = restriction;
  if (!restriction.empty()) return report;

  const Integer bound = binomial(report.n - 1, k - 1);
  report.bound_comparisons.push_back({"C(n-1,k-1)", bound, report.nonnegative_count >= bound});
  if (report.nonnegative_count == bound) {
    // Equal size, so the family is the star iff every subset through index 0
    // is nonnegative.
    const Integer on_top = run_tally(weights, k, Restriction{}.contains(0), exec).nonnegative;
    StarEquality eq{on_top == bound, {}};
    if (eq.is_star) {
      eq.witness = "family equals the star on index 0";
    } else {
      const auto scaled = weights.scaled();
      for_each_colex_range(report.n, k, 0, binomial_u64(report.n, k), [&](std::span<const unsigned> s) {
        if (!eq.witness.empty() || s.empty()) return;
        if (std::find(s.begin(), s.end(), 0u) == s.end()) return;
        Integer sum = 0;
        for (unsigned i : s) sum += scaled[i];
        if (sum < 0) {
          std::vector<unsigned> idx(s.begin(), s.end());
          eq.witness = "negative subset through index 0: " + KSubset(report.n, idx).to_string();
        }
      });
    }
    report.star_equality = eq;
  }
  return report;
}

// Multiplicity patterns and the DP engine ----------------------------------

MultiplicityPattern MultiplicityPattern::from_parts(std::vector<Part> parts) {
  if (parts.empty()) throw std::invalid_argument("pattern needs at least one part");
  Rational total = 0;
  unsigned n = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].multiplicity == 0) throw std::invalid_argument("pattern multiplicities must be >= 1");
    if (i > 0 && !(parts[i].value < parts[i - 1].value)) {
      throw std::invalid_argument("pattern values must be strictly decreasing");
    }
    total += parts[i].value * parts[i].multiplicity;
    n += parts[i].multiplicity;
  }
  if (total != 0) throw ValidationError("pattern must have zero weighted sum, residual " + mms::to_string(total), total);
  MultiplicityPattern p;
  p.parts_ = std::move(parts);
  p.n_ = n;
  return p;
}

MultiplicityPattern MultiplicityPattern::from_weights(const WeightVector& weights) {
  std::vector<Part> parts;
  for (const Rational& v : weights.values()) {
    if (!parts.empty() && parts.back().value == v) {
      ++parts.back().multiplicity;
    } else {
      parts.push_back({v, 1});
    }
  }
  return from_parts(std::move(parts));
}

WeightVector MultiplicityPattern::expand() const {
  std::vector<Rational> values;
  values.reserve(n_);
  for (const Part& p : parts_) values.insert(values.end(), p.multiplicity, p.value);
  Provenance prov;
  prov.source = "pattern " + to_string();
  return WeightVector::from_sorted(std::move(values), std::move(prov));
}

std::string MultiplicityPattern::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << '(' << mms::to_string(parts_[i].value) << ',' << parts_[i].multiplicity << ')';
  }
  out << ')';
  return out.str();
}

namespace {

struct DpState {
  const std::vector<Integer>* values;
  const std::vector<unsigned>* mults;
  std::vector<unsigned> tail_capacity;  // sum of multiplicities from i on
  const BinomialTable* binom;
  bool reverse;
  Integer total = 0;
};

void dp_recurse(DpState& st, std::size_t i, unsigned remaining, const Integer& sum, const Integer& weight) {
  const auto& mults = *st.mults;
  if (i == mults.size()) {
    if (remaining == 0 && sum >= 0) st.total += weight;
    return;
  }
  const unsigned rest = i + 1 < mults.size() ? st.tail_capacity[i + 1] : 0;
  const unsigned hi = std::min(mults[i], remaining);
  const unsigned lo = remaining > rest ? remaining - rest : 0;
  if (lo > hi) return;
  for (unsigned step = 0; step <= hi - lo; ++step) {
    const unsigned c = st.reverse ? hi - step : lo + step;
    dp_recurse(st, i + 1, remaining - c, sum + (*st.values)[i] * c, weight * (*st.binom)(mults[i], c));
  }
}

}  // namespace

Integer count_nonnegative_dp(const MultiplicityPattern& pattern, unsigned k, CompositionOrder order) {
  if (k > pattern.n()) {
    throw std::invalid_argument("k=" + std::to_string(k) + " exceeds pattern size n=" + std::to_string(pattern.n()));
  }
  std::vector<Rational> raw;
  std::vector<unsigned> mults;
  for (const auto& part : pattern.parts()) {
    raw.push_back(part.value);
    mults.push_back(part.multiplicity);
  }
  const Integer scale = common_denominator(raw);
  std::vector<Integer> values;
  for (const Rational& v : raw) values.push_back(numerator(v) * (scale / denominator(v)));

  const BinomialTable binom(*std::max_element(mults.begin(), mults.end()));
  DpState st{&values, &mults, std::vector<unsigned>(mults.size()), &binom,
             order == CompositionOrder::reverse_lexicographic};
  unsigned acc = 0;
  for (std::size_t i = mults.size(); i-- > 0;) {
    acc += mults[i];
    st.tail_capacity[i] = acc;
  }
  dp_recurse(st, 0, k, Integer(0), Integer(1));
  return st.total;
}

Integer family_size_Fi(unsigned n, unsigned k, unsigned i) {
  if (k < 1 || n < 2 * k) {
    throw std::domain_error("family size needs n >= 2k (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  if (i < 2 || i > n) {
    throw std::domain_error("family index i=" + std::to_string(i) + " outside [2," + std::to_string(n) + "]");
  }
  const long long nn = n;
  const long long kk = k;
  if (i <= 2 * k - 1) {
    return binomial(nn - 2, kk - 1) - binomial(nn - kk - 1, kk - 1);
  }
  return binomial(nn - 2, kk - 1) - 2 * binomial(nn - kk - 1, kk - 1) + binomial(nn - 2 * kk, kk - 1);
}

}  // namespace mms
