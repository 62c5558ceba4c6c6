#include "mms/weights.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mms/combinatorics.hpp"
#include "mms/random.hpp"

namespace mms {

std::string to_string(NormalizationMode mode) {
  return mode == NormalizationMode::require_zero_sum ? "require-zero-sum" : "shift-to-zero";
}

NormalizationMode parse_normalization_mode(std::string_view text) {
  if (text == "require-zero-sum") return NormalizationMode::require_zero_sum;
  if (text == "shift-to-zero") return NormalizationMode::shift_to_zero;
  throw std::invalid_argument("unknown normalization mode '" + std::string(text) + "'");
}

WeightVector WeightVector::from_sorted(std::vector<Rational> values, Provenance provenance) {
  if (values.empty()) throw std::invalid_argument("weight vector must be nonempty");
  Rational total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    total += values[i];
    if (i > 0 && values[i] > values[i - 1]) {
      throw std::invalid_argument("weights must be sorted non-increasing (entry " + std::to_string(i) + ")");
    }
  }
  if (total != 0) {
    throw ValidationError("weights must sum to zero, residual " + to_string(total), total);
  }
  WeightVector w;
  w.values_ = std::move(values);
  w.scale_ = common_denominator(w.values_);
  w.scaled_.reserve(w.values_.size());
  for (const Rational& v : w.values_) {
    w.scaled_.push_back(numerator(v) * (w.scale_ / denominator(v)));
  }
  if (provenance.order.empty()) {
    provenance.order.resize(w.values_.size());
    std::iota(provenance.order.begin(), provenance.order.end(), std::size_t{0});
  }
  if (provenance.echo.empty()) provenance.echo = w.to_strings();
  w.provenance_ = std::move(provenance);
  return w;
}

bool WeightVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 0; });
}

std::vector<std::string> WeightVector::to_strings() const {
  std::vector<std::string> out;
  out.reserve(values_.size());
  for (const Rational& v : values_) out.push_back(to_string(v));
  return out;
}

WeightVector normalize(std::span<const Rational> raw, NormalizationMode mode) {
  if (raw.empty()) throw std::invalid_argument("weight list is empty");
  Rational total = 0;
  for (const Rational& v : raw) total += v;

  Provenance prov;
  prov.mode = mode;
  for (const Rational& v : raw) prov.echo.push_back(to_string(v));

  if (mode == NormalizationMode::require_zero_sum && total != 0) {
    throw ValidationError("weights sum to " + to_string(total) + ", expected 0", total);
  }
  if (mode == NormalizationMode::shift_to_zero && total < 0) {
    throw ValidationError("weights sum to " + to_string(total) +
                              ", shift-to-zero needs a nonnegative sum",
                          total);
  }
  const Rational shift = mode == NormalizationMode::shift_to_zero
                             ? Rational(total / static_cast<long long>(raw.size()))
                             : Rational(0);
  prov.shift = shift;

  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return raw[a] > raw[b]; });
  std::vector<Rational> sorted;
  sorted.reserve(raw.size());
  for (std::size_t i : order) sorted.push_back(raw[i] - shift);
  prov.order = std::move(order);
  return WeightVector::from_sorted(std::move(sorted), std::move(prov));
}

namespace {

Rational parse_entry(const nlohmann::json& entry, std::size_t position) {
  try {
    if (entry.is_number_integer()) {
      return entry.is_number_unsigned() ? Rational(entry.get<std::uint64_t>())
                                        : Rational(entry.get<std::int64_t>());
    }
    if (entry.is_string()) return parse_rational(entry.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " at entry " + std::to_string(position), position);
  }
  throw ParseError("entry " + std::to_string(position) + " is not an integer or \"p/q\" string: " +
                       entry.dump(),
                   position);
}

}  // namespace

WeightVector load_weights(std::string_view document, std::string source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("weight document is not valid JSON: ") + e.what(), 0);
  }
  if (!doc.is_object() || !doc.contains("weights") || !doc["weights"].is_array()) {
    throw ParseError("weight document needs a \"weights\" array", 0);
  }
  NormalizationMode mode = NormalizationMode::require_zero_sum;
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw ParseError("\"mode\" must be a string", 0);
    try {
      mode = parse_normalization_mode(doc["mode"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
  }
  const auto& list = doc["weights"];
  if (list.empty()) throw std::invalid_argument("weight list is empty");

  std::vector<Rational> raw;
  std::vector<std::string> echo;
  raw.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    raw.push_back(parse_entry(list[i], i + 1));
    echo.push_back(list[i].is_string() ? list[i].get<std::string>() : list[i].dump());
  }
  WeightVector w = normalize(raw, mode);
  w.provenance().source = std::move(source);
  w.provenance().echo = std::move(echo);
  return w;
}

WeightVector load_weights_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open weight file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_weights(buffer.str(), "file:" + path);
}

WeightVector gen_star(unsigned n) {
  if (n < 2) throw std::invalid_argument("star vector needs n >= 2");
  std::vector<Rational> values(n, Rational(-1));
  values[0] = static_cast<long long>(n) - 1;
  Provenance prov;
  prov.source = "star";
  return WeightVector::from_sorted(std::move(values), std::move(prov));
}

WeightVector gen_random_zero_sum(unsigned n, std::uint64_t magnitude, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random vector needs n >= 2");
  if (magnitude < 1) throw std::invalid_argument("random vector needs magnitude >= 1");
  std::mt19937_64 rng(seed);
  const auto m = static_cast<std::int64_t>(magnitude);
  std::vector<Rational> raw;
  raw.reserve(n);
  Integer partial = 0;
  for (unsigned i = 0; i + 1 < n; ++i) {
    const std::int64_t draw = uniform_int(rng, -m, m);
    partial += draw;
    raw.emplace_back(draw);
  }
  raw.emplace_back(-partial);
  WeightVector w = normalize(raw, NormalizationMode::require_zero_sum);
  w.provenance().source = "random";
  w.provenance().seed = seed;
  return w;
}

std::string to_weight_document(const WeightVector& weights) {
  nlohmann::ordered_json doc;
  doc["weights"] = weights.to_strings();
  doc["mode"] = to_string(NormalizationMode::require_zero_sum);
  return doc.dump(2) + "\n";
}

namespace {

template <typename Value, typename Entries>
void fill_subset_sums(std::span<const Value> values, unsigned n, unsigned k, Entries& entries) {
  Value running = 0;
  iterate_ksubsets(n, k, [&](std::span<const unsigned> subset, const std::optional<Swap>& swap) {
    if (!swap) {
      for (unsigned i : subset) running += values[i];
    } else {
      running -= values[swap->removed];
      running += values[swap->added];
    }
    entries[rank_colex(subset)] = running;
  });
}

void check_k(const WeightVector& weights, unsigned k) {
  if (k < 1 || k > weights.n()) {
    throw std::invalid_argument("subset size k=" + std::to_string(k) + " outside [1," +
                                std::to_string(weights.n()) + "]");
  }
}

}  // namespace

SubsetSumVector subset_sums(const WeightVector& weights, unsigned k) {
  check_k(weights, k);
  SubsetSumVector b;
  b.n = weights.n();
  b.k = k;
  b.entries.resize(binomial_u64(b.n, k));
  fill_subset_sums<Rational>(weights.values(), b.n, k, b.entries);
  return b;
}

std::vector<Integer> scaled_subset_sums(const WeightVector& weights, unsigned k) {
  check_k(weights, k);
  std::vector<Integer> entries(binomial_u64(weights.n(), k));
  fill_subset_sums<Integer>(weights.scaled(), weights.n(), k, entries);
  return entries;
}

}  // namespace mms
