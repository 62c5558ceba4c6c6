#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mms/combinatorics.hpp"
#include "mms/counting.hpp"
#include "mms/lemmas.hpp"
#include "mms/scheme.hpp"
#include "mms/search.hpp"
#include "mms/weights.hpp"

namespace mms::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  // weight source
  std::string weights_path;
  bool star = false;
  bool random = false;
  unsigned n = 0;
  std::uint64_t magnitude = 10;
  // shared
  unsigned k = 0;
  unsigned j = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;
  std::string format = "text";
  unsigned threads = 1;
  // count
  std::vector<std::string> restrictions;
  // verify
  std::string lemma;
  std::string subset;
  // spectrum
  std::string kind = "bose-mesner";
  std::uint64_t budget = DenseBudget{}.max_entries;
  // search
  bool counterexample = false;
  unsigned r = 0;
  int value_range = 0;
  unsigned max_distinct = 2;
  // gen
  std::string output;
};

// Rendering ------------------------------------------------------------------

Json str(const Integer& v) { return to_string(v); }
Json str(const Rational& v) { return to_string(v); }

Json subset_json(std::span<const unsigned> indices) {
  Json arr = Json::array();
  for (unsigned i : indices) arr.push_back(i);
  return arr;
}

Json provenance_json(const WeightVector& w) {
  const Provenance& p = w.provenance();
  Json j;
  j["source"] = p.source;
  j["n"] = w.n();
  if (p.seed) j["seed"] = *p.seed;
  j["mode"] = to_string(p.mode);
  j["shift"] = str(p.shift);
  j["echo"] = p.echo;
  j["weights"] = w.to_strings();
  return j;
}

Json count_json(const CountReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["restriction"] = r.restriction.describe();
  j["total_checked"] = str(r.total_checked);
  j["nonnegative_count"] = str(r.nonnegative_count);
  Json bounds = Json::array();
  for (const auto& b : r.bound_comparisons) {
    bounds.push_back({{"bound", b.name}, {"value", str(b.value)}, {"satisfied", b.satisfied}});
  }
  j["bound_comparisons"] = bounds;
  if (r.star_equality) {
    j["star_equality"] = {{"is_star", r.star_equality->is_star}, {"witness", r.star_equality->witness}};
  } else {
    j["star_equality"] = nullptr;
  }
  return j;
}

Json lemma_json(const LemmaReport& r) {
  Json j;
  j["lemma"] = r.lemma;
  j["n"] = r.n;
  j["k"] = r.k;
  Json pre = Json::array();
  for (const auto& p : r.preconditions) pre.push_back({{"name", p.name}, {"value", p.value}, {"satisfied", p.satisfied}});
  j["preconditions"] = pre;
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json cj;
    cj["description"] = c.description;
    if (c.vacuous) {
      cj["vacuous"] = true;
      cj["note"] = c.note;
    } else {
      cj["lhs"] = str(c.lhs);
      cj["relation"] = to_string(c.relation);
      cj["rhs"] = str(c.rhs);
    }
    cj["satisfied"] = c.satisfied;
    claims.push_back(cj);
  }
  j["claims"] = claims;
  j["verdict"] = to_string(r.verdict);
  if (r.witness) j["witness"] = *r.witness;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json partition_json(const PartitionReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["m"] = r.m;
  j["r"] = r.r;
  j["U"] = subset_json(r.u_indices);
  j["U_sum"] = str(r.u_sum);
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["zero_trials"] = r.zero_trials;
  j["min_Z"] = r.min_z;
  j["max_Z"] = r.max_z;
  j["family_size"] = str(r.family_size);
  j["expected_Z"] = str(r.expected_z);
  j["empirical_mean"] = str(r.empirical_mean);
  std::ostringstream se;
  se.precision(12);
  se << r.standard_error;
  j["standard_error"] = se.str();
  j["tolerance_sigmas"] = r.tolerance_sigmas;
  j["mean_within_tolerance"] = r.mean_within_tolerance;
  if (r.first_zero_partition) j["first_zero_partition"] = subset_json(*r.first_zero_partition);
  j["verdict"] = to_string(r.verdict);
  return j;
}

Json mismatch_json(const std::optional<Mismatch>& m) {
  if (!m) return nullptr;
  return {{"row", m->row}, {"col", m->col}, {"expected", str(m->expected)}, {"actual", str(m->actual)}};
}

Json eigen_json(const EigenvectorReport& r, const Integer& scale) {
  Json j;
  j["n"] = r.n;
  j["j"] = r.j;
  j["k"] = r.k;
  j["eigenvalue"] = str(r.eigenvalue);
  j["entries_checked"] = r.entries_checked;
  j["mismatches"] = r.mismatch_count;
  j["b_nonzero"] = r.b_nonzero;
  j["scale"] = str(scale);
  j["first_mismatch"] = mismatch_json(r.first_mismatch);
  j["verdict"] = r.ok() ? "verified" : "violated";
  return j;
}

Json wilson_json(const WilsonReport& r) {
  Json j;
  j["n"] = r.n;
  j["j"] = r.j;
  j["k"] = r.k;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"identity", c.name},
                      {"entries_checked", c.entries_checked},
                      {"mismatches", c.mismatch_count},
                      {"first_mismatch", mismatch_json(c.first_mismatch)},
                      {"satisfied", c.ok()}});
  }
  j["checks"] = checks;
  j["verdict"] = r.ok() ? "verified" : "violated";
  return j;
}

Json factorization_json(const FactorizationReport& r) {
  Json j;
  j["entries_checked"] = r.entries_checked;
  j["mismatches"] = r.mismatch_count;
  j["symmetric"] = r.symmetric;
  Json list = Json::array();
  for (const auto& m : r.mismatches) list.push_back(mismatch_json(m));
  j["first_mismatches"] = list;
  j["satisfied"] = r.ok();
  return j;
}

Json pattern_json(const MultiplicityPattern& p) {
  Json arr = Json::array();
  for (const auto& part : p.parts()) arr.push_back({{"value", str(part.value)}, {"multiplicity", part.multiplicity}});
  return arr;
}

Json search_json(const SearchReport& r) {
  Json j;
  j["n"] = r.space.n;
  j["k"] = r.space.k;
  j["max_distinct"] = r.space.max_distinct;
  j["value_range"] = r.space.value_range;
  j["grid_estimate"] = r.grid_estimate;
  j["candidates_examined"] = r.candidates_examined;
  j["best_pattern"] = pattern_json(r.best);
  j["best_count"] = str(r.best_count);
  j["bound"] = str(r.bound);
  j["violation"] = r.violation;
  j["recount_dp_reverse"] = str(r.recount_dp_reverse);
  j["recount_enumeration"] = r.recount_enumeration ? Json(str(*r.recount_enumeration)) : Json(nullptr);
  j["consistent"] = r.consistent;
  j["outcome"] = r.outcome;
  return j;
}

void render_text(std::ostream& out, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto is_flat = [](const Json& arr) {
    return std::all_of(arr.begin(), arr.end(), [](const Json& e) { return !e.is_structured(); });
  };
  for (auto it = value.begin(); it != value.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render_text(out, v, indent + 2);
    } else if (v.is_array() && !is_flat(v)) {
      out << pad << it.key() << ":\n";
      for (const Json& e : v) {
        if (e.is_object()) {
          out << pad << "  -\n";
          render_text(out, e, indent + 4);
        } else {
          out << pad << "  - " << (e.is_array() ? e.dump() : scalar(e)) << '\n';
        }
      }
    } else if (v.is_array()) {
      out << pad << it.key() << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
      out << "]\n";
    } else {
      out << pad << it.key() << ": " << scalar(v) << '\n';
    }
  }
}

// Inputs ---------------------------------------------------------------------

WeightVector resolve_weights(const Options& o) {
  const int sources = (o.weights_path.empty() ? 0 : 1) + (o.star ? 1 : 0) + (o.random ? 1 : 0);
  if (sources != 1) throw UsageError("give exactly one of --weights PATH, --star --n N, --random --n N");
  if (!o.weights_path.empty()) return load_weights_file(o.weights_path);
  if (o.n == 0) throw UsageError("--star and --random need --n");
  if (o.star) return gen_star(o.n);
  return gen_random_zero_sum(o.n, o.magnitude, o.seed);
}

KSubset resolve_subset(const Options& o, unsigned n, unsigned k) {
  std::vector<unsigned> idx;
  if (o.subset.empty()) {
    for (unsigned i = n - k; i < n; ++i) idx.push_back(i);
  } else {
    std::stringstream ss(o.subset);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError("bad index '" + item + "' in --subset");
      }
      idx.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    std::sort(idx.begin(), idx.end());
  }
  return KSubset(n, std::move(idx));
}

void require_k(const Options& o) {
  if (o.k == 0) throw UsageError("-k is required");
}

struct Outcome {
  Json inputs = Json::object();
  Json report;
  std::string verdict;
  int exit_code = kVerified;
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return kVerified;
    case Verdict::violated:
      return kViolated;
    case Verdict::preconditions_not_met:
      return kUsage;
  }
  return kUsage;
}

Outcome from_lemma(const LemmaReport& r) {
  Outcome o;
  o.report = lemma_json(r);
  o.verdict = to_string(r.verdict);
  o.exit_code = exit_for(r.verdict);
  return o;
}

Outcome from_flag(Json report, bool ok) {
  Outcome o;
  o.report = std::move(report);
  o.verdict = ok ? "verified" : "violated";
  o.exit_code = ok ? kVerified : kViolated;
  return o;
}

// Subcommands ----------------------------------------------------------------

Outcome do_count(const Options& o) {
  require_k(o);
  const WeightVector w = resolve_weights(o);
  Restriction restriction;
  for (const auto& text : o.restrictions) restriction.add(Restriction::parse_atom(text));
  const CountReport r = count_nonnegative(w, o.k, restriction, {o.threads});
  const bool ok = std::all_of(r.bound_comparisons.begin(), r.bound_comparisons.end(),
                              [](const BoundComparison& b) { return b.satisfied; });
  Outcome out = from_flag(count_json(r), ok);
  out.inputs = provenance_json(w);
  return out;
}

Outcome do_verify(const Options& o) {
  const ExecutionOptions exec{o.threads};
  if (o.lemma == "scalar") {
    require_k(o);
    if (o.n == 0) throw UsageError("--lemma scalar needs --n");
    Outcome out = from_lemma(verify_scalar_inequalities(o.n, o.k));
    out.inputs = {{"n", o.n}, {"k", o.k}};
    return out;
  }
  require_k(o);
  const WeightVector w = resolve_weights(o);
  Outcome out;
  if (o.lemma == "eigenvector") {
    const auto r = verify_eigenvector(w, o.j, o.k);
    out = from_flag(eigen_json(r, w.scale()), r.ok());
  } else if (o.lemma == "wilson") {
    const auto r = verify_wilson_identities(w, o.j, o.k, {o.budget});
    out = from_flag(wilson_json(r), r.ok());
  } else if (o.lemma == "2") {
    out = from_lemma(verify_lemma2(w, o.k, exec));
  } else if (o.lemma == "3") {
    out = from_lemma(verify_lemma3(w, o.k, exec));
  } else if (o.lemma == "lotson1") {
    out = from_lemma(verify_lemma_lotson1(w, o.k, exec));
  } else if (o.lemma == "4") {
    out = from_lemma(verify_lemma4(w, o.k, resolve_subset(o, w.n(), o.k), exec));
  } else if (o.lemma == "partition") {
    const auto r = simulate_partition(w, o.k, resolve_subset(o, w.n(), o.k), o.trials, o.seed, exec);
    out.report = partition_json(r);
    out.verdict = to_string(r.verdict);
    out.exit_code = exit_for(r.verdict);
  } else if (o.lemma == "theorem") {
    out = from_lemma(verify_theorem(w, o.k, exec));
  } else {
    throw UsageError("unknown --lemma '" + o.lemma + "'");
  }
  out.inputs = provenance_json(w);
  return out;
}

Json matrix_rows(const StructureMatrix& m) {
  Json rows = Json::array();
  for (std::uint64_t r = 0; r < m.rows(); ++r) {
    std::string line;
    line.reserve(m.cols());
    for (std::uint64_t c = 0; c < m.cols(); ++c) line.push_back(m(r, c) ? '1' : '0');
    rows.push_back(line);
  }
  return rows;
}

Json subset_labels(unsigned n, unsigned size) {
  Json labels = Json::array();
  for (std::uint64_t mask : subset_masks(n, size)) {
    Json s = Json::array();
    for (unsigned i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.push_back(i);
    labels.push_back(s);
  }
  return labels;
}

Outcome do_spectrum(const Options& o) {
  require_k(o);
  if (o.n == 0) throw UsageError("spectrum needs --n");
  const DenseBudget budget{o.budget};
  Json report;
  report["kind"] = o.kind;
  report["n"] = o.n;
  report["j"] = o.j;
  report["k"] = o.k;
  Outcome out;
  if (o.kind == "inclusion" || o.kind == "kneser") {
    const auto kind = o.kind == "inclusion" ? StructureKind::inclusion : StructureKind::kneser;
    const StructureMatrix m = build_structure_matrix(kind, o.n, o.j, o.k, budget);
    report["row_labels"] = subset_labels(o.n, o.j);
    report["col_labels"] = subset_labels(o.n, o.k);
    report["rows"] = matrix_rows(m);
    report["row_sums"] = m.row_sums();
    report["col_sums"] = m.col_sums();
    out = from_flag(report, true);
  } else if (o.kind == "bose-mesner") {
    const BoseMesnerOperator op(o.n, o.j, o.k);
    const auto dense = op.dense(budget);
    const std::uint64_t size = binomial_u64(o.n, o.k);
    Json rows = Json::array();
    for (std::uint64_t r = 0; r < size; ++r) {
      Json row = Json::array();
      for (std::uint64_t c = 0; c < size; ++c) row.push_back(str(dense[r * size + c]));
      rows.push_back(row);
    }
    report["labels"] = subset_labels(o.n, o.k);
    report["rows"] = rows;
    report["entry_by_overlap"] = Json::array();
    for (unsigned t = 0; t <= o.k; ++t) report["entry_by_overlap"].push_back(str(op.entry_by_overlap(t)));
    report["eigenvalue_on_subset_sums"] = str(wilson_eigenvalue(o.n, o.j, o.k));
    const FactorizationReport f = verify_factorization(o.n, o.j, o.k, budget);
    report["factorization"] = factorization_json(f);
    out = from_flag(report, f.ok());
  } else {
    throw UsageError("unknown --kind '" + o.kind + "' (inclusion, kneser, bose-mesner)");
  }
  out.inputs = {{"n", o.n}, {"j", o.j}, {"k", o.k}};
  return out;
}

Outcome do_search(const Options& o) {
  const ExecutionOptions exec{o.threads};
  SearchReport r;
  if (o.counterexample) {
    require_k(o);
    r = find_counterexample(o.k, o.r, o.value_range, exec);
  } else {
    require_k(o);
    if (o.n == 0) throw UsageError("search needs --n (or --counterexample)");
    SearchSpace space;
    space.n = o.n;
    space.k = o.k;
    space.max_distinct = o.max_distinct;
    space.value_range = o.value_range;
    r = sweep_patterns(space, exec);
  }
  Outcome out = from_flag(search_json(r), r.consistent);
  out.inputs = {{"n", r.space.n}, {"k", r.space.k}, {"max_distinct", r.space.max_distinct},
                {"value_range", r.space.value_range}};
  if (o.counterexample) out.inputs["r"] = o.r;
  return out;
}

Outcome do_gen(const Options& o, std::ostream& out_stream, bool& raw_written) {
  const WeightVector w = resolve_weights(o);
  const std::string doc = to_weight_document(w);
  if (o.output.empty()) {
    out_stream << doc;
    raw_written = true;
    return {};
  }
  std::ofstream file(o.output);
  if (!file) throw std::runtime_error("cannot write '" + o.output + "'");
  file << doc;
  Outcome out = from_flag({{"written", o.output}, {"n", w.n()}}, true);
  out.inputs = provenance_json(w);
  return out;
}

void add_source_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--weights", o.weights_path, "Weight file (JSON)");
  cmd->add_flag("--star", o.star, "Star vector (n-1, -1, ..., -1)");
  cmd->add_flag("--random", o.random, "Seeded random zero-sum integer vector");
  cmd->add_option("--n", o.n, "Vector length for --star/--random");
  cmd->add_option("--magnitude", o.magnitude, "Entry bound for --random")->capture_default_str();
}

void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_option("-k,--k", o.k, "Subset size");
  cmd->add_option("--seed", o.seed, "Seed")->capture_default_str();
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker cap")->check(CLI::Range(1U, 1024U))->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  Options o;
  CLI::App app{"Exact verification toolkit for nonnegative k-subset sums", "mms"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Count nonnegative k-subsets");
  add_source_options(count, o);
  add_common_options(count, o);
  count->add_option("--restrict", o.restrictions, "contains:i | intersects:i,j,... | disjoint:i,j,...");

  auto* verify = app.add_subcommand("verify", "Verify a lemma or identity on an instance");
  add_source_options(verify, o);
  add_common_options(verify, o);
  verify->add_option("--lemma", o.lemma, "Check to run")
      ->required()
      ->check(CLI::IsMember({"eigenvector", "wilson", "2", "3", "lotson1", "4", "partition", "scalar", "theorem"}));
  verify->add_option("-j,--j", o.j, "Bose-Mesner level");
  verify->add_option("--subset", o.subset, "Negative k-subset T as i,j,... (default: last k indices)");
  verify->add_option("--trials", o.trials, "Partition trials")->capture_default_str();
  verify->add_option("--budget", o.budget, "Dense entry budget")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Dump inclusion, Kneser or Bose-Mesner matrices");
  add_common_options(spectrum, o);
  spectrum->add_option("--n", o.n, "Ground set size");
  spectrum->add_option("-j,--j", o.j, "Row subset size / Bose-Mesner level");
  spectrum->add_option("--kind", o.kind, "inclusion | kneser | bose-mesner")->capture_default_str();
  spectrum->add_option("--budget", o.budget, "Dense entry budget")->capture_default_str();

  auto* search = app.add_subcommand("search", "Minimize the nonnegative count over few-valued patterns");
  add_common_options(search, o);
  search->add_flag("--counterexample", o.counterexample, "Search n = 3k + r, d <= 3");
  search->add_option("-r,--r", o.r, "Remainder r for --counterexample");
  search->add_option("--n", o.n, "Ground set size");
  search->add_option("--max-distinct", o.max_distinct, "Distinct values d <= 4")->capture_default_str();
  search->add_option("--value-range", o.value_range, "Integer value grid radius")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Write a star or random weight file");
  add_source_options(gen, o);
  gen->add_option("--seed", o.seed, "Seed")->capture_default_str();
  gen->add_option("--output", o.output, "Write to PATH instead of stdout");
  gen->add_option("--format", o.format, "Report format when --output is given")
      ->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "mms: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  // --threads never changes a result, so it stays out of the echo.
  std::string echo = "mms";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--threads") {
      ++i;
      continue;
    }
    if (args[i].rfind("--threads=", 0) == 0) continue;
    echo += " " + args[i];
  }

  Outcome outcome;
  try {
    if (count->parsed()) {
      outcome = do_count(o);
    } else if (verify->parsed()) {
      outcome = do_verify(o);
    } else if (spectrum->parsed()) {
      outcome = do_spectrum(o);
    } else if (search->parsed()) {
      outcome = do_search(o);
    } else {
      bool raw = false;
      outcome = do_gen(o, out, raw);
      if (raw) return kVerified;
    }
  } catch (const UsageError& e) {
    err << "mms: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "mms: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "mms: invalid weights: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "mms: " << e.what() << '\n';
    return kUsage;
  }

  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
  Json doc;
  doc["command"] = echo;
  doc["inputs"] = outcome.inputs;
  doc["report"] = outcome.report;
  doc["verdict"] = outcome.verdict;
  doc["runtime_ms"] = elapsed;
  if (o.format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    render_text(out, doc, 0);
  }
  return outcome.exit_code;
}

}  // namespace mms::cli
