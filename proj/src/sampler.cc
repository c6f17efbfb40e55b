#include "ranklab/sampler.hpp"

#include <atomic>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ranklab/prng.hpp"

namespace ranklab {

namespace {

void validate(const SampleConfig& cfg) {
  if (cfg.degree < 1) throw std::invalid_argument("sampler: degree must be >= 1");
  if (cfg.count < 1) throw std::invalid_argument("sampler: count must be >= 1");
  if (cfg.bound < 1) throw std::invalid_argument("sampler: bound must be >= 1");
}

std::string coeff_str(const BinaryForm& f) {
  std::ostringstream os;
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) os << ",";
    os << f.coeffs()[i].get_str();
  }
  return os.str();
}

// Run fn(index) for 0..n-1 on the requested number of workers; results land
// in index order, so the outcome is independent of scheduling.
template <class T, class Fn>
std::vector<T> run_indexed(long n, int jobs, Fn fn) {
  std::vector<std::optional<T>> slots(n);
  if (jobs <= 1) {
    for (long i = 0; i < n; ++i) slots[i].emplace(fn(static_cast<std::uint64_t>(i)));
  } else {
    std::atomic<long> next{0};
    auto worker = [&] {
      while (true) {
        long i = next.fetch_add(1);
        if (i >= n) break;
        slots[i].emplace(fn(static_cast<std::uint64_t>(i)));
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

int expected_generic_rank(int d) { return (d + 2) / 2; }  // ceil((d+1)/2)

// The generic profile behind the density statements: the apolar kernel
// first turns nontrivial at ceil((d+1)/2) and contains a square-free
// member there.  Samples off this profile sit on the exceptional locus.
std::optional<std::string> genericity_defect(const ApolarProfile& p) {
  const int r = expected_generic_rank(p.degree());
  if (p.min_kernel_degree() != r) return "kernel nontrivial below the generic degree";
  if (!squarefree_member(p.kernel(r))) return "no square-free member at the generic degree";
  return std::nullopt;
}

ExceptionEntry entry(std::uint64_t index, std::uint64_t stream, const BinaryForm& f,
                     std::string reason) {
  return {index, stream, coeff_str(f), std::move(reason)};
}

std::string fraction(long k, long n) {
  return std::to_string(k) + "/" + std::to_string(n);
}

}  // namespace

BinaryForm sample_form(int degree, long bound, std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng(stream_seed(seed, index));
  while (true) {
    IntVec c(degree + 1);
    bool nonzero = false;
    for (int i = 0; i <= degree; ++i) {
      long v = rng.uniform(-bound, bound);
      c[i] = v;
      if (v != 0) nonzero = true;
    }
    if (nonzero) return BinaryForm::from_ints(degree, std::move(c));
  }
}

std::string label_set_key(const LabelSet& ls) {
  std::ostringstream os;
  for (const auto& w : ls.found) os << "(" << w.label.s << "," << w.label.a << ")";
  if (ls.found.empty()) os << "none";
  return os.str();
}

DistributionReport empirical_distribution(const SampleConfig& cfg) {
  validate(cfg);
  auto records = run_indexed<SampleRecord>(cfg.count, cfg.jobs, [&cfg](std::uint64_t i) {
    BinaryForm f = sample_form(cfg.degree, cfg.bound, cfg.seed, i);
    return SampleRecord{i, stream_seed(cfg.seed, i), rank_report(f)};
  });

  DistributionReport out;
  out.config = cfg;
  for (const auto& rec : records) {
    const RankReport& r = rec.report;
    out.complex_freq[r.complex.rank]++;
    out.admissible_freq[r.admissible.rank]++;
    if (r.real.exact)
      out.real_freq[std::to_string(r.real.value())]++;
    else
      out.real_freq["[" + std::to_string(r.real.lo) + "," + std::to_string(r.real.hi) + "]"]++;
    out.label_freq[label_set_key(r.labels)]++;
    if (r.labels.exactness == Exactness::SoundPartial) out.sound_partial++;
    bool chain = r.complex.rank <= r.admissible.rank && r.admissible.rank <= r.real.lo &&
                 r.real.lo <= r.real.hi;
    if (!chain)
      out.violations.push_back(entry(rec.index, rec.stream, r.form, "chain inequality violated"));
  }
  if (cfg.keep_reports) out.samples = std::move(records);
  return out;
}

VerifyReport verify_generic_admissible(const SampleConfig& cfg) {
  validate(cfg);
  if (cfg.degree < 2) throw std::invalid_argument("verify_generic_admissible: degree must be >= 2");
  const int expect = expected_generic_rank(cfg.degree);

  struct Row {
    BinaryForm form;
    std::optional<std::string> defect;
    int admissible = 0;
  };
  auto rows = run_indexed<Row>(cfg.count, cfg.jobs, [&cfg](std::uint64_t i) {
    BinaryForm f = sample_form(cfg.degree, cfg.bound, cfg.seed, i);
    ApolarProfile p(f);
    Row row{f, genericity_defect(p), 0};
    if (!row.defect) row.admissible = admissible_rank(p).rank;
    return row;
  });

  VerifyReport rep;
  rep.check = "generic-admissible";
  rep.config = cfg;
  for (long i = 0; i < cfg.count; ++i) {
    std::uint64_t stream = stream_seed(cfg.seed, i);
    if (rows[i].defect) {
      rep.quarantined.push_back(entry(i, stream, rows[i].form, *rows[i].defect));
      continue;
    }
    rep.generic++;
    if (rows[i].admissible != expect)
      rep.violations.push_back(entry(i, stream, rows[i].form,
                                     "admissible rank " + std::to_string(rows[i].admissible) +
                                         ", expected " + std::to_string(expect)));
  }
  long quarantine = static_cast<long>(rep.quarantined.size());
  bool rare = quarantine * 100 < cfg.count;
  rep.pass = rep.violations.empty() && rare;
  rep.stats["expected-rank"] = std::to_string(expect);
  rep.stats["generic"] = fraction(rep.generic, cfg.count);
  rep.stats["quarantined"] = fraction(quarantine, cfg.count);
  rep.detail = "admissible rank " + std::to_string(expect) + " on " +
               fraction(rep.generic - static_cast<long>(rep.violations.size()), rep.generic) +
               " generic samples, " + std::to_string(quarantine) + " quarantined";
  return rep;
}

VerifyReport verify_labels_odd(const SampleConfig& cfg) {
  validate(cfg);
  if (cfg.degree < 3 || cfg.degree % 2 == 0)
    throw std::invalid_argument("verify_labels_odd: degree must be odd and >= 3");
  const int s = (cfg.degree + 1) / 2;

  struct Row {
    BinaryForm form;
    bool unique_kernel = false;
    std::vector<int> labels;  // a-values present at s
  };
  auto rows = run_indexed<Row>(cfg.count, cfg.jobs, [&cfg, s](std::uint64_t i) {
    BinaryForm f = sample_form(cfg.degree, cfg.bound, cfg.seed, i);
    ApolarProfile p(f);
    Row row{f, p.kernel_dim(s) == 1, {}};
    if (p.kernel_dim(s) > 0)
      for (const auto& w : labels_at(p, s).found) row.labels.push_back(w.label.a);
    return row;
  });

  VerifyReport rep;
  rep.check = "labels-odd";
  rep.config = cfg;
  long unique = 0;
  std::map<int, long> label_count;
  for (long i = 0; i < cfg.count; ++i) {
    if (rows[i].unique_kernel)
      unique++;
    else
      rep.quarantined.push_back(entry(i, stream_seed(cfg.seed, i), rows[i].form,
                                      "deciding kernel not one-dimensional"));
    for (int a : rows[i].labels) label_count[a]++;
  }
  bool unique_ok = unique * 100 >= 99 * cfg.count;
  bool density_ok = true;
  for (int a = 0; 2 * a <= s; ++a) {
    long k = label_count.count(a) ? label_count[a] : 0;
    rep.stats["label (" + std::to_string(s) + "," + std::to_string(a) + ")"] =
        fraction(k, cfg.count);
    if (k * 100 < cfg.count) density_ok = false;
  }
  rep.stats["one-dimensional kernel"] = fraction(unique, cfg.count);
  rep.generic = unique;
  rep.pass = unique_ok && density_ok;
  rep.detail = std::string("every label at s=") + std::to_string(s) +
               (density_ok ? " occurs with frequency >= 1%" : " does NOT reach 1% frequency") +
               "; unique kernel on " + fraction(unique, cfg.count);
  return rep;
}

VerifyReport verify_claim_even(const SampleConfig& cfg) {
  validate(cfg);
  if (cfg.degree < 2 || cfg.degree % 2 != 0)
    throw std::invalid_argument("verify_claim_even: degree must be even and >= 2");
  const int s = 1 + cfg.degree / 2;
  const int amax = cfg.degree / 4;  // 2a <= d/2

  struct Row {
    BinaryForm form;
    std::optional<std::string> defect;
    bool achieves = false;
    bool complete = false;
  };
  auto rows = run_indexed<Row>(cfg.count, cfg.jobs, [&cfg, s, amax](std::uint64_t i) {
    BinaryForm f = sample_form(cfg.degree, cfg.bound, cfg.seed, i);
    ApolarProfile p(f);
    Row row{f, genericity_defect(p), false, false};
    if (!row.defect) {
      LabelSet ls = labels_at(p, s);
      row.complete = ls.exactness == Exactness::Complete;
      for (const auto& w : ls.found)
        if (w.label.a <= amax) row.achieves = true;
    }
    return row;
  });

  VerifyReport rep;
  rep.check = "claim-even";
  rep.config = cfg;
  for (long i = 0; i < cfg.count; ++i) {
    std::uint64_t stream = stream_seed(cfg.seed, i);
    if (rows[i].defect) {
      rep.quarantined.push_back(entry(i, stream, rows[i].form, *rows[i].defect));
      continue;
    }
    rep.generic++;
    if (!rows[i].complete)
      rep.violations.push_back(
          entry(i, stream, rows[i].form, "label set at the generic degree is not complete"));
    else if (!rows[i].achieves)
      rep.violations.push_back(entry(i, stream, rows[i].form,
                                     "no label (" + std::to_string(s) + ",a) with a <= " +
                                         std::to_string(amax)));
  }
  rep.pass = rep.violations.empty() &&
             static_cast<long>(rep.quarantined.size()) * 100 < cfg.count;
  rep.stats["generic"] = fraction(rep.generic, cfg.count);
  rep.detail = "label (" + std::to_string(s) + ",a), 2a <= " + std::to_string(cfg.degree / 2) +
               ", achieved on all " + std::to_string(rep.generic) + " generic samples";
  if (!rep.violations.empty())
    rep.detail = std::to_string(rep.violations.size()) + " generic samples missing the label";
  return rep;
}

VerifyReport verify_label_bound(const SampleConfig& cfg) {
  validate(cfg);

  auto ranks = run_indexed<std::pair<BinaryForm, int>>(
      cfg.count, cfg.jobs, [&cfg](std::uint64_t i) {
        BinaryForm f = sample_form(cfg.degree, cfg.bound, cfg.seed, i);
        ApolarProfile p(f);
        return std::make_pair(f, admissible_rank(p).rank);
      });

  VerifyReport rep;
  rep.check = "label-bound";
  rep.config = cfg;
  for (long i = 0; i < cfg.count; ++i)
    if (ranks[i].second > cfg.degree)
      rep.violations.push_back(entry(i, stream_seed(cfg.seed, i), ranks[i].first,
                                     "admissible rank " + std::to_string(ranks[i].second) +
                                         " exceeds the degree"));

  // x^(d-1)y meets the bound with equality
  bool equality_ok = true;
  for (int d = 3; d <= 5; ++d) {
    IntVec c(d + 1, Int(0));
    c[1] = 1;
    BinaryForm f = BinaryForm::from_ints(d, std::move(c));
    ApolarProfile p(f);
    int adm = admissible_rank(p).rank;
    rep.stats["x^" + std::to_string(d - 1) + "y"] = std::to_string(adm);
    if (adm != d) equality_ok = false;
  }
  rep.pass = rep.violations.empty() && equality_ok;
  rep.detail = "admissible rank <= degree on " + std::to_string(cfg.count) +
               " samples; x^(d-1)y attains the bound for d=3,4,5";
  if (!rep.pass) rep.detail = "label bound violated";
  return rep;
}

VerifyReport a_rank_survey(const SampleConfig& cfg, int a) {
  validate(cfg);
  if (a < 0) throw std::invalid_argument("a_rank_survey: a must be >= 0");

  struct Row {
    BinaryForm form;
    ARankResult res;
  };
  auto rows = run_indexed<Row>(cfg.count, cfg.jobs, [&cfg, a](std::uint64_t i) {
    BinaryForm f = sample_form(cfg.degree, cfg.bound, cfg.seed, i);
    ApolarProfile p(f);
    return Row{f, a_rank(p, a)};
  });

  VerifyReport rep;
  rep.check = "a-rank-survey";
  rep.config = cfg;
  std::map<int, long> exact_freq;
  long partial = 0;
  for (const auto& row : rows) {
    if (row.res.exact) {
      exact_freq[row.res.hi]++;
    } else {
      partial++;
      rep.stats["bracket [" + std::to_string(row.res.lo) + "," + std::to_string(row.res.hi) +
                "]"] = "present";
    }
  }
  for (const auto& [v, k] : exact_freq)
    rep.stats["c=" + std::to_string(v)] = fraction(k, cfg.count);
  rep.stats["partial-brackets"] = fraction(partial, cfg.count);

  std::vector<int> support;
  for (const auto& [v, k] : exact_freq)
    if (k * 100 >= cfg.count) support.push_back(v);
  bool contiguous = true;
  for (size_t i = 1; i < support.size(); ++i)
    if (support[i] != support[i - 1] + 1) contiguous = false;
  rep.pass = true;
  if (!contiguous) {
    if (partial > 0)
      rep.flagged = true;
    else
      rep.pass = false;
  }
  rep.detail = "a=" + std::to_string(a) + ", support size " + std::to_string(support.size()) +
               (contiguous ? ", contiguous" : ", GAP in support");
  return rep;
}

}  // namespace ranklab
