// ranklab: ranks, labels and certified decompositions of real binary forms.
//
// Exit codes: 0 success / PASS, 1 input error, 2 inconclusive or
// certification failure, 3 verification FAIL.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ranklab/json_io.hpp"
#include "ranklab/labels.hpp"
#include "ranklab/sampler.hpp"
#include "ranklab/witness.hpp"

namespace {

using namespace ranklab;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconclusive = 2;
constexpr int kVerifyFail = 3;

// c_0..c_d multiply x^(d-i) y^i; tokens split on commas and whitespace
std::optional<BinaryForm> parse_form(const std::string& text) {
  std::vector<Rational> cs;
  std::string tok;
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ',') c = ' ';
  std::istringstream words(normalized);
  while (words >> tok) {
    auto q = parse_rational(tok);
    if (!q) {
      std::cerr << "error: bad coefficient '" << tok << "' (want p or p/q)\n";
      return std::nullopt;
    }
    cs.push_back(*q);
  }
  if (cs.size() < 2) {
    std::cerr << "error: need at least 2 coefficients (degree >= 1)\n";
    return std::nullopt;
  }
  try {
    return BinaryForm(static_cast<int>(cs.size()) - 1, cs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return std::nullopt;
  }
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kInputError;
  }
  out << text;
  return kOk;
}

int run_rank(const std::string& coeffs, bool strict, const std::string& out) {
  auto f = parse_form(coeffs);
  if (!f) return kInputError;
  RankReport rep = rank_report(*f);
  int rc = emit(to_json(rep), out);
  if (rc != kOk) return rc;
  if (!rep.real.exact) {
    std::cerr << "real rank inconclusive: in [" << rep.real.lo << ", " << rep.real.hi << "]\n";
    if (strict) return kInconclusive;
  }
  return kOk;
}

int run_labels(const std::string& coeffs, std::optional<int> at, const std::string& out) {
  auto f = parse_form(coeffs);
  if (!f) return kInputError;
  ApolarProfile p(*f);
  int adm = admissible_rank(p).rank;
  int s = at.value_or(adm);
  LabelSet ls;
  try {
    ls = labels_at(p, s);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  bool non_normative = s != adm;
  int rc = emit(labels_json(ls, non_normative), out);
  if (rc != kOk) return rc;
  if (non_normative)
    std::cerr << "NON-NORMATIVE: labels at s = " << s << "; admissible rank is " << adm << "\n";
  return kOk;
}

int run_decompose(const std::string& coeffs, const std::string& label_text,
                  const std::string& tol_text, const std::string& out) {
  auto f = parse_form(coeffs);
  if (!f) return kInputError;
  auto tol = parse_rational(tol_text);
  if (!tol || *tol <= 0) {
    std::cerr << "error: --tol must be a positive rational\n";
    return kInputError;
  }

  ApolarProfile p(*f);
  BinaryForm g = admissible_rank(p).witness;
  if (!label_text.empty()) {
    int s = 0, a = 0;
    char comma = 0;
    std::istringstream in(label_text);
    if (!(in >> s >> comma >> a) || comma != ',' || !(in >> std::ws).eof() || s < 1 || a < 0 ||
        2 * a > s) {
      std::cerr << "error: --label wants \"s,a\" with s >= 1 and 2a <= s\n";
      return kInputError;
    }
    LabelSet ls;
    try {
      ls = labels_at(p, s);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kInputError;
    }
    const LabelWitness* hit = nullptr;
    for (const auto& w : ls.found)
      if (w.label.a == a) hit = &w;
    if (!hit) {
      if (ls.exactness == Exactness::Complete) {
        std::cerr << "label (" << s << "," << a << ") not achievable\n";
        return kInputError;
      }
      std::cerr << "label (" << s << "," << a
                << ") not witnessed; enumeration at this cardinality is sound but partial\n";
      return kInconclusive;
    }
    g = hit->g;
  }

  try {
    DecompositionSet S = decompose(*f, g, *tol);
    VerificationReport vr = verify_decomposition(*f, S, *tol);
    int rc = emit(decompose_json(S, vr), out);
    if (rc != kOk) return rc;
    if (!vr.all_pass()) {
      std::cerr << "verification FAIL\n";
      return kVerifyFail;
    }
    return kOk;
  } catch (const CertificationFailure& e) {
    std::cerr << "CERTIFICATION-FAILED: " << e.what() << "\n";
    return kInconclusive;
  }
}

int run_sample(const SampleConfig& cfg, const std::string& report, const std::string& out) {
  SampleConfig c = cfg;
  if (report == "csv") c.keep_reports = true;
  DistributionReport rep;
  try {
    rep = empirical_distribution(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  int rc = emit(report == "csv" ? to_csv(rep) : to_json(rep), out);
  if (rc != kOk) return rc;
  std::cerr << rep.config.count << " samples at degree " << rep.config.degree << ", seed "
            << rep.config.seed << "; " << rep.violations.size() << " chain violations\n";
  return rep.violations.empty() ? kOk : kVerifyFail;
}

int finish_verify(const VerifyReport& rep, const std::string& out) {
  int rc = emit(to_json(rep), out);
  if (rc != kOk) return rc;
  const char* verdict = rep.pass ? (rep.flagged ? "PASS (flagged)" : "PASS") : "FAIL";
  std::cerr << rep.check << ": " << verdict << " - " << rep.detail << "\n";
  return rep.pass ? kOk : kVerifyFail;
}

int run_verify(const std::string& check, const SampleConfig& cfg, const std::string& out) {
  try {
    VerifyReport rep;
    if (check == "generic-admissible")
      rep = verify_generic_admissible(cfg);
    else if (check == "labels-odd")
      rep = verify_labels_odd(cfg);
    else if (check == "claim-even")
      rep = verify_claim_even(cfg);
    else
      rep = verify_label_bound(cfg);
    return finish_verify(rep, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int run_survey(int a, const SampleConfig& cfg, const std::string& out) {
  try {
    return finish_verify(a_rank_survey(cfg, a), out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

void add_sample_flags(CLI::App* sub, SampleConfig& cfg, std::string& out) {
  sub->add_option("--degree", cfg.degree, "degree d of the sampled forms")->capture_default_str();
  sub->add_option("--count", cfg.count, "number of samples")->capture_default_str();
  sub->add_option("--bound", cfg.bound, "coefficients uniform in [-bound, bound]")
      ->capture_default_str();
  sub->add_option("--seed", cfg.seed, "master seed; per-sample streams derive from it")
      ->capture_default_str();
  sub->add_option("--jobs", cfg.jobs, "worker threads (never affects report bytes)")
      ->envname("RANKLAB_JOBS")
      ->check(CLI::Range(1, 1024));
  sub->add_option("--out", out, "write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ranklab: complex/admissible/real rank, labels and certified decompositions\n"
      "of real binary forms f = sum c_i x^(d-i) y^i, plus seeded verification\n"
      "harnesses.  Coefficients are exact rationals \"p\" or \"p/q\", listed c_0..c_d."};
  app.require_subcommand(1);

  std::string coeffs, out, label_text, report = "json";
  std::string tol_text = "1/1000000000";
  bool strict = false;
  std::optional<int> at;
  int survey_a = 0;
  SampleConfig cfg;

  CLI::App* rank = app.add_subcommand("rank", "full rank report for one form");
  rank->add_option("--coeffs", coeffs, "c_0..c_d, comma or space separated")->required();
  rank->add_flag("--strict", strict, "exit 2 when the real rank is only bracketed");
  rank->add_option("--out", out, "write the report here instead of stdout");

  CLI::App* labels = app.add_subcommand("labels", "label set of one form");
  labels->add_option("--coeffs", coeffs, "c_0..c_d, comma or space separated")->required();
  labels->add_option("--at", at, "cardinality s to enumerate (default: admissible rank)");
  labels->add_option("--out", out, "write the report here instead of stdout");

  CLI::App* dec = app.add_subcommand("decompose", "certified decomposition of one form");
  dec->add_option("--coeffs", coeffs, "c_0..c_d, comma or space separated")->required();
  dec->add_option("--label", label_text, "target label \"s,a\" (default: admissible witness)");
  dec->add_option("--tol", tol_text, "relative residual tolerance for boxed sets")
      ->capture_default_str();
  dec->add_option("--out", out, "write the report here instead of stdout");

  CLI::App* sample = app.add_subcommand("sample", "empirical rank/label distribution");
  add_sample_flags(sample, cfg, out);
  sample->add_option("--report", report, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sample->add_flag("--keep-reports", cfg.keep_reports, "retain per-sample records in JSON");

  CLI::App* survey = app.add_subcommand("survey", "empirical a-rank distribution");
  survey->add_option("--a", survey_a, "number of conjugate pairs a")->required();
  add_sample_flags(survey, cfg, out);

  CLI::App* verify = app.add_subcommand("verify", "seeded density checks");
  std::string check;
  verify->add_option("check", check, "which check to run")
      ->required()
      ->check(CLI::IsMember({"generic-admissible", "labels-odd", "claim-even", "label-bound"}));
  add_sample_flags(verify, cfg, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (rank->parsed()) return run_rank(coeffs, strict, out);
    if (labels->parsed()) return run_labels(coeffs, at, out);
    if (dec->parsed()) return run_decompose(coeffs, label_text, tol_text, out);
    if (sample->parsed()) return run_sample(cfg, report, out);
    if (survey->parsed()) return run_survey(survey_a, cfg, out);
    if (verify->parsed()) return run_verify(check, cfg, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
