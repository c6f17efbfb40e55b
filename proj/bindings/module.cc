// Python bindings: the same operations the CLI exposes, returning the
// identical JSON documents so one schema serves both surfaces.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ranklab/json_io.hpp"
#include "ranklab/sampler.hpp"
#include "ranklab/witness.hpp"

namespace py = pybind11;
using namespace ranklab;

namespace {

BinaryForm form_of(const std::vector<std::string>& coeffs) {
  if (coeffs.size() < 2) throw std::invalid_argument("need at least 2 coefficients");
  std::vector<Rational> cs;
  for (const auto& t : coeffs) {
    auto r = parse_rational(t);
    if (!r) throw std::invalid_argument("not a rational: '" + t + "'");
    cs.push_back(*r);
  }
  return BinaryForm(static_cast<int>(cs.size()) - 1, cs);
}

SampleConfig config_of(int degree, long count, long bound, std::uint64_t seed, int jobs,
                       bool keep_reports = false) {
  SampleConfig cfg;
  cfg.degree = degree;
  cfg.count = count;
  cfg.bound = bound;
  cfg.seed = seed;
  cfg.jobs = jobs;
  cfg.keep_reports = keep_reports;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_ranklab, m) {
  m.doc() = "exact rank, label, and decomposition computations for real binary forms";

  m.def(
      "rank_json",
      [](const std::vector<std::string>& coeffs) { return to_json(rank_report(form_of(coeffs))); },
      py::arg("coeffs"),
      "Full rank report (complex, admissible, real, labels) as a JSON document");

  m.def(
      "complex_rank",
      [](const std::vector<std::string>& coeffs) {
        return complex_rank(ApolarProfile(form_of(coeffs))).rank;
      },
      py::arg("coeffs"));

  m.def(
      "admissible_rank",
      [](const std::vector<std::string>& coeffs) {
        return admissible_rank(ApolarProfile(form_of(coeffs))).rank;
      },
      py::arg("coeffs"));

  m.def(
      "real_rank",
      [](const std::vector<std::string>& coeffs) {
        RealRankResult r = real_rank(ApolarProfile(form_of(coeffs)));
        return py::make_tuple(r.lo, r.hi, r.exact);
      },
      py::arg("coeffs"), "(lo, hi, exact); the value is exact iff lo == hi");

  m.def(
      "a_rank",
      [](const std::vector<std::string>& coeffs, int a) {
        ARankResult r = a_rank(ApolarProfile(form_of(coeffs)), a);
        return py::make_tuple(r.lo, r.hi, r.exact);
      },
      py::arg("coeffs"), py::arg("a"),
      "minimal real-point count with exactly a conjugate pairs, bracket semantics");

  m.def(
      "labels_json",
      [](const std::vector<std::string>& coeffs, std::optional<int> at) {
        ApolarProfile p(form_of(coeffs));
        int adm = admissible_rank(p).rank;
        int s = at.value_or(adm);
        return labels_json(labels_at(p, s), s != adm);
      },
      py::arg("coeffs"), py::arg("at") = std::nullopt,
      "labels at the admissible rank, or at a chosen cardinality (then non-normative)");

  m.def(
      "decompose_json",
      [](const std::vector<std::string>& coeffs, std::optional<std::pair<int, int>> label) {
        BinaryForm f = form_of(coeffs);
        ApolarProfile p(f);
        BinaryForm g = admissible_rank(p).witness;
        if (label) {
          auto [s, a] = *label;
          if (s < 1 || a < 0 || 2 * a > s) throw std::invalid_argument("label must satisfy 0 <= 2a <= s");
          LabelSet ls = labels_at(p, s);
          const BinaryForm* hit = nullptr;
          for (const auto& w : ls.found)
            if (w.label.a == a) hit = &w.g;
          if (!hit) {
            if (ls.exactness == Exactness::Complete)
              throw std::invalid_argument("label (" + std::to_string(s) + "," +
                                          std::to_string(a) + ") not achievable");
            throw CertificationFailure("label (" + std::to_string(s) + "," + std::to_string(a) +
                                       ") not witnessed; the search at this cardinality is partial");
          }
          g = *hit;
        }
        const Rational tol(1, 1000000000);
        DecompositionSet S = decompose(f, g, tol);
        return decompose_json(S, verify_decomposition(f, S, tol));
      },
      py::arg("coeffs"), py::arg("label") = std::nullopt,
      "certified decomposition against the admissible witness, or a chosen label (s, a)");

  m.def(
      "sample_report",
      [](int degree, long count, long bound, std::uint64_t seed, int jobs, bool keep_reports,
         bool csv) {
        DistributionReport rep =
            empirical_distribution(config_of(degree, count, bound, seed, jobs, keep_reports || csv));
        return csv ? to_csv(rep) : to_json(rep);
      },
      py::arg("degree"), py::arg("count"), py::arg("bound") = 100, py::arg("seed") = 0,
      py::arg("jobs") = 1, py::arg("keep_reports") = false, py::arg("csv") = false,
      "seeded empirical rank/label distribution, as JSON or CSV text");

  m.def(
      "verify_json",
      [](const std::string& check, int degree, long count, long bound, std::uint64_t seed,
         int jobs) {
        SampleConfig cfg = config_of(degree, count, bound, seed, jobs);
        VerifyReport rep;
        if (check == "generic-admissible")
          rep = verify_generic_admissible(cfg);
        else if (check == "labels-odd")
          rep = verify_labels_odd(cfg);
        else if (check == "claim-even")
          rep = verify_claim_even(cfg);
        else if (check == "label-bound")
          rep = verify_label_bound(cfg);
        else
          throw std::invalid_argument("unknown check: " + check);
        return py::make_tuple(rep.pass, to_json(rep));
      },
      py::arg("check"), py::arg("degree"), py::arg("count"), py::arg("bound") = 100,
      py::arg("seed") = 0, py::arg("jobs") = 1,
      "(pass, report) for one of the stated density checks");

  m.def(
      "survey_json",
      [](int a, int degree, long count, long bound, std::uint64_t seed, int jobs) {
        VerifyReport rep = a_rank_survey(config_of(degree, count, bound, seed, jobs), a);
        return py::make_tuple(rep.pass, to_json(rep));
      },
      py::arg("a"), py::arg("degree"), py::arg("count"), py::arg("bound") = 100,
      py::arg("seed") = 0, py::arg("jobs") = 1,
      "(pass, report) for the empirical a-rank distribution");

  m.def(
      "sample_form",
      [](int degree, long bound, std::uint64_t seed, std::uint64_t index) {
        BinaryForm f = sample_form(degree, bound, seed, index);
        std::vector<std::string> out;
        for (const auto& c : f.coeffs()) out.push_back(c.get_str());
        return out;
      },
      py::arg("degree"), py::arg("bound"), py::arg("seed"), py::arg("index"),
      "canonical coefficients of sample #index under the master seed");

  py::register_exception<CertificationFailure>(m, "CertificationFailure");

  m.attr("__version__") = "1.0.0";
}
