#include "ranklab/json_io.hpp"

#include <json.hpp>

namespace ranklab {
namespace {

using ojson = nlohmann::ordered_json;

// documented here and echoed in every sampler report so a single (seed,
// index) pair reproduces any sample without rerunning the whole stream
const char* kStreamRule =
    "stream(index) = SplitMix64(seed + 0x9E3779B97F4A7C15*(index+1)).next(); "
    "d+1 coefficients uniform on [-bound, bound] by rejection from that stream; "
    "the all-zero vector is redrawn";

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

ojson jform(const BinaryForm& f) {
  ojson j;
  j["degree"] = f.degree();
  ojson cs = ojson::array();
  for (const auto& c : f.coeffs()) cs.push_back(c.get_str());
  j["coefficients"] = cs;
  j["pretty"] = f.pretty();
  return j;
}

ojson jlabel(const Label& l) { return ojson{{"s", l.s}, {"a", l.a}}; }

const char* exactness_str(Exactness e) {
  return e == Exactness::Complete ? "complete" : "sound-partial";
}

ojson jlabelset(const LabelSet& ls) {
  ojson j;
  j["s"] = ls.s;
  j["exactness"] = exactness_str(ls.exactness);
  ojson arr = ojson::array();
  for (const auto& w : ls.found) {
    ojson e = jlabel(w.label);
    e["witness"] = jform(w.g);
    arr.push_back(e);
  }
  j["labels"] = arr;
  return j;
}

ojson jrank(const RankReport& r) {
  ojson j;
  j["kind"] = "rank";
  j["form"] = jform(r.form);
  j["complex"] = {{"rank", r.complex.rank}, {"witness", jform(r.complex.witness)}};
  j["admissible"] = {{"rank", r.admissible.rank}, {"witness", jform(r.admissible.witness)}};
  ojson real;
  real["lo"] = r.real.lo;
  real["hi"] = r.real.hi;
  real["exact"] = r.real.exact;
  real["witness"] = r.real.witness ? jform(*r.real.witness) : ojson(nullptr);
  j["real"] = real;
  j["labels"] = jlabelset(r.labels);
  return j;
}

ojson jinterval(const RInterval& iv) { return ojson{rat_str(iv.lo), rat_str(iv.hi)}; }

ojson jpoint(const CurvePoint& p) {
  ojson j;
  if (p.kind == CurvePoint::Kind::Exact) {
    j["kind"] = "exact";
    j["alpha"] = gauss_str(p.alpha);
    j["beta"] = gauss_str(p.beta);
  } else {
    j["kind"] = "boxed";
    j["alpha"] = "1";
    j["re"] = jinterval(p.box.re);
    j["im"] = jinterval(p.box.im);
    j["width"] = rat_str(p.box.width());
  }
  return j;
}

ojson jdecomp(const DecompositionSet& S) {
  ojson j;
  j["kind"] = "decomposition";
  j["degree"] = S.degree;
  j["label"] = jlabel(label_of_set(S));
  j["all_exact"] = S.all_exact;
  j["residual_bound"] = rat_str(S.residual_bound);
  ojson pts = ojson::array();
  for (const auto& p : S.points) pts.push_back(jpoint(p));
  j["points"] = pts;
  j["pairing"] = S.pairing;
  ojson lam = ojson::array();
  for (const auto& z : S.lambda) lam.push_back(gauss_str(z));
  j["coefficients"] = lam;
  return j;
}

ojson jconfig(const SampleConfig& c) {
  // jobs is deliberately absent: worker count must never change the bytes
  ojson j;
  j["degree"] = c.degree;
  j["count"] = c.count;
  j["bound"] = c.bound;
  j["seed"] = c.seed;
  j["stream_rule"] = kStreamRule;
  return j;
}

ojson jentry(const ExceptionEntry& e) {
  ojson j;
  j["index"] = e.index;
  j["stream"] = e.stream;
  j["coefficients"] = e.coeffs;
  j["reason"] = e.reason;
  return j;
}

ojson jentries(const std::vector<ExceptionEntry>& v) {
  ojson arr = ojson::array();
  for (const auto& e : v) arr.push_back(jentry(e));
  return arr;
}

template <class K>
ojson jfreq(const std::map<K, long>& m) {
  ojson j = ojson::object();
  for (const auto& [k, v] : m) {
    if constexpr (std::is_same_v<K, std::string>)
      j[k] = v;
    else
      j[std::to_string(k)] = v;
  }
  return j;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_json(const RankReport& r) { return dump(jrank(r)); }

std::string labels_json(const LabelSet& ls, bool non_normative) {
  ojson j;
  j["kind"] = "labels";
  j["non_normative"] = non_normative;
  ojson body = jlabelset(ls);
  for (auto& [k, v] : body.items()) j[k] = v;
  return dump(j);
}

std::string to_json(const DecompositionSet& S) { return dump(jdecomp(S)); }

std::string decompose_json(const DecompositionSet& S, const VerificationReport& v) {
  ojson j;
  j["kind"] = "decompose-run";
  j["decomposition"] = jdecomp(S);
  ojson ver;
  ver["label"] = jlabel(v.label);
  ver["pass"] = v.all_pass();
  ojson checks = ojson::array();
  for (const auto& c : v.checks)
    checks.push_back(ojson{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  ver["checks"] = checks;
  j["verification"] = ver;
  return dump(j);
}

std::string to_json(const VerificationReport& r) {
  ojson j;
  j["kind"] = "verification";
  j["label"] = jlabel(r.label);
  j["pass"] = r.all_pass();
  ojson checks = ojson::array();
  for (const auto& c : r.checks)
    checks.push_back(ojson{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  return dump(j);
}

std::string to_json(const DistributionReport& r) {
  ojson j;
  j["kind"] = "distribution";
  j["config"] = jconfig(r.config);
  j["complex"] = jfreq(r.complex_freq);
  j["admissible"] = jfreq(r.admissible_freq);
  j["real"] = jfreq(r.real_freq);
  j["labels"] = jfreq(r.label_freq);
  j["sound_partial"] = r.sound_partial;
  j["violations"] = jentries(r.violations);
  if (r.config.keep_reports) {
    ojson arr = ojson::array();
    for (const auto& s : r.samples) {
      ojson e;
      e["index"] = s.index;
      e["stream"] = s.stream;
      e["report"] = jrank(s.report);
      arr.push_back(e);
    }
    j["samples"] = arr;
  }
  return dump(j);
}

std::string to_json(const VerifyReport& r) {
  ojson j;
  j["kind"] = "verify";
  j["check"] = r.check;
  j["config"] = jconfig(r.config);
  j["pass"] = r.pass;
  j["flagged"] = r.flagged;
  j["detail"] = r.detail;
  j["generic"] = r.generic;
  ojson stats = ojson::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  j["stats"] = stats;
  j["quarantined"] = jentries(r.quarantined);
  j["violations"] = jentries(r.violations);
  return dump(j);
}

std::string to_csv(const DistributionReport& r) {
  std::string out =
      "index,stream,degree,coefficients,complex,admissible,"
      "real_lo,real_hi,real_exact,labels,label_exactness\n";
  for (const auto& s : r.samples) {
    const RankReport& rep = s.report;
    std::string coeffs;
    for (size_t i = 0; i < rep.form.coeffs().size(); ++i) {
      if (i) coeffs += ',';
      coeffs += rep.form.coeffs()[i].get_str();
    }
    out += std::to_string(s.index);
    out += ',';
    out += std::to_string(s.stream);
    out += ',';
    out += std::to_string(rep.form.degree());
    out += ',';
    out += csv_quote(coeffs);
    out += ',';
    out += std::to_string(rep.complex.rank);
    out += ',';
    out += std::to_string(rep.admissible.rank);
    out += ',';
    out += std::to_string(rep.real.lo);
    out += ',';
    out += std::to_string(rep.real.hi);
    out += ',';
    out += rep.real.exact ? "1" : "0";
    out += ',';
    out += csv_quote(label_set_key(rep.labels));
    out += ',';
    out += exactness_str(rep.labels.exactness);
    out += '\n';
  }
  return out;
}

}  // namespace ranklab
