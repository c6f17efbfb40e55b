#include "ranklab/rational.hpp"

#include <cctype>

namespace ranklab {

std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto ok = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!ok(num, true) || !ok(den, true)) return std::nullopt;
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) return std::nullopt;
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string gauss_str(const GaussianRational& z) {
  if (z.im == 0) return rat_str(z.re);
  std::string im_part;
  if (z.im == 1)
    im_part = "i";
  else if (z.im == -1)
    im_part = "-i";
  else
    im_part = rat_str(z.im) + "i";
  if (z.re == 0) return im_part;
  if (sgn(z.im) > 0) return rat_str(z.re) + "+" + im_part;
  return rat_str(z.re) + im_part;
}

std::optional<GaussianRational> parse_gaussian(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i') {
    auto re = parse_rational(s);
    if (!re) return std::nullopt;
    return GaussianRational(*re);
  }
  std::string body = s.substr(0, s.size() - 1);  // drop trailing 'i'
  // Split at the last top-level +/- that separates real and imaginary parts.
  // Signs at position 0 or right after '/' belong to the imaginary term.
  size_t split = std::string::npos;
  for (size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/') {
      split = i;
      break;
    }
  }
  std::string re_s = "0", im_s = body;
  if (split != std::string::npos) {
    re_s = body.substr(0, split);
    im_s = body.substr(split);  // keeps the sign
  }
  if (im_s.empty() || im_s == "+") im_s = "1";
  if (im_s == "-") im_s = "-1";
  auto re = parse_rational(re_s);
  auto im = parse_rational(im_s);
  if (!re || !im) return std::nullopt;
  return GaussianRational(*re, *im);
}

}  // namespace ranklab
