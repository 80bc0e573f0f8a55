#include "homtoric/rational.hpp"

#include <cctype>

#include "homtoric/errors.hpp"

namespace homtoric {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view num = rest;
  std::string_view den = "1";
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw BadRational("not an exact rational: \"" + std::string(text) + "\"");
  }
  const Integer n{std::string(num)};
  const Integer d{std::string(den)};
  if (d == 0) {
    throw BadRational("zero denominator: \"" + std::string(text) + "\"");
  }
  Rational r(n, d);  // canonicalized by construction
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) { return value.str(); }

bool is_integer(const Rational& value) { return denominator(value) == 1; }

bool vec_eq(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool mat_eq(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

RatVec to_rational(const IntVec& v) {
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

std::vector<Rational> to_std(const RatVec& v) {
  return std::vector<Rational>(v.data(), v.data() + v.size());
}

RatVec from_std(const std::vector<Rational>& v) {
  RatVec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

}  // namespace homtoric
