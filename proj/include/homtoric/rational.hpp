// Exact rational scalar type and matrix/vector aliases. All arithmetic in
// the library is carried out over GMP-backed rationals; no floating point
// enters any decision.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace homtoric {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::VectorXi;
using IntMat = Eigen::MatrixXi;

/// Parse an exact rational written as "p" or "p/q" (optional leading '-').
/// Throws BadRational on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Render a rational as "p" or "p/q" in lowest terms.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

// exact element-wise comparisons (Eigen's operator== is element-wise)
bool vec_eq(const RatVec& a, const RatVec& b);
bool mat_eq(const RatMat& a, const RatMat& b);
bool lex_less(const RatVec& a, const RatVec& b);

RatVec to_rational(const IntVec& v);
std::vector<Rational> to_std(const RatVec& v);
RatVec from_std(const std::vector<Rational>& v);

}  // namespace homtoric
