#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hbar {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using Weights = std::vector<Rational>;

// Accepts "p", "p/q", and finite decimals such as "0.25" or "-1.5e-2".
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
double to_double(const Rational& r);
Weights unit_weights(int n);
Weights parse_weights(const std::string& csv);
std::vector<double> to_doubles(const Weights& w);

} // namespace hbar
