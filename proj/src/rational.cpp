#include "hbar/rational.hpp"

#include <sstream>

#include "hbar/error.hpp"

namespace hbar {

Rational parse_rational(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s.push_back(c);
    if (s.empty()) fail("BadNumber", "empty number");
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
            if (q == 0) fail("BadNumber", "zero denominator", raw);
            return Rational(p, q);
        }
        // Decimal with optional exponent, converted exactly.
        std::string mant = s;
        long exp10 = 0;
        auto e = s.find_first_of("eE");
        if (e != std::string::npos) {
            mant = s.substr(0, e);
            exp10 = std::stol(s.substr(e + 1));
        }
        bool neg = false;
        if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
            neg = mant[0] == '-';
            mant = mant.substr(1);
        }
        auto dot = mant.find('.');
        if (dot != std::string::npos) {
            exp10 -= long(mant.size() - dot - 1);
            mant.erase(dot, 1);
        }
        if (mant.empty() || mant.find_first_not_of("0123456789") != std::string::npos)
            fail("BadNumber", "not a number", raw);
        Rational r{BigInt(mant)};
        BigInt ten = 10;
        BigInt scale = boost::multiprecision::pow(ten, unsigned(std::labs(exp10)));
        r = exp10 >= 0 ? r * scale : r / scale;
        return neg ? -r : r;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail("BadNumber", "not a number", raw);
    }
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Weights unit_weights(int n) { return Weights(n, Rational(1)); }

Weights parse_weights(const std::string& csv) {
    Weights w;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(parse_rational(item));
    return w;
}

std::vector<double> to_doubles(const Weights& w) {
    std::vector<double> out;
    for (const auto& x : w) out.push_back(to_double(x));
    return out;
}

} // namespace hbar
