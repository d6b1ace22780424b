#include "framelet/rational.hpp"

namespace framelet {

Rational parse_rational(const std::string& s) {
    if (s.empty() || s == "-" || s.find('/') == 0 || s.back() == '/')
        throw std::invalid_argument("malformed rational: \"" + s + "\"");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: \"" + s + "\"");
    }
}

std::string rational_to_string(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

SquareSplit split_square(const Integer& n) {
    if (n < 1) throw std::invalid_argument("split_square requires n >= 1");
    Integer square_root = 1;
    Integer rest = n;
    // trial division; radicands here stay tiny (products of small d_M factors)
    for (Integer p = 2; p * p <= rest; ++p) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            square_root *= p;
        }
    }
    return {square_root, rest};
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace framelet
