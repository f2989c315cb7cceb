#include "tss/rational.hpp"

#include "tss/errors.hpp"

namespace tss {

mpz_class Rational::to_mpz(long long n) {
    // mpz_class has no long long ctor on LP64-incompatible platforms; go via string.
    if (n >= LONG_MIN && n <= LONG_MAX) return mpz_class(static_cast<long>(n));
    return mpz_class(std::to_string(n));
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw input_error("rational with zero denominator");
    v_ = mpq_class(to_mpz(num), to_mpz(den));
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.v_ == 0) throw input_error("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw input_error("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class q(mpz_class(text), mpz_class(1));
            return Rational(q);
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) throw input_error("malformed rational: " + text);
        mpz_class d(den);
        if (d == 0) throw input_error("rational with zero denominator: " + text);
        mpq_class q(mpz_class(num), d);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational: " + text);
    }
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace tss
