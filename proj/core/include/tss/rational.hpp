#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace tss {

/// Exact rational number, always in lowest terms with positive denominator.
/// All geometric predicates in this library are decided with this type;
/// tangency and epsilon placements sit exactly on equality boundaries, so
/// floating point is never allowed anywhere near them.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<long>(n)) {}
    Rational(long long n) : v_(to_mpz(n)) {}
    Rational(int n) : v_(n) {}
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p/q" or a bare integer "p". Throws tss::input_error on garbage.
    static Rational parse(const std::string& text);

    // Canonical form "p/q" with q > 0 and gcd(p,q)=1; integers render as "p/1".
    std::string str() const;

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    int sign() const { return sgn(v_); }
    const mpq_class& raw() const { return v_; }

    // Lossy; only for SVG rendering and logging, never for predicates.
    double approx() const { return v_.get_d(); }

private:
    static mpz_class to_mpz(long long n);
    mpq_class v_;
};

inline Rational sq(const Rational& r) { return r * r; }

} // namespace tss
