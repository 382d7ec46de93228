#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace covercount {

using BigInt = mpz_class;

BigInt factorial(unsigned long n);

/// Exact rational number, always in lowest terms with a positive
/// denominator; the canonical zero is 0/1.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}            // NOLINT: implicit on purpose
    Rat(const BigInt& n) : q_(n) {}   // NOLINT: implicit on purpose
    Rat(const BigInt& num, const BigInt& den);
    Rat(long num, long den);

    /// Parses "a" or "a/b" in base 10.
    static Rat parse(const std::string& text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// The value as a machine integer; requires an integral value that fits.
    long long as_integer() const;

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const;

    Rat pow(unsigned long e) const;

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }

    /// "a/b" in lowest terms, "/b" omitted when b = 1.
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace covercount
