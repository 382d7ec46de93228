#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "covercount/rational.hpp"

namespace covercount {

/// Dense univariate polynomial over Rat in the branch-point count m.
/// Canonical form: no trailing zero coefficient; the zero polynomial
/// stores nothing and has degree -1.
class MPoly {
public:
    MPoly() = default;
    MPoly(const Rat& c);  // NOLINT: implicit constant embedding
    MPoly(long c);        // NOLINT
    static MPoly variable();
    static MPoly monomial(unsigned deg, const Rat& c);
    static MPoly from_coeffs(std::vector<Rat> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rat coeff(unsigned k) const { return k < c_.size() ? c_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly operator-() const;

    MPoly& scale(const Rat& c);
    friend MPoly operator*(MPoly a, const Rat& c) { return a.scale(c); }
    friend MPoly operator*(const Rat& c, MPoly a) { return a.scale(c); }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Exact quotient; throws NotDivisible when a nonzero remainder exists.
    MPoly divided_exactly(const MPoly& den) const;

    /// Human form, descending powers, e.g. "1/12*m^3 - 1/4*m^2 + 1/6*m".
    std::string str() const;
    /// Dense coefficient strings, index = degree.
    std::vector<std::string> coeff_strings() const;
    static MPoly parse_coeff_strings(const std::vector<std::string>& coeffs);

private:
    void normalize();
    std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

/// base * (base-1) * ... * (base-k+1); the empty product 1 for k = 0.
MPoly falling_factorial(const MPoly& base, unsigned k);

/// i * C(m*i - 1, i) as an exact polynomial in m of degree i.
MPoly cycle_factor_poly(unsigned i);

MPoly exact_divide(const MPoly& num, const MPoly& den);

}  // namespace covercount
