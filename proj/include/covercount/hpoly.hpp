#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "covercount/mpoly.hpp"

namespace covercount {

/// Inclusive exponent window for HPoly values.
struct HWindow {
    int lo = 0;
    int hi = 0;
    bool contains(int e) const { return lo <= e && e <= hi; }
    friend bool operator==(const HWindow& a, const HWindow& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Polynomial in the genus-tracking parameter hbar with MPoly coefficients
/// and integer exponents confined to a window. Products landing above the
/// window are dropped; products landing below it throw WindowUnderflow,
/// since the assembly invariants guarantee that can only happen on a
/// bookkeeping bug. Binary operations require identical windows; equality
/// ignores the window and compares stored terms.
class HPoly {
public:
    explicit HPoly(HWindow w);
    static HPoly constant(HWindow w, const MPoly& c);
    static HPoly monomial(HWindow w, int exp, const MPoly& c);

    const HWindow& window() const { return w_; }
    bool is_zero() const { return c_.empty(); }
    MPoly coeff(int e) const;
    const std::map<int, MPoly>& terms() const { return c_; }
    int min_exponent() const;  // requires a nonzero value
    int max_exponent() const;

    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const HPoly& a, const HPoly& b);
    HPoly& operator*=(const HPoly& o) { return *this = *this * o; }
    HPoly operator-() const;

    HPoly& scale(const Rat& c);
    HPoly& scale(const MPoly& c);
    friend HPoly operator*(HPoly a, const Rat& c) { return a.scale(c); }
    friend HPoly operator*(HPoly a, const MPoly& c) { return a.scale(c); }

    /// Multiplication by hbar^delta under the window rules.
    HPoly shifted(int delta) const;
    /// Same value in another window; drops above, throws WindowUnderflow below.
    HPoly rebased(HWindow w) const;
    HPoly truncated_above(int emax) const;

    /// Specializes m, keeping the hbar structure.
    HPoly eval_m(const Rat& m_value) const;

    /// The whole value as coefficient of hbar^0; throws if spread out.
    MPoly as_mpoly() const;
    Rat as_rat() const;

    friend bool operator==(const HPoly& a, const HPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void insert(int e, const MPoly& c);
    HWindow w_;
    std::map<int, MPoly> c_;
};

std::ostream& operator<<(std::ostream& os, const HPoly& p);

}  // namespace covercount
