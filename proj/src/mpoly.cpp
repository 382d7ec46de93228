#include "covercount/mpoly.hpp"

#include <ostream>
#include <sstream>

#include "covercount/errors.hpp"

namespace covercount {

MPoly::MPoly(const Rat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

MPoly::MPoly(long c) : MPoly(Rat(c)) {}

MPoly MPoly::variable() { return monomial(1, Rat(1)); }

MPoly MPoly::monomial(unsigned deg, const Rat& c) {
    MPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(deg + 1, Rat(0));
    p.c_[deg] = c;
    return p;
}

MPoly MPoly::from_coeffs(std::vector<Rat> coeffs) {
    MPoly p;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
}

void MPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat MPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    MPoly p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    p.normalize();
    return p;
}

MPoly MPoly::operator-() const {
    MPoly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

MPoly& MPoly::scale(const Rat& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

MPoly MPoly::divided_exactly(const MPoly& den) const {
    if (den.is_zero()) throw InvariantViolation("polynomial division by zero");
    if (is_zero()) return MPoly();
    if (degree() < den.degree()) throw NotDivisible("degree of quotient would be negative");
    std::vector<Rat> rem = c_;
    std::vector<Rat> quot(c_.size() - den.c_.size() + 1, Rat(0));
    const Rat lead = den.c_.back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Rat q = rem[k + den.c_.size() - 1] / lead;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < den.c_.size(); ++j) rem[k + j] -= q * den.c_[j];
    }
    for (const Rat& r : rem)
        if (!r.is_zero()) throw NotDivisible("nonzero remainder in exact division");
    return from_coeffs(std::move(quot));
}

std::string MPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rat c = c_[k];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        if (k == 0) {
            os << c.str();
        } else {
            if (!c.is_one()) os << c.str() << "*";
            os << "m";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::vector<std::string> MPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const Rat& c : c_) out.push_back(c.str());
    return out;
}

MPoly MPoly::parse_coeff_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const std::string& s : coeffs) c.push_back(Rat::parse(s));
    return from_coeffs(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

MPoly falling_factorial(const MPoly& base, unsigned k) {
    MPoly acc(Rat(1));
    for (unsigned j = 0; j < k; ++j) acc *= base - MPoly(Rat(static_cast<long>(j)));
    return acc;
}

MPoly cycle_factor_poly(unsigned i) {
    if (i == 0) throw InvariantViolation("cycle length must be positive");
    const MPoly base = MPoly(Rat(static_cast<long>(i))) * MPoly::variable() - MPoly(1);
    MPoly p = falling_factorial(base, i);
    p.scale(Rat(BigInt(static_cast<long>(i)), factorial(i)));
    return p;
}

MPoly exact_divide(const MPoly& num, const MPoly& den) { return num.divided_exactly(den); }

}  // namespace covercount
