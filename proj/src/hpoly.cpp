#include "covercount/hpoly.hpp"

#include <ostream>
#include <sstream>

#include "covercount/errors.hpp"

namespace covercount {

namespace {
void require_same_window(const HWindow& a, const HWindow& b) {
    if (!(a == b)) throw InvariantViolation("hbar window mismatch");
}
}  // namespace

HPoly::HPoly(HWindow w) : w_(w) {
    if (w.lo > w.hi) throw InvariantViolation("empty hbar window");
}

HPoly HPoly::constant(HWindow w, const MPoly& c) { return monomial(w, 0, c); }

HPoly HPoly::monomial(HWindow w, int exp, const MPoly& c) {
    HPoly p(w);
    if (c.is_zero()) return p;
    if (exp < w.lo) throw WindowUnderflow("monomial exponent below window");
    if (exp <= w.hi) p.c_.emplace(exp, c);
    return p;
}

MPoly HPoly::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? MPoly() : it->second;
}

int HPoly::min_exponent() const {
    if (c_.empty()) throw InvariantViolation("min_exponent of zero value");
    return c_.begin()->first;
}

int HPoly::max_exponent() const {
    if (c_.empty()) throw InvariantViolation("max_exponent of zero value");
    return c_.rbegin()->first;
}

void HPoly::insert(int e, const MPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = c_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

HPoly& HPoly::operator+=(const HPoly& o) {
    require_same_window(w_, o.w_);
    for (const auto& [e, c] : o.c_) insert(e, c);
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
    require_same_window(w_, o.w_);
    for (const auto& [e, c] : o.c_) insert(e, -c);
    return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
    require_same_window(a.w_, b.w_);
    HPoly p(a.w_);
    for (const auto& [ea, ca] : a.c_) {
        for (const auto& [eb, cb] : b.c_) {
            const int e = ea + eb;
            if (e > p.w_.hi) continue;
            if (e < p.w_.lo) throw WindowUnderflow("product exponent below window");
            p.insert(e, ca * cb);
        }
    }
    return p;
}

HPoly HPoly::operator-() const {
    HPoly p(w_);
    for (const auto& [e, c] : c_) p.c_.emplace(e, -c);
    return p;
}

HPoly& HPoly::scale(const Rat& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [e, v] : c_) v.scale(c);
    return *this;
}

HPoly& HPoly::scale(const MPoly& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [e, v] : c_) v *= c;
    return *this;
}

HPoly HPoly::shifted(int delta) const {
    HPoly p(w_);
    for (const auto& [e, c] : c_) {
        const int ne = e + delta;
        if (ne > w_.hi) continue;
        if (ne < w_.lo) throw WindowUnderflow("shift pushed exponent below window");
        p.c_.emplace(ne, c);
    }
    return p;
}

HPoly HPoly::rebased(HWindow w) const {
    HPoly p(w);
    for (const auto& [e, c] : c_) {
        if (e > w.hi) continue;
        if (e < w.lo) throw WindowUnderflow("rebase lost a low exponent");
        p.c_.emplace(e, c);
    }
    return p;
}

HPoly HPoly::truncated_above(int emax) const {
    HPoly p(w_);
    for (const auto& [e, c] : c_)
        if (e <= emax) p.c_.emplace(e, c);
    return p;
}

HPoly HPoly::eval_m(const Rat& m_value) const {
    HPoly p(w_);
    for (const auto& [e, c] : c_) p.insert(e, MPoly(c.eval(m_value)));
    return p;
}

MPoly HPoly::as_mpoly() const {
    if (c_.empty()) return MPoly();
    if (c_.size() != 1 || c_.begin()->first != 0)
        throw InvariantViolation("value not concentrated at hbar^0");
    return c_.begin()->second;
}

Rat HPoly::as_rat() const {
    const MPoly p = as_mpoly();
    if (!p.is_constant()) throw InvariantViolation("value not constant in m");
    return p.coeff(0);
}

std::string HPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e != 0) os << "*h^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HPoly& p) { return os << p.str(); }

}  // namespace covercount
