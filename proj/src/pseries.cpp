#include "covercount/pseries.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "covercount/errors.hpp"

namespace covercount {

namespace {
void require_compatible(const PSeries& a, const PSeries& b) {
    if (a.weight_bound() != b.weight_bound() || !(a.window() == b.window()))
        throw InvariantViolation("series bound/window mismatch");
}
}  // namespace

PSeries::PSeries(unsigned weight_bound, HWindow window)
    : bound_(weight_bound), window_(window) {}

PSeries PSeries::constant(unsigned weight_bound, HWindow window, const HPoly& c) {
    PSeries s(weight_bound, window);
    s.add_term(Partition(), c);
    return s;
}

PSeries PSeries::constant(unsigned weight_bound, HWindow window, const Rat& c) {
    return constant(weight_bound, window, HPoly::constant(window, MPoly(c)));
}

PSeries PSeries::monomial(unsigned weight_bound, HWindow window, const Partition& mu,
                          const HPoly& c) {
    PSeries s(weight_bound, window);
    s.add_term(mu, c);
    return s;
}

HPoly PSeries::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? HPoly(window_) : it->second;
}

void PSeries::add_term(const Partition& mu, const HPoly& c) {
    if (c.is_zero() || mu.weight() > bound_) return;
    if (!(c.window() == window_)) throw InvariantViolation("term window mismatch");
    auto [it, fresh] = terms_.try_emplace(mu, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PSeries& PSeries::operator+=(const PSeries& o) {
    require_compatible(*this, o);
    for (const auto& [mu, c] : o.terms_) add_term(mu, c);
    return *this;
}

PSeries& PSeries::operator-=(const PSeries& o) {
    require_compatible(*this, o);
    for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
    return *this;
}

Partition merge_partitions(const Partition& a, const Partition& b) {
    std::vector<unsigned> parts;
    parts.reserve(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<>());
    return Partition(std::move(parts));
}

PSeries operator*(const PSeries& a, const PSeries& b) {
    require_compatible(a, b);
    PSeries p(a.bound_, a.window_);
    for (const auto& [mu, cm] : a.terms_) {
        const unsigned wm = mu.weight();
        for (const auto& [ka, ck] : b.terms_) {
            if (wm + ka.weight() > p.bound_) continue;  // skip before multiplying
            p.add_term(merge_partitions(mu, ka), cm * ck);
        }
    }
    return p;
}

PSeries& PSeries::scale(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, v] : terms_) v.scale(c);
    return *this;
}

PSeries& PSeries::scale(const HPoly& c) {
    PSeries out(bound_, window_);
    for (const auto& [mu, v] : terms_) out.add_term(mu, v * c);
    return *this = std::move(out);
}

PSeries PSeries::rebased(unsigned weight_bound, HWindow window) const {
    PSeries out(weight_bound, window);
    for (const auto& [mu, v] : terms_) {
        if (mu.weight() > weight_bound) continue;
        out.add_term(mu, v.rebased(window));
    }
    return out;
}

HPoly PSeries::eval_all_p(const Rat& x) const {
    HPoly acc(window_);
    for (const auto& [mu, v] : terms_) acc += v * x.pow(mu.length());
    return acc;
}

PSeries PSeries::eval_m(const Rat& m_value) const {
    PSeries out(bound_, window_);
    for (const auto& [mu, v] : terms_) out.add_term(mu, v.eval_m(m_value));
    return out;
}

unsigned PSeries::max_weight_present() const {
    unsigned w = 0;
    for (const auto& [mu, v] : terms_) w = std::max(w, mu.weight());
    return w;
}

std::string PSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << v.str() << "]";
        if (!mu.empty()) os << "*p[" << mu.str() << "]";
    }
    return os.str();
}

PSeries log_series(const PSeries& a) {
    const HPoly one = HPoly::constant(a.window(), MPoly(1));
    if (!(a.coeff(Partition()) == one))
        throw BadConstantTerm("log requires constant term exactly 1");
    PSeries x = a;
    x.add_term(Partition(), -one);  // x = a - 1, supported on weights >= 1
    PSeries acc(a.weight_bound(), a.window());
    PSeries pw = x;
    for (unsigned k = 1; k <= a.weight_bound() && !pw.is_zero(); ++k) {
        PSeries t = pw;
        t.scale(Rat(k % 2 == 1 ? 1 : -1, static_cast<long>(k)));
        acc += t;
        if (k < a.weight_bound()) pw *= x;
    }
    return acc;
}

PSeries exp_series(const PSeries& x) {
    if (!x.coeff(Partition()).is_zero())
        throw BadConstantTerm("exp requires zero constant term");
    PSeries acc = PSeries::constant(x.weight_bound(), x.window(), Rat(1));
    PSeries term = acc;
    for (unsigned k = 1; k <= x.weight_bound() && !term.is_zero(); ++k) {
        term *= x;
        term.scale(Rat(1, static_cast<long>(k)));
        acc += term;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const PSeries& s) { return os << s.str(); }

}  // namespace covercount
