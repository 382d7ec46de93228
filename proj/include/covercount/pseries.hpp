#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "covercount/hpoly.hpp"
#include "covercount/partition.hpp"

namespace covercount {

/// Graded series in the power-sum indeterminates p_1, p_2, ...: a finitely
/// supported map from monomials p_mu (mu a partition) to HPoly
/// coefficients, truncated at a weight bound. No zero coefficient is ever
/// stored; the empty partition keys the constant term. Binary operations
/// require matching weight bounds and hbar windows.
class PSeries {
public:
    PSeries(unsigned weight_bound, HWindow window);

    static PSeries constant(unsigned weight_bound, HWindow window, const HPoly& c);
    static PSeries constant(unsigned weight_bound, HWindow window, const Rat& c);
    /// The monomial c * p_mu.
    static PSeries monomial(unsigned weight_bound, HWindow window, const Partition& mu,
                            const HPoly& c);

    unsigned weight_bound() const { return bound_; }
    const HWindow& window() const { return window_; }
    const std::map<Partition, HPoly, PartitionOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    HPoly coeff(const Partition& mu) const;
    /// Adds c * p_mu in place (no-op beyond the weight bound).
    void add_term(const Partition& mu, const HPoly& c);

    PSeries& operator+=(const PSeries& o);
    PSeries& operator-=(const PSeries& o);
    friend PSeries operator+(PSeries a, const PSeries& b) { return a += b; }
    friend PSeries operator-(PSeries a, const PSeries& b) { return a -= b; }
    friend PSeries operator*(const PSeries& a, const PSeries& b);
    PSeries& operator*=(const PSeries& o) { return *this = *this * o; }

    PSeries& scale(const Rat& c);
    PSeries& scale(const HPoly& c);
    friend PSeries operator*(PSeries a, const Rat& c) { return a.scale(c); }
    friend PSeries operator*(PSeries a, const HPoly& c) { return a.scale(c); }

    /// Same terms under a new weight bound / window (drops what no longer fits
    /// above; throws WindowUnderflow for lost low exponents).
    PSeries rebased(unsigned weight_bound, HWindow window) const;

    /// Substitutes p_i = x for every i.
    HPoly eval_all_p(const Rat& x) const;

    /// Specializes m in every coefficient.
    PSeries eval_m(const Rat& m_value) const;

    unsigned max_weight_present() const;

    friend bool operator==(const PSeries& a, const PSeries& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const PSeries& a, const PSeries& b) { return !(a == b); }

    std::string str() const;

private:
    unsigned bound_;
    HWindow window_;
    std::map<Partition, HPoly, PartitionOrder> terms_;
};

/// Product monomial p_mu * p_kappa: the sorted union of parts.
Partition merge_partitions(const Partition& a, const Partition& b);

/// log of a series with constant term exactly 1, truncated at the weight
/// bound. Throws BadConstantTerm otherwise.
PSeries log_series(const PSeries& a);

/// exp of a series with zero constant term, truncated at the weight bound.
/// Throws BadConstantTerm otherwise.
PSeries exp_series(const PSeries& x);

std::ostream& operator<<(std::ostream& os, const PSeries& s);

}  // namespace covercount
