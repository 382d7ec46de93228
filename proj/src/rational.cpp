#include "covercount/rational.hpp"

#include <ostream>

#include "covercount/errors.hpp"

namespace covercount {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rat::Rat(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (sgn(den) == 0) throw InvariantViolation("rational with zero denominator");
    q_.canonicalize();
}

Rat::Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("malformed rational: " + text);
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    Rat r;
    r.q_ = q;
    return r;
}

long long Rat::as_integer() const {
    if (!is_integer()) throw NonIntegerEntry("not an integer: " + str());
    if (!q_.get_num().fits_slong_p())
        throw NonIntegerEntry("integer too large: " + str());
    return q_.get_num().get_si();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw InvariantViolation("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::operator-() const {
    Rat r;
    r.q_ = -q_;
    return r;
}

Rat Rat::pow(unsigned long e) const {
    Rat r;
    mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), e);
    return r;  // powers of a canonical value stay canonical
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace covercount
