#include "covercount/genseries.hpp"

#include <utility>
#include <vector>

#include "covercount/errors.hpp"
#include "covercount/parallel.hpp"

namespace covercount {

ContentWeights unit_weights() {
    return {"unit", [](int, HWindow w) { return HPoly::constant(w, MPoly(1)); }};
}

ContentWeights bms_weights() {
    return {"bms", [](int c, HWindow w) {
                if (w.hi < 0) throw InvariantViolation("window cannot hold hbar^0");
                HPoly p(w);
                if (c == 0) return HPoly::constant(w, MPoly(1));
                Rat cpow(1);
                MPoly binom(1);  // falling_factorial(m, j) / j!
                const MPoly m = MPoly::variable();
                for (int j = 0; j <= w.hi; ++j) {
                    if (j > 0) {
                        binom = binom * (m - MPoly(j - 1));
                        binom.scale(Rat(1, j));
                        cpow *= Rat(c);
                    }
                    p += HPoly::monomial(w, j, binom * cpow);
                }
                return p;
            }};
}

namespace {

// Content product with an initial exponent offset folded in, so that
// truncation at the top of the window never costs a retained exponent.
HPoly offset_content_product(const Partition& nu, const ContentWeights& weights,
                             HWindow window, int offset) {
    HPoly acc = HPoly::monomial(window, offset, MPoly(1));
    for (int c : cell_contents(nu)) acc *= weights.y(c, window);
    return acc;
}

}  // namespace

HPoly content_product(const Partition& nu, const ContentWeights& weights, HWindow window) {
    return offset_content_product(nu, weights, window, 0);
}

HPoly eigenvalue_B(const Partition& nu) {
    const unsigned n = nu.weight();
    const HWindow w{0, static_cast<int>(n)};
    HPoly acc = HPoly::constant(w, MPoly(1));
    for (int c : cell_contents(nu)) {
        HPoly f = HPoly::constant(w, MPoly(1));
        f += HPoly::monomial(w, 1, MPoly(Rat(c)));
        acc *= f;
    }
    acc.scale(Rat(diagram_stats(nu).dim, factorial(n)));
    return acc;
}

PSeries build_content_series(const ContentWeights& weights, unsigned weight_bound,
                             bool rescale, HWindow window, unsigned threads) {
    if (rescale && weight_bound >= 1 && window.lo > -2 * static_cast<int>(weight_bound))
        throw WindowUnderflow("window cannot hold hbar^{-2n} up to the weight bound");

    std::vector<Partition> nus;
    for (unsigned n = 0; n <= weight_bound; ++n)
        for (Partition& nu : partitions_of(n)) nus.push_back(std::move(nu));

    auto contributions = parallel_map<PSeries>(nus.size(), threads, [&](std::size_t i) {
        const Partition& nu = nus[i];
        const unsigned n = nu.weight();
        HPoly factor =
            offset_content_product(nu, weights, window, rescale ? -2 * static_cast<int>(n) : 0);
        factor.scale(Rat(diagram_stats(nu).dim, factorial(n)));

        PSeries out(weight_bound, window);
        const PSeries s = schur(nu);
        for (const auto& [mu, c] : s.terms()) {
            HPoly coeff = factor * c.as_rat();
            if (rescale)
                coeff = coeff.shifted(static_cast<int>(mu.weight()) -
                                      static_cast<int>(mu.length()));
            out.add_term(mu, coeff);
        }
        return out;
    });

    PSeries acc(weight_bound, window);
    for (const PSeries& s : contributions) acc += s;
    return acc;
}

GenFunction build_S(unsigned weight_bound, unsigned genus_bound, unsigned threads) {
    const int n = static_cast<int>(weight_bound);
    const int g = static_cast<int>(genus_bound);
    // lo holds every hbar^{-2n} prefactor. hi must retain every exponent
    // that can still land in a genus <= genus_bound slice after the log's
    // cross products; 2(N+G) bounds the worst case with margin.
    const HWindow window{-2 * n, 2 * (n + g)};

    const PSeries inner =
        build_content_series(bms_weights(), weight_bound, /*rescale=*/true, window, threads);
    const PSeries logged = log_series(inner);

    GenFunction gf;
    gf.weight_bound = weight_bound;
    gf.genus_bound = genus_bound;
    gf.series = PSeries(weight_bound, window);
    for (const auto& [mu, c] : logged.terms()) {
        const HPoly lifted = c.shifted(2).truncated_above(2 * g);
        if (lifted.is_zero()) continue;
        if (mu.empty())
            throw InvariantViolation("log retained a constant term");
        for (const auto& [e, coeff] : lifted.terms())
            if (e < 0 || e % 2 != 0)
                throw InvariantViolation("odd or negative hbar exponent survived assembly");
        gf.series.add_term(mu, lifted);
    }
    return gf;
}

MPoly b_number(const GenFunction& gf, unsigned g, const Partition& nu) {
    if (nu.empty()) throw OutOfBounds("ramification type must be nonempty");
    if (nu.weight() > gf.weight_bound) throw OutOfBounds("weight exceeds assembled bound");
    if (g > gf.genus_bound) throw OutOfBounds("genus exceeds assembled bound");
    return gf.series.coeff(nu).coeff(2 * static_cast<int>(g));
}

Rat b_number_at(const GenFunction& gf, unsigned g, const Partition& nu, const Rat& m_value) {
    return b_number(gf, g, nu).eval(m_value);
}

MPoly bms_number(const Partition& nu) {
    if (nu.empty()) throw OutOfBounds("ramification type must be nonempty");
    const unsigned n = nu.weight();
    const unsigned l = nu.length();
    const MPoly m = MPoly::variable();

    MPoly acc = m;
    for (const auto& [part, mult] : nu.multiplicities()) {
        const MPoly f = cycle_factor_poly(part);
        for (unsigned k = 0; k < mult; ++k) acc *= f;
    }

    // (mn - n - 1)! / (mn - n - l + 2)! as a polynomial identity: a falling
    // factorial for l >= 3, otherwise division by the surplus factors
    // (mn - n) ... (mn - n + 2 - l), which is provably exact.
    const MPoly base = MPoly(static_cast<long>(n)) * m - MPoly(static_cast<long>(n));
    if (l >= 3) {
        acc *= falling_factorial(base - MPoly(1), l - 3);
    } else {
        const MPoly divisor = falling_factorial(base + MPoly(static_cast<long>(2 - l)), 3 - l);
        acc = exact_divide(acc, divisor);
    }
    return acc;
}

PSeries genus_slice(const GenFunction& gf, unsigned g) {
    if (g > gf.genus_bound) throw OutOfBounds("genus exceeds assembled bound");
    const HWindow flat{0, 0};
    PSeries out(gf.weight_bound, flat);
    for (const auto& [mu, c] : gf.series.terms())
        out.add_term(mu, HPoly::constant(flat, c.coeff(2 * static_cast<int>(g))));
    return out;
}

}  // namespace covercount
