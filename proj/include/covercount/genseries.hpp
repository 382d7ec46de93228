#pragma once

#include <functional>
#include <string>

#include "covercount/pseries.hpp"
#include "covercount/schur.hpp"

namespace covercount {

/// Total rule assigning an HPoly value y_c to every integer content c.
struct ContentWeights {
    std::string name;
    std::function<HPoly(int content, HWindow window)> y;
};

/// y_c = 1 for every c.
ContentWeights unit_weights();

/// y_c = (1 + c*hbar)^m expanded in hbar up to the window, coefficients
/// binomial polynomials in m.
ContentWeights bms_weights();

/// prod over cells of nu of y_{c(cell)}, truncated to the window.
HPoly content_product(const Partition& nu, const ContentWeights& weights, HWindow window);

/// (dim_nu / n!) * prod over cells of (1 + c(cell)*hbar), exactly.
HPoly eigenvalue_B(const Partition& nu);

/// sum over n <= weight_bound, nu of n, of
///     (prod y_{c(k)}) * (dim_nu / n!) * s_nu
/// with s_nu replaced by hbar^{-2n} * scaled s_nu when rescale is set
/// (equivalently p_i -> p_i / hbar^{i+1}). Throws WindowUnderflow when the
/// window cannot hold hbar^{-2n}.
PSeries build_content_series(const ContentWeights& weights, unsigned weight_bound,
                             bool rescale, HWindow window, unsigned threads = 1);

/// The assembled covering-count generating function: coefficient of
/// p_mu * hbar^{2g} is the count polynomial in m for ramification type mu
/// and genus g. Every stored hbar exponent is even and lies in
/// [0, 2*genus_bound].
struct GenFunction {
    PSeries series = PSeries(0, HWindow{0, 0});
    unsigned weight_bound = 0;
    unsigned genus_bound = 0;
};

/// hbar^2 * log of the rescaled content series under the weights of
/// bms_weights(), with m kept symbolic. Genus slices above genus_bound are
/// discarded; surviving odd or negative hbar exponents raise
/// InvariantViolation.
GenFunction build_S(unsigned weight_bound, unsigned genus_bound, unsigned threads = 1);

/// Count polynomial in m for genus g and ramification type nu.
MPoly b_number(const GenFunction& gf, unsigned g, const Partition& nu);
Rat b_number_at(const GenFunction& gf, unsigned g, const Partition& nu, const Rat& m_value);

/// Closed-form genus-0 count for a fixed permutation of cycle type nu,
/// computed entirely inside Q[m] (falling factorials and exact division, no
/// integer factorials).
MPoly bms_number(const Partition& nu);

/// The hbar^{2g} layer as an hbar-free series (window {0,0}).
PSeries genus_slice(const GenFunction& gf, unsigned g);

}  // namespace covercount
