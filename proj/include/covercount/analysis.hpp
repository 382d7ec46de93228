#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covercount/genseries.hpp"

namespace covercount {

/// Partial derivative with respect to p_index: p_mu maps to
/// (multiplicity of index in mu) * p_{mu minus one copy of index}.
PSeries derive(const PSeries& series, unsigned index);

/// One summand of a differential form: scalar * hbar^{hbar_exp} *
/// (d^k series / dp_{derivs[0]} ... dp_{derivs[k-1]})^power.
struct KPTerm {
    Rat scalar;
    int hbar_exp = 0;
    std::vector<unsigned> derivs;
    unsigned power = 1;
};

struct KPForm {
    std::string id;
    std::vector<KPTerm> terms;
};

/// Linear variant with the second p1-derivative unsquared, moved to one
/// side: S13 - S22 - 1/2 S11 + (hbar^2/12) S1111.
KPForm paper_linear_form(bool perturbed = true);

/// The standard first equation for a log-tau in power sums, moved to one
/// side: S13 - S22 - 1/2 (S11)^2 - (hbar^2/12) S1111.
KPForm standard_nonlinear_form(bool perturbed = true);

/// paper_linear, standard_nonlinear, and the documented sign variants
/// candidate-1 (squared, +hbar^2/12) and candidate-2 (linear, -hbar^2/12).
std::vector<KPForm> candidate_forms(bool perturbed = true);

struct KPResidual {
    std::string form_id;
    PSeries residual = PSeries(0, HWindow{0, 0});  // masked
    unsigned weight_mask;    // residual kept for weights <= weight_mask
    int exponent_cap;        // and hbar exponents <= exponent_cap
    bool vanishes = false;
    // largest w with no residual term of weight <= w; -1 when even the
    // weight-0 slot is nonzero; equals weight_mask when everything vanishes
    int vanishes_through_weight = -1;
    struct Term {
        Partition mu;
        int hbar_exp;
        MPoly coeff;
    };
    std::optional<Term> first_nonzero;
};

/// Evaluates the form on an arbitrary series; the caller chooses the masks.
KPResidual kp_residual(const PSeries& series, const KPForm& form, unsigned weight_mask,
                       int exponent_cap);

/// Evaluates on the assembled generating function, masking weights above
/// weight_bound - 4 (fourth derivatives consume weight 4) and hbar
/// exponents above 2 * genus_bound (higher slices were discarded).
KPResidual kp_residual(const GenFunction& gf, const KPForm& form);

/// Divisibility test of the genus-1 count by
///   m * prod_i falling_factorial(m*nu_i - 2, nu_i - 1),
/// with the quotient degree compared against 2 l(nu) - 1.
struct ConjectureReport {
    Partition nu;
    MPoly divisor;
    bool divisible = false;
    MPoly quotient;  // meaningful only when divisible
    int quotient_degree = -1;
    int degree_bound = 0;
    bool degree_bound_ok = false;
};

ConjectureReport conjecture_check(const GenFunction& gf, const Partition& nu);

}  // namespace covercount
