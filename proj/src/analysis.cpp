#include "covercount/analysis.hpp"

#include <algorithm>

#include "covercount/errors.hpp"

namespace covercount {

PSeries derive(const PSeries& series, unsigned index) {
    if (index == 0) throw InvariantViolation("derivative index must be >= 1");
    PSeries out(series.weight_bound(), series.window());
    for (const auto& [mu, c] : series.terms()) {
        unsigned mult = 0;
        for (unsigned p : mu.parts())
            if (p == index) ++mult;
        if (mult == 0) continue;
        std::vector<unsigned> rest;
        rest.reserve(mu.length() - 1);
        bool removed = false;
        for (unsigned p : mu.parts()) {
            if (!removed && p == index) {
                removed = true;
                continue;
            }
            rest.push_back(p);
        }
        out.add_term(Partition(std::move(rest)), c * Rat(static_cast<long>(mult)));
    }
    return out;
}

KPForm paper_linear_form(bool perturbed) {
    return {"paper-linear",
            {{Rat(1), 0, {1, 3}, 1},
             {Rat(-1), 0, {2, 2}, 1},
             {Rat(-1, 2), 0, {1, 1}, 1},
             {Rat(1, 12), perturbed ? 2 : 0, {1, 1, 1, 1}, 1}}};
}

KPForm standard_nonlinear_form(bool perturbed) {
    return {"standard-nonlinear",
            {{Rat(1), 0, {1, 3}, 1},
             {Rat(-1), 0, {2, 2}, 1},
             {Rat(-1, 2), 0, {1, 1}, 2},
             {Rat(-1, 12), perturbed ? 2 : 0, {1, 1, 1, 1}, 1}}};
}

std::vector<KPForm> candidate_forms(bool perturbed) {
    std::vector<KPForm> forms{paper_linear_form(perturbed), standard_nonlinear_form(perturbed)};
    forms.push_back({"candidate-1",
                     {{Rat(1), 0, {1, 3}, 1},
                      {Rat(-1), 0, {2, 2}, 1},
                      {Rat(-1, 2), 0, {1, 1}, 2},
                      {Rat(1, 12), perturbed ? 2 : 0, {1, 1, 1, 1}, 1}}});
    forms.push_back({"candidate-2",
                     {{Rat(1), 0, {1, 3}, 1},
                      {Rat(-1), 0, {2, 2}, 1},
                      {Rat(-1, 2), 0, {1, 1}, 1},
                      {Rat(-1, 12), perturbed ? 2 : 0, {1, 1, 1, 1}, 1}}});
    return forms;
}

KPResidual kp_residual(const PSeries& series, const KPForm& form, unsigned weight_mask,
                       int exponent_cap) {
    PSeries acc(series.weight_bound(), series.window());
    for (const KPTerm& term : form.terms) {
        PSeries d = series;
        for (unsigned idx : term.derivs) d = derive(d, idx);
        PSeries val = d;
        for (unsigned k = 1; k < term.power; ++k) val *= d;
        val.scale(term.scalar);
        if (term.hbar_exp != 0)
            val.scale(HPoly::monomial(series.window(), term.hbar_exp, MPoly(1)));
        acc += val;
    }

    KPResidual res;
    res.form_id = form.id;
    res.weight_mask = weight_mask;
    res.exponent_cap = exponent_cap;
    res.residual = PSeries(series.weight_bound(), series.window());
    for (const auto& [mu, c] : acc.terms()) {
        if (mu.weight() > weight_mask) continue;
        res.residual.add_term(mu, c.truncated_above(exponent_cap));
    }

    res.vanishes = res.residual.is_zero();
    res.vanishes_through_weight = static_cast<int>(weight_mask);
    if (!res.vanishes) {
        const auto& [mu, c] = *res.residual.terms().begin();
        res.vanishes_through_weight = static_cast<int>(mu.weight()) - 1;
        const int e = c.min_exponent();
        res.first_nonzero = KPResidual::Term{mu, e, c.coeff(e)};
    }
    return res;
}

KPResidual kp_residual(const GenFunction& gf, const KPForm& form) {
    if (gf.weight_bound < 4) throw OutOfBounds("need weight bound >= 4 for the residual");
    return kp_residual(gf.series, form, gf.weight_bound - 4,
                       2 * static_cast<int>(gf.genus_bound));
}

ConjectureReport conjecture_check(const GenFunction& gf, const Partition& nu) {
    ConjectureReport rep;
    rep.nu = nu;
    const MPoly m = MPoly::variable();
    rep.divisor = m;
    for (unsigned part : nu.parts()) {
        const MPoly base = MPoly(static_cast<long>(part)) * m - MPoly(2);
        rep.divisor *= falling_factorial(base, part - 1);
    }
    const MPoly b1 = b_number(gf, 1, nu);
    try {
        rep.quotient = exact_divide(b1, rep.divisor);
        rep.divisible = true;
    } catch (const NotDivisible&) {
        rep.divisible = false;
    }
    rep.degree_bound = 2 * static_cast<int>(nu.length()) - 1;
    rep.quotient_degree = rep.divisible ? rep.quotient.degree() : -1;
    rep.degree_bound_ok = rep.divisible && rep.quotient_degree <= rep.degree_bound;
    return rep;
}

}  // namespace covercount
