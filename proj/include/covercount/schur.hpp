#pragma once

#include <vector>

#include "covercount/pseries.hpp"

namespace covercount {

/// Degree-k coefficient of exp(sum_i p_i t^i / i): the one-part Schur
/// function in power sums. Quasihomogeneous of weight k; requires
/// k <= weight_bound.
PSeries one_part_schur(unsigned k, unsigned weight_bound, HWindow window = {0, 0});

/// Schur function s_nu in power sums via the Jacobi-Trudi determinant of
/// one-part Schur functions. Quasihomogeneous of weight |nu|.
PSeries schur(const Partition& nu, HWindow window = {0, 0});

/// s_nu with every monomial p_mu weighted by hbar^{|mu| - l(mu)}.
PSeries scale_schur(const Partition& nu);
PSeries scale_schur(const Partition& nu, HWindow window);

/// Irreducible character table of S_n: chi[lambda index][mu index], both
/// indices over partitions_of(n) in reverse-lexicographic order. Entries
/// are read off as z_mu times the p_mu coefficient of s_lambda.
struct CharacterTable {
    unsigned n = 0;
    std::vector<Partition> classes;
    std::vector<std::vector<long>> chi;

    long value(std::size_t lambda_idx, std::size_t mu_idx) const {
        return chi[lambda_idx][mu_idx];
    }
};

CharacterTable character_table(unsigned n, unsigned threads = 1, unsigned bound = 10);

/// s_nu evaluated at N ones, i.e. at p_i = N for every i.
Rat principal_specialization(const Partition& nu, unsigned n_ones);

}  // namespace covercount
