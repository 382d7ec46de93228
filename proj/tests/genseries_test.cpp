#include <doctest.h>

#include "covercount/errors.hpp"
#include "covercount/genseries.hpp"

using namespace covercount;

namespace {

const MPoly m = MPoly::variable();

MPoly lin(long a, long b) { return MPoly(Rat(a)) * m + MPoly(Rat(b)); }

Partition ones(unsigned n) { return Partition(std::vector<unsigned>(n, 1)); }

}  // namespace

TEST_SUITE("genseries") {

TEST_CASE("content products under the closed-form weights") {
    const HWindow w{0, 4};
    // nu = (1): single cell of content 0
    CHECK(content_product(Partition{1}, bms_weights(), w) == HPoly::constant(w, MPoly(1)));
    // nu = (2): (1 + hbar)^m
    const HPoly c2 = content_product(Partition{2}, bms_weights(), w);
    CHECK(c2.coeff(0) == MPoly(1));
    CHECK(c2.coeff(1) == m);
    CHECK(c2.coeff(2) == (m * lin(1, -1)).divided_exactly(MPoly(2)));
    // nu = (2,1): (1 - hbar^2)^m = 1 - m hbar^2 + C(m,2) hbar^4 - ...
    const HPoly c21 = content_product(Partition{2, 1}, bms_weights(), w);
    CHECK(c21.coeff(0) == MPoly(1));
    CHECK(c21.coeff(1).is_zero());
    CHECK(c21.coeff(2) == -m);
    CHECK(c21.coeff(3).is_zero());
    CHECK(c21.coeff(4) == (m * lin(1, -1)).divided_exactly(MPoly(2)));
    // unit weights are constant 1
    CHECK(content_product(Partition{3, 2}, unit_weights(), w) ==
          HPoly::constant(w, MPoly(1)));
}

TEST_CASE("multiplication-operator eigenvalues") {
    CHECK(eigenvalue_B(Partition{1}).as_mpoly() == MPoly(1));
    const HPoly e2 = eigenvalue_B(Partition{2});  // (1 + hbar)/2
    CHECK(e2.coeff(0) == MPoly(Rat(1, 2)));
    CHECK(e2.coeff(1) == MPoly(Rat(1, 2)));
    CHECK(e2.max_exponent() == 1);
    const HPoly e11 = eigenvalue_B(Partition{1, 1});  // (1 - hbar)/2
    CHECK(e11.coeff(0) == MPoly(Rat(1, 2)));
    CHECK(e11.coeff(1) == MPoly(Rat(-1, 2)));

    // hbar^0 coefficient is dim/n!; the degree is the number of cells of
    // nonzero content (e.g. (2,1) gives (1-hbar^2)/3, degree 2).
    for (unsigned n = 1; n <= 6; ++n) {
        for (const Partition& nu : partitions_of(n)) {
            const HPoly e = eigenvalue_B(nu);
            const DiagramStats st = diagram_stats(nu);
            CHECK(e.coeff(0).coeff(0) == Rat(st.dim, factorial(n)));
            unsigned nonzero_contents = 0;
            for (int c : st.contents)
                if (c != 0) ++nonzero_contents;
            CHECK(e.max_exponent() == static_cast<int>(nonzero_contents));
        }
    }
}

TEST_CASE("content series: collapse identities") {
    // unit weights, no rescale: sum dim_nu s_nu = p1^n/n!, i.e. exp(p1)
    const HWindow flat{0, 0};
    const PSeries f = build_content_series(unit_weights(), 3, false, flat);
    PSeries expected(3, flat);
    for (unsigned k = 0; k <= 3; ++k)
        expected.add_term(ones(k), HPoly::constant(flat, MPoly(Rat(1, factorial(k)))));
    CHECK(f == expected);

    // closed-form weights at m = 0, rescaled: exp(hbar^{-2} p1)
    const HWindow w{-8, 4};
    const PSeries s = build_content_series(bms_weights(), 4, true, w).eval_m(Rat(0));
    PSeries e(4, w);
    e.add_term(Partition{1}, HPoly::monomial(w, -2, MPoly(1)));
    CHECK(s == exp_series(e));

    // bound 0: the constant series 1
    CHECK(build_content_series(bms_weights(), 0, true, {0, 2}) ==
          PSeries::constant(0, {0, 2}, Rat(1)));

    // window too shallow for hbar^{-2n}
    CHECK_THROWS_AS(build_content_series(bms_weights(), 4, true, {-6, 4}),
                    WindowUnderflow);
}

TEST_CASE("assembled series: hand-checked slices") {
    const GenFunction gf = build_S(4, 1);

    // weight-1 slice is exactly p1 at genus 0
    CHECK(b_number(gf, 0, Partition{1}) == MPoly(1));
    CHECK(b_number(gf, 1, Partition{1}).is_zero());

    // p2 coefficients
    CHECK(b_number(gf, 0, Partition{2}) == m.divided_exactly(MPoly(2)));
    CHECK(b_number(gf, 1, Partition{2}) ==
          (m * lin(1, -1) * lin(1, -2)).divided_exactly(MPoly(12)));

    // p1^2 at genus 1
    CHECK(b_number(gf, 1, Partition{1, 1}) ==
          (m * lin(1, -1) * lin(1, -2) * lin(1, -3)).divided_exactly(MPoly(48)));

    // genus-0 (1,1) count and its value at m = 2
    CHECK(b_number(gf, 0, Partition{1, 1}) == (m * lin(1, -1)).divided_exactly(MPoly(4)));
    CHECK(b_number_at(gf, 0, Partition{1, 1}, Rat(2)) == Rat(1, 2));

    // genus-1 (3) matches the degree-4 closed form
    CHECK(b_number(gf, 1, Partition{3}) ==
          (m * lin(3, -5) * lin(1, -1) * lin(3, -2)).divided_exactly(MPoly(24)));

    CHECK_THROWS_AS(b_number(gf, 2, Partition{2}), OutOfBounds);
    CHECK_THROWS_AS(b_number(gf, 0, Partition{5}), OutOfBounds);
    CHECK_THROWS_AS(b_number(gf, 0, Partition()), OutOfBounds);
}

TEST_CASE("assembled series: structure and specializations") {
    const GenFunction gf = build_S(5, 2);
    for (const auto& [mu, c] : gf.series.terms()) {
        CHECK(!mu.empty());
        for (const auto& [e, coeff] : c.terms()) {
            CHECK(e >= 0);
            CHECK(e <= 4);
            CHECK(e % 2 == 0);
        }
    }

    // m = 0: only p1 survives, at genus 0 with coefficient 1
    const PSeries at0 = gf.series.eval_m(Rat(0));
    CHECK(at0 == PSeries::monomial(5, gf.series.window(), Partition{1},
                                   HPoly::constant(gf.series.window(), MPoly(1))));

    // m = 1: genus 0 collapses to sum p_n / n, all higher genera vanish
    for (unsigned g = 0; g <= 2; ++g) {
        for (unsigned n = 1; n <= 5; ++n) {
            for (const Partition& nu : partitions_of(n)) {
                const Rat v = b_number_at(gf, g, nu, Rat(1));
                if (g == 0 && nu.length() == 1)
                    CHECK(v == Rat(1, static_cast<long>(n)));
                else
                    CHECK(v.is_zero());
            }
        }
    }
}

TEST_CASE("genus slices") {
    const GenFunction gf = build_S(4, 1);
    const PSeries g0_at_1 = genus_slice(gf, 0).eval_m(Rat(1));
    PSeries expected(4, {0, 0});
    for (unsigned n = 1; n <= 4; ++n)
        expected.add_term(Partition{n},
                          HPoly::constant({0, 0}, MPoly(Rat(1, static_cast<long>(n)))));
    CHECK(g0_at_1 == expected);
    CHECK_THROWS_AS(genus_slice(gf, 2), OutOfBounds);
}

TEST_CASE("closed-form counts for a fixed permutation") {
    CHECK(bms_number(Partition{1}) == MPoly(1));
    CHECK(bms_number(Partition{2}) == m);
    CHECK(bms_number(Partition{3}) == (m * lin(3, -1)).divided_exactly(MPoly(2)));
    // at m = 1 a full cycle admits exactly one covering
    CHECK(bms_number(Partition{3}).eval(Rat(1)) == Rat(1));
    CHECK(bms_number(Partition{1, 1}) == (m * lin(1, -1)).divided_exactly(MPoly(2)));
    CHECK_THROWS_AS(bms_number(Partition()), OutOfBounds);
}

TEST_CASE("genus-0 slice against the closed form") {
    const GenFunction gf = build_S(4, 0);
    for (unsigned n = 1; n <= 4; ++n) {
        for (const Partition& nu : partitions_of(n)) {
            MPoly lhs = b_number(gf, 0, nu);
            const DiagramStats st = diagram_stats(nu);
            lhs.scale(Rat(st.aut));
            for (unsigned p : nu.parts()) lhs.scale(Rat(static_cast<long>(p)));
            CHECK(lhs == bms_number(nu));
        }
    }
}

TEST_CASE("assembly is window-cap independent") {
    // Rebuilding with a larger cap by hand must not change retained slices.
    const unsigned N = 5, G = 1;
    const GenFunction gf = build_S(N, G);
    const HWindow big{-2 * static_cast<int>(N), 2 * static_cast<int>(N + G) + 6};
    const PSeries logged = log_series(build_content_series(bms_weights(), N, true, big));
    for (unsigned g = 0; g <= G; ++g)
        for (unsigned n = 1; n <= N; ++n)
            for (const Partition& nu : partitions_of(n))
                CHECK(b_number(gf, g, nu) ==
                      logged.coeff(nu).coeff(2 * static_cast<int>(g) - 2));
}

TEST_CASE("assembly is thread-count independent") {
    const GenFunction serial = build_S(4, 1, 1);
    const GenFunction parallel = build_S(4, 1, 4);
    CHECK(serial.series == parallel.series);
}

}  // TEST_SUITE
