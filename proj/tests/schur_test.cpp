#include <doctest.h>

#include <random>

#include "covercount/errors.hpp"
#include "covercount/schur.hpp"

using namespace covercount;

namespace {

const HWindow kFlat{0, 0};

PSeries rat_monomial(unsigned bound, const Partition& mu, const Rat& c) {
    return PSeries::monomial(bound, kFlat, mu, HPoly::constant(kFlat, MPoly(c)));
}

PSeries random_sparse(std::mt19937& rng, unsigned bound) {
    std::uniform_int_distribution<long> c(-4, 4);
    std::uniform_int_distribution<unsigned> w(1, bound);
    PSeries s(bound, kFlat);
    for (int k = 0; k < 4; ++k) {
        const auto ps = partitions_of(w(rng));
        std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
        s += rat_monomial(bound, ps[pick(rng)], Rat(c(rng), 1 + std::abs(c(rng))));
    }
    return s;
}

}  // namespace

TEST_SUITE("schur") {

TEST_CASE("one-part functions") {
    CHECK(one_part_schur(0, 4) == PSeries::constant(4, kFlat, Rat(1)));
    // s_2 = p1^2/2 + p2/2
    PSeries s2 = rat_monomial(4, Partition{1, 1}, Rat(1, 2));
    s2 += rat_monomial(4, Partition{2}, Rat(1, 2));
    CHECK(one_part_schur(2, 4) == s2);
    // s_3 = p1^3/6 + p1 p2/2 + p3/3
    PSeries s3 = rat_monomial(4, Partition{1, 1, 1}, Rat(1, 6));
    s3 += rat_monomial(4, Partition{2, 1}, Rat(1, 2));
    s3 += rat_monomial(4, Partition{3}, Rat(1, 3));
    CHECK(one_part_schur(3, 4) == s3);
    CHECK_THROWS_AS(one_part_schur(5, 4), BoundExceeded);
}

TEST_CASE("schur: worked examples") {
    // s_{1,1} = p1^2/2 - p2/2
    PSeries s11 = rat_monomial(2, Partition{1, 1}, Rat(1, 2));
    s11 += rat_monomial(2, Partition{2}, Rat(-1, 2));
    CHECK(schur(Partition{1, 1}) == s11);
    // s_{2,1} = p1^3/3 - p3/3
    PSeries s21 = rat_monomial(3, Partition{1, 1, 1}, Rat(1, 3));
    s21 += rat_monomial(3, Partition{3}, Rat(-1, 3));
    CHECK(schur(Partition{2, 1}) == s21);
    CHECK(schur(Partition()) == PSeries::constant(0, kFlat, Rat(1)));
}

TEST_CASE("schur structure for all small shapes") {
    for (unsigned n = 1; n <= 7; ++n) {
        for (const Partition& nu : partitions_of(n)) {
            const PSeries s = schur(nu);
            const DiagramStats st = diagram_stats(nu);
            // quasihomogeneous of weight n
            for (const auto& [mu, c] : s.terms()) CHECK(mu.weight() == n);
            // leading coefficient of p_{1^n} is dim/n!
            std::vector<unsigned> ones(n, 1);
            CHECK(s.coeff(Partition(ones)).as_rat() == Rat(st.dim, factorial(n)));
        }
    }
}

TEST_CASE("sum of dim * schur collapses to a power of p1") {
    for (unsigned n = 1; n <= 6; ++n) {
        PSeries acc(n, kFlat);
        for (const Partition& nu : partitions_of(n)) {
            PSeries s = schur(nu);
            s.scale(Rat(diagram_stats(nu).dim));
            acc += s;
        }
        CHECK(acc == rat_monomial(n, Partition(std::vector<unsigned>(n, 1)), Rat(1)));
    }
}

TEST_CASE("scaled schur: worked examples") {
    CHECK(scale_schur(Partition{1}) ==
          PSeries::monomial(1, {0, 0}, Partition{1}, HPoly::constant({0, 0}, MPoly(1))));
    // scaled s_2 = p1^2/2 + hbar p2/2
    const HWindow w1{0, 1};
    PSeries e2(2, w1);
    e2.add_term(Partition{1, 1}, HPoly::constant(w1, MPoly(Rat(1, 2))));
    e2.add_term(Partition{2}, HPoly::monomial(w1, 1, MPoly(Rat(1, 2))));
    CHECK(scale_schur(Partition{2}) == e2);
    // scaled s_{2,1} = p1^3/3 - hbar^2 p3/3
    const HWindow w2{0, 2};
    PSeries e21(3, w2);
    e21.add_term(Partition{1, 1, 1}, HPoly::constant(w2, MPoly(Rat(1, 3))));
    e21.add_term(Partition{3}, HPoly::monomial(w2, 2, MPoly(Rat(-1, 3))));
    CHECK(scale_schur(Partition{2, 1}) == e21);
}

TEST_CASE("character table: worked entries") {
    const CharacterTable t2 = character_table(2);
    // classes in reverse-lex order: (2), (1,1)
    REQUIRE(t2.classes.size() == 2);
    CHECK(t2.classes[0] == Partition{2});
    // lambda = (1,1): chi(C_(2)) = -1; lambda = (2): chi(C_(2)) = 1
    CHECK(t2.value(1, 0) == -1);
    CHECK(t2.value(0, 0) == 1);

    const CharacterTable t3 = character_table(3);
    // lambda = (2,1) is index 1; mu = (2,1) is index 1
    CHECK(t3.value(1, 1) == 0);
    CHECK_THROWS_AS(character_table(11), BoundExceeded);
}

TEST_CASE("character table: identity column and orthogonality") {
    for (unsigned n = 1; n <= 6; ++n) {
        const CharacterTable t = character_table(n);
        const auto classes = t.classes;
        std::vector<BigInt> class_size;
        for (const Partition& mu : classes) class_size.push_back(diagram_stats(mu).class_size);
        for (std::size_t a = 0; a < classes.size(); ++a) {
            CHECK(BigInt(t.value(a, classes.size() - 1)) == diagram_stats(classes[a]).dim);
            for (std::size_t b = 0; b <= a; ++b) {
                BigInt dot = 0;
                for (std::size_t muI = 0; muI < classes.size(); ++muI)
                    dot += BigInt(t.value(a, muI)) * BigInt(t.value(b, muI)) * class_size[muI];
                CHECK(dot == (a == b ? factorial(n) : BigInt(0)));
            }
        }
    }
}

TEST_CASE("character table is thread-count independent") {
    const CharacterTable serial = character_table(6, 1);
    const CharacterTable parallel = character_table(6, 4);
    CHECK(serial.chi == parallel.chi);
}

TEST_CASE("principal specialization: worked examples") {
    CHECK(principal_specialization(Partition{1}, 3) == Rat(3));
    CHECK(principal_specialization(Partition{2}, 2) == Rat(3));
    CHECK(principal_specialization(Partition{1, 1}, 1) == Rat(0));
}

TEST_CASE("hook content identity") {
    for (unsigned n = 1; n <= 6; ++n) {
        for (const Partition& nu : partitions_of(n)) {
            for (unsigned ones = 1; ones <= 5; ++ones) {
                Rat expected(1);
                const Partition conj = nu.conjugate();
                for (unsigned i = 0; i < nu.length(); ++i) {
                    for (unsigned j = 0; j < nu.part(i); ++j) {
                        const int c = static_cast<int>(j) - static_cast<int>(i);
                        const unsigned hook =
                            (nu.part(i) - 1 - j) + (conj.part(j) - 1 - i) + 1;
                        expected *= Rat(static_cast<long>(ones) + c,
                                        static_cast<long>(hook));
                    }
                }
                CHECK(principal_specialization(nu, ones) == expected);
            }
        }
    }
}

TEST_CASE("log and exp") {
    // log(1 + p1) at bound 2 = p1 - p1^2/2
    PSeries a = PSeries::constant(2, kFlat, Rat(1));
    a += rat_monomial(2, Partition{1}, Rat(1));
    PSeries expected = rat_monomial(2, Partition{1}, Rat(1));
    expected += rat_monomial(2, Partition{1, 1}, Rat(-1, 2));
    CHECK(log_series(a) == expected);

    // log(exp(p1)) = p1
    const PSeries p1 = rat_monomial(5, Partition{1}, Rat(1));
    CHECK(log_series(exp_series(p1)) == p1);

    PSeries zero_const(3, kFlat);
    CHECK_THROWS_AS(log_series(zero_const), BadConstantTerm);
    CHECK_THROWS_AS(exp_series(a), BadConstantTerm);
}

TEST_CASE("log inverts exp on random sparse series") {
    std::mt19937 rng(314159);
    for (int it = 0; it < 20; ++it) {
        const PSeries x = random_sparse(rng, 6);
        CHECK(log_series(exp_series(x)) == x);
    }
}

}  // TEST_SUITE
