#include <doctest.h>

#include "covercount/errors.hpp"
#include "covercount/genseries.hpp"
#include "covercount/oracle.hpp"

using namespace covercount;

namespace {

Permutation perm(std::initializer_list<int> images) {
    std::vector<std::uint8_t> img;
    for (int v : images) img.push_back(static_cast<std::uint8_t>(v));
    return Permutation(std::move(img));
}

Rat cell(const CountTable& t, const Partition& nu, unsigned g) {
    auto it = t.cells.find({nu, g});
    return it == t.cells.end() ? Rat(0) : it->second;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("permutation basics") {
    const Permutation three_cycle = perm({1, 2, 0});
    CHECK(three_cycle.cycle_count() == 1);
    CHECK(three_cycle.cycle_type() == Partition{3});
    CHECK(three_cycle.then(three_cycle).cycle_type() == Partition{3});
    CHECK(three_cycle.then(three_cycle.inverse()) == Permutation::identity(3));
    const Permutation t = perm({1, 0, 2});
    CHECK(t.cycle_type() == Partition{2, 1});
    CHECK_THROWS_AS(perm({0, 0, 1}), InvariantViolation);
}

TEST_CASE("genus computation: worked examples") {
    const unsigned n2 = 2;
    const Permutation t2 = perm({1, 0});
    const Permutation id2 = Permutation::identity(2);
    CHECK(genus_of({t2, t2}, id2, n2) == 0);

    CHECK(genus_of({Permutation::identity(1), Permutation::identity(1),
                    Permutation::identity(1)},
                   Permutation::identity(1), 1) == 0);

    const Permutation c3 = perm({1, 2, 0});
    CHECK(genus_of({c3, c3}, c3, 3) == 1);

    // a single transposition has odd total defect
    CHECK_THROWS_AS(genus_of({t2}, id2, 2), NonIntegerGenus);
}

TEST_CASE("constellations") {
    const Permutation t = perm({1, 0});
    const Constellation c = make_constellation({t, t});
    CHECK(c.product == Permutation::identity(2));
    CHECK(c.transitive);
    const Constellation d = make_constellation({Permutation::identity(2)});
    CHECK(!d.transitive);
    CHECK(d.product == Permutation::identity(2));
}

TEST_CASE("enumeration: worked tables") {
    // n = 2, m = 2: four tuples; (e,e) is intransitive, (e,t) and (t,e)
    // give product type (2), (t,t) gives (1,1).
    const EnumerationResult r22 = enumerate_counts(2, 2);
    REQUIRE(r22.table.cells.size() == 2);
    CHECK(cell(r22.table, Partition{2}, 0) == Rat(1));
    CHECK(cell(r22.table, Partition{1, 1}, 0) == Rat(1, 2));
    CHECK(r22.transitive_tuples == 3);
    CHECK(r22.intransitive_tuples == 1);

    const EnumerationResult r13 = enumerate_counts(1, 3);
    REQUIRE(r13.table.cells.size() == 1);
    CHECK(cell(r13.table, Partition{1}, 0) == Rat(1));

    // n = 3, m = 2: ten tuples of product type (3) at genus 0, two at
    // genus 1 (pairs of equal 3-cycles), each divided by 3! = 6.
    const EnumerationResult r32 = enumerate_counts(3, 2);
    CHECK(cell(r32.table, Partition{3}, 0) == Rat(5, 3));
    CHECK(cell(r32.table, Partition{3}, 1) == Rat(1, 3));
}

TEST_CASE("tuple conservation") {
    for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned m = 1; m <= 3; ++m) {
            const EnumerationResult r = enumerate_counts(n, m);
            BigInt total;
            mpz_pow_ui(total.get_mpz_t(), factorial(n).get_mpz_t(), m);
            CHECK(BigInt(r.transitive_tuples) + BigInt(r.intransitive_tuples) == total);
            Rat weighted(0);
            for (const auto& [key, count] : r.table.cells) weighted += count;
            CHECK(weighted * Rat(factorial(n)) == Rat(BigInt(r.transitive_tuples)));
        }
    }
}

TEST_CASE("budget is enforced before any work") {
    CHECK_THROWS_AS(enumerate_counts(3, 2, 35), BudgetExceeded);   // 36 tuples
    CHECK_NOTHROW(enumerate_counts(3, 2, 36));
    CHECK_THROWS_AS(count_conjugacy_orbits(2, 2, Partition{2}, 7), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_counts(12, 1), BoundExceeded);
}

TEST_CASE("sharded enumeration is deterministic") {
    const EnumerationResult serial = enumerate_counts(4, 2, 1'000'000'000ULL, 1);
    const EnumerationResult four = enumerate_counts(4, 2, 1'000'000'000ULL, 4);
    const EnumerationResult many = enumerate_counts(4, 2, 1'000'000'000ULL, 16);
    CHECK(serial.table.cells == four.table.cells);
    CHECK(serial.table.cells == many.table.cells);
    CHECK(serial.transitive_tuples == four.transitive_tuples);
}

TEST_CASE("conjugation orbits: worked examples") {
    // S_2 is abelian, so simultaneous conjugation is trivial and the two
    // transitive tuples (e,t), (t,e) with product type (2) form two orbits
    // (Burnside: (2 + 2)/2). The weighted count of the same cell is 1.
    CHECK(count_conjugacy_orbits(2, 2, Partition{2}) == 2);
    CHECK(cell(enumerate_counts(2, 2).table, Partition{2}, 0) == Rat(1));

    CHECK(count_conjugacy_orbits(2, 2, Partition{1, 1}) == 1);
    CHECK(count_conjugacy_orbits(1, 1, Partition{1}) == 1);
    // the two 3-cycles are conjugate: one orbit, weighted count 1/3
    CHECK(count_conjugacy_orbits(3, 1, Partition{3}) == 1);
    CHECK(cell(enumerate_counts(3, 1).table, Partition{3}, 0) == Rat(1, 3));
    // orbit counts differ from the weighted counts: (1,1) has weighted
    // count 1/2 but a single orbit
    CHECK(cell(enumerate_counts(2, 2).table, Partition{1, 1}, 0) == Rat(1, 2));
}

TEST_CASE("genus nonnegativity across an enumeration") {
    const EnumerationResult r = enumerate_counts(4, 2);
    for (const auto& [key, count] : r.table.cells) {
        CHECK(count.sign() > 0);
        CHECK(key.second <= 3);
    }
}

TEST_CASE("small oracle cells match the series") {
    const GenFunction gf = build_S(3, 2);
    for (unsigned mm = 2; mm <= 3; ++mm) {
        const EnumerationResult r = enumerate_counts(3, mm);
        for (const auto& [key, count] : r.table.cells)
            CHECK(count == b_number_at(gf, key.second, key.first, Rat(static_cast<long>(mm))));
        // and no nonzero series coefficient is missing from the table
        for (unsigned g = 0; g <= 2; ++g)
            for (const Partition& nu : partitions_of(3))
                CHECK(b_number_at(gf, g, nu, Rat(static_cast<long>(mm))) ==
                      cell(r.table, nu, g));
    }
}

}  // TEST_SUITE
