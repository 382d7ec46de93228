#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "covercount/partition.hpp"
#include "covercount/rational.hpp"

namespace covercount {

/// Bijection on {0, ..., n-1}, stored as the image sequence.
class Permutation {
public:
    explicit Permutation(std::vector<std::uint8_t> images);
    static Permutation identity(unsigned n);

    unsigned size() const { return static_cast<unsigned>(img_.size()); }
    std::uint8_t operator()(unsigned x) const { return img_[x]; }
    const std::vector<std::uint8_t>& images() const { return img_; }

    /// "this, then next": result(x) = next(this(x)).
    Permutation then(const Permutation& next) const;
    Permutation inverse() const;

    unsigned cycle_count() const;
    Partition cycle_type() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.img_ == b.img_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.img_ < b.img_;
    }

private:
    std::vector<std::uint8_t> img_;
};

/// A tuple of permutations together with the derived last factor sigma such
/// that (tuple, sigma) multiplies to the identity.
struct Constellation {
    std::vector<Permutation> tuple;
    Permutation product;  // sigma
    bool transitive = false;
};

Constellation make_constellation(std::vector<Permutation> tuple);

/// Genus from 2 - 2g = 2n - sum over branch points of (n - cycle count),
/// the sum running over the tuple entries and the derived product. Throws
/// NonIntegerGenus if the total ramification has the wrong parity.
int genus_of(const std::vector<Permutation>& tuple, const Permutation& product, unsigned n);

struct CountTableKeyOrder {
    bool operator()(const std::pair<Partition, unsigned>& a,
                    const std::pair<Partition, unsigned>& b) const {
        PartitionOrder po;
        if (po(a.first, b.first)) return true;
        if (po(b.first, a.first)) return false;
        return a.second < b.second;
    }
};

/// (cycle type of sigma, genus) -> transitive tuple count divided by n!.
struct CountTable {
    std::map<std::pair<Partition, unsigned>, Rat, CountTableKeyOrder> cells;
};

struct EnumerationResult {
    CountTable table;
    std::uint64_t transitive_tuples = 0;
    std::uint64_t intransitive_tuples = 0;
};

/// Iterates all (n!)^m tuples of permutations in mixed-radix lexicographic
/// order over permutation ranks; the derived factor sigma is never
/// enumerated. Throws BudgetExceeded before any work if (n!)^m > budget,
/// and BoundExceeded for n > 10 (the in-memory rank table). Sharded
/// enumeration is deterministic: the shard structure is fixed and shard
/// tables are merged in shard order.
EnumerationResult enumerate_counts(unsigned n, unsigned m,
                                   std::uint64_t budget = 1'000'000'000ULL,
                                   unsigned threads = 1);

/// Number of orbits of transitive tuples with product of cycle type nu
/// under simultaneous conjugation. Throws BudgetExceeded if
/// (n!)^{m+1} > budget.
std::uint64_t count_conjugacy_orbits(unsigned n, unsigned m, const Partition& nu,
                                     std::uint64_t budget = 1'000'000'000ULL);

}  // namespace covercount
