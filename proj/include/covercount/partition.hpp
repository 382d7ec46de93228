#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "covercount/rational.hpp"

namespace covercount {

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);
    Partition(std::initializer_list<unsigned> parts)
        : Partition(std::vector<unsigned>(parts)) {}

    /// Parses "3,1,1"; "-" and "" denote the empty partition.
    static Partition parse(const std::string& text);

    unsigned weight() const;            // |nu|
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    unsigned part(unsigned i) const { return parts_[i]; }
    const std::vector<unsigned>& parts() const { return parts_; }

    /// (part value, multiplicity) pairs, decreasing part value.
    std::vector<std::pair<unsigned, unsigned>> multiplicities() const;

    Partition conjugate() const;

    /// "3,1,1"; the empty partition renders as "-".
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<unsigned> parts_;
};

/// Strict weak order: by weight, then reverse-lexicographic within a weight
/// (the order partitions_of emits).
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of n, each exactly once, in reverse-lexicographic order.
std::vector<Partition> partitions_of(unsigned n);

struct DiagramStats {
    std::vector<int> contents;     // one per cell, sorted ascending
    std::vector<unsigned> hooks;   // one per cell, sorted descending
    BigInt dim;                    // n! / prod(hooks)
    BigInt z;                      // prod i^{d_i} d_i!
    BigInt class_size;             // n! / z
    BigInt aut;                    // prod d_i!
};

DiagramStats diagram_stats(const Partition& nu);

/// Cell contents in row-major order (not sorted); column - row, zero-based.
std::vector<int> cell_contents(const Partition& nu);

/// Standard Young tableau count by backtracking; independent of the
/// hook-length formula. Throws BoundExceeded above the bound.
BigInt dimension_by_syt(const Partition& nu, unsigned bound = 10);

std::ostream& operator<<(std::ostream& os, const Partition& nu);

}  // namespace covercount
