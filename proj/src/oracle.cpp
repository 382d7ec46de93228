#include "covercount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "covercount/errors.hpp"
#include "covercount/parallel.hpp"

namespace covercount {

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (std::uint8_t v : img_) {
        if (v >= img_.size() || seen[v]) throw InvariantViolation("not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(unsigned n) {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& next) const {
    std::vector<std::uint8_t> img(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) img[x] = next.img_[img_[x]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint8_t> img(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) img[img_[x]] = static_cast<std::uint8_t>(x);
    return Permutation(std::move(img));
}

unsigned Permutation::cycle_count() const {
    unsigned count = 0;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t x = 0; x < img_.size(); ++x) {
        if (seen[x]) continue;
        ++count;
        for (std::size_t y = x; !seen[y]; y = img_[y]) seen[y] = true;
    }
    return count;
}

Partition Permutation::cycle_type() const {
    std::vector<unsigned> lens;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t x = 0; x < img_.size(); ++x) {
        if (seen[x]) continue;
        unsigned len = 0;
        for (std::size_t y = x; !seen[y]; y = img_[y]) {
            seen[y] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return Partition(std::move(lens));
}

namespace {

struct UnionFind {
    std::vector<std::uint8_t> parent;
    explicit UnionFind(unsigned n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::uint8_t{0});
    }
    std::uint8_t find(std::uint8_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint8_t a, std::uint8_t b) { parent[find(a)] = find(b); }
};

bool tuple_transitive(const std::vector<Permutation>& tuple, const Permutation& product,
                      unsigned n) {
    if (n <= 1) return true;
    UnionFind uf(n);
    for (const Permutation& g : tuple)
        for (unsigned x = 0; x < n; ++x) uf.unite(static_cast<std::uint8_t>(x), g(x));
    for (unsigned x = 0; x < n; ++x) uf.unite(static_cast<std::uint8_t>(x), product(x));
    const std::uint8_t root = uf.find(0);
    for (unsigned x = 1; x < n; ++x)
        if (uf.find(static_cast<std::uint8_t>(x)) != root) return false;
    return true;
}

BigInt tuple_space_size(unsigned n, unsigned m) {
    BigInt total;
    mpz_pow_ui(total.get_mpz_t(), factorial(n).get_mpz_t(), m);
    return total;
}

}  // namespace

Constellation make_constellation(std::vector<Permutation> tuple) {
    if (tuple.empty()) throw InvariantViolation("constellation needs at least one entry");
    const unsigned n = tuple.front().size();
    Permutation prod = Permutation::identity(n);
    for (const Permutation& g : tuple) prod = prod.then(g);
    Constellation c{std::move(tuple), prod.inverse(), false};
    c.transitive = tuple_transitive(c.tuple, c.product, n);
    return c;
}

int genus_of(const std::vector<Permutation>& tuple, const Permutation& product, unsigned n) {
    unsigned defect = n - product.cycle_count();
    for (const Permutation& g : tuple) defect += n - g.cycle_count();
    if (defect % 2 != 0) throw NonIntegerGenus("odd total ramification defect");
    return 1 - static_cast<int>(n) + static_cast<int>(defect / 2);
}

EnumerationResult enumerate_counts(unsigned n, unsigned m, std::uint64_t budget,
                                   unsigned threads) {
    if (n == 0 || m == 0) throw InvariantViolation("need n >= 1 and m >= 1");
    if (n > 10) throw BoundExceeded("degree too large for the permutation table");
    if (tuple_space_size(n, m) > BigInt(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("(n!)^m exceeds the step budget");

    // All of S_n in lexicographic rank order, with cycle data precomputed.
    std::vector<Permutation> perms;
    std::vector<unsigned> cycles;
    {
        std::vector<std::uint8_t> img(n);
        std::iota(img.begin(), img.end(), std::uint8_t{0});
        do {
            perms.emplace_back(img);
            cycles.push_back(perms.back().cycle_count());
        } while (std::next_permutation(img.begin(), img.end()));
    }
    const std::size_t nf = perms.size();

    const std::vector<Partition> types = partitions_of(n);
    std::map<Partition, std::size_t, PartitionOrder> type_index;
    for (std::size_t i = 0; i < types.size(); ++i) type_index.emplace(types[i], i);

    // Worst-case genus bound keeps the per-shard tally a flat array.
    const unsigned max_genus = ((m + 1) * (n - 1)) / 2 + 1;
    struct ShardTally {
        std::vector<std::uint64_t> cells;  // [type][genus]
        std::uint64_t transitive = 0, intransitive = 0;
    };

    // Fixed shard structure: 64 rank blocks of the first factor, independent
    // of the worker count.
    const std::size_t shards = std::min<std::size_t>(64, nf);
    auto tallies = parallel_map<ShardTally>(shards, threads, [&](std::size_t shard) {
        ShardTally tally;
        tally.cells.assign(types.size() * (max_genus + 1), 0);
        const std::size_t begin = shard * nf / shards;
        const std::size_t end = (shard + 1) * nf / shards;

        std::vector<std::size_t> ranks(m, 0);
        std::vector<std::uint8_t> prod(n);
        for (std::size_t first = begin; first < end; ++first) {
            ranks.assign(m, 0);
            ranks[0] = first;
            for (;;) {
                // sigma = inverse of the tuple product; its cycle data.
                std::iota(prod.begin(), prod.end(), std::uint8_t{0});
                unsigned defect = 0;
                for (unsigned k = 0; k < m; ++k) {
                    const Permutation& g = perms[ranks[k]];
                    for (unsigned x = 0; x < n; ++x) prod[x] = g(prod[x]);
                    defect += n - cycles[ranks[k]];
                }
                const Permutation sigma = Permutation(prod).inverse();
                defect += n - sigma.cycle_count();

                bool transitive = true;
                if (n > 1) {
                    UnionFind uf(n);
                    for (unsigned k = 0; k < m; ++k)
                        for (unsigned x = 0; x < n; ++x)
                            uf.unite(static_cast<std::uint8_t>(x), perms[ranks[k]](x));
                    for (unsigned x = 0; x < n; ++x)
                        uf.unite(static_cast<std::uint8_t>(x), sigma(x));
                    const std::uint8_t root = uf.find(0);
                    for (unsigned x = 1; x < n && transitive; ++x)
                        transitive = uf.find(static_cast<std::uint8_t>(x)) == root;
                }

                if (transitive) {
                    if (defect % 2 != 0) throw NonIntegerGenus("odd ramification defect");
                    const int genus = 1 - static_cast<int>(n) + static_cast<int>(defect / 2);
                    if (genus < 0) throw InvariantViolation("negative genus for transitive tuple");
                    const std::size_t ti = type_index.at(sigma.cycle_type());
                    ++tally.cells[ti * (max_genus + 1) + static_cast<unsigned>(genus)];
                    ++tally.transitive;
                } else {
                    ++tally.intransitive;
                }

                // Odometer over the remaining m-1 ranks.
                unsigned pos = m - 1;
                for (;;) {
                    if (pos == 0) break;
                    if (++ranks[pos] < nf) break;
                    ranks[pos] = 0;
                    --pos;
                }
                if (pos == 0) break;
            }
        }
        return tally;
    });

    EnumerationResult result;
    std::vector<std::uint64_t> totals(types.size() * (max_genus + 1), 0);
    for (const ShardTally& t : tallies) {  // fixed shard order
        for (std::size_t i = 0; i < totals.size(); ++i) totals[i] += t.cells[i];
        result.transitive_tuples += t.transitive;
        result.intransitive_tuples += t.intransitive;
    }
    const Rat scale(BigInt(1), factorial(n));
    for (std::size_t ti = 0; ti < types.size(); ++ti)
        for (unsigned g = 0; g <= max_genus; ++g) {
            const std::uint64_t c = totals[ti * (max_genus + 1) + g];
            if (c != 0)
                result.table.cells.emplace(std::make_pair(types[ti], g),
                                           Rat(BigInt(static_cast<unsigned long>(c))) * scale);
        }
    return result;
}

std::uint64_t count_conjugacy_orbits(unsigned n, unsigned m, const Partition& nu,
                                     std::uint64_t budget) {
    if (n == 0 || m == 0) throw InvariantViolation("need n >= 1 and m >= 1");
    if (n > 10) throw BoundExceeded("degree too large for the permutation table");
    if (nu.weight() != n) throw OutOfBounds("cycle type must be a partition of n");
    if (tuple_space_size(n, m + 1) > BigInt(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("(n!)^{m+1} exceeds the step budget");

    std::vector<Permutation> perms;
    {
        std::vector<std::uint8_t> img(n);
        std::iota(img.begin(), img.end(), std::uint8_t{0});
        do perms.emplace_back(img);
        while (std::next_permutation(img.begin(), img.end()));
    }

    std::set<std::vector<std::uint8_t>> canonical;
    std::vector<std::size_t> ranks(m, 0);
    for (;;) {
        std::vector<Permutation> tuple;
        tuple.reserve(m);
        for (unsigned k = 0; k < m; ++k) tuple.push_back(perms[ranks[k]]);
        const Constellation c = make_constellation(tuple);
        if (c.transitive && c.product.cycle_type() == nu) {
            // Canonical form: lexicographic minimum over simultaneous
            // conjugation of the concatenated image sequences.
            std::vector<std::uint8_t> best;
            for (const Permutation& h : perms) {
                const Permutation hinv = h.inverse();
                std::vector<std::uint8_t> cand;
                cand.reserve(m * n);
                for (const Permutation& g : tuple) {
                    const Permutation conj = hinv.then(g).then(h);
                    cand.insert(cand.end(), conj.images().begin(), conj.images().end());
                }
                if (best.empty() || cand < best) best = std::move(cand);
            }
            canonical.insert(std::move(best));
        }

        unsigned pos = m;
        while (pos > 0) {
            if (++ranks[pos - 1] < perms.size()) break;
            ranks[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return canonical.size();
}

}  // namespace covercount
