#include "covercount/schur.hpp"

#include <functional>
#include <map>

#include "covercount/errors.hpp"
#include "covercount/parallel.hpp"

namespace covercount {

namespace {

// s_0, ..., s_kmax via k*s_k = sum_{i=1..k} p_i s_{k-i}.
std::vector<PSeries> one_part_ladder(unsigned kmax, unsigned weight_bound, HWindow w) {
    const HPoly one = HPoly::constant(w, MPoly(1));
    std::vector<PSeries> s;
    s.reserve(kmax + 1);
    s.push_back(PSeries::constant(weight_bound, w, Rat(1)));
    for (unsigned k = 1; k <= kmax; ++k) {
        PSeries acc(weight_bound, w);
        for (unsigned i = 1; i <= k; ++i)
            acc += PSeries::monomial(weight_bound, w, Partition{i}, one) * s[k - i];
        acc.scale(Rat(1, static_cast<long>(k)));
        s.push_back(std::move(acc));
    }
    return s;
}

}  // namespace

PSeries one_part_schur(unsigned k, unsigned weight_bound, HWindow window) {
    if (k > weight_bound) throw BoundExceeded("one-part index exceeds weight bound");
    return one_part_ladder(k, weight_bound, window)[k];
}

PSeries schur(const Partition& nu, HWindow window) {
    const unsigned n = nu.weight();
    const unsigned l = nu.length();
    if (l == 0) return PSeries::constant(0, window, Rat(1));

    const auto ladder = one_part_ladder(n, n, window);
    const PSeries zero(n, window);
    // entry(i, j) = s_{nu_i - i + j}, 1-based i, j; negative index is 0.
    auto entry = [&](unsigned i, unsigned j) -> const PSeries& {
        const long idx = static_cast<long>(nu.part(i - 1)) - static_cast<long>(i) +
                         static_cast<long>(j);
        if (idx < 0) return zero;
        return ladder[static_cast<std::size_t>(idx)];
    };

    // Laplace expansion along rows, memoized on the set of unused columns.
    std::map<unsigned, PSeries> memo;
    std::function<const PSeries&(unsigned)> minor = [&](unsigned mask) -> const PSeries& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        const unsigned row = l - static_cast<unsigned>(__builtin_popcount(mask)) + 1;
        PSeries det(n, window);
        int sign = 1;
        for (unsigned j = 1; j <= l; ++j) {
            const unsigned bit = 1u << (j - 1);
            if (!(mask & bit)) continue;
            const PSeries& e = entry(row, j);
            if (!e.is_zero()) {
                PSeries t = e * minor(mask & ~bit);
                if (sign < 0) t.scale(Rat(-1));
                det += t;
            }
            sign = -sign;
        }
        return memo.emplace(mask, std::move(det)).first->second;
    };
    memo.emplace(0u, PSeries::constant(n, window, Rat(1)));
    return minor((1u << l) - 1);
}

PSeries scale_schur(const Partition& nu) {
    const unsigned n = nu.weight();
    return scale_schur(nu, HWindow{0, n == 0 ? 0 : static_cast<int>(n) - 1});
}

PSeries scale_schur(const Partition& nu, HWindow window) {
    const PSeries plain = schur(nu);
    PSeries out(plain.weight_bound(), window);
    for (const auto& [mu, c] : plain.terms()) {
        const int e = static_cast<int>(mu.weight()) - static_cast<int>(mu.length());
        out.add_term(mu, HPoly::monomial(window, e, MPoly(c.as_rat())));
    }
    return out;
}

CharacterTable character_table(unsigned n, unsigned threads, unsigned bound) {
    if (n > bound) throw BoundExceeded("character table size exceeds bound");
    CharacterTable t;
    t.n = n;
    t.classes = partitions_of(n);

    std::vector<Rat> z;
    z.reserve(t.classes.size());
    for (const Partition& mu : t.classes) z.emplace_back(diagram_stats(mu).z);

    t.chi = parallel_map<std::vector<long>>(
        t.classes.size(), threads, [&](std::size_t li) {
            const PSeries s = schur(t.classes[li]);
            std::vector<long> row;
            row.reserve(t.classes.size());
            for (std::size_t mi = 0; mi < t.classes.size(); ++mi) {
                const Rat v = s.coeff(t.classes[mi]).as_rat() * z[mi];
                row.push_back(static_cast<long>(v.as_integer()));  // NonIntegerEntry on bugs
            }
            return row;
        });

    for (std::size_t li = 0; li < t.classes.size(); ++li) {
        const BigInt dim = diagram_stats(t.classes[li]).dim;
        if (BigInt(t.chi[li].back()) != dim)
            throw NonIntegerEntry("character at the identity class is not the dimension");
    }
    return t;
}

Rat principal_specialization(const Partition& nu, unsigned n_ones) {
    return schur(nu).eval_all_p(Rat(static_cast<long>(n_ones))).as_rat();
}

}  // namespace covercount
