#include "covercount/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "covercount/errors.hpp"

namespace covercount {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw ParseError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ParseError("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "-") return Partition();
    std::vector<unsigned> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos ||
            tok.size() > 9)
            throw ParseError("malformed partition: " + text);
        const unsigned long v = std::stoul(tok);
        if (v == 0) throw ParseError("malformed partition: " + text);
        parts.push_back(static_cast<unsigned>(v));
    }
    if (text.back() == ',') throw ParseError("malformed partition: " + text);
    return Partition(std::move(parts));
}

unsigned Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::vector<std::pair<unsigned, unsigned>> Partition::multiplicities() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned p : parts_) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<unsigned> conj(parts_[0], 0u);
    for (unsigned p : parts_)
        for (unsigned j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    const unsigned wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<unsigned> cur{n};
    for (;;) {
        out.push_back(Partition(cur));
        unsigned rem = 0;
        while (!cur.empty() && cur.back() == 1) {
            cur.pop_back();
            ++rem;
        }
        if (cur.empty()) break;
        --cur.back();
        ++rem;
        const unsigned unit = cur.back();
        while (rem >= unit) {
            cur.push_back(unit);
            rem -= unit;
        }
        if (rem > 0) cur.push_back(rem);
    }
    return out;
}

std::vector<int> cell_contents(const Partition& nu) {
    std::vector<int> out;
    out.reserve(nu.weight());
    for (unsigned i = 0; i < nu.length(); ++i)
        for (unsigned j = 0; j < nu.part(i); ++j)
            out.push_back(static_cast<int>(j) - static_cast<int>(i));
    return out;
}

DiagramStats diagram_stats(const Partition& nu) {
    DiagramStats s;
    const unsigned n = nu.weight();
    const Partition conj = nu.conjugate();

    s.contents = cell_contents(nu);
    std::sort(s.contents.begin(), s.contents.end());

    BigInt hook_prod = 1;
    for (unsigned i = 0; i < nu.length(); ++i) {
        for (unsigned j = 0; j < nu.part(i); ++j) {
            const unsigned arm = nu.part(i) - 1 - j;
            const unsigned leg = conj.part(j) - 1 - i;
            const unsigned h = arm + leg + 1;
            s.hooks.push_back(h);
            hook_prod *= h;
        }
    }
    std::sort(s.hooks.begin(), s.hooks.end(), std::greater<>());

    const BigInt nfact = factorial(n);
    if (!mpz_divisible_p(nfact.get_mpz_t(), hook_prod.get_mpz_t()))
        throw InvariantViolation("hook product does not divide n!");
    s.dim = nfact / hook_prod;

    s.z = 1;
    s.aut = 1;
    for (const auto& [part, mult] : nu.multiplicities()) {
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), part, mult);
        const BigInt mf = factorial(mult);
        s.z *= pw * mf;
        s.aut *= mf;
    }
    s.class_size = nfact / s.z;
    return s;
}

BigInt dimension_by_syt(const Partition& nu, unsigned bound) {
    const unsigned n = nu.weight();
    if (n > bound) throw BoundExceeded("partition weight exceeds SYT bound");
    if (n == 0) return 1;
    BigInt count = 0;
    std::vector<unsigned> fill(nu.length(), 0u);
    std::function<void(unsigned)> place = [&](unsigned placed) {
        if (placed == n) {
            ++count;
            return;
        }
        for (unsigned r = 0; r < nu.length(); ++r) {
            if (fill[r] >= nu.part(r)) continue;
            if (r > 0 && fill[r - 1] <= fill[r]) continue;
            ++fill[r];
            place(placed + 1);
            --fill[r];
        }
    };
    place(0);
    return count;
}

std::ostream& operator<<(std::ostream& os, const Partition& nu) { return os << nu.str(); }

}  // namespace covercount
