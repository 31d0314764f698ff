#include <unordered_map>

#include "genred/rootdatum.hpp"

namespace genred {

namespace {

// Entries of Weyl matrices stay tiny; pack them into a flat int64 key for the
// dedup map, falling back to decimal strings if an entry ever overflows.
struct MatKey {
    std::vector<long> small;
    std::string big;

    bool operator==(const MatKey& o) const { return small == o.small && big == o.big; }
};

struct MatKeyHash {
    std::size_t operator()(const MatKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (long v : k.small) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        for (char c : k.big) h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

MatKey key_of(const IntMat& m) {
    MatKey k;
    k.small.reserve(m.entries().size());
    for (const Int& e : m.entries()) {
        if (mpz_fits_slong_p(e.get_mpz_t())) {
            k.small.push_back(mpz_get_si(e.get_mpz_t()));
        } else {
            k.small.clear();
            for (const Int& x : m.entries()) k.big += x.get_str() + ",";
            return k;
        }
    }
    return k;
}

}  // namespace

Int weyl_order(const CartanMatrix& C) {
    Int order(1);
    auto factorial = [](std::size_t n) {
        Int f(1);
        for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
        return f;
    };
    for (const TypeLabel& t : classify(C)) {
        Int part(1);
        switch (t.family) {
            case 'A': part = factorial(t.rank + 1); break;
            case 'B':
            case 'C': {
                part = factorial(t.rank);
                mpz_mul_2exp(part.get_mpz_t(), part.get_mpz_t(), t.rank);
                break;
            }
            case 'D': {
                part = factorial(t.rank);
                mpz_mul_2exp(part.get_mpz_t(), part.get_mpz_t(), t.rank - 1);
                break;
            }
            case 'G': part = 12; break;
            case 'F': part = 1152; break;
            case 'E':
                part = t.rank == 6 ? 51840 : (t.rank == 7 ? 2903040 : Int("696729600"));
                break;
            default: throw ConsistencyFailure("unknown family");
        }
        order *= part;
    }
    return order;
}

WeylGroup weyl_group(const RootDatum& D, std::size_t cap) {
    if (cap < 1) throw BadParams("weyl cap must be >= 1");
    if (weyl_order(D.cartan) > static_cast<unsigned long>(cap))
        throw CapExceeded("|W| = " + weyl_order(D.cartan).get_str() + " > " + std::to_string(cap));
    WeylGroup W;
    W.cap = cap;
    std::size_t r = D.base_size;

    std::unordered_map<MatKey, std::size_t, MatKeyHash> seen;
    IntMat id = IntMat::identity(D.rank);
    W.elements.push_back(id);
    W.lengths.push_back(0);
    W.words.push_back({});
    seen.emplace(key_of(id), 0);

    std::vector<std::size_t> level{0};
    unsigned depth = 0;
    while (!level.empty()) {
        ++depth;
        // candidates for the next level: w * s for w in the current level
        std::vector<std::pair<IntMat, std::vector<int>>> next;
        std::unordered_map<MatKey, std::size_t, MatKeyHash> next_seen;
        for (std::size_t idx : level) {
            for (std::size_t s = 0; s < r; ++s) {
                IntMat cand = W.elements[idx] * D.weyl_gens[s];
                MatKey k = key_of(cand);
                if (seen.count(k) || next_seen.count(k)) continue;
                std::vector<int> word = W.words[idx];
                word.push_back(static_cast<int>(s));
                next_seen.emplace(std::move(k), next.size());
                next.emplace_back(std::move(cand), std::move(word));
            }
        }
        // canonical order inside the level
        std::vector<std::size_t> order(next.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return next[a].first.compare(next[b].first) < 0; });
        level.clear();
        for (std::size_t i : order) {
            if (W.elements.size() >= cap) throw CapExceeded("|W| > " + std::to_string(cap));
            std::size_t pos = W.elements.size();
            seen.emplace(key_of(next[i].first), pos);
            W.elements.push_back(std::move(next[i].first));
            W.lengths.push_back(depth);
            W.words.push_back(std::move(next[i].second));
            level.push_back(pos);
        }
    }

    // spot-check: BFS depth equals the inversion count on a sample
    // (positive roots occupy the first half of the sorted root list)
    std::size_t positives = D.roots.size() / 2;
    if (positives > 0) {
        std::size_t step = std::max<std::size_t>(1, W.size() / 64);
        for (std::size_t i = 0; i < W.size(); i += step) {
            unsigned inv = 0;
            for (std::size_t a = 0; a < positives; ++a) {
                auto idx = D.root_index(W.elements[i].apply(D.roots[a]));
                if (!idx) throw ConsistencyFailure("Weyl element does not permute roots");
                if (*idx >= positives) ++inv;
            }
            if (inv != W.lengths[i]) throw ConsistencyFailure("length != inversion count");
        }
    }
    return W;
}

}  // namespace genred
