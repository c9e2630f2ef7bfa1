#ifndef RELKIT_RANDOM_HPP
#define RELKIT_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "relkit/equiv.hpp"

namespace relkit {

/**
 * Deterministic random source.  Draws go through explicit modular reduction
 * of the raw mt19937_64 stream so that generated instances are reproducible
 * across standard libraries (distribution objects are not portable).
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int next_int(int lo, int hi) {  // inclusive bounds
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(eng_() % span);
    }

    bool next_bool() { return (eng_() & 1u) != 0; }

  private:
    std::mt19937_64 eng_;
};

namespace randomgen {

inline WeyrSeq random_seq(Rng& rng, int budget, int max_len) {
    WeyrSeq out;
    if (budget <= 0 || max_len <= 0) return out;
    int prev = rng.next_int(1, std::min(3, budget));
    int used = 0;
    for (int k = 0; k < max_len; ++k) {
        if (used + prev > budget) break;
        out.entries.push_back(prev);
        used += prev;
        if (rng.next_bool()) break;
        prev = rng.next_int(1, prev);
    }
    return out;
}

inline std::vector<Rational> eigenvalue_pool() {
    return {Rational(0),      Rational(1),  Rational(-1), Rational(2),
            Rational(1, 2),   Rational(-2), Rational(3),  Rational(-1, 2),
            Rational(5, 3)};
}

}  // namespace randomgen

/**
 * Random valid Weyr characteristic with carrier dimension at most max_dim.
 * Profiles: "mixed" draws all four families, "operator" only finite Jordan
 * parts, "singular" only B, "multishift" only C.
 */
template <class F>
WeyrCharacteristic<F> random_weyr(Rng& rng, int max_dim, const std::string& profile = "mixed") {
    WeyrCharacteristic<F> wc;
    int budget = max_dim;
    const bool mixed = profile == "mixed";
    if (profile == "singular" || (mixed && rng.next_bool())) {
        wc.B = randomgen::random_seq(rng, budget, 4);
        budget -= wc.B.total();
    }
    if (profile == "operator" || mixed) {
        auto pool = randomgen::eigenvalue_pool();
        const int count = rng.next_int(0, 2);
        for (int k = 0; k < count && budget > 0; ++k) {
            const F lambda = F(pool[static_cast<std::size_t>(rng.next_int(0, static_cast<int>(pool.size()) - 1))]);
            if (wc.W.count(lambda)) continue;
            WeyrSeq w = randomgen::random_seq(rng, budget, 3);
            if (w.empty()) continue;
            budget -= w.total();
            wc.W.emplace(lambda, std::move(w));
        }
    }
    if (mixed && rng.next_bool()) {
        wc.A = randomgen::random_seq(rng, budget, 3);
        budget -= wc.A.total();
    }
    if (profile == "multishift" || (mixed && rng.next_bool())) {
        WeyrSeq c = randomgen::random_seq(rng, budget > 0 ? budget - 1 : 0, 3);
        if (!c.empty() && budget >= c.total() + c.entries[0]) {
            budget -= c.total() + c.entries[0];  // entries plus the C_0 block
            wc.C = std::move(c);
        }
    }
    return wc;
}

/**
 * Random invertible transform: unit lower triangular times unit upper
 * triangular times a permutation, all with small integer entries, so the
 * inverse stays exact and coefficients stay bounded.
 */
template <class F>
Transform<F> random_transform(Rng& rng, Eigen::Index n) {
    Mat<F> lower = Mat<F>::Identity(n, n);
    Mat<F> upper = Mat<F>::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < i; ++j) {
            lower(i, j) = F(rng.next_int(-2, 2));
            upper(j, i) = F(rng.next_int(-2, 2));
        }
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (Eigen::Index i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(rng.next_int(0, static_cast<int>(i)))]);
    Mat<F> p = Mat<F>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) p(perm[static_cast<std::size_t>(i)], i) = F(1);
    return Transform<F>(Mat<F>(lower * upper * p));
}

template <class F>
struct RandomInstance {
    WeyrCharacteristic<F> weyr;     // ground truth
    LinearRelation<F> relation;     // synthesize(weyr) conjugated by a transform
};

template <class F>
RandomInstance<F> random_relation(Rng& rng, int max_dim, const std::string& profile = "mixed") {
    RandomInstance<F> out;
    out.weyr = random_weyr<F>(rng, max_dim, profile);
    const LinearRelation<F> canonical = synthesize(out.weyr);
    if (canonical.n() == 0) {
        out.relation = canonical;
        return out;
    }
    out.relation = apply_transform(canonical, random_transform<F>(rng, canonical.n()));
    return out;
}

}  // namespace relkit

#endif
