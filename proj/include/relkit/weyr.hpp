#ifndef RELKIT_WEYR_HPP
#define RELKIT_WEYR_HPP

#include <map>
#include <numeric>
#include <vector>

#include "relkit/spectral.hpp"

namespace relkit {

/**
 * A finitely supported nonincreasing sequence of positive integers, stored
 * without trailing zeros.  The stop index is the length: recomputing one
 * entry past it yields zero.
 */
struct WeyrSeq {
    std::vector<int> entries;

    WeyrSeq() = default;
    explicit WeyrSeq(std::vector<int> e) : entries(std::move(e)) {}

    bool empty() const { return entries.empty(); }
    int stop_index() const { return static_cast<int>(entries.size()); }
    int at(int k) const {  // 1-based; zero outside the support
        if (k < 1 || k > stop_index()) return 0;
        return entries[static_cast<std::size_t>(k - 1)];
    }
    int total() const { return std::accumulate(entries.begin(), entries.end(), 0); }

    bool well_formed() const {
        int prev = 0;
        for (std::size_t k = 0; k < entries.size(); ++k) {
            if (entries[k] <= 0) return false;
            if (k > 0 && entries[k] > prev) return false;
            prev = entries[k];
        }
        return true;
    }

    // Conjugate partition: lengths[i] = number of entries >= i+1, which turns
    // quotient dimensions into chain-length multiplicities.
    std::vector<int> conjugate() const {
        std::vector<int> lengths;
        if (entries.empty()) return lengths;
        for (int i = entries[0]; i >= 1; --i) {
            int count = 0;
            for (int e : entries)
                if (e >= i) ++count;
            lengths.push_back(count);
        }
        // lengths[j] currently counts entries >= entries[0]-j; rebuild as the
        // multiset of chain lengths, longest first
        std::vector<int> chain_lengths;
        const int num_chains = entries[0];
        for (int c = 0; c < num_chains; ++c) {
            int len = 0;
            for (std::size_t k = 0; k < entries.size(); ++k)
                if (entries[k] > c) len = static_cast<int>(k + 1);
            chain_lengths.push_back(len);
        }
        return chain_lengths;  // nonincreasing
    }

    friend bool operator==(const WeyrSeq& a, const WeyrSeq& b) { return a.entries == b.entries; }
    friend bool operator!=(const WeyrSeq& a, const WeyrSeq& b) { return !(a == b); }
};

/**
 * The complete invariant (B, W, A, C): the singular sequence, the sequences
 * at the finite proper eigenvalues, the sequence at infinity, and the
 * multishift sequence.  C is stored from index 1; C_0 always equals C_1.
 */
template <class F>
struct WeyrCharacteristic {
    WeyrSeq B;
    std::map<F, WeyrSeq, FieldLess<F>> W;
    WeyrSeq A;
    WeyrSeq C;

    int c0() const { return C.at(1); }

    // dim A_S = 2 B_1 + B_2 + ... + B_d
    int dim_singular() const { return B.empty() ? 0 : B.total() + B.entries[0]; }
    int dim_jordan_at(const F& lambda) const {
        auto it = W.find(lambda);
        return it == W.end() ? 0 : it->second.total();
    }
    int dim_jordan_inf() const { return A.total(); }
    int dim_multishift() const { return C.total(); }

    // expected dim of graph(A)
    int graph_dim() const {
        int d = dim_singular() + dim_jordan_inf() + dim_multishift();
        for (const auto& [l, w] : W) d += w.total();
        return d;
    }
    // expected dim of dom A + ran A
    int carrier_dim() const {
        int d = B.total() + A.total() + C.total() + c0();
        for (const auto& [l, w] : W) d += w.total();
        return d;
    }

    bool well_formed() const {
        if (!B.well_formed() || !A.well_formed() || !C.well_formed()) return false;
        for (const auto& [l, w] : W)
            if (w.empty() || !w.well_formed()) return false;
        return true;
    }

    friend bool operator==(const WeyrCharacteristic& a, const WeyrCharacteristic& b) {
        return a.B == b.B && a.W == b.W && a.A == b.A && a.C == b.C;
    }
    friend bool operator!=(const WeyrCharacteristic& a, const WeyrCharacteristic& b) {
        return !(a == b);
    }
};

/**
 * Singular Weyr sequence B: dimensions of (ker A^k /\ R_c) / (ker A^(k-1) /\ R_c),
 * stopping at the first stabilisation.
 */
template <class F>
WeyrSeq weyr_B(const LinearRelation<F>& a, const Subspace<F>& rc) {
    WeyrSeq out;
    Subspace<F> ker_k = Subspace<F>::zero(a.n());
    Subspace<F> prev = intersect(ker_k, rc);
    for (;;) {
        ker_k = preimage(a, ker_k);
        Subspace<F> cur = intersect(ker_k, rc);
        if (cur == prev) break;
        out.entries.push_back(static_cast<int>(cur.dim() - prev.dim()));
        prev = std::move(cur);
    }
    internal_check(out.well_formed(), "singular Weyr sequence must be nonincreasing");
    return out;
}

template <class F>
WeyrSeq weyr_B(const LinearRelation<F>& a) {
    return weyr_B(a, singular_chain_space(a));
}

/**
 * Core sequence of Jordan quotients at zero: dimensions of
 * (ker A^k + R_c) / (ker A^(k-1) + R_c).  The sequences at a finite
 * eigenvalue and at infinity are this sequence of the shifted and the
 * inverted relation.
 */
template <class F>
WeyrSeq weyr_V(const LinearRelation<F>& a, const Subspace<F>& rc) {
    WeyrSeq out;
    Subspace<F> ker_k = Subspace<F>::zero(a.n());
    Subspace<F> prev = rc;
    for (;;) {
        ker_k = preimage(a, ker_k);
        Subspace<F> cur = sum(ker_k, rc);
        if (cur == prev) break;
        out.entries.push_back(static_cast<int>(cur.dim() - prev.dim()));
        prev = std::move(cur);
    }
    internal_check(out.well_formed(), "Jordan Weyr sequence must be nonincreasing");
    return out;
}

template <class F>
WeyrSeq weyr_W(const LinearRelation<F>& a, const F& lambda, const Subspace<F>& rc) {
    return weyr_V(shift(a, lambda), rc);
}

template <class F>
WeyrSeq weyr_W(const LinearRelation<F>& a, const F& lambda) {
    return weyr_W(a, lambda, singular_chain_space(a));
}

template <class F>
WeyrSeq weyr_A(const LinearRelation<F>& a, const Subspace<F>& rc) {
    return weyr_V(inverse(a), rc);
}

template <class F>
WeyrSeq weyr_A(const LinearRelation<F>& a) {
    return weyr_A(a, singular_chain_space(a));
}

/**
 * Multishift Weyr sequence C, stored from index 1: dimensions of
 * (ran A^k + R_r) / (ran A^(k+1) + R_r).  C_0, the dimension of
 * (dom A + ran A) / (ran A + R_r), equals C_1 whenever nonzero and is
 * verified here.
 */
template <class F>
WeyrSeq weyr_C(const LinearRelation<F>& a, const Subspace<F>& rr) {
    WeyrSeq out;
    Subspace<F> ran_k = range_of(a);
    Subspace<F> prev = sum(ran_k, rr);
    const int c0 = static_cast<int>(carrier_of(a).dim() - prev.dim());
    for (;;) {
        ran_k = image(a, ran_k);
        Subspace<F> cur = sum(ran_k, rr);
        if (cur == prev) break;
        out.entries.push_back(static_cast<int>(prev.dim() - cur.dim()));
        prev = std::move(cur);
    }
    internal_check(out.well_formed(), "multishift Weyr sequence must be nonincreasing");
    internal_check(c0 == (out.empty() ? 0 : out.entries[0]),
                   "C_0 must equal C_1 in the multishift sequence");
    return out;
}

template <class F>
WeyrCharacteristic<F> weyr_characteristic(const LinearRelation<F>& a,
                                          const SpectralData<F>& sd) {
    if (sd.blocked()) throw UnsplitEigenvalues(sd.unsplit_strings());
    WeyrCharacteristic<F> wc;
    wc.B = weyr_B(a, sd.Rc);
    for (const F& lambda : sd.proper_eigs) {
        WeyrSeq w = weyr_W(a, lambda, sd.Rc);
        internal_check(!w.empty(), "a proper eigenvalue must have a nonempty sequence");
        wc.W.emplace(lambda, std::move(w));
    }
    wc.A = weyr_A(a, sd.Rc);
    wc.C = weyr_C(a, sd.Rr);
    return wc;
}

template <class F>
WeyrCharacteristic<F> weyr_characteristic(const LinearRelation<F>& a) {
    return weyr_characteristic(a, analyze_spectrum(a));
}

}  // namespace relkit

#endif
