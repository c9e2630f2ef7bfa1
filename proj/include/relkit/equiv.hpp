#ifndef RELKIT_EQUIV_HPP
#define RELKIT_EQUIV_HPP

#include <utility>
#include <vector>

#include "relkit/decompose.hpp"

namespace relkit {

/**
 * An invertible coordinate change T of F^n.
 */
template <class F>
struct Transform {
    Mat<F> t;

    explicit Transform(Mat<F> m) : t(std::move(m)) {
        if (t.rows() != t.cols()) throw DimMismatch("transform must be square");
        if (rank_of<F>(t) != t.rows()) throw SingularTransform();
    }
};

// T A T^{-1}: pairs (x, y) |-> (T x, T y).
template <class F>
LinearRelation<F> apply_transform(const LinearRelation<F>& a, const Transform<F>& tr) {
    if (tr.t.rows() != a.n()) throw DimMismatch("transform size does not match the relation");
    const Eigen::Index n = a.n();
    Mat<F> g(2 * n, a.dim());
    g.topRows(n) = tr.t * a.x_block();
    g.bottomRows(n) = tr.t * a.y_block();
    return LinearRelation<F>(n, Subspace<F>::span_of(g));
}

template <class F>
struct EquivalenceWitness {
    bool equivalent = false;
    WeyrCharacteristic<F> left;
    WeyrCharacteristic<F> right;
};

/**
 * Strict equivalence test: two relations are strictly equivalent exactly
 * when their Weyr characteristics coincide.  Ambient dimensions may differ;
 * the characteristics decide.
 */
template <class F>
EquivalenceWitness<F> strictly_equivalent(const LinearRelation<F>& a, const LinearRelation<F>& b) {
    EquivalenceWitness<F> out;
    out.left = weyr_characteristic(a);
    out.right = weyr_characteristic(b);
    out.equivalent = out.left == out.right;
    return out;
}

namespace detail {

template <class F>
void append_canonical_chains(std::vector<Chain<F>>& chains, ChainKind kind, const F& lambda,
                             const WeyrSeq& seq, Eigen::Index& offset, Eigen::Index ambient) {
    for (int len : seq.conjugate()) {
        Chain<F> c;
        c.kind = kind;
        c.eigenvalue = lambda;
        const int entries = kind == ChainKind::Shift ? len + 1 : len;
        for (int j = 0; j < entries; ++j) {
            Vec<F> e = Vec<F>::Zero(ambient);
            e(offset + j) = F(1);
            c.vectors.push_back(std::move(e));
        }
        offset += entries;
        chains.push_back(std::move(c));
    }
}

}  // namespace detail

template <class F>
void validate_characteristic(const WeyrCharacteristic<F>& wc) {
    if (!wc.B.well_formed()) throw MalformedCharacteristic("B must be nonincreasing and positive");
    for (const auto& [l, w] : wc.W) {
        if (w.empty()) throw MalformedCharacteristic("W entries must be nonempty");
        if (!w.well_formed())
            throw MalformedCharacteristic("W(" + FieldTraits<F>::str(l) +
                                          ") must be nonincreasing and positive");
    }
    if (!wc.A.well_formed()) throw MalformedCharacteristic("A must be nonincreasing and positive");
    if (!wc.C.well_formed()) throw MalformedCharacteristic("C must be nonincreasing and positive");
}

/**
 * Canonical relation with the prescribed Weyr characteristic, laid out on
 * standard basis coordinates: singular chains first, then Jordan chains by
 * increasing eigenvalue, then chains at infinity, then shift chains; longer
 * chains first within each group.  Round trip:
 * weyr_characteristic(synthesize(wc)) == wc.
 */
template <class F>
LinearRelation<F> synthesize(const WeyrCharacteristic<F>& wc) {
    validate_characteristic(wc);
    const Eigen::Index ambient = wc.carrier_dim();
    std::vector<Chain<F>> chains;
    Eigen::Index offset = 0;
    detail::append_canonical_chains(chains, ChainKind::Singular, F(0), wc.B, offset, ambient);
    for (const auto& [lambda, w] : wc.W)
        detail::append_canonical_chains(chains, ChainKind::Jordan, lambda, w, offset, ambient);
    detail::append_canonical_chains(chains, ChainKind::JordanInf, F(0), wc.A, offset, ambient);
    detail::append_canonical_chains(chains, ChainKind::Shift, F(0), wc.C, offset, ambient);
    internal_check(offset == ambient, "canonical layout must fill the ambient space");

    std::vector<std::pair<Vec<F>, Vec<F>>> pairs;
    for (const auto& c : chains)
        for (auto& p : c.pairs(ambient)) pairs.push_back(std::move(p));
    return LinearRelation<F>::from_pairs(ambient, pairs);
}

}  // namespace relkit

#endif
