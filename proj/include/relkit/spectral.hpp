#ifndef RELKIT_SPECTRAL_HPP
#define RELKIT_SPECTRAL_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relkit/algext.hpp"
#include "relkit/polymat.hpp"
#include "relkit/relation.hpp"
#include "relkit/rootfind.hpp"

namespace relkit {

/**
 * Root space R_lambda(A): stabilised union of ker (A - lambda)^i.
 */
template <class F>
Subspace<F> root_space(const LinearRelation<F>& a, const F& lambda) {
    const LinearRelation<F> b = shift(a, lambda);
    Subspace<F> cur = Subspace<F>::zero(a.n());
    for (;;) {
        Subspace<F> next = preimage(b, cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

/**
 * Root space at infinity R_inf(A): stabilised union of mul A^i.
 */
template <class F>
Subspace<F> root_space_inf(const LinearRelation<F>& a) {
    Subspace<F> cur = Subspace<F>::zero(a.n());
    for (;;) {
        Subspace<F> next = image(a, cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

// Singular chain subspace R_c(A) = R_0(A) /\ R_inf(A).
template <class F>
Subspace<F> singular_chain_space(const LinearRelation<F>& a) {
    return intersect(root_space(a, F(0)), root_space_inf(a));
}

// Plain point-spectrum membership, exposed read-only.
template <class F>
bool point_spectrum_has(const LinearRelation<F>& a, const F& lambda) {
    return !kernel_of(shift(a, lambda)).is_zero();
}
template <class F>
bool point_spectrum_has_inf(const LinearRelation<F>& a) {
    return !mul_of(a).is_zero();
}

template <class F>
struct SpectralData {
    Subspace<F> R0, Rinf, Rc, Rr;
    std::vector<F> proper_eigs;  // sorted by FieldTraits<F>::less
    bool has_inf_proper = false;
    std::map<F, Subspace<F>, FieldLess<F>> root_spaces;  // per proper eigenvalue
    std::vector<Poly<F>> unsplit;  // factors carrying proper eigenvalues outside F

    bool blocked() const { return !unsplit.empty(); }
    std::vector<std::string> unsplit_strings() const {
        std::vector<std::string> out;
        for (const auto& q : unsplit) out.push_back(q.str("l"));
        return out;
    }
};

namespace detail {

// Rows annihilating S, so that ker P = S exactly.
template <class F>
Mat<F> annihilator_rows(const Subspace<F>& s) {
    if (s.is_zero()) return Mat<F>::Identity(s.ambient_dim(), s.ambient_dim());
    Mat<F> st = s.basis().transpose();
    return kernel_matrix<F>(st).transpose();
}

}  // namespace detail

/**
 * Proper point spectrum discovery.  The graph basis splits into blocks
 * (X; Y); every lambda where ker(A - lambda) moves relative to R_c is a root
 * of a pivot polynomial of the fraction-free elimination of (Y - lambda X)
 * or of the stacked system that compares ker(Y - lambda X) against R_c, so
 * collecting the F-roots of all pivots and verifying each candidate exactly
 * cannot miss a proper eigenvalue.  Residual pivot factors without F-roots
 * are checked over F[t]/(q); the ones that genuinely carry proper
 * eigenvalues are reported as unsplit.
 *
 * extra_candidates are externally supplied eigenvalue candidates; they pass
 * through the same exact verification and are never trusted.
 */
template <class F>
SpectralData<F> analyze_spectrum(const LinearRelation<F>& a,
                                 const std::vector<F>& extra_candidates = {}) {
    SpectralData<F> out;
    out.R0 = root_space(a, F(0));
    out.Rinf = root_space_inf(a);
    out.Rc = intersect(out.R0, out.Rinf);

    const Mat<F> x = a.x_block(), y = a.y_block();
    const Eigen::Index n = a.n(), g = a.dim();

    std::vector<F> candidates = extra_candidates;
    std::vector<Poly<F>> residual;
    PolyMat<F> m1;
    int generic_rank = 0;
    bool ranks_agree = false;
    if (g > 0) {
        auto entry = [&](Eigen::Index i, Eigen::Index j) {
            return Poly<F>({y(i, j), -x(i, j)});
        };
        m1.assign(static_cast<std::size_t>(n), std::vector<Poly<F>>(static_cast<std::size_t>(g)));
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < g; ++j)
                m1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(i, j);

        const Mat<F> p = detail::annihilator_rows(out.Rc);
        const Mat<F> px = p * x;
        PolyMat<F> m2 = m1;
        for (Eigen::Index i = 0; i < px.rows(); ++i) {
            std::vector<Poly<F>> row(static_cast<std::size_t>(g));
            for (Eigen::Index j = 0; j < g; ++j)
                row[static_cast<std::size_t>(j)] = Poly<F>::constant(px(i, j));
            m2.push_back(std::move(row));
        }

        PivotResult<F> piv1 = function_field_pivots(m1);
        PivotResult<F> piv2 = function_field_pivots(m2);
        // away from the pivot roots, ker(Y - tX) already sits inside R_c
        generic_rank = piv1.generic_rank;
        ranks_agree = piv1.generic_rank == piv2.generic_rank;
        std::vector<Poly<F>> pivots = std::move(piv1.pivots);
        for (auto& q : piv2.pivots) pivots.push_back(std::move(q));
        for (const auto& piv : pivots) {
            RootSplit<F> split = poly_roots(piv);
            for (const auto& [r, mult] : split.roots) candidates.push_back(r);
            for (auto& q : split.residual) residual.push_back(std::move(q));
        }
    }

    // exact verification of each candidate: lambda is proper iff
    // ker(A - lambda) sticks out of R_c
    std::sort(candidates.begin(), candidates.end(), FieldLess<F>{});
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const F& lambda : candidates) {
        const Subspace<F> k = kernel_of(shift(a, lambda));
        if (sum(k, out.Rc).dim() > out.Rc.dim()) {
            out.proper_eigs.push_back(lambda);
            out.root_spaces.emplace(lambda, root_space(a, lambda));
        }
    }
    out.has_inf_proper = sum(mul_of(a), out.Rc).dim() > out.Rc.dim();

    // residual factors: keep only those whose roots truly escape R_c.  A
    // factor is certified innocent when the kernel of (Y - tX) cannot move
    // at its roots: with equal generic ranks of the plain and the stacked
    // system, preserving the plain rank pins the stacked one too.
    std::vector<Poly<F>> seen;
    for (const auto& q : residual) {
        bool dup = false;
        for (const auto& u : seen)
            if (u == q) { dup = true; break; }
        if (dup) continue;
        seen.push_back(q);
        if (ranks_agree && modp_certifies_rank(q, m1, generic_rank)) continue;
        if (roots_give_kernel_outside(q, x, y, out.Rc.basis())) out.unsplit.push_back(q);
    }

    out.Rr = out.Rc;
    for (const auto& [lambda, rs] : out.root_spaces) out.Rr = sum(out.Rr, rs);
    if (out.has_inf_proper) out.Rr = sum(out.Rr, out.Rinf);
    return out;
}

// R_r(A), the span of the root spaces over the proper point spectrum.
template <class F>
Subspace<F> total_root_space(const LinearRelation<F>& a) {
    return analyze_spectrum(a).Rr;
}

template <class F>
struct ProperSpectrum {
    std::vector<F> eigenvalues;  // sorted
    bool has_inf = false;
    std::vector<Poly<F>> unsplit;
};

template <class F>
ProperSpectrum<F> proper_point_spectrum(const LinearRelation<F>& a,
                                        const std::vector<F>& extra_candidates = {}) {
    SpectralData<F> sd = analyze_spectrum(a, extra_candidates);
    return ProperSpectrum<F>{std::move(sd.proper_eigs), sd.has_inf_proper, std::move(sd.unsplit)};
}

}  // namespace relkit

#endif
