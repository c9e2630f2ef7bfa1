#ifndef RELKIT_DECOMPOSE_HPP
#define RELKIT_DECOMPOSE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relkit/weyr.hpp"

namespace relkit {

enum class ChainKind { Singular, Jordan, JordanInf, Shift };

inline const char* to_string(ChainKind k) {
    switch (k) {
        case ChainKind::Singular: return "singular";
        case ChainKind::Jordan: return "jordan";
        case ChainKind::JordanInf: return "jordan_inf";
        case ChainKind::Shift: return "shift";
    }
    return "?";
}

/**
 * One chain of the decomposition.  Vectors are x_1..x_k for singular and
 * Jordan chains and x_0..x_k for shift chains; the induced pairs are
 *   singular:    (0,x_k), (x_k,x_{k-1}), ..., (x_2,x_1), (x_1,0)
 *   jordan(l):   (x_k, x_{k-1}+l x_k), ..., (x_2, x_1+l x_2), (x_1, l x_1)
 *   jordan_inf:  (0,x_1), (x_1,x_2), ..., (x_{k-1},x_k)
 *   shift:       (x_0,x_1), (x_1,x_2), ..., (x_{k-1},x_k)
 * The chain length is the entry count for the first three kinds and the pair
 * count for shift chains, matching the conjugate-partition bookkeeping.
 */
template <class F>
struct Chain {
    ChainKind kind = ChainKind::Singular;
    F eigenvalue = F(0);  // meaningful for ChainKind::Jordan only
    std::vector<Vec<F>> vectors;

    int length() const {
        if (kind == ChainKind::Shift) return static_cast<int>(vectors.size()) - 1;
        return static_cast<int>(vectors.size());
    }

    std::vector<std::pair<Vec<F>, Vec<F>>> pairs(Eigen::Index n) const {
        std::vector<std::pair<Vec<F>, Vec<F>>> out;
        const Vec<F> zero = Vec<F>::Zero(n);
        const auto& v = vectors;
        switch (kind) {
            case ChainKind::Singular: {
                out.emplace_back(zero, v.back());
                for (std::size_t j = v.size(); j-- > 1;) out.emplace_back(v[j], v[j - 1]);
                out.emplace_back(v.front(), zero);
                break;
            }
            case ChainKind::Jordan: {
                for (std::size_t j = v.size(); j-- > 1;)
                    out.emplace_back(v[j], Vec<F>(v[j - 1] + v[j] * eigenvalue));
                out.emplace_back(v.front(), Vec<F>(v.front() * eigenvalue));
                break;
            }
            case ChainKind::JordanInf: {
                out.emplace_back(zero, v.front());
                for (std::size_t j = 0; j + 1 < v.size(); ++j) out.emplace_back(v[j], v[j + 1]);
                break;
            }
            case ChainKind::Shift: {
                for (std::size_t j = 0; j + 1 < v.size(); ++j) out.emplace_back(v[j], v[j + 1]);
                break;
            }
        }
        return out;
    }
};

namespace detail {

// Incremental independence bookkeeping for completions.
template <class F>
class SpanTracker {
  public:
    explicit SpanTracker(const Mat<F>& seed) : m_(seed), rank_(rank_of<F>(seed)) {}

    bool try_add(const Vec<F>& v) {
        Mat<F> trial(m_.rows(), m_.cols() + 1);
        trial.leftCols(m_.cols()) = m_;
        trial.col(m_.cols()) = v;
        if (rank_of<F>(trial) <= rank_) return false;
        m_ = std::move(trial);
        ++rank_;
        return true;
    }

    void add_checked(const Vec<F>& v, const char* what) { internal_check(try_add(v), what); }

  private:
    Mat<F> m_;
    int rank_;
};

template <class F>
Mat<F> entries_matrix(const std::vector<std::vector<Vec<F>>>& chains, Eigen::Index n) {
    Eigen::Index total = 0;
    for (const auto& c : chains) total += static_cast<Eigen::Index>(c.size());
    Mat<F> m(n, total);
    Eigen::Index k = 0;
    for (const auto& c : chains)
        for (const auto& v : c) m.col(k++) = v;
    return m;
}

template <class F>
LinearRelation<F> relation_from_chains(Eigen::Index n, const std::vector<Chain<F>>& chains) {
    std::vector<std::pair<Vec<F>, Vec<F>>> pairs;
    for (const auto& c : chains)
        for (auto& p : c.pairs(n)) pairs.push_back(std::move(p));
    return LinearRelation<F>::from_pairs(n, pairs);
}

template <class F>
void check_chain_pairs(const LinearRelation<F>& a, const std::vector<Chain<F>>& chains) {
    for (const auto& c : chains)
        for (const auto& [x, y] : c.pairs(a.n()))
            internal_check(a.contains_pair(x, y), "chain pair must belong to the relation");
}

/**
 * Shared downward construction for singular chains (over ker A^k /\ R_c) and
 * Jordan chains at zero (over ker A^k + R_c).  Levels hold the canonical
 * candidate spaces for representatives; quotient denominators are
 * level-dependent.  When `correct_heads` is set, every fresh chain head v is
 * replaced by v - u - sum alpha_j x_k^j so that (0, head) lands in the
 * relation.
 */
template <class F>
struct DownwardLevels {
    std::vector<Subspace<F>> rep;    // rep[k]: representatives live here (index 0 = level 1)
    std::vector<Subspace<F>> denom;  // denom[k]: quotient denominator at level k+1
    Subspace<F> partner_pool;        // for corrections: where backward partners are sought
};

template <class F>
std::vector<std::vector<Vec<F>>> build_downward_chains(const LinearRelation<F>& a,
                                                       const DownwardLevels<F>& lv,
                                                       bool correct_heads) {
    const int depth = static_cast<int>(lv.rep.size());
    std::vector<std::vector<Vec<F>>> chains;  // chains[i][j] = x_{j+1} of chain i
    if (depth == 0) return chains;

    for (int k = depth; k >= 1; --k) {
        const Subspace<F>& repk = lv.rep[static_cast<std::size_t>(k - 1)];
        const Subspace<F>& den = lv.denom[static_cast<std::size_t>(k - 1)];

        // 1) propagate every existing chain down one level
        std::size_t upper_count = chains.size();
        for (std::size_t i = 0; i < upper_count; ++i) {
            const Vec<F>& above = chains[i][static_cast<std::size_t>(k)];  // x_{k+1}
            auto partner = solve_forward(a, above, repk);
            internal_check(partner.has_value(), "downward chain propagation must succeed");
            chains[i][static_cast<std::size_t>(k - 1)] = *partner;
        }

        // 2) complete the level basis with fresh chain heads
        SpanTracker<F> span(den.basis());
        for (std::size_t i = 0; i < upper_count; ++i)
            span.add_checked(chains[i][static_cast<std::size_t>(k - 1)],
                             "propagated chain entries must stay independent");
        for (Eigen::Index c = 0; c < repk.dim(); ++c) {
            Vec<F> cand = repk.basis().col(c);
            if (!span.try_add(cand)) continue;
            Vec<F> head = cand;
            if (correct_heads) {
                // z in the pool with (z, cand) in A
                auto z = solve_backward(a, cand, lv.partner_pool);
                internal_check(z.has_value(), "singular head correction: no backward partner");
                // z = sum alpha_j x_{k+1}^j + y with y at level k; valid
                // because the level-(k+1) classes form a basis of K_{k+1}
                Mat<F> basis(a.n(), static_cast<Eigen::Index>(upper_count) + repk.dim());
                for (std::size_t i = 0; i < upper_count; ++i)
                    basis.col(static_cast<Eigen::Index>(i)) = chains[i][static_cast<std::size_t>(k)];
                basis.rightCols(repk.dim()) = repk.basis();
                Vec<F> alpha_y = coords<F>(*z, basis);
                Vec<F> y = repk.basis() * alpha_y.bottomRows(repk.dim());
                const Subspace<F> down_pool =
                    k >= 2 ? lv.rep[static_cast<std::size_t>(k - 2)] : Subspace<F>::zero(a.n());
                auto u = solve_forward(a, y, down_pool);
                internal_check(u.has_value(), "singular head correction: no forward partner");
                head = cand - *u;
                for (std::size_t i = 0; i < upper_count; ++i)
                    head -= chains[i][static_cast<std::size_t>(k - 1)] * alpha_y(static_cast<Eigen::Index>(i));
                internal_check(a.contains_pair(Vec<F>::Zero(a.n()), head),
                               "corrected singular head must start a chain at zero");
            }
            std::vector<Vec<F>> fresh(static_cast<std::size_t>(k));
            fresh[static_cast<std::size_t>(k - 1)] = head;
            chains.push_back(std::move(fresh));
        }
    }
    return chains;
}

}  // namespace detail

template <class F>
struct SingularPart {
    LinearRelation<F> relation;  // A_S
    Subspace<F> space;           // R_c(A)
    std::vector<Chain<F>> chains;
};

/**
 * Completely singular part: singular chains spanning A_S, built level by
 * level along ker A^k /\ R_c with corrected heads so every chain starts and
 * ends at zero.
 */
template <class F>
SingularPart<F> singular_part(const LinearRelation<F>& a, const Subspace<F>& rc) {
    SingularPart<F> out;
    out.space = rc;

    detail::DownwardLevels<F> lv;
    lv.partner_pool = rc;
    Subspace<F> ker_k = Subspace<F>::zero(a.n());
    Subspace<F> prev = Subspace<F>::zero(a.n());
    for (;;) {
        ker_k = preimage(a, ker_k);
        Subspace<F> cur = intersect(ker_k, rc);
        if (cur == prev) break;
        lv.denom.push_back(prev);
        lv.rep.push_back(cur);
        prev = std::move(cur);
    }

    auto raw = detail::build_downward_chains(a, lv, /*correct_heads=*/true);
    for (auto& vecs : raw) {
        Chain<F> c;
        c.kind = ChainKind::Singular;
        c.vectors = std::move(vecs);
        out.chains.push_back(std::move(c));
    }
    detail::check_chain_pairs(a, out.chains);

    out.relation = out.chains.empty() ? LinearRelation<F>::zero_relation(a.n())
                                      : detail::relation_from_chains(a.n(), out.chains);
    internal_check(out.relation == restrict_to(a, rc),
                   "singular chains must span the graph restriction to R_c");
    const RelationParts<F> pp = parts(out.relation);
    internal_check(pp.dom == rc && pp.ran == rc,
                   "completely singular part must have dom = ran = R_c");
    return out;
}

template <class F>
SingularPart<F> singular_part(const LinearRelation<F>& a) {
    return singular_part(a, singular_chain_space(a));
}

template <class F>
struct JordanPart {
    LinearRelation<F> relation;  // J_lambda(A), J_0(A) or J_inf(A)
    Subspace<F> space;           // X_lambda(A)
    std::vector<Chain<F>> chains;
};

/**
 * Jordan chains at zero over the quotients (ker A^k + R_c)/(ker A^(k-1) + R_c),
 * with representatives inside ker A^k.  Empty when 0 is not a proper
 * eigenvalue.
 */
template <class F>
JordanPart<F> jordan_part_zero(const LinearRelation<F>& a, const Subspace<F>& rc) {
    JordanPart<F> out;

    detail::DownwardLevels<F> lv;
    Subspace<F> ker_k = Subspace<F>::zero(a.n());
    Subspace<F> prev_sum = rc;
    for (;;) {
        ker_k = preimage(a, ker_k);
        Subspace<F> cur = sum(ker_k, rc);
        if (cur == prev_sum) break;
        lv.denom.push_back(prev_sum);
        lv.rep.push_back(ker_k);
        prev_sum = std::move(cur);
    }

    auto raw = detail::build_downward_chains(a, lv, /*correct_heads=*/false);
    for (auto& vecs : raw) {
        Chain<F> c;
        c.kind = ChainKind::Jordan;
        c.eigenvalue = F(0);
        c.vectors = std::move(vecs);
        out.chains.push_back(std::move(c));
    }
    detail::check_chain_pairs(a, out.chains);

    std::vector<std::vector<Vec<F>>> entry_lists;
    for (const auto& c : out.chains) entry_lists.push_back(c.vectors);
    out.space = column_space<F>(detail::entries_matrix(entry_lists, a.n()));
    out.relation = out.chains.empty() ? LinearRelation<F>::zero_relation(a.n())
                                      : detail::relation_from_chains(a.n(), out.chains);

    // X_0 complements R_c inside R_0 and carries a Jordan operator
    const Subspace<F> r0 = root_space(a, F(0));
    internal_check(sum(rc, out.space) == r0 &&
                       rc.dim() + out.space.dim() == r0.dim(),
                   "R_0 must split as R_c (+) X_0");
    internal_check(out.relation == restrict_to(a, out.space),
                   "Jordan chains at 0 must span the graph restriction to X_0");
    const RelationParts<F> pp = parts(out.relation);
    internal_check(pp.dom == out.space && pp.mul.is_zero(),
                   "J_0 must be an everywhere defined operator on X_0");
    // nilpotency on X_0: iterated kernels exhaust the domain
    {
        Subspace<F> k = Subspace<F>::zero(a.n());
        for (;;) {
            Subspace<F> next = preimage(out.relation, k);
            if (next == k) break;
            k = std::move(next);
        }
        internal_check(k.contains(out.space), "J_0 must be nilpotent on X_0");
    }
    return out;
}

template <class F>
JordanPart<F> jordan_part_zero(const LinearRelation<F>& a) {
    return jordan_part_zero(a, singular_chain_space(a));
}

/**
 * Jordan part at a finite proper eigenvalue, strictly as the shift-conjugate
 * of the zero construction: J_lambda(A) = J_0(A - lambda) + lambda and the
 * chain entries are reused unchanged.
 */
template <class F>
JordanPart<F> jordan_part(const LinearRelation<F>& a, const F& lambda, const Subspace<F>& rc) {
    JordanPart<F> zero_part = jordan_part_zero(shift(a, lambda), rc);
    JordanPart<F> out;
    out.space = zero_part.space;
    for (auto& c : zero_part.chains) {
        c.eigenvalue = lambda;
        out.chains.push_back(std::move(c));
    }
    out.relation = out.chains.empty() ? LinearRelation<F>::zero_relation(a.n())
                                      : detail::relation_from_chains(a.n(), out.chains);
    internal_check(out.relation == shift(zero_part.relation, F(-lambda)),
                   "J_lambda must be the unshift of J_0(A - lambda)");
    detail::check_chain_pairs(a, out.chains);
    internal_check(out.relation == restrict_to(a, out.space),
                   "J_lambda must equal the graph restriction to X_lambda");
    return out;
}

template <class F>
JordanPart<F> jordan_part(const LinearRelation<F>& a, const F& lambda) {
    const SpectralData<F> sd = analyze_spectrum(a);
    for (const F& known : sd.proper_eigs)
        if (known == lambda) return jordan_part(a, lambda, sd.Rc);
    throw NotAProperEigenvalue("lambda is not a proper eigenvalue of the relation");
}

/**
 * Jordan part at infinity, strictly as the inverse-conjugate of the zero
 * construction: J_inf(A) = (J_0(A^{-1}))^{-1}; chains are reread as starting
 * from (0, x_1).
 */
template <class F>
JordanPart<F> jordan_part_inf(const LinearRelation<F>& a, const Subspace<F>& rc) {
    JordanPart<F> zero_part = jordan_part_zero(inverse(a), rc);
    JordanPart<F> out;
    out.space = zero_part.space;
    for (auto& c : zero_part.chains) {
        Chain<F> flipped;
        flipped.kind = ChainKind::JordanInf;
        flipped.vectors = std::move(c.vectors);
        out.chains.push_back(std::move(flipped));
    }
    out.relation = out.chains.empty() ? LinearRelation<F>::zero_relation(a.n())
                                      : detail::relation_from_chains(a.n(), out.chains);
    internal_check(out.relation == inverse(zero_part.relation),
                   "J_inf must be the inverse of J_0(A^{-1})");
    detail::check_chain_pairs(a, out.chains);
    internal_check(out.relation == restrict_to(a, out.space),
                   "J_inf must equal the graph restriction to X_inf");
    const RelationParts<F> pp = parts(out.relation);
    internal_check(pp.ker.is_zero() && pp.ran == out.space,
                   "J_inf must be injective with range X_inf");
    return out;
}

template <class F>
JordanPart<F> jordan_part_inf(const LinearRelation<F>& a) {
    const SpectralData<F> sd = analyze_spectrum(a);
    if (!sd.has_inf_proper)
        throw NotAProperEigenvalue("infinity is not a proper eigenvalue of the relation");
    return jordan_part_inf(a, sd.Rc);
}

template <class F>
struct RootPart {
    LinearRelation<F> relation;  // A_R
    Subspace<F> space;           // R_r(A)
    SingularPart<F> singular;
    std::map<F, JordanPart<F>, FieldLess<F>> jordan;
    JordanPart<F> at_inf;  // empty relation when infinity is not proper
    bool has_inf = false;
};

/**
 * Root part A_R with its reducing sum decomposition
 * A_R = A_S (+) J_{l_1} (+) ... (+) J_inf over R_r = R_c (+) X_l (+) X_inf.
 */
template <class F>
RootPart<F> root_part(const LinearRelation<F>& a, const SpectralData<F>& sd) {
    if (sd.blocked()) throw UnsplitEigenvalues(sd.unsplit_strings());
    RootPart<F> out;
    out.space = sd.Rr;
    out.relation = restrict_to(a, sd.Rr);
    out.singular = singular_part(a, sd.Rc);
    for (const F& lambda : sd.proper_eigs) out.jordan.emplace(lambda, jordan_part(a, lambda, sd.Rc));
    out.has_inf = sd.has_inf_proper;
    if (out.has_inf)
        out.at_inf = jordan_part_inf(a, sd.Rc);
    else
        out.at_inf.relation = LinearRelation<F>::zero_relation(a.n());
    if (!out.has_inf) out.at_inf.space = Subspace<F>::zero(a.n());

    std::vector<Subspace<F>> spaces{sd.Rc};
    for (const auto& [l, jp] : out.jordan) spaces.push_back(jp.space);
    if (out.has_inf) spaces.push_back(out.at_inf.space);
    const ReducingCheck<F> check = verify_reducing(out.relation, spaces);
    internal_check(check.ok, std::string("root part must reduce: ") + check.detail);
    internal_check(check.decomposition.components.front() == out.singular.relation,
                   "first root component must be A_S");

    // R_r = dom A_R + ran J_inf = ran A_R + dom J_0
    const Subspace<F> dom_j0 = out.jordan.count(F(0)) ? out.jordan.at(F(0)).space
                                                      : Subspace<F>::zero(a.n());
    internal_check(sum(domain_of(out.relation), range_of(out.at_inf.relation)) == sd.Rr,
                   "R_r must equal dom A_R + ran J_inf");
    internal_check(sum(range_of(out.relation), dom_j0) == sd.Rr,
                   "R_r must equal ran A_R + dom J_0");
    return out;
}

template <class F>
RootPart<F> root_part(const LinearRelation<F>& a) {
    return root_part(a, analyze_spectrum(a));
}

template <class F>
struct MultishiftPart {
    LinearRelation<F> relation;  // A_M
    Subspace<F> space;           // R_m(A)
    std::vector<Chain<F>> chains;
};

/**
 * Certificate that a relation has no eigenvalues at all: trivial kernel and
 * multivalued part, generically full column rank of (Y - t X), and no pivot
 * root (in F or in any extension, via the residual factors) produces an
 * eigenvector.
 */
template <class F>
bool certify_multishift(const LinearRelation<F>& m) {
    if (!kernel_of(m).is_zero() || !mul_of(m).is_zero()) return false;
    const Eigen::Index g = m.dim();
    if (g == 0) return true;
    const Mat<F> x = m.x_block(), y = m.y_block();
    PolyMat<F> pm(static_cast<std::size_t>(m.n()), std::vector<Poly<F>>(static_cast<std::size_t>(g)));
    for (Eigen::Index i = 0; i < m.n(); ++i)
        for (Eigen::Index j = 0; j < g; ++j)
            pm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Poly<F>({y(i, j), -x(i, j)});
    const PivotResult<F> piv = function_field_pivots(pm);
    if (piv.generic_rank != static_cast<int>(g)) return false;
    const Mat<F> empty(m.n(), 0);
    for (const auto& p : piv.pivots) {
        const RootSplit<F> split = poly_roots(p);
        for (const auto& [r, mult] : split.roots)
            if (!kernel_of(shift(m, r)).is_zero()) return false;
        for (const auto& q : split.residual)
            if (roots_give_kernel_outside(q, x, y, empty)) return false;
    }
    return true;
}

/**
 * Multishift part: shift chains over the quotients
 * (ran A^k + R_r)/(ran A^(k+1) + R_r), pulled back through the relation and
 * finished with x_0 from dom A.
 */
template <class F>
MultishiftPart<F> multishift_part(const LinearRelation<F>& a, const SpectralData<F>& sd) {
    if (sd.blocked()) throw UnsplitEigenvalues(sd.unsplit_strings());
    MultishiftPart<F> out;

    std::vector<Subspace<F>> ran_pows;   // ran A^k, k = 1..
    std::vector<Subspace<F>> sums;       // ran A^k + R_r
    Subspace<F> ran_k = range_of(a);
    Subspace<F> cur = sum(ran_k, sd.Rr);
    for (;;) {
        ran_pows.push_back(ran_k);
        sums.push_back(cur);
        ran_k = image(a, ran_k);
        Subspace<F> next = sum(ran_k, sd.Rr);
        if (next == cur) break;
        cur = std::move(next);
    }
    const int m = static_cast<int>(sums.size());  // stabilisation index

    std::vector<std::vector<Vec<F>>> chains;  // chains[i][j] = x_{j+1}, x_0 added later
    if (m >= 2) {
        for (int k = m - 1; k >= 1; --k) {
            const Subspace<F>& repk = ran_pows[static_cast<std::size_t>(k - 1)];
            const Subspace<F>& den = sums[static_cast<std::size_t>(k)];  // ran A^{k+1} + R_r
            const std::size_t upper_count = chains.size();
            for (std::size_t i = 0; i < upper_count; ++i) {
                const Vec<F>& above = chains[i][static_cast<std::size_t>(k)];
                auto partner = solve_backward(a, above, repk);
                internal_check(partner.has_value(), "shift chain pull-back must succeed");
                chains[i][static_cast<std::size_t>(k - 1)] = *partner;
            }
            detail::SpanTracker<F> span(den.basis());
            for (std::size_t i = 0; i < upper_count; ++i)
                span.add_checked(chains[i][static_cast<std::size_t>(k - 1)],
                                 "pulled-back shift entries must stay independent");
            for (Eigen::Index c = 0; c < repk.dim(); ++c) {
                Vec<F> cand = repk.basis().col(c);
                if (!span.try_add(cand)) continue;
                std::vector<Vec<F>> fresh(static_cast<std::size_t>(k));
                fresh[static_cast<std::size_t>(k - 1)] = cand;
                chains.push_back(std::move(fresh));
            }
        }
        // x_0 for every chain, anywhere in dom A
        for (auto& c : chains) {
            auto x0 = solve_backward(a, c.front(), Subspace<F>::full(a.n()));
            internal_check(x0.has_value(), "shift chain start must exist in dom A");
            c.insert(c.begin(), *x0);
        }
    }

    for (auto& vecs : chains) {
        Chain<F> c;
        c.kind = ChainKind::Shift;
        c.vectors = std::move(vecs);
        out.chains.push_back(std::move(c));
    }
    detail::check_chain_pairs(a, out.chains);

    std::vector<std::vector<Vec<F>>> entry_lists;
    for (const auto& c : out.chains) entry_lists.push_back(c.vectors);
    out.space = column_space<F>(detail::entries_matrix(entry_lists, a.n()));
    Eigen::Index entry_count = 0;
    for (const auto& c : out.chains) entry_count += static_cast<Eigen::Index>(c.vectors.size());
    internal_check(out.space.dim() == entry_count, "shift chain entries must be independent");
    out.relation = out.chains.empty() ? LinearRelation<F>::zero_relation(a.n())
                                      : detail::relation_from_chains(a.n(), out.chains);

    // H(A) = R_r (+) R_m and A = A_R (+) A_M
    const Subspace<F> carrier = carrier_of(a);
    internal_check(sum(sd.Rr, out.space) == carrier &&
                       sd.Rr.dim() + out.space.dim() == carrier.dim(),
                   "carrier must split as R_r (+) R_m");
    internal_check(out.relation == restrict_to(a, out.space),
                   "shift chains must span the graph restriction to R_m");
    const LinearRelation<F> a_r = restrict_to(a, sd.Rr);
    internal_check(cw_sum(a_r, out.relation) == a &&
                       a_r.dim() + out.relation.dim() == a.dim(),
                   "A must split as A_R (+) A_M");
    internal_check(certify_multishift(out.relation), "A_M must certify as a multishift");
    return out;
}

template <class F>
MultishiftPart<F> multishift_part(const LinearRelation<F>& a) {
    return multishift_part(a, analyze_spectrum(a));
}

/**
 * The full Jordan-like reducing sum decomposition
 * A = A_S (+) J_{l_1}(A) (+) ... (+) J_inf(A) (+) A_M over
 * H(A) = R_c (+) X_{l_1} (+) ... (+) X_inf (+) R_m, with the Weyr
 * characteristic attached and the structural invariants re-verified.
 */
template <class F>
struct JordanLikeDecomposition {
    SpectralData<F> spectral;
    RootPart<F> root;
    MultishiftPart<F> multishift;
    WeyrCharacteristic<F> weyr;
    std::vector<Chain<F>> chains;  // all chains, component order

    // nontrivial component spaces/relations, in the fixed order
    // R_c, X_{l_1}, ..., X_inf, R_m
    std::vector<Subspace<F>> spaces() const {
        std::vector<Subspace<F>> out;
        if (!root.singular.space.is_zero()) out.push_back(root.singular.space);
        for (const auto& [l, jp] : root.jordan) out.push_back(jp.space);
        if (root.has_inf) out.push_back(root.at_inf.space);
        if (!multishift.space.is_zero()) out.push_back(multishift.space);
        return out;
    }
    std::vector<LinearRelation<F>> components() const {
        std::vector<LinearRelation<F>> out;
        if (!root.singular.space.is_zero()) out.push_back(root.singular.relation);
        for (const auto& [l, jp] : root.jordan) out.push_back(jp.relation);
        if (root.has_inf) out.push_back(root.at_inf.relation);
        if (!multishift.space.is_zero()) out.push_back(multishift.relation);
        return out;
    }
};

namespace detail {

template <class F>
void check_conjugate_partitions(const JordanLikeDecomposition<F>& d) {
    auto lengths_of = [](const std::vector<Chain<F>>& chains, ChainKind kind, const F* lambda) {
        std::vector<int> out;
        for (const auto& c : chains) {
            if (c.kind != kind) continue;
            if (lambda && !(c.eigenvalue == *lambda)) continue;
            out.push_back(c.length());
        }
        return out;
    };
    internal_check(lengths_of(d.root.singular.chains, ChainKind::Singular, nullptr) ==
                       d.weyr.B.conjugate(),
                   "singular chain lengths must be the conjugate of B");
    for (const auto& [lambda, w] : d.weyr.W)
        internal_check(lengths_of(d.root.jordan.at(lambda).chains, ChainKind::Jordan, &lambda) ==
                           w.conjugate(),
                       "Jordan chain lengths must be the conjugate of W(lambda)");
    internal_check(lengths_of(d.root.at_inf.chains, ChainKind::JordanInf, nullptr) ==
                       d.weyr.A.conjugate(),
                   "Jordan chains at infinity must be the conjugate of A");
    internal_check(lengths_of(d.multishift.chains, ChainKind::Shift, nullptr) ==
                       d.weyr.C.conjugate(),
                   "shift chain lengths must be the conjugate of C");
}

}  // namespace detail

template <class F>
JordanLikeDecomposition<F> decompose(const LinearRelation<F>& a, const SpectralData<F>& sd) {
    if (sd.blocked()) throw UnsplitEigenvalues(sd.unsplit_strings());
    JordanLikeDecomposition<F> out;
    out.spectral = sd;
    out.root = root_part(a, sd);
    out.multishift = multishift_part(a, sd);
    out.weyr = weyr_characteristic(a, sd);

    const ReducingCheck<F> check = verify_reducing(a, out.spaces());
    internal_check(check.ok, std::string("full decomposition must reduce: ") + check.detail);

    // dimension ledger, exactly as the Weyr characteristic predicts
    internal_check(static_cast<int>(out.root.singular.relation.dim()) == out.weyr.dim_singular(),
                   "dim A_S must match the B sequence");
    for (const auto& [lambda, jp] : out.root.jordan)
        internal_check(static_cast<int>(jp.relation.dim()) == out.weyr.dim_jordan_at(lambda),
                       "dim J_lambda must match the W sequence");
    internal_check(static_cast<int>(out.root.at_inf.relation.dim()) == out.weyr.dim_jordan_inf(),
                   "dim J_inf must match the A sequence");
    internal_check(static_cast<int>(out.multishift.relation.dim()) == out.weyr.dim_multishift(),
                   "dim A_M must match the C sequence");
    internal_check(static_cast<int>(a.dim()) == out.weyr.graph_dim(),
                   "component dimensions must add up to dim A");

    for (const auto& c : out.root.singular.chains) out.chains.push_back(c);
    for (const auto& [l, jp] : out.root.jordan)
        for (const auto& c : jp.chains) out.chains.push_back(c);
    for (const auto& c : out.root.at_inf.chains) out.chains.push_back(c);
    for (const auto& c : out.multishift.chains) out.chains.push_back(c);

    detail::check_conjugate_partitions(out);
    return out;
}

template <class F>
JordanLikeDecomposition<F> decompose(const LinearRelation<F>& a) {
    return decompose(a, analyze_spectrum(a));
}

}  // namespace relkit

#endif
