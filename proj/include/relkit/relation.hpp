#ifndef RELKIT_RELATION_HPP
#define RELKIT_RELATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relkit/linalg.hpp"

namespace relkit {

/**
 * A linear relation in F^n: a subspace of F^n x F^n whose elements are
 * stacked pairs (x; y).  The graph is kept canonical, so relations compare
 * structurally.  Restrictions keep the original ambient dimension; the
 * relation "in a smaller space" is implicit through dom/ran.
 */
template <class F>
class LinearRelation {
  public:
    LinearRelation() : n_(0), graph_(Subspace<F>::zero(0)) {}
    LinearRelation(Eigen::Index n, Subspace<F> graph) : n_(n), graph_(std::move(graph)) {
        if (graph_.ambient_dim() != 2 * n_) throw AmbientMismatch("graph must live in F^(2n)");
    }

    static LinearRelation zero_relation(Eigen::Index n) {
        return LinearRelation(n, Subspace<F>::zero(2 * n));
    }

    static LinearRelation identity(Eigen::Index n) {
        Mat<F> g = Mat<F>::Zero(2 * n, n);
        g.topRows(n) = Mat<F>::Identity(n, n);
        g.bottomRows(n) = Mat<F>::Identity(n, n);
        return LinearRelation(n, Subspace<F>::span_of(g));
    }

    // Graph of the everywhere-defined operator x -> M x.
    static LinearRelation graph_of(const Mat<F>& m) {
        internal_check(m.rows() == m.cols(), "operator graphs need square matrices");
        const Eigen::Index n = m.rows();
        Mat<F> g(2 * n, n);
        g.topRows(n) = Mat<F>::Identity(n, n);
        g.bottomRows(n) = m;
        return LinearRelation(n, Subspace<F>::span_of(g));
    }

    static LinearRelation from_pairs(Eigen::Index n,
                                     const std::vector<std::pair<Vec<F>, Vec<F>>>& pairs) {
        Mat<F> g(2 * n, static_cast<Eigen::Index>(pairs.size()));
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (pairs[k].first.rows() != n || pairs[k].second.rows() != n)
                throw AmbientMismatch("pair does not match the ambient dimension");
            g.col(static_cast<Eigen::Index>(k)).topRows(n) = pairs[k].first;
            g.col(static_cast<Eigen::Index>(k)).bottomRows(n) = pairs[k].second;
        }
        return LinearRelation(n, Subspace<F>::span_of(g));
    }

    Eigen::Index n() const { return n_; }
    const Subspace<F>& graph() const { return graph_; }
    Eigen::Index dim() const { return graph_.dim(); }

    Mat<F> x_block() const { return graph_.basis().topRows(n_); }
    Mat<F> y_block() const { return graph_.basis().bottomRows(n_); }

    bool contains_pair(const Vec<F>& x, const Vec<F>& y) const {
        Vec<F> stacked(2 * n_);
        stacked.topRows(n_) = x;
        stacked.bottomRows(n_) = y;
        return graph_.contains(stacked);
    }

    friend bool operator==(const LinearRelation& a, const LinearRelation& b) {
        return a.n_ == b.n_ && a.graph_ == b.graph_;
    }
    friend bool operator!=(const LinearRelation& a, const LinearRelation& b) { return !(a == b); }

  private:
    Eigen::Index n_;
    Subspace<F> graph_;
};

template <class F>
struct RelationParts {
    Subspace<F> dom, ran, ker, mul;
};

template <class F>
RelationParts<F> parts(const LinearRelation<F>& a) {
    const Mat<F> x = a.x_block(), y = a.y_block();
    RelationParts<F> p;
    p.dom = column_space<F>(x);
    p.ran = column_space<F>(y);
    p.ker = column_space<F>(Mat<F>(x * kernel_matrix<F>(y)));
    p.mul = column_space<F>(Mat<F>(y * kernel_matrix<F>(x)));
    return p;
}

template <class F>
Subspace<F> domain_of(const LinearRelation<F>& a) { return column_space<F>(a.x_block()); }
template <class F>
Subspace<F> range_of(const LinearRelation<F>& a) { return column_space<F>(a.y_block()); }
template <class F>
Subspace<F> kernel_of(const LinearRelation<F>& a) {
    return column_space<F>(Mat<F>(a.x_block() * kernel_matrix<F>(a.y_block())));
}
template <class F>
Subspace<F> mul_of(const LinearRelation<F>& a) {
    return column_space<F>(Mat<F>(a.y_block() * kernel_matrix<F>(a.x_block())));
}

// dom A + ran A, the smallest space X with A contained in X x X.
template <class F>
Subspace<F> carrier_of(const LinearRelation<F>& a) {
    return sum(domain_of(a), range_of(a));
}

template <class F>
LinearRelation<F> inverse(const LinearRelation<F>& a) {
    const Eigen::Index n = a.n();
    Mat<F> g(2 * n, a.dim());
    g.topRows(n) = a.y_block();
    g.bottomRows(n) = a.x_block();
    return LinearRelation<F>(n, Subspace<F>::span_of(g));
}

// A - lambda: pairs (x, y - lambda x).
template <class F>
LinearRelation<F> shift(const LinearRelation<F>& a, const F& lambda) {
    const Eigen::Index n = a.n();
    Mat<F> g(2 * n, a.dim());
    g.topRows(n) = a.x_block();
    g.bottomRows(n) = a.y_block() - a.x_block() * lambda;
    return LinearRelation<F>(n, Subspace<F>::span_of(g));
}

// lambda A: pairs (x, lambda y).
template <class F>
LinearRelation<F> scalar_mul(const F& lambda, const LinearRelation<F>& a) {
    const Eigen::Index n = a.n();
    Mat<F> g(2 * n, a.dim());
    g.topRows(n) = a.x_block();
    g.bottomRows(n) = a.y_block() * lambda;
    return LinearRelation<F>(n, Subspace<F>::span_of(g));
}

/**
 * Product AB = {(x,y) : exists z with (x,z) in B and (z,y) in A}; the middle
 * variable is eliminated through one kernel computation on the stacked
 * coefficient system.
 */
template <class F>
LinearRelation<F> compose(const LinearRelation<F>& a, const LinearRelation<F>& b) {
    if (a.n() != b.n()) throw AmbientMismatch("composition of relations on different ambients");
    const Eigen::Index n = a.n();
    Mat<F> sys(n, b.dim() + a.dim());
    sys.leftCols(b.dim()) = b.y_block();
    sys.rightCols(a.dim()) = -a.x_block();
    const Mat<F> null = kernel_matrix<F>(sys);
    Mat<F> g(2 * n, null.cols());
    g.topRows(n) = b.x_block() * null.topRows(b.dim());
    g.bottomRows(n) = a.y_block() * null.bottomRows(a.dim());
    return LinearRelation<F>(n, Subspace<F>::span_of(g));
}

template <class F>
LinearRelation<F> power(const LinearRelation<F>& a, int k) {
    internal_check(k >= 0, "negative relation power");
    LinearRelation<F> acc = LinearRelation<F>::identity(a.n());
    for (int i = 0; i < k; ++i) acc = compose(a, acc);
    return acc;
}

// Operator-like sum A + B = {(x, y+z) : (x,y) in A, (x,z) in B}.
template <class F>
LinearRelation<F> rel_sum(const LinearRelation<F>& a, const LinearRelation<F>& b) {
    if (a.n() != b.n()) throw AmbientMismatch("sum of relations on different ambients");
    const Eigen::Index n = a.n();
    Mat<F> sys(n, a.dim() + b.dim());
    sys.leftCols(a.dim()) = a.x_block();
    sys.rightCols(b.dim()) = -b.x_block();
    const Mat<F> null = kernel_matrix<F>(sys);
    Mat<F> g(2 * n, null.cols());
    g.topRows(n) = a.x_block() * null.topRows(a.dim());
    g.bottomRows(n) =
        a.y_block() * null.topRows(a.dim()) + b.y_block() * null.bottomRows(b.dim());
    return LinearRelation<F>(n, Subspace<F>::span_of(g));
}

// Componentwise sum: the sum of the graphs inside F^n x F^n.
template <class F>
LinearRelation<F> cw_sum(const LinearRelation<F>& a, const LinearRelation<F>& b) {
    if (a.n() != b.n()) throw AmbientMismatch("componentwise sum on different ambients");
    return LinearRelation<F>(a.n(), sum(a.graph(), b.graph()));
}

// Graph restriction A' = A /\ (X x X), kept in the original ambient space.
template <class F>
LinearRelation<F> restrict_to(const LinearRelation<F>& a, const Subspace<F>& x) {
    if (x.ambient_dim() != a.n()) throw AmbientMismatch("restriction space has wrong ambient");
    const Eigen::Index n = a.n();
    Mat<F> sq = Mat<F>::Zero(2 * n, 2 * x.dim());
    sq.block(0, 0, n, x.dim()) = x.basis();
    sq.block(n, x.dim(), n, x.dim()) = x.basis();
    return LinearRelation<F>(n, intersect(a.graph(), Subspace<F>::span_of(sq)));
}

// Image A(S) = {y : exists x in S with (x,y) in A}; A({0}) = mul A.
template <class F>
Subspace<F> image(const LinearRelation<F>& a, const Subspace<F>& s) {
    if (s.ambient_dim() != a.n()) throw AmbientMismatch("image argument has wrong ambient");
    Mat<F> sys(a.n(), a.dim() + s.dim());
    sys.leftCols(a.dim()) = a.x_block();
    sys.rightCols(s.dim()) = -s.basis();
    const Mat<F> null = kernel_matrix<F>(sys);
    return column_space<F>(Mat<F>(a.y_block() * null.topRows(a.dim())));
}

// Preimage A^{-1}(S); A^{-1}({0}) = ker A.
template <class F>
Subspace<F> preimage(const LinearRelation<F>& a, const Subspace<F>& s) {
    if (s.ambient_dim() != a.n()) throw AmbientMismatch("preimage argument has wrong ambient");
    Mat<F> sys(a.n(), a.dim() + s.dim());
    sys.leftCols(a.dim()) = a.y_block();
    sys.rightCols(s.dim()) = -s.basis();
    const Mat<F> null = kernel_matrix<F>(sys);
    return column_space<F>(Mat<F>(a.x_block() * null.topRows(a.dim())));
}

// Some y in S with (x, y) in A, if one exists.
template <class F>
std::optional<Vec<F>> solve_forward(const LinearRelation<F>& a, const Vec<F>& x,
                                    const Subspace<F>& s) {
    const Eigen::Index n = a.n();
    Mat<F> sys = Mat<F>::Zero(2 * n, a.dim() + s.dim());
    sys.block(0, 0, n, a.dim()) = a.x_block();
    sys.block(n, 0, n, a.dim()) = a.y_block();
    sys.block(n, a.dim(), n, s.dim()) = -s.basis();
    Vec<F> rhs = Vec<F>::Zero(2 * n);
    rhs.topRows(n) = x;
    auto sol = solve_first<F>(sys, rhs);
    if (!sol) return std::nullopt;
    return Vec<F>(s.basis() * sol->bottomRows(s.dim()));
}

// Some x in S with (x, y) in A, if one exists.
template <class F>
std::optional<Vec<F>> solve_backward(const LinearRelation<F>& a, const Vec<F>& y,
                                     const Subspace<F>& s) {
    const Eigen::Index n = a.n();
    Mat<F> sys = Mat<F>::Zero(2 * n, a.dim() + s.dim());
    sys.block(0, 0, n, a.dim()) = a.x_block();
    sys.block(n, 0, n, a.dim()) = a.y_block();
    sys.block(0, a.dim(), n, s.dim()) = -s.basis();
    Vec<F> rhs = Vec<F>::Zero(2 * n);
    rhs.bottomRows(n) = y;
    auto sol = solve_first<F>(sys, rhs);
    if (!sol) return std::nullopt;
    return Vec<F>(s.basis() * sol->bottomRows(s.dim()));
}

enum class ReducingFailure { None, NotDirect, DoesNotSpan, SumNotEqualA };

inline const char* to_string(ReducingFailure f) {
    switch (f) {
        case ReducingFailure::None: return "ok";
        case ReducingFailure::NotDirect: return "NotDirect";
        case ReducingFailure::DoesNotSpan: return "DoesNotSpan";
        case ReducingFailure::SumNotEqualA: return "SumNotEqualA";
    }
    return "?";
}

template <class F>
struct ReducingDecomposition {
    std::vector<Subspace<F>> component_spaces;
    std::vector<LinearRelation<F>> components;
};

template <class F>
struct ReducingCheck {
    bool ok = false;
    ReducingFailure failure = ReducingFailure::None;
    std::string detail;
    ReducingDecomposition<F> decomposition;  // filled when ok
};

/**
 * Checks whether the given spaces induce a reducing sum decomposition of A:
 * they must form a direct sum equal to dom A + ran A, and the graph
 * restrictions must sum componentwise to A.  On success the components are
 * returned and each component space equals dom + ran of its component.
 */
template <class F>
ReducingCheck<F> verify_reducing(const LinearRelation<F>& a,
                                 const std::vector<Subspace<F>>& spaces) {
    ReducingCheck<F> out;
    Subspace<F> total = Subspace<F>::zero(a.n());
    Eigen::Index dims = 0;
    for (const auto& s : spaces) {
        if (s.ambient_dim() != a.n()) throw AmbientMismatch("component space has wrong ambient");
        total = sum(total, s);
        dims += s.dim();
    }
    if (total.dim() != dims) {
        out.failure = ReducingFailure::NotDirect;
        out.detail = "component spaces overlap";
        return out;
    }
    if (total != carrier_of(a)) {
        out.failure = ReducingFailure::DoesNotSpan;
        out.detail = "component spaces do not sum to dom A + ran A";
        return out;
    }
    LinearRelation<F> acc = LinearRelation<F>::zero_relation(a.n());
    Eigen::Index graph_dims = 0;
    for (const auto& s : spaces) {
        LinearRelation<F> comp = restrict_to(a, s);
        graph_dims += comp.dim();
        acc = cw_sum(acc, comp);
        out.decomposition.component_spaces.push_back(s);
        out.decomposition.components.push_back(std::move(comp));
    }
    if (acc != a || acc.dim() != graph_dims) {
        out = ReducingCheck<F>{};
        out.failure = ReducingFailure::SumNotEqualA;
        out.detail = "componentwise sum of graph restrictions does not equal A";
        return out;
    }
    // with dom A + ran A decomposed, each piece splits the same way
    for (std::size_t j = 0; j < spaces.size(); ++j)
        internal_check(carrier_of(out.decomposition.components[j]) == spaces[j],
                       "component space must equal dom + ran of its component");
    out.ok = true;
    return out;
}

}  // namespace relkit

#endif
