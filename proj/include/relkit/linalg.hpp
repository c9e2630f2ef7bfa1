#ifndef RELKIT_LINALG_HPP
#define RELKIT_LINALG_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "relkit/errors.hpp"
#include "relkit/scalar.hpp"

namespace relkit {

template <class F>
using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;

/**
 * In-place reduced row echelon form with exact arithmetic; pivots are the
 * first nonzero entry of each column (no magnitude pivoting, so the result
 * is deterministic).  Returns the pivot columns.
 */
template <class F>
std::vector<Eigen::Index> row_reduce(Mat<F>& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < m.rows(); ++i)
            if (!(m(i, c) == F(0))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        const F inv = F(1) / m(r, c);
        for (Eigen::Index j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == F(0)) continue;
            const F factor = m(i, c);
            for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank_of(Mat<F> m) {
    return static_cast<int>(row_reduce(m).size());
}

/**
 * Kernel of M as a matrix whose columns form the standard free-variable
 * basis (not canonicalised).
 */
template <class F>
Mat<F> kernel_matrix(Mat<F> m) {
    const Eigen::Index cols = m.cols();
    const std::vector<Eigen::Index> piv = row_reduce(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Eigen::Index c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
    const Eigen::Index null_dim = cols - static_cast<Eigen::Index>(piv.size());
    Mat<F> out = Mat<F>::Zero(cols, null_dim);
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        out(free, k) = F(1);
        for (std::size_t r = 0; r < piv.size(); ++r)
            out(piv[r], k) = -m(static_cast<Eigen::Index>(r), free);
        ++k;
    }
    return out;
}

/**
 * First solution of M x = b with free variables set to zero, or nullopt when
 * the system is inconsistent.
 */
template <class F>
std::optional<Vec<F>> solve_first(const Mat<F>& m, const Vec<F>& b) {
    Mat<F> aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = b;
    const std::vector<Eigen::Index> piv = row_reduce(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    Vec<F> x = Vec<F>::Zero(m.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) x(piv[r]) = aug(static_cast<Eigen::Index>(r), m.cols());
    return x;
}

/**
 * A subspace of F^n held by its unique reduced column echelon basis: pivot
 * rows strictly increase along the columns, each pivot entry is 1 and is the
 * only nonzero entry of its row.  Structural equality of bases therefore
 * coincides with equality of subspaces.
 */
template <class F>
class Subspace {
  public:
    Subspace() : ambient_(0), basis_(0, 0) {}

    static Subspace zero(Eigen::Index ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Mat<F>::Zero(ambient, 0);
        return s;
    }

    static Subspace full(Eigen::Index ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Mat<F>::Identity(ambient, ambient);
        return s;
    }

    // Canonicalises the span of arbitrary generating columns.
    static Subspace span_of(const Mat<F>& generators) {
        Subspace s;
        s.ambient_ = generators.rows();
        Mat<F> rt = generators.transpose();
        const std::vector<Eigen::Index> piv = row_reduce(rt);
        s.basis_ = Mat<F>(generators.rows(), static_cast<Eigen::Index>(piv.size()));
        for (std::size_t k = 0; k < piv.size(); ++k)
            s.basis_.col(static_cast<Eigen::Index>(k)) = rt.row(static_cast<Eigen::Index>(k)).transpose();
        return s;
    }

    Eigen::Index ambient_dim() const { return ambient_; }
    Eigen::Index dim() const { return basis_.cols(); }
    const Mat<F>& basis() const { return basis_; }
    bool is_zero() const { return basis_.cols() == 0; }

    bool contains(const Vec<F>& x) const {
        if (x.rows() != ambient_) throw AmbientMismatch("vector/ambient mismatch in contains()");
        return solve_first<F>(basis_, x).has_value();
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw AmbientMismatch("ambient mismatch in contains()");
        for (Eigen::Index c = 0; c < other.basis_.cols(); ++c)
            if (!contains(Vec<F>(other.basis_.col(c)))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() &&
               a.basis_.cols() == b.basis_.cols() && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    Eigen::Index ambient_;
    Mat<F> basis_;
};

template <class F>
Subspace<F> column_space(const Mat<F>& m) {
    return Subspace<F>::span_of(m);
}

template <class F>
Subspace<F> kernel(const Mat<F>& m) {
    return Subspace<F>::span_of(kernel_matrix<F>(m));
}

template <class F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw AmbientMismatch("sum of subspaces of different ambients");
    Mat<F> joint(u.ambient_dim(), u.dim() + v.dim());
    joint.leftCols(u.dim()) = u.basis();
    joint.rightCols(v.dim()) = v.basis();
    return Subspace<F>::span_of(joint);
}

// Intersection by solving U a = V b on stacked coefficients.
template <class F>
Subspace<F> intersect(const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw AmbientMismatch("intersection of subspaces of different ambients");
    if (u.is_zero() || v.is_zero()) return Subspace<F>::zero(u.ambient_dim());
    Mat<F> sys(u.ambient_dim(), u.dim() + v.dim());
    sys.leftCols(u.dim()) = u.basis();
    sys.rightCols(v.dim()) = -v.basis();
    const Mat<F> null = kernel_matrix<F>(sys);
    const Mat<F> gens = u.basis() * null.topRows(u.dim());
    return Subspace<F>::span_of(gens);
}

template <class F>
int quotient_dim(const Subspace<F>& u, const Subspace<F>& w) {
    if (!u.contains(w)) throw NotASubspace("quotient denominator is not contained in numerator");
    return static_cast<int>(u.dim() - w.dim());
}

/**
 * Deterministic completion: vectors from the canonical basis of U, taken in
 * column order and kept greedily when independent modulo W, so that W
 * together with the returned vectors spans U.
 */
template <class F>
std::vector<Vec<F>> complete_basis(const Subspace<F>& w, const Subspace<F>& u) {
    if (!u.contains(w)) throw NotASubspace("completion target does not contain the seed");
    std::vector<Vec<F>> picked;
    Mat<F> current = w.basis();
    for (Eigen::Index c = 0; c < u.dim(); ++c) {
        const Vec<F> cand = u.basis().col(c);
        Mat<F> trial(u.ambient_dim(), current.cols() + 1);
        trial.leftCols(current.cols()) = current;
        trial.col(current.cols()) = cand;
        if (rank_of<F>(trial) > static_cast<int>(current.cols())) {
            picked.push_back(cand);
            current = std::move(trial);
        }
    }
    internal_check(static_cast<Eigen::Index>(picked.size()) == u.dim() - w.dim(),
                   "complete_basis did not reach the target dimension");
    return picked;
}

template <class F>
bool member(const Vec<F>& x, const Subspace<F>& u) {
    return u.contains(x);
}

template <class F>
Vec<F> coords(const Vec<F>& x, const Mat<F>& basis) {
    auto sol = solve_first<F>(basis, x);
    if (!sol) throw NotInSpan("vector is not in the span of the given basis");
    return *sol;
}

}  // namespace relkit

#endif
