#ifndef RELKIT_PENCIL_HPP
#define RELKIT_PENCIL_HPP

#include <utility>

#include "relkit/relation.hpp"

namespace relkit {

/**
 * A matrix pencil s E - F with E, F of equal shape n x m; no rank
 * assumptions.  Rectangular pencils are allowed, in which case the two
 * associated relations live in different ambient dimensions (m and n).
 */
template <class F>
struct Pencil {
    Mat<F> e;
    Mat<F> f;

    Pencil(Mat<F> e_in, Mat<F> f_in) : e(std::move(e_in)), f(std::move(f_in)) {
        if (e.rows() != f.rows() || e.cols() != f.cols())
            throw ShapeMismatch("pencil matrices must have equal shape");
    }
};

// Kernel representation E^{-1}F = {(x,y) in F^m x F^m : F x = E y}.
template <class F>
LinearRelation<F> kernel_rep(const Pencil<F>& p) {
    const Eigen::Index m = p.e.cols();
    Mat<F> sys(p.e.rows(), 2 * m);
    sys.leftCols(m) = p.f;
    sys.rightCols(m) = -p.e;
    return LinearRelation<F>(m, kernel(sys));
}

// Range representation F E^{-1} = {(E x, F x) : x in F^m} in F^n x F^n.
template <class F>
LinearRelation<F> range_rep(const Pencil<F>& p) {
    const Eigen::Index n = p.e.rows();
    Mat<F> stacked(2 * n, p.e.cols());
    stacked.topRows(n) = p.e;
    stacked.bottomRows(n) = p.f;
    return LinearRelation<F>(n, column_space(stacked));
}

}  // namespace relkit

#endif
