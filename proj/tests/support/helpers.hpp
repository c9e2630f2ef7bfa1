#ifndef RELKIT_TESTS_HELPERS_HPP
#define RELKIT_TESTS_HELPERS_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "relkit/relation.hpp"

namespace testutil {

template <class F = relkit::Rational>
relkit::Vec<F> vec(std::initializer_list<int> entries) {
    relkit::Vec<F> v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (int e : entries) v(i++) = F(e);
    return v;
}

template <class F = relkit::Rational>
relkit::Vec<F> basis_vec(Eigen::Index n, Eigen::Index i) {
    relkit::Vec<F> v = relkit::Vec<F>::Zero(n);
    v(i) = F(1);
    return v;
}

template <class F = relkit::Rational>
relkit::Mat<F> mat(std::initializer_list<std::initializer_list<int>> rows) {
    const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
    relkit::Mat<F> m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (int e : row) m(i, j++) = F(e);
        ++i;
    }
    return m;
}

template <class F = relkit::Rational>
relkit::Subspace<F> span(std::initializer_list<std::initializer_list<int>> columns) {
    std::vector<relkit::Vec<F>> cols;
    for (const auto& c : columns) cols.push_back(vec<F>(c));
    const Eigen::Index n = cols.empty() ? 0 : cols[0].rows();
    relkit::Mat<F> m(n, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = cols[k];
    return relkit::Subspace<F>::span_of(m);
}

template <class F = relkit::Rational>
relkit::LinearRelation<F> rel(
    Eigen::Index n,
    std::initializer_list<std::pair<std::initializer_list<int>, std::initializer_list<int>>> pairs) {
    std::vector<std::pair<relkit::Vec<F>, relkit::Vec<F>>> ps;
    for (const auto& [x, y] : pairs) ps.emplace_back(vec<F>(x), vec<F>(y));
    return relkit::LinearRelation<F>::from_pairs(n, ps);
}

// The worked example: A = span{(0,e1), (e1,e2), (e2,0), (e1,e3)} in Q^3.
template <class F = relkit::Rational>
relkit::LinearRelation<F> worked_example() {
    return rel<F>(3, {{{0, 0, 0}, {1, 0, 0}},
                      {{1, 0, 0}, {0, 1, 0}},
                      {{0, 1, 0}, {0, 0, 0}},
                      {{1, 0, 0}, {0, 0, 1}}});
}

// External direct sum on independent coordinates.
template <class F = relkit::Rational>
relkit::LinearRelation<F> direct_sum(const relkit::LinearRelation<F>& a,
                                     const relkit::LinearRelation<F>& b) {
    const Eigen::Index n = a.n() + b.n();
    std::vector<std::pair<relkit::Vec<F>, relkit::Vec<F>>> pairs;
    for (Eigen::Index c = 0; c < a.dim(); ++c) {
        relkit::Vec<F> x = relkit::Vec<F>::Zero(n), y = relkit::Vec<F>::Zero(n);
        x.topRows(a.n()) = a.x_block().col(c);
        y.topRows(a.n()) = a.y_block().col(c);
        pairs.emplace_back(std::move(x), std::move(y));
    }
    for (Eigen::Index c = 0; c < b.dim(); ++c) {
        relkit::Vec<F> x = relkit::Vec<F>::Zero(n), y = relkit::Vec<F>::Zero(n);
        x.bottomRows(b.n()) = b.x_block().col(c);
        y.bottomRows(b.n()) = b.y_block().col(c);
        pairs.emplace_back(std::move(x), std::move(y));
    }
    return relkit::LinearRelation<F>::from_pairs(n, pairs);
}

}  // namespace testutil

#endif
