#ifndef RELKIT_IO_HPP
#define RELKIT_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "relkit/decompose.hpp"
#include "relkit/pencil.hpp"

namespace relkit {

using Json = nlohmann::ordered_json;

namespace io {

template <class F>
Json vector_to_json(const Vec<F>& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.rows(); ++i) out.push_back(FieldTraits<F>::str(v(i)));
    return out;
}

// Matrices serialise row-major as arrays of scalar strings.
template <class F>
Json matrix_to_json(const Mat<F>& m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(FieldTraits<F>::str(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

template <class F>
Mat<F> matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = -1;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError("matrix row must be an array");
        if (cols < 0)
            cols = static_cast<Eigen::Index>(row.size());
        else if (cols != static_cast<Eigen::Index>(row.size()))
            throw ParseError("ragged matrix rows");
    }
    if (cols < 0) cols = 0;
    Mat<F> m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index c = 0; c < cols; ++c) {
            const auto& cell = j[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (!cell.is_string()) throw ParseError("matrix entries must be scalar strings");
            m(i, c) = FieldTraits<F>::parse(cell.template get<std::string>());
        }
    return m;
}

template <class F>
Vec<F> vector_from_json(const Json& j, Eigen::Index expect) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != expect)
        throw ParseError("vector has wrong length");
    Vec<F> v(expect);
    for (Eigen::Index i = 0; i < expect; ++i) {
        const auto& cell = j[static_cast<std::size_t>(i)];
        if (!cell.is_string()) throw ParseError("vector entries must be scalar strings");
        v(i) = FieldTraits<F>::parse(cell.template get<std::string>());
    }
    return v;
}

// Relations: {"n": int, "pairs": [[x, y], ...]}; pairs need not be
// independent and are canonicalised on load.
template <class F>
Json relation_to_json(const LinearRelation<F>& a) {
    Json out;
    out["n"] = static_cast<int>(a.n());
    Json pairs = Json::array();
    for (Eigen::Index c = 0; c < a.dim(); ++c) {
        Json pair = Json::array();
        pair.push_back(vector_to_json<F>(Vec<F>(a.x_block().col(c))));
        pair.push_back(vector_to_json<F>(Vec<F>(a.y_block().col(c))));
        pairs.push_back(std::move(pair));
    }
    out["pairs"] = std::move(pairs);
    return out;
}

template <class F>
LinearRelation<F> relation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("pairs"))
        throw ParseError("relation JSON needs keys \"n\" and \"pairs\"");
    if (!j["n"].is_number_integer() || j["n"].template get<int>() < 0)
        throw ParseError("\"n\" must be a nonnegative integer");
    const Eigen::Index n = j["n"].template get<int>();
    if (!j["pairs"].is_array()) throw ParseError("\"pairs\" must be an array");
    std::vector<std::pair<Vec<F>, Vec<F>>> pairs;
    for (const auto& p : j["pairs"]) {
        if (!p.is_array() || p.size() != 2) throw ParseError("each pair must be [x, y]");
        pairs.emplace_back(vector_from_json<F>(p[0], n), vector_from_json<F>(p[1], n));
    }
    return LinearRelation<F>::from_pairs(n, pairs);
}

template <class F>
Json pencil_to_json(const Pencil<F>& p) {
    Json out;
    out["E"] = matrix_to_json<F>(p.e);
    out["F"] = matrix_to_json<F>(p.f);
    return out;
}

template <class F>
Pencil<F> pencil_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("E") || !j.contains("F"))
        throw ParseError("pencil JSON needs keys \"E\" and \"F\"");
    return Pencil<F>(matrix_from_json<F>(j["E"]), matrix_from_json<F>(j["F"]));
}

inline Json seq_to_json(const WeyrSeq& s) {
    Json out = Json::array();
    for (int e : s.entries) out.push_back(e);
    return out;
}

inline WeyrSeq seq_from_json(const Json& j, const char* name) {
    if (!j.is_array()) throw ParseError(std::string(name) + " must be an array of integers");
    WeyrSeq s;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw ParseError(std::string(name) + " must contain integers only");
        s.entries.push_back(e.template get<int>());
    }
    if (!s.well_formed())
        throw MalformedCharacteristic(std::string(name) +
                                      " must be positive, nonincreasing, without trailing zeros");
    return s;
}

// Weyr characteristic: {"B": [...], "W": {"lambda": [...]}, "A": [...],
// "C": [...]} with C recorded from index 1 (C_0 = C_1 by convention).
template <class F>
Json weyr_to_json(const WeyrCharacteristic<F>& wc) {
    Json out;
    out["B"] = seq_to_json(wc.B);
    Json w = Json::object();
    for (const auto& [lambda, seq] : wc.W) w[FieldTraits<F>::str(lambda)] = seq_to_json(seq);
    out["W"] = std::move(w);
    out["A"] = seq_to_json(wc.A);
    out["C"] = seq_to_json(wc.C);
    return out;
}

template <class F>
WeyrCharacteristic<F> weyr_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("B") || !j.contains("W") || !j.contains("A") ||
        !j.contains("C"))
        throw ParseError("characteristic JSON needs keys B, W, A, C");
    WeyrCharacteristic<F> wc;
    wc.B = seq_from_json(j["B"], "B");
    if (!j["W"].is_object()) throw ParseError("W must be an object keyed by eigenvalues");
    for (const auto& [key, val] : j["W"].items()) {
        const F lambda = FieldTraits<F>::parse(key);
        if (wc.W.count(lambda)) throw MalformedCharacteristic("duplicate eigenvalue in W");
        WeyrSeq s = seq_from_json(val, "W entry");
        if (s.empty()) throw MalformedCharacteristic("W entries must be nonempty");
        wc.W.emplace(lambda, std::move(s));
    }
    wc.A = seq_from_json(j["A"], "A");
    wc.C = seq_from_json(j["C"], "C");
    return wc;
}

}  // namespace io

}  // namespace relkit

#endif
