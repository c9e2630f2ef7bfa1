#ifndef RELKIT_REPORT_HPP
#define RELKIT_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "relkit/io.hpp"

namespace relkit {

namespace report {

/**
 * Verification outcomes recomputed from the decomposition at emit time; the
 * report never relies on cached flags.
 */
template <class F>
struct Verification {
    bool reducing = false;
    bool chain_pairs = false;
    bool dimension_ledger = false;
    bool multishift_certificate = false;

    bool all() const {
        return reducing && chain_pairs && dimension_ledger && multishift_certificate;
    }
};

template <class F>
Verification<F> verify(const LinearRelation<F>& a, const JordanLikeDecomposition<F>& d) {
    Verification<F> v;
    v.reducing = verify_reducing(a, d.spaces()).ok;
    v.chain_pairs = true;
    for (const auto& c : d.chains)
        for (const auto& [x, y] : c.pairs(a.n()))
            if (!a.contains_pair(x, y)) v.chain_pairs = false;
    int total = static_cast<int>(d.root.singular.relation.dim()) +
                static_cast<int>(d.root.at_inf.relation.dim()) +
                static_cast<int>(d.multishift.relation.dim());
    for (const auto& [l, jp] : d.root.jordan) total += static_cast<int>(jp.relation.dim());
    v.dimension_ledger = total == static_cast<int>(a.dim()) && total == d.weyr.graph_dim();
    v.multishift_certificate = certify_multishift(d.multishift.relation);
    return v;
}

template <class F>
Json spaces_json(const JordanLikeDecomposition<F>& d) {
    Json out;
    out["R_c"] = io::matrix_to_json<F>(d.root.singular.space.basis());
    Json x = Json::object();
    for (const auto& [l, jp] : d.root.jordan)
        x[FieldTraits<F>::str(l)] = io::matrix_to_json<F>(jp.space.basis());
    out["X"] = std::move(x);
    out["X_inf"] = io::matrix_to_json<F>(d.root.at_inf.space.basis());
    out["R_m"] = io::matrix_to_json<F>(d.multishift.space.basis());
    return out;
}

template <class F>
Json component_pairs_json(const LinearRelation<F>& r) {
    return io::relation_to_json(r)["pairs"];
}

template <class F>
Json chains_json(const std::vector<Chain<F>>& chains) {
    Json out = Json::array();
    for (const auto& c : chains) {
        Json jc;
        jc["kind"] = to_string(c.kind);
        if (c.kind == ChainKind::Jordan) jc["eigenvalue"] = FieldTraits<F>::str(c.eigenvalue);
        jc["length"] = c.length();
        Json vecs = Json::array();
        for (const auto& v : c.vectors) vecs.push_back(io::vector_to_json<F>(v));
        jc["vectors"] = std::move(vecs);
        out.push_back(std::move(jc));
    }
    return out;
}

template <class F>
Json analysis_json(const LinearRelation<F>& a, const JordanLikeDecomposition<F>& d) {
    const Verification<F> v = verify(a, d);
    Json out;
    out["field"] = FieldTraits<F>::name();
    out["input"] = Json{{"n", static_cast<int>(a.n())}, {"graph_dim", static_cast<int>(a.dim())}};

    Json spectral_json;
    Json eigs = Json::array();
    for (const F& l : d.spectral.proper_eigs) eigs.push_back(FieldTraits<F>::str(l));
    spectral_json["sigma_pi"] = std::move(eigs);
    spectral_json["has_inf"] = d.spectral.has_inf_proper;
    spectral_json["unsplit"] = d.spectral.unsplit_strings();
    spectral_json["R_c"] = io::matrix_to_json<F>(d.spectral.Rc.basis());
    spectral_json["R_inf"] = io::matrix_to_json<F>(d.spectral.Rinf.basis());
    spectral_json["R_r"] = io::matrix_to_json<F>(d.spectral.Rr.basis());
    out["spectral"] = std::move(spectral_json);

    out["weyr"] = io::weyr_to_json<F>(d.weyr);
    Json dec;
    dec["spaces"] = spaces_json(d);
    Json comps;
    comps["A_S"] = component_pairs_json(d.root.singular.relation);
    Json j = Json::object();
    for (const auto& [l, jp] : d.root.jordan)
        j[FieldTraits<F>::str(l)] = component_pairs_json(jp.relation);
    comps["J"] = std::move(j);
    comps["J_inf"] = component_pairs_json(d.root.at_inf.relation);
    comps["A_M"] = component_pairs_json(d.multishift.relation);
    dec["components"] = std::move(comps);
    dec["chains"] = chains_json(d.chains);

    Json dims;
    dims["A_S"] = static_cast<int>(d.root.singular.relation.dim());
    Json jd = Json::object();
    for (const auto& [l, jp] : d.root.jordan)
        jd[FieldTraits<F>::str(l)] = static_cast<int>(jp.relation.dim());
    dims["J"] = std::move(jd);
    dims["J_inf"] = static_cast<int>(d.root.at_inf.relation.dim());
    dims["A_M"] = static_cast<int>(d.multishift.relation.dim());
    dims["dim_A"] = static_cast<int>(a.dim());
    dec["dimensions"] = std::move(dims);
    out["decomposition"] = std::move(dec);

    out["verification"] = Json{{"reducing", v.reducing},
                               {"chain_pairs", v.chain_pairs},
                               {"dimension_ledger", v.dimension_ledger},
                               {"multishift_certificate", v.multishift_certificate}};
    return out;
}

template <class F>
std::string vec_str(const Vec<F>& v) {
    std::ostringstream os;
    os << "(";
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        if (i) os << ", ";
        os << FieldTraits<F>::str(v(i));
    }
    os << ")";
    return os.str();
}

inline std::string seq_str(const WeyrSeq& s) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < s.entries.size(); ++k) {
        if (k) os << ",";
        os << s.entries[k];
    }
    os << ")";
    return os.str();
}

// Chains rendered in the triangular layout: longest chains on top, one chain
// per row as its pair sequence.
template <class F>
void print_chain_rows(std::ostream& os, const std::vector<Chain<F>>& chains, Eigen::Index n) {
    for (const auto& c : chains) {
        os << "    ";
        bool first = true;
        for (const auto& [x, y] : c.pairs(n)) {
            if (!first) os << "  ";
            first = false;
            os << "(" << vec_str<F>(x) << " -> " << vec_str<F>(y) << ")";
        }
        os << "\n";
    }
}

template <class F>
std::string analysis_text(const LinearRelation<F>& a, const JordanLikeDecomposition<F>& d) {
    const Verification<F> v = verify(a, d);
    std::ostringstream os;
    os << "relation on F^" << a.n() << " over " << FieldTraits<F>::name() << ", graph dim "
       << a.dim() << "\n";
    os << "sigma_pi = {";
    bool first = true;
    for (const F& l : d.spectral.proper_eigs) {
        if (!first) os << ", ";
        first = false;
        os << FieldTraits<F>::str(l);
    }
    if (d.spectral.has_inf_proper) {
        if (!first) os << ", ";
        os << "inf";
    }
    os << "}\n";
    os << "weyr: B=" << seq_str(d.weyr.B);
    os << " W={";
    first = true;
    for (const auto& [l, w] : d.weyr.W) {
        if (!first) os << ", ";
        first = false;
        os << FieldTraits<F>::str(l) << ":" << seq_str(w);
    }
    os << "} A=" << seq_str(d.weyr.A) << " C=" << seq_str(d.weyr.C) << "\n";

    os << "R_c dim " << d.root.singular.space.dim() << ", R_r dim " << d.spectral.Rr.dim()
       << ", R_m dim " << d.multishift.space.dim() << "\n";
    if (!d.root.singular.chains.empty()) {
        os << "  singular chains (dim A_S = " << d.root.singular.relation.dim() << "):\n";
        print_chain_rows<F>(os, d.root.singular.chains, a.n());
    }
    for (const auto& [l, jp] : d.root.jordan) {
        os << "  Jordan chains at " << FieldTraits<F>::str(l)
           << " (dim = " << jp.relation.dim() << "):\n";
        print_chain_rows<F>(os, jp.chains, a.n());
    }
    if (d.root.has_inf) {
        os << "  Jordan chains at inf (dim = " << d.root.at_inf.relation.dim() << "):\n";
        print_chain_rows<F>(os, d.root.at_inf.chains, a.n());
    }
    if (!d.multishift.chains.empty()) {
        os << "  shift chains (dim A_M = " << d.multishift.relation.dim() << "):\n";
        print_chain_rows<F>(os, d.multishift.chains, a.n());
    }

    os << "dimension ledger: " << d.root.singular.relation.dim();
    for (const auto& [l, jp] : d.root.jordan) os << " + " << jp.relation.dim();
    os << " + " << d.root.at_inf.relation.dim() << " + " << d.multishift.relation.dim() << " = "
       << a.dim() << "\n";
    os << "verification: reducing=" << (v.reducing ? "ok" : "FAIL")
       << " chain_pairs=" << (v.chain_pairs ? "ok" : "FAIL")
       << " dim_ledger=" << (v.dimension_ledger ? "ok" : "FAIL")
       << " multishift_cert=" << (v.multishift_certificate ? "ok" : "FAIL") << "\n";
    return os.str();
}

}  // namespace report

}  // namespace relkit

#endif
