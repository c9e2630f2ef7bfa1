// relkit: exact analysis of linear relations in finite-dimensional spaces.
//
// Subcommands:
//   analyze  decompose a relation (or a pencil representation) and report
//   equiv    strict-equivalence test of two relations
//   synth    canonical relation from a Weyr characteristic
//   random   seeded random relation plus its ground-truth characteristic

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relkit/random.hpp"
#include "relkit/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnsplit = 2;
constexpr int kExitInequivalent = 3;

relkit::Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw relkit::ParseError("cannot open " + path);
    relkit::Json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw relkit::ParseError("invalid JSON in " + path + ": " + ex.what());
    }
    return j;
}

struct Options {
    std::string field = "rational";
    std::string path, path_b;
    std::string rep;        // kernel | range, for pencil inputs
    std::string eigs;       // comma separated scalar literals
    std::string profile = "mixed";
    bool json = false;
    std::uint64_t seed = 0;
    int max_dim = 10;
};

template <class F>
std::vector<F> parse_eig_list(const std::string& csv) {
    std::vector<F> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(relkit::FieldTraits<F>::parse(tok));
    }
    return out;
}

template <class F>
relkit::LinearRelation<F> load_relation(const Options& opt) {
    const relkit::Json j = load_json(opt.path);
    if (j.contains("E") && j.contains("F")) {
        const relkit::Pencil<F> p = relkit::io::pencil_from_json<F>(j);
        if (opt.rep == "kernel") return relkit::kernel_rep(p);
        if (opt.rep == "range") return relkit::range_rep(p);
        throw relkit::ParseError("pencil input requires --rep kernel|range");
    }
    return relkit::io::relation_from_json<F>(j);
}

template <class F>
int run_analyze(const Options& opt) {
    const relkit::LinearRelation<F> a = load_relation<F>(opt);
    const std::vector<F> injected = parse_eig_list<F>(opt.eigs);
    const relkit::SpectralData<F> sd = relkit::analyze_spectrum(a, injected);
    for (const F& l : injected) {
        bool accepted = false;
        for (const F& p : sd.proper_eigs)
            if (p == l) accepted = true;
        if (!accepted)
            std::cerr << "note: injected eigenvalue " << relkit::FieldTraits<F>::str(l)
                      << " failed verification and was rejected\n";
    }
    if (sd.blocked()) {
        std::cerr << "decomposition blocked: eigenvalue factors unsplit over the "
                  << relkit::FieldTraits<F>::name() << " field:\n";
        for (const auto& s : sd.unsplit_strings()) std::cerr << "  " << s << "\n";
        std::cerr << "hint: try --field gaussian or supply verified roots via --eigs\n";
        return kExitUnsplit;
    }
    const relkit::JordanLikeDecomposition<F> d = relkit::decompose(a, sd);
    if (opt.json)
        std::cout << relkit::report::analysis_json<F>(a, d).dump(2) << "\n";
    else
        std::cout << relkit::report::analysis_text<F>(a, d);
    return kExitOk;
}

// Locate the first differing sequence entry between two characteristics,
// walking B, then W by increasing eigenvalue, then A, then C.
template <class F>
std::string first_difference(const relkit::WeyrCharacteristic<F>& l,
                             const relkit::WeyrCharacteristic<F>& r) {
    auto seq_diff = [](const relkit::WeyrSeq& x, const relkit::WeyrSeq& y,
                       const std::string& name) -> std::string {
        const int len = std::max(x.stop_index(), y.stop_index());
        for (int k = 1; k <= len; ++k)
            if (x.at(k) != y.at(k))
                return name + "[" + std::to_string(k) + "]: " + std::to_string(x.at(k)) +
                       " vs " + std::to_string(y.at(k));
        return {};
    };
    if (std::string d = seq_diff(l.B, r.B, "B"); !d.empty()) return d;
    auto it_l = l.W.begin();
    auto it_r = r.W.begin();
    while (it_l != l.W.end() || it_r != r.W.end()) {
        const bool take_l = it_r == r.W.end() ||
                            (it_l != l.W.end() &&
                             relkit::FieldTraits<F>::less(it_l->first, it_r->first));
        const bool take_r = it_l == l.W.end() ||
                            (it_r != r.W.end() &&
                             relkit::FieldTraits<F>::less(it_r->first, it_l->first));
        if (take_l)
            return "W(" + relkit::FieldTraits<F>::str((it_l++)->first) + ")[1]: present vs absent";
        if (take_r)
            return "W(" + relkit::FieldTraits<F>::str((it_r++)->first) + ")[1]: absent vs present";
        if (std::string d = seq_diff(it_l->second, it_r->second,
                                     "W(" + relkit::FieldTraits<F>::str(it_l->first) + ")");
            !d.empty())
            return d;
        ++it_l;
        ++it_r;
    }
    if (std::string d = seq_diff(l.A, r.A, "A"); !d.empty()) return d;
    return seq_diff(l.C, r.C, "C");
}

template <class F>
int run_equiv(const Options& opt) {
    Options oa = opt, ob = opt;
    ob.path = opt.path_b;
    const relkit::LinearRelation<F> a = load_relation<F>(oa);
    const relkit::LinearRelation<F> b = load_relation<F>(ob);
    const relkit::EquivalenceWitness<F> w = relkit::strictly_equivalent(a, b);
    relkit::Json out;
    out["equivalent"] = w.equivalent;
    out["left"] = relkit::io::weyr_to_json<F>(w.left);
    out["right"] = relkit::io::weyr_to_json<F>(w.right);
    if (!w.equivalent) out["difference"] = first_difference<F>(w.left, w.right);
    std::cout << out.dump(2) << "\n";
    return w.equivalent ? kExitOk : kExitInequivalent;
}

template <class F>
int run_synth(const Options& opt) {
    const relkit::Json j = load_json(opt.path);
    const relkit::WeyrCharacteristic<F> wc = relkit::io::weyr_from_json<F>(j);
    const relkit::LinearRelation<F> a = relkit::synthesize(wc);
    std::cout << relkit::io::relation_to_json<F>(a).dump(2) << "\n";
    return kExitOk;
}

template <class F>
int run_random(const Options& opt) {
    relkit::Rng rng(opt.seed);
    const relkit::RandomInstance<F> inst =
        relkit::random_relation<F>(rng, opt.max_dim, opt.profile);
    relkit::Json out;
    out["relation"] = relkit::io::relation_to_json<F>(inst.relation);
    out["weyr"] = relkit::io::weyr_to_json<F>(inst.weyr);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

template <class F>
int dispatch(const std::string& cmd, const Options& opt) {
    if (cmd == "analyze") return run_analyze<F>(opt);
    if (cmd == "equiv") return run_equiv<F>(opt);
    if (cmd == "synth") return run_synth<F>(opt);
    if (cmd == "random") return run_random<F>(opt);
    return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Jordan-like decomposition of linear relations"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--field", opt.field, "working field: rational | gaussian")
        ->envname("RELKIT_FIELD")
        ->check(CLI::IsMember({"rational", "gaussian"}));

    auto* analyze = app.add_subcommand("analyze", "decompose a relation or pencil");
    analyze->add_option("path", opt.path, "relation or pencil JSON file")->required();
    analyze->add_flag("--json", opt.json, "emit the report as JSON");
    analyze->add_option("--rep", opt.rep, "pencil representation: kernel | range")
        ->check(CLI::IsMember({"kernel", "range"}));
    analyze->add_option("--eigs", opt.eigs,
                        "comma separated eigenvalue candidates, verified before use");

    auto* equiv = app.add_subcommand("equiv", "strict equivalence of two relations");
    equiv->add_option("pathA", opt.path, "first relation JSON file")->required();
    equiv->add_option("pathB", opt.path_b, "second relation JSON file")->required();
    equiv->add_option("--rep", opt.rep, "pencil representation: kernel | range")
        ->check(CLI::IsMember({"kernel", "range"}));

    auto* synth = app.add_subcommand("synth", "synthesize from a Weyr characteristic");
    synth->add_option("path", opt.path, "characteristic JSON file")->required();

    auto* random = app.add_subcommand("random", "seeded random relation with ground truth");
    random->add_option("--seed", opt.seed, "random seed")->required();
    random->add_option("--max-dim", opt.max_dim, "carrier dimension bound")
        ->check(CLI::PositiveNumber);
    random->add_option("--profile", opt.profile, "instance profile")
        ->check(CLI::IsMember({"mixed", "operator", "singular", "multishift"}));

    CLI11_PARSE(app, argc, argv);
    const std::string cmd = app.get_subcommands().front()->get_name();

    try {
        if (opt.field == "gaussian") return dispatch<relkit::GaussianRational>(cmd, opt);
        return dispatch<relkit::Rational>(cmd, opt);
    } catch (const relkit::UnsplitEigenvalues& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        for (const auto& f : ex.factors) std::cerr << "  " << f << "\n";
        return kExitUnsplit;
    } catch (const relkit::ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitError;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitError;
    }
}
