// gqu — command-line workbench for finite g-quasi uniform spaces.
//
// Exit codes: 0 all checks passed, 1 a check failed (violation found),
// 2 usage or input error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gqu/census.hpp"
#include "gqu/product.hpp"
#include "gqu/serialize.hpp"
#include "gqu/stream.hpp"

namespace {

using gqu::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::vector<std::string> files;
    bool json = false;
    int depth = 100;
    long horizon = 300;
    int stages = 8;
    long cap = 100000;
    int n = 2;
    std::uint64_t seed = 0;
    int factors = 4;
    int candidate_range = 50;
};

void emit(const Options& opt, const Json& j, const std::string& human) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human << "\n";
}

gqu::SpaceFile load_single(const Options& opt) {
    if (opt.files.size() != 1)
        throw gqu::InvalidArgument("exactly one --file required");
    return gqu::load_space_file(opt.files[0]);
}

std::string report_text(const gqu::VerificationReport& r) {
    std::string out = r.name + ": checked " + std::to_string(r.checked) +
                      ", violations " + std::to_string(r.violations) + " (" +
                      std::to_string(r.millis) + " ms)";
    for (const auto& f : r.failures) out += "\n  FAIL " + f;
    return out;
}

int run_validate(const Options& opt) {
    const gqu::SpaceFile f = load_single(opt);
    Json j = Json::object();
    std::string text;
    bool ok = true;
    if (f.base) {
        try {
            gqu::validate_base(f.universe, *f.base);
            j["base"] = "valid";
            text += "base: valid\n";
        } catch (const gqu::Error& e) {
            ok = false;
            j["base"] = std::string("invalid: ") + e.what();
            text += std::string("base: INVALID — ") + e.what() + "\n";
        }
    }
    if (f.topology) {
        try {
            const gqu::GenTopology t = gqu::validate_family(f.universe, *f.topology);
            j["topology"] = t.strong ? "valid (strong)" : "valid (not strong)";
            text += t.strong ? "topology: valid, strong\n" : "topology: valid, not strong\n";
        } catch (const gqu::Error& e) {
            ok = false;
            j["topology"] = std::string("invalid: ") + e.what();
            text += std::string("topology: INVALID — ") + e.what() + "\n";
        }
    }
    if (!f.base && !f.topology)
        throw gqu::InvalidArgument("file has neither base nor topology");
    j["valid"] = ok;
    emit(opt, j, text + (ok ? "all valid" : "violations found"));
    return ok ? kExitPass : kExitFail;
}

int run_induce(const Options& opt) {
    const gqu::SpaceFile f = load_single(opt);
    if (!f.base) throw gqu::InvalidArgument("induce needs a base");
    const gqu::UniformBase b = gqu::validate_base(f.universe, *f.base);
    const gqu::GenTopology t = gqu::induced_supratopology(b);
    const Json j = gqu::to_json(t);
    emit(opt, j, "induced supratopology: " + j.dump());
    return kExitPass;
}

int run_pervin(const Options& opt) {
    const gqu::SpaceFile f = load_single(opt);
    if (!f.topology) throw gqu::InvalidArgument("pervin needs a topology");
    const gqu::GenTopology t = gqu::validate_family(f.universe, *f.topology, true);
    const gqu::UniformBase b = gqu::pervin_base(t);
    const Json j = gqu::to_json(b);
    emit(opt, j, "pervin base: " + j.dump());
    return kExitPass;
}

int run_product(const Options& opt) {
    if (opt.files.empty()) throw gqu::InvalidArgument("product needs --file inputs");
    std::vector<gqu::Universe> unis;
    std::vector<gqu::UniformBase> bases;
    for (const auto& path : opt.files) {
        const gqu::SpaceFile f = gqu::load_space_file(path);
        if (!f.base) throw gqu::InvalidArgument("every factor file needs a base");
        unis.push_back(f.universe);
        bases.push_back(gqu::validate_base(f.universe, *f.base));
    }
    const gqu::ProductUniverse pu = gqu::product_universe(unis);
    const gqu::UniformBase pb = gqu::product_base(pu, bases);
    Json j = Json::object();
    j["version"] = 1;
    j["universe"] = Json{{"size", pu.universe.size}};
    Json fs = Json::array();
    for (const auto& u : pu.factors) fs.push_back(u.size);
    j["factors"] = std::move(fs); // mixed radix, factor 0 most significant
    j["base"] = gqu::to_json(pb)["elements"];
    emit(opt, j, "product space: " + j.dump());
    return kExitPass;
}

int run_classify(const Options& opt) {
    const gqu::SpaceFile f = load_single(opt);
    if (!f.base) throw gqu::InvalidArgument("classify needs a base");
    if (f.sequences.empty()) throw gqu::InvalidArgument("classify needs sequences");
    const gqu::UniformBase b = gqu::validate_base(f.universe, *f.base);
    Json j = Json::array();
    std::string text;
    for (const auto& ns : f.sequences) {
        const gqu::EPClassification c = gqu::classify_ep_sequence(b, ns.seq);
        Json e = Json::object();
        e["name"] = ns.name;
        e["classification"] = gqu::to_json(c);
        text += ns.name + ": " + gqu::to_json(c).dump() + "\n";
        j.push_back(std::move(e));
    }
    emit(opt, j, text);
    return kExitPass;
}

int run_decide(const Options& opt) {
    const gqu::SpaceFile f = load_single(opt);
    if (!f.base) throw gqu::InvalidArgument("decide needs a base");
    const gqu::UniformBase b = gqu::validate_base(f.universe, *f.base);
    const gqu::SpaceReport r = gqu::decide_space_properties(b);
    const Json j = gqu::to_json(r);
    emit(opt, j, "space report: " + j.dump());
    return kExitPass;
}

int run_replicate_note(const Options& opt) {
    const gqu::StreamedSpace sp = gqu::make_discrete_int_space();
    const gqu::StreamedSeq s = gqu::note_sequence();
    const gqu::DepthStatus w =
        gqu::witness_pseudo_cauchy(sp, s, opt.depth, opt.horizon);
    bool ok = w.kind == gqu::StatusKind::WitnessedAtDepth;
    Json cands = Json::array();
    for (int c = -opt.candidate_range; c <= opt.candidate_range; ++c) {
        const gqu::DepthStatus r =
            gqu::refute_cluster(sp, s, {gqu::Rat(c)}, opt.horizon);
        if (r.kind != gqu::StatusKind::RefutedByCertificate) ok = false;
        cands.push_back(Json{{"candidate", c}, {"result", gqu::to_json(r)}});
    }
    Json j = Json::object();
    j["sequence"] = s.id;
    j["space"] = sp.id;
    j["pseudo_cauchy"] = gqu::to_json(w);
    j["cluster_refutations"] = std::move(cands);
    j["passed"] = ok;
    emit(opt, j,
         std::string("note replication: pseudo-Cauchy ") +
             (w.kind == gqu::StatusKind::WitnessedAtDepth ? "witnessed" : "NOT witnessed") +
             ", candidates in [-" + std::to_string(opt.candidate_range) + "," +
             std::to_string(opt.candidate_range) + "] " +
             (ok ? "all refuted" : "NOT all refuted"));
    return ok ? kExitPass : kExitFail;
}

int run_replicate_example(const Options& opt) {
    const int K = opt.factors;
    const gqu::StreamedSpace sp = gqu::make_example_product(K);
    const gqu::StreamedSeq s = gqu::example_sequence(K);
    const gqu::DepthStatus w =
        gqu::witness_pseudo_cauchy(sp, s, opt.depth, opt.horizon);
    bool ok = w.kind == gqu::StatusKind::WitnessedAtDepth;

    // candidate grid: per coordinate, naturals 1..R plus the special point
    std::vector<std::vector<gqu::Rat>> coord_values(K);
    for (int i = 1; i <= K; ++i) {
        for (int v = 1; v <= opt.candidate_range; ++v)
            coord_values[i - 1].push_back(gqu::Rat(v));
        coord_values[i - 1].push_back(gqu::Rat(1, i));
    }
    long refuted = 0, total = 0;
    Json sample = Json::array();
    std::vector<std::size_t> idx(K, 0);
    while (true) {
        gqu::StreamPoint cand;
        for (int i = 0; i < K; ++i) cand.push_back(coord_values[i][idx[i]]);
        const gqu::DepthStatus r = gqu::refute_cluster(sp, s, cand, opt.horizon);
        ++total;
        if (r.kind == gqu::StatusKind::RefutedByCertificate)
            ++refuted;
        else
            ok = false;
        if (sample.size() < 3)
            sample.push_back(Json{{"candidate", gqu::to_json(cand)},
                                  {"result", gqu::to_json(r)}});
        int i = 0;
        while (i < K && ++idx[i] == coord_values[i].size()) idx[i++] = 0;
        if (i == K) break;
    }
    Json terms = Json::array();
    for (long t = 0; t < 2 * K; ++t) terms.push_back(gqu::to_json(s.term(t)));
    Json j = Json::object();
    j["sequence"] = s.id;
    j["space"] = sp.id;
    j["first_terms"] = std::move(terms);
    j["pseudo_cauchy"] = gqu::to_json(w);
    j["candidates_total"] = total;
    j["candidates_refuted"] = refuted;
    j["sample_refutations"] = std::move(sample);
    j["passed"] = ok;
    emit(opt, j,
         "example replication (K=" + std::to_string(K) + "): pseudo-Cauchy " +
             (w.kind == gqu::StatusKind::WitnessedAtDepth ? "witnessed" : "NOT witnessed") +
             "; refuted " + std::to_string(refuted) + "/" + std::to_string(total) +
             " cluster candidates");
    return ok ? kExitPass : kExitFail;
}

int run_extract(const Options& opt) {
    const gqu::StreamedSpace sp = gqu::make_rational_metric_space();
    const gqu::StreamedSeq s = gqu::harmonic_walk();
    // precondition spot-check: the walk is G-Cauchy to a small depth
    const gqu::DepthStatus gc =
        gqu::witness_g_cauchy(sp, s, std::min(opt.stages, 8), 1000);
    if (gc.kind != gqu::StatusKind::WitnessedAtDepth)
        throw gqu::InvalidArgument("input sequence failed the G-Cauchy spot check");
    const std::vector<long> idx =
        gqu::extract_pseudo_cauchy_subsequence(sp, s, opt.stages, opt.cap);
    const gqu::StreamedSeq sub = gqu::subsequence(s, idx);
    const gqu::DepthStatus pc = gqu::witness_pseudo_cauchy(
        sp, sub, opt.stages, static_cast<long>(idx.size()) - 1);
    const bool ok = pc.kind == gqu::StatusKind::WitnessedAtDepth;
    Json j = Json::object();
    j["sequence"] = s.id;
    j["space"] = sp.id;
    j["stages"] = opt.stages;
    j["indices"] = idx;
    j["subsequence_pseudo_cauchy"] = gqu::to_json(pc);
    j["passed"] = ok;
    emit(opt, j,
         "extracted " + std::to_string(idx.size()) + " indices; subsequence " +
             (ok ? "pseudo-Cauchy witnessed" : "NOT witnessed"));
    return ok ? kExitPass : kExitFail;
}

int run_census(const Options& opt) {
    Json j = Json::object();
    j["n"] = opt.n;
    const auto topos = gqu::enumerate_gentopologies(opt.n, false);
    const auto strong = gqu::enumerate_gentopologies(opt.n, true);
    j["gentopologies"] = topos.size();
    j["strong_gentopologies"] = strong.size();
    if (opt.n <= 3) {
        gqu::CensusConfig cfg;
        cfg.n = opt.n;
        cfg.seed = opt.seed;
        cfg.mode = opt.n <= 2 ? gqu::BaseEnumMode::Exhaustive
                              : gqu::BaseEnumMode::BoundedSize;
        j["bases_mode"] = opt.n <= 2 ? "exhaustive" : "bounded-size<=2";
        j["bases"] = gqu::enumerate_bases(cfg).size();
    }
    emit(opt, j, "census n=" + std::to_string(opt.n) + ": " + j.dump());
    return kExitPass;
}

int run_verify(const Options& opt, const std::string& what) {
    std::vector<gqu::VerificationReport> reps;
    if (what == "pervin") {
        reps.push_back(gqu::verify_pervin_roundtrip(opt.n));
        if (opt.n >= 4) {
            // the exhaustive ceiling; add seeded-random coverage
            gqu::VerificationReport r;
            r.name = "pervin-roundtrip-random-n4";
            for (const auto& mu : gqu::random_strong_topologies(4, 500, opt.seed)) {
                ++r.checked;
                if (!(gqu::induced_supratopology(gqu::pervin_base(mu)) == mu))
                    ++r.violations;
            }
            reps.push_back(std::move(r));
        }
    } else if (what == "lift") {
        reps.push_back(gqu::verify_continuity_lift(opt.n, 200, opt.seed));
    } else if (what == "product-lemmas") {
        gqu::CensusConfig cfg;
        cfg.seed = opt.seed;
        reps.push_back(gqu::verify_product_lemmas(cfg));
    } else if (what == "collapse") {
        gqu::CensusConfig cfg;
        cfg.seed = opt.seed;
        reps.push_back(gqu::verify_finite_collapse(opt.n, cfg));
    }
    Json j = Json::array();
    bool ok = true;
    std::string text;
    for (const auto& r : reps) {
        j.push_back(gqu::to_json(r));
        ok = ok && r.passed();
        text += report_text(r) + "\n";
    }
    emit(opt, j, text);
    return ok ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification workbench for generalized quasi-uniform spaces"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* c) {
        c->add_flag("--json", opt.json, "machine-readable output");
        c->add_option("--seed", opt.seed, "RNG seed for random modes");
        return c;
    };

    auto* validate = add_common(app.add_subcommand("validate", "check base/topology axioms"));
    validate->add_option("--file", opt.files)->required();
    auto* induce = add_common(app.add_subcommand("induce", "induced supratopology of a base"));
    induce->add_option("--file", opt.files)->required();
    auto* pervin = add_common(app.add_subcommand("pervin", "Pervin base of a strong topology"));
    pervin->add_option("--file", opt.files)->required();
    auto* product = add_common(app.add_subcommand("product", "product of factor spaces"));
    product->add_option("--file", opt.files)->required();
    auto* classify = add_common(app.add_subcommand("classify", "classify EP sequences"));
    classify->add_option("--file", opt.files)->required();
    auto* decide = add_common(app.add_subcommand("decide", "space property report"));
    decide->add_option("--file", opt.files)->required();

    auto* replicate = app.add_subcommand("replicate", "replicate the catalog counterexamples");
    replicate->require_subcommand(1);
    auto* note = add_common(replicate->add_subcommand("note", "1,1,2,2,3,3,... over discrete integers"));
    note->add_option("--depth", opt.depth);
    note->add_option("--horizon", opt.horizon);
    note->add_option("--candidate-range", opt.candidate_range);
    auto* example = add_common(replicate->add_subcommand("example", "non-Lebesgue product sequence"));
    example->add_option("--factors", opt.factors);
    example->add_option("--depth", opt.depth);
    example->add_option("--horizon", opt.horizon);
    example->add_option("--candidate-range", opt.candidate_range)->default_val(6);

    auto* extract = add_common(app.add_subcommand("extract",
        "pseudo-Cauchy subsequence of the harmonic walk"));
    extract->add_option("--stages", opt.stages);
    extract->add_option("--cap", opt.cap);

    auto* census = add_common(app.add_subcommand("census", "enumerate small structures"));
    census->add_option("--n", opt.n);

    auto* verify = app.add_subcommand("verify", "machine-verify the theorems");
    verify->require_subcommand(1);
    for (const char* w : {"pervin", "lift", "product-lemmas", "collapse"}) {
        auto* sub = add_common(verify->add_subcommand(w));
        sub->add_option("--n", opt.n);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return run_validate(opt);
        if (induce->parsed()) return run_induce(opt);
        if (pervin->parsed()) return run_pervin(opt);
        if (product->parsed()) return run_product(opt);
        if (classify->parsed()) return run_classify(opt);
        if (decide->parsed()) return run_decide(opt);
        if (replicate->parsed()) {
            if (note->parsed()) return run_replicate_note(opt);
            return run_replicate_example(opt);
        }
        if (extract->parsed()) return run_extract(opt);
        if (census->parsed()) return run_census(opt);
        if (verify->parsed()) {
            for (const auto* sub : verify->get_subcommands())
                return run_verify(opt, sub->get_name());
        }
    } catch (const gqu::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
