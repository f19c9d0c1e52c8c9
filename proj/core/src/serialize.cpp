#include "gqu/serialize.hpp"

#include <algorithm>
#include <fstream>

namespace gqu {

namespace {

std::vector<int> int_array(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InvalidArgument(what + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidArgument(what + " must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace

SpaceFile parse_space_file(const Json& j) {
    if (!j.is_object()) throw InvalidArgument("space file must be a JSON object");
    SpaceFile f;
    f.version = j.value("version", 1);
    if (f.version != 1) throw InvalidArgument("unsupported space file version");
    if (!j.contains("universe") || !j["universe"].is_object() ||
        !j["universe"].contains("size"))
        throw InvalidArgument("space file needs universe.size");
    const int n = j["universe"]["size"].get<int>();
    std::vector<std::string> labels;
    if (j["universe"].contains("labels"))
        labels = j["universe"]["labels"].get<std::vector<std::string>>();
    f.universe = Universe(n, std::move(labels));

    if (j.contains("topology")) {
        std::vector<PointSet> fam;
        for (const auto& arr : j["topology"])
            fam.push_back(PointSet(f.universe, int_array(arr, "open set")));
        f.topology = std::move(fam);
    }
    if (j.contains("base")) {
        std::vector<Relation> rels;
        for (const auto& rel : j["base"]) {
            std::vector<std::pair<int, int>> pairs;
            for (const auto& pr : rel) {
                auto xy = int_array(pr, "pair");
                if (xy.size() != 2) throw InvalidArgument("pair must have two points");
                pairs.emplace_back(xy[0], xy[1]);
            }
            rels.push_back(Relation(f.universe, pairs));
        }
        f.base = std::move(rels);
    }
    if (j.contains("sequences")) {
        for (const auto& sq : j["sequences"]) {
            NamedSequence ns{sq.value("name", std::string("seq")),
                             EPSeq(f.universe, int_array(sq.at("preamble"), "preamble"),
                                   int_array(sq.at("cycle"), "cycle"))};
            f.sequences.push_back(std::move(ns));
        }
    }
    return f;
}

SpaceFile load_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument("malformed JSON in " + path + ": " + e.what());
    }
    return parse_space_file(j);
}

Json to_json(const PointSet& s) {
    Json arr = Json::array();
    for (int p : s.members()) arr.push_back(p);
    return arr;
}

Json to_json(const Relation& r) {
    Json arr = Json::array();
    for (auto [x, y] : r.pairs()) arr.push_back(Json::array({x, y}));
    return arr;
}

Json to_json(const GenTopology& t) {
    Json j = Json::object();
    j["opens"] = Json::array();
    std::vector<PointSet> opens = t.opens;
    std::sort(opens.begin(), opens.end());
    for (const auto& g : opens) j["opens"].push_back(to_json(g));
    j["strong"] = t.strong;
    return j;
}

Json to_json(const UniformBase& b) {
    Json j = Json::object();
    j["elements"] = Json::array();
    std::vector<Relation> elems = b.elements;
    std::sort(elems.begin(), elems.end());
    for (const auto& e : elems) j["elements"].push_back(to_json(e));
    return j;
}

Json to_json(const EPClassification& c) {
    return Json{{"cauchy", c.cauchy},
                {"g_cauchy", c.g_cauchy},
                {"pseudo_cauchy", c.pseudo_cauchy},
                {"distinct_terms", c.distinct_terms}};
}

Json to_json(const SpaceReport& r) {
    Json j = Json::object();
    j["sequentially_complete"] = r.sequentially_complete;
    j["g_complete"] = r.g_complete;
    j["weak_g_complete"] = r.weak_g_complete;
    j["strongly_lebesgue"] = r.strongly_lebesgue;
    j["sequentially_lebesgue"] = r.sequentially_lebesgue;
    j["compact"] = r.compact;
    j["derivation"] = r.derivation;
    j["certificates"] = Json::array();
    for (const auto& c : r.certificates)
        j["certificates"].push_back(Json{{"visit_set", to_json(c.visit_set)},
                                         {"limit_set", to_json(c.limit_set)}});
    return j;
}

Json to_json(const DepthStatus& st) {
    Json j = Json::object();
    switch (st.kind) {
        case StatusKind::WitnessedAtDepth: j["status"] = "witnessed-at-depth"; break;
        case StatusKind::NoWitnessWithinHorizon:
            j["status"] = "no-witness-within-horizon";
            break;
        case StatusKind::RefutedByCertificate:
            j["status"] = "refuted-by-certificate";
            break;
    }
    if (!st.pc_witnesses.empty()) {
        Json w = Json::array();
        for (const auto& x : st.pc_witnesses)
            w.push_back(Json{{"level", x.level}, {"p", x.p}, {"m", x.m}, {"n", x.n}});
        j["pseudo_cauchy_witnesses"] = std::move(w);
    }
    if (!st.gc_witnesses.empty()) {
        Json w = Json::array();
        for (const auto& x : st.gc_witnesses)
            w.push_back(Json{{"level", x.level}, {"k", x.k}});
        j["g_cauchy_witnesses"] = std::move(w);
    }
    if (st.refutation) {
        j["refutation"] = Json{
            {"coordinate", st.refutation->coordinate},
            {"level", st.refutation->level},
            {"threshold", rat_to_string(st.refutation->threshold)},
            {"from_index", st.refutation->from_index},
            {"sample_observable", rat_to_string(st.refutation->sample_observable)}};
    }
    if (!st.detail.empty()) j["detail"] = st.detail;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j = Json::object();
    j["name"] = r.name;
    j["checked"] = r.checked;
    j["violations"] = r.violations;
    j["failures"] = r.failures;
    j["passed"] = r.passed();
    return j;
}

Json to_json(const StreamPoint& p) {
    Json arr = Json::array();
    for (const auto& v : p) arr.push_back(rat_to_string(v));
    return arr;
}

Json space_file_to_json(const SpaceFile& f) {
    Json j = Json::object();
    j["version"] = f.version;
    Json uni = Json::object();
    uni["size"] = f.universe.size;
    if (!f.universe.labels.empty()) uni["labels"] = f.universe.labels;
    j["universe"] = std::move(uni);
    if (f.topology) {
        std::vector<PointSet> fam = *f.topology;
        std::sort(fam.begin(), fam.end());
        fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
        Json arr = Json::array();
        for (const auto& g : fam) arr.push_back(to_json(g));
        j["topology"] = std::move(arr);
    }
    if (f.base) {
        std::vector<Relation> rels = *f.base;
        std::sort(rels.begin(), rels.end());
        rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
        Json arr = Json::array();
        for (const auto& r : rels) arr.push_back(to_json(r));
        j["base"] = std::move(arr);
    }
    if (!f.sequences.empty()) {
        Json arr = Json::array();
        for (const auto& ns : f.sequences) {
            Json sq = Json::object();
            sq["name"] = ns.name;
            sq["preamble"] = ns.seq.preamble;
            sq["cycle"] = ns.seq.cycle;
            arr.push_back(std::move(sq));
        }
        j["sequences"] = std::move(arr);
    }
    return j;
}

} // namespace gqu
