#ifndef GQU_SERIALIZE_HPP
#define GQU_SERIALIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gqu/census.hpp"
#include "gqu/gentop.hpp"
#include "gqu/quniform.hpp"
#include "gqu/stream.hpp"

namespace gqu {

using Json = nlohmann::ordered_json;

struct NamedSequence {
    std::string name;
    EPSeq seq;
};

// On-disk space description. Topology families and bases are kept raw so
// the validate command can report axiom violations instead of refusing to
// parse.
struct SpaceFile {
    int version = 1;
    Universe universe{1};
    std::optional<std::vector<PointSet>> topology;
    std::optional<std::vector<Relation>> base;
    std::vector<NamedSequence> sequences;
};

SpaceFile parse_space_file(const Json& j);
SpaceFile load_space_file(const std::string& path);

// Canonical form: fixed key order, sorted point/pair arrays. Re-serializing
// a canonical file is byte-identical.
Json space_file_to_json(const SpaceFile& f);

Json to_json(const PointSet& s);
Json to_json(const Relation& r);
Json to_json(const GenTopology& t);
Json to_json(const UniformBase& b);
Json to_json(const EPClassification& c);
Json to_json(const SpaceReport& r);
Json to_json(const DepthStatus& st);
// timings are excluded so fixed-seed runs stay byte-identical
Json to_json(const VerificationReport& r);
Json to_json(const StreamPoint& p);

} // namespace gqu

#endif
