#ifndef GQU_CENSUS_HPP
#define GQU_CENSUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gqu/gentop.hpp"
#include "gqu/product.hpp"
#include "gqu/quniform.hpp"

namespace gqu {

enum class BaseEnumMode { Exhaustive, BoundedSize, Random };

struct CensusConfig {
    int n = 2;
    bool strong_only = false;
    BaseEnumMode mode = BaseEnumMode::Exhaustive;
    int max_base_size = 2;     // BoundedSize mode
    int random_draws = 10000;  // Random mode
    std::uint64_t seed = 0;
    int max_preamble = 3;
    int max_cycle = 3;
    int trials = 1000;
    int collapse_max_bases = 250; // 0 = no cap
};

struct VerificationReport {
    std::string name;
    long checked = 0;
    long violations = 0;
    std::vector<std::string> failures; // replayable payloads, never expected
    double millis = 0.0;

    bool passed() const { return violations == 0; }
};

// Every union-closed family containing ∅ (and X when strong_only), each
// exactly once, canonically ordered. Ceiling n <= 4.
std::vector<GenTopology> enumerate_gentopologies(int n, bool strong_only);

// Valid bases, normalized: no element strictly contains another (redundant
// by up-closure). Exhaustive for n = 2; bounded-size or seeded-random
// otherwise. Duplicate-free and deterministic for a fixed config.
std::vector<UniformBase> enumerate_bases(const CensusConfig& cfg);

// Random strong topologies for sizes past the exhaustive ceiling.
std::vector<GenTopology> random_strong_topologies(int n, int count,
                                                  std::uint64_t seed);

// All EP sequences over size-n universes within the length bounds.
std::vector<EPSeq> enumerate_ep_sequences(const Universe& u, int max_preamble,
                                          int max_cycle);

// μ(𝒰_μ) = μ for every strong topology (exhaustive n <= 4).
VerificationReport verify_pervin_roundtrip(int n);

// Both directions of the continuity lifting theorem over sampled
// structure pairs and all maps between size-n universes (n <= 3).
VerificationReport verify_continuity_lift(int n, int trials, std::uint64_t seed);

// Sequence-level projection lemmas (Cauchy / pseudo-Cauchy / G-Cauchy
// coordinatewise equivalences) plus projection uniform continuity.
VerificationReport verify_product_lemmas(const CensusConfig& cfg);

// Finite-space collapse certificates against the EP brute-force oracle.
VerificationReport verify_finite_collapse(int n, const CensusConfig& cfg);

} // namespace gqu

#endif
