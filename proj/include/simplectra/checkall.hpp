#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace simplectra::shell {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "simplectra";
inline constexpr const char* kToolVersion = "1.0.0";

// Manifest embedded in every JSON output; no timestamps or absolute paths, so
// equal manifests produce byte-identical documents.
json run_manifest(std::uint64_t seed, const std::string& corpus = "");

// Full invariant battery over the named corpus: cell counts,
// Euler-Poincare, spectra, trivial/nontrivial splits, Garland bounds,
// colorability, weak chromatic numbers, disorientability vs the 3k1
// eigenvalue, deviation norms, Cheeger/mixing spot checks, gallery counting
// identities on seeded draws, and Satake closed-form batteries.
struct CheckAllResult {
    json document;
    bool all_hold = false;
    int checks_run = 0;
    int checks_failed = 0;
};
CheckAllResult run_check_all(const std::string& corpus, std::uint64_t seed);

} // namespace simplectra::shell
