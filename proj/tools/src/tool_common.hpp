#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "boltzkit/config.hpp"
#include "boltzkit/estimate_lab.hpp"
#include "boltzkit/field.hpp"

namespace boltzkit::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Options shared by every subcommand. The output directory resolves as
/// --out, else $BOLTZKIT_OUT, else the working directory. Threads and output
/// paths never enter the config hash, so result files stay byte-identical
/// across thread counts and relocations.
struct GlobalOptions {
    std::string config_path;
    std::string out_flag;
    int threads = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;

    std::string out_dir() const;
    /// Joins out_dir() with `name` and creates the directory if needed.
    std::string out_path(const std::string& name) const;
};

/// Loads --config if given (empty Config otherwise) and applies "key=value"
/// overrides of the form accepted by Config::set.
Config load_config(const GlobalOptions& opt);

/// Standard trailing metadata for CSV/JSON outputs: tool version plus the
/// FNV-1a hash of the canonical config serialization.
std::map<std::string, std::string> base_metadata(const Config& cfg);

/// Builds a sampled field from "family.<name>.*" config keys.
/// Schema: kind = gaussian | bump | mixture; gaussian/bump take center
/// (comma triple), width, amplitude; mixture takes seed and parts.
/// `fallback_seed` (from --seed) substitutes for a missing mixture seed.
TestFamily family_from_config(const Config& cfg, const std::string& name,
                              std::uint64_t fallback_seed, bool seed_set);

}  // namespace boltzkit::cli
