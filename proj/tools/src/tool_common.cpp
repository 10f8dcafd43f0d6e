#include "tool_common.hpp"

#include <cstdlib>
#include <filesystem>
#include <stdexcept>

namespace fs = std::filesystem;

namespace boltzkit::cli {

std::string GlobalOptions::out_dir() const {
    if (!out_flag.empty()) return out_flag;
    if (const char* env = std::getenv("BOLTZKIT_OUT"); env && *env) return env;
    return ".";
}

std::string GlobalOptions::out_path(const std::string& name) const {
    const fs::path dir(out_dir());
    fs::create_directories(dir);
    return (dir / name).string();
}

Config load_config(const GlobalOptions& opt) {
    if (opt.config_path.empty()) return Config();
    return Config::parse_file(opt.config_path);
}

std::map<std::string, std::string> base_metadata(const Config& cfg) {
    return {{"version", kVersion}, {"config_hash", cfg.hash_hex()}};
}

TestFamily family_from_config(const Config& cfg, const std::string& name,
                              std::uint64_t fallback_seed, bool seed_set) {
    const std::string prefix = "family." + name + ".";
    const std::string kind = cfg.get_string(prefix + "kind", "gaussian");
    if (kind == "mixture") {
        std::uint64_t seed = 0;
        if (cfg.has(prefix + "seed")) {
            seed = cfg.get_uint64(prefix + "seed");
        } else if (seed_set) {
            // Stable per-name offset so f and g draw different mixtures from
            // one --seed.
            seed = fallback_seed * 2 + (name == "f" ? 1 : 2);
        } else {
            throw std::invalid_argument("config: missing required key '" + prefix +
                                        "seed' (or pass --seed)");
        }
        return TestFamily::random_mixture(seed, cfg.get_int(prefix + "parts", 3));
    }
    const Vec3 center = cfg.has(prefix + "center") ? cfg.get_vec3(prefix + "center") : Vec3{};
    const double width = cfg.get_double(prefix + "width", 1.0);
    const double amplitude = cfg.get_double(prefix + "amplitude", 1.0);
    if (kind == "gaussian") return TestFamily::gaussian(center, width, amplitude);
    if (kind == "bump") return TestFamily::bump(center, width, amplitude);
    throw std::invalid_argument("config: key '" + prefix + "kind' has value '" + kind +
                                "', expected gaussian, bump, or mixture");
}

}  // namespace boltzkit::cli
