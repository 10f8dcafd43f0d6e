#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boltzkit/rational.hpp"
#include "boltzkit/vec3.hpp"

namespace boltzkit {

/// Flat key-value experiment configuration.
///
/// File format: one "section.key = value" entry per line; '#' starts a
/// comment; blank lines ignored. Keys are dotted lowercase identifiers.
/// Values are typed on read: numbers, booleans (true/false), rationals
/// ("3/2", "inf"), comma-separated lists, comma triples for vectors. Exponent
/// values are always parsed as exact rationals, never as floats.
///
/// Every consumer declares its full key schema up front; unknown keys are a
/// hard error naming the offending key, so a typo cannot silently fall back
/// to a default.
class Config {
  public:
    Config() = default;

    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text, const std::string& origin = "<inline>");

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    /// Required getters: throw a configuration error naming the key.
    std::string get_string(const std::string& key) const;
    double get_double(const std::string& key) const;
    int get_int(const std::string& key) const;
    bool get_bool(const std::string& key) const;
    Rational get_rational(const std::string& key) const;
    /// Exponent entry ("4/3", "inf") parsed to its reciprocal.
    Rational get_reciprocal(const std::string& key) const;
    std::uint64_t get_uint64(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key) const;
    Vec3 get_vec3(const std::string& key) const;

    /// Defaulted getters.
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::uint64_t get_uint64(const std::string& key, std::uint64_t fallback) const;

    /// Inserts or overwrites an entry (CLI flag overrides).
    void set(const std::string& key, const std::string& value);

    /// Rejects any key not in `allowed`; the error message names the key and
    /// the schema list. Call after all overrides are applied.
    void validate_keys(std::span<const std::string_view> allowed) const;

    /// FNV-1a hash of the canonical serialization (sorted "key=value"
    /// lines); recorded in every output so results can be traced to their
    /// exact configuration.
    std::uint64_t hash() const;
    std::string hash_hex() const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

  private:
    std::map<std::string, std::string> entries_;
};

}  // namespace boltzkit
