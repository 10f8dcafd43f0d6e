#include "boltzkit/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace boltzkit {

namespace {

std::string trim(std::string_view sv) {
    std::size_t b = 0, e = sv.size();
    while (b < e && std::isspace(static_cast<unsigned char>(sv[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(sv[e - 1]))) --e;
    return std::string(sv.substr(b, e - b));
}

bool valid_key(const std::string& key) {
    if (key.empty()) return false;
    for (char c : key) {
        if (!(std::islower(static_cast<unsigned char>(c)) ||
              std::isdigit(static_cast<unsigned char>(c)) || c == '_' || c == '.'))
            return false;
    }
    return true;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const char* want) {
    throw std::invalid_argument("config: key '" + key + "' has value '" + value +
                                "', expected " + want);
}

}  // namespace

Config Config::parse_text(const std::string& text, const std::string& origin) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash_pos = line.find('#'); hash_pos != std::string::npos)
            line.erase(hash_pos);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: " + origin + ":" + std::to_string(line_no) +
                                        ": expected key = value");
        const std::string key = trim(std::string_view(stripped).substr(0, eq));
        const std::string value = trim(std::string_view(stripped).substr(eq + 1));
        if (!valid_key(key))
            throw std::invalid_argument("config: " + origin + ":" + std::to_string(line_no) +
                                        ": bad key '" + key + "'");
        if (cfg.entries_.count(key))
            throw std::invalid_argument("config: " + origin + ":" + std::to_string(line_no) +
                                        ": duplicate key '" + key + "'");
        cfg.entries_[key] = value;
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

std::string Config::get_string(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end())
        throw std::invalid_argument("config: missing required key '" + key + "'");
    return it->second;
}

double Config::get_double(const std::string& key) const {
    const std::string value = get_string(key);
    try {
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != value.size()) bad_value(key, value, "a number");
        return parsed;
    } catch (const std::invalid_argument&) {
        bad_value(key, value, "a number");
    } catch (const std::out_of_range&) {
        bad_value(key, value, "a representable number");
    }
}

int Config::get_int(const std::string& key) const {
    const std::string value = get_string(key);
    int parsed = 0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || end != value.data() + value.size())
        bad_value(key, value, "an integer");
    return parsed;
}

std::uint64_t Config::get_uint64(const std::string& key) const {
    const std::string value = get_string(key);
    std::uint64_t parsed = 0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || end != value.data() + value.size())
        bad_value(key, value, "an unsigned integer");
    return parsed;
}

bool Config::get_bool(const std::string& key) const {
    const std::string value = get_string(key);
    if (value == "true") return true;
    if (value == "false") return false;
    bad_value(key, value, "true or false");
}

Rational Config::get_rational(const std::string& key) const {
    const std::string value = get_string(key);
    try {
        return Rational::parse(value);
    } catch (const std::exception&) {
        bad_value(key, value, "a rational (num or num/den)");
    }
}

Rational Config::get_reciprocal(const std::string& key) const {
    const std::string value = get_string(key);
    try {
        return Rational::parse_reciprocal(value);
    } catch (const std::exception&) {
        bad_value(key, value, "an exponent (num, num/den, or inf)");
    }
}

std::vector<double> Config::get_double_list(const std::string& key) const {
    const std::string value = get_string(key);
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= value.size()) {
        const std::size_t comma = std::min(value.find(',', pos), value.size());
        const std::string item = trim(std::string_view(value).substr(pos, comma - pos));
        if (item.empty()) bad_value(key, value, "a comma-separated number list");
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) bad_value(key, value, "a comma-separated number list");
        } catch (const std::exception&) {
            bad_value(key, value, "a comma-separated number list");
        }
        pos = comma + 1;
        if (comma == value.size()) break;
    }
    if (out.empty()) bad_value(key, value, "a non-empty number list");
    return out;
}

Vec3 Config::get_vec3(const std::string& key) const {
    const std::vector<double> items = get_double_list(key);
    if (items.size() != 3) bad_value(key, get_string(key), "a comma triple x,y,z");
    return {items[0], items[1], items[2]};
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    return has(key) ? get_string(key) : fallback;
}
double Config::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}
int Config::get_int(const std::string& key, int fallback) const {
    return has(key) ? get_int(key) : fallback;
}
bool Config::get_bool(const std::string& key, bool fallback) const {
    return has(key) ? get_bool(key) : fallback;
}
std::uint64_t Config::get_uint64(const std::string& key, std::uint64_t fallback) const {
    return has(key) ? get_uint64(key) : fallback;
}

void Config::set(const std::string& key, const std::string& value) {
    if (!valid_key(key)) throw std::invalid_argument("config: bad key '" + key + "'");
    entries_[key] = value;
}

void Config::validate_keys(std::span<const std::string_view> allowed) const {
    for (const auto& [key, value] : entries_) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            std::string schema;
            for (const auto& a : allowed) {
                schema += schema.empty() ? "" : ", ";
                schema += a;
            }
            throw std::invalid_argument("config: unknown key '" + key +
                                        "'; the schema allows: " + schema);
        }
    }
}

std::uint64_t Config::hash() const {
    std::uint64_t h = 14695981039346656037ull;
    const auto feed = [&h](std::string_view sv) {
        for (char c : sv) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
    };
    for (const auto& [key, value] : entries_) {
        feed(key);
        feed("=");
        feed(value);
        feed("\n");
    }
    return h;
}

std::string Config::hash_hex() const {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
    return buf;
}

}  // namespace boltzkit
