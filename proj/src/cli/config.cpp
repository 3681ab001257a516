#include "holo/cli/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace holo::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::optional<double> parse_real(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::vector<std::string> split(const std::string& text, const std::string& seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (seps.find(c) != std::string::npos) {
            if (!trim(cur).empty()) out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

std::string where(const std::string& section, const std::string& key) {
    return "[" + section + "] " + key;
}

}  // namespace

ConfigError::ConfigError(int line, const std::string& what)
    : Error("config line " + std::to_string(line) + ": " + what), line_(line) {}

std::optional<Complex> parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        const auto re = parse_real(text);
        if (!re) return std::nullopt;
        return Complex{*re, 0.0};
    }
    const auto re = parse_real(text.substr(0, comma));
    const auto im = parse_real(text.substr(comma + 1));
    if (!re || !im) return std::nullopt;
    return Complex{*re, *im};
}

Config Config::parse(const std::string& text) {
    Config cfg;
    std::istringstream is(text);
    std::string raw;
    std::string current;
    bool in_section = false;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigError(line, "unterminated section header");
            current = trim(s.substr(1, s.size() - 2));
            if (current.empty()) throw ConfigError(line, "empty section name");
            if (cfg.sections_.count(current)) throw ConfigError(line, "duplicate section [" + current + "]");
            cfg.sections_[current].line = line;
            in_section = true;
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError(line, "expected key = value");
        const std::string key = trim(s.substr(0, eq));
        if (key.empty()) throw ConfigError(line, "empty key");
        if (!in_section) throw ConfigError(line, "key '" + key + "' outside of any section");
        auto& entries = cfg.sections_[current].entries;
        if (entries.count(key)) throw ConfigError(line, "duplicate key '" + key + "'");
        entries[key] = Entry{trim(s.substr(eq + 1)), line};
    }
    return cfg;
}

Config Config::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read config " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

bool Config::has_section(const std::string& section) const { return sections_.count(section) > 0; }

bool Config::has(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
}

int Config::section_line(const std::string& section) const {
    const auto it = sections_.find(section);
    return it == sections_.end() ? 0 : it->second.line;
}

const Config::Entry* Config::find(const std::string& section, const std::string& key) const {
    const auto it = sections_.find(section);
    if (it == sections_.end()) return nullptr;
    const auto e = it->second.entries.find(key);
    return e == it->second.entries.end() ? nullptr : &e->second;
}

const Config::Entry& Config::need(const std::string& section, const std::string& key) const {
    if (const Entry* e = find(section, key)) return *e;
    throw ConfigError(section_line(section), "missing required key " + where(section, key));
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::optional<std::string>& fallback) const {
    if (const Entry* e = find(section, key)) return e->value;
    if (fallback) return *fallback;
    return need(section, key).value;
}

double Config::get_double(const std::string& section, const std::string& key,
                          std::optional<double> fallback) const {
    const Entry* e = find(section, key);
    if (!e && fallback) return *fallback;
    const Entry& en = e ? *e : need(section, key);
    const auto v = parse_real(en.value);
    if (!v) throw ConfigError(en.line, where(section, key) + ": not a real number: '" + en.value + "'");
    return *v;
}

int Config::get_int(const std::string& section, const std::string& key,
                    std::optional<int> fallback) const {
    const Entry* e = find(section, key);
    if (!e && fallback) return *fallback;
    const Entry& en = e ? *e : need(section, key);
    const auto v = parse_real(en.value);
    if (!v || *v != std::floor(*v) || std::abs(*v) > 2e9)
        throw ConfigError(en.line, where(section, key) + ": not an integer: '" + en.value + "'");
    return static_cast<int>(*v);
}

bool Config::get_bool(const std::string& section, const std::string& key,
                      std::optional<bool> fallback) const {
    const Entry* e = find(section, key);
    if (!e && fallback) return *fallback;
    const Entry& en = e ? *e : need(section, key);
    if (en.value == "true" || en.value == "yes" || en.value == "1") return true;
    if (en.value == "false" || en.value == "no" || en.value == "0") return false;
    throw ConfigError(en.line, where(section, key) + ": not a boolean: '" + en.value + "'");
}

Complex Config::get_complex(const std::string& section, const std::string& key,
                            std::optional<Complex> fallback) const {
    const Entry* e = find(section, key);
    if (!e && fallback) return *fallback;
    const Entry& en = e ? *e : need(section, key);
    const auto v = parse_complex(en.value);
    if (!v) throw ConfigError(en.line, where(section, key) + ": expected re,im but got '" + en.value + "'");
    return *v;
}

std::vector<double> Config::get_doubles(const std::string& section, const std::string& key,
                                        const std::optional<std::vector<double>>& fallback) const {
    const Entry* e = find(section, key);
    if (!e && fallback) return *fallback;
    const Entry& en = e ? *e : need(section, key);
    std::vector<double> out;
    for (const auto& item : split(en.value, " \t;")) {
        const auto v = parse_real(item);
        if (!v) throw ConfigError(en.line, where(section, key) + ": not a real number: '" + item + "'");
        out.push_back(*v);
    }
    if (out.empty()) throw ConfigError(en.line, where(section, key) + ": empty list");
    return out;
}

std::vector<int> Config::get_ints(const std::string& section, const std::string& key,
                                  const std::optional<std::vector<int>>& fallback) const {
    const Entry* e = find(section, key);
    if (!e && fallback) return *fallback;
    const Entry& en = e ? *e : need(section, key);
    std::vector<int> out;
    for (const auto& item : split(en.value, " \t;,")) {
        const auto v = parse_real(item);
        if (!v || *v != std::floor(*v) || std::abs(*v) > 2e9)
            throw ConfigError(en.line, where(section, key) + ": not an integer: '" + item + "'");
        out.push_back(static_cast<int>(*v));
    }
    if (out.empty()) throw ConfigError(en.line, where(section, key) + ": empty list");
    return out;
}

std::vector<Complex> Config::get_complexes(const std::string& section, const std::string& key) const {
    const Entry& en = need(section, key);
    std::vector<Complex> out;
    for (const auto& item : split(en.value, ";")) {
        const auto v = parse_complex(item);
        if (!v) throw ConfigError(en.line, where(section, key) + ": expected re,im but got '" + item + "'");
        out.push_back(*v);
    }
    if (out.empty()) throw ConfigError(en.line, where(section, key) + ": empty list");
    return out;
}

std::vector<Complex> Config::get_tau_sequence(const std::string& section) const {
    std::vector<Complex> taus;
    int line = 0;
    if (const Entry* e = find(section, "taus")) {
        if (has(section, "tau_scale") || has(section, "n"))
            throw ConfigError(e->line, "give either taus or tau_scale with n, not both");
        taus = get_complexes(section, "taus");
        line = e->line;
    } else {
        const Complex scale = get_complex(section, "tau_scale", Complex{1.0, 0.0});
        const Entry& n_entry = need(section, "n");
        line = n_entry.line;
        for (int n : get_ints(section, "n")) {
            if (n <= 0) throw ConfigError(line, where(section, "n") + ": entries must be positive");
            const Complex t = 1.0 - scale / static_cast<double>(n);
            taus.emplace_back(t.real() + 0.0, t.imag() + 0.0);  // no signed zeros in labels
        }
    }
    for (Complex t : taus)
        if (!(std::abs(t) < 1.0))
            throw ConfigError(line, "[" + section + "] tau " + format_complex(t) + " is not inside the unit disk");
    return taus;
}

void Config::require_known(const std::string& section, const std::set<std::string>& allowed) const {
    const auto it = sections_.find(section);
    if (it == sections_.end()) return;
    for (const auto& [key, entry] : it->second.entries)
        if (!allowed.count(key)) throw ConfigError(entry.line, "unknown key " + where(section, key));
}

}  // namespace holo::cli
