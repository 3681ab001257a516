#pragma once

// Experiment configs: UTF-8 "key = value" lines grouped under [section]
// headers. '#' starts a comment line. Complex values are written "re,im"
// (a bare real is accepted), lists are separated by ';' for complex values
// and by whitespace or ';' for reals and integers.

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "holo/errors.hpp"

namespace holo::cli {

class ConfigError : public Error {
public:
    ConfigError(int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

class Config {
public:
    static Config parse(const std::string& text);
    static Config load(const std::filesystem::path& path);

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;
    /// Line of the section header, 0 when absent.
    int section_line(const std::string& section) const;

    std::string get_string(const std::string& section, const std::string& key,
                           const std::optional<std::string>& fallback = std::nullopt) const;
    double get_double(const std::string& section, const std::string& key,
                      std::optional<double> fallback = std::nullopt) const;
    int get_int(const std::string& section, const std::string& key,
                std::optional<int> fallback = std::nullopt) const;
    bool get_bool(const std::string& section, const std::string& key,
                  std::optional<bool> fallback = std::nullopt) const;
    Complex get_complex(const std::string& section, const std::string& key,
                        std::optional<Complex> fallback = std::nullopt) const;
    std::vector<double> get_doubles(const std::string& section, const std::string& key,
                                    const std::optional<std::vector<double>>& fallback = std::nullopt) const;
    std::vector<int> get_ints(const std::string& section, const std::string& key,
                              const std::optional<std::vector<int>>& fallback = std::nullopt) const;
    std::vector<Complex> get_complexes(const std::string& section, const std::string& key) const;

    /// Points of the disk given either as `taus` (complex list) or as
    /// `tau_scale` together with `n`, meaning tau_n = 1 - tau_scale / n.
    /// Every point must satisfy |tau| < 1.
    std::vector<Complex> get_tau_sequence(const std::string& section) const;

    /// Rejects keys of the section that are not in `allowed`.
    void require_known(const std::string& section, const std::set<std::string>& allowed) const;

private:
    struct Entry {
        std::string value;
        int line = 0;
    };
    struct Section {
        int line = 0;
        std::map<std::string, Entry> entries;
    };
    const Entry* find(const std::string& section, const std::string& key) const;
    const Entry& need(const std::string& section, const std::string& key) const;

    std::map<std::string, Section> sections_;
};

/// Parses "re,im" or a bare real.
std::optional<Complex> parse_complex(const std::string& text);

}  // namespace holo::cli
