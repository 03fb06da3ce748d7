#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fwmpair/jointstate.hpp"

namespace fwmpair::textio {

// Shortest round-trip decimal form; locale-independent, so seeded reruns
// produce byte-identical CSV bodies.
std::string format_double(double v);

// Flat key/value configuration. Lines are "key = value", '#' starts a
// comment. Later assignments override earlier ones; insertion order is
// preserved for the echo block.
class KeyValues {
  public:
    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    long long get_int(const std::string& key, long long fallback) const;
    std::vector<double> get_double_list(const std::string& key,
                                        const std::vector<double>& fallback) const;

    // "start:stop:step" inclusive range (single value allowed).
    std::vector<double> get_range(const std::string& key, const std::vector<double>& fallback) const;

    void merge_file(const std::string& path);
    void merge_line(const std::string& line);  // one "key=value"

    std::vector<std::pair<std::string, std::string>> items() const;

  private:
    std::vector<std::string> order_;
    std::map<std::string, std::string> values_;
};

std::vector<double> parse_range(const std::string& text);

// CSV table with a '#'-prefixed header comment block (the resolved
// configuration) followed by a column-name row.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header_comments,
              const std::vector<std::string>& columns);
    ~CsvWriter();

    void row(const std::vector<std::string>& cells);
    void row_values(const std::vector<double>& cells);

  private:
    struct Impl;
    Impl* impl_;
};

// Joint-amplitude grid export: plain-text metadata header, then row-major
// interleaved re/im values either as CSV lines or little-endian float64.
void write_grid(const std::string& path, const jointstate::JointAmplitude& ja, bool binary,
                const std::vector<std::string>& header_comments = {});
jointstate::JointAmplitude read_grid(const std::string& path);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace fwmpair::textio
