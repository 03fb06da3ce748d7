#include "fwmpair/textio.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fwmpair::textio {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

void KeyValues::set(const std::string& key, const std::string& value) {
    if (values_.find(key) == values_.end()) order_.push_back(key);
    values_[key] = value;
}

bool KeyValues::has(const std::string& key) const { return values_.count(key) > 0; }

std::string KeyValues::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double KeyValues::get_double(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        return std::stod(it->second);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': not a number: " + it->second);
    }
}

long long KeyValues::get_int(const std::string& key, long long fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        return std::stoll(it->second);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': not an integer: " + it->second);
    }
}

std::vector<double> KeyValues::get_double_list(const std::string& key,
                                               const std::vector<double>& fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<double> out;
    std::istringstream ss(it->second);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    if (out.empty()) throw std::invalid_argument("config key '" + key + "': empty list");
    return out;
}

std::vector<double> parse_range(const std::string& text) {
    // "start:stop:step" inclusive; a bare number is a single-point range.
    std::vector<double> parts;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(std::stod(trim(tok)));
    if (parts.size() == 1) return {parts[0]};
    if (parts.size() != 3) throw std::invalid_argument("range must be start:stop:step, got " + text);
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (step <= 0.0) throw std::invalid_argument("range step must be positive: " + text);
    std::vector<double> out;
    const auto n = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
    for (long long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
}

std::vector<double> KeyValues::get_range(const std::string& key,
                                         const std::vector<double>& fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    return parse_range(it->second);
}

void KeyValues::merge_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        merge_line(line);
    }
}

void KeyValues::merge_line(const std::string& line) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument("config line with empty key: " + line);
    set(key, value);
}

std::vector<std::pair<std::string, std::string>> KeyValues::items() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(order_.size());
    for (const auto& k : order_) out.emplace_back(k, values_.at(k));
    return out;
}

struct CsvWriter::Impl {
    std::ofstream out;
};

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header_comments,
                     const std::vector<std::string>& columns)
    : impl_(new Impl) {
    impl_->out.open(path, std::ios::binary);  // binary: no platform newline translation
    if (!impl_->out) {
        delete impl_;
        throw std::runtime_error("cannot open output file: " + path);
    }
    for (const auto& c : header_comments) impl_->out << "# " << c << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        impl_->out << columns[i] << (i + 1 < columns.size() ? "," : "");
    }
    impl_->out << "\n";
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        impl_->out << cells[i] << (i + 1 < cells.size() ? "," : "");
    }
    impl_->out << "\n";
}

void CsvWriter::row_values(const std::vector<double>& cells) {
    std::vector<std::string> s;
    s.reserve(cells.size());
    for (double v : cells) s.push_back(format_double(v));
    row(s);
}

void write_grid(const std::string& path, const jointstate::JointAmplitude& ja, bool binary,
                const std::vector<std::string>& header_comments) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    for (const auto& c : header_comments) out << "# " << c << "\n";
    out << "grid v1\n";
    out << "domain = " << (ja.domain == jointstate::Domain::Time ? "time" : "frequency") << "\n";
    out << "n = " << ja.grid.rows() << "\n";
    out << "s_offset = " << format_double(ja.s_offset) << "\n";
    out << "s_step = " << format_double(ja.s_step) << "\n";
    out << "i_offset = " << format_double(ja.i_offset) << "\n";
    out << "i_step = " << format_double(ja.i_step) << "\n";
    out << "format = " << (binary ? "binary_le_f64" : "csv") << "\n";
    out << "data\n";
    const std::size_t total = ja.grid.rows() * ja.grid.cols();
    if (binary) {
        // Row-major interleaved re/im as little-endian float64. The build
        // targets little-endian hosts; static_assert guards surprises.
        static_assert(std::endian::native == std::endian::little,
                      "grid binary format assumes a little-endian host");
        out.write(reinterpret_cast<const char*>(ja.grid.data()),
                  static_cast<std::streamsize>(total * sizeof(linalg::cdouble)));
    } else {
        for (std::size_t k = 0; k < total; ++k) {
            const auto& v = ja.grid.data()[k];
            out << format_double(v.real()) << "," << format_double(v.imag()) << "\n";
        }
    }
}

jointstate::JointAmplitude read_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open grid file: " + path);
    std::string line;
    jointstate::JointAmplitude ja;
    std::size_t n = 0;
    bool binary = false;
    bool seen_magic = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        if (!seen_magic) {
            if (line != "grid v1") throw std::runtime_error("unrecognized grid file: " + path);
            seen_magic = true;
            continue;
        }
        if (line == "data") break;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad grid header line: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "domain") {
            ja.domain = value == "time" ? jointstate::Domain::Time : jointstate::Domain::Frequency;
        } else if (key == "n") {
            n = std::stoul(value);
        } else if (key == "s_offset") {
            ja.s_offset = std::stod(value);
        } else if (key == "s_step") {
            ja.s_step = std::stod(value);
        } else if (key == "i_offset") {
            ja.i_offset = std::stod(value);
        } else if (key == "i_step") {
            ja.i_step = std::stod(value);
        } else if (key == "format") {
            binary = value == "binary_le_f64";
        }
    }
    if (n == 0) throw std::runtime_error("grid file misses size: " + path);
    ja.grid = linalg::CMatrix(n, n);
    const std::size_t total = n * n;
    if (binary) {
        in.read(reinterpret_cast<char*>(ja.grid.data()),
                static_cast<std::streamsize>(total * sizeof(linalg::cdouble)));
        if (static_cast<std::size_t>(in.gcount()) != total * sizeof(linalg::cdouble)) {
            throw std::runtime_error("grid file truncated: " + path);
        }
    } else {
        for (std::size_t k = 0; k < total; ++k) {
            if (!std::getline(in, line)) throw std::runtime_error("grid file truncated: " + path);
            const auto comma = line.find(',');
            ja.grid.data()[k] = {std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))};
        }
    }
    return ja;
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << contents;
}

}  // namespace fwmpair::textio
