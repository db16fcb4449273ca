#include "slloc/csv.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace slloc {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvFile::CsvFile(const std::string& path, const std::vector<std::string>& columns)
    : path_(path), out_(path), width_(columns.size()) {
    if (!out_) throw ValidationError("cannot open output file '" + path + "'");
    for (size_t i = 0; i < columns.size(); ++i) {
        if (i) out_ << ',';
        out_ << columns[i];
    }
    out_ << '\n';
}

void CsvFile::row(const std::vector<double>& values) {
    if (values.size() != width_)
        throw ValidationError("csv row width does not match the declared columns");
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out_ << ',';
        out_ << format_number(values[i]);
    }
    out_ << '\n';
    if (!out_) throw ValidationError("write failed for '" + path_ + "'");
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

void write_sidecar(const std::string& csv_path,
                   const std::vector<std::pair<std::string, std::string>>& entries) {
    std::ofstream out(csv_path + ".meta.json");
    if (!out) throw ValidationError("cannot open sidecar for '" + csv_path + "'");

    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char stamp[32];
    std::tm tm_utc{};
    gmtime_r(&tt, &tm_utc);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);

    out << "{\n";
    out << "  \"tool\": " << json_quote(kToolName) << ",\n";
    out << "  \"version\": " << json_quote(kToolVersion) << ",\n";
    out << "  \"timestamp\": " << json_quote(stamp);
    for (const auto& [key, value] : entries) out << ",\n  " << json_quote(key) << ": " << value;
    out << "\n}\n";
}

}  // namespace slloc
