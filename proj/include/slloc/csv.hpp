#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "slloc/errors.hpp"

namespace slloc {

inline constexpr const char* kToolName = "slloc";
inline constexpr const char* kToolVersion = "0.1.0";

/// Doubles serialized with 17 significant digits so identical runs give
/// byte-identical files.
std::string format_number(double v);

/// Plain CSV with a leading column-name row. The body carries no
/// timestamps; run metadata goes to the sidecar.
class CsvFile {
  public:
    CsvFile(const std::string& path, const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::ofstream out_;
    size_t width_ = 0;
};

/// Writes `<csv_path>.meta.json` with tool version, run parameters and a
/// timestamp. Extra entries come as already-serialized JSON value strings.
void write_sidecar(const std::string& csv_path,
                   const std::vector<std::pair<std::string, std::string>>& entries);

/// JSON string literal helper for sidecar entries.
std::string json_quote(const std::string& s);

}  // namespace slloc
