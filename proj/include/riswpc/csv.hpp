#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace riswpc {

/// Scientific notation with 9 significant digits, e.g. 1.25000000e-04.
std::string format_number(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
  void write(const std::filesystem::path& path) const;
};

}  // namespace riswpc
