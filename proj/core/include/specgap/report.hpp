#pragma once

#include <string>
#include <vector>

namespace specgap {

// All human- and machine-readable floating output is fixed at 10 significant
// digits, "." decimal separator, locale-independent.
std::string fmt10(double v);

// Round to the value the 10-digit text represents (for JSON number fields).
double round10(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const;  // comma-separated, header row, \n endings
};

void write_file(const std::string& path, const std::string& content);

}  // namespace specgap
