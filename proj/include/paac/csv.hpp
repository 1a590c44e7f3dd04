#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "paac/errors.hpp"

namespace paac {

// Minimal RFC-4180-style CSV assembly: header row, '.' decimal separator,
// doubles at 6 significant digits.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) {
        append_row(header);
        columns_ = header.size();
    }

    CsvWriter& field(const std::string& v) {
        if (!line_.empty()) line_ += ',';
        line_ += v;
        ++fields_in_row_;
        return *this;
    }
    CsvWriter& field(std::uint64_t v) { return field(std::to_string(v)); }
    CsvWriter& field(std::uint32_t v) { return field(std::to_string(v)); }
    CsvWriter& field(int v) { return field(std::to_string(v)); }
    CsvWriter& field(double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return field(std::string(buf));
    }

    void end_row() {
        if (fields_in_row_ != columns_)
            throw Error("CSV row width mismatch");
        text_ += line_;
        text_ += '\n';
        line_.clear();
        fields_in_row_ = 0;
    }

    const std::string& text() const { return text_; }

    void write_file(const std::string& path) const;

private:
    void append_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) text_ += ',';
            text_ += cells[i];
        }
        text_ += '\n';
    }

    std::string text_;
    std::string line_;
    std::size_t columns_ = 0;
    std::size_t fields_in_row_ = 0;
};

} // namespace paac
