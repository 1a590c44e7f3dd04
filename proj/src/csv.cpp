#include "paac/csv.hpp"

#include <fstream>

namespace paac {

void CsvWriter::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text_;
    if (!out) throw IoError("failed writing " + path);
}

} // namespace paac
