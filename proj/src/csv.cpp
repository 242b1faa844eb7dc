#include "planar3b/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace planar3b {

std::string format_double(double v) {
    if (std::isnan(v)) return "";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

CsvDocument::CsvDocument(std::string filename, std::string header_comment, std::vector<std::string> columns)
    : filename_(std::move(filename)), columns_(columns.size()) {
    text_ = "# " + header_comment + "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) text_ += ',';
        text_ += columns[i];
    }
    text_ += '\n';
}

void CsvDocument::sep() {
    if (in_row_ >= columns_) throw std::logic_error("CsvDocument: too many cells in row of " + filename_);
    if (in_row_ > 0) text_ += ',';
    ++in_row_;
}

CsvDocument& CsvDocument::cell(double v) {
    sep();
    text_ += format_double(v);
    return *this;
}

CsvDocument& CsvDocument::cell(long long v) {
    sep();
    text_ += std::to_string(v);
    return *this;
}

CsvDocument& CsvDocument::cell(std::string_view v) {
    sep();
    text_.append(v);
    return *this;
}

void CsvDocument::end_row() {
    if (in_row_ != columns_) throw std::logic_error("CsvDocument: short row in " + filename_);
    text_ += '\n';
    in_row_ = 0;
    ++rows_;
}

}  // namespace planar3b
