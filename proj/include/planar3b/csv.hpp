#pragma once

// Locale-independent CSV text: '.' decimal point, 17 significant digits,
// empty field for NaN.

#include <string>
#include <string_view>
#include <vector>

namespace planar3b {

std::string format_double(double v);

class CsvDocument {
public:
    CsvDocument(std::string filename, std::string header_comment, std::vector<std::string> columns);

    CsvDocument& cell(double v);
    CsvDocument& cell(long long v);
    CsvDocument& cell(int v) { return cell(static_cast<long long>(v)); }
    CsvDocument& cell(std::string_view v);
    void end_row();

    const std::string& filename() const { return filename_; }
    const std::string& text() const { return text_; }
    std::size_t rows() const { return rows_; }

private:
    void sep();
    std::string filename_;
    std::string text_;
    std::size_t columns_;
    std::size_t in_row_ = 0;
    std::size_t rows_ = 0;
};

}  // namespace planar3b
