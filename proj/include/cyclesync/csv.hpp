#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclesync/panel.hpp"

namespace cyclesync {

/// Parse or validation failure in CSV input, carrying the 1-based row and
/// column of the offending cell (row 1 is the header; column 0 means the
/// whole row).
class CsvError : public std::runtime_error {
public:
    CsvError(std::string message, std::size_t row, std::size_t col);

    [[nodiscard]] std::size_t row() const { return row_; }
    [[nodiscard]] std::size_t col() const { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

// Dialect (fixed): comma separator, LF line endings, mandatory header,
// UTF-8, decimal point only. Scientific notation is accepted on input.
// Numbers are emitted with 15 significant digits.

/// Parse a panel file: header "date,<id1>,...,<idS>", rows "YYYY-MM,v,...".
/// The result satisfies every Panel invariant; row order is preserved.
[[nodiscard]] Panel parse_panel_csv(std::istream& in);
[[nodiscard]] Panel parse_panel_csv(const std::string& text);

/// Serialize a valid panel in the same dialect parse_panel_csv reads.
void write_panel_csv(const Panel& panel, std::ostream& out);
[[nodiscard]] std::string panel_to_csv(const Panel& panel);

/// Generic numeric table (column-major), as written by write_table_csv.
struct Table {
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;
};

/// Emit a header plus one row per index. Columns must share one length and
/// names must be unique and separator-free. Throws std::invalid_argument on
/// shape errors and std::runtime_error when the sink fails.
void write_table_csv(const std::vector<std::string>& column_names,
                     const std::vector<std::vector<double>>& columns,
                     std::ostream& out);

/// Read back a numeric table written by write_table_csv.
[[nodiscard]] Table parse_table_csv(std::istream& in);
[[nodiscard]] Table parse_table_csv(const std::string& text);

}  // namespace cyclesync
