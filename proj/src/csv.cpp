#include "cyclesync/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace cyclesync {

namespace {

std::string locate(const std::string& message, std::size_t row, std::size_t col) {
    std::string out = message + " (row " + std::to_string(row);
    if (col > 0) out += ", column " + std::to_string(col);
    out += ")";
    return out;
}

// Split the stream into lines. The dialect is LF-only; a trailing final
// newline is optional, and one trailing empty segment is dropped so both
// endings parse identically.
std::vector<std::string> read_lines(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(std::move(cur));
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

double parse_number(const std::string& field, std::size_t row, std::size_t col) {
    if (field.empty()) throw CsvError("empty numeric field", row, col);
    if (field.find('\r') != std::string::npos) {
        throw CsvError("carriage return in field (dialect is LF-only)", row, col);
    }
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw CsvError("not a number: '" + field + "'", row, col);
    }
    if (!std::isfinite(value)) {
        throw CsvError("non-finite value '" + field + "'", row, col);
    }
    return value;
}

void format_number(char (&buf)[32], double v) {
    std::snprintf(buf, sizeof(buf), "%.15g", v);
}

void check_column_name(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("column names must be non-empty");
    for (char c : name) {
        if (c == ',' || c == '\n' || c == '\r') {
            throw std::invalid_argument("column name '" + name + "' contains a separator");
        }
    }
}

}  // namespace

CsvError::CsvError(std::string message, std::size_t row, std::size_t col)
    : std::runtime_error(locate(message, row, col)), row_(row), col_(col) {}

Panel parse_panel_csv(std::istream& in) {
    const std::vector<std::string> lines = read_lines(in);
    if (lines.empty()) throw CsvError("empty input, expected a header", 1, 0);

    const std::vector<std::string> header = split_fields(lines[0]);
    if (header[0] != "date") {
        throw CsvError("header must start with 'date', got '" + header[0] + "'", 1, 1);
    }
    if (header.size() < 2) throw CsvError("header names no sectors", 1, 0);

    Panel panel;
    std::unordered_set<std::string> seen;
    for (std::size_t c = 1; c < header.size(); ++c) {
        const std::string& id = header[c];
        if (id.empty() || id.find('\r') != std::string::npos) {
            throw CsvError("bad sector id", 1, c + 1);
        }
        if (!seen.insert(id).second) {
            throw CsvError("duplicate sector id '" + id + "'", 1, c + 1);
        }
        panel.sector_ids.push_back(id);
    }

    const std::size_t S = panel.sector_ids.size();
    panel.levels.assign(S, {});

    for (std::size_t r = 1; r < lines.size(); ++r) {
        const std::size_t row = r + 1;
        const std::vector<std::string> fields = split_fields(lines[r]);
        if (fields.size() != S + 1) {
            throw CsvError("row has " + std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(S + 1),
                           row, 0);
        }
        YearMonth date{};
        try {
            date = parse_year_month(fields[0]);
        } catch (const std::invalid_argument& e) {
            throw CsvError(e.what(), row, 1);
        }
        if (!panel.dates.empty() && !(panel.dates.back().next() == date)) {
            throw CsvError("expected month " + panel.dates.back().next().str() + ", got " +
                               date.str(),
                           row, 1);
        }
        panel.dates.push_back(date);
        for (std::size_t c = 0; c < S; ++c) {
            const double v = parse_number(fields[c + 1], row, c + 2);
            if (v <= 0.0) {
                throw CsvError("index levels must be positive, got '" + fields[c + 1] + "'",
                               row, c + 2);
            }
            panel.levels[c].push_back(v);
        }
    }

    if (panel.dates.size() < 4) {
        throw CsvError("need at least 4 data rows, got " + std::to_string(panel.dates.size()),
                       lines.size(), 0);
    }
    return panel;
}

Panel parse_panel_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_panel_csv(in);
}

void write_panel_csv(const Panel& panel, std::ostream& out) {
    validate_panel(panel);
    out << "date";
    for (const std::string& id : panel.sector_ids) out << ',' << id;
    out << '\n';
    char buf[32];
    for (std::size_t t = 0; t < panel.n_samples(); ++t) {
        out << panel.dates[t].str();
        for (std::size_t s = 0; s < panel.n_sectors(); ++s) {
            format_number(buf, panel.levels[s][t]);
            out << ',' << buf;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("failed to write panel CSV");
}

std::string panel_to_csv(const Panel& panel) {
    std::ostringstream out;
    write_panel_csv(panel, out);
    return out.str();
}

void write_table_csv(const std::vector<std::string>& column_names,
                     const std::vector<std::vector<double>>& columns, std::ostream& out) {
    if (column_names.empty()) throw std::invalid_argument("table needs at least one column");
    if (column_names.size() != columns.size()) {
        throw std::invalid_argument("got " + std::to_string(columns.size()) +
                                    " columns for " + std::to_string(column_names.size()) +
                                    " names");
    }
    std::unordered_set<std::string> seen;
    for (const std::string& name : column_names) {
        check_column_name(name);
        if (!seen.insert(name).second) {
            throw std::invalid_argument("duplicate column name '" + name + "'");
        }
    }
    const std::size_t rows = columns[0].size();
    for (std::size_t c = 1; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw std::invalid_argument("column '" + column_names[c] + "' has " +
                                        std::to_string(columns[c].size()) +
                                        " rows, expected " + std::to_string(rows));
        }
    }

    for (std::size_t c = 0; c < column_names.size(); ++c) {
        if (c > 0) out << ',';
        out << column_names[c];
    }
    out << '\n';
    char buf[32];
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c > 0) out << ',';
            format_number(buf, columns[c][r]);
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("failed to write table CSV");
}

Table parse_table_csv(std::istream& in) {
    const std::vector<std::string> lines = read_lines(in);
    if (lines.empty()) throw CsvError("empty input, expected a header", 1, 0);

    Table table;
    table.names = split_fields(lines[0]);
    for (std::size_t c = 0; c < table.names.size(); ++c) {
        if (table.names[c].empty() || table.names[c].find('\r') != std::string::npos) {
            throw CsvError("bad column name", 1, c + 1);
        }
    }
    table.columns.assign(table.names.size(), {});

    for (std::size_t r = 1; r < lines.size(); ++r) {
        const std::size_t row = r + 1;
        const std::vector<std::string> fields = split_fields(lines[r]);
        if (fields.size() != table.names.size()) {
            throw CsvError("row has " + std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(table.names.size()),
                           row, 0);
        }
        for (std::size_t c = 0; c < fields.size(); ++c) {
            table.columns[c].push_back(parse_number(fields[c], row, c + 1));
        }
    }
    return table;
}

Table parse_table_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_table_csv(in);
}

}  // namespace cyclesync
