/// Tabular output for the CLI: a tiny column/row model rendered as CSV or
/// JSON.  All doubles are printed with 17 significant digits ("%.16e",
/// '.' decimal separator) so that identical runs produce identical bytes
/// and values round-trip exactly.
#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pseudoheat/errors.hpp"

namespace pseudoheat::io {

/// One table cell: integer, floating-point, or text.
using Cell = std::variant<long long, double, std::string>;

enum class Format { csv, json };

/// Parse a --format argument.  Throws invalid_query on anything else.
inline Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw invalid_query("unknown format '" + s + "' (expected csv or json)");
}

/// Fixed 17-significant-digit scientific rendering; locale-independent.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

/// A named-column table; rows must match columns in width.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string cell_csv(const Cell& c) {
    if (std::holds_alternative<long long>(c))
        return std::to_string(std::get<long long>(c));
    if (std::holds_alternative<double>(c))
        return format_double(std::get<double>(c));
    return csv_escape(std::get<std::string>(c));
}

inline nlohmann::json cell_json(const Cell& c) {
    if (std::holds_alternative<long long>(c)) return std::get<long long>(c);
    if (std::holds_alternative<double>(c))
        return format_double(std::get<double>(c)); // string: keeps bytes stable
    return std::get<std::string>(c);
}

} // namespace detail

/// Render the table to a string in the requested format.  CSV has a header
/// row; JSON is {"columns": [...], "rows": [[...], ...]} with doubles as
/// %.16e strings so output bytes do not depend on any JSON float printer.
inline std::string render(const Table& t, Format fmt) {
    if (fmt == Format::csv) {
        std::string out;
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            if (i) out += ',';
            out += detail::csv_escape(t.columns[i]);
        }
        out += '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += detail::cell_csv(row[i]);
            }
            out += '\n';
        }
        return out;
    }
    nlohmann::json j;
    j["columns"] = t.columns;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& c : row) jr.push_back(detail::cell_json(c));
        j["rows"].push_back(std::move(jr));
    }
    return j.dump(2) + "\n";
}

/// Write to `path`, or to stdout when `path` is empty.
inline void write_table(const Table& t, Format fmt, const std::string& path) {
    const std::string body = render(t, fmt);
    if (path.empty()) {
        std::cout << body;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_query("cannot open output file '" + path + "'");
    out << body;
}

} // namespace pseudoheat::io
