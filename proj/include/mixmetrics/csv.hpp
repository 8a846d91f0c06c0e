#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "mixmetrics/errors.hpp"

namespace mixmetrics {

// Minimal CSV: comma separator, LF records, header row first. Fields
// containing commas, quotes, or newlines are double-quoted with inner
// quotes doubled; the parser accepts both quoted and bare fields.

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void write_csv(std::ostream& os, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) os << ',';
        os << csv_escape(header[i]);
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) os << ',';
            os << csv_escape(row[i]);
        }
        os << '\n';
    }
}

// Parses every record, header included. Throws ParseError with the line
// number on an unterminated quote.
inline std::vector<std::vector<std::string>> parse_csv(std::istream& is) {
    std::vector<std::vector<std::string>> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            const char c = line[i];
            if (quoted) {
                if (c == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        field += '"';
                        ++i;
                    } else {
                        quoted = false;
                    }
                } else {
                    field += c;
                }
            } else if (c == '"' && field.empty()) {
                quoted = true;
            } else if (c == ',') {
                fields.push_back(field);
                field.clear();
            } else {
                field += c;
            }
        }
        if (quoted)
            throw ParseError("line " + std::to_string(line_no) + ": unterminated quote");
        fields.push_back(field);
        records.push_back(std::move(fields));
    }
    return records;
}

}  // namespace mixmetrics
