#pragma once

#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"

namespace wfano {

// One parsed record of the bundled classification table.  Printed values are
// preserved verbatim; corrections for known misprints sit in `annotations`
// (true_dim=K, computed_multiple=M).
struct TableRow {
    int dim_printed = 0;
    Weights weights;
    Int degree;
    Int multiple_printed;
    Int index_printed;
    std::map<std::string, std::string> annotations;

    int true_dim() const { return static_cast<int>(weights.size()) - 2; }
};

// Embedded copy of data/reference_table.txt, byte-identical to the shipped
// file (a test keeps the two in sync).
inline constexpr std::string_view reference_table_text =
    R"(# Reference classification of smooth weighted Fano hypersurfaces, transcribed
# verbatim from the printed source table.
#
# Record format (one row per line, '|'-separated):
#   dim_as_printed|weights|degree|multiple_as_printed|index_as_printed|annotations
# weights: comma-separated ascending; annotations: ';'-separated key=value
# pairs, '-' when empty.  Printed values are kept verbatim even where they are
# internally inconsistent; the corrections live in the annotations:
#   true_dim=K          the weight tuple has K+2 entries, so the printed dim is a misprint
#   computed_multiple=M the closed formula and the diagram solver both give M
3|1,1,1,1,2|4|2|2|-
3|1,1,1,1,3|6|2|1|-
3|1,1,1,2,3|6|1|2|-
4|1,1,1,1,1,2|4|2|3|-
4|1,1,1,1,1,2|6|3|1|-
3|1,1,1,1,1,3|6|2|2|true_dim=4
4|1,1,1,1,1,4|8|2|1|-
4|1,1,1,1,2,3|6|1|3|-
4|1,1,1,1,2,5|10|1|1|-
5|1,1,1,1,1,1,2|4|2|4|-
5|1,1,1,1,1,1,2|6|3|2|-
3|1,1,1,1,1,1,3|6|2|3|true_dim=5
5|1,1,1,1,1,1,4|8|4|2|computed_multiple=2
5|1,1,1,1,1,2,3|6|1|4|-
5|1,1,1,1,1,2,5|10|1|2|-
6|1,1,1,1,1,1,1,2|4|2|5|-
6|1,1,1,1,1,1,1,2|6|3|3|-
6|1,1,1,1,1,1,1,2|8|4|1|-
6|1,1,1,1,1,1,1,3|6|2|4|-
6|1,1,1,1,1,1,1,3|9|3|1|-
6|1,1,1,1,1,1,1,4|8|2|3|-
6|1,1,1,1,1,1,2,3|6|1|5|-
6|1,1,1,1,1,1,2,5|10|1|3|-
6|1,1,1,1,1,1,3,4|12|1|1|-
6|1,1,1,1,1,1,2,7|14|1|1|-
)";

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline Int parse_int(const std::string& s, const std::string& context) {
    require(!s.empty(), "reference table: empty numeric field in " + context);
    for (char c : s)
        require(c >= '0' && c <= '9',
                "reference table: non-numeric field '" + s + "' in " + context);
    return Int(s);
}

}  // namespace detail

// Parses records in the bundled-table format; '#' lines and blank lines are
// skipped.  Throws on malformed input.
inline std::vector<TableRow> parse_reference_table(std::string_view text) {
    std::vector<TableRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const std::string where = "line " + std::to_string(lineno);
        const auto fields = detail::split(line, '|');
        require(fields.size() == 6, "reference table: expected 6 fields at " + where);
        TableRow row;
        row.dim_printed = static_cast<int>(detail::parse_int(fields[0], where));
        for (const auto& w : detail::split(fields[1], ',')) {
            const Int v = detail::parse_int(w, where);
            require(v >= 1 && v <= Int(std::numeric_limits<Weight>::max()),
                    "reference table: weight out of range at " + where);
            row.weights.push_back(static_cast<Weight>(v));
        }
        validate_weights(row.weights);
        row.degree = detail::parse_int(fields[2], where);
        row.multiple_printed = detail::parse_int(fields[3], where);
        row.index_printed = detail::parse_int(fields[4], where);
        if (fields[5] != "-") {
            for (const auto& kv : detail::split(fields[5], ';')) {
                const auto eq = kv.find('=');
                require(eq != std::string::npos && eq > 0 && eq + 1 < kv.size(),
                        "reference table: malformed annotation '" + kv + "' at " + where);
                row.annotations[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline const std::vector<TableRow>& reference_table() {
    static const std::vector<TableRow> rows = parse_reference_table(reference_table_text);
    return rows;
}

}  // namespace wfano
