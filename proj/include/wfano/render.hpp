#pragma once

#include <climits>
#include <string>
#include <vector>

#include <json.hpp>

#include "enumerate.hpp"
#include "hodge.hpp"

namespace wfano {

using json = nlohmann::ordered_json;

inline std::string weights_to_string(const Weights& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

// Arbitrary-precision values render as JSON numbers while they fit in 64 bits
// and as decimal strings beyond that; consumers must accept both.
inline json json_int(const Int& v) {
    if (v >= Int(LLONG_MIN) && v <= Int(LLONG_MAX))
        return json(static_cast<long long>(v));
    return json(v.str());
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    require(j.is_string(), "int_from_json: expected integer or decimal string");
    return Int(j.get<std::string>());
}

// Rationals render as plain integers when the denominator is 1 and as
// "numerator/denominator" strings otherwise.
inline json json_rat(const Rat& v) {
    const Int num = boost::multiprecision::numerator(v);
    const Int den = boost::multiprecision::denominator(v);
    if (den == 1) return json_int(num);
    return json(num.str() + "/" + den.str());
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';  // doubled per the CSV convention
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

// ---- enumeration rows ----

inline json json_from_rows(const std::vector<EnumerationRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json jr;
        jr["dim"] = r.x_dim;
        jr["weights"] = r.weights;
        jr["degree"] = json_int(r.degree);
        jr["multiple"] = json_int(r.form_multiple);
        jr["index"] = json_int(r.index);
        jr["in_paper_table"] = r.in_paper_table;
        jr["note"] = r.discrepancy_note;
        arr.push_back(std::move(jr));
    }
    return arr;
}

inline std::vector<EnumerationRow> rows_from_json(const json& arr) {
    require(arr.is_array(), "rows_from_json: expected an array");
    std::vector<EnumerationRow> rows;
    for (const auto& jr : arr) {
        EnumerationRow r;
        r.x_dim = jr.at("dim").get<int>();
        r.weights = jr.at("weights").get<Weights>();
        r.degree = int_from_json(jr.at("degree"));
        r.form_multiple = int_from_json(jr.at("multiple"));
        r.index = int_from_json(jr.at("index"));
        r.in_paper_table = jr.at("in_paper_table").get<bool>();
        r.discrepancy_note = jr.at("note").get<std::string>();
        rows.push_back(std::move(r));
    }
    return rows;
}

inline std::string render_rows_csv(const std::vector<EnumerationRow>& rows) {
    std::string out = "dim,weights,degree,multiple,index,in_paper_table,note\n";
    for (const auto& r : rows) {
        out += std::to_string(r.x_dim);
        out += ',' + detail::csv_quote(weights_to_string(r.weights));
        out += ',' + r.degree.str();
        out += ',' + r.form_multiple.str();
        out += ',' + r.index.str();
        out += r.in_paper_table ? ",true" : ",false";
        out += ',' + detail::csv_quote(r.discrepancy_note);
        out += '\n';
    }
    return out;
}

inline std::string render_rows_text(const std::vector<EnumerationRow>& rows) {
    std::string out = "dim | weights | degree | multiple | index | in table | note\n";
    for (const auto& r : rows) {
        out += std::to_string(r.x_dim);
        out += " | (" + weights_to_string(r.weights) + ")";
        out += " | " + r.degree.str();
        out += " | " + r.form_multiple.str();
        out += " | " + r.index.str();
        out += r.in_paper_table ? " | yes" : " | no";
        out += " | " + (r.discrepancy_note.empty() ? std::string("-") : r.discrepancy_note);
        out += '\n';
    }
    out += std::to_string(rows.size()) + " row(s)\n";
    return out;
}

// ---- audit entries ----

inline json json_from_audit(const std::vector<AuditEntry>& audit) {
    json arr = json::array();
    for (const auto& a : audit) {
        json ja;
        ja["status"] = a.status;
        ja["dim"] = a.x_dim;
        ja["weights"] = a.weights;
        ja["degree"] = json_int(a.degree);
        ja["detail"] = a.detail;
        arr.push_back(std::move(ja));
    }
    return arr;
}

inline std::string render_audit_text(const std::vector<AuditEntry>& audit) {
    std::string out = "audit against the bundled reference table:\n";
    std::size_t matches = 0;
    for (const auto& a : audit) {
        if (a.status == "match") ++matches;
        out += "  " + a.status + ": (" + weights_to_string(a.weights) + ") degree " +
               a.degree.str();
        if (!a.detail.empty()) out += " -- " + a.detail;
        out += '\n';
    }
    out += "  " + std::to_string(matches) + " match(es) out of " +
           std::to_string(audit.size()) + " entr(ies)\n";
    return out;
}

inline std::string render_audit_csv(const std::vector<AuditEntry>& audit) {
    std::string out = "status,dim,weights,degree,detail\n";
    for (const auto& a : audit) {
        out += a.status;
        out += ',' + std::to_string(a.x_dim);
        out += ',' + detail::csv_quote(weights_to_string(a.weights));
        out += ',' + a.degree.str();
        out += ',' + detail::csv_quote(a.detail);
        out += '\n';
    }
    return out;
}

// ---- Hodge diamonds ----

inline json json_from_diamond(const WeightedHypersurface& h, const HodgeDiamond& d) {
    json j;
    j["dim"] = d.n;
    j["weights"] = h.ambient().weights();
    j["degree"] = json_int(h.degree());
    json rows = json::array();
    for (int p = 0; p <= d.n; ++p) {
        json row = json::array();
        for (int q = 0; q <= d.n; ++q) row.push_back(json_int(d.at(p, q)));
        rows.push_back(std::move(row));
    }
    j["hodge"] = std::move(rows);
    return j;
}

// classic centered-diamond layout: line k holds h^{p,q} with p+q = k,
// p descending
inline std::string render_diamond_text(const HodgeDiamond& d) {
    const int n = d.n;
    std::size_t cell = 1;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) cell = std::max(cell, d.at(p, q).str().size());
    std::string out;
    for (int k = 0; k <= 2 * n; ++k) {
        const int p_hi = std::min(k, n);
        const int p_lo = std::max(0, k - n);
        const int count = p_hi - p_lo + 1;
        std::string line((static_cast<std::size_t>(n + 1 - count) * (cell + 1)) / 2, ' ');
        for (int p = p_hi; p >= p_lo; --p) {
            std::string v = d.at(p, k - p).str();
            if (p != p_hi) line += ' ';
            line += std::string(cell - v.size(), ' ') + v;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + '\n';
    }
    return out;
}

inline std::string render_diamond_csv(const HodgeDiamond& d) {
    std::string out = "p";
    for (int q = 0; q <= d.n; ++q) out += ",q" + std::to_string(q);
    out += '\n';
    for (int p = 0; p <= d.n; ++p) {
        out += std::to_string(p);
        for (int q = 0; q <= d.n; ++q) out += ',' + d.at(p, q).str();
        out += '\n';
    }
    return out;
}

// ---- generic key/value reports (info, verify) ----

namespace detail {

inline std::string scalar_to_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

inline void kv_text(const json& j, int depth, std::string& out) {
    for (const auto& [key, value] : j.items()) {
        const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
        if (value.is_object()) {
            out += pad + key + ":\n";
            kv_text(value, depth + 1, out);
        } else if (value.is_array() && !value.empty() && value.front().is_array()) {
            out += pad + key + ":\n";
            for (const auto& row : value) {
                std::string line;
                for (const auto& cell : row) {
                    if (!line.empty()) line += ' ';
                    line += scalar_to_text(cell);
                }
                out += pad + "  " + line + '\n';
            }
        } else if (value.is_array()) {
            std::string line;
            for (const auto& cell : value) {
                if (!line.empty()) line += ' ';
                line += scalar_to_text(cell);
            }
            out += pad + key + ": " + line + '\n';
        } else {
            out += pad + key + ": " + scalar_to_text(value) + '\n';
        }
    }
}

inline void kv_csv(const json& j, const std::string& prefix, std::string& out) {
    for (const auto& [key, value] : j.items()) {
        const std::string path = prefix.empty() ? key : prefix + '.' + key;
        if (value.is_object()) {
            kv_csv(value, path, out);
        } else if (value.is_array()) {
            out += csv_quote(path) + ',' + csv_quote(value.dump()) + '\n';
        } else {
            out += csv_quote(path) + ',' + csv_quote(scalar_to_text(value)) + '\n';
        }
    }
}

}  // namespace detail

inline std::string render_kv_text(const json& j) {
    std::string out;
    detail::kv_text(j, 0, out);
    return out;
}

inline std::string render_kv_csv(const json& j) {
    std::string out = "key,value\n";
    detail::kv_csv(j, "", out);
    return out;
}

}  // namespace wfano
