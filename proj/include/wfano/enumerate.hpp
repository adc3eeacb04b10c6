#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hypersurface.hpp"
#include "reference_table.hpp"

namespace wfano {

// One enumerated smooth Fano hypersurface (dim n, ambient dim n+1).
struct EnumerationRow {
    int x_dim = 0;
    Weights weights;  // length n+2, ascending
    Int degree;
    Int form_multiple;
    Int index;
    bool in_paper_table = false;
    std::string discrepancy_note;  // empty when nothing to report
};

struct EnumerateOptions {
    bool include_straight_projective = false;  // admit all-ones weight tuples
    bool include_trivial = false;              // admit degree == some weight (linear cones)
};

namespace detail {

inline std::string join(const std::vector<std::string>& bits, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i) out += sep;
        out += bits[i];
    }
    return out;
}

inline EnumerationRow make_enumeration_row(int n, Weights weights, const Int& d,
                                           const std::vector<TableRow>& table,
                                           bool trivial) {
    const WeightedHypersurface h{WeightedProjectiveSpace{weights}, d};
    EnumerationRow row;
    row.x_dim = n;
    row.weights = std::move(weights);
    row.degree = d;
    row.form_multiple = intersection_form_multiple(h);
    row.index = fano_index(h);
    const TableRow* hit = nullptr;
    for (const auto& t : table)
        if (t.weights == row.weights && t.degree == d) {
            hit = &t;
            break;
        }
    row.in_paper_table = hit != nullptr;
    std::vector<std::string> notes;
    if (trivial)
        notes.push_back("degree equals one of the weights (linear cone over a smaller model)");
    if (n == 2)
        notes.push_back("dim 2: the H^2 comparison uses r=1, outside the proven pullback range 2r < N-1");
    if (hit && hit->multiple_printed != row.form_multiple)
        notes.push_back("bundled table prints multiple " + hit->multiple_printed.str() +
                        ", computed " + row.form_multiple.str());
    if (hit && hit->index_printed != row.index)
        notes.push_back("bundled table prints index " + hit->index_printed.str() +
                        ", computed " + row.index.str());
    row.discrepancy_note = join(notes, "; ");
    return row;
}

inline Weights assemble_weights(int length, const std::vector<Weight>& nontrivial) {
    Weights w(static_cast<std::size_t>(length) - nontrivial.size(), 1);
    w.insert(w.end(), nontrivial.begin(), nontrivial.end());
    return w;
}

}  // namespace detail

// All smooth Fano hypersurfaces of dimension n: weights pairwise coprime,
// every weight divides d, d < sum(weights), d not itself a weight, and at
// least one weight exceeds 1 (the two options relax the last two filters).
//
// Search: nontrivial weights are distinct pairwise-coprime integers >= 2, so
// their product P divides d and d < S = (#ones) + sum(W).  Extending a weight
// set multiplies P and only adds to S, so a branch with P*w >= S + w - 1 for
// its smallest admissible next weight is dead, which bounds the tree.
inline std::vector<EnumerationRow> enumerate_smooth_fano(
    int n, const EnumerateOptions& options = {}) {
    require(n >= 2, "enumerate_smooth_fano: dimension must be at least 2");
    const int length = n + 2;
    const auto& table = reference_table();
    std::vector<EnumerationRow> rows;

    if (options.include_straight_projective) {
        const Weights ones(static_cast<std::size_t>(length), 1);
        if (options.include_trivial)
            rows.push_back(detail::make_enumeration_row(n, ones, Int(1), table, true));
        for (int d = 2; d <= n + 1; ++d)
            rows.push_back(detail::make_enumeration_row(n, ones, Int(d), table, false));
    }

    std::vector<Weight> chosen;
    auto dfs = [&](auto&& self, Weight last, const Int& prod, const Int& sum) -> void {
        if (!chosen.empty()) {
            const bool single = chosen.size() == 1;
            // with one nontrivial weight, d = prod IS that weight; start at 2
            for (Int m = single ? 2 : 1;; ++m) {
                const Int d = m * prod;
                if (d >= sum) break;
                rows.push_back(detail::make_enumeration_row(
                    n, detail::assemble_weights(length, chosen), d, table, false));
            }
            // linear-cone degrees exist only for single nontrivial weights (a
            // multiple of prod can equal a weight only then); admit them only
            // when the tuple also carries a genuine row, else the family
            // (1,...,1,w; d=w) is unbounded in w
            if (options.include_trivial && single && Int(2) * prod < sum)
                rows.push_back(detail::make_enumeration_row(
                    n, detail::assemble_weights(length, chosen), prod, table, true));
        }
        const bool root = chosen.empty();
        for (Weight w = last + 1;; ++w) {
            if (root && w > static_cast<Weight>(n)) break;  // no rows and no viable pairs beyond n
            if (!root && prod * w >= sum + Int(w) - 1) break;  // dead, and monotone in w
            if (chosen.size() + 1 > static_cast<std::size_t>(length)) break;
            bool coprime = true;
            for (Weight c : chosen)
                if (std::gcd(c, w) != 1) {
                    coprime = false;
                    break;
                }
            if (!coprime) continue;
            chosen.push_back(w);
            self(self, w, prod * w, sum + Int(w) - 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 1, Int(1), Int(length));

    std::sort(rows.begin(), rows.end(), [](const EnumerationRow& a, const EnumerationRow& b) {
        if (a.weights != b.weights) return a.weights < b.weights;
        return a.degree < b.degree;
    });
    for (std::size_t i = 1; i < rows.size(); ++i)
        ensure(rows[i - 1].weights != rows[i].weights || rows[i - 1].degree != rows[i].degree,
               "enumerate_smooth_fano: duplicate row");
    return rows;
}

// Per-row comparison of an enumeration against the bundled reference table
// (restricted to the dimensions present in `rows`).
struct AuditEntry {
    std::string status;  // match | value-mismatch | missing-from-table | missing-from-enumeration
    int x_dim = 0;
    Weights weights;
    Int degree;
    std::string detail;  // both values on a mismatch; dim-misprint remarks on a match
};

inline std::vector<AuditEntry> audit_against_table(const std::vector<EnumerationRow>& rows,
                                                   const std::vector<TableRow>& table) {
    std::set<int> dims;
    for (const auto& r : rows) dims.insert(r.x_dim);
    std::vector<const TableRow*> slice;
    for (const auto& t : table) {
        ensure(std::is_sorted(t.weights.begin(), t.weights.end()),
               "audit_against_table: table weights not normalized");
        if (dims.count(t.true_dim())) slice.push_back(&t);
    }
    std::vector<AuditEntry> out;
    std::vector<bool> reproduced(slice.size(), false);
    for (const auto& r : rows) {
        const TableRow* hit = nullptr;
        for (std::size_t i = 0; i < slice.size(); ++i)
            if (slice[i]->weights == r.weights && slice[i]->degree == r.degree) {
                reproduced[i] = true;
                hit = slice[i];
                break;
            }
        AuditEntry e;
        e.x_dim = r.x_dim;
        e.weights = r.weights;
        e.degree = r.degree;
        if (!hit) {
            e.status = "missing-from-table";
            e.detail = "row satisfies every criterion but is absent from the bundled table";
        } else {
            std::vector<std::string> bits;
            if (hit->multiple_printed != r.form_multiple)
                bits.push_back("multiple: computed " + r.form_multiple.str() +
                               ", table prints " + hit->multiple_printed.str());
            if (hit->index_printed != r.index)
                bits.push_back("index: computed " + r.index.str() + ", table prints " +
                               hit->index_printed.str());
            if (hit->dim_printed != r.x_dim)
                bits.push_back("table prints dim " + std::to_string(hit->dim_printed) +
                               " (weights imply " + std::to_string(r.x_dim) + ")");
            e.status = (hit->multiple_printed == r.form_multiple &&
                        hit->index_printed == r.index)
                           ? "match"
                           : "value-mismatch";
            e.detail = detail::join(bits, "; ");
        }
        out.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < slice.size(); ++i) {
        if (reproduced[i]) continue;
        AuditEntry e;
        e.status = "missing-from-enumeration";
        e.x_dim = slice[i]->true_dim();
        e.weights = slice[i]->weights;
        e.degree = slice[i]->degree;
        e.detail = "table row not reproduced by the enumeration";
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<AuditEntry> audit_against_table(const std::vector<EnumerationRow>& rows) {
    return audit_against_table(rows, reference_table());
}

}  // namespace wfano
