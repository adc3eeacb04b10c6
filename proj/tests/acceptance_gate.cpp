// Release gate: every check below must pass for the build to count as good.
// Each criterion prints exactly one PASS/FAIL line; the exit code is the
// number of failures.

#include <wfano/enumerate.hpp>
#include <wfano/verify.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace wfano;

namespace {

struct Expected {
    Weights weights;
    int degree;
    int multiple;
    int index;
};

std::string brief(const Weights& w, const Int& d) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    out += "; " + d.str() + ")";
    return out;
}

void check(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

void expect_rows(int n, const std::vector<Expected>& expected) {
    const auto rows = enumerate_smooth_fano(n);
    check(rows.size() == expected.size(),
          "row count " + std::to_string(rows.size()) + ", expected " +
              std::to_string(expected.size()));
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto& r = rows[i];
        const auto& e = expected[i];
        check(r.weights == e.weights && r.degree == e.degree, "unexpected row " + brief(r.weights, r.degree));
        check(r.form_multiple == e.multiple,
              brief(r.weights, r.degree) + ": multiple " + r.form_multiple.str() +
                  ", expected " + std::to_string(e.multiple));
        check(r.index == e.index, brief(r.weights, r.degree) + ": index " +
                                      r.index.str() + ", expected " +
                                      std::to_string(e.index));
        check(r.in_paper_table, brief(r.weights, r.degree) + " not matched in the bundled table");
    }
}

std::string criterion_1() {
    expect_rows(3, {
        {{1, 1, 1, 1, 2}, 4, 2, 2},
        {{1, 1, 1, 1, 3}, 6, 2, 1},
        {{1, 1, 1, 2, 3}, 6, 1, 2},
    });
    return "dimension-3 classification: exactly 3 rows, multiples and indices exact";
}

std::string criterion_2() {
    expect_rows(4, {
        {{1, 1, 1, 1, 1, 2}, 4, 2, 3},
        {{1, 1, 1, 1, 1, 2}, 6, 3, 1},
        {{1, 1, 1, 1, 1, 3}, 6, 2, 2},
        {{1, 1, 1, 1, 1, 4}, 8, 2, 1},
        {{1, 1, 1, 1, 2, 3}, 6, 1, 3},
        {{1, 1, 1, 1, 2, 5}, 10, 1, 1},
    });
    return "dimension-4 classification: exactly 6 rows (one bundled row is "
           "dim-labeled 3 but has dim-4 weights), values exact";
}

std::string criterion_3() {
    int extras = 0, mismatches = 0;
    for (int n = 5; n <= 6; ++n) {
        const auto rows = enumerate_smooth_fano(n);
        const auto audit = audit_against_table(rows);
        for (const auto& e : audit) {
            if (e.status == "match") continue;
            if (e.status == "value-mismatch") {
                check(e.weights == Weights{1, 1, 1, 1, 1, 1, 4} && e.degree == 8,
                      "unexpected mismatch at " + brief(e.weights, e.degree));
                check(e.detail.find("computed 2") != std::string::npos &&
                          e.detail.find("table prints 4") != std::string::npos,
                      "mismatch detail: " + e.detail);
                ++mismatches;
                continue;
            }
            if (e.status == "missing-from-table") {
                const bool known =
                    (e.weights == Weights{1, 1, 1, 1, 1, 1, 5} && e.degree == 10) ||
                    (e.weights == Weights{1, 1, 1, 1, 1, 1, 1, 5} && e.degree == 10) ||
                    (e.weights == Weights{1, 1, 1, 1, 1, 1, 1, 6} && e.degree == 12);
                check(known, "unexpected extra " + brief(e.weights, e.degree));
                ++extras;
                continue;
            }
            check(false, e.status + " at " + brief(e.weights, e.degree));
        }
        for (const auto& r : rows)
            if (!r.in_paper_table) {
                const auto it = std::find_if(
                    audit.begin(), audit.end(), [&](const AuditEntry& e) {
                        return e.weights == r.weights && e.degree == r.degree;
                    });
                check(it != audit.end() && it->status == "missing-from-table",
                      "extra row not audited as missing: " + brief(r.weights, r.degree));
            }
    }
    check(mismatches == 1, "expected exactly one value mismatch, saw " +
                               std::to_string(mismatches));
    check(extras == 3, "expected 3 extras, saw " + std::to_string(extras));
    return "dimensions 5-6: every bundled row reproduced; the single known "
           "multiple mismatch (1,1,1,1,1,1,4; 8): computed 2 vs printed 4; 3 "
           "criteria-satisfying extras flagged in_paper_table = false";
}

std::string summarize(const VerifyReport& report) {
    std::ostringstream out;
    out << report.scope << ": " << report.checks << " checks";
    return out.str();
}

std::string criterion_4() {
    const auto report = verify_arith();
    return "level identities (l_0 = 1, l_1 = lcm, l_N = product/gcd) and "
           "optimized-vs-reference agreement, entries <= 8, lengths 2-7: " +
           summarize(report);
}

std::string criterion_5() {
    const auto report = verify_integrality();
    return "exact integrality of structure constants, pullback multipliers, "
           "and form multiples, entries <= 8, length <= 8, degree <= 30: " +
           summarize(report);
}

std::string criterion_6() {
    const auto report = verify_toric();
    return "toric cross-check (singular locus dim <= 0 iff pairwise coprime), "
           "entries <= 6, lengths 2-5, reduced tuples only — scaling all "
           "weights leaves the fan unchanged, e.g. (2,2,2) is smooth but not "
           "coprime: " + summarize(report);
}

std::string criterion_7() {
    const auto report = verify_diagram();
    return "restriction/covering diagram commutes and its solved form "
           "multiple equals the closed formula, all rows of dims 3-6: " +
           summarize(report);
}

std::string criterion_8() {
    const auto report = verify_hodge();
    return "Hodge suite: quintic 101, cubic 7, weighted sextic 21 (monomial "
           "oracle agrees); the two dim-6 index-1 rows have distinct, "
           "symmetric, dual diamonds with h^{1,1} = 1, h^{q,0} = 0: " +
           summarize(report);
}

std::string criterion_9() {
    const auto report = verify_classical();
    return "all-ones specialization: form multiple = d, pullbacks = 1, "
           "dims 2-8, degrees 1-12: " + summarize(report);
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        double budget_seconds;  // 0 = unbounded
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, 1.0, criterion_1},  {2, 1.0, criterion_2},  {3, 0.0, criterion_3},
        {4, 30.0, criterion_4}, {5, 0.0, criterion_5},  {6, 60.0, criterion_6},
        {7, 0.0, criterion_7},  {8, 0.0, criterion_8},  {9, 0.0, criterion_9},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
            ok = false;
            detail = "exceeded the " + std::to_string(c.budget_seconds) +
                     " s budget: " + detail;
        }
        std::printf("criterion %d: %s — %s (%.2f s)\n", c.number,
                    ok ? "PASS" : "FAIL", detail.c_str(), seconds);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
