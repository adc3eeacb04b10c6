// wfano: integer cohomology invariants of weighted projective spaces and of
// smooth weighted Fano hypersurfaces.
//
// Subcommands: info, enumerate, verify, hodge.  Exit codes: 0 success,
// 1 domain-precondition failure, 2 usage error, 3 internal invariant
// violation.  Output is deterministic per format.

#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "wfano/enumerate.hpp"
#include "wfano/hodge.hpp"
#include "wfano/render.hpp"
#include "wfano/toric.hpp"
#include "wfano/verify.hpp"

namespace {

using wfano::Int;
using wfano::json;
using wfano::Weight;
using wfano::Weights;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int parse_positive_int(const std::string& s, const std::string& what) {
    if (s.empty()) throw usage_error(what + ": empty value");
    for (char c : s)
        if (c < '0' || c > '9')
            throw usage_error(what + ": expected a positive integer, got '" + s + "'");
    const Int v{s};
    if (v < 1) throw usage_error(what + ": must be at least 1");
    return v;
}

Weights parse_weights(const std::string& s) {
    Weights out;
    std::string cur;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            const Int v = parse_positive_int(cur, "weights");
            if (v > Int(std::numeric_limits<Weight>::max()))
                throw usage_error("weights: entry too large");
            out.push_back(static_cast<Weight>(v));
            cur.clear();
        } else {
            cur.push_back(s[i]);
        }
    }
    if (out.size() < 2) throw usage_error("weights: need at least two entries");
    return out;
}

void emit(const std::string& s) { std::cout << s; }

// assembles the info report; returns 1 when any requested invariant's
// preconditions fail (the report still prints, naming the failing criterion)
int run_info(const Weights& q, const std::string& degree_str, const std::string& format) {
    const wfano::WeightedProjectiveSpace space{q};
    const int N = space.dim();
    json info;
    info["weights"] = q;
    {
        json levels = json::array();
        for (const Int& l : space.levels()) levels.push_back(wfano::json_int(l));
        info["levels"] = std::move(levels);
    }
    info["phi_degree"] = wfano::json_int(wfano::phi_degree(space));
    {
        json ranks = json::array();
        for (int i = 0; i <= 2 * N; ++i)
            ranks.push_back(wfano::json_int(wfano::cohomology_rank(space, i)));
        info["cohomology_ranks"] = std::move(ranks);
    }
    {
        // row k lists the coefficients of xi_k * xi_j for j = 0..N-k
        json table = json::array();
        for (int k = 0; k <= N; ++k) {
            json row = json::array();
            for (int j = 0; k + j <= N; ++j)
                row.push_back(wfano::json_int(wfano::cup_structure_constant(space, k, j)));
            table.push_back(std::move(row));
        }
        info["structure_constants"] = std::move(table);
    }
    {
        json sing;
        const bool coprime = wfano::pairwise_coprime(q);
        const int sld = wfano::singular_locus_dimension(q);
        sing["pairwise_coprime"] = coprime;
        sing["singular_locus_dimension"] = sld;
        sing["combinatorial_isolated"] = coprime;
        sing["toric_isolated"] = sld <= 0;
        sing["verdicts_agree"] = coprime == (sld <= 0);
        if (wfano::weights_gcd(q) != 1)
            sing["note"] =
                "weights share a common factor; the fan coincides with the reduced tuple's";
        info["singularities"] = std::move(sing);
    }

    bool failed = false;
    if (!degree_str.empty()) {
        const Int d = parse_positive_int(degree_str, "degree");
        const wfano::WeightedHypersurface h{space, d};
        info["degree"] = wfano::json_int(d);
        const wfano::SmoothnessReport rep = wfano::check_generic_smooth(h);
        {
            json smooth;
            smooth["pairwise_coprime"] = rep.pairwise_coprime;
            smooth["degree_divisible"] = rep.degree_divisible;
            smooth["offending_weights"] = rep.offending_weights;
            smooth["pass"] = rep.pass();
            info["smoothness"] = std::move(smooth);
        }
        if (!rep.pass()) {
            info["skipped"] =
                "generic member is not smooth; hypersurface invariants unavailable";
            failed = true;
        } else {
            info["trivial_cone"] = wfano::is_trivial_cone(h);
            info["fano"] = wfano::is_fano(h);
            if (wfano::is_fano(h))
                info["fano_index"] = wfano::json_int(wfano::fano_index(h));
            auto section = [&](const char* name, auto fn) {
                try {
                    info[name] = fn();
                } catch (const wfano::domain_error& e) {
                    info[name] = json{{"error", e.what()}};
                    failed = true;
                }
            };
            section("pullback_multipliers", [&] {
                json m;
                for (int r = 0; 2 * r < N - 1; ++r)
                    m["r" + std::to_string(r)] =
                        wfano::json_int(wfano::pullback_multiplier(h, r));
                return m;
            });
            section("form_multiple", [&] {
                return wfano::json_int(wfano::intersection_form_multiple(h));
            });
            section("diagram", [&] {
                const wfano::DiagramMultipliers dm = wfano::diagram_solve(h);
                json j;
                j["phi_star_h2"] = wfano::json_int(dm.phi_star_h2);
                j["phi_star_h2n"] = wfano::json_int(dm.phi_star_h2n);
                j["lefschetz_iso"] = wfano::json_int(dm.lefschetz_iso);
                j["pn_form"] = wfano::json_int(dm.pn_form);
                j["i_star"] = wfano::json_rat(dm.i_star);
                j["x_form"] = wfano::json_rat(dm.x_form);
                j["x_to_xprime_h2"] = wfano::json_rat(dm.x_to_xprime_h2);
                j["x_to_xprime_h2n"] = wfano::json_int(dm.x_to_xprime_h2n);
                return j;
            });
            section("hodge_diamond", [&] {
                const wfano::HodgeDiamond dia = wfano::hodge_diamond(h);
                json rows = json::array();
                for (int p = 0; p <= dia.n; ++p) {
                    json row = json::array();
                    for (int qq = 0; qq <= dia.n; ++qq)
                        row.push_back(wfano::json_int(dia.at(p, qq)));
                    rows.push_back(std::move(row));
                }
                return rows;
            });
        }
    }

    if (format == "json")
        emit(info.dump(2) + "\n");
    else if (format == "csv")
        emit(wfano::render_kv_csv(info));
    else
        emit(wfano::render_kv_text(info));
    return failed ? 1 : 0;
}

int run_enumerate(int dim, const wfano::EnumerateOptions& options, bool audit,
                  const std::string& format) {
    const auto rows = wfano::enumerate_smooth_fano(dim, options);
    std::vector<wfano::AuditEntry> entries;
    if (audit) entries = wfano::audit_against_table(rows);
    if (format == "json") {
        json j;
        j["dim"] = dim;
        j["rows"] = wfano::json_from_rows(rows);
        if (audit) j["audit"] = wfano::json_from_audit(entries);
        emit(j.dump(2) + "\n");
    } else if (format == "csv") {
        emit(wfano::render_rows_csv(rows));
        if (audit) emit("\n" + wfano::render_audit_csv(entries));
    } else {
        emit(wfano::render_rows_text(rows));
        if (audit) emit(wfano::render_audit_text(entries));
    }
    return 0;
}

int run_verify(const std::string& scope, const std::string& format) {
    const auto reports = wfano::verify_scope(scope);
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            json j;
            j["scope"] = r.scope;
            j["checks"] = r.checks;
            j["notes"] = r.notes;
            arr.push_back(std::move(j));
        }
        emit(json{{"reports", std::move(arr)}}.dump(2) + "\n");
    } else {
        std::string out;
        long long total = 0;
        for (const auto& r : reports) {
            out += r.scope + ": " + std::to_string(r.checks) + " checks passed\n";
            for (const auto& n : r.notes) out += "  " + n + "\n";
            total += r.checks;
        }
        out += "all " + std::to_string(total) + " checks passed\n";
        emit(out);
    }
    return 0;
}

int run_hodge(const Weights& q, const std::string& degree_str, const std::string& format) {
    const Int d = parse_positive_int(degree_str, "degree");
    const wfano::WeightedHypersurface h{wfano::WeightedProjectiveSpace{q}, d};
    const wfano::HodgeDiamond dia = wfano::hodge_diamond(h);
    if (format == "json")
        emit(wfano::json_from_diamond(h, dia).dump(2) + "\n");
    else if (format == "csv")
        emit(wfano::render_diamond_csv(dia));
    else
        emit(wfano::render_diamond_text(dia));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "integer cohomology invariants of weighted projective spaces and smooth "
        "weighted Fano hypersurfaces"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
    };

    std::string info_weights, info_degree;
    auto* info = app.add_subcommand(
        "info", "invariants of one weighted projective space or hypersurface");
    info->add_option("weights", info_weights, "comma-separated positive weights")
        ->required();
    info->add_option("--degree", info_degree, "hypersurface degree");
    add_format(info);

    int enum_dim = 0;
    bool enum_audit = false;
    wfano::EnumerateOptions enum_options;
    auto* enumerate =
        app.add_subcommand("enumerate", "all smooth weighted Fano hypersurfaces of a dimension");
    enumerate->add_option("dim", enum_dim, "hypersurface dimension (>= 2)")
        ->required()
        ->check(CLI::Range(2, 64));
    enumerate->add_flag("--audit", enum_audit, "compare against the bundled reference table");
    enumerate->add_flag("--include-straight-projective",
                        enum_options.include_straight_projective,
                        "also list all-ones weight tuples");
    enumerate->add_flag("--include-trivial", enum_options.include_trivial,
                        "also list degrees equal to a weight (linear cones)");
    add_format(enumerate);

    std::string verify_scope_name = "all";
    auto* verify = app.add_subcommand("verify", "bounded exhaustive cross-check suites");
    verify->add_option("scope", verify_scope_name, "arith | toric | diagram | hodge | all")
        ->check(CLI::IsMember({"arith", "toric", "diagram", "hodge", "all"}));
    add_format(verify);

    std::string hodge_weights, hodge_degree;
    auto* hodge = app.add_subcommand("hodge", "Hodge diamond of a smooth member");
    hodge->add_option("weights", hodge_weights, "comma-separated positive weights")
        ->required();
    hodge->add_option("--degree", hodge_degree, "hypersurface degree")->required();
    add_format(hodge);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) return run_info(parse_weights(info_weights), info_degree, format);
        if (enumerate->parsed()) return run_enumerate(enum_dim, enum_options, enum_audit, format);
        if (verify->parsed()) return run_verify(verify_scope_name, format);
        if (hodge->parsed()) return run_hodge(parse_weights(hodge_weights), hodge_degree, format);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const wfano::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const wfano::internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
