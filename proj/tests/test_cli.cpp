#include <catch2/catch_amalgamated.hpp>

#include <wfano/reference_table.hpp>
#include <wfano/render.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string("'") + WFANO_CLI_PATH + "' " + args + " 2>&1";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("info without degree reports the ambient invariants", "[cli]") {
    const RunResult r = run_cli("info 1,1,1,2,3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "phi_degree: 6"));
    CHECK(contains(r.output, "levels: 1 6 6 6 6"));
    CHECK(contains(r.output, "singular_locus_dimension: 0"));
    CHECK(contains(r.output, "verdicts_agree: true"));
}

TEST_CASE("info with a smooth degree reports hypersurface invariants", "[cli]") {
    const RunResult r = run_cli("info 1,1,1,2,3 --degree 6");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "form_multiple: 1"));
    CHECK(contains(r.output, "fano_index: 2"));
    CHECK(contains(r.output, "fano: true"));
    CHECK(contains(r.output, "hodge_diamond:"));
}

TEST_CASE("info names the failing smoothness criterion and exits 1", "[cli]") {
    const RunResult r = run_cli("info 1,1,1,2 --degree 3");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "degree_divisible: false"));
    CHECK(contains(r.output, "offending_weights: 2"));

    const RunResult r2 = run_cli("info 2,4,5 --degree 40");
    CHECK(r2.exit_code == 1);
    CHECK(contains(r2.output, "pairwise_coprime: false"));
}

TEST_CASE("usage errors exit 2", "[cli]") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate 1,2,3").exit_code == 2);
    CHECK(run_cli("info").exit_code == 2);
    CHECK(run_cli("info 1,x,3").exit_code == 2);
    CHECK(run_cli("info 5").exit_code == 2);          // a single weight is not a space
    CHECK(run_cli("info 1,2,3 --degree 0").exit_code == 2);
    CHECK(run_cli("enumerate 1").exit_code == 2);
    CHECK(run_cli("enumerate 3 --format yaml").exit_code == 2);
    CHECK(run_cli("enumerate 3 --no-such-flag").exit_code == 2);
    CHECK(run_cli("verify everything").exit_code == 2);
    CHECK(run_cli("hodge 1,1,1,1").exit_code == 2);   // --degree is required here
}

TEST_CASE("enumerate output is byte-identical across runs", "[cli]") {
    const RunResult a = run_cli("enumerate 6 --format json");
    const RunResult b = run_cli("enumerate 6 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const RunResult c = run_cli("enumerate 6 --audit");
    const RunResult d = run_cli("enumerate 6 --audit");
    CHECK(c.exit_code == 0);
    CHECK(c.output == d.output);
}

TEST_CASE("emitted json parses back to the same rows", "[cli]") {
    const RunResult r = run_cli("enumerate 4 --format json");
    REQUIRE(r.exit_code == 0);
    const wfano::json doc = wfano::json::parse(r.output);
    REQUIRE(doc.contains("rows"));
    const auto rows = wfano::rows_from_json(doc["rows"]);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].weights == wfano::Weights{1, 1, 1, 1, 1, 2});
    CHECK(rows[0].degree == 4);
    CHECK(rows[5].degree == 10);
    // the round trip reproduces the document exactly
    CHECK(wfano::json_from_rows(rows).dump() == doc["rows"].dump());
}

TEST_CASE("audit formats", "[cli]") {
    const RunResult text = run_cli("enumerate 5 --audit");
    CHECK(text.exit_code == 0);
    CHECK(contains(text.output, "value-mismatch: (1,1,1,1,1,1,4) degree 8"));
    CHECK(contains(text.output, "missing-from-table: (1,1,1,1,1,1,5) degree 10"));
    CHECK(contains(text.output, "5 match(es) out of 7 entr(ies)"));

    const RunResult csv = run_cli("enumerate 5 --audit --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.output, "dim,weights,degree,multiple,index,in_paper_table,note"));
    CHECK(contains(csv.output, "\n\nstatus,dim,weights,degree,detail"));

    const RunResult js = run_cli("enumerate 5 --audit --format json");
    CHECK(js.exit_code == 0);
    const wfano::json doc = wfano::json::parse(js.output);
    CHECK(doc.contains("audit"));
    CHECK(doc["audit"].is_array());
}

TEST_CASE("hodge subcommand prints the diamond", "[cli]") {
    const RunResult text = run_cli("hodge 1,1,1,1,1 --degree 5");
    CHECK(text.exit_code == 0);
    CHECK(contains(text.output, "101"));

    const RunResult csv = run_cli("hodge 1,1,1,1,1 --degree 5 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.output, "p,q0,q1,q2,q3"));
    CHECK(contains(csv.output, "1,101"));

    const RunResult bad = run_cli("hodge 1,1,1,2 --degree 3");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("verify subcommand prints counts", "[cli]") {
    const RunResult r = run_cli("verify diagram");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "diagram: 28 checks passed"));
    CHECK(contains(r.output, "all 28 checks passed"));

    const RunResult js = run_cli("verify hodge --format json");
    CHECK(js.exit_code == 0);
    const wfano::json doc = wfano::json::parse(js.output);
    REQUIRE(doc.contains("reports"));
    CHECK(doc["reports"][0]["scope"] == "hodge");
}

TEST_CASE("embedded reference table matches the shipped fixture file",
          "[.][fixture-sync]") {
    const char* path = std::getenv("WFANO_FIXTURE_PATH");
    REQUIRE(path != nullptr);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == std::string(wfano::reference_table_text));
}
