#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "faircoal/cli.hpp"

using namespace faircoal;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

CliResult run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) {
        path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli compute on family specs") {
    CliResult r = run_cli({"compute", "petersen", "--cf"});
    CHECK(r.code == cli::kExitOk);
    json d = r.doc();
    CHECK(d["command"] == "compute");
    CHECK(d["n"] == 10);
    CHECK(d["results"]["cf"] == 4);

    r = run_cli({"compute", "cycle:4", "--d-f"});
    CHECK(r.doc()["results"]["d_f"] == 2);

    r = run_cli({"compute", "path:4"});
    d = r.doc();
    // default selection covers the whole bundle with stable keys
    CHECK(d["results"]["gamma"] == 2);
    CHECK(d["results"]["gamma_f"] == 2);
    CHECK(d["results"]["d_f"] == 2);
    CHECK(d["results"]["cf"] == 4);
    CHECK(d["results"]["bounds"]["cf_upper"] == 4);
    CHECK(d["results"]["bounds"]["cf_lower_domatic"] == 4);
    CHECK(d["sequential"] == true);

    r = run_cli({"compute", "corona:tree:4:seed=7", "--gamma-f", "--cf"});
    d = r.doc();
    CHECK(d["n"] == 8);
    CHECK(d["results"]["gamma_f"] == 4);
    CHECK(d["results"]["cf"] == 4);

    r = run_cli({"compute", "empty:4", "--gamma-f"});
    CHECK(r.doc()["results"]["gamma_f"] == 4);

    r = run_cli({"compute", "path:4", "--fd-i", "1", "--fd-i", "2"});
    d = r.doc();
    CHECK(d["results"]["fd_1"] == 2);
    CHECK(d["results"]["fd_2"] == 3);  // {0,2,3} leaves vertex 1 with exactly two neighbors
}

TEST_CASE("cli compute witnesses verify") {
    CliResult r = run_cli({"compute", "cycle:5", "--cf", "--witness"});
    json d = r.doc();
    CHECK(d["results"]["cf"] == 4);
    REQUIRE(d["witnesses"]["cf"].size() == 4);
    CHECK(d["witnesses"]["cf_certificate"].size() == 4);
}

TEST_CASE("cli graph input formats") {
    // graph6 from stdin
    CliResult r = run_cli({"compute", "-", "--gamma"}, "IheA@GUAo\n");
    CHECK(r.doc()["results"]["gamma"] == 3);

    // edge list auto-detected from a file
    TempFile f("cli_p4.txt", "4\n0 1\n1 2\n2 3\n");
    r = run_cli({"compute", f.path, "--cf"});
    CHECK(r.doc()["results"]["cf"] == 4);

    // explicit format override
    r = run_cli({"compute", "-", "--format", "edgelist", "--gamma"}, "2\n0 1\n");
    CHECK(r.doc()["results"]["gamma"] == 1);

    // parse failures exit 2
    r = run_cli({"compute", "-", "--cf"}, "not a graph\n");
    CHECK(r.code == cli::kExitInputError);
    r = run_cli({"compute", "/nonexistent/file.g6"});
    CHECK(r.code == cli::kExitInputError);
    r = run_cli({"compute", "cycle:2"});
    CHECK(r.code == cli::kExitInputError);
    CHECK(run_cli({"compute", "path:9xyz"}).code == cli::kExitInputError);
    CHECK(run_cli({"compute", "tree:5:seed=7q"}).code == cli::kExitInputError);
    CHECK(run_cli({"compute", "tree:5:sd=7"}).code == cli::kExitInputError);
}

TEST_CASE("cli verify") {
    TempFile good("cli_part_good.txt", "0 4\n1 5\n2 6\n3 7\n");
    CliResult r = run_cli({"verify", "path:8", good.path});
    CHECK(r.code == cli::kExitOk);
    json d = r.doc();
    CHECK(d["valid"] == true);
    CHECK(d["classes"] == 4);
    CHECK(d["certificate"].size() == 4);
    CHECK(d["certificate"][0]["partner"] == 3);
    CHECK(d["certificate"][0]["k"] == 1);

    TempFile bad("cli_part_bad.txt", "0 2\n1 3\n");
    r = run_cli({"verify", "cycle:4", bad.path});
    CHECK(r.code == cli::kExitInvalid);
    d = r.doc();
    CHECK(d["valid"] == false);
    CHECK(d["violation"]["kind"] == "fd_class_not_singleton");

    TempFile singles("cli_part_singles.txt", "0\n1\n2\n3\n# comment\n");
    r = run_cli({"verify", "path:4", singles.path});
    CHECK(r.code == cli::kExitOk);

    r = run_cli({"verify", "path:4", "-"}, "0\n1\n2\n3\n");
    CHECK(r.code == cli::kExitOk);

    TempFile garbled("cli_part_bad_tok.txt", "0 x\n");
    r = run_cli({"verify", "path:4", garbled.path});
    CHECK(r.code == cli::kExitInputError);
}

TEST_CASE("cli oracle") {
    CliResult r = run_cli({"oracle", "cycle:4"});
    CHECK(r.code == cli::kExitOk);
    json d = r.doc();
    CHECK(d["cf"] == 4);
    CHECK(d["partitions_enumerated"] == 15);  // Bell(4)
    CHECK(d["upper_bound"] == 4);

    CHECK(run_cli({"oracle", "path:3"}).doc()["cf"] == 3);
    CHECK(run_cli({"oracle", "empty:2"}).doc()["cf"] == 2);

    // the oracle cap maps to exit 3
    r = run_cli({"oracle", "path:12"});
    CHECK(r.code == cli::kExitCapExceeded);

    // so does the compute envelope
    CHECK(run_cli({"compute", "path:25", "--gamma"}).code == cli::kExitCapExceeded);
    CHECK(run_cli({"compute", "path:24", "--gamma"}).code == cli::kExitOk);
}

TEST_CASE("cli catalog") {
    CliResult r = run_cli({"catalog", "6"});
    CHECK(r.code == cli::kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++count;
    CHECK(count == 2);
    CHECK(r.out.find("connected") != std::string::npos);

    r = run_cli({"catalog", "10"});
    std::istringstream lines10(r.out);
    count = 0;
    while (std::getline(lines10, line))
        if (!line.empty()) ++count;
    CHECK(count == 21);
    CHECK(r.out.find("disconnected") != std::string::npos);

    r = run_cli({"catalog", "8", "--format", "edgelist"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("# 1 connected") != std::string::npos);
    CHECK(r.out.find("8\n") != std::string::npos);

    CHECK(run_cli({"catalog", "12"}).code == cli::kExitInputError);
}

TEST_CASE("cli reproduce") {
    CliResult r = run_cli({"reproduce", "--scope", "cubic6", "--pretty"});
    CHECK(r.code == cli::kExitOk);
    json d = r.doc();
    CHECK(d["scope"] == "cubic6");
    CHECK(d["claims"].size() == 2);
    CHECK(d["claims"][0]["status"] == "confirmed");
    CHECK(d["summary"]["unexpected_discrepancies"] == 0);
    CHECK_FALSE(r.err.empty());  // --pretty writes the table to stderr

    r = run_cli({"reproduce", "--scope", "cubic8"});
    CHECK(r.code == cli::kExitOk);  // known discrepancy does not fail the run
    d = r.doc();
    CHECK(d["claims"][0]["status"] == "discrepancy");
    CHECK(d["claims"][0]["known_discrepancy"] == true);

    CHECK(run_cli({"reproduce", "--scope", "nonsense"}).code == cli::kExitInputError);
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli({}).code == cli::kExitInputError);
    CHECK(run_cli({"frobnicate"}).code == cli::kExitInputError);
    CHECK(run_cli({"compute"}).code == cli::kExitInputError);
    CHECK(run_cli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("cli output is byte-stable across runs") {
    CliResult a = run_cli({"compute", "cycle:6", "--cf", "--witness"});
    CliResult b = run_cli({"compute", "cycle:6", "--cf", "--witness"});
    // timings differ; compare everything else
    json da = a.doc(), db = b.doc();
    da.erase("elapsed_ms");
    db.erase("elapsed_ms");
    CHECK(da == db);
}
