#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "bidik/cli/cli.hpp"
#include "bidik/registry/config.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "temp_dir.hpp"

using bidik::cli::run_cli;
using nlohmann::json;

namespace {

const std::string kSource = BIDIK_SOURCE_DIR;
const std::string kCriteria = kSource + "/config/criteria.json";
const std::string kCsv = kSource + "/tests/golden/worked_example.csv";

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args, const std::string& stdin_text = {}) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
}

void write(const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

}  // namespace

TEST_CASE("rank prints the worked example in order") {
    const auto r = cli({"rank", "--applicants", kCsv, "--criteria", kCriteria});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    const auto angga = r.out.find("Angga");
    const auto rodiah = r.out.find("RODIAH");
    const auto saga = r.out.find("SAGA");
    CHECK(angga < rodiah);
    CHECK(rodiah < saga);
    CHECK(r.out.find("0.920000") != std::string::npos);
    CHECK(r.out.find("0.850000") != std::string::npos);
    CHECK(r.out.find("0.770000") != std::string::npos);
}

TEST_CASE("rank --trace matches the golden file and is stable") {
    const std::vector<std::string> args{"rank", "--applicants", kCsv, "--criteria", kCriteria, "--trace"};
    const auto a = cli(args);
    const auto b = cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == slurp(kSource + "/tests/golden/worked_example_trace.txt"));
}

TEST_CASE("rank reads applicants from stdin") {
    const auto r = cli({"rank", "--applicants", "-", "--criteria", kCriteria}, fixtures::worked_example_csv());
    CHECK(r.code == 0);
    CHECK(r.out == cli({"rank", "--applicants", kCsv, "--criteria", kCriteria}).out);
}

TEST_CASE("json output round-trips through the run schema") {
    const auto r = cli({"rank", "--applicants", kCsv, "--criteria", kCriteria, "--format", "json", "--top", "2"});
    REQUIRE(r.code == 0);
    const auto run = bidik::registry::run_from_json(json::parse(r.out));
    CHECK(bidik::registry::run_to_json(run).dump(2) + "\n" == r.out);
    CHECK(run.timestamp.empty());
    CHECK(run.quota == std::size_t{2});
    CHECK(run.applicants == fixtures::worked_example());
    REQUIRE(run.evaluation.recipients.size() == 2);
    CHECK(std::fabs(run.evaluation.ranking.entries[0].score - 0.92) <= 1e-12);

    // Same numbers as the core on the same pool.
    const auto criteria = bidik::default_criteria();
    const auto ev = bidik::evaluate(bidik::registry::to_alternatives(fixtures::worked_example(), criteria),
                                    criteria, bidik::default_weights(), 2);
    CHECK(run.evaluation == ev);
}

TEST_CASE("csv output carries full precision") {
    const auto r = cli({"rank", "--applicants", kCsv, "--criteria", kCriteria, "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "rank,nim,name,score,recipient");
    const auto score = std::stod(first.substr(first.find(",Angga,") + 7));
    CHECK(std::fabs(score - 0.92) <= 1e-12);
}

TEST_CASE("--top limits the recipients") {
    const auto r = cli({"rank", "--applicants", kCsv, "--criteria", kCriteria, "--top", "1"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int recipients = 0;
    while (std::getline(lines, line)) {
        if (line.find("  yes  ") != std::string::npos) ++recipients;
    }
    CHECK(recipients == 1);
}

TEST_CASE("weight override re-ranks and invalid weights exit 1") {
    const auto r = cli({"rank", "--applicants", kCsv, "--criteria", kCriteria, "--weights", "0.1,0.1,0.1,0.7"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("RODIAH") < r.out.find("Angga"));
    CHECK(r.out.find("0.950000") != std::string::npos);

    const auto bad = cli({"rank", "--applicants", kCsv, "--criteria", kCriteria, "--weights", "0.4,0.3,0.1,0.1"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("sum to 0.9") != std::string::npos);
    CHECK(bad.out.empty());

    CHECK(cli({"rank", "--applicants", kCsv, "--criteria", kCriteria, "--weights", "0.5,0.5"}).code == 1);
    CHECK(cli({"rank", "--applicants", kCsv, "--criteria", kCriteria, "--weights", "a,b,c,d"}).code == 1);
}

TEST_CASE("row diagnostics go to stderr") {
    TempDir dir;
    const auto csv = dir.path() / "pool.csv";
    write(csv, std::string(fixtures::worked_example_csv()) +
                   "Dup,10145001,Manajemen Informatika,4,2013,3.10,1000000,2\n"
                   "Late,77777777,Manajemen Informatika,9,2013,3.10,1000000,2\n"
                   "Bad,88888888,Manajemen Informatika,4,2013,abc,1000000,2\n");
    const auto r = cli({"rank", "--applicants", csv.string(), "--criteria", kCriteria});
    CHECK(r.code == 0);
    CHECK(r.err.find(":5: 10145001") != std::string::npos);
    CHECK(r.err.find(":7: 88888888") != std::string::npos);
    CHECK(r.err.find("ineligible: 77777777") != std::string::npos);
    CHECK(r.out.find("ineligible") != std::string::npos);
    CHECK(r.out.find("Dup") == std::string::npos);
}

TEST_CASE("--year keeps one scholarship year") {
    TempDir dir;
    const auto csv = dir.path() / "pool.csv";
    write(csv, std::string(fixtures::worked_example_csv()) + "Other,55555555,SI,4,2014,3.10,1000000,2\n");
    const auto r = cli({"rank", "--applicants", csv.string(), "--criteria", kCriteria, "--year", "2013"});
    CHECK(r.code == 0);
    CHECK(r.out.find("55555555") == std::string::npos);
    CHECK(r.err.find("55555555") != std::string::npos);
}

TEST_CASE("failure exit codes") {
    TempDir dir;
    SUBCASE("missing applicants file is an I/O error") {
        CHECK(cli({"rank", "--applicants", (dir.path() / "none.csv").string(), "--criteria", kCriteria}).code == 2);
    }
    SUBCASE("missing criteria file is an I/O error") {
        CHECK(cli({"rank", "--applicants", kCsv, "--criteria", (dir.path() / "none.json").string()}).code == 2);
    }
    SUBCASE("missing column is a validation error") {
        const auto csv = dir.path() / "bad.csv";
        write(csv, "nama,nim\nA,1\n");
        const auto r = cli({"rank", "--applicants", csv.string(), "--criteria", kCriteria});
        CHECK(r.code == 1);
        CHECK_FALSE(r.err.empty());
    }
    SUBCASE("nobody eligible") {
        const auto csv = dir.path() / "late.csv";
        write(csv, "nama,nim,jurusan,semester,tahun,nilai,penghasilan,tanggungan\nA,1,SI,9,2013,3.0,100,2\n");
        CHECK(cli({"rank", "--applicants", csv.string(), "--criteria", kCriteria}).code == 1);
    }
    SUBCASE("unknown option or format") {
        CHECK(cli({"rank", "--applicants", kCsv, "--criteria", kCriteria, "--format", "xml"}).code == 1);
        CHECK(cli({"frobnicate"}).code == 1);
        CHECK(cli({}).code == 1);
    }
    SUBCASE("help exits 0") {
        const auto r = cli({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("rank") != std::string::npos);
    }
}

TEST_CASE("validate reports the bundled configuration as clean") {
    const auto r = cli({"validate", "--criteria", kCriteria});
    CHECK(r.code == 0);
    CHECK(r.out.find("ok") != std::string::npos);
}

TEST_CASE("validate names overlaps and weight problems") {
    TempDir dir;
    auto doc = bidik::registry::criteria_to_json(bidik::default_criteria());

    SUBCASE("overlapping Nilai intervals") {
        auto criteria = bidik::default_criteria();
        criteria[0].table.entries[1].lower = 35;
        write(dir.path() / "c.json", bidik::registry::criteria_to_json(criteria).dump());
        const auto r = cli({"validate", "--criteria", (dir.path() / "c.json").string()});
        CHECK(r.code == 1);
        CHECK(r.out.find("overlap at [35, 40)") != std::string::npos);
    }
    SUBCASE("weights summing to 0.9") {
        auto criteria =
            bidik::with_weights(bidik::default_criteria(), bidik::WeightVector({0.4, 0.3, 0.1, 0.1}));
        write(dir.path() / "c.json", bidik::registry::criteria_to_json(criteria).dump());
        const auto r = cli({"validate", "--criteria", (dir.path() / "c.json").string()});
        CHECK(r.code == 1);
        CHECK(r.out.find("0.9") != std::string::npos);
    }
    SUBCASE("not JSON") {
        write(dir.path() / "c.json", "{");
        CHECK(cli({"validate", "--criteria", (dir.path() / "c.json").string()}).code == 1);
    }
    SUBCASE("missing file") {
        CHECK(cli({"validate", "--criteria", (dir.path() / "none.json").string()}).code == 2);
    }
}

TEST_CASE("serve refuses to start without credentials") {
    const auto r = cli({"serve", "--port", "0", "--admin-user", "", "--admin-password", ""});
    CHECK(r.code == 1);
    CHECK(r.err.find("credentials") != std::string::npos);
}
