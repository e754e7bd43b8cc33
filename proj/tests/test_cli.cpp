#include <catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "fillpair/cli.hpp"

using namespace fillpair;

namespace {

struct CliRun {
    int exit;
    std::string out;
    std::string err;
};

CliRun run(std::initializer_list<std::string> args) {
    std::string err;
    auto cfg = parseArgs(std::vector<std::string>(args), err);
    REQUIRE(cfg.has_value());
    std::ostringstream out, errStream;
    const int code = runCli(*cfg, out, errStream);
    return {code, out.str(), errStream.str()};
}

std::vector<std::string> splitLines(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("argument parsing accepts the documented forms", "[cli]") {
    std::string err;

    auto c1 = parseArgs({"count", "--genus", "3", "--workers", "2"}, err);
    REQUIRE(c1.has_value());
    CHECK(c1->command == "count");
    CHECK(c1->genus == 3);
    CHECK(c1->workers == 2);
    CHECK_FALSE(c1->allowLong);

    auto c2 = parseArgs({"verify", "(1 2 5 3 4)"}, err);
    REQUIRE(c2.has_value());
    CHECK(c2->permText == "(1 2 5 3 4)");

    auto c3 = parseArgs({"enumerate", "-g", "4", "--format", "csv",
                         "--allow-long", "--cross-check", "--output", "x.csv"},
                        err);
    REQUIRE(c3.has_value());
    CHECK(c3->genus == 4);
    CHECK(c3->format == "csv");
    CHECK(c3->allowLong);
    CHECK(c3->crossCheck);
    CHECK(c3->outputPath == "x.csv");

    auto c4 = parseArgs({"menage", "--n", "7", "--classes",
                         "--exclude-opposite"},
                        err);
    REQUIRE(c4.has_value());
    CHECK(c4->n == 7);
    CHECK(c4->listClasses);
    CHECK(c4->excludeOpposite);

    auto c5 = parseArgs({"bound", "--table", "--max", "9"}, err);
    REQUIRE(c5.has_value());
    CHECK(c5->table);
    CHECK(c5->maxGenus == 9);
}

TEST_CASE("argument parsing rejects malformed command lines", "[cli]") {
    std::string err;
    CHECK_FALSE(parseArgs({}, err).has_value());
    CHECK_FALSE(parseArgs({"frobnicate"}, err).has_value());
    CHECK_FALSE(parseArgs({"count", "--genus"}, err).has_value());
    CHECK_FALSE(parseArgs({"count", "--genus", "three"}, err).has_value());
    CHECK_FALSE(parseArgs({"count", "--workers", "0", "--genus", "3"}, err)
                    .has_value());
    CHECK_FALSE(parseArgs({"count", "stray"}, err).has_value());
    CHECK_FALSE(parseArgs({"verify", "--perm"}, err).has_value());
}

TEST_CASE("count prints one number per run", "[cli]") {
    CHECK(run({"count", "--genus", "2"}).out == "1\n");
    CHECK(run({"count", "--genus", "3"}).out == "1\n");
    CHECK(run({"count", "--genus", "4"}).out == "8\n");
    const CliRun g3 = run({"count", "--genus", "3"});
    CHECK(g3.exit == 0);
    CHECK(g3.err.find("count=1") != std::string::npos);
}

TEST_CASE("count cross-check passes on small genera", "[cli]") {
    const CliRun r = run({"count", "--genus", "3", "--cross-check"});
    CHECK(r.exit == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("count rejects an out-of-range genus", "[cli]") {
    CHECK(run({"count", "--genus", "1"}).exit == 2);
    CHECK(run({"count"}).exit == 2);
    CHECK(run({"count", "--genus", "7"}).exit == 2);  // needs --allow-long
}

TEST_CASE("enumerate emits one JSON line per class", "[cli]") {
    const CliRun r = run({"enumerate", "--genus", "3"});
    CHECK(r.exit == 0);
    CHECK(r.out ==
          "{\"genus\": 3, \"n\": 5, \"canonical_diffs\": [1, 2, 1, 3, 3], "
          "\"orbit_size\": 10, \"stratum\": [4]}\n");

    const CliRun g4 = run({"enumerate", "--genus", "4"});
    CHECK(splitLines(g4.out).size() == 8);
    for (const auto& line : splitLines(g4.out)) {
        CHECK(line.find("\"genus\": 4") != std::string::npos);
        CHECK(line.find("\"stratum\": [6]") != std::string::npos);
    }
}

TEST_CASE("enumerate output is byte-identical across worker counts", "[cli]") {
    const CliRun one = run({"enumerate", "--genus", "4", "--workers", "1"});
    const CliRun three = run({"enumerate", "--genus", "4", "--workers", "3"});
    const CliRun eight = run({"enumerate", "--genus", "4", "--workers", "8"});
    CHECK(one.out == three.out);
    CHECK(one.out == eight.out);
}

TEST_CASE("enumerate csv summarises one genus per row", "[cli]") {
    const CliRun r = run({"enumerate", "--genus", "3", "--format", "csv"});
    CHECK(r.exit == 0);
    const auto lines = splitLines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "genus,squares,count,asymptotic_bound");
    CHECK(lines[1] == "3,5,1,6");

    CHECK(run({"enumerate", "--genus", "3", "--format", "yaml"}).exit == 2);
}

TEST_CASE("verify reports the full diagnostic block", "[cli]") {
    const CliRun valid = run({"verify", "(1 2 5 3 4)"});
    CHECK(valid.exit == 0);
    CHECK(valid.out.find("squares: 5") != std::string::npos);
    CHECK(valid.out.find("single cycle: yes") != std::string::npos);
    CHECK(valid.out.find("genus: 3") != std::string::npos);
    CHECK(valid.out.find("stratum: 4") != std::string::npos);
    CHECK(valid.out.find("valid filling pair: yes") != std::string::npos);
    CHECK(valid.out.find("trace agrees: yes") != std::string::npos);
    CHECK(valid.out.find("canonical diffs: 1 2 1 3 3") != std::string::npos);
    CHECK(valid.out.find("orbit size: 10") != std::string::npos);

    // An invalid pair is still a successful diagnostic run.
    const CliRun invalid = run({"verify", "(1 2 3 4 5)"});
    CHECK(invalid.exit == 0);
    CHECK(invalid.out.find("valid filling pair: no") != std::string::npos);

    CHECK(run({"verify", "--perm", "nonsense"}).exit == 2);
    CHECK(run({"verify", "--perm", "(1 2 5 3 4)", "--n", "7"}).exit == 2);
    CHECK(run({"verify"}).exit == 2);
}

TEST_CASE("polygon prints the side list or fails cleanly", "[cli]") {
    const CliRun ok = run({"polygon", "(1 2 5 3 4)"});
    CHECK(ok.exit == 0);
    const auto lines = splitLines(ok.out);
    CHECK(lines.size() == 20);
    for (const auto& line : lines) {
        CHECK((line.find(" a") != std::string::npos ||
               line.find(" b") != std::string::npos));
    }

    const CliRun bad = run({"polygon", "(1 2 3 4 5)"});
    CHECK(bad.exit == 1);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("not a single disk") != std::string::npos);
}

TEST_CASE("menage prints counts, classes, and cross-checks", "[cli]") {
    CHECK(run({"menage", "--n", "5"}).out == "13\n");
    CHECK(run({"menage", "--n", "6"}).out == "80\n");
    CHECK(run({"menage", "--n", "7"}).out == "579\n");

    const CliRun classes = run({"menage", "--n", "5", "--classes"});
    CHECK(splitLines(classes.out).size() == 5);
    for (const auto& line : splitLines(classes.out)) {
        CHECK(splitLines(line).size() == 1);
        std::istringstream in(line);
        int v, k = 0;
        while (in >> v) {
            ++k;
            CHECK(v >= 1);
            CHECK(v <= 5);
        }
        CHECK(k == 5);
    }

    const CliRun excl =
        run({"menage", "--n", "5", "--classes", "--exclude-opposite"});
    CHECK(splitLines(excl.out).size() == 4);

    const CliRun crossed = run({"menage", "--n", "5", "--cross-check"});
    CHECK(crossed.exit == 0);
    CHECK(crossed.err.find("cross-check ok") != std::string::npos);

    CHECK(run({"menage"}).exit == 2);
    CHECK(run({"menage", "--n", "2"}).exit == 2);
}

TEST_CASE("bound prints a report or the full table", "[cli]") {
    const CliRun g3 = run({"bound", "--genus", "3"});
    CHECK(g3.exit == 0);
    CHECK(g3.out.find("asymptotic bound: 6") != std::string::npos);
    CHECK(g3.out.find("seating classes: 5") != std::string::npos);
    CHECK(g3.out.find("exact bound: 10") != std::string::npos);
    CHECK(g3.out.find("excluding opposite: 8") != std::string::npos);

    // Exact bounds need the seating-class count, which is out of reach at
    // this size; the asymptotic column still prints.
    const CliRun g8 = run({"bound", "--genus", "8"});
    CHECK(g8.exit == 0);
    CHECK(g8.out.find("asymptotic bound: 82588091121") != std::string::npos);
    CHECK(g8.out.find("not computable") != std::string::npos);

    const CliRun table = run({"bound", "--table", "--max", "4"});
    CHECK(table.exit == 0);
    const auto lines = splitLines(table.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] ==
          "genus,squares,count,asymptotic_bound,exact_bound,"
          "exact_bound_excl_opposite");
    CHECK(lines[1] == "3,5,1,6,10,8");
    CHECK(lines[2] == "4,7,8,292,261,258");

    CHECK(run({"bound"}).exit == 2);
    CHECK(run({"bound", "--genus", "2"}).exit == 2);
    CHECK(run({"bound", "--table", "--max", "2"}).exit == 2);
}

TEST_CASE("render draws the square row in text and svg", "[cli]") {
    const CliRun text = run({"render", "(1 2 3)"});
    CHECK(text.exit == 0);
    const auto lines = splitLines(text.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "  2   3   1 ");
    CHECK(lines[1] == "+---+---+---+");
    CHECK(lines[2] == "|  1|  2|  3|");
    CHECK(lines[3] == "+---+---+---+");

    const CliRun svg =
        run({"render", "--perm", "(1 2 5 3 4)", "--format", "svg"});
    CHECK(svg.exit == 0);
    CHECK(svg.out.rfind("<svg ", 0) == 0);
    CHECK(svg.out.find("</svg>") != std::string::npos);
    int rects = 0;
    for (std::size_t pos = 0;
         (pos = svg.out.find("<rect", pos)) != std::string::npos; ++pos) {
        ++rects;
    }
    CHECK(rects == 5);

    CHECK(run({"render", "(1 2 3)", "--format", "png"}).exit == 2);
}
