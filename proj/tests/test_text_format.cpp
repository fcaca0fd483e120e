#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "hyperboot/json_io.hpp"
#include "hyperboot/process.hpp"
#include "hyperboot/text_format.hpp"

using namespace hyperboot;

TEST_CASE("read a configuration with comments and blanks") {
    std::istringstream in("# two pairs\n\n1 2\n\n  # indented comment\n3 4\n");
    Configuration c = read_configuration(in, "in", 6, 2);
    CHECK(c.members() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
}

TEST_CASE("write then read round trip") {
    Configuration c = Configuration::from_members(3, Universe(7), {{1, 2, 7}, {2, 4, 6}});
    std::ostringstream out;
    write_configuration(out, c);
    CHECK(out.str() == "2 4 6\n1 2 7\n");  // colex order
    std::istringstream in(out.str());
    CHECK(read_configuration(in, "in", 7, 3) == c);
}

TEST_CASE("line-numbered diagnostics") {
    auto expect_line = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_configuration(in, "bad", 6, 2);
            FAIL("expected a parse error");
        } catch (const ParseError& err) {
            CHECK(err.line() == line);
            CHECK(std::string(err.what()).find("bad:" + std::to_string(line) + ":") == 0);
        }
    };
    expect_line("1 2\n1 2 3\n", 2);      // wrong cardinality
    expect_line("1 2\nx 4\n", 2);        // not an integer
    expect_line("# c\n0 2\n", 2);        // out of range
    expect_line("9 9\n", 1);             // duplicate vertex in a line
    expect_line("1 2\n1 99\n3 4\n", 2);  // above n
    expect_line("2 1\n", 1);             // descending
}

TEST_CASE("duplicate members are accepted idempotently") {
    std::istringstream in("1 2\n1 2\n");
    Configuration c = read_configuration(in, "in", 4, 2);
    CHECK(c.size() == 1);
}

TEST_CASE("trace JSON carries frontier and running count") {
    HypergraphModel h = HypergraphModel::complete(4, 3);
    Configuration initial = Configuration::from_members(2, Universe(4), {{1, 2}});
    RunResult result = run(make_process(h, 2, 1, initial));
    std::ostringstream out;
    write_trace(out, result, initial.size());
    std::istringstream lines(out.str());
    std::string line;
    std::size_t count = 1;
    int t = 0;
    while (std::getline(lines, line)) {
        auto obj = nlohmann::json::parse(line);
        CHECK(obj["t"] == ++t);
        count += obj["frontier"].size();
        CHECK(obj["infected_count"] == count);
    }
    CHECK(t == static_cast<int>(result.trace.size()));
    CHECK(count == result.final_infected.size());
}

TEST_CASE("run summary JSON shape") {
    HypergraphModel h = HypergraphModel::complete(4, 3);
    Configuration initial = Configuration::from_members(2, Universe(4), {{1, 2}});
    RunResult result = run(make_process(h, 2, 1, initial));
    auto summary = run_summary_json(result);
    CHECK(summary["percolated"] == true);
    CHECK(summary["tau"] == *result.tau);
    CHECK(summary["final_count"] == 6);
    CHECK(summary["truncated"] == false);

    RunResult cut = run(make_process(h, 2, 1, initial), 0);
    auto cut_summary = run_summary_json(cut);
    CHECK(cut_summary["truncated"] == true);
    CHECK(cut_summary["tau"].is_null());
}
