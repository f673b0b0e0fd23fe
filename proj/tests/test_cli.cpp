// End-to-end checks of the installed-style binary. The harness passes the
// binary path as the sole positional argument.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_cli;

struct run_result {
    int code = -1;
    std::string out;
};

run_result run(const std::string& args, bool keep_stderr = false) {
    std::string command = g_cli + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    run_result result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

}  // namespace

TEST_CASE("compute emits csv rows from the first defined index") {
    run_result r = run("compute p --max-n 5");
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "key,n,value");
    CHECK(lines[1] == "p,0,1");
    CHECK(lines[6] == "p,5,7");

    r = run("compute sigma --max-n 3");
    lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);  // header + n = 1..3
    CHECK(lines[1] == "sigma,1,1");
    CHECK(lines[3] == "sigma,3,4");
}

TEST_CASE("compute omega pins the sign pattern") {
    run_result r = run("compute omega --max-n 7");
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    const char* expected[] = {"1", "-1", "-1", "0", "0", "1", "0", "1"};
    REQUIRE(lines.size() == 9);
    for (int n = 0; n <= 7; ++n)
        CHECK(lines[n + 1] == std::string("omega,") + std::to_string(n) + "," + expected[n]);
}

TEST_CASE("json and csv formats carry identical data") {
    run_result csv = run("compute q --max-n 20");
    run_result json = run("compute q --max-n 20 --format json");
    CHECK(csv.code == 0);
    CHECK(json.code == 0);

    auto rows = lines_of(csv.out);
    auto parsed = nlohmann::json::parse(json.out);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == rows.size() - 1);
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        auto fields = split_csv(rows[i + 1]);
        REQUIRE(fields.size() == 3);
        CHECK(parsed[i]["key"] == fields[0]);
        CHECK(parsed[i]["n"] == std::stol(fields[1]));
        CHECK(parsed[i]["value"] == fields[2]);
    }
}

TEST_CASE("method both cross-checks recurrence against oracle") {
    run_result r = run("compute sigma --max-n 50 --method both");
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 51);  // header + n = 1..50
    CHECK(lines[0] == "key,n,value,value_oracle");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto fields = split_csv(lines[i]);
        REQUIRE(fields.size() == 4);
        CHECK(fields[2] == fields[3]);
    }

    r = run("compute r_k --k 2 --max-n 30 --method both");
    CHECK(r.code == 0);
}

TEST_CASE("compute usage errors exit with 2") {
    CHECK(run("compute r_k --max-n 5", true).code == 2);     // missing --k
    CHECK(run("compute c_r --max-n 5", true).code == 2);     // missing --r
    CHECK(run("compute nope --max-n 5", true).code == 2);    // unknown name
    CHECK(run("compute p", true).code == 2);                 // missing --max-n
    CHECK(run("compute p --max-n -3", true).code == 2);      // negative range
    CHECK(run("compute p --max-n 5 --method magic", true).code == 2);
    CHECK(run("compute phi --max-n 5 --method recurrence", true).code == 2);
}

TEST_CASE("verify reports one row per identity and exits 0 on a clean sweep") {
    run_result r = run("verify eq3-p --max-n 50");
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "key,n_lo,n_hi,checked,failures,status");
    CHECK(lines[1] == "eq3-p,1,50,50,0,pass");
}

TEST_CASE("verify clamps the sweep to the documented cap") {
    run_result r = run("verify thm-r2 --max-n 100000");
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1] == "thm-r2,1,300,300,0,pass");
}

TEST_CASE("verify all sweeps the whole catalog") {
    // run under a small worker cap to exercise the pool path deterministically
    std::string saved = g_cli;
    g_cli = "EULEREC_THREADS=4 " + saved;
    run_result r = run("verify all --max-n 40");
    g_cli = saved;
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 36);  // header + 35 identities
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto fields = split_csv(lines[i]);
        REQUIRE(fields.size() == 6);
        CHECK(fields[5] == "pass");
    }
}

TEST_CASE("verify surfaces the uncorrected form as failures and exit 1") {
    run_result r = run("verify thm4b --literal --max-n 6 --format json");
    CHECK(r.code == 1);
    auto parsed = nlohmann::json::parse(r.out);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["key"] == "thm4b");
    CHECK(parsed[0]["status"] == "fail");
    bool found_n2 = false;
    for (const auto& f : parsed[0]["failures"]) {
        if (f["n"] == 2) {
            found_n2 = true;
            CHECK(f["lhs"] == "3");
            CHECK(f["rhs"] == "0");
        }
    }
    CHECK(found_n2);

    // per-failure detail also lands on stderr
    r = run("verify thm4b --literal --max-n 6", true);
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL thm4b n=2 lhs=3 rhs=0") != std::string::npos);
}

TEST_CASE("verify usage errors exit with 2") {
    CHECK(run("verify nope --max-n 5", true).code == 2);
    CHECK(run("verify eq3-p --literal --max-n 5", true).code == 2);
    CHECK(run("verify eq3-p", true).code == 2);  // missing --max-n
}

TEST_CASE("bench compares the two pipelines and says so") {
    run_result r = run("bench p --max-n 300");
    CHECK(r.code == 0);
    CHECK(r.out.find("tables identical") != std::string::npos);
    CHECK(r.out.find("terms") != std::string::npos);

    r = run("bench r_k --k 2 --max-n 100");
    CHECK(r.code == 0);
    CHECK(r.out.find("tables identical") != std::string::npos);

    CHECK(run("bench phi --max-n 100", true).code == 2);
    CHECK(run("bench r_k --max-n 100", true).code == 2);
}

int main(int argc, char** argv) {
    if (argc > 1 && argv[argc - 1][0] != '-') {
        g_cli = argv[argc - 1];
        --argc;
    }
    doctest::Context context(argc, argv);
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-eulerec-binary>\n");
        return 3;
    }
    return context.run();
}
