#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string tmp_path(const std::string& name) { return std::string(TEST_TMPDIR) + "/" + name; }

int run(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

size_t line_count(const std::string& text) {
    size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_CASE("corpus generation and an end-to-end campaign") {
    const std::string corpus = tmp_path("blocks5.g6");
    REQUIRE(run(std::string(CORPUSGEN_BIN) + " --n 5 --class two-blocks --out " + corpus) == 0);
    CHECK(line_count(slurp(corpus)) == 10);

    const std::string out1 = tmp_path("cli_out1.txt");
    const std::string out2 = tmp_path("cli_out2.txt");
    const std::string base_cmd = std::string(SQUAREHAM_BIN) + " verify --mode h-property --corpus " + corpus +
                                 " --k 4 --seed 11 ";
    REQUIRE(run(base_cmd + "--jobs 1 --out " + out1 + " > " + tmp_path("cli1.log")) == 0);
    REQUIRE(run(base_cmd + "--jobs 4 --out " + out2 + " > " + tmp_path("cli2.log")) == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(slurp(tmp_path("cli1.log")).find("certified=50") != std::string::npos);
}

TEST_CASE("counterexample subcommand proves absence and exits cleanly") {
    const std::string out = tmp_path("cli_counter.txt");
    REQUIRE(run(std::string(SQUAREHAM_BIN) + " counterexample --base K4 --t 3 --out " + out + " > " +
                tmp_path("cli3.log")) == 0);
    std::string body = slurp(out);
    CHECK(body.find("OUTCOME:absent") != std::string::npos);
    CHECK(body.find("EXHAUSTED:") != std::string::npos);
    CHECK(body.find("obstruction:confirmed") != std::string::npos);
}

TEST_CASE("verify flags corpus graphs that break the mode precondition") {
    const std::string corpus = tmp_path("mixed.g6");
    {
        std::ofstream out(corpus, std::ios::binary);
        out << "D?{\n";  // a star: 1-connected
    }
    CHECK(run(std::string(SQUAREHAM_BIN) + " verify --mode h-property --corpus " + corpus + " > " +
              tmp_path("cli4.log")) == 1);
    CHECK(slurp(tmp_path("cli4.log")).find("error=1") != std::string::npos);
}

TEST_CASE("soundness subcommand") {
    const std::string corpus = tmp_path("blocks5b.g6");
    REQUIRE(run(std::string(CORPUSGEN_BIN) + " --n 5 --class two-blocks --out " + corpus) == 0);
    const std::string out = tmp_path("cli_eps.txt");
    REQUIRE(run(std::string(SQUAREHAM_BIN) + " soundness --mode eps --corpus " + corpus + " --out " + out + " > " +
                tmp_path("cli5.log")) == 0);
    CHECK(slurp(out).find("EPART:") != std::string::npos);
}

TEST_CASE("construct subcommand demos") {
    REQUIRE(run(std::string(SQUAREHAM_BIN) + " construct --op family --base C4 --t 3 > " + tmp_path("cli6.log")) ==
            0);
    std::string log = slurp(tmp_path("cli6.log"));
    CHECK(log.find("obstruction confirmed") != std::string::npos);

    const std::string corpus = tmp_path("blocks6.g6");
    REQUIRE(run(std::string(CORPUSGEN_BIN) + " --n 6 --min-n 2 --class blockchains --out " + corpus) == 0);
    // The block pool for gluing: bridges and 2-blocks both appear in the
    // blockchain corpus (trivial chains are single blocks).
    REQUIRE(run(std::string(SQUAREHAM_BIN) + " construct --op lemma1 --corpus " + corpus +
                " --sample 12 --seed 3 --n 12 > " + tmp_path("cli7.log")) == 0);
    CHECK(slurp(tmp_path("cli7.log")).find("12/12") != std::string::npos);

    REQUIRE(run(std::string(SQUAREHAM_BIN) + " construct --op surgery --corpus " + corpus +
                " --sample 6 --seed 5 > " + tmp_path("cli8.log")) == 0);
    CHECK(slurp(tmp_path("cli8.log")).find("6/6") != std::string::npos);
}
