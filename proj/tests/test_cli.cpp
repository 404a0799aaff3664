#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "tvcc/cli.hpp"
#include "tvcc/encoder_file.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = tvcc::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
   public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("tvcc-cli-" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (path_ / name).string(); }

   private:
    fs::path path_;
};

}  // namespace

TEST_CASE("check") {
    TempDir dir;
    const auto classic = dir.write("classic.enc", "1 1 2\n11 101\n");
    const auto good = dir.write("good.enc", "1 1 2\n1 11\n");

    auto r = run({"check", classic});
    CHECK(r.code == 2);
    CHECK(r.out == "CATASTROPHIC f=11 l=0 g=11\n");

    r = run({"check", good});
    CHECK(r.code == 0);
    CHECK(r.out == "NON-CATASTROPHIC f=1 l=0\n");

    r = run({"check", classic, "--machine"});
    CHECK(r.code == 2);
    CHECK(r.out ==
          "verdict=CATASTROPHIC\nmethod=minor-gcd\nperiod=1\ninputs=1\noutputs=2\nmemory=2\ntvece_memory=2\n"
          "f=11\nl=0\ng=11\n");

    r = run({"--octal", "check", classic});
    CHECK(r.out == "CATASTROPHIC f=11 l=0 g=11 (octal f=3 g=3)\n");

    const auto delayed = dir.write("delayed.enc", "1 1 2\n01 011\n");
    r = run({"check", delayed});
    CHECK(r.code == 0);
    CHECK(r.out == "NON-CATASTROPHIC f=01 l=1\n");
}

TEST_CASE("check on rational files uses the state graph") {
    TempDir dir;
    const auto rational = dir.write("r.enc", "1 1 2\n11 101\nden 11\n");
    auto r = run({"check", rational, "--machine"});
    CHECK(r.code == 0);
    CHECK(r.out == "verdict=NON-CATASTROPHIC\nmethod=oracle\nperiod=1\ninputs=1\noutputs=2\nden=11\n");

    const auto bad = dir.write("rb.enc", "1 1 2\n11 101\nden 111\n");
    r = run({"check", bad});
    CHECK(r.code == 2);
    CHECK(r.out == "CATASTROPHIC method=oracle den=111\n");
}

TEST_CASE("convert then check") {
    TempDir dir;
    const auto classic = dir.write("classic.enc", "1 1 2\n11 101\n");
    const auto out = dir.path("out.enc");
    auto r = run({"convert", classic, "-o", out});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == "1 1 2\n1 11\n");
    r = run({"check", out});
    CHECK(r.code == 0);

    r = run({"convert", classic, "--machine", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "f=11\nl=0\ng=11\ndivisor=11\nden=1\nexact_division=true\nverified=true\ntrials=100\nlength=64\nseed=5\n");

    const auto twin = dir.write("twin.enc", "2 1 2\n11 101\n11 101\n");
    r = run({"convert", twin});
    CHECK(r.code == 0);
    const auto pos = r.out.find("2 1 2\n");
    REQUIRE(pos != std::string::npos);
    CHECK(r.out.substr(pos) == "2 1 2\n11 101\n11 101\nden 101\n");
    // the emitted text is itself an encoder file
    const auto reparsed = dir.write("twin_conv.enc", r.out);
    r = run({"check", reparsed});
    CHECK(r.code == 0);
    CHECK(r.out == "NON-CATASTROPHIC method=oracle den=101\n");

    const auto delayed = dir.write("delayed.enc", "1 1 2\n011 0101\n");
    r = run({"convert", delayed});
    CHECK(r.code == 0);
    CHECK(r.out.find("# note: the delay factor D^1 of f is kept") != std::string::npos);
}

TEST_CASE("negative controls exit with 1") {
    TempDir dir;
    const auto good = dir.write("good.enc", "1 1 2\n1 11\n");
    auto r = run({"convert", good});
    CHECK(r.code == 1);
    CHECK(r.err.find("NotCatastrophic") != std::string::npos);

    const auto deficient = dir.write("rd.enc", "1 1 2\n0 0\n");
    r = run({"check", deficient});
    CHECK(r.code == 1);
    CHECK(r.err.find("RankDeficient") != std::string::npos);

    const auto deficient2 = dir.write("rd2.enc", "1 2 3\n11 1 0\n11 1 0\n");
    r = run({"check", deficient2});
    CHECK(r.code == 1);
    CHECK(r.err.find("RankDeficient") != std::string::npos);

    const auto broken = dir.write("broken.enc", "1 1 2\n11 1x1\n");
    r = run({"check", broken});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 2, column 5") != std::string::npos);

    r = run({"check", dir.path("missing.enc")});
    CHECK(r.code == 1);

    r = run({"frobnicate"});
    CHECK(r.code == 1);
    r = run({});
    CHECK(r.code == 1);
}

TEST_CASE("encode") {
    TempDir dir;
    const auto classic = dir.write("classic.enc", "1 1 2\n11 101\n");
    auto r = run({"encode", classic, "--input", "1 1 1"});
    CHECK(r.code == 0);
    CHECK(r.out == "11 01 00\n");

    r = run({"encode", classic, "--tail"}, "1 1 1\n");
    CHECK(r.out == "11 01 00 11 01\n");

    const auto alt = dir.write("alt.enc", "2 1 2\n11 101\n1 11\n");
    r = run({"encode", alt, "-i", "1 0 0"});
    CHECK(r.out == "11 01 01\n");
    r = run({"encode", alt, "-i", "1 0 0", "--parallel"});
    CHECK(r.out == "11 01 01\n");

    const auto rational = dir.write("r.enc", "1 1 2\n11 101\nden 11\n");
    r = run({"encode", rational, "-i", "1 0 0 0 0 0 0 0", "--machine"});
    CHECK(r.out == "epochs=8\noutput=11 01 00 00 00 00 00 00\nweight=3\n");

    r = run({"encode", classic, "-i", "10"});
    CHECK(r.code == 1);
}

TEST_CASE("tvece and oracle") {
    TempDir dir;
    const auto alt = dir.write("alt.enc", "2 1 2\n11 101\n1 11\n");
    auto r = run({"tvece", alt});
    CHECK(r.code == 0);
    CHECK(r.out == "# equivalent time-invariant encoder of a period-2 encoder, memory 1\n1 2 4\n1 11 0 1\n01 0 1 1\n");

    r = run({"tvece", alt, "--machine"});
    CHECK(r.out == "source_period=2\ninputs=2\noutputs=4\nmemory=1\nmemory_bound=1\nrow.0=1 11 0 1\nrow.1=01 0 1 1\n");

    const auto classic = dir.write("classic.enc", "1 1 2\n11 101\n");
    r = run({"oracle", classic});
    CHECK(r.code == 2);
    CHECK(r.out ==
          "CATASTROPHIC state_bits=2 nodes=4 edges=8\n"
          "witness cycle (phase state input -> next_state / output):\n"
          "0 11 1 -> 11 / 00\n");

    r = run({"oracle", classic, "--machine"});
    CHECK(r.out ==
          "verdict=CATASTROPHIC\nmethod=oracle\nstate_bits=2\nnodes=4\nedges=8\nedges_visited=16\n"
          "witness.0=0 11 1 -> 11 / 00\n");

    r = run({"oracle", alt});
    CHECK(r.code == 0);
}

TEST_CASE("bench") {
    auto r = run({"bench", "--m-min", "2", "--m-max", "6", "--machine"});
    CHECK(r.code == 0);
    CHECK(r.out.find("m.2.state_bits=3\n") != std::string::npos);
    CHECK(r.out.find("m.6.oracle_edges=256\n") != std::string::npos);
    CHECK(r.out.find("m.6.agree=true\n") != std::string::npos);
    CHECK(r.out.find("oracle_doubling_ratio_min=2\n") != std::string::npos);

    r = run({"bench", "--m-min", "5", "--m-max", "3"});
    CHECK(r.code == 1);
}
