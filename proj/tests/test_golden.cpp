#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <fstream>

#include "lamskel/golden.hpp"

using namespace lamskel;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        char name[] = "/tmp/lamskel_golden_XXXXXX";
        int fd = mkstemp(name);
        REQUIRE(fd >= 0);
        close(fd);
        path = name;
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("golden loader parses headers and dense rows") {
    TempFile file(
        "# Motzkin counts\n"
        "# oeis: A001006\n"
        "# index: size\n"
        "0 1\n"
        "1 1\n"
        "2 2\n"
        "3 123456789012345678901234567890\n");
    GoldenSequence seq = load_golden_file(file.path);
    CHECK(seq.oeis_id == "A001006");
    CHECK(seq.index_kind == "size");
    REQUIRE(seq.values.size() == 4);
    CHECK(seq.values[2] == 2);
    CHECK(seq.values[3] == BigInt("123456789012345678901234567890"));
}

TEST_CASE("golden loader rejects gaps, junk and missing files") {
    TempFile gap("0 1\n2 5\n");
    CHECK_THROWS_AS(load_golden_file(gap.path), std::runtime_error);

    TempFile junk("0 1\nnot a row\n");
    CHECK_THROWS_AS(load_golden_file(junk.path), std::runtime_error);

    TempFile empty("# only comments\n");
    CHECK_THROWS_AS(load_golden_file(empty.path), std::runtime_error);

    CHECK_THROWS_AS(load_golden_file("/nonexistent/golden.txt"), std::runtime_error);
}

TEST_CASE("shipped data files load") {
    GoldenSequence seq = load_golden_file(std::string(LAMSKEL_DATA_DIR) + "/closable.txt");
    CHECK(seq.name == "closable");
    REQUIRE(seq.values.size() >= 15);
    CHECK(seq.values[14] == 55127);
}
