#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "cowpath/path_io.hpp"
#include "cowpath/strategies.hpp"

using namespace cowpath;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / "cowpath_io_test";
        fs::create_directories(dir);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(dir, ec); }
    fs::path operator/(const char* name) const { return dir / name; }
};

} // namespace

TEST_CASE("json path files round-trip bit-exactly") {
    TempDir tmp;
    Polyline p = confined_random_path(5, 2.0, 4.0, 9, 77);
    save_path_json(p, tmp / "p.json");
    Polyline q = load_path(tmp / "p.json");
    REQUIRE(q.dim() == p.dim());
    REQUIRE(q.vertices().size() == p.vertices().size());
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        CHECK(q.vertices()[i] == p.vertices()[i]);
    }
    CHECK(q.length() == p.length());
}

TEST_CASE("csv path files round-trip bit-exactly") {
    TempDir tmp;
    Polyline p = confined_random_path(3, 1.5, 3.0, 7, 8);
    save_path_csv(p, tmp / "p.csv");
    Polyline q = load_path(tmp / "p.csv");
    REQUIRE(q.vertices().size() == p.vertices().size());
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        CHECK(q.vertices()[i] == p.vertices()[i]);
    }
}

TEST_CASE("cumulative lengths are recomputed, never read") {
    TempDir tmp;
    std::ofstream(tmp / "p.json")
        << R"({"dimension": 2, "vertices": [[0,0],[3,4]], "cum_length": [0, 999]})";
    Polyline p = load_path(tmp / "p.json");
    CHECK(p.length() == doctest::Approx(5.0));
}

TEST_CASE("malformed path files carry diagnostics") {
    TempDir tmp;
    std::ofstream(tmp / "bad.json") << R"({"vertices": [[0,0]]})";
    CHECK_THROWS_WITH_AS(load_path(tmp / "bad.json"),
                         doctest::Contains("dimension"), std::runtime_error);

    std::ofstream(tmp / "offorigin.json")
        << R"({"dimension": 2, "vertices": [[1,0],[2,0]]})";
    CHECK_THROWS_WITH_AS(load_path(tmp / "offorigin.json"),
                         doctest::Contains("origin"), std::runtime_error);

    std::ofstream(tmp / "ragged.json")
        << R"({"dimension": 2, "vertices": [[0,0],[1,2,3]]})";
    CHECK_THROWS_AS(load_path(tmp / "ragged.json"), std::runtime_error);

    std::ofstream(tmp / "bad.csv") << "x1,x2\n0,0\n1,zap\n";
    CHECK_THROWS_WITH_AS(load_path(tmp / "bad.csv"), doctest::Contains(":3"),
                         std::runtime_error);

    std::ofstream(tmp / "head.csv") << "a,b\n0,0\n";
    CHECK_THROWS_WITH_AS(load_path(tmp / "head.csv"), doctest::Contains("header"),
                         std::runtime_error);

    CHECK_THROWS_AS(load_path(tmp / "missing.json"), std::runtime_error);
}

TEST_CASE("file digest is stable and content-sensitive") {
    TempDir tmp;
    std::ofstream(tmp / "a.txt") << "hello";
    std::ofstream(tmp / "b.txt") << "hello";
    std::ofstream(tmp / "c.txt") << "hellp";
    CHECK(file_digest(tmp / "a.txt") == file_digest(tmp / "b.txt"));
    CHECK(file_digest(tmp / "a.txt") != file_digest(tmp / "c.txt"));
    CHECK(file_digest(tmp / "a.txt").substr(0, 8) == "fnv1a64:");
}
