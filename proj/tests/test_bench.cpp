#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "gs/bench.hpp"
#include "gs/error.hpp"

namespace fs = std::filesystem;

TEST_SUITE("bench") {

TEST_CASE("registry carries the five named problems") {
    const std::vector<gs::BenchProblem>& registry = gs::bench_registry();
    REQUIRE(registry.size() == 5);
    const char* names[] = {"uniform1d", "jitter1d", "uniform2d", "jitter2d", "spiral"};
    for (size_t i = 0; i < 5; ++i) {
        CHECK(registry[i].name == names[i]);
        CHECK(registry[i].family == gs::Family::db4);
    }
}

TEST_CASE("repeated runs are deterministic in shape and iteration count") {
    gs::BenchRecord a = gs::run_bench("uniform1d", 0.0625, 11, 0, 1);
    gs::BenchRecord b = gs::run_bench("uniform1d", 0.0625, 11, 0, 1);
    CHECK(a.rows == 512);
    CHECK(a.cols == 256);
    CHECK(a.rows == b.rows);
    CHECK(a.cols == b.cols);
    CHECK(a.iterations == b.iterations);
    CHECK(a.iterations > 0);
    CHECK(a.init_seconds >= 0.0);
    CHECK(a.solve_seconds >= 0.0);
}

TEST_CASE("unknown problems and bad scales are rejected") {
    CHECK_THROWS_AS(gs::run_bench("nosuch"), gs::DomainError);
    CHECK_THROWS_AS(gs::run_bench("uniform1d", -1.0), gs::DomainError);
}

TEST_CASE("the CSV report gets one header and appended rows") {
    fs::path path = fs::temp_directory_path() /
                    ("gs_bench_test_" + std::to_string(std::random_device{}()) + ".csv");
    gs::BenchRecord record;
    record.problem = "uniform1d";
    record.rows = 10;
    record.cols = 4;
    record.iterations = 3;
    gs::append_bench_csv(path, record);
    gs::append_bench_csv(path, record);
    std::ifstream in(path);
    std::string line;
    int lines = 0, headers = 0;
    while (std::getline(in, line)) {
        ++lines;
        if (line.rfind("problem,", 0) == 0) ++headers;
    }
    CHECK(lines == 3);
    CHECK(headers == 1);
    fs::remove(path);
}

}  // TEST_SUITE
