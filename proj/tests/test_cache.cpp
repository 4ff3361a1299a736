#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <string>

#include "hgk3/cache.hpp"

using namespace hgk3;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::current_path() / "cache_test_tmp") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

} // namespace

TEST_CASE("fnv1a64 reference vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
    CHECK(version_string() != std::string(""));
}

TEST_CASE("in-memory cache") {
    CountCache cache;
    CacheKey key{"dwork_quartic", 7, "a=3"};
    std::int64_t n = 0;
    CHECK_FALSE(cache.lookup(key, n));

    cache.record(key, 64);
    REQUIRE(cache.lookup(key, n));
    CHECK(n == 64);
    CHECK(cache.size() == 1);

    // re-recording the same value is idempotent; a conflicting one diverges
    cache.record(key, 64);
    CHECK(cache.size() == 1);
    CHECK_THROWS_AS(cache.record(key, 65), CacheDivergence);

    // count_or_compute computes exactly once
    int calls = 0;
    CacheKey other{"dwork_quartic", 11, "a=2"};
    auto compute = [&] { ++calls; return 120LL; };
    CHECK(cache.count_or_compute(other, compute) == 120);
    CHECK(cache.count_or_compute(other, compute) == 120);
    CHECK(calls == 1);
    CHECK(cache.hits() == 1);
}

TEST_CASE("file-backed cache round trip") {
    TempDir tmp;
    std::string path = tmp.file("counts.jsonl");
    {
        CountCache cache(path);
        cache.record({"dwork_quartic", 5, "a=3"}, 64);
        cache.record({"triple_product_sum", 7, "a=2"}, -9);
    }
    {
        CountCache cache(path);
        CHECK(cache.size() == 2);
        std::int64_t n = 0;
        REQUIRE(cache.lookup({"dwork_quartic", 5, "a=3"}, n));
        CHECK(n == 64);
        REQUIRE(cache.lookup({"triple_product_sum", 7, "a=2"}, n));
        CHECK(n == -9);

        // the file is append-only: re-recording known values adds no lines
        std::string before = slurp(path);
        cache.record({"dwork_quartic", 5, "a=3"}, 64);
        CHECK(slurp(path) == before);
        cache.record({"aop_double_sum", 7, "a=2"}, -9);
        CHECK(slurp(path) != before);
    }
    // a missing file is an empty cache, created on first record
    CountCache fresh(tmp.file("new.jsonl"));
    CHECK(fresh.size() == 0);
    fresh.record({"dwork_quartic", 5, "a=2"}, 0);
    CHECK(fs::exists(tmp.file("new.jsonl")));
}

TEST_CASE("corruption is reported with file and line") {
    TempDir tmp;

    // not JSON at all
    std::string p1 = tmp.file("bad1.jsonl");
    std::ofstream(p1) << "this is not json\n";
    CHECK_THROWS_AS(CountCache{p1}, CacheCorruption);
    try {
        CountCache c{p1};
    } catch (const CacheCorruption& e) {
        std::string msg = e.what();
        CHECK(msg.find("bad1.jsonl") != std::string::npos);
        CHECK(msg.find(":1") != std::string::npos);
    }

    // a valid line followed by one with a tampered checksum: the error names line 2
    std::string p2 = tmp.file("bad2.jsonl");
    {
        CountCache seed(tmp.file("seed.jsonl"));
        seed.record({"dwork_quartic", 5, "a=3"}, 64);
        seed.record({"dwork_quartic", 5, "a=4"}, 28);
        std::string text = slurp(tmp.file("seed.jsonl"));
        auto nl = text.find('\n');
        std::string line2 = text.substr(nl + 1);
        auto digit = line2.find_first_of("0123456789", line2.find("\"sum\""));
        line2[digit] = line2[digit] == '9' ? '8' : '9';
        std::ofstream(p2) << text.substr(0, nl + 1) << line2;
    }
    try {
        CountCache c{p2};
        FAIL("tampered checksum was accepted");
    } catch (const CacheCorruption& e) {
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }

    // structurally valid JSON missing a required field
    std::string p3 = tmp.file("bad3.jsonl");
    std::ofstream(p3) << "{\"family\":\"dwork_quartic\",\"param\":\"a=3\",\"q\":5}\n";
    CHECK_THROWS_AS(CountCache{p3}, CacheCorruption);
}

TEST_CASE("divergence across files") {
    TempDir tmp;
    std::string p = tmp.file("conflict.jsonl");
    {
        CountCache cache(p);
        cache.record({"dwork_quartic", 5, "a=3"}, 64);
    }
    // duplicate key with a different count, each line individually well-formed
    {
        CountCache other(tmp.file("other.jsonl"));
        other.record({"dwork_quartic", 5, "a=3"}, 65);
        std::ofstream(p, std::ios::app) << slurp(tmp.file("other.jsonl"));
    }
    CHECK_THROWS_AS(CountCache{p}, CacheDivergence);
}

TEST_CASE("reloaded duplicates of equal value are fine") {
    TempDir tmp;
    std::string p = tmp.file("dup.jsonl");
    {
        CountCache cache(p);
        cache.record({"triple_product_sum", 7, "a=2"}, -9);
    }
    std::string line = slurp(p);
    std::ofstream(p, std::ios::app) << line;
    CountCache cache(p);
    CHECK(cache.size() == 1);
    std::int64_t n = 0;
    REQUIRE(cache.lookup({"triple_product_sum", 7, "a=2"}, n));
    CHECK(n == -9);
}
