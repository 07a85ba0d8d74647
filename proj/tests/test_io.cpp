#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "pdeg/errors.hpp"
#include "pdeg/families.hpp"
#include "pdeg/io.hpp"

using namespace pdeg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("pdeg-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("table files round trip") {
    TempDir dir;
    FiniteGroup g = make_dihedral(12);
    write_table_file(g, dir.file("d12.json"));
    FiniteGroup back = load_group_file(dir.file("d12.json"));
    CHECK(back.order() == 12);
    CHECK(back.canonical_hash() == g.canonical_hash());
}

TEST_CASE("generator files round trip") {
    TempDir dir;
    write_generators_file(3, {{1, 2, 0}, {1, 0, 2}}, dir.file("s3.json"));
    FiniteGroup back = load_group_file(dir.file("s3.json"));
    CHECK(back.order() == 6);
    CHECK(back.canonical_hash() == make_symmetric(3).canonical_hash());
}

TEST_CASE("malformed group files are rejected with ParseError") {
    TempDir dir;
    auto write = [&](const std::string& name, const std::string& body) {
        std::ofstream(dir.file(name)) << body;
        return dir.file(name);
    };
    CHECK_THROWS_AS(load_group_file(dir.file("missing.json")), Error);
    CHECK_THROWS_AS(load_group_file(write("garbage.json", "not json")), Error);
    CHECK_THROWS_AS(load_group_file(write("unknown.json",
                                          R"({"order":1,"table":[[0]],"extra":true})")),
                    Error);
    CHECK_THROWS_AS(load_group_file(write("mismatch.json",
                                          R"({"order":3,"table":[[0,1],[1,0]]})")),
                    Error);
    CHECK_THROWS_AS(load_group_file(write("badgen.json",
                                          R"({"degree":3,"generators":[[0,0,1]]})")),
                    Error);
    // order cap applies while closing generators
    write_generators_file(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, dir.file("s5.json"));
    CHECK_THROWS_AS(load_group_file(dir.file("s5.json"), 100), Error);
}

TEST_CASE("group files work through the spec parser") {
    TempDir dir;
    write_table_file(make_cyclic(7), dir.file("c7.json"));
    FiniteGroup g = build_group(parse_spec("file:" + dir.file("c7.json")));
    CHECK(g.order() == 7);
    FiniteGroup prod = build_group(parse_spec("C:2xfile:" + dir.file("c7.json")));
    CHECK(prod.order() == 14);
}

TEST_CASE("lattice cache round trip") {
    TempDir dir;
    CacheConfig config{dir.file("cache"), false};
    FiniteGroup g = make_dihedral(16);
    CHECK_FALSE(load_cached_lattice(g, config).has_value());

    SubgroupLattice lattice = enumerate_subgroups(g);
    store_cached_lattice(g, lattice, config, "D:16");
    auto loaded = load_cached_lattice(g, config);
    REQUIRE(loaded.has_value());
    CHECK(loaded->subgroups == lattice.subgroups);
    CHECK(loaded->hasse_edges == lattice.hasse_edges);

    auto entries = list_cache(config.directory);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].hash == g.canonical_hash());
    CHECK(entries[0].spec == "D:16");
    CHECK(entries[0].order == 16);
    CHECK(entries[0].lattice_size == lattice.size());

    // a different group misses
    CHECK_FALSE(load_cached_lattice(make_dihedral(20), config).has_value());

    CHECK(clear_cache(config.directory) == 1);
    CHECK(list_cache(config.directory).empty());
}

TEST_CASE("corrupt cache entries are skipped with a warning, not fatal") {
    TempDir dir;
    CacheConfig config{dir.file("cache"), false};
    FiniteGroup g = make_quaternion(16);
    SubgroupLattice lattice = enumerate_subgroups(g);
    store_cached_lattice(g, lattice, config, "Q:16");

    // truncate the entry in place
    auto entries = list_cache(config.directory);
    REQUIRE(entries.size() == 1);
    std::ofstream(entries[0].file, std::ios::trunc) << "{broken";

    std::string warning;
    CHECK_FALSE(load_cached_lattice(g, config, &warning).has_value());
    CHECK_FALSE(warning.empty());
}

TEST_CASE("revalidation rejects tampered Hasse data; trust mode does not") {
    TempDir dir;
    CacheConfig config{dir.file("cache"), false};
    FiniteGroup g = make_dihedral(8);
    SubgroupLattice lattice = enumerate_subgroups(g);
    store_cached_lattice(g, lattice, config, "D:8");

    auto entries = list_cache(config.directory);
    REQUIRE(entries.size() == 1);
    nlohmann::json doc;
    {
        std::ifstream in(entries[0].file);
        in >> doc;
    }
    doc["hasse"] = nlohmann::json::array();
    std::ofstream(entries[0].file, std::ios::trunc) << doc.dump();

    std::string warning;
    CHECK_FALSE(load_cached_lattice(g, config, &warning).has_value());
    CHECK_FALSE(warning.empty());

    // --trust-cache skips the comparison; the edges are recomputed anyway
    CacheConfig trusting{config.directory, true};
    auto loaded = load_cached_lattice(g, trusting);
    REQUIRE(loaded.has_value());
    CHECK(loaded->hasse_edges == lattice.hasse_edges);
}

TEST_CASE("empty cache directory disables the cache") {
    CacheConfig config{"", false};
    FiniteGroup g = make_cyclic(6);
    CHECK_FALSE(load_cached_lattice(g, config).has_value());
    store_cached_lattice(g, enumerate_subgroups(g), config); // no-op, no throw
}

TEST_CASE("default cache directory honours the environment") {
    ::setenv("PDEG_CACHE_DIR", "/tmp/pdeg-env-test", 1);
    CHECK(default_cache_dir() == "/tmp/pdeg-env-test");
    ::unsetenv("PDEG_CACHE_DIR");
    CHECK(default_cache_dir() != "/tmp/pdeg-env-test");
}
