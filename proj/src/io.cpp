#include "pdeg/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "pdeg/errors.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace pdeg {

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::CacheError, "cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
    return doc;
}

void write_json_file(const json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::CacheError, "cannot write " + path);
    out << doc.dump(2) << "\n";
}

void reject_unknown_fields(const json& doc, std::initializer_list<const char*> allowed,
                           const std::string& context) {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known)
            throw Error(ErrorKind::ParseError, context + ": unknown field \"" + it.key() + "\"");
    }
}

} // namespace

FiniteGroup load_group_file(const std::string& path, int order_cap) {
    json doc = read_json_file(path);
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, path + ": expected an object");

    if (doc.contains("table")) {
        reject_unknown_fields(doc, {"order", "table"}, path);
        if (!doc.contains("order") || !doc["order"].is_number_integer())
            throw Error(ErrorKind::ParseError, path + ": missing integer \"order\"");
        int order = doc["order"].get<int>();
        auto table = doc["table"].get<std::vector<std::vector<int>>>();
        if (int(table.size()) != order)
            throw Error(ErrorKind::ParseError, path + ": table size does not match order");
        if (order > order_cap) throw Error(ErrorKind::ClosureTooLarge, path + ": order above cap");
        return FiniteGroup::from_table(table);
    }
    if (doc.contains("generators")) {
        reject_unknown_fields(doc, {"degree", "generators"}, path);
        if (!doc.contains("degree") || !doc["degree"].is_number_integer())
            throw Error(ErrorKind::ParseError, path + ": missing integer \"degree\"");
        int degree = doc["degree"].get<int>();
        auto generators = doc["generators"].get<std::vector<Permutation>>();
        return FiniteGroup::from_generators(degree, generators, order_cap);
    }
    throw Error(ErrorKind::ParseError, path + ": expected \"table\" or \"generators\"");
}

void write_table_file(const FiniteGroup& g, const std::string& path) {
    json doc;
    doc["order"] = g.order();
    std::vector<std::vector<int>> table(size_t(g.order()), std::vector<int>(size_t(g.order())));
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) table[size_t(i)][size_t(j)] = g.mul(i, j);
    doc["table"] = table;
    write_json_file(doc, path);
}

void write_generators_file(int degree, const std::vector<Permutation>& generators,
                           const std::string& path) {
    json doc;
    doc["degree"] = degree;
    doc["generators"] = generators;
    write_json_file(doc, path);
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("PDEG_CACHE_DIR")) return env;
    if (const char* home = std::getenv("HOME"))
        return (fs::path(home) / ".cache" / "pdeg").string();
    return ".pdeg-cache";
}

namespace {

std::string cache_path(const FiniteGroup& g, const CacheConfig& config) {
    return (fs::path(config.directory) / (g.canonical_hash() + ".json")).string();
}

} // namespace

std::optional<SubgroupLattice> load_cached_lattice(const FiniteGroup& g,
                                                   const CacheConfig& config,
                                                   std::string* warning) {
    if (config.directory.empty()) return std::nullopt;
    std::string path = cache_path(g, config);
    if (!fs::exists(path)) return std::nullopt;
    try {
        json doc = read_json_file(path);
        if (doc.at("order").get<int>() != g.order())
            throw Error(ErrorKind::CacheError, "order mismatch");
        SubgroupLattice lattice;
        lattice.group = &g;
        for (const auto& hex : doc.at("subgroups")) {
            ElementSet s = ElementSet::from_hex(g.order(), hex.get<std::string>());
            if (!config.trust && !g.is_subgroup_set(s))
                throw Error(ErrorKind::CacheError, "cached pattern is not a subgroup");
            lattice.subgroups.push_back(std::move(s));
        }
        for (size_t i = 1; i < lattice.subgroups.size(); ++i)
            if (!(lattice.subgroups[i - 1] < lattice.subgroups[i]))
                throw Error(ErrorKind::CacheError, "cached lattice is not sorted");
        if (lattice.subgroups.empty() || lattice.subgroups.front().count() != 1 ||
            lattice.subgroups.back().count() != g.order())
            throw Error(ErrorKind::CacheError, "cached lattice misses trivial or full subgroup");
        build_lattice_structure(lattice);
        if (!config.trust) {
            auto stored = doc.at("hasse").get<std::vector<std::pair<int, int>>>();
            if (stored != lattice.hasse_edges)
                throw Error(ErrorKind::CacheError, "cached Hasse edges disagree");
        }
        return lattice;
    } catch (const std::exception& e) {
        if (warning) *warning = std::string("ignoring cache entry: ") + e.what();
        return std::nullopt;
    }
}

void store_cached_lattice(const FiniteGroup& g, const SubgroupLattice& lattice,
                          const CacheConfig& config, const std::string& spec_text) {
    if (config.directory.empty()) return;
    std::error_code ec;
    fs::create_directories(config.directory, ec);
    json doc;
    doc["order"] = g.order();
    if (!spec_text.empty()) doc["spec"] = spec_text;
    std::vector<std::string> patterns;
    patterns.reserve(lattice.subgroups.size());
    for (const auto& s : lattice.subgroups) patterns.push_back(s.hex());
    doc["subgroups"] = patterns;
    doc["hasse"] = lattice.hasse_edges;
    write_json_file(doc, cache_path(g, config));
}

std::vector<CacheEntry> list_cache(const std::string& directory) {
    std::vector<CacheEntry> entries;
    if (!fs::is_directory(directory)) return entries;
    for (const auto& item : fs::directory_iterator(directory)) {
        if (item.path().extension() != ".json") continue;
        CacheEntry entry;
        entry.file = item.path().string();
        entry.hash = item.path().stem().string();
        try {
            json doc = read_json_file(entry.file);
            entry.order = doc.value("order", 0);
            entry.spec = doc.value("spec", "");
            entry.lattice_size = int(doc.at("subgroups").size());
        } catch (const std::exception&) {
            entry.order = -1; // corrupt entry, still listed
        }
        entries.push_back(std::move(entry));
    }
    std::sort(entries.begin(), entries.end(),
              [](const CacheEntry& a, const CacheEntry& b) { return a.hash < b.hash; });
    return entries;
}

int clear_cache(const std::string& directory) {
    if (!fs::is_directory(directory)) return 0;
    int removed = 0;
    for (const auto& item : fs::directory_iterator(directory)) {
        if (item.path().extension() != ".json") continue;
        std::error_code ec;
        if (fs::remove(item.path(), ec)) ++removed;
        if (ec) throw Error(ErrorKind::CacheError, "cannot remove " + item.path().string());
    }
    return removed;
}

} // namespace pdeg
