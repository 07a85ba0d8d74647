#pragma once

#include <optional>
#include <string>

#include "pdeg/lattice.hpp"

namespace pdeg {

// Group files are JSON. Cayley-table form: {"order": n, "table": [[...]]}.
// Permutation-generator form: {"degree": n, "generators": [[...], ...]}.
// Unknown fields are rejected.

FiniteGroup load_group_file(const std::string& path, int order_cap = kDefaultOrderCap);
void write_table_file(const FiniteGroup& g, const std::string& path);
void write_generators_file(int degree, const std::vector<Permutation>& generators,
                           const std::string& path);

// --- lattice cache -------------------------------------------------------

struct CacheConfig {
    std::string directory; // empty disables the cache
    bool trust = false;    // skip revalidation of cached subgroups
};

/// Default cache directory: $PDEG_CACHE_DIR, else $HOME/.cache/pdeg.
std::string default_cache_dir();

/// Loads the cached lattice for the group (keyed by canonical hash).
/// Returns nullopt on miss or failed revalidation (stale entries are
/// ignored, not fatal; *warning is set when a corrupt file was skipped).
std::optional<SubgroupLattice> load_cached_lattice(const FiniteGroup& g,
                                                   const CacheConfig& config,
                                                   std::string* warning = nullptr);
void store_cached_lattice(const FiniteGroup& g, const SubgroupLattice& lattice,
                          const CacheConfig& config, const std::string& spec_text = "");

struct CacheEntry {
    std::string file;
    std::string hash;
    std::string spec;
    int order = 0;
    int lattice_size = 0;
};
std::vector<CacheEntry> list_cache(const std::string& directory);
int clear_cache(const std::string& directory); // returns removed count

} // namespace pdeg
