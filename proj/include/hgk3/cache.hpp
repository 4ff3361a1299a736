#pragma once
/// @file cache.hpp
/// @brief Persistent point-count cache: a single append-only JSON-lines file
///        with per-line checksums, safe to merge across parallel runs.
///        Duplicate keys must agree (divergence is a hard error) so a warm
///        cache can never change a result, only speed it up.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>

#include "hgk3/errors.hpp"

namespace hgk3 {

/// Version stamp recorded with every cache line.
const char* version_string();

/// FNV-1a 64-bit hash (the per-line checksum).
std::uint64_t fnv1a64(const std::string& s);

/// Identity of one exhaustive count: which surface/curve family, over which
/// field size q, at which rendered parameter.
struct CacheKey {
    std::string family;
    std::int64_t q = 0;
    std::string param;

    friend bool operator<(const CacheKey& x, const CacheKey& y) {
        return std::tie(x.family, x.q, x.param) < std::tie(y.family, y.q, y.param);
    }
    friend bool operator==(const CacheKey& x, const CacheKey& y) {
        return x.family == y.family && x.q == y.q && x.param == y.param;
    }
};

/// Append-only count cache, optionally backed by a JSON-lines file.
///
/// File format, one record per line:
///   {"count":N,"family":"...","param":"...","q":Q,"sum":"<fnv1a64 hex>","ts":T,"ver":"..."}
/// where "sum" is the checksum of the same object serialized without the
/// "sum" field.  Loading verifies every checksum (CacheCorruption) and
/// cross-checks duplicate keys (CacheDivergence).
class CountCache {
public:
    /// In-memory cache with no backing file.
    CountCache() = default;
    /// Load (or lazily create) the backing file.
    explicit CountCache(std::string path);

    bool lookup(const CacheKey& key, std::int64_t& count) const;
    /// Insert, appending to the backing file when the key is new.
    /// Throws CacheDivergence if the key exists with a different count.
    void record(const CacheKey& key, std::int64_t count);

    std::size_t size() const { return entries_.size(); }
    const std::string& path() const { return path_; }
    std::int64_t hits() const { return hits_; }

    /// Count via the cache: lookup, else invoke `compute` and record.
    template <class F>
    std::int64_t count_or_compute(const CacheKey& key, F&& compute) {
        std::int64_t n;
        if (lookup(key, n)) {
            ++hits_;
            return n;
        }
        n = compute();
        record(key, n);
        return n;
    }

private:
    std::string path_;
    std::map<CacheKey, std::int64_t> entries_;
    std::int64_t hits_ = 0;

    void load();
    void append_line(const CacheKey& key, std::int64_t count) const;
};

} // namespace hgk3
