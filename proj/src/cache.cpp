#include "hgk3/cache.hpp"

#include <ctime>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hgk3 {

const char* version_string() { return "hgk3 0.1.0"; }

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

/// The record serialized without its checksum field; nlohmann objects
/// serialize with sorted keys, so this rendering is canonical.
std::string payload_string(const CacheKey& key, std::int64_t count, std::int64_t ts,
                           const std::string& ver) {
    nlohmann::json j;
    j["family"] = key.family;
    j["q"] = key.q;
    j["param"] = key.param;
    j["count"] = count;
    j["ts"] = ts;
    j["ver"] = ver;
    return j.dump();
}

} // namespace

CountCache::CountCache(std::string path) : path_(std::move(path)) { load(); }

void CountCache::load() {
    std::ifstream in(path_);
    if (!in.is_open()) return; // lazily created on first record
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        auto corrupt = [&](const std::string& why) {
            std::ostringstream os;
            os << path_ << ":" << lineno << ": " << why;
            return CacheCorruption(os.str());
        };
        if (j.is_discarded()) throw corrupt("unparseable JSON line");
        if (!j.is_object() || !j.contains("family") || !j.contains("q") ||
            !j.contains("param") || !j.contains("count") || !j.contains("ts") ||
            !j.contains("ver") || !j.contains("sum"))
            throw corrupt("missing record field");
        if (!j["family"].is_string() || !j["q"].is_number_integer() ||
            !j["param"].is_string() || !j["count"].is_number_integer() ||
            !j["ts"].is_number_integer() || !j["ver"].is_string() || !j["sum"].is_string())
            throw corrupt("record field has wrong type");
        CacheKey key{j["family"].get<std::string>(), j["q"].get<std::int64_t>(),
                     j["param"].get<std::string>()};
        std::int64_t count = j["count"].get<std::int64_t>();
        std::string payload = payload_string(key, count, j["ts"].get<std::int64_t>(),
                                             j["ver"].get<std::string>());
        if (hex64(fnv1a64(payload)) != j["sum"].get<std::string>())
            throw corrupt("checksum mismatch");
        auto it = entries_.find(key);
        if (it != entries_.end()) {
            if (it->second != count)
                throw CacheDivergence(path_ + ": key '" + key.family + "/q=" +
                                      std::to_string(key.q) + "/" + key.param +
                                      "' recorded with two different counts");
        } else {
            entries_.emplace(key, count);
        }
    }
}

bool CountCache::lookup(const CacheKey& key, std::int64_t& count) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return false;
    count = it->second;
    return true;
}

void CountCache::record(const CacheKey& key, std::int64_t count) {
    auto it = entries_.find(key);
    if (it != entries_.end()) {
        if (it->second != count)
            throw CacheDivergence("key '" + key.family + "/q=" + std::to_string(key.q) + "/" +
                                  key.param + "' already cached with a different count");
        return; // idempotent
    }
    entries_.emplace(key, count);
    if (!path_.empty()) append_line(key, count);
}

void CountCache::append_line(const CacheKey& key, std::int64_t count) const {
    std::int64_t ts = static_cast<std::int64_t>(std::time(nullptr));
    std::string payload = payload_string(key, count, ts, version_string());
    nlohmann::json j = nlohmann::json::parse(payload);
    j["sum"] = hex64(fnv1a64(payload));
    std::ofstream out(path_, std::ios::app);
    if (!out.is_open()) throw CacheCorruption("cannot open cache file for append: " + path_);
    out << j.dump() << "\n";
}

} // namespace hgk3
