#include "qtau/cache.hpp"

#include "qtau/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace qtau {

namespace {

std::string cap_file_name(int cap) { return "qmac_cap" + std::to_string(cap) + ".jsonl"; }

}  // namespace

QCache::QCache(std::string dir) : dir_(std::move(dir)) {
    if (dir_.empty()) return;
    fs::create_directories(dir_);
    std::ifstream idx(fs::path(dir_) / "index.json");
    if (idx) {
        Json j;
        try {
            idx >> j;
            for (auto it = j.begin(); it != j.end(); ++it)
                index_[it.key()] = std::stoull(it.value().get<std::string>(), nullptr, 16);
        } catch (...) {
            index_.clear();  // unreadable index: behave as a cold cache
        }
    }
}

QCache::~QCache() {
    try {
        flush();
    } catch (...) {
    }
}

std::string QCache::key_of(const StrictPartition& lambda, int cap) {
    return lambda.str() + "|" + std::to_string(cap);
}

void QCache::load_cap_file(int cap) {
    if (loaded_caps_[cap]) return;
    loaded_caps_[cap] = true;
    if (dir_.empty()) return;
    std::ifstream in(fs::path(dir_) / cap_file_name(cap));
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            Json j = Json::parse(line);
            std::string key = j.at("key").get<std::string>();
            auto it = index_.find(key);
            if (it == index_.end() || it->second != fnv1a(line)) continue;  // corrupt or stale
            mem_.insert_or_assign(key, poly_from_json(j));
        } catch (...) {
            continue;  // damaged line: recompute on demand
        }
    }
}

std::optional<PolyQ> QCache::get(const StrictPartition& lambda, int cap) {
    std::lock_guard<std::mutex> lock(mu_);
    load_cap_file(cap);
    auto it = mem_.find(key_of(lambda, cap));
    if (it == mem_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void QCache::put(const StrictPartition& lambda, int cap, const PolyQ& poly) {
    std::lock_guard<std::mutex> lock(mu_);
    std::string key = key_of(lambda, cap);
    if (mem_.emplace(key, poly).second) dirty_ = true;
}

void QCache::flush() {
    std::lock_guard<std::mutex> lock(mu_);
    if (dir_.empty() || !dirty_) return;

    // Group by cap; rewrite each touched file with sorted keys so reruns
    // produce byte-identical cache files.
    std::map<int, std::vector<std::pair<std::string, const PolyQ*>>> by_cap;
    for (const auto& [key, poly] : mem_) by_cap[poly.weight_cap()].push_back({key, &poly});

    index_.clear();
    for (const auto& [cap, entries] : by_cap) {
        fs::path tmp = fs::path(dir_) / (cap_file_name(cap) + ".tmp");
        {
            std::ofstream out(tmp);
            for (const auto& [key, poly] : entries) {
                std::string line = poly_to_json(*poly, key).dump();
                index_[key] = fnv1a(line);
                out << line << "\n";
            }
        }
        fs::rename(tmp, fs::path(dir_) / cap_file_name(cap));
    }

    Json idx = Json::object();
    for (const auto& [key, hash] : index_) {
        std::ostringstream hex;
        hex << std::hex << hash;
        idx[key] = hex.str();
    }
    fs::path tmp = fs::path(dir_) / "index.json.tmp";
    {
        std::ofstream out(tmp);
        out << idx.dump(1) << "\n";
    }
    fs::rename(tmp, fs::path(dir_) / "index.json");
    dirty_ = false;
}

}  // namespace qtau
