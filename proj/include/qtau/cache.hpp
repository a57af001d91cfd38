#pragma once

#include "qtau/partitions.hpp"
#include "qtau/poly.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace qtau {

// Persistent store for computed Q^Mac polynomials, keyed by
// (partition, weight cap).  On disk: one JSON-lines file per cap plus an
// index.json carrying an FNV-1a hash per entry; corrupt lines are detected
// and treated as misses.  Writes are serialized; reads of loaded data are
// lock-free copies.  With an empty directory path the store is
// memory-only (still deduplicates within the process).
class QCache {
public:
    explicit QCache(std::string dir = "");
    ~QCache();

    QCache(const QCache&) = delete;
    QCache& operator=(const QCache&) = delete;

    std::optional<PolyQ> get(const StrictPartition& lambda, int cap);
    void put(const StrictPartition& lambda, int cap, const PolyQ& poly);

    // Rewrites the cap files (sorted, deduplicated) and the index.
    void flush();

    const std::string& directory() const { return dir_; }
    long hits() const { return hits_; }
    long misses() const { return misses_; }

    static std::string key_of(const StrictPartition& lambda, int cap);

private:
    void load_cap_file(int cap);

    std::string dir_;
    std::mutex mu_;
    std::map<std::string, PolyQ> mem_;
    std::map<int, bool> loaded_caps_;
    std::map<std::string, std::uint64_t> index_;  // key -> line hash
    bool dirty_ = false;
    long hits_ = 0;
    long misses_ = 0;
};

}  // namespace qtau
