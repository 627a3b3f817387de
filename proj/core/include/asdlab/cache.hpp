#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "asdlab/series.hpp"

namespace asdlab {

// FNV-1a, 64-bit. Guards cache files against truncation and bit rot; this
// is an integrity check, not an authentication mechanism.
std::uint64_t fnv1a64(const std::string& data);

// A cache entry is keyed by (form id, p, B, N): same form at a different
// precision or truncation is a distinct entry.
struct CacheKey {
    std::string form_id;
    long p = 0;
    int precision = 0;
    long trunc = 0;

    std::string filename() const;
};

// Plain-text series store, one file per entry:
//
//   p B N form-id checksum        (checksum: FNV-1a 64 of the payload, hex)
//   offset
//   one decimal coefficient per line, q^offset through q^{N-1}
//
// Any mismatch -- wrong key fields, bad checksum, short file -- reads as a
// miss, never an error. Writes go through a temp file and an atomic rename,
// so concurrent writers and readers see whole files only.
class SeriesCache {
public:
    SeriesCache() = default; // disabled
    explicit SeriesCache(std::string dir);

    bool enabled() const { return !dir_.empty(); }
    const std::string& dir() const { return dir_; }
    std::string path_for(const CacheKey& key) const;

    std::optional<Series<PadicCoeffRing>> load(const CacheKey& key) const;
    void store(const CacheKey& key, const Series<PadicCoeffRing>& f) const;

private:
    std::string dir_;
};

// Cache directory resolution: the ASDLAB_CACHE environment variable wins
// over the command-line value; empty means no cache.
std::string resolve_cache_dir(const std::string& flag_value);

} // namespace asdlab
