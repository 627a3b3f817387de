#include "asdlab/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "asdlab/errors.hpp"

namespace asdlab {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

std::string CacheKey::filename() const {
    return form_id + "-p" + std::to_string(p) + "-B" +
           std::to_string(precision) + "-N" + std::to_string(trunc) +
           ".series";
}

SeriesCache::SeriesCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string SeriesCache::path_for(const CacheKey& key) const {
    return dir_ + "/" + key.filename();
}

std::optional<Series<PadicCoeffRing>> SeriesCache::load(
    const CacheKey& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;

    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    std::istringstream hs(header);
    long p = 0, trunc = 0;
    int b = 0;
    std::string form_id, checksum;
    if (!(hs >> p >> b >> trunc >> form_id >> checksum)) return std::nullopt;
    if (p != key.p || b != key.precision || trunc != key.trunc ||
        form_id != key.form_id)
        return std::nullopt;

    std::ostringstream rest;
    rest << in.rdbuf();
    std::string payload = rest.str();
    if (hex64(fnv1a64(payload)) != checksum) return std::nullopt;

    std::istringstream ps(payload);
    long offset = 0;
    if (!(ps >> offset)) return std::nullopt;
    if (offset > trunc) return std::nullopt;

    PadicCoeffRing ring(p, b);
    std::vector<PadicCoeffRing::Elem> coeffs;
    coeffs.reserve(static_cast<size_t>(trunc - offset));
    mpz_class x;
    std::string word;
    for (long n = offset; n < trunc; ++n) {
        if (!(ps >> word)) return std::nullopt;
        if (mpz_set_str(x.get_mpz_t(), word.c_str(), 10) != 0)
            return std::nullopt;
        coeffs.push_back(ring.from_mpz(x));
    }
    return Series<PadicCoeffRing>(ring, offset, std::move(coeffs));
}

void SeriesCache::store(const CacheKey& key,
                        const Series<PadicCoeffRing>& f) const {
    if (!enabled()) return;
    if (f.ring().prime() != key.p || f.ring().precision() != key.precision ||
        f.trunc() != key.trunc)
        throw ConfigError("series cache: key does not describe the series");

    std::ostringstream payload;
    payload << f.offset() << "\n";
    for (auto c : f.data())
        payload << f.ring().to_mpz(c).get_str() << "\n";
    std::string body = payload.str();

    std::string final_path = path_for(key);
    std::string tmp_path =
        final_path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp_path, std::ios::trunc);
        if (!out)
            throw ConfigError("series cache: cannot write " + tmp_path);
        out << key.p << " " << key.precision << " " << key.trunc << " "
            << key.form_id << " " << hex64(fnv1a64(body)) << "\n";
        out << body;
        if (!out)
            throw ConfigError("series cache: short write to " + tmp_path);
    }
    std::filesystem::rename(tmp_path, final_path);
}

std::string resolve_cache_dir(const std::string& flag_value) {
    if (const char* env = std::getenv("ASDLAB_CACHE")) return env;
    return flag_value;
}

} // namespace asdlab
