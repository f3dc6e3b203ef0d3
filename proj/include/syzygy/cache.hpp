#pragma once

// Rank cache: one line per (model, bundle, i, j, prime)
//   variety;bundle;i;j;prime;dim;rank;version
// in <dir>/ranks.csv. Records are buffered and merged into the file on
// flush(), which rewrites a temp file and renames it over the old one.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <unistd.h>

#include "syzygy/betti.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/version.hpp"

namespace syzygy {

struct CacheRecord {
    std::string variety;
    std::string bundle;
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::uint32_t prime = 0;
    std::uint64_t dim = 0;
    std::uint64_t rank = 0;
    std::string version{kVersion};

    std::string line() const {
        return variety + ";" + bundle + ";" + std::to_string(i) + ";" + std::to_string(j) + ";" +
               std::to_string(prime) + ";" + std::to_string(dim) + ";" + std::to_string(rank) + ";" + version;
    }

    static CacheRecord parse(const std::string& line) {
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string part; std::getline(ss, part, ';');) f.push_back(part);
        if (f.size() != 8) throw ParseError("cache line needs 8 fields: " + line);
        try {
            CacheRecord c;
            c.variety = f[0];
            c.bundle = f[1];
            c.i = std::stoll(f[2]);
            c.j = std::stoll(f[3]);
            c.prime = static_cast<std::uint32_t>(std::stoul(f[4]));
            c.dim = std::stoull(f[5]);
            c.rank = std::stoull(f[6]);
            c.version = f[7];
            return c;
        } catch (const std::logic_error&) {
            throw ParseError("bad number in cache line: " + line);
        }
    }
};

class RankCache {
public:
    using Key = std::tuple<std::string, std::string, std::int64_t, std::int64_t, std::uint32_t>;

    explicit RankCache(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
        load();
    }

    /// Directory from the flag, then SYZYGY_CACHE_DIR; empty if neither.
    static std::optional<std::filesystem::path> resolve_dir(const std::string& flag) {
        if (!flag.empty()) return std::filesystem::path(flag);
        if (const char* env = std::getenv("SYZYGY_CACHE_DIR"); env != nullptr && *env != '\0') {
            return std::filesystem::path(env);
        }
        return std::nullopt;
    }

    std::filesystem::path file() const { return dir_ / "ranks.csv"; }

    std::optional<std::uint64_t> lookup(const std::string& variety, const std::string& bundle, std::int64_t i,
                                        std::int64_t j, std::uint32_t prime) const {
        std::lock_guard lock(mu_);
        auto it = records_.find({variety, bundle, i, j, prime});
        if (it == records_.end()) return std::nullopt;
        return it->second.rank;
    }

    void record(CacheRecord rec) {
        std::lock_guard lock(mu_);
        Key k{rec.variety, rec.bundle, rec.i, rec.j, rec.prime};
        if (records_.contains(k)) return;
        records_.emplace(k, rec);
        pending_.push_back(std::move(rec));
    }

    std::size_t size() const {
        std::lock_guard lock(mu_);
        return records_.size();
    }

    /// Appends buffered records: existing file + new lines -> temp -> rename.
    void flush() {
        std::lock_guard lock(mu_);
        if (pending_.empty()) return;
        std::string existing;
        if (std::ifstream in(file(), std::ios::binary); in) {
            std::stringstream buf;
            buf << in.rdbuf();
            existing = buf.str();
            if (!existing.empty() && existing.back() != '\n') existing += '\n';
        }
        const auto tmp = dir_ / ("ranks.csv.tmp." + std::to_string(::getpid()));
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw Error("cannot write cache file " + tmp.string());
            out << existing;
            for (const auto& r : pending_) out << r.line() << '\n';
            if (!out.flush()) throw Error("cannot write cache file " + tmp.string());
        }
        std::filesystem::rename(tmp, file());
        pending_.clear();
    }

    /// Hooks for compute_table keyed on this model and bundle.
    RankHooks hooks(const Variety& X, const DivisorClass& D) {
        const std::string v = X.tag();
        const std::string b = bundle_tag(X, D);
        RankHooks h;
        h.lookup = [this, v, b](std::int64_t i, std::int64_t j, std::uint32_t p) { return lookup(v, b, i, j, p); };
        h.store = [this, v, b](std::int64_t i, std::int64_t j, std::uint32_t p, std::uint64_t dim, std::uint64_t rank) {
            record({v, b, i, j, p, dim, rank, std::string(kVersion)});
        };
        return h;
    }

private:
    void load() {
        std::ifstream in(file());
        if (!in) return;
        std::size_t lineno = 0;
        for (std::string line; std::getline(in, line);) {
            ++lineno;
            if (line.empty()) continue;
            CacheRecord rec;
            try {
                rec = CacheRecord::parse(line);
            } catch (const ParseError& e) {
                throw ParseError(file().string() + ":" + std::to_string(lineno) + ": " + e.what());
            }
            if (rec.version != kVersion) continue;
            records_.emplace(Key{rec.variety, rec.bundle, rec.i, rec.j, rec.prime}, rec);
        }
    }

    std::filesystem::path dir_;
    mutable std::mutex mu_;
    std::map<Key, CacheRecord> records_;
    std::vector<CacheRecord> pending_;
};

} // namespace syzygy
