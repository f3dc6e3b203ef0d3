#pragma once

// Koszul complexes  /\^i V (x) R_j  -->  /\^{i-1} V (x) R_{j+1}  for the section
// ring R = (+)_j H^0(jD) of a toric model, V = H^0(D).
//
// Basis conventions (frozen, cached ranks depend on them):
//  * wedges e_S, S a strictly increasing subset of basis indices of V, are
//    ranked colexicographically;
//  * the flat index of e_S (x) m is rank(S) * dim R_j + index(m);
//  * d(e_S (x) m) = sum_t (-1)^t e_{S \ s_t} (x) s_t m, t the 0-based position
//    of s_t in S.
// The differential preserves the torus multidegree (sum of all lattice points
// involved), so it splits into independent blocks.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syzygy/errors.hpp"
#include "syzygy/exactla.hpp"
#include "syzygy/parallel.hpp"
#include "syzygy/variety.hpp"

namespace syzygy {

// --- exterior algebra indexing ------------------------------------------------

/// Pascal triangle up to n = 64; binom(n, k) for k > n is 0.
class BinomialTable {
public:
    static constexpr std::uint32_t kMax = 64;

    static const BinomialTable& instance() {
        static const BinomialTable table;
        return table;
    }
    std::uint64_t operator()(std::uint32_t n, std::uint32_t k) const {
        return (n > kMax || k > kMax) ? binomial(n, k) : c_[n][k];
    }

private:
    BinomialTable() {
        for (std::uint32_t n = 0; n <= kMax; ++n) {
            c_[n][0] = 1;
            for (std::uint32_t k = 1; k <= kMax; ++k) {
                c_[n][k] = (n == 0) ? 0 : c_[n - 1][k - 1] + c_[n - 1][k];
            }
        }
    }
    std::uint64_t c_[kMax + 1][kMax + 1]{};
};

struct WedgeIndex {
    std::vector<std::uint32_t> subset;
    std::uint64_t rank = 0;

    friend bool operator==(const WedgeIndex&, const WedgeIndex&) = default;
};

inline std::uint64_t colex_rank(std::span<const std::uint32_t> subset) {
    const auto& C = BinomialTable::instance();
    std::uint64_t r = 0;
    for (std::uint32_t t = 0; t < subset.size(); ++t) r += C(subset[t], t + 1);
    return r;
}

/// Inverse of colex_rank for subsets of size out.size().
inline void colex_unrank(std::uint64_t rank, std::span<std::uint32_t> out) {
    const auto& C = BinomialTable::instance();
    std::uint32_t hi = BinomialTable::kMax;
    for (std::uint32_t t = static_cast<std::uint32_t>(out.size()); t-- > 0;) {
        std::uint32_t s = t;
        // largest s < hi with C(s, t+1) <= rank
        std::uint32_t lo_s = t, hi_s = hi; // C(lo_s, t+1) = 0 <= rank
        while (hi_s - lo_s > 1) {
            const std::uint32_t mid = lo_s + (hi_s - lo_s) / 2;
            if (C(mid, t + 1) <= rank) lo_s = mid;
            else hi_s = mid;
        }
        s = lo_s;
        out[t] = s;
        rank -= C(s, t + 1);
        hi = s;
    }
}

/// Advances a subset of {0..dimV-1} to its colex successor; false past the end.
inline bool colex_next(std::vector<std::uint32_t>& s, std::uint32_t dimV) {
    const std::size_t k = s.size();
    for (std::size_t t = 0; t < k; ++t) {
        const std::uint32_t limit = (t + 1 < k) ? s[t + 1] : dimV;
        if (s[t] + 1 < limit) {
            ++s[t];
            for (std::size_t u = 0; u < t; ++u) s[u] = static_cast<std::uint32_t>(u);
            return true;
        }
    }
    return false;
}

/// Calls f(const WedgeIndex&) for every i-subset of {0..dimV-1} in colex order.
template <class F>
void for_each_wedge(std::uint32_t dimV, std::uint32_t i, F&& f) {
    if (i > dimV) return;
    WedgeIndex w;
    w.subset.resize(i);
    for (std::uint32_t t = 0; t < i; ++t) w.subset[t] = t;
    w.rank = 0;
    do {
        f(static_cast<const WedgeIndex&>(w));
        ++w.rank;
    } while (colex_next(w.subset, dimV));
}

inline std::vector<WedgeIndex> wedge_enumerate(std::uint32_t dimV, std::uint32_t i) {
    if (dimV == 0) throw DimensionMismatch("wedge_enumerate needs dimV >= 1");
    if (i > dimV) throw DimensionMismatch("wedge degree exceeds dimV");
    std::vector<WedgeIndex> out;
    out.reserve(BinomialTable::instance()(dimV, i));
    for_each_wedge(dimV, i, [&](const WedgeIndex& w) { out.push_back(w); });
    return out;
}

// --- configuration ------------------------------------------------------------

struct ComputeConfig {
    std::vector<PrimeField> primes = default_primes();
    /// Guard on the nonzero count of one differential.
    std::uint64_t size_cap = 50'000'000;
    bool override_size_cap = false;
    unsigned jobs = default_jobs();
};

using MultiDegree = LatticePoint;

struct KoszulBlock {
    MultiDegree degree;
    std::vector<std::uint64_t> rows; // global row indices, increasing
    std::vector<std::uint64_t> cols; // global column indices, increasing
    SparseTriplets matrix;           // local indices into rows / cols
};

struct DifferentialRank {
    std::uint64_t domain_dim = 0;
    std::uint64_t nnz = 0;
    std::vector<std::uint64_t> per_prime; // same order as ComputeConfig::primes
    bool capped = false;

    std::uint64_t rank() const {
        return per_prime.empty() ? 0 : *std::max_element(per_prime.begin(), per_prime.end());
    }
    bool agree() const {
        return std::all_of(per_prime.begin(), per_prime.end(),
                           [&](std::uint64_t r) { return r == per_prime.front(); });
    }
};

// --- the complex ------------------------------------------------------------------

class KoszulComplex {
public:
    KoszulComplex(const Variety& X, const DivisorClass& D) : X_(X), D_(D) {
        if (!is_base_point_free(X, D)) throw NotBasePointFree(bundle_tag(X, D) + " on " + X.tag());
        if (!is_ample(X, D)) throw NotAmple(bundle_tag(X, D) + " on " + X.tag());
        V_ = section_basis(X, D);
        if (V_.size() > BinomialTable::kMax) {
            throw SizeCap("h0 = " + std::to_string(V_.size()) + " exceeds the wedge index range");
        }
        const std::int64_t maxcoord = std::max<std::int64_t>({D.a, D.b, 1});
        // room for multidegrees of /\^i V (x) R_j with i + j <= dimV + dimension + 3
        const std::int64_t span = (static_cast<std::int64_t>(V_.size()) + X.dimension() + 4) * maxcoord;
        radix_ = static_cast<std::uint64_t>(span + 1);
        long double cap = 1;
        for (int k = 0; k < X.lattice_rank(); ++k) cap *= static_cast<long double>(radix_);
        if (cap >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
            throw SizeCap("multidegree packing overflows 64 bits for " + bundle_tag(X, D));
        }
        v_keys_.reserve(V_.size());
        for (const auto& p : V_.points) v_keys_.push_back(pack(p));
    }

    const Variety& variety() const { return X_; }
    const DivisorClass& divisor() const { return D_; }
    const MonomialBasis& sections() const { return V_; }
    std::uint32_t dimV() const { return static_cast<std::uint32_t>(V_.size()); }

    /// Basis of R_j = H^0(jD).
    const MonomialBasis& graded_piece(std::int64_t j) { return piece(j).basis; }

    std::uint64_t chain_dim(std::int64_t i, std::int64_t j) {
        if (i < 0 || j < 0 || i > dimV()) return 0;
        return BinomialTable::instance()(dimV(), static_cast<std::uint32_t>(i)) * piece(j).basis.size();
    }

    /// Nonzero count of d_{i,j}: every column has exactly i entries.
    std::uint64_t differential_nnz(std::int64_t i, std::int64_t j) {
        return i < 1 ? 0 : chain_dim(i, j) * static_cast<std::uint64_t>(i);
    }

    /// Unblocked matrix of d_{i,j}.
    SparseTriplets differential(std::int64_t i, std::int64_t j, const ComputeConfig& cfg = {}) {
        if (i < 1 || j < 0) throw DimensionMismatch("differential needs i >= 1, j >= 0");
        const std::uint64_t nnz = differential_nnz(i, j);
        if (!cfg.override_size_cap && nnz > cfg.size_cap) {
            throw SizeCap("d_{" + std::to_string(i) + "," + std::to_string(j) + "} has " +
                          std::to_string(nnz) + " nonzeros, cap " + std::to_string(cfg.size_cap));
        }
        SparseTriplets m;
        m.rows = chain_dim(i - 1, j + 1);
        m.cols = chain_dim(i, j);
        m.entries.reserve(nnz);
        const auto& src = piece(j);
        const auto& dst = piece(j + 1);
        const std::uint64_t nsrc = src.basis.size();
        const auto ui = static_cast<std::uint32_t>(i);
        if (ui > dimV()) return m;
        std::vector<std::uint32_t> rest(ui - 1);
        for_each_wedge(dimV(), ui, [&](const WedgeIndex& w) {
            for (std::uint64_t mi = 0; mi < nsrc; ++mi) {
                const std::uint64_t col = w.rank * nsrc + mi;
                for (std::uint32_t t = 0; t < ui; ++t) {
                    m.entries.push_back({row_index(w.subset, t, src.keys[mi], dst, rest), col,
                                         (t % 2 == 0) ? 1 : -1});
                }
            }
        });
        return m;
    }

    /// Multidegree of the flat chain index of /\^i V (x) R_j.
    MultiDegree multidegree(std::int64_t i, std::int64_t j, std::uint64_t flat) {
        const auto& pc = piece(j);
        std::vector<std::uint32_t> s(static_cast<std::size_t>(i));
        colex_unrank(flat / pc.basis.size(), s);
        std::uint64_t key = pc.keys[flat % pc.basis.size()];
        for (auto v : s) key += v_keys_[v];
        return unpack(key);
    }

    /// Partition of rows and columns of d_{i,j} by multidegree, each with its
    /// block matrix. Blocks come in increasing packed-multidegree order.
    std::vector<KoszulBlock> multidegree_blocks(std::int64_t i, std::int64_t j) {
        std::vector<KoszulBlock> out;
        if (i < 1 || j < 0) return out;
        std::unordered_map<std::uint64_t, std::size_t> id;
        auto block_for = [&](std::uint64_t key) -> KoszulBlock& {
            auto [it, fresh] = id.try_emplace(key, out.size());
            if (fresh) {
                out.push_back({});
                out.back().degree = unpack(key);
            }
            return out[it->second];
        };
        const auto& src = piece(j);
        const auto& dst = piece(j + 1);
        std::vector<std::uint64_t> col_key;
        if (static_cast<std::uint64_t>(i) <= dimV()) {
            for_each_wedge(dimV(), static_cast<std::uint32_t>(i), [&](const WedgeIndex& w) {
                std::uint64_t wk = 0;
                for (auto s : w.subset) wk += v_keys_[s];
                for (std::size_t mi = 0; mi < src.keys.size(); ++mi) {
                    block_for(wk + src.keys[mi]).cols.push_back(w.rank * src.keys.size() + mi);
                }
            });
        }
        if (static_cast<std::uint64_t>(i - 1) <= dimV()) {
            for_each_wedge(dimV(), static_cast<std::uint32_t>(i - 1), [&](const WedgeIndex& w) {
                std::uint64_t wk = 0;
                for (auto s : w.subset) wk += v_keys_[s];
                for (std::size_t mi = 0; mi < dst.keys.size(); ++mi) {
                    block_for(wk + dst.keys[mi]).rows.push_back(w.rank * dst.keys.size() + mi);
                }
            });
        }
        std::vector<std::pair<std::uint64_t, std::size_t>> order;
        for (const auto& [k, idx] : id) order.emplace_back(k, idx);
        std::sort(order.begin(), order.end());
        std::vector<KoszulBlock> sorted;
        sorted.reserve(out.size());
        for (const auto& [k, idx] : order) sorted.push_back(std::move(out[idx]));

        const auto ui = static_cast<std::uint32_t>(i);
        std::vector<std::uint32_t> s(ui), rest(ui > 0 ? ui - 1 : 0);
        for (auto& b : sorted) {
            std::sort(b.rows.begin(), b.rows.end());
            std::sort(b.cols.begin(), b.cols.end());
            b.matrix.rows = b.rows.size();
            b.matrix.cols = b.cols.size();
            for (std::size_t c = 0; c < b.cols.size(); ++c) {
                colex_unrank(b.cols[c] / src.keys.size(), s);
                const std::uint64_t mkey = src.keys[b.cols[c] % src.keys.size()];
                for (std::uint32_t t = 0; t < ui; ++t) {
                    const std::uint64_t g = row_index(s, t, mkey, dst, rest);
                    const auto r = static_cast<std::uint64_t>(
                        std::lower_bound(b.rows.begin(), b.rows.end(), g) - b.rows.begin());
                    b.matrix.entries.push_back({r, c, (t % 2 == 0) ? 1 : -1});
                }
            }
        }
        return sorted;
    }

    /// Rank of d_{i,j} over every configured prime, computed block by block.
    /// An absent map (i < 1, j < 0, or empty domain) has rank 0.
    DifferentialRank differential_rank(std::int64_t i, std::int64_t j, const ComputeConfig& cfg) {
        DifferentialRank out;
        out.per_prime.assign(cfg.primes.size(), 0);
        if (i < 1 || j < 0 || static_cast<std::uint64_t>(i) > dimV()) return out;
        out.domain_dim = chain_dim(i, j);
        out.nnz = differential_nnz(i, j);
        if (out.domain_dim == 0) return out;
        if (!cfg.override_size_cap && out.nnz > cfg.size_cap) {
            out.capped = true;
            return out;
        }

        const auto& src = piece(j);
        const auto& dst = piece(j + 1);
        const std::uint64_t nsrc = src.keys.size();
        const auto ui = static_cast<std::uint32_t>(i);

        // bucket columns by multidegree
        std::unordered_map<std::uint64_t, std::uint32_t> id;
        std::vector<std::uint64_t> block_key;
        std::vector<std::vector<std::uint64_t>> block_cols;
        for_each_wedge(dimV(), ui, [&](const WedgeIndex& w) {
            std::uint64_t wk = 0;
            for (auto s : w.subset) wk += v_keys_[s];
            for (std::uint64_t mi = 0; mi < nsrc; ++mi) {
                const std::uint64_t key = wk + src.keys[mi];
                auto [it, fresh] = id.try_emplace(key, static_cast<std::uint32_t>(block_key.size()));
                if (fresh) {
                    block_key.push_back(key);
                    block_cols.emplace_back();
                }
                block_cols[it->second].push_back(w.rank * nsrc + mi);
            }
        });
        std::vector<std::uint32_t> order(block_key.size());
        for (std::uint32_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t l, std::uint32_t r) { return block_key[l] < block_key[r]; });

        // largest blocks first for load balance; results are summed so the
        // schedule does not affect the output
        std::stable_sort(order.begin(), order.end(), [&](std::uint32_t l, std::uint32_t r) {
            return block_cols[l].size() > block_cols[r].size();
        });

        std::vector<std::vector<std::uint64_t>> ranks(order.size());
        parallel_for(order.size(), cfg.jobs, [&](std::size_t k) {
            const auto& cols = block_cols[order[k]];
            std::vector<std::uint32_t> s(ui), rest(ui - 1);
            std::unordered_map<std::uint64_t, std::uint32_t> local;
            local.reserve(cols.size() * 2);
            // signed coordinates: (local row, t parity)
            std::vector<std::vector<std::pair<std::uint32_t, bool>>> shape(cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                colex_unrank(cols[c] / nsrc, s);
                const std::uint64_t mkey = src.keys[cols[c] % nsrc];
                shape[c].reserve(ui);
                for (std::uint32_t t = 0; t < ui; ++t) {
                    const std::uint64_t g = row_index(s, t, mkey, dst, rest);
                    auto [it, fresh] = local.try_emplace(g, static_cast<std::uint32_t>(local.size()));
                    shape[c].emplace_back(it->second, t % 2 == 1);
                }
            }
            ranks[k].resize(cfg.primes.size());
            for (std::size_t pi = 0; pi < cfg.primes.size(); ++pi) {
                const auto& F = cfg.primes[pi];
                std::vector<SparseVector> vecs(shape.size());
                for (std::size_t c = 0; c < shape.size(); ++c) {
                    vecs[c].reserve(shape[c].size());
                    for (const auto& [r, odd] : shape[c]) vecs[c].emplace_back(r, odd ? F.modulus() - 1 : 1u);
                    std::sort(vecs[c].begin(), vecs[c].end());
                }
                ranks[k][pi] = echelon_rank(std::move(vecs), static_cast<std::uint32_t>(local.size()), F);
            }
        });
        for (const auto& rk : ranks) {
            for (std::size_t pi = 0; pi < rk.size(); ++pi) out.per_prime[pi] += rk[pi];
        }
        return out;
    }

    std::uint64_t pack(const LatticePoint& p) const {
        std::uint64_t key = 0;
        for (auto v : p) key = key * radix_ + static_cast<std::uint64_t>(v);
        return key;
    }
    MultiDegree unpack(std::uint64_t key) const {
        MultiDegree p(static_cast<std::size_t>(X_.lattice_rank()));
        for (std::size_t k = p.size(); k-- > 0;) {
            p[k] = static_cast<std::int32_t>(key % radix_);
            key /= radix_;
        }
        return p;
    }

private:
    struct Piece {
        MonomialBasis basis;
        std::vector<std::uint64_t> keys;
        std::unordered_map<std::uint64_t, std::uint32_t> index;
    };

    const Piece& piece(std::int64_t j) {
        if (j < 0) throw DimensionMismatch("negative weight");
        while (pieces_.size() <= static_cast<std::size_t>(j)) {
            Piece pc;
            pc.basis = section_basis(X_, D_ * static_cast<std::int64_t>(pieces_.size()));
            pc.keys.reserve(pc.basis.size());
            for (std::uint32_t k = 0; k < pc.basis.size(); ++k) {
                pc.keys.push_back(pack(pc.basis.points[k]));
                pc.index.emplace(pc.keys.back(), k);
            }
            pieces_.push_back(std::move(pc));
        }
        return pieces_[static_cast<std::size_t>(j)];
    }

    // Global row of e_{S \ s_t} (x) s_t m in /\^{i-1} V (x) R_{j+1}.
    std::uint64_t row_index(std::span<const std::uint32_t> S, std::uint32_t t, std::uint64_t mkey,
                            const Piece& dst, std::vector<std::uint32_t>& rest) const {
        std::size_t w = 0;
        for (std::uint32_t u = 0; u < S.size(); ++u) {
            if (u != t) rest[w++] = S[u];
        }
        const auto it = dst.index.find(mkey + v_keys_[S[t]]);
        if (it == dst.index.end()) throw DimensionMismatch("product left the section basis");
        return colex_rank(rest) * dst.keys.size() + it->second;
    }

    Variety X_;
    DivisorClass D_;
    MonomialBasis V_;
    std::vector<std::uint64_t> v_keys_;
    std::uint64_t radix_ = 0;
    std::deque<Piece> pieces_; // references stay valid while growing
};

/// dim K_{i,j} = dim(/\^i V (x) R_j) - rank d_{i,j} - rank d_{i+1,j-1}, using the
/// maximum rank over the configured primes.
inline std::uint64_t koszul_dimension(KoszulComplex& K, std::int64_t i, std::int64_t j,
                                      const ComputeConfig& cfg = {}) {
    if (i < 0 || j < 0) return 0;
    const std::uint64_t dim = K.chain_dim(i, j);
    if (dim == 0) return 0;
    const auto out = K.differential_rank(i, j, cfg);
    const auto in = K.differential_rank(i + 1, j - 1, cfg);
    if (out.capped || in.capped) {
        throw SizeCap("K_{" + std::to_string(i) + "," + std::to_string(j) + "} needs a capped differential");
    }
    return dim - out.rank() - in.rank();
}

inline std::uint64_t koszul_dimension(const Variety& X, const DivisorClass& D, std::int64_t i,
                                      std::int64_t j, const ComputeConfig& cfg = {}) {
    KoszulComplex K(X, D);
    return koszul_dimension(K, i, j, cfg);
}

} // namespace syzygy
