#pragma once

// Sparse rank over word-size prime fields.
//
// Elimination treats each column as a sparse vector over the row coordinates
// and builds an echelon basis incrementally. Vectors are processed by
// increasing nonzero count; each new pivot is placed on the surviving
// coordinate with the smallest occurrence count in the input (a static
// Markowitz count), ties going to the lowest index. Pivot rows are never
// back-substituted: a pivot row is reduced against every pivot created
// before it, so reducing an incoming vector in pivot-creation order
// terminates.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/errors.hpp"

namespace syzygy {

struct Triplet {
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    std::int64_t value = 0;

    friend bool operator==(const Triplet&, const Triplet&) = default;
};

struct SparseTriplets {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::vector<Triplet> entries;

    std::size_t nnz() const { return entries.size(); }
};

inline SparseTriplets transpose(const SparseTriplets& m) {
    SparseTriplets t{m.cols, m.rows, {}};
    t.entries.reserve(m.entries.size());
    for (const auto& e : m.entries) t.entries.push_back({e.col, e.row, e.value});
    return t;
}

inline SparseTriplets block_diagonal(const SparseTriplets& a, const SparseTriplets& b) {
    SparseTriplets d{a.rows + b.rows, a.cols + b.cols, a.entries};
    for (const auto& e : b.entries) d.entries.push_back({e.row + a.rows, e.col + a.cols, e.value});
    return d;
}

class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
            throw FieldFailure(std::to_string(p) + " is not an odd prime below 2^31");
        }
    }

    std::uint32_t modulus() const { return p_; }

    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % p_);
    }
    std::uint32_t neg(std::uint32_t x) const { return x == 0 ? 0 : p_ - x; }
    std::uint32_t inv(std::uint32_t x) const {
        // Fermat
        std::uint64_t base = x, result = 1;
        for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
            if (e & 1u) result = result * base % p_;
            base = base * base % p_;
        }
        return static_cast<std::uint32_t>(result);
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

inline std::vector<PrimeField> default_primes() { return {PrimeField(32003), PrimeField(65537)}; }

struct RankResult {
    std::uint64_t rank = 0;
    std::uint32_t prime = 0;
    std::uint64_t pivots = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// One sparse vector: (coordinate, value mod p) pairs.
using SparseVector = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Rank of a family of sparse vectors with coordinates in [0, ncoords).
/// Entries must already be reduced mod p; the input is consumed.
inline std::uint64_t echelon_rank(std::vector<SparseVector> vectors, std::uint32_t ncoords,
                                  const PrimeField& F) {
    if (vectors.empty() || ncoords == 0) return 0;

    std::vector<std::uint32_t> count(ncoords, 0);
    for (const auto& v : vectors) {
        for (const auto& [c, x] : v) {
            if (x != 0) ++count[c];
        }
    }

    std::vector<std::uint32_t> order(vectors.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t l, std::uint32_t r) {
        return vectors[l].size() < vectors[r].size();
    });

    constexpr std::uint32_t kNone = UINT32_MAX;
    std::vector<std::uint32_t> pivot_of(ncoords, kNone);
    std::vector<std::uint32_t> pivot_coord;
    std::vector<SparseVector> pivot_rows; // pivot coefficient 1, stored implicitly

    std::vector<std::uint32_t> acc(ncoords, 0);
    std::vector<std::uint32_t> touched;
    std::vector<char> is_touched(ncoords, 0);
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> pending;

    const std::uint32_t p = F.modulus();
    auto touch = [&](std::uint32_t c) {
        if (!is_touched[c]) {
            is_touched[c] = 1;
            touched.push_back(c);
        }
    };

    for (std::uint32_t idx : order) {
        for (const auto& [c, x] : vectors[idx]) {
            if (x == 0) continue;
            touch(c);
            acc[c] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(acc[c]) + x) % p);
            if (pivot_of[c] != kNone) pending.push(pivot_of[c]);
        }
        SparseVector().swap(vectors[idx]);

        while (!pending.empty()) {
            const std::uint32_t pid = pending.top();
            pending.pop();
            const std::uint32_t pc = pivot_coord[pid];
            const std::uint32_t factor = acc[pc];
            if (factor == 0) continue;
            acc[pc] = 0;
            const std::uint64_t negf = p - factor;
            for (const auto& [c, x] : pivot_rows[pid]) {
                touch(c);
                const std::uint32_t before = acc[c];
                acc[c] = static_cast<std::uint32_t>((before + negf * x) % p);
                if (before == 0 && acc[c] != 0 && pivot_of[c] != kNone) pending.push(pivot_of[c]);
            }
        }

        std::uint32_t best = kNone;
        for (std::uint32_t c : touched) {
            if (acc[c] == 0) continue;
            if (best == kNone || count[c] < count[best] || (count[c] == count[best] && c < best)) {
                best = c;
            }
        }
        if (best != kNone) {
            const std::uint32_t scale = F.inv(acc[best]);
            SparseVector row;
            for (std::uint32_t c : touched) {
                if (c != best && acc[c] != 0) row.emplace_back(c, F.mul(acc[c], scale));
            }
            std::sort(row.begin(), row.end());
            pivot_of[best] = static_cast<std::uint32_t>(pivot_rows.size());
            pivot_coord.push_back(best);
            pivot_rows.push_back(std::move(row));
        }
        for (std::uint32_t c : touched) {
            acc[c] = 0;
            is_touched[c] = 0;
        }
        touched.clear();
    }
    return pivot_rows.size();
}

/// Rank of a sparse matrix over F_p. Deterministic given (matrix, p).
inline RankResult rank(const SparseTriplets& m, const PrimeField& F) {
    const auto start = std::chrono::steady_clock::now();

    // compact the row indices that actually occur
    std::vector<std::uint64_t> used;
    used.reserve(m.entries.size());
    for (const auto& e : m.entries) used.push_back(e.row);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    std::vector<std::uint64_t> cols;
    cols.reserve(m.entries.size());
    for (const auto& e : m.entries) cols.push_back(e.col);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

    std::vector<SparseVector> vectors(cols.size());
    for (const auto& e : m.entries) {
        const auto c = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), e.col) - cols.begin());
        const auto r = static_cast<std::uint32_t>(std::lower_bound(used.begin(), used.end(), e.row) - used.begin());
        vectors[c].emplace_back(r, F.reduce(e.value));
    }
    // merge duplicate coordinates within a column
    for (auto& v : vectors) {
        std::sort(v.begin(), v.end());
        SparseVector merged;
        for (const auto& [c, x] : v) {
            if (!merged.empty() && merged.back().first == c) {
                merged.back().second = static_cast<std::uint32_t>(
                    (static_cast<std::uint64_t>(merged.back().second) + x) % F.modulus());
            } else {
                merged.emplace_back(c, x);
            }
        }
        std::erase_if(merged, [](const auto& px) { return px.second == 0; });
        v = std::move(merged);
    }

    RankResult res;
    res.prime = F.modulus();
    res.rank = echelon_rank(std::move(vectors), static_cast<std::uint32_t>(used.size()), F);
    res.pivots = res.rank;
    res.elapsed = std::chrono::steady_clock::now() - start;
    return res;
}

struct CertifiedRank {
    std::uint64_t rank = 0;
    bool agree = true;
    std::vector<RankResult> per_prime;
};

/// Rank over several primes. The maximum is reported since rank mod p never
/// exceeds the rational rank; disagreement flags an unlucky prime.
inline CertifiedRank rank_certified(const SparseTriplets& m, std::span<const PrimeField> primes) {
    if (primes.size() < 2) throw FieldFailure("rank_certified needs at least two primes");
    CertifiedRank out;
    for (const auto& F : primes) {
        out.per_prime.push_back(rank(m, F));
        out.rank = std::max(out.rank, out.per_prime.back().rank);
    }
    for (const auto& r : out.per_prime) out.agree = out.agree && r.rank == out.per_prime.front().rank;
    return out;
}

} // namespace syzygy
