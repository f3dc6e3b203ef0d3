#pragma once

// Betti tables of section rings, their certification against the Hilbert
// numerator, and the syzygy properties read off them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/errors.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/variety.hpp"

namespace syzygy {

/// beta(i, j) stores dim K_{i,j} = beta_{i,i+j}. Rows j = 0..j_max, columns
/// i = 0..r. A missing value is a hole left by the size cap.
struct BettiTable {
    Variety variety = Variety::projective(1);
    DivisorClass divisor;
    std::int64_t r = 0;
    std::int64_t j_max = 0;
    std::vector<std::vector<std::optional<std::uint64_t>>> rows; // rows[j][i]
    std::vector<std::uint32_t> primes;
    bool primes_agree = true;
    bool certified = false;

    std::optional<std::uint64_t> entry(std::int64_t i, std::int64_t j) const {
        if (j < 0 || i < 0 || i > r) return 0;
        if (j >= static_cast<std::int64_t>(rows.size())) return 0;
        return rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    /// Holes read as 0; check has_holes() first where it matters.
    std::uint64_t beta(std::int64_t i, std::int64_t j) const { return entry(i, j).value_or(0); }

    bool has_holes() const {
        for (const auto& row : rows) {
            for (const auto& v : row) {
                if (!v) return true;
            }
        }
        return false;
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> holes() const {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            for (std::size_t i = 0; i < rows[j].size(); ++i) {
                if (!rows[j][i]) out.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
            }
        }
        return out;
    }

    /// Projective dimension: largest i with a nonzero entry.
    std::int64_t pd() const {
        std::int64_t best = 0;
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (row[i].value_or(0) != 0) best = std::max(best, static_cast<std::int64_t>(i));
            }
        }
        return best;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Optional rank cache consulted before each differential is reduced.
struct RankHooks {
    std::function<std::optional<std::uint64_t>(std::int64_t i, std::int64_t j, std::uint32_t prime)> lookup;
    std::function<void(std::int64_t i, std::int64_t j, std::uint32_t prime, std::uint64_t dim,
                       std::uint64_t rank)>
        store;
};

/// Row bound of the table. Section rings of ample classes on our toric
/// models are Cohen-Macaulay, so the resolution has length r - n and the
/// last module sits in degree deg N; its weight is deg N - (r - n).
inline std::int64_t table_row_bound(const Variety& X, std::int64_t r, const std::vector<std::int64_t>& numerator) {
    const std::int64_t deg = static_cast<std::int64_t>(numerator.size()) - 1;
    return std::clamp<std::int64_t>(deg - (r - X.dimension()), 0, X.dimension() + 1);
}

inline bool hilbert_certificate(const BettiTable& t, const Variety& X, const DivisorClass& D) {
    if (t.has_holes() || t.beta(0, 0) != 1) return false;
    std::vector<std::int64_t> N;
    try {
        N = hilbert_numerator(X, D);
    } catch (const Error&) {
        return false;
    }
    const std::int64_t top = std::max<std::int64_t>(static_cast<std::int64_t>(N.size()) - 1, t.r + t.j_max);
    for (std::int64_t k = 0; k <= top; ++k) {
        std::int64_t sum = 0;
        for (std::int64_t i = 0; i <= std::min(k, t.r); ++i) {
            const auto b = static_cast<std::int64_t>(t.beta(i, k - i));
            sum += (i % 2 == 0) ? b : -b;
        }
        const std::int64_t want = k < static_cast<std::int64_t>(N.size()) ? N[static_cast<std::size_t>(k)] : 0;
        if (sum != want) return false;
    }
    return true;
}

inline BettiTable compute_table(const Variety& X, const DivisorClass& D, const ComputeConfig& cfg = {},
                                const RankHooks* hooks = nullptr) {
    if (cfg.primes.empty()) throw FieldFailure("no primes configured");
    KoszulComplex K(X, D);
    const auto N = hilbert_numerator(X, D);

    BettiTable t;
    t.variety = X;
    t.divisor = D;
    t.r = static_cast<std::int64_t>(K.dimV()) - 1;
    t.j_max = table_row_bound(X, t.r, N);
    for (const auto& F : cfg.primes) t.primes.push_back(F.modulus());

    // ranks of d_{i,j}; nullopt marks a capped map
    std::map<std::pair<std::int64_t, std::int64_t>, std::optional<std::uint64_t>> ranks;
    auto rank_of = [&](std::int64_t i, std::int64_t j) -> std::optional<std::uint64_t> {
        if (i < 1 || j < 0 || i > t.r + 1) return 0;
        auto it = ranks.find({i, j});
        if (it != ranks.end()) return it->second;

        std::vector<std::uint64_t> per(cfg.primes.size());
        bool all_cached = hooks != nullptr && static_cast<bool>(hooks->lookup);
        for (std::size_t p = 0; all_cached && p < cfg.primes.size(); ++p) {
            const auto hit = hooks->lookup(i, j, cfg.primes[p].modulus());
            if (hit) per[p] = *hit;
            else all_cached = false;
        }
        std::optional<std::uint64_t> result;
        if (!all_cached) {
            const auto dr = K.differential_rank(i, j, cfg);
            if (!dr.capped) {
                per = dr.per_prime;
                if (hooks != nullptr && hooks->store) {
                    for (std::size_t p = 0; p < per.size(); ++p) {
                        hooks->store(i, j, cfg.primes[p].modulus(), dr.domain_dim, per[p]);
                    }
                }
            } else {
                per.clear();
            }
        }
        if (!per.empty()) {
            result = *std::max_element(per.begin(), per.end());
            if (!std::all_of(per.begin(), per.end(), [&](std::uint64_t v) { return v == per.front(); })) {
                t.primes_agree = false;
            }
        }
        ranks.emplace(std::make_pair(i, j), result);
        return result;
    };

    t.rows.assign(static_cast<std::size_t>(t.j_max + 1),
                  std::vector<std::optional<std::uint64_t>>(static_cast<std::size_t>(t.r + 1)));
    for (std::int64_t j = 0; j <= t.j_max; ++j) {
        for (std::int64_t i = 0; i <= t.r; ++i) {
            const std::uint64_t dim = K.chain_dim(i, j);
            std::optional<std::uint64_t> v;
            if (dim == 0) {
                v = 0;
            } else {
                const auto out = rank_of(i, j);
                const auto in = rank_of(i + 1, j - 1);
                if (out && in) v = dim - *out - *in;
            }
            t.rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    }
    t.certified = t.primes_agree && hilbert_certificate(t, X, D);
    return t;
}

// --- properties ---------------------------------------------------------------------

/// (m_q): beta_{i,i+1} = 0 for r - q <= i <= r - 1.
inline bool satisfies_mq(const BettiTable& t, std::int64_t q) {
    if (q < 1 || q > t.r - 1) {
        throw DimensionMismatch("q = " + std::to_string(q) + " outside [1, " + std::to_string(t.r - 1) + "]");
    }
    for (std::int64_t i = t.r - q; i <= t.r - 1; ++i) {
        if (t.beta(i, 1) != 0) return false;
    }
    return true;
}

/// (N_0): K_{0,j} = 0 for j >= 1.
inline bool normally_generated(const BettiTable& t) {
    for (std::int64_t j = 1; j <= t.j_max; ++j) {
        if (t.beta(0, j) != 0) return false;
    }
    return true;
}

inline bool satisfies_Mq(const BettiTable& t, std::int64_t q) { return normally_generated(t) && satisfies_mq(t, q); }

inline bool satisfies_Np(const BettiTable& t, std::int64_t p) {
    if (p < 0) throw DimensionMismatch("p must be non-negative");
    if (!normally_generated(t)) return false;
    for (std::int64_t i = 1; i <= std::min(p, t.r); ++i) {
        for (std::int64_t j = 0; j <= t.j_max; ++j) {
            if (j != 1 && t.beta(i, j) != 0) return false;
        }
    }
    return true;
}

struct SyzygyProfile {
    std::int64_t r = 0;
    std::int64_t pd = 0;
    std::int64_t p_max = 0;
    std::int64_t q_max = 0;
    std::int64_t tug = 0;
    std::int64_t delta = 0;
    std::int64_t j_max = 0;
    bool normally_generated = true;
    /// true when even (M_1) fails and q_max is reported as 0 by convention
    bool q_max_convention = false;

    friend bool operator==(const SyzygyProfile&, const SyzygyProfile&) = default;
};

/// p_max is searched in [0, pd] (N_p is vacuous past the last syzygy module),
/// q_max in [1, r-1].
inline SyzygyProfile profile(const BettiTable& t) {
    if (t.has_holes()) throw SizeCap("profile needs a table without holes");
    if (!t.certified) throw UncertifiedTable("profile needs a certified table");
    SyzygyProfile s;
    s.r = t.r;
    s.pd = t.pd();
    s.normally_generated = normally_generated(t);
    for (std::int64_t p = 0; p <= s.pd; ++p) {
        if (satisfies_Np(t, p)) s.p_max = p;
        else break;
    }
    for (std::int64_t q = 1; q <= t.r - 1; ++q) {
        if (satisfies_Mq(t, q)) s.q_max = q;
        else break;
    }
    s.q_max_convention = t.r >= 2 && s.q_max == 0;
    s.tug = s.p_max - s.q_max;
    s.delta = (t.r - 1) - s.p_max - s.q_max;
    for (std::int64_t j = 0; j <= t.j_max; ++j) {
        for (std::int64_t i = 0; i <= t.r; ++i) {
            if (t.beta(i, j) != 0) s.j_max = j;
        }
    }
    return s;
}

inline std::string tug_verdict(const SyzygyProfile& s) {
    if (s.tug > 0) return "property-(M_q) wins the tug of war";
    if (s.tug < 0) return "property-(N_p) wins the tug of war";
    return "tug of war is tied";
}

} // namespace syzygy
