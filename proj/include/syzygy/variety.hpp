#pragma once

// Toric models with monomial section spaces: projective spaces P^n and
// Hirzebruch surfaces F_e. Sections of a line bundle are lattice points of its
// polytope; multiplying sections adds lattice points.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "syzygy/errors.hpp"

namespace syzygy {

enum class ModelKind { ProjectiveSpace, Hirzebruch };

class Variety {
public:
    static Variety projective(int n) {
        if (n < 1) throw DimensionMismatch("P^n requires n >= 1, got " + std::to_string(n));
        return Variety(ModelKind::ProjectiveSpace, n);
    }
    static Variety hirzebruch(int e) {
        if (e < 0) throw DimensionMismatch("F_e requires e >= 0, got " + std::to_string(e));
        return Variety(ModelKind::Hirzebruch, e);
    }

    ModelKind kind() const { return kind_; }
    bool is_projective_space() const { return kind_ == ModelKind::ProjectiveSpace; }
    bool is_hirzebruch() const { return kind_ == ModelKind::Hirzebruch; }

    /// n for P^n, e for F_e.
    int parameter() const { return param_; }
    int dimension() const { return is_projective_space() ? param_ : 2; }
    bool is_surface() const { return dimension() == 2; }

    /// Length of the exponent vectors used for sections.
    int lattice_rank() const { return is_projective_space() ? param_ + 1 : 2; }

    /// "P:<n>" or "F:<e>".
    std::string tag() const {
        return (is_projective_space() ? "P:" : "F:") + std::to_string(param_);
    }

    friend bool operator==(const Variety&, const Variety&) = default;

private:
    Variety(ModelKind k, int p) : kind_(k), param_(p) {}

    ModelKind kind_;
    int param_;
};

/// A class in the Picard lattice. On P^n only `a` is used (the degree, in
/// multiples of H) and `b` stays 0. On F_e the class is a*C0 + b*f.
struct DivisorClass {
    std::int64_t a = 0;
    std::int64_t b = 0;

    static DivisorClass degree(std::int64_t d) { return {d, 0}; }
    static DivisorClass of(std::int64_t a, std::int64_t b) { return {a, b}; }

    DivisorClass operator+(const DivisorClass& o) const { return {a + o.a, b + o.b}; }
    DivisorClass operator-(const DivisorClass& o) const { return {a - o.a, b - o.b}; }
    DivisorClass operator*(std::int64_t k) const { return {a * k, b * k}; }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

inline std::string bundle_tag(const Variety& X, const DivisorClass& D) {
    if (X.is_projective_space()) return std::to_string(D.a);
    return std::to_string(D.a) + "," + std::to_string(D.b);
}

inline bool is_base_point_free(const Variety& X, const DivisorClass& D) {
    if (X.is_projective_space()) return D.a >= 0;
    return D.a >= 0 && D.b >= D.a * X.parameter();
}

inline bool is_ample(const Variety& X, const DivisorClass& D) {
    if (X.is_projective_space()) return D.a >= 1;
    return D.a >= 1 && D.b >= D.a * X.parameter() + 1;
}

/// Exponent vector in Z^{n+1} (P^n) or a point (x, y) in Z^2 (F_e).
using LatticePoint = std::vector<std::int32_t>;

/// Sections of |D| as lattice points, in the frozen order:
///  * P^n: exponent vectors in decreasing lexicographic order (x0^d first);
///  * F_e: points (x, y) in increasing lexicographic order.
struct MonomialBasis {
    std::vector<LatticePoint> points;

    std::size_t size() const { return points.size(); }
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) is C(n - k + i, i) * i, so the division is exact
        r = r * (n - k + i) / i;
    }
    return static_cast<std::uint64_t>(r);
}

inline std::uint64_t h0(const Variety& X, const DivisorClass& D) {
    if (X.is_projective_space()) {
        if (D.a < 0) return 0;
        return binomial(static_cast<std::uint64_t>(X.parameter() + D.a),
                        static_cast<std::uint64_t>(X.parameter()));
    }
    if (D.a < 0) return 0;
    const std::int64_t e = X.parameter();
    std::uint64_t total = 0;
    for (std::int64_t k = 0; k <= D.a; ++k) {
        const std::int64_t top = D.b - k * e;
        if (top >= 0) total += static_cast<std::uint64_t>(top + 1);
    }
    return total;
}

namespace detail {

// All exponent vectors of length `len` summing to `deg`, x0 exponent first and
// descending.
inline void enumerate_exponents(int len, std::int32_t deg, LatticePoint& cur, int pos,
                                std::vector<LatticePoint>& out) {
    if (pos == len - 1) {
        cur[pos] = deg;
        out.push_back(cur);
        return;
    }
    for (std::int32_t v = deg; v >= 0; --v) {
        cur[pos] = v;
        enumerate_exponents(len, deg - v, cur, pos + 1, out);
    }
}

} // namespace detail

inline MonomialBasis section_basis(const Variety& X, const DivisorClass& D) {
    if (!is_base_point_free(X, D)) {
        throw NotBasePointFree("class " + bundle_tag(X, D) + " on " + X.tag());
    }
    MonomialBasis basis;
    if (X.is_projective_space()) {
        LatticePoint cur(static_cast<std::size_t>(X.lattice_rank()), 0);
        detail::enumerate_exponents(X.lattice_rank(), static_cast<std::int32_t>(D.a), cur, 0,
                                    basis.points);
        return basis;
    }
    const std::int64_t e = X.parameter();
    for (std::int64_t x = 0; x <= D.a; ++x) {
        for (std::int64_t y = 0; y <= D.b - e * x; ++y) {
            basis.points.push_back({static_cast<std::int32_t>(x), static_cast<std::int32_t>(y)});
        }
    }
    return basis;
}

/// Section multiplication: componentwise sum of lattice points.
inline LatticePoint multiply(const Variety& X, const LatticePoint& p, const LatticePoint& q) {
    if (p.size() != static_cast<std::size_t>(X.lattice_rank()) || p.size() != q.size()) {
        throw DimensionMismatch("lattice point length does not match " + X.tag());
    }
    LatticePoint r(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) r[k] = p[k] + q[k];
    return r;
}

/// Membership test of a lattice point in the polytope of |D|.
inline bool in_basis(const Variety& X, const DivisorClass& D, const LatticePoint& p) {
    if (p.size() != static_cast<std::size_t>(X.lattice_rank())) return false;
    if (X.is_projective_space()) {
        std::int64_t s = 0;
        for (auto v : p) {
            if (v < 0) return false;
            s += v;
        }
        return s == D.a;
    }
    return p[0] >= 0 && p[0] <= D.a && p[1] >= 0 && p[1] <= D.b - X.parameter() * p[0];
}

inline DivisorClass canonical_class(const Variety& X) {
    if (X.is_projective_space()) return DivisorClass::degree(-(X.parameter() + 1));
    return DivisorClass::of(-2, -2 - X.parameter());
}

/// Intersection pairing on a surface: (H.H) = 1 on P^2; on F_e
/// (C0.C0) = -e, (C0.f) = 1, (f.f) = 0.
inline std::int64_t intersect(const Variety& X, const DivisorClass& D1, const DivisorClass& D2) {
    if (!X.is_surface()) {
        throw DimensionMismatch("intersection pairing needs a surface, got " + X.tag());
    }
    if (X.is_projective_space()) return D1.a * D2.a;
    return D1.a * D2.b + D2.a * D1.b - X.parameter() * D1.a * D2.a;
}

/// Genus of a smooth member of |D| by adjunction.
inline std::int64_t genus_in_system(const Variety& X, const DivisorClass& D) {
    if (!X.is_surface()) throw DimensionMismatch("genus_in_system needs a surface");
    if (h0(X, D) == 0) throw EmptySystem("|" + bundle_tag(X, D) + "| on " + X.tag());
    if (!is_base_point_free(X, D) || D == DivisorClass{}) {
        throw HypothesisViolation("|D| must be base-point-free and nonzero");
    }
    const std::int64_t twice = intersect(X, D, D + canonical_class(X));
    const std::int64_t g = twice / 2 + 1;
    if (g < 0) throw HypothesisViolation("|D| has no irreducible member (reducible fibres)");
    return g;
}

/// Coefficients of N(t) = H(t) (1-t)^{r+1}, where H(t) = sum_k h0(kD) t^k and
/// r = h0(D) - 1. Differencing stops once `dimension + 2` consecutive
/// coefficients vanish; `k_cap` bounds the search (0 picks a default).
inline std::vector<std::int64_t> hilbert_numerator(const Variety& X, const DivisorClass& D,
                                                   std::int64_t k_cap = 0) {
    if (!is_base_point_free(X, D)) throw NotBasePointFree(bundle_tag(X, D) + " on " + X.tag());
    if (!is_ample(X, D)) throw NotAmple(bundle_tag(X, D) + " on " + X.tag());

    const std::int64_t r = static_cast<std::int64_t>(h0(X, D)) - 1;
    const std::int64_t window = X.dimension() + 2;
    if (k_cap <= 0) k_cap = 4 * (r + 2) + 64;

    std::vector<std::int64_t> h; // h0(kD), k = 0, 1, ...
    std::vector<std::int64_t> coeffs;
    std::int64_t zeros = 0;
    for (std::int64_t k = 0; k <= k_cap; ++k) {
        h.push_back(static_cast<std::int64_t>(h0(X, D * k)));
        // (r+1)-fold backward difference of h, with h = 0 at negative indices
        std::int64_t c = 0;
        for (std::int64_t m = 0; m <= std::min(k, r + 1); ++m) {
            const auto binom = static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(r + 1),
                                                                  static_cast<std::uint64_t>(m)));
            c += (m % 2 == 0 ? 1 : -1) * binom * h[static_cast<std::size_t>(k - m)];
        }
        coeffs.push_back(c);
        zeros = (c == 0) ? zeros + 1 : 0;
        if (zeros >= window) {
            coeffs.resize(coeffs.size() - static_cast<std::size_t>(zeros));
            return coeffs;
        }
    }
    throw NonPolynomialHilbert("differences did not stabilise within k <= " +
                               std::to_string(k_cap));
}

} // namespace syzygy
