#pragma once

// Closed-form (M_q) bounds and criteria, the delta conjecture, and a verifier
// that scores computed Betti tables against them. Every bound is a sufficient
// condition unless stated as an equivalence.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "syzygy/betti.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/variety.hpp"

namespace syzygy {

using Rational = boost::rational<std::int64_t>;

struct BoundReport {
    std::string id;
    std::string label;
    std::vector<std::pair<std::string, std::string>> hypotheses;
    bool applicable = true;
    std::optional<std::int64_t> min_ell;  // guaranteed threshold, when the result is one
    std::optional<std::int64_t> weak_ell; // (m_q) threshold where it differs from (M_q)
    std::optional<bool> verdict;
    std::string clause;
    std::vector<std::string> notes;

    BoundReport& hyp(std::string k, std::string v) {
        hypotheses.emplace_back(std::move(k), std::move(v));
        return *this;
    }
    BoundReport& hyp(std::string k, std::int64_t v) { return hyp(std::move(k), std::to_string(v)); }
    BoundReport& hyp(std::string k, const Rational& v) {
        return hyp(std::move(k), v.denominator() == 1
                                     ? std::to_string(v.numerator())
                                     : std::to_string(v.numerator()) + "/" + std::to_string(v.denominator()));
    }
    BoundReport& not_applicable(std::string why) {
        applicable = false;
        min_ell.reset();
        weak_ell.reset();
        verdict.reset();
        clause = std::move(why);
        return *this;
    }
};

inline std::string to_string(const Rational& v) {
    if (v.denominator() == 1) return std::to_string(v.numerator());
    return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

// --- integer helpers ------------------------------------------------------------------

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }
inline std::int64_t ceil(const Rational& v) { return ceil_div(v.numerator(), v.denominator()); }

inline std::int64_t ell_ceil(std::int64_t q, std::int64_t n) {
    if (n <= 1) throw DimensionTooSmall("ell_ceil needs n >= 2, got n = " + std::to_string(n));
    return ceil_div(q + 1, n - 1);
}
inline std::int64_t ell_floor(std::int64_t q, std::int64_t n) {
    if (n <= 1) throw DimensionTooSmall("ell_floor needs n >= 2, got n = " + std::to_string(n));
    return floor_div(q + 1, n - 1);
}

// --- multiples and adjoints --------------------------------------------------------------

/// L = lB: (m_q) for l >= ceil((q - n + regK)/(n-1)), (M_q) additionally needs l >= rho.
inline BoundReport predict_multiple(std::int64_t n, std::int64_t q, std::int64_t regK, std::int64_t rho) {
    BoundReport rep;
    rep.id = "cm";
    rep.label = "multiple line bundles";
    rep.hyp("n", n).hyp("q", q).hyp("reg_B(K)", regK).hyp("rho", rho);
    if (n <= 1) throw DimensionTooSmall("predict_multiple needs n >= 2");
    if (regK > n + 1) throw HypothesisViolation("reg_B(K) <= n+1 is required, got " + std::to_string(regK));
    if (rho < 0) throw HypothesisViolation("rho must be non-negative");
    const std::int64_t raw = ceil_div(q - n + regK, n - 1);
    const std::int64_t weak = std::max<std::int64_t>(raw, 1);
    if (weak != raw) rep.notes.push_back("threshold clamped to l >= 1");
    rep.weak_ell = weak;
    rep.min_ell = std::max(rho, weak);
    rep.clause = "l >= max(rho, ceil((q-n+reg_B(K))/(n-1)))";
    if (regK == n + 1) rep.notes.push_back("reg_B(K) = n+1: threshold equals ell_ceil = " + std::to_string(ell_ceil(q, n)));
    return rep;
}

inline BoundReport predict_m2_surface(std::int64_t LB, std::int64_t B2, std::int64_t h0B) {
    BoundReport rep;
    rep.id = "m2-surface";
    rep.label = "property (m_2) on surfaces";
    rep.hyp("L.B", LB).hyp("B^2", B2).hyp("h0(B)", h0B);
    if (LB > 2 * B2) {
        rep.verdict = true;
        rep.clause = "(L.B) > 2(B^2)";
    } else if (LB == 2 * B2 && h0B >= 4) {
        rep.verdict = true;
        rep.clause = "(L.B) = 2(B^2) and h0(B) >= 4";
    } else {
        rep.verdict = false;
        rep.clause = "neither (L.B) > 2(B^2) nor equality with h0(B) >= 4";
    }
    return rep;
}

struct NefData {
    std::int64_t n = 2;
    Rational d{1};                       // dB - K nef
    std::optional<std::int64_t> B2;      // (B^2) on surfaces
    std::optional<std::int64_t> Bn;      // (B^n)
    std::optional<std::int64_t> twist;   // ((2d-1)B - 2K) . Lambda
    std::optional<std::int64_t> h0_lambda;
};

inline BoundReport predict_adjoint_nef(const NefData& data, std::int64_t q) {
    BoundReport rep;
    rep.id = "adjoint-nef";
    rep.label = "adjoint bundles K + lB, K nef";
    rep.hyp("n", data.n).hyp("d", data.d).hyp("q", q);
    if (data.B2) rep.hyp("B^2", *data.B2);
    if (data.d < 1) throw HypothesisViolation("d >= 1 is required");
    if (data.n < 2) throw DimensionTooSmall("predict_adjoint_nef needs n >= 2");
    const std::int64_t dc = ceil(data.d);
    if (data.n == 2) {
        if (data.B2) {
            if (*data.B2 < 2) return rep.not_applicable("the (B^2)-refined bound needs (B^2) >= 2");
            rep.min_ell = std::max(dc + 2, 2 + floor_div(2 * q + 1, *data.B2));
            rep.clause = "l >= max(d+2, 2+floor((2q+1)/(B^2)))";
        } else {
            rep.min_ell = std::max(dc + 2, q + 2);
            rep.clause = "l >= max(d+2, q+2)";
        }
    } else {
        rep.min_ell = std::max(dc + data.n, ell_floor(q, data.n));
        rep.clause = "l >= max(d+n, ell_floor)";
    }
    return rep;
}

inline BoundReport enriques_bound(std::int64_t q, std::optional<std::int64_t> B2) {
    BoundReport rep;
    rep.id = B2 ? "enriques" : "enriques-ample";
    rep.label = "Enriques surfaces";
    rep.hyp("q", q);
    if (q < 2) throw HypothesisViolation("q >= 2 is required");
    if (!B2) {
        rep.min_ell = 2 * q - 2;
        rep.clause = "B ample: l' >= 2q-2";
        return rep;
    }
    rep.hyp("B^2", *B2);
    if (*B2 < 6) return rep.not_applicable("(B^2) >= 6 fails");
    rep.min_ell = q - 1;
    rep.clause = "l, l' >= q-1";
    return rep;
}

inline BoundReport abelian_bound(std::int64_t q, std::optional<std::int64_t> B2) {
    BoundReport rep;
    rep.id = B2 ? "abelian" : "abelian-ample";
    rep.label = "abelian and bielliptic surfaces";
    rep.hyp("q", q);
    if (q < 2) throw HypothesisViolation("q >= 2 is required");
    if (!B2) {
        rep.min_ell = 2 * q - 2;
        rep.clause = "B ample: l >= 2q-2";
        return rep;
    }
    rep.hyp("B^2", *B2);
    if (*B2 < 5) return rep.not_applicable("(B^2) >= 5 fails");
    rep.min_ell = q - 1;
    rep.clause = "l, l' >= q-1 >= 1";
    return rep;
}

/// Normal generation of K + lB on a surface with nef canonical class.
/// `twist` is ((2d-1)B - 2K).Lambda; Lambda = K + B.
inline BoundReport appendix_normal_generation(const NefData& data) {
    BoundReport rep;
    rep.id = "appendix-ng";
    rep.label = "normal generation, K nef surfaces";
    rep.hyp("d", data.d);
    if (data.twist) rep.hyp("((2d-1)B-2K).Lambda", *data.twist);
    if (data.h0_lambda) rep.hyp("h0(Lambda)", *data.h0_lambda);
    if (data.d < 1) throw HypothesisViolation("d >= 1 is required");
    const std::int64_t dc = ceil(data.d);
    const bool strict = data.twist && *data.twist > 0;
    const bool border = data.twist && *data.twist >= 0 && data.h0_lambda && *data.h0_lambda >= 4;
    if (strict || border) {
        rep.min_ell = dc + 1;
        rep.clause = strict ? "((2d-1)B-2K).Lambda > 0: l >= d+1" : "((2d-1)B-2K).Lambda >= 0, h0(Lambda) >= 4: l >= d+1";
    } else {
        rep.min_ell = dc + 2;
        rep.clause = "(dB-K).Lambda >= 0: l >= d+2";
    }
    return rep;
}

// --- Kodaira dimension -infinity ------------------------------------------------------------

struct RationalFlags {
    bool plane_curve = false; // -K|_C embeds C as a plane curve of degree q+1
    bool g1q = false;         // -K|_C is a g^1_q
};

inline BoundReport rational_criterion(std::int64_t KdotL, std::int64_t q, std::int64_t gon_max,
                                      RationalFlags flags = {}, std::optional<std::int64_t> genus = std::nullopt) {
    BoundReport rep;
    rep.id = "rational";
    rep.label = "rational surfaces";
    rep.hyp("-K.L", KdotL).hyp("q", q).hyp("gon_max", gon_max);
    if (genus) rep.hyp("g", *genus);
    if (q < 2) return rep.not_applicable("q >= 2 is required");
    if (genus && *genus < 1) return rep.not_applicable("curves in |L| have genus 0");
    if (KdotL < q) return rep.not_applicable("-K.L < q is outside the theorem");
    if (KdotL >= q + 2) {
        rep.verdict = q <= gon_max;
        rep.clause = "case (1): (M_q) iff q <= gon_max";
    } else if (KdotL == q + 1) {
        rep.hyp("plane-curve flag", flags.plane_curve ? "set" : "unset");
        const bool gon = q >= gon_max;
        rep.verdict = !(gon || flags.plane_curve);
        rep.clause = gon ? "case (2)(i): q >= gon_max" : flags.plane_curve ? "case (2)(ii): plane curve of degree q+1"
                                                                            : "case (2): neither exception";
    } else {
        if (q < 3) return rep.not_applicable("case (3) needs q >= 3");
        rep.hyp("g1q flag", flags.g1q ? "set" : "unset");
        const bool gon = q >= gon_max;
        rep.verdict = !(gon || flags.g1q);
        rep.clause = gon ? "case (3)(i): q >= gon_max" : flags.g1q ? "case (3)(ii): -K|_C is a g^1_q"
                                                                     : "case (3): neither exception";
    }
    if (KdotL >= q + 2) {
        const std::int64_t k = q - 2;
        rep.notes.push_back("del Pezzo, -K.L >= k+4 with k = " + std::to_string(k) +
                            ": (M_q) iff K+L birationally " + std::to_string(k) +
                            "-very ample iff birationally " + std::to_string(k) +
                            "-spanned iff every smooth C in |L| has gon(C) >= " + std::to_string(k + 2));
    }
    return rep;
}

struct FanoData {
    std::int64_t n = 3;
    std::int64_t lambda = 2;
    std::int64_t Bn = 0;
    std::int64_t gon_max = 0;
};

inline BoundReport fano_criterion(const FanoData& data, std::int64_t q) {
    BoundReport rep;
    rep.id = "fano";
    rep.label = "Fano varieties of index >= n-1";
    rep.hyp("n", data.n).hyp("lambda", data.lambda).hyp("B^n", data.Bn).hyp("gon_max", data.gon_max).hyp("q", q);
    if (data.n < 3) throw DimensionTooSmall("fano_criterion needs n >= 3");
    if (data.lambda < data.n - 1) throw HypothesisViolation("index lambda >= n-1 is required");
    const Rational need(q - data.n + 4, data.lambda - data.n + 2);
    const bool range = q <= (data.n - 2) + data.gon_max;
    const bool floor3 = data.Bn >= 3;
    const bool ratio = Rational(data.Bn) >= need;
    rep.verdict = range && floor3 && ratio;
    rep.notes.push_back("(q-n+4)/(lambda-n+2) = " + to_string(need));
    if (!range) rep.clause = "q > (n-2)+gon_max";
    else if (!floor3) rep.clause = "(B^n) < 3";
    else if (!ratio) rep.clause = "(B^n) < (q-n+4)/(lambda-n+2)";
    else rep.clause = "q <= (n-2)+gon_max and (B^n) >= max(3, (q-n+4)/(lambda-n+2))";
    return rep;
}

struct RuledData {
    std::int64_t n = 2;
    std::int64_t g = 0;
    std::int64_t e = 0;
    Rational mu_minus{0};
    std::int64_t a = 0;
    std::int64_t b = 0;

    std::int64_t k_L() const {
        return static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(n + a - 1), static_cast<std::uint64_t>(a))) - 1;
    }
};

inline BoundReport ruled_mq_bound(const RuledData& data, std::int64_t q) {
    BoundReport rep;
    rep.id = "ruled";
    rep.label = "ruled varieties";
    rep.hyp("n", data.n).hyp("g", data.g).hyp("e", data.e).hyp("mu-", data.mu_minus);
    rep.hyp("a", data.a).hyp("b", data.b).hyp("q", q);
    if (data.n < 2) throw DimensionTooSmall("ruled_mq_bound needs n >= 2");
    if (data.g < 0 || data.a < 0) throw HypothesisViolation("g >= 0 and a >= 0 are required");
    const std::int64_t kL = data.k_L();
    rep.hyp("k_L", kL);
    if (q < data.n || q > data.n + kL - 1) {
        return rep.not_applicable("q outside [n, n+k_L-1] = [" + std::to_string(data.n) + ", " +
                                  std::to_string(data.n + kL - 1) + "]");
    }
    const std::int64_t lc = ell_ceil(q, data.n);
    const Rational slope = Rational(data.b) + Rational(data.a) * data.mu_minus;
    const bool c0 = slope >= Rational(2 * data.g + 1);
    const bool c1 = data.a >= lc;
    const bool c2 = slope + Rational(1 - data.g) >= Rational(lc);
    rep.verdict = c0 && c1 && c2;
    rep.notes.push_back("ell_ceil = " + std::to_string(lc));
    if (!c0) rep.clause = "b + a mu- < 2g+1";
    else if (!c1) rep.clause = "a < ell_ceil";
    else if (!c2) rep.clause = "b + a mu- + 1 - g < ell_ceil";
    else rep.clause = "all conditions hold";
    return rep;
}

inline BoundReport butler_multiple(std::int64_t t, std::int64_t n, std::int64_t q,
                                   std::optional<std::int64_t> a = std::nullopt) {
    BoundReport rep;
    rep.id = "butler-multiple";
    rep.label = "sums of ample bundles on ruled varieties";
    rep.hyp("t", t).hyp("n", n).hyp("q", q);
    if (t < 1) throw HypothesisViolation("t >= 1 is required");
    if (a) {
        rep.hyp("a", *a);
        const auto cap = n + static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(n + *a - 1),
                                                                static_cast<std::uint64_t>(*a))) - 2;
        if (q > cap) return rep.not_applicable("q > n + C(n+a-1, a) - 2 = " + std::to_string(cap));
    }
    const std::int64_t lc = ell_ceil(q, n);
    const bool sharp = Rational(t, n) >= Rational(lc);
    const bool uniform = t >= 2 * q + 2;
    rep.verdict = sharp || uniform;
    rep.notes.push_back(std::string("t/n >= ell_ceil (") + std::to_string(lc) + "): " + (sharp ? "yes" : "no"));
    rep.notes.push_back(std::string("t >= 2q+2 (") + std::to_string(2 * q + 2) + "): " + (uniform ? "yes" : "no"));
    rep.clause = sharp ? "t/n >= ell_ceil" : uniform ? "t >= 2q+2" : "neither form holds";
    return rep;
}

inline BoundReport butler_adjoint(std::int64_t t, std::int64_t n, std::int64_t q, std::int64_t e, std::int64_t g,
                                  std::optional<std::int64_t> a = std::nullopt) {
    BoundReport rep;
    rep.id = "butler-adjoint";
    rep.label = "adjoint sums of ample bundles on ruled varieties";
    rep.hyp("t", t).hyp("n", n).hyp("q", q).hyp("e", e).hyp("g", g);
    if (t < 1) throw HypothesisViolation("t >= 1 is required");
    if (a) {
        rep.hyp("a", *a);
        const auto cap = n + static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(n + *a - 1),
                                                                static_cast<std::uint64_t>(*a))) - 2;
        if (q > cap) return rep.not_applicable("q > n + C(n+a-1, a) - 2 = " + std::to_string(cap));
    }
    const std::int64_t extra = std::max<std::int64_t>(1, e + 1 - g);
    const std::int64_t lc = ell_ceil(q, n);
    const bool sharp = Rational(t, n) >= Rational(lc + extra);
    const bool uniform = t >= 2 * q + 1 + extra;
    rep.verdict = sharp || uniform;
    rep.notes.push_back(std::string("t/n >= ell_ceil + max(1, e+1-g) (") + std::to_string(lc + extra) +
                        "): " + (sharp ? "yes" : "no"));
    rep.notes.push_back(std::string("t >= 2q+1+max(1, e+1-g) (") + std::to_string(2 * q + 1 + extra) +
                        "): " + (uniform ? "yes" : "no"));
    rep.clause = sharp ? "t/n >= ell_ceil + max(1, e+1-g)" : uniform ? "t >= 2q+1+max(1, e+1-g)" : "neither form holds";
    return rep;
}

// --- gonality and the delta conjecture ---------------------------------------------------------

/// Maximal gonality of smooth curves in |D| on P^2 or F_e. F_0 uses min(a, b).
inline std::int64_t gon_max(const Variety& X, const DivisorClass& D) {
    if (!X.is_surface()) throw DimensionMismatch("gon_max needs a surface, got " + X.tag());
    if (h0(X, D) == 0) throw EmptySystem("|" + bundle_tag(X, D) + "| on " + X.tag());
    if (!is_base_point_free(X, D)) throw NotBasePointFree(bundle_tag(X, D) + " on " + X.tag());
    if (X.is_projective_space()) return D.a - 1;
    if (X.parameter() == 0) return std::min(D.a, D.b);
    return D.a;
}

struct DeltaPrediction {
    std::int64_t h0_adjoint = 0; // h0(K + L)
    std::int64_t gon = 0;
    std::int64_t delta = 0;       // h0(K+L) - gon + 1
    std::int64_t p_max = 0;       // (r-1) - gon - delta
    bool hypothesis = true;       // -K.L >= gon + 2
    std::optional<std::int64_t> closed_delta; // F_0 only
    std::optional<std::int64_t> closed_p_max;
    std::vector<std::string> notes;
};

inline DeltaPrediction conjecture_delta(const Variety& X, const DivisorClass& D) {
    if (!X.is_surface()) throw DimensionMismatch("conjecture_delta needs a surface");
    DeltaPrediction out;
    const auto K = canonical_class(X);
    out.h0_adjoint = static_cast<std::int64_t>(h0(X, K + D));
    out.gon = gon_max(X, D);
    out.delta = out.h0_adjoint - out.gon + 1;
    const std::int64_t r = static_cast<std::int64_t>(h0(X, D)) - 1;
    out.p_max = (r - 1) - out.gon - out.delta;
    out.hypothesis = -intersect(X, K, D) >= out.gon + 2;
    if (!out.hypothesis) out.notes.push_back("-K.L >= gon_max + 2 fails; prediction outside the conjecture");
    if (X.is_hirzebruch() && X.parameter() == 0) {
        // closed forms are stated for a <= b
        const std::int64_t a = std::min(D.a, D.b), b = std::max(D.a, D.b);
        out.closed_delta = (a - 1) * (b - 2);
        out.closed_p_max = 2 * a + 2 * b - 3;
        if (D.a > D.b) out.notes.push_back("a > b: closed forms evaluated at (b, a)");
    }
    return out;
}

// --- regularity on the toric models ----------------------------------------------------------------

/// reg_B(O(F)) for F a combination of K and B on P^n or F_e with B ample.
/// Such bundles have at most top cohomology, h^n(F + mB) = h0(K - F - mB).
inline std::int64_t toric_regularity(const Variety& X, const DivisorClass& F, const DivisorClass& B) {
    const std::int64_t n = X.dimension();
    const auto K = canonical_class(X);
    for (std::int64_t k = -64; k <= 64; ++k) {
        if (h0(X, K - F - B * (k - n)) == 0) return k;
    }
    throw NonPolynomialHilbert("regularity search did not terminate");
}

/// Primitive class B with D = l B, or nullopt.
inline std::optional<std::pair<DivisorClass, std::int64_t>> primitive_ample(const Variety& X, const DivisorClass& D) {
    if (X.is_projective_space()) {
        if (D.a < 1) return std::nullopt;
        return std::make_pair(DivisorClass::degree(1), D.a);
    }
    const std::int64_t g = std::gcd(D.a, D.b);
    if (g == 0) return std::nullopt;
    const DivisorClass B{D.a / g, D.b / g};
    if (!is_ample(X, B)) return std::nullopt;
    return std::make_pair(B, g);
}

// --- verifier -----------------------------------------------------------------------------------

struct ClaimCheck {
    std::string claim;
    std::string predicted;
    std::string observed;
    std::string verdict; // "pass", "fail", "info", "n/a"
    bool violation = false;
};

inline std::string yes_no(bool v) { return v ? "yes" : "no"; }

inline std::vector<ClaimCheck> verify_instances(const BettiTable& t, const Variety& X, const DivisorClass& D) {
    if (!t.certified) throw UncertifiedTable(bundle_tag(X, D) + " on " + X.tag());
    std::vector<ClaimCheck> out;
    const auto prof = profile(t);
    const std::int64_t n = X.dimension();
    const std::int64_t r = t.r;

    // K_{p,1}: (m_q) for q <= n-1
    if (const std::int64_t top = std::min(n - 1, r - 1); top >= 1) {
        bool ok = true;
        for (std::int64_t q = 1; q <= top; ++q) ok = ok && satisfies_mq(t, q);
        ClaimCheck c{"kp1", "(m_q) for q <= " + std::to_string(top), yes_no(ok), ok ? "pass" : "fail", !ok};
        out.push_back(c);
    }

    // multiples of the primitive class
    if (n >= 2) {
        if (const auto prim = primitive_ample(X, D)) {
            const auto [B, ell] = *prim;
            const std::int64_t rho = toric_regularity(X, DivisorClass{}, B);
            const std::int64_t regK = toric_regularity(X, canonical_class(X), B);
            std::int64_t guaranteed = 0;
            for (std::int64_t q = 1; q <= r - 1; ++q) {
                if (*predict_multiple(n, q, regK, rho).min_ell <= ell) guaranteed = q;
            }
            ClaimCheck c;
            c.claim = "cm";
            c.predicted = "(M_q) for q <= " + std::to_string(guaranteed) + " (l=" + std::to_string(ell) +
                          ", rho=" + std::to_string(rho) + ", reg_B(K)=" + std::to_string(regK) + ")";
            c.observed = "q_max=" + std::to_string(prof.q_max);
            c.violation = prof.q_max < guaranteed;
            c.verdict = guaranteed == 0 ? "n/a" : c.violation ? "fail" : "pass";
            out.push_back(c);

            if (X.is_surface() && r - 1 >= 2) {
                const auto h0B = static_cast<std::int64_t>(h0(X, B));
                const bool g2 = ell >= std::max<std::int64_t>(rho, 3) || (ell >= std::max<std::int64_t>(rho, 2) && h0B >= 4);
                const bool obs = satisfies_Mq(t, 2);
                ClaimCheck m{"m2-surface", g2 ? "(M_2)" : "no guarantee", yes_no(obs), "n/a", false};
                if (g2) {
                    m.violation = !obs;
                    m.verdict = obs ? "pass" : "fail";
                }
                out.push_back(m);
            }
        }
    }

    if (X.is_surface()) {
        const auto K = canonical_class(X);
        const std::int64_t KdotL = -intersect(X, K, D);
        const std::int64_t gon = gon_max(X, D);
        const std::int64_t genus = genus_in_system(X, D);
        for (std::int64_t q = 2; q <= r - 1; ++q) {
            const auto rep = rational_criterion(KdotL, q, gon, {}, genus);
            ClaimCheck c;
            c.claim = "rational q=" + std::to_string(q);
            const bool obs = satisfies_Mq(t, q);
            c.observed = "(M_" + std::to_string(q) + ") " + yes_no(obs);
            if (!rep.applicable) {
                c.predicted = rep.clause;
                c.verdict = "n/a";
            } else if (KdotL >= q + 2) {
                c.predicted = "(M_" + std::to_string(q) + ") " + yes_no(*rep.verdict) + ", " + rep.clause;
                c.violation = obs != *rep.verdict;
                c.verdict = c.violation ? "fail" : "pass";
            } else if (q >= gon) {
                // cases (2)/(3) are definite when (i) fires
                c.predicted = "(M_" + std::to_string(q) + ") no, " + rep.clause;
                c.violation = obs;
                c.verdict = c.violation ? "fail" : "pass";
            } else {
                c.predicted = "depends on exceptional flags, " + rep.clause;
                c.verdict = "info";
            }
            out.push_back(c);
        }

        const auto pred = conjecture_delta(X, D);
        ClaimCheck c;
        c.claim = "conjecture-delta";
        c.predicted = "delta=" + std::to_string(pred.delta);
        c.observed = "delta=" + std::to_string(prof.delta);
        c.verdict = pred.delta == prof.delta ? "pass" : "info";
        out.push_back(c);
    }
    return out;
}

inline bool has_violation(const std::vector<ClaimCheck>& checks) {
    return std::any_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.violation; });
}

} // namespace syzygy
