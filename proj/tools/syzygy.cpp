// syzygy: Betti tables of toric models, syzygy profiles, and the (M_q) bound
// calculators.
//
// Exit codes: 0 certified / ok, 1 error, 2 table complete but uncertified,
// 3 a theorem's guarantee contradicts a computed table.

#include <cstdint>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "syzygy/cache.hpp"
#include "syzygy/io.hpp"
#include "syzygy/theory.hpp"
#include "syzygy/version.hpp"

namespace {

using namespace syzygy;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kUncertified = 2;
constexpr int kViolation = 3;

struct JobOptions {
    std::string variety;
    std::string bundle;
    std::vector<std::uint32_t> primes;
    unsigned jobs = default_jobs();
    std::string format = "text";
    std::string cache_dir;
    std::uint64_t size_cap = ComputeConfig{}.size_cap;
    bool no_cache = false;

    ComputeConfig config() const {
        ComputeConfig cfg;
        if (!primes.empty()) {
            cfg.primes.clear();
            for (auto p : primes) cfg.primes.emplace_back(p);
        }
        cfg.jobs = std::max(1u, jobs);
        cfg.size_cap = size_cap;
        return cfg;
    }

    std::unique_ptr<RankCache> open_cache() const {
        if (no_cache) return nullptr;
        const auto dir = RankCache::resolve_dir(cache_dir);
        if (!dir) return nullptr;
        return std::make_unique<RankCache>(*dir);
    }
};

void add_compute_options(CLI::App* app, JobOptions& o, bool with_model = true) {
    if (with_model) {
        app->add_option("--variety", o.variety, "P:<n> or F:<e>")->required();
        app->add_option("--bundle", o.bundle, "<d> on P^n, <a>,<b> on F_e")->required();
    }
    app->add_option("--prime", o.primes, "prime for modular ranks (repeatable)");
    app->add_option("--jobs", o.jobs, "worker threads");
    app->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app->add_option("--cache-dir", o.cache_dir, "rank cache directory (default $SYZYGY_CACHE_DIR)");
    app->add_option("--size-cap", o.size_cap, "maximum nonzeros per differential");
    app->add_flag("--no-cache", o.no_cache, "ignore the rank cache");
}

BettiTable compute(const JobOptions& o, const Variety& X, const DivisorClass& D, RankCache* cache) {
    const auto cfg = o.config();
    if (cache == nullptr) return compute_table(X, D, cfg);
    const auto hooks = cache->hooks(X, D);
    auto t = compute_table(X, D, cfg, &hooks);
    cache->flush();
    return t;
}

int cmd_betti(const JobOptions& o) {
    const auto X = parse_variety(o.variety);
    const auto D = parse_bundle(X, o.bundle);
    auto cache = o.open_cache();
    const auto t = compute(o, X, D, cache.get());
    if (o.format == "json") std::cout << render_json(t);
    else if (o.format == "csv") std::cout << render_csv(t);
    else std::cout << render_text(t);
    if (t.has_holes()) {
        std::cerr << "size cap left " << t.holes().size() << " holes\n";
        return kError;
    }
    return t.certified ? kOk : kUncertified;
}

int cmd_profile(const JobOptions& o) {
    const auto X = parse_variety(o.variety);
    const auto D = parse_bundle(X, o.bundle);
    auto cache = o.open_cache();
    const auto t = compute(o, X, D, cache.get());
    if (t.has_holes()) throw SizeCap("table has holes; profile refused");
    if (!t.certified) {
        std::cerr << "table is not certified; profile refused\n";
        return kUncertified;
    }
    const auto s = profile(t);
    std::cout << (o.format == "json" ? render_profile_json(s) : render_profile(s));
    return kOk;
}

int cmd_verify(const JobOptions& o) {
    const auto X = parse_variety(o.variety);
    const auto D = parse_bundle(X, o.bundle);
    auto cache = o.open_cache();
    const auto t = compute(o, X, D, cache.get());
    if (t.has_holes()) throw SizeCap("table has holes; verify refused");
    if (!t.certified) {
        std::cerr << "table is not certified; verify refused\n";
        return kUncertified;
    }
    const auto checks = verify_instances(t, X, D);
    for (const auto& c : checks) {
        std::cout << c.verdict << "  " << c.claim << ": predicted " << c.predicted << "; observed " << c.observed
                  << '\n';
    }
    const bool bad = has_violation(checks);
    std::cout << (bad ? "sufficiency violation\n" : "no sufficiency violations\n");
    return bad ? kViolation : kOk;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const auto v = detail::parse_int(s, "range");
        return {v, v};
    }
    return {detail::parse_int(std::string_view(s).substr(0, dots), "range start"),
            detail::parse_int(std::string_view(s).substr(dots + 2), "range end")};
}

struct SweepOptions {
    std::string a = "";
    std::string b = "";
    std::string d = "";
};

int cmd_sweep(const JobOptions& o, const SweepOptions& so) {
    const auto X = parse_variety(o.variety);
    std::vector<DivisorClass> bundles;
    if (X.is_projective_space()) {
        if (so.d.empty()) throw ParseError("sweep on P^n needs --d <lo>..<hi>");
        const auto [lo, hi] = parse_range(so.d);
        for (auto d = lo; d <= hi; ++d) bundles.push_back(DivisorClass::degree(d));
    } else {
        if (so.a.empty() || so.b.empty()) throw ParseError("sweep on F_e needs --a and --b ranges");
        const auto [alo, ahi] = parse_range(so.a);
        const auto [blo, bhi] = parse_range(so.b);
        for (auto a = alo; a <= ahi; ++a) {
            for (auto b = blo; b <= bhi; ++b) bundles.push_back(DivisorClass::of(a, b));
        }
    }
    auto cache = o.open_cache();
    std::cout << "a,b,r,p_max,q_max,delta,predicted_delta,match\n";
    int rc = kOk;
    for (const auto& D : bundles) {
        const std::string a = std::to_string(D.a);
        const std::string b = X.is_projective_space() ? "" : std::to_string(D.b);
        if (!is_ample(X, D)) {
            std::cout << a << ',' << b << ",,,,,,not-ample\n";
            continue;
        }
        std::string predicted;
        if (X.is_surface()) predicted = std::to_string(conjecture_delta(X, D).delta);
        BettiTable t;
        try {
            t = compute(o, X, D, cache.get());
        } catch (const SizeCap&) {
            std::cout << a << ',' << b << ",,hole,hole,hole," << predicted << ",\n";
            continue;
        }
        if (t.has_holes()) {
            std::cout << a << ',' << b << ',' << t.r << ",hole,hole,hole," << predicted << ",\n";
            continue;
        }
        if (!t.certified) {
            std::cout << a << ',' << b << ',' << t.r << ",,,," << predicted << ",uncertified\n";
            rc = kUncertified;
            continue;
        }
        const auto s = profile(t);
        std::cout << a << ',' << b << ',' << t.r << ',' << s.p_max << ',' << s.q_max << ',' << s.delta << ','
                  << predicted << ',';
        if (!predicted.empty()) std::cout << (std::to_string(s.delta) == predicted ? "yes" : "no");
        std::cout << '\n';
    }
    return rc;
}

// --- predict ---------------------------------------------------------------------------------

struct PredictOptions {
    std::string id;
    std::map<std::string, std::string> values;
    bool plane_curve = false;
    bool g1q = false;
};

const std::vector<std::string>& predict_params() {
    static const std::vector<std::string> names{"n",  "q",     "regk", "rho", "lb",       "b2", "h0b",
                                                "d",  "kdotl", "gon",  "genus", "lambda", "bn", "g",
                                                "e",  "mu-minus", "a", "b",   "t",        "twist", "h0-lambda",
                                                "variety", "bundle"};
    return names;
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(detail::parse_int(s, "rational"));
    const auto den = detail::parse_int(std::string_view(s).substr(slash + 1), "denominator");
    if (den == 0) throw ParseError("zero denominator in " + s);
    return Rational(detail::parse_int(std::string_view(s).substr(0, slash), "numerator"), den);
}

class Params {
public:
    explicit Params(const PredictOptions& p) : p_(p) {}

    void need(std::initializer_list<const char*> names) {
        std::string missing;
        for (const char* n : names) {
            if (p_.values.at(n).empty()) missing += std::string(missing.empty() ? "" : ", ") + "--" + n;
        }
        if (!missing.empty()) throw ParseError("predict " + p_.id + " is missing " + missing);
    }
    std::int64_t i(const char* n) const { return detail::parse_int(p_.values.at(n), n); }
    std::optional<std::int64_t> opt(const char* n) const {
        const auto& v = p_.values.at(n);
        if (v.empty()) return std::nullopt;
        return detail::parse_int(v, n);
    }
    Rational rat(const char* n) const { return parse_rational(p_.values.at(n)); }
    const std::string& s(const char* n) const { return p_.values.at(n); }

private:
    const PredictOptions& p_;
};

void print_report(const BoundReport& rep) {
    std::cout << "theorem: " << rep.label << " [" << rep.id << "]\n";
    for (const auto& [k, v] : rep.hypotheses) std::cout << "  " << k << " = " << v << '\n';
    if (!rep.applicable) {
        std::cout << "not applicable: " << rep.clause << '\n';
    } else {
        if (rep.min_ell) std::cout << "l >= " << *rep.min_ell << '\n';
        if (rep.weak_ell && rep.weak_ell != rep.min_ell) std::cout << "(m_q): l >= " << *rep.weak_ell << '\n';
        if (rep.verdict) std::cout << (*rep.verdict ? "satisfied" : "not satisfied") << '\n';
        std::cout << "clause: " << rep.clause << '\n';
    }
    for (const auto& note : rep.notes) std::cout << "note: " << note << '\n';
}

int cmd_predict(const PredictOptions& po) {
    Params p(po);
    const std::string& id = po.id;
    if (id == "cm") {
        p.need({"n", "q", "regk", "rho"});
        print_report(predict_multiple(p.i("n"), p.i("q"), p.i("regk"), p.i("rho")));
    } else if (id == "m2-surface") {
        p.need({"lb", "b2", "h0b"});
        print_report(predict_m2_surface(p.i("lb"), p.i("b2"), p.i("h0b")));
    } else if (id == "adjoint-nef") {
        p.need({"n", "d", "q"});
        NefData data;
        data.n = p.i("n");
        data.d = p.rat("d");
        data.B2 = p.opt("b2");
        print_report(predict_adjoint_nef(data, p.i("q")));
    } else if (id == "enriques" || id == "abelian") {
        p.need({"q", "b2"});
        print_report(id == "enriques" ? enriques_bound(p.i("q"), p.i("b2")) : abelian_bound(p.i("q"), p.i("b2")));
    } else if (id == "enriques-ample" || id == "abelian-ample") {
        p.need({"q"});
        print_report(id == "enriques-ample" ? enriques_bound(p.i("q"), std::nullopt)
                                            : abelian_bound(p.i("q"), std::nullopt));
    } else if (id == "rational") {
        p.need({"kdotl", "q", "gon"});
        print_report(rational_criterion(p.i("kdotl"), p.i("q"), p.i("gon"), {po.plane_curve, po.g1q}, p.opt("genus")));
    } else if (id == "fano") {
        p.need({"n", "lambda", "bn", "gon", "q"});
        print_report(fano_criterion({p.i("n"), p.i("lambda"), p.i("bn"), p.i("gon")}, p.i("q")));
    } else if (id == "ruled") {
        p.need({"n", "g", "mu-minus", "a", "b", "q"});
        RuledData data{p.i("n"), p.i("g"), p.opt("e").value_or(0), p.rat("mu-minus"), p.i("a"), p.i("b")};
        print_report(ruled_mq_bound(data, p.i("q")));
    } else if (id == "butler-multiple") {
        p.need({"t", "n", "q"});
        print_report(butler_multiple(p.i("t"), p.i("n"), p.i("q"), p.opt("a")));
    } else if (id == "butler-adjoint") {
        p.need({"t", "n", "q", "e", "g"});
        print_report(butler_adjoint(p.i("t"), p.i("n"), p.i("q"), p.i("e"), p.i("g"), p.opt("a")));
    } else if (id == "appendix-ng") {
        p.need({"d"});
        NefData data;
        data.d = p.rat("d");
        data.twist = p.opt("twist");
        data.h0_lambda = p.opt("h0-lambda");
        print_report(appendix_normal_generation(data));
    } else if (id == "ell") {
        p.need({"q", "n"});
        std::cout << "ell_ceil = " << ell_ceil(p.i("q"), p.i("n")) << '\n';
        std::cout << "ell_floor = " << ell_floor(p.i("q"), p.i("n")) << '\n';
    } else if (id == "gon") {
        p.need({"variety", "bundle"});
        const auto X = parse_variety(p.s("variety"));
        const auto D = parse_bundle(X, p.s("bundle"));
        std::cout << "gon_max = " << gon_max(X, D) << '\n';
        if (X.is_hirzebruch() && X.parameter() == 0 && D.a > D.b) {
            std::cout << "note: F_0 with a > b, min(a, b) used where the closed form reads a\n";
        }
    } else if (id == "conjecture-delta") {
        p.need({"variety", "bundle"});
        const auto X = parse_variety(p.s("variety"));
        const auto D = parse_bundle(X, p.s("bundle"));
        const auto pred = conjecture_delta(X, D);
        std::cout << "h0(K+L) = " << pred.h0_adjoint << "\ngon_max = " << pred.gon << "\ndelta = " << pred.delta
                  << "\np_max = " << pred.p_max << '\n';
        if (pred.closed_delta) {
            std::cout << "closed form: delta = " << *pred.closed_delta << ", p_max = " << *pred.closed_p_max << '\n';
        }
        for (const auto& n : pred.notes) std::cout << "note: " << n << '\n';
    } else {
        throw ParseError("unknown theorem id '" + id + "'");
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Betti tables, syzygy profiles and (M_q) bounds"};
    app.set_version_flag("--version", std::string(syzygy::kVersion));
    app.require_subcommand(1);

    JobOptions betti_o, profile_o, verify_o, sweep_o;
    auto* betti = app.add_subcommand("betti", "compute and print a Betti table");
    add_compute_options(betti, betti_o);
    auto* prof = app.add_subcommand("profile", "p_max, q_max, tug and delta of a table");
    add_compute_options(prof, profile_o);
    auto* verify = app.add_subcommand("verify", "check a table against the bounds");
    add_compute_options(verify, verify_o);

    SweepOptions so;
    auto* sweep = app.add_subcommand("sweep", "profile a range of bundles as CSV");
    sweep->add_option("--variety", sweep_o.variety, "P:<n> or F:<e>")->required();
    sweep->add_option("--a", so.a, "range <lo>..<hi> for a (F_e)");
    sweep->add_option("--b", so.b, "range <lo>..<hi> for b (F_e)");
    sweep->add_option("--d", so.d, "range <lo>..<hi> for d (P^n)");
    add_compute_options(sweep, sweep_o, false);

    PredictOptions po;
    auto* predict = app.add_subcommand("predict", "evaluate a bound or criterion");
    predict->add_option("theorem", po.id,
                        "cm, m2-surface, adjoint-nef, enriques, enriques-ample, abelian, abelian-ample, rational, "
                        "fano, ruled, butler-multiple, butler-adjoint, appendix-ng, ell, gon, conjecture-delta")
        ->required();
    for (const auto& name : predict_params()) predict->add_option("--" + name, po.values[name]);
    predict->add_flag("--plane-curve", po.plane_curve, "assert the plane-curve exception (case 2)");
    predict->add_flag("--g1q", po.g1q, "assert the g^1_q exception (case 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kError;
    }

    try {
        if (*betti) return cmd_betti(betti_o);
        if (*prof) return cmd_profile(profile_o);
        if (*verify) return cmd_verify(verify_o);
        if (*sweep) return cmd_sweep(sweep_o, so);
        if (*predict) return cmd_predict(po);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
