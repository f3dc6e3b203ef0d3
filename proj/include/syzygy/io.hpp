#pragma once

// Argument grammar, table rendering (text / JSON / CSV) and JSON parse-back.
//   variety: P:<n> | F:<e>      bundle: <d> | <a>,<b>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "syzygy/betti.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/variety.hpp"

namespace syzygy {

namespace detail {

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end) {
        throw ParseError("bad " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

} // namespace detail

inline Variety parse_variety(std::string_view spec) {
    if (spec.size() < 3 || spec[1] != ':' || (spec[0] != 'P' && spec[0] != 'F')) {
        throw ParseError("variety must be P:<n> or F:<e>, got '" + std::string(spec) + "'");
    }
    const auto k = detail::parse_int(spec.substr(2), "variety parameter");
    if (k < 0 || k > 64) throw ParseError("variety parameter out of range: " + std::string(spec));
    return spec[0] == 'P' ? Variety::projective(static_cast<int>(k)) : Variety::hirzebruch(static_cast<int>(k));
}

inline DivisorClass parse_bundle(const Variety& X, std::string_view spec) {
    const auto comma = spec.find(',');
    if (X.is_projective_space()) {
        if (comma != std::string_view::npos) throw ParseError("bundle on P^n is a single degree <d>");
        return DivisorClass::degree(detail::parse_int(spec, "degree"));
    }
    if (comma == std::string_view::npos) throw ParseError("bundle on F_e is <a>,<b>");
    return DivisorClass::of(detail::parse_int(spec.substr(0, comma), "a"),
                            detail::parse_int(spec.substr(comma + 1), "b"));
}

/// Rows j = 0..j_max, columns i = 0..r-1; holes print as '?'.
inline std::string render_text(const BettiTable& t) {
    const std::int64_t cols = std::max<std::int64_t>(t.r, 1);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"j\\i"};
    for (std::int64_t i = 0; i < cols; ++i) head.push_back(std::to_string(i));
    cells.push_back(head);
    for (std::int64_t j = 0; j <= t.j_max; ++j) {
        std::vector<std::string> row{std::to_string(j)};
        for (std::int64_t i = 0; i < cols; ++i) {
            const auto v = t.entry(i, j);
            row.push_back(v ? std::to_string(*v) : "?");
        }
        cells.push_back(row);
    }
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    os << "Betti table of " << bundle_tag(t.variety, t.divisor) << " on " << t.variety.tag() << " (r=" << t.r << ")\n";
    for (std::size_t k = 0; k < cells.size(); ++k) {
        for (std::size_t c = 0; c < cells[k].size(); ++c) {
            if (c > 0) os << ' ';
            os << std::string(width[c] - cells[k][c].size(), ' ') << cells[k][c];
            if (c == 0) os << " |";
        }
        os << '\n';
        if (k == 0) {
            std::size_t total = width[0] + 2;
            for (std::size_t c = 1; c < width.size(); ++c) total += width[c] + 1;
            os << std::string(total, '-') << '\n';
        }
    }
    os << "primes:";
    for (auto p : t.primes) os << ' ' << p;
    os << "  certified: " << (t.certified ? "yes" : "no") << '\n';
    return os.str();
}

inline nlohmann::ordered_json to_json(const BettiTable& t) {
    nlohmann::ordered_json j;
    j["variety"] = t.variety.tag();
    j["bundle"] = bundle_tag(t.variety, t.divisor);
    j["r"] = t.r;
    j["certified"] = t.certified;
    j["primes_agree"] = t.primes_agree;
    j["primes"] = t.primes;
    nlohmann::ordered_json rows = nlohmann::ordered_json::object();
    for (std::size_t w = 0; w < t.rows.size(); ++w) {
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < t.rows[w].size(); ++i) {
            const auto& v = t.rows[w][i];
            if (v) row[std::to_string(i)] = *v;
            else row[std::to_string(i)] = nullptr;
        }
        rows[std::to_string(w)] = row;
    }
    j["rows"] = rows;
    return j;
}

inline std::string render_json(const BettiTable& t) { return to_json(t).dump(2) + "\n"; }

inline BettiTable parse_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    try {
        BettiTable t;
        t.variety = parse_variety(j.at("variety").get<std::string>());
        t.divisor = parse_bundle(t.variety, j.at("bundle").get<std::string>());
        t.r = j.at("r").get<std::int64_t>();
        t.certified = j.at("certified").get<bool>();
        t.primes_agree = j.value("primes_agree", true);
        t.primes = j.at("primes").get<std::vector<std::uint32_t>>();
        const auto& rows = j.at("rows");
        t.j_max = static_cast<std::int64_t>(rows.size()) - 1;
        t.rows.assign(rows.size(), std::vector<std::optional<std::uint64_t>>(static_cast<std::size_t>(t.r + 1), 0));
        for (const auto& [jk, row] : rows.items()) {
            const auto w = detail::parse_int(jk, "row index");
            if (w < 0 || w > t.j_max) throw ParseError("row index out of range: " + jk);
            for (const auto& [ik, v] : row.items()) {
                const auto i = detail::parse_int(ik, "column index");
                if (i < 0 || i > t.r) throw ParseError("column index out of range: " + ik);
                auto& cell = t.rows[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)];
                if (v.is_null()) cell.reset();
                else cell = v.get<std::uint64_t>();
            }
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
}

/// One line per entry: j,i,beta (holes leave beta empty).
inline std::string render_csv(const BettiTable& t) {
    std::ostringstream os;
    os << "variety,bundle,j,i,beta\n";
    for (std::size_t w = 0; w < t.rows.size(); ++w) {
        for (std::size_t i = 0; i < t.rows[w].size(); ++i) {
            os << t.variety.tag() << ",\"" << bundle_tag(t.variety, t.divisor) << "\"," << w << ',' << i << ',';
            if (t.rows[w][i]) os << *t.rows[w][i];
            os << '\n';
        }
    }
    return os.str();
}

inline std::string render_profile(const SyzygyProfile& s) {
    std::ostringstream os;
    os << "p_max=" << s.p_max << " q_max=" << s.q_max << " tug=" << s.tug << " delta=" << s.delta
       << " j_max=" << s.j_max << '\n';
    os << tug_verdict(s) << '\n';
    if (s.q_max_convention) os << "note: (M_1) fails, q_max reported as 0 by convention\n";
    if (s.r <= 1) os << "note: r=" << s.r << ", no (M_q) range; degenerate profile\n";
    return os.str();
}

inline std::string render_profile_json(const SyzygyProfile& s) {
    nlohmann::ordered_json j;
    j["r"] = s.r;
    j["pd"] = s.pd;
    j["p_max"] = s.p_max;
    j["q_max"] = s.q_max;
    j["tug"] = s.tug;
    j["delta"] = s.delta;
    j["j_max"] = s.j_max;
    j["normally_generated"] = s.normally_generated;
    j["q_max_convention"] = s.q_max_convention;
    j["verdict"] = tug_verdict(s);
    return j.dump(2) + "\n";
}

} // namespace syzygy
