/*
 * Mining-hardware catalog and per-coin market constants: types, CSV
 * ingestion with row-level validation, and queries.
 *
 * Copyright 2026 The egal Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef EGAL_CATALOG_HPP
#define EGAL_CATALOG_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace egal {

/// One purchasable block-generation device. Canonical units throughout:
/// hashes per second, watts, USD. The shipped dataset stores raw H/s for
/// every coin so no per-coin magnitude logic exists anywhere downstream.
struct Machine {
    std::string name;
    std::string coin;
    double hash_rate = 0.0;  // H/s, > 0
    double power = 0.0;      // W, >= 0
    double price = 0.0;      // USD, > 0

    bool operator==(const Machine&) const = default;
};

/// Consensus and market constants for one coin.
struct CoinParams {
    std::string coin;
    double block_rate = 0.0;       // blocks per second, > 0
    double total_hash_rate = 0.0;  // H/s, > 0
    double block_reward = 0.0;     // tokens per block, > 0
    double token_price = 0.0;      // USD per token, > 0

    bool operator==(const CoinParams&) const = default;
};

/// Environment constants shared by all machines.
struct EconParams {
    double electricity_cost = 0.08;   // USD per kWh, >= 0
    double duration_hours = 8760.0;   // investment period, > 0

    bool operator==(const EconParams&) const = default;
};

struct MachineCatalog {
    std::vector<Machine> machines;           // file order preserved
    std::map<std::string, CoinParams> coins;

    bool operator==(const MachineCatalog&) const = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            break;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

[[noreturn]] inline void row_error(std::string_view doc, std::size_t line_no,
                                   std::string_view field, std::string_view what) {
    std::ostringstream os;
    os << doc << " line " << line_no;
    if (!field.empty()) os << ": field " << field;
    os << ": " << what;
    throw std::runtime_error(os.str());
}

/// Locale-independent double parse: decimal point only, scientific
/// notation accepted. The full field must be consumed.
inline double parse_double(std::string_view doc, std::size_t line_no,
                           std::string_view field, std::string_view text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        row_error(doc, line_no, field, "not a number: \"" + std::string(text) + "\"");
    return value;
}

/// Accepts either a decimal literal or an `a/b` rational literal; the
/// rational form is evaluated as one IEEE division so `1/600` and the
/// decimal expansion of 1.0/600.0 parse to the same value bit-for-bit.
inline double parse_rate(std::string_view doc, std::size_t line_no,
                         std::string_view field, std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return parse_double(doc, line_no, field, text);
    double num = parse_double(doc, line_no, field, trim(text.substr(0, slash)));
    double den = parse_double(doc, line_no, field, trim(text.substr(slash + 1)));
    if (den == 0.0) row_error(doc, line_no, field, "zero denominator");
    return num / den;
}

/// Shortest round-trip decimal rendering of a double.
inline std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

struct LineCursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    // Next non-blank, non-comment line; empty optional at end of input.
    bool next(std::string_view& out) {
        while (pos <= text.size()) {
            if (pos == text.size()) return false;
            std::size_t nl = text.find('\n', pos);
            std::string_view raw = (nl == std::string_view::npos)
                                       ? text.substr(pos)
                                       : text.substr(pos, nl - pos);
            pos = (nl == std::string_view::npos) ? text.size() : nl + 1;
            ++line_no;
            std::string_view line = trim(raw);
            if (line.empty() || line.front() == '#') continue;
            out = line;
            return true;
        }
        return false;
    }
};

inline void expect_header(std::string_view doc, LineCursor& cur, std::string_view expected) {
    std::string_view line;
    if (!cur.next(line)) row_error(doc, cur.line_no == 0 ? 1 : cur.line_no, {}, "missing header");
    auto fields = split_fields(line);
    auto want = split_fields(expected);
    if (fields != want)
        row_error(doc, cur.line_no, {},
                  "bad header: expected \"" + std::string(expected) + "\"");
}

} // namespace detail

inline constexpr std::string_view kMachinesHeader = "name,coin,hash_rate_hs,power_w,price_usd";
inline constexpr std::string_view kCoinsHeader =
    "coin,block_rate_per_s,total_hash_rate_hs,block_reward_tokens,token_price_usd";

/// Parse the two-document catalog: a machines CSV and a coins CSV.
/// Every machine row must reference a coin defined in the coins CSV and
/// (name, coin) pairs must be unique. Errors carry document, line number
/// and field.
inline MachineCatalog parse_catalog(std::string_view machines_csv, std::string_view coins_csv) {
    MachineCatalog cat;

    detail::LineCursor coins_cur{coins_csv};
    detail::expect_header("coins csv", coins_cur, kCoinsHeader);
    std::string_view line;
    while (coins_cur.next(line)) {
        auto f = detail::split_fields(line);
        if (f.size() != 5)
            detail::row_error("coins csv", coins_cur.line_no, {},
                              "expected 5 fields, got " + std::to_string(f.size()));
        CoinParams cp;
        cp.coin = std::string(f[0]);
        if (cp.coin.empty())
            detail::row_error("coins csv", coins_cur.line_no, "coin", "identifier must be nonempty");
        cp.block_rate = detail::parse_rate("coins csv", coins_cur.line_no, "block_rate_per_s", f[1]);
        cp.total_hash_rate = detail::parse_double("coins csv", coins_cur.line_no, "total_hash_rate_hs", f[2]);
        cp.block_reward = detail::parse_double("coins csv", coins_cur.line_no, "block_reward_tokens", f[3]);
        cp.token_price = detail::parse_double("coins csv", coins_cur.line_no, "token_price_usd", f[4]);
        if (cp.block_rate <= 0.0)
            detail::row_error("coins csv", coins_cur.line_no, "block_rate_per_s", "block rate must be positive");
        if (cp.total_hash_rate <= 0.0)
            detail::row_error("coins csv", coins_cur.line_no, "total_hash_rate_hs", "total hash rate must be positive");
        if (cp.block_reward <= 0.0)
            detail::row_error("coins csv", coins_cur.line_no, "block_reward_tokens", "block reward must be positive");
        if (cp.token_price <= 0.0)
            detail::row_error("coins csv", coins_cur.line_no, "token_price_usd", "token price must be positive");
        if (!cat.coins.emplace(cp.coin, cp).second)
            detail::row_error("coins csv", coins_cur.line_no, "coin", "duplicate coin \"" + cp.coin + "\"");
    }

    detail::LineCursor m_cur{machines_csv};
    detail::expect_header("machines csv", m_cur, kMachinesHeader);
    std::set<std::pair<std::string, std::string>> seen;
    while (m_cur.next(line)) {
        auto f = detail::split_fields(line);
        if (f.size() != 5)
            detail::row_error("machines csv", m_cur.line_no, {},
                              "expected 5 fields, got " + std::to_string(f.size()));
        Machine m;
        m.name = std::string(f[0]);
        m.coin = std::string(f[1]);
        m.hash_rate = detail::parse_double("machines csv", m_cur.line_no, "hash_rate_hs", f[2]);
        m.power = detail::parse_double("machines csv", m_cur.line_no, "power_w", f[3]);
        m.price = detail::parse_double("machines csv", m_cur.line_no, "price_usd", f[4]);
        if (m.name.empty())
            detail::row_error("machines csv", m_cur.line_no, "name", "name must be nonempty");
        if (m.hash_rate <= 0.0)
            detail::row_error("machines csv", m_cur.line_no, "hash_rate_hs", "hash rate must be positive");
        if (m.power < 0.0)
            detail::row_error("machines csv", m_cur.line_no, "power_w", "power must be nonnegative");
        if (m.price <= 0.0)
            detail::row_error("machines csv", m_cur.line_no, "price_usd", "price must be positive");
        if (!cat.coins.count(m.coin))
            detail::row_error("machines csv", m_cur.line_no, "coin",
                              "unknown coin \"" + m.coin + "\" (not in coins csv)");
        if (!seen.emplace(m.name, m.coin).second)
            detail::row_error("machines csv", m_cur.line_no, "name",
                              "duplicate machine \"" + m.name + "\" for coin \"" + m.coin + "\"");
        cat.machines.push_back(std::move(m));
    }
    return cat;
}

inline std::string serialize_machines_csv(const MachineCatalog& cat) {
    std::string out{kMachinesHeader};
    out += '\n';
    for (const auto& m : cat.machines) {
        out += m.name;
        out += ',';
        out += m.coin;
        out += ',';
        out += detail::format_number(m.hash_rate);
        out += ',';
        out += detail::format_number(m.power);
        out += ',';
        out += detail::format_number(m.price);
        out += '\n';
    }
    return out;
}

inline std::string serialize_coins_csv(const MachineCatalog& cat) {
    std::string out{kCoinsHeader};
    out += '\n';
    for (const auto& [id, cp] : cat.coins) {
        out += id;
        out += ',';
        out += detail::format_number(cp.block_rate);
        out += ',';
        out += detail::format_number(cp.total_hash_rate);
        out += ',';
        out += detail::format_number(cp.block_reward);
        out += ',';
        out += detail::format_number(cp.token_price);
        out += '\n';
    }
    return out;
}

/// Machines mining `coin`, catalog order preserved.
inline std::vector<Machine> filter_by_coin(const MachineCatalog& cat, std::string_view coin) {
    if (!cat.coins.count(std::string(coin))) {
        std::string msg = "unknown coin \"" + std::string(coin) + "\"; available:";
        for (const auto& [id, cp] : cat.coins) msg += " " + id;
        throw std::invalid_argument(msg);
    }
    std::vector<Machine> out;
    for (const auto& m : cat.machines)
        if (m.coin == coin) out.push_back(m);
    return out;
}

} // namespace egal

#endif // EGAL_CATALOG_HPP
