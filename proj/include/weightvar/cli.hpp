#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kirwan.hpp"

namespace weightvar {

using json = nlohmann::json;

// ---- JSON encodings -------------------------------------------------------

inline json to_json(const rational& q) { return to_string(q); }

inline json to_json(const tvector& v) {
    json a = json::array();
    for (const auto& c : v.coords())
        a.push_back(to_string(c));
    return a;
}

/// Polynomial as a list of {exp, num, den}, terms in graded-lex order.
inline json to_json(const polynomial& p) {
    json a = json::array();
    for (const auto& [e, q] : p.terms())
        a.push_back({{"exp", e}, {"num", numerator(q).str()}, {"den", denominator(q).str()}});
    return a;
}

inline polynomial polynomial_from_json(const json& j, int nvars) {
    if (!j.is_array())
        throw error(errc::cache_corrupt, "polynomial is not a term list");
    polynomial p(nvars);
    for (const auto& t : j) {
        auto e = t.at("exp").get<exponent>();
        if (static_cast<int>(e.size()) != nvars)
            throw error(errc::cache_corrupt, "exponent of the wrong length");
        for (int x : e)
            if (x < 0)
                throw error(errc::cache_corrupt, "negative exponent");
        integer num{t.at("num").get<std::string>()};
        integer den{t.at("den").get<std::string>()};
        if (den == 0)
            throw error(errc::cache_corrupt, "zero denominator");
        p.add_term(e, rational(num, den));
    }
    return p;
}

inline json word_json(const word_t& w) {
    json a = json::array();
    for (int i : w)
        a.push_back(i + 1);
    return a;
}

// ---- restriction-table cache ----------------------------------------------

inline constexpr int cache_version = 1;

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

inline std::filesystem::path cache_file(const std::filesystem::path& dir, const root_system& rs) {
    return dir / ("billey-" + rs.name() + "-v" + std::to_string(cache_version) + ".json");
}

inline std::string cache_checksum(const json& elements, const json& table) {
    return hex64(fnv1a(elements.dump() + "\n" + table.dump()));
}

inline json cache_document(const root_system& rs, const weyl_group& g, const billey_table& t) {
    json elements = json::array();
    for (std::size_t w = 0; w < g.size(); ++w)
        elements.push_back(word_json(g.word(static_cast<elem_id>(w))));
    json table = json::array();
    for (const auto& p : t.values())
        table.push_back(to_json(p));
    return {{"version", cache_version},
            {"type", std::string(1, rs.type_label())},
            {"rank", rs.rank()},
            {"elements", elements},
            {"restrictions", table},
            {"checksum", cache_checksum(elements, table)}};
}

/// Parses and verifies a cache document against the group it is meant for.
inline billey_table table_from_cache(const json& doc, const root_system& rs, const weyl_group& g) {
    try {
        if (doc.at("version").get<int>() != cache_version)
            throw error(errc::cache_corrupt, "cache version mismatch");
        if (doc.at("type").get<std::string>() != std::string(1, rs.type_label()) ||
            doc.at("rank").get<int>() != rs.rank())
            throw error(errc::cache_corrupt, "cache is for a different root system");
        const json& elements = doc.at("elements");
        const json& table = doc.at("restrictions");
        if (doc.at("checksum").get<std::string>() != cache_checksum(elements, table))
            throw error(errc::cache_corrupt, "cache checksum mismatch");
        if (elements.size() != g.size())
            throw error(errc::cache_corrupt, "cache element count mismatch");
        for (std::size_t w = 0; w < g.size(); ++w)
            if (elements[w] != word_json(g.word(static_cast<elem_id>(w))))
                throw error(errc::cache_corrupt, "cache element order differs");
        if (table.size() != g.size() * g.size())
            throw error(errc::cache_corrupt, "cache table has the wrong size");
        std::vector<polynomial> values;
        values.reserve(table.size());
        for (const auto& p : table)
            values.push_back(polynomial_from_json(p, rs.rank()));
        return billey_table::from_values(g.size(), rs.rank(), std::move(values));
    } catch (const json::exception& e) {
        throw error(errc::cache_corrupt, std::string("malformed cache: ") + e.what());
    }
}

inline billey_table load_cache(const std::filesystem::path& dir, const root_system& rs, const weyl_group& g) {
    std::ifstream in(cache_file(dir, rs));
    if (!in)
        throw error(errc::cache_corrupt, "cache file missing");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw error(errc::cache_corrupt, std::string("unparseable cache: ") + e.what());
    }
    return table_from_cache(doc, rs, g);
}

/// Write to a temporary file in the same directory, then rename over the target.
inline void store_cache(const std::filesystem::path& dir, const root_system& rs, const weyl_group& g,
                        const billey_table& t) {
    std::filesystem::create_directories(dir);
    const auto target = cache_file(dir, rs);
    auto tmp = target;
    tmp += ".tmp." + std::to_string(std::random_device{}());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw error(errc::invalid_config, "cannot write cache file " + tmp.string());
        out << cache_document(rs, g, t).dump() << '\n';
        if (!out)
            throw error(errc::invalid_config, "short write on cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

/// A Schubert basis whose restriction table comes from the cache when a
/// valid one exists; otherwise it is computed and (when possible) stored.
inline schubert_basis cached_basis(const root_system& rs, const std::optional<std::filesystem::path>& dir, int threads,
                                   int max_rank, std::ostream* warnings) {
    if (!dir)
        return schubert_basis(rs, threads, std::nullopt, max_rank);
    auto g = weyl_group::generate(rs, max_rank);
    if (std::filesystem::exists(cache_file(*dir, rs))) {
        try {
            return schubert_basis(rs, threads, load_cache(*dir, rs, g), max_rank);
        } catch (const error& e) {
            if (e.code() != errc::cache_corrupt)
                throw;
            if (warnings)
                *warnings << json{{"warning", std::string(errc_name(e.code()))}, {"message", e.message()}}.dump() << '\n';
        }
    }
    schubert_basis b(rs, threads, std::nullopt, max_rank);
    try {
        store_cache(*dir, rs, b.group(), b.table());
    } catch (const std::exception& e) {
        if (warnings)
            *warnings << json{{"warning", "CacheWriteFailed"}, {"message", e.what()}}.dump() << '\n';
    }
    return b;
}

// ---- job configuration ----------------------------------------------------

struct job_config {
    std::string command;
    char type_label = 'A';
    int rank = 1;
    std::vector<rational> lambda;
    std::vector<rational> mu; // fundamental-weight coordinates
    std::optional<int> dmax;
    std::string format = "json";
    std::optional<std::filesystem::path> cache_dir;
    int threads = 1;
    std::uint64_t seed = 1;
    int max_rank = default_max_rank;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"roots", "weyl", "restrict", "kernel", "betti", "oracle-compare", "check"};
    return c;
}

inline bool needs_orbit(const std::string& command) {
    return command == "kernel" || command == "betti" || command == "oracle-compare";
}

inline void validate(const job_config& c) {
    if (std::find(commands().begin(), commands().end(), c.command) == commands().end())
        throw error(errc::invalid_config, "unknown command '" + c.command + "'");
    if (c.format != "json" && c.format != "csv" && c.format != "latex")
        throw error(errc::invalid_config, "format must be json, csv or latex");
    if (c.threads < 1)
        throw error(errc::invalid_config, "threads must be at least 1");
    const bool orbit_given = !c.lambda.empty() || !c.mu.empty();
    if (needs_orbit(c.command) || (c.command == "check" && orbit_given)) {
        if (c.lambda.size() != static_cast<std::size_t>(c.rank))
            throw error(errc::invalid_config, "--lambda needs " + std::to_string(c.rank) + " coefficients");
        if (c.mu.size() != static_cast<std::size_t>(c.rank))
            throw error(errc::invalid_config, "--mu needs " + std::to_string(c.rank) + " coordinates");
    }
}

/// WEIGHTVAR_CACHE, when set and nonempty, wins over --cache-dir.
inline void apply_environment(job_config& c) {
    if (const char* env = std::getenv("WEIGHTVAR_CACHE"); env && *env)
        c.cache_dir = std::filesystem::path(env);
}

// ---- reports ----------------------------------------------------------------

/// A rendered command result: the JSON document plus an optional flat table
/// used by the csv and latex renderers.
struct report {
    json doc;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool ok = true; // false turns into exit code 4 (a failed check or comparison)
};

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? sep : "") + parts[i];
    return s;
}

inline std::string word_string(const word_t& w) {
    std::vector<std::string> parts;
    for (int i : w)
        parts.push_back(std::to_string(i + 1));
    return join(parts, " ");
}

inline report roots_report(const root_system& rs) {
    report r;
    json cartan = json::array(), gram = json::array(), roots = json::array(), weights = json::array();
    for (int i = 0; i < rs.rank(); ++i) {
        json crow = json::array(), grow = json::array();
        for (int j = 0; j < rs.rank(); ++j) {
            crow.push_back(rs.cartan()[i][j]);
            grow.push_back(to_string(rs.gram()(i, j)));
        }
        cartan.push_back(crow);
        gram.push_back(grow);
    }
    for (const auto& c : rs.positive_root_coords())
        roots.push_back(c);
    for (const auto& w : rs.fundamental_weights())
        weights.push_back(to_json(w));
    r.doc = {{"type", std::string(1, rs.type_label())},
             {"rank", rs.rank()},
             {"cartan", cartan},
             {"gram", gram},
             {"positive_roots", roots},
             {"fundamental_weights", weights}};
    r.header = {"index", "root", "norm2"};
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
        const auto& a = rs.positive_roots()[k];
        std::vector<std::string> coords;
        for (const auto& c : a.coords())
            coords.push_back(to_string(c));
        r.rows.push_back({std::to_string(k + 1), join(coords, " "), to_string(rs.inner(a, a))});
    }
    return r;
}

inline report weyl_report(const weyl_group& g) {
    report r;
    json elements = json::array();
    std::vector<int> profile(static_cast<std::size_t>(g.length(g.longest())) + 1, 0);
    for (std::size_t w = 0; w < g.size(); ++w) {
        const auto id = static_cast<elem_id>(w);
        ++profile[g.length(id)];
        json below = json::array();
        for (std::size_t v = 0; v < g.size(); ++v)
            if (g.bruhat_leq(static_cast<elem_id>(v), id))
                below.push_back(v);
        elements.push_back({{"id", w},
                            {"word", word_json(g.word(id))},
                            {"length", g.length(id)},
                            {"inverse", g.inverse(id)},
                            {"bruhat_below", below}});
        r.rows.push_back({std::to_string(w), word_string(g.word(id)), std::to_string(g.length(id)),
                          std::to_string(below.size())});
    }
    r.doc = {{"order", g.size()}, {"longest", g.longest()}, {"length_profile", profile}, {"elements", elements}};
    r.header = {"id", "word", "length", "bruhat_below"};
    return r;
}

inline report restrict_report(const schubert_basis& b) {
    report r;
    const auto& g = b.group();
    json entries = json::array();
    for (std::size_t w = 0; w < g.size(); ++w)
        for (std::size_t v = 0; v < g.size(); ++v) {
            const auto& p = b.table().at(static_cast<elem_id>(w), static_cast<elem_id>(v));
            if (p.is_zero())
                continue;
            entries.push_back({{"w", w}, {"v", v}, {"poly", to_json(p)}});
            r.rows.push_back({b.word_label(static_cast<elem_id>(w)), b.word_label(static_cast<elem_id>(v)), p.str()});
        }
    json words = json::array();
    for (std::size_t w = 0; w < g.size(); ++w)
        words.push_back(word_json(g.word(static_cast<elem_id>(w))));
    r.doc = {{"type", std::string(1, b.roots().type_label())},
             {"rank", b.rank()},
             {"elements", words},
             {"restrictions", entries}};
    r.header = {"w", "v", "xi_w|_v"};
    return r;
}

inline json spec_json(const schubert_basis& b, const kernel_generator_spec& s, const equivariant_class& c) {
    json wit = json::array();
    for (int j : s.witnesses)
        wit.push_back(j + 1);
    json support = json::array();
    for (elem_id v : c.support())
        support.push_back(v);
    json out = {{"tau", s.tau},
                {"tau_word", word_json(b.group().word(s.tau))},
                {"v", s.v},
                {"v_word", word_json(b.group().word(s.v))},
                {"witnesses", wit},
                {"half_degree", s.half_degree},
                {"support", support}};
    if (!s.direction.empty()) {
        json d = json::array();
        for (const auto& x : s.direction)
            d.push_back(to_string(x));
        out["direction"] = d;
    }
    return out;
}

inline json generators_json(const schubert_basis& b, const generator_set& gens) {
    json a = json::array();
    for (std::size_t i = 0; i < gens.specs.size(); ++i)
        a.push_back(spec_json(b, gens.specs[i], gens.classes[i]));
    return a;
}

inline report kernel_report(const schubert_basis& b, const orbit_parameter& orbit, const tvector& mu, int threads) {
    report r;
    auto gens = theorem_generators(b, orbit, mu, threads);
    r.doc = {{"count", gens.specs.size()}, {"generators", generators_json(b, gens)}};
    r.header = {"tau", "v", "witnesses", "half_degree"};
    for (const auto& s : gens.specs) {
        std::vector<std::string> wit;
        for (int j : s.witnesses)
            wit.push_back(std::to_string(j + 1));
        r.rows.push_back({b.word_label(s.tau), b.word_label(s.v), join(wit, " "), std::to_string(s.half_degree)});
    }
    return r;
}

inline report betti_report(const schubert_basis& b, const orbit_parameter& orbit, const tvector& mu,
                           std::optional<int> dmax, int threads) {
    report r;
    auto dims = quotient_betti(b, orbit, mu, dmax, threads);
    r.doc = {{"betti", dims.betti}, {"poincare", dims.poincare}};
    r.header = {"degree", "betti"};
    for (std::size_t d = 0; d < dims.betti.size(); ++d)
        r.rows.push_back({std::to_string(2 * d), std::to_string(dims.betti[d])});
    return r;
}

inline report oracle_compare_report(const schubert_basis& b, const orbit_parameter& orbit, const tvector& mu,
                                    std::optional<int> dmax, int threads) {
    report r;
    const int top = b.top_degree();
    if (dmax && (*dmax > top || *dmax < 0))
        throw error(errc::degree_overflow, "dmax " + std::to_string(*dmax) + " outside 0.." + std::to_string(top));
    const int d = dmax.value_or(top);
    auto thm = theorem_generators(b, orbit, mu, threads);
    auto orc = oracle_generators(b, orbit, mu, threads);
    auto thm_dims = ideal_graded_dims(b, thm.classes, d);
    auto orc_dims = ideal_graded_dims(b, orc.classes, d);
    r.ok = thm_dims == orc_dims;
    r.doc = {{"theorem", {{"count", thm.specs.size()}, {"ideal_dims", thm_dims}, {"generators", generators_json(b, thm)}}},
             {"oracle", {{"count", orc.specs.size()}, {"ideal_dims", orc_dims}, {"generators", generators_json(b, orc)}}},
             {"equal", r.ok}};
    if (b.rank() <= 2) {
        auto hs = half_space_kernel_dims(b, orbit, mu, d);
        r.doc["half_space_dims"] = hs;
        r.ok = r.ok && hs == thm_dims;
        r.doc["equal"] = r.ok;
    }
    r.header = {"half_degree", "theorem", "oracle"};
    for (int k = 0; k <= d; ++k)
        r.rows.push_back({std::to_string(k), std::to_string(thm_dims[k]), std::to_string(orc_dims[k])});
    return r;
}

// ---- property suite ---------------------------------------------------------

namespace detail {

struct check_log {
    json entries = json::array();
    bool ok = true;
    std::vector<std::vector<std::string>> rows;

    void record(const std::string& name, bool passed, const std::string& detail = {}) {
        entries.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
        rows.push_back({name, passed ? "pass" : "FAIL", detail});
        ok = ok && passed;
    }

    template <class F>
    void run(const std::string& name, F&& f) {
        try {
            std::string detail;
            bool passed = f(detail);
            record(name, passed, detail);
        } catch (const std::exception& e) {
            record(name, false, e.what());
        }
    }
};

inline polynomial random_polynomial(std::mt19937_64& rng, int nvars, int degree) {
    polynomial p(nvars);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto& e : monomial_basis(nvars, degree))
        if (int c = coef(rng); c != 0)
            p.add_term(e, c);
    return p;
}

} // namespace detail

/// Structural invariants of the root system, Weyl group and Schubert basis,
/// plus the orbit-dependent ones when an orbit and level are supplied.
inline report check_report(const schubert_basis& b, const std::optional<orbit_parameter>& orbit,
                           const std::optional<tvector>& mu, std::uint64_t seed, int threads) {
    const auto& rs = b.roots();
    const auto& g = b.group();
    const std::size_t n = g.size();
    detail::check_log log;
    std::mt19937_64 rng(seed);

    log.run("positive root count", [&](std::string& d) {
        d = std::to_string(rs.positive_roots().size());
        return rs.positive_roots().size() == root_system::classical_positive_root_count(rs.type_label(), rs.rank());
    });
    log.run("coroot duality", [&](std::string&) {
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j)
                if (rs.coroot_pairing(rs.fundamental_weights()[i], j) != (i == j ? 1 : 0))
                    return false;
        return true;
    });
    log.run("longest element length", [&](std::string& d) {
        d = std::to_string(g.length(g.longest()));
        return static_cast<std::size_t>(g.length(g.longest())) == rs.positive_roots().size();
    });
    log.run("bruhat from every reduced word", [&](std::string&) {
        for (std::size_t w = 0; w < n; ++w) {
            for (const auto& word : g.reduced_words(static_cast<elem_id>(w))) {
                std::set<elem_id> below{g.identity()};
                for (int s : word) {
                    std::set<elem_id> next = below;
                    for (elem_id u : below)
                        next.insert(g.right_simple(u, s));
                    below = std::move(next);
                }
                for (std::size_t v = 0; v < n; ++v)
                    if (g.bruhat_leq(static_cast<elem_id>(v), static_cast<elem_id>(w)) !=
                        (below.count(static_cast<elem_id>(v)) > 0))
                        return false;
            }
        }
        return true;
    });
    log.run("billey support and positivity", [&](std::string&) {
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t v = 0; v < n; ++v) {
                const auto& p = b.table().at(static_cast<elem_id>(w), static_cast<elem_id>(v));
                if (p.is_zero() == g.bruhat_leq(static_cast<elem_id>(w), static_cast<elem_id>(v)))
                    return false;
                for (const auto& [e, q] : p.terms())
                    if (q < 0 || !is_integral(q))
                        return false;
            }
        return true;
    });
    log.run("billey diagonal", [&](std::string&) {
        for (std::size_t w = 0; w < n; ++w) {
            polynomial prod = polynomial::constant(rs.rank(), 1);
            for (const auto& a : inversion_roots(rs, g, g.word(static_cast<elem_id>(w))))
                prod *= polynomial::linear(a);
            if (b.table().at(static_cast<elem_id>(w), static_cast<elem_id>(w)) != prod)
                return false;
        }
        return true;
    });
    log.run("billey degree-one closed form", [&](std::string&) {
        for (int i = 0; i < rs.rank(); ++i)
            for (std::size_t v = 0; v < n; ++v) {
                const auto& lam = rs.fundamental_weights()[i];
                if (b.table().at(g.simple(i), static_cast<elem_id>(v)) !=
                    polynomial::linear(lam - g.act(static_cast<elem_id>(v), lam)))
                    return false;
            }
        return true;
    });
    log.run("integrate x_e", [&](std::string& d) {
        auto p = b.integrate(b.schubert(g.identity()));
        d = p.str();
        return p == polynomial::constant(rs.rank(), 1);
    });
    log.run("localization of random products", [&](std::string&) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int trial = 0; trial < 20; ++trial) {
            auto c = b.schubert(static_cast<elem_id>(pick(rng))) * b.schubert(static_cast<elem_id>(pick(rng)));
            b.integrate(c);
        }
        return true;
    });
    log.run("decompose round trip", [&](std::string&) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int trial = 0; trial < 10; ++trial) {
            const auto tau = static_cast<elem_id>(pick(rng));
            auto w = static_cast<elem_id>(pick(rng));
            int extra = static_cast<int>(rng() % 2);
            auto c = detail::random_polynomial(rng, rs.rank(), extra) * b.schubert(w);
            if (c.is_zero())
                continue;
            auto a = b.decompose(c, tau);
            if (b.reassemble(a, c.half_degree()) != c)
                return false;
        }
        return true;
    });

    if (orbit && mu) {
        log.run("height monotonicity", [&](std::string&) {
            for (std::size_t tau = 0; tau < n; ++tau) {
                const elem_id ti = g.inverse(static_cast<elem_id>(tau));
                for (int j = 0; j < rs.rank(); ++j) {
                    auto xi = g.act(static_cast<elem_id>(tau), rs.fundamental_weights()[j]);
                    for (std::size_t v = 0; v < n; ++v)
                        for (std::size_t w = 0; w < n; ++w)
                            if (g.bruhat_leq(g.multiply(ti, static_cast<elem_id>(v)),
                                             g.multiply(ti, static_cast<elem_id>(w))) &&
                                rs.inner(xi, orbit->images[v]) > rs.inner(xi, orbit->images[w]))
                                return false;
                }
            }
            return true;
        });
        auto reg = is_regular(b, *orbit, *mu);
        log.record("mu regular", reg.regular, reg.diagnostic);
        if (reg.regular) {
            log.run("generator one-sidedness", [&](std::string& d) {
                auto gens = theorem_generators(b, *orbit, *mu, threads);
                d = std::to_string(gens.specs.size()) + " generators";
                for (std::size_t k = 0; k < gens.specs.size(); ++k) {
                    const auto& s = gens.specs[k];
                    for (int j : s.witnesses) {
                        auto xi = g.act(s.tau, rs.fundamental_weights()[j]);
                        for (elem_id w : gens.classes[k].support())
                            if (rs.inner(xi, orbit->images[w]) > rs.inner(xi, *mu))
                                return false;
                    }
                }
                return true;
            });
            log.run("betti sanity", [&](std::string& d) {
                auto dims = quotient_betti(b, *orbit, *mu, std::nullopt, threads);
                d = dims.poincare;
                const std::size_t D = dims.betti.size() - 1;
                for (std::size_t k = 0; k <= D; ++k)
                    if (dims.betti[k] != dims.betti[D - k])
                        return false;
                return !dims.betti.empty() && dims.betti[0] == 1;
            });
        }
    }
    report r;
    r.ok = log.ok;
    r.doc = {{"passed", log.ok}, {"checks", log.entries}};
    r.header = {"check", "result", "detail"};
    r.rows = std::move(log.rows);
    return r;
}

// ---- rendering and dispatch -------------------------------------------------

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline std::string latex_field(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '_' || c == '&' || c == '%' || c == '#')
            out += '\\';
        out += c;
    }
    return out;
}

inline std::string render(const report& r, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        os << r.doc.dump() << '\n';
    } else if (format == "csv") {
        std::vector<std::string> h;
        for (const auto& x : r.header)
            h.push_back(csv_field(x));
        os << join(h, ",") << '\n';
        for (const auto& row : r.rows) {
            std::vector<std::string> f;
            for (const auto& x : row)
                f.push_back(csv_field(x));
            os << join(f, ",") << '\n';
        }
    } else {
        os << "\\begin{tabular}{" << std::string(r.header.size(), 'l') << "}\n\\hline\n";
        std::vector<std::string> h;
        for (const auto& x : r.header)
            h.push_back(latex_field(x));
        os << join(h, " & ") << " \\\\\n\\hline\n";
        for (const auto& row : r.rows) {
            std::vector<std::string> f;
            for (const auto& x : row)
                f.push_back(latex_field(x));
            os << join(f, " & ") << " \\\\\n";
        }
        os << "\\hline\n\\end{tabular}\n";
    }
    return os.str();
}

inline int exit_code(errc c) {
    if (c == errc::mu_not_regular_value)
        return 2;
    if (is_consistency_failure(c))
        return 4;
    return 3;
}

inline std::string error_json(std::string_view name, std::string_view message) {
    return json{{"error", std::string(name)}, {"message", std::string(message)}}.dump() + "\n";
}

/// Runs one command. Output goes to `out`, error objects and warnings to
/// `err`; the return value is the process exit code.
inline int run(job_config config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        auto rs = root_system::build(config.type_label, config.rank, config.max_rank);
        report r;
        if (config.command == "roots") {
            r = roots_report(rs);
        } else if (config.command == "weyl") {
            r = weyl_report(weyl_group::generate(rs, config.max_rank));
        } else {
            auto b = cached_basis(rs, config.cache_dir, config.threads, config.max_rank, &err);
            std::optional<orbit_parameter> orbit;
            std::optional<tvector> mu;
            if (!config.lambda.empty()) {
                orbit = orbit_parameter::make(rs, b.group(), config.lambda);
                mu = rs.from_fundamental_coords(config.mu);
            }
            if (config.command == "restrict")
                r = restrict_report(b);
            else if (config.command == "kernel")
                r = kernel_report(b, *orbit, *mu, config.threads);
            else if (config.command == "betti")
                r = betti_report(b, *orbit, *mu, config.dmax, config.threads);
            else if (config.command == "oracle-compare")
                r = oracle_compare_report(b, *orbit, *mu, config.dmax, config.threads);
            else
                r = check_report(b, orbit, mu, config.seed, config.threads);
        }
        out << render(r, config.format);
        return r.ok ? 0 : 4;
    } catch (const error& e) {
        err << error_json(errc_name(e.code()), e.message());
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << error_json("InternalError", e.what());
        return 4;
    }
}

} // namespace weightvar
