#pragma once

/**
 * @file report.hpp
 * @brief Job files, the analysis driver and its report (JSON and text).
 *
 * Job grammar, statements separated by ';', '#' starts a comment:
 *
 *   ring Q[x,y,z,t];            # or F32003[...], ZZ/32003[...]
 *   ideal x^3-y^7, x^2*y-x*t^3-z^6;
 *   semigroup 9 17 19 39;       # instead of ideal; variables default to x1..xn
 *   analyze full;               # tangent-cone betti gin lex ld alfa sym full
 *   seed 7;
 *   cap lex 128;                # lex | hilbert | reductions
 */

#include "companions.hpp"
#include "invariants.hpp"
#include "ring.hpp"

#include <json.hpp>

#include <chrono>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace gradlift {

inline const std::vector<std::string>& analysis_names()
{
    static const std::vector<std::string> n{"tangent-cone", "betti", "gin", "lex", "ld", "alfa", "sym", "full"};
    return n;
}

struct JobSpec {
    std::uint32_t modulus = 0; ///< 0 for Q
    std::vector<std::string> vars;
    std::vector<std::string> generators;
    std::vector<int> semigroup;
    std::set<std::string> analyses;
    std::uint64_t seed = 1;
    int lex_cap = 128;
    int hilbert_cap = 64;
    std::size_t reduction_cap = 1'000'000;
    std::string source;

    bool wants(const std::string& a) const { return analyses.count(a) || analyses.count("full"); }
    std::string field_name() const { return modulus ? "F" + std::to_string(modulus) : "Q"; }
};

namespace detail {

struct Cursor {
    const std::string& text;
    std::size_t line_of(std::size_t pos) const
    {
        return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
    }
    std::size_t col_of(std::size_t pos) const
    {
        std::size_t nl = text.rfind('\n', pos == 0 ? 0 : pos - 1);
        if (pos == 0 || nl == std::string::npos)
            return pos + 1;
        return pos - nl;
    }
    [[noreturn]] void fail(std::size_t pos, const std::string& msg) const
    {
        throw InputError("line " + std::to_string(line_of(pos)) + ", column " + std::to_string(col_of(pos)) + ": " +
                         msg);
    }
};

inline std::size_t skip_space(const std::string& s, std::size_t p, std::size_t end)
{
    while (p < end && std::isspace(static_cast<unsigned char>(s[p])))
        ++p;
    return p;
}

/// Pieces of [begin, end) split at `sep` characters, trimmed, with their start offsets.
inline std::vector<std::pair<std::string, std::size_t>> split_at(const std::string& s, std::size_t begin,
                                                                  std::size_t end, const std::string& seps,
                                                                  bool keep_empty = false)
{
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t p = begin;
    while (p <= end) {
        std::size_t q = p;
        while (q < end && seps.find(s[q]) == std::string::npos)
            ++q;
        std::size_t a = skip_space(s, p, q), b = q;
        while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
            --b;
        if (b > a)
            out.emplace_back(s.substr(a, b - a), a);
        else if (keep_empty && q < end)
            out.emplace_back(std::string(), a);
        p = q + 1;
    }
    return out;
}

inline long parse_long(const Cursor& c, const std::string& tok, std::size_t pos, const std::string& what)
{
    if (tok.empty() || tok.size() > 18 || !std::all_of(tok.begin(), tok.end(), ::isdigit))
        c.fail(pos, what + " must be a non-negative integer, got \"" + tok + "\"");
    return std::stol(tok);
}

template <class F>
void check_generators(const JobSpec& j, const F& field, const Cursor& c, const std::vector<std::size_t>& at)
{
    Ring<F> R(j.vars, field, RingMode::Local);
    static const std::regex posrx("at position ([0-9]+)");
    for (std::size_t i = 0; i < j.generators.size(); ++i) {
        try {
            auto p = R.parse(j.generators[i]);
            if (p.is_zero())
                c.fail(at[i], "generator " + std::to_string(i + 1) + " is zero");
            if (valuation(p) < 1)
                c.fail(at[i], "generator " + std::to_string(i + 1) + " is a unit in the local ring");
        } catch (const InputError& e) {
            std::string msg = e.what();
            if (msg.rfind("line ", 0) == 0)
                throw;
            std::smatch m;
            std::size_t off = 0;
            if (std::regex_search(msg, m, posrx))
                off = std::stoul(m[1]) - 1;
            c.fail(at[i] + off, msg);
        }
    }
}

} // namespace detail

inline JobSpec parse_job(const std::string& text)
{
    JobSpec j;
    j.source = text;
    std::string s = text;
    // blank out comments, keeping offsets
    for (std::size_t p = 0; p < s.size(); ++p)
        if (s[p] == '#')
            while (p < s.size() && s[p] != '\n')
                s[p++] = ' ';
    detail::Cursor c{text};
    bool have_ring = false, have_ideal = false;
    std::size_t ring_pos = 0, ideal_pos = 0;
    std::vector<std::size_t> gen_pos;
    std::size_t p = 0;
    while (p < s.size()) {
        std::size_t end = s.find(';', p);
        bool terminated = end != std::string::npos;
        if (!terminated)
            end = s.size();
        std::size_t a = detail::skip_space(s, p, end);
        if (a == end) {
            p = end + 1;
            continue;
        }
        if (!terminated)
            c.fail(a, "missing ';' after statement");
        std::size_t k = a;
        while (k < end && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '-'))
            ++k;
        std::string kw = s.substr(a, k - a);
        std::size_t rest = detail::skip_space(s, k, end);
        std::size_t rend = end;
        while (rend > rest && std::isspace(static_cast<unsigned char>(s[rend - 1])))
            --rend;
        std::string body = s.substr(rest, rend - rest);
        if (kw == "ring") {
            if (have_ring)
                c.fail(a, "ring declared twice");
            static const std::regex rx(R"(^(QQ|Q|F([0-9]+)|ZZ/([0-9]+))\s*\[([^\]]*)\]$)");
            std::smatch m;
            if (!std::regex_match(body, m, rx))
                c.fail(rest, "expected ring like Q[x,y] or F32003[x,y]");
            std::string mod = m[2].matched ? m[2].str() : (m[3].matched ? m[3].str() : "");
            if (!mod.empty()) {
                long q = detail::parse_long(c, mod, rest, "modulus");
                if (q < 2 || q >= (1L << 31) || !is_prime_u32(static_cast<std::uint32_t>(q)))
                    c.fail(rest, "modulus " + mod + " is not a prime below 2^31");
                j.modulus = static_cast<std::uint32_t>(q);
            }
            std::size_t vstart = rest + static_cast<std::size_t>(m.position(4));
            for (auto& [v, at] : detail::split_at(s, vstart, vstart + m[4].length(), ","))
                j.vars.push_back(v);
            if (j.vars.size() + 1 > static_cast<std::size_t>(kMaxVars))
                c.fail(vstart, "at most " + std::to_string(kMaxVars - 1) + " variables (one slot is kept for homogenizing)");
            try {
                Ring<RationalField> probe(j.vars, RationalField{}, RingMode::Local);
            } catch (const InputError& e) {
                c.fail(vstart, e.what());
            }
            have_ring = true;
            ring_pos = a;
        } else if (kw == "ideal") {
            if (have_ideal)
                c.fail(a, "ideal given twice");
            for (auto& [g, at] : detail::split_at(s, rest, rend, ",", true)) {
                if (g.empty())
                    c.fail(at, "empty generator");
                j.generators.push_back(g);
                gen_pos.push_back(at);
            }
            if (j.generators.empty())
                c.fail(rest, "ideal needs at least one generator");
            have_ideal = true;
            ideal_pos = a;
        } else if (kw == "semigroup") {
            if (have_ideal)
                c.fail(a, "ideal given twice");
            for (auto& [t, at] : detail::split_at(s, rest, rend, " \t\n\r,")) {
                long e = detail::parse_long(c, t, at, "semigroup exponent");
                if (e < 1 || e > 1000)
                    c.fail(at, "semigroup exponent out of range 1..1000");
                j.semigroup.push_back(static_cast<int>(e));
            }
            if (j.semigroup.empty())
                c.fail(rest, "semigroup needs exponents");
            have_ideal = true;
            ideal_pos = a;
        } else if (kw == "analyze") {
            for (auto& [t, at] : detail::split_at(s, rest, rend, " \t\n\r,")) {
                if (std::find(analysis_names().begin(), analysis_names().end(), t) == analysis_names().end())
                    c.fail(at, "unknown analysis \"" + t + "\"");
                j.analyses.insert(t);
            }
        } else if (kw == "seed") {
            j.seed = static_cast<std::uint64_t>(detail::parse_long(c, body, rest, "seed"));
        } else if (kw == "cap") {
            auto parts = detail::split_at(s, rest, rend, " \t\n\r");
            if (parts.size() != 2)
                c.fail(rest, "expected 'cap <lex|hilbert|reductions> N'");
            long v = detail::parse_long(c, parts[1].first, parts[1].second, "cap");
            if (v <= 0)
                c.fail(parts[1].second, "caps must be positive");
            if (parts[0].first == "lex")
                j.lex_cap = static_cast<int>(std::min(v, 100000L));
            else if (parts[0].first == "hilbert")
                j.hilbert_cap = static_cast<int>(std::min(v, 100000L));
            else if (parts[0].first == "reductions")
                j.reduction_cap = static_cast<std::size_t>(v);
            else
                c.fail(parts[0].second, "unknown cap \"" + parts[0].first + "\"");
        } else {
            c.fail(a, "unknown statement \"" + kw + "\"");
        }
        p = end + 1;
    }
    if (!have_ideal)
        c.fail(s.size(), "no ideal or semigroup given");
    if (j.analyses.empty())
        c.fail(s.size(), "no analysis requested");
    if (!j.semigroup.empty()) {
        if (!have_ring)
            for (std::size_t i = 0; i < j.semigroup.size(); ++i)
                j.vars.push_back("x" + std::to_string(i + 1));
        else if (j.vars.size() != j.semigroup.size())
            c.fail(ring_pos, "semigroup needs one variable per exponent");
        if (j.semigroup.size() + 1 > static_cast<std::size_t>(kMaxVars))
            c.fail(ideal_pos, "too many semigroup exponents");
    } else {
        if (!have_ring)
            c.fail(ideal_pos, "ideal given before any ring declaration");
        if (j.modulus)
            detail::check_generators(j, PrimeField(j.modulus), c, gen_pos);
        else
            detail::check_generators(j, RationalField{}, c, gen_pos);
    }
    return j;
}

/// Equivalence block: three booleans that must agree.
struct EquivalenceBlock {
    bool mu_equal = false;    ///< μ(I) = μ(companion)
    bool betti_equal = false; ///< β_i(I) = β_i(I*) = β_i(companion) for all i
    bool hypotheses = false;  ///< μ(I) = μ(I*) and I* componentwise linear (resp. Gotzmann)
    bool consistent() const { return mu_equal == betti_equal && betti_equal == hypotheses; }
    bool operator==(const EquivalenceBlock&) const = default;
};

struct SymBlock {
    int dim = 0;
    std::optional<int> depth_bound;
    bool exact = false;
    int depth_A = 0;
    int dim_A = 0;
    bool cohen_macaulay = false;
    bool operator==(const SymBlock&) const = default;
};

struct AnalysisReport {
    int schema = 1;
    std::string input;
    std::string field;
    std::vector<std::string> vars;
    std::vector<std::string> generators; ///< I as analysed
    std::vector<int> semigroup;
    std::vector<std::string> analyses;
    std::uint64_t seed = 1;

    std::optional<int> mu_local, mu_tangent, mu_gin, mu_lex;
    std::optional<std::vector<std::string>> tangent_cone, gin, lex;
    std::optional<std::vector<long>> betti_local, betti_tangent, betti_gin, betti_lex; ///< totals for the ideal
    std::optional<BettiTable> graded_tangent, graded_gin, graded_lex;
    std::optional<std::vector<int>> local_ranks_before; ///< ranks of the lifted (non-minimal) complex
    std::optional<int> cancellations;

    std::optional<bool> min_standard_base, componentwise_linear, homogeneous_type, gotzmann, koszul;
    std::optional<int> ld;
    std::optional<std::vector<bool>> homology_zero; ///< H_i(lin) = 0 for i = 0..
    std::optional<int> pd, depth;
    std::optional<std::vector<long>> alpha, alpha_bound, beta_quotient;
    std::optional<bool> alfa_equality, alfa_inequality;
    std::optional<SymBlock> sym;
    std::optional<EquivalenceBlock> tangent_gin_block, lex_block;

    std::vector<std::string> capped;
    std::vector<std::string> notes;
    double seconds = 0; ///< not compared

    bool operator==(const AnalysisReport& o) const
    {
        auto tie = [](const AnalysisReport& r) {
            return std::tie(r.schema, r.input, r.field, r.vars, r.generators, r.semigroup, r.analyses, r.seed,
                            r.mu_local, r.mu_tangent, r.mu_gin, r.mu_lex, r.tangent_cone, r.gin, r.lex, r.betti_local,
                            r.betti_tangent, r.betti_gin, r.betti_lex, r.graded_tangent, r.graded_gin, r.graded_lex,
                            r.local_ranks_before, r.cancellations, r.min_standard_base, r.componentwise_linear,
                            r.homogeneous_type, r.gotzmann, r.koszul, r.ld, r.homology_zero, r.pd, r.depth, r.alpha,
                            r.alpha_bound, r.beta_quotient, r.alfa_equality, r.alfa_inequality, r.sym,
                            r.tangent_gin_block, r.lex_block, r.capped, r.notes);
        };
        return tie(*this) == tie(o);
    }
};

namespace detail {

template <class F>
std::vector<std::string> format_all(const Ring<F>& R, const std::vector<Poly<typename F::value_type>>& ps)
{
    std::vector<std::string> out;
    for (const auto& p : ps)
        out.push_back(R.format(p));
    return out;
}

template <class F>
std::vector<std::string> format_monomials(const Ring<F>& R, const MonomialIdeal& I)
{
    std::vector<std::string> out;
    for (const auto& m : I.generators)
        out.push_back(R.format_monomial(m));
    return out;
}

inline bool padded_equal(std::vector<long> a, std::vector<long> b)
{
    std::size_t n = std::max(a.size(), b.size());
    a.resize(n, 0);
    b.resize(n, 0);
    return a == b;
}

template <class F>
AnalysisReport run_with_field(const JobSpec& spec, const F& field)
{
    using K = typename F::value_type;
    auto t0 = std::chrono::steady_clock::now();
    AnalysisReport rep;
    rep.input = spec.source;
    rep.field = spec.field_name();
    rep.vars = spec.vars;
    rep.semigroup = spec.semigroup;
    rep.seed = spec.seed;
    rep.analyses.assign(spec.analyses.begin(), spec.analyses.end());
    BasisOptions opts;
    opts.reduction_cap = spec.reduction_cap;
    Ring<F> R(spec.vars, field, RingMode::Local);
    auto finish = [&] {
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    };

    std::optional<FilteredIdeal<K>> ideal;
    try {
        if (!spec.semigroup.empty()) {
            ideal = semigroup_defining_ideal(spec.semigroup, field, opts);
        } else {
            std::vector<Poly<K>> g;
            for (const auto& s : spec.generators)
                g.push_back(R.parse(s));
            ideal = FilteredIdeal<K>(static_cast<int>(spec.vars.size()), g);
        }
    } catch (const CapExceeded& e) {
        rep.capped.push_back(std::string("ideal: ") + e.what());
        return finish();
    }
    const FilteredIdeal<K>& I = *ideal;
    rep.generators = format_all(R, I.generators());

    std::optional<LocalAnalysis<K>> ctx;
    try {
        ctx = analyze_local(I, opts);
    } catch (const CapExceeded& e) {
        rep.capped.push_back(std::string("local resolution: ") + e.what());
        return finish();
    }
    const LocalAnalysis<K>& a = *ctx;
    const GradedModule<K>& Istar = a.tangent.ideal;
    const std::vector<long> bI = a.minimal.betti;
    const std::vector<long> bT = betti_table(a.lift.graded).totals();
    const K one = field.from_int(1);

    if (spec.wants("tangent-cone")) {
        rep.tangent_cone = format_all(R, Istar.generators);
        rep.mu_local = a.mu;
        rep.mu_tangent = a.mu_tangent;
        rep.min_standard_base = a.min_standard_base();
    }
    if (spec.wants("betti")) {
        rep.betti_local = bI;
        rep.betti_tangent = bT;
        rep.graded_tangent = betti_table(a.lift.graded);
        std::vector<int> ranks;
        for (long r : total_ranks(a.lift.local))
            ranks.push_back(static_cast<int>(r));
        rep.local_ranks_before = ranks;
        rep.cancellations = static_cast<int>(a.minimal.log.size());
        rep.homogeneous_type = homogeneous_type_verdict(a).value;
        auto dp = depth_and_pd(a);
        rep.pd = dp.pd;
        rep.depth = dp.depth;
    }
    if (spec.wants("gin") || spec.wants("lex"))
        rep.componentwise_linear = a.componentwise_linear;
    if (spec.wants("gin")) {
        if constexpr (std::is_same_v<K, Rational>) {
            try {
                GinOptions go;
                go.seed = spec.seed;
                go.basis = opts;
                GinResult g = generic_initial_ideal(Istar, go);
                GradedModule<K> G = as_graded(g.ideal, one);
                BettiTable BG = graded_betti(G, opts);
                rep.gin = format_monomials(R, g.ideal);
                rep.mu_gin = static_cast<int>(g.ideal.generators.size());
                rep.betti_gin = BG.totals();
                rep.graded_gin = BG;
                if (!hilbert_functions_agree({hilbert_series_of_quotient(Istar), hilbert_series_of_quotient(G)},
                                             spec.hilbert_cap))
                    throw InvariantViolation("Hilbert functions of P/I* and P/Gin differ");
                EquivalenceBlock b;
                b.mu_equal = a.mu == *rep.mu_gin;
                b.betti_equal = padded_equal(bI, bT) && padded_equal(bT, BG.totals());
                b.hypotheses = a.hypotheses();
                if (!b.consistent())
                    throw InvariantViolation("tangent cone / Gin equivalence violated");
                rep.tangent_gin_block = b;
            } catch (const CapExceeded& e) {
                rep.capped.push_back(std::string("gin: ") + e.what());
            }
        } else {
            rep.notes.push_back("gin: generic initial ideals are computed over Q only");
        }
    }
    if (spec.wants("lex")) {
        try {
            LexOptions lo;
            lo.cap = spec.lex_cap;
            MonomialIdeal L = lex_ideal(Istar, lo);
            GradedModule<K> LG = as_graded(L, one);
            BettiTable BL = graded_betti(LG, opts);
            rep.lex = format_monomials(R, L);
            rep.mu_lex = static_cast<int>(L.generators.size());
            rep.betti_lex = BL.totals();
            rep.graded_lex = BL;
            rep.gotzmann = a.mu_tangent == *rep.mu_lex;
            if (*rep.gotzmann != is_gotzmann(Istar))
                throw InvariantViolation("Gotzmann: mu(Lex) test and Macaulay-bound test disagree");
            if (!hilbert_functions_agree({hilbert_series_of_quotient(Istar), hilbert_series_of_quotient(LG)},
                                         spec.hilbert_cap))
                throw InvariantViolation("Hilbert functions of P/I* and P/Lex differ");
            EquivalenceBlock b;
            b.mu_equal = a.mu == *rep.mu_lex;
            b.betti_equal = padded_equal(bI, bT) && padded_equal(bT, BL.totals());
            b.hypotheses = a.min_standard_base() && *rep.gotzmann;
            if (!b.consistent())
                throw InvariantViolation("tangent cone / Lex equivalence violated");
            rep.lex_block = b;
        } catch (const CapExceeded& e) {
            rep.capped.push_back(std::string("lex: ") + e.what());
        }
    }
    if (spec.wants("ld")) {
        auto lr = linearity_report(a.minimal.complex, opts);
        rep.ld = lr.ld;
        rep.koszul = lr.ld == 0;
        rep.homology_zero = lr.homology_zero;
    }
    if (spec.wants("alfa")) {
        try {
            AlfaCheck c = annihilator_bound_check(a, spec.seed);
            rep.alpha = c.alpha.alpha;
            rep.alpha_bound = c.bound;
            rep.beta_quotient = c.beta;
            rep.alfa_equality = c.equality;
            rep.alfa_inequality = c.inequality;
            if (!c.passed)
                throw InvariantViolation("Betti numbers and annihilator numbers are inconsistent");
            if (!field.characteristic_zero())
                rep.notes.push_back("alfa: annihilator numbers drawn over a prime field");
        } catch (const CapExceeded& e) {
            rep.capped.push_back(std::string("alfa: ") + e.what());
        }
    }
    if (spec.wants("sym")) {
        bool in_square = true;
        for (const auto& g : I.generators())
            in_square = in_square && valuation(g) >= 2;
        if (!in_square) {
            if (spec.analyses.count("sym"))
                throw InputError("sym: I must lie in the square of the maximal ideal");
            rep.notes.push_back("sym: skipped, I is not contained in the square of the maximal ideal");
        } else {
            auto s = symmetric_algebra_report(a);
            rep.sym = SymBlock{s.dim, s.depth_bound, s.exact, s.depth_A, s.dim_A, s.cohen_macaulay};
        }
    }
    return finish();
}

} // namespace detail

inline AnalysisReport run_analysis(const JobSpec& spec)
{
    if (spec.modulus)
        return detail::run_with_field(spec, PrimeField(spec.modulus));
    return detail::run_with_field(spec, RationalField{});
}

// ---- JSON ----

inline nlohmann::json betti_to_json(const BettiTable& B)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [k, v] : B.entries())
        if (v != 0)
            a.push_back({k.first, k.second, v});
    return a;
}

inline BettiTable betti_from_json(const nlohmann::json& a)
{
    BettiTable B;
    for (const auto& e : a)
        B.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long>());
    return B;
}

namespace detail {

template <class T>
void put(nlohmann::json& j, const char* key, const std::optional<T>& v)
{
    if (v)
        j[key] = *v;
}

template <class T>
void get(const nlohmann::json& j, const char* key, std::optional<T>& v)
{
    if (j.contains(key) && !j.at(key).is_null())
        v = j.at(key).get<T>();
}

inline nlohmann::json block_to_json(const EquivalenceBlock& b)
{
    return {{"mu_equal", b.mu_equal}, {"betti_equal", b.betti_equal}, {"hypotheses", b.hypotheses},
            {"consistent", b.consistent()}};
}

inline EquivalenceBlock block_from_json(const nlohmann::json& j)
{
    return EquivalenceBlock{j.at("mu_equal").get<bool>(), j.at("betti_equal").get<bool>(),
                            j.at("hypotheses").get<bool>()};
}

} // namespace detail

inline nlohmann::json to_json(const AnalysisReport& r)
{
    using nlohmann::json;
    json j;
    j["schema"] = r.schema;
    j["input"] = r.input;
    j["field"] = r.field;
    j["vars"] = r.vars;
    j["generators"] = r.generators;
    if (!r.semigroup.empty())
        j["semigroup"] = r.semigroup;
    j["analyses"] = r.analyses;
    j["seed"] = r.seed;
    json mu = json::object();
    detail::put(mu, "local", r.mu_local);
    detail::put(mu, "tangent", r.mu_tangent);
    detail::put(mu, "gin", r.mu_gin);
    detail::put(mu, "lex", r.mu_lex);
    if (!mu.empty())
        j["mu"] = mu;
    detail::put(j, "tangent_cone", r.tangent_cone);
    detail::put(j, "gin", r.gin);
    detail::put(j, "lex", r.lex);
    json betti = json::object();
    detail::put(betti, "local", r.betti_local);
    detail::put(betti, "tangent", r.betti_tangent);
    detail::put(betti, "gin", r.betti_gin);
    detail::put(betti, "lex", r.betti_lex);
    if (r.graded_tangent)
        betti["graded_tangent"] = betti_to_json(*r.graded_tangent);
    if (r.graded_gin)
        betti["graded_gin"] = betti_to_json(*r.graded_gin);
    if (r.graded_lex)
        betti["graded_lex"] = betti_to_json(*r.graded_lex);
    if (!betti.empty())
        j["betti"] = betti;
    if (r.local_ranks_before || r.cancellations) {
        json lr = json::object();
        detail::put(lr, "ranks_before", r.local_ranks_before);
        detail::put(lr, "cancellations", r.cancellations);
        j["local_resolution"] = lr;
    }
    json v = json::object();
    detail::put(v, "min_standard_base", r.min_standard_base);
    detail::put(v, "componentwise_linear", r.componentwise_linear);
    detail::put(v, "homogeneous_type", r.homogeneous_type);
    detail::put(v, "gotzmann", r.gotzmann);
    detail::put(v, "koszul", r.koszul);
    if (!v.empty())
        j["verdicts"] = v;
    detail::put(j, "ld", r.ld);
    detail::put(j, "homology_zero", r.homology_zero);
    detail::put(j, "pd", r.pd);
    detail::put(j, "depth", r.depth);
    detail::put(j, "alpha", r.alpha);
    detail::put(j, "alpha_bound", r.alpha_bound);
    detail::put(j, "beta_quotient", r.beta_quotient);
    detail::put(j, "alfa_equality", r.alfa_equality);
    detail::put(j, "alfa_inequality", r.alfa_inequality);
    if (r.alpha)
        j["alpha_side"] = "graded";
    if (r.sym) {
        json s = {{"dim", r.sym->dim},
                  {"depth_bound", r.sym->depth_bound ? json(*r.sym->depth_bound) : json(nullptr)},
                  {"exact", r.sym->exact},
                  {"depth_A", r.sym->depth_A},
                  {"dim_A", r.sym->dim_A},
                  {"cohen_macaulay", r.sym->cohen_macaulay}};
        j["sym"] = s;
    }
    if (r.tangent_gin_block)
        j["equivalence_gin"] = detail::block_to_json(*r.tangent_gin_block);
    if (r.lex_block)
        j["equivalence_lex"] = detail::block_to_json(*r.lex_block);
    j["capped"] = r.capped;
    j["notes"] = r.notes;
    j["timing"] = {{"seconds", r.seconds}};
    return j;
}

inline AnalysisReport report_from_json(const nlohmann::json& j)
{
    AnalysisReport r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != 1)
        throw InputError("unsupported report schema " + std::to_string(r.schema));
    r.input = j.at("input").get<std::string>();
    r.field = j.at("field").get<std::string>();
    r.vars = j.at("vars").get<std::vector<std::string>>();
    r.generators = j.at("generators").get<std::vector<std::string>>();
    if (j.contains("semigroup"))
        r.semigroup = j.at("semigroup").get<std::vector<int>>();
    r.analyses = j.at("analyses").get<std::vector<std::string>>();
    r.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("mu")) {
        const auto& mu = j.at("mu");
        detail::get(mu, "local", r.mu_local);
        detail::get(mu, "tangent", r.mu_tangent);
        detail::get(mu, "gin", r.mu_gin);
        detail::get(mu, "lex", r.mu_lex);
    }
    detail::get(j, "tangent_cone", r.tangent_cone);
    detail::get(j, "gin", r.gin);
    detail::get(j, "lex", r.lex);
    if (j.contains("betti")) {
        const auto& b = j.at("betti");
        detail::get(b, "local", r.betti_local);
        detail::get(b, "tangent", r.betti_tangent);
        detail::get(b, "gin", r.betti_gin);
        detail::get(b, "lex", r.betti_lex);
        if (b.contains("graded_tangent"))
            r.graded_tangent = betti_from_json(b.at("graded_tangent"));
        if (b.contains("graded_gin"))
            r.graded_gin = betti_from_json(b.at("graded_gin"));
        if (b.contains("graded_lex"))
            r.graded_lex = betti_from_json(b.at("graded_lex"));
    }
    if (j.contains("local_resolution")) {
        detail::get(j.at("local_resolution"), "ranks_before", r.local_ranks_before);
        detail::get(j.at("local_resolution"), "cancellations", r.cancellations);
    }
    if (j.contains("verdicts")) {
        const auto& v = j.at("verdicts");
        detail::get(v, "min_standard_base", r.min_standard_base);
        detail::get(v, "componentwise_linear", r.componentwise_linear);
        detail::get(v, "homogeneous_type", r.homogeneous_type);
        detail::get(v, "gotzmann", r.gotzmann);
        detail::get(v, "koszul", r.koszul);
    }
    detail::get(j, "ld", r.ld);
    detail::get(j, "homology_zero", r.homology_zero);
    detail::get(j, "pd", r.pd);
    detail::get(j, "depth", r.depth);
    detail::get(j, "alpha", r.alpha);
    detail::get(j, "alpha_bound", r.alpha_bound);
    detail::get(j, "beta_quotient", r.beta_quotient);
    detail::get(j, "alfa_equality", r.alfa_equality);
    detail::get(j, "alfa_inequality", r.alfa_inequality);
    if (j.contains("sym")) {
        const auto& s = j.at("sym");
        SymBlock b;
        b.dim = s.at("dim").get<int>();
        if (!s.at("depth_bound").is_null())
            b.depth_bound = s.at("depth_bound").get<int>();
        b.exact = s.at("exact").get<bool>();
        b.depth_A = s.at("depth_A").get<int>();
        b.dim_A = s.at("dim_A").get<int>();
        b.cohen_macaulay = s.at("cohen_macaulay").get<bool>();
        r.sym = b;
    }
    if (j.contains("equivalence_gin"))
        r.tangent_gin_block = detail::block_from_json(j.at("equivalence_gin"));
    if (j.contains("equivalence_lex"))
        r.lex_block = detail::block_from_json(j.at("equivalence_lex"));
    r.capped = j.at("capped").get<std::vector<std::string>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("timing"))
        r.seconds = j.at("timing").at("seconds").get<double>();
    return r;
}

// ---- text ----

inline std::string render_text(const AnalysisReport& r)
{
    std::ostringstream o;
    auto list = [&](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + v[i];
        return s;
    };
    auto nums = [&](const std::vector<long>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + std::to_string(v[i]);
        return s + ")";
    };
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::string vars;
    for (std::size_t i = 0; i < r.vars.size(); ++i)
        vars += (i ? "," : "") + r.vars[i];
    o << "ring      " << r.field << "[[" << vars << "]]\n";
    o << "I         " << list(r.generators) << "\n";
    if (r.tangent_cone)
        o << "I*        " << list(*r.tangent_cone) << "\n";
    if (r.mu_local)
        o << "mu        I " << *r.mu_local << ", I* " << *r.mu_tangent
          << (r.mu_gin ? ", Gin " + std::to_string(*r.mu_gin) : "")
          << (r.mu_lex ? ", Lex " + std::to_string(*r.mu_lex) : "") << "\n";
    if (r.gin)
        o << "Gin       " << list(*r.gin) << "\n";
    if (r.lex)
        o << "Lex       " << (r.lex->size() > 12 ? std::to_string(r.lex->size()) + " generators" : list(*r.lex))
          << "\n";
    if (r.betti_local)
        o << "betti     I " << nums(*r.betti_local) << ", I* " << nums(*r.betti_tangent) << "\n";
    if (r.betti_gin)
        o << "betti Gin " << nums(*r.betti_gin) << "\n";
    if (r.betti_lex)
        o << "betti Lex " << nums(*r.betti_lex) << "\n";
    if (r.graded_tangent) {
        o << "graded betti of I* (i: j^b ...)\n";
        int last = -1;
        for (const auto& [k, v] : r.graded_tangent->entries()) {
            if (k.first != last) {
                o << (last >= 0 ? "\n" : "") << "  " << k.first << ":";
                last = k.first;
            }
            o << " " << k.second << "^" << v;
        }
        o << "\n";
    }
    if (r.pd)
        o << "pd(R/I)   " << *r.pd << ", depth " << *r.depth << "\n";
    if (r.min_standard_base)
        o << "minimal standard base   " << yn(*r.min_standard_base) << "\n";
    if (r.componentwise_linear)
        o << "I* componentwise linear " << yn(*r.componentwise_linear) << "\n";
    if (r.homogeneous_type)
        o << "homogeneous type        " << yn(*r.homogeneous_type) << "\n";
    if (r.gotzmann)
        o << "I* Gotzmann             " << yn(*r.gotzmann) << "\n";
    if (r.ld)
        o << "ld(I)                   " << *r.ld << " (Koszul " << yn(*r.koszul) << ")\n";
    if (r.alpha)
        o << "alpha (graded side)     " << nums(*r.alpha) << ", bound " << nums(*r.alpha_bound) << ", beta(R/I) "
          << nums(*r.beta_quotient) << ", equality " << yn(*r.alfa_equality) << "\n";
    if (r.sym) {
        o << "sym       dim " << r.sym->dim << ", depth ";
        if (r.sym->depth_bound)
            o << (r.sym->exact ? "= " : ">= ") << *r.sym->depth_bound;
        else
            o << "unknown";
        o << "\n";
    }
    if (r.tangent_gin_block)
        o << "equivalence (Gin)       " << yn(r.tangent_gin_block->mu_equal) << "/"
          << yn(r.tangent_gin_block->betti_equal) << "/" << yn(r.tangent_gin_block->hypotheses) << "\n";
    if (r.lex_block)
        o << "equivalence (Lex)       " << yn(r.lex_block->mu_equal) << "/" << yn(r.lex_block->betti_equal) << "/"
          << yn(r.lex_block->hypotheses) << "\n";
    for (const auto& c : r.capped)
        o << "CAPPED    " << c << "\n";
    for (const auto& n : r.notes)
        o << "note      " << n << "\n";
    o << "seed " << r.seed << ", " << r.seconds << " s\n";
    return o.str();
}

} // namespace gradlift
