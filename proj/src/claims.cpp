#include "floorsums/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <tuple>

#include <json.hpp>

#include "floorsums/coverage.hpp"
#include "floorsums/primeseq.hpp"
#include "floorsums/ternary.hpp"

namespace fsum {
namespace {

using std::string;
using std::vector;

// ---------------------------------------------------------------- builders

TermSpec ft(const AtomSpec& a, i64 den, const char* var, i64 coeff = 1) {
    return simple_term(Rounding::Floor, a, den, coeff, var);
}
TermSpec ct(const AtomSpec& a, i64 den, const char* var, i64 coeff = 1) {
    return simple_term(Rounding::Ceil, a, den, coeff, var);
}
TermSpec et(const AtomSpec& a, i64 den, const char* var, i64 coeff = 1) {
    return simple_term(Rounding::Exact, a, den, coeff, var);
}

TermSpec with_parity(TermSpec t, i64 residue) {
    t.constraints.push_back({t.numerator.at(0).var, 2, {residue}});
    return t;
}

CoverageProblem prob(vector<TermSpec> ts, i64 lo = 0,
                     CrossConstraint cross = CrossConstraint::None) {
    CoverageProblem p;
    p.terms = std::move(ts);
    p.cross = cross;
    p.lo = lo; // per-instance floor; run windows clamp to max(p.lo, window lo)
    return p;
}

vector<i64> run_cov(CoverageProblem p, i64 lo, i64 hi, int jobs) {
    p.lo = std::max(p.lo, lo);
    p.hi = hi;
    p.jobs = jobs;
    if (p.lo > p.hi) return {};
    return coverage_scan(p).gaps;
}

using Window = std::function<vector<i64>(i64, i64, int, i64)>;

// findings = union of gaps over a family of problems
Window cov_window(vector<CoverageProblem> protos) {
    return [protos = std::move(protos)](i64 lo, i64 hi, int jobs, i64) {
        std::set<i64> out;
        for (const auto& proto : protos)
            for (i64 g : run_cov(proto, lo, hi, jobs)) out.insert(g);
        return vector<i64>(out.begin(), out.end());
    };
}

// findings = instance codes whose problem has any gap in the window
Window box_window(vector<std::pair<i64, CoverageProblem>> coded) {
    return [coded = std::move(coded)](i64 lo, i64 hi, int jobs, i64) {
        vector<i64> out;
        for (const auto& [code, proto] : coded)
            if (!run_cov(proto, lo, hi, jobs).empty()) out.push_back(code);
        std::sort(out.begin(), out.end());
        return out;
    };
}

// window domain is the free denominator c; findings = code_base + c for every
// c whose instantiated family has a gap in [0, inner_n]
Window divisor_window(vector<std::tuple<i64, CoverageProblem, size_t>> entries,
                      i64 inner_n) {
    return [entries = std::move(entries), inner_n](i64 clo, i64 chi, int jobs, i64) {
        clo = std::max<i64>(clo, 1);
        vector<i64> out;
        for (const auto& [base, proto, slot] : entries) {
            if (clo > chi) break;
            auto p = proto;
            p.hi = inner_n;
            auto per_c = exceptional_divisors_scan(p, slot, clo, chi, jobs);
            for (const auto& [c, gaps] : per_c)
                if (!gaps.empty()) out.push_back(base + c);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
}

// findings = n in the window failing a per-n predicate (true = statement holds
// or hypothesis does not apply)
Window pred_window(std::function<bool(i64)> holds) {
    return [holds = std::move(holds)](i64 lo, i64 hi, int, i64) {
        vector<i64> out;
        for (i64 n = lo; n <= hi; ++n)
            if (!holds(n)) out.push_back(n);
        return out;
    };
}

i64 triple_code(i64 a, i64 b, i64 c) { return a * 100 + b * 10 + c; }

vector<std::array<i64, 3>> sorted_triples(i64 maxc) {
    vector<std::array<i64, 3>> out;
    for (i64 a = 1; a <= maxc; ++a)
        for (i64 b = a; b <= maxc; ++b)
            for (i64 c = b; c <= maxc; ++c) out.push_back({a, b, c});
    return out;
}

bool excluded(const vector<std::array<i64, 3>>& skip, std::array<i64, 3> t) {
    return std::find(skip.begin(), skip.end(), t) != skip.end();
}

bool is_pow2(i64 n) { return n > 0 && (n & (n - 1)) == 0; }

// ------------------------------------------------------- bespoke predicates

// 5x^2+5y^2+z^2 = n with x and y of opposite parity
bool five_five_one_mixed_parity(i64 n) {
    for (i64 x = 0; 5 * x * x <= n; ++x)
        for (i64 y = (x % 2 == 0) ? 1 : 0; 5 * (x * x + y * y) <= n; y += 2) {
            i64 r = n - 5 * (x * x + y * y);
            i64 z = isqrt_i64(r);
            if (z * z == r) return true;
        }
    return false;
}

// x^3 + y^2 + T_z with x,y in N and z >= 1
bool cube_square_triangular(i64 n) {
    for (i64 x = 0; x * x * x <= n; ++x) {
        i64 r1 = n - x * x * x;
        for (i64 y = 0; y * y <= r1; ++y) {
            i64 t = r1 - y * y;
            if (t >= 1 && is_generalized_polygonal(3, t)) return true;
        }
    }
    return false;
}

bool sphere_lemma_holds(SphereKind kind, i64 n) {
    Witness w;
    try {
        w = sphere_point_proper(kind, n);
    } catch (const Error&) {
        return false; // no proper point found counts against the lemma
    }
    i64 mul = kind == SphereKind::ThreeSquares ? 1
              : kind == SphereKind::TwoSquaresPlus2zSq ? 2 : 5;
    auto absv = [](i64 v) { return v < 0 ? -v : v; };
    i64 x = w.at(0).second, y = w.at(1).second, z = w.at(2).second;
    if (x * x + y * y + mul * z * z != n * n) return false;
    if (absv(x) >= n || absv(y) >= n) return false;
    if (kind == SphereKind::ThreeSquares && absv(z) >= n) return false;
    return true;
}

i64 h_prime_part_floor(const FormTriple& t, i64 n) {
    i64 prod = 1;
    for (auto [p, e] : factorize(n)) {
        if ((2 * t.a * t.b * t.c) % p == 0) continue;
        for (int i = 0; i < e; ++i) prod = checked_mul(prod, p);
    }
    return prod;
}

// --------------------------------------------------- divisor table data

struct TableEntry { i64 a, b; vector<i64> cs; };

const vector<TableEntry>& sstar_table() {
    static const vector<TableEntry> t = {
        {1, 1, {1, 2, 5}},       {1, 2, {1, 3}},
        {1, 3, {1, 4}},          {1, 4, {1, 2, 3, 5}},
        {1, 5, {1, 2, 3, 5}},    {1, 6, {1, 2, 3, 4}},
        {1, 7, {1, 2, 4, 8}},    {1, 8, {1, 2, 3, 4, 5, 6, 9}},
        {1, 9, {1, 2, 3, 4, 5, 6}}, {1, 10, {1, 2, 3, 4, 5, 6, 8, 12}},
        {2, 2, {1, 2, 3, 4, 5, 9, 10}}, {2, 3, {1, 2, 8}},
    };
    return t;
}

const vector<TableEntry>& sminus_table() {
    static const vector<TableEntry> t = {
        {1, 2, {1}},             {1, 3, {1, 2, 10}},
        {1, 4, {1, 2, 3, 5}},    {1, 5, {1, 2, 3, 4, 5}},
        {1, 6, {1, 3}},          {1, 7, {1, 2, 3, 4, 5}},
        {1, 8, {1, 2, 3, 5, 9}}, {1, 9, {1, 2, 3, 4, 5, 7}},
        {1, 10, {1, 2, 3, 4, 12}}, {1, 11, {1, 2, 3, 4, 5, 6, 9}},
        {1, 12, {1, 2, 3, 4, 5, 6, 10}}, {2, 2, {1, 2, 3, 4, 5, 6, 10}},
        {2, 3, {1, 2, 8}},       {2, 4, {1, 2, 5, 6}},
        {2, 5, {1, 2, 3, 5}},
    };
    return t;
}

const vector<TableEntry>& tstar_table() {
    static const vector<TableEntry> t = {
        {1, 1, {}},           {1, 2, {}},
        {1, 3, {1}},          {1, 4, {3}},
        {1, 5, {1, 2}},       {1, 6, {1, 2}},
        {1, 7, {1, 2, 4}},    {1, 8, {1}},
        {1, 9, {1, 2, 3}},    {1, 10, {1, 2, 3}},
        {1, 11, {1, 2, 3}},   {2, 2, {1, 3}},
        {2, 3, {1, 2}},       {2, 4, {1, 2, 3}},
        {3, 4, {1, 2, 3}},
    };
    return t;
}

const vector<TableEntry>& tminus_table() {
    static const vector<TableEntry> t = {
        {1, 2, {}},        {1, 3, {1}},
        {1, 5, {1, 2, 3}}, {1, 6, {1, 2}},
        {1, 7, {1, 2, 4}}, {1, 8, {1}},
        {1, 10, {1, 2, 3}}, {2, 3, {1, 2, 3}},
    };
    return t;
}

ClaimSpec table_claim(string id, string statement, Rounding r, const AtomSpec& atom,
                      const vector<TableEntry>& table, i64 inner_n) {
    ClaimSpec s;
    s.id = std::move(id);
    s.kind = ClaimKind::ExceptionalSet;
    s.category = ClaimCategory::Conjecture;
    s.statement = std::move(statement);
    s.finding_label = "code a*10000+b*100+c with a gap below 100000";
    s.expected = Expectation::SetEquals;
    s.lo = 1;
    s.default_n = 12;
    vector<std::tuple<i64, CoverageProblem, size_t>> entries;
    for (const auto& e : table) {
        auto p = prob({ft(square(), 1, "x", e.a), ft(square(), 1, "y", e.b),
                       simple_term(r, atom, 1, 1, "z")});
        entries.emplace_back(e.a * 10000 + e.b * 100, p, 2);
        for (i64 c : e.cs) s.expected_values.push_back(e.a * 10000 + e.b * 100 + c);
    }
    std::sort(s.expected_values.begin(), s.expected_values.end());
    s.finding_pos = [](i64 code) { return code % 100; };
    s.window = divisor_window(std::move(entries), inner_n);
    return s;
}

// --------------------------------------------------------------- catalog

void add_section1(vector<ClaimSpec>& v) {
    AtomSpec SQ = square(), PR = pronic(), TR = triangular(), P8 = octagonal();

    auto cov = [](string id, ClaimCategory cat, string st, vector<CoverageProblem> ps,
                  i64 lo, i64 n) {
        ClaimSpec s;
        s.id = std::move(id);
        s.kind = ClaimKind::Coverage;
        s.category = cat;
        s.statement = std::move(st);
        s.finding_label = "uncovered n";
        s.expected = Expectation::NoGaps;
        s.lo = lo;
        s.default_n = n;
        s.finding_pos = [](i64 f) { return f; };
        s.window = cov_window(std::move(ps));
        return s;
    };
    auto thm = ClaimCategory::Theorem;
    auto rmk = ClaimCategory::Remark;

    v.push_back(cov("thm1.1.i", thm,
                    "x^2 + (2y)^2 + floor(z^2/m) covers N for m = 4 and m = 6",
                    {prob({ft(SQ, 1, "x"), ft(quadratic(4, 0), 1, "y"), ft(SQ, 4, "z")}),
                     prob({ft(SQ, 1, "x"), ft(quadratic(4, 0), 1, "y"), ft(SQ, 6, "z")})},
                    0, 100000));
    v.push_back(cov("thm1.1.i.odd", thm,
                    "every positive n is x^2 + y^2 + floor(z^2/5) with y odd",
                    {prob({ft(SQ, 1, "x"), with_parity(ft(SQ, 1, "y"), 1), ft(SQ, 5, "z")}, 1)},
                    1, 10000));
    v.push_back(cov("thm1.1.ii", thm,
                    "every positive n is x^2 + y^2 + floor(z^2/8) with y even, and also with y odd",
                    {prob({ft(SQ, 1, "x"), with_parity(ft(SQ, 1, "y"), 0), ft(SQ, 8, "z")}, 1),
                     prob({ft(SQ, 1, "x"), with_parity(ft(SQ, 1, "y"), 1), ft(SQ, 8, "z")}, 1)},
                    1, 10000));
    {
        vector<CoverageProblem> ps;
        for (i64 m : {2, 3, 9, 21})
            ps.push_back(prob({ft(SQ, 1, "x"), ft(SQ, 1, "y"), ft(SQ, m, "z")}));
        for (i64 m : {3, 4, 6})
            ps.push_back(prob({ft(SQ, 1, "x"), ft(SQ, 1, "y"), ft(PR, m, "z")}));
        v.push_back(cov("thm1.1.iii", thm,
                        "x^2 + y^2 + floor(z^2/m) covers N for m in {2,3,9,21}; "
                        "x^2 + y^2 + floor(z(z+1)/m) covers N for m in {3,4,6}",
                        std::move(ps), 0, 100000));
    }
    for (i64 m : {5, 6, 15}) {
        v.push_back(cov("thm1.1.iv.m" + std::to_string(m), thm,
                        "x^2 + floor(y^2/" + std::to_string(m) + ") + floor(z^2/" +
                            std::to_string(m) + ") and the all-floored version cover N",
                        {prob({ft(SQ, 1, "x"), ft(SQ, m, "y"), ft(SQ, m, "z")}),
                         prob({ft(SQ, m, "x"), ft(SQ, m, "y"), ft(SQ, m, "z")})},
                        0, 100000));
    }
    v.push_back(cov("thm1.1.v", thm,
                    "T_x + T_y + floor(T_z/3), floor(T/3) three times, and "
                    "x(x+1) + y(y+1) + floor(z(z+1)/4) each cover N",
                    {prob({ft(TR, 1, "x"), ft(TR, 1, "y"), ft(TR, 3, "z")}),
                     prob({ft(TR, 3, "x"), ft(TR, 3, "y"), ft(TR, 3, "z")}),
                     prob({ft(PR, 1, "x"), ft(PR, 1, "y"), ft(PR, 4, "z")})},
                    0, 100000));
    v.push_back(cov("rmk1.1", rmk,
                    "floor(x^2/9) three times covers N; T_x + T_y + T_z/2 with 2 | T_z covers N",
                    {prob({ft(SQ, 9, "x"), ft(SQ, 9, "y"), ft(SQ, 9, "z")}),
                     prob({ft(TR, 1, "x"), ft(TR, 1, "y"), et(TR, 2, "z")})},
                    0, 100000));
    v.push_back(cov("rmk1.2", rmk,
                    "x^2 + 4y^2 + T_z and x^2 + 4y^2 + 2T_z cover N",
                    {prob({ft(SQ, 1, "x"), ft(SQ, 1, "y", 4), ft(TR, 1, "z")}),
                     prob({ft(SQ, 1, "x"), ft(SQ, 1, "y", 4), ft(TR, 1, "z", 2)})},
                    0, 100000));
    {
        vector<CoverageProblem> ps;
        for (i64 m : {2, 3, 4, 5})
            ps.push_back(prob({ft(SQ, 1, "x"), ft(SQ, 1, "y", 2), ft(SQ, m, "z")}));
        v.push_back(cov("thm1.2.i", thm,
                        "x^2 + 2y^2 + floor(z^2/m) covers N for m in {2,3,4,5}",
                        std::move(ps), 0, 100000));
    }
    {
        vector<CoverageProblem> ps;
        for (i64 m : {3, 4, 6, 8})
            ps.push_back(prob({ft(SQ, 1, "x"), ft(SQ, 1, "y", 3), ft(SQ, m, "z")}));
        v.push_back(cov("thm1.2.ii", thm,
                        "x^2 + 3y^2 + floor(z^2/m) covers N for m in {3,4,6,8}",
                        std::move(ps), 0, 100000));
    }
    v.push_back(cov("thm1.2.iii", thm,
                    "x^2 + 5y^2 + floor(z^2/8) and x^2 + 6y^2 + floor(z^2/4) cover N",
                    {prob({ft(SQ, 1, "x"), ft(SQ, 1, "y", 5), ft(SQ, 8, "z")}),
                     prob({ft(SQ, 1, "x"), ft(SQ, 1, "y", 6), ft(SQ, 4, "z")})},
                    0, 100000));
    v.push_back(cov("thm1.2.iv", thm,
                    "2x^2 + 2y^2 + floor(z^2/8), 2x^2 + 3y^2 + floor(z^2/3) and "
                    "2x^2 + floor(y^2/2) + floor(z^2/3) cover N",
                    {prob({ft(SQ, 1, "x", 2), ft(SQ, 1, "y", 2), ft(SQ, 8, "z")}),
                     prob({ft(SQ, 1, "x", 2), ft(SQ, 1, "y", 3), ft(SQ, 3, "z")}),
                     prob({ft(SQ, 1, "x", 2), ft(SQ, 2, "y"), ft(SQ, 3, "z")})},
                    0, 100000));
    {
        vector<CoverageProblem> ps;
        for (i64 m : {2, 3, 4, 5, 6, 15})
            ps.push_back(prob({ct(SQ, m, "x"), ct(SQ, m, "y"), ct(SQ, m, "z")}));
        v.push_back(cov("thm1.3.i", thm,
                        "ceil(x^2/m) three times covers N for m in {2,3,4,5,6,15}",
                        std::move(ps), 0, 100000));
    }
    v.push_back(cov("thm1.3.ii", thm,
                    "x^2 + 3y^2 + ceil(z^2/2) and x^2 + 3y^2 + ceil(z^2/10) cover N",
                    {prob({ft(SQ, 1, "x"), ft(SQ, 1, "y", 3), ct(SQ, 2, "z")}),
                     prob({ft(SQ, 1, "x"), ft(SQ, 1, "y", 3), ct(SQ, 10, "z")})},
                    0, 100000));
    v.push_back(cov("thm1.3.iii", thm,
                    "x(x+1) + y(y+1)/3 (exact) + ceil(z(z+1)/3), "
                    "x(3x+1) + y(3y+1) + ceil(z(z+1)/3), and ceil(z(z+1)/3) three times cover N",
                    {prob({ft(PR, 1, "x"), et(PR, 3, "y"), ct(PR, 3, "z")}),
                     prob({ft(quadratic(3, 1), 1, "x"), ft(quadratic(3, 1), 1, "y"), ct(PR, 3, "z")}),
                     prob({ct(PR, 3, "x"), ct(PR, 3, "y"), ct(PR, 3, "z")})},
                    0, 100000));
    {
        vector<CoverageProblem> ps;
        for (i64 a : {2, 3, 7, 10}) {
            TermSpec g;
            g.numerator = {{1, SQ, "x"}, {1, SQ, "y"}, {1, SQ, "z"}};
            g.denominator = a;
            TermSpec h;
            h.numerator = {{1, PR, "x"}, {1, PR, "y"}, {1, PR, "z"}};
            h.denominator = a;
            ps.push_back(prob({g}));
            ps.push_back(prob({h}));
        }
        v.push_back(cov("thm1.4.i", thm,
                        "floor((x^2+y^2+z^2)/a) and floor((x(x+1)+y(y+1)+z(z+1))/a) "
                        "cover N for a in {2,3,7,10}",
                        std::move(ps), 0, 10000));
    }
    {
        ClaimSpec s;
        s.id = "thm1.4.ii";
        s.kind = ClaimKind::Coverage;
        s.category = thm;
        s.statement =
            "x^2+y^2+z^2 + floor(a(x+y+z)/2) for odd a in {1,3,5} and "
            "x^2+y^2+z^2 + floor(a(x+y+z)/3) for a in {1,2,4,5} cover N";
        s.finding_label = "uncovered n";
        s.expected = Expectation::NoGaps;
        s.lo = 0;
        s.default_n = 5000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = [](i64 lo, i64 hi, int, i64) {
            std::set<i64> out;
            for (auto [e, d] : vector<std::pair<i64, i64>>{
                     {1, 2}, {3, 2}, {5, 2}, {1, 3}, {2, 3}, {4, 3}, {5, 3}})
                for (i64 g : shifted_three_squares_scan(e, d, lo, hi)) out.insert(g);
            return vector<i64>(out.begin(), out.end());
        };
        v.push_back(std::move(s));
    }
    v.push_back(cov("thm1.4.iii", thm,
                    "p8(x)/2 (exact) + ceil(p8(y)/2) + ceil(p8(z)/2) covers N, and "
                    "s(x)+s(y)+s(z) covers N where s(x) = ceil((3x^2+2x)/2)",
                    {prob({et(P8, 2, "x"), ct(P8, 2, "y"), ct(P8, 2, "z")}),
                     prob({ct(quadratic(3, 2), 2, "x"), ct(quadratic(3, 2), 2, "y"),
                           ct(quadratic(3, 2), 2, "z")})},
                    0, 100000));
    {
        ClaimSpec s;
        s.id = "thm1.5.i";
        s.kind = ClaimKind::ExceptionalSet;
        s.category = thm;
        s.statement =
            "n is p8(x)+p8(y)+2p8(z) exactly when n is not 4^(k+2) q - (2/3)(4^k+2)";
        s.finding_label = "n where representability and the excluded set disagree";
        s.expected = Expectation::FormulaMatches;
        s.lo = 0;
        s.default_n = 10000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = [P8](i64 lo, i64 hi, int jobs, i64) {
            auto p = prob({ft(P8, 1, "x"), ft(P8, 1, "y"), ft(P8, 1, "z", 2)});
            p.lo = lo;
            p.hi = hi;
            p.jobs = jobs;
            auto res = coverage_scan(p);
            std::set<i64> gap_set(res.gaps.begin(), res.gaps.end());
            std::set<i64> excl;
            for (i64 m : excluded_set_upto(hi))
                if (m >= lo) excl.insert(m);
            vector<i64> out;
            for (i64 n = lo; n <= hi; ++n)
                if (gap_set.count(n) != excl.count(n)) out.push_back(n);
            return out;
        };
        v.push_back(std::move(s));
    }
    {
        ClaimSpec s;
        s.id = "thm1.5.i.even";
        s.kind = ClaimKind::Coverage;
        s.category = thm;
        s.statement = "p8(x) + 2p8(y) + 4p8(z) represents every even natural number";
        s.finding_label = "uncovered even n";
        s.expected = Expectation::NoGaps;
        s.lo = 0;
        s.default_n = 100000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = [P8](i64 lo, i64 hi, int jobs, i64) {
            auto p = prob({ft(P8, 1, "x"), ft(P8, 1, "y", 2), ft(P8, 1, "z", 4)});
            vector<i64> out;
            for (i64 g : run_cov(p, lo, hi, jobs))
                if (g % 2 == 0) out.push_back(g);
            return out;
        };
        v.push_back(std::move(s));
    }
    v.push_back(cov("thm1.5.i.aux", thm,
                    "p8(x) + floor(p8(y)/2) + floor(p8(z)/2) and "
                    "floor(x^2/3) + floor(y^2/6) + floor(z^2/6) cover N",
                    {prob({ft(P8, 1, "x"), ft(P8, 2, "y"), ft(P8, 2, "z")}),
                     prob({ft(SQ, 3, "x"), ft(SQ, 6, "y"), ft(SQ, 6, "z")})},
                    0, 100000));
    v.push_back(cov("thm1.5.ii", thm,
                    "p8+p8+floor(p8/2), p8+p8+floor(p8/8) and "
                    "floor(x^2/3)+floor(y^2/3)+floor(z^2/6) cover N",
                    {prob({ft(P8, 1, "x"), ft(P8, 1, "y"), ft(P8, 2, "z")}),
                     prob({ft(P8, 1, "x"), ft(P8, 1, "y"), ft(P8, 8, "z")}),
                     prob({ft(SQ, 3, "x"), ft(SQ, 3, "y"), ft(SQ, 6, "z")})},
                    0, 100000));
    v.push_back(cov("thm1.5.iii", thm,
                    "p8(x) + p8(y) + p8(z)/4 with 4 | p8(z) covers N",
                    {prob({ft(P8, 1, "x"), ft(P8, 1, "y"), et(P8, 4, "z")})},
                    0, 100000));
    v.push_back(cov("thm1.5.iv", thm,
                    "p8+p8+floor(p8/5) and floor(x^2/3)+floor(y^2/3)+floor(z^2/15) cover N",
                    {prob({ft(P8, 1, "x"), ft(P8, 1, "y"), ft(P8, 5, "z")}),
                     prob({ft(SQ, 3, "x"), ft(SQ, 3, "y"), ft(SQ, 15, "z")})},
                    0, 100000));
    {
        ClaimSpec s;
        s.id = "rmk1.3";
        s.kind = ClaimKind::Coverage;
        s.category = rmk;
        s.statement = "the first natural number not of the form x^2 + 3y^2 + floor(z^2/10) is 20142";
        s.finding_label = "uncovered n";
        s.expected = Expectation::GapsExactly;
        s.expected_values = {20142};
        s.lo = 0;
        s.default_n = 25000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = cov_window({prob({ft(SQ, 1, "x"), ft(SQ, 1, "y", 3), ft(SQ, 10, "z")})});
        v.push_back(std::move(s));
    }
    {
        ClaimSpec s;
        s.id = "rmk1.4";
        s.kind = ClaimKind::Coverage;
        s.category = rmk;
        s.statement =
            "111 is not x^2+y^2+z^2 + floor((x+y+z)/d) for d = 19 or d = 20 "
            "(and it is the only miss below 120)";
        s.finding_label = "uncovered n";
        s.expected = Expectation::GapsExactly;
        s.expected_values = {111};
        s.lo = 0;
        s.default_n = 120;
        s.finding_pos = [](i64 f) { return f; };
        s.window = [](i64 lo, i64 hi, int, i64) {
            std::set<i64> out;
            for (i64 d : {19, 20})
                for (i64 g : shifted_three_squares_scan(1, d, lo, hi)) out.insert(g);
            return vector<i64>(out.begin(), out.end());
        };
        v.push_back(std::move(s));
    }
}

void add_section1_conjectures(vector<ClaimSpec>& v) {
    AtomSpec SQ = square(), PR = pronic(), TR = triangular();

    auto boxclaim = [](string id, string st, vector<std::pair<i64, CoverageProblem>> coded,
                       i64 n, Expectation exp = Expectation::NoGaps,
                       vector<i64> expv = {}) {
        ClaimSpec s;
        s.id = std::move(id);
        s.kind = exp == Expectation::SetEquals ? ClaimKind::ExceptionalSet
                                               : ClaimKind::Coverage;
        s.category = ClaimCategory::Conjecture;
        s.statement = std::move(st);
        s.finding_label = "failing triple code a*100+b*10+c";
        s.expected = exp;
        s.expected_values = std::move(expv);
        s.lo = 0;
        s.default_n = n;
        s.window = box_window(std::move(coded));
        return s;
    };

    // plain floored boxes
    auto plain_box = [&](const AtomSpec& atom, i64 maxc,
                         const vector<std::array<i64, 3>>& skip) {
        vector<std::pair<i64, CoverageProblem>> coded;
        for (auto t : sorted_triples(maxc)) {
            if (excluded(skip, t)) continue;
            coded.emplace_back(triple_code(t[0], t[1], t[2]),
                               prob({ft(atom, t[0], "x"), ft(atom, t[1], "y"),
                                     ft(atom, t[2], "z")}));
        }
        return coded;
    };
    // the two partial groupings floor(q/a + q/b) + floor(q/c) and
    // floor(q/a) + floor(q/b + q/c)
    auto pair_box = [&](const AtomSpec& atom, i64 maxc,
                        const vector<std::array<i64, 3>>& skip) {
        vector<std::pair<i64, CoverageProblem>> coded;
        for (auto t : sorted_triples(maxc)) {
            if (excluded(skip, t)) continue;
            auto [a, b, c] = t;
            TermSpec gab;
            gab.numerator = {{b, atom, "x"}, {a, atom, "y"}};
            gab.denominator = a * b;
            coded.emplace_back(1000 + triple_code(a, b, c),
                               prob({gab, ft(atom, c, "z")}));
            TermSpec gbc;
            gbc.numerator = {{c, atom, "y"}, {b, atom, "z"}};
            gbc.denominator = b * c;
            coded.emplace_back(2000 + triple_code(a, b, c),
                               prob({ft(atom, a, "x"), gbc}));
        }
        return coded;
    };

    vector<std::array<i64, 3>> sq_skip = {{1, 1, 1}, {2, 2, 2}};
    vector<std::array<i64, 3>> pr_skip = {{1, 1, 1}, {1, 1, 3}, {1, 1, 7},
                                          {1, 3, 3}, {1, 7, 7}, {3, 3, 3}};

    v.push_back(boxclaim("conj1.1.floor",
                         "floor(x^2/a)+floor(y^2/b)+floor(z^2/c) covers N for all "
                         "a<=b<=c<=4 except (1,1,1) and (2,2,2)",
                         plain_box(SQ, 4, sq_skip), 10000));
    v.push_back(boxclaim("conj1.1.pair",
                         "both partial groupings floor(x^2/a + y^2/b)+floor(z^2/c) and "
                         "floor(x^2/a)+floor(y^2/b + z^2/c) cover N on the same box",
                         pair_box(SQ, 4, sq_skip), 10000));
    v.push_back(boxclaim("conj1.1.tri",
                         "floor(T_x/a)+floor(T_y/b)+floor(T_z/c) covers N for all a<=b<=c<=4",
                         plain_box(TR, 4, {}), 10000));
    v.push_back(boxclaim("conj1.1.tri.pair",
                         "the partial groupings of T_x/a + T_y/b + T_z/c cover N for all a<=b<=c<=4",
                         pair_box(TR, 4, {}), 10000));
    v.push_back(boxclaim("conj1.1.pronic",
                         "floor(x(x+1)/a)+floor(y(y+1)/b)+floor(z(z+1)/c) covers N for "
                         "a<=b<=c<=7 outside six exceptional triples",
                         plain_box(PR, 7, pr_skip), 10000));
    v.push_back(boxclaim("conj1.1.pronic.pair",
                         "the partial groupings of x(x+1)/a + y(y+1)/b + z(z+1)/c cover N "
                         "on the same box",
                         pair_box(PR, 7, pr_skip), 10000));

    {
        vector<CoverageProblem> ps;
        for (i64 m = 7; m <= 12; ++m)
            for (i64 delta : {0, 1})
                ps.push_back(prob({ft(SQ, 1, "x"), with_parity(ft(SQ, 1, "y"), delta),
                                   ft(SQ, m, "z")}, 1));
        ClaimSpec s;
        s.id = "conj1.2.i";
        s.kind = ClaimKind::Coverage;
        s.category = ClaimCategory::Conjecture;
        s.statement =
            "for m in {7..12} and each parity of y, every positive n is "
            "x^2 + y^2 + floor(z^2/m)";
        s.finding_label = "uncovered n";
        s.expected = Expectation::NoGaps;
        s.lo = 1;
        s.default_n = 10000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = cov_window(std::move(ps));
        v.push_back(std::move(s));
    }
    {
        vector<CoverageProblem> ps;
        for (i64 m = 3; m <= 8; ++m)
            ps.push_back(prob({ft(SQ, 1, "x"), ft(SQ, 1, "y", 4), ft(PR, m, "z")}));
        for (i64 m = 4; m <= 8; ++m)
            ps.push_back(prob({ft(SQ, 1, "x"), with_parity(ft(SQ, 1, "y"), 1),
                               ft(PR, m, "z")}, 1));
        ClaimSpec s;
        s.id = "conj1.2.ii";
        s.kind = ClaimKind::Coverage;
        s.category = ClaimCategory::Conjecture;
        s.statement =
            "x^2 + 4y^2 + floor(z(z+1)/m) covers N for m in {3..8}; "
            "x^2 + y^2 + floor(z(z+1)/m) with y odd covers positive n for m in {4..8}";
        s.finding_label = "uncovered n";
        s.expected = Expectation::NoGaps;
        s.lo = 0;
        s.default_n = 10000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = cov_window(std::move(ps));
        v.push_back(std::move(s));
    }
    {
        vector<std::pair<i64, CoverageProblem>> coded;
        for (auto t : sorted_triples(5))
            coded.emplace_back(triple_code(t[0], t[1], t[2]),
                               prob({ct(SQ, t[0], "x"), ct(SQ, t[1], "y"),
                                     ct(SQ, t[2], "z")}));
        v.push_back(boxclaim("conj1.3.i",
                             "ceil(x^2/a)+ceil(y^2/b)+ceil(z^2/c) covers N exactly for "
                             "a<=b<=c<=5 outside (1,1,1),(1,1,2),(1,1,5)",
                             std::move(coded), 10000, Expectation::SetEquals,
                             {111, 112, 115}));
    }
    {
        vector<std::pair<i64, CoverageProblem>> coded;
        for (auto t : sorted_triples(4))
            coded.emplace_back(triple_code(t[0], t[1], t[2]),
                               prob({ct(TR, t[0], "x"), ct(TR, t[1], "y"),
                                     ct(TR, t[2], "z")}));
        v.push_back(boxclaim("conj1.3.ii.tri",
                             "ceil(T_x/a)+ceil(T_y/b)+ceil(T_z/c) covers N for all a<=b<=c<=4",
                             std::move(coded), 10000));
    }
    {
        vector<std::pair<i64, CoverageProblem>> coded;
        for (auto t : sorted_triples(4)) {
            if (excluded({{1, 1, 1}, {1, 1, 3}}, t)) continue;
            coded.emplace_back(triple_code(t[0], t[1], t[2]),
                               prob({ct(PR, t[0], "x"), ct(PR, t[1], "y"),
                                     ct(PR, t[2], "z")}));
        }
        v.push_back(boxclaim("conj1.3.ii.pronic",
                             "ceil of pronic thirds covers N for a<=b<=c<=4 except "
                             "(1,1,1) and (1,1,3)",
                             std::move(coded), 10000));
    }
}

void add_lemmas_and_formulas(vector<ClaimSpec>& v) {
    auto pred = [](string id, ClaimCategory cat, ClaimKind kind, string st,
                   string label, i64 lo, i64 n, std::function<bool(i64)> holds) {
        ClaimSpec s;
        s.id = std::move(id);
        s.kind = kind;
        s.category = cat;
        s.statement = std::move(st);
        s.finding_label = std::move(label);
        s.expected = Expectation::FormulaMatches;
        s.lo = lo;
        s.default_n = n;
        s.finding_pos = [](i64 f) { return f; };
        s.window = pred_window(std::move(holds));
        return s;
    };
    auto lem = ClaimCategory::Lemma;
    auto thm = ClaimCategory::Theorem;

    v.push_back(pred("lem2.1", lem, ClaimKind::CountFormula,
                     "for n >= 1 not a power of two, n^2 = x^2+y^2+z^2 with |x|,|y|,|z| < n",
                     "n without a proper sphere point", 1, 500, [](i64 n) {
                         if (is_pow2(n)) return true;
                         return sphere_lemma_holds(SphereKind::ThreeSquares, n);
                     }));
    {
        ClaimSpec s;
        s.id = "lem2.2.i";
        s.kind = ClaimKind::CountFormula;
        s.category = lem;
        s.statement =
            "a positive multiple of 5 of the form u^2+v^2 is also x^2+y^2 with 5 "
            "dividing neither x nor y";
        s.finding_label = "failing code u*1000+v";
        s.expected = Expectation::FormulaMatches;
        s.lo = 0;
        s.default_n = 50;
        s.finding_pos = [](i64 code) { return code / 1000; };
        s.window = [](i64 ulo, i64 uhi, int, i64) {
            vector<i64> out;
            for (i64 u = std::max<i64>(0, ulo); u <= uhi; ++u)
                for (i64 ve = 0; ve <= 50; ++ve) {
                    i64 n = u * u + ve * ve;
                    if (n == 0 || n % 5 != 0) continue;
                    auto [x, y] = rewrite_two_squares_avoiding_5(u, ve);
                    if (x * x + y * y != n || x % 5 == 0 || y % 5 == 0)
                        out.push_back(u * 1000 + ve);
                }
            return out;
        };
        v.push_back(std::move(s));
    }
    v.push_back(pred("lem2.2.ii", lem, ClaimKind::CountFormula,
                     "n == +-6 (mod 20) implies n = 5x^2+5y^2+z^2 with z odd",
                     "n without the asserted representation", 0, 2000, [](i64 n) {
                         i64 r = n % 20;
                         if (r != 6 && r != 14) return true;
                         return rep_exists_constrained({5, 5, 1}, n, {{"z", 2, {1}}})
                             .has_value();
                     }));
    v.push_back(pred("lem2.3", lem, ClaimKind::CountFormula,
                     "n > 1 with n == 1,9 (mod 20) is 5x^2+5y^2+z^2 with x,y of opposite "
                     "parity; n == 11,19 (mod 40) is 5x^2+5y^2+z^2 with y odd",
                     "n without the asserted representation", 2, 2000, [](i64 n) {
                         i64 r20 = n % 20, r40 = n % 40;
                         if (r20 == 1 || r20 == 9)
                             if (!five_five_one_mixed_parity(n)) return false;
                         if (r40 == 11 || r40 == 19)
                             if (!rep_exists_constrained({5, 5, 1}, n, {{"y", 2, {1}}}))
                                 return false;
                         return true;
                     }));
    v.push_back(pred("rmk2.1", ClaimCategory::Remark, ClaimKind::CountFormula,
                     "n > 1 with n == 1,9 (mod 20) and n not a perfect square is "
                     "5x^2+5y^2+(2z)^2",
                     "n without the asserted representation", 2, 2000, [](i64 n) {
                         i64 r = n % 20;
                         if (r != 1 && r != 9) return true;
                         i64 s = isqrt_i64(n);
                         if (s * s == n) return true;
                         return rep_exists({5, 5, 4}, n);
                     }));
    v.push_back(pred("lem4.1", lem, ClaimKind::CountFormula,
                     "for n > 1, n^2 = x^2+y^2+2z^2 with |x|,|y| < n",
                     "n without a proper sphere point", 2, 500, [](i64 n) {
                         return sphere_lemma_holds(SphereKind::TwoSquaresPlus2zSq, n);
                     }));
    v.push_back(pred("lem4.2", lem, ClaimKind::CountFormula,
                     "for n not a power of two, n^2 = x^2+y^2+5z^2 with |x|,|y| < n",
                     "n without a proper sphere point", 1, 500, [](i64 n) {
                         if (is_pow2(n)) return true;
                         return sphere_lemma_holds(SphereKind::TwoSquaresPlus5zSq, n);
                     }));
    v.push_back(pred("eq2.1", thm, ClaimKind::CountFormula,
                     "r_(1,1,1)(n^2) = 6 H_(1,1,1)(n) for n >= 1",
                     "n where the count formula fails", 1, 100, [](i64 n) {
                         return rep_count({1, 1, 1}, n * n) == hurwitz_sphere_count(n);
                     }));
    {
        ClaimSpec s;
        s.id = "eq4.3";
        s.kind = ClaimKind::CountFormula;
        s.category = thm;
        s.statement =
            "H_(a,b,c)(n) is at least the product of p^ord_p(n) over primes p not "
            "dividing 2abc, for every catalogued form";
        s.finding_label = "failing code n*100+form_index";
        s.expected = Expectation::FormulaMatches;
        s.lo = 1;
        s.default_n = 10000;
        s.finding_pos = [](i64 code) { return code / 100; };
        s.window = [](i64 lo, i64 hi, int, i64) {
            const auto& cat = dickson_catalog();
            vector<i64> out;
            for (i64 n = std::max<i64>(1, lo); n <= hi; ++n)
                for (size_t i = 0; i < cat.size(); ++i)
                    if (h_value(cat[i].form, n) < h_prime_part_floor(cat[i].form, n))
                        out.push_back(n * 100 + static_cast<i64>(i));
            return out;
        };
        v.push_back(std::move(s));
    }
    v.push_back(pred("eq4.4", thm, ClaimKind::CountFormula,
                     "r_(1,1,2)(n^2) = 4 H(n) for odd n and 12 H(n/2^ord) style scaling for even n",
                     "n where the count formula fails", 1, 100, [](i64 n) {
                         return rep_count({1, 1, 2}, n * n) == cooper_lam_count(n);
                     }));
    v.push_back(pred("eq4.5", thm, ClaimKind::CountFormula,
                     "r_(1,1,5)(n^2) = 2(5^(ord_5(n)+1) - 3) H_(1,1,5)(n)",
                     "n where the count formula fails", 1, 100, [](i64 n) {
                         return rep_count({1, 1, 5}, n * n) == gpq_count(n);
                     }));

    v.push_back(pred("eq1.12", thm, ClaimKind::Identity,
                     "floor(p8(x)/(2m)) = floor(p8(1-2x)/(8m)) and floor(p8(x)/m) = "
                     "floor((3x-1)^2/(3m)) for all x and m <= 20",
                     "x where an identity fails", 0, 1000, [](i64 x) {
                         for (i64 m = 1; m <= 20; ++m)
                             if (!octagonal_shift_identity(x, m) ||
                                 !octagonal_shift_identity(-x, m))
                                 return false;
                         return true;
                     }));
    v.push_back(pred("idn.tri.floor", thm, ClaimKind::Identity,
                     "T_k = floor((2k+1)^2 / 8)", "k where the identity fails", 0, 2000,
                     [](i64 k) {
                         return triangular_floor_identity(k) &&
                                triangular_floor_identity(-k);
                     }));
    v.push_back(pred("idn.oct.quad", thm, ClaimKind::Identity,
                     "4 p8(x) + 1 = p8(1-2x)", "x where the identity fails", 0, 2000,
                     [](i64 x) {
                         for (i64 s : {x, -x})
                             if (4 * polygonal_value(8, s) + 1 !=
                                 polygonal_value(8, 1 - 2 * s))
                                 return false;
                         return true;
                     }));
    v.push_back(pred("idn.s.ceil", thm, ClaimKind::Identity,
                     "s(x) = ceil((3x^2+2x)/2) equals ceil(p8(-x)/2) and x + ceil(3x^2/2)",
                     "x where the identity fails", 0, 2000, [](i64 x) {
                         for (i64 s : {x, -x}) {
                             i64 a = ceil_div(3 * s * s + 2 * s, i64{2});
                             i64 b = ceil_div(to_i64(polygonal_value(8, -s)), i64{2});
                             i64 c = s + ceil_div(3 * s * s, i64{2});
                             if (a != b || a != c) return false;
                         }
                         return true;
                     }));
    {
        ClaimSpec s;
        s.id = "idn.tset";
        s.kind = ClaimKind::Identity;
        s.category = thm;
        s.statement =
            "{x^2 + floor(x/2) : x in Z} = {floor(k(k+1)/4) : k in N} as value sets";
        s.finding_label = "value in exactly one of the two sets";
        s.expected = Expectation::FormulaMatches;
        s.lo = 0;
        s.default_n = 3000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = [](i64 lo, i64 hi, int, i64) {
            auto a = term_value_list(ft(floored_linear_quadratic(1, 2), 1, "x"), lo, hi);
            auto b = term_value_list(ft(pronic(Domain::Naturals), 4, "x"), lo, hi);
            vector<i64> out;
            std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                          std::back_inserter(out));
            return out;
        };
        v.push_back(std::move(s));
    }
    {
        ClaimSpec s;
        s.id = "gauss3sq";
        s.kind = ClaimKind::ExceptionalSet;
        s.category = thm;
        s.statement = "n = x^2+y^2+z^2 exactly when n is not of the form 4^k (8l+7)";
        s.finding_label = "n where the predicate and the scan disagree";
        s.expected = Expectation::FormulaMatches;
        s.lo = 0;
        s.default_n = 100000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = [](i64 lo, i64 hi, int jobs, i64) {
            auto p = prob({ft(square(), 1, "x"), ft(square(), 1, "y"),
                           ft(square(), 1, "z")});
            p.lo = lo;
            p.hi = hi;
            p.jobs = jobs;
            auto res = coverage_scan(p);
            vector<i64> out;
            for (i64 n = lo; n <= hi; ++n) {
                bool rep = res.representable.get(static_cast<size_t>(n - lo));
                if (rep != is_sum_of_three_squares(n)) out.push_back(n);
            }
            return out;
        };
        v.push_back(std::move(s));
    }
    {
        ClaimSpec s;
        s.id = "dickson.esets";
        s.kind = ClaimKind::ExceptionalSet;
        s.category = thm;
        s.statement =
            "for every catalogued regular form a x^2+b y^2+c z^2, the residue/scaling "
            "description of its exceptional set matches brute-force representability";
        s.finding_label = "failing code n*100+form_index";
        s.expected = Expectation::FormulaMatches;
        s.lo = 0;
        s.default_n = 10000;
        s.finding_pos = [](i64 code) { return code / 100; };
        s.window = [](i64 lo, i64 hi, int jobs, i64) {
            const auto& cat = dickson_catalog();
            vector<i64> out;
            for (size_t i = 0; i < cat.size(); ++i) {
                const auto& f = cat[i].form;
                auto p = prob({ft(square(), 1, "x", f.a), ft(square(), 1, "y", f.b),
                               ft(square(), 1, "z", f.c)});
                p.lo = lo;
                p.hi = hi;
                p.jobs = jobs;
                auto res = coverage_scan(p);
                for (i64 n = lo; n <= hi; ++n) {
                    bool rep = res.representable.get(static_cast<size_t>(n - lo));
                    if (rep == dickson_exceptional(f, n))
                        out.push_back(n * 100 + static_cast<i64>(i));
                }
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        v.push_back(std::move(s));
    }
}

void add_section5(vector<ClaimSpec>& v) {
    AtomSpec SQ = square(), PR = pronic(), P8 = octagonal();
    auto conj = ClaimCategory::Conjecture;

    v.push_back([&] {
        ClaimSpec s;
        s.id = "conj5.1";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement = "8n+3 = x^2+y^2+z^2 with x,y,z in N and x == 1 or 3 (mod 8)";
        s.finding_label = "n without the asserted representation";
        s.expected = Expectation::NoGaps;
        s.lo = 0;
        s.default_n = 1000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = pred_window([](i64 n) {
            return rep_exists_constrained({1, 1, 1}, 8 * n + 3, {{"x", 8, {1, 3}}},
                                          {VarDomain::Naturals, VarDomain::Naturals,
                                           VarDomain::Naturals})
                .has_value();
        });
        return s;
    }());
    v.push_back([&] {
        ClaimSpec s;
        s.id = "conj5.1.pm3";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "8n+3 = x^2+y^2+z^2 with x,y,z in Z and x == +-3 (mod 8), for every "
            "natural n except 20";
        s.finding_label = "n without the asserted representation";
        s.expected = Expectation::GapsExactly;
        s.expected_values = {20};
        s.lo = 0;
        s.default_n = 1000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = pred_window([](i64 n) {
            return rep_exists_constrained({1, 1, 1}, 8 * n + 3, {{"x", 8, {3, 5}}})
                .has_value();
        });
        return s;
    }());
    {
        vector<CoverageProblem> ps;
        for (i64 a : {3, 5, 7, 8, 9, 10, 11, 12})
            ps.push_back(prob({ft(SQ, a, "x"), ft(SQ, a, "y"), ft(SQ, a, "z")}, 1,
                              CrossConstraint::AtLeastOneTermOdd));
        ClaimSpec s;
        s.id = "conj5.2";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "for a > 2, a != 4,6: every positive n is a sum of three values of "
            "floor(x^2/a) one of which is odd";
        s.finding_label = "uncovered n";
        s.expected = Expectation::NoGaps;
        s.lo = 1;
        s.default_n = 10000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = cov_window(std::move(ps));
        v.push_back(std::move(s));
    }
    {
        ClaimSpec s;
        s.id = "conj5.3.main";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "every n >= 2 is r+s+t with r <= s <= t in {x^2 + floor(x/2)} and s odd";
        s.finding_label = "uncovered n";
        s.expected = Expectation::NoGaps;
        s.lo = 2;
        s.default_n = 3000;
        s.finding_pos = [](i64 f) { return f; };
        auto flq = floored_linear_quadratic(1, 2);
        s.window = cov_window({prob({ft(flq, 1, "x"), ft(flq, 1, "y"), ft(flq, 1, "z")},
                                    2, CrossConstraint::SortedMiddleTermOdd)});
        v.push_back(std::move(s));
    }
    {
        vector<CoverageProblem> ps;
        auto flq = floored_linear_quadratic(1, 2);
        for (auto [b, c] : vector<std::pair<i64, i64>>{{1, 2}, {1, 3}, {1, 4}, {1, 5},
                                                       {1, 6}, {1, 8}, {1, 9}, {2, 2},
                                                       {2, 3}})
            ps.push_back(prob({ft(flq, 1, "x"), ft(flq, 1, "y", b), ft(flq, 1, "z", c)}));
        ClaimSpec s;
        s.id = "conj5.3.pairs";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "x + b y + c z with x,y,z in {x^2 + floor(x/2)} covers N for (b,c) in "
            "{(1,2),(1,3),(1,4),(1,5),(1,6),(1,8),(1,9),(2,2),(2,3)}";
        s.finding_label = "uncovered n";
        s.expected = Expectation::NoGaps;
        s.lo = 0;
        s.default_n = 10000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = cov_window(std::move(ps));
        v.push_back(std::move(s));
    }
    {
        vector<CoverageProblem> ps;
        for (auto [p, q] : vector<std::pair<i64, i64>>{{1, 2}, {3, 4}, {5, 4}, {3, 2},
                                                       {1, 3}, {2, 3}, {1, 4}, {1, 5},
                                                       {1, 6}}) {
            auto flq = floored_linear_quadratic(p, q);
            ps.push_back(prob({ft(flq, 1, "x"), ft(flq, 1, "y"), ft(flq, 1, "z")}, 1,
                              CrossConstraint::AtLeastOneTermOdd));
        }
        ClaimSpec s;
        s.id = "conj5.4.i";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "for alpha in {1/2,3/4,5/4,3/2,1/3,2/3,1/4,1/5,1/6}: every positive n is a "
            "sum of three values of x^2 + floor(alpha x) one of which is odd";
        s.finding_label = "uncovered n";
        s.expected = Expectation::NoGaps;
        s.lo = 1;
        s.default_n = 10000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = cov_window(std::move(ps));
        v.push_back(std::move(s));
    }
    {
        vector<CoverageProblem> ps;
        using A3 = std::array<std::pair<i64, i64>, 3>;
        for (const A3& t : vector<A3>{
                 {{{1, 2}, {1, 1}, {1, 1}}},
                 {{{1, 3}, {1, 1}, {1, 1}}},
                 {{{1, 6}, {1, 1}, {1, 1}}},
                 {{{1, 2}, {1, 2}, {1, 2}}},
                 {{{1, 3}, {1, 2}, {1, 1}}},
                 {{{1, 2}, {2, 3}, {5, 4}}},
                 {{{3, 2}, {3, 2}, {3, 2}}}}) {
            ps.push_back(prob({ft(floored_linear_quadratic(t[0].first, t[0].second), 1, "x"),
                               ft(floored_linear_quadratic(t[1].first, t[1].second), 1, "y"),
                               ft(floored_linear_quadratic(t[2].first, t[2].second), 1, "z")}));
        }
        ClaimSpec s;
        s.id = "conj5.4.ii";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "x^2+y^2+z^2 + floor(ax) + floor(by) + floor(cz) covers N for sampled "
            "(a,b,c) with a,b,c <= 3/2 where two differ from 1 or the value multiset "
            "is {1, 1/m} (literal reading of the side condition)";
        s.finding_label = "uncovered n";
        s.expected = Expectation::NoGaps;
        s.lo = 0;
        s.default_n = 10000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = cov_window(std::move(ps));
        v.push_back(std::move(s));
    }
    {
        auto flq = floored_linear_quadratic(11, 4);
        ClaimSpec s;
        s.id = "rmk5.4.a";
        s.kind = ClaimKind::Coverage;
        s.category = ClaimCategory::Remark;
        s.statement =
            "2 is not a sum of three values of x^2 + floor(11x/4), and it is the only "
            "miss below 50";
        s.finding_label = "uncovered n";
        s.expected = Expectation::GapsExactly;
        s.expected_values = {2};
        s.lo = 0;
        s.default_n = 50;
        s.finding_pos = [](i64 f) { return f; };
        s.window = cov_window({prob({ft(flq, 1, "x"), ft(flq, 1, "y"), ft(flq, 1, "z")})});
        v.push_back(std::move(s));
    }
    {
        auto flq = floored_linear_quadratic(8, 5);
        ClaimSpec s;
        s.id = "rmk5.4.b";
        s.kind = ClaimKind::Coverage;
        s.category = ClaimCategory::Remark;
        s.statement =
            "4 is not a sum of three values of x^2 + floor(8x/5) one of which is odd, "
            "and it is the only such miss below 50";
        s.finding_label = "uncovered n";
        s.expected = Expectation::GapsExactly;
        s.expected_values = {4};
        s.lo = 0;
        s.default_n = 50;
        s.finding_pos = [](i64 f) { return f; };
        s.window = cov_window({prob({ft(flq, 1, "x"), ft(flq, 1, "y"), ft(flq, 1, "z")},
                                    0, CrossConstraint::AtLeastOneTermOdd)});
        v.push_back(std::move(s));
    }
    v.push_back([&] {
        ClaimSpec s;
        s.id = "conj5.5";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement = "every n > 1 is p + floor(k(k+1)/4) with p prime and k >= 1";
        s.finding_label = "n without the asserted representation";
        s.expected = Expectation::NoGaps;
        s.lo = 2;
        s.default_n = 10000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = [](i64 lo, i64 hi, int, i64) {
            auto table = sieve(std::max<i64>(hi, 2));
            vector<i64> out;
            for (i64 n = std::max<i64>(2, lo); n <= hi; ++n)
                if (!prime_plus_quarter_pronic(n, table)) out.push_back(n);
            return out;
        };
        return s;
    }());
    v.push_back([&] {
        ClaimSpec s;
        s.id = "rmk5.5";
        s.kind = ClaimKind::Coverage;
        s.category = conj; // open conjecture quoted in a remark
        s.statement =
            "216 is the only natural number not of the form p + T_x with p prime or zero";
        s.finding_label = "n not of the form p + T_x";
        s.expected = Expectation::GapsExactly;
        s.expected_values = {216};
        s.lo = 0;
        s.default_n = 10000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = [](i64 lo, i64 hi, int, i64) {
            auto table = sieve(std::max<i64>(hi, 2));
            vector<i64> out;
            for (i64 n : prime_plus_triangular_scan(hi, table))
                if (n >= lo) out.push_back(n);
            return out;
        };
        return s;
    }());

    auto poly_box = [&](string id, i64 m, const vector<std::array<i64, 3>>& skip,
                        string st) {
        AtomSpec atom = polygonal(m);
        vector<std::pair<i64, CoverageProblem>> coded;
        for (auto t : sorted_triples(3)) {
            if (excluded(skip, t)) continue;
            coded.emplace_back(triple_code(t[0], t[1], t[2]),
                               prob({ft(atom, t[0], "x"), ft(atom, t[1], "y"),
                                     ft(atom, t[2], "z")}));
        }
        ClaimSpec s;
        s.id = std::move(id);
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement = std::move(st);
        s.finding_label = "failing triple code a*100+b*10+c";
        s.expected = Expectation::NoGaps;
        s.lo = 0;
        s.default_n = 10000;
        s.window = box_window(std::move(coded));
        return s;
    };
    v.push_back(poly_box("conj5.6.p5", 5, {},
                         "floor(p5(x)/a)+floor(p5(y)/b)+floor(p5(z)/c) covers N for all "
                         "a<=b<=c<=3"));
    v.push_back(poly_box("conj5.6.p7", 7, {{1, 1, 1}, {1, 1, 2}, {2, 2, 2}},
                         "floor(p7/a)+floor(p7/b)+floor(p7/c) covers N for a<=b<=c<=3 "
                         "outside (1,1,1),(1,1,2),(2,2,2)"));
    v.push_back(poly_box("conj5.6.p8", 8, {{1, 1, 1}, {2, 2, 2}},
                         "floor(p8/a)+floor(p8/b)+floor(p8/c) covers N for a<=b<=c<=3 "
                         "outside (1,1,1),(2,2,2)"));

    {
        ClaimSpec s;
        s.id = "conj5.7.sq";
        s.kind = ClaimKind::ExceptionalSet;
        s.category = conj;
        s.statement =
            "4x^2 + 4y^2 + floor(z^2/c) covers N for every c > 42 (checked to c = 60, "
            "targets to 10^4); c = 42 misses 179";
        s.finding_label = "divisor c with a gap below 10000";
        s.expected = Expectation::SetEquals;
        s.expected_values = {42};
        s.lo = 42;
        s.default_n = 60;
        s.finding_pos = [](i64 f) { return f; };
        s.window = divisor_window({{0,
                                    prob({ft(SQ, 1, "x", 4), ft(SQ, 1, "y", 4),
                                          ft(SQ, 1, "z")}),
                                    2}},
                                  10000);
        v.push_back(std::move(s));
    }
    {
        ClaimSpec s;
        s.id = "conj5.7.pronic";
        s.kind = ClaimKind::ExceptionalSet;
        s.category = conj;
        s.statement =
            "4x^2 + 4y^2 + floor(z(z+1)/c) covers N for every c > 27 (checked to "
            "c = 40, targets to 10^4); c = 27 misses 29";
        s.finding_label = "divisor c with a gap below 10000";
        s.expected = Expectation::SetEquals;
        s.expected_values = {27};
        s.lo = 27;
        s.default_n = 40;
        s.finding_pos = [](i64 f) { return f; };
        s.window = divisor_window({{0,
                                    prob({ft(SQ, 1, "x", 4), ft(SQ, 1, "y", 4),
                                          ft(PR, 1, "z")}),
                                    2}},
                                  10000);
        v.push_back(std::move(s));
    }
    {
        vector<std::pair<i64, CoverageProblem>> coded;
        vector<std::array<i64, 3>> skip = {{1, 1, 1}, {3, 3, 3}, {4, 2, 6}};
        for (i64 a = 1; a <= 4; ++a)
            for (i64 b = 1; b <= 6; ++b)
                for (i64 c = b; c <= 6; ++c) {
                    if (2 * a > b + c) continue;
                    if (excluded(skip, {a, b, c})) continue;
                    coded.emplace_back(triple_code(a, b, c),
                                       prob({ft(SQ, 1, "x", a), ft(SQ, b, "y"),
                                             ft(SQ, c, "z")}));
                }
        ClaimSpec s;
        s.id = "conj5.7.ii";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "a x^2 + floor(y^2/b) + floor(z^2/c) covers N whenever 2a <= b+c, outside "
            "(1,1,1),(3,3,3),(4,2,6); sampled on a <= 4, b <= c <= 6";
        s.finding_label = "failing triple code a*100+b*10+c";
        s.expected = Expectation::NoGaps;
        s.lo = 0;
        s.default_n = 10000;
        s.window = box_window(std::move(coded));
        v.push_back(std::move(s));
    }
    {
        vector<std::pair<i64, CoverageProblem>> coded;
        for (auto t : sorted_triples(4)) {
            auto [a, b, c] = t;
            if (c == 1) continue;
            TermSpec g;
            g.numerator = {{b * c, SQ, "x"}, {a * c, SQ, "y"}, {a * b, SQ, "z"}};
            g.denominator = a * b * c;
            coded.emplace_back(triple_code(a, b, c), prob({g}));
        }
        ClaimSpec s;
        s.id = "conj5.8.sq";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "floor(x^2/a + y^2/b + z^2/c) covers N for a<=b<=c<=4 with c > 1";
        s.finding_label = "failing triple code a*100+b*10+c";
        s.expected = Expectation::NoGaps;
        s.lo = 0;
        s.default_n = 10000;
        s.window = box_window(std::move(coded));
        v.push_back(std::move(s));
    }
    {
        vector<std::pair<i64, CoverageProblem>> coded;
        vector<std::array<i64, 3>> skip = {{1, 1, 1}, {1, 1, 3}, {1, 1, 7}, {1, 3, 3}};
        for (auto t : sorted_triples(7)) {
            if (excluded(skip, t)) continue;
            auto [a, b, c] = t;
            TermSpec g;
            g.numerator = {{b * c, PR, "x"}, {a * c, PR, "y"}, {a * b, PR, "z"}};
            g.denominator = a * b * c;
            coded.emplace_back(triple_code(a, b, c), prob({g}));
        }
        ClaimSpec s;
        s.id = "conj5.8.pronic";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "floor(x(x+1)/a + y(y+1)/b + z(z+1)/c) covers N for a<=b<=c<=7 outside "
            "(1,1,1),(1,1,3),(1,1,7),(1,3,3)";
        s.finding_label = "failing triple code a*100+b*10+c";
        s.expected = Expectation::NoGaps;
        s.lo = 0;
        s.default_n = 10000;
        s.window = box_window(std::move(coded));
        v.push_back(std::move(s));
    }
    {
        AtomSpec CU = cube(Domain::Naturals);
        ClaimSpec s;
        s.id = "conj5.9";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "w^3 + floor(x^3/2) + floor(y^3/3) + floor(z^3/4) and "
            "w^3 + floor(x^3/2) + floor(y^3/4) + floor(z^3/8) cover N (variables in N)";
        s.finding_label = "uncovered n";
        s.expected = Expectation::NoGaps;
        s.lo = 0;
        s.default_n = 20000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = cov_window(
            {prob({ft(CU, 1, "w"), ft(CU, 2, "x"), ft(CU, 3, "y"), ft(CU, 4, "z")}),
             prob({ft(CU, 1, "w"), ft(CU, 2, "x"), ft(CU, 4, "y"), ft(CU, 8, "z")})});
        v.push_back(std::move(s));
    }
    v.push_back([&] {
        ClaimSpec s;
        s.id = "conj5.10";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "every n > 2 is floor(p/a) + floor(q/b) with p, q prime, for (a,b) in "
            "{(1,2),(2,2),(1,3),(2,3),(3,3),(1,4),(2,4),(5,5)}";
        s.finding_label = "n without a prime pair for some (a,b)";
        s.expected = Expectation::NoGaps;
        s.lo = 3;
        s.default_n = 2000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = [](i64 lo, i64 hi, int, i64) {
            static const vector<std::pair<i64, i64>> pairs = {
                {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}, {1, 4}, {2, 4}, {5, 5}};
            auto table = sieve(5 * (hi + 1) + 5);
            vector<i64> out;
            for (i64 n = std::max<i64>(3, lo); n <= hi; ++n)
                for (auto [a, b] : pairs)
                    if (!goldbach_floor_check(a, b, n, table)) {
                        out.push_back(n);
                        break;
                    }
            return out;
        };
        return s;
    }());
    v.push_back([&] {
        ClaimSpec s;
        s.id = "conj5.11.sum";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "every positive n is a sum of two distinct twin-quotient values "
            "floor(x/9) (x the middle of a twin prime pair), one of them even";
        s.finding_label = "n without such a sum";
        s.expected = Expectation::NoGaps;
        s.lo = 1;
        s.default_n = 3000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = [](i64 lo, i64 hi, int, i64) {
            auto table = sieve(9 * hi + 10);
            auto set = twin_floor_set(hi, table);
            vector<i64> out;
            for (i64 n = std::max<i64>(1, lo); n <= hi; ++n)
                if (!twin_sum_check(n, set)) out.push_back(n);
            return out;
        };
        return s;
    }());
    v.push_back([&] {
        ClaimSpec s;
        s.id = "conj5.11.pent";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "every positive n is a twin-quotient value floor(x/9) plus a positive "
            "generalized pentagonal number";
        s.finding_label = "n without such a sum";
        s.expected = Expectation::NoGaps;
        s.lo = 1;
        s.default_n = 3000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = [](i64 lo, i64 hi, int, i64) {
            auto table = sieve(9 * hi + 10);
            auto set = twin_floor_set(hi, table);
            vector<i64> out;
            for (i64 n = std::max<i64>(1, lo); n <= hi; ++n) {
                bool hit = false;
                for (i64 s_ : set) {
                    if (s_ >= n) continue;
                    if (is_generalized_polygonal(5, n - s_)) {
                        hit = true;
                        break;
                    }
                }
                if (!hit) out.push_back(n);
            }
            return out;
        };
        return s;
    }());
    v.push_back([&] {
        ClaimSpec s;
        s.id = "conj5.12.phi";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement =
            "every n > 1 is x^2 + y^2 + phi(z^2) with x,y in N, z >= 1, and max(x,y) "
            "or z prime";
        s.finding_label = "n without the asserted representation";
        s.expected = Expectation::NoGaps;
        s.lo = 2;
        s.default_n = 3000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = [](i64 lo, i64 hi, int, i64) {
            auto table = sieve(std::max<i64>(hi, 2));
            vector<i64> out;
            for (i64 n = std::max<i64>(2, lo); n <= hi; ++n)
                if (!conj512_check(n, table)) out.push_back(n);
            return out;
        };
        return s;
    }());
    v.push_back([&] {
        ClaimSpec s;
        s.id = "conj5.12.cube";
        s.kind = ClaimKind::Coverage;
        s.category = conj;
        s.statement = "every positive n is x^3 + y^2 + T_z with x,y in N and z >= 1";
        s.finding_label = "n without the asserted representation";
        s.expected = Expectation::NoGaps;
        s.lo = 1;
        s.default_n = 2000;
        s.finding_pos = [](i64 f) { return f; };
        s.window = pred_window(cube_square_triangular);
        return s;
    }());
    {
        ClaimSpec s;
        s.id = "conj5.13";
        s.kind = ClaimKind::Search;
        s.category = conj;
        s.statement = "every integer m is x^4 - y^3 + z^2 with x,y,z positive";
        s.finding_label = "m left unresolved";
        s.expected = Expectation::WitnessExists;
        s.lo = 0;
        s.default_n = 30;    // m range
        s.default_bound = 1500; // x and y budget
        s.finding_pos = [](i64 f) { return f; };
        s.window = [](i64 lo, i64 hi, int, i64 bound) {
            for (i64 m = lo; m <= hi; ++m)
                if (!search_x4_minus_y3_plus_z2(m, bound))
                    throw BoundExhausted("x^4 - y^3 + z^2 = " + std::to_string(m) +
                                         ": no witness with x, y <= " +
                                         std::to_string(bound));
            return vector<i64>{};
        };
        s.sample = [](i64 lo, i64 hi, i64 bound) {
            vector<std::pair<i64, Witness>> out;
            for (i64 m = lo; m <= hi; ++m)
                if (auto w = search_x4_minus_y3_plus_z2(m, bound))
                    out.emplace_back(m, Witness{{"x", (*w)[0]}, {"y", (*w)[1]},
                                                {"z", (*w)[2]}});
            return out;
        };
        v.push_back(std::move(s));
    }
    {
        ClaimSpec s;
        s.id = "conj5.14";
        s.kind = ClaimKind::Search;
        s.category = conj;
        s.statement =
            "every natural n is w^2+x^3+y^4+2z^4 and also w^2+2x^2+y^3+2z^3 "
            "(variables in N)";
        s.finding_label = "failing code n*10 + variant (0 or 1)";
        s.expected = Expectation::WitnessExists;
        s.lo = 0;
        s.default_n = 10000;
        s.finding_pos = [](i64 code) { return code / 10; };
        s.window = [](i64 lo, i64 hi, int, i64) {
            vector<i64> out;
            for (i64 n = lo; n <= hi; ++n) {
                if (!quartic_mixed_check(n, QuarticVariant::FourthPowers))
                    out.push_back(n * 10);
                if (!quartic_mixed_check(n, QuarticVariant::Cubes))
                    out.push_back(n * 10 + 1);
            }
            return out;
        };
        v.push_back(std::move(s));
    }

    v.push_back(table_claim(
        "tab5.sstar",
        "the divisors c for which a x^2 + b y^2 + ceil(z^2/c) misses some natural "
        "number match the conjectured table for each listed (a,b)",
        Rounding::Ceil, SQ, sstar_table(), 100000));
    v.push_back(table_claim(
        "tab5.sminus",
        "the divisors c for which a x^2 + b y^2 + floor(z^2/c) misses some natural "
        "number match the conjectured table for each listed (a,b)",
        Rounding::Floor, SQ, sminus_table(), 100000));
    v.push_back(table_claim(
        "tab5.tstar",
        "the divisors c for which a x^2 + b y^2 + ceil(z(z+1)/c) misses some natural "
        "number match the conjectured table for each listed (a,b)",
        Rounding::Ceil, PR, tstar_table(), 100000));
    v.push_back(table_claim(
        "tab5.tminus",
        "the divisors c for which a x^2 + b y^2 + floor(z(z+1)/c) misses some natural "
        "number match the conjectured table for each listed (a,b)",
        Rounding::Floor, PR, tminus_table(), 100000));
}

// ------------------------------------------------------------- checkpoints

string param_hash(const ClaimSpec& s, i64 bound) {
    string key = s.id + '\n' + s.statement + '\n' + s.finding_label + '\n' +
                 std::to_string(s.lo) + '\n' + expectation_name(s.expected) + '\n';
    for (i64 v : s.expected_values) key += std::to_string(v) + ',';
    if (s.kind == ClaimKind::Search && s.default_bound > 0)
        key += "\nbound=" + std::to_string(bound);
    return fingerprint(key);
}

} // namespace

std::string fingerprint(const std::string& blob) {
    uint64_t h = 1469598103934665603ull; // FNV-1a
    for (unsigned char ch : blob) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

std::optional<ScanCheckpoint> checkpoint_load(const std::string& path,
                                              const std::string& key,
                                              const std::string& param_hash) {
    std::ifstream in(path);
    if (!in.good()) return std::nullopt; // no checkpoint yet
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw CheckpointCorrupt("checkpoint " + path + ": not a JSON object");
    for (const char* k : {"claim", "param_hash", "last_n", "gaps"})
        if (!j.contains(k))
            throw CheckpointCorrupt("checkpoint " + path + ": missing field " + k);
    if (!j["claim"].is_string() || !j["param_hash"].is_string() ||
        !j["last_n"].is_number_integer() || !j["gaps"].is_array())
        throw CheckpointCorrupt("checkpoint " + path + ": malformed field types");
    if (j["claim"].get<string>() != key)
        throw CheckpointCorrupt("checkpoint " + path + ": claim id mismatch (" +
                                j["claim"].get<string>() + " vs " + key + ")");
    if (j["param_hash"].get<string>() != param_hash)
        throw CheckpointCorrupt("checkpoint " + path + ": parameter hash mismatch");
    ScanCheckpoint d;
    d.last_n = j["last_n"].get<i64>();
    for (const auto& g : j["gaps"]) {
        if (!g.is_number_integer())
            throw CheckpointCorrupt("checkpoint " + path + ": non-integer gap entry");
        d.gaps.push_back(g.get<i64>());
    }
    return d;
}

void checkpoint_save(const std::string& path, const std::string& key,
                     const std::string& param_hash, i64 last_n,
                     const std::vector<i64>& gaps) {
    nlohmann::ordered_json j;
    j["claim"] = key;
    j["param_hash"] = param_hash;
    j["last_n"] = last_n;
    j["gaps"] = gaps;
    string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out.good()) throw Error("cannot write checkpoint " + tmp);
        out << j.dump() << '\n';
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("cannot move checkpoint into place: " + path);
}

// ---------------------------------------------------------------- public

const std::vector<ClaimSpec>& catalog() {
    static const vector<ClaimSpec> cat = [] {
        vector<ClaimSpec> v;
        add_section1(v);
        add_section1_conjectures(v);
        add_lemmas_and_formulas(v);
        add_section5(v);
        return v;
    }();
    return cat;
}

const ClaimSpec& lookup_claim(const std::string& id) {
    for (const auto& s : catalog())
        if (s.id == id) return s;
    throw UnknownClaim("no claim with id '" + id + "'");
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Confirmed: return "Confirmed";
        case Verdict::Refuted: return "Refuted";
        default: return "EvidenceOnly";
    }
}

std::string category_name(ClaimCategory c) {
    switch (c) {
        case ClaimCategory::Theorem: return "Theorem";
        case ClaimCategory::Lemma: return "Lemma";
        case ClaimCategory::Remark: return "Remark";
        default: return "Conjecture";
    }
}

std::string kind_name(ClaimKind k) {
    switch (k) {
        case ClaimKind::Coverage: return "Coverage";
        case ClaimKind::ExceptionalSet: return "ExceptionalSet";
        case ClaimKind::CountFormula: return "CountFormula";
        case ClaimKind::Identity: return "Identity";
        default: return "Search";
    }
}

std::string expectation_name(Expectation e) {
    switch (e) {
        case Expectation::NoGaps: return "NoGaps";
        case Expectation::GapsExactly: return "GapsExactly";
        case Expectation::SetEquals: return "SetEquals";
        case Expectation::FormulaMatches: return "FormulaMatches";
        default: return "WitnessExists";
    }
}

ClaimReport run_claim(const std::string& id, const RunOptions& opts) {
    const ClaimSpec& spec = lookup_claim(id);
    auto t0 = std::chrono::steady_clock::now();

    bool bounded_search = spec.kind == ClaimKind::Search && spec.default_bound > 0;
    i64 N = bounded_search ? spec.default_n : opts.n.value_or(spec.default_n);
    i64 bound = bounded_search ? opts.n.value_or(spec.default_bound) : 0;
    if (N < spec.lo)
        throw Error("claim " + id + ": range end " + std::to_string(N) +
                    " is below the domain start " + std::to_string(spec.lo));
    int jobs = std::max(1, opts.jobs);
    string hash = param_hash(spec, bound);

    std::set<i64> found;
    i64 start = spec.lo;
    if (!opts.checkpoint.empty()) {
        if (auto cp = checkpoint_load(opts.checkpoint, spec.id, hash)) {
            if (spec.finding_pos) {
                for (i64 f : cp->gaps)
                    if (spec.finding_pos(f) <= N) found.insert(f);
                start = std::min(N, cp->last_n) + 1;
            } else if (cp->last_n <= N) {
                // opaque instance codes merge across windows but cannot be
                // re-sliced, so a longer stored run forces a fresh scan
                found.insert(cp->gaps.begin(), cp->gaps.end());
                start = cp->last_n + 1;
            }
        }
    }

    if (start <= N) {
        i64 span = N - start + 1;
        i64 chunk = span;
        if (!opts.checkpoint.empty() || opts.progress)
            chunk = std::max<i64>(1, (span + 7) / 8);
        for (i64 a = start; a <= N; a += chunk) {
            i64 b = std::min(N, a + chunk - 1);
            for (i64 f : spec.window(a, b, jobs, bound)) found.insert(f);
            if (!opts.checkpoint.empty())
                checkpoint_save(opts.checkpoint, spec.id, hash, b,
                                vector<i64>(found.begin(), found.end()));
            if (opts.progress)
                opts.progress("claim " + id + ": scanned to " + std::to_string(b) +
                              " (" + std::to_string(found.size()) + " findings)");
        }
    }

    vector<i64> expect;
    for (i64 e : spec.expected_values)
        if (!spec.finding_pos ||
            (spec.finding_pos(e) >= spec.lo && spec.finding_pos(e) <= N))
            expect.push_back(e);

    ClaimReport r;
    r.id = spec.id;
    r.category = spec.category;
    r.kind = spec.kind;
    r.lo = spec.lo;
    r.hi = N;
    r.bound = bound;
    r.findings.assign(found.begin(), found.end());
    r.expected = spec.expected;
    r.expected_values = expect;
    r.finding_label = spec.finding_label;
    r.ok = r.findings == expect;
    if (spec.category == ClaimCategory::Conjecture)
        r.verdict = r.ok ? Verdict::EvidenceOnly : Verdict::Refuted;
    else
        r.verdict = r.ok ? Verdict::Confirmed : Verdict::Refuted;
    if (!r.ok) {
        vector<i64> unexpected, missing;
        std::set_difference(r.findings.begin(), r.findings.end(), expect.begin(),
                            expect.end(), std::back_inserter(unexpected));
        std::set_difference(expect.begin(), expect.end(), r.findings.begin(),
                            r.findings.end(), std::back_inserter(missing));
        if (!unexpected.empty())
            r.counterexample = "unexpected " + spec.finding_label + ": " +
                               std::to_string(unexpected.front());
        else
            r.counterexample = "expected " + spec.finding_label + " " +
                               std::to_string(missing.front()) + " was not found";
    }
    if (r.ok && spec.sample) r.witnesses = spec.sample(spec.lo, N, bound);
    r.checkpoint_cursor = N;
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// ------------------------------------------------- named special operations

i64 excluded_set_member(i64 k, i64 q) {
    if (k < 0 || q < 1) throw Error("excluded_set_member: need k >= 0, q >= 1");
    i64 p4k = 1;
    for (i64 i = 0; i < k; ++i) p4k = checked_mul(p4k, 4);
    i64 a = checked_mul(checked_mul(p4k, 16), q);       // 4^(k+2) q
    i64 b = 2 * ((p4k + 2) / 3);                        // (2/3)(4^k + 2)
    return checked_sub(a, b);
}

std::vector<i64> excluded_set_upto(i64 n) {
    std::set<i64> out;
    for (i64 k = 0;; ++k) {
        i64 first = excluded_set_member(k, 1);
        if (first > n) break;
        for (i64 q = 1;; ++q) {
            i64 m = excluded_set_member(k, q);
            if (m > n) break;
            out.insert(m);
        }
    }
    return std::vector<i64>(out.begin(), out.end());
}

bool octagonal_excluded_check(i64 N) {
    if (N < 1) throw Error("octagonal_excluded_check: need N >= 1");
    AtomSpec P8 = octagonal();
    auto p = prob({ft(P8, 1, "x"), ft(P8, 1, "y"), ft(P8, 1, "z", 2)});
    p.hi = N;
    auto gaps = coverage_scan(p).gaps;
    return gaps == excluded_set_upto(N);
}

std::optional<std::array<i64, 3>> search_x4_minus_y3_plus_z2(i64 m, i64 bound) {
    if (bound < 1) throw Error("search bound must be positive");
    for (i64 y = 1; y <= bound; ++y) {
        i64 target = checked_add(m, checked_mul(checked_mul(y, y), y));
        for (i64 x = 1; x <= bound; ++x) {
            i64 x4 = checked_mul(checked_mul(x, x), checked_mul(x, x));
            if (x4 >= target) break; // z^2 would drop below 1
            i64 z2 = target - x4;
            i64 z = isqrt_i64(z2);
            if (z * z == z2) return std::array<i64, 3>{x, y, z};
        }
    }
    return std::nullopt;
}

std::optional<Witness> quartic_mixed_check(i64 n, QuarticVariant variant) {
    if (n < 0) throw Error("quartic_mixed_check: need n >= 0");
    if (variant == QuarticVariant::FourthPowers) {
        // w^2 + x^3 + y^4 + 2 z^4
        for (i64 w = isqrt_i64(n); w >= 0; --w) {
            i64 r1 = n - w * w;
            i64 xmax = 0;
            while ((xmax + 1) * (xmax + 1) * (xmax + 1) <= r1) ++xmax;
            for (i64 x = xmax; x >= 0; --x) {
                i64 r2 = r1 - x * x * x;
                i64 ymax = 0;
                while ((ymax + 1) * (ymax + 1) * (ymax + 1) * (ymax + 1) <= r2) ++ymax;
                for (i64 y = ymax; y >= 0; --y) {
                    i64 r3 = r2 - y * y * y * y;
                    if (r3 % 2 != 0) continue;
                    i64 z4 = r3 / 2;
                    i64 z = 0;
                    while ((z + 1) * (z + 1) * (z + 1) * (z + 1) <= z4) ++z;
                    if (z * z * z * z == z4)
                        return Witness{{"w", w}, {"x", x}, {"y", y}, {"z", z}};
                }
            }
        }
        return std::nullopt;
    }
    // w^2 + 2 x^2 + y^3 + 2 z^3
    for (i64 w = isqrt_i64(n); w >= 0; --w) {
        i64 r1 = n - w * w;
        for (i64 x = isqrt_i64(r1 / 2); x >= 0; --x) {
            i64 r2 = r1 - 2 * x * x;
            i64 ymax = 0;
            while ((ymax + 1) * (ymax + 1) * (ymax + 1) <= r2) ++ymax;
            for (i64 y = ymax; y >= 0; --y) {
                i64 r3 = r2 - y * y * y;
                if (r3 % 2 != 0) continue;
                i64 z3 = r3 / 2;
                i64 z = 0;
                while ((z + 1) * (z + 1) * (z + 1) <= z3) ++z;
                if (z * z * z == z3)
                    return Witness{{"w", w}, {"x", x}, {"y", y}, {"z", z}};
            }
        }
    }
    return std::nullopt;
}

} // namespace fsum
