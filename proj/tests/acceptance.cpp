// Acceptance sweep: one line per criterion, exit 0 only if all pass.
#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "floorsums/atoms.hpp"
#include "floorsums/claims.hpp"
#include "floorsums/coverage.hpp"
#include "floorsums/ternary.hpp"

using namespace fsum;

namespace {

int failures = 0;

void report(int criterion, const char* what, bool ok) {
    std::printf("criterion %2d: %s  %s\n", criterion, ok ? "PASS" : "FAIL", what);
    if (!ok) ++failures;
}

ClaimReport run(const std::string& id, std::optional<i64> n = std::nullopt) {
    RunOptions opts;
    opts.n = n;
    opts.jobs = 8;
    return run_claim(id, opts);
}

bool claim_ok(const std::string& id, std::optional<i64> n = std::nullopt) {
    ClaimReport r = run(id, n);
    if (!r.ok)
        std::printf("    [%s] verdict %s, %zu findings\n", id.c_str(),
                    verdict_name(r.verdict).c_str(), r.findings.size());
    return r.ok;
}

std::vector<i64> scan_gaps(std::vector<TermSpec> terms, i64 hi) {
    CoverageProblem p;
    p.terms = std::move(terms);
    p.lo = 0;
    p.hi = hi;
    p.jobs = 8;
    return coverage_scan(p).gaps;
}

TermSpec sq(i64 coeff, const std::string& var, i64 den = 1,
            Rounding r = Rounding::Floor) {
    return simple_term(r, square(), den, coeff, var);
}

bool criterion1() {
    bool ok = true;
    ClaimReport base = run("rmk1.3");
    ok &= base.ok && base.findings == std::vector<i64>{20142};

    auto g42 = scan_gaps({sq(4, "x"), sq(4, "y"),
                          simple_term(Rounding::Floor, square(), 42, 1, "z")},
                         10000);
    ok &= !g42.empty() && g42.front() == 179;
    ok &= claim_ok("conj5.7.sq");

    auto g27 = scan_gaps({sq(4, "x"), sq(4, "y"),
                          simple_term(Rounding::Floor, pronic(), 27, 1, "z")},
                         10000);
    ok &= !g27.empty() && g27.front() == 29;
    ok &= claim_ok("conj5.7.pronic");
    return ok;
}

bool criterion2() {
    bool ok = true;
    for (i64 d : {19, 20})
        ok &= shifted_three_squares_scan(1, d, 0, 120) == std::vector<i64>{111};
    for (i64 a : {1, 3, 5})
        ok &= shifted_three_squares_scan(a, 2, 0, 5000).empty();
    for (i64 a : {1, 2, 4, 5})
        ok &= shifted_three_squares_scan(a, 3, 0, 5000).empty();
    return ok;
}

bool criterion3() {
    const char* ids[] = {
        "thm1.1.i",   "thm1.1.i.odd", "thm1.1.ii",     "thm1.1.iii",
        "thm1.1.iv.m5", "thm1.1.iv.m6", "thm1.1.iv.m15", "thm1.1.v",
        "thm1.2.i",   "thm1.2.ii",    "thm1.2.iii",    "thm1.2.iv",
        "thm1.3.i",   "thm1.3.ii",    "thm1.3.iii",
        "thm1.4.i",   "thm1.4.iii",
        "thm1.5.ii",  "thm1.5.iii",   "thm1.5.iv"};
    bool ok = true;
    for (const char* id : ids) {
        ClaimReport r = run(id);
        bool this_ok =
            r.ok && r.verdict == Verdict::Confirmed && r.findings.empty();
        if (!this_ok) std::printf("    [%s] failed\n", id);
        ok &= this_ok;
    }
    return ok;
}

bool criterion4() {
    bool ok = claim_ok("thm1.5.i") && claim_ok("thm1.5.i.even") &&
              claim_ok("thm1.5.i.aux");
    ok &= excluded_set_upto(10000).front() == 14;
    return ok;
}

bool criterion5() {
    bool ok = claim_ok("eq2.1") && claim_ok("eq4.3") && claim_ok("eq4.4") &&
              claim_ok("eq4.5");
    ok &= rep_count({1, 1, 1}, 9) == 30;
    ok &= rep_count({1, 1, 2}, 4) == 12;
    ok &= rep_count({1, 1, 5}, 1) == 4;
    return ok;
}

bool criterion6() { return claim_ok("dickson.esets"); }

bool criterion7() {
    bool ok = true;
    for (const char* id : {"tab5.sstar", "tab5.sminus", "tab5.tstar",
                           "tab5.tminus"}) {
        ClaimReport r = run(id);
        bool this_ok = r.ok && r.verdict == Verdict::EvidenceOnly;
        if (!this_ok) std::printf("    [%s] failed\n", id);
        ok &= this_ok;
    }
    return ok;
}

bool criterion8() {
    return claim_ok("lem2.1") && claim_ok("lem2.2.i") && claim_ok("lem4.1") &&
           claim_ok("lem4.2");
}

// a small pool of atoms for randomized engine-vs-naive cross checks
AtomSpec pool_atom(std::mt19937& rng) {
    switch (rng() % 4) {
        case 0: return square();
        case 1: return triangular();
        case 2: return pronic();
        default: return polygonal(5);
    }
}

bool naive_matches_engine(std::mt19937& rng) {
    std::uniform_int_distribution<i64> pick_n(200, 2000);
    i64 hi = pick_n(rng);
    int nterms = 2 + int(rng() % 2);
    std::vector<TermSpec> terms;
    const char* vars[] = {"x", "y", "z"};
    for (int i = 0; i < nterms; ++i) {
        i64 coeff = 1 + i64(rng() % 4);
        i64 den = 1 + i64(rng() % 8);
        Rounding r = (rng() % 2) ? Rounding::Floor : Rounding::Ceil;
        terms.push_back(simple_term(r, pool_atom(rng), den, coeff, vars[i]));
    }

    std::vector<std::vector<i64>> lists;
    for (const auto& t : terms) lists.push_back(term_value_list(t, 0, hi));
    std::vector<char> covered(size_t(hi) + 1, 0);
    for (i64 a : lists[0]) {
        if (a > hi) continue;
        for (i64 b : lists[1]) {
            i64 s = a + b;
            if (s > hi) continue;
            if (nterms == 2) {
                covered[size_t(s)] = 1;
                continue;
            }
            for (i64 c : lists[2]) {
                if (s + c > hi) continue;
                covered[size_t(s + c)] = 1;
            }
        }
    }
    std::vector<i64> naive;
    for (i64 n = 0; n <= hi; ++n)
        if (!covered[size_t(n)]) naive.push_back(n);

    CoverageProblem p;
    p.terms = terms;
    p.lo = 0;
    p.hi = hi;
    p.jobs = 1 + int(rng() % 4);
    return coverage_scan(p).gaps == naive;
}

bool criterion9() {
    bool ok = claim_ok("eq1.12") && claim_ok("idn.tri.floor") &&
              claim_ok("idn.oct.quad") && claim_ok("idn.s.ceil") &&
              claim_ok("idn.tset");

    std::mt19937 rng(20260814u);
    for (int trial = 0; trial < 30; ++trial)
        if (!naive_matches_engine(rng)) {
            std::printf("    randomized cross check failed at trial %d\n", trial);
            ok = false;
            break;
        }

    std::vector<TermSpec> fam = {
        sq(1, "x"), sq(3, "y"),
        simple_term(Rounding::Floor, square(), 10, 1, "z")};
    CoverageProblem whole;
    whole.terms = fam;
    whole.lo = 0;
    whole.hi = 25000;
    whole.jobs = 8;
    auto full = coverage_scan(whole).gaps;
    CoverageProblem left = whole, right = whole;
    left.hi = 12500;
    right.lo = 12501;
    auto lg = coverage_scan(left).gaps;
    auto rg = coverage_scan(right).gaps;
    lg.insert(lg.end(), rg.begin(), rg.end());
    ok &= full == lg;
    return ok;
}

bool criterion10() {
    auto val = [](i64 x, i64 y, i64 z) {
        return x * x * x * x - y * y * y + z * z;
    };
    bool ok = val(4, 8, 16) == 0 && val(36, 139, 1003) == 6 &&
              val(4325, 71383, 3719409) == 11019;

    ClaimReport search = run("conj5.13");
    ok &= search.ok && search.verdict == Verdict::EvidenceOnly;

    ClaimReport prime = run("rmk5.5");
    ok &= prime.ok && prime.findings == std::vector<i64>{216};

    ClaimReport pm3 = run("conj5.1.pm3");
    std::vector<i64> in_range;
    for (i64 f : pm3.findings)
        if (f >= 1 && f <= 1000) in_range.push_back(f);
    ok &= in_range == std::vector<i64>{20};
    return ok;
}

} // namespace

int main() {
    report(1, "single-gap families and their exceptional divisors", criterion1());
    report(2, "shifted three-squares families", criterion2());
    report(3, "coverage theorems at full targets", criterion3());
    report(4, "octagonal characterization and smallest excluded value",
           criterion4());
    report(5, "sphere count formulas and spot values", criterion5());
    report(6, "regular-form exceptional sets against brute force", criterion6());
    report(7, "divisor tables reproduce exactly", criterion7());
    report(8, "supporting lemmas on exhaustive ranges", criterion8());
    report(9, "identity suites and engine cross checks", criterion9());
    report(10, "search witnesses and prime-sum findings", criterion10());
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria hold\n");
    return 0;
}
