#pragma once
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>
#include "floorsums/atoms.hpp"
#include "floorsums/bitset.hpp"
#include "floorsums/ternary.hpp"

namespace fsum {

enum class Rounding { Floor, Ceil, Exact };

struct NumeratorPart {
    i64 coeff = 1; // positive
    AtomSpec atom;
    std::string var = "x";
};

// One summand: round((sum of coeff*atom(var) + numerator_offset) / denominator).
// Exact rounding admits a value only when the denominator divides the
// numerator sum. Congruence constraints apply to this term's variables.
struct TermSpec {
    Rounding rounding = Rounding::Floor;
    std::vector<NumeratorPart> numerator;
    i64 denominator = 1;
    i64 numerator_offset = 0;
    std::vector<CongruenceConstraint> constraints;
};

TermSpec simple_term(Rounding r, const AtomSpec& atom, i64 den, i64 coeff = 1,
                     std::string var = "x");

enum class CrossConstraint {
    None,
    AtLeastOneTermOdd,
    AtLeastOneTermEven,
    SortedMiddleTermOdd, // 3 terms; the middle of the sorted value triple is odd
    DistinctTermValues,  // 2 terms; the two values differ
    DistinctAndOneEven,  // 2 terms; distinct and at least one even
};

struct CoverageProblem {
    std::vector<TermSpec> terms; // 1 to 4
    CrossConstraint cross = CrossConstraint::None;
    i64 lo = 0, hi = 0;
    bool want_witnesses = false; // forces the direct (sequential) path
    i64 budget = 100000000;      // grouped-enumeration node budget
    int jobs = 1;
};

struct TermValue {
    i64 value;
    std::vector<Witness> witnesses;
};

// Sorted distinct term values inside [lo, hi] with up to witness_cap
// witnesses each. Multi-variable numerators are enumerated with the budget:
// the direct product of per-variable candidate counts (witness path) or the
// word-operation count of the sumset convolution (value-only path) must not
// exceed it, otherwise GroupTooLarge.
std::vector<TermValue> term_values(const TermSpec& t, i64 lo, i64 hi,
                                   int witness_cap = 4, i64 budget = 100000000);
std::vector<i64> term_value_list(const TermSpec& t, i64 lo, i64 hi,
                                 i64 budget = 100000000);

// Closed-form lower bound on the term's value over its constrained domain
// (not necessarily attained when constraints exclude the vertex).
i64 term_min_bound(const TermSpec& t);

struct CoverageResult {
    i64 lo = 0, hi = 0;
    BitArray representable; // bit i corresponds to n = lo + i
    std::vector<i64> gaps;
    // n -> one witness per term, only when want_witnesses was set
    std::map<i64, std::vector<Witness>> witnesses;
};

CoverageResult coverage_scan(const CoverageProblem& p);
std::optional<i64> first_gap(const CoverageProblem& p);

// Instantiates base with terms[free_term].denominator = c for each c in
// [c_lo, c_hi] and scans; returns every c mapped to its gap list.
std::map<i64, std::vector<i64>> exceptional_divisors_scan(
    CoverageProblem base, size_t free_term, i64 c_lo, i64 c_hi, int jobs = 1);

// Gaps of n = x^2+y^2+z^2 + floor(e(x+y+z)/d) over [lo, hi], x,y,z in Z.
std::vector<i64> shifted_three_squares_scan(i64 e, i64 d, i64 lo, i64 hi);

// Representability of n under the three floor groupings of
// x^2/a + y^2/b + z^2/c: separate floors, (x,y) pair grouped, all grouped.
std::array<bool, 3> variant_triple_check(i64 a, i64 b, i64 c, i64 n);

} // namespace fsum
