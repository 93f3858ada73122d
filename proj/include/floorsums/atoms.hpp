#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>
#include "floorsums/checked.hpp"

namespace fsum {

enum class AtomKind { Quadratic, Cube, FourthPower, FlooredLinearQuadratic };
enum class Domain { AllIntegers, Naturals, PositiveIntegers };

// One variable's building-block sequence.
//
// Quadratic is stored as half-integer coefficients: value = (q2*x^2 + q1*x)/2
// with q2 > 0 and q2+q1 even, so p_m(x) = ((m-2)x^2 - (m-4)x)/2 fits without
// rationals. The public constructor quadratic(u, v) means u*x^2 + v*x.
// FlooredLinearQuadratic means x^2 + floor(p*x/q) with alpha = p/q > 0.
struct AtomSpec {
    AtomKind kind = AtomKind::Quadratic;
    i64 q2 = 2, q1 = 0;
    i64 p = 0, q = 1;
    Domain domain = Domain::AllIntegers;
};

AtomSpec quadratic(i64 u, i64 v, Domain d = Domain::AllIntegers);
AtomSpec polygonal(i64 m, Domain d = Domain::AllIntegers);
AtomSpec square(Domain d = Domain::AllIntegers);
AtomSpec pronic(Domain d = Domain::AllIntegers);
AtomSpec triangular(Domain d = Domain::AllIntegers);
AtomSpec octagonal(Domain d = Domain::AllIntegers);
AtomSpec cube(Domain d = Domain::Naturals);
AtomSpec fourth_power(Domain d = Domain::Naturals);
AtomSpec floored_linear_quadratic(i64 p, i64 q, Domain d = Domain::AllIntegers);

// Throws InvalidAtom if the atom is not bounded below on its domain or the
// stored coefficients break an invariant.
void validate_atom(const AtomSpec& atom);

i128 atom_eval(const AtomSpec& atom, i64 x);

// Smallest value the atom takes on its domain.
i64 atom_min(const AtomSpec& atom);

using Witness = std::vector<std::pair<std::string, i64>>;

struct AtomValue {
    i64 value;
    std::vector<i64> witnesses; // x values, at most `cap` per value
};

// All values of the atom inside [lo, hi], sorted ascending, each with up to
// `cap` witnesses ordered by |x| (positive first on ties). cap <= 0 keeps
// every witness.
std::vector<AtomValue> atom_enumerate(const AtomSpec& atom, i64 lo, i64 hi,
                                      int cap = 4);

// Just the sorted value list.
std::vector<i64> atom_values(const AtomSpec& atom, i64 lo, i64 hi);

// p_m(x) = ((m-2)x^2 - (m-4)x)/2, checked.
i128 polygonal_value(i64 m, i64 x);

// T_k = floor((2k+1)^2 / 8), must hold for every k.
bool triangular_floor_identity(i64 k);

// floor(p8(x)/(2m)) = floor(p8(1-2x)/(8m)) and
// floor(p8(x)/m)    = floor((3x-1)^2/(3m)), both for every x, m >= 1.
bool octagonal_shift_identity(i64 x, i64 m);

// Solve p_m(x) = n over generalized (integer) x; exact discriminant test.
std::optional<Witness> is_generalized_polygonal(i64 m, i64 n);

} // namespace fsum
