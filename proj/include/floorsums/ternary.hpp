#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>
#include "floorsums/atoms.hpp"
#include "floorsums/checked.hpp"

namespace fsum {

struct FormTriple {
    i64 a = 1, b = 1, c = 1;
    bool operator==(const FormTriple&) const = default;
};

// "variable ≡ one of residues (mod modulus)"; negatives reduce into [0, m).
struct CongruenceConstraint {
    std::string var; // "x", "y" or "z"
    i64 modulus = 1;
    std::vector<i64> residues;
};

enum class VarDomain { Integers, Naturals };

bool is_prime_trial(i64 n);
std::vector<std::pair<i64, int>> factorize(i64 n);

// Number of (x,y,z) in Z^3 with a x^2 + b y^2 + c z^2 = n.
i64 rep_count(const FormTriple& t, i64 n);

// First witness in the order |x| asc, |y| asc, |z| asc, + before - per
// coordinate; empty optional after exhausting the bounded search space.
std::optional<Witness> rep_exists_constrained(
    const FormTriple& t, i64 n,
    const std::vector<CongruenceConstraint>& constraints = {},
    std::array<VarDomain, 3> domains = {VarDomain::Integers, VarDomain::Integers,
                                        VarDomain::Integers});

inline bool rep_exists(const FormTriple& t, i64 n) {
    return rep_exists_constrained(t, n).has_value();
}

int legendre_symbol(i64 a, i64 p);

// Product over primes p not dividing 2abc of
//   (p^(e+1)-1)/(p-1) - (-abc|p) * (p^e-1)/(p-1),  e = ord_p(n).
i64 h_value(const FormTriple& t, i64 n);

i64 hurwitz_sphere_count(i64 n); // 6 H_{(1,1,1)}(n) = r_{(1,1,1)}(n^2)
i64 cooper_lam_count(i64 n);     // (4 or 12) H_{(1,1,2)}(n) = r_{(1,1,2)}(n^2)
i64 gpq_count(i64 n);            // 2(5^{ord_5(n)+1}-3) H_{(1,1,5)}(n) = r_{(1,1,5)}(n^2)

// Gauss-Legendre: representable by three squares iff not 4^k(8l+7).
bool is_sum_of_three_squares(i64 n);

// Exceptional sets of regular ternary forms, stored as data: unions of plain
// residue classes and s^k-scaled residue classes.
struct ResidueFamily { i64 M, r; };
struct ScaledFamily { i64 s, M, r; };
struct DicksonEntry {
    FormTriple form; // stored sorted a <= b <= c
    std::vector<ResidueFamily> residues;
    std::vector<ScaledFamily> scaled;
};

const std::vector<DicksonEntry>& dickson_catalog();
// Throws UnknownForm when (a,b,c) (up to permutation) is not in the catalog.
bool dickson_exceptional(const FormTriple& form, i64 n);

enum class SphereKind { ThreeSquares, TwoSquaresPlus2zSq, TwoSquaresPlus5zSq };

// A point on the sphere of radius n for the given form, with the coordinate
// strictness each lemma asserts (|x|,|y|,|z| < n for three squares, |x|,|y| < n
// otherwise). Canonical: minimizes max coordinate, then lexicographic.
Witness sphere_point_proper(SphereKind kind, i64 n);

// x^2 + y^2 = u^2 + v^2 with 5 dividing neither x nor y; requires 5 | u^2+v^2.
std::pair<i64, i64> rewrite_two_squares_avoiding_5(i64 u, i64 v);

// a u^2 + b v^2 = N with d not dividing u*v (so u*v != 0 in particular).
std::pair<i64, i64> rewrite_binary_avoiding_divisor(i64 a, i64 b, i64 N, i64 d);

} // namespace fsum
