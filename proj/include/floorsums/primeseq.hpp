#pragma once
#include <optional>
#include <utility>
#include <vector>
#include "floorsums/atoms.hpp"
#include "floorsums/bitset.hpp"
#include "floorsums/checked.hpp"
#include "floorsums/errors.hpp"

namespace fsum {

// Immutable primality table, shareable across threads.
struct PrimeTable {
    i64 limit = 0;
    BitArray bits;            // bit n set iff n prime
    std::vector<i64> primes;  // ascending

    bool is_prime(i64 n) const {
        if (n > limit) throw TableTooSmall("primality query beyond table limit");
        return n >= 2 && bits.get(static_cast<size_t>(n));
    }
};

PrimeTable sieve(i64 n);

// Splits n as floor(p/a) + floor(q/b) with p, q prime. Scans the split point
// ascending, then p, then q, so results are reproducible.
std::optional<std::pair<i64, i64>> goldbach_floor_check(i64 a, i64 b, i64 n,
                                                        const PrimeTable& table);

// {floor(x/9) <= n : x-1 and x+1 both prime}. Cross-checks the equivalent
// floor(x/3) description over x with 3x-1, 3x+1 prime and throws if the two
// disagree. Needs table.limit >= 9n + 10.
std::vector<i64> twin_floor_set(i64 n, const PrimeTable& table);

// s + t = n with s, t distinct members of the set and s even.
std::optional<std::pair<i64, i64>> twin_sum_check(i64 n, const std::vector<i64>& set);

// phi(z^2) = z * phi(z)
i64 phi_square(i64 z);

// n = x^2 + y^2 + phi(z^2) with x, y >= 0, z >= 1 and max(x, y) prime or z
// prime. z ascending, x descending from isqrt of the remainder.
std::optional<Witness> conj512_check(i64 n, const PrimeTable& table);

// n = p + floor(k(k+1)/4), p prime, k >= 1; smallest such k.
std::optional<std::pair<i64, i64>> prime_plus_quarter_pronic(i64 n, const PrimeTable& table);

// all n <= bound not of the form p + x(x+1)/2 with p prime or zero
std::vector<i64> prime_plus_triangular_scan(i64 bound, const PrimeTable& table);

} // namespace fsum
