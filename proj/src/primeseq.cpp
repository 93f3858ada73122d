#include "floorsums/primeseq.hpp"

#include <algorithm>
#include "floorsums/ternary.hpp"

namespace fsum {

PrimeTable sieve(i64 n) {
    if (n < 0) throw Error("sieve limit must be nonnegative");
    PrimeTable t;
    t.limit = n;
    t.bits = BitArray(static_cast<size_t>(n) + 1);
    for (i64 i = 2; i <= n; ++i) t.bits.set(static_cast<size_t>(i));
    for (i64 p = 2; p * p <= n; ++p) {
        if (!t.bits.get(static_cast<size_t>(p))) continue;
        for (i64 m = p * p; m <= n; m += p) t.bits.reset(static_cast<size_t>(m));
    }
    for (i64 i = 2; i <= n; ++i)
        if (t.bits.get(static_cast<size_t>(i))) t.primes.push_back(i);
    return t;
}

std::optional<std::pair<i64, i64>> goldbach_floor_check(i64 a, i64 b, i64 n,
                                                        const PrimeTable& table) {
    if (a < 1 || b < 1) throw Error("divisors must be positive");
    i64 need = std::max(checked_mul(a, n + 1), checked_mul(b, n + 1));
    if (table.limit < need) throw TableTooSmall("goldbach split needs a larger table");
    for (i64 i = 0; i <= n; ++i) {
        i64 j = n - i;
        for (i64 p = a * i; p < a * i + a; ++p) {
            if (p < 2 || !table.is_prime(p)) continue;
            for (i64 q = b * j; q < b * j + b; ++q)
                if (q >= 2 && table.is_prime(q)) return std::make_pair(p, q);
        }
    }
    return std::nullopt;
}

std::vector<i64> twin_floor_set(i64 n, const PrimeTable& table) {
    if (n < 0) throw Error("bound must be nonnegative");
    i64 need = checked_add(checked_mul(static_cast<i64>(9), n), static_cast<i64>(10));
    if (table.limit < need) throw TableTooSmall("twin set needs primes up to 9n+10");
    std::vector<i64> out;
    for (i64 x = 3; x <= 9 * n + 8; ++x)
        if (table.is_prime(x - 1) && table.is_prime(x + 1)) {
            i64 v = x / 9;
            if (out.empty() || out.back() != v) out.push_back(v);
        }
    // same set via floor(x/3) over x with 3x-1, 3x+1 both prime
    std::vector<i64> alt;
    for (i64 x = 1; x <= 3 * n + 2; ++x)
        if (table.is_prime(3 * x - 1) && table.is_prime(3 * x + 1)) {
            i64 v = x / 3;
            if (alt.empty() || alt.back() != v) alt.push_back(v);
        }
    if (out != alt) throw Error("twin set descriptions disagree");
    return out;
}

std::optional<std::pair<i64, i64>> twin_sum_check(i64 n, const std::vector<i64>& set) {
    for (i64 s : set) {
        if (s % 2 != 0) continue;
        if (s >= n) break;
        i64 t = n - s;
        if (t != s && std::binary_search(set.begin(), set.end(), t))
            return std::make_pair(s, t);
    }
    return std::nullopt;
}

i64 phi_square(i64 z) {
    if (z < 1) throw Error("phi_square needs z >= 1");
    i64 phi = 1;
    for (auto& [p, e] : factorize(z)) {
        phi = checked_mul(phi, p - 1);
        for (i64 k = 1; k < e; ++k) phi = checked_mul(phi, p);
    }
    return checked_mul(z, phi);
}

std::optional<Witness> conj512_check(i64 n, const PrimeTable& table) {
    if (table.limit < n) throw TableTooSmall("conj512_check needs primes up to n");
    for (i64 z = 1; z <= n; ++z) {
        i64 pz = phi_square(z);
        if (pz > n) continue;  // z*phi(z) is not monotone, keep going
        i64 rem = n - pz;
        bool zp = table.is_prime(z);
        for (i64 x = isqrt_i64(rem); x >= 0; --x) {
            i64 y2 = rem - x * x;
            i64 y = isqrt_i64(y2);
            if (y * y != y2) continue;
            if (zp || table.is_prime(std::max(x, y)))
                return Witness{{"x", x}, {"y", y}, {"z", z}};
        }
    }
    return std::nullopt;
}

std::optional<std::pair<i64, i64>> prime_plus_quarter_pronic(i64 n, const PrimeTable& table) {
    if (table.limit < n) throw TableTooSmall("needs primes up to n");
    for (i64 k = 1;; ++k) {
        i64 t = k * (k + 1) / 4;
        if (t > n) break;
        i64 p = n - t;
        if (p >= 2 && table.is_prime(p)) return std::make_pair(p, k);
    }
    return std::nullopt;
}

std::vector<i64> prime_plus_triangular_scan(i64 bound, const PrimeTable& table) {
    if (bound < 0) throw Error("bound must be nonnegative");
    if (table.limit < bound) throw TableTooSmall("needs primes up to the bound");
    std::vector<i64> tri;
    for (i64 x = 0; x * (x + 1) / 2 <= bound; ++x) tri.push_back(x * (x + 1) / 2);
    BitArray rep(static_cast<size_t>(bound) + 1);
    for (i64 t : tri) rep.set(static_cast<size_t>(t));
    for (i64 p : table.primes) {
        if (p > bound) break;
        for (i64 t : tri) {
            if (p + t > bound) break;
            rep.set(static_cast<size_t>(p + t));
        }
    }
    return rep.missing(0);
}

} // namespace fsum
