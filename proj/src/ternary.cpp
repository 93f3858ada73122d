#include "floorsums/ternary.hpp"
#include <algorithm>
#include <map>

namespace fsum {

bool is_prime_trial(i64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 1) throw Error("factorize: argument must be positive");
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

namespace {

// z count for c z^2 = rem, rem >= 0
inline i64 z_solutions(i64 c, i64 rem) {
    if (rem % c) return 0;
    i64 zz = rem / c;
    i64 z = isqrt_i64(zz);
    if (z * z != zz) return 0;
    return z == 0 ? 1 : 2;
}

} // namespace

i64 rep_count(const FormTriple& t, i64 n) {
    if (n < 0) return 0;
    i64 total = 0;
    i64 X = isqrt_i64(n / t.a);
    for (i64 x = 0; x <= X; ++x) {
        i64 mx = x == 0 ? 1 : 2;
        i64 rx = n - t.a * x * x;
        if (rx < 0) break;
        i64 Y = isqrt_i64(rx / t.b);
        for (i64 y = 0; y <= Y; ++y) {
            i64 ry = rx - t.b * y * y;
            if (ry < 0) break;
            i64 my = y == 0 ? 1 : 2;
            total += mx * my * z_solutions(t.c, ry);
        }
    }
    return total;
}

namespace {

bool residue_ok(const std::vector<CongruenceConstraint>& cs, const char* var, i64 v) {
    for (auto& c : cs) {
        if (c.var != var) continue;
        i64 r = ((v % c.modulus) + c.modulus) % c.modulus;
        bool hit = false;
        for (i64 allowed : c.residues) {
            i64 ar = ((allowed % c.modulus) + c.modulus) % c.modulus;
            if (ar == r) { hit = true; break; }
        }
        if (!hit) return false;
    }
    return true;
}

} // namespace

std::optional<Witness> rep_exists_constrained(
    const FormTriple& t, i64 n,
    const std::vector<CongruenceConstraint>& constraints,
    std::array<VarDomain, 3> domains) {
    if (n < 0) return std::nullopt;
    i64 X = isqrt_i64(n / t.a);
    for (i64 ax = 0; ax <= X; ++ax) {
        for (int sx = 0; sx < 2; ++sx) {
            if (sx == 1 && (ax == 0 || domains[0] == VarDomain::Naturals)) continue;
            i64 x = sx ? -ax : ax;
            if (!residue_ok(constraints, "x", x)) continue;
            i64 rx = n - t.a * ax * ax;
            i64 Y = isqrt_i64(rx / t.b);
            for (i64 ay = 0; ay <= Y; ++ay) {
                for (int sy = 0; sy < 2; ++sy) {
                    if (sy == 1 && (ay == 0 || domains[1] == VarDomain::Naturals)) continue;
                    i64 y = sy ? -ay : ay;
                    if (!residue_ok(constraints, "y", y)) continue;
                    i64 ry = rx - t.b * ay * ay;
                    if (ry % t.c) continue;
                    i64 zz = ry / t.c;
                    i64 az = isqrt_i64(zz);
                    if (az * az != zz) continue;
                    for (int sz = 0; sz < 2; ++sz) {
                        if (sz == 1 && (az == 0 || domains[2] == VarDomain::Naturals)) continue;
                        i64 z = sz ? -az : az;
                        if (!residue_ok(constraints, "z", z)) continue;
                        return Witness{{"x", x}, {"y", y}, {"z", z}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<i128>(a) * b % m);
}

i64 powmod(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

int legendre_symbol(i64 a, i64 p) {
    if (p == 2 || !is_prime_trial(p))
        throw InvalidPrime("legendre_symbol needs an odd prime, got " + std::to_string(p));
    i64 r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    i64 e = powmod(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

i64 h_value(const FormTriple& t, i64 n) {
    if (n < 1) throw Error("h_value: n must be positive");
    i64 abc = checked_mul(checked_mul(t.a, t.b), t.c);
    i64 result = 1;
    for (auto [p, e] : factorize(n)) {
        if (p == 2 || abc % p == 0) continue;
        int chi = legendre_symbol(-abc, p);
        // (p^(e+1)-1)/(p-1) and (p^e-1)/(p-1) as checked geometric sums
        i64 s_hi = 0, s_lo = 0, pw = 1;
        for (int i = 0; i <= e; ++i) {
            if (i < e) s_lo = checked_add(s_lo, pw);
            s_hi = checked_add(s_hi, pw);
            if (i < e) pw = checked_mul(pw, p);
        }
        i64 term = checked_sub(s_hi, chi * s_lo);
        result = checked_mul(result, term);
    }
    return result;
}

i64 hurwitz_sphere_count(i64 n) {
    return checked_mul(i64{6}, h_value({1, 1, 1}, n));
}

i64 cooper_lam_count(i64 n) {
    i64 lead = (n % 2 == 0) ? 12 : 4;
    return checked_mul(lead, h_value({1, 1, 2}, n));
}

i64 gpq_count(i64 n) {
    int ord5 = 0;
    i64 m = n;
    while (m % 5 == 0) { m /= 5; ++ord5; }
    i64 pw = 5;
    for (int i = 0; i < ord5; ++i) pw = checked_mul(pw, i64{5});
    return checked_mul(checked_mul(i64{2}, checked_sub(pw, i64{3})),
                       h_value({1, 1, 5}, n));
}

bool is_sum_of_three_squares(i64 n) {
    if (n < 0) return false;
    while (n % 4 == 0 && n > 0) n /= 4;
    return n % 8 != 7;
}

namespace {

bool scaled_member(const ScaledFamily& f, i64 n) {
    i64 t = n;
    while (t > 0) {
        if (t % f.M == f.r) return true;
        if (t % f.s) break;
        t /= f.s;
    }
    return false;
}

std::vector<DicksonEntry> build_catalog() {
    auto R = [](i64 M, i64 r) { return ResidueFamily{M, r}; };
    auto S = [](i64 s, i64 M, i64 r) { return ScaledFamily{s, M, r}; };
    std::vector<DicksonEntry> cat;
    cat.push_back({{1, 1, 1}, {}, {S(4, 8, 7)}});
    cat.push_back({{1, 1, 2}, {}, {S(4, 16, 14)}});
    cat.push_back({{1, 1, 3}, {}, {S(9, 9, 6)}});
    cat.push_back({{1, 1, 5}, {}, {S(4, 8, 3)}});
    cat.push_back({{1, 1, 6}, {}, {S(9, 9, 3)}});
    cat.push_back({{1, 2, 4}, {}, {S(4, 16, 14)}});
    cat.push_back({{1, 2, 6}, {}, {S(4, 8, 5)}});
    cat.push_back({{1, 3, 3}, {}, {S(9, 3, 2)}});
    cat.push_back({{2, 3, 3}, {}, {S(9, 3, 1)}});
    cat.push_back({{1, 3, 6}, {R(3, 2)}, {S(4, 16, 14)}});
    cat.push_back({{1, 4, 8}, {R(4, 2), R(4, 3)}, {S(4, 16, 14)}});
    cat.push_back({{1, 5, 10}, {}, {S(25, 5, 2), S(25, 5, 3)}});
    cat.push_back({{1, 4, 12}, {R(4, 2), R(4, 3)}, {S(9, 9, 6)}});
    cat.push_back({{1, 6, 18}, {R(3, 2), R(9, 3)}, {S(4, 8, 5)}});
    cat.push_back({{1, 8, 40},
                   {R(4, 2), R(4, 3), R(8, 5), R(32, 28)},
                   {S(25, 25, 5), S(25, 25, 20)}});
    cat.push_back({{1, 4, 24}, {R(4, 2), R(4, 3)}, {S(9, 9, 3)}});
    cat.push_back({{1, 6, 9}, {R(3, 2)}, {S(9, 9, 3)}});
    cat.push_back({{1, 5, 5}, {R(5, 2), R(5, 3)}, {S(4, 8, 7)}});
    cat.push_back({{1, 12, 12}, {R(4, 2), R(4, 3)}, {S(9, 3, 2)}});
    cat.push_back({{1, 21, 21},
                   {},
                   {S(4, 8, 7), S(9, 3, 2), S(49, 7, 3), S(49, 7, 5), S(49, 7, 6)}});
    cat.push_back({{1, 4, 16}, {R(4, 2), R(4, 3), R(16, 12)}, {S(4, 8, 7)}});
    cat.push_back({{1, 6, 24}, {R(8, 3), R(8, 5), R(32, 12)}, {S(9, 3, 2)}});
    cat.push_back({{1, 10, 30}, {}, {S(4, 8, 5), S(9, 9, 6), S(25, 5, 2), S(25, 5, 3)}});
    cat.push_back({{1, 16, 16},
                   {R(4, 2), R(4, 3), R(8, 5), R(16, 8), R(16, 12)},
                   {S(4, 8, 7)}});
    return cat;
}

} // namespace

const std::vector<DicksonEntry>& dickson_catalog() {
    static const std::vector<DicksonEntry> cat = build_catalog();
    return cat;
}

bool dickson_exceptional(const FormTriple& form, i64 n) {
    std::array<i64, 3> k{form.a, form.b, form.c};
    std::sort(k.begin(), k.end());
    for (auto& e : dickson_catalog()) {
        if (e.form.a != k[0] || e.form.b != k[1] || e.form.c != k[2]) continue;
        if (n < 0) return false;
        for (auto& rf : e.residues)
            if (n % rf.M == rf.r) return true;
        for (auto& sf : e.scaled)
            if (scaled_member(sf, n)) return true;
        return false;
    }
    throw UnknownForm("no exceptional-set data for form (" + std::to_string(form.a) +
                      "," + std::to_string(form.b) + "," + std::to_string(form.c) + ")");
}

Witness sphere_point_proper(SphereKind kind, i64 n) {
    bool pow2 = n >= 1 && (n & (n - 1)) == 0;
    if (kind == SphereKind::TwoSquaresPlus2zSq) {
        if (n <= 1) throw HypothesisViolated("need n > 1");
    } else {
        if (n < 1 || pow2) throw HypothesisViolated("n must not be a power of two");
    }
    i64 c = kind == SphereKind::ThreeSquares ? 1
            : kind == SphereKind::TwoSquaresPlus2zSq ? 2 : 5;
    i64 nn = checked_mul(n, n);

    std::optional<std::array<i64, 4>> best; // (maxcoord, x, y, z)
    i64 zmax = isqrt_i64(nn / c);
    for (i64 z = 0; z <= zmax; ++z) {
        i64 rem = nn - c * z * z;
        for (i64 x = 0; x * x <= rem; ++x) {
            i64 yy = rem - x * x;
            i64 y = isqrt_i64(yy);
            if (y * y != yy) continue;
            if (kind == SphereKind::ThreeSquares) {
                if (x >= n || y >= n || z >= n) continue;
                std::array<i64, 3> s{x, y, z};
                std::sort(s.begin(), s.end());
                std::array<i64, 4> key{s[2], s[0], s[1], s[2]};
                if (!best || key < *best) best = key;
            } else {
                if (x >= n || y >= n) continue;
                i64 hx = std::max(x, y), hy = std::min(x, y);
                std::array<i64, 4> key{std::max(hx, z), hx, hy, z};
                if (!best || key < *best) best = key;
            }
        }
    }
    if (!best) throw SearchExhausted("no proper sphere point found");
    return Witness{{"x", (*best)[1]}, {"y", (*best)[2]}, {"z", (*best)[3]}};
}

std::pair<i64, i64> rewrite_two_squares_avoiding_5(i64 u, i64 v) {
    i64 N = checked_add(checked_mul(u, u), checked_mul(v, v));
    if (N == 0 || N % 5 != 0)
        throw HypothesisViolated("need u^2+v^2 positive and divisible by 5");
    for (i64 x = 0; x * x * 2 <= N; ++x) {
        i64 yy = N - x * x;
        i64 y = isqrt_i64(yy);
        if (y * y != yy) continue;
        if (x % 5 == 0 || y % 5 == 0) continue;
        return {x, y};
    }
    throw SearchExhausted("no two-square rewrite avoiding 5 found");
}

std::pair<i64, i64> rewrite_binary_avoiding_divisor(i64 a, i64 b, i64 N, i64 d) {
    if (a < 1 || b < 1 || N < 1 || d < 2)
        throw Error("rewrite_binary_avoiding_divisor: bad arguments");
    bool representable = false;
    for (i64 u = 0; a * u * u <= N; ++u) {
        i64 rem = N - a * u * u;
        if (rem % b) continue;
        i64 vv = rem / b;
        i64 v = isqrt_i64(vv);
        if (v * v != vv) continue;
        representable = true;
        if ((u * v) % d != 0) return {u, v};
    }
    if (!representable)
        throw HypothesisViolated("N is not representable by the binary form");
    throw NoAdmissibleRewrite("every representation has u*v divisible by " +
                              std::to_string(d));
}

} // namespace fsum
