#include "floorsums/atoms.hpp"
#include <algorithm>
#include <map>

namespace fsum {

AtomSpec quadratic(i64 u, i64 v, Domain d) {
    AtomSpec a;
    a.kind = AtomKind::Quadratic;
    a.q2 = checked_mul(u, 2);
    a.q1 = checked_mul(v, 2);
    a.domain = d;
    validate_atom(a);
    return a;
}

AtomSpec polygonal(i64 m, Domain d) {
    if (m < 3) throw InvalidAtom("polygonal order must be at least 3");
    AtomSpec a;
    a.kind = AtomKind::Quadratic;
    a.q2 = m - 2;
    a.q1 = 4 - m;
    a.domain = d;
    validate_atom(a);
    return a;
}

AtomSpec square(Domain d) { return quadratic(1, 0, d); }
AtomSpec pronic(Domain d) { return quadratic(1, 1, d); }
AtomSpec triangular(Domain d) { return polygonal(3, d); }
AtomSpec octagonal(Domain d) { return polygonal(8, d); }

AtomSpec cube(Domain d) {
    AtomSpec a;
    a.kind = AtomKind::Cube;
    a.domain = d;
    validate_atom(a);
    return a;
}

AtomSpec fourth_power(Domain d) {
    AtomSpec a;
    a.kind = AtomKind::FourthPower;
    a.domain = d;
    validate_atom(a);
    return a;
}

AtomSpec floored_linear_quadratic(i64 p, i64 q, Domain d) {
    AtomSpec a;
    a.kind = AtomKind::FlooredLinearQuadratic;
    a.p = p;
    a.q = q;
    a.domain = d;
    validate_atom(a);
    return a;
}

void validate_atom(const AtomSpec& atom) {
    switch (atom.kind) {
    case AtomKind::Quadratic:
        if (atom.q2 <= 0) throw InvalidAtom("quadratic atom needs positive leading coefficient");
        if (((atom.q2 + atom.q1) & 1) != 0)
            throw InvalidAtom("half-integer quadratic must have q2+q1 even");
        break;
    case AtomKind::Cube:
        if (atom.domain == Domain::AllIntegers)
            throw InvalidAtom("cube over all integers is unbounded below");
        break;
    case AtomKind::FourthPower:
        break;
    case AtomKind::FlooredLinearQuadratic:
        if (atom.q <= 0) throw InvalidAtom("alpha denominator must be positive");
        if (atom.p <= 0) throw InvalidAtom("alpha must be positive");
        break;
    }
}

i128 atom_eval(const AtomSpec& atom, i64 x) {
    i128 xx = static_cast<i128>(x);
    switch (atom.kind) {
    case AtomKind::Quadratic:
        return (checked_mul(checked_mul(xx, xx), static_cast<i128>(atom.q2)) +
                checked_mul(xx, static_cast<i128>(atom.q1))) / 2;
    case AtomKind::Cube:
        return checked_mul(checked_mul(xx, xx), xx);
    case AtomKind::FourthPower: {
        i128 s = checked_mul(xx, xx);
        return checked_mul(s, s);
    }
    case AtomKind::FlooredLinearQuadratic:
        return checked_mul(xx, xx) +
               floor_div(checked_mul(xx, static_cast<i128>(atom.p)),
                         static_cast<i128>(atom.q));
    }
    throw Error("unreachable atom kind");
}

namespace {

i64 domain_start(Domain d) { return d == Domain::PositiveIntegers ? 1 : 0; }

// For quadratics and FLQ the value is eventually monotone in each direction;
// `guard` is an x beyond the vertex after which "value > hi" means stop.
template <typename F>
void walk(i64 x0, i64 step, i64 guard, i64 hi, F&& visit) {
    for (i64 x = x0;; x += step) {
        i128 v = visit(x);
        bool past = step > 0 ? x > guard : x < guard;
        if (past && v > hi) break;
    }
}

} // namespace

i64 atom_min(const AtomSpec& atom) {
    validate_atom(atom);
    switch (atom.kind) {
    case AtomKind::Cube:
        return atom.domain == Domain::PositiveIntegers ? 1 : 0;
    case AtomKind::FourthPower:
        return atom.domain == Domain::PositiveIntegers ? 1 : 0;
    case AtomKind::Quadratic:
    case AtomKind::FlooredLinearQuadratic: {
        // Vertex of the continuous relaxation; scan a few cells around it.
        double vert = atom.kind == AtomKind::Quadratic
                          ? -static_cast<double>(atom.q1) / (2.0 * atom.q2)
                          : -static_cast<double>(atom.p) / (2.0 * atom.q);
        i64 c = static_cast<i64>(vert);
        i64 lo = c - 3, hi = c + 3;
        if (atom.domain != Domain::AllIntegers) {
            i64 s = domain_start(atom.domain);
            lo = std::max(lo, s);
            hi = std::max(hi, s);
        }
        i128 best = atom_eval(atom, lo);
        for (i64 x = lo + 1; x <= hi; ++x) best = std::min(best, atom_eval(atom, x));
        return to_i64(best);
    }
    }
    throw Error("unreachable atom kind");
}

std::vector<AtomValue> atom_enumerate(const AtomSpec& atom, i64 lo, i64 hi, int cap) {
    validate_atom(atom);
    if (lo > hi) throw Error("atom_enumerate: lo > hi");

    // (|x|, sign, x) pairs collected per value keep witness order canonical.
    std::map<i64, std::vector<i64>> found;
    auto take = [&](i64 x) -> i128 {
        i128 v = atom_eval(atom, x);
        if (v >= lo && v <= hi) found[to_i64(v)].push_back(x);
        return v;
    };

    bool neg_side = atom.domain == Domain::AllIntegers;
    switch (atom.kind) {
    case AtomKind::Quadratic: {
        i64 guard_up = ceil_div(-atom.q1, 2 * atom.q2) + 1;
        i64 start = domain_start(atom.domain);
        walk(start, 1, std::max(guard_up, start), hi, take);
        if (neg_side) {
            i64 guard_dn = floor_div(-atom.q1, 2 * atom.q2) - 1;
            walk(-1, -1, std::min(guard_dn, i64{-1}), hi, take);
        }
        break;
    }
    case AtomKind::Cube:
        walk(domain_start(atom.domain), 1, domain_start(atom.domain), hi, take);
        break;
    case AtomKind::FourthPower:
        walk(domain_start(atom.domain), 1, domain_start(atom.domain), hi, take);
        if (neg_side) walk(-1, -1, -1, hi, take);
        break;
    case AtomKind::FlooredLinearQuadratic: {
        i64 slope = ceil_div(atom.p, atom.q);
        i64 start = domain_start(atom.domain);
        walk(start, 1, std::max(slope + 1, start), hi, take);
        if (neg_side) walk(-1, -1, std::min(-slope - 1, i64{-1}), hi, take);
        break;
    }
    }

    std::vector<AtomValue> out;
    out.reserve(found.size());
    for (auto& [v, xs] : found) {
        std::sort(xs.begin(), xs.end(), [](i64 a, i64 b) {
            i64 aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
            if (aa != ab) return aa < ab;
            return a > b; // positive before negative on equal magnitude
        });
        if (cap > 0 && static_cast<int>(xs.size()) > cap) xs.resize(cap);
        out.push_back({v, std::move(xs)});
    }
    return out;
}

std::vector<i64> atom_values(const AtomSpec& atom, i64 lo, i64 hi) {
    auto full = atom_enumerate(atom, lo, hi, 1);
    std::vector<i64> out;
    out.reserve(full.size());
    for (auto& av : full) out.push_back(av.value);
    return out;
}

i128 polygonal_value(i64 m, i64 x) {
    if (m < 3) throw Error("polygonal_value: order must be at least 3");
    i128 xx = static_cast<i128>(x);
    i128 num = checked_mul(checked_mul(xx, xx), static_cast<i128>(m - 2)) -
               checked_mul(xx, static_cast<i128>(m - 4));
    return num / 2;
}

bool triangular_floor_identity(i64 k) {
    i128 t = polygonal_value(3, k);
    i128 s = checked_mul(static_cast<i128>(2 * k + 1), static_cast<i128>(2 * k + 1));
    return t == floor_div(s, static_cast<i128>(8));
}

bool octagonal_shift_identity(i64 x, i64 m) {
    if (m < 1) throw Error("octagonal_shift_identity: m must be positive");
    i128 p8x = polygonal_value(8, x);
    i128 p8shift = polygonal_value(8, 1 - 2 * x);
    bool first = floor_div(p8x, static_cast<i128>(2 * m)) ==
                 floor_div(p8shift, static_cast<i128>(8 * m));
    i128 lin = static_cast<i128>(3 * x - 1);
    bool second = floor_div(p8x, static_cast<i128>(m)) ==
                  floor_div(checked_mul(lin, lin), static_cast<i128>(3 * m));
    return first && second;
}

std::optional<Witness> is_generalized_polygonal(i64 m, i64 n) {
    if (m < 3) throw Error("is_generalized_polygonal: order must be at least 3");
    if (n < 0) return std::nullopt;
    // (m-2)x^2 - (m-4)x - 2n = 0, discriminant (m-4)^2 + 8(m-2)n.
    i128 D = checked_mul(static_cast<i128>(m - 4), static_cast<i128>(m - 4)) +
             checked_mul(static_cast<i128>(8 * (m - 2)), static_cast<i128>(n));
    i64 d64 = to_i64(D);
    i64 s = isqrt_i64(d64);
    if (static_cast<i128>(s) * s != D) return std::nullopt;
    std::vector<i64> cands;
    for (i64 sign : {i64{1}, i64{-1}}) {
        i64 num = (m - 4) + sign * s;
        i64 den = 2 * (m - 2);
        if (num % den == 0) {
            i64 x = num / den;
            if (polygonal_value(m, x) == n) cands.push_back(x);
        }
    }
    if (cands.empty()) return std::nullopt;
    std::sort(cands.begin(), cands.end(), [](i64 a, i64 b) {
        i64 aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
        if (aa != ab) return aa < ab;
        return a > b;
    });
    return Witness{{"x", cands.front()}};
}

} // namespace fsum
