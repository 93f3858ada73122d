#include "floorsums/coverage.hpp"
#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>
#include <thread>

namespace fsum {

TermSpec simple_term(Rounding r, const AtomSpec& atom, i64 den, i64 coeff,
                     std::string var) {
    TermSpec t;
    t.rounding = r;
    t.numerator.push_back({coeff, atom, std::move(var)});
    t.denominator = den;
    return t;
}

namespace {

void validate_term(const TermSpec& t) {
    if (t.numerator.empty()) throw Error("term has empty numerator");
    if (t.denominator < 1) throw Error("term denominator must be positive");
    std::set<std::string> vars;
    for (auto& p : t.numerator) {
        if (p.coeff < 1) throw Error("term coefficients must be positive");
        validate_atom(p.atom);
        if (!vars.insert(p.var).second)
            throw Error("duplicate variable id inside a term");
    }
}

bool var_constraints_ok(const std::vector<CongruenceConstraint>& cs,
                        const std::string& var, i64 v) {
    for (auto& c : cs) {
        if (c.var != var) continue;
        i64 r = ((v % c.modulus) + c.modulus) % c.modulus;
        bool hit = false;
        for (i64 a : c.residues)
            if (((a % c.modulus) + c.modulus) % c.modulus == r) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

// coeff*atom(x) contributions up to cap_hi for one numerator slot, honoring
// the term's constraints on that variable. Sorted by contribution value.
std::vector<std::pair<i64, std::vector<i64>>> part_values(
    const NumeratorPart& part, const std::vector<CongruenceConstraint>& cs,
    i64 cap_hi) {
    i64 qhi = floor_div(cap_hi, part.coeff);
    i64 qlo = atom_min(part.atom);
    std::vector<std::pair<i64, std::vector<i64>>> out;
    if (qlo > qhi) return out;
    for (auto& av : atom_enumerate(part.atom, qlo, qhi, 0)) {
        std::vector<i64> xs;
        for (i64 x : av.witnesses)
            if (var_constraints_ok(cs, part.var, x)) xs.push_back(x);
        if (!xs.empty()) out.push_back({checked_mul(part.coeff, av.value), std::move(xs)});
    }
    return out;
}

// Numerator-sum upper bound so that the rounded value can still be <= hi.
i64 numerator_cap(const TermSpec& t, i64 hi) {
    i64 den = t.denominator;
    i64 cap = t.rounding == Rounding::Floor
                  ? checked_sub(checked_mul(den, checked_add(hi, 1)), 1)
                  : checked_mul(den, hi);
    return checked_sub(cap, t.numerator_offset);
}

std::optional<i64> rounded_value(const TermSpec& t, i64 numerator_sum) {
    i64 total = checked_add(numerator_sum, t.numerator_offset);
    switch (t.rounding) {
    case Rounding::Floor: return floor_div(total, t.denominator);
    case Rounding::Ceil: return ceil_div(total, t.denominator);
    case Rounding::Exact:
        if (total % t.denominator != 0) return std::nullopt;
        return total / t.denominator;
    }
    return std::nullopt;
}

struct PartList {
    std::vector<std::pair<i64, std::vector<i64>>> vals;
    i64 min;
};

std::vector<PartList> gather_parts(const TermSpec& t, i64 hi, i64 budget,
                                   bool witness_product) {
    i64 cap = numerator_cap(t, hi);
    // conservative minima first, then per-part caps from the others' minima
    std::vector<i64> mins(t.numerator.size());
    for (size_t i = 0; i < t.numerator.size(); ++i)
        mins[i] = checked_mul(t.numerator[i].coeff, atom_min(t.numerator[i].atom));
    i64 minsum = 0;
    for (i64 m : mins) minsum = checked_add(minsum, m);

    std::vector<PartList> parts;
    i64 product = 1;
    for (size_t i = 0; i < t.numerator.size(); ++i) {
        i64 cap_i = checked_sub(cap, checked_sub(minsum, mins[i]));
        PartList pl;
        pl.vals = part_values(t.numerator[i], t.constraints, cap_i);
        if (pl.vals.empty()) return {}; // constrained domain empty below cap
        pl.min = pl.vals.front().first;
        if (witness_product) {
            product = checked_mul(product, static_cast<i64>(pl.vals.size()));
            if (product > budget)
                throw GroupTooLarge("grouped enumeration would visit about " +
                                    std::to_string(product) + " nodes");
        }
        parts.push_back(std::move(pl));
    }
    return parts;
}

void direct_group_enumerate(const TermSpec& t, const std::vector<PartList>& parts,
                            i64 lo, i64 hi, int witness_cap,
                            std::map<i64, std::vector<Witness>>& found) {
    size_t k = parts.size();
    std::vector<size_t> idx(k, 0);
    std::vector<i64> partial(k + 1, 0);
    // suffix minima let deep prefixes prune early
    std::vector<i64> suffix_min(k + 1, 0);
    for (size_t i = k; i-- > 0;)
        suffix_min[i] = checked_add(suffix_min[i + 1], parts[i].min);
    i64 cap = numerator_cap(t, hi);

    // iterative nested loop
    size_t level = 0;
    while (true) {
        if (level == k) {
            if (auto v = rounded_value(t, partial[k]); v && *v >= lo && *v <= hi) {
                auto& ws = found[*v];
                if (witness_cap <= 0 || static_cast<int>(ws.size()) < witness_cap) {
                    Witness w;
                    for (size_t i = 0; i < k; ++i)
                        w.push_back({t.numerator[i].var,
                                     parts[i].vals[idx[i] - 1].second.front()});
                    ws.push_back(std::move(w));
                }
            }
            --level;
            continue;
        }
        bool descend = false;
        while (idx[level] < parts[level].vals.size()) {
            i64 v = parts[level].vals[idx[level]].first;
            ++idx[level];
            if (checked_add(partial[level], checked_add(v, suffix_min[level + 1])) > cap)
                { idx[level] = parts[level].vals.size(); break; }
            partial[level + 1] = checked_add(partial[level], v);
            ++level;
            descend = true;
            break;
        }
        if (descend) continue;
        if (level == 0) break;
        idx[level] = 0;
        --level;
    }
}

// value-only sumset of a multi-variable numerator via bit convolution
std::vector<i64> group_value_list(const TermSpec& t, const std::vector<PartList>& parts,
                                  i64 lo, i64 hi, i64 budget) {
    i64 cap = numerator_cap(t, hi);
    i64 base = 0;
    for (auto& p : parts) base = checked_add(base, p.min);
    if (cap < base) return {};
    i64 width = checked_add(checked_sub(cap, base), 1);
    if (width > (i64{1} << 40)) throw GroupTooLarge("numerator index space too wide");
    size_t words = static_cast<size_t>((width + 63) / 64);
    i64 shifts = 0;
    for (auto& p : parts) shifts = checked_add(shifts, static_cast<i64>(p.vals.size()));
    if (shifts * static_cast<i64>(words) > budget)
        throw GroupTooLarge("grouped sumset would take about " +
                            std::to_string(shifts * static_cast<i64>(words)) +
                            " word operations");

    BitArray acc(static_cast<size_t>(width));
    for (auto& [v, xs] : parts[0].vals) {
        i64 ix = v - parts[0].min;
        if (ix < width) acc.set(static_cast<size_t>(ix));
    }
    for (size_t i = 1; i < parts.size(); ++i) {
        BitArray next(static_cast<size_t>(width));
        for (auto& [v, xs] : parts[i].vals)
            next.or_shifted(acc, static_cast<size_t>(v - parts[i].min));
        acc = std::move(next);
    }
    std::vector<i64> out;
    for (i64 ix = 0; ix < width; ++ix) {
        if (!acc.get(static_cast<size_t>(ix))) continue;
        if (auto v = rounded_value(t, ix + base); v && *v >= lo && *v <= hi)
            if (out.empty() || out.back() != *v) out.push_back(*v);
    }
    // rounding is monotone in the numerator, so out is already sorted; Exact
    // rounding can skip values but never reorders
    return out;
}

} // namespace

std::vector<TermValue> term_values(const TermSpec& t, i64 lo, i64 hi,
                                   int witness_cap, i64 budget) {
    validate_term(t);
    if (lo > hi) throw Error("term_values: lo > hi");
    auto parts = gather_parts(t, hi, budget, true);
    if (parts.empty()) return {};
    std::map<i64, std::vector<Witness>> found;
    if (parts.size() == 1) {
        for (auto& [v, xs] : parts[0].vals) {
            if (auto val = rounded_value(t, v); val && *val >= lo && *val <= hi) {
                auto& ws = found[*val];
                for (i64 x : xs) {
                    if (witness_cap > 0 && static_cast<int>(ws.size()) >= witness_cap) break;
                    ws.push_back(Witness{{t.numerator[0].var, x}});
                }
            }
        }
    } else {
        direct_group_enumerate(t, parts, lo, hi, witness_cap, found);
    }
    std::vector<TermValue> out;
    out.reserve(found.size());
    for (auto& [v, ws] : found) out.push_back({v, std::move(ws)});
    return out;
}

std::vector<i64> term_value_list(const TermSpec& t, i64 lo, i64 hi, i64 budget) {
    validate_term(t);
    if (lo > hi) throw Error("term_value_list: lo > hi");
    if (t.numerator.size() == 1) {
        auto parts = gather_parts(t, hi, budget, false);
        if (parts.empty()) return {};
        std::vector<i64> out;
        for (auto& [v, xs] : parts[0].vals)
            if (auto val = rounded_value(t, v); val && *val >= lo && *val <= hi)
                if (out.empty() || out.back() != *val) out.push_back(*val);
        return out;
    }
    auto parts = gather_parts(t, hi, budget, false);
    if (parts.empty()) return {};
    return group_value_list(t, parts, lo, hi, budget);
}

i64 term_min_bound(const TermSpec& t) {
    validate_term(t);
    i64 s = t.numerator_offset;
    for (auto& p : t.numerator)
        s = checked_add(s, checked_mul(p.coeff, atom_min(p.atom)));
    return t.rounding == Rounding::Ceil ? ceil_div(s, t.denominator)
                                        : floor_div(s, t.denominator);
}

namespace {

int value_parity(i64 v) { return static_cast<int>(((v % 2) + 2) % 2); }

// dst |= shift(src, v - m) for the values of V with the requested parity
// (-1 means all)
void accumulate(BitArray& dst, const BitArray& src, const std::vector<i64>& V,
                i64 m, int parity, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
        i64 v = V[i];
        if (parity >= 0 && value_parity(v) != parity) continue;
        size_t sh = static_cast<size_t>(v - m);
        if (sh >= dst.size()) break; // V sorted, nothing further fits
        dst.or_shifted(src, sh);
    }
}

template <typename Fn>
void run_parallel(size_t n, int jobs, Fn&& fn) {
    if (jobs <= 1 || n < 2) {
        fn(0, 0, n);
        return;
    }
    size_t J = std::min<size_t>(jobs, n);
    std::vector<std::thread> pool;
    size_t chunk = (n + J - 1) / J;
    for (size_t j = 0; j < J; ++j) {
        size_t b = j * chunk, e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, j, b, e] { fn(static_cast<int>(j), b, e); });
    }
    for (auto& th : pool) th.join();
}

bool cross_ok(CrossConstraint cross, const std::vector<i64>& vals) {
    switch (cross) {
    case CrossConstraint::None: return true;
    case CrossConstraint::AtLeastOneTermOdd:
        for (i64 v : vals) if (value_parity(v) == 1) return true;
        return false;
    case CrossConstraint::AtLeastOneTermEven:
        for (i64 v : vals) if (value_parity(v) == 0) return true;
        return false;
    case CrossConstraint::SortedMiddleTermOdd: {
        if (vals.size() != 3) return false;
        i64 mid = vals[0] + vals[1] + vals[2] -
                  std::max({vals[0], vals[1], vals[2]}) -
                  std::min({vals[0], vals[1], vals[2]});
        return value_parity(mid) == 1;
    }
    case CrossConstraint::DistinctTermValues:
        for (size_t i = 0; i < vals.size(); ++i)
            for (size_t j = i + 1; j < vals.size(); ++j)
                if (vals[i] == vals[j]) return false;
        return true;
    case CrossConstraint::DistinctAndOneEven: {
        if (!cross_ok(CrossConstraint::DistinctTermValues, vals)) return false;
        return cross_ok(CrossConstraint::AtLeastOneTermEven, vals);
    }
    }
    return false;
}

void validate_problem(const CoverageProblem& p) {
    if (p.terms.empty() || p.terms.size() > 4)
        throw Error("coverage problem needs 1 to 4 terms");
    if (p.lo < 0 || p.hi < p.lo)
        throw Error("coverage problem needs 0 <= lo <= hi");
    if (p.cross == CrossConstraint::SortedMiddleTermOdd && p.terms.size() != 3)
        throw Error("SortedMiddleTermOdd needs exactly 3 terms");
    if ((p.cross == CrossConstraint::DistinctTermValues ||
         p.cross == CrossConstraint::DistinctAndOneEven) &&
        p.terms.size() != 2)
        throw Error("Distinct constraints need exactly 2 terms");
}

CoverageResult empty_result(const CoverageProblem& p) {
    CoverageResult r;
    r.lo = p.lo;
    r.hi = p.hi;
    r.representable = BitArray(static_cast<size_t>(p.hi - p.lo + 1));
    for (i64 n = p.lo; n <= p.hi; ++n) r.gaps.push_back(n);
    return r;
}

// direct nested pass used for Sorted/Distinct crosses and witness collection
void direct_scan(const CoverageProblem& p,
                 const std::vector<std::vector<TermValue>>& lists,
                 CoverageResult& res) {
    size_t k = lists.size();
    std::vector<i64> suffix_min(k + 1, 0);
    for (size_t i = k; i-- > 0;)
        suffix_min[i] = suffix_min[i + 1] + lists[i].front().value;

    std::vector<size_t> idx(k, 0);
    std::vector<i64> partial(k + 1, 0);
    std::vector<i64> chosen(k, 0);
    size_t level = 0;
    while (true) {
        if (level == k) {
            i64 n = partial[k];
            if (n >= p.lo && n <= p.hi && cross_ok(p.cross, chosen)) {
                size_t bit = static_cast<size_t>(n - p.lo);
                if (!res.representable.get(bit)) {
                    res.representable.set(bit);
                    if (p.want_witnesses) {
                        std::vector<Witness> ws;
                        for (size_t i = 0; i < k; ++i)
                            ws.push_back(lists[i][idx[i] - 1].witnesses.front());
                        res.witnesses[n] = std::move(ws);
                    }
                }
            }
            --level;
            continue;
        }
        bool descend = false;
        while (idx[level] < lists[level].size()) {
            i64 v = lists[level][idx[level]].value;
            ++idx[level];
            if (partial[level] + v + suffix_min[level + 1] > p.hi) {
                idx[level] = lists[level].size();
                break;
            }
            partial[level + 1] = partial[level] + v;
            chosen[level] = v;
            ++level;
            descend = true;
            break;
        }
        if (descend) continue;
        if (level == 0) break;
        idx[level] = 0;
        --level;
    }
}

} // namespace

CoverageResult coverage_scan(const CoverageProblem& p) {
    validate_problem(p);
    size_t k = p.terms.size();

    // conservative minima fix each term's enumeration window
    std::vector<i64> lower(k);
    i64 lowersum = 0;
    for (size_t i = 0; i < k; ++i) {
        lower[i] = term_min_bound(p.terms[i]);
        lowersum = checked_add(lowersum, lower[i]);
    }

    bool direct = p.want_witnesses ||
                  p.cross == CrossConstraint::SortedMiddleTermOdd ||
                  p.cross == CrossConstraint::DistinctTermValues ||
                  p.cross == CrossConstraint::DistinctAndOneEven;

    if (direct) {
        std::vector<std::vector<TermValue>> lists(k);
        i64 product = 1;
        for (size_t i = 0; i < k; ++i) {
            i64 term_hi = checked_sub(p.hi, checked_sub(lowersum, lower[i]));
            if (term_hi < lower[i]) return empty_result(p);
            lists[i] = term_values(p.terms[i], lower[i], term_hi, 1, p.budget);
            if (lists[i].empty()) return empty_result(p);
            product = checked_mul(product, static_cast<i64>(lists[i].size()));
            if (product > p.budget)
                throw GroupTooLarge("direct coverage pass would visit about " +
                                    std::to_string(product) + " nodes");
        }
        CoverageResult res;
        res.lo = p.lo;
        res.hi = p.hi;
        res.representable = BitArray(static_cast<size_t>(p.hi - p.lo + 1));
        direct_scan(p, lists, res);
        res.gaps.clear();
        for (i64 n = p.lo; n <= p.hi; ++n)
            if (!res.representable.get(static_cast<size_t>(n - p.lo)))
                res.gaps.push_back(n);
        return res;
    }

    // bit-convolution path
    std::vector<std::vector<i64>> V(k);
    for (size_t i = 0; i < k; ++i) {
        i64 term_hi = checked_sub(p.hi, checked_sub(lowersum, lower[i]));
        if (term_hi < lower[i]) return empty_result(p);
        V[i] = term_value_list(p.terms[i], lower[i], term_hi, p.budget);
        if (V[i].empty()) return empty_result(p);
    }
    std::vector<i64> m(k);
    i64 msum = 0;
    for (size_t i = 0; i < k; ++i) { m[i] = V[i].front(); msum += m[i]; }
    if (p.hi < msum) return empty_result(p);

    size_t width = static_cast<size_t>(p.hi - msum + 1);
    bool parity_lanes = p.cross != CrossConstraint::None;
    int hit_parity = p.cross == CrossConstraint::AtLeastOneTermOdd ? 1 : 0;

    // laneNone: no term so far had the needed parity; laneHit: some term did
    BitArray laneNone(width), laneHit(width);
    laneNone.set(0);

    for (size_t i = 0; i < k; ++i) {
        bool last = i + 1 == k;
        int jobs = last ? p.jobs : 1;
        BitArray nextNone(width), nextHit(width);
        std::mutex merge_mu;
        if (!parity_lanes) {
            run_parallel(V[i].size(), jobs, [&](int, size_t b, size_t e) {
                BitArray local(width);
                accumulate(local, laneNone, V[i], m[i], -1, b, e);
                std::lock_guard<std::mutex> lk(merge_mu);
                nextNone.or_with(local);
            });
        } else {
            run_parallel(V[i].size(), jobs, [&](int, size_t b, size_t e) {
                BitArray localNone(width), localHit(width);
                accumulate(localNone, laneNone, V[i], m[i], 1 - hit_parity, b, e);
                accumulate(localHit, laneHit, V[i], m[i], -1, b, e);
                accumulate(localHit, laneNone, V[i], m[i], hit_parity, b, e);
                std::lock_guard<std::mutex> lk(merge_mu);
                nextNone.or_with(localNone);
                nextHit.or_with(localHit);
            });
        }
        laneNone = std::move(nextNone);
        laneHit = std::move(nextHit);
    }

    const BitArray& final_lane = parity_lanes ? laneHit : laneNone;
    CoverageResult res;
    res.lo = p.lo;
    res.hi = p.hi;
    res.representable = BitArray(static_cast<size_t>(p.hi - p.lo + 1));
    for (i64 n = std::max(p.lo, msum); n <= p.hi; ++n)
        if (final_lane.get(static_cast<size_t>(n - msum)))
            res.representable.set(static_cast<size_t>(n - p.lo));
    for (i64 n = p.lo; n <= p.hi; ++n)
        if (!res.representable.get(static_cast<size_t>(n - p.lo)))
            res.gaps.push_back(n);
    return res;
}

std::optional<i64> first_gap(const CoverageProblem& p) {
    auto res = coverage_scan(p);
    if (res.gaps.empty()) return std::nullopt;
    return res.gaps.front();
}

std::map<i64, std::vector<i64>> exceptional_divisors_scan(
    CoverageProblem base, size_t free_term, i64 c_lo, i64 c_hi, int jobs) {
    if (free_term >= base.terms.size())
        throw Error("free_term index out of range");
    if (c_lo < 1 || c_hi < c_lo)
        throw Error("bad divisor range");
    std::vector<i64> cs;
    for (i64 c = c_lo; c <= c_hi; ++c) cs.push_back(c);
    std::vector<std::vector<i64>> gaps(cs.size());
    run_parallel(cs.size(), jobs, [&](int, size_t b, size_t e) {
        for (size_t i = b; i < e; ++i) {
            CoverageProblem q = base;
            q.terms[free_term].denominator = cs[i];
            q.jobs = 1;
            gaps[i] = coverage_scan(q).gaps;
        }
    });
    std::map<i64, std::vector<i64>> out;
    for (size_t i = 0; i < cs.size(); ++i) out[cs[i]] = std::move(gaps[i]);
    return out;
}

std::vector<i64> shifted_three_squares_scan(i64 e, i64 d, i64 lo, i64 hi) {
    if (d < 2) throw Error("shifted scan needs d >= 2");
    if (lo < 0 || hi < lo) throw Error("shifted scan needs 0 <= lo <= hi");
    double t = static_cast<double>(e) / (2.0 * static_cast<double>(d));
    double R = std::sqrt(static_cast<double>(hi) + 3.0 * t * t + 1.0);
    i64 xlo = static_cast<i64>(std::floor(-t - R)) - 1;
    i64 xhi = static_cast<i64>(std::ceil(-t + R)) + 1;

    BitArray hit(static_cast<size_t>(hi - lo + 1));
    for (i64 x = xlo; x <= xhi; ++x)
        for (i64 y = xlo; y <= xhi; ++y) {
            i64 sq2 = x * x + y * y;
            for (i64 z = xlo; z <= xhi; ++z) {
                i64 n = sq2 + z * z + floor_div(e * (x + y + z), d);
                if (n >= lo && n <= hi) hit.set(static_cast<size_t>(n - lo));
            }
        }
    std::vector<i64> gaps;
    for (i64 n = lo; n <= hi; ++n)
        if (!hit.get(static_cast<size_t>(n - lo))) gaps.push_back(n);
    return gaps;
}

std::array<bool, 3> variant_triple_check(i64 a, i64 b, i64 c, i64 n) {
    if (a < 1 || b < 1 || c < 1) throw Error("variant check needs a,b,c >= 1");
    if (n < 0) return {false, false, false};
    auto run = [&](const std::vector<TermSpec>& terms) {
        CoverageProblem p;
        p.terms = terms;
        p.lo = n;
        p.hi = n;
        return coverage_scan(p).gaps.empty();
    };
    TermSpec tx = simple_term(Rounding::Floor, square(), a, 1, "x");
    TermSpec ty = simple_term(Rounding::Floor, square(), b, 1, "y");
    TermSpec tz = simple_term(Rounding::Floor, square(), c, 1, "z");
    bool v1 = run({tx, ty, tz});

    TermSpec pair;
    pair.rounding = Rounding::Floor;
    pair.denominator = checked_mul(a, b);
    pair.numerator.push_back({b, square(), "x"});
    pair.numerator.push_back({a, square(), "y"});
    bool v2 = run({pair, tz});

    TermSpec full;
    full.rounding = Rounding::Floor;
    full.denominator = checked_mul(checked_mul(a, b), c);
    full.numerator.push_back({checked_mul(b, c), square(), "x"});
    full.numerator.push_back({checked_mul(a, c), square(), "y"});
    full.numerator.push_back({checked_mul(a, b), square(), "z"});
    bool v3 = run({full});

    return {v1, v2, v3};
}

} // namespace fsum
