#pragma once
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>
#include "floorsums/atoms.hpp"
#include "floorsums/checked.hpp"
#include "floorsums/errors.hpp"

namespace fsum {

enum class ClaimKind { Coverage, ExceptionalSet, CountFormula, Identity, Search };
enum class ClaimCategory { Theorem, Lemma, Remark, Conjecture };

// What the statement predicts about the findings list.
enum class Expectation { NoGaps, GapsExactly, SetEquals, FormulaMatches, WitnessExists };

// One executable bounded check. The window runner returns "findings" inside
// [lo, hi]: uncovered n for coverage claims, failing instance codes for box
// claims, mismatch positions for formula claims. Runners are window-additive:
// findings(a, c) == findings(a, b) ++ findings(b+1, c), which is what makes
// checkpoint resume exact.
struct ClaimSpec {
    std::string id;
    ClaimKind kind = ClaimKind::Coverage;
    ClaimCategory category = ClaimCategory::Theorem;
    std::string statement;     // mathematical content, one line
    std::string finding_label; // what one finding integer means
    Expectation expected = Expectation::NoGaps;
    std::vector<i64> expected_values; // sorted; empty for NoGaps/FormulaMatches
    i64 lo = 0;
    i64 default_n = 10000;   // inclusive domain end (or m-range end for searches)
    i64 default_bound = 0;   // witness-search budget, Search claims only
    // Maps a finding to its scan-domain position, when that is well defined
    // (identity for plain gap lists, c = code mod 100 for the divisor tables).
    // Null means findings are opaque codes and cannot be re-sliced by range.
    std::function<i64(i64)> finding_pos;
    std::function<std::vector<i64>(i64 lo, i64 hi, int jobs, i64 bound)> window;
    // Optional deterministic witness sample, recomputed at report time.
    std::function<std::vector<std::pair<i64, Witness>>(i64 lo, i64 hi, i64 bound)> sample;
};

enum class Verdict { Confirmed, Refuted, EvidenceOnly };

struct ClaimReport {
    std::string id;
    ClaimCategory category = ClaimCategory::Theorem;
    ClaimKind kind = ClaimKind::Coverage;
    i64 lo = 0, hi = 0;
    i64 bound = 0; // Search claims only
    bool ok = false;
    Verdict verdict = Verdict::Refuted;
    std::vector<i64> findings;
    std::vector<i64> expected_values;
    Expectation expected = Expectation::NoGaps;
    std::string finding_label;
    std::string counterexample; // empty unless Refuted
    std::vector<std::pair<i64, Witness>> witnesses;
    double elapsed_seconds = 0.0;
    i64 checkpoint_cursor = 0;
};

struct RunOptions {
    std::optional<i64> n;     // domain override (bound override for Search claims)
    int jobs = 1;
    std::string checkpoint;   // path; empty disables checkpointing
    std::function<void(const std::string&)> progress; // optional, line per chunk
};

const std::vector<ClaimSpec>& catalog();
const ClaimSpec& lookup_claim(const std::string& id); // UnknownClaim if absent

// Windowed-scan checkpoint store, shared by run_claim and ad-hoc CLI scans.
// One JSON document per file: {claim, param_hash, last_n, gaps}. A missing
// file means "no checkpoint yet"; anything unparsable, a key mismatch or a
// parameter-hash mismatch raises CheckpointCorrupt.
struct ScanCheckpoint {
    i64 last_n = 0;
    std::vector<i64> gaps;
};
std::string fingerprint(const std::string& blob); // stable content hash
std::optional<ScanCheckpoint> checkpoint_load(const std::string& path,
                                              const std::string& key,
                                              const std::string& param_hash);
void checkpoint_save(const std::string& path, const std::string& key,
                     const std::string& param_hash, i64 last_n,
                     const std::vector<i64>& gaps);

ClaimReport run_claim(const std::string& id, const RunOptions& opts = {});

std::string verdict_name(Verdict v);
std::string category_name(ClaimCategory c);
std::string kind_name(ClaimKind k);
std::string expectation_name(Expectation e);

// 4^{k+2} q - (2/3)(4^k + 2); k >= 0, q >= 1. Always an integer.
i64 excluded_set_member(i64 k, i64 q);
// Sorted members <= n.
std::vector<i64> excluded_set_upto(i64 n);
// Representability by p8(x)+p8(y)+2 p8(z) matches the complement of the
// excluded set on [0, N].
bool octagonal_excluded_check(i64 N);

// Positive x, y, z with x^4 - y^3 + z^2 = m, y then x ascending, z derived;
// nullopt once x and y pass `bound` without a hit.
std::optional<std::array<i64, 3>> search_x4_minus_y3_plus_z2(i64 m, i64 bound = 1500);

enum class QuarticVariant { FourthPowers, Cubes }; // w^2+x^3+y^4+2z^4, w^2+2x^2+y^3+2z^3
std::optional<Witness> quartic_mixed_check(i64 n, QuarticVariant variant);

} // namespace fsum
