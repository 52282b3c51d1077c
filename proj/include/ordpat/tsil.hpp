#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ordpat/relcore.hpp"

namespace ordpat {

/// Number of weak orderings of an n-set (Fubini numbers).
long long fubini(int n);

struct TsilParams {
    int g = 0;
    double delta = 0.0;      // e^-1 r^-(r+2) |tau|^-1 |B|^-r
    double delta_max = 0.0;  // solves e a(r) r (r (max_degree(B) - 1) + 1) delta = 1
    std::vector<double> p;   // p[j-1] = min(1, n^(1 - j + 1/g)) for arity j
    uint64_t n = 0;          // resolved block size; 0 when only symbolic
    bool n_exact = true;     // false when the formula value exceeded the cap
    std::string n_formula;   // |B|^(3 g^2 r), instantiated
};

/// Parameters of the randomized construction. n defaults to the formula
/// value |B|^(3 g^2 r); values beyond the practicality cap are reported
/// symbolically and must be overridden before generating.
TsilParams tsil_parameters(const RelStructure& b, int g,
                           std::optional<uint64_t> n_override = std::nullopt);

struct SilInstance {
    RelStructure source;
    RelStructure blown;
    std::vector<int> projection;  // blown element -> source element
    TsilParams params;
    uint64_t seed = 0;
    long long tuples_sampled = 0;  // before girth-raising removals

    void validate() const;  // projection homomorphism, fiber sizes, girth
};

/// Blow up to B x [n], keep each lifted tuple above a base tuple of arity k
/// independently with probability p_k, then raise the girth to g.
/// Deterministic per seed.
SilInstance generate(const RelStructure& b, const TsilParams& params, uint64_t seed);

struct SpanningCounterexample {
    int symbol = 0;
    Tuple base_tuple;
    std::vector<std::vector<int>> sets;  // convex S_i, |S_i| > delta*n, spanning no lifted tuple
};

struct SpanningResult {
    bool ok = true;
    std::optional<SpanningCounterexample> counterexample;
    long long families_checked = 0;
};

/// For every base tuple and every family of order-convex sets
/// S_i inside the coordinate fibers with |S_i| > delta * n, some lifted
/// tuple must meet every S_i. Throws when the family space exceeds budget.
SpanningResult verify_spanning(const SilInstance& inst, const WeakOrderWitness& order,
                               double delta, long long budget = 10'000'000);

/// Interval extraction: ranks spans `blocks` consecutive blocks of
/// `block_size` elements; when enough cross-block selections realize the
/// target, returns per-block sets of size >= ceil(gamma * block_size) whose
/// every selection realizes it. Follows the inductive construction
/// (last-block trimming / shared equivalence class), falling back to an
/// exhaustive profile search before answering nullopt.
std::optional<std::vector<std::vector<int>>> extract_intervals(const std::vector<int>& ranks,
                                                               int blocks, int block_size,
                                                               const RankPattern& target,
                                                               double gamma);

struct TransferResult {
    std::optional<WeakOrderWitness> witness;  // on the source; nullopt = cap exceeded
    int resamples = 0;
};

/// Pick a uniform representative in every fiber, inherit its rank, and
/// resample exactly the variables of bad tuples until none remain
/// (Moser-Tardos style), up to 1000 * |B| resamples. The returned order is
/// re-validated against t.
TransferResult transfer(const SilInstance& inst, const TemporalStructure& t,
                        const WeakOrderWitness& witness, uint64_t seed);

struct TrialRow {
    uint64_t seed = 0;
    std::optional<int> girth;  // nullopt = acyclic
    long long tuples_sampled = 0;
    long long tuples_final = 0;
    bool base_solvable = false;
    bool blown_solvable = false;
    bool composition_ok = true;       // base witness composed with projection validates
    bool reverse_ok = true;           // blown solvable implies base solvable
    std::string transfer_outcome;     // "ok", "fail" or "n/a"
};

struct TrialReport {
    std::vector<TrialRow> rows;
    int composition_failures = 0;
    int reverse_failures = 0;
    int transfer_failures = 0;
};

/// Per seed: generate, solve source and blow-up exactly, check both
/// directions, and run the transfer when both sides are solvable.
TrialReport equivalence_trial(const RelStructure& b, const TemporalStructure& t,
                              const TsilParams& params, const std::vector<uint64_t>& seeds);

}  // namespace ordpat
