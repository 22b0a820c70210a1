#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schurlpp/growth.hpp"
#include "schurlpp/lpp.hpp"
#include "schurlpp/partition.hpp"
#include "schurlpp/path.hpp"
#include "schurlpp/rational.hpp"
#include "schurlpp/schur.hpp"

namespace schurlpp {

struct SupportRow {
    std::vector<Partition> seq;
    Rat lhs = 0; // mass accumulated from enumerated weight arrays
    Rat rhs = 0; // measure weight of the sequence
};

/// Outcome of an exact comparison. The enumeration truncates each weight at
/// `trunc`, so both sides are completed with an implicit overflow bin; tv is
/// the total variation distance of the completed distributions and must stay
/// within the truncated-mass bound for the comparison to pass.
struct ExactReport {
    std::string side; // "full" or "half"
    DownRightPath path;
    int trunc = 0;
    long long assignments = 0;
    Rat lhs_total = 0;
    Rat rhs_total = 0;
    Rat tv = 0;
    Rat bound = 0;
    bool greene_checked = false;
    bool pass = false;
    std::vector<SupportRow> support;
};

/// Enumerates every weight array on the path shape with entries <= trunc,
/// pushes each through the growth engine (cross-checking all observables
/// against brute_g first) and compares the resulting sequence masses with the
/// exact measure.
ExactReport exact_compare_full(const DownRightPath& gamma, const FsParams& p, int trunc,
                               long long budget = 50'000'000);

/// Same for the symmetric environment: free cells are the diagonal and the
/// below-diagonal cells of the path shape; the array is mirrored before
/// growing.
ExactReport exact_compare_half(const DownRightPath& gamma, const HsParams& p, int trunc,
                               long long budget = 50'000'000);

struct McRow {
    std::vector<Partition> seq;
    long long count = 0;
    Rat rhs = 0;
};

struct McReport {
    std::string side;
    DownRightPath path;
    long long samples = 0;
    int cap = 0;
    uint64_t seed = 0;
    int workers = 1;
    long long support_size = 0;    // sequences with parts <= cap
    long long overflow_count = 0;  // samples that exceeded the cap
    double tv = 0;
    double tolerance = 0; // 3 * sqrt(support_size / samples)
    bool pass = false;
    std::vector<McRow> support;
};

/// Samples `samples` independent environments, bins the observable sequence
/// of each (overflow bin for any part beyond cap) and measures total
/// variation against the exact law. Replicas use counter-based sub-streams,
/// so the result is identical for any worker count.
McReport mc_compare_full(const DownRightPath& gamma, const FsParams& p, long long samples,
                         uint64_t seed, int cap, int workers = 0);
McReport mc_compare_half(const DownRightPath& gamma, const HsParams& p, long long samples,
                         uint64_t seed, int cap, int workers = 0);

/// Worker count actually used: `requested` if positive, else the hardware
/// count; the LPP_THREADS environment variable caps either.
int effective_workers(int requested = 0);

/// A pluggable local growth rule with forward_rule's signature.
using LocalRule =
    std::function<Partition(const Partition&, const Partition&, const Partition&, int)>;

/// Grows random matrices with the supplied rule and cross-checks the corner
/// partition's prefix sums against brute_g and brute_h. Matrix sizes sweep
/// upward, so the first reported counterexample is near-minimal. Used by the
/// fuzz suite with forward_rule and by mutation tests with broken rules.
std::optional<std::string> check_greene_consistency(uint64_t seed, long long trials,
                                                    const LocalRule& rule);

struct FuzzResult {
    std::string name;
    long long trials = 0;
    bool pass = true;
    std::string counterexample; // empty when pass
};

/// Runs every registered cross-module property, splitting `budget` trials
/// between them. Zero budget runs nothing and reports nothing.
std::vector<FuzzResult> run_fuzz(uint64_t seed, long long budget);
bool all_pass(const std::vector<FuzzResult>& results);

} // namespace schurlpp
