#pragma once

#include <functional>
#include <vector>

#include "schurlpp/lpp.hpp"
#include "schurlpp/partition.hpp"
#include "schurlpp/path.hpp"
#include "schurlpp/rational.hpp"

namespace schurlpp {

/// One transition factor of a sequence weight, kept for auditability: which
/// step produced it, which variable was used, and its value.
struct QFactor {
    int step = 0;       // 1-based position in the word
    char letter = ' ';  // 'R' or 'D'
    int var_index = 0;  // t in x_t (R steps) or y_t / x_t (D steps)
    long long exponent = 0;
    Rat value = 0;
};

struct SequenceWeight {
    std::vector<Partition> sequence;
    Rat normalizer = 0;  // the prefactor Z of the measure
    Rat probability = 0; // full weight: Z * (boundary factors) * (Q factors)
    std::vector<QFactor> factors;
};

/// Exact probability that the full-space environment's growth observables
/// along gamma equal the given partition sequence. gamma must run from
/// (0, N) to (M, 0); the sequence needs one partition per vertex with the
/// endpoints empty, and the weight vanishes unless consecutive entries
/// interlace according to the word.
///
/// Per step i the transition factor is a one-variable skew Schur factor:
///   R step entering column t:  s_{lambda^i / lambda^(i-1)}(x_t)
///   D step leaving row t:      s_{lambda^(i-1) / lambda^i}(y_t)
/// and Z is the product of (1 - x_a y_b) over the cells of the path shape.
SequenceWeight fs_weight(const DownRightPath& gamma, const FsParams& p,
                         const std::vector<Partition>& seq);
Rat fs_probability(const DownRightPath& gamma, const FsParams& p,
                   const std::vector<Partition>& seq);

/// Half-space analogue for gamma from (N, N) to (M+N, 0) with y == x:
/// the weight gains tau(lambda^0) = c^(alternating sum) at the diagonal
/// start, D factors use x, and
///   Z = prod_{i=1..N} (1 - c x_i) * prod_{cells col > row} (1 - x_col x_row).
SequenceWeight hs_weight(const DownRightPath& gamma, const HsParams& p,
                         const std::vector<Partition>& seq);
Rat hs_probability(const DownRightPath& gamma, const HsParams& p,
                   const std::vector<Partition>& seq);

/// All partition sequences along gamma with every part <= cap that satisfy
/// the structural constraints (length at vertex (u, v) at most min(u, v),
/// interlacing by letter). Emitted in lexicographic order of part lists.
void enumerate_sequences(const DownRightPath& gamma, int cap,
                         const std::function<void(const std::vector<Partition>&)>& emit);
std::vector<std::vector<Partition>> enumerate_sequences(const DownRightPath& gamma,
                                                        int cap);

/// 1 - sum of measure weights over all sequences with parts <= cap.
Rat normalization_defect(const DownRightPath& gamma, const FsParams& p, int cap);
Rat normalization_defect(const DownRightPath& gamma, const HsParams& p, int cap);

} // namespace schurlpp
