#pragma once

#include <string>
#include <vector>

#include "schurlpp/growth.hpp"
#include "schurlpp/lpp.hpp"
#include "schurlpp/matrix.hpp"
#include "schurlpp/partition.hpp"
#include "schurlpp/path.hpp"
#include "schurlpp/rational.hpp"
#include "schurlpp/verify.hpp"

namespace schurlpp {

// JSON wire formats (every parser throws InputError on malformed text):
//   partition    [5, 3, 1]
//   sequence     [[], [1], []]
//   path         {"start": [0, 2], "word": "RRDD"}
//   matrix       {"cols": 2, "rows": 2, "data": [...]}   row-major, bottom row first
//   filling      {"shape": [2, 2], "values": [...]}      row-major over the shape
//   chains       [[[col, row], ...], ...]
//   full params  {"x": ["2/5", ...], "y": ["1/2", ...]}
//   half params  {"x": ["1/2", ...], "c": "1/4"}
// Rationals travel as strings ("3/10", "2"), never as floats.

Partition parse_partition(const std::string& text);
std::string dump_partition(const Partition& p);

std::vector<Partition> parse_sequence(const std::string& text);
std::string dump_sequence(const std::vector<Partition>& seq);

DownRightPath parse_path(const std::string& text);
std::string dump_path(const DownRightPath& gamma);

WeightMatrix parse_matrix(const std::string& text);
std::string dump_matrix(const WeightMatrix& w);

Filling parse_filling(const std::string& text);
std::string dump_filling(const Filling& f);

std::vector<std::vector<Cell>> parse_chains(const std::string& text);
std::string dump_chains(const std::vector<std::vector<Cell>>& chains);

FsParams parse_fs_params(const std::string& text);
std::string dump_fs_params(const FsParams& p);
HsParams parse_hs_params(const std::string& text);
std::string dump_hs_params(const HsParams& p);

/// True when the text is a parameter object carrying a "c" member, i.e.
/// half-space parameters.
bool params_have_c(const std::string& text);

std::string dump_observation(const LppObservation& obs);
std::string dump_growth_table(const GrowthTable& t);
std::string dump_weight(const SequenceWeight& w);
std::string dump_exact_report(const ExactReport& r);
std::string dump_mc_report(const McReport& r);
std::string dump_fuzz_results(const std::vector<FuzzResult>& results);

/// CLI argument convention: text starting with '{', '[' or '"' is an inline
/// JSON literal, "-" reads stdin, anything else is a file name.
std::string load_json_argument(const std::string& arg);

} // namespace schurlpp
