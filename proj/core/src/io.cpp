#include "schurlpp/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "schurlpp/errors.hpp"

namespace schurlpp {

Rat parse_rat(const std::string& text) {
    try {
        return Rat(text);
    } catch (const std::exception&) {
        throw InputError("not a rational number: '" + text + "'");
    }
}

std::string format_rat(const Rat& r) { return r.str(); }

namespace {

using nlohmann::json;

json must_parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON: " + text.substr(0, 80));
    return j;
}

int int_from(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

json partition_to(const Partition& p) { return json(p.parts()); }

Partition partition_from(const json& j) {
    if (!j.is_array()) throw InputError("partition must be a JSON array of parts");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(int_from(v, "partition part"));
    return Partition(parts);
}

json sequence_to(const std::vector<Partition>& seq) {
    json j = json::array();
    for (const Partition& p : seq) j.push_back(partition_to(p));
    return j;
}

std::vector<Partition> sequence_from(const json& j) {
    if (!j.is_array()) throw InputError("sequence must be a JSON array of partitions");
    std::vector<Partition> seq;
    for (const auto& v : j) seq.push_back(partition_from(v));
    return seq;
}

json path_to(const DownRightPath& gamma) {
    return json{{"start", {gamma.start().x, gamma.start().y}}, {"word", gamma.word()}};
}

DownRightPath path_from(const json& j) {
    if (!j.is_object() || !j.contains("start") || !j.contains("word"))
        throw InputError("path must be {\"start\": [x, y], \"word\": \"R/D...\"}");
    const json& s = j.at("start");
    if (!s.is_array() || s.size() != 2) throw InputError("path start must be [x, y]");
    if (!j.at("word").is_string()) throw InputError("path word must be a string");
    return DownRightPath({int_from(s.at(0), "start x"), int_from(s.at(1), "start y")},
                         j.at("word").get<std::string>());
}

json matrix_to(const WeightMatrix& w) {
    return json{{"cols", w.cols()}, {"rows", w.rows()}, {"data", w.data()}};
}

WeightMatrix matrix_from(const json& j) {
    if (!j.is_object() || !j.contains("cols") || !j.contains("rows") || !j.contains("data"))
        throw InputError("matrix must be {\"cols\", \"rows\", \"data\"}");
    if (!j.at("data").is_array()) throw InputError("matrix data must be an array");
    std::vector<int> data;
    for (const auto& v : j.at("data")) data.push_back(int_from(v, "matrix entry"));
    return WeightMatrix(int_from(j.at("cols"), "cols"), int_from(j.at("rows"), "rows"),
                        std::move(data));
}

json filling_to(const Filling& f) {
    return json{{"shape", partition_to(f.shape)}, {"values", f.values}};
}

Filling filling_from(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("values"))
        throw InputError("filling must be {\"shape\", \"values\"}");
    if (!j.at("values").is_array()) throw InputError("filling values must be an array");
    std::vector<int> values;
    for (const auto& v : j.at("values")) values.push_back(int_from(v, "filling value"));
    return Filling(partition_from(j.at("shape")), std::move(values));
}

json cells_to(const std::vector<Cell>& cells) {
    json j = json::array();
    for (const Cell& c : cells) j.push_back({c.col, c.row});
    return j;
}

std::vector<Cell> cells_from(const json& j) {
    if (!j.is_array()) throw InputError("chain must be an array of [col, row] pairs");
    std::vector<Cell> cells;
    for (const auto& v : j) {
        if (!v.is_array() || v.size() != 2) throw InputError("cell must be [col, row]");
        cells.push_back({int_from(v.at(0), "cell col"), int_from(v.at(1), "cell row")});
    }
    return cells;
}

Rat rat_from(const json& j, const char* what) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (!j.is_string())
        throw InputError(std::string(what) + " must be a rational string like \"3/10\"");
    return parse_rat(j.get<std::string>());
}

json rats_to(const std::vector<Rat>& v) {
    json j = json::array();
    for (const Rat& r : v) j.push_back(format_rat(r));
    return j;
}

std::vector<Rat> rats_from(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of rationals");
    std::vector<Rat> out;
    for (const auto& v : j) out.push_back(rat_from(v, what));
    return out;
}

template <typename Fn>
auto guard(const std::string& text, Fn fn) -> decltype(fn(json())) {
    json j = must_parse(text);
    try {
        return fn(j);
    } catch (const json::exception& e) {
        throw InputError(std::string("bad JSON value: ") + e.what());
    }
}

} // namespace

Partition parse_partition(const std::string& text) {
    return guard(text, [](const json& j) { return partition_from(j); });
}
std::string dump_partition(const Partition& p) { return partition_to(p).dump(); }

std::vector<Partition> parse_sequence(const std::string& text) {
    return guard(text, [](const json& j) { return sequence_from(j); });
}
std::string dump_sequence(const std::vector<Partition>& seq) { return sequence_to(seq).dump(); }

DownRightPath parse_path(const std::string& text) {
    return guard(text, [](const json& j) { return path_from(j); });
}
std::string dump_path(const DownRightPath& gamma) { return path_to(gamma).dump(); }

WeightMatrix parse_matrix(const std::string& text) {
    return guard(text, [](const json& j) { return matrix_from(j); });
}
std::string dump_matrix(const WeightMatrix& w) { return matrix_to(w).dump(); }

Filling parse_filling(const std::string& text) {
    return guard(text, [](const json& j) { return filling_from(j); });
}
std::string dump_filling(const Filling& f) { return filling_to(f).dump(); }

std::vector<std::vector<Cell>> parse_chains(const std::string& text) {
    return guard(text, [](const json& j) {
        if (!j.is_array()) throw InputError("chains must be an array of chains");
        std::vector<std::vector<Cell>> chains;
        for (const auto& v : j) chains.push_back(cells_from(v));
        return chains;
    });
}

std::string dump_chains(const std::vector<std::vector<Cell>>& chains) {
    json j = json::array();
    for (const auto& c : chains) j.push_back(cells_to(c));
    return j.dump();
}

FsParams parse_fs_params(const std::string& text) {
    return guard(text, [](const json& j) {
        if (!j.is_object() || !j.contains("x") || !j.contains("y"))
            throw InputError("full-space params must be {\"x\": [...], \"y\": [...]}");
        FsParams p;
        p.x = rats_from(j.at("x"), "x");
        p.y = rats_from(j.at("y"), "y");
        return p;
    });
}

std::string dump_fs_params(const FsParams& p) {
    return json{{"x", rats_to(p.x)}, {"y", rats_to(p.y)}}.dump();
}

HsParams parse_hs_params(const std::string& text) {
    return guard(text, [](const json& j) {
        if (!j.is_object() || !j.contains("x") || !j.contains("c"))
            throw InputError("half-space params must be {\"x\": [...], \"c\": \"p/q\"}");
        HsParams p;
        p.x = rats_from(j.at("x"), "x");
        p.c = rat_from(j.at("c"), "c");
        return p;
    });
}

std::string dump_hs_params(const HsParams& p) {
    return json{{"x", rats_to(p.x)}, {"c", format_rat(p.c)}}.dump();
}

bool params_have_c(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    return j.is_object() && j.contains("c");
}

std::string dump_observation(const LppObservation& obs) {
    json j{{"path", path_to(obs.path)}, {"lambdas", sequence_to(obs.lambdas)}};
    json g = json::array();
    for (size_t i = 0; i < obs.lambdas.size(); ++i)
        g.push_back(g_times(obs, static_cast<int>(i)));
    j["g_times"] = g;
    return j.dump();
}

std::string dump_growth_table(const GrowthTable& t) {
    json entries = json::object();
    const Partition& shape = t.shape();
    for (int j = 1; j <= shape.length(); ++j)
        for (int i = 1; i <= shape.part(j); ++i)
            entries[std::to_string(i) + "," + std::to_string(j)] = partition_to(t.entry(i, j));
    return json{{"shape", partition_to(shape)}, {"entries", entries}}.dump();
}

std::string dump_weight(const SequenceWeight& w) {
    json factors = json::array();
    for (const QFactor& f : w.factors)
        factors.push_back({{"step", f.step},
                           {"letter", std::string(1, f.letter)},
                           {"var", f.var_index},
                           {"exponent", f.exponent},
                           {"value", format_rat(f.value)}});
    return json{{"sequence", sequence_to(w.sequence)},
                {"normalizer", format_rat(w.normalizer)},
                {"probability", format_rat(w.probability)},
                {"probability_double", to_double(w.probability)},
                {"factors", factors}}
        .dump();
}

std::string dump_exact_report(const ExactReport& r) {
    json support = json::array();
    for (const SupportRow& row : r.support)
        support.push_back({{"seq", sequence_to(row.seq)},
                           {"lhs", format_rat(row.lhs)},
                           {"rhs", format_rat(row.rhs)}});
    return json{{"mode", "exact"},
                {"side", r.side},
                {"path", path_to(r.path)},
                {"trunc", r.trunc},
                {"assignments", r.assignments},
                {"lhs_total", format_rat(r.lhs_total)},
                {"rhs_total", format_rat(r.rhs_total)},
                {"tv", format_rat(r.tv)},
                {"tv_double", to_double(r.tv)},
                {"bound", format_rat(r.bound)},
                {"bound_double", to_double(r.bound)},
                {"greene_checked", r.greene_checked},
                {"pass", r.pass},
                {"support", support}}
        .dump();
}

std::string dump_mc_report(const McReport& r) {
    json support = json::array();
    for (const McRow& row : r.support)
        support.push_back({{"seq", sequence_to(row.seq)},
                           {"count", row.count},
                           {"rhs", format_rat(row.rhs)},
                           {"rhs_double", to_double(row.rhs)}});
    return json{{"mode", "mc"},
                {"side", r.side},
                {"path", path_to(r.path)},
                {"samples", r.samples},
                {"cap", r.cap},
                {"seed", r.seed},
                {"workers", r.workers},
                {"support_size", r.support_size},
                {"overflow_count", r.overflow_count},
                {"tv", r.tv},
                {"tolerance", r.tolerance},
                {"pass", r.pass},
                {"support", support}}
        .dump();
}

std::string dump_fuzz_results(const std::vector<FuzzResult>& results) {
    json j = json::array();
    for (const FuzzResult& r : results)
        j.push_back({{"name", r.name},
                     {"trials", r.trials},
                     {"pass", r.pass},
                     {"counterexample", r.counterexample}});
    return j.dump();
}

std::string load_json_argument(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[' || arg[0] == '"')) return arg;
    if (arg == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open '" + arg + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace schurlpp
