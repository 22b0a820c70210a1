#include "schurlpp/lpp.hpp"

#include <algorithm>

#include "schurlpp/rng.hpp"

namespace schurlpp {

namespace {
void check_unit_interval(const Rat& v, const char* what) {
    if (v < 0 || v >= 1) throw InputError(std::string(what) + " must lie in [0, 1)");
}
} // namespace

void FsParams::require_window(int cols, int rows) const {
    if (static_cast<int>(x.size()) < cols)
        throw InputError("FsParams: not enough x components for the window");
    if (static_cast<int>(y.size()) < rows)
        throw InputError("FsParams: not enough y components for the window");
    for (const Rat& v : x) check_unit_interval(v, "FsParams: x component");
    for (const Rat& v : y) check_unit_interval(v, "FsParams: y component");
}

void HsParams::require_window(int size) const {
    if (static_cast<int>(x.size()) < size)
        throw InputError("HsParams: not enough x components for the window");
    for (const Rat& v : x) check_unit_interval(v, "HsParams: x component");
    check_unit_interval(c, "HsParams: c");
}

WeightMatrix sample_full(const FsParams& p, int cols, int rows, uint64_t seed,
                         uint64_t replica) {
    p.require_window(cols, rows);
    WeightMatrix w(cols, rows);
    for (int j = 1; j <= rows; ++j)
        for (int i = 1; i <= cols; ++i)
            w.set(i, j,
                  sample_geometric(to_double(p.q(i, j)),
                                   cell_key(seed, replica, static_cast<uint64_t>(i),
                                            static_cast<uint64_t>(j))));
    return w;
}

WeightMatrix sample_half(const HsParams& p, int size, uint64_t seed, uint64_t replica) {
    p.require_window(size);
    WeightMatrix w(size, size);
    for (int i = 1; i <= size; ++i) {
        for (int j = 1; j <= i; ++j) {
            int v = sample_geometric(to_double(p.q(i, j)),
                                     cell_key(seed, replica, static_cast<uint64_t>(i),
                                              static_cast<uint64_t>(j)));
            w.set(i, j, v);
            w.set(j, i, v);
        }
    }
    return w;
}

LppObservation observe(const WeightMatrix& w, const DownRightPath& gamma) {
    int need_x = 0, need_y = 0;
    for (const Vertex& v : gamma.vertices()) {
        need_x = std::max(need_x, v.x);
        need_y = std::max(need_y, v.y);
    }
    if (need_x > w.cols() || need_y > w.rows())
        throw InputError("observe: window does not cover the path");
    GrowthTable t = grow_rectangle(w);
    LppObservation obs;
    obs.path = gamma;
    obs.lambdas.reserve(gamma.vertices().size());
    for (const Vertex& v : gamma.vertices())
        obs.lambdas.push_back(v.x == 0 || v.y == 0 ? Partition() : t.entry(v.x, v.y));
    return obs;
}

std::vector<long long> g_times(const LppObservation& obs, int vertex_index) {
    if (vertex_index < 0 || vertex_index >= static_cast<int>(obs.lambdas.size()))
        throw InputError("g_times: vertex index out of range");
    const Partition& lam = obs.lambdas[static_cast<size_t>(vertex_index)];
    std::vector<long long> out;
    long long acc = 0;
    for (int i = 1; i <= lam.length(); ++i) {
        acc += lam.part(i);
        out.push_back(acc);
    }
    out.push_back(acc); // value of every k beyond the length
    return out;
}

} // namespace schurlpp
