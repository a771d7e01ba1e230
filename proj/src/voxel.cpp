#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "holes3d/errors.hpp"
#include "holes3d/parallel.hpp"
#include "holes3d/voxel.hpp"

namespace holes3d {

namespace {

struct GridFrame {
    Vec3 origin;
    long long nx = 0, ny = 0, nz = 0;

    long long cells() const { return nx * ny * nz; }
};

Int lcm_int(const Int& a, const Int& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

/// Lattice-anchored frame: index 0 sits two cells below floor(min/h), the top
/// two cells above ceil(max/h), so the union is padded by empty layers.
GridFrame frame_for(const TranslateFamily& family, const Rat& h) {
    bool first = true;
    Vec3 lo, hi;
    for (const Translate& t : family.translates) {
        if (!t.body) {
            throw InputError("rasterize: translate without a body");
        }
        for (const Vec3& v : t.body->vertices) {
            const Vec3 p = v + t.offset;
            if (first) {
                lo = hi = p;
                first = false;
            } else {
                for (int axis = 0; axis < 3; ++axis) {
                    if (p[axis] < lo[axis]) lo[axis] = p[axis];
                    if (p[axis] > hi[axis]) hi[axis] = p[axis];
                }
            }
        }
    }
    if (first) {
        throw InputError("rasterize: family has no vertices");
    }
    GridFrame frame;
    long long* dims[3] = {&frame.nx, &frame.ny, &frame.nz};
    for (int axis = 0; axis < 3; ++axis) {
        const Int base = (lo[axis] / h).floor() - 2;
        const Int top = (hi[axis] / h).ceil() + 2;
        frame.origin[axis] = Rat(base) * h;
        *dims[axis] = static_cast<long long>(top - base);
    }
    return frame;
}

/// One facet inequality with cell indices as the unknowns:
/// a*ix + b*iy + c*iz <= e, all integers.
struct CellConstraint {
    Int a, b, c, e;
};

std::vector<std::vector<CellConstraint>> cell_constraints(const TranslateFamily& family,
                                                          const Rat& h,
                                                          const GridFrame& frame) {
    std::vector<std::vector<CellConstraint>> per_translate;
    const Rat half = h / Rat(2);
    for (const Translate& t : family.translates) {
        std::vector<CellConstraint> cons;
        for (const Facet& f : t.body->facets) {
            // n . (origin + h(i + 1/2)) <= off + n . t  rearranged to keep
            // only the integer indices on the left.
            const Rat rhs = (f.offset + dot(f.normal, t.offset) - dot(f.normal, frame.origin) -
                             half * (f.normal.x + f.normal.y + f.normal.z)) /
                            h;
            Int den = f.normal.x.denominator();
            den = lcm_int(den, f.normal.y.denominator());
            den = lcm_int(den, f.normal.z.denominator());
            den = lcm_int(den, rhs.denominator());
            const auto scaled = [&den](const Rat& r) {
                return r.numerator() * (den / r.denominator());
            };
            cons.push_back(CellConstraint{scaled(f.normal.x), scaled(f.normal.y),
                                          scaled(f.normal.z), scaled(rhs)});
        }
        per_translate.push_back(std::move(cons));
    }
    return per_translate;
}

Int floor_div(const Int& num, const Int& den) {
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0 && ((num < 0) != (den < 0))) {
        --q;
    }
    return q;
}

Int ceil_div(const Int& num, const Int& den) {
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0 && ((num < 0) == (den < 0))) {
        ++q;
    }
    return q;
}

void merge_runs(std::vector<std::pair<long long, long long>>& runs) {
    std::sort(runs.begin(), runs.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (out > 0 && runs[i].first <= runs[out - 1].second + 1) {
            runs[out - 1].second = std::max(runs[out - 1].second, runs[i].second);
        } else {
            runs[out++] = runs[i];
        }
    }
    runs.resize(out);
}

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = b;
        }
    }
};

} // namespace

bool VoxelGrid::occupied(long long ix, long long iy, long long iz) const {
    if (ix < 0 || ix >= nx || iy < 0 || iy >= ny || iz < 0 || iz >= nz) {
        return false;
    }
    const std::size_t col = static_cast<std::size_t>(ix * ny + iy);
    const std::size_t lo = column_start[col];
    const std::size_t hi = column_start[col + 1];
    // Runs are sorted and disjoint; binary search the last run starting <= iz.
    std::size_t left = lo, right = hi;
    while (left < right) {
        const std::size_t mid = left + (right - left) / 2;
        if (runs[mid].first <= iz) {
            left = mid + 1;
        } else {
            right = mid;
        }
    }
    return left > lo && runs[left - 1].second >= iz;
}

VoxelGrid rasterize(const TranslateFamily& family, const Rat& h, long long cell_budget,
                    int threads) {
    if (h.sign() <= 0) {
        throw InputError("rasterize: cell size must be positive");
    }
    if (family.translates.empty()) {
        throw InputError("rasterize: empty family");
    }
    if (cell_budget < 64) {
        throw InputError("rasterize: cell budget below the minimum padded grid");
    }
    GridFrame frame = frame_for(family, h);
    if (frame.cells() > cell_budget) {
        Rat suggestion = h;
        while (frame_for(family, suggestion).cells() > cell_budget) {
            suggestion = suggestion * Rat(2);
        }
        throw ResourceError("rasterize: grid of " + std::to_string(frame.cells()) +
                            " cells exceeds the budget of " + std::to_string(cell_budget) +
                            "; cell size " + suggestion.str() + " would fit");
    }
    const auto per_translate = cell_constraints(family, h, frame);

    VoxelGrid grid;
    grid.origin = frame.origin;
    grid.h = h;
    grid.nx = frame.nx;
    grid.ny = frame.ny;
    grid.nz = frame.nz;

    const std::size_t columns = static_cast<std::size_t>(frame.nx * frame.ny);
    std::vector<std::vector<std::pair<long long, long long>>> col_runs(columns);
    parallel_for(columns, threads, [&](std::size_t col) {
        const Int ix(static_cast<long long>(col) / frame.ny);
        const Int iy(static_cast<long long>(col) % frame.ny);
        auto& runs = col_runs[col];
        for (const auto& cons : per_translate) {
            long long lo = 0;
            long long hi = frame.nz - 1;
            bool empty = false;
            for (const CellConstraint& cc : cons) {
                const Int slack = cc.e - cc.a * ix - cc.b * iy;
                if (cc.c == 0) {
                    if (slack < 0) {
                        empty = true;
                        break;
                    }
                } else if (cc.c > 0) {
                    const Int bound = floor_div(slack, cc.c);
                    if (bound < hi) {
                        hi = bound < lo ? lo - 1 : static_cast<long long>(bound);
                    }
                } else {
                    const Int bound = ceil_div(slack, cc.c);
                    if (bound > lo) {
                        lo = bound > hi ? hi + 1 : static_cast<long long>(bound);
                    }
                }
                if (lo > hi) {
                    empty = true;
                    break;
                }
            }
            if (!empty && lo <= hi) {
                runs.emplace_back(lo, hi);
            }
        }
        merge_runs(runs);
    });

    grid.column_start.assign(columns + 1, 0);
    for (std::size_t c = 0; c < columns; ++c) {
        grid.column_start[c + 1] = grid.column_start[c] + col_runs[c].size();
    }
    grid.runs.reserve(grid.column_start[columns]);
    for (std::size_t c = 0; c < columns; ++c) {
        grid.runs.insert(grid.runs.end(), col_runs[c].begin(), col_runs[c].end());
    }
    return grid;
}

long long count_complement_components(const VoxelGrid& grid) {
    const std::size_t columns = static_cast<std::size_t>(grid.nx * grid.ny);
    // Complement runs per column, as [lo, hi] gaps between occupied runs.
    std::vector<std::pair<long long, long long>> gaps;
    std::vector<std::size_t> gap_start(columns + 1, 0);
    for (std::size_t c = 0; c < columns; ++c) {
        long long cursor = 0;
        for (std::size_t r = grid.column_start[c]; r < grid.column_start[c + 1]; ++r) {
            if (grid.runs[r].first > cursor) {
                gaps.emplace_back(cursor, grid.runs[r].first - 1);
            }
            cursor = grid.runs[r].second + 1;
        }
        if (cursor <= grid.nz - 1) {
            gaps.emplace_back(cursor, grid.nz - 1);
        }
        gap_start[c + 1] = gaps.size();
    }

    UnionFind uf(gaps.size());
    const auto link_columns = [&](std::size_t a, std::size_t b) {
        std::size_t i = gap_start[a];
        std::size_t j = gap_start[b];
        while (i < gap_start[a + 1] && j < gap_start[b + 1]) {
            // Overlapping z-intervals in side-by-side columns share a face.
            if (gaps[i].second >= gaps[j].first && gaps[j].second >= gaps[i].first) {
                uf.unite(i, j);
            }
            if (gaps[i].second < gaps[j].second) {
                ++i;
            } else {
                ++j;
            }
        }
    };
    for (long long ix = 0; ix < grid.nx; ++ix) {
        for (long long iy = 0; iy < grid.ny; ++iy) {
            const std::size_t c = static_cast<std::size_t>(ix * grid.ny + iy);
            if (iy + 1 < grid.ny) {
                link_columns(c, c + 1);
            }
            if (ix + 1 < grid.nx) {
                link_columns(c, static_cast<std::size_t>((ix + 1) * grid.ny + iy));
            }
        }
    }
    long long components = 0;
    for (std::size_t g = 0; g < gaps.size(); ++g) {
        if (uf.find(g) == g) {
            ++components;
        }
    }
    return components;
}

OracleReport oracle_hole_count(const TranslateFamily& family, const Rat& h,
                               long long cell_budget, int threads) {
    OracleReport rep;
    rep.h = h;
    {
        const VoxelGrid grid = rasterize(family, h, cell_budget, threads);
        rep.count_h = count_complement_components(grid);
        rep.cells_h = grid.cell_count();
    }
    {
        const VoxelGrid grid = rasterize(family, h / Rat(2), cell_budget, threads);
        rep.count_h2 = count_complement_components(grid);
        rep.cells_h2 = grid.cell_count();
    }
    rep.stable = rep.count_h == rep.count_h2;
    return rep;
}

Rat default_oracle_resolution(const TranslateFamily& family, const Rat& feature,
                              long long cell_budget) {
    if (feature.sign() <= 0) {
        throw InputError("default_oracle_resolution: feature size must be positive");
    }
    if (cell_budget < 1000) {
        throw InputError("default_oracle_resolution: cell budget too small");
    }
    Rat h(1);
    const Rat target = feature / Rat(4);
    while (h > target) {
        h = h / Rat(2);
    }
    while (h * Rat(2) <= target) {
        h = h * Rat(2);
    }
    while (frame_for(family, h).cells() > cell_budget ||
           frame_for(family, h / Rat(2)).cells() > cell_budget) {
        h = h * Rat(2);
    }
    return h;
}

std::string rle_dump(const VoxelGrid& grid) {
    std::string out;
    out += "voxel-rle 1\n";
    out += "dims " + std::to_string(grid.nx) + " " + std::to_string(grid.ny) + " " +
           std::to_string(grid.nz) + "\n";
    out += "origin " + grid.origin.x.str() + " " + grid.origin.y.str() + " " +
           grid.origin.z.str() + "\n";
    out += "h " + grid.h.str() + "\n";
    out += "order ix iy iz\n";

    // Tokens count:bit over all cells, ix outermost, iz fastest.
    long long run_len = 0;
    int run_bit = -1;
    int line_tokens = 0;
    const auto flush = [&]() {
        if (run_len == 0) {
            return;
        }
        if (line_tokens > 0) {
            out += " ";
        }
        out += std::to_string(run_len) + ":" + std::to_string(run_bit);
        if (++line_tokens == 16) {
            out += "\n";
            line_tokens = 0;
        }
        run_len = 0;
    };
    const auto emit = [&](int bit, long long count) {
        if (count <= 0) {
            return;
        }
        if (bit != run_bit) {
            flush();
            run_bit = bit;
        }
        run_len += count;
    };
    const std::size_t columns = static_cast<std::size_t>(grid.nx * grid.ny);
    for (std::size_t c = 0; c < columns; ++c) {
        long long cursor = 0;
        for (std::size_t r = grid.column_start[c]; r < grid.column_start[c + 1]; ++r) {
            emit(0, grid.runs[r].first - cursor);
            emit(1, grid.runs[r].second - grid.runs[r].first + 1);
            cursor = grid.runs[r].second + 1;
        }
        emit(0, grid.nz - cursor);
    }
    flush();
    if (line_tokens != 0) {
        out += "\n";
    }
    return out;
}

} // namespace holes3d
