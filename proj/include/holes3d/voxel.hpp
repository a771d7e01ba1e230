#ifndef HOLES3D_VOXEL_HPP
#define HOLES3D_VOXEL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "holes3d/convex_body.hpp"

namespace holes3d {

/**
 * Cell-center occupancy of a translate family on a uniform grid. A cell
 * (ix, iy, iz) is occupied when its center origin + h*(ix+1/2, iy+1/2,
 * iz+1/2) lies in some translate (exact rational test). Occupancy is stored
 * as inclusive iz-intervals per (ix, iy) column in CSR layout, which keeps
 * memory proportional to the surface complexity instead of the cell count.
 * The grid is anchored to the h-lattice and padded by at least two empty
 * cell layers on every side.
 */
struct VoxelGrid {
    Vec3 origin;
    Rat h;
    long long nx = 0, ny = 0, nz = 0;
    std::vector<std::pair<long long, long long>> runs; // inclusive [lo, hi]
    std::vector<std::size_t> column_start;             // size nx*ny + 1

    long long cell_count() const { return nx * ny * nz; }
    bool occupied(long long ix, long long iy, long long iz) const;
};

/**
 * Rasterizes the family at cell size h. Throws InputError (h <= 0 or empty
 * family) and ResourceError when the padded grid would exceed cell_budget,
 * with a workable larger h suggested in the message.
 */
VoxelGrid rasterize(const TranslateFamily& family, const Rat& h,
                    long long cell_budget = 2000000000, int threads = 1);

/**
 * Number of 6-connected components of the unoccupied cells, the outer
 * (unbounded) component included; the voxel analogue of the hole count.
 */
long long count_complement_components(const VoxelGrid& grid);

/// Oracle output: counts at h and at the h/2 refinement.
struct OracleReport {
    Rat h;
    long long count_h = 0;
    long long count_h2 = 0;
    bool stable = false; // counts agree across the refinement
    long long cells_h = 0;
    long long cells_h2 = 0;
};

/// Runs the rasterize + count pipeline at h and h/2 and compares.
OracleReport oracle_hole_count(const TranslateFamily& family, const Rat& h,
                               long long cell_budget = 2000000000, int threads = 1);

/**
 * Default oracle cell size: the largest power of two at most feature/4,
 * doubled until both the h grid and the h/2 refinement grid fit the cell
 * budget. `feature` is the thinnest geometric feature of the family (the
 * validated eps for the main families).
 */
Rat default_oracle_resolution(const TranslateFamily& family, const Rat& feature,
                              long long cell_budget = 2000000000);

/**
 * Text dump of the occupancy, run-length encoded. Header lines: format name
 * and version, "dims nx ny nz", "origin x y z" and "h p/q" with every
 * rational as "p/q", and the scan order (ix outermost, iy, then iz fastest).
 * The body is "count:bit" tokens covering all nx*ny*nz cells in that order.
 */
std::string rle_dump(const VoxelGrid& grid);

} // namespace holes3d

#endif
