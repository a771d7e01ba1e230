#ifndef HOLES3D_WARMUP_HPP
#define HOLES3D_WARMUP_HPP

#include "holes3d/convex_body.hpp"

namespace holes3d {

/**
 * The seven-vertex warm-up body and the exact quantities its family needs:
 * ell is the depth of the gap left between two consecutive B-cones on the
 * facet F (the facet of the body in the plane y = 0), computed by exact
 * vertex enumeration of the planar intersection of consecutive cones;
 * c_prime is the point on segment ac at distance ell below a.
 */
struct WarmupSpec {
    Vec3 a, b, c, d, e, f, g;
    int m = 0;
    Rat ell;
    Vec3 c_prime;
};

/// Hull of a=(0,0,0), b=(1,0,0), c=(0,0,-1), d=(1,0,-1), e=(1/2,1/2,1/2),
/// f=(0,1,0), g=(1,1,0). The plane y = 0 supports exactly {a,b,c,d}.
ConvexBody build_warmup_body();

/// The warm-up family and the derived quantities behind its offsets.
struct WarmupFamily {
    WarmupSpec spec;
    TranslateFamily family;
};

/**
 * The 2m+1 warm-up translates in family order A_1..A_m, B_1..B_m, C:
 *   - B_j moves the apex vertex e onto the edge ab at x = (2j-1)/(2m);
 *   - A_i moves the vertex f onto segment a c_prime at depth (2i-1) ell/(2m),
 *     so consecutive A positions are ell/m apart;
 *   - C is the body itself.
 * Throws InputError for m < 2 (no grid exists below that).
 */
WarmupFamily build_warmup_family(int m);

} // namespace holes3d

#endif
