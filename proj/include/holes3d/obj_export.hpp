#ifndef HOLES3D_OBJ_EXPORT_HPP
#define HOLES3D_OBJ_EXPORT_HPP

#include <string>

#include "holes3d/convex_body.hpp"

namespace holes3d {

/**
 * Accumulates OBJ objects so several bodies can share one file with correct
 * global vertex numbering. Coordinates are emitted as exact decimal
 * expansions rounded to `precision` fractional digits; facets are emitted as
 * triangle fans. Bodies of affine dimension below 2 contribute vertices only.
 */
class ObjBuilder {
public:
    explicit ObjBuilder(unsigned precision = 17) : precision_(precision) {}

    void add(const ConvexBody& body, const Vec3& offset, const std::string& name);

    const std::string& str() const { return out_; }

private:
    unsigned precision_;
    long long next_vertex_ = 1;
    std::string out_;
};

/// Single-body OBJ document.
std::string to_obj(const ConvexBody& body, const Vec3& offset,
                   const std::string& name, unsigned precision = 17);

} // namespace holes3d

#endif
