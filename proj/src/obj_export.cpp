#include <string>

#include "holes3d/obj_export.hpp"

namespace holes3d {

void ObjBuilder::add(const ConvexBody& body, const Vec3& offset, const std::string& name) {
    out_ += "o " + name + "\n";
    const long long base = next_vertex_;
    for (const Vec3& v : body.vertices) {
        const Vec3 p = v + offset;
        out_ += "v " + to_decimal_string(p.x, precision_) + " " +
                to_decimal_string(p.y, precision_) + " " +
                to_decimal_string(p.z, precision_) + "\n";
    }
    next_vertex_ += static_cast<long long>(body.vertices.size());
    if (body.affine_dim < 2) {
        return; // points and segments contribute vertices only
    }
    for (const Facet& f : body.facets) {
        if (f.vertices.size() < 3) {
            continue; // edge facets of flat bodies are not printable faces
        }
        // Triangle fan keeps viewers happy with non-triangular facets.
        for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i) {
            out_ += "f " + std::to_string(base + f.vertices[0]) + " " +
                    std::to_string(base + f.vertices[i]) + " " +
                    std::to_string(base + f.vertices[i + 1]) + "\n";
        }
        if (body.affine_dim == 2) {
            break; // one side of a flat polygon is enough
        }
    }
}

std::string to_obj(const ConvexBody& body, const Vec3& offset, const std::string& name,
                   unsigned precision) {
    ObjBuilder builder(precision);
    builder.add(body, offset, name);
    return builder.str();
}

} // namespace holes3d
