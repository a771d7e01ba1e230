#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "holes3d/convex_body.hpp"
#include "holes3d/errors.hpp"

namespace holes3d {

namespace {

/// det[b-a, c-a, d-a]: positive when d lies on the side of plane (a,b,c)
/// that cross(b-a, c-a) points into.
Rat orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    return dot(cross(b - a, c - a), d - a);
}

Int lcm_int(const Int& a, const Int& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

/// Scales (normal, offset) to coprime integers, preserving direction. The
/// result is the canonical form shared by every triangle of one facet.
std::array<Int, 4> primitive_plane_key(const Vec3& n, const Rat& off) {
    Int l = n.x.denominator();
    l = lcm_int(l, n.y.denominator());
    l = lcm_int(l, n.z.denominator());
    l = lcm_int(l, off.denominator());
    std::array<Int, 4> k = {
        n.x.numerator() * (l / n.x.denominator()),
        n.y.numerator() * (l / n.y.denominator()),
        n.z.numerator() * (l / n.z.denominator()),
        off.numerator() * (l / off.denominator()),
    };
    Int g(0);
    for (const Int& v : k) {
        g = boost::multiprecision::gcd(g, v);
    }
    if (g == 0) {
        throw std::logic_error("primitive_plane_key: zero normal");
    }
    for (Int& v : k) {
        v /= g;
    }
    return k;
}

Facet facet_from_key(const std::array<Int, 4>& key, std::vector<int> verts) {
    Facet f;
    f.normal = Vec3(Rat(key[0]), Rat(key[1]), Rat(key[2]));
    f.offset = Rat(key[3]);
    f.vertices = std::move(verts);
    return f;
}

struct Planar {
    Rat u, v;
    int id;
};

Rat cross2(const Planar& o, const Planar& a, const Planar& b) {
    return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

/// Monotone-chain hull keeping strict turns only, so collinear and interior
/// points are dropped. Returns ids in counter-clockwise (u, v) order.
std::vector<int> hull2d_strict(std::vector<Planar> pts) {
    std::sort(pts.begin(), pts.end(), [](const Planar& a, const Planar& b) {
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    const int n = static_cast<int>(pts.size());
    if (n < 3) {
        std::vector<int> ids;
        for (const auto& p : pts) ids.push_back(p.id);
        return ids;
    }
    std::vector<Planar> chain(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross2(chain[k - 2], chain[k - 1], pts[i]).sign() <= 0) {
            --k;
        }
        chain[k++] = pts[i];
    }
    const int lower = k + 1;
    for (int i = n - 2; i >= 0; --i) {
        while (k >= lower && cross2(chain[k - 2], chain[k - 1], pts[i]).sign() <= 0) {
            --k;
        }
        chain[k++] = pts[i];
    }
    std::vector<int> ids;
    ids.reserve(k - 1);
    for (int i = 0; i < k - 1; ++i) {
        ids.push_back(chain[i].id);
    }
    return ids;
}

int dominant_axis(const Vec3& n) {
    const Rat ax = n.x.abs(), ay = n.y.abs(), az = n.z.abs();
    if (ax >= ay && ax >= az) return 0;
    if (ay >= az) return 1;
    return 2;
}

/// Projects out the dominant axis, keeping the other two in cyclic order so
/// that counter-clockwise 2D order corresponds to a polygon normal with a
/// positive component along that axis.
Planar project(const Vec3& p, int axis, int id) {
    const int u = (axis + 1) % 3;
    const int v = (axis + 2) % 3;
    return Planar{p[u], p[v], id};
}

ConvexBody make_point_body(const Vec3& p, const std::string& label) {
    ConvexBody body;
    body.label = label;
    body.affine_dim = 0;
    body.vertices = {p};
    for (int axis = 0; axis < 3; ++axis) {
        Vec3 n(Rat(axis == 0 ? 1 : 0), Rat(axis == 1 ? 1 : 0), Rat(axis == 2 ? 1 : 0));
        body.facets.push_back(Facet{n, p[axis], {0}});
        body.facets.push_back(Facet{-n, -p[axis], {0}});
    }
    return body;
}

ConvexBody make_segment_body(const std::vector<Vec3>& pts, const std::string& label) {
    // pts are sorted and deduplicated; collinear points sorted
    // lexicographically are sorted along the direction, so the ends are the
    // first and last entries.
    ConvexBody body;
    body.label = label;
    body.affine_dim = 1;
    const Vec3 lo = pts.front();
    const Vec3 hi = pts.back();
    body.vertices = {lo, hi};
    const Vec3 dir = hi - lo;
    Vec3 n1 = cross(dir, Vec3(Rat(1), Rat(0), Rat(0)));
    if (n1 == Vec3(Rat(0), Rat(0), Rat(0))) {
        n1 = cross(dir, Vec3(Rat(0), Rat(1), Rat(0)));
    }
    const Vec3 n2 = cross(dir, n1);
    const auto plane_pair = [&](const Vec3& n) {
        const auto key = primitive_plane_key(n, dot(n, lo));
        body.facets.push_back(facet_from_key(key, {0, 1}));
        const auto neg = primitive_plane_key(-n, -dot(n, lo));
        body.facets.push_back(facet_from_key(neg, {0, 1}));
    };
    plane_pair(n1);
    plane_pair(n2);
    body.facets.push_back(facet_from_key(primitive_plane_key(dir, dot(dir, hi)), {1}));
    body.facets.push_back(facet_from_key(primitive_plane_key(-dir, -dot(dir, lo)), {0}));
    return body;
}

ConvexBody make_polygon_body(const std::vector<Vec3>& pts, const Vec3& plane_normal,
                             const std::string& label) {
    ConvexBody body;
    body.label = label;
    body.affine_dim = 2;
    const auto key = primitive_plane_key(plane_normal, dot(plane_normal, pts.front()));
    const Vec3 n{Rat(key[0]), Rat(key[1]), Rat(key[2])};
    const Rat off(key[3]);

    const int axis = dominant_axis(n);
    std::vector<Planar> proj;
    proj.reserve(pts.size());
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        proj.push_back(project(pts[i], axis, i));
    }
    std::vector<int> poly = hull2d_strict(std::move(proj));
    if (poly.size() < 3) {
        throw std::logic_error("make_polygon_body: degenerate polygon");
    }
    if (n[axis].sign() < 0) {
        std::reverse(poly.begin(), poly.end());
    }

    // Keep only polygon corners as vertices, in lexicographic order.
    std::vector<Vec3> corners;
    corners.reserve(poly.size());
    for (int id : poly) {
        corners.push_back(pts[id]);
    }
    std::vector<Vec3> sorted_corners = corners;
    std::sort(sorted_corners.begin(), sorted_corners.end());
    const auto new_id = [&](const Vec3& p) {
        return static_cast<int>(std::lower_bound(sorted_corners.begin(), sorted_corners.end(), p) -
                                sorted_corners.begin());
    };
    body.vertices = sorted_corners;

    std::vector<int> ring;
    ring.reserve(poly.size());
    for (const Vec3& c : corners) {
        ring.push_back(new_id(c));
    }
    body.facets.push_back(facet_from_key(key, ring));
    {
        std::vector<int> rev(ring.rbegin(), ring.rend());
        body.facets.push_back(
            facet_from_key(primitive_plane_key(-n, -off), std::move(rev)));
    }
    const int sz = static_cast<int>(ring.size());
    for (int i = 0; i < sz; ++i) {
        const Vec3& a = body.vertices[ring[i]];
        const Vec3& b = body.vertices[ring[(i + 1) % sz]];
        const Vec3 ne = cross(b - a, n);
        body.facets.push_back(facet_from_key(primitive_plane_key(ne, dot(ne, a)),
                                             {ring[i], ring[(i + 1) % sz]}));
    }
    return body;
}

struct Tri {
    int a, b, c;
    Vec3 n;
    Rat off;
    bool alive = true;
};

/// Full-dimensional incremental hull over deduplicated sorted points;
/// basis gives four affinely independent indices.
ConvexBody make_solid_body(const std::vector<Vec3>& pts, const std::array<int, 4>& basis,
                           const std::string& label) {
    std::vector<Tri> tris;
    std::map<std::pair<int, int>, int> edge_owner;

    const auto register_tri = [&](int a, int b, int c) {
        Tri t;
        t.a = a;
        t.b = b;
        t.c = c;
        t.n = cross(pts[b] - pts[a], pts[c] - pts[a]);
        if (t.n == Vec3(Rat(0), Rat(0), Rat(0))) {
            throw std::logic_error("convex_hull: degenerate face");
        }
        t.off = dot(t.n, pts[a]);
        const int id = static_cast<int>(tris.size());
        for (auto [u, v] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
            if (!edge_owner.emplace(std::pair{u, v}, id).second) {
                throw std::logic_error("convex_hull: duplicate directed edge");
            }
        }
        tris.push_back(std::move(t));
        return id;
    };
    const auto kill_tri = [&](int id) {
        Tri& t = tris[id];
        t.alive = false;
        for (auto [u, v] : {std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}}) {
            edge_owner.erase(std::pair{u, v});
        }
    };
    const auto side = [&](int id, const Vec3& p) { return dot(tris[id].n, p) - tris[id].off; };

    // Seed tetrahedron, each face oriented away from the opposite vertex.
    const auto seed_face = [&](int a, int b, int c, int opp) {
        if (orient3d(pts[a], pts[b], pts[c], pts[opp]).sign() > 0) {
            std::swap(b, c);
        }
        register_tri(a, b, c);
    };
    const auto [i0, i1, i2, i3] = basis;
    seed_face(i0, i1, i2, i3);
    seed_face(i0, i1, i3, i2);
    seed_face(i0, i2, i3, i1);
    seed_face(i1, i2, i3, i0);
    const Vec3 interior = Rat(1, 4) * (pts[i0] + pts[i1] + pts[i2] + pts[i3]);

    for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) {
            continue;
        }
        // Strictly visible faces seed the region to remove; the sweep then
        // absorbs weakly visible (coplanar) neighbours so no kept face has
        // the new point on or above its plane next to the horizon.
        std::vector<int> visible;
        std::set<int> in_visible;
        for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
            if (tris[t].alive && side(t, pts[p]).sign() > 0) {
                visible.push_back(t);
                in_visible.insert(t);
            }
        }
        if (visible.empty()) {
            continue; // inside or on the current hull: not an extreme point
        }
        for (std::size_t head = 0; head < visible.size(); ++head) {
            const Tri t = tris[visible[head]];
            for (auto [u, v] : {std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}}) {
                const auto it = edge_owner.find(std::pair{v, u});
                if (it == edge_owner.end()) {
                    throw std::logic_error("convex_hull: open surface");
                }
                const int nb = it->second;
                if (!in_visible.count(nb) && side(nb, pts[p]).sign() >= 0) {
                    visible.push_back(nb);
                    in_visible.insert(nb);
                }
            }
        }
        // Horizon edges, directed as they appear in the doomed faces.
        std::vector<std::pair<int, int>> horizon;
        for (int t_id : visible) {
            const Tri& t = tris[t_id];
            for (auto [u, v] : {std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}}) {
                if (!in_visible.count(edge_owner.at(std::pair{v, u}))) {
                    horizon.emplace_back(u, v);
                }
            }
        }
        for (int t_id : visible) {
            kill_tri(t_id);
        }
        for (auto [u, v] : horizon) {
            const int id = register_tri(u, v, p);
            if ((dot(tris[id].n, interior) - tris[id].off).sign() >= 0) {
                throw std::logic_error("convex_hull: new face not outward");
            }
        }
    }

    // Merge coplanar triangles into facets. Each facet polygon is rebuilt
    // from scratch as the 2D hull of every hull vertex on its plane, which
    // also drops points that earlier insertions kept but later ones buried
    // inside a face or an edge.
    std::set<int> on_hull;
    std::map<std::array<Int, 4>, int> plane_of; // key -> representative tri
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
        if (!tris[t].alive) {
            continue;
        }
        on_hull.insert(tris[t].a);
        on_hull.insert(tris[t].b);
        on_hull.insert(tris[t].c);
        plane_of.emplace(primitive_plane_key(tris[t].n, tris[t].off), t);
    }

    struct RawFacet {
        std::array<Int, 4> key;
        std::vector<int> ring; // old point ids, CCW from outside
    };
    std::vector<RawFacet> raw;
    std::set<int> final_ids;
    for (const auto& [key, t_id] : plane_of) {
        const Vec3 n{Rat(key[0]), Rat(key[1]), Rat(key[2])};
        const Rat off(key[3]);
        const int axis = dominant_axis(n);
        std::vector<Planar> proj;
        for (int v : on_hull) {
            if (dot(n, pts[v]) == off) {
                proj.push_back(project(pts[v], axis, v));
            }
        }
        std::vector<int> poly = hull2d_strict(std::move(proj));
        if (poly.size() < 3) {
            throw std::logic_error("convex_hull: facet with fewer than 3 corners");
        }
        if (n[axis].sign() < 0) {
            std::reverse(poly.begin(), poly.end());
        }
        for (int v : poly) {
            final_ids.insert(v);
        }
        raw.push_back(RawFacet{key, std::move(poly)});
    }

    ConvexBody body;
    body.label = label;
    body.affine_dim = 3;
    std::map<int, int> renumber;
    for (int old_id : final_ids) { // set iterates ascending = lexicographic
        renumber.emplace(old_id, static_cast<int>(body.vertices.size()));
        body.vertices.push_back(pts[old_id]);
    }
    std::sort(raw.begin(), raw.end(),
              [](const RawFacet& a, const RawFacet& b) { return a.key < b.key; });
    for (auto& rf : raw) {
        std::vector<int> ring;
        ring.reserve(rf.ring.size());
        for (int v : rf.ring) {
            ring.push_back(renumber.at(v));
        }
        // Rotate so the smallest index leads, preserving the cyclic order.
        const auto lead = std::min_element(ring.begin(), ring.end());
        std::rotate(ring.begin(), lead, ring.end());
        body.facets.push_back(facet_from_key(rf.key, std::move(ring)));
    }
    return body;
}

void verify_solid(const ConvexBody& body) {
    std::map<std::pair<int, int>, int> seen;
    long long edge_count = 0;
    for (const Facet& f : body.facets) {
        const int sz = static_cast<int>(f.vertices.size());
        if (sz < 3) {
            throw std::logic_error("convex_hull: verification found a short facet");
        }
        for (int i = 0; i < static_cast<int>(body.vertices.size()); ++i) {
            const Rat s = dot(f.normal, body.vertices[i]) - f.offset;
            if (s.sign() > 0) {
                throw std::logic_error("convex_hull: vertex outside a facet plane");
            }
        }
        for (int i = 0; i < sz; ++i) {
            const Vec3& a = body.vertices[f.vertices[i]];
            const Vec3& b = body.vertices[f.vertices[(i + 1) % sz]];
            const Vec3& c = body.vertices[f.vertices[(i + 2) % sz]];
            if (dot(f.normal, a) != f.offset) {
                throw std::logic_error("convex_hull: facet vertex off its plane");
            }
            if (dot(cross(b - a, c - b), f.normal).sign() <= 0) {
                throw std::logic_error("convex_hull: facet polygon not strictly convex");
            }
            if (!seen.emplace(std::pair{f.vertices[i], f.vertices[(i + 1) % sz]}, 1).second) {
                throw std::logic_error("convex_hull: directed edge used twice");
            }
            ++edge_count;
        }
    }
    for (const auto& [e, cnt] : seen) {
        if (!seen.count(std::pair{e.second, e.first})) {
            throw std::logic_error("convex_hull: unmatched directed edge");
        }
    }
    const long long V = static_cast<long long>(body.vertices.size());
    const long long E = edge_count / 2;
    const long long F = static_cast<long long>(body.facets.size());
    if (V - E + F != 2) {
        throw std::logic_error("convex_hull: Euler check failed");
    }
}

void verify_flat(const ConvexBody& body, const std::vector<Vec3>& pts) {
    for (const Facet& f : body.facets) {
        for (const Vec3& p : pts) {
            if ((dot(f.normal, p) - f.offset).sign() > 0) {
                throw std::logic_error("convex_hull: input point outside a degenerate body");
            }
        }
        for (int v : f.vertices) {
            if (dot(f.normal, body.vertices[v]) != f.offset) {
                throw std::logic_error("convex_hull: degenerate facet vertex off plane");
            }
        }
    }
}

} // namespace

ConvexBody convex_hull(const std::vector<Vec3>& points, const std::string& label) {
    if (points.empty()) {
        throw InputError("convex_hull: no points given");
    }
    std::vector<Vec3> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // Affine dimension probe: a spanning simplex grown greedily.
    const int n = static_cast<int>(pts.size());
    if (n == 1) {
        return make_point_body(pts[0], label);
    }
    int p2 = -1;
    for (int i = 2; i < n; ++i) {
        if (cross(pts[1] - pts[0], pts[i] - pts[0]) != Vec3(Rat(0), Rat(0), Rat(0))) {
            p2 = i;
            break;
        }
    }
    if (p2 < 0) {
        ConvexBody body = make_segment_body(pts, label);
        verify_flat(body, pts);
        return body;
    }
    int p3 = -1;
    for (int i = 2; i < n; ++i) {
        if (!orient3d(pts[0], pts[1], pts[p2], pts[i]).is_zero()) {
            p3 = i;
            break;
        }
    }
    if (p3 < 0) {
        ConvexBody body =
            make_polygon_body(pts, cross(pts[1] - pts[0], pts[p2] - pts[0]), label);
        verify_flat(body, pts);
        return body;
    }
    ConvexBody body = make_solid_body(pts, {0, 1, p2, p3}, label);
    verify_solid(body);
    return body;
}

} // namespace holes3d
