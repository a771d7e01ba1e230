#ifndef HOLES3D_VEC3_HPP
#define HOLES3D_VEC3_HPP

#include <array>
#include <ostream>

#include "holes3d/rational.hpp"

namespace holes3d {

/// Exact point/vector in Q^3.
struct Vec3 {
    Rat x, y, z;

    Vec3() = default;
    Vec3(Rat x_, Rat y_, Rat z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    const Rat& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    Rat& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    Vec3& operator+=(const Vec3& o) {
        x += o.x; y += o.y; z += o.z;
        return *this;
    }
    Vec3& operator-=(const Vec3& o) {
        x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }

    friend Vec3 operator*(const Rat& s, const Vec3& v) {
        return {s * v.x, s * v.y, s * v.z};
    }

    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Vec3& o) const { return !(*this == o); }

    /// Lexicographic order, used for canonical sorting and ordered containers.
    bool operator<(const Vec3& o) const {
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return z < o.z;
    }

    friend std::ostream& operator<<(std::ostream& os, const Vec3& v) {
        return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
    }
};

inline Rat dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

/// Sum of absolute coordinates; cheap norm for margin normalization.
inline Rat l1_norm(const Vec3& v) {
    return v.x.abs() + v.y.abs() + v.z.abs();
}

inline Rat squared_norm(const Vec3& v) {
    return dot(v, v);
}

} // namespace holes3d

#endif
