#pragma once

#include <cstdlib>

#include "hexa/errors.hpp"

// Integer coordinate systems on the hexagonal lattice.
//
// Axial (u, v) counts steps along the lattice basis vectors e1 and e2, which
// meet at 60 degrees. Cube (x, y, z) embeds the lattice into the plane
// x + y + z = 0, where 60-degree rotations and mirrors become signed
// permutations. Offset and double-width re-index rows for rectangular
// storage. Transformations always go through the cube system.

namespace hexa {

struct AxialPoint {
    int u = 0;
    int v = 0;

    bool operator==(const AxialPoint&) const = default;
};

constexpr AxialPoint operator+(AxialPoint a, AxialPoint b) { return {a.u + b.u, a.v + b.v}; }
constexpr AxialPoint operator-(AxialPoint a, AxialPoint b) { return {a.u - b.u, a.v - b.v}; }
constexpr AxialPoint operator-(AxialPoint a) { return {-a.u, -a.v}; }

struct CubePoint {
    int x;
    int y;
    int z;

    CubePoint(int x_, int y_, int z_) : x(x_), y(y_), z(z_) {
        if (x + y + z != 0)
            throw InvalidCoordinate("cube coordinate violates x + y + z = 0");
    }

    bool operator==(const CubePoint&) const = default;
};

struct OffsetPoint {
    int row = 0;
    int col = 0;

    bool operator==(const OffsetPoint&) const = default;
};

// Checkerboard embedding: only cells with (col - row) even exist.
struct DoubleWidthPoint {
    int row;
    int col;

    DoubleWidthPoint(int row_, int col_) : row(row_), col(col_) {
        if ((col - row) % 2 != 0)
            throw InvalidCoordinate("double-width coordinate violates (col - row) parity");
    }

    bool operator==(const DoubleWidthPoint&) const = default;
};

struct CartesianPoint {
    double px = 0.0;
    double py = 0.0;
};

/// floor(v / 2) rounding toward -infinity, also for negative v.
constexpr int floor_div2(int v) { return (v < 0 ? v - 1 : v) / 2; }

inline CubePoint axial_to_cube(AxialPoint p) { return {p.v, -(p.u + p.v), p.u}; }

inline AxialPoint cube_to_axial(const CubePoint& p) {
    if (p.x + p.y + p.z != 0)
        throw InvalidCoordinate("cube coordinate violates x + y + z = 0");
    return {p.z, p.x};
}

/// Counter-clockwise rotation by 60 degrees.
inline CubePoint cube_rotate60(const CubePoint& p) { return {-p.z, -p.x, -p.y}; }

/// Mirror over the vertical axis through the origin; an involution.
inline CubePoint cube_mirror(const CubePoint& p) { return {p.x, p.z, p.y}; }

/// cube_rotate60 pulled back to axial coordinates: (u, v) -> (u + v, -u).
inline AxialPoint axial_rotate60(AxialPoint p) { return {p.u + p.v, -p.u}; }

// Offset convention: v indexes rows, col = u + floor(v / 2) with floor
// toward -infinity on negative rows.
inline OffsetPoint axial_to_offset(AxialPoint p) { return {p.v, p.u + floor_div2(p.v)}; }

inline AxialPoint offset_to_axial(OffsetPoint p) { return {p.col - floor_div2(p.row), p.row}; }

inline DoubleWidthPoint axial_to_doublewidth(AxialPoint p) { return {p.v, 2 * p.u + p.v}; }

inline AxialPoint doublewidth_to_axial(const DoubleWidthPoint& p) {
    return {(p.col - p.row) / 2, p.row};
}

inline constexpr double kHalfSqrt3 = 0.86602540378443864676;

/// Geometric embedding with e1 = (1, 0) and e2 = (1/2, -sqrt(3)/2). Under
/// this choice cube_rotate60 acts as a +60 degree planar rotation.
inline CartesianPoint embed(AxialPoint p) {
    return {static_cast<double>(p.u) + 0.5 * p.v, -kHalfSqrt3 * p.v};
}

/// Lattice metric: half the L1 norm of the cube-coordinate difference.
inline int hex_distance(AxialPoint a, AxialPoint b) {
    const AxialPoint d = a - b;
    const int x = d.v;
    const int y = -(d.u + d.v);
    const int z = d.u;
    return (std::abs(x) + std::abs(y) + std::abs(z)) / 2;
}

} // namespace hexa
