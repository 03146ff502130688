#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hexa/coords.hpp"

namespace hexa {

enum class Flavor { C6, D6 };

constexpr int point_group_order(Flavor f) { return f == Flavor::C6 ? 6 : 12; }

inline const char* flavor_name(Flavor f) { return f == Flavor::C6 ? "C6" : "D6"; }

// An element of the point group C6 or D6, stored as its exact action on cube
// coordinates: out[i] = sign[i] * in[perm[i]]. Composition is function
// composition of these actions, so the dihedral relations cannot be encoded
// wrongly. Canonical indices are recovered by lookup in the enumeration.
class PointGroupElement {
public:
    static PointGroupElement identity(Flavor flavor);
    /// The generator r: counter-clockwise rotation by 60 degrees.
    static PointGroupElement rotation60(Flavor flavor);
    /// The generator m: mirror over the vertical axis. D6 by definition.
    static PointGroupElement mirror();

    CubePoint apply(const CubePoint& p) const;
    AxialPoint apply(AxialPoint p) const;

    /// this after rhs: (a.compose(b))(p) = a(b(p)). Throws FlavorMismatch.
    PointGroupElement compose(const PointGroupElement& rhs) const;
    PointGroupElement inverse() const;

    Flavor flavor() const { return flavor_; }
    /// Same action retagged. D6 -> C6 requires the action to be a rotation.
    PointGroupElement as_flavor(Flavor target) const;

    bool same_action(const PointGroupElement& rhs) const {
        return perm_ == rhs.perm_ && sign_ == rhs.sign_;
    }
    bool operator==(const PointGroupElement& rhs) const {
        return flavor_ == rhs.flavor_ && same_action(rhs);
    }

private:
    PointGroupElement(std::array<int8_t, 3> perm, std::array<int8_t, 3> sign, Flavor flavor)
        : perm_(perm), sign_(sign), flavor_(flavor) {}

    std::array<int8_t, 3> perm_;
    std::array<int8_t, 3> sign_;
    Flavor flavor_;
};

/// All elements in canonical order: r^0..r^5, then m*r^0..m*r^5 for D6.
/// This order fixes the orientation-channel layout everywhere.
const std::vector<PointGroupElement>& enumerate_point_group(Flavor flavor);

/// Position of the element's action in the canonical enumeration of its flavor.
int point_group_index(const PointGroupElement& h);

// An element of p6 (flavor C6) or p6m (flavor D6): a point-group part plus an
// axial translation. Acts on lattice points as p -> t + h(p).
struct GroupElement {
    PointGroupElement h;
    AxialPoint t;

    static GroupElement identity(Flavor flavor) {
        return {PointGroupElement::identity(flavor), {0, 0}};
    }
    static GroupElement translation(AxialPoint t, Flavor flavor) {
        return {PointGroupElement::identity(flavor), t};
    }
    static GroupElement from_point(const PointGroupElement& h) { return {h, {0, 0}}; }

    bool operator==(const GroupElement&) const = default;
};

/// Semidirect-product law: (a.h o b.h, a.t + a.h(b.t)). Throws FlavorMismatch.
GroupElement compose(const GroupElement& a, const GroupElement& b);

GroupElement inverse(const GroupElement& g);

inline AxialPoint act_on_point(const GroupElement& g, AxialPoint p) {
    return g.t + g.h.apply(p);
}

} // namespace hexa
