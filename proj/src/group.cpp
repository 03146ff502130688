#include "hexa/group.hpp"

#include <string>

#include "hexa/errors.hpp"

namespace hexa {

PointGroupElement PointGroupElement::identity(Flavor flavor) {
    return PointGroupElement({0, 1, 2}, {1, 1, 1}, flavor);
}

PointGroupElement PointGroupElement::rotation60(Flavor flavor) {
    // r * (x, y, z) = (-z, -x, -y)
    return PointGroupElement({2, 0, 1}, {-1, -1, -1}, flavor);
}

PointGroupElement PointGroupElement::mirror() {
    // m * (x, y, z) = (x, z, y)
    return PointGroupElement({0, 2, 1}, {1, 1, 1}, Flavor::D6);
}

CubePoint PointGroupElement::apply(const CubePoint& p) const {
    const int in[3] = {p.x, p.y, p.z};
    int out[3];
    for (int i = 0; i < 3; ++i) out[i] = sign_[i] * in[perm_[i]];
    return CubePoint(out[0], out[1], out[2]);
}

AxialPoint PointGroupElement::apply(AxialPoint p) const {
    return cube_to_axial(apply(axial_to_cube(p)));
}

PointGroupElement PointGroupElement::compose(const PointGroupElement& rhs) const {
    if (flavor_ != rhs.flavor_)
        throw FlavorMismatch(std::string("compose: ") + flavor_name(flavor_) + " with " +
                             flavor_name(rhs.flavor_));
    // (this o rhs)(p)[i] = sign[i] * rhs(p)[perm[i]]
    //                    = sign[i] * rhs.sign[perm[i]] * p[rhs.perm[perm[i]]]
    std::array<int8_t, 3> perm;
    std::array<int8_t, 3> sign;
    for (int i = 0; i < 3; ++i) {
        perm[i] = rhs.perm_[perm_[i]];
        sign[i] = static_cast<int8_t>(sign_[i] * rhs.sign_[perm_[i]]);
    }
    return PointGroupElement(perm, sign, flavor_);
}

PointGroupElement PointGroupElement::inverse() const {
    std::array<int8_t, 3> perm;
    std::array<int8_t, 3> sign;
    for (int i = 0; i < 3; ++i) {
        perm[perm_[i]] = static_cast<int8_t>(i);
        sign[perm_[i]] = sign_[i];
    }
    return PointGroupElement(perm, sign, flavor_);
}

namespace {

std::vector<PointGroupElement> build_enumeration(Flavor flavor) {
    std::vector<PointGroupElement> elems;
    elems.reserve(point_group_order(flavor));
    PointGroupElement e = PointGroupElement::identity(flavor);
    const PointGroupElement r = PointGroupElement::rotation60(flavor);
    for (int k = 0; k < 6; ++k) {
        elems.push_back(e);
        e = r.compose(e);
    }
    if (flavor == Flavor::D6) {
        const PointGroupElement m = PointGroupElement::mirror();
        for (int k = 0; k < 6; ++k) elems.push_back(m.compose(elems[k]));
    }
    return elems;
}

} // namespace

const std::vector<PointGroupElement>& enumerate_point_group(Flavor flavor) {
    static const std::vector<PointGroupElement> c6 = build_enumeration(Flavor::C6);
    static const std::vector<PointGroupElement> d6 = build_enumeration(Flavor::D6);
    return flavor == Flavor::C6 ? c6 : d6;
}

int point_group_index(const PointGroupElement& h) {
    const auto& elems = enumerate_point_group(h.flavor());
    for (int i = 0; i < static_cast<int>(elems.size()); ++i)
        if (elems[i].same_action(h)) return i;
    throw UnsupportedTransform("point_group_index: element not in enumeration");
}

PointGroupElement PointGroupElement::as_flavor(Flavor target) const {
    if (target == flavor_) return *this;
    PointGroupElement copy = *this;
    copy.flavor_ = target;
    if (target == Flavor::C6) {
        // Valid only if the action already lies in the rotation subgroup.
        point_group_index(copy);
    }
    return copy;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    return {a.h.compose(b.h), a.t + a.h.apply(b.t)};
}

GroupElement inverse(const GroupElement& g) {
    PointGroupElement hinv = g.h.inverse();
    return {hinv, -hinv.apply(g.t)};
}

} // namespace hexa
