#pragma once

#include <array>
#include <string>

#include "triplane/mpoly.hpp"

namespace triplane {

// A point of the projective plane, canonicalized so the last nonzero
// coordinate equals 1.
template <typename K>
class PlanePointT {
public:
    PlanePointT(K c0, K c1, K c2) : c_{std::move(c0), std::move(c1), std::move(c2)} {
        int last = -1;
        for (int i = 2; i >= 0; --i)
            if (!coeff_is_zero(c_[static_cast<std::size_t>(i)])) { last = i; break; }
        if (last < 0) throw DomainError("plane point: all coordinates are zero");
        K scale = c_[static_cast<std::size_t>(last)];
        for (auto& c : c_) c = c / scale;
        chart_ = last;
    }

    const K& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    // Index of the canonical affine chart (the last nonzero coordinate).
    int chart() const { return chart_; }

    friend bool operator==(const PlanePointT& a, const PlanePointT& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PlanePointT& a, const PlanePointT& b) { return !(a == b); }

private:
    std::array<K, 3> c_;
    int chart_;
};

using PlanePoint = PlanePointT<Rat>;
using XPlanePoint = PlanePointT<QuadExt>;

inline XPlanePoint lift_to_ext(const PlanePoint& p) {
    return XPlanePoint(QuadExt(p[0]), QuadExt(p[1]), QuadExt(p[2]));
}

inline bool is_rational(const XPlanePoint& p) {
    return p[0].is_rational() && p[1].is_rational() && p[2].is_rational();
}

template <typename K>
std::string point_str(const PlanePointT<K>& p);

inline std::string point_str(const PlanePoint& p) {
    return "(" + to_string(p[0]) + " : " + to_string(p[1]) + " : " + to_string(p[2]) + ")";
}
inline std::string point_str(const XPlanePoint& p) {
    return "(" + p[0].str() + " : " + p[1].str() + " : " + p[2].str() + ")";
}

} // namespace triplane
