#include "edgeorbit/golden.hpp"

namespace edgeorbit {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("golden-number addition overflows 64 bits");
    return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("golden-number subtraction overflows 64 bits");
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("golden-number multiplication overflows 64 bits");
    return r;
}

}  // namespace

GoldenNumber operator+(GoldenNumber x, GoldenNumber y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

GoldenNumber operator-(GoldenNumber x, GoldenNumber y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

GoldenNumber operator-(GoldenNumber x) {
    return {checked_sub(0, x.a), checked_sub(0, x.b)};
}

GoldenNumber operator*(GoldenNumber x, GoldenNumber y) {
    // (a1 + b1 phi)(a2 + b2 phi) = (a1 a2 + b1 b2) + (a1 b2 + a2 b1 + b1 b2) phi
    const std::int64_t aa = checked_mul(x.a, y.a);
    const std::int64_t bb = checked_mul(x.b, y.b);
    const std::int64_t ab = checked_mul(x.a, y.b);
    const std::int64_t ba = checked_mul(x.b, y.a);
    return {checked_add(aa, bb), checked_add(checked_add(ab, ba), bb)};
}

int sign(GoldenNumber x) {
    // a + b phi = (p + q sqrt5) / 2 with p = 2a + b, q = b.
    const __int128 p = 2 * static_cast<__int128>(x.a) + x.b;
    const __int128 q = x.b;
    if (q == 0) return p > 0 ? 1 : (p < 0 ? -1 : 0);
    if (p == 0) return q > 0 ? 1 : -1;
    if (p > 0 && q > 0) return 1;
    if (p < 0 && q < 0) return -1;
    // Opposite signs: the comparison reduces to p^2 vs 5 q^2.
    constexpr __int128 kPBound = static_cast<__int128>(1) << 63;
    constexpr __int128 kQBound = static_cast<__int128>(1) << 62;
    if (p > kPBound || p < -kPBound || q > kQBound || q < -kQBound)
        throw std::overflow_error("golden-number comparison overflows 128 bits");
    const __int128 pp = p * p;
    const __int128 qq5 = 5 * q * q;
    // pp == qq5 is impossible for q != 0 (sqrt5 is irrational).
    const int mag = pp > qq5 ? 1 : -1;
    return p > 0 ? mag : -mag;
}

Point3 operator-(const Point3& u, const Point3& v) {
    return {u.x - v.x, u.y - v.y, u.z - v.z};
}

Point3 cross(const Point3& u, const Point3& v) {
    return {u.y * v.z - u.z * v.y,
            u.z * v.x - u.x * v.z,
            u.x * v.y - u.y * v.x};
}

GoldenNumber dot(const Point3& u, const Point3& v) {
    return u.x * v.x + u.y * v.y + u.z * v.z;
}

GoldenNumber triple_product(const Point3& u, const Point3& v, const Point3& w) {
    return dot(cross(u, v), w);
}

bool coplanar(std::span<const Point3> points) {
    assert(!points.empty());
    const Point3& p0 = points.front();

    auto vanishes = [](const Point3& p) {
        return p.x.is_zero() && p.y.is_zero() && p.z.is_zero();
    };

    // First three affinely independent points, in scan order.
    const Point3* p1 = nullptr;
    const Point3* p2 = nullptr;
    for (const Point3& p : points) {
        if (p1 == nullptr) {
            if (!(p == p0)) p1 = &p;
        } else if (!vanishes(cross(*p1 - p0, p - p0))) {
            p2 = &p;
            break;
        }
    }
    if (p2 == nullptr) return true;  // everything on one line (or one point)

    const Point3 normal = cross(*p1 - p0, *p2 - p0);
    for (const Point3& p : points)
        if (!dot(normal, p - p0).is_zero()) return false;
    return true;
}

}  // namespace edgeorbit
