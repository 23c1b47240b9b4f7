#pragma once

#include <cassert>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>

namespace edgeorbit {

// Exact arithmetic in the golden ring Z[phi], phi^2 = phi + 1.
// A value a + b*phi is stored as two signed 64-bit integers. Arithmetic
// throws std::overflow_error instead of wrapping silently; the built-in
// solids stay far inside the 64-bit range.
struct GoldenNumber {
    std::int64_t a = 0;  // rational part
    std::int64_t b = 0;  // phi coefficient

    constexpr GoldenNumber() = default;
    constexpr GoldenNumber(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {}

    bool is_zero() const { return a == 0 && b == 0; }

    double to_double() const {
        return static_cast<double>(a) + static_cast<double>(b) * std::numbers::phi;
    }

    friend bool operator==(const GoldenNumber&, const GoldenNumber&) = default;
};

GoldenNumber operator+(GoldenNumber x, GoldenNumber y);
GoldenNumber operator-(GoldenNumber x, GoldenNumber y);
GoldenNumber operator-(GoldenNumber x);
GoldenNumber operator*(GoldenNumber x, GoldenNumber y);

// Sign of a + b*phi as a real number: -1, 0 or +1. Exact.
int sign(GoldenNumber x);

// Total order given by the real embedding.
inline bool operator<(GoldenNumber x, GoldenNumber y) { return sign(x - y) < 0; }
inline bool operator>(GoldenNumber x, GoldenNumber y) { return y < x; }
inline bool operator<=(GoldenNumber x, GoldenNumber y) { return !(y < x); }
inline bool operator>=(GoldenNumber x, GoldenNumber y) { return !(x < y); }

struct Point3 {
    GoldenNumber x, y, z;

    friend bool operator==(const Point3&, const Point3&) = default;
};

Point3 operator-(const Point3& u, const Point3& v);
Point3 cross(const Point3& u, const Point3& v);
GoldenNumber dot(const Point3& u, const Point3& v);

// (u x v) . w, exact.
GoldenNumber triple_product(const Point3& u, const Point3& v, const Point3& w);

// True iff all points lie in one common plane. Scans in order for the first
// three affinely independent points (skipping points collinear with those
// already chosen); with fewer than three such points everything fits in a
// plane and the answer is true. The input must be non-empty.
bool coplanar(std::span<const Point3> points);

}  // namespace edgeorbit
