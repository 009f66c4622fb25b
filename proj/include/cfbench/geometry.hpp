#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace cfbench {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

// Row-major affine map in SVG matrix(a b c d e f) order:
//   x' = a*x + c*y + e,  y' = b*x + d*y + f
struct Affine {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0, e = 0.0, f = 0.0;

    static Affine identity() { return {}; }

    static Affine translation(double tx, double ty) { return {1, 0, 0, 1, tx, ty}; }

    static Affine rotation_about(Vec2 center, double radians) {
        const double s = std::sin(radians), co = std::cos(radians);
        // translate(-c) . rotate . translate(c)
        return {co, s, -s, co,
                center.x - co * center.x + s * center.y,
                center.y - s * center.x - co * center.y};
    }

    static Affine scaling(double sx, double sy) { return {sx, 0, 0, sy, 0, 0}; }

    bool is_identity() const {
        return a == 1.0 && b == 0.0 && c == 0.0 && d == 1.0 && e == 0.0 && f == 0.0;
    }

    Vec2 apply(Vec2 p) const { return {a * p.x + c * p.y + e, b * p.x + d * p.y + f}; }

    // this ∘ other  (apply `other` first, then this)
    Affine compose(const Affine& o) const {
        return {a * o.a + c * o.b,
                b * o.a + d * o.b,
                a * o.c + c * o.d,
                b * o.c + d * o.d,
                a * o.e + c * o.f + e,
                b * o.e + d * o.f + f};
    }

    Affine inverse() const {
        const double det = a * d - b * c;
        const double ia = d / det, ib = -b / det, ic = -c / det, id = a / det;
        return {ia, ib, ic, id, -(ia * e + ic * f), -(ib * e + id * f)};
    }

    // |scale| along any axis assuming near-uniform scaling; used to carry
    // circle radii and stroke widths through transforms.
    double uniform_scale() const { return std::sqrt(std::abs(a * d - b * c)); }
};

struct Box {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    bool empty() const { return min_x > max_x || min_y > max_y; }
    double width() const { return empty() ? 0.0 : max_x - min_x; }
    double height() const { return empty() ? 0.0 : max_y - min_y; }

    void include(Vec2 p) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }

    void include(const Box& o) {
        if (o.empty()) return;
        include({o.min_x, o.min_y});
        include({o.max_x, o.max_y});
    }

    Box expanded(double margin) const {
        Box b = *this;
        if (b.empty()) return b;
        b.min_x -= margin;
        b.min_y -= margin;
        b.max_x += margin;
        b.max_y += margin;
        return b;
    }

    bool contains(Vec2 p) const {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }

    bool contains(const Box& o) const {
        return !empty() && !o.empty() && o.min_x >= min_x && o.max_x <= max_x &&
               o.min_y >= min_y && o.max_y <= max_y;
    }

    bool intersects(const Box& o) const {
        return !empty() && !o.empty() && o.min_x <= max_x && o.max_x >= min_x &&
               o.min_y <= max_y && o.max_y >= min_y;
    }
};

struct Color {
    std::uint8_t r = 0, g = 0, b = 0, a = 255;

    bool operator==(const Color&) const = default;
};

namespace colors {
inline constexpr Color white{255, 255, 255, 255};
inline constexpr Color black{0, 0, 0, 255};
inline constexpr Color none{0, 0, 0, 0};
} // namespace colors

inline Color rgb(std::uint8_t r, std::uint8_t g, std::uint8_t b) { return {r, g, b, 255}; }

// Distance from point to segment [a,b]; the stroke hit test for lines.
inline double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return norm(p - a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return norm(p - (a + ab * t));
}

} // namespace cfbench
