#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cfbench/errors.hpp"
#include "cfbench/geometry.hpp"

namespace cfbench {

enum class ShapeKind { Line, Circle, Rect, Polygon, Polyline, Text, Group };

enum class TextAnchor { Start, Middle, End };

// One node of the vector scene graph. Geometry is kind-specific:
//   Line            points[0], points[1]
//   Circle          center, radius
//   Rect            origin (top-left), rect_w, rect_h
//   Polygon/Polyline points (>= 3 / >= 2)
//   Text            origin (baseline-left before anchoring), text, font_size
//   Group           children
// Tags are semantic labels drawn from the owning scene's declared vocabulary;
// they are what the ground-truth oracles count and measure.
struct Shape {
    ShapeKind kind = ShapeKind::Line;

    std::vector<Vec2> points;
    Vec2 center;
    double radius = 0.0;
    Vec2 origin;
    double rect_w = 0.0, rect_h = 0.0;
    std::string text;
    double font_size = 0.0;
    TextAnchor anchor = TextAnchor::Start;
    std::vector<Shape> children;

    std::optional<Color> fill;
    std::optional<Color> stroke;
    double stroke_width = 0.0;
    Affine transform;
    std::vector<std::string> tags;

    bool has_tag(const std::string& tag) const {
        return std::find(tags.begin(), tags.end(), tag) != tags.end();
    }

    Shape& with_tags(std::vector<std::string> t) {
        tags = std::move(t);
        return *this;
    }

    Shape& with_transform(const Affine& t) {
        transform = t;
        return *this;
    }

    // Device-space bounding box including stroke extent, under `outer`.
    Box bounds(const Affine& outer = Affine::identity()) const {
        const Affine t = outer.compose(transform);
        Box box;
        switch (kind) {
        case ShapeKind::Line:
        case ShapeKind::Polygon:
        case ShapeKind::Polyline:
            for (Vec2 p : points) box.include(t.apply(p));
            break;
        case ShapeKind::Circle: {
            const double r = radius * t.uniform_scale();
            const Vec2 c = t.apply(center);
            box.include({c.x - r, c.y - r});
            box.include({c.x + r, c.y + r});
            break;
        }
        case ShapeKind::Rect:
            box.include(t.apply(origin));
            box.include(t.apply({origin.x + rect_w, origin.y}));
            box.include(t.apply({origin.x, origin.y + rect_h}));
            box.include(t.apply({origin.x + rect_w, origin.y + rect_h}));
            break;
        case ShapeKind::Text: {
            // Conservative em-box estimate; exact extents come from the
            // raster font when drawing.
            const double w = static_cast<double>(text.size()) * font_size * 0.75;
            double x0 = origin.x;
            if (anchor == TextAnchor::Middle) x0 -= w / 2;
            if (anchor == TextAnchor::End) x0 -= w;
            box.include(t.apply({x0, origin.y - font_size}));
            box.include(t.apply({x0 + w, origin.y + font_size * 0.3}));
            break;
        }
        case ShapeKind::Group:
            for (const Shape& child : children) box.include(child.bounds(t));
            break;
        }
        if (stroke && !box.empty()) box = box.expanded(stroke_width / 2.0 * t.uniform_scale());
        return box;
    }
};

inline Shape make_line(Vec2 a, Vec2 b, Color stroke, double width) {
    if (a.x == b.x && a.y == b.y) throw ArgumentError("line endpoints must be distinct");
    if (width <= 0.0) throw ArgumentError("line stroke width must be positive");
    Shape s;
    s.kind = ShapeKind::Line;
    s.points = {a, b};
    s.stroke = stroke;
    s.stroke_width = width;
    return s;
}

inline Shape make_circle(Vec2 center, double radius, std::optional<Color> fill,
                         std::optional<Color> stroke = std::nullopt, double stroke_width = 0.0) {
    if (radius <= 0.0) throw ArgumentError("circle radius must be positive");
    Shape s;
    s.kind = ShapeKind::Circle;
    s.center = center;
    s.radius = radius;
    s.fill = fill;
    s.stroke = stroke;
    s.stroke_width = stroke_width;
    return s;
}

inline Shape make_rect(Vec2 origin, double w, double h, std::optional<Color> fill,
                       std::optional<Color> stroke = std::nullopt, double stroke_width = 0.0) {
    if (w <= 0.0 || h <= 0.0) throw ArgumentError("rect dimensions must be positive");
    Shape s;
    s.kind = ShapeKind::Rect;
    s.origin = origin;
    s.rect_w = w;
    s.rect_h = h;
    s.fill = fill;
    s.stroke = stroke;
    s.stroke_width = stroke_width;
    return s;
}

inline Shape make_polygon(std::vector<Vec2> pts, std::optional<Color> fill,
                          std::optional<Color> stroke = std::nullopt, double stroke_width = 0.0) {
    if (pts.size() < 3) throw ArgumentError("polygon needs at least 3 points");
    Shape s;
    s.kind = ShapeKind::Polygon;
    s.points = std::move(pts);
    s.fill = fill;
    s.stroke = stroke;
    s.stroke_width = stroke_width;
    return s;
}

inline Shape make_polyline(std::vector<Vec2> pts, Color stroke, double width) {
    if (pts.size() < 2) throw ArgumentError("polyline needs at least 2 points");
    if (width <= 0.0) throw ArgumentError("polyline stroke width must be positive");
    Shape s;
    s.kind = ShapeKind::Polyline;
    s.points = std::move(pts);
    s.stroke = stroke;
    s.stroke_width = width;
    return s;
}

inline Shape make_text(Vec2 origin, std::string text, double font_size, Color fill,
                       TextAnchor anchor = TextAnchor::Middle) {
    if (text.empty()) throw ArgumentError("text content must be non-empty");
    if (font_size <= 0.0) throw ArgumentError("font size must be positive");
    Shape s;
    s.kind = ShapeKind::Text;
    s.origin = origin;
    s.text = std::move(text);
    s.font_size = font_size;
    s.fill = fill;
    s.anchor = anchor;
    return s;
}

inline Shape make_group(std::vector<Shape> children) {
    Shape s;
    s.kind = ShapeKind::Group;
    s.children = std::move(children);
    return s;
}

// Immutable-after-construction scene: a canvas, a background color, and an
// ordered list of shapes (later shapes paint over earlier ones). Both images
// and ground truths derive from the same Scene value, which is what makes
// every recorded answer machine-checkable.
class Scene {
public:
    Scene(double width, double height, Color background = colors::white)
        : width_(width), height_(height), background_(background) {
        if (width <= 0.0 || height <= 0.0) throw ArgumentError("scene dimensions must be positive");
    }

    double width() const { return width_; }
    double height() const { return height_; }
    Color background() const { return background_; }
    const std::vector<Shape>& shapes() const { return shapes_; }

    // Generators declare the closed tag vocabulary they draw from.
    void declare_tags(std::initializer_list<std::string> tags) {
        for (const auto& t : tags) vocabulary_.insert(t);
    }
    void declare_tag(const std::string& tag) { vocabulary_.insert(tag); }
    bool knows_tag(const std::string& tag) const { return vocabulary_.count(tag) > 0; }
    const std::set<std::string>& vocabulary() const { return vocabulary_; }

    void add(Shape shape) {
        validate_tags(shape);
        const Box b = shape.bounds();
        if (!b.empty()) {
            const double tol = 1e-6;
            if (b.min_x < -tol || b.min_y < -tol || b.max_x > width_ + tol ||
                b.max_y > height_ + tol) {
                throw ArgumentError("shape bounds exceed the scene canvas");
            }
        }
        shapes_.push_back(std::move(shape));
    }

    void visit(const std::function<void(const Shape&, const Affine&)>& fn) const {
        for (const Shape& s : shapes_) visit_one(s, Affine::identity(), fn);
    }

private:
    void validate_tags(const Shape& shape) const {
        for (const auto& tag : shape.tags) {
            if (!knows_tag(tag)) throw ArgumentError("undeclared tag: " + tag);
        }
        for (const Shape& child : shape.children) validate_tags(child);
    }

    static void visit_one(const Shape& s, const Affine& outer,
                          const std::function<void(const Shape&, const Affine&)>& fn) {
        fn(s, outer);
        if (s.kind == ShapeKind::Group) {
            const Affine t = outer.compose(s.transform);
            for (const Shape& child : s.children) visit_one(child, t, fn);
        }
    }

    double width_, height_;
    Color background_;
    std::vector<Shape> shapes_;
    std::set<std::string> vocabulary_;
};

// Number of non-group shapes carrying `tag`. Groups contribute their tagged
// members, never themselves.
inline int count_tagged(const Scene& scene, const std::string& tag) {
    if (!scene.knows_tag(tag)) throw ArgumentError("unknown tag: " + tag);
    int n = 0;
    scene.visit([&](const Shape& s, const Affine&) {
        if (s.kind != ShapeKind::Group && s.has_tag(tag)) ++n;
    });
    return n;
}

// Same count restricted to shapes whose device-space bounds lie inside
// `region`; the oracle for per-cell questions.
inline int count_tagged_in(const Scene& scene, const std::string& tag, const Box& region) {
    if (!scene.knows_tag(tag)) throw ArgumentError("unknown tag: " + tag);
    int n = 0;
    scene.visit([&](const Shape& s, const Affine& outer) {
        if (s.kind != ShapeKind::Group && s.has_tag(tag) && region.contains(s.bounds(outer))) ++n;
    });
    return n;
}

enum class Measure {
    Auto,  // length for lines/polylines, radius for circles
    Angle, // line direction in radians, range (-pi, pi]
};

// Per-shape geometric measure of every shape carrying `tag`, in paint order.
// Measures are taken in device space so transforms are observed.
inline std::vector<double> measure_tagged(const Scene& scene, const std::string& tag,
                                          Measure measure = Measure::Auto) {
    if (!scene.knows_tag(tag)) throw ArgumentError("unknown tag: " + tag);
    std::vector<double> out;
    scene.visit([&](const Shape& s, const Affine& outer) {
        if (s.kind == ShapeKind::Group || !s.has_tag(tag)) return;
        const Affine t = outer.compose(s.transform);
        switch (s.kind) {
        case ShapeKind::Line: {
            const Vec2 a = t.apply(s.points[0]), b = t.apply(s.points[1]);
            if (measure == Measure::Angle) {
                out.push_back(std::atan2(b.y - a.y, b.x - a.x));
            } else {
                out.push_back(norm(b - a));
            }
            break;
        }
        case ShapeKind::Polyline: {
            if (measure == Measure::Angle)
                throw ArgumentError("angle measure requires line shapes; tag: " + tag);
            double len = 0.0;
            for (std::size_t i = 1; i < s.points.size(); ++i)
                len += norm(t.apply(s.points[i]) - t.apply(s.points[i - 1]));
            out.push_back(len);
            break;
        }
        case ShapeKind::Circle:
            if (measure == Measure::Angle)
                throw ArgumentError("angle measure requires line shapes; tag: " + tag);
            out.push_back(s.radius * t.uniform_scale());
            break;
        default:
            throw ArgumentError("tag maps to unmeasurable shape kind: " + tag);
        }
    });
    return out;
}

// Device-space endpoints of every line carrying `tag`; used for collinearity
// checks where a scalar measure is not enough.
inline std::vector<std::pair<Vec2, Vec2>> tagged_line_endpoints(const Scene& scene,
                                                                const std::string& tag) {
    if (!scene.knows_tag(tag)) throw ArgumentError("unknown tag: " + tag);
    std::vector<std::pair<Vec2, Vec2>> out;
    scene.visit([&](const Shape& s, const Affine& outer) {
        if (s.kind != ShapeKind::Line || !s.has_tag(tag)) return;
        const Affine t = outer.compose(s.transform);
        out.emplace_back(t.apply(s.points[0]), t.apply(s.points[1]));
    });
    return out;
}

} // namespace cfbench
