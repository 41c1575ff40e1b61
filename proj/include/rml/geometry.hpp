#pragma once

#include <cmath>
#include <stdexcept>

namespace rml {

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point&, const Point&) = default;
};

inline double dist(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Rectangle [x0, x0+width] x [y0, y0+height] with uniform node spacing h and
// the log-kernel scale d >= diam of the rectangle.
class Domain {
public:
    Domain(Point origin, double width, double height, double h, double d);

    static Domain unit_square(double h, double d = 1.5) {
        return Domain({0.0, 0.0}, 1.0, 1.0, h, d);
    }

    Point origin() const { return origin_; }
    double width() const { return width_; }
    double height() const { return height_; }
    double h() const { return h_; }
    double d() const { return d_; }
    double diameter() const { return std::hypot(width_, height_); }

    // nodes per direction: cols() in x, rows() in y
    int cols() const { return nx_ + 1; }
    int rows() const { return ny_ + 1; }
    int node_count() const { return cols() * rows(); }

    Point node(int i, int j) const {
        return {origin_.x + j * h_, origin_.y + i * h_};
    }
    int index(int i, int j) const { return i * cols() + j; }

    bool contains(const Point& p) const {
        return p.x >= origin_.x && p.x <= origin_.x + width_ &&
               p.y >= origin_.y && p.y <= origin_.y + height_;
    }
    // distance from p to the boundary of the rectangle (negative outside)
    double boundary_distance(const Point& p) const;

    friend bool operator==(const Domain& a, const Domain& b) {
        return a.origin_ == b.origin_ && a.width_ == b.width_ &&
               a.height_ == b.height_ && a.h_ == b.h_ && a.d_ == b.d_;
    }

private:
    Point origin_;
    double width_, height_, h_, d_;
    int nx_, ny_;
};

} // namespace rml
