#include "rml/geometry.hpp"

#include <string>

namespace rml {
namespace {

int exact_division(double len, double h, const char* what) {
    double q = len / h;
    double r = std::round(q);
    if (std::fabs(q - r) > 1e-9 * std::fabs(q) + 1e-12)
        throw std::invalid_argument(std::string(what) +
                                    " must be an integer multiple of h");
    if (r < 4.0)
        throw std::invalid_argument(std::string(what) + "/h must be >= 4");
    return static_cast<int>(r);
}

} // namespace

Domain::Domain(Point origin, double width, double height, double h, double d)
    : origin_(origin), width_(width), height_(height), h_(h), d_(d) {
    if (!(width > 0) || !(height > 0))
        throw std::invalid_argument("domain sides must be positive");
    if (!(h > 0))
        throw std::invalid_argument("grid spacing must be positive");
    nx_ = exact_division(width, h, "width");
    ny_ = exact_division(height, h, "height");
    if (d < diameter() * (1.0 - 1e-12))
        throw std::invalid_argument("d must be >= the domain diagonal");
}

double Domain::boundary_distance(const Point& p) const {
    double dx = std::min(p.x - origin_.x, origin_.x + width_ - p.x);
    double dy = std::min(p.y - origin_.y, origin_.y + height_ - p.y);
    return std::min(dx, dy);
}

} // namespace rml
