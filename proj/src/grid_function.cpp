#include "rml/grid_function.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "rml/simd/kernels.hpp"

namespace rml {

static_assert(std::endian::native == std::endian::little,
              "grid dump format assumes a little-endian host");

GridFunction::GridFunction(Domain domain, std::vector<double> values)
    : domain_(domain), v_(std::move(values)) {
    if (static_cast<int>(v_.size()) != domain_.node_count())
        throw std::invalid_argument("grid value size does not match domain");
}

void GridFunction::zero_boundary() {
    const int r = rows(), c = cols();
    for (int j = 0; j < c; ++j) {
        v_[domain_.index(0, j)] = 0.0;
        v_[domain_.index(r - 1, j)] = 0.0;
    }
    for (int i = 0; i < r; ++i) {
        v_[domain_.index(i, 0)] = 0.0;
        v_[domain_.index(i, c - 1)] = 0.0;
    }
}

bool GridFunction::boundary_is_zero() const {
    const int r = rows(), c = cols();
    for (int j = 0; j < c; ++j)
        if (v_[domain_.index(0, j)] != 0.0 || v_[domain_.index(r - 1, j)] != 0.0)
            return false;
    for (int i = 0; i < r; ++i)
        if (v_[domain_.index(i, 0)] != 0.0 || v_[domain_.index(i, c - 1)] != 0.0)
            return false;
    return true;
}

double GridFunction::max_abs() const {
    return simd::active().amax(v_.data(), v_.size());
}

double GridFunction::min_value() const {
    return *std::min_element(v_.begin(), v_.end());
}

double GridFunction::max_value() const {
    return *std::max_element(v_.begin(), v_.end());
}

double GridFunction::l1_norm() const {
    double h = domain_.h();
    return h * h * simd::active().asum(v_.data(), v_.size());
}

double l1_gap(const GridFunction& u1, const GridFunction& u2) {
    if (!(u1.domain() == u2.domain()))
        throw std::invalid_argument("l1_gap: grid mismatch");
    double s = 0.0;
    const double* a = u1.data();
    const double* b = u2.data();
    for (std::size_t i = 0; i < u1.size(); ++i)
        s += std::fabs(a[i] - b[i]);
    double h = u1.domain().h();
    return h * h * s;
}

namespace {
constexpr char kMagic[8] = {'R', 'M', 'L', 'G', 'R', 'I', 'D', '1'};
}

void write_grid_binary(const GridFunction& g, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open for writing: " + path);
    f.write(kMagic, 8);
    std::int64_t rows = g.rows(), cols = g.cols();
    double h = g.domain().h();
    Point o = g.domain().origin();
    f.write(reinterpret_cast<const char*>(&rows), 8);
    f.write(reinterpret_cast<const char*>(&cols), 8);
    f.write(reinterpret_cast<const char*>(&h), 8);
    f.write(reinterpret_cast<const char*>(&o.x), 8);
    f.write(reinterpret_cast<const char*>(&o.y), 8);
    f.write(reinterpret_cast<const char*>(g.data()),
            static_cast<std::streamsize>(g.size() * 8));
    if (!f)
        throw std::runtime_error("write failed: " + path);
}

GridFunction read_grid_binary(const std::string& path, double d_hint) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open: " + path);
    char magic[8];
    f.read(magic, 8);
    if (!f || std::memcmp(magic, kMagic, 8) != 0)
        throw std::runtime_error("not a RMLGRID1 file: " + path);
    std::int64_t rows = 0, cols = 0;
    double h = 0, ox = 0, oy = 0;
    f.read(reinterpret_cast<char*>(&rows), 8);
    f.read(reinterpret_cast<char*>(&cols), 8);
    f.read(reinterpret_cast<char*>(&h), 8);
    f.read(reinterpret_cast<char*>(&ox), 8);
    f.read(reinterpret_cast<char*>(&oy), 8);
    if (!f || rows < 5 || cols < 5 || !(h > 0))
        throw std::runtime_error("corrupt RMLGRID1 header: " + path);
    double width = (cols - 1) * h, height = (rows - 1) * h;
    double d = d_hint > 0 ? d_hint : std::hypot(width, height);
    Domain dom({ox, oy}, width, height, h, d);
    std::vector<double> v(static_cast<std::size_t>(rows * cols));
    f.read(reinterpret_cast<char*>(v.data()),
           static_cast<std::streamsize>(v.size() * 8));
    if (!f)
        throw std::runtime_error("truncated RMLGRID1 payload: " + path);
    return {dom, std::move(v)};
}

void write_grid_csv(const GridFunction& g, std::ostream& out) {
    out << "x,y,value\n";
    char buf[32];
    auto put = [&](double v, char sep) {
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
        out.write(buf, p - buf);
        out.put(sep);
    };
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            Point p = g.domain().node(i, j);
            put(p.x, ',');
            put(p.y, ',');
            put(g(i, j), '\n');
        }
}

} // namespace rml
