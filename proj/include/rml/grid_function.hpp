#pragma once

// Dirichlet grid field: node values on the domain grid, boundary ring
// identically zero.

#include <iosfwd>
#include <string>
#include <vector>

#include "rml/geometry.hpp"

namespace rml {

class GridFunction {
public:
    explicit GridFunction(Domain domain)
        : domain_(domain), v_(domain.node_count(), 0.0) {}
    GridFunction(Domain domain, std::vector<double> values);

    const Domain& domain() const { return domain_; }
    int rows() const { return domain_.rows(); }
    int cols() const { return domain_.cols(); }
    std::size_t size() const { return v_.size(); }

    double operator()(int i, int j) const { return v_[domain_.index(i, j)]; }
    double& at(int i, int j) { return v_[domain_.index(i, j)]; }
    const std::vector<double>& values() const { return v_; }
    std::vector<double>& values() { return v_; }
    const double* data() const { return v_.data(); }
    double* data() { return v_.data(); }

    void zero_boundary();
    bool boundary_is_zero() const;

    double max_abs() const;
    double min_value() const;
    double max_value() const;
    // h^2 * sum |v| over all nodes
    double l1_norm() const;
};

// discrete L1 distance h^2 * sum |u1 - u2|; grids must match
double l1_gap(const GridFunction& u1, const GridFunction& u2);

// plain binary dump: magic "RMLGRID1", then rows, cols as int64 LE, then
// h, origin.x, origin.y as float64 LE, then rows*cols float64 LE row-major
void write_grid_binary(const GridFunction& g, const std::string& path);
GridFunction read_grid_binary(const std::string& path, double d_hint = -1.0);

// CSV export: header x,y,value then one row per node
void write_grid_csv(const GridFunction& g, std::ostream& out);

} // namespace rml
