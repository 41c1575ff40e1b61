#pragma once

// Mollification of measures into smooth grid densities and the approximation
// schedules built from them.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rml/measure.hpp"

namespace rml {

enum class MollifierShape { CompactBump, TruncatedGaussian };

struct MollifierFamily {
    MollifierShape shape = MollifierShape::CompactBump;
    double epsilon = 0.1;
};

// kernel-smoothed version of m: purely diffuse, same total mass (to rounding)
// provided every atom sits more than epsilon + 2h inside the domain
FiniteMeasure mollify(const FiniteMeasure& m, const MollifierFamily& family);

// discrete kernel stamp sampled on node offsets, normalized to unit mass;
// exposed for the kernel-normalization tests
std::vector<double> mollifier_stamp(const MollifierFamily& family, double h,
                                    Point subnode_offset, int& radius_out);

struct TestFunction {
    std::string name;
    std::function<double(Point)> value;  // zero on the domain boundary
};

// fixed panel of boundary-vanishing test functions (>= 8 entries)
std::vector<TestFunction> default_test_panel(const Domain& dom);

double integrate_against(const FiniteMeasure& m, const TestFunction& zeta);

// max over the panel of |int zeta d(m1) - int zeta d(m2)|
double weakstar_gap(const FiniteMeasure& m1, const FiniteMeasure& m2,
                    const std::vector<TestFunction>& panel);

struct ApproximationSchedule {
    enum class Kind { Plain, DiagonalOne, DiagonalTwo };
    Kind kind = Kind::Plain;
    std::vector<double> epsilons;      // driving width per term
    std::vector<int> m_index;          // diagonal schedules only
    std::vector<FiniteMeasure> mu_terms;
    std::vector<FiniteMeasure> nu_terms;   // empty for scalar schedules
    FiniteMeasure target_mu;
    std::optional<FiniteMeasure> target_nu;

    bool is_system() const { return !nu_terms.empty(); }
    std::size_t size() const { return mu_terms.size(); }
    static const char* kind_name(Kind k);
};

// terms mollify(m, eps_i) for a strictly decreasing width list with
// min width >= 4h
ApproximationSchedule plain_schedule(const FiniteMeasure& m,
                                     const std::vector<double>& widths,
                                     MollifierShape shape = MollifierShape::CompactBump);

// paired terms (5pi f_{m_n}, 2pi f_n) from a plain unit-mass atom schedule
ApproximationSchedule diagonal_schedule_one(const ApproximationSchedule& f_sched,
                                            const std::vector<int>& m_index);

// paired terms (4pi f_{m_n} + pi f_n, 2pi f_{m_n})
ApproximationSchedule diagonal_schedule_two(const ApproximationSchedule& f_sched,
                                            const std::vector<int>& m_index);

// serialize as a directory of RMLGRID1 measure files plus manifest.txt with
// keys kind, widths, m_index, target_mu, target_nu
void save_schedule(const ApproximationSchedule& s, const std::string& dir);
ApproximationSchedule load_schedule(const std::string& dir, const Domain& dom);

} // namespace rml
