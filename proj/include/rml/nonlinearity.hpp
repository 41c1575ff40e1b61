#pragma once

// Absorption nonlinearities with their atom-capacity thresholds.
//
//   ChernSimonsScalar      g(t) = e^t (e^t - 1)   capacity 2*pi
//   ExpMinusOne            g(t) = e^t - 1         capacity 4*pi
//   TwoExpMinusOneShifted  g(t) = 2 (e^t - 1)     capacity 4*pi, datum f - 2
//
// The third kind is the added-equation device: the caller passes f and the
// solver forms f - 2 internally.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rml {

enum class NonlinearityKind {
    ChernSimonsScalar,
    ExpMinusOne,
    TwoExpMinusOneShifted,
};

class Nonlinearity {
public:
    explicit Nonlinearity(NonlinearityKind kind) : kind_(kind) {}

    NonlinearityKind kind() const { return kind_; }

    double atom_capacity() const {
        return kind_ == NonlinearityKind::ChernSimonsScalar
                   ? 2.0 * std::numbers::pi
                   : 4.0 * std::numbers::pi;
    }

    double source_offset() const {
        return kind_ == NonlinearityKind::TwoExpMinusOneShifted ? -2.0 : 0.0;
    }

    // fastest exponential growth rate of g; bounds the overflow-safe iterate
    // range as 700 / rate
    double max_growth_rate() const {
        return kind_ == NonlinearityKind::ChernSimonsScalar ? 2.0 : 1.0;
    }

    double g(double t) const {
        switch (kind_) {
        case NonlinearityKind::ChernSimonsScalar:
            // e^{2t} - e^t without cancellation near 0
            return std::expm1(2.0 * t) - std::expm1(t);
        case NonlinearityKind::ExpMinusOne:
            return std::expm1(t);
        case NonlinearityKind::TwoExpMinusOneShifted:
            return 2.0 * std::expm1(t);
        }
        return 0.0;
    }

    double gprime(double t) const {
        switch (kind_) {
        case NonlinearityKind::ChernSimonsScalar:
            return 2.0 * std::exp(2.0 * t) - std::exp(t);
        case NonlinearityKind::ExpMinusOne:
            return std::exp(t);
        case NonlinearityKind::TwoExpMinusOneShifted:
            return 2.0 * std::exp(t);
        }
        return 0.0;
    }

    std::string_view name() const {
        switch (kind_) {
        case NonlinearityKind::ChernSimonsScalar: return "chern_simons_scalar";
        case NonlinearityKind::ExpMinusOne: return "exp_minus_one";
        case NonlinearityKind::TwoExpMinusOneShifted: return "two_exp_minus_one_shifted";
        }
        return "?";
    }

    static Nonlinearity parse(std::string_view s) {
        if (s == "chern_simons_scalar")
            return Nonlinearity(NonlinearityKind::ChernSimonsScalar);
        if (s == "exp_minus_one")
            return Nonlinearity(NonlinearityKind::ExpMinusOne);
        if (s == "two_exp_minus_one_shifted")
            return Nonlinearity(NonlinearityKind::TwoExpMinusOneShifted);
        throw std::invalid_argument("unknown nonlinearity kind: " + std::string(s));
    }

private:
    NonlinearityKind kind_;
};

} // namespace rml
