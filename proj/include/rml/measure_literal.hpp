#pragma once

// Textual measure literals used by scenario configs and the `reduce`
// subcommand:
//
//   diffuse = uniform:<c> | gaussian:<cx>,<cy>,<sigma>,<mass> | none
//   atoms   = [[x, y, mass], ...]
//
// Masses (and the gaussian mass) accept exact "<q>pi" multiples.  Printing
// uses shortest round-trip formatting, so parse(print(m)) reproduces the
// same doubles bit for bit.

#include <string>
#include <string_view>
#include <vector>

#include "rml/measure.hpp"

namespace rml {

// "<q>pi" -> q * pi (q decimal), otherwise a plain decimal
double parse_mass(std::string_view text);
// prints "<q>pi" when mass/pi round-trips exactly, else a plain decimal
std::string format_mass(double mass);

std::string format_double(double v);  // shortest round-trip

struct MeasureSpec {
    std::string diffuse = "none";
    std::vector<Atom> atoms;

    bool is_zero() const { return diffuse == "none" && atoms.empty(); }
    FiniteMeasure realize(const Domain& dom) const;
    std::string str() const;

    // accepts "diffuse=...; atoms=[...]" (either part optional) or a bare
    // "atoms=[...]" / diffuse spec
    static MeasureSpec parse(std::string_view text);
    static MeasureSpec from_measure(const FiniteMeasure& m,
                                    std::string diffuse_literal);
};

} // namespace rml
