#include "rml/measure_literal.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rml {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view s, const char* what) {
    s = trim(s);
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument(std::string("cannot parse ") + what + ": '" +
                                    std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

// [[a, b, c], [d, e, f]] -> {{a,b,c},{d,e,f}} (as raw strings)
std::vector<std::vector<std::string_view>> parse_nested_list(std::string_view s,
                                                             const char* what) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument(std::string(what) + " must be a [...] list");
    s = trim(s.substr(1, s.size() - 2));
    std::vector<std::vector<std::string_view>> rows;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i]))))
            ++i;
        if (i >= s.size())
            break;
        if (s[i] != '[')
            throw std::invalid_argument(std::string(what) + ": expected '['");
        std::size_t close = s.find(']', i);
        if (close == std::string_view::npos)
            throw std::invalid_argument(std::string(what) + ": missing ']'");
        std::vector<std::string_view> fields;
        for (auto f : split(s.substr(i + 1, close - i - 1), ','))
            fields.push_back(trim(f));
        rows.push_back(std::move(fields));
        i = close + 1;
    }
    return rows;
}

} // namespace

double parse_mass(std::string_view text) {
    std::string_view s = trim(text);
    if (s.size() > 2 && (s.ends_with("pi") || s.ends_with("PI"))) {
        double q = parse_double(s.substr(0, s.size() - 2), "pi multiple");
        return q * std::numbers::pi;
    }
    if (s == "pi")
        return std::numbers::pi;
    return parse_double(s, "mass");
}

std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

std::string format_mass(double mass) {
    double q = mass / std::numbers::pi;
    if (std::isfinite(q) && q * std::numbers::pi == mass)
        return format_double(q) + "pi";
    return format_double(mass);
}

FiniteMeasure MeasureSpec::realize(const Domain& dom) const {
    FiniteMeasure out = FiniteMeasure::zero(dom);
    std::string_view d = diffuse;
    if (d != "none" && !d.empty()) {
        if (d.starts_with("uniform:")) {
            out = FiniteMeasure::uniform(dom, parse_double(d.substr(8), "uniform density"));
        } else if (d.starts_with("gaussian:")) {
            auto fields = split(d.substr(9), ',');
            if (fields.size() != 4)
                throw std::invalid_argument(
                    "gaussian literal needs cx,cy,sigma,mass");
            out = FiniteMeasure::gaussian(
                dom, {parse_double(fields[0], "cx"), parse_double(fields[1], "cy")},
                parse_double(fields[2], "sigma"), parse_mass(fields[3]));
        } else {
            throw std::invalid_argument("unknown diffuse literal: '" +
                                        std::string(d) + "'");
        }
    }
    if (atoms.empty())
        return out;
    return {dom, out.diffuse(), atoms};
}

std::string MeasureSpec::str() const {
    std::string s;
    if (diffuse != "none" && !diffuse.empty())
        s += "diffuse=" + diffuse;
    if (!atoms.empty() || s.empty()) {
        if (!s.empty())
            s += "; ";
        s += "atoms=[";
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            if (k)
                s += ", ";
            s += "[" + format_double(atoms[k].location.x) + ", " +
                 format_double(atoms[k].location.y) + ", " +
                 format_mass(atoms[k].mass) + "]";
        }
        s += "]";
    }
    return s;
}

MeasureSpec MeasureSpec::parse(std::string_view text) {
    MeasureSpec spec;
    for (std::string_view part : split(text, ';')) {
        part = trim(part);
        if (part.empty())
            continue;
        std::size_t eq = part.find('=');
        std::string_view key = eq == std::string_view::npos ? std::string_view()
                                                            : trim(part.substr(0, eq));
        std::string_view val = eq == std::string_view::npos ? part
                                                            : trim(part.substr(eq + 1));
        if (key == "diffuse") {
            spec.diffuse = std::string(val);
        } else if (key == "atoms") {
            for (const auto& row : parse_nested_list(val, "atoms")) {
                if (row.size() != 3)
                    throw std::invalid_argument("atom entries are [x, y, mass]");
                spec.atoms.push_back({{parse_double(row[0], "atom x"),
                                       parse_double(row[1], "atom y")},
                                      parse_mass(row[2])});
            }
        } else if (key.empty()) {
            // bare value: a diffuse spec
            spec.diffuse = std::string(val);
        } else {
            throw std::invalid_argument("unknown measure literal key: '" +
                                        std::string(key) + "'");
        }
    }
    return spec;
}

MeasureSpec MeasureSpec::from_measure(const FiniteMeasure& m,
                                      std::string diffuse_literal) {
    MeasureSpec spec;
    spec.diffuse = std::move(diffuse_literal);
    spec.atoms = m.atoms();
    return spec;
}

} // namespace rml
