#pragma once

#include <string>
#include <vector>

#include "hopf/io.hpp"

namespace hopf {

struct UnknownDemo : std::runtime_error {
    explicit UnknownDemo(const std::string &name)
        : std::runtime_error("unknown demo '" + name + "'") {}
};

/// Stable demo identifiers, in canonical order.
std::vector<std::string> demo_names();

/// Build a named fixture (with R and θ families where they exist):
///   trivial_z2 / trivial_z3   one-dimensional components over Z/2, Z/3
///   group_algebra2/3          k[Z/n] at trivial grading group
///   sweedler                  the four-dimensional Hopf algebra at π = 1
///   constant_kz3_z2           k[Z/3] in every Z/2 grade, conjugation inverts
///   double_kz2                quantum double of group_algebra2
///   rt_double_kz2             ribbon extension of double_kz2
/// "trivial" is an alias for trivial_z2.
TCoalgData demo(const std::string &name);

}  // namespace hopf
