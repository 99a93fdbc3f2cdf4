#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cuboid {

struct IdentityResult {
    std::string name;
    bool pass = false;
    std::string detail; // empty on success
};

struct IdentityOptions {
    /// When set, the leading numerator coefficient of this closed form is
    /// bumped by one before the suite runs. Used to show the suite can fail.
    std::optional<std::string> corrupt;
};

/// Exact symbolic checks over Q(b, c), in a fixed order:
///   biquadratic, pipeline-{e20,e02,e21,e12,e30,e03},
///   e30-numerator-factorization, discriminant-{c0,c1,c2},
///   split-{c0,c1,c2}-{x,d}, q-minus-one, q-plus-one.
std::vector<IdentityResult> run_identity_suite(const IdentityOptions& opts = {});

} // namespace cuboid
