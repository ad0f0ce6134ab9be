#pragma once

#include "dihom/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dihom {

enum class Inequality {
    Main,
    StarHolder,
    GeomMean,
    Tail,
    Envelope,
    Weighted,
    MvPath,
    Moments,
};

Inequality parse_inequality(std::string_view name);
std::string_view inequality_name(Inequality which);

/// Outcome of a seeded random property suite. Instance i is generated from
/// derive_seed(seed, i), so results do not depend on the worker count.
struct SuiteResult {
    std::string label;
    std::uint64_t seed = 0;
    int instances = 0;
    int checks = 0;
    int violations = 0;
    std::optional<BoundReport> first_violation;
    std::string first_violation_instance;
    /// Largest lhs/rhs over checks with a positive rhs.
    double max_ratio = 0.0;
    /// Tail suite only: largest lhs / sum d^{k-1+|alpha|} 1{d >= Delta}, i.e.
    /// the ratio against the bound without its constant.
    double max_unscaled_tail_ratio = 0.0;

    bool passed() const { return violations == 0; }
};

SuiteResult run_suite(Inequality which, int count, std::uint64_t seed, int workers = 1);

} // namespace dihom
