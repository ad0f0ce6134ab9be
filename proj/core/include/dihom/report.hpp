#pragma once

#include "dihom/bigint.hpp"

#include <optional>
#include <string>

namespace dihom {

/// A side of an inequality: exact when the value is rational, otherwise a
/// binary64 approximation of an irrational quantity.
struct Quantity {
    std::optional<Rational> exact;
    double approx = 0.0;

    static Quantity of(const Rational& value);
    static Quantity of(const BigCount& value);
    static Quantity of_float(double value);

    bool is_exact() const { return exact.has_value(); }
    std::string to_string() const;
};

enum class Relation {
    LessEq, // lhs <= rhs
    Equal,  // lhs == rhs
};

/// Both sides of one inequality (or identity) on one instance.
///
/// `holds` is decided in exact arithmetic whenever `certified` is set, even
/// if a side is only displayed as a float (e.g. a square root compared by
/// squaring both sides).
struct BoundReport {
    std::string label;
    Quantity lhs;
    Quantity rhs;
    bool holds = false;
    bool certified = false;
    Relation relation = Relation::LessEq;

    Quantity slack() const;
};

/// Exact report; holds and certified are derived.
BoundReport make_report(std::string label, const Rational& lhs, const Rational& rhs,
                        Relation relation = Relation::LessEq);

inline constexpr double kGuardBand = 1.0 / (1u << 30);

} // namespace dihom
