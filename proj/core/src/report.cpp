#include "dihom/report.hpp"

#include <cstdio>

namespace dihom {

Quantity Quantity::of(const Rational& value) { return Quantity{value, value.get_d()}; }

Quantity Quantity::of(const BigCount& value) { return of(Rational(value)); }

Quantity Quantity::of_float(double value) { return Quantity{std::nullopt, value}; }

std::string Quantity::to_string() const
{
    if (exact)
        return dihom::to_string(*exact);
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", approx);
    return buffer;
}

Quantity BoundReport::slack() const
{
    if (lhs.exact && rhs.exact)
        return Quantity::of(Rational(*rhs.exact - *lhs.exact));
    return Quantity::of_float(rhs.approx - lhs.approx);
}

BoundReport make_report(std::string label, const Rational& lhs, const Rational& rhs, Relation relation)
{
    BoundReport r;
    r.label = std::move(label);
    r.lhs = Quantity::of(lhs);
    r.rhs = Quantity::of(rhs);
    r.relation = relation;
    r.holds = relation == Relation::LessEq ? lhs <= rhs : lhs == rhs;
    r.certified = true;
    return r;
}

} // namespace dihom
