#pragma once

#include <string>

#include "gradedq/graded_poly.hpp"

namespace gradedq {

/// Parses a scalar expression over x1..xn: integers, + - * / ^, parentheses.
/// Throws ParseError with the offending position.
RationalFunction parse_scalar(const std::string& text, int nvars);

/// Parses a graded expression over a chart: scalars plus generator names,
/// products written with explicit '*'. Division only by degree-0 factors.
GradedPoly parse_graded(const std::string& text, const ChartPtr& chart);

}  // namespace gradedq
