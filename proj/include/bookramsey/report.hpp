#pragma once

#include "bookramsey/bounds.hpp"
#include "bookramsey/inequality.hpp"
#include "bookramsey/search.hpp"

#include <string>
#include <string_view>

namespace bookramsey {

// Text documents. Every document is line oriented ("key: value"); lines
// starting with '#' are header comments and are skipped by the parsers.

inline constexpr int certificate_format_version = 1;

// Fixed field order: format-version, spec, n-vertices, witness-hex,
// red-pages, blue-pages, statement. A color without any edge is written as
// "0 no-base".
std::string format_certificate(const LowerBoundCertificate& cert);
LowerBoundCertificate parse_certificate(std::string_view text);

std::string format_book(const BookMeasurement& book);
std::string format_mc_report(const MonteCarloReport& report);
std::string format_search_outcome(const SearchOutcome& outcome);
std::string format_exhaustive(const ExhaustiveVerdict& verdict);
std::string format_interval_certificate(const IntervalCertificate& cert);

// CSV with header alpha,random_lb,mid_ub,three_block_lb,best_lower,best_upper,regime;
// undefined curve values are left empty. steps >= 2 evenly spaced rows, both ends included.
std::string bounds_csv(double alpha_min, double alpha_max, int steps);

// Shortest decimal that parses back to the same double.
std::string format_real(double value);

} // namespace bookramsey
