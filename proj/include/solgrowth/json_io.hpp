#pragma once

#include <string>

#include "solgrowth/automaton.hpp"
#include "solgrowth/oracle.hpp"

namespace solgrowth {

/// {tapes, alphabet, weights, states, start, finals, transitions:
///  [{from, label:[...], to}]} — load(store(m)) is bit-exact.
std::string automatonToJson(const MultiTapeAutomaton& m);
MultiTapeAutomaton automatonFromJson(const std::string& text);

std::string seriesToJson(const RationalSeries& s);
RationalSeries seriesFromJson(const std::string& text);

std::string comparisonToJson(const SeriesComparison& c);

/// {error, code, ...} envelope for CLI failures.
std::string errorJson(const std::string& code, const std::string& message,
                      const std::string& stateEstimate = "");

}  // namespace solgrowth
