#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solgrowth/automaton.hpp"
#include "solgrowth/sol_language.hpp"
#include "solgrowth/solgroup.hpp"

namespace solgrowth {

/// Exact sphere sizes of the Cayley graph for a symmetrized generating set.
struct SphereCounts {
    std::int64_t trace = 0;
    int radius = 0;
    std::vector<std::int64_t> counts;      // counts[r] = elements at distance r
    std::vector<GroupWord> generators;     // as given, before symmetrization
};

/// Breadth-first enumeration of the ball of the given radius; every
/// generator (and its inverse) counts as one step.
SphereCounts ballBFS(std::int64_t trace, const std::vector<GroupWord>& generators,
                     int radius, std::size_t maxElements = 50000000);

/// Minimum xSize over the congruence class of x modulo (1 - T z + z^2),
/// by bounded search over candidate representatives.
std::int64_t minSizeOverClass(const XElement& x, std::int64_t trace);

/// Closed-form rational growth series of the index-2 Sol lattice with
/// monodromy trace 2*halfTrace, generators {a, t a t^-1, t}; transcribed
/// from a single exponent table.
RationalSeries parrySeries(std::int64_t halfTrace);

struct SeriesComparison {
    std::vector<std::int64_t> expected;    // series coefficients
    std::vector<std::int64_t> observed;    // sphere counts
    std::vector<std::int64_t> diff;        // observed - expected
    bool exactMatch = false;
    bool recurrenceHolds = false;          // counts beyond numerator degree
    std::string matchedConvention;         // "sphere", "ball" or "none"
};

/// Coefficient-by-coefficient comparison; if the sphere convention fails,
/// the ball convention (cumulative sums, a 1/(1-z) factor) is tried and
/// reported.
SeriesComparison compareSeries(const RationalSeries& s, const SphereCounts& counts);

std::string sphereCountsCsv(const SphereCounts& counts);

}  // namespace solgrowth
