#include "solgrowth/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace solgrowth {

namespace {

struct ElementHash {
    std::size_t operator()(const GroupElement& g) const {
        std::size_t h = std::hash<std::int64_t>()(g.x[0]);
        h ^= std::hash<std::int64_t>()(g.x[1]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<std::int64_t>()(g.h) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

SphereCounts ballBFS(std::int64_t trace, const std::vector<GroupWord>& generators,
                     int radius, std::size_t maxElements) {
    GroupParams params(trace);
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    if (generators.empty()) throw std::invalid_argument("generator list is empty");

    std::vector<GroupElement> steps;
    for (const GroupWord& w : generators) {
        GroupElement g = toGroupElement(evalWord(w), params);
        GroupElement gi = invert(g, params);
        if (std::find(steps.begin(), steps.end(), g) == steps.end()) steps.push_back(g);
        if (std::find(steps.begin(), steps.end(), gi) == steps.end()) steps.push_back(gi);
    }

    SphereCounts out;
    out.trace = trace;
    out.radius = radius;
    out.generators = generators;

    std::unordered_set<GroupElement, ElementHash> seen;
    std::vector<GroupElement> frontier{GroupElement{}};
    seen.insert(GroupElement{});
    out.counts.push_back(1);
    for (int r = 1; r <= radius; ++r) {
        std::vector<GroupElement> next;
        for (const GroupElement& g : frontier)
            for (const GroupElement& s : steps) {
                GroupElement h = compose(g, s, params);
                if (seen.insert(h).second) {
                    next.push_back(h);
                    if (seen.size() > maxElements)
                        throw ResourceLimitError("ball enumeration exceeded element budget");
                }
            }
        out.counts.push_back(static_cast<std::int64_t>(next.size()));
        frontier = std::move(next);
    }
    return out;
}

std::int64_t minSizeOverClass(const XElement& x, std::int64_t trace) {
    GroupParams params(trace);
    const std::int64_t at = trace < 0 ? -trace : trace;
    const std::int64_t coeffMax = 5 * at - 1;  // minimal representatives stay below 5|T|
    const std::int64_t qMax = 10 * at;
    const std::int64_t S = xSize(x);
    const std::int64_t h = x.height;

    int lo, hi;
    if (h >= 0) {
        lo = static_cast<int>(-S / 2 - 1);
        hi = static_cast<int>(h + S / 2 + 1);
    } else {
        lo = static_cast<int>(h - S / 2 - 1);
        hi = static_cast<int>(S / 2 + 1);
    }

    std::int64_t best = S;
    const int len = hi - lo + 1;
    std::vector<std::int64_t> chosen(len, 0);

    // Candidates t' = t + (1 - T z + z^2) q; walking degrees upward, the
    // quotient q obeys q_d = (t'_d - t_d) + T q_{d-1} - q_{d-2} and must
    // return to zero at the top two positions.
    auto target = [&](int pos) { return x.utype.coeff(lo + pos); };

    auto finish = [&](const std::vector<std::int64_t>& coeffs) {
        LaurentPoly p;
        for (int i = 0; i < len; ++i)
            if (coeffs[i] != 0) p.setCoeff(lo + i, coeffs[i]);
        std::int64_t size = xSize({p, h});
        if (size < best) best = size;
    };

    auto dfs = [&](auto&& self, int pos, std::int64_t q1, std::int64_t q2,
                   std::int64_t cost) -> void {
        if (cost >= best) return;
        if (pos == len - 2) {
            // The quotient must vanish at the last two positions, which
            // forces both remaining coefficients:
            //   0 = (c1 - t_pos) + T q1 - q2,  0 = (c2 - t_{pos+1}) - q1.
            std::int64_t c1 = target(pos) - trace * q1 + q2;
            std::int64_t c2 = target(pos + 1) + q1;
            chosen[pos] = c1;
            chosen[pos + 1] = c2;
            finish(chosen);
            return;
        }
        for (std::int64_t c = -coeffMax; c <= coeffMax; ++c) {
            std::int64_t q = (c - target(pos)) + trace * q1 - q2;
            if (q < -qMax || q > qMax) continue;
            std::int64_t a = c < 0 ? -c : c;
            if (cost + a >= best) continue;
            chosen[pos] = c;
            self(self, pos + 1, q, q1, cost + a);
        }
        chosen[pos] = 0;
    };
    if (len >= 2) dfs(dfs, 0, 0, 0, 0);
    return best;
}

SeriesComparison compareSeries(const RationalSeries& s, const SphereCounts& counts) {
    SeriesComparison rep;
    const int count = static_cast<int>(counts.counts.size());
    rep.expected = seriesCoefficients(s, count);
    rep.observed = counts.counts;
    rep.diff.resize(count);
    bool sphereMatch = true;
    for (int i = 0; i < count; ++i) {
        rep.diff[i] = checked_sub(rep.observed[i], rep.expected[i]);
        if (rep.diff[i] != 0) sphereMatch = false;
    }
    rep.exactMatch = sphereMatch;
    if (sphereMatch) {
        rep.matchedConvention = "sphere";
    } else {
        // Ball convention: the series counts |B_r|, cumulative sums of spheres.
        bool ballMatch = true;
        std::int64_t acc = 0;
        for (int i = 0; i < count; ++i) {
            acc = checked_add(acc, rep.observed[i]);
            if (acc != rep.expected[i]) {
                ballMatch = false;
                break;
            }
        }
        rep.matchedConvention = ballMatch ? "ball" : "none";
    }

    // Check the denominator-induced linear recurrence on the observed counts
    // past the numerator degree.
    rep.recurrenceHolds = true;
    int numDeg = static_cast<int>(s.numerator.size()) - 1;
    bool checkedAny = false;
    for (int k = numDeg + 1; k < count; ++k) {
        std::int64_t acc = 0;
        for (int j = 0; j < static_cast<int>(s.denominator.size()); ++j) {
            if (k - j < 0) break;
            acc = checked_add(acc, checked_mul(s.denominator[j], rep.observed[k - j]));
        }
        checkedAny = true;
        if (acc != 0) {
            rep.recurrenceHolds = false;
            break;
        }
    }
    if (!checkedAny) rep.recurrenceHolds = false;
    return rep;
}

std::string sphereCountsCsv(const SphereCounts& counts) {
    std::string s = "radius,count\n";
    for (std::size_t r = 0; r < counts.counts.size(); ++r)
        s += std::to_string(r) + "," + std::to_string(counts.counts[r]) + "\n";
    return s;
}

}  // namespace solgrowth
