#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solgrowth/automaton.hpp"
#include "solgrowth/solgroup.hpp"

namespace solgrowth {

/// Letter (c,k) of the layered alphabet: k=2 letters form the tail/head,
/// k=+-1 letters the center.  Weight is |c|+|k|.
struct SolLetter {
    int c = 0;
    int k = 1;
    bool operator==(const SolLetter& o) const { return c == o.c && k == o.k; }
    std::int64_t weight() const;
    std::string label() const;  // automaton label "c:k"
    static SolLetter fromLabel(const std::string& s);
};

using SolWord = std::vector<SolLetter>;

/// "(c,k)(c,k)..." round-trip syntax.
SolWord parseSolWord(const std::string& text);
std::string solWordToString(const SolWord& w);

/// Conditions: at least one k=+-1 letter; all middle letters share k; a -1
/// center has length >= 2; strict additionally: first/last (c,2) letters
/// have c != 0.
bool validSolWord(const SolWord& w, bool strict);
bool fitsAlphabet(const SolWord& w, int n);

std::int64_t solWordWeight(const SolWord& w);
std::vector<std::string> solWordLabels(const SolWord& w);

int solTailLen(const SolWord& w);  // leading (c,2) letters
int solHeadLen(const SolWord& w);  // trailing (c,2) letters

/// 1-tape weighted automaton for the layered language at coefficient bound
/// n; strict excludes words starting/ending with (0,2).
MultiTapeAutomaton buildLn(int n, bool strict);

/// Size-preserving encoding of a layered word as (Laurent polynomial,
/// height): a +1 center of length h+1 yields height h, a -1 center of
/// length h+1 yields height -h; tail/center/head occupy the matching
/// degree windows.
XElement psi(const SolWord& w);

/// The unique strict preimage with coefficients bounded by n.
SolWord psiInverse(const XElement& x, int n);

/// 2-tape automaton accepting pairs of non-strict words with congruent
/// encodings and exactly equal tail and head lengths; built by running
/// polynomial long division right-to-left and reversing.
MultiTapeAutomaton acceptorRnPrime(int n, std::int64_t trace);

/// 2-tape acceptor for the class partition of the strict language: equal
/// classes with tail/head length differences at most i, assembled from
/// acceptorRnPrime by (0,2)-block padding on either side of either word.
MultiTapeAutomaton acceptorRni(int n, int i, std::int64_t trace);

/// Max absolute partial sum of |c1_j| - |c2_j| over the encoding
/// coefficients ordered by degree.
std::int64_t divergence(const SolWord& w1, const SolWord& w2);

/// Constants of the fellow-traveler argument for a given trace and
/// coefficient bound n.
struct SolConstants {
    std::int64_t trace;
    std::int64_t B;              // quotient coefficient bound, 10|T|
    std::int64_t C;              // remainder bound 2n + 2n(|T|+2) for this n
    std::int64_t L;              // head/tail drift bound (|T|+2)B
    std::int64_t K;              // divergence bound (|T|+2)(3B+4)+8L+1
    std::int64_t N;              // enlarged coefficient bound 5|T|+(|T|+2)B
    std::int64_t fellowConstant; // K+(N+6)L
};
SolConstants solConstants(std::int64_t trace, int n);

/// One greedy pass of the bounded shrinking moves: returns an equivalent
/// strictly smaller word respecting the drift/divergence bounds, or the
/// input unchanged if no bounded move improves it.
SolWord shrinkRepresentative(const SolWord& w, const SolConstants& consts);

struct SolPipelineOverrides {
    int n;
    std::int64_t K;
    int i;
};

struct SolPipelineOutcome {
    bool refused = false;
    std::string refusalReason;
    std::string stateEstimate;  // decimal string, set when refused
    bool theoremScale = false;
    MultiTapeAutomaton crossSection;
    RationalSeries series;
};

/// Full growth-series pipeline: language, acceptor, fellow-traveler
/// pruning, series.  Without overrides the theorem-scale constants are
/// used, whose automata are far beyond any practical state budget; the
/// result is then a refusal carrying the state-count estimate.
SolPipelineOutcome solPipeline(std::int64_t trace,
                               const std::optional<SolPipelineOverrides>& overrides = {});

/// The state-count estimate used for refusals.
std::string pipelineStateEstimate(std::int64_t trace, int n, std::int64_t K, int i);

}  // namespace solgrowth
