#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "solgrowth/checked.hpp"

namespace solgrowth {

/// Padding symbol used in transition labels; never a real letter.
inline const std::string kPad = "$";

/// Per-tape letter sequences; words[i] is the word on tape i.
using WordTuple = std::vector<std::vector<std::string>>;

struct Transition {
    int from;
    std::vector<std::string> label;  // one entry per tape; letter or "$"
    int to;
    bool operator<(const Transition& o) const {
        if (from != o.from) return from < o.from;
        if (label != o.label) return label < o.label;
        return to < o.to;
    }
    bool operator==(const Transition& o) const {
        return from == o.from && label == o.label && to == o.to;
    }
};

/// Padded, weighted, multi-tape finite state automaton.  Once a tape goes
/// to "$" on a path it stays "$" (padding persistence); all construction
/// functions in this module preserve that invariant structurally.
struct MultiTapeAutomaton {
    int tapes = 1;
    std::vector<std::string> alphabet;             // sorted, without "$"
    std::map<std::string, std::int64_t> weights;   // letter -> positive weight
    int stateCount = 0;
    int start = 0;
    std::set<int> finals;
    std::vector<Transition> transitions;
    bool deterministic = false;

    bool hasLetter(const std::string& l) const;
    std::int64_t letterWeight(const std::string& l) const;  // "$" weighs 0
};

/// Integer-coefficient numerator/denominator pair; coefficient i of each
/// vector is the z^i coefficient.  Denominator constant term is 1.
struct RationalSeries {
    std::vector<std::int64_t> numerator;
    std::vector<std::int64_t> denominator;
};

enum class CombineMode { Union, Intersection, Concatenation };

bool accepts(const MultiTapeAutomaton& m, const WordTuple& words);

MultiTapeAutomaton combine(CombineMode mode, const MultiTapeAutomaton& m1,
                           const MultiTapeAutomaton& m2);

MultiTapeAutomaton determinize(const MultiTapeAutomaton& m);

/// Complement within the set of validly padded tuples.
MultiTapeAutomaton complementDet(const MultiTapeAutomaton& m);

/// Letterwise reversal of every tape, padding re-normalized to the end.
/// Multi-tape reversal resynchronizes tapes whose lengths differ; runs
/// needing a shift larger than maxDelay are not represented (the relation
/// in general is not closed under reversal for unbounded shifts).
MultiTapeAutomaton reverse(const MultiTapeAutomaton& m, int maxDelay = 12);

/// Existential projection: drops the given tape (0-based).
MultiTapeAutomaton projectExists(const MultiTapeAutomaton& m, int tape);

/// Lift a 1-tape language to `totalTapes` tapes: accepted tuples are those
/// whose `position` component lies in L(m), other tapes unconstrained.
MultiTapeAutomaton liftTape(const MultiTapeAutomaton& m, int totalTapes, int position);

/// {(.., w_i, ..) : (.., u w_i, ..) in L(m)} — strip a fixed prefix from one tape.
MultiTapeAutomaton prependOnTape(const MultiTapeAutomaton& m, int tape,
                                 const std::vector<std::string>& word);

/// {(.., w_i, ..) : (.., w_i v, ..) in L(m)} — strip a fixed suffix from one tape.
MultiTapeAutomaton appendOnTape(const MultiTapeAutomaton& m, int tape,
                                const std::vector<std::string>& word);

/// Keep only states both reachable and co-reachable.
MultiTapeAutomaton trim(const MultiTapeAutomaton& m);

/// Deterministic breadth-first renumbering from the start state.
MultiTapeAutomaton canonicalize(const MultiTapeAutomaton& m);

/// Language-preserving state reduction of a deterministic automaton
/// (partition refinement); keeps product constructions tractable.
MultiTapeAutomaton minimizeDet(const MultiTapeAutomaton& m);

/// Structural check of the padding-persistence condition.
bool paddingPersistent(const MultiTapeAutomaton& m);

/// 2-tape automaton for pairs (w1,w2) with ||w1|| > ||w2|| that K-fellow
/// travel under the weighting; the running size difference is the state.
MultiTapeAutomaton fellowTravelerAutomaton(std::int64_t K,
                                           const std::map<std::string, std::int64_t>& weights,
                                           const std::vector<std::string>& alphabet);

/// 2-tape automaton for pairs (w1,w2) with w1 strictly short-lex below w2;
/// the letter order is the order of `alphabet`.
MultiTapeAutomaton shortlexAutomaton(const std::vector<std::string>& alphabet,
                                     const std::map<std::string, std::int64_t>& weights);

/// Fellow-traveler / short-lex pruning pipeline: given L, a sublanguage
/// Lprime containing minimal representatives, a symmetric 2-tape acceptor R
/// and the constant K, produce a 1-tape automaton with one minimal word per
/// partition class.  Output is only meaningful when the falsification by
/// fellow traveler hypotheses hold for these inputs.
MultiTapeAutomaton minimalCrossSection(const MultiTapeAutomaton& L,
                                       const MultiTapeAutomaton& Lprime,
                                       const MultiTapeAutomaton& R, std::int64_t K);

/// Rational growth series of a deterministic 1-tape automaton: counts
/// accepted words by total weight.
RationalSeries growthSeries(const MultiTapeAutomaton& m);

std::vector<std::int64_t> seriesCoefficients(const RationalSeries& s, int count);

/// All accepted tuples in which every tape has weight <= maxWeightPerTape.
std::set<WordTuple> enumerateLanguage(const MultiTapeAutomaton& m,
                                      std::int64_t maxWeightPerTape,
                                      std::size_t maxCount = 2000000);

std::int64_t tupleWeight(const MultiTapeAutomaton& m, const std::vector<std::string>& word);

}  // namespace solgrowth
