#include "solgrowth/automaton.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>

namespace solgrowth {

namespace {

using Label = std::vector<std::string>;

constexpr std::size_t kStateBudget = 2000000;

unsigned padMask(const Label& label) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < label.size(); ++i)
        if (label[i] == kPad) mask |= 1u << i;
    return mask;
}

std::vector<Label> labelUniverse(const std::vector<std::string>& alphabet, int tapes) {
    std::vector<std::string> letters = alphabet;
    letters.push_back(kPad);
    std::vector<Label> universe;
    std::vector<std::size_t> pick(tapes, 0);
    while (true) {
        Label label(tapes);
        bool all = true;
        for (int i = 0; i < tapes; ++i) {
            label[i] = letters[pick[i]];
            if (label[i] != kPad) all = false;
        }
        if (!all) universe.push_back(label);
        int i = 0;
        for (; i < tapes; ++i) {
            if (++pick[i] < letters.size()) break;
            pick[i] = 0;
        }
        if (i == tapes) break;
    }
    return universe;
}

std::vector<std::map<Label, std::set<int>>> indexTransitions(const MultiTapeAutomaton& m) {
    std::vector<std::map<Label, std::set<int>>> idx(m.stateCount);
    for (const auto& t : m.transitions) idx[t.from][t.label].insert(t.to);
    return idx;
}

/// State of the delayed-feed reversal simulation: a state of the
/// edge-reversed automaton plus, per tape, the guessed shift and the
/// letters received but not yet fed.
struct RevRun {
    int q;
    std::vector<int> delay;
    std::vector<std::vector<std::string>> buffer;
    std::vector<char> started;
    auto key() const { return std::tie(q, delay, buffer, started); }
    bool operator<(const RevRun& o) const { return key() < o.key(); }
};

}  // namespace

MultiTapeAutomaton reverse(const MultiTapeAutomaton& m, int maxDelay) {
    if (m.tapes == 1) {
        // No padding on a single tape: plain edge reversal.
        MultiTapeAutomaton rev;
        rev.tapes = 1;
        rev.alphabet = m.alphabet;
        rev.weights = m.weights;
        rev.stateCount = m.stateCount;
        rev.start = m.start;  // placeholder; initial set is the old finals
        rev.finals = {m.start};
        for (const auto& t : m.transitions) rev.transitions.push_back({t.to, t.label, t.from});
        // Subset construction from the old final states.
        MultiTapeAutomaton sum = rev;
        std::set<int> initial(m.finals.begin(), m.finals.end());
        if (initial.empty()) {
            MultiTapeAutomaton out;
            out.tapes = 1;
            out.alphabet = m.alphabet;
            out.weights = m.weights;
            out.stateCount = 1;
            out.deterministic = true;
            return out;
        }
        // Reuse determinize by introducing a fresh start wired like the
        // initial set.
        MultiTapeAutomaton withStart = sum;
        int fresh = withStart.stateCount++;
        withStart.start = fresh;
        auto idx = indexTransitions(sum);
        std::map<Label, std::set<int>> moves;
        bool final = false;
        for (int q : initial) {
            if (sum.finals.count(q)) final = true;
            for (const auto& [label, targets] : idx[q])
                moves[label].insert(targets.begin(), targets.end());
        }
        if (final) withStart.finals.insert(fresh);
        for (const auto& [label, targets] : moves)
            for (int to : targets) withStart.transitions.push_back({fresh, label, to});
        return determinize(withStart);
    }

    if (maxDelay < 0) throw std::invalid_argument("maxDelay must be nonnegative");
    // Edge-reversed automaton B reads the column-reversed word, whose
    // padding leads instead of trails.  We re-normalize by feeding B with
    // per-tape delays: the shorter a tape, the later its letters go in.
    std::vector<std::map<Label, std::set<int>>> revIdx(m.stateCount);
    for (const auto& t : m.transitions) revIdx[t.to][t.label].insert(t.from);
    const std::set<int> bFinals{m.start};

    std::map<RevRun, int> runIds;
    std::vector<RevRun> runs;
    auto internRun = [&](const RevRun& r) {
        auto [it, fresh] = runIds.emplace(r, static_cast<int>(runs.size()));
        if (fresh) {
            runs.push_back(r);
            if (runs.size() > kStateBudget)
                throw ResourceLimitError("reverse exceeded state budget");
        }
        return it->second;
    };

    // Initial runs: each old final state, each delay tuple with minimum 0.
    std::set<int> initialRuns;
    std::vector<int> delay(m.tapes, 0);
    auto forEachDelay = [&](auto&& self, int tape) -> void {
        if (tape == m.tapes) {
            if (*std::min_element(delay.begin(), delay.end()) != 0) return;
            for (int f : m.finals)
                initialRuns.insert(internRun({f, delay,
                                              std::vector<std::vector<std::string>>(m.tapes),
                                              std::vector<char>(m.tapes, 0)}));
            return;
        }
        for (int d = 0; d <= maxDelay; ++d) {
            delay[tape] = d;
            self(self, tape + 1);
        }
    };
    forEachDelay(forEachDelay, 0);

    std::vector<Label> universe = labelUniverse(m.alphabet, m.tapes);

    // Subset construction over runs; the input pad pattern is shared by all
    // runs of a subset, so it lives in the subset key.
    using SubsetKey = std::pair<std::set<int>, unsigned>;
    std::map<SubsetKey, int> subsetIds;
    std::vector<SubsetKey> subsets;
    auto internSubset = [&](const SubsetKey& k) {
        auto [it, fresh] = subsetIds.emplace(k, static_cast<int>(subsets.size()));
        if (fresh) {
            subsets.push_back(k);
            if (subsets.size() > kStateBudget)
                throw ResourceLimitError("reverse exceeded state budget");
        }
        return it->second;
    };

    auto runAccepting = [&](const RevRun& r) {
        if (!bFinals.count(r.q)) return false;
        for (const auto& b : r.buffer)
            if (!b.empty()) return false;
        return true;
    };

    MultiTapeAutomaton out;
    out.tapes = m.tapes;
    out.alphabet = m.alphabet;
    out.weights = m.weights;
    out.deterministic = true;
    out.start = internSubset({initialRuns, 0});
    for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
        auto [members, pattern] = subsets[cur];
        for (int id : members)
            if (runAccepting(runs[id])) {
                out.finals.insert(static_cast<int>(cur));
                break;
            }
        for (const Label& column : universe) {
            unsigned pads = padMask(column);
            if ((pads & pattern) != pattern) continue;
            std::set<int> nextRuns;
            for (int id : members) {
                RevRun r = runs[id];
                Label fed(m.tapes);
                bool dead = false;
                for (int i = 0; i < m.tapes && !dead; ++i) {
                    if (column[i] != kPad) r.buffer[i].push_back(column[i]);
                    if (!r.started[i]) {
                        if (static_cast<int>(r.buffer[i].size()) == r.delay[i] + 1) {
                            fed[i] = r.buffer[i].front();
                            r.buffer[i].erase(r.buffer[i].begin());
                            r.started[i] = 1;
                        } else {
                            fed[i] = kPad;
                        }
                    } else {
                        if (r.buffer[i].empty()) {
                            dead = true;
                        } else {
                            fed[i] = r.buffer[i].front();
                            r.buffer[i].erase(r.buffer[i].begin());
                        }
                    }
                }
                if (dead) continue;
                auto it = revIdx[r.q].find(fed);
                if (it == revIdx[r.q].end()) continue;
                for (int q2 : it->second) {
                    RevRun r2 = r;
                    r2.q = q2;
                    nextRuns.insert(internRun(r2));
                }
            }
            if (nextRuns.empty()) continue;
            out.transitions.push_back(
                {static_cast<int>(cur), column, internSubset({nextRuns, pads})});
        }
    }
    out.stateCount = static_cast<int>(subsets.size());
    return minimizeDet(out);
}

MultiTapeAutomaton projectExists(const MultiTapeAutomaton& m, int tape) {
    if (m.tapes < 2) throw std::invalid_argument("projection needs at least 2 tapes");
    if (tape < 0 || tape >= m.tapes) throw std::invalid_argument("bad tape index");

    auto keptLabel = [&](const Label& l) {
        Label kept;
        kept.reserve(l.size() - 1);
        for (int i = 0; i < m.tapes; ++i)
            if (i != tape) kept.push_back(l[i]);
        return kept;
    };
    auto keptAllPad = [&](const Label& l) {
        for (int i = 0; i < m.tapes; ++i)
            if (i != tape && l[i] != kPad) return false;
        return true;
    };

    // States from which a final is reachable through columns that are pure
    // padding on the kept tapes become final: the dropped tape may be the
    // longest one.
    std::vector<std::vector<int>> padPred(m.stateCount);
    for (const auto& t : m.transitions)
        if (keptAllPad(t.label)) padPred[t.to].push_back(t.from);
    std::set<int> finals(m.finals.begin(), m.finals.end());
    std::deque<int> queue(finals.begin(), finals.end());
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int p : padPred[q])
            if (finals.insert(p).second) queue.push_back(p);
    }

    MultiTapeAutomaton nfa;
    nfa.tapes = m.tapes - 1;
    nfa.alphabet = m.alphabet;
    nfa.weights = m.weights;
    nfa.stateCount = m.stateCount;
    nfa.start = m.start;
    nfa.finals = finals;
    for (const auto& t : m.transitions)
        if (!keptAllPad(t.label)) nfa.transitions.push_back({t.from, keptLabel(t.label), t.to});
    return canonicalize(trim(determinize(nfa)));
}

MultiTapeAutomaton liftTape(const MultiTapeAutomaton& m, int totalTapes, int position) {
    if (m.tapes != 1) throw std::invalid_argument("liftTape expects a 1-tape automaton");
    if (position < 0 || position >= totalTapes) throw std::invalid_argument("bad tape position");
    MultiTapeAutomaton d = determinize(m);
    auto idx = indexTransitions(d);

    std::vector<Label> universe = labelUniverse(d.alphabet, totalTapes);
    // (state, done, pattern); done means the lifted tape already ended in an
    // accepting configuration.
    using Key = std::tuple<int, bool, unsigned>;
    std::map<Key, int> ids;
    std::vector<Key> states;
    auto intern = [&](const Key& k) {
        auto [it, fresh] = ids.emplace(k, static_cast<int>(states.size()));
        if (fresh) {
            states.push_back(k);
            if (states.size() > kStateBudget)
                throw ResourceLimitError("liftTape exceeded state budget");
        }
        return it->second;
    };

    MultiTapeAutomaton out;
    out.tapes = totalTapes;
    out.alphabet = d.alphabet;
    out.weights = d.weights;
    out.deterministic = true;
    out.start = intern({d.start, false, 0});
    for (std::size_t cur = 0; cur < states.size(); ++cur) {
        auto [q, done, pattern] = states[cur];
        if (done || d.finals.count(q)) out.finals.insert(static_cast<int>(cur));
        for (const Label& label : universe) {
            unsigned pads = padMask(label);
            if ((pads & pattern) != pattern) continue;
            const std::string& x = label[position];
            if (x == kPad) {
                if (!done && !d.finals.count(q)) continue;
                out.transitions.push_back(
                    {static_cast<int>(cur), label, intern({q, true, pads})});
            } else {
                if (done) continue;
                auto it = idx[q].find(Label{x});
                if (it == idx[q].end()) continue;
                out.transitions.push_back(
                    {static_cast<int>(cur), label, intern({*it->second.begin(), false, pads})});
            }
        }
    }
    out.stateCount = static_cast<int>(states.size());
    return minimizeDet(out);
}

MultiTapeAutomaton prependOnTape(const MultiTapeAutomaton& m, int tape,
                                 const std::vector<std::string>& word) {
    if (tape < 0 || tape >= m.tapes) throw std::invalid_argument("bad tape index");
    if (word.empty()) return m;
    auto idx = indexTransitions(m);
    const int shift = static_cast<int>(word.size());

    // Feed the fixed prefix to m first; the real tape letters lag behind it
    // by |word| positions in a bounded buffer.
    struct Run {
        int q;
        int fedPrefix;                     // letters of `word` already fed
        std::vector<std::string> buffer;   // pending entries for this tape
        auto key() const { return std::tie(q, fedPrefix, buffer); }
        bool operator<(const Run& o) const { return key() < o.key(); }
    };

    // Acceptance requires flushing the buffered letters against "$" on the
    // other tapes.
    auto flushAccepts = [&](const Run& r) {
        std::set<int> cur{r.q};
        // Unfed prefix letters first (happens when the tuple is shorter than
        // the prefix itself), then buffered entries.
        std::vector<std::string> pending;
        for (int i = r.fedPrefix; i < shift; ++i) pending.push_back(word[i]);
        for (const auto& e : r.buffer) pending.push_back(e);
        for (const auto& entry : pending) {
            if (entry == kPad) break;  // conv already over; rest must be pads
            std::set<int> next;
            Label column(m.tapes, kPad);
            column[tape] = entry;
            for (int q : cur) {
                auto it = idx[q].find(column);
                if (it != idx[q].end()) next.insert(it->second.begin(), it->second.end());
            }
            cur = std::move(next);
            if (cur.empty()) return false;
        }
        for (int q : cur)
            if (m.finals.count(q)) return true;
        return false;
    };

    std::map<Run, int> runIds;
    std::vector<Run> runs;
    auto internRun = [&](const Run& r) {
        auto [it, fresh] = runIds.emplace(r, static_cast<int>(runs.size()));
        if (fresh) {
            runs.push_back(r);
            if (runs.size() > kStateBudget)
                throw ResourceLimitError("prependOnTape exceeded state budget");
        }
        return it->second;
    };

    std::vector<Label> universe = labelUniverse(m.alphabet, m.tapes);
    using SubsetKey = std::pair<std::set<int>, unsigned>;
    std::map<SubsetKey, int> subsetIds;
    std::vector<SubsetKey> subsets;
    auto internSubset = [&](const SubsetKey& k) {
        auto [it, fresh] = subsetIds.emplace(k, static_cast<int>(subsets.size()));
        if (fresh) {
            subsets.push_back(k);
            if (subsets.size() > kStateBudget)
                throw ResourceLimitError("prependOnTape exceeded state budget");
        }
        return it->second;
    };

    MultiTapeAutomaton out;
    out.tapes = m.tapes;
    out.alphabet = m.alphabet;
    out.weights = m.weights;
    out.deterministic = true;
    out.start = internSubset({{internRun({m.start, 0, {}})}, 0});
    for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
        auto [members, pattern] = subsets[cur];
        for (int id : members)
            if (flushAccepts(runs[id])) {
                out.finals.insert(static_cast<int>(cur));
                break;
            }
        for (const Label& column : universe) {
            unsigned pads = padMask(column);
            if ((pads & pattern) != pattern) continue;
            std::set<int> nextRuns;
            for (int id : members) {
                Run r = runs[id];
                r.buffer.push_back(column[tape]);
                Label fed = column;
                if (r.fedPrefix < shift) {
                    fed[tape] = word[r.fedPrefix];
                    ++r.fedPrefix;
                } else {
                    fed[tape] = r.buffer.front();
                    r.buffer.erase(r.buffer.begin());
                }
                auto it = idx[r.q].find(fed);
                if (it == idx[r.q].end()) continue;
                for (int q2 : it->second) {
                    Run r2 = r;
                    r2.q = q2;
                    nextRuns.insert(internRun(r2));
                }
            }
            if (nextRuns.empty()) continue;
            out.transitions.push_back(
                {static_cast<int>(cur), column, internSubset({nextRuns, pads})});
        }
    }
    out.stateCount = static_cast<int>(subsets.size());
    return minimizeDet(out);
}

MultiTapeAutomaton appendOnTape(const MultiTapeAutomaton& m, int tape,
                                const std::vector<std::string>& word) {
    if (tape < 0 || tape >= m.tapes) throw std::invalid_argument("bad tape index");
    if (word.empty()) return m;
    auto idx = indexTransitions(m);
    const int len = static_cast<int>(word.size());

    // Once the stripped tape runs out in the input, m keeps reading the
    // fixed suffix on that tape; any remainder is flushed at the end.
    struct Run {
        int q;
        int consumed;  // letters of `word` already fed (-1: still in the tape word)
        auto key() const { return std::tie(q, consumed); }
        bool operator<(const Run& o) const { return key() < o.key(); }
    };

    auto flushAccepts = [&](const Run& r) {
        std::set<int> cur{r.q};
        int from = r.consumed < 0 ? 0 : r.consumed;
        for (int i = from; i < len; ++i) {
            Label column(m.tapes, kPad);
            column[tape] = word[i];
            std::set<int> next;
            for (int q : cur) {
                auto it = idx[q].find(column);
                if (it != idx[q].end()) next.insert(it->second.begin(), it->second.end());
            }
            cur = std::move(next);
            if (cur.empty()) return false;
        }
        for (int q : cur)
            if (m.finals.count(q)) return true;
        return false;
    };

    std::map<Run, int> runIds;
    std::vector<Run> runs;
    auto internRun = [&](const Run& r) {
        auto [it, fresh] = runIds.emplace(r, static_cast<int>(runs.size()));
        if (fresh) runs.push_back(r);
        return it->second;
    };

    std::vector<Label> universe = labelUniverse(m.alphabet, m.tapes);
    using SubsetKey = std::pair<std::set<int>, unsigned>;
    std::map<SubsetKey, int> subsetIds;
    std::vector<SubsetKey> subsets;
    auto internSubset = [&](const SubsetKey& k) {
        auto [it, fresh] = subsetIds.emplace(k, static_cast<int>(subsets.size()));
        if (fresh) {
            subsets.push_back(k);
            if (subsets.size() > kStateBudget)
                throw ResourceLimitError("appendOnTape exceeded state budget");
        }
        return it->second;
    };

    MultiTapeAutomaton out;
    out.tapes = m.tapes;
    out.alphabet = m.alphabet;
    out.weights = m.weights;
    out.deterministic = true;
    out.start = internSubset({{internRun({m.start, -1})}, 0});
    for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
        auto [members, pattern] = subsets[cur];
        for (int id : members)
            if (flushAccepts(runs[id])) {
                out.finals.insert(static_cast<int>(cur));
                break;
            }
        for (const Label& column : universe) {
            unsigned pads = padMask(column);
            if ((pads & pattern) != pattern) continue;
            std::set<int> nextRuns;
            for (int id : members) {
                Run r = runs[id];
                Label fed = column;
                if (column[tape] != kPad) {
                    if (r.consumed >= 0) continue;  // letters after the suffix began
                } else {
                    int next = r.consumed < 0 ? 0 : r.consumed;
                    if (next < len) {
                        fed[tape] = word[next];
                        r.consumed = next + 1;
                    } else {
                        r.consumed = len;
                    }
                }
                auto it = idx[r.q].find(fed);
                if (it == idx[r.q].end()) continue;
                for (int q2 : it->second) nextRuns.insert(internRun({q2, r.consumed}));
            }
            if (nextRuns.empty()) continue;
            out.transitions.push_back(
                {static_cast<int>(cur), column, internSubset({nextRuns, pads})});
        }
    }
    out.stateCount = static_cast<int>(subsets.size());
    return minimizeDet(out);
}

MultiTapeAutomaton fellowTravelerAutomaton(std::int64_t K,
                                           const std::map<std::string, std::int64_t>& weights,
                                           const std::vector<std::string>& alphabet) {
    if (K < 0) throw std::invalid_argument("fellow traveler constant must be nonnegative");
    if (static_cast<std::size_t>(K) > kStateBudget / 8)
        throw ResourceLimitError("fellow traveler constant too large to build");
    auto weightOf = [&](const std::string& l) -> std::int64_t {
        if (l == kPad) return 0;
        auto it = weights.find(l);
        if (it == weights.end()) throw std::invalid_argument("no weight for letter '" + l + "'");
        return it->second;
    };

    std::vector<Label> universe = labelUniverse(alphabet, 2);
    // (difference or FAIL, pattern); the label on a live state is the running
    // size difference of the two prefixes.
    constexpr std::int64_t kFail = INT64_MIN;
    using Key = std::pair<std::int64_t, unsigned>;
    std::map<Key, int> ids;
    std::vector<Key> states;
    auto intern = [&](const Key& k) {
        auto [it, fresh] = ids.emplace(k, static_cast<int>(states.size()));
        if (fresh) {
            states.push_back(k);
            if (states.size() > kStateBudget)
                throw ResourceLimitError("fellow traveler automaton exceeded state budget");
        }
        return it->second;
    };

    MultiTapeAutomaton out;
    out.tapes = 2;
    out.alphabet = alphabet;
    for (const auto& l : alphabet) out.weights[l] = weightOf(l);
    out.deterministic = true;
    out.start = intern({0, 0});
    for (std::size_t cur = 0; cur < states.size(); ++cur) {
        auto [diff, pattern] = states[cur];
        if (diff != kFail && diff > 0) out.finals.insert(static_cast<int>(cur));
        for (const Label& label : universe) {
            unsigned pads = padMask(label);
            if ((pads & pattern) != pattern) continue;
            std::int64_t next = kFail;
            if (diff != kFail) {
                std::int64_t d = diff + weightOf(label[0]) - weightOf(label[1]);
                next = (d < -K || d > K) ? kFail : d;
            }
            out.transitions.push_back({static_cast<int>(cur), label, intern({next, pads})});
        }
    }
    out.stateCount = static_cast<int>(states.size());
    return minimizeDet(out);
}

MultiTapeAutomaton shortlexAutomaton(const std::vector<std::string>& alphabet,
                                     const std::map<std::string, std::int64_t>& weights) {
    std::map<std::string, int> rank;
    for (std::size_t i = 0; i < alphabet.size(); ++i) rank[alphabet[i]] = static_cast<int>(i);

    // eq / less / greater while both tapes run; shorter tape wins outright.
    enum State { Eq = 0, Less = 1, Greater = 2, FirstShort = 3, SecondShort = 4 };
    MultiTapeAutomaton out;
    out.tapes = 2;
    out.alphabet = alphabet;
    out.weights = weights;
    out.stateCount = 5;
    out.start = Eq;
    out.finals = {Less, FirstShort};
    out.deterministic = true;
    for (const Label& label : labelUniverse(alphabet, 2)) {
        const std::string& x = label[0];
        const std::string& y = label[1];
        if (x == kPad) {
            out.transitions.push_back({Eq, label, FirstShort});
            out.transitions.push_back({Less, label, FirstShort});
            out.transitions.push_back({Greater, label, FirstShort});
            out.transitions.push_back({FirstShort, label, FirstShort});
        } else if (y == kPad) {
            out.transitions.push_back({Eq, label, SecondShort});
            out.transitions.push_back({Less, label, SecondShort});
            out.transitions.push_back({Greater, label, SecondShort});
            out.transitions.push_back({SecondShort, label, SecondShort});
        } else {
            int cmp = rank.at(x) - rank.at(y);
            int fromEq = cmp < 0 ? Less : (cmp > 0 ? Greater : Eq);
            out.transitions.push_back({Eq, label, fromEq});
            out.transitions.push_back({Less, label, Less});
            out.transitions.push_back({Greater, label, Greater});
        }
    }
    return canonicalize(out);
}

MultiTapeAutomaton minimalCrossSection(const MultiTapeAutomaton& L,
                                       const MultiTapeAutomaton& Lprime,
                                       const MultiTapeAutomaton& R, std::int64_t K) {
    if (L.tapes != 1 || Lprime.tapes != 1 || R.tapes != 2)
        throw std::invalid_argument("minimalCrossSection expects 1-tape L, L' and 2-tape R");

    MultiTapeAutomaton ft = fellowTravelerAutomaton(K, L.weights, L.alphabet);
    MultiTapeAutomaton LL = combine(CombineMode::Intersection, liftTape(L, 2, 0),
                                    liftTape(L, 2, 1));
    MultiTapeAutomaton LK =
        combine(CombineMode::Intersection, combine(CombineMode::Intersection, R, ft), LL);

    // Words of L' with no strictly smaller K-fellow-traveling R-partner.
    MultiTapeAutomaton hasSmaller = projectExists(LK, 1);
    MultiTapeAutomaton survivors =
        combine(CombineMode::Intersection, Lprime, complementDet(hasSmaller));

    // Prune by short-lex: drop words dominated by an R-related smaller word.
    MultiTapeAutomaton sr = combine(CombineMode::Intersection,
                                    shortlexAutomaton(L.alphabet, L.weights), R);
    MultiTapeAutomaton pairs = combine(
        CombineMode::Intersection,
        combine(CombineMode::Intersection, liftTape(survivors, 2, 0),
                liftTape(survivors, 2, 1)),
        sr);
    MultiTapeAutomaton dominated = projectExists(pairs, 0);
    return minimizeDet(
        combine(CombineMode::Intersection, survivors, complementDet(dominated)));
}

}  // namespace solgrowth
