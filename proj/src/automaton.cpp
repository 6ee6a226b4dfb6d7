#include "solgrowth/automaton.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

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

bool allPad(const Label& label) {
    return padMask(label) == (1u << label.size()) - 1u;
}

/// from-state -> label -> target set
using TransitionIndex = std::vector<std::map<Label, std::set<int>>>;

TransitionIndex indexTransitions(const MultiTapeAutomaton& m) {
    TransitionIndex idx(m.stateCount);
    for (const auto& t : m.transitions) idx[t.from][t.label].insert(t.to);
    return idx;
}

void checkCompatible(const MultiTapeAutomaton& m1, const MultiTapeAutomaton& m2) {
    if (m1.tapes != m2.tapes)
        throw std::invalid_argument("automata have different tape counts");
    for (const auto& [l, w] : m2.weights) {
        auto it = m1.weights.find(l);
        if (it != m1.weights.end() && it->second != w)
            throw std::invalid_argument("automata disagree on letter weight for '" + l + "'");
    }
}

std::vector<std::string> mergedAlphabet(const MultiTapeAutomaton& m1,
                                        const MultiTapeAutomaton& m2) {
    std::set<std::string> s(m1.alphabet.begin(), m1.alphabet.end());
    s.insert(m2.alphabet.begin(), m2.alphabet.end());
    return {s.begin(), s.end()};
}

std::map<std::string, std::int64_t> mergedWeights(const MultiTapeAutomaton& m1,
                                                  const MultiTapeAutomaton& m2) {
    auto w = m1.weights;
    w.insert(m2.weights.begin(), m2.weights.end());
    return w;
}

/// Subset construction from an arbitrary set of initial states.
MultiTapeAutomaton determinizeFrom(const MultiTapeAutomaton& m, std::set<int> initial) {
    TransitionIndex idx = indexTransitions(m);
    MultiTapeAutomaton out;
    out.tapes = m.tapes;
    out.alphabet = m.alphabet;
    out.weights = m.weights;
    out.deterministic = true;

    std::map<std::set<int>, int> ids;
    std::vector<std::set<int>> subsets;
    auto intern = [&](const std::set<int>& s) {
        auto [it, fresh] = ids.emplace(s, static_cast<int>(subsets.size()));
        if (fresh) {
            subsets.push_back(s);
            if (subsets.size() > kStateBudget)
                throw ResourceLimitError("determinization exceeded state budget");
        }
        return it->second;
    };

    out.start = intern(initial);
    for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
        std::set<int> members = subsets[cur];
        std::map<Label, std::set<int>> moves;
        bool final = false;
        for (int q : members) {
            if (m.finals.count(q)) final = true;
            for (const auto& [label, targets] : idx[q])
                moves[label].insert(targets.begin(), targets.end());
        }
        if (final) out.finals.insert(static_cast<int>(cur));
        for (const auto& [label, targets] : moves)
            out.transitions.push_back({static_cast<int>(cur), label, intern(targets)});
    }
    out.stateCount = static_cast<int>(subsets.size());
    return minimizeDet(out);
}

MultiTapeAutomaton emptyLanguage(const MultiTapeAutomaton& like) {
    MultiTapeAutomaton out;
    out.tapes = like.tapes;
    out.alphabet = like.alphabet;
    out.weights = like.weights;
    out.stateCount = 1;
    out.start = 0;
    out.deterministic = true;
    return out;
}

}  // namespace

bool MultiTapeAutomaton::hasLetter(const std::string& l) const {
    return std::find(alphabet.begin(), alphabet.end(), l) != alphabet.end();
}

std::int64_t MultiTapeAutomaton::letterWeight(const std::string& l) const {
    if (l == kPad) return 0;
    auto it = weights.find(l);
    if (it == weights.end()) throw std::invalid_argument("no weight for letter '" + l + "'");
    return it->second;
}

bool accepts(const MultiTapeAutomaton& m, const WordTuple& words) {
    if (static_cast<int>(words.size()) != m.tapes)
        throw std::invalid_argument("tuple arity does not match tape count");
    std::size_t maxLen = 0;
    for (const auto& w : words) {
        for (const auto& letter : w)
            if (!m.hasLetter(letter))
                throw std::invalid_argument("letter outside alphabet: '" + letter + "'");
        maxLen = std::max(maxLen, w.size());
    }
    TransitionIndex idx = indexTransitions(m);
    std::set<int> current{m.start};
    for (std::size_t j = 0; j < maxLen && !current.empty(); ++j) {
        Label column(m.tapes);
        for (int i = 0; i < m.tapes; ++i)
            column[i] = j < words[i].size() ? words[i][j] : kPad;
        std::set<int> next;
        for (int q : current) {
            auto it = idx[q].find(column);
            if (it != idx[q].end()) next.insert(it->second.begin(), it->second.end());
        }
        current = std::move(next);
    }
    for (int q : current)
        if (m.finals.count(q)) return true;
    return false;
}

MultiTapeAutomaton determinize(const MultiTapeAutomaton& m) {
    return determinizeFrom(m, {m.start});
}

MultiTapeAutomaton trim(const MultiTapeAutomaton& m) {
    std::vector<char> reach(m.stateCount, 0);
    std::deque<int> queue{m.start};
    reach[m.start] = 1;
    TransitionIndex idx = indexTransitions(m);
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (const auto& [label, targets] : idx[q]) {
            (void)label;
            for (int to : targets)
                if (!reach[to]) {
                    reach[to] = 1;
                    queue.push_back(to);
                }
        }
    }
    std::vector<std::vector<int>> rev(m.stateCount);
    for (const auto& t : m.transitions) rev[t.to].push_back(t.from);
    std::vector<char> coreach(m.stateCount, 0);
    for (int f : m.finals)
        if (!coreach[f]) {
            coreach[f] = 1;
            queue.push_back(f);
        }
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int p : rev[q])
            if (!coreach[p]) {
                coreach[p] = 1;
                queue.push_back(p);
            }
    }
    if (!(reach[m.start] && coreach[m.start])) return emptyLanguage(m);
    std::vector<int> remap(m.stateCount, -1);
    int next = 0;
    for (int q = 0; q < m.stateCount; ++q)
        if (reach[q] && coreach[q]) remap[q] = next++;
    MultiTapeAutomaton out;
    out.tapes = m.tapes;
    out.alphabet = m.alphabet;
    out.weights = m.weights;
    out.deterministic = m.deterministic;
    out.stateCount = next;
    out.start = remap[m.start];
    for (int f : m.finals)
        if (remap[f] >= 0) out.finals.insert(remap[f]);
    for (const auto& t : m.transitions)
        if (remap[t.from] >= 0 && remap[t.to] >= 0)
            out.transitions.push_back({remap[t.from], t.label, remap[t.to]});
    return canonicalize(out);
}

MultiTapeAutomaton canonicalize(const MultiTapeAutomaton& m) {
    // Breadth-first numbering; ties broken by label order then old id.
    std::vector<Transition> sorted = m.transitions;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<const Transition*>> out(m.stateCount);
    for (const auto& t : sorted) out[t.from].push_back(&t);

    std::vector<int> remap(m.stateCount, -1);
    std::deque<int> queue{m.start};
    remap[m.start] = 0;
    int next = 1;
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (const Transition* t : out[q])
            if (remap[t->to] < 0) {
                remap[t->to] = next++;
                queue.push_back(t->to);
            }
    }
    MultiTapeAutomaton result;
    result.tapes = m.tapes;
    result.alphabet = m.alphabet;
    result.weights = m.weights;
    result.deterministic = m.deterministic;
    result.stateCount = next;
    result.start = 0;
    for (int f : m.finals)
        if (remap[f] >= 0) result.finals.insert(remap[f]);
    for (const auto& t : sorted)
        if (remap[t.from] >= 0 && remap[t.to] >= 0)
            result.transitions.push_back({remap[t.from], t.label, remap[t.to]});
    std::sort(result.transitions.begin(), result.transitions.end());
    return result;
}

bool paddingPersistent(const MultiTapeAutomaton& m) {
    std::vector<std::vector<int>> succ(m.stateCount);
    for (const auto& t : m.transitions) succ[t.from].push_back(t.to);
    for (int tape = 0; tape < m.tapes; ++tape) {
        std::vector<char> afterPad(m.stateCount, 0);
        std::deque<int> queue;
        for (const auto& t : m.transitions)
            if (t.label[tape] == kPad && !afterPad[t.to]) {
                afterPad[t.to] = 1;
                queue.push_back(t.to);
            }
        while (!queue.empty()) {
            int q = queue.front();
            queue.pop_front();
            for (int to : succ[q])
                if (!afterPad[to]) {
                    afterPad[to] = 1;
                    queue.push_back(to);
                }
        }
        for (const auto& t : m.transitions)
            if (afterPad[t.from] && t.label[tape] != kPad) return false;
    }
    return true;
}

MultiTapeAutomaton combine(CombineMode mode, const MultiTapeAutomaton& m1,
                           const MultiTapeAutomaton& m2) {
    checkCompatible(m1, m2);
    switch (mode) {
        case CombineMode::Union: {
            // Disjoint sum with both start states initial.
            MultiTapeAutomaton sum;
            sum.tapes = m1.tapes;
            sum.alphabet = mergedAlphabet(m1, m2);
            sum.weights = mergedWeights(m1, m2);
            sum.stateCount = m1.stateCount + m2.stateCount;
            sum.start = m1.start;
            sum.finals = m1.finals;
            sum.transitions = m1.transitions;
            for (int f : m2.finals) sum.finals.insert(f + m1.stateCount);
            for (const auto& t : m2.transitions)
                sum.transitions.push_back({t.from + m1.stateCount, t.label, t.to + m1.stateCount});
            return determinizeFrom(sum, {m1.start, m2.start + m1.stateCount});
        }
        case CombineMode::Intersection: {
            TransitionIndex idx1 = indexTransitions(m1);
            TransitionIndex idx2 = indexTransitions(m2);
            MultiTapeAutomaton out;
            out.tapes = m1.tapes;
            out.alphabet = mergedAlphabet(m1, m2);
            out.weights = mergedWeights(m1, m2);
            std::map<std::pair<int, int>, int> ids;
            std::vector<std::pair<int, int>> pairs;
            auto intern = [&](std::pair<int, int> p) {
                auto [it, fresh] = ids.emplace(p, static_cast<int>(pairs.size()));
                if (fresh) {
                    pairs.push_back(p);
                    if (pairs.size() > kStateBudget)
                        throw ResourceLimitError("product construction exceeded state budget");
                }
                return it->second;
            };
            out.start = intern({m1.start, m2.start});
            for (std::size_t cur = 0; cur < pairs.size(); ++cur) {
                auto [q1, q2] = pairs[cur];
                if (m1.finals.count(q1) && m2.finals.count(q2))
                    out.finals.insert(static_cast<int>(cur));
                for (const auto& [label, t1] : idx1[q1]) {
                    auto it = idx2[q2].find(label);
                    if (it == idx2[q2].end()) continue;
                    for (int to1 : t1)
                        for (int to2 : it->second)
                            out.transitions.push_back(
                                {static_cast<int>(cur), label, intern({to1, to2})});
                }
            }
            out.stateCount = static_cast<int>(pairs.size());
            out.deterministic = m1.deterministic && m2.deterministic;
            if (out.deterministic) return minimizeDet(out);
            return canonicalize(trim(out));
        }
        case CombineMode::Concatenation: {
            if (m1.tapes != 1)
                throw std::invalid_argument(
                    "concatenation is only defined for 1-tape automata");
            MultiTapeAutomaton glued;
            glued.tapes = 1;
            glued.alphabet = mergedAlphabet(m1, m2);
            glued.weights = mergedWeights(m1, m2);
            glued.stateCount = m1.stateCount + m2.stateCount;
            glued.start = m1.start;
            glued.transitions = m1.transitions;
            for (const auto& t : m2.transitions)
                glued.transitions.push_back(
                    {t.from + m1.stateCount, t.label, t.to + m1.stateCount});
            // Epsilon-free gluing: finals of m1 mimic m2's start.
            for (int f : m1.finals)
                for (const auto& t : m2.transitions)
                    if (t.from == m2.start)
                        glued.transitions.push_back({f, t.label, t.to + m1.stateCount});
            for (int f : m2.finals) glued.finals.insert(f + m1.stateCount);
            if (m2.finals.count(m2.start))
                for (int f : m1.finals) glued.finals.insert(f);
            return determinizeFrom(glued, {glued.start});
        }
    }
    throw std::logic_error("bad combine mode");
}

MultiTapeAutomaton complementDet(const MultiTapeAutomaton& m) {
    MultiTapeAutomaton d = determinize(m);
    TransitionIndex idx = indexTransitions(d);

    // Full label universe: (alphabet + "$")^tapes minus the all-"$" column.
    std::vector<Label> universe;
    std::vector<std::string> letters = d.alphabet;
    letters.push_back(kPad);
    std::vector<std::size_t> pick(d.tapes, 0);
    while (true) {
        Label label(d.tapes);
        for (int i = 0; i < d.tapes; ++i) label[i] = letters[pick[i]];
        if (!allPad(label)) universe.push_back(label);
        int i = 0;
        for (; i < d.tapes; ++i) {
            if (++pick[i] < letters.size()) break;
            pick[i] = 0;
        }
        if (i == d.tapes) break;
    }

    // States are (automaton state or dead, pad pattern); completion and
    // complement both happen relative to validly padded tuples only.
    constexpr int kDead = -1;
    std::map<std::pair<int, unsigned>, int> ids;
    std::vector<std::pair<int, unsigned>> states;
    auto intern = [&](std::pair<int, unsigned> s) {
        auto [it, fresh] = ids.emplace(s, static_cast<int>(states.size()));
        if (fresh) {
            states.push_back(s);
            if (states.size() > kStateBudget)
                throw ResourceLimitError("complement exceeded state budget");
        }
        return it->second;
    };

    MultiTapeAutomaton out;
    out.tapes = d.tapes;
    out.alphabet = d.alphabet;
    out.weights = d.weights;
    out.deterministic = true;
    out.start = intern({d.start, 0});
    for (std::size_t cur = 0; cur < states.size(); ++cur) {
        auto [q, pattern] = states[cur];
        if (q == kDead || !d.finals.count(q)) out.finals.insert(static_cast<int>(cur));
        for (const Label& label : universe) {
            unsigned pads = padMask(label);
            if ((pads & pattern) != pattern) continue;  // padding persistence
            int target = kDead;
            if (q != kDead) {
                auto it = idx[q].find(label);
                if (it != idx[q].end()) target = *it->second.begin();
            }
            out.transitions.push_back(
                {static_cast<int>(cur), label, intern({target, pads})});
        }
    }
    out.stateCount = static_cast<int>(states.size());
    return canonicalize(out);
}

MultiTapeAutomaton minimizeDet(const MultiTapeAutomaton& m) {
    if (!m.deterministic)
        throw std::invalid_argument("minimization requires a deterministic automaton");
    MultiTapeAutomaton t = trim(m);
    if (t.stateCount <= 1) return t;

    std::map<Label, int> labelIds;
    std::vector<std::vector<std::pair<int, int>>> edges(t.stateCount);  // (labelId, to)
    for (const auto& tr : t.transitions) {
        auto [it, fresh] = labelIds.emplace(tr.label, static_cast<int>(labelIds.size()));
        edges[tr.from].push_back({it->second, tr.to});
    }
    for (auto& v : edges) std::sort(v.begin(), v.end());

    // Moore refinement from the final/non-final split.
    std::vector<int> cls(t.stateCount);
    for (int i = 0; i < t.stateCount; ++i) cls[i] = t.finals.count(i) ? 1 : 0;
    int classCount = 2;
    while (true) {
        std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> sig;
        std::vector<int> next(t.stateCount);
        for (int i = 0; i < t.stateCount; ++i) {
            std::vector<std::pair<int, int>> s;
            s.reserve(edges[i].size());
            for (auto [l, to] : edges[i]) s.push_back({l, cls[to]});
            auto [it, fresh] =
                sig.emplace(std::make_pair(cls[i], std::move(s)), static_cast<int>(sig.size()));
            next[i] = it->second;
        }
        int newCount = static_cast<int>(sig.size());
        cls = std::move(next);
        if (newCount == classCount) break;
        classCount = newCount;
    }

    MultiTapeAutomaton out;
    out.tapes = t.tapes;
    out.alphabet = t.alphabet;
    out.weights = t.weights;
    out.stateCount = classCount;
    out.start = cls[t.start];
    out.deterministic = true;
    for (int f : t.finals) out.finals.insert(cls[f]);
    std::set<Transition> dedup;
    for (const auto& tr : t.transitions)
        dedup.insert({cls[tr.from], tr.label, cls[tr.to]});
    out.transitions.assign(dedup.begin(), dedup.end());
    return canonicalize(out);
}

std::set<WordTuple> enumerateLanguage(const MultiTapeAutomaton& m,
                                      std::int64_t maxWeightPerTape,
                                      std::size_t maxCount) {
    TransitionIndex idx = indexTransitions(m);
    std::set<WordTuple> result;
    WordTuple words(m.tapes);
    std::vector<std::int64_t> weight(m.tapes, 0);

    // Depth is bounded: every column adds at least 1 to some tape's weight.
    auto dfs = [&](auto&& self, int q, unsigned pattern) -> void {
        if (m.finals.count(q)) {
            result.insert(words);
            if (result.size() > maxCount)
                throw ResourceLimitError("language enumeration exceeded element budget");
        }
        for (const auto& [label, targets] : idx[q]) {
            unsigned pads = padMask(label);
            if ((pads & pattern) != pattern) continue;
            bool over = false;
            for (int i = 0; i < m.tapes && !over; ++i)
                if (label[i] != kPad &&
                    weight[i] + m.letterWeight(label[i]) > maxWeightPerTape)
                    over = true;
            if (over) continue;
            for (int i = 0; i < m.tapes; ++i)
                if (label[i] != kPad) {
                    words[i].push_back(label[i]);
                    weight[i] += m.letterWeight(label[i]);
                }
            for (int to : targets) self(self, to, pads);
            for (int i = 0; i < m.tapes; ++i)
                if (label[i] != kPad) {
                    weight[i] -= m.letterWeight(label[i]);
                    words[i].pop_back();
                }
        }
    };
    dfs(dfs, m.start, 0);
    return result;
}

std::int64_t tupleWeight(const MultiTapeAutomaton& m, const std::vector<std::string>& word) {
    std::int64_t w = 0;
    for (const auto& l : word) w = checked_add(w, m.letterWeight(l));
    return w;
}

}  // namespace solgrowth
