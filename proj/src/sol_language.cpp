#include "solgrowth/sol_language.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <tuple>

namespace solgrowth {

namespace {

bool validK(int k) { return k == -1 || k == 1 || k == 2; }

std::int64_t absT(std::int64_t t) { return t < 0 ? -t : t; }

/// tail / center / head split of a letter sequence; throws on shape errors.
struct Shape {
    int tailLen;
    int centerLen;
    int headLen;
    int centerK;  // +1 or -1
};

std::optional<Shape> shapeOf(const SolWord& w) {
    int i = 0;
    const int len = static_cast<int>(w.size());
    while (i < len && w[i].k == 2) ++i;
    int tail = i;
    if (i == len) return std::nullopt;  // condition 1
    int centerK = w[i].k;
    while (i < len && w[i].k == centerK) ++i;
    int center = i - tail;
    int head = 0;
    while (i < len && w[i].k == 2) {
        ++i;
        ++head;
    }
    if (i != len) return std::nullopt;  // condition 2 (mixed center signs)
    if (centerK == -1 && center < 2) return std::nullopt;  // condition 3
    return Shape{tail, center, head, centerK};
}

}  // namespace

std::int64_t SolLetter::weight() const {
    return static_cast<std::int64_t>(std::abs(c)) + std::abs(k);
}

std::string SolLetter::label() const {
    return std::to_string(c) + ":" + std::to_string(k);
}

SolLetter SolLetter::fromLabel(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad letter label '" + s + "'");
    SolLetter l;
    try {
        l.c = std::stoi(s.substr(0, colon));
        l.k = std::stoi(s.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad letter label '" + s + "'");
    }
    if (!validK(l.k)) throw std::invalid_argument("bad letter label '" + s + "'");
    return l;
}

SolWord parseSolWord(const std::string& text) {
    SolWord w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        if (text[i] != '(') throw std::invalid_argument("expected '(' in letter list");
        auto comma = text.find(',', i);
        auto close = text.find(')', i);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw std::invalid_argument("malformed letter in '" + text + "'");
        SolLetter l;
        try {
            l.c = std::stoi(text.substr(i + 1, comma - i - 1));
            l.k = std::stoi(text.substr(comma + 1, close - comma - 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed letter in '" + text + "'");
        }
        if (!validK(l.k)) throw std::invalid_argument("letter second entry must be -1, 1 or 2");
        w.push_back(l);
        i = close + 1;
    }
    return w;
}

std::string solWordToString(const SolWord& w) {
    std::string s;
    for (const SolLetter& l : w)
        s += "(" + std::to_string(l.c) + "," + std::to_string(l.k) + ")";
    return s;
}

bool validSolWord(const SolWord& w, bool strict) {
    auto shape = shapeOf(w);
    if (!shape) return false;
    if (strict) {
        if (w.front().k == 2 && w.front().c == 0) return false;
        if (w.back().k == 2 && w.back().c == 0) return false;
    }
    return true;
}

bool fitsAlphabet(const SolWord& w, int n) {
    for (const SolLetter& l : w)
        if (l.c < -n || l.c > n) return false;
    return true;
}

std::int64_t solWordWeight(const SolWord& w) {
    std::int64_t s = 0;
    for (const SolLetter& l : w) s = checked_add(s, l.weight());
    return s;
}

std::vector<std::string> solWordLabels(const SolWord& w) {
    std::vector<std::string> labels;
    labels.reserve(w.size());
    for (const SolLetter& l : w) labels.push_back(l.label());
    return labels;
}

int solTailLen(const SolWord& w) {
    int i = 0;
    while (i < static_cast<int>(w.size()) && w[i].k == 2) ++i;
    return i == static_cast<int>(w.size()) ? 0 : i;
}

int solHeadLen(const SolWord& w) {
    int i = 0;
    while (i < static_cast<int>(w.size()) && w[w.size() - 1 - i].k == 2) ++i;
    return i == static_cast<int>(w.size()) ? 0 : i;
}

MultiTapeAutomaton buildLn(int n, bool strict) {
    if (n < 1) throw std::invalid_argument("alphabet bound must be >= 1");
    // States: 0 start, 1 inside tail, 2 in +1 center, 3 read one -1 letter,
    // 4 in -1 center (>= 2 letters), 5 head last letter nonzero, 6 head
    // last letter (0,2).
    enum { S = 0, Tl = 1, C1 = 2, Cm1a = 3, Cm1 = 4, Hok = 5, Hbad = 6 };
    MultiTapeAutomaton m;
    m.tapes = 1;
    m.stateCount = 7;
    m.start = S;
    m.deterministic = true;
    for (int c = -n; c <= n; ++c)
        for (int k : {-1, 1, 2}) {
            SolLetter l{c, k};
            m.alphabet.push_back(l.label());
            m.weights[l.label()] = l.weight();
        }
    std::sort(m.alphabet.begin(), m.alphabet.end());

    auto edge = [&](int from, const SolLetter& l, int to) {
        m.transitions.push_back({from, {l.label()}, to});
    };
    for (int c = -n; c <= n; ++c) {
        SolLetter two{c, 2}, plus{c, 1}, minus{c, -1};
        if (!strict || c != 0) edge(S, two, Tl);
        edge(S, plus, C1);
        edge(S, minus, Cm1a);
        edge(Tl, two, Tl);
        edge(Tl, plus, C1);
        edge(Tl, minus, Cm1a);
        edge(C1, plus, C1);
        edge(C1, two, c != 0 ? Hok : Hbad);
        edge(Cm1a, minus, Cm1);
        edge(Cm1, minus, Cm1);
        edge(Cm1, two, c != 0 ? Hok : Hbad);
        edge(Hok, two, c != 0 ? Hok : Hbad);
        edge(Hbad, two, c != 0 ? Hok : Hbad);
    }
    m.finals = {C1, Cm1, Hok};
    if (!strict) m.finals.insert(Hbad);
    return minimizeDet(m);
}

XElement psi(const SolWord& w) {
    auto shape = shapeOf(w);
    if (!shape) throw std::invalid_argument("word violates the layered shape conditions");
    const auto [n1, centerLen, n3, centerK] = *shape;
    const int n2 = centerLen - 1;
    XElement x;
    if (centerK == 1) {
        x.height = n2;
        for (int i = 1; i <= n1; ++i) x.utype.addCoeff(i - n1 - 1, w[i - 1].c);
        for (int i = 0; i <= n2; ++i) x.utype.addCoeff(i, w[n1 + i].c);
        for (int i = 1; i <= n3; ++i) x.utype.addCoeff(n2 + i, w[n1 + centerLen + i - 1].c);
    } else {
        x.height = -n2;
        for (int i = 1; i <= n1; ++i) x.utype.addCoeff(i - n1 - n2 - 1, w[i - 1].c);
        for (int i = 0; i <= n2; ++i) x.utype.addCoeff(i - n2, w[n1 + i].c);
        for (int i = 1; i <= n3; ++i) x.utype.addCoeff(i, w[n1 + centerLen + i - 1].c);
    }
    return x;
}

SolWord psiInverse(const XElement& x, int n) {
    const std::int64_t h = x.height;
    const LaurentPoly& t = x.utype;
    int lo = 0, hi = 0;
    if (!t.isZero()) {
        lo = t.minDegree();
        hi = t.maxDegree();
    }
    auto coeffChecked = [&](int d) {
        std::int64_t c = t.coeff(d);
        if (c < -n || c > n)
            throw std::invalid_argument("coefficient out of alphabet range");
        return static_cast<int>(c);
    };
    SolWord w;
    if (h >= 0) {
        int centerLo = 0, centerHi = static_cast<int>(h);
        int tailFrom = (!t.isZero() && lo < centerLo) ? lo : centerLo;
        for (int d = tailFrom; d < centerLo; ++d) w.push_back({coeffChecked(d), 2});
        for (int d = centerLo; d <= centerHi; ++d) w.push_back({coeffChecked(d), 1});
        int headTo = (!t.isZero() && hi > centerHi) ? hi : centerHi;
        for (int d = centerHi + 1; d <= headTo; ++d) w.push_back({coeffChecked(d), 2});
    } else {
        int centerLo = static_cast<int>(h), centerHi = 0;
        int tailFrom = (!t.isZero() && lo < centerLo) ? lo : centerLo;
        for (int d = tailFrom; d < centerLo; ++d) w.push_back({coeffChecked(d), 2});
        for (int d = centerLo; d <= centerHi; ++d) w.push_back({coeffChecked(d), -1});
        int headTo = (!t.isZero() && hi > centerHi) ? hi : centerHi;
        for (int d = centerHi + 1; d <= headTo; ++d) w.push_back({coeffChecked(d), 2});
    }
    // Strict preimage: no leading or trailing (0,2).
    while (!w.empty() && w.front().k == 2 && w.front().c == 0) w.erase(w.begin());
    while (!w.empty() && w.back().k == 2 && w.back().c == 0) w.pop_back();
    return w;
}

MultiTapeAutomaton acceptorRnPrime(int n, std::int64_t trace) {
    if (n < 1) throw std::invalid_argument("alphabet bound must be >= 1");
    GroupParams params(trace);  // validates |T| >= 3
    const std::int64_t C = checked_add(2 * static_cast<std::int64_t>(n),
                                       checked_mul(2 * static_cast<std::int64_t>(n),
                                                   absT(trace) + 2));

    // Right-to-left division automaton: state = (linear remainder r1 z + r2,
    // section label).  Reading top degree first, each matched column updates
    // the remainder of (t1 - t2) mod (1 - T z + z^2).
    enum { Head = 0, Tail = 1, C1 = 2, Cm1 = 3, Cm1a = 4 };
    using Key = std::tuple<std::int64_t, std::int64_t, int>;
    std::map<Key, int> ids;
    std::vector<Key> states;
    auto intern = [&](const Key& k) {
        auto [it, fresh] = ids.emplace(k, static_cast<int>(states.size()));
        if (fresh) states.push_back(k);
        return it->second;
    };

    MultiTapeAutomaton r2l;
    r2l.tapes = 2;
    for (int c = -n; c <= n; ++c)
        for (int k : {-1, 1, 2}) {
            SolLetter l{c, k};
            r2l.alphabet.push_back(l.label());
            r2l.weights[l.label()] = l.weight();
        }
    std::sort(r2l.alphabet.begin(), r2l.alphabet.end());
    r2l.deterministic = true;
    r2l.start = intern({0, 0, Head});
    for (std::size_t cur = 0; cur < states.size(); ++cur) {
        auto [r1, r2, l] = states[cur];
        if (r1 == 0 && r2 == 0 && (l == Tail || l == C1 || l == Cm1))
            r2l.finals.insert(static_cast<int>(cur));
        for (int c1 = -n; c1 <= n; ++c1)
            for (int c2 = -n; c2 <= n; ++c2)
                for (int e : {-1, 1, 2}) {
                    int next;
                    if ((l == Head || l == Tail) && e == 2) next = l;
                    else if (l == Head && e == 1) next = C1;
                    else if (l == Head && e == -1) next = Cm1a;
                    else if (l == C1 && e == 1) next = C1;
                    else if ((l == C1 || l == Cm1) && e == 2) next = Tail;
                    else if ((l == Cm1a || l == Cm1) && e == -1) next = Cm1;
                    else continue;
                    std::int64_t delta = c1 - c2;
                    std::int64_t nr1 = r2 + trace * r1;
                    std::int64_t nr2 = delta - r1;
                    if (nr1 < -C || nr1 > C || nr2 < -C || nr2 > C) continue;
                    r2l.transitions.push_back(
                        {static_cast<int>(cur),
                         {SolLetter{c1, e}.label(), SolLetter{c2, e}.label()},
                         intern({nr1, nr2, next})});
                }
    }
    r2l.stateCount = static_cast<int>(states.size());
    // Accepted pairs line up column by column, so reversal needs no
    // resynchronization shift.
    return reverse(r2l, 0);
}

MultiTapeAutomaton acceptorRni(int n, int i, std::int64_t trace) {
    if (i < 0) throw std::invalid_argument("alignment slack must be >= 0");
    MultiTapeAutomaton rn = acceptorRnPrime(n, trace);
    auto block = [&](int r) {
        return std::vector<std::string>(static_cast<std::size_t>(r), SolLetter{0, 2}.label());
    };

    std::optional<MultiTapeAutomaton> acc;
    auto addCase = [&](const MultiTapeAutomaton& m) {
        if (!acc)
            acc = m;
        else
            acc = combine(CombineMode::Union, *acc, m);
    };
    for (int r = 0; r <= i; ++r)
        for (int s = 0; s <= i; ++s) {
            // {(w1,w2) : (Q_r w1 Q_s, w2)}, (Q_r w1, w2 Q_s),
            // (w1 Q_s, Q_r w2), (w1, Q_r w2 Q_s) all related in the
            // aligned acceptor.
            MultiTapeAutomaton p0 = prependOnTape(rn, 0, block(r));
            MultiTapeAutomaton p1 = prependOnTape(rn, 1, block(r));
            addCase(appendOnTape(p0, 0, block(s)));
            addCase(appendOnTape(p0, 1, block(s)));
            addCase(appendOnTape(p1, 0, block(s)));
            addCase(appendOnTape(p1, 1, block(s)));
        }
    MultiTapeAutomaton strict = buildLn(n, true);
    MultiTapeAutomaton both = combine(CombineMode::Intersection, liftTape(strict, 2, 0),
                                      liftTape(strict, 2, 1));
    return minimizeDet(combine(CombineMode::Intersection, *acc, both));
}

std::int64_t divergence(const SolWord& w1, const SolWord& w2) {
    XElement x1 = psi(w1);
    XElement x2 = psi(w2);
    std::map<int, std::int64_t> diff;
    for (const auto& [d, c] : x1.utype.terms()) diff[d] += c < 0 ? -c : c;
    for (const auto& [d, c] : x2.utype.terms()) diff[d] -= c < 0 ? -c : c;
    std::int64_t partial = 0, best = 0;
    for (const auto& [d, v] : diff) {
        partial = checked_add(partial, v);
        std::int64_t a = partial < 0 ? -partial : partial;
        if (a > best) best = a;
    }
    return best;
}

SolConstants solConstants(std::int64_t trace, int n) {
    GroupParams params(trace);
    const std::int64_t at = absT(trace);
    SolConstants c{};
    c.trace = trace;
    c.B = 10 * at;
    c.L = (at + 2) * c.B;
    c.K = (at + 2) * (3 * c.B + 4) + 8 * c.L + 1;
    c.N = 5 * at + (at + 2) * c.B;
    c.fellowConstant = c.K + (c.N + 6) * c.L;
    c.C = 2 * static_cast<std::int64_t>(n) +
          2 * static_cast<std::int64_t>(n) * (at + 2);
    return c;
}

SolWord shrinkRepresentative(const SolWord& w, const SolConstants& consts) {
    XElement x = psi(w);
    const LaurentPoly phi = phiModulus(consts.trace);
    const std::int64_t weight0 = solWordWeight(w);
    const int tail0 = solTailLen(w);
    const int head0 = solHeadLen(w);

    auto tryCandidate = [&](const LaurentPoly& t2) -> std::optional<SolWord> {
        for (const auto& [d, c] : t2.terms())
            if (c < -consts.N || c > consts.N) return std::nullopt;
        SolWord w2 = psiInverse({t2, x.height}, static_cast<int>(consts.N));
        if (w2.empty() || !validSolWord(w2, true)) return std::nullopt;
        if (solWordWeight(w2) >= weight0) return std::nullopt;
        if (std::abs(solTailLen(w2) - tail0) > consts.L) return std::nullopt;
        if (std::abs(solHeadLen(w2) - head0) > consts.L) return std::nullopt;
        if (divergence(w, w2) > consts.K) return std::nullopt;
        return w2;
    };

    const LaurentPoly& t = x.utype;
    std::vector<LaurentPoly> candidates;
    if (!t.isZero()) {
        int lo = t.minDegree();
        int hi = t.maxDegree();
        // Coefficient reduction: +-5 z^j (1 - T z + z^2), which can trade a
        // large coefficient for two moderate neighbors.
        for (int j = lo - 1; j <= hi + 1; ++j) {
            LaurentPoly move = phi.shifted(j) * LaurentPoly::constant(5);
            candidates.push_back(t + move);
            candidates.push_back(t - move);
        }
        // Clearing the extreme terms shortens the tail or head outright.
        candidates.push_back(t - phi.shifted(lo) * LaurentPoly::constant(t.coeff(lo)));
        candidates.push_back(t - phi.shifted(hi - 2) * LaurentPoly::constant(t.coeff(hi)));
        // Unit perturbations around the support.
        for (int j = lo - 2; j <= hi + 2; ++j) {
            candidates.push_back(t + phi.shifted(j));
            candidates.push_back(t - phi.shifted(j));
        }
    }
    for (const LaurentPoly& t2 : candidates)
        if (auto w2 = tryCandidate(t2)) return *w2;
    return w;
}

std::string pipelineStateEstimate(std::int64_t trace, int n, std::int64_t K, int i) {
    using boost::multiprecision::cpp_int;
    const std::int64_t at = absT(trace);
    cpp_int C = 2 * cpp_int(n) + 2 * cpp_int(n) * (at + 2);
    cpp_int acceptorStates = (2 * C + 1) * (2 * C + 1) * 5 + 1;
    cpp_int ftStates = 2 * cpp_int(K) + 3;
    cpp_int paddingCases = 4 * cpp_int(i + 1) * cpp_int(i + 1);
    cpp_int total = acceptorStates * ftStates * paddingCases;
    return total.str();
}

SolPipelineOutcome solPipeline(std::int64_t trace,
                               const std::optional<SolPipelineOverrides>& overrides) {
    GroupParams params(trace);
    SolPipelineOutcome out;
    int n;
    std::int64_t K;
    int i;
    if (overrides) {
        n = overrides->n;
        K = overrides->K;
        i = overrides->i;
    } else {
        SolConstants c = solConstants(trace, 1);
        out.theoremScale = true;
        n = static_cast<int>(c.N);
        K = c.fellowConstant;
        i = static_cast<int>(c.L);
    }

    constexpr std::int64_t kBudget = 2000000;
    using boost::multiprecision::cpp_int;
    cpp_int estimate(pipelineStateEstimate(trace, n, K, i));
    if (estimate > kBudget) {
        out.refused = true;
        out.stateEstimate = estimate.str();
        out.refusalReason = "estimated automaton size exceeds the state budget";
        return out;
    }

    try {
        MultiTapeAutomaton L = buildLn(n, true);
        MultiTapeAutomaton R = acceptorRni(n, i, trace);
        out.crossSection = minimalCrossSection(L, L, R, K);
        out.series = growthSeries(out.crossSection);
    } catch (const ResourceLimitError& e) {
        out.refused = true;
        out.refusalReason = e.what();
        out.stateEstimate = estimate.str();
    }
    return out;
}

}  // namespace solgrowth
