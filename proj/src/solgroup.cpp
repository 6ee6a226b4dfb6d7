#include "solgrowth/solgroup.hpp"

#include <stdexcept>

namespace solgrowth {

GroupParams::GroupParams(std::int64_t t) : trace(t) {
    if (t > -3 && t < 3)
        throw std::invalid_argument("group trace must satisfy |T| >= 3");
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {checked_add(checked_mul(a, o.a), checked_mul(b, o.c)),
            checked_add(checked_mul(a, o.b), checked_mul(b, o.d)),
            checked_add(checked_mul(c, o.a), checked_mul(d, o.c)),
            checked_add(checked_mul(c, o.b), checked_mul(d, o.d))};
}

std::array<std::int64_t, 2> Mat2::apply(const std::array<std::int64_t, 2>& v) const {
    return {checked_add(checked_mul(a, v[0]), checked_mul(b, v[1])),
            checked_add(checked_mul(c, v[0]), checked_mul(d, v[1]))};
}

Letter inverseLetter(Letter l) {
    switch (l) {
        case Letter::A: return Letter::AInv;
        case Letter::AInv: return Letter::A;
        case Letter::T: return Letter::TInv;
        case Letter::TInv: return Letter::T;
    }
    throw std::logic_error("bad letter");
}

GroupWord parseWord(const std::string& text) {
    GroupWord w;
    for (char ch : text) {
        switch (ch) {
            case 'a': w.push_back(Letter::A); break;
            case 'A': w.push_back(Letter::AInv); break;
            case 't': w.push_back(Letter::T); break;
            case 'T': w.push_back(Letter::TInv); break;
            case ' ': break;
            default:
                throw std::invalid_argument(std::string("bad word character '") + ch + "'");
        }
    }
    return w;
}

std::string wordToString(const GroupWord& w) {
    std::string s;
    for (Letter l : w) {
        switch (l) {
            case Letter::A: s += 'a'; break;
            case Letter::AInv: s += 'A'; break;
            case Letter::T: s += 't'; break;
            case Letter::TInv: s += 'T'; break;
        }
    }
    return s;
}

XElement evalWord(const GroupWord& w) {
    XElement x;
    std::int64_t partialHeight = 0;
    for (Letter l : w) {
        switch (l) {
            case Letter::T: partialHeight = checked_add(partialHeight, 1); break;
            case Letter::TInv: partialHeight = checked_sub(partialHeight, 1); break;
            case Letter::A:
                x.utype.addCoeff(static_cast<int>(partialHeight), 1);
                break;
            case Letter::AInv:
                x.utype.addCoeff(static_cast<int>(partialHeight), -1);
                break;
        }
    }
    x.height = partialHeight;
    return x;
}

Mat2 monodromy(const GroupParams& params) {
    return {0, -1, 1, params.trace};
}

Mat2 monodromyInverse(const GroupParams& params) {
    return {params.trace, 1, -1, 0};
}

Mat2 monodromyPower(const GroupParams& params, std::int64_t k) {
    Mat2 base = k >= 0 ? monodromy(params) : monodromyInverse(params);
    std::int64_t n = k >= 0 ? k : -k;
    Mat2 result = Mat2::identity();
    for (std::int64_t i = 0; i < n; ++i) result = result * base;
    return result;
}

GroupElement toGroupElement(const XElement& x, const GroupParams& params) {
    GroupElement g;
    g.h = x.height;
    for (const auto& [deg, c] : x.utype.terms()) {
        Mat2 mk = monodromyPower(params, deg);
        auto v = mk.apply({1, 0});
        g.x[0] = checked_add(g.x[0], checked_mul(c, v[0]));
        g.x[1] = checked_add(g.x[1], checked_mul(c, v[1]));
    }
    return g;
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2, const GroupParams& params) {
    Mat2 mh = monodromyPower(params, g1.h);
    auto moved = mh.apply(g2.x);
    GroupElement g;
    g.x = {checked_add(g1.x[0], moved[0]), checked_add(g1.x[1], moved[1])};
    g.h = checked_add(g1.h, g2.h);
    return g;
}

GroupElement invert(const GroupElement& g, const GroupParams& params) {
    Mat2 mh = monodromyPower(params, checked_neg(g.h));
    auto moved = mh.apply(g.x);
    GroupElement r;
    r.x = {checked_neg(moved[0]), checked_neg(moved[1])};
    r.h = checked_neg(g.h);
    return r;
}

bool equalWords(const GroupWord& w1, const GroupWord& w2, const GroupParams& params) {
    XElement x1 = evalWord(w1);
    XElement x2 = evalWord(w2);
    if (x1.height != x2.height) return false;
    return dividesPhi(x1.utype - x2.utype, params.trace);
}

std::int64_t geodesicLength(const XElement& x) {
    Decomposition d = decompose(x.utype, x.height);
    std::int64_t habs = x.height < 0 ? -x.height : x.height;
    std::int64_t s = checked_add(checked_mul(2, d.tailLen), checked_mul(2, d.headLen));
    s = checked_add(s, habs);
    return checked_add(s, x.utype.sumAbsCoeffs());
}

static void appendPower(GroupWord& w, Letter l, std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) w.push_back(l);
}

static void appendA(GroupWord& w, std::int64_t c) {
    appendPower(w, c >= 0 ? Letter::A : Letter::AInv, c >= 0 ? c : -c);
}

GroupWord geodesicWord(const XElement& x) {
    Decomposition d = decompose(x.utype, x.height);
    GroupWord w;
    if (x.height >= 0) {
        // t^{-TailLen} (prod_{i=-TailLen}^{-1} a^{c_i} t) a^{c_0}
        // (prod_{i=1}^{h+HeadLen} t a^{c_i}) t^{-HeadLen}
        appendPower(w, Letter::TInv, d.tailLen);
        for (std::int64_t i = -d.tailLen; i <= -1; ++i) {
            appendA(w, x.utype.coeff(static_cast<int>(i)));
            w.push_back(Letter::T);
        }
        appendA(w, x.utype.coeff(0));
        for (std::int64_t i = 1; i <= x.height + d.headLen; ++i) {
            w.push_back(Letter::T);
            appendA(w, x.utype.coeff(static_cast<int>(i)));
        }
        appendPower(w, Letter::TInv, d.headLen);
    } else {
        // Mirrored: climb to HeadLen, descend through 0 to h - TailLen,
        // return to h.
        appendPower(w, Letter::T, d.headLen);
        for (std::int64_t i = d.headLen; i >= 1; --i) {
            appendA(w, x.utype.coeff(static_cast<int>(i)));
            w.push_back(Letter::TInv);
        }
        appendA(w, x.utype.coeff(0));
        for (std::int64_t i = -1; i >= x.height - d.tailLen; --i) {
            w.push_back(Letter::TInv);
            appendA(w, x.utype.coeff(static_cast<int>(i)));
        }
        appendPower(w, Letter::T, d.tailLen);
    }
    return w;
}

}  // namespace solgrowth
