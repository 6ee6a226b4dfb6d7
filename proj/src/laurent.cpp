#include "solgrowth/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace solgrowth {

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int degree) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[degree] = coeff;
    return p;
}

std::int64_t LaurentPoly::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? 0 : it->second;
}

void LaurentPoly::setCoeff(int degree, std::int64_t value) {
    if (value == 0)
        coeffs_.erase(degree);
    else
        coeffs_[degree] = value;
}

void LaurentPoly::addCoeff(int degree, std::int64_t delta) {
    setCoeff(degree, checked_add(coeff(degree), delta));
}

int LaurentPoly::minDegree() const {
    if (coeffs_.empty()) throw std::logic_error("minDegree of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::maxDegree() const {
    if (coeffs_.empty()) throw std::logic_error("maxDegree of zero polynomial");
    return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [d, c] : o.coeffs_) r.addCoeff(d, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [d, c] : o.coeffs_) r.addCoeff(d, checked_neg(c));
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [d, c] : coeffs_) r.coeffs_[d] = checked_neg(c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [d1, c1] : coeffs_)
        for (const auto& [d2, c2] : o.coeffs_)
            r.addCoeff(d1 + d2, checked_mul(c1, c2));
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [d, c] : coeffs_) r.coeffs_[d + k] = c;
    return r;
}

std::int64_t LaurentPoly::sumAbsCoeffs() const {
    std::int64_t s = 0;
    for (const auto& [d, c] : coeffs_) {
        (void)d;
        s = checked_add(s, c < 0 ? checked_neg(c) : c);
    }
    return s;
}

std::string LaurentPoly::toString() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        std::int64_t a = c;
        if (first) {
            if (a < 0) out << "-";
        } else {
            out << (a < 0 ? "-" : "+");
        }
        first = false;
        std::int64_t mag = a < 0 ? -a : a;
        if (d == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag;
            out << "z";
            if (d != 1) out << "^" << d;
        }
    }
    return out.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly result;
    std::size_t i = 0;
    auto skipSpace = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skipSpace();
    if (i == text.size()) throw std::invalid_argument("empty polynomial");
    bool any = false;
    while (i < text.size()) {
        skipSpace();
        std::int64_t sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skipSpace();
        } else if (any) {
            throw std::invalid_argument("expected '+' or '-' in polynomial: " + text);
        }
        if (i >= text.size()) throw std::invalid_argument("dangling sign in polynomial: " + text);
        std::int64_t mag = 1;
        bool sawDigits = false;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            mag = std::stoll(text.substr(start, i - start));
            sawDigits = true;
        }
        int degree = 0;
        if (i < text.size() && text[i] == 'z') {
            ++i;
            degree = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t start = i;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == start) throw std::invalid_argument("bad exponent in polynomial: " + text);
                degree = std::stoi(text.substr(start, i - start));
            }
        } else if (!sawDigits) {
            throw std::invalid_argument("unexpected character in polynomial: " + text);
        }
        result.addCoeff(degree, checked_mul(sign, mag));
        any = true;
        skipSpace();
    }
    return result;
}

LaurentPoly phiModulus(std::int64_t trace) {
    LaurentPoly phi;
    phi.setCoeff(0, 1);
    phi.addCoeff(1, checked_neg(trace));
    phi.addCoeff(2, 1);
    return phi;
}

static void requireAnosovTrace(std::int64_t trace) {
    if (trace > -3 && trace < 3)
        throw std::invalid_argument("trace must satisfy |T| >= 3");
}

std::pair<LaurentPoly, LaurentPoly> divRemPhi(const LaurentPoly& p, std::int64_t trace) {
    requireAnosovTrace(trace);
    const LaurentPoly phi = phiModulus(trace);
    LaurentPoly rem = p;
    LaurentPoly quot;
    // Reduce high degrees: z^d = T z^{d-1} - z^{d-2} for d >= 2.
    while (!rem.isZero() && rem.maxDegree() >= 2) {
        int d = rem.maxDegree();
        std::int64_t c = rem.coeff(d);
        quot.addCoeff(d - 2, c);
        rem = rem - phi.shifted(d - 2) * LaurentPoly::constant(c);
    }
    // Reduce negative degrees: z^d phi has support {d, d+1, d+2} with d+2 <= 1.
    while (!rem.isZero() && rem.minDegree() < 0) {
        int d = rem.minDegree();
        std::int64_t c = rem.coeff(d);
        quot.addCoeff(d, c);
        rem = rem - phi.shifted(d) * LaurentPoly::constant(c);
    }
    return {quot, rem};
}

bool dividesPhi(const LaurentPoly& p, std::int64_t trace) {
    return divRemPhi(p, trace).second.isZero();
}

Decomposition decompose(const LaurentPoly& p, std::int64_t height) {
    Decomposition d;
    if (height >= 0) {
        for (const auto& [deg, c] : p.terms()) {
            if (deg < 0)
                d.tail.setCoeff(deg, c);
            else if (deg <= height)
                d.center.setCoeff(deg, c);
            else
                d.head.setCoeff(deg, c);
        }
        d.tailLen = d.tail.isZero() ? 0 : -static_cast<std::int64_t>(d.tail.minDegree());
        d.headLen = d.head.isZero() ? 0 : static_cast<std::int64_t>(d.head.maxDegree()) - height;
    } else {
        for (const auto& [deg, c] : p.terms()) {
            if (deg < height)
                d.tail.setCoeff(deg, c);
            else if (deg <= 0)
                d.center.setCoeff(deg, c);
            else
                d.head.setCoeff(deg, c);
        }
        d.tailLen = d.tail.isZero() ? 0 : height - static_cast<std::int64_t>(d.tail.minDegree());
        d.headLen = d.head.isZero() ? 0 : d.head.maxDegree();
    }
    return d;
}

std::int64_t xSize(const XElement& x) {
    Decomposition d = decompose(x.utype, x.height);
    std::int64_t habs = x.height < 0 ? -x.height : x.height;
    std::int64_t s = checked_add(checked_mul(2, d.tailLen), checked_mul(2, d.headLen));
    s = checked_add(s, habs);
    s = checked_add(s, 1);
    return checked_add(s, x.utype.sumAbsCoeffs());
}

}  // namespace solgrowth
