#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "solgrowth/checked.hpp"

namespace solgrowth {

/// Sparse integer Laurent polynomial.  The map holds only nonzero
/// coefficients; the zero polynomial is the empty map.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(std::int64_t coeff, int degree);
    static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }

    bool isZero() const { return coeffs_.empty(); }
    std::int64_t coeff(int degree) const;
    void setCoeff(int degree, std::int64_t value);
    void addCoeff(int degree, std::int64_t delta);

    // Both require a nonzero polynomial.
    int minDegree() const;
    int maxDegree() const;

    const std::map<int, std::int64_t>& terms() const { return coeffs_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    /// Multiply by z^k.
    LaurentPoly shifted(int k) const;
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

    std::int64_t sumAbsCoeffs() const;

    /// "2z^-2+5+z^3" style rendering; "0" for the zero polynomial.
    std::string toString() const;
    static LaurentPoly parse(const std::string& text);

private:
    std::map<int, std::int64_t> coeffs_;
};

/// 1 - T z + z^2 for a given trace.
LaurentPoly phiModulus(std::int64_t trace);

/// Tail/center/head split of a Laurent polynomial relative to a height.
struct Decomposition {
    LaurentPoly tail;
    LaurentPoly center;
    LaurentPoly head;
    std::int64_t tailLen = 0;
    std::int64_t headLen = 0;
};

/// A pair (unreduced type, height).
struct XElement {
    LaurentPoly utype;
    std::int64_t height = 0;
    bool operator==(const XElement& o) const {
        return height == o.height && utype == o.utype;
    }
};

/// Divide p by 1 - T z + z^2, remainder canonically supported on {0,1}.
/// Requires |T| >= 3.
std::pair<LaurentPoly, LaurentPoly> divRemPhi(const LaurentPoly& p, std::int64_t trace);

/// True iff 1 - T z + z^2 divides p.  Requires |T| >= 3.
bool dividesPhi(const LaurentPoly& p, std::int64_t trace);

Decomposition decompose(const LaurentPoly& p, std::int64_t height);

/// 2 TailLen + 2 HeadLen + |h| + 1 + sum |c_i|.
std::int64_t xSize(const XElement& x);

}  // namespace solgrowth
