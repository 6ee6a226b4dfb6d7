#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "solgrowth/laurent.hpp"

namespace solgrowth {

/// Parameters of G = Z^2 x| Z with companion-matrix monodromy
/// [[0,-1],[1,T]].  Requires |T| >= 3.
struct GroupParams {
    std::int64_t trace;
    explicit GroupParams(std::int64_t t);
};

/// 2x2 integer matrix, column-vector convention.
struct Mat2 {
    std::int64_t a, b, c, d;  // [[a,b],[c,d]]
    Mat2 operator*(const Mat2& o) const;
    std::array<std::int64_t, 2> apply(const std::array<std::int64_t, 2>& v) const;
    static Mat2 identity() { return {1, 0, 0, 1}; }
};

/// Element of G in the basis {a, Ma}: integer 2-vector plus height.
struct GroupElement {
    std::array<std::int64_t, 2> x{0, 0};
    std::int64_t h = 0;
    bool operator==(const GroupElement& o) const { return x == o.x && h == o.h; }
};

enum class Letter : std::uint8_t { A, AInv, T, TInv };

/// Free-group word over {a, a^-1, t, t^-1}; not required reduced.
using GroupWord = std::vector<Letter>;

Letter inverseLetter(Letter l);

/// "TataaT" syntax: a/t letters, uppercase means inverse.
GroupWord parseWord(const std::string& text);
std::string wordToString(const GroupWord& w);

/// Left-to-right partial-height evaluation: t^{+-1} shifts the height,
/// a^{+-1} contributes +-z^H to the unreduced type.
XElement evalWord(const GroupWord& w);

Mat2 monodromy(const GroupParams& params);
Mat2 monodromyInverse(const GroupParams& params);
Mat2 monodromyPower(const GroupParams& params, std::int64_t k);

/// Evaluate the unreduced type at the monodromy matrix, applied to a=(1,0).
GroupElement toGroupElement(const XElement& x, const GroupParams& params);

GroupElement compose(const GroupElement& g1, const GroupElement& g2, const GroupParams& params);
GroupElement invert(const GroupElement& g, const GroupParams& params);

bool equalWords(const GroupWord& w1, const GroupWord& w2, const GroupParams& params);

/// Length of the shortest free-group word with the given unreduced type
/// and height: 2 TailLen + 2 HeadLen + |h| + sum |c_i|.
std::int64_t geodesicLength(const XElement& x);

/// A concrete word realizing geodesicLength; evalWord round-trips.
GroupWord geodesicWord(const XElement& x);

}  // namespace solgrowth
