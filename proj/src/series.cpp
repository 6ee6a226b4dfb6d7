#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "solgrowth/automaton.hpp"

namespace solgrowth {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigPoly = std::vector<BigInt>;  // dense, index = degree

void trimPoly(BigPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

BigPoly add(const BigPoly& a, const BigPoly& b) {
    BigPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trimPoly(r);
    return r;
}

BigPoly sub(const BigPoly& a, const BigPoly& b) {
    BigPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trimPoly(r);
    return r;
}

BigPoly mul(const BigPoly& a, const BigPoly& b) {
    if (a.empty() || b.empty()) return {};
    BigPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trimPoly(r);
    return r;
}

/// Exact polynomial division; the divisibility is guaranteed by the
/// fraction-free elimination identity.
BigPoly exactDivide(BigPoly num, const BigPoly& den) {
    if (den.empty()) throw std::logic_error("division by zero polynomial");
    trimPoly(num);
    if (num.empty()) return {};
    if (num.size() < den.size()) throw std::logic_error("inexact polynomial division");
    BigPoly quot(num.size() - den.size() + 1);
    for (std::size_t d = num.size(); d >= den.size(); --d) {
        std::size_t qi = d - den.size();
        const BigInt& lead = num[d - 1];
        if (lead != 0) {
            if (lead % den.back() != 0) throw std::logic_error("inexact polynomial division");
            BigInt q = lead / den.back();
            quot[qi] = q;
            for (std::size_t j = 0; j < den.size(); ++j) num[qi + j] -= q * den[j];
        }
    }
    trimPoly(num);
    if (!num.empty()) throw std::logic_error("inexact polynomial division");
    return quot;
}

/// Fraction-free determinant over Z[z] (Bareiss), exact.
BigPoly determinant(std::vector<std::vector<BigPoly>> a) {
    const std::size_t n = a.size();
    if (n == 0) return {BigInt(1)};
    int sign = 1;
    BigPoly prevPivot{BigInt(1)};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].empty()) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k].empty()) ++swap;
            if (swap == n) return {};
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exactDivide(sub(mul(a[k][k], a[i][j]), mul(a[i][k], a[k][j])),
                                      prevPivot);
        prevPivot = a[k][k];
    }
    BigPoly det = a[n - 1][n - 1];
    if (sign < 0)
        for (auto& c : det) c = -c;
    return det;
}

std::vector<std::int64_t> toInt64(const BigPoly& p) {
    std::vector<std::int64_t> out;
    out.reserve(p.size());
    for (const BigInt& c : p) {
        if (c < std::numeric_limits<std::int64_t>::min() ||
            c > std::numeric_limits<std::int64_t>::max())
            throw OverflowError("series coefficient exceeds 64 bits");
        out.push_back(static_cast<std::int64_t>(c));
    }
    return out;
}

}  // namespace

RationalSeries growthSeries(const MultiTapeAutomaton& m) {
    if (!m.deterministic)
        throw std::invalid_argument("growth series requires a deterministic automaton");
    if (m.tapes != 1) throw std::invalid_argument("growth series requires a 1-tape automaton");
    MultiTapeAutomaton t = trim(m);
    if (t.finals.empty()) return {{0}, {1}};

    const std::size_t n = static_cast<std::size_t>(t.stateCount);
    // Row i of I - A(z) is the linear relation on the series from each state;
    // the right-hand side marks final states.
    std::vector<std::vector<BigPoly>> mat(n, std::vector<BigPoly>(n));
    for (std::size_t i = 0; i < n; ++i) mat[i][i] = {BigInt(1)};
    for (const auto& tr : t.transitions) {
        std::int64_t w = t.letterWeight(tr.label[0]);
        if (w <= 0) throw std::invalid_argument("letter weights must be positive");
        BigPoly& cell = mat[tr.from][tr.to];
        if (cell.size() < static_cast<std::size_t>(w) + 1) cell.resize(w + 1);
        cell[w] -= 1;
    }

    BigPoly den = determinant(mat);
    std::vector<std::vector<BigPoly>> numMat = mat;
    for (std::size_t i = 0; i < n; ++i)
        numMat[i][static_cast<std::size_t>(t.start)] =
            t.finals.count(static_cast<int>(i)) ? BigPoly{BigInt(1)} : BigPoly{};
    BigPoly num = determinant(numMat);

    if (den.empty() || den[0] == 0) throw std::logic_error("singular series denominator");
    if (den[0] < 0) {
        for (auto& c : den) c = -c;
        for (auto& c : num) c = -c;
    }
    // Divide out the content gcd to keep coefficients small.
    BigInt g = 0;
    for (const auto& c : den) g = boost::multiprecision::gcd(g, c);
    for (const auto& c : num) g = boost::multiprecision::gcd(g, c);
    if (g > 1) {
        for (auto& c : den) c /= g;
        for (auto& c : num) c /= g;
    }
    if (den[0] != 1) {
        // Constant term should be the empty-product 1; normalizing by it
        // would leave Z only if it divides everything, which gcd handled.
        throw std::logic_error("series denominator constant term not 1");
    }
    if (num.empty()) num = {BigInt(0)};
    return {toInt64(num), toInt64(den)};
}

std::vector<std::int64_t> seriesCoefficients(const RationalSeries& s, int count) {
    if (count < 0) throw std::invalid_argument("negative coefficient count");
    if (s.denominator.empty() || s.denominator[0] != 1)
        throw std::invalid_argument("denominator constant term must be 1");
    std::vector<std::int64_t> c(static_cast<std::size_t>(count), 0);
    for (int k = 0; k < count; ++k) {
        std::int64_t v = k < static_cast<int>(s.numerator.size()) ? s.numerator[k] : 0;
        for (int j = 1; j <= k && j < static_cast<int>(s.denominator.size()); ++j)
            v = checked_sub(v, checked_mul(s.denominator[j], c[k - j]));
        c[k] = v;
    }
    return c;
}

}  // namespace solgrowth
