#include "solgrowth/oracle.hpp"

#include <map>
#include <stdexcept>

namespace solgrowth {

namespace {

// One audited exponent table: each entry contributes coeff * z^(k*T + j).
struct Term {
    int k;
    int j;
    std::int64_t coeff;
};

// Bracketed factor of the numerator.
constexpr Term kNumeratorCore[] = {
    {0, 0, 1},   {0, 1, 3},   {0, 2, 4},   {0, 3, 4},   {0, 4, 3},   {0, 5, 1},
    {1, 0, -1},  {1, 1, -3},  {1, 2, -14}, {1, 3, -16}, {1, 4, -11}, {1, 5, -5},
    {1, 6, 2},
    {2, 1, 2},   {2, 2, -13}, {2, 3, 35},  {2, 4, 40},  {2, 5, 6},   {2, 6, -23},
    {2, 7, -7},  {2, 8, 4},   {2, 9, 4},
    {3, 2, -5},  {3, 3, 31},  {3, 4, -40}, {3, 5, -44}, {3, 6, 33},  {3, 7, 25},
    {3, 8, -12}, {3, 9, -4},
};

constexpr Term kDenFactor1[] = {
    {0, 0, 1}, {0, 1, -2}, {0, 2, -1}, {1, 0, -1}, {1, 1, 4}, {1, 2, -1},
};

constexpr Term kDenFactor2[] = {
    {0, 0, 1}, {0, 1, -1}, {0, 2, -1}, {0, 3, -1},
    {1, 1, -1}, {1, 2, 3}, {1, 3, 1}, {1, 4, -1},
};

using Poly = std::map<int, std::int64_t>;

template <std::size_t n>
Poly expand(const Term (&terms)[n], std::int64_t T) {
    Poly p;
    for (const Term& t : terms) {
        int deg = static_cast<int>(t.k * T) + t.j;
        p[deg] = checked_add(p[deg], t.coeff);
    }
    return p;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b)
            r[da + db] = checked_add(r[da + db], checked_mul(ca, cb));
    return r;
}

std::vector<std::int64_t> dense(const Poly& p) {
    int deg = 0;
    for (const auto& [d, c] : p)
        if (c != 0 && d > deg) deg = d;
    std::vector<std::int64_t> v(static_cast<std::size_t>(deg) + 1, 0);
    for (const auto& [d, c] : p) {
        if (d < 0) throw std::logic_error("negative degree in series polynomial");
        v[static_cast<std::size_t>(d)] = c;
    }
    while (v.size() > 1 && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

RationalSeries parrySeries(std::int64_t halfTrace) {
    if (halfTrace < 2)
        throw std::invalid_argument("half trace must be >= 2 (monodromy trace >= 4)");
    const std::int64_t T = halfTrace;

    Poly oneMinusZ{{0, 1}, {1, -1}};
    Poly onePlusZ{{0, 1}, {1, 1}};
    Poly num = mul(mul(mul(oneMinusZ, oneMinusZ), onePlusZ), expand(kNumeratorCore, T));

    Poly f2 = expand(kDenFactor2, T);
    Poly den = mul(expand(kDenFactor1, T), mul(f2, f2));

    return {dense(num), dense(den)};
}

}  // namespace solgrowth
