#pragma once

#include <string>
#include <vector>

#include "mirrorx/rational.hpp"

namespace mirrorx::qseries {

// Exact formal q-expansion q^{leadExp} * sum_{d=0..order} coeffs[d] q^d.
// leadExp is an arbitrary rational (it houses -c/24 + h type prefactors);
// the coefficient grid always steps by integers.
class QSeries {
public:
    QSeries() = default;
    QSeries(Rational leadExp, std::vector<Rational> coeffs);

    static QSeries constant(const Rational& c, int order);

    const Rational& leadExp() const { return leadExp_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int d) const;

    // Addition requires the two leading exponents to differ by an integer;
    // silent alignment of fractional offsets would hide conformal-weight bugs.
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries scaled(const Rational& c) const;
    QSeries shifted(const Rational& exponentShift) const;

    // Division by a series whose 0-th coefficient is nonzero.
    QSeries divideByUnit(const QSeries& o) const;
    QSeries pow(long e) const;  // e may be negative when invertible
    QSeries truncated(int order) const;

    std::string json() const;  // {"leadExpNum":..,"leadExpDen":..,"coeffs":[..]}
    std::string csv() const;   // grade,numerator,denominator per line

private:
    Rational leadExp_ = Rational(0);
    std::vector<Rational> coeffs_ = {Rational(0)};
};

// product_{n>=1} (1-q^n)^power truncated at `order`; exact. Only integer
// powers form honest q-series; Lemma-4.1-style half-integer eta powers are
// handled upstream by classifying the square of the coefficient sequence.
QSeries euler_product_pow(long power, int order);

// eta(q)^power = q^{power/24} prod (1-q^n)^power; integer power required.
QSeries etaQuotientSeries(long power, int order);

// Rational-power entry point. Integer powers yield the series directly.
// Half-odd-integer powers are not a q-series; callers that need eta^{p/2}
// (the Lemma-4.1 comparator) classify the square instead, so this throws
// with a message pointing there. Any other power is rejected.
QSeries etaQuotientSeriesRational(const Rational& power, int order);

}  // namespace mirrorx::qseries
