#include "mirrorx/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace mirrorx::qseries {

QSeries::QSeries(Rational leadExp, std::vector<Rational> coeffs)
    : leadExp_(std::move(leadExp)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("QSeries needs at least one coefficient");
}

QSeries QSeries::constant(const Rational& c, int order) {
    std::vector<Rational> v(order + 1, Rational(0));
    v[0] = c;
    return QSeries(Rational(0), std::move(v));
}

const Rational& QSeries::coeff(int d) const {
    static const Rational zero(0);
    if (d < 0 || d > order()) return zero;
    return coeffs_[d];
}

QSeries QSeries::operator+(const QSeries& o) const {
    Rational diff = o.leadExp_ - leadExp_;
    if (!is_integer(diff))
        throw std::domain_error("QSeries add: leading exponents differ by a non-integer (" + leadExp_.get_str() +
                                " vs " + o.leadExp_.get_str() + ")");
    long d = to_long(to_integer(diff));
    const QSeries& lo = d >= 0 ? *this : o;
    const QSeries& hi = d >= 0 ? o : *this;
    long shift = d >= 0 ? d : -d;
    // result grid starts at lo.leadExp_
    int ord = std::min<long>(lo.order(), hi.order() + shift);
    std::vector<Rational> v(ord + 1, Rational(0));
    for (int i = 0; i <= ord; ++i) {
        v[i] = lo.coeffs_[i];
        if (i - shift >= 0 && i - shift <= hi.order()) v[i] += hi.coeffs_[i - shift];
    }
    return QSeries(lo.leadExp_, std::move(v));
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o.scaled(Rational(-1)); }

QSeries QSeries::operator*(const QSeries& o) const {
    int ord = std::min(order(), o.order());
    std::vector<Rational> v(ord + 1, Rational(0));
    for (int i = 0; i <= ord; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (o.coeffs_[j] == 0) continue;
            v[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return QSeries(leadExp_ + o.leadExp_, std::move(v));
}

QSeries QSeries::scaled(const Rational& c) const {
    std::vector<Rational> v = coeffs_;
    for (auto& x : v) x *= c;
    return QSeries(leadExp_, std::move(v));
}

QSeries QSeries::shifted(const Rational& exponentShift) const { return QSeries(leadExp_ + exponentShift, coeffs_); }

QSeries QSeries::divideByUnit(const QSeries& o) const {
    if (o.coeffs_[0] == 0) throw std::domain_error("QSeries divide: divisor is not a unit");
    int ord = std::min(order(), o.order());
    std::vector<Rational> v(ord + 1, Rational(0));
    for (int i = 0; i <= ord; ++i) {
        Rational acc = coeff(i);
        for (int j = 1; j <= i; ++j) acc -= o.coeff(j) * v[i - j];
        v[i] = acc / o.coeffs_[0];
    }
    return QSeries(leadExp_ - o.leadExp_, std::move(v));
}

QSeries QSeries::pow(long e) const {
    QSeries one = QSeries::constant(Rational(1), order());
    if (e == 0) return one;
    QSeries base = e > 0 ? *this : one.divideByUnit(*this);
    unsigned long n = e > 0 ? e : -e;
    QSeries acc = one;
    QSeries p = base;
    while (n) {
        if (n & 1) acc = acc * p;
        p = p * p;
        n >>= 1;
    }
    return acc;
}

QSeries QSeries::truncated(int ord) const {
    if (ord >= order()) return *this;
    std::vector<Rational> v(coeffs_.begin(), coeffs_.begin() + ord + 1);
    return QSeries(leadExp_, std::move(v));
}

std::string QSeries::json() const {
    std::ostringstream os;
    os << "{\"leadExpNum\":" << leadExp_.get_num().get_str() << ",\"leadExpDen\":" << leadExp_.get_den().get_str()
       << ",\"coeffs\":[";
    for (int i = 0; i <= order(); ++i) {
        if (i) os << ",";
        if (is_integer(coeffs_[i]))
            os << coeffs_[i].get_num().get_str();
        else
            os << "\"" << coeffs_[i].get_str() << "\"";
    }
    os << "]}";
    return os.str();
}

std::string QSeries::csv() const {
    std::ostringstream os;
    os << "grade,numerator,denominator\n";
    for (int i = 0; i <= order(); ++i)
        os << i << "," << coeffs_[i].get_num().get_str() << "," << coeffs_[i].get_den().get_str() << "\n";
    return os.str();
}

QSeries euler_product_pow(long power, int order) {
    // prod (1-q^n) once, then integer power.
    std::vector<Rational> base(order + 1, Rational(0));
    base[0] = Rational(1);
    for (int n = 1; n <= order; ++n) {
        // multiply by (1 - q^n) in place
        for (int d = order; d >= n; --d) base[d] -= base[d - n];
    }
    QSeries e(Rational(0), std::move(base));
    return e.pow(power);
}

QSeries etaQuotientSeries(long power, int order) {
    if (order < 0) throw std::invalid_argument("etaQuotientSeries: order >= 0 required");
    QSeries prod = euler_product_pow(power, order);
    return prod.shifted(Rational(power, 24));
}

QSeries etaQuotientSeriesRational(const Rational& power, int order) {
    if (is_integer(power)) return etaQuotientSeries(to_long(to_integer(power)), order);
    if (power.get_den() == 2)
        throw std::domain_error("etaQuotientSeries: eta^{" + power.get_str() +
                                "} is not a q-series; classify the square (power " +
                                Rational(2 * power).get_str() + ") instead");
    throw std::domain_error("etaQuotientSeries: power must lie in (1/2)Z, got " + power.get_str());
}

}  // namespace mirrorx::qseries
