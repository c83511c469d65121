#include "mirrorx/affinechar.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "mirrorx/qseries.hpp"

namespace mirrorx::affinechar {

using liealg::weylDim;

AffineModuleLabel::AffineModuleLabel(AlgebraKind a, int k) : algebra(a), level(k) {
    if (k < 1) throw std::invalid_argument("level must be positive");
    if (a.isA()) weight = liealg::zeroWeight(a);
}

AffineModuleLabel::AffineModuleLabel(AlgebraKind a, int k, Weight lambda)
    : algebra(a), level(k), weight(std::move(lambda)) {
    if (k < 1) throw std::invalid_argument("level must be positive");
    if (!a.isA()) throw std::domain_error("weighted labels are A-family only");
    if (!weight.dominant()) throw std::domain_error("label weight must be dominant");
    if (weight.levelOf() > level) throw std::domain_error("<lambda,theta> exceeds the level");
}

Rational centralCharge(const AffineModuleLabel& label) {
    Rational c(label.level * label.algebra.dim(), label.level + label.algebra.dualCoxeter());
    c.canonicalize();
    return c;
}

Rational conformalWeight(const AffineModuleLabel& label) {
    if (!label.algebra.isA()) throw std::domain_error("conformalWeight: A-family only");
    Rational h = liealg::casimir(label.weight) / Rational(2 * (label.level + label.algebra.dualCoxeter()));
    h.canonicalize();
    return h;
}

QSeries thetaSeriesA(int n, int cosetIndex, int order) {
    if (n < 2) throw std::invalid_argument("thetaSeriesA: n >= 2");
    if (cosetIndex < 0 || cosetIndex >= n) throw std::invalid_argument("thetaSeriesA: coset index in 0..n-1");
    // vectors x in Z^n with sum = cosetIndex; A-lattice norm |x|^2 - i^2/n,
    // graded from its minimum h_i = i(n-i)/(2n) in integer steps.
    const int i = cosetIndex;
    const long maxSq = i + 2L * order;  // sum of squares at relative grade d is i + 2d
    const long smax = maxSq + i + 1;
    const long sdim = 2 * smax + 1;
    if (static_cast<long long>(n) * sdim * (maxSq + 1) > 10'000'000LL)
        throw std::runtime_error("thetaSeriesA: enumeration budget exceeded");

    // dp[s + smax][m] = #ways, s = running sum, m = running sum of squares
    std::vector<std::vector<Integer>> dp(sdim, std::vector<Integer>(maxSq + 1, Integer(0)));
    dp[smax][0] = 1;
    long vmax = 0;
    while ((vmax + 1) * (vmax + 1) <= maxSq) ++vmax;
    for (int coord = 0; coord < n; ++coord) {
        std::vector<std::vector<Integer>> nx(sdim, std::vector<Integer>(maxSq + 1, Integer(0)));
        for (long s = 0; s < sdim; ++s)
            for (long m = 0; m <= maxSq; ++m) {
                if (dp[s][m] == 0) continue;
                for (long v = -vmax; v <= vmax; ++v) {
                    long ns = s + v, nm = m + v * v;
                    if (ns < 0 || ns >= sdim || nm > maxSq) continue;
                    nx[ns][nm] += dp[s][m];
                }
            }
        dp.swap(nx);
    }
    std::vector<Rational> coeffs(order + 1, Rational(0));
    for (int d = 0; d <= order; ++d) {
        long m = i + 2L * d;
        if (m <= maxSq) coeffs[d] = Rational(dp[smax + i][m]);
    }
    Rational lead(static_cast<long>(i) * (n - i), 2L * n);
    lead.canonicalize();
    return QSeries(lead, std::move(coeffs));
}

QSeries level1CharacterSlN(int N, int fundamentalIndex, int order) {
    QSeries theta = thetaSeriesA(N, fundamentalIndex, order);
    QSeries denom = qseries::euler_product_pow(N - 1, order);
    QSeries chr = theta.divideByUnit(denom);
    return chr.shifted(Rational(-(N - 1), 24));
}

QSeries sl2AffineCharacter(int k, int j, int order) {
    if (j < 0 || j > k) throw std::invalid_argument("sl2AffineCharacter: 0 <= j <= k");
    std::vector<Rational> num(order + 1, Rational(0));
    for (long n = -order - 2; n <= order + 2; ++n) {
        long expo = (k + 2) * n * n + (j + 1) * n;
        if (expo >= 0 && expo <= order) num[expo] += Rational(2 * n * (k + 2) + j + 1);
    }
    QSeries numer(Rational(0), std::move(num));
    QSeries dims = numer.divideByUnit(qseries::euler_product_pow(3, order));
    AlgebraKind sl2 = AlgebraKind::slN(2);
    AffineModuleLabel label(sl2, k, Weight(sl2, {j}));
    Rational lead = conformalWeight(label) - centralCharge(label) / 24;
    lead.canonicalize();
    return QSeries(lead, dims.coeffs());
}

// ---------------------------------------------------------------------------
// Affine Freudenthal recursion, type A.
// ---------------------------------------------------------------------------

namespace {

struct FreudenthalCtx {
    AlgebraKind alg;
    int n;
    int level;
    std::vector<int> lambda;                  // highest weight labels
    Rational topNorm;                         // |lambda+rho|^2
    std::vector<std::vector<int>> posRoots;   // label vectors
    std::vector<std::vector<int>> allRoots;   // pos and neg
    std::map<std::pair<int, std::vector<int>>, Rational> memo;

    Rational innerLabels(const std::vector<int>& a, const std::vector<int>& b) const {
        Rational acc(0);
        for (int i = 1; i <= n - 1; ++i) {
            if (a[i - 1] == 0) continue;
            for (int j = 1; j <= n - 1; ++j) {
                if (b[j - 1] == 0) continue;
                Rational g = Rational(std::min(i, j)) - Rational(static_cast<long>(i) * j, n);
                acc += Rational(a[i - 1]) * Rational(b[j - 1]) * g;
            }
        }
        acc.canonicalize();
        return acc;
    }

    Rational normPlusRho(const std::vector<int>& w) const {
        std::vector<int> wr(w);
        for (auto& x : wr) x += 1;
        return innerLabels(wr, wr);
    }

    // eps coordinates (unnormalized partial sums), length n
    static std::vector<long> toEps(const std::vector<int>& labels) {
        const int r = static_cast<int>(labels.size());
        std::vector<long> x(r + 1, 0);
        for (int i = r - 1; i >= 0; --i) x[i] = x[i + 1] + labels[i];
        return x;
    }

    static std::vector<int> fromEps(std::vector<long> x) {
        const int n = static_cast<int>(x.size());
        std::vector<int> labels(n - 1);
        for (int i = 0; i < n - 1; ++i) labels[i] = static_cast<int>(x[i] - x[i + 1]);
        return labels;
    }

    static std::vector<int> dominantRep(const std::vector<int>& labels) {
        auto x = toEps(labels);
        std::sort(x.begin(), x.end(), std::greater<long>());
        return fromEps(std::move(x));
    }

    static Integer orbitSize(const std::vector<int>& domLabels) {
        auto x = toEps(domLabels);
        const int n = static_cast<int>(x.size());
        Integer sz(1);
        for (int i = 2; i <= n; ++i) sz *= i;
        int run = 1;
        for (int i = 1; i < n; ++i) {
            if (x[i] == x[i - 1])
                ++run;
            else
                run = 1;
            if (run > 1) mpz_divexact_ui(sz.get_mpz_t(), sz.get_mpz_t(), run);
        }
        return sz;
    }

    Rational mult(const std::vector<int>& mu, int depth) {
        if (depth < 0) return Rational(0);
        std::vector<int> dmu = dominantRep(mu);
        if (depth == 0 && dmu == lambda) return Rational(1);
        auto key = std::make_pair(depth, dmu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        const Rational kh = Rational(2 * (level + n) * depth);
        Rational denom = topNorm - normPlusRho(dmu) + kh;
        if (denom <= 0) {
            memo.emplace(key, Rational(0));
            return Rational(0);
        }
        const Rational bound = topNorm + kh;  // support: |nu+rho|^2 <= |lambda+rho|^2 + 2(k+hv)depth
        Rational sum(0);

        // real roots (alpha, j=0), alpha > 0, t >= 1
        for (const auto& alpha : posRoots) {
            std::vector<int> nu = dmu;
            for (long t = 1;; ++t) {
                for (int i = 0; i < n - 1; ++i) nu[i] += alpha[i];
                Rational nn = innerLabels(nu, nu);
                // |nu|^2 grows strictly with t for dominant dmu; outside support -> stop
                if (nn > bound) break;
                Rational m = mult(nu, depth);
                if (m != 0) sum += m * (innerLabels(nu, alpha));
            }
        }
        // real roots (alpha, j>=1), alpha any finite root, t >= 1, depth' = depth - t*j
        for (int j = 1; j <= depth; ++j) {
            for (const auto& alpha : allRoots) {
                std::vector<int> nu = dmu;
                for (long t = 1; t * j <= depth; ++t) {
                    for (int i = 0; i < n - 1; ++i) nu[i] += alpha[i];
                    int dd = depth - static_cast<int>(t) * j;
                    Rational m = mult(nu, dd);
                    if (m != 0) sum += m * (innerLabels(nu, alpha) + Rational(level * j));
                }
            }
            // imaginary root j*delta with multiplicity rank = n-1
            for (long t = 1; t * j <= depth; ++t) {
                int dd = depth - static_cast<int>(t) * j;
                Rational m = mult(dmu, dd);
                if (m != 0) sum += Rational(n - 1) * m * Rational(level * j);
            }
        }
        Rational result = Rational(2) * sum / denom;
        result.canonicalize();
        memo[key] = result;
        return result;
    }
};

}  // namespace

std::vector<Integer> affineGradedDims(const AffineModuleLabel& label, int depth) {
    if (!label.algebra.isA()) throw std::domain_error("affineGradedDims: A-family only");
    const int n = label.algebra.n();
    if (depth > 6 && n - 1 > 3) throw std::runtime_error("affineGradedDims: depth budget exceeded for this rank");
    if (depth > 40) throw std::runtime_error("affineGradedDims: depth budget exceeded");

    FreudenthalCtx ctx;
    ctx.alg = label.algebra;
    ctx.n = n;
    ctx.level = label.level;
    ctx.lambda = label.weight.coords;
    ctx.topNorm = ctx.normPlusRho(ctx.lambda);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            // root eps_i - eps_j in Dynkin labels: lab_t = x_t - x_{t+1}
            std::vector<long> x(n, 0);
            x[i - 1] += 1;
            x[j - 1] -= 1;
            std::vector<int> labels(n - 1);
            for (int t = 0; t < n - 1; ++t) labels[t] = static_cast<int>(x[t] - x[t + 1]);
            ctx.allRoots.push_back(labels);
            if (i < j) ctx.posRoots.push_back(labels);
        }

    // enumerate dominant support candidates per depth and sum orbit sizes
    std::vector<Integer> dims(depth + 1, Integer(0));
    for (int d = 0; d <= depth; ++d) {
        Rational bound = ctx.topNorm + Rational(2 * (label.level + n) * d);
        // enumerate dominant mu with |mu+rho|^2 <= bound and mu = lambda mod Q
        long lamClass = 0;
        for (int i = 0; i < n - 1; ++i) lamClass += static_cast<long>(i + 1) * ctx.lambda[i];
        lamClass %= n;
        // DFS over shifted eps coordinates y_1 > y_2 > ... > y_n = 0 of mu+rho,
        // pruning with |mu+rho|^2 = (1/n) sum_{i<j} (y_i - y_j)^2 <= bound.
        std::vector<long> y(n, 0);
        std::vector<std::vector<int>> found;
        // y_i = p_i + (n - i), p = partition; y strictly decreasing, y_n = 0
        std::function<void(int, long, Rational)> dfs = [&](int idx, long prevY, Rational pairAcc) {
            if (idx == n - 1) {
                y[n - 1] = 0;
                Rational total = pairAcc;
                for (int i = 0; i < n - 1; ++i) total += Rational(y[i] * y[i]);  // pairs with y_n = 0
                total /= n;
                if (total > bound) return;
                // recover labels; check congruence class
                long sumP = 0;
                std::vector<int> labels(n - 1);
                for (int i = 0; i < n - 1; ++i) {
                    long p = y[i] - (n - 1 - i);
                    labels[i] = static_cast<int>((y[i] - y[i + 1]) - 1);
                    sumP += p;
                }
                for (int i = 0; i < n - 1; ++i)
                    if (labels[i] < 0) return;
                if (((sumP - lamClass) % n + n) % n != 0) return;
                found.push_back(labels);
                return;
            }
            long minY = n - 1 - idx;  // must leave room for strictly decreasing tail ending at 0
            // y_1 bound: |mu+rho|^2 >= y_1^2/n, so y_1 <= sqrt(n*bound)
            long cap;
            if (idx == 0) {
                double bd = mpq_get_d(bound.get_mpq_t());
                cap = static_cast<long>(std::sqrt(std::max(0.0, bd * n))) + 1;
            } else {
                cap = prevY - 1;
            }
            for (long v = minY; v <= cap; ++v) {
                Rational acc = pairAcc;
                for (int i = 0; i < idx; ++i) acc += Rational((y[i] - v) * (y[i] - v));
                // admissible prune: accumulated pair terms already exceed n*bound
                if (acc / n > bound) {
                    if (idx == 0) break;
                    continue;
                }
                y[idx] = v;
                dfs(idx + 1, v, acc);
            }
        };
        dfs(0, 0, Rational(0));
        Integer total(0);
        for (auto& labels : found) {
            Rational m = ctx.mult(labels, d);
            if (m != 0) {
                if (!is_integer(m) || m < 0) throw std::logic_error("affine Freudenthal produced a non-integer multiplicity");
                total += to_integer(m) * FreudenthalCtx::orbitSize(labels);
            }
        }
        dims[d] = total;
    }
    return dims;
}

// ---------------------------------------------------------------------------
// Growth classifier
// ---------------------------------------------------------------------------

namespace {

double logAbs(const Rational& q) {
    if (q == 0) return -std::numeric_limits<double>::infinity();
    signed long exn, exd;
    double mn = mpz_get_d_2exp(&exn, q.get_num_mpz_t());
    double md = mpz_get_d_2exp(&exd, q.get_den_mpz_t());
    return std::log(std::fabs(mn / md)) + (static_cast<double>(exn) - exd) * std::log(2.0);
}

}  // namespace

GrowthVerdict growthClassify(const QSeries& series) {
    GrowthVerdict v;
    std::vector<int> nz;
    for (int d = 1; d <= series.order(); ++d)
        if (series.coeff(d) != 0) nz.push_back(d);

    if (static_cast<int>(nz.size()) < 50) {
        // degenerate inputs: finitely supported tails are trivially polynomial
        bool tailZero = true;
        for (int d = series.order() / 2; d <= series.order(); ++d)
            if (series.coeff(d) != 0) tailZero = false;
        if (tailZero) {
            v.classification = Growth::Polynomial;
            v.note = "finitely supported coefficients";
            return v;
        }
        throw std::domain_error("growthClassify: need at least 50 nonzero coefficients");
    }

    // trailing 40% window of nonzero indices
    size_t start = nz.size() - std::max<size_t>(10, (nz.size() * 2) / 5);
    std::vector<double> ns, Ls;
    for (size_t t = start; t < nz.size(); ++t) {
        ns.push_back(static_cast<double>(nz[t]));
        Ls.push_back(logAbs(series.coeff(nz[t])));
    }
    const size_t m = ns.size();

    // super-polynomial test: log a_n ~ c sqrt(n), ratio convergent within 10%
    std::vector<double> ratio(m);
    for (size_t t = 0; t < m; ++t) ratio[t] = Ls[t] / std::sqrt(ns[t]);
    std::vector<double> sortedRatio = ratio;
    std::nth_element(sortedRatio.begin(), sortedRatio.begin() + m / 2, sortedRatio.end());
    double ratioMed = sortedRatio[m / 2];
    bool ratioConverged = ratioMed > 0;
    for (size_t t = 0; t < m && ratioConverged; ++t)
        if (std::fabs(ratio[t] - ratioMed) > 0.10 * std::fabs(ratioMed)) ratioConverged = false;
    // least squares L = c sqrt(n) + b
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (size_t t = 0; t < m; ++t) {
        double x = std::sqrt(ns[t]);
        sx += x;
        sy += Ls[t];
        sxx += x * x;
        sxy += x * Ls[t];
        syy += Ls[t] * Ls[t];
    }
    double denomFit = m * sxx - sx * sx;
    double c = (m * sxy - sx * sy) / denomFit;
    double b = (sy - c * sx) / m;
    double ssRes = 0, ssTot = 0, meanY = sy / m;
    for (size_t t = 0; t < m; ++t) {
        double pred = c * std::sqrt(ns[t]) + b;
        ssRes += (Ls[t] - pred) * (Ls[t] - pred);
        ssTot += (Ls[t] - meanY) * (Ls[t] - meanY);
    }
    double r2 = ssTot > 0 ? 1.0 - ssRes / ssTot : 0.0;
    v.diagnostics = ratio;

    if (c > 0 && r2 > 0.99 && ratioConverged) {
        v.classification = Growth::SuperPolynomial;
        v.fittedExponent = c;
        v.r2 = r2;
        v.note = "log a_n / sqrt(n) converges";
        return v;
    }

    // polynomial test: r_n = log a_n / log n bounded over the window
    std::vector<double> rp(m);
    for (size_t t = 0; t < m; ++t) rp[t] = Ls[t] / std::log(ns[t]);
    std::vector<double> sortedRp = rp;
    std::nth_element(sortedRp.begin(), sortedRp.begin() + m / 2, sortedRp.end());
    double rpMed = sortedRp[m / 2];
    double rpMax = *std::max_element(rp.begin(), rp.end());
    double rpMin = *std::min_element(rp.begin(), rp.end());
    bool boundedMedian = rpMed > 0 ? (rpMax < 1.5 * rpMed) : (rpMax - rpMin < 1.0);
    // drift guard: the exponent estimate must not keep growing across the window
    double drift = rpMed != 0 ? (rp[m - 1] - rp[0]) / std::fabs(rpMed) : 0.0;
    if (boundedMedian && drift < 0.12) {
        v.classification = Growth::Polynomial;
        v.fittedExponent = rpMax;
        v.r2 = r2;
        v.note = "log a_n / log n bounded";
        return v;
    }

    v.classification = Growth::Inconclusive;
    v.fittedExponent = rpMax;
    v.r2 = r2;
    v.note = "neither regime detected";
    return v;
}

}  // namespace mirrorx::affinechar
