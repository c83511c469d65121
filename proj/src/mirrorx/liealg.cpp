#include "mirrorx/liealg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mirrorx::liealg {

AlgebraKind AlgebraKind::slN(int n) {
    if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
    return AlgebraKind{Family::A, n - 1};
}
AlgebraKind AlgebraKind::b2Table() { return AlgebraKind{Family::B2Table, 2}; }
AlgebraKind AlgebraKind::g2Table() { return AlgebraKind{Family::G2Table, 2}; }

int AlgebraKind::n() const {
    if (!isA()) throw std::domain_error("n() defined for A-family only");
    return rank + 1;
}

long AlgebraKind::dim() const {
    switch (family) {
        case Family::A: return static_cast<long>(rank) * (rank + 2);
        case Family::B2Table: return 10;
        case Family::G2Table: return 14;
    }
    throw std::logic_error("unreachable");
}

int AlgebraKind::dualCoxeter() const {
    switch (family) {
        case Family::A: return rank + 1;
        case Family::B2Table: return 3;
        case Family::G2Table: return 4;
    }
    throw std::logic_error("unreachable");
}

bool AlgebraKind::operator<(const AlgebraKind& o) const {
    if (family != o.family) return family < o.family;
    if (family == Family::A) return rank < o.rank;
    return false;
}

Weight::Weight(AlgebraKind a, std::vector<int> c) : algebra(a), coords(std::move(c)) {
    if (!algebra.isA()) throw std::domain_error("weights are supported for A-family only");
    if (static_cast<int>(coords.size()) != algebra.rank)
        throw std::invalid_argument("weight coordinate count does not match rank");
}

bool Weight::dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Weight::isZero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

int Weight::levelOf() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Weight::operator<(const Weight& o) const {
    if (algebra < o.algebra) return true;
    if (o.algebra < algebra) return false;
    return coords < o.coords;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    os << "]";
    return os.str();
}

Weight zeroWeight(const AlgebraKind& a) { return Weight(a, std::vector<int>(a.rank, 0)); }

Weight fundamental(const AlgebraKind& a, int i) {
    if (i < 1 || i > a.rank) throw std::invalid_argument("fundamental weight index out of range");
    std::vector<int> c(a.rank, 0);
    c[i - 1] = 1;
    return Weight(a, c);
}

Weight rho(const AlgebraKind& a) {
    if (!a.isA()) throw std::domain_error("rho: unsupported family (B2/G2 carry scalar tables only)");
    return Weight(a, std::vector<int>(a.rank, 1));
}

Rational inner(const Weight& lam, const Weight& mu) {
    if (lam.algebra != mu.algebra) throw std::invalid_argument("inner: algebra mismatch");
    const int n = lam.algebra.n();
    Rational acc(0);
    for (int i = 1; i <= lam.algebra.rank; ++i) {
        if (lam.coords[i - 1] == 0) continue;
        for (int j = 1; j <= lam.algebra.rank; ++j) {
            if (mu.coords[j - 1] == 0) continue;
            // (Lambda_i, Lambda_j) = min(i,j) - ij/n
            Rational g = Rational(std::min(i, j)) - Rational(static_cast<long>(i) * j, n);
            g.canonicalize();
            acc += Rational(lam.coords[i - 1]) * Rational(mu.coords[j - 1]) * g;
        }
    }
    return acc;
}

Rational casimir(const Weight& lam) {
    if (!lam.dominant()) throw std::domain_error("casimir: dominant weight required");
    Weight r = rho(lam.algebra);
    Weight lp2r = lam;
    for (int i = 0; i < lam.algebra.rank; ++i) lp2r.coords[i] += 2 * r.coords[i];
    return inner(lam, lp2r);
}

Integer weylDim(const Weight& lam) {
    if (!lam.dominant()) throw std::domain_error("weylDim: dominant weight required");
    const int n = lam.algebra.n();
    // l_i = (lambda+rho, eps_i - eps_n)-style strictly decreasing integers.
    std::vector<long> l(n);
    long acc = 0;
    l[n - 1] = 0;
    for (int i = n - 2; i >= 0; --i) {
        acc += lam.coords[i] + 1;
        l[i] = acc;
    }
    Integer num(1), den(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= Integer(l[i] - l[j]);
            den *= Integer(j - i);
        }
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("weylDim: non-integral result");
    return q;
}

std::vector<int> weightToPartition(const Weight& lam) {
    const int r = lam.algebra.rank;
    std::vector<int> p(r, 0);
    int acc = 0;
    for (int i = r - 1; i >= 0; --i) {
        acc += lam.coords[i];
        p[i] = acc;
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Weight partitionToWeight(const AlgebraKind& a, std::vector<int> part) {
    const int n = a.n();
    if (static_cast<int>(part.size()) > n) throw std::invalid_argument("partition has more rows than sl(n) allows");
    part.resize(n, 0);
    const int full = part[n - 1];
    if (full > 0)
        for (auto& x : part) x -= full;  // strip full columns
    std::vector<int> c(a.rank);
    for (int i = 0; i < a.rank; ++i) c[i] = part[i] - part[i + 1];
    return Weight(a, c);
}

namespace {

// Enumerate Littlewood-Richardson chains: nu^0 = a, nu^r / nu^{r-1} a
// horizontal strip of size b_r, subject to the lattice-word condition
// (per row i: #(r+1)'s in rows 1..i <= #r's in rows 1..i-1).
void lrRecurse(const std::vector<int>& b, size_t r, std::vector<int>& shape,
               std::vector<std::vector<int>>& strips, int maxRows,
               std::map<std::vector<int>, long>& out) {
    if (r == b.size()) {
        std::vector<int> key = shape;
        while (!key.empty() && key.back() == 0) key.pop_back();
        ++out[key];
        return;
    }
    const int need = b[r];
    const std::vector<int> prev = shape;
    std::vector<int> strip(maxRows, 0);

    // place `need` boxes of value r+1 row by row
    std::function<void(int, int)> place = [&](int row, int remaining) {
        if (remaining == 0) {
            strips.push_back(strip);
            lrRecurse(b, r + 1, shape, strips, maxRows, out);
            strips.pop_back();
            return;
        }
        if (row >= maxRows) return;
        // horizontal strip: at most one new box per column
        int hi = (row == 0) ? remaining : std::min(remaining, prev[row - 1] - prev[row]);
        if (hi < 0) hi = 0;
        for (int cnt = 0; cnt <= hi; ++cnt) {
            if (cnt > 0 && r > 0) {
                // lattice condition: #(r+1)'s in rows 1..row+1 <= #r's in rows 1..row
                long lhs = cnt, rhs = 0;
                for (int i = 0; i < row; ++i) lhs += strip[i];
                for (int i = 0; i < row; ++i) rhs += strips[r - 1][i];
                if (lhs > rhs) break;  // larger cnt only worsens it
            }
            strip[row] += cnt;
            shape[row] += cnt;
            place(row + 1, remaining - cnt);
            strip[row] -= cnt;
            shape[row] -= cnt;
        }
    };
    place(0, need);
}

}  // namespace

std::map<std::vector<int>, long> lrProduct(const std::vector<int>& a, const std::vector<int>& b, int maxRows) {
    std::map<std::vector<int>, long> out;
    std::vector<int> shape = a;
    shape.resize(maxRows, 0);
    std::vector<std::vector<int>> strips;
    lrRecurse(b, 0, shape, strips, maxRows, out);
    return out;
}

std::map<Weight, long> tensorDecompose(const Weight& lam, const Weight& mu) {
    if (lam.algebra != mu.algebra) throw std::invalid_argument("tensorDecompose: algebra mismatch");
    if (!lam.dominant() || !mu.dominant()) throw std::domain_error("tensorDecompose: dominant weights required");
    const AlgebraKind a = lam.algebra;
    auto pa = weightToPartition(lam);
    auto pb = weightToPartition(mu);
    auto prod = lrProduct(pa, pb, a.n());
    std::map<Weight, long> out;
    for (auto& [part, mult] : prod) out[partitionToWeight(a, part)] += mult;
    return out;
}

Sl2Rep sl2RepMatrices(int j) {
    if (j < 0) throw std::invalid_argument("sl2RepMatrices: j >= 0 required");
    const int d = j + 1;
    Sl2Rep rep;
    rep.j = j;
    auto zeros = std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0)));
    rep.E = zeros;
    rep.F = zeros;
    rep.H = zeros;
    // basis v_0..v_j, v_0 highest; H v_i = (j-2i) v_i; F v_i = v_{i+1};
    // E v_i = i(j-i+1) v_{i-1}.
    for (int i = 0; i < d; ++i) {
        rep.H[i][i] = Rational(j - 2 * i);
        if (i + 1 < d) rep.F[i + 1][i] = Rational(1);
        if (i >= 1) rep.E[i - 1][i] = Rational(static_cast<long>(i) * (j - i + 1));
    }
    return rep;
}

}  // namespace mirrorx::liealg
