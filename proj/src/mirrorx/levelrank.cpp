#include "mirrorx/levelrank.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mirrorx::levelrank {

using affinechar::AffineModuleLabel;
using affinechar::conformalWeight;

Weight beta(const Weight& lambda, int level) {
    if (!lambda.algebra.isA()) throw std::invalid_argument("beta: A-family weights only");
    if (!lambda.dominant() || lambda.levelOf() > level) throw std::invalid_argument("beta: malformed weight for this level");
    const int m = lambda.algebra.n();
    const int n = level;
    // extended labels lambda_0..lambda_{m-1} with lambda_0 = n - sum
    std::vector<int> ext(m);
    ext[0] = n - lambda.levelOf();
    for (int i = 1; i < m; ++i) ext[i] = lambda.coords[i - 1];
    // shifted labels lambda'_i = lambda_i + 1; r_j = sum_{i=j..m} lambda'_i with lambda'_m == lambda'_0
    std::vector<int> shifted(m);
    for (int i = 0; i < m; ++i) shifted[i] = ext[i] + 1;
    std::vector<int> r(m + 1, 0);  // r[1..m]
    for (int j = m; j >= 1; --j) {
        int lam = (j == m) ? shifted[0] : shifted[j];
        r[j] = (j == m ? 0 : r[j + 1]) + lam;
    }
    // complementary sequence in {1..m+n}, decreasing
    std::set<int> rset(r.begin() + 1, r.end());
    std::vector<int> rbar;
    for (int v = m + n; v >= 1; --v)
        if (!rset.count(v)) rbar.push_back(v);
    if (static_cast<int>(rbar.size()) != n) throw std::logic_error("beta: complement size mismatch");
    // s_j = m + n + rbar_n - rbar_{n-j+1}
    std::vector<int> s(n + 1, 0);
    for (int j = 1; j <= n; ++j) s[j] = m + n + rbar[n - 1] - rbar[n - j];
    // recover labels of the image: s_j - s_{j+1} = label'_j (j=1..n-1), s_n = label'_0
    AlgebraKind target = AlgebraKind::slN(n);
    std::vector<int> c(n - 1);
    for (int j = 1; j <= n - 1; ++j) c[j - 1] = s[j] - s[j + 1] - 1;
    Weight out(target, c);
    if (!out.dominant() || out.levelOf() > m) throw std::logic_error("beta: image not dominant at level m");
    return out;
}

Weight cyclicAct(int mu, const Weight& lambda, int level) {
    const int m = lambda.algebra.n();
    std::vector<int> ext(m);
    ext[0] = level - lambda.levelOf();
    if (ext[0] < 0) throw std::invalid_argument("cyclicAct: weight above level");
    for (int i = 1; i < m; ++i) ext[i] = lambda.coords[i - 1];
    std::vector<int> rot(m);
    for (int i = 0; i < m; ++i) rot[((i + mu) % m + m) % m] = ext[i];
    std::vector<int> c(rot.begin() + 1, rot.end());
    return Weight(lambda.algebra, c);
}

std::map<int, std::vector<Weight>> cosetClasses(int m, int n) {
    if (static_cast<long>(m) * n > 64) throw std::runtime_error("cosetClasses: m*n budget exceeded");
    AlgebraKind alg = AlgebraKind::slN(m);
    std::map<int, std::vector<Weight>> classes;
    for (int i = 0; i < m; ++i) classes[i] = {};
    // enumerate dominant level-n weights (compositions of <= n into m-1 labels)
    std::vector<int> c(m - 1, 0);
    std::function<void(int, int)> rec = [&](int idx, int rem) {
        if (idx == m - 1) {
            Weight w(alg, c);
            long cls = 0;
            for (int j = 1; j <= m - 1; ++j) cls += static_cast<long>(j) * c[j - 1];
            classes[static_cast<int>(((cls % m) + m) % m)].push_back(w);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            c[idx] = v;
            rec(idx + 1, rem - v);
        }
        c[idx] = 0;
    };
    rec(0, n);
    for (auto& [i, ws] : classes) std::sort(ws.begin(), ws.end());
    return classes;
}

BranchingSpectrum branchingSpectrum(int m, int n, int lambdaTilde) {
    BranchingSpectrum spec;
    spec.m = m;
    spec.n = n;
    spec.lambdaTilde = ((lambdaTilde % (m * n)) + m * n) % (m * n);

    auto classes = cosetClasses(m, n);
    const auto& Q = classes.at(spec.lambdaTilde % m);

    AlgebraKind slm = AlgebraKind::slN(m);
    AlgebraKind sln = AlgebraKind::slN(n);
    AlgebraKind slmn = AlgebraKind::slN(m * n);
    Rational hTilde(0);
    if (spec.lambdaTilde != 0) {
        hTilde = conformalWeight(AffineModuleLabel(slmn, 1, liealg::fundamental(slmn, spec.lambdaTilde)));
    }

    for (const Weight& lam : Q) {
        Weight b = beta(lam, n);
        Rational hLam = conformalWeight(AffineModuleLabel(slm, n, lam));
        int found = -1;
        Weight img = b;
        for (int mu = 0; mu < n; ++mu) {
            Weight cand = cyclicAct(mu, b, m);
            Rational hDot = conformalWeight(AffineModuleLabel(sln, m, cand));
            Rational total = hLam + hDot - hTilde;
            if (is_integer(total)) {
                if (found >= 0) throw std::logic_error("branchingSpectrum: mu not unique for " + lam.str());
                found = mu;
                img = cand;
            }
        }
        if (found < 0) throw std::logic_error("branchingSpectrum: no valid mu for " + lam.str());
        BranchingPair p;
        p.lambda = lam;
        p.lambdaDot = img;
        p.mu = found;
        p.hLambda = hLam;
        p.hLambdaDot = conformalWeight(AffineModuleLabel(sln, m, img));
        spec.pairs.push_back(std::move(p));
    }
    std::sort(spec.pairs.begin(), spec.pairs.end(),
              [](const BranchingPair& a, const BranchingPair& b) { return a.lambda < b.lambda; });
    return spec;
}

std::string BranchingSpectrum::json() const {
    std::ostringstream os;
    os << "{\"m\":" << m << ",\"n\":" << n << ",\"LambdaTilde\":" << lambdaTilde << ",\"pairs\":[";
    for (size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        if (i) os << ",";
        os << "{\"lambda\":[";
        for (size_t j = 0; j < p.lambda.coords.size(); ++j) os << (j ? "," : "") << p.lambda.coords[j];
        os << "],\"lambdaDot\":[";
        for (size_t j = 0; j < p.lambdaDot.coords.size(); ++j) os << (j ? "," : "") << p.lambdaDot.coords[j];
        os << "],\"mu\":" << p.mu << ",\"hLambda\":\"" << p.hLambda.get_str() << "\",\"hLambdaDot\":\""
           << p.hLambdaDot.get_str() << "\"}";
    }
    os << "]}";
    return os.str();
}

}  // namespace mirrorx::levelrank
