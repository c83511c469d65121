#pragma once

#include <map>
#include <string>
#include <vector>

#include "mirrorx/affinechar.hpp"
#include "mirrorx/liealg.hpp"

namespace mirrorx::levelrank {

using liealg::AlgebraKind;
using liealg::Weight;

// The duality map beta: level-n dominant weights of sl(m) -> level-m dominant
// weights of sl(n), via complementary shifted partial-sum sequences.
Weight beta(const Weight& lambda, int level);

// Z_m action on level-k labels of sl(m): Lambda_i -> Lambda_{(i+mu) mod m},
// including the affine label lambda_0 = k - sum(lambda_i).
Weight cyclicAct(int mu, const Weight& lambda, int level);

// Q_i = (Q + Lambda_i) cap P^n_{++}: dominant level-n weights of sl(m) in the
// root-lattice class of Lambda_i, keyed by i in 0..m-1.
std::map<int, std::vector<Weight>> cosetClasses(int m, int n);

struct BranchingPair {
    Weight lambda;     // sl(m) level n
    Weight lambdaDot;  // sl(n) level m
    int mu = 0;        // Z_n twist with lambdaDot = mu . beta(lambda)
    Rational hLambda;
    Rational hLambdaDot;
};

struct BranchingSpectrum {
    int m = 2, n = 10;
    int lambdaTilde = 0;  // level-1 sl(mn) label in Z_mn
    std::vector<BranchingPair> pairs;
    std::string json() const;
};

// Branching of L_{sl(mn)}(1, LambdaTilde) under sl(m)_n x sl(n)_m: for each
// lambda in Q_{LambdaTilde mod m} the unique mu with
// h_lambda + h_{mu beta(lambda)} = h_{LambdaTilde} (mod 1).
BranchingSpectrum branchingSpectrum(int m, int n, int lambdaTilde);

}  // namespace mirrorx::levelrank
