#pragma once

#include <map>
#include <vector>

#include "mirrorx/rational.hpp"

namespace mirrorx::liealg {

enum class Family { A, B2Table, G2Table };

// Simple Lie algebra descriptor. Type A carries a full root-system backend;
// B2 and G2 are scalar lookup tables (dimension and dual Coxeter number only),
// which is all the weight-one and central-charge checks need.
struct AlgebraKind {
    Family family = Family::A;
    int rank = 1;  // meaningful for A only

    static AlgebraKind slN(int n);  // sl(n), rank n-1
    static AlgebraKind b2Table();
    static AlgebraKind g2Table();

    bool isA() const { return family == Family::A; }
    int n() const;            // A only: rank+1
    long dim() const;         // A: r(r+2); B2: 10; G2: 14
    int dualCoxeter() const;  // A: r+1; B2: 3; G2: 4

    bool operator==(const AlgebraKind& o) const { return family == o.family && (family != Family::A || rank == o.rank); }
    bool operator!=(const AlgebraKind& o) const { return !(*this == o); }
    bool operator<(const AlgebraKind& o) const;
};

// Weight in the fundamental-weight basis (Dynkin labels).
struct Weight {
    AlgebraKind algebra;
    std::vector<int> coords;  // length = rank

    Weight() = default;
    Weight(AlgebraKind a, std::vector<int> c);

    bool dominant() const;
    bool isZero() const;
    int levelOf() const;  // <lambda, theta> = sum of labels for type A

    bool operator==(const Weight& o) const { return algebra == o.algebra && coords == o.coords; }
    bool operator<(const Weight& o) const;
    std::string str() const;
};

Weight zeroWeight(const AlgebraKind& a);
Weight fundamental(const AlgebraKind& a, int i);  // Lambda_i, 1-based

// rho = sum of fundamental weights (A-family only).
Weight rho(const AlgebraKind& a);

// Invariant form with (theta,theta)=2; exact. For A_{n-1}: (Li,Lj)=min(i,j)-ij/n.
Rational inner(const Weight& lam, const Weight& mu);

// Casimir eigenvalue (lambda, lambda + 2 rho); requires dominant lambda.
Rational casimir(const Weight& lam);

// Weyl dimension formula, A-family.
Integer weylDim(const Weight& lam);

// Finite tensor product decomposition via the Littlewood-Richardson rule.
// Returns multiplicities keyed by dominant weight; exact.
std::map<Weight, long> tensorDecompose(const Weight& lam, const Weight& mu);

// Explicit irreducible sl(2) representation with Dynkin label j:
// (j+1)x(j+1) exact matrices, H = diag(j, j-2, ..., -j), [E,F] = H.
struct Sl2Rep {
    int j = 0;
    std::vector<std::vector<Rational>> E, F, H;
};
Sl2Rep sl2RepMatrices(int j);

// Partition helpers (exposed for tests): sl(n) dominant weight <-> partition
// with at most n rows (trailing zeros stripped, full columns removed).
std::vector<int> weightToPartition(const Weight& lam);
Weight partitionToWeight(const AlgebraKind& a, std::vector<int> part);

// Littlewood-Richardson expansion of the product of two partitions, rows
// capped at maxRows; keyed by partition.
std::map<std::vector<int>, long> lrProduct(const std::vector<int>& a, const std::vector<int>& b, int maxRows);

}  // namespace mirrorx::liealg
