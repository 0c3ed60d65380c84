#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <vector>

#include "npo/graph.hpp"

namespace npo {

using Rational = mpq_class;

/// Thrown by schur_complement when the selected block is singular; the
/// caller is expected to pick another block.
class SingularBlockError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense symmetric matrix over arbitrary-precision rationals. Symmetry is
/// structural: set() writes both mirror entries.
class ExactSymmetricMatrix {
public:
    explicit ExactSymmetricMatrix(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("matrix dimension must be nonnegative");
        a_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    }

    static ExactSymmetricMatrix adjacency(const Graph& g);

    int dimension() const { return n_; }

    const Rational& at(int i, int j) const { return a_[index(i, j)]; }

    void set(int i, int j, const Rational& value) {
        a_[index(i, j)] = value;
        a_[index(j, i)] = value;
    }

    Rational trace() const {
        Rational t = 0;
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    friend bool operator==(const ExactSymmetricMatrix& x, const ExactSymmetricMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_;
    std::vector<Rational> a_;
};

/// Eigenvalue sign counts: n_plus + n_minus + n_zero always equals the
/// dimension of the matrix they were computed from.
struct Inertia {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;

    int nonpositive() const { return n_minus + n_zero; }

    friend bool operator==(const Inertia&, const Inertia&) = default;
    friend Inertia operator+(const Inertia& a, const Inertia& b) {
        return {a.n_plus + b.n_plus, a.n_minus + b.n_minus, a.n_zero + b.n_zero};
    }
};

/// Exact inertia by symmetric congruence elimination: 1x1 pivots on the
/// largest-magnitude diagonal entry while one exists, and an off-diagonal
/// 2x2 pivot (contributing one positive and one negative eigenvalue) once
/// the remaining diagonal is all zero. Sign counts are exact by Sylvester's
/// law of inertia.
Inertia exact_inertia(const ExactSymmetricMatrix& m);

/// Number of nonpositive adjacency eigenvalues of g, computed exactly.
int nonpositive_count(const Graph& g);

/// Schur complement eliminating the rows/columns in `block` (the trailing
/// block role M22): M11 - M12 M22^-1 M21, over exact rationals. Throws
/// SingularBlockError when the block is not invertible.
ExactSymmetricMatrix schur_complement(const ExactSymmetricMatrix& m, std::span<const int> block);

/// Self-test of inertia additivity across the Schur complement: verifies
/// i(M) = i(M22) + i(M/M22) componentwise. Must hold for every valid block.
bool inertia_additivity_check(const ExactSymmetricMatrix& m, std::span<const int> block);

}  // namespace npo
