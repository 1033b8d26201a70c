#pragma once

#include <Eigen/Core>

#include <initializer_list>
#include <vector>

#include "cycoh/integer.hpp"

namespace Eigen {

template <>
struct NumTraits<cycoh::Int> : GenericNumTraits<cycoh::Int> {
    using Real = cycoh::Int;
    using NonInteger = cycoh::Int;
    using Nested = cycoh::Int;
    using Literal = cycoh::Int;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 30,
        MulCost = 60,
    };
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace cycoh {

/// Dense column-vector and matrix types over an arbitrary scalar.
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Exact integer matrix, the carrier for module actions and maps.
/// 0 x n and n x 0 shapes are legal and show up as maps of trivial groups.
using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;

using Index = Eigen::Index;

/// Row-major literal constructor, mostly for tests and small built-in data.
inline IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    const Index r = static_cast<Index>(rows.size());
    Index c = 0;
    if (r > 0) c = static_cast<Index>(rows.begin()->size());
    IntMatrix result(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != c)
            throw InvalidInputError("make_matrix: ragged row lengths");
        Index j = 0;
        for (long long x : row) result(i, j++) = Int(x);
        ++i;
    }
    return result;
}

inline IntVector make_vector(std::initializer_list<long long> entries) {
    IntVector v(static_cast<Index>(entries.size()));
    Index i = 0;
    for (long long x : entries) v(i++) = Int(x);
    return v;
}

/// A^k for k >= 0; A must be square.
inline IntMatrix matrix_power(const IntMatrix& a, std::int64_t k) {
    if (a.rows() != a.cols()) throw InvalidInputError("matrix_power: matrix not square");
    IntMatrix result = IntMatrix::Identity(a.rows(), a.rows());
    IntMatrix base = a;
    for (; k > 0; k >>= 1) {
        if (k & 1) result = result * base;
        base = base * base;
    }
    return result;
}

inline bool is_identity(const IntMatrix& a) {
    return a.rows() == a.cols() && a == IntMatrix::Identity(a.rows(), a.cols());
}

inline bool is_zero(const IntMatrix& a) {
    return a == IntMatrix::Zero(a.rows(), a.cols());
}

/// Horizontal concatenation [a | b].
inline IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw InvalidInputError("hcat: row count mismatch");
    IntMatrix result(a.rows(), a.cols() + b.cols());
    result.leftCols(a.cols()) = a;
    result.rightCols(b.cols()) = b;
    return result;
}

/// Block-diagonal sum diag(a, b).
inline IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix result = IntMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    result.topLeftCorner(a.rows(), a.cols()) = a;
    result.bottomRightCorner(b.rows(), b.cols()) = b;
    return result;
}

}  // namespace cycoh
