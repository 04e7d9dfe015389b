#pragma once

#include <cstddef>
#include <vector>

#include "ternary/cyclotomic.hpp"
#include "ternary/errors.hpp"

namespace ternary {

/// Dense matrix over Q(q) with exact arithmetic. Used for representation
/// checks and for the constant parts of Lambda_0 matrices.
class ScalarMatrix {
public:
    ScalarMatrix() : rows_(0), cols_(0) {}
    ScalarMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ScalarMatrix identity(std::size_t k) {
        ScalarMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i) m.at(i, i) = Cyclotomic3(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cyclotomic3& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Cyclotomic3& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    ScalarMatrix operator-() const {
        ScalarMatrix m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
        return m;
    }
    ScalarMatrix& operator+=(const ScalarMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    ScalarMatrix& operator-=(const ScalarMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend ScalarMatrix operator+(ScalarMatrix a, const ScalarMatrix& b) { return a += b; }
    friend ScalarMatrix operator-(ScalarMatrix a, const ScalarMatrix& b) { return a -= b; }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("ScalarMatrix: shape mismatch");
        ScalarMatrix m(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Cyclotomic3& x = a.at(r, k);
                if (x.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) m.at(r, c) += x * b.at(k, c);
            }
        return m;
    }

    friend ScalarMatrix operator*(const Cyclotomic3& s, ScalarMatrix m) {
        for (auto& x : m.a_) x *= s;
        return m;
    }

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

    /// Exact inverse by Gauss-Jordan elimination. Throws NotInvertibleError.
    ScalarMatrix inverse() const {
        if (rows_ != cols_) throw PreconditionError("ScalarMatrix: inverse of non-square matrix");
        std::size_t k = rows_;
        ScalarMatrix work = *this;
        ScalarMatrix inv = identity(k);
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t pivot = col;
            while (pivot < k && work.at(pivot, col).is_zero()) ++pivot;
            if (pivot == k) throw NotInvertibleError("ScalarMatrix: singular matrix");
            if (pivot != col) {
                for (std::size_t c = 0; c < k; ++c) {
                    std::swap(work.at(pivot, c), work.at(col, c));
                    std::swap(inv.at(pivot, c), inv.at(col, c));
                }
            }
            Cyclotomic3 scale = work.at(col, col).inverse();
            for (std::size_t c = 0; c < k; ++c) {
                work.at(col, c) *= scale;
                inv.at(col, c) *= scale;
            }
            for (std::size_t r = 0; r < k; ++r) {
                if (r == col || work.at(r, col).is_zero()) continue;
                Cyclotomic3 factor = work.at(r, col);
                for (std::size_t c = 0; c < k; ++c) {
                    work.at(r, c) -= factor * work.at(col, c);
                    inv.at(r, c) -= factor * inv.at(col, c);
                }
            }
        }
        return inv;
    }

    bool is_invertible() const {
        try {
            inverse();
            return true;
        } catch (const NotInvertibleError&) {
            return false;
        }
    }

private:
    void check_same_shape(const ScalarMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw PreconditionError("ScalarMatrix: shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Cyclotomic3> a_;
};

}  // namespace ternary
