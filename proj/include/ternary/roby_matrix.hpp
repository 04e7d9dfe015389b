#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "ternary/roby.hpp"
#include "ternary/scalar_matrix.hpp"

namespace ternary {

/// Dense (possibly rectangular) matrix with entries in Lambda_3(C^p).
class RobyMatrix {
public:
    RobyMatrix(std::size_t rows, std::size_t cols, int p)
        : rows_(rows), cols_(cols), p_(p), a_(rows * cols, RobyElement(p)) {}

    static RobyMatrix identity(std::size_t k, int p) {
        RobyMatrix m(k, k, p);
        for (std::size_t i = 0; i < k; ++i) m.at(i, i) = RobyElement::unit(p);
        return m;
    }
    static RobyMatrix from_scalar(const ScalarMatrix& s, int p) {
        RobyMatrix m(s.rows(), s.cols(), p);
        for (std::size_t r = 0; r < s.rows(); ++r)
            for (std::size_t c = 0; c < s.cols(); ++c)
                m.at(r, c) = RobyElement::unit(p) * s.at(r, c);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int p() const { return p_; }

    RobyElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const RobyElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!e.is_zero()) return false;
        return true;
    }

    RobyMatrix operator-() const {
        RobyMatrix m(rows_, cols_, p_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
        return m;
    }
    RobyMatrix& operator+=(const RobyMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    RobyMatrix& operator-=(const RobyMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    RobyMatrix& operator*=(const Cyclotomic3& s) {
        for (auto& e : a_) e *= s;
        return *this;
    }
    friend RobyMatrix operator+(RobyMatrix a, const RobyMatrix& b) { return a += b; }
    friend RobyMatrix operator-(RobyMatrix a, const RobyMatrix& b) { return a -= b; }
    friend RobyMatrix operator*(RobyMatrix a, const Cyclotomic3& s) { return a *= s; }
    friend RobyMatrix operator*(const Cyclotomic3& s, RobyMatrix a) { return a *= s; }

    friend RobyMatrix operator*(const RobyMatrix& a, const RobyMatrix& b) {
        if (a.cols_ != b.rows_ || a.p_ != b.p_)
            throw PreconditionError("RobyMatrix: shape or generator-count mismatch");
        RobyMatrix m(a.rows_, b.cols_, a.p_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const RobyElement& x = a.at(r, k);
                if (x.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) {
                    if (b.at(k, c).is_zero()) continue;
                    m.at(r, c) += lam_mul(x, b.at(k, c));
                }
            }
        return m;
    }

    friend bool operator==(const RobyMatrix& a, const RobyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RobyMatrix& a, const RobyMatrix& b) { return !(a == b); }

    /// Entrywise slice of terms with word length exactly d.
    RobyMatrix degree_component(std::size_t d) const {
        RobyMatrix m(rows_, cols_, p_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i].degree_component(d);
        return m;
    }

    /// Coefficient of the empty word, entrywise.
    ScalarMatrix constant_part() const {
        ScalarMatrix s(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) s.at(r, c) = at(r, c).coefficient(Word{});
        return s;
    }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& e : a_) d = std::max(d, e.max_degree());
        return d;
    }

    /// True when every entry is homogeneous of grade g (mod-3 word length).
    bool has_pure_grade(int g) const {
        for (const auto& e : a_)
            for (int grade : e.grades())
                if (grade != ((g % 3) + 3) % 3) return false;
        return true;
    }

private:
    void check_same_shape(const RobyMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
            throw PreconditionError("RobyMatrix: shape or generator-count mismatch");
    }

    std::size_t rows_, cols_;
    int p_;
    std::vector<RobyElement> a_;
};

/// Square matrix over the grade-0 part of Lambda_3 (every entry built from
/// words of length 0 mod 3).
class Lambda0Matrix {
public:
    Lambda0Matrix(std::size_t k, int p) : m_(k, k, p) {}
    explicit Lambda0Matrix(RobyMatrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw PreconditionError("Lambda0Matrix: must be square");
        if (!m_.has_pure_grade(0))
            throw PreconditionError("Lambda0Matrix: entries must be grade-0");
    }

    static Lambda0Matrix identity(std::size_t k, int p) {
        return Lambda0Matrix(RobyMatrix::identity(k, p));
    }

    std::size_t size() const { return m_.rows(); }
    int p() const { return m_.p(); }
    const RobyMatrix& matrix() const { return m_; }
    RobyElement& at(std::size_t r, std::size_t c) { return m_.at(r, c); }
    const RobyElement& at(std::size_t r, std::size_t c) const { return m_.at(r, c); }

    friend Lambda0Matrix operator*(const Lambda0Matrix& a, const Lambda0Matrix& b) {
        return Lambda0Matrix(a.m_ * b.m_);
    }
    friend bool operator==(const Lambda0Matrix& a, const Lambda0Matrix& b) { return a.m_ == b.m_; }
    friend bool operator!=(const Lambda0Matrix& a, const Lambda0Matrix& b) { return a.m_ != b.m_; }

private:
    RobyMatrix m_;
};

/// Expansion of a product of two degree-3 Roby words in the Roby basis; the
/// concatenation need not be rise-free ((1,2,1)(1,2,1) is the standard
/// example), and the decomposition coefficients are what the order-by-order
/// inversion consumes at degree six.
using CCoefficients = std::map<std::pair<Word, Word>, RobyElement>;

inline CCoefficients c_coefficient_table(int p) {
    CCoefficients table;
    for (const Word& w1 : enumerate_basis(p, 3))
        for (const Word& w2 : enumerate_basis(p, 3)) table[{w1, w2}] = reduce(p, concat(w1, w2));
    return table;
}

/// Order-by-order inverse of a Lambda_0 matrix: B_0 is the exact scalar
/// inverse of the constant part, and each higher degree solves
/// A_0 B_d = -sum_{e>=3} A_e B_{d-e}. Word lengths are additive under
/// lam_mul, so the degree-d slice of A B depends on nothing above d. The
/// iteration stops once enough consecutive slices of B vanish to force all
/// later ones to vanish; if that never happens up to cap, the inverse is not
/// a finite sum within cap.
inline Lambda0Matrix invert_lambda0(const Lambda0Matrix& A, int cap) {
    if (cap < 0) throw PreconditionError("invert_lambda0: cap must be >= 0");
    const std::size_t k = A.size();
    const int p = A.p();

    ScalarMatrix constant = A.matrix().constant_part();
    ScalarMatrix constant_inv;
    try {
        constant_inv = constant.inverse();
    } catch (const NotInvertibleError&) {
        throw NotInvertibleError("invert_lambda0: constant part A_(0) is singular");
    }
    const RobyMatrix S = RobyMatrix::from_scalar(constant_inv, p);

    const std::size_t max_deg = A.matrix().max_degree();
    if (max_deg == 0) return Lambda0Matrix(S);

    std::vector<RobyMatrix> a_slices;  // degree 0, 3, 6, ... slices of A
    for (std::size_t d = 0; d <= max_deg; d += 3) a_slices.push_back(A.matrix().degree_component(d));

    std::vector<RobyMatrix> b_slices{S};
    RobyMatrix result = S;
    const std::size_t window = a_slices.size() - 1;  // consecutive zero slices needed
    std::size_t zero_run = 0;
    for (std::size_t d = 3;; d += 3) {
        if (d > static_cast<std::size_t>(cap))
            throw CapExceededError("invert_lambda0: not finitely invertible within cap");
        RobyMatrix rhs(k, k, p);
        for (std::size_t e = 3; e <= std::min(d, max_deg); e += 3)
            rhs += a_slices[e / 3] * b_slices[(d - e) / 3];
        RobyMatrix bd = -(S * rhs);
        bool zero = bd.is_zero();
        b_slices.push_back(bd);
        if (!zero) result += bd;
        zero_run = zero ? zero_run + 1 : 0;
        if (zero_run >= window) break;
    }
    return Lambda0Matrix(std::move(result));
}

}  // namespace ternary
