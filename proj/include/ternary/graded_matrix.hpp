#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ternary/roby_matrix.hpp"

namespace ternary {

struct BlockShape {
    int m1, m2, m3;
    std::size_t dim() const { return static_cast<std::size_t>(m1 + m2 + m3); }
    int block_of(std::size_t i) const {
        if (i < static_cast<std::size_t>(m1)) return 0;
        if (i < static_cast<std::size_t>(m1 + m2)) return 1;
        return 2;
    }
    std::size_t block_start(int b) const {
        return b == 0 ? 0 : (b == 1 ? static_cast<std::size_t>(m1) : static_cast<std::size_t>(m1 + m2));
    }
    std::size_t block_size(int b) const {
        return static_cast<std::size_t>(b == 0 ? m1 : (b == 1 ? m2 : m3));
    }
    friend bool operator==(const BlockShape& a, const BlockShape& b) {
        return a.m1 == b.m1 && a.m2 == b.m2 && a.m3 == b.m3;
    }
};

/// Square matrix over Lambda_3(C^p) carved into the three-block pattern: the
/// entry in row block r and column block c is expected to be homogeneous of
/// grade (c - r) mod 3 (diagonal blocks A_i grade 0, the B_i blocks grade 1,
/// the C_i blocks grade 2). The expectation is checked by is_well_graded, not
/// enforced at construction, so ill-graded inputs can be diagnosed.
class GradedMatrix {
public:
    GradedMatrix(BlockShape shape, int p) : shape_(shape), m_(shape.dim(), shape.dim(), p) {
        if (shape.m1 < 1 || shape.m2 < 1 || shape.m3 < 1)
            throw PreconditionError("GradedMatrix: block sizes must be >= 1");
    }
    GradedMatrix(BlockShape shape, RobyMatrix m) : shape_(shape), m_(std::move(m)) {
        if (m_.rows() != shape.dim() || m_.cols() != shape.dim())
            throw PreconditionError("GradedMatrix: matrix size does not match shape");
    }

    static GradedMatrix identity(BlockShape shape, int p) {
        return GradedMatrix(shape, RobyMatrix::identity(shape.dim(), p));
    }

    const BlockShape& shape() const { return shape_; }
    int p() const { return m_.p(); }
    std::size_t dim() const { return m_.rows(); }
    const RobyMatrix& matrix() const { return m_; }
    RobyElement& at(std::size_t r, std::size_t c) { return m_.at(r, c); }
    const RobyElement& at(std::size_t r, std::size_t c) const { return m_.at(r, c); }

    /// Expected grade of an entry from its block position.
    int entry_grade(std::size_t r, std::size_t c) const {
        return ((shape_.block_of(c) - shape_.block_of(r)) % 3 + 3) % 3;
    }

    bool is_well_graded() const {
        for (std::size_t r = 0; r < dim(); ++r)
            for (std::size_t c = 0; c < dim(); ++c)
                for (int g : m_.at(r, c).grades())
                    if (g != entry_grade(r, c)) return false;
        return true;
    }

    RobyMatrix block(int br, int bc) const {
        RobyMatrix out(shape_.block_size(br), shape_.block_size(bc), p());
        for (std::size_t r = 0; r < out.rows(); ++r)
            for (std::size_t c = 0; c < out.cols(); ++c)
                out.at(r, c) = m_.at(shape_.block_start(br) + r, shape_.block_start(bc) + c);
        return out;
    }
    void set_block(int br, int bc, const RobyMatrix& blk) {
        if (blk.rows() != shape_.block_size(br) || blk.cols() != shape_.block_size(bc))
            throw PreconditionError("GradedMatrix: block size mismatch");
        for (std::size_t r = 0; r < blk.rows(); ++r)
            for (std::size_t c = 0; c < blk.cols(); ++c)
                m_.at(shape_.block_start(br) + r, shape_.block_start(bc) + c) = blk.at(r, c);
    }

    friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
        return a.shape_ == b.shape_ && a.m_ == b.m_;
    }
    friend bool operator!=(const GradedMatrix& a, const GradedMatrix& b) { return !(a == b); }

private:
    BlockShape shape_;
    RobyMatrix m_;
};

/// Entrywise product; the block grading is closed under multiplication
/// because entry grades add along (row, k)(k, col) paths.
inline GradedMatrix mat_mul(const GradedMatrix& a, const GradedMatrix& b) {
    if (!(a.shape() == b.shape()) || a.p() != b.p())
        throw PreconditionError("mat_mul: shape or generator-count mismatch");
    return GradedMatrix(a.shape(), a.matrix() * b.matrix());
}

inline GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
    return mat_mul(a, b);
}

namespace detail {

inline RobyMatrix lam0_inverse(const RobyMatrix& m, int cap) {
    return invert_lambda0(Lambda0Matrix(m), cap).matrix();
}

}  // namespace detail

/// Blockwise inverse via the nine closed-form expressions obtained by solving
/// MN = 1; every inner inverse is a Lambda_0 inversion (the bracketed
/// combinations are grade-0 and their constant parts equal those of the
/// diagonal blocks). Inner inverses are evaluated exactly as parenthesized.
inline GradedMatrix invert_block(const GradedMatrix& M, int cap) {
    if (!M.is_well_graded())
        throw PreconditionError("invert_block: matrix violates the block grading");
    const int p = M.p();
    const RobyMatrix A0 = M.block(0, 0), B1 = M.block(0, 1), C2 = M.block(0, 2);
    const RobyMatrix C0 = M.block(1, 0), A1 = M.block(1, 1), B2 = M.block(1, 2);
    const RobyMatrix B0 = M.block(2, 0), C1 = M.block(2, 1), A2 = M.block(2, 2);
    auto inv = [&](const RobyMatrix& m) { return detail::lam0_inverse(m, cap); };

    const RobyMatrix A1v = inv(A1);
    const RobyMatrix T2v = inv(A2 - C1 * A1v * B2);
    const RobyMatrix W0 = B0 - C1 * A1v * C0;
    const RobyMatrix U0 = C0 - B2 * T2v * W0;
    const RobyMatrix A0p = inv(A0 - C2 * T2v * W0 - B1 * A1v * U0);
    const RobyMatrix B0p = -(T2v * W0 * A0p);
    const RobyMatrix C0p = -(A1v * U0 * A0p);

    const RobyMatrix A2v = inv(A2);
    const RobyMatrix T0v = inv(A0 - C2 * A2v * B0);
    const RobyMatrix W1 = B1 - C2 * A2v * C1;
    const RobyMatrix U1 = C1 - B0 * T0v * W1;
    const RobyMatrix A1p = inv(A1 - C0 * T0v * W1 - B2 * A2v * U1);
    const RobyMatrix B1p = -(T0v * W1 * A1p);
    const RobyMatrix C1p = -(A2v * U1 * A1p);

    const RobyMatrix A0v = inv(A0);
    const RobyMatrix T1v = inv(A1 - C0 * A0v * B1);
    const RobyMatrix W2 = B2 - C0 * A0v * C2;
    const RobyMatrix U2 = C2 - B1 * T1v * W2;
    const RobyMatrix A2p = inv(A2 - C1 * T1v * W2 - B0 * A0v * U2);
    const RobyMatrix B2p = -(T1v * W2 * A2p);
    const RobyMatrix C2p = -(A0v * U2 * A2p);

    GradedMatrix N(M.shape(), p);
    N.set_block(0, 0, A0p);
    N.set_block(0, 1, B1p);
    N.set_block(0, 2, C2p);
    N.set_block(1, 0, C0p);
    N.set_block(1, 1, A1p);
    N.set_block(1, 2, B2p);
    N.set_block(2, 0, B0p);
    N.set_block(2, 1, C1p);
    N.set_block(2, 2, A2p);
    return N;
}

/// Exact exponential of a nilpotent matrix: sums B^m/m! until a power
/// vanishes. Intended for strictly grade-1 content (B blocks only, the e^{B_k}
/// factors of group elements) but accepts any well-graded nilpotent input,
/// including grade-0 nilpotent blocks.
inline GradedMatrix exp_nilpotent(const GradedMatrix& B, int cap) {
    if (cap < 1) throw PreconditionError("exp_nilpotent: cap must be >= 1");
    if (!B.is_well_graded())
        throw PreconditionError("exp_nilpotent: matrix violates the block grading");
    RobyMatrix result = RobyMatrix::identity(B.dim(), B.p());
    RobyMatrix term = RobyMatrix::identity(B.dim(), B.p());
    Rational inv_factorial(1);
    bool nilpotent = false;
    for (int m = 1; m <= cap; ++m) {
        term = term * B.matrix();
        if (term.is_zero()) {
            nilpotent = true;
            break;
        }
        inv_factorial /= Rational(m);
        result += term * Cyclotomic3(inv_factorial);
    }
    if (!nilpotent) throw CapExceededError("exp_nilpotent: nilpotency not reached by cap");
    return GradedMatrix(B.shape(), std::move(result));
}

/// g = G0 * prod_k exp(B_k): G0 supplies the invertible constant block-
/// diagonal factor (standing in for the paper's e^A, whose exact evaluation
/// would be transcendental), the B_k are nilpotent grade-1 matrices.
inline GradedMatrix group_element(const GradedMatrix& G0, const std::vector<GradedMatrix>& Bs,
                                  int cap) {
    for (std::size_t r = 0; r < G0.dim(); ++r)
        for (std::size_t c = 0; c < G0.dim(); ++c) {
            const RobyElement& e = G0.at(r, c);
            if (e.is_zero()) continue;
            if (G0.shape().block_of(r) != G0.shape().block_of(c))
                throw PreconditionError("group_element: G0 must be block-diagonal");
            if (e.max_degree() != 0)
                throw PreconditionError("group_element: G0 entries must be scalars");
        }
    for (int b = 0; b < 3; ++b) {
        ScalarMatrix blk = G0.block(b, b).constant_part();
        if (!blk.is_invertible())
            throw NotInvertibleError("group_element: singular constant diagonal block");
    }
    GradedMatrix g = G0;
    for (const GradedMatrix& B : Bs) g = g * exp_nilpotent(B, cap);
    return g;
}

struct GlfCertificate {
    bool member = false;
    std::string reason;  // empty when member
    std::optional<GradedMatrix> inverse;
    bool products_verified = false;  // MN = NM = 1 checked exactly
};

/// GL_f membership: the grading invariant holds, all entries are finite sums
/// (always true of stored values), and the blockwise inverse exists within
/// cap. The certificate carries the verified inverse.
inline GlfCertificate is_glf_member(const GradedMatrix& M, int cap) {
    GlfCertificate cert;
    if (!M.is_well_graded()) {
        cert.reason = "grading-violation";
        return cert;
    }
    GradedMatrix N(M.shape(), M.p());
    try {
        N = invert_block(M, cap);
    } catch (const NotInvertibleError&) {
        cert.reason = "not-invertible";
        return cert;
    } catch (const CapExceededError&) {
        cert.reason = "not-finitely-invertible-within-cap";
        return cert;
    }
    GradedMatrix id = GradedMatrix::identity(M.shape(), M.p());
    cert.products_verified = mat_mul(M, N) == id && mat_mul(N, M) == id;
    if (!cert.products_verified) {
        cert.reason = "inverse-product-mismatch";
        return cert;
    }
    cert.member = true;
    cert.inverse = std::move(N);
    return cert;
}

/// The theta -> 0 limit of a group element: degree-0 content must form an
/// invertible block-diagonal scalar matrix, degree-1 content must sit in the
/// B blocks only; the degree-1 coefficients are the tangent data, an element
/// of gl_el(m1,m2,m3)_1 tensored with span{theta^i}.
struct InfinitesimalReport {
    bool grading_ok = false;
    ScalarMatrix degree0;
    bool degree0_block_diagonal = false;
    std::array<bool, 3> diagonal_block_invertible{false, false, false};
    bool degree0_invertible = false;

    struct TangentTerm {
        std::size_t row, col;  // 0-based matrix coordinates, in a B block
        int theta;             // generator index
        Cyclotomic3 coeff;
    };
    std::vector<TangentTerm> tangent;
    bool degree1_in_b_blocks = false;

    bool pass() const {
        return grading_ok && degree0_block_diagonal && degree0_invertible && degree1_in_b_blocks;
    }
};

inline InfinitesimalReport infinitesimal_limit(const GradedMatrix& M) {
    InfinitesimalReport report;
    report.grading_ok = M.is_well_graded();
    report.degree0 = M.matrix().constant_part();

    report.degree0_block_diagonal = true;
    for (std::size_t r = 0; r < M.dim(); ++r)
        for (std::size_t c = 0; c < M.dim(); ++c)
            if (M.shape().block_of(r) != M.shape().block_of(c) &&
                !report.degree0.at(r, c).is_zero())
                report.degree0_block_diagonal = false;

    for (int b = 0; b < 3; ++b)
        report.diagonal_block_invertible[b] = M.block(b, b).constant_part().is_invertible();
    report.degree0_invertible = report.diagonal_block_invertible[0] &&
                                report.diagonal_block_invertible[1] &&
                                report.diagonal_block_invertible[2];

    report.degree1_in_b_blocks = true;
    for (std::size_t r = 0; r < M.dim(); ++r)
        for (std::size_t c = 0; c < M.dim(); ++c) {
            RobyElement deg1 = M.at(r, c).degree_component(1);
            if (deg1.is_zero()) continue;
            if (M.entry_grade(r, c) != 1) {
                report.degree1_in_b_blocks = false;
                continue;
            }
            for (const auto& [w, coeff] : deg1.terms())
                report.tangent.push_back({r, c, w[0], coeff});
        }
    return report;
}

}  // namespace ternary
