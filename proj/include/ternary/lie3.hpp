#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ternary/cyclotomic.hpp"
#include "ternary/errors.hpp"
#include "ternary/scalar_matrix.hpp"

namespace ternary {

/// Sparse coefficient vector over a graded sector basis, keyed by 1-based
/// basis index.
using SparseVec = std::map<int, Cyclotomic3>;

inline void vec_add(SparseVec& into, int index, const Cyclotomic3& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = into.try_emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

inline void vec_add(SparseVec& into, const SparseVec& v, const Cyclotomic3& scale = Cyclotomic3(1)) {
    for (const auto& [i, c] : v) vec_add(into, i, scale * c);
}

/// A finite-dimensional Lie algebra of order 3 given by exact structure
/// constants:
///   [X_a, X_b] = sum_c f[a,b,c] X_c          (antisymmetric)
///   [X_a, Y_i] = sum_j r1[a,i,j] Y_j
///   [X_a, Z_u] = sum_v r2[a,u,v] Z_v          (only when n2 > 0)
///   {Y_i, Y_j, Y_k} = sum_c t1[i,j,k,c] X_c  (totally symmetric)
///   {Z_u, Z_v, Z_w} = sum_c t2[u,v,w,c] X_c  (totally symmetric)
/// Antisymmetry of f and symmetry of t1/t2 are built into the storage
/// (canonical keys), so they hold by construction; the remaining axioms of a
/// Lie algebra of order 3 are verified by check_axioms.
class LieOrder3Algebra {
public:
    LieOrder3Algebra(int n0, int n1, int n2 = 0) : n0_(n0), n1_(n1), n2_(n2) {
        if (n0 < 0 || n1 < 0 || n2 < 0)
            throw PreconditionError("LieOrder3Algebra: negative dimension");
    }

    int n0() const { return n0_; }
    int n1() const { return n1_; }
    int n2() const { return n2_; }

    void set_bracket00(int a, int b, const SparseVec& v) {
        check_index(a, n0_, "g0");
        check_index(b, n0_, "g0");
        if (a == b) {
            if (!v.empty()) throw PreconditionError("set_bracket00: [X_a, X_a] must vanish");
            return;
        }
        if (a < b) assign(f_, std::pair{a, b}, v);
        else assign(f_, std::pair{b, a}, negate(v));
    }
    void set_bracket01(int a, int i, const SparseVec& v) {
        check_index(a, n0_, "g0");
        check_index(i, n1_, "g1");
        assign(r1_, std::pair{a, i}, v);
    }
    void set_bracket02(int a, int u, const SparseVec& v) {
        check_index(a, n0_, "g0");
        check_index(u, n2_, "g2");
        assign(r2_, std::pair{a, u}, v);
    }
    void set_triple1(int i, int j, int k, const SparseVec& v) {
        check_index(i, n1_, "g1");
        check_index(j, n1_, "g1");
        check_index(k, n1_, "g1");
        assign(t1_, sorted_key(i, j, k), v);
    }
    void set_triple2(int u, int v, int w, const SparseVec& val) {
        check_index(u, n2_, "g2");
        check_index(v, n2_, "g2");
        check_index(w, n2_, "g2");
        assign(t2_, sorted_key(u, v, w), val);
    }

    /// [X_a, X_b] in g0 coordinates.
    SparseVec bracket00(int a, int b) const {
        if (a == b) return {};
        auto it = f_.find(a < b ? std::pair{a, b} : std::pair{b, a});
        if (it == f_.end()) return {};
        return a < b ? it->second : negate(it->second);
    }
    /// [X_a, Y_i] in g1 coordinates.
    SparseVec bracket01(int a, int i) const { return lookup(r1_, std::pair{a, i}); }
    /// [X_a, Z_u] in g2 coordinates.
    SparseVec bracket02(int a, int u) const { return lookup(r2_, std::pair{a, u}); }
    /// {Y_i, Y_j, Y_k} in g0 coordinates (any argument order).
    SparseVec triple1(int i, int j, int k) const { return lookup(t1_, sorted_key(i, j, k)); }
    /// {Z_u, Z_v, Z_w} in g0 coordinates (any argument order).
    SparseVec triple2(int u, int v, int w) const { return lookup(t2_, sorted_key(u, v, w)); }

    /// Bilinear extension of [g0, g0].
    SparseVec bracket00_vec(const SparseVec& x, const SparseVec& y) const {
        SparseVec out;
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y) vec_add(out, bracket00(a, b), ca * cb);
        return out;
    }
    /// Bilinear extension of [g0, g1].
    SparseVec bracket01_vec(const SparseVec& x, const SparseVec& y) const {
        SparseVec out;
        for (const auto& [a, ca] : x)
            for (const auto& [i, ci] : y) vec_add(out, bracket01(a, i), ca * ci);
        return out;
    }
    SparseVec bracket02_vec(const SparseVec& x, const SparseVec& z) const {
        SparseVec out;
        for (const auto& [a, ca] : x)
            for (const auto& [u, cu] : z) vec_add(out, bracket02(a, u), ca * cu);
        return out;
    }
    /// Trilinear extension of {g1, g1, g1}.
    SparseVec triple1_vec(const SparseVec& x, const SparseVec& y, const SparseVec& z) const {
        SparseVec out;
        for (const auto& [i, ci] : x)
            for (const auto& [j, cj] : y)
                for (const auto& [k, ck] : z) vec_add(out, triple1(i, j, k), ci * cj * ck);
        return out;
    }
    SparseVec triple2_vec(const SparseVec& x, const SparseVec& y, const SparseVec& z) const {
        SparseVec out;
        for (const auto& [u, cu] : x)
            for (const auto& [v, cv] : y)
                for (const auto& [w, cw] : z) vec_add(out, triple2(u, v, w), cu * cv * cw);
        return out;
    }

    using PairTable = std::map<std::pair<int, int>, SparseVec>;
    using TripleTable = std::map<std::array<int, 3>, SparseVec>;

    const PairTable& f_entries() const { return f_; }
    const PairTable& r1_entries() const { return r1_; }
    const PairTable& r2_entries() const { return r2_; }
    const TripleTable& t1_entries() const { return t1_; }
    const TripleTable& t2_entries() const { return t2_; }

    /// One stored nonzero structure constant, addressable for mutation.
    struct ConstantSlot {
        char table;               // 'f', 'r', 's' (r2), 't', 'u' (t2)
        std::array<int, 4> index; // key indices then target index
        Cyclotomic3 value;
    };

    std::vector<ConstantSlot> nonzero_constants() const {
        std::vector<ConstantSlot> slots;
        for (const auto& [key, vec] : f_)
            for (const auto& [c, val] : vec)
                slots.push_back({'f', {key.first, key.second, c, 0}, val});
        for (const auto& [key, vec] : r1_)
            for (const auto& [c, val] : vec)
                slots.push_back({'r', {key.first, key.second, c, 0}, val});
        for (const auto& [key, vec] : r2_)
            for (const auto& [c, val] : vec)
                slots.push_back({'s', {key.first, key.second, c, 0}, val});
        for (const auto& [key, vec] : t1_)
            for (const auto& [c, val] : vec)
                slots.push_back({'t', {key[0], key[1], key[2], c}, val});
        for (const auto& [key, vec] : t2_)
            for (const auto& [c, val] : vec)
                slots.push_back({'u', {key[0], key[1], key[2], c}, val});
        return slots;
    }

    friend bool operator==(const LieOrder3Algebra& a, const LieOrder3Algebra& b) {
        return a.n0_ == b.n0_ && a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.f_ == b.f_ &&
               a.r1_ == b.r1_ && a.r2_ == b.r2_ && a.t1_ == b.t1_ && a.t2_ == b.t2_;
    }
    friend bool operator!=(const LieOrder3Algebra& a, const LieOrder3Algebra& b) {
        return !(a == b);
    }

    /// Replaces one stored constant; symmetric storage keeps the type
    /// invariants (antisymmetry of f, symmetry of t) intact.
    void set_constant(const ConstantSlot& slot, const Cyclotomic3& value) {
        auto put = [&](auto& table, auto key, int target) {
            auto& vec = table[key];
            if (value.is_zero()) vec.erase(target);
            else vec[target] = value;
            if (vec.empty()) table.erase(key);
        };
        switch (slot.table) {
            case 'f': put(f_, std::pair{slot.index[0], slot.index[1]}, slot.index[2]); break;
            case 'r': put(r1_, std::pair{slot.index[0], slot.index[1]}, slot.index[2]); break;
            case 's': put(r2_, std::pair{slot.index[0], slot.index[1]}, slot.index[2]); break;
            case 't': put(t1_, std::array{slot.index[0], slot.index[1], slot.index[2]}, slot.index[3]); break;
            case 'u': put(t2_, std::array{slot.index[0], slot.index[1], slot.index[2]}, slot.index[3]); break;
            default: throw PreconditionError("set_constant: unknown table");
        }
    }

private:
    static std::array<int, 3> sorted_key(int i, int j, int k) {
        std::array<int, 3> key{i, j, k};
        std::sort(key.begin(), key.end());
        return key;
    }
    static SparseVec negate(const SparseVec& v) {
        SparseVec out;
        for (const auto& [i, c] : v) out.emplace(i, -c);
        return out;
    }
    template <typename Table, typename Key>
    static void assign(Table& table, const Key& key, const SparseVec& v) {
        SparseVec clean;
        for (const auto& [i, c] : v)
            if (!c.is_zero()) clean.emplace(i, c);
        if (clean.empty()) table.erase(key);
        else table[key] = std::move(clean);
    }
    template <typename Table, typename Key>
    static SparseVec lookup(const Table& table, const Key& key) {
        auto it = table.find(key);
        return it == table.end() ? SparseVec{} : it->second;
    }
    static void check_index(int i, int n, const char* sector) {
        if (i < 1 || i > n)
            throw PreconditionError(std::string("LieOrder3Algebra: index out of range in ") + sector);
    }

    int n0_, n1_, n2_;
    PairTable f_, r1_, r2_;
    TripleTable t1_, t2_;
};

/// Element of g written in the graded basis.
struct GradedElement {
    SparseVec x, y, z;
};

/// The automorphism epsilon acting as q^i on g_i; applying it three times is
/// the identity.
struct GradeAutomorphism {
    const LieOrder3Algebra* algebra = nullptr;

    GradedElement apply(const GradedElement& e) const {
        GradedElement out;
        out.x = e.x;
        for (const auto& [i, c] : e.y) out.y.emplace(i, qpow(1) * c);
        for (const auto& [u, c] : e.z) out.z.emplace(u, qpow(2) * c);
        return out;
    }
};

inline GradedElement apply_grade_automorphism(const LieOrder3Algebra& algebra,
                                              const GradedElement& e) {
    return GradeAutomorphism{&algebra}.apply(e);
}

// ---------------------------------------------------------------------------
// Axiom verification

struct CheckItem {
    std::string axiom;
    bool pass = true;
    std::string witness;  // first violated instance, empty when pass
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass() const {
        for (const auto& item : items)
            if (!item.pass) return false;
        return true;
    }
};

namespace detail {

inline std::string vec_str(const SparseVec& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [i, c] : v) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*e" + std::to_string(i);
    }
    return s;
}

}  // namespace detail

/// Checks every axiom of Definition 1 (order 3): g0 Jacobi, the module
/// property of g1/g2, g0-equivariance of the 3-bracket, and the four-term
/// Jacobi identity. Failures are reported with the first violated instance.
inline CheckReport check_axioms(const LieOrder3Algebra& A) {
    CheckReport report;
    const int n0 = A.n0(), n1 = A.n1(), n2 = A.n2();

    {
        CheckItem item{"g0-jacobi", true, ""};
        for (int a = 1; a <= n0 && item.pass; ++a)
            for (int b = a + 1; b <= n0 && item.pass; ++b)
                for (int c = b + 1; c <= n0 && item.pass; ++c) {
                    SparseVec sum;
                    vec_add(sum, A.bracket00_vec(A.bracket00(a, b), SparseVec{{c, 1}}));
                    vec_add(sum, A.bracket00_vec(A.bracket00(b, c), SparseVec{{a, 1}}));
                    vec_add(sum, A.bracket00_vec(A.bracket00(c, a), SparseVec{{b, 1}}));
                    if (!sum.empty()) {
                        item.pass = false;
                        item.witness = "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) +
                                       "," + std::to_string(c) + ") -> " + detail::vec_str(sum);
                    }
                }
        report.items.push_back(item);
    }

    auto module_check = [&](const char* name, int dim, auto bracket) {
        CheckItem item{name, true, ""};
        for (int a = 1; a <= n0 && item.pass; ++a)
            for (int b = 1; b <= n0 && item.pass; ++b)
                for (int i = 1; i <= dim && item.pass; ++i) {
                    SparseVec lhs = bracket(A.bracket00(a, b), SparseVec{{i, 1}});
                    SparseVec rhs = bracket(SparseVec{{a, 1}}, bracket(SparseVec{{b, 1}}, SparseVec{{i, 1}}));
                    vec_add(rhs, bracket(SparseVec{{b, 1}}, bracket(SparseVec{{a, 1}}, SparseVec{{i, 1}})),
                            Cyclotomic3(-1));
                    vec_add(lhs, rhs, Cyclotomic3(-1));
                    if (!lhs.empty()) {
                        item.pass = false;
                        item.witness = "(a,b,i)=(" + std::to_string(a) + "," + std::to_string(b) +
                                       "," + std::to_string(i) + ") -> " + detail::vec_str(lhs);
                    }
                }
        report.items.push_back(item);
    };
    module_check("g1-module", n1,
                 [&](const SparseVec& x, const SparseVec& y) { return A.bracket01_vec(x, y); });
    if (n2 > 0)
        module_check("g2-module", n2,
                     [&](const SparseVec& x, const SparseVec& z) { return A.bracket02_vec(x, z); });

    auto equivariance_check = [&](const char* name, int dim, auto action, auto triple) {
        CheckItem item{name, true, ""};
        for (int a = 1; a <= n0 && item.pass; ++a)
            for (int i = 1; i <= dim && item.pass; ++i)
                for (int j = i; j <= dim && item.pass; ++j)
                    for (int k = j; k <= dim && item.pass; ++k) {
                        SparseVec xa{{a, 1}};
                        SparseVec ei{{i, 1}}, ej{{j, 1}}, ek{{k, 1}};
                        SparseVec lhs = A.bracket00_vec(xa, triple(ei, ej, ek));
                        SparseVec rhs = triple(action(xa, ei), ej, ek);
                        vec_add(rhs, triple(ei, action(xa, ej), ek));
                        vec_add(rhs, triple(ei, ej, action(xa, ek)));
                        vec_add(lhs, rhs, Cyclotomic3(-1));
                        if (!lhs.empty()) {
                            item.pass = false;
                            item.witness = "(a,i,j,k)=(" + std::to_string(a) + "," + std::to_string(i) +
                                           "," + std::to_string(j) + "," + std::to_string(k) + ") -> " +
                                           detail::vec_str(lhs);
                        }
                    }
        report.items.push_back(item);
    };
    equivariance_check(
        "g1-equivariance", n1,
        [&](const SparseVec& x, const SparseVec& y) { return A.bracket01_vec(x, y); },
        [&](const SparseVec& u, const SparseVec& v, const SparseVec& w) { return A.triple1_vec(u, v, w); });
    if (n2 > 0)
        equivariance_check(
            "g2-equivariance", n2,
            [&](const SparseVec& x, const SparseVec& z) { return A.bracket02_vec(x, z); },
            [&](const SparseVec& u, const SparseVec& v, const SparseVec& w) { return A.triple2_vec(u, v, w); });

    auto jacobi4_check = [&](const char* name, int dim, auto action, auto triple) {
        CheckItem item{name, true, ""};
        std::array<int, 4> idx{};
        for (idx[0] = 1; idx[0] <= dim && item.pass; ++idx[0])
            for (idx[1] = idx[0]; idx[1] <= dim && item.pass; ++idx[1])
                for (idx[2] = idx[1]; idx[2] <= dim && item.pass; ++idx[2])
                    for (idx[3] = idx[2]; idx[3] <= dim && item.pass; ++idx[3]) {
                        SparseVec sum;
                        for (int m = 0; m < 4; ++m) {
                            std::array<int, 3> rest{};
                            int r = 0;
                            for (int p = 0; p < 4; ++p)
                                if (p != m) rest[r++] = idx[p];
                            // [Y_m, {rest}] = -[{rest}, Y_m]
                            SparseVec x = triple(SparseVec{{rest[0], 1}}, SparseVec{{rest[1], 1}},
                                                 SparseVec{{rest[2], 1}});
                            vec_add(sum, action(x, SparseVec{{idx[m], 1}}), Cyclotomic3(-1));
                        }
                        if (!sum.empty()) {
                            item.pass = false;
                            item.witness = "(i,j,k,l)=(" + std::to_string(idx[0]) + "," +
                                           std::to_string(idx[1]) + "," + std::to_string(idx[2]) + "," +
                                           std::to_string(idx[3]) + ") -> " + detail::vec_str(sum);
                        }
                    }
        report.items.push_back(item);
    };
    jacobi4_check(
        "g1-jacobi4", n1,
        [&](const SparseVec& x, const SparseVec& y) { return A.bracket01_vec(x, y); },
        [&](const SparseVec& u, const SparseVec& v, const SparseVec& w) { return A.triple1_vec(u, v, w); });
    if (n2 > 0)
        jacobi4_check(
            "g2-jacobi4", n2,
            [&](const SparseVec& x, const SparseVec& z) { return A.bracket02_vec(x, z); },
            [&](const SparseVec& u, const SparseVec& v, const SparseVec& w) { return A.triple2_vec(u, v, w); });

    return report;
}

// ---------------------------------------------------------------------------
// Matrix representations

/// A matrix representation on a Z3-graded space V: rho0/rho1/rho2 give the
/// images of the X/Y/Z basis elements. block_dims lists the dimensions of the
/// three graded blocks of V (in matrix order).
struct MatrixRep {
    std::array<std::size_t, 3> block_dims{};
    std::vector<ScalarMatrix> rho0, rho1, rho2;

    std::size_t dim() const { return block_dims[0] + block_dims[1] + block_dims[2]; }

    /// Block index of a 0-based matrix coordinate.
    int block_of(std::size_t i) const {
        if (i < block_dims[0]) return 0;
        if (i < block_dims[0] + block_dims[1]) return 1;
        return 2;
    }

    ScalarMatrix apply0(const SparseVec& x) const { return combine(rho0, x); }
    ScalarMatrix apply1(const SparseVec& y) const { return combine(rho1, y); }
    ScalarMatrix apply2(const SparseVec& z) const { return combine(rho2, z); }

private:
    ScalarMatrix combine(const std::vector<ScalarMatrix>& rho, const SparseVec& v) const {
        ScalarMatrix m(dim(), dim());
        for (const auto& [i, c] : v) m += c * rho[i - 1];
        return m;
    }
};

/// Verifies the representation conditions: commutators for [X,X], [X,Y] (and
/// [X,Z] when present), the six-term symmetrized product for {Y,Y,Y} and
/// {Z,Z,Z}, plus the block grading (rho(g1) shifts the graded blocks of V by
/// one step, rho(g2) by two).
inline CheckReport check_representation(const LieOrder3Algebra& A, const MatrixRep& R) {
    if (R.rho0.size() != static_cast<std::size_t>(A.n0()) ||
        R.rho1.size() != static_cast<std::size_t>(A.n1()) ||
        R.rho2.size() != static_cast<std::size_t>(A.n2()))
        throw PreconditionError("check_representation: dimension mismatch");
    const std::size_t d = R.dim();
    for (const auto& m : R.rho0)
        if (m.rows() != d || m.cols() != d)
            throw PreconditionError("check_representation: matrix size mismatch");

    CheckReport report;
    auto commutator = [](const ScalarMatrix& a, const ScalarMatrix& b) { return a * b - b * a; };

    {
        CheckItem item{"rep-bracket-xx", true, ""};
        for (int a = 1; a <= A.n0() && item.pass; ++a)
            for (int b = 1; b <= A.n0() && item.pass; ++b) {
                ScalarMatrix lhs = R.apply0(A.bracket00(a, b));
                ScalarMatrix rhs = commutator(R.rho0[a - 1], R.rho0[b - 1]);
                if (lhs != rhs) {
                    item.pass = false;
                    item.witness = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
                }
            }
        report.items.push_back(item);
    }
    {
        CheckItem item{"rep-bracket-xy", true, ""};
        for (int a = 1; a <= A.n0() && item.pass; ++a)
            for (int i = 1; i <= A.n1() && item.pass; ++i) {
                ScalarMatrix lhs = R.apply1(A.bracket01(a, i));
                ScalarMatrix rhs = commutator(R.rho0[a - 1], R.rho1[i - 1]);
                if (lhs != rhs) {
                    item.pass = false;
                    item.witness = "(a,i)=(" + std::to_string(a) + "," + std::to_string(i) + ")";
                }
            }
        report.items.push_back(item);
    }
    if (A.n2() > 0) {
        CheckItem item{"rep-bracket-xz", true, ""};
        for (int a = 1; a <= A.n0() && item.pass; ++a)
            for (int u = 1; u <= A.n2() && item.pass; ++u) {
                ScalarMatrix lhs = R.apply2(A.bracket02(a, u));
                ScalarMatrix rhs = commutator(R.rho0[a - 1], R.rho2[u - 1]);
                if (lhs != rhs) {
                    item.pass = false;
                    item.witness = "(a,u)=(" + std::to_string(a) + "," + std::to_string(u) + ")";
                }
            }
        report.items.push_back(item);
    }

    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    auto symmetrized_check = [&](const char* name, int dim, const std::vector<ScalarMatrix>& rho,
                                 auto triple) {
        CheckItem item{name, true, ""};
        for (int i = 1; i <= dim && item.pass; ++i)
            for (int j = i; j <= dim && item.pass; ++j)
                for (int k = j; k <= dim && item.pass; ++k) {
                    ScalarMatrix rhs(d, d);
                    int t[3] = {i, j, k};
                    for (const auto& p : perms)
                        rhs += rho[t[p[0]] - 1] * rho[t[p[1]] - 1] * rho[t[p[2]] - 1];
                    ScalarMatrix lhs = R.apply0(triple(i, j, k));
                    if (lhs != rhs) {
                        item.pass = false;
                        item.witness = "(i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                       std::to_string(k) + ")";
                    }
                }
        report.items.push_back(item);
    };
    symmetrized_check("rep-triple-yyy", A.n1(), R.rho1,
                      [&](int i, int j, int k) { return A.triple1(i, j, k); });
    if (A.n2() > 0)
        symmetrized_check("rep-triple-zzz", A.n2(), R.rho2,
                          [&](int u, int v, int w) { return A.triple2(u, v, w); });

    // rho(g1) must shift the graded blocks of V consistently by one step
    // (and rho(g2) by two): with V_a the block of index (-a mod 3) this is
    // exactly rho(g1)(V_a) in V_{a+1}.
    auto grading_check = [&](const char* name, const std::vector<ScalarMatrix>& rho, int shift) {
        CheckItem item{name, true, ""};
        for (std::size_t m = 0; m < rho.size() && item.pass; ++m)
            for (std::size_t r = 0; r < d && item.pass; ++r)
                for (std::size_t c = 0; c < d; ++c) {
                    if (rho[m].at(r, c).is_zero()) continue;
                    if ((R.block_of(c) - R.block_of(r) - shift) % 3 != 0) {
                        item.pass = false;
                        item.witness = "rho[" + std::to_string(m + 1) + "] entry (" +
                                       std::to_string(r) + "," + std::to_string(c) + ")";
                        break;
                    }
                }
        report.items.push_back(item);
    };
    grading_check("rep-grading-y", R.rho1, 1);
    if (A.n2() > 0) grading_check("rep-grading-z", R.rho2, 2);

    return report;
}

// ---------------------------------------------------------------------------
// Built-in algebras

/// Basis bookkeeping for the gl(m1,m2,m3) family: the canonical-matrix index
/// pairs backing each X/Y/Z basis element, in enumeration order. Grade-1
/// pairs step one block forward (b1, b2, b0), grade-2 pairs two (c2, c0, c1).
struct GlLayout {
    int m1, m2, m3;
    std::vector<std::pair<int, int>> x_pairs, y_pairs, z_pairs;  // 1-based (row, col)
    std::map<std::pair<int, int>, int> x_index, y_index, z_index;

    int dim() const { return m1 + m2 + m3; }
    int block_of(int i) const {  // 1-based matrix index
        if (i <= m1) return 0;
        if (i <= m1 + m2) return 1;
        return 2;
    }
};

inline GlLayout gl_layout(int m1, int m2, int m3, bool with_z) {
    if (m1 < 1 || m2 < 1 || m3 < 1) throw PreconditionError("gl layout: block sizes must be >= 1");
    GlLayout L{m1, m2, m3, {}, {}, {}, {}, {}, {}};
    const int d = L.dim();
    auto collect = [&](int shift, std::vector<std::pair<int, int>>& pairs,
                       std::map<std::pair<int, int>, int>& index) {
        for (int br = 0; br < 3; ++br)
            for (int I = 1; I <= d; ++I) {
                if (L.block_of(I) != br) continue;
                for (int J = 1; J <= d; ++J) {
                    if (L.block_of(J) != (br + shift) % 3) continue;
                    pairs.emplace_back(I, J);
                    index[{I, J}] = static_cast<int>(pairs.size());
                }
            }
    };
    collect(0, L.x_pairs, L.x_index);
    collect(1, L.y_pairs, L.y_index);
    if (with_z) collect(2, L.z_pairs, L.z_index);
    return L;
}

namespace detail {

inline ScalarMatrix unit_matrix(int d, int I, int J) {
    ScalarMatrix m(d, d);
    m.at(I - 1, J - 1) = Cyclotomic3(1);
    return m;
}

inline std::pair<LieOrder3Algebra, MatrixRep> build_gl_family(int m1, int m2, int m3, bool with_z) {
    GlLayout L = gl_layout(m1, m2, m3, with_z);
    LieOrder3Algebra A(static_cast<int>(L.x_pairs.size()), static_cast<int>(L.y_pairs.size()),
                       static_cast<int>(L.z_pairs.size()));

    // [X_I^J, X_K^L] = d(J,K) X_I^L - d(L,I) X_K^J, and the same delta
    // pattern for the action of X on Y and Z.
    auto pair_bracket = [&](std::pair<int, int> xy, std::pair<int, int> kl,
                            const std::map<std::pair<int, int>, int>& target) {
        SparseVec v;
        auto [I, J] = xy;
        auto [K, Lc] = kl;
        if (J == K) vec_add(v, target.at({I, Lc}), Cyclotomic3(1));
        if (Lc == I) vec_add(v, target.at({K, J}), Cyclotomic3(-1));
        return v;
    };
    const int n0 = A.n0();
    for (int a = 1; a <= n0; ++a)
        for (int b = a + 1; b <= n0; ++b)
            A.set_bracket00(a, b, pair_bracket(L.x_pairs[a - 1], L.x_pairs[b - 1], L.x_index));
    for (int a = 1; a <= n0; ++a)
        for (int i = 1; i <= A.n1(); ++i)
            A.set_bracket01(a, i, pair_bracket(L.x_pairs[a - 1], L.y_pairs[i - 1], L.y_index));
    for (int a = 1; a <= n0; ++a)
        for (int u = 1; u <= A.n2(); ++u)
            A.set_bracket02(a, u, pair_bracket(L.x_pairs[a - 1], L.z_pairs[u - 1], L.z_index));

    // {Y_I^J, Y_K^L, Y_M^N}: six delta terms, one per permutation product of
    // the canonical matrices.
    auto triple_value = [&](std::pair<int, int> p1, std::pair<int, int> p2, std::pair<int, int> p3) {
        auto [I, J] = p1;
        auto [K, Lc] = p2;
        auto [M, N] = p3;
        SparseVec v;
        if (J == K && Lc == M) vec_add(v, L.x_index.at({I, N}), Cyclotomic3(1));
        if (N == I && J == K) vec_add(v, L.x_index.at({M, Lc}), Cyclotomic3(1));
        if (Lc == M && N == I) vec_add(v, L.x_index.at({K, J}), Cyclotomic3(1));
        if (J == M && N == K) vec_add(v, L.x_index.at({I, Lc}), Cyclotomic3(1));
        if (N == K && Lc == I) vec_add(v, L.x_index.at({M, J}), Cyclotomic3(1));
        if (Lc == I && J == M) vec_add(v, L.x_index.at({K, N}), Cyclotomic3(1));
        return v;
    };
    for (int i = 1; i <= A.n1(); ++i)
        for (int j = i; j <= A.n1(); ++j)
            for (int k = j; k <= A.n1(); ++k)
                A.set_triple1(i, j, k, triple_value(L.y_pairs[i - 1], L.y_pairs[j - 1], L.y_pairs[k - 1]));
    for (int u = 1; u <= A.n2(); ++u)
        for (int v = u; v <= A.n2(); ++v)
            for (int w = v; w <= A.n2(); ++w)
                A.set_triple2(u, v, w, triple_value(L.z_pairs[u - 1], L.z_pairs[v - 1], L.z_pairs[w - 1]));

    MatrixRep rep;
    rep.block_dims = {static_cast<std::size_t>(m1), static_cast<std::size_t>(m2),
                      static_cast<std::size_t>(m3)};
    const int d = L.dim();
    for (const auto& [I, J] : L.x_pairs) rep.rho0.push_back(unit_matrix(d, I, J));
    for (const auto& [I, J] : L.y_pairs) rep.rho1.push_back(unit_matrix(d, I, J));
    for (const auto& [I, J] : L.z_pairs) rep.rho2.push_back(unit_matrix(d, I, J));
    return {std::move(A), std::move(rep)};
}

}  // namespace detail

/// gl(m1,m2,m3): block matrices with all three graded sectors, together with
/// the defining representation by canonical matrices.
inline std::pair<LieOrder3Algebra, MatrixRep> build_gl(int m1, int m2, int m3) {
    return detail::build_gl_family(m1, m2, m3, true);
}

/// gl_el(m1,m2,m3): the elementary truncation (no grade-2 sector).
inline std::pair<LieOrder3Algebra, MatrixRep> build_gl_el(int m1, int m2, int m3) {
    return detail::build_gl_family(m1, m2, m3, false);
}

/// Basis labels used by build_poincare_cubic: L_{mu,nu} with mu < nu in
/// lexicographic order, then P_mu; g1 holds V_mu. Indices mu run 0..D-1 and
/// the metric is diag(1,-1,...,-1).
struct PoincareLayout {
    int D;
    std::vector<std::pair<int, int>> lorentz;  // (mu, nu), mu < nu
    int l_index(int mu, int nu) const {        // 1-based; requires mu < nu
        for (std::size_t s = 0; s < lorentz.size(); ++s)
            if (lorentz[s] == std::pair{mu, nu}) return static_cast<int>(s) + 1;
        throw PreconditionError("PoincareLayout: bad Lorentz index");
    }
    int p_index(int mu) const { return static_cast<int>(lorentz.size()) + mu + 1; }
    int v_index(int mu) const { return mu + 1; }
    int eta(int mu, int nu) const { return mu != nu ? 0 : (mu == 0 ? 1 : -1); }
};

inline PoincareLayout poincare_layout(int D) {
    if (D < 2) throw PreconditionError("build_poincare_cubic: D must be >= 2");
    PoincareLayout L{D, {}};
    for (int mu = 0; mu < D; ++mu)
        for (int nu = mu + 1; nu < D; ++nu) L.lorentz.emplace_back(mu, nu);
    return L;
}

/// The cubic extension of the Poincare algebra in D dimensions:
/// g0 = <L_{mu nu}, P_mu>, g1 = <V_mu>, with
/// {V_mu, V_nu, V_rho} = eta_{mu nu} P_rho + eta_{mu rho} P_nu + eta_{rho nu} P_mu.
inline LieOrder3Algebra build_poincare_cubic(int D) {
    PoincareLayout L = poincare_layout(D);
    const int lorentz_count = static_cast<int>(L.lorentz.size());
    LieOrder3Algebra A(lorentz_count + D, D, 0);

    auto add_L = [&](SparseVec& v, int a, int b, int coeff) {
        if (coeff == 0 || a == b) return;
        if (a < b) vec_add(v, L.l_index(a, b), Cyclotomic3(coeff));
        else vec_add(v, L.l_index(b, a), Cyclotomic3(-coeff));
    };

    // [L_{mu nu}, L_{rho sigma}] = eta_{nu sigma} L_{rho mu} - eta_{mu sigma} L_{rho nu}
    //                            + eta_{nu rho} L_{mu sigma} - eta_{mu rho} L_{nu sigma}
    for (int s = 0; s < lorentz_count; ++s)
        for (int t = s + 1; t < lorentz_count; ++t) {
            auto [mu, nu] = L.lorentz[s];
            auto [rho, sigma] = L.lorentz[t];
            SparseVec v;
            add_L(v, rho, mu, L.eta(nu, sigma));
            add_L(v, rho, nu, -L.eta(mu, sigma));
            add_L(v, mu, sigma, L.eta(nu, rho));
            add_L(v, nu, sigma, -L.eta(mu, rho));
            A.set_bracket00(s + 1, t + 1, v);
        }
    // [L_{mu nu}, P_rho] = eta_{nu rho} P_mu - eta_{mu rho} P_nu ; [P, P] = 0
    for (int s = 0; s < lorentz_count; ++s) {
        auto [mu, nu] = L.lorentz[s];
        for (int rho = 0; rho < D; ++rho) {
            SparseVec v;
            if (L.eta(nu, rho) != 0) vec_add(v, L.p_index(mu), Cyclotomic3(L.eta(nu, rho)));
            if (L.eta(mu, rho) != 0) vec_add(v, L.p_index(nu), Cyclotomic3(-L.eta(mu, rho)));
            A.set_bracket00(s + 1, L.p_index(rho), v);
        }
    }
    // [L_{mu nu}, V_rho] = eta_{nu rho} V_mu - eta_{mu rho} V_nu ; [P, V] = 0
    for (int s = 0; s < lorentz_count; ++s) {
        auto [mu, nu] = L.lorentz[s];
        for (int rho = 0; rho < D; ++rho) {
            SparseVec v;
            if (L.eta(nu, rho) != 0) vec_add(v, L.v_index(mu), Cyclotomic3(L.eta(nu, rho)));
            if (L.eta(mu, rho) != 0) vec_add(v, L.v_index(nu), Cyclotomic3(-L.eta(mu, rho)));
            A.set_bracket01(s + 1, rho + 1, v);
        }
    }
    // {V_mu, V_nu, V_rho} = eta_{mu nu} P_rho + eta_{mu rho} P_nu + eta_{rho nu} P_mu
    for (int mu = 0; mu < D; ++mu)
        for (int nu = mu; nu < D; ++nu)
            for (int rho = nu; rho < D; ++rho) {
                SparseVec v;
                if (L.eta(mu, nu) != 0) vec_add(v, L.p_index(rho), Cyclotomic3(L.eta(mu, nu)));
                if (L.eta(mu, rho) != 0) vec_add(v, L.p_index(nu), Cyclotomic3(L.eta(mu, rho)));
                if (L.eta(rho, nu) != 0) vec_add(v, L.p_index(mu), Cyclotomic3(L.eta(rho, nu)));
                A.set_triple1(mu + 1, nu + 1, rho + 1, v);
            }
    return A;
}

}  // namespace ternary
