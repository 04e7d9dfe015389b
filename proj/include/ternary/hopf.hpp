#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ternary/enveloping.hpp"

namespace ternary {

/// Element of the Z3-graded two-fold tensor product U(g) ox U(g), with the
/// twisted multiplication
///   (a1 ox a2)(b1 ox b2) = q^{gr(a2) gr(b1)} (a1 b1) ox (a2 b2)
/// on homogeneous factors. PBW monomials are homogeneous, so the rule applies
/// term by term.
class GradedTensor {
public:
    using Key = std::pair<PBWMonomial, PBWMonomial>;
    using TermMap = std::map<Key, Cyclotomic3>;

    explicit GradedTensor(std::shared_ptr<const LieOrder3Algebra> algebra)
        : algebra_(std::move(algebra)) {
        if (!algebra_) throw PreconditionError("GradedTensor: null algebra");
    }

    static GradedTensor unit(std::shared_ptr<const LieOrder3Algebra> a) {
        GradedTensor t(std::move(a));
        PBWMonomial one = PBWMonomial::unit(t.algebra_->n0());
        t.terms_[{one, one}] = Cyclotomic3(1);
        return t;
    }
    /// u ox v extended bilinearly.
    static GradedTensor of(const UElement& u, const UElement& v) {
        if (!UElement::compatible(u, v)) throw PreconditionError("GradedTensor: algebra mismatch");
        GradedTensor t(u.algebra());
        for (const auto& [mu, cu] : u.terms())
            for (const auto& [mv, cv] : v.terms()) t.add_term(mu, mv, cu * cv);
        return t;
    }

    const std::shared_ptr<const LieOrder3Algebra>& algebra() const { return algebra_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PBWMonomial& left, const PBWMonomial& right, const Cyclotomic3& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Cyclotomic3 coefficient(const PBWMonomial& left, const PBWMonomial& right) const {
        auto it = terms_.find(Key{left, right});
        return it == terms_.end() ? Cyclotomic3() : it->second;
    }

    GradedTensor& operator+=(const GradedTensor& o) {
        for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
        return *this;
    }
    GradedTensor& operator-=(const GradedTensor& o) {
        for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
        return *this;
    }
    GradedTensor& operator*=(const Cyclotomic3& s) {
        if (s.is_zero()) terms_.clear();
        else
            for (auto& [key, c] : terms_) c *= s;
        return *this;
    }
    friend GradedTensor operator+(GradedTensor a, const GradedTensor& b) { return a += b; }
    friend GradedTensor operator-(GradedTensor a, const GradedTensor& b) { return a -= b; }
    friend GradedTensor operator*(GradedTensor a, const Cyclotomic3& s) { return a *= s; }

    friend bool operator==(const GradedTensor& a, const GradedTensor& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedTensor& a, const GradedTensor& b) { return !(a == b); }

    /// Tensor product; use_grading=false multiplies with the plain (untwisted)
    /// rule, which exists only to demonstrate that the q-signs are essential.
    GradedTensor multiply(const GradedTensor& o, bool use_grading = true) const {
        GradedTensor out(algebra_);
        for (const auto& [ka, ca] : terms_) {
            for (const auto& [kb, cb] : o.terms_) {
                Cyclotomic3 sign =
                    use_grading ? qpow(ka.second.grade() * kb.first.grade()) : Cyclotomic3(1);
                UElement left = mul_monomials(ka.first, kb.first);
                UElement right = mul_monomials(ka.second, kb.second);
                Cyclotomic3 scale = ca * cb * sign;
                for (const auto& [ml, cl] : left.terms())
                    for (const auto& [mr, cr] : right.terms())
                        add_to(out, ml, mr, scale * cl * cr);
            }
        }
        return out;
    }

    friend GradedTensor operator*(const GradedTensor& a, const GradedTensor& b) {
        return a.multiply(b);
    }

    /// Drops terms whose combined total degree exceeds cap.
    GradedTensor truncate_degree(std::size_t cap) const {
        GradedTensor out(algebra_);
        for (const auto& [key, c] : terms_)
            if (key.first.degree() + key.second.degree() <= cap) out.terms_.emplace(key, c);
        return out;
    }

    /// (counit ox id) applied to the tensor.
    UElement counit_left() const {
        UElement out(algebra_);
        for (const auto& [key, c] : terms_)
            if (key.first.is_unit()) out.add_term(key.second, c);
        return out;
    }
    /// (id ox counit) applied to the tensor.
    UElement counit_right() const {
        UElement out(algebra_);
        for (const auto& [key, c] : terms_)
            if (key.second.is_unit()) out.add_term(key.first, c);
        return out;
    }

private:
    UElement mul_monomials(const PBWMonomial& a, const PBWMonomial& b) const {
        UElement ua = UElement::monomial_element(algebra_, a);
        UElement ub = UElement::monomial_element(algebra_, b);
        return u_mul(ua, ub);
    }
    static void add_to(GradedTensor& t, const PBWMonomial& l, const PBWMonomial& r,
                       const Cyclotomic3& c) {
        t.add_term(l, r, c);
    }

    std::shared_ptr<const LieOrder3Algebra> algebra_;
    TermMap terms_;
};

/// Coproduct: the algebra morphism with Delta(g) = g ox 1 + 1 ox g on
/// generators, computed in the graded tensor algebra. The divided X powers
/// satisfy Delta(X^e/e!) = sum_j X^j/j! ox X^{e-j}/(e-j)!.
inline GradedTensor coproduct(const UElement& u) {
    const auto& algebra = u.algebra();
    const int n0 = algebra->n0();
    GradedTensor result(algebra);
    for (const auto& [m, c] : u.terms()) {
        GradedTensor t = GradedTensor::unit(algebra);
        for (int a = 1; a <= n0; ++a) {
            unsigned e = m.x_exp[a - 1];
            if (e == 0) continue;
            GradedTensor xs(algebra);
            for (unsigned j = 0; j <= e; ++j) {
                PBWMonomial left = PBWMonomial::unit(n0);
                PBWMonomial right = PBWMonomial::unit(n0);
                left.x_exp[a - 1] = j;
                right.x_exp[a - 1] = e - j;
                xs.add_term(left, right, Cyclotomic3(1));
            }
            t = t * xs;
        }
        for (int i : m.y_word) {
            GradedTensor yi(algebra);
            PBWMonomial one = PBWMonomial::unit(n0);
            PBWMonomial y = one;
            y.y_word = {i};
            yi.add_term(y, one, Cyclotomic3(1));
            yi.add_term(one, y, Cyclotomic3(1));
            t = t * yi;
        }
        t *= c;
        result += t;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Bracket/coproduct compatibility

/// Verifies {Delta Y_i, Delta Y_j, Delta Y_k} = Delta {Y_i, Y_j, Y_k} for
/// every basis triple, where the left side is the six-term symmetrized
/// product in the graded tensor algebra. use_grading=false reruns the check
/// with the plain tensor product to exhibit a failing triple.
inline CheckReport check_bracket_coproduct(std::shared_ptr<const LieOrder3Algebra> algebra,
                                           bool use_grading = true) {
    const LieOrder3Algebra& A = *algebra;
    CheckReport report;
    CheckItem item{"bracket-coproduct", true, ""};
    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    std::vector<GradedTensor> delta_y;
    delta_y.reserve(A.n1());
    for (int i = 1; i <= A.n1(); ++i)
        delta_y.push_back(coproduct(UElement::y_generator(algebra, i)));

    for (int i = 1; i <= A.n1() && item.pass; ++i)
        for (int j = i; j <= A.n1() && item.pass; ++j)
            for (int k = j; k <= A.n1(); ++k) {
                GradedTensor lhs(algebra);
                int t[3] = {i, j, k};
                for (const auto& p : perms) {
                    GradedTensor prod = delta_y[t[p[0]] - 1]
                                            .multiply(delta_y[t[p[1]] - 1], use_grading)
                                            .multiply(delta_y[t[p[2]] - 1], use_grading);
                    lhs += prod;
                }
                UElement bracket(algebra);
                for (const auto& [c_idx, coeff] : A.triple1(i, j, k)) {
                    PBWMonomial m = PBWMonomial::unit(A.n0());
                    m.x_exp[c_idx - 1] = 1;
                    bracket.add_term(m, coeff);
                }
                GradedTensor rhs = coproduct(bracket);
                if (lhs != rhs) {
                    item.pass = false;
                    item.witness = "(i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ")";
                    break;
                }
            }
    report.items.push_back(item);
    return report;
}

// ---------------------------------------------------------------------------
// Group-like elements

struct GroupLikeReport {
    int cap = 0;
    /// Delta(exp u) == sum_{m<=cap} (Delta u)^m / m!; exact because Delta is
    /// an algebra morphism. Only meaningful as stated when nothing was
    /// discarded by the Y-degree cut (truncation_lossless below).
    bool morphism_identity_holds = false;
    /// Delta(exp u) == (exp u ox 1)(1 ox exp u) modulo combined degree > cap.
    /// Recorded, not asserted: the q-signs can break the factorized form for
    /// elements of nonzero grade.
    bool factorized_identity_holds = false;
    bool truncation_lossless = true;
};

/// Compares the coproduct of the truncated exponential against the two
/// candidate group-like identities.
inline GroupLikeReport group_like_report(const UElement& u, int cap) {
    GroupLikeReport report;
    report.cap = cap;
    if (!counit(u).is_zero())
        throw PreconditionError("group_like_report: nonzero constant term");

    // Partial sum without the Y-degree cut; finite and exact.
    UElement full = UElement::unit(u.algebra());
    UElement term = UElement::unit(u.algebra());
    for (int m = 1; m <= cap; ++m) {
        term = u_mul(term, u) * Cyclotomic3(Rational(1, m));
        if (term.is_zero()) break;
        full += term;
    }
    report.truncation_lossless = full == truncated_exp(u, cap);

    GradedTensor lhs = coproduct(full);

    GradedTensor du = coproduct(u);
    GradedTensor rhs = GradedTensor::unit(u.algebra());
    GradedTensor power = GradedTensor::unit(u.algebra());
    for (int m = 1; m <= cap; ++m) {
        power = power * du;
        power *= Cyclotomic3(Rational(1, m));
        if (power.is_zero()) break;
        rhs += power;
    }
    report.morphism_identity_holds = lhs == rhs;

    GradedTensor left_factor = GradedTensor::of(full, UElement::unit(u.algebra()));
    GradedTensor right_factor = GradedTensor::of(UElement::unit(u.algebra()), full);
    GradedTensor factorized = left_factor * right_factor;
    report.factorized_identity_holds = lhs.truncate_degree(cap) == factorized.truncate_degree(cap);
    return report;
}

// ---------------------------------------------------------------------------
// The restricted dual and the theta parameters

/// Dual basis monomial g^{b, I}: alpha exponents against the divided X powers
/// and a rise-free theta word against the Roby Y words.
struct DualMonomial {
    std::vector<unsigned> alpha_exp;  // size n0
    Word theta_word;                  // rise-free, letters in 1..n1

    std::size_t degree() const {
        std::size_t d = theta_word.size();
        for (unsigned e : alpha_exp) d += e;
        return d;
    }
    static DualMonomial alpha(int n0, int a) {
        DualMonomial m{std::vector<unsigned>(n0, 0), {}};
        m.alpha_exp[a - 1] = 1;
        return m;
    }
    static DualMonomial theta(int n0, const Word& w) {
        return DualMonomial{std::vector<unsigned>(n0, 0), w};
    }

    friend auto operator<=>(const DualMonomial&, const DualMonomial&) = default;
};

using DualElement = std::map<DualMonomial, Cyclotomic3>;

inline void dual_add(DualElement& into, const DualMonomial& m, const Cyclotomic3& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = into.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

namespace detail {

/// The brackets never contribute to the top-degree part of a coproduct (they
/// strictly drop degree), so dual products are computed over the bracket-free
/// model of U(g): commuting X's and Roby Y's only.
inline std::shared_ptr<const LieOrder3Algebra> free_model(int n0, int n1) {
    return std::make_shared<const LieOrder3Algebra>(n0, n1, 0);
}

inline void enumerate_exponents(int slots, int total, std::vector<unsigned>& current,
                                const std::function<void(const std::vector<unsigned>&)>& visit) {
    if (slots == 0) {
        if (total == 0) visit(current);
        return;
    }
    if (slots == 1) {
        current.push_back(static_cast<unsigned>(total));
        visit(current);
        current.pop_back();
        return;
    }
    for (int head = 0; head <= total; ++head) {
        current.push_back(static_cast<unsigned>(head));
        enumerate_exponents(slots - 1, total - head, current, visit);
        current.pop_back();
    }
}

}  // namespace detail

/// Product in the graded dual: the coefficient of g^{c,I} in u * v is the
/// coefficient of (u-monomial ox v-monomial) in Delta(g_{c,I}), scanned over
/// all PBW basis monomials of total degree deg(u) + deg(v).
inline DualElement dual_multiply(int n0, int n1, const DualMonomial& u, const DualMonomial& v,
                                 int cap) {
    if (static_cast<int>(u.degree() + v.degree()) > cap)
        throw CapExceededError("dual_multiply: product degree exceeds cap");
    if (u.alpha_exp.size() != static_cast<std::size_t>(n0) ||
        v.alpha_exp.size() != static_cast<std::size_t>(n0))
        throw PreconditionError("dual_multiply: alpha exponent size mismatch");
    if (has_rise(u.theta_word) || has_rise(v.theta_word))
        throw PreconditionError("dual_multiply: theta word has a rise");

    auto algebra = detail::free_model(n0, n1);
    const int target_degree = static_cast<int>(u.degree() + v.degree());
    PBWMonomial mu{u.alpha_exp, u.theta_word};
    PBWMonomial mv{v.alpha_exp, v.theta_word};

    DualElement result;
    std::vector<unsigned> exps;
    for (int xdeg = 0; xdeg <= target_degree; ++xdeg) {
        const int ydeg = target_degree - xdeg;
        const auto ywords = enumerate_basis(n1, ydeg);
        detail::enumerate_exponents(n0, xdeg, exps, [&](const std::vector<unsigned>& e) {
            for (const Word& yw : ywords) {
                PBWMonomial basis{e, yw};
                GradedTensor delta = coproduct(UElement::monomial_element(algebra, basis));
                Cyclotomic3 c = delta.coefficient(mu, mv);
                if (!c.is_zero()) dual_add(result, DualMonomial{e, yw}, c);
            }
        });
    }
    return result;
}

inline DualElement dual_multiply(int n0, int n1, const DualElement& u, const DualElement& v,
                                 int cap) {
    DualElement result;
    for (const auto& [mu, cu] : u)
        for (const auto& [mv, cv] : v) {
            DualElement prod = dual_multiply(n0, n1, mu, mv, cap);
            for (const auto& [m, c] : prod) dual_add(result, m, cu * cv * c);
        }
    return result;
}

// ---------------------------------------------------------------------------
// Theta relations in the dual

struct ThetaRelationReport {
    int n1 = 0;
    int cap = 0;
    /// theta^i theta^j theta^k expanded over dual basis monomials.
    std::map<std::array<int, 3>, DualElement> triple_expansions;
    std::map<std::array<int, 2>, DualElement> pair_expansions;
    bool relations_vanish = false;  // six-permutation sums are all zero
    bool alpha_commutes = false;    // alpha's commute with each other and every theta
};

/// Derives the three-exterior relations among the theta parameters by dual
/// multiplication, and checks that the alpha variables are central.
inline ThetaRelationReport derive_theta_relations(int n1, int cap = 3) {
    ThetaRelationReport report;
    report.n1 = n1;
    report.cap = cap;
    const int n0 = 2;  // two alpha's suffice to observe commutation

    auto theta = [&](int i) {
        DualElement e;
        e[DualMonomial::theta(n0, Word{i})] = Cyclotomic3(1);
        return e;
    };

    for (int i = 1; i <= n1; ++i)
        for (int j = 1; j <= n1; ++j)
            report.pair_expansions[{i, j}] =
                dual_multiply(n0, n1, theta(i), theta(j), cap);

    report.relations_vanish = true;
    for (int i = 1; i <= n1; ++i)
        for (int j = 1; j <= n1; ++j)
            for (int k = 1; k <= n1; ++k) {
                DualElement triple =
                    dual_multiply(n0, n1, report.pair_expansions[{i, j}], theta(k), cap);
                report.triple_expansions[{i, j, k}] = triple;
            }
    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    for (int i = 1; i <= n1 && report.relations_vanish; ++i)
        for (int j = 1; j <= n1 && report.relations_vanish; ++j)
            for (int k = 1; k <= n1; ++k) {
                DualElement sum;
                int t[3] = {i, j, k};
                for (const auto& p : perms)
                    for (const auto& [m, c] : report.triple_expansions[{t[p[0]], t[p[1]], t[p[2]]}])
                        dual_add(sum, m, c);
                if (!sum.empty()) {
                    report.relations_vanish = false;
                    break;
                }
            }

    report.alpha_commutes = true;
    auto alpha = [&](int a) {
        DualElement e;
        e[DualMonomial::alpha(n0, a)] = Cyclotomic3(1);
        return e;
    };
    for (int a = 1; a <= n0 && report.alpha_commutes; ++a)
        for (int b = 1; b <= n0; ++b) {
            if (dual_multiply(n0, n1, alpha(a), alpha(b), cap) !=
                dual_multiply(n0, n1, alpha(b), alpha(a), cap)) {
                report.alpha_commutes = false;
                break;
            }
        }
    for (int a = 1; a <= n0 && report.alpha_commutes; ++a)
        for (int i = 1; i <= n1; ++i) {
            if (dual_multiply(n0, n1, alpha(a), theta(i), cap) !=
                dual_multiply(n0, n1, theta(i), alpha(a), cap)) {
                report.alpha_commutes = false;
                break;
            }
        }
    return report;
}

}  // namespace ternary
