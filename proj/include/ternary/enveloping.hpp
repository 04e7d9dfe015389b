#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "ternary/lie3.hpp"
#include "ternary/roby.hpp"

namespace ternary {

/// One letter of a raw word in the enveloping algebra: an X (grade-0) or Y
/// (grade-1) basis generator.
struct GenLetter {
    enum Kind { X = 0, Y = 1 };
    int kind;
    int index;  // 1-based basis index within its sector

    friend auto operator<=>(const GenLetter&, const GenLetter&) = default;
};

using GenWord = std::vector<GenLetter>;

inline GenLetter x_letter(int a) { return {GenLetter::X, a}; }
inline GenLetter y_letter(int i) { return {GenLetter::Y, i}; }

/// A PBW basis monomial (X_1^{a_1}/a_1!) ... (X_n0^{a_n0}/a_n0!) Y_{i_1}...Y_{i_l}
/// with a rise-free Y word. The 1/a! normalization is part of the monomial's
/// meaning, not a stored coefficient.
struct PBWMonomial {
    std::vector<unsigned> x_exp;  // size n0
    Word y_word;                  // rise-free, letters in 1..n1

    std::size_t x_degree() const {
        return std::accumulate(x_exp.begin(), x_exp.end(), std::size_t{0});
    }
    std::size_t y_degree() const { return y_word.size(); }
    std::size_t degree() const { return x_degree() + y_degree(); }
    int grade() const { return static_cast<int>(y_word.size() % 3); }
    bool is_unit() const { return y_word.empty() && x_degree() == 0; }

    static PBWMonomial unit(int n0) { return {std::vector<unsigned>(n0, 0), {}}; }

    friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
};

class UElement;
UElement u_normalize_terms(std::shared_ptr<const LieOrder3Algebra> algebra,
                           std::map<GenWord, Cyclotomic3>&& pending);

/// Element of the enveloping algebra U(g) in canonical PBW form: a finite
/// map monomial -> coefficient with no zero coefficients stored.
class UElement {
public:
    using TermMap = std::map<PBWMonomial, Cyclotomic3>;

    explicit UElement(std::shared_ptr<const LieOrder3Algebra> algebra)
        : algebra_(std::move(algebra)) {
        if (!algebra_) throw PreconditionError("UElement: null algebra");
    }

    const std::shared_ptr<const LieOrder3Algebra>& algebra() const { return algebra_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static UElement zero(std::shared_ptr<const LieOrder3Algebra> a) { return UElement(std::move(a)); }
    static UElement unit(std::shared_ptr<const LieOrder3Algebra> a) {
        UElement e(std::move(a));
        e.add_term(PBWMonomial::unit(e.algebra_->n0()), Cyclotomic3(1));
        return e;
    }
    static UElement x_generator(std::shared_ptr<const LieOrder3Algebra> a, int index) {
        UElement e(std::move(a));
        if (index < 1 || index > e.algebra_->n0())
            throw PreconditionError("UElement: X index out of range");
        PBWMonomial m = PBWMonomial::unit(e.algebra_->n0());
        m.x_exp[index - 1] = 1;
        e.add_term(m, Cyclotomic3(1));
        return e;
    }
    static UElement y_generator(std::shared_ptr<const LieOrder3Algebra> a, int index) {
        UElement e(std::move(a));
        if (index < 1 || index > e.algebra_->n1())
            throw PreconditionError("UElement: Y index out of range");
        PBWMonomial m = PBWMonomial::unit(e.algebra_->n0());
        m.y_word = {index};
        e.add_term(m, Cyclotomic3(1));
        return e;
    }
    /// The monomial must already be in PBW form (rise-free Y word).
    static UElement monomial_element(std::shared_ptr<const LieOrder3Algebra> a, PBWMonomial m,
                                     Cyclotomic3 c = Cyclotomic3(1)) {
        UElement e(std::move(a));
        if (m.x_exp.size() != static_cast<std::size_t>(e.algebra_->n0()))
            throw PreconditionError("UElement: exponent vector size mismatch");
        if (has_rise(m.y_word)) throw PreconditionError("UElement: monomial Y word has a rise");
        for (int i : m.y_word)
            if (i < 1 || i > e.algebra_->n1())
                throw PreconditionError("UElement: Y index out of range");
        e.add_term(std::move(m), c);
        return e;
    }

    void add_term(PBWMonomial m, const Cyclotomic3& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Cyclotomic3 coefficient(const PBWMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Cyclotomic3() : it->second;
    }

    UElement operator-() const {
        UElement e(algebra_);
        for (const auto& [m, c] : terms_) e.terms_.emplace(m, -c);
        return e;
    }
    UElement& operator+=(const UElement& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    UElement& operator-=(const UElement& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    UElement& operator*=(const Cyclotomic3& s) {
        if (s.is_zero()) terms_.clear();
        else
            for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    friend UElement operator*(UElement a, const Cyclotomic3& s) { return a *= s; }
    friend UElement operator*(const Cyclotomic3& s, UElement a) { return a *= s; }

    friend bool operator==(const UElement& a, const UElement& b) {
        return a.terms_ == b.terms_ && compatible(a, b);
    }
    friend bool operator!=(const UElement& a, const UElement& b) { return !(a == b); }

    /// Highest total degree among terms (0 for the zero element).
    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    /// Highest Y degree among terms.
    std::size_t max_y_degree() const {
        std::size_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.y_degree());
        return d;
    }
    UElement truncate_y_degree(std::size_t cap) const {
        UElement e(algebra_);
        for (const auto& [m, c] : terms_)
            if (m.y_degree() <= cap) e.terms_.emplace(m, c);
        return e;
    }
    UElement truncate_degree(std::size_t cap) const {
        UElement e(algebra_);
        for (const auto& [m, c] : terms_)
            if (m.degree() <= cap) e.terms_.emplace(m, c);
        return e;
    }

    static bool compatible(const UElement& a, const UElement& b) {
        return a.algebra_ == b.algebra_ || *a.algebra_ == *b.algebra_;
    }

    std::string str() const;

private:
    void check_compatible(const UElement& o) const {
        if (!compatible(*this, o)) throw PreconditionError("UElement: algebra mismatch");
    }

    std::shared_ptr<const LieOrder3Algebra> algebra_;
    TermMap terms_;
};

namespace detail {

/// Expands a PBW monomial to the raw word X...X Y...Y; the returned scalar is
/// the coefficient of the raw word relative to the normalized monomial
/// (1 over the product of exponent factorials).
inline std::pair<GenWord, Cyclotomic3> monomial_raw_word(const PBWMonomial& m) {
    GenWord w;
    Cyclotomic3 scale(1);
    for (std::size_t a = 0; a < m.x_exp.size(); ++a) {
        for (unsigned e = 0; e < m.x_exp[a]; ++e) w.push_back(x_letter(static_cast<int>(a) + 1));
        scale *= Cyclotomic3(factorial(m.x_exp[a]).inverse());
    }
    for (int i : m.y_word) w.push_back(y_letter(i));
    return {std::move(w), scale};
}

}  // namespace detail

/// Rewrites raw words to canonical PBW form with the three ideal relations:
/// out-of-order X pairs swap and emit [X,X] terms, X moves left past Y
/// emitting [X,Y] terms, and nondecreasing Y triples rewrite through the
/// symmetrized relation (sum over permutations) = {Y,Y,Y}. Each step either
/// shortens the word or decreases (Y-before-X count + X inversions,
/// then -Y inversions) at fixed length, so the loop terminates.
inline UElement u_normalize_terms(std::shared_ptr<const LieOrder3Algebra> algebra,
                                  std::map<GenWord, Cyclotomic3>&& pending) {
    const LieOrder3Algebra& A = *algebra;
    UElement result(algebra);

    auto push = [&pending](GenWord w, const Cyclotomic3& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = pending.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) pending.erase(it);
        }
    };

    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const GenWord w = std::move(node.key());
        const Cyclotomic3 c = std::move(node.mapped());
        if (c.is_zero()) continue;

        bool rewritten = false;
        for (std::size_t p = 0; p < w.size() && !rewritten; ++p) {
            // Pair rules first at each position.
            if (p + 1 < w.size()) {
                const GenLetter &u = w[p], &v = w[p + 1];
                if (u.kind == GenLetter::X && v.kind == GenLetter::X && u.index > v.index) {
                    // X_b X_a = X_a X_b + [X_b, X_a]
                    GenWord swapped = w;
                    std::swap(swapped[p], swapped[p + 1]);
                    push(std::move(swapped), c);
                    for (const auto& [target, coeff] : A.bracket00(u.index, v.index)) {
                        GenWord shorter;
                        shorter.reserve(w.size() - 1);
                        shorter.insert(shorter.end(), w.begin(), w.begin() + p);
                        shorter.push_back(x_letter(target));
                        shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
                        push(std::move(shorter), c * coeff);
                    }
                    rewritten = true;
                    continue;
                }
                if (u.kind == GenLetter::Y && v.kind == GenLetter::X) {
                    // Y_i X_a = X_a Y_i - [X_a, Y_i]
                    GenWord swapped = w;
                    std::swap(swapped[p], swapped[p + 1]);
                    push(std::move(swapped), c);
                    for (const auto& [target, coeff] : A.bracket01(v.index, u.index)) {
                        GenWord shorter;
                        shorter.reserve(w.size() - 1);
                        shorter.insert(shorter.end(), w.begin(), w.begin() + p);
                        shorter.push_back(y_letter(target));
                        shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
                        push(std::move(shorter), -(c * coeff));
                    }
                    rewritten = true;
                    continue;
                }
            }
            // Y-rise rule.
            if (p + 2 < w.size() && w[p].kind == GenLetter::Y && w[p + 1].kind == GenLetter::Y &&
                w[p + 2].kind == GenLetter::Y) {
                const int i = w[p].index, j = w[p + 1].index, k = w[p + 2].index;
                if (!(i <= j && j <= k)) continue;
                auto emit_perm = [&](int a, int b, int d) {
                    GenWord nw = w;
                    nw[p] = y_letter(a);
                    nw[p + 1] = y_letter(b);
                    nw[p + 2] = y_letter(d);
                    push(std::move(nw), -c);
                };
                Cyclotomic3 bracket_scale;
                if (i == j && j == k) bracket_scale = Cyclotomic3(Rational(1, 6));
                else if (i == j) {
                    emit_perm(i, k, i);
                    emit_perm(k, i, i);
                    bracket_scale = Cyclotomic3(Rational(1, 2));
                } else if (j == k) {
                    emit_perm(j, i, j);
                    emit_perm(j, j, i);
                    bracket_scale = Cyclotomic3(Rational(1, 2));
                } else {
                    emit_perm(j, k, i);
                    emit_perm(k, i, j);
                    emit_perm(i, k, j);
                    emit_perm(j, i, k);
                    emit_perm(k, j, i);
                    bracket_scale = Cyclotomic3(1);
                }
                for (const auto& [target, coeff] : A.triple1(i, j, k)) {
                    GenWord shorter;
                    shorter.reserve(w.size() - 2);
                    shorter.insert(shorter.end(), w.begin(), w.begin() + p);
                    shorter.push_back(x_letter(target));
                    shorter.insert(shorter.end(), w.begin() + p + 3, w.end());
                    push(std::move(shorter), c * coeff * bracket_scale);
                }
                rewritten = true;
            }
        }
        if (rewritten) continue;

        // Normal word: ascending X prefix, rise-free Y suffix.
        PBWMonomial m = PBWMonomial::unit(A.n0());
        Cyclotomic3 scale(1);
        for (const GenLetter& letter : w) {
            if (letter.kind == GenLetter::X) {
                unsigned& e = m.x_exp[letter.index - 1];
                ++e;
                scale *= Cyclotomic3(Rational(e));  // X^e = e! (X^e / e!)
            } else {
                m.y_word.push_back(letter.index);
            }
        }
        result.add_term(std::move(m), c * scale);
    }
    return result;
}

/// Canonical PBW form of a raw word of X/Y letters.
inline UElement u_normalize(std::shared_ptr<const LieOrder3Algebra> algebra, const GenWord& word) {
    for (const GenLetter& letter : word) {
        int bound = letter.kind == GenLetter::X ? algebra->n0() : algebra->n1();
        if (letter.index < 1 || letter.index > bound)
            throw PreconditionError("u_normalize: unknown basis index");
    }
    std::map<GenWord, Cyclotomic3> pending;
    pending[word] = Cyclotomic3(1);
    return u_normalize_terms(std::move(algebra), std::move(pending));
}

/// Associative product in U(g): concatenate raw expansions and normalize.
inline UElement u_mul(const UElement& a, const UElement& b) {
    if (!UElement::compatible(a, b)) throw PreconditionError("u_mul: algebra mismatch");
    std::map<GenWord, Cyclotomic3> pending;
    for (const auto& [ma, ca] : a.terms()) {
        auto [wa, sa] = detail::monomial_raw_word(ma);
        for (const auto& [mb, cb] : b.terms()) {
            auto [wb, sb] = detail::monomial_raw_word(mb);
            GenWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            Cyclotomic3 coeff = ca * cb * sa * sb;
            if (coeff.is_zero()) continue;
            auto [it, inserted] = pending.try_emplace(std::move(w), coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second.is_zero()) pending.erase(it);
            }
        }
    }
    return u_normalize_terms(a.algebra(), std::move(pending));
}

inline UElement operator*(const UElement& a, const UElement& b) { return u_mul(a, b); }

/// Counit: keeps only the coefficient of the unit monomial.
inline Cyclotomic3 counit(const UElement& u) {
    return u.coefficient(PBWMonomial::unit(u.algebra()->n0()));
}

/// Antipode: the anti-morphism extension of S(g) = -g on generators, so a
/// degree-d monomial maps to (-1)^d times its reversal, re-normalized.
inline UElement antipode(const UElement& u) {
    std::map<GenWord, Cyclotomic3> pending;
    for (const auto& [m, c] : u.terms()) {
        auto [w, scale] = detail::monomial_raw_word(m);
        std::reverse(w.begin(), w.end());
        Cyclotomic3 coeff = c * scale * (w.size() % 2 == 0 ? Cyclotomic3(1) : Cyclotomic3(-1));
        if (coeff.is_zero()) continue;
        auto [it, inserted] = pending.try_emplace(std::move(w), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) pending.erase(it);
        }
    }
    return u_normalize_terms(u.algebra(), std::move(pending));
}

/// Sum over m <= cap of u^m / m!, discarding terms whose Y degree exceeds
/// cap. Requires a vanishing constant term; the exponent bound makes the sum
/// finite and exact.
inline UElement truncated_exp(const UElement& u, int cap) {
    if (cap < 0) throw PreconditionError("truncated_exp: cap must be >= 0");
    if (!counit(u).is_zero())
        throw PreconditionError("truncated_exp: nonzero constant term");
    UElement result = UElement::unit(u.algebra());
    UElement term = UElement::unit(u.algebra());
    for (int m = 1; m <= cap; ++m) {
        term = u_mul(term, u) * Cyclotomic3(Rational(1, m));
        if (term.is_zero()) break;
        result += term;
    }
    return result.truncate_y_degree(static_cast<std::size_t>(cap));
}

inline std::string UElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*";
        std::string body;
        for (std::size_t a = 0; a < m.x_exp.size(); ++a) {
            if (m.x_exp[a] == 0) continue;
            if (!body.empty()) body += ".";
            body += "X" + std::to_string(a + 1);
            if (m.x_exp[a] > 1) body += "^" + std::to_string(m.x_exp[a]) + "/" +
                                        std::to_string(m.x_exp[a]) + "!";
        }
        for (int i : m.y_word) {
            if (!body.empty()) body += ".";
            body += "Y" + std::to_string(i);
        }
        out += body.empty() ? "1" : body;
    }
    return out;
}

}  // namespace ternary
