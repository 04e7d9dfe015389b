#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ternary/cyclotomic.hpp"
#include "ternary/errors.hpp"

namespace ternary {

/// A word in the generators theta^1..theta^n, stored as the sequence of
/// generator indices (1-based). The empty word is the unit.
using Word = std::vector<int>;

inline Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

/// Smallest 0-based position l with w[l] <= w[l+1] <= w[l+2], or nullopt if
/// the word is rise-free (a Roby basis word).
inline std::optional<std::size_t> has_rise(const Word& w) {
    if (w.size() < 3) return std::nullopt;
    for (std::size_t l = 0; l + 2 < w.size(); ++l)
        if (w[l] <= w[l + 1] && w[l + 1] <= w[l + 2]) return l;
    return std::nullopt;
}

/// Element of the three-exterior algebra Lambda_3(K^n): a finite linear
/// combination of rise-free words with Cyclotomic3 coefficients. The stored
/// map is the canonical form; zero coefficients are never kept.
class RobyElement {
public:
    using TermMap = std::map<Word, Cyclotomic3>;

    explicit RobyElement(int n = 1) : n_(n) {
        if (n < 1) throw PreconditionError("RobyElement: generator count must be >= 1");
    }

    int generator_count() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static RobyElement zero(int n) { return RobyElement(n); }
    static RobyElement unit(int n) {
        RobyElement e(n);
        e.terms_[Word{}] = Cyclotomic3(1);
        return e;
    }
    /// theta^i as an element.
    static RobyElement generator(int n, int i) {
        RobyElement e(n);
        if (i < 1 || i > n) throw PreconditionError("RobyElement: generator index out of range");
        e.terms_[Word{i}] = Cyclotomic3(1);
        return e;
    }

    Cyclotomic3 coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Cyclotomic3() : it->second;
    }

    void add_term(const Word& w, const Cyclotomic3& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    RobyElement operator-() const {
        RobyElement r(n_);
        for (const auto& [w, c] : terms_) r.terms_[w] = -c;
        return r;
    }
    RobyElement& operator+=(const RobyElement& o) {
        check_same_n(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    RobyElement& operator-=(const RobyElement& o) {
        check_same_n(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    RobyElement& operator*=(const Cyclotomic3& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend RobyElement operator+(RobyElement a, const RobyElement& b) { return a += b; }
    friend RobyElement operator-(RobyElement a, const RobyElement& b) { return a -= b; }
    friend RobyElement operator*(RobyElement a, const Cyclotomic3& s) { return a *= s; }
    friend RobyElement operator*(const Cyclotomic3& s, RobyElement a) { return a *= s; }

    friend bool operator==(const RobyElement& a, const RobyElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const RobyElement& a, const RobyElement& b) { return !(a == b); }

    /// Set of grades (word length mod 3) present among the terms.
    std::set<int> grades() const {
        std::set<int> g;
        for (const auto& [w, c] : terms_) g.insert(static_cast<int>(w.size() % 3));
        return g;
    }

    /// Grade-i part (terms whose length is congruent to i mod 3).
    RobyElement homogeneous_component(int i) const {
        RobyElement r(n_);
        for (const auto& [w, c] : terms_)
            if (static_cast<int>(w.size() % 3) == ((i % 3) + 3) % 3) r.terms_[w] = c;
        return r;
    }

    /// Terms of exact word length d.
    RobyElement degree_component(std::size_t d) const {
        RobyElement r(n_);
        for (const auto& [w, c] : terms_)
            if (w.size() == d) r.terms_[w] = c;
        return r;
    }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& [w, c] : terms_) d = std::max(d, w.size());
        return d;
    }

    std::string str() const;

private:
    void check_same_n(const RobyElement& o) const {
        if (n_ != o.n_) throw PreconditionError("RobyElement: generator count mismatch");
    }

    friend RobyElement reduce_terms(int n, std::map<Word, Cyclotomic3>&& pending);

    int n_;
    TermMap terms_;
};

/// Rewrites every word to the Roby basis. Each step replaces the leftmost
/// rise using relation theta^i theta^j theta^k + (5 permutations) = 0 solved
/// for the nondecreasing arrangement; repeated indices collapse duplicate
/// permutations first. Steps preserve word length and strictly increase the
/// inversion count, which is bounded, so the loop terminates.
inline RobyElement reduce_terms(int n, std::map<Word, Cyclotomic3>&& pending) {
    RobyElement result(n);
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word w = std::move(node.key());
        const Cyclotomic3 c = std::move(node.mapped());
        if (c.is_zero()) continue;
        auto rise = has_rise(w);
        if (!rise) {
            result.add_term(w, c);
            continue;
        }
        const std::size_t l = *rise;
        const int i = w[l], j = w[l + 1], k = w[l + 2];
        auto emit = [&](int a, int b, int d) {
            Word nw = w;
            nw[l] = a;
            nw[l + 1] = b;
            nw[l + 2] = d;
            auto [it, inserted] = pending.try_emplace(nw, -c);
            if (!inserted) {
                it->second -= c;
                if (it->second.is_zero()) pending.erase(it);
            }
        };
        if (i == j && j == k) {
            // theta^i theta^i theta^i = 0
        } else if (i == j) {
            emit(i, k, i);
            emit(k, i, i);
        } else if (j == k) {
            emit(j, i, j);
            emit(j, j, i);
        } else {
            emit(j, k, i);
            emit(k, i, j);
            emit(i, k, j);
            emit(j, i, k);
            emit(k, j, i);
        }
    }
    return result;
}

/// Canonical form of the monomial w in the Roby basis.
inline RobyElement reduce(int n, const Word& w) {
    for (int letter : w)
        if (letter < 1 || letter > n)
            throw PreconditionError("reduce: letter out of range 1..n");
    std::map<Word, Cyclotomic3> pending;
    pending[w] = Cyclotomic3(1);
    return reduce_terms(n, std::move(pending));
}

/// Product in Lambda_3: bilinear extension of word concatenation followed by
/// canonical reduction.
inline RobyElement lam_mul(const RobyElement& a, const RobyElement& b) {
    if (a.generator_count() != b.generator_count())
        throw PreconditionError("lam_mul: generator count mismatch");
    std::map<Word, Cyclotomic3> pending;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Cyclotomic3 c = ca * cb;
            if (c.is_zero()) continue;
            Word w = concat(wa, wb);
            auto [it, inserted] = pending.try_emplace(std::move(w), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) pending.erase(it);
            }
        }
    return reduce_terms(a.generator_count(), std::move(pending));
}

inline RobyElement operator*(const RobyElement& a, const RobyElement& b) { return lam_mul(a, b); }

/// Number of rise-free words of length k over {1..n}. Dynamic programming
/// over the pair (second-to-last letter, last letter).
inline BigInt roby_dim(int n, int k) {
    if (n < 1 || k < 0) throw PreconditionError("roby_dim: need n >= 1, k >= 0");
    if (k == 0) return 1;
    if (k == 1) return n;
    // counts[a][b]: words ending in letters (a, b), 1-based.
    std::vector<std::vector<BigInt>> counts(n + 1, std::vector<BigInt>(n + 1, 0));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) counts[a][b] = 1;
    for (int len = 3; len <= k; ++len) {
        std::vector<std::vector<BigInt>> next(n + 1, std::vector<BigInt>(n + 1, 0));
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                if (counts[a][b] == 0) continue;
                for (int x = 1; x <= n; ++x)
                    if (!(a <= b && b <= x)) next[b][x] += counts[a][b];
            }
        counts = std::move(next);
    }
    BigInt total = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) total += counts[a][b];
    return total;
}

/// All rise-free words of length k over {1..n}, in lexicographic order.
inline std::vector<Word> enumerate_basis(int n, int k) {
    if (n < 1 || k < 0) throw PreconditionError("enumerate_basis: need n >= 1, k >= 0");
    std::vector<Word> out;
    Word w;
    w.reserve(k);
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == k) {
            out.push_back(w);
            return;
        }
        std::size_t s = w.size();
        for (int x = 1; x <= n; ++x) {
            if (s >= 2 && w[s - 2] <= w[s - 1] && w[s - 1] <= x) continue;
            w.push_back(x);
            self(self);
            w.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

/// Smallest m <= cap with a^m = 0, or nullopt if no power up to cap vanishes.
inline std::optional<int> nilpotency_order(const RobyElement& a, int cap) {
    if (cap < 1) throw PreconditionError("nilpotency_order: cap must be >= 1");
    RobyElement power = a;
    for (int m = 1; m <= cap; ++m) {
        if (power.is_zero()) return m;
        if (m == cap) break;
        power = lam_mul(power, a);
    }
    return std::nullopt;
}

inline std::string RobyElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.str() + ")*";
        if (w.empty()) {
            out += "1";
        } else {
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) out += ".";
                out += "t" + std::to_string(w[i]);
            }
        }
    }
    return out;
}

}  // namespace ternary
