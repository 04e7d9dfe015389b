#pragma once

// Independent certification of Roby canonical forms: quotients the degree-d
// slice of the free algebra by the span of every positioned instance of the
// six-permutation cubic relation, then checks the library's reduce() against
// the quotient. Deliberately reimplements the rise predicate.

#include <cstddef>
#include <optional>
#include <vector>

#include "support/linear_oracle.hpp"
#include "ternary/roby.hpp"

namespace oracle {

inline bool rise_free(const ternary::Word& w) {
    for (std::size_t l = 0; l + 2 < w.size(); ++l)
        if (w[l] <= w[l + 1] && w[l + 1] <= w[l + 2]) return false;
    return true;
}

inline int word_rank(const ternary::Word& w, int n) {
    int r = 0;
    for (int letter : w) r = r * n + (letter - 1);
    return r;
}

inline std::vector<ternary::Word> all_words(int n, int d) {
    std::vector<ternary::Word> out;
    ternary::Word w(d, 1);
    while (true) {
        out.push_back(w);
        int pos = d - 1;
        while (pos >= 0 && w[pos] == n) w[pos--] = 1;
        if (pos < 0) break;
        ++w[pos];
    }
    if (d == 0) out.assign(1, ternary::Word{});
    return out;
}

// Span of u * (sum of six permutations of (i,j,k)) * v over all contexts at
// fixed word length d.
inline RowSpan relation_span(int n, int d) {
    RowSpan span;
    if (d < 3) return span;
    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    for (int l = 0; l + 3 <= d; ++l) {
        for (const auto& prefix : all_words(n, l)) {
            for (const auto& suffix : all_words(n, d - 3 - l)) {
                for (int i = 1; i <= n; ++i)
                    for (int j = i; j <= n; ++j)
                        for (int k = j; k <= n; ++k) {
                            int triple[3] = {i, j, k};
                            SparseRow row;
                            for (const auto& p : perms) {
                                ternary::Word w = prefix;
                                w.push_back(triple[p[0]]);
                                w.push_back(triple[p[1]]);
                                w.push_back(triple[p[2]]);
                                w.insert(w.end(), suffix.begin(), suffix.end());
                                row[word_rank(w, n)] += ternary::Rational(1);
                            }
                            span.add(std::move(row));
                        }
            }
        }
    }
    return span;
}

struct DegreeCertificate {
    bool rank_matches = false;        // rank(relations) + #rise-free == n^d
    bool complement_is_basis = false; // rise-free words independent modulo relations
    std::size_t words_checked = 0;
    std::optional<ternary::Word> first_mismatch;
};

// Full certification of one degree: reduce(w) must differ from w by a member
// of the relation span and be supported on rise-free words.
inline DegreeCertificate certify_degree(int n, int d) {
    DegreeCertificate cert;
    RowSpan span = relation_span(n, d);
    const auto words = all_words(n, d);

    std::size_t free_count = 0;
    RowSpan with_basis = span;
    bool independent = true;
    for (const auto& w : words) {
        if (!rise_free(w)) continue;
        ++free_count;
        SparseRow unit;
        unit[word_rank(w, n)] = ternary::Rational(1);
        if (!with_basis.add(std::move(unit))) independent = false;
    }
    cert.rank_matches = span.rank() + free_count == words.size();
    cert.complement_is_basis = independent && with_basis.rank() == words.size();

    for (const auto& w : words) {
        ternary::RobyElement canonical = ternary::reduce(n, w);
        SparseRow diff;
        diff[word_rank(w, n)] = ternary::Rational(1);
        bool supported = true;
        for (const auto& [term, coeff] : canonical.terms()) {
            if (term.size() != static_cast<std::size_t>(d) || !rise_free(term)) supported = false;
            if (!coeff.q_part().is_zero()) supported = false;  // monomial reductions stay rational
            diff[word_rank(term, n)] -= coeff.re_part();
        }
        std::erase_if(diff, [](const auto& kv) { return kv.second.is_zero(); });
        if (!supported || !span.contains(diff)) {
            if (!cert.first_mismatch) cert.first_mismatch = w;
        }
        ++cert.words_checked;
    }
    return cert;
}

}  // namespace oracle
