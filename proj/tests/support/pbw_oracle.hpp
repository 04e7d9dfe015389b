#pragma once

// Brute-force certification of the PBW basis: quotients the degree-filtered
// free algebra on the X/Y letters by every positioned instance of the three
// ideal relations and compares dimensions against the PBW monomial count.

#include <cstddef>
#include <vector>

#include "support/linear_oracle.hpp"
#include "support/roby_oracle.hpp"
#include "ternary/enveloping.hpp"

namespace oracle {

struct PBWCertificate {
    std::vector<std::size_t> quotient_dim;  // per filtration level 0..D
    std::vector<std::size_t> pbw_count;     // PBW monomials of degree <= d
    bool matches() const { return quotient_dim == pbw_count; }
};

inline PBWCertificate certify_pbw(const ternary::LieOrder3Algebra& A, int D) {
    using ternary::GenLetter;
    using ternary::GenWord;
    const int n0 = A.n0(), n1 = A.n1();
    const int K = n0 + n1;

    auto letter_code = [&](const GenLetter& l) {
        return l.kind == GenLetter::X ? l.index - 1 : n0 + l.index - 1;
    };
    // Columns enumerate all words of length <= D, grouped by length.
    std::vector<std::size_t> offset(D + 2, 0);
    for (int len = 0; len <= D; ++len) {
        std::size_t count = 1;
        for (int i = 0; i < len; ++i) count *= K;
        offset[len + 1] = offset[len] + count;
    }
    auto word_column = [&](const GenWord& w) {
        std::size_t r = 0;
        for (const auto& l : w) r = r * K + letter_code(l);
        return static_cast<int>(offset[w.size()] + r);
    };

    // Ideal generators as sparse templates: leading words minus tails.
    struct Generator {
        std::vector<std::pair<GenWord, ternary::Rational>> body;
        int lead_len;
    };
    std::vector<Generator> gens;
    for (int a = 1; a <= n0; ++a)
        for (int b = a + 1; b <= n0; ++b) {
            Generator g;
            g.lead_len = 2;
            g.body.emplace_back(GenWord{ternary::x_letter(a), ternary::x_letter(b)}, 1);
            g.body.emplace_back(GenWord{ternary::x_letter(b), ternary::x_letter(a)}, -1);
            for (const auto& [c, coeff] : A.bracket00(a, b)) {
                if (!coeff.q_part().is_zero()) throw ternary::PreconditionError("oracle: rational constants expected");
                g.body.emplace_back(GenWord{ternary::x_letter(c)}, -coeff.re_part());
            }
            gens.push_back(std::move(g));
        }
    for (int a = 1; a <= n0; ++a)
        for (int i = 1; i <= n1; ++i) {
            Generator g;
            g.lead_len = 2;
            g.body.emplace_back(GenWord{ternary::x_letter(a), ternary::y_letter(i)}, 1);
            g.body.emplace_back(GenWord{ternary::y_letter(i), ternary::x_letter(a)}, -1);
            for (const auto& [j, coeff] : A.bracket01(a, i)) {
                if (!coeff.q_part().is_zero()) throw ternary::PreconditionError("oracle: rational constants expected");
                g.body.emplace_back(GenWord{ternary::y_letter(j)}, -coeff.re_part());
            }
            gens.push_back(std::move(g));
        }
    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    for (int i = 1; i <= n1; ++i)
        for (int j = i; j <= n1; ++j)
            for (int k = j; k <= n1; ++k) {
                Generator g;
                g.lead_len = 3;
                int t[3] = {i, j, k};
                for (const auto& p : perms)
                    g.body.emplace_back(
                        GenWord{ternary::y_letter(t[p[0]]), ternary::y_letter(t[p[1]]),
                                ternary::y_letter(t[p[2]])},
                        1);
                for (const auto& [c, coeff] : A.triple1(i, j, k)) {
                    if (!coeff.q_part().is_zero()) throw ternary::PreconditionError("oracle: rational constants expected");
                    g.body.emplace_back(GenWord{ternary::x_letter(c)}, -coeff.re_part());
                }
                gens.push_back(std::move(g));
            }

    auto all_genwords = [&](int len) {
        std::vector<GenWord> out;
        GenWord w;
        auto rec = [&](auto&& self) -> void {
            if (static_cast<int>(w.size()) == len) {
                out.push_back(w);
                return;
            }
            for (int code = 0; code < K; ++code) {
                w.push_back(code < n0 ? ternary::x_letter(code + 1)
                                      : ternary::y_letter(code - n0 + 1));
                self(self);
                w.pop_back();
            }
        };
        rec(rec);
        return out;
    };

    PBWCertificate cert;
    RowSpan span;
    int spanned_up_to = -1;
    for (int d = 0; d <= D; ++d) {
        // Add every u g v with |u| + lead + |v| == d (lower lengths already in).
        for (int lead = 2; lead <= 3; ++lead) {
            for (const auto& gen : gens) {
                if (gen.lead_len != lead) continue;
                for (int lu = 0; lu + lead <= d; ++lu) {
                    int lv = d - lead - lu;
                    if (lv < 0) continue;
                    if (lu + lead + lv <= spanned_up_to) continue;
                    for (const auto& u : all_genwords(lu))
                        for (const auto& v : all_genwords(lv)) {
                            SparseRow row;
                            for (const auto& [mid, coeff] : gen.body) {
                                GenWord w = u;
                                w.insert(w.end(), mid.begin(), mid.end());
                                w.insert(w.end(), v.begin(), v.end());
                                auto [it, inserted] = row.try_emplace(word_column(w), coeff);
                                if (!inserted) {
                                    it->second += coeff;
                                    if (it->second.is_zero()) row.erase(it);
                                }
                            }
                            span.add(std::move(row));
                        }
                }
            }
        }
        spanned_up_to = d;

        cert.quotient_dim.push_back(offset[d + 1] - span.rank());
        std::size_t pbw = 0;
        for (int total = 0; total <= d; ++total)
            for (int ydeg = 0; ydeg <= total; ++ydeg) {
                int xdeg = total - ydeg;
                // compositions of xdeg into n0 parts
                std::size_t comps = 1;
                for (int r = 1; r < n0; ++r) comps = comps * (xdeg + r) / r;
                std::size_t ycount = 0;
                for (const auto& w : all_words(n1, ydeg))
                    if (rise_free(w)) ++ycount;
                pbw += comps * ycount;
            }
        cert.pbw_count.push_back(pbw);
    }
    return cert;
}

}  // namespace oracle
