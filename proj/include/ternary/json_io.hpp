#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ternary/enveloping.hpp"
#include "ternary/graded_matrix.hpp"
#include "ternary/hopf.hpp"
#include "ternary/lie3.hpp"
#include "ternary/roby.hpp"

// JSON interchange for every CLI-facing value. Emission is canonical:
// object keys are sorted (nlohmann default), map-backed term lists come out
// in their container order (lexicographic words), so identical values always
// serialize to identical bytes.

namespace ternary::io {

using nlohmann::json;

inline json to_json(const Cyclotomic3& c) { return c.str(); }

inline Cyclotomic3 scalar_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("scalar: expected string");
    return Cyclotomic3::parse(j.get<std::string>());
}

inline json to_json(const Word& w) { return json(w); }

inline Word word_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("word: expected array of integers");
    Word w;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError("word: expected array of integers");
        w.push_back(x.get<int>());
    }
    return w;
}

inline json to_json(const RobyElement& e) {
    json terms = json::array();
    for (const auto& [w, c] : e.terms()) terms.push_back({{"word", w}, {"coeff", c.str()}});
    return {{"n", e.generator_count()}, {"terms", terms}};
}

/// Accepts arbitrary words and folds them through canonical reduction.
inline RobyElement roby_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw ParseError("roby element: expected {n, terms}");
    int n = j.at("n").get<int>();
    if (n < 1) throw ParseError("roby element: n must be >= 1");
    RobyElement e(n);
    for (const auto& term : j.at("terms")) {
        Word w = word_from_json(term.at("word"));
        for (int letter : w)
            if (letter < 1 || letter > n) throw ParseError("roby element: letter out of range");
        e += reduce(n, w) * scalar_from_json(term.at("coeff"));
    }
    return e;
}

// --- Lie algebras of order 3 ------------------------------------------------

inline json to_json(const LieOrder3Algebra& A) {
    json f = json::array(), r1 = json::array(), r2 = json::array();
    json t1 = json::array(), t2 = json::array();
    for (const auto& [key, vec] : A.f_entries())
        for (const auto& [c, val] : vec) f.push_back({key.first, key.second, c, val.str()});
    for (const auto& [key, vec] : A.r1_entries())
        for (const auto& [c, val] : vec) r1.push_back({key.first, key.second, c, val.str()});
    for (const auto& [key, vec] : A.r2_entries())
        for (const auto& [c, val] : vec) r2.push_back({key.first, key.second, c, val.str()});
    for (const auto& [key, vec] : A.t1_entries())
        for (const auto& [c, val] : vec) t1.push_back({key[0], key[1], key[2], c, val.str()});
    for (const auto& [key, vec] : A.t2_entries())
        for (const auto& [c, val] : vec) t2.push_back({key[0], key[1], key[2], c, val.str()});
    return {{"n0", A.n0()}, {"n1", A.n1()}, {"n2", A.n2()},
            {"f", f},       {"r1", r1},     {"r2", r2},
            {"t1", t1},     {"t2", t2}};
}

inline LieOrder3Algebra algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n0") || !j.contains("n1"))
        throw ParseError("algebra: expected {n0, n1, n2, f, r1, r2, t1, t2}");
    LieOrder3Algebra A(j.at("n0").get<int>(), j.at("n1").get<int>(),
                       j.value("n2", 0));
    auto read_pairs = [&](const char* name, auto setter) {
        if (!j.contains(name)) return;
        std::map<std::pair<int, int>, SparseVec> acc;
        for (const auto& row : j.at(name)) {
            if (!row.is_array() || row.size() != 4) throw ParseError(std::string(name) + ": expected [a,b,c,coeff]");
            vec_add(acc[{row[0].get<int>(), row[1].get<int>()}], row[2].get<int>(),
                    scalar_from_json(row[3]));
        }
        for (const auto& [key, vec] : acc) setter(key.first, key.second, vec);
    };
    auto read_triples = [&](const char* name, auto setter) {
        if (!j.contains(name)) return;
        std::map<std::array<int, 3>, SparseVec> acc;
        for (const auto& row : j.at(name)) {
            if (!row.is_array() || row.size() != 5) throw ParseError(std::string(name) + ": expected [i,j,k,c,coeff]");
            vec_add(acc[{row[0].get<int>(), row[1].get<int>(), row[2].get<int>()}],
                    row[3].get<int>(), scalar_from_json(row[4]));
        }
        for (const auto& [key, vec] : acc) setter(key[0], key[1], key[2], vec);
    };
    try {
        read_pairs("f", [&](int a, int b, const SparseVec& v) { A.set_bracket00(a, b, v); });
        read_pairs("r1", [&](int a, int i, const SparseVec& v) { A.set_bracket01(a, i, v); });
        read_pairs("r2", [&](int a, int u, const SparseVec& v) { A.set_bracket02(a, u, v); });
        read_triples("t1", [&](int i, int jj, int k, const SparseVec& v) { A.set_triple1(i, jj, k, v); });
        read_triples("t2", [&](int u, int v_, int w, const SparseVec& val) { A.set_triple2(u, v_, w, val); });
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("algebra: ") + e.what());
    }
    return A;
}

inline json to_json(const MatrixRep& R) {
    auto matrices = [](const std::vector<ScalarMatrix>& rho) {
        json out = json::array();
        for (const auto& m : rho) {
            json rows = json::array();
            for (std::size_t r = 0; r < m.rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
                rows.push_back(row);
            }
            out.push_back(rows);
        }
        return out;
    };
    return {{"block_dims", {R.block_dims[0], R.block_dims[1], R.block_dims[2]}},
            {"rho0", matrices(R.rho0)},
            {"rho1", matrices(R.rho1)},
            {"rho2", matrices(R.rho2)}};
}

inline MatrixRep rep_from_json(const json& j) {
    MatrixRep R;
    if (!j.is_object() || !j.contains("block_dims")) throw ParseError("rep: expected {block_dims, rho0, rho1, rho2}");
    const auto& bd = j.at("block_dims");
    if (!bd.is_array() || bd.size() != 3) throw ParseError("rep: block_dims must have 3 entries");
    for (int b = 0; b < 3; ++b) R.block_dims[b] = bd[b].get<std::size_t>();
    auto matrices = [&](const char* name, std::vector<ScalarMatrix>& rho) {
        if (!j.contains(name)) return;
        for (const auto& rows : j.at(name)) {
            std::size_t nr = rows.size();
            std::size_t nc = nr == 0 ? 0 : rows[0].size();
            ScalarMatrix m(nr, nc);
            for (std::size_t r = 0; r < nr; ++r) {
                if (rows[r].size() != nc) throw ParseError("rep: ragged matrix");
                for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = scalar_from_json(rows[r][c]);
            }
            rho.push_back(std::move(m));
        }
    };
    matrices("rho0", R.rho0);
    matrices("rho1", R.rho1);
    matrices("rho2", R.rho2);
    return R;
}

inline json to_json(const CheckReport& report) {
    json items = json::array();
    for (const auto& item : report.items) {
        json entry = {{"axiom", item.axiom}, {"pass", item.pass}};
        if (!item.pass) entry["witness"] = item.witness;
        items.push_back(entry);
    }
    return {{"pass", report.all_pass()}, {"checks", items}};
}

inline json to_json(const GradedElement& e) {
    auto vec = [](const SparseVec& v) {
        json out = json::array();
        for (const auto& [i, c] : v) out.push_back({i, c.str()});
        return out;
    };
    return {{"x", vec(e.x)}, {"y", vec(e.y)}, {"z", vec(e.z)}};
}

inline GradedElement graded_element_from_json(const json& j) {
    GradedElement e;
    auto vec = [](const json& arr, SparseVec& into) {
        for (const auto& pair : arr) {
            if (!pair.is_array() || pair.size() != 2) throw ParseError("element: expected [index, coeff]");
            vec_add(into, pair[0].get<int>(), scalar_from_json(pair[1]));
        }
    };
    if (j.contains("x")) vec(j.at("x"), e.x);
    if (j.contains("y")) vec(j.at("y"), e.y);
    if (j.contains("z")) vec(j.at("z"), e.z);
    return e;
}

// --- Enveloping algebra -----------------------------------------------------

inline json to_json(const PBWMonomial& m) {
    return {{"x", m.x_exp}, {"y", m.y_word}};
}

inline PBWMonomial pbw_from_json(const json& j, int n0) {
    PBWMonomial m = PBWMonomial::unit(n0);
    if (j.contains("x")) {
        const auto& xs = j.at("x");
        if (xs.size() != static_cast<std::size_t>(n0)) throw ParseError("monomial: x exponent count mismatch");
        for (int a = 0; a < n0; ++a) m.x_exp[a] = xs[a].get<unsigned>();
    }
    if (j.contains("y")) m.y_word = word_from_json(j.at("y"));
    if (has_rise(m.y_word)) throw ParseError("monomial: y word has a rise");
    return m;
}

inline json to_json(const UElement& u) {
    json terms = json::array();
    for (const auto& [m, c] : u.terms()) {
        json t = to_json(m);
        t["coeff"] = c.str();
        terms.push_back(t);
    }
    return {{"terms", terms}};
}

inline UElement uelement_from_json(const json& j,
                                   std::shared_ptr<const LieOrder3Algebra> algebra) {
    UElement u(algebra);
    if (!j.is_object() || !j.contains("terms")) throw ParseError("u element: expected {terms}");
    for (const auto& t : j.at("terms")) {
        PBWMonomial m = pbw_from_json(t, algebra->n0());
        for (int i : m.y_word)
            if (i < 1 || i > algebra->n1()) throw ParseError("u element: y index out of range");
        u.add_term(m, scalar_from_json(t.at("coeff")));
    }
    return u;
}

inline json to_json(const GradedTensor& t) {
    json terms = json::array();
    for (const auto& [key, c] : t.terms())
        terms.push_back({{"left", to_json(key.first)}, {"right", to_json(key.second)}, {"coeff", c.str()}});
    return {{"terms", terms}};
}

inline json to_json(const GroupLikeReport& r) {
    return {{"cap", r.cap},
            {"morphism_identity_holds", r.morphism_identity_holds},
            {"factorized_identity_holds", r.factorized_identity_holds},
            {"truncation_lossless", r.truncation_lossless}};
}

inline json to_json(const DualMonomial& m) {
    return {{"alpha", m.alpha_exp}, {"theta", m.theta_word}};
}

inline DualMonomial dual_monomial_from_json(const json& j, int n0) {
    DualMonomial m{std::vector<unsigned>(n0, 0), {}};
    if (j.contains("alpha")) {
        const auto& xs = j.at("alpha");
        if (xs.size() != static_cast<std::size_t>(n0)) throw ParseError("dual monomial: alpha exponent count mismatch");
        for (int a = 0; a < n0; ++a) m.alpha_exp[a] = xs[a].get<unsigned>();
    }
    if (j.contains("theta")) m.theta_word = word_from_json(j.at("theta"));
    if (has_rise(m.theta_word)) throw ParseError("dual monomial: theta word has a rise");
    return m;
}

inline json to_json(const DualElement& e) {
    json terms = json::array();
    for (const auto& [m, c] : e) {
        json t = to_json(m);
        t["coeff"] = c.str();
        terms.push_back(t);
    }
    return {{"terms", terms}};
}

inline DualElement dual_element_from_json(const json& j, int n0) {
    DualElement e;
    if (!j.is_object() || !j.contains("terms")) throw ParseError("dual element: expected {terms}");
    for (const auto& t : j.at("terms"))
        dual_add(e, dual_monomial_from_json(t, n0), scalar_from_json(t.at("coeff")));
    return e;
}

inline json to_json(const ThetaRelationReport& r) {
    json triples = json::array();
    for (const auto& [key, expansion] : r.triple_expansions)
        triples.push_back({{"i", key[0]}, {"j", key[1]}, {"k", key[2]}, {"product", to_json(expansion)}});
    json pairs = json::array();
    for (const auto& [key, expansion] : r.pair_expansions)
        pairs.push_back({{"i", key[0]}, {"j", key[1]}, {"product", to_json(expansion)}});
    return {{"n1", r.n1},
            {"cap", r.cap},
            {"relations_vanish", r.relations_vanish},
            {"alpha_commutes", r.alpha_commutes},
            {"pair_products", pairs},
            {"triple_products", triples}};
}

// --- Matrices over Lambda_3 --------------------------------------------------

inline json entries_to_json(const RobyMatrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(to_json(m.at(r, c)));
    return entries;
}

inline RobyMatrix entries_from_json(const json& entries, std::size_t rows, std::size_t cols, int p) {
    if (!entries.is_array() || entries.size() != rows * cols)
        throw ParseError("matrix: entry count mismatch");
    RobyMatrix m(rows, cols, p);
    std::size_t idx = 0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            RobyElement e = roby_from_json(entries[idx++]);
            if (e.generator_count() != p) throw ParseError("matrix: entry generator count mismatch");
            m.at(r, c) = e;
        }
    return m;
}

inline json to_json(const Lambda0Matrix& m) {
    return {{"k", m.size()}, {"p", m.p()}, {"entries", entries_to_json(m.matrix())}};
}

inline Lambda0Matrix lambda0_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("p") || !j.contains("entries"))
        throw ParseError("lambda0 matrix: expected {k, p, entries}");
    std::size_t k = j.at("k").get<std::size_t>();
    int p = j.at("p").get<int>();
    try {
        return Lambda0Matrix(entries_from_json(j.at("entries"), k, k, p));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("lambda0 matrix: ") + e.what());
    }
}

inline json to_json(const GradedMatrix& m) {
    return {{"shape", {m.shape().m1, m.shape().m2, m.shape().m3}},
            {"p", m.p()},
            {"entries", entries_to_json(m.matrix())}};
}

inline GradedMatrix graded_matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("p") || !j.contains("entries"))
        throw ParseError("graded matrix: expected {shape, p, entries}");
    const auto& s = j.at("shape");
    if (!s.is_array() || s.size() != 3) throw ParseError("graded matrix: shape must have 3 entries");
    BlockShape shape{s[0].get<int>(), s[1].get<int>(), s[2].get<int>()};
    int p = j.at("p").get<int>();
    try {
        return GradedMatrix(shape, entries_from_json(j.at("entries"), shape.dim(), shape.dim(), p));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("graded matrix: ") + e.what());
    }
}

inline json to_json(const ScalarMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const GlfCertificate& cert) {
    json out = {{"member", cert.member}, {"products_verified", cert.products_verified}};
    if (!cert.member) out["reason"] = cert.reason;
    if (cert.inverse) out["inverse"] = to_json(*cert.inverse);
    return out;
}

inline json to_json(const InfinitesimalReport& r) {
    json tangent = json::array();
    for (const auto& term : r.tangent)
        tangent.push_back({{"row", term.row}, {"col", term.col}, {"theta", term.theta}, {"coeff", term.coeff.str()}});
    return {{"pass", r.pass()},
            {"grading_ok", r.grading_ok},
            {"degree0", to_json(r.degree0)},
            {"degree0_block_diagonal", r.degree0_block_diagonal},
            {"diagonal_block_invertible",
             {r.diagonal_block_invertible[0], r.diagonal_block_invertible[1], r.diagonal_block_invertible[2]}},
            {"degree0_invertible", r.degree0_invertible},
            {"degree1_in_b_blocks", r.degree1_in_b_blocks},
            {"tangent", tangent}};
}

}  // namespace ternary::io
