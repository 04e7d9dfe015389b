// Acceptance suite: every check is an exact identity or an oracle
// equivalence; one pass/fail line is printed per criterion and the process
// exits with the number of failed criteria.

#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "support/pbw_oracle.hpp"
#include "support/roby_oracle.hpp"
#include "ternary/graded_matrix.hpp"
#include "ternary/hopf.hpp"
#include "ternary/lie3.hpp"

using namespace ternary;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

PBWMonomial y_monomial(int n0, const Word& w) {
    PBWMonomial m = PBWMonomial::unit(n0);
    m.y_word = w;
    return m;
}

// --- 1. Roby oracle equivalence ---------------------------------------------

void criterion_1() {
    bool pass = true;
    std::string detail;
    std::size_t words = 0;
    for (int n = 2; n <= 3 && pass; ++n)
        for (int d = 0; d <= 6 && pass; ++d) {
            auto cert = oracle::certify_degree(n, d);
            words += cert.words_checked;
            if (!cert.rank_matches || !cert.complement_is_basis || cert.first_mismatch) {
                pass = false;
                detail = "n=" + std::to_string(n) + " d=" + std::to_string(d);
            }
        }
    if (pass) detail = std::to_string(words) + " words against the quotient oracle";
    report(1, "reduce() agrees with the free-algebra quotient oracle, n<=3, length<=6", pass, detail);
}

// --- 2. Appendix basis reproduction ------------------------------------------

void criterion_2() {
    auto as_set = [](const std::vector<Word>& ws) { return std::set<Word>(ws.begin(), ws.end()); };
    bool pass = as_set(enumerate_basis(2, 0)) == std::set<Word>{{}} &&
                as_set(enumerate_basis(2, 1)) == std::set<Word>{{1}, {2}} &&
                as_set(enumerate_basis(2, 2)) == std::set<Word>{{1, 1}, {1, 2}, {2, 1}, {2, 2}} &&
                as_set(enumerate_basis(2, 3)) ==
                    std::set<Word>{{1, 2, 1}, {2, 2, 1}, {2, 1, 1}, {2, 1, 2}};
    for (int k = 0; k <= 3; ++k) {
        BigInt expected = k == 0 ? 1 : (k == 1 ? 2 : 4);
        if (roby_dim(2, k) != expected) pass = false;
    }
    // k = 3 confirmed by independent enumeration.
    std::size_t brute = 0;
    for (const Word& w : oracle::all_words(2, 3))
        if (oracle::rise_free(w)) ++brute;
    if (brute != 4 || enumerate_basis(2, 3).size() != brute) pass = false;
    report(2, "appendix n=2 basis list reproduced for k<=3; dims [1,2,4,4]", pass);
}

// --- 3. Dual theta computations ----------------------------------------------

void criterion_3() {
    const int n0 = 2, n1 = 2, cap = 3;
    const Cyclotomic3 one(1), q = qpow(1), q2 = qpow(2);
    auto theta = [&](const Word& w) { return DualMonomial::theta(n0, w); };
    auto elem = [&](const Word& w) {
        DualElement e;
        e[theta(w)] = one;
        return e;
    };
    auto expect = [](const DualElement& got, std::vector<std::pair<DualMonomial, Cyclotomic3>> want) {
        DualElement w;
        for (auto& [m, c] : want) dual_add(w, m, c);
        return got == w;
    };

    bool pass = true;
    pass &= expect(dual_multiply(n0, n1, elem({1}), elem({1}), cap), {{theta({1, 1}), -q2}});
    pass &= expect(dual_multiply(n0, n1, elem({1}), elem({1, 1}), cap), {});
    pass &= expect(dual_multiply(n0, n1, elem({1, 1}), elem({1}), cap), {});
    pass &= expect(dual_multiply(n0, n1, elem({1}), elem({2}), cap),
                   {{theta({1, 2}), one}, {theta({2, 1}), q}});
    pass &= expect(dual_multiply(n0, n1, elem({2}), elem({1}), cap),
                   {{theta({2, 1}), one}, {theta({1, 2}), q}});

    ThetaRelationReport rels = derive_theta_relations(n1, cap);
    auto triple = [&](int i, int j, int k) { return rels.triple_expansions.at({i, j, k}); };
    pass &= expect(triple(1, 1, 2), {{theta({1, 2, 1}), -one}, {theta({2, 1, 1}), -q}});
    pass &= expect(triple(1, 2, 1), {{theta({1, 2, 1}), Cyclotomic3(2)}, {theta({2, 1, 1}), -one}});
    pass &= expect(triple(2, 1, 1), {{theta({1, 2, 1}), -one}, {theta({2, 1, 1}), -q2}});
    pass &= rels.relations_vanish;
    pass &= rels.alpha_commutes;
    report(3, "dual products of theta parameters match the displayed expansions; "
              "six-permutation sums vanish for n1=2", pass);
}

// --- 4. Coproduct identities --------------------------------------------------

void criterion_4() {
    auto A = std::make_shared<const LieOrder3Algebra>(build_gl_el(1, 1, 1).first);
    const Cyclotomic3 one(1), q = qpow(1), q2 = qpow(2);
    bool pass = true;

    {
        GradedTensor d = coproduct(UElement::monomial_element(A, y_monomial(3, {1, 2, 1})));
        pass &= d.terms().size() == 8;
        pass &= d.coefficient(y_monomial(3, {1, 2, 1}), y_monomial(3, {})) == one;
        pass &= d.coefficient(y_monomial(3, {1, 2}), y_monomial(3, {1})) == one;
        pass &= d.coefficient(y_monomial(3, {1, 1}), y_monomial(3, {2})) == q;
        pass &= d.coefficient(y_monomial(3, {2, 1}), y_monomial(3, {1})) == q2;
        pass &= d.coefficient(y_monomial(3, {1}), y_monomial(3, {2, 1})) == one;
        pass &= d.coefficient(y_monomial(3, {2}), y_monomial(3, {1, 1})) == q;
        pass &= d.coefficient(y_monomial(3, {1}), y_monomial(3, {1, 2})) == q2;
        pass &= d.coefficient(y_monomial(3, {}), y_monomial(3, {1, 2, 1})) == one;
    }
    {
        GradedTensor d = coproduct(UElement::monomial_element(A, y_monomial(3, {2, 1, 1})));
        pass &= d.terms().size() == 6;
        pass &= d.coefficient(y_monomial(3, {2, 1, 1}), y_monomial(3, {})) == one;
        pass &= d.coefficient(y_monomial(3, {2, 1}), y_monomial(3, {1})) == -q2;
        pass &= d.coefficient(y_monomial(3, {1, 1}), y_monomial(3, {2})) == q2;
        pass &= d.coefficient(y_monomial(3, {2}), y_monomial(3, {1, 1})) == one;
        // Right factors keep the original letter order, so the last mixed
        // term is -Y1 (x) Y2Y1.
        pass &= d.coefficient(y_monomial(3, {1}), y_monomial(3, {2, 1})) == -one;
        pass &= d.coefficient(y_monomial(3, {}), y_monomial(3, {2, 1, 1})) == one;
    }
    pass &= check_bracket_coproduct(A).all_pass();
    auto P = std::make_shared<const LieOrder3Algebra>(build_poincare_cubic(4));
    pass &= check_bracket_coproduct(P).all_pass();
    report(4, "coproduct expansions of Y1Y2Y1 and Y2Y1Y1 exact; {dY,dY,dY} = d{Y,Y,Y} "
              "on gl_el(1,1,1) and poincare(4)", pass);
}

// --- 5. Order-by-order inversion over Lambda_0 --------------------------------

void criterion_5() {
    std::mt19937_64 rng(0x5eed0005);
    std::uniform_int_distribution<int> entry(-5, 5);
    const Word w{2, 2, 1};
    bool pass = nilpotency_order(reduce(2, w), 3) == 2;
    pass &= nilpotency_order(RobyElement::generator(2, 1), 4) == 3;

    for (int trial = 0; trial < 20 && pass; ++trial) {
        ScalarMatrix A0(2, 2), A1(2, 2);
        do {
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) A0.at(r, c) = Cyclotomic3(entry(rng));
        } while (!A0.is_invertible());
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) A1.at(r, c) = Cyclotomic3(entry(rng));

        Lambda0Matrix A(2, 2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) {
                A.at(r, c) = RobyElement::unit(2) * A0.at(r, c);
                A.at(r, c) += reduce(2, w) * A1.at(r, c);
            }
        Lambda0Matrix B = invert_lambda0(A, 12);

        ScalarMatrix A0inv = A0.inverse();
        ScalarMatrix mid = -(A0inv * A1 * A0inv);
        Lambda0Matrix expected(2, 2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) {
                expected.at(r, c) = RobyElement::unit(2) * A0inv.at(r, c);
                expected.at(r, c) += reduce(2, w) * mid.at(r, c);
            }
        pass &= B == expected;
        pass &= A.matrix() * B.matrix() == RobyMatrix::identity(2, 2);
        pass &= B.matrix() * A.matrix() == RobyMatrix::identity(2, 2);
    }
    report(5, "(A0 + A1*t2t2t1)^-1 = A0^-1 - A0^-1 A1 A0^-1 t2t2t1 on random data; "
              "(t2t2t1)^2 = 0; nilpotency(t1) = 3", pass);
}

// --- 6 & 9. Random GL_f members: exact two-sided inverses and tangents --------

struct MemberBatch {
    std::vector<GradedMatrix> members;
    int c_exercised = 0;
};

GradedMatrix random_g0(const BlockShape& shape, int p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    GradedMatrix G0(shape, p);
    for (int b = 0; b < 3; ++b) {
        std::size_t k = shape.block_size(b);
        ScalarMatrix blk(k, k);
        do {
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c) blk.at(r, c) = Cyclotomic3(entry(rng));
        } while (!blk.is_invertible());
        G0.set_block(b, b, RobyMatrix::from_scalar(blk, p));
    }
    return G0;
}

// Grade-1 factor with one b-block killed, so the cube vanishes structurally.
GradedMatrix random_nilpotent_factor(const BlockShape& shape, int p, int killed,
                                     std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> letter(1, p);
    std::uniform_int_distribution<int> extra(0, 3);
    GradedMatrix B(shape, p);
    const int transitions[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    for (int t = 0; t < 3; ++t) {
        if (t == killed) continue;
        int br = transitions[t][0], bc = transitions[t][1];
        RobyMatrix blk(shape.block_size(br), shape.block_size(bc), p);
        for (std::size_t r = 0; r < blk.rows(); ++r)
            for (std::size_t c = 0; c < blk.cols(); ++c) {
                blk.at(r, c) = RobyElement::generator(p, letter(rng)) * Cyclotomic3(coeff(rng));
                if (extra(rng) == 0) {
                    // occasional degree-4 content
                    Word w{letter(rng), 2, 1, letter(rng)};
                    if (!has_rise(w)) blk.at(r, c) += reduce(p, w) * Cyclotomic3(coeff(rng));
                }
            }
        B.set_block(br, bc, blk);
    }
    return B;
}

// A member counts as exercising the degree-6 C-coefficient path when some
// diagonal block holds degree-3 words w1 (at (r,k)) and w2 (at (k,c)) whose
// concatenation has a rise: the order-by-order inversion then reduces exactly
// that concatenation in its degree-6 slice.
bool exercises_c_path(const GradedMatrix& M) {
    for (int b = 0; b < 3; ++b) {
        RobyMatrix D3 = M.block(b, b).degree_component(3);
        std::size_t k = D3.rows();
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t mid = 0; mid < k; ++mid)
                for (std::size_t c = 0; c < k; ++c)
                    for (const auto& [w1, c1] : D3.at(r, mid).terms())
                        for (const auto& [w2, c2] : D3.at(mid, c).terms())
                            if (has_rise(concat(w1, w2))) return true;
    }
    return false;
}

// Not every product of exponentials is finitely blockwise invertible: the
// Schur combinations of the inverse formulas can pick up non-nilpotent
// Lambda_0 content. GL_f is by definition the subset whose inverse data stay
// finite, so candidates are filtered by membership, exactly the restriction
// the group definition makes.
MemberBatch build_members(const BlockShape& shape, int p, int count, int cap,
                          std::mt19937_64& rng, bool& products_ok) {
    MemberBatch batch;
    int attempts = 0;
    while (static_cast<int>(batch.members.size()) < count && attempts < 40 * count) {
        ++attempts;
        GradedMatrix G0 = random_g0(shape, p, rng);
        std::vector<GradedMatrix> Bs;
        std::uniform_int_distribution<int> nfactors(2, 3);
        int n = nfactors(rng);
        for (int f = 0; f < n; ++f)
            Bs.push_back(random_nilpotent_factor(shape, p, f % 3, rng));
        GradedMatrix g = group_element(G0, Bs, 12);
        GlfCertificate cert = is_glf_member(g, cap);
        if (!cert.member) continue;
        if (!cert.products_verified) products_ok = false;
        GradedMatrix id = GradedMatrix::identity(shape, p);
        if (!(mat_mul(g, *cert.inverse) == id) || !(mat_mul(*cert.inverse, g) == id))
            products_ok = false;
        if (exercises_c_path(g)) ++batch.c_exercised;
        batch.members.push_back(std::move(g));
    }
    return batch;
}

void criteria_6_and_9() {
    std::mt19937_64 rng(0x5eed0006);
    const int p = 2;
    const int cap = 18;
    bool pass6 = true;
    MemberBatch batch111 = build_members(BlockShape{1, 1, 1}, p, 25, cap, rng, pass6);
    MemberBatch batch212 = build_members(BlockShape{2, 1, 2}, p, 25, cap, rng, pass6);

    bool pass9 = true;
    int checked = 0, c_cases = batch111.c_exercised + batch212.c_exercised;
    for (const auto* batch : {&batch111, &batch212}) {
        for (const GradedMatrix& M : batch->members) {
            InfinitesimalReport rep = infinitesimal_limit(M);
            if (!rep.pass()) pass9 = false;
            ++checked;
        }
    }
    if (checked < 50) pass6 = false;
    if (c_cases < 5) pass6 = false;
    report(6, "seeded random GL_f members of shapes (1,1,1) and (2,1,2): MN = NM = 1 exactly",
           pass6, std::to_string(checked) + " members, " + std::to_string(c_cases) +
                      " exercising the degree-6 C-coefficient path");
    report(9, "tangent extraction: degree-0 block-diagonal invertible, degree-1 in B blocks",
           pass9, std::to_string(checked) + " members");
}

// --- 7. Axioms on every built-in + mutation detection -------------------------

void criterion_7() {
    bool pass = true;
    std::string detail;
    for (int m1 = 1; m1 <= 2 && pass; ++m1)
        for (int m2 = 1; m2 <= 2 && pass; ++m2)
            for (int m3 = 1; m3 <= 2 && pass; ++m3) {
                if (!check_axioms(build_gl(m1, m2, m3).first).all_pass()) {
                    pass = false;
                    detail = "gl(" + std::to_string(m1) + "," + std::to_string(m2) + "," +
                             std::to_string(m3) + ")";
                }
                if (!check_axioms(build_gl_el(m1, m2, m3).first).all_pass()) {
                    pass = false;
                    detail = "gl_el(...)";
                }
            }
    for (int D = 2; D <= 4 && pass; ++D)
        if (!check_axioms(build_poincare_cubic(D)).all_pass()) {
            pass = false;
            detail = "poincare(" + std::to_string(D) + ")";
        }

    std::mt19937_64 rng(0x5eed0007);
    int detected = 0, total = 0;
    auto mutate = [&](const LieOrder3Algebra& base, int count) {
        auto slots = base.nonzero_constants();
        std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
        for (int t = 0; t < count; ++t) {
            LieOrder3Algebra A = base;
            const auto& slot = slots[pick(rng)];
            A.set_constant(slot, slot.value * Cyclotomic3(2));
            CheckReport rep = check_axioms(A);
            bool witnessed = false;
            for (const auto& item : rep.items)
                if (!item.pass && !item.witness.empty()) witnessed = true;
            if (witnessed) ++detected;
            ++total;
        }
    };
    mutate(build_gl(2, 1, 1).first, 7);
    mutate(build_gl_el(2, 1, 1).first, 7);
    mutate(build_poincare_cubic(4), 7);
    if (detected != total) {
        pass = false;
        detail = std::to_string(detected) + "/" + std::to_string(total) + " mutations detected";
    }
    report(7, "axioms pass on gl, gl_el (all m_i <= 2) and poincare(2,3,4); 21 random "
              "single-constant mutations all produce failure witnesses", pass, detail);
}

// --- 8. Defining representations ----------------------------------------------

void criterion_8() {
    auto [gl111, rep111] = build_gl(1, 1, 1);
    auto [el211, rep211] = build_gl_el(2, 1, 1);
    bool pass = check_representation(gl111, rep111).all_pass() &&
                check_representation(el211, rep211).all_pass();
    report(8, "defining representations of gl(1,1,1) and gl_el(2,1,1) satisfy every "
              "representation condition exactly", pass);
}

// --- 10. PBW oracle -------------------------------------------------------------

void criterion_10() {
    auto cert = oracle::certify_pbw(build_gl_el(1, 1, 1).first, 4);
    bool pass = cert.matches();
    std::string detail = "filtration dims";
    for (std::size_t d = 0; d < cert.quotient_dim.size(); ++d)
        detail += " " + std::to_string(cert.quotient_dim[d]);
    report(10, "PBW monomials of gl_el(1,1,1) match the brute-force ideal quotient "
               "through degree 4", pass, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criteria_6_and_9();
    criterion_7();
    criterion_8();
    criterion_10();
    if (failures) std::cout << failures << " criterion(s) FAILED" << std::endl;
    else std::cout << "all acceptance criteria passed" << std::endl;
    return failures;
}
