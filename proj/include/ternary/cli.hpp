#pragma once

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ternary/json_io.hpp"

namespace ternary::cli {

// Exit codes, scriptable: domain errors map to stable values.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitNotInvertible = 4;
inline constexpr int kExitCapExceeded = 5;

/// verb (+ discriminating option) -> library operation, one entry per
/// operation. The registry is what the coverage test checks.
struct VerbEntry {
    const char* verb;
    const char* operation;
};

inline const std::vector<VerbEntry>& verb_registry() {
    static const std::vector<VerbEntry> registry = {
        {"cyc-add", "scalar-ring/cyc_add"},
        {"cyc-mul", "scalar-ring/cyc_mul"},
        {"cyc-inv", "scalar-ring/cyc_inv"},
        {"qpow", "scalar-ring/qpow"},
        {"has-rise", "roby-core/has_rise"},
        {"reduce", "roby-core/reduce"},
        {"mul", "roby-core/lam_mul"},
        {"grade", "roby-core/grade"},
        {"dims", "roby-core/roby_dim"},
        {"basis", "roby-core/enumerate_basis"},
        {"nilpotency", "roby-core/nilpotency_order"},
        {"jacobi", "lie3-structures/check_axioms"},
        {"build gl", "lie3-structures/build_gl"},
        {"build gl-el", "lie3-structures/build_gl_el"},
        {"build poincare", "lie3-structures/build_poincare_cubic"},
        {"rep-check", "lie3-structures/check_representation"},
        {"grade-aut", "lie3-structures/apply_grade_automorphism"},
        {"u-normalize", "enveloping-hopf/u_normalize"},
        {"u-mul", "enveloping-hopf/u_mul"},
        {"coproduct", "enveloping-hopf/coproduct"},
        {"antipode", "enveloping-hopf/antipode"},
        {"counit", "enveloping-hopf/counit"},
        {"bracket-coproduct", "enveloping-hopf/check_bracket_coproduct"},
        {"exp", "enveloping-hopf/truncated_exp_group_like"},
        {"dual-mul", "enveloping-hopf/dual_multiply"},
        {"derive-theta", "enveloping-hopf/derive_theta_relations"},
        {"invert", "graded-matrix/invert_lambda0"},
        {"mat-mul", "graded-matrix/mat_mul"},
        {"block-invert", "graded-matrix/invert_block"},
        {"glf-check", "graded-matrix/is_glf_member"},
        {"exp-nilpotent", "graded-matrix/exp_nilpotent"},
        {"group-element", "graded-matrix/group_element"},
        {"tangent", "graded-matrix/infinitesimal_limit"},
    };
    return registry;
}

namespace detail {

inline Word parse_word_flag(const std::string& csv) {
    Word w;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            w.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("bad word letter '" + item + "'");
        }
    }
    return w;
}

inline std::pair<int, int> parse_range(const std::string& spec) {
    auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            int k = std::stoi(spec);
            return {k, k};
        }
        return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("bad range '" + spec + "'");
    }
}

inline io::json read_input(const std::string& path, std::istream& stdin_stream) {
    try {
        if (path.empty() || path == "-") return io::json::parse(stdin_stream);
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open input file '" + path + "'");
        return io::json::parse(f);
    } catch (const io::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON input: ") + e.what());
    }
}

inline std::shared_ptr<const LieOrder3Algebra> algebra_from_doc(const io::json& doc) {
    if (!doc.contains("algebra")) throw ParseError("input document needs an 'algebra' field");
    const auto& a = doc.at("algebra");
    if (a.is_object() && a.contains("builtin")) {
        std::string kind = a.at("builtin").get<std::string>();
        if (kind == "gl" || kind == "gl-el") {
            const auto& m = a.at("m");
            if (!m.is_array() || m.size() != 3) throw ParseError("builtin gl: need m = [m1,m2,m3]");
            auto built = kind == "gl" ? build_gl(m[0].get<int>(), m[1].get<int>(), m[2].get<int>())
                                      : build_gl_el(m[0].get<int>(), m[1].get<int>(), m[2].get<int>());
            return std::make_shared<const LieOrder3Algebra>(std::move(built.first));
        }
        if (kind == "poincare")
            return std::make_shared<const LieOrder3Algebra>(build_poincare_cubic(a.at("d").get<int>()));
        throw ParseError("unknown builtin algebra '" + kind + "'");
    }
    return std::make_shared<const LieOrder3Algebra>(io::algebra_from_json(a));
}

inline GenWord gen_word_from_json(const io::json& arr) {
    if (!arr.is_array()) throw ParseError("word: expected array of letters like \"X1\", \"Y2\"");
    GenWord w;
    for (const auto& item : arr) {
        if (!item.is_string()) throw ParseError("word letter must be a string");
        std::string s = item.get<std::string>();
        if (s.size() < 2 || (s[0] != 'X' && s[0] != 'Y'))
            throw ParseError("word letter must look like X<i> or Y<i>, got '" + s + "'");
        int index;
        try {
            index = std::stoi(s.substr(1));
        } catch (const std::exception&) {
            throw ParseError("bad letter index in '" + s + "'");
        }
        w.push_back(s[0] == 'X' ? x_letter(index) : y_letter(index));
    }
    return w;
}

inline int default_matrix_cap(const GradedMatrix& m) {
    int mx = std::max(m.shape().m1, std::max(m.shape().m2, m.shape().m3));
    return 3 * m.p() * mx;
}

}  // namespace detail

/// Runs one workbench invocation. All output goes to `out` as canonical JSON;
/// errors print {"error": {...}} to `err` and return the taxonomy exit code.
inline int run_workbench(std::vector<std::string> args, std::istream& in, std::ostream& out,
                         std::ostream& err) {
    CLI::App app{"Exact workbench for ternary algebras: the three-exterior algebra, "
                 "Lie algebras of order 3, their Hopf-dual parameters, and block-graded "
                 "matrix groups over Lambda_3"};
    app.require_subcommand(1);

    std::string input_path;
    std::string format = "json";
    std::uint64_t seed = 0;
    app.add_option("--format", format, "output format (json)")->capture_default_str();

    // Shared option storage; each subcommand wires the flags it uses.
    std::string word_csv, k_range, a_str, b_str, kind, m_csv;
    int n = 1, n0 = 1, n1 = 1, d = 4, k_int = 0;
    std::int64_t qk = 0;
    int cap = -1;
    int mutations = 0;
    bool ungraded = false;

    auto add_in = [&](CLI::App* sub) {
        sub->add_option("--in", input_path, "input JSON file ('-' or omitted for stdin)");
    };

    CLI::App* cyc_add = app.add_subcommand("cyc-add", "exact sum in Q(q)");
    cyc_add->add_option("--a", a_str)->required();
    cyc_add->add_option("--b", b_str)->required();
    CLI::App* cyc_mul = app.add_subcommand("cyc-mul", "exact product in Q(q)");
    cyc_mul->add_option("--a", a_str)->required();
    cyc_mul->add_option("--b", b_str)->required();
    CLI::App* cyc_inv = app.add_subcommand("cyc-inv", "exact inverse in Q(q)");
    cyc_inv->add_option("--a", a_str)->required();
    CLI::App* qpow_cmd = app.add_subcommand("qpow", "q^(k mod 3)");
    qpow_cmd->add_option("--k", qk)->required();

    CLI::App* has_rise_cmd = app.add_subcommand("has-rise", "position of the leftmost rise");
    has_rise_cmd->add_option("--word", word_csv)->required();
    CLI::App* reduce_cmd = app.add_subcommand("reduce", "canonical Roby form of a word");
    reduce_cmd->add_option("--n", n)->required();
    reduce_cmd->add_option("--word", word_csv)->required();
    CLI::App* mul_cmd = app.add_subcommand("mul", "product in Lambda_3; input {a, b}");
    add_in(mul_cmd);
    CLI::App* grade_cmd = app.add_subcommand("grade", "grades present in an element");
    add_in(grade_cmd);
    CLI::App* dims_cmd = app.add_subcommand("dims", "Roby basis dimensions");
    dims_cmd->add_option("--n", n)->required();
    dims_cmd->add_option("--k", k_range, "degree or range like 0..4")->required();
    CLI::App* basis_cmd = app.add_subcommand("basis", "rise-free words of one degree");
    basis_cmd->add_option("--n", n)->required();
    basis_cmd->add_option("--k", k_int)->required();
    CLI::App* nilp_cmd = app.add_subcommand("nilpotency", "smallest vanishing power");
    add_in(nilp_cmd);
    nilp_cmd->add_option("--cap", cap)->required();

    CLI::App* jacobi_cmd = app.add_subcommand("jacobi", "verify the order-3 axioms");
    add_in(jacobi_cmd);
    jacobi_cmd->add_option("--random-mutations", mutations, "also check that N random single-constant mutations fail");
    jacobi_cmd->add_option("--seed", seed, "seed for randomized mutations");
    CLI::App* build_cmd = app.add_subcommand("build", "construct a built-in algebra");
    build_cmd->add_option("--kind", kind, "gl | gl-el | poincare")->required();
    build_cmd->add_option("--m", m_csv, "m1,m2,m3 for the gl kinds");
    build_cmd->add_option("--d", d, "dimension for poincare");
    CLI::App* rep_cmd = app.add_subcommand("rep-check", "verify a matrix representation; input {algebra, rep}");
    add_in(rep_cmd);
    CLI::App* aut_cmd = app.add_subcommand("grade-aut", "apply the grading automorphism; input {algebra, element}");
    add_in(aut_cmd);

    CLI::App* unorm_cmd = app.add_subcommand("u-normalize", "PBW normal form; input {algebra, word}");
    add_in(unorm_cmd);
    CLI::App* umul_cmd = app.add_subcommand("u-mul", "product in U(g); input {algebra, a, b}");
    add_in(umul_cmd);
    CLI::App* coprod_cmd = app.add_subcommand("coproduct", "graded coproduct; input {algebra, element}");
    add_in(coprod_cmd);
    CLI::App* antipode_cmd = app.add_subcommand("antipode", "antipode; input {algebra, element}");
    add_in(antipode_cmd);
    CLI::App* counit_cmd = app.add_subcommand("counit", "counit; input {algebra, element}");
    add_in(counit_cmd);
    CLI::App* bracket_cmd = app.add_subcommand("bracket-coproduct", "check {ΔY,ΔY,ΔY} = Δ{Y,Y,Y}; input {algebra}");
    add_in(bracket_cmd);
    bracket_cmd->add_flag("--ungraded", ungraded, "drop the q-signs (to exhibit failure)");
    CLI::App* exp_cmd = app.add_subcommand("exp", "truncated exponential + group-like report; input {algebra, element}");
    add_in(exp_cmd);
    exp_cmd->add_option("--cap", cap)->required();
    CLI::App* dual_cmd = app.add_subcommand("dual-mul", "product in the graded dual; input {a, b}");
    add_in(dual_cmd);
    dual_cmd->add_option("--n0", n0)->required();
    dual_cmd->add_option("--n1", n1)->required();
    dual_cmd->add_option("--cap", cap)->required();
    CLI::App* theta_cmd = app.add_subcommand("derive-theta", "derive the 3-exterior relations in the dual");
    theta_cmd->add_option("--n1", n1)->required();
    theta_cmd->add_option("--cap", cap, "defaults to 3");

    CLI::App* invert_cmd = app.add_subcommand("invert", "order-by-order Lambda_0 inverse; input {k, p, entries}");
    add_in(invert_cmd);
    invert_cmd->add_option("--cap", cap)->required();
    CLI::App* matmul_cmd = app.add_subcommand("mat-mul", "graded matrix product; input {a, b}");
    add_in(matmul_cmd);
    CLI::App* blockinv_cmd = app.add_subcommand("block-invert", "blockwise inverse; input graded matrix");
    add_in(blockinv_cmd);
    blockinv_cmd->add_option("--cap", cap, "defaults to 3 * p * max(m_i)");
    CLI::App* glf_cmd = app.add_subcommand("glf-check", "GL_f membership certificate; input graded matrix");
    add_in(glf_cmd);
    glf_cmd->add_option("--cap", cap, "defaults to 3 * p * max(m_i)");
    CLI::App* expnil_cmd = app.add_subcommand("exp-nilpotent", "exact nilpotent exponential; input graded matrix");
    add_in(expnil_cmd);
    expnil_cmd->add_option("--cap", cap)->required();
    CLI::App* group_cmd = app.add_subcommand("group-element", "G0 * prod exp(B_k); input {g0, bs}");
    add_in(group_cmd);
    group_cmd->add_option("--cap", cap)->required();
    CLI::App* tangent_cmd = app.add_subcommand("tangent", "theta -> 0 limit report; input graded matrix");
    add_in(tangent_cmd);

    try {
        // CLI11 wants argv in reverse order for the vector overload.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help() << std::flush;
            return kExitOk;
        }
        err << io::json{{"error", {{"code", "parse"}, {"message", e.what()}}}}.dump(2) << "\n";
        return kExitParse;
    }

    auto emit = [&](const io::json& doc) {
        if (format != "json") throw ParseError("unsupported format '" + format + "'");
        out << doc.dump(2) << "\n";
    };

    try {
        if (cyc_add->parsed())
            emit({{"result", (Cyclotomic3::parse(a_str) + Cyclotomic3::parse(b_str)).str()}});
        else if (cyc_mul->parsed())
            emit({{"result", (Cyclotomic3::parse(a_str) * Cyclotomic3::parse(b_str)).str()}});
        else if (cyc_inv->parsed())
            emit({{"result", Cyclotomic3::parse(a_str).inverse().str()}});
        else if (qpow_cmd->parsed())
            emit({{"result", qpow(qk).str()}});
        else if (has_rise_cmd->parsed()) {
            auto pos = has_rise(detail::parse_word_flag(word_csv));
            emit({{"position", pos ? io::json(*pos) : io::json(nullptr)}});
        } else if (reduce_cmd->parsed()) {
            emit(io::to_json(reduce(n, detail::parse_word_flag(word_csv))));
        } else if (mul_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            emit(io::to_json(lam_mul(io::roby_from_json(doc.at("a")), io::roby_from_json(doc.at("b")))));
        } else if (grade_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            RobyElement e = io::roby_from_json(doc);
            emit({{"grades", e.grades()}});
        } else if (dims_cmd->parsed()) {
            auto [lo, hi] = detail::parse_range(k_range);
            if (lo < 0 || hi < lo) throw PreconditionError("dims: bad degree range");
            std::vector<io::json> dims;
            for (int kk = lo; kk <= hi; ++kk) {
                BigInt dim = roby_dim(n, kk);
                dims.push_back(io::json::parse(dim.str()));
            }
            emit({{"n", n}, {"k", {lo, hi}}, {"dims", dims}});
        } else if (basis_cmd->parsed()) {
            emit({{"n", n}, {"k", k_int}, {"words", enumerate_basis(n, k_int)}});
        } else if (nilp_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            auto order = nilpotency_order(io::roby_from_json(doc), cap);
            emit({{"order", order ? io::json(*order) : io::json(nullptr)}, {"cap", cap}});
        } else if (jacobi_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            auto algebra = detail::algebra_from_doc(doc.is_object() && doc.contains("algebra")
                                                        ? doc
                                                        : io::json{{"algebra", doc}});
            io::json result = io::to_json(check_axioms(*algebra));
            if (mutations > 0) {
                std::mt19937_64 rng(seed);
                auto slots = algebra->nonzero_constants();
                if (slots.empty()) throw PreconditionError("jacobi: no nonzero constants to mutate");
                io::json runs = io::json::array();
                std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
                for (int t = 0; t < mutations; ++t) {
                    LieOrder3Algebra mutated = *algebra;
                    const auto& slot = slots[pick(rng)];
                    mutated.set_constant(slot, slot.value * Cyclotomic3(2));
                    CheckReport rep = check_axioms(mutated);
                    io::json entry = {{"table", std::string(1, slot.table)},
                                      {"index", slot.index},
                                      {"detected", !rep.all_pass()}};
                    for (const auto& item : rep.items)
                        if (!item.pass) {
                            entry["witness"] = item.axiom + ": " + item.witness;
                            break;
                        }
                    runs.push_back(entry);
                }
                result["mutations"] = runs;
            }
            emit(result);
        } else if (build_cmd->parsed()) {
            if (kind == "gl" || kind == "gl-el") {
                Word m = detail::parse_word_flag(m_csv);
                if (m.size() != 3) throw ParseError("build: need --m m1,m2,m3");
                auto built = kind == "gl" ? build_gl(m[0], m[1], m[2]) : build_gl_el(m[0], m[1], m[2]);
                emit({{"algebra", io::to_json(built.first)}, {"rep", io::to_json(built.second)}});
            } else if (kind == "poincare") {
                emit({{"algebra", io::to_json(build_poincare_cubic(d))}});
            } else {
                throw ParseError("build: unknown kind '" + kind + "'");
            }
        } else if (rep_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            auto algebra = detail::algebra_from_doc(doc);
            MatrixRep rep;
            if (doc.contains("rep")) {
                rep = io::rep_from_json(doc.at("rep"));
            } else if (doc.at("algebra").contains("builtin")) {
                const auto& a = doc.at("algebra");
                const auto& m = a.at("m");
                rep = (a.at("builtin") == "gl" ? build_gl(m[0].get<int>(), m[1].get<int>(), m[2].get<int>())
                                               : build_gl_el(m[0].get<int>(), m[1].get<int>(), m[2].get<int>()))
                          .second;
            } else {
                throw ParseError("rep-check: need a 'rep' field or a builtin gl algebra");
            }
            emit(io::to_json(check_representation(*algebra, rep)));
        } else if (aut_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            auto algebra = detail::algebra_from_doc(doc);
            GradedElement e = io::graded_element_from_json(doc.at("element"));
            emit(io::to_json(apply_grade_automorphism(*algebra, e)));
        } else if (unorm_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            auto algebra = detail::algebra_from_doc(doc);
            emit(io::to_json(u_normalize(algebra, detail::gen_word_from_json(doc.at("word")))));
        } else if (umul_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            auto algebra = detail::algebra_from_doc(doc);
            UElement a = io::uelement_from_json(doc.at("a"), algebra);
            UElement b = io::uelement_from_json(doc.at("b"), algebra);
            emit(io::to_json(u_mul(a, b)));
        } else if (coprod_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            auto algebra = detail::algebra_from_doc(doc);
            emit(io::to_json(coproduct(io::uelement_from_json(doc.at("element"), algebra))));
        } else if (antipode_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            auto algebra = detail::algebra_from_doc(doc);
            emit(io::to_json(antipode(io::uelement_from_json(doc.at("element"), algebra))));
        } else if (counit_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            auto algebra = detail::algebra_from_doc(doc);
            emit({{"value", counit(io::uelement_from_json(doc.at("element"), algebra)).str()}});
        } else if (bracket_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            auto algebra = detail::algebra_from_doc(doc.is_object() && doc.contains("algebra")
                                                        ? doc
                                                        : io::json{{"algebra", doc}});
            emit(io::to_json(check_bracket_coproduct(algebra, !ungraded)));
        } else if (exp_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            auto algebra = detail::algebra_from_doc(doc);
            UElement u = io::uelement_from_json(doc.at("element"), algebra);
            emit({{"exp", io::to_json(truncated_exp(u, cap))},
                  {"group_like", io::to_json(group_like_report(u, cap))}});
        } else if (dual_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            DualElement a = io::dual_element_from_json(doc.at("a"), n0);
            DualElement b = io::dual_element_from_json(doc.at("b"), n0);
            emit(io::to_json(dual_multiply(n0, n1, a, b, cap)));
        } else if (theta_cmd->parsed()) {
            emit(io::to_json(derive_theta_relations(n1, cap < 0 ? 3 : cap)));
        } else if (invert_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            emit(io::to_json(invert_lambda0(io::lambda0_from_json(doc), cap)));
        } else if (matmul_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            GradedMatrix a = io::graded_matrix_from_json(doc.at("a"));
            GradedMatrix b = io::graded_matrix_from_json(doc.at("b"));
            emit(io::to_json(mat_mul(a, b)));
        } else if (blockinv_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            GradedMatrix m = io::graded_matrix_from_json(doc);
            emit(io::to_json(invert_block(m, cap < 0 ? detail::default_matrix_cap(m) : cap)));
        } else if (glf_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            GradedMatrix m = io::graded_matrix_from_json(doc);
            emit(io::to_json(is_glf_member(m, cap < 0 ? detail::default_matrix_cap(m) : cap)));
        } else if (expnil_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            emit(io::to_json(exp_nilpotent(io::graded_matrix_from_json(doc), cap)));
        } else if (group_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            GradedMatrix g0 = io::graded_matrix_from_json(doc.at("g0"));
            std::vector<GradedMatrix> bs;
            if (doc.contains("bs"))
                for (const auto& b : doc.at("bs")) bs.push_back(io::graded_matrix_from_json(b));
            emit(io::to_json(group_element(g0, bs, cap)));
        } else if (tangent_cmd->parsed()) {
            io::json doc = detail::read_input(input_path, in);
            emit(io::to_json(infinitesimal_limit(io::graded_matrix_from_json(doc))));
        }
        return kExitOk;
    } catch (const ParseError& e) {
        err << io::json{{"error", {{"code", "parse"}, {"message", e.what()}}}}.dump(2) << "\n";
        return kExitParse;
    } catch (const io::json::exception& e) {
        err << io::json{{"error", {{"code", "parse"}, {"message", e.what()}}}}.dump(2) << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        err << io::json{{"error", {{"code", "precondition"}, {"message", e.what()}}}}.dump(2) << "\n";
        return kExitPrecondition;
    } catch (const NotInvertibleError& e) {
        err << io::json{{"error", {{"code", "not-invertible"}, {"message", e.what()}}}}.dump(2) << "\n";
        return kExitNotInvertible;
    } catch (const CapExceededError& e) {
        err << io::json{{"error", {{"code", "cap-exceeded"}, {"message", e.what()}}}}.dump(2) << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        err << io::json{{"error", {{"code", "internal"}, {"message", e.what()}}}}.dump(2) << "\n";
        return kExitFailure;
    }
}

}  // namespace ternary::cli
