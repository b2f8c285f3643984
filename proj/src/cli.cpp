#include "pencilgit/cli.hpp"

#include "pencilgit/characters.hpp"
#include "pencilgit/graded.hpp"
#include "pencilgit/parse.hpp"
#include "pencilgit/verify.hpp"
#include "pencilgit/wall.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>

namespace pencilgit {

namespace {

bool is_usage_error(const std::string& code) {
    static const std::set<std::string> usage = {
        "BadFieldSpec", "BadPencilSyntax", "BadElementSyntax", "BadExpression",
        "NotPrime",     "CharTwoOrThree",  "SquareDiscriminant", "UnknownName",
        "BadPresentation", "BadDegree"};
    return usage.count(code) > 0;
}

Json fel_json(const Fel& x) { return Json(x.str()); }

Json point_json(const ProjPoint& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ":";
        s += p[i].str();
    }
    return Json(s);
}

void emit(const Report& report, bool json, const std::string& out_path, std::ostream& out) {
    std::string payload = json ? report.to_json().dump(2) + "\n" : report.text();
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << payload;
    }
    out << payload;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for pencils of binary cubics under PGL2", "pencil-git"};
    app.require_subcommand(1);

    std::string field_spec = "fp:13";
    bool json = false;
    std::uint64_t seed = 0;
    int degree_bound = 8;
    std::string out_path;
    app.add_option("--field", field_spec, "field spec: q | fp:<p> | q(sqrt:<d>) | fp:<p>(sqrt:<d>)");
    app.add_flag("--json", json, "emit a machine-readable report");
    app.add_option("--seed", seed, "seed for the sampled checks");
    app.add_option("--degree-bound", degree_bound, "graded-piece working bound");
    app.add_option("--out", out_path, "also write the report to a file");

    std::string pencil_text, rho_text, group_name = "D8", corrupt;
    std::string chow_op, chow_name, chow_arg;

    auto* c_inv = app.add_subcommand("invariants", "I', J, the Newstead point and stability");
    c_inv->add_option("--pencil", pencil_text)->required();
    auto* c_cls = app.add_subcommand("classify", "orbit label of a pencil");
    c_cls->add_option("--pencil", pencil_text)->required();
    auto* c_wf = app.add_subcommand("wall-form", "a wall normal form A . p_rho = p");
    c_wf->add_option("--pencil", pencil_text)->required();
    auto* c_st = app.add_subcommand("stabilizer", "brute-force stabilizer of a pencil");
    c_st->add_option("--pencil", pencil_text)->required();
    auto* c_fib = app.add_subcommand("fiber", "the fiber of the wall covering over a stable pencil");
    c_fib->add_option("--pencil", pencil_text)->required();
    auto* c_orb = app.add_subcommand("orbit", "S4-orbit of a wall parameter and its lambda-shadow");
    c_orb->add_option("--rho", rho_text)->required();
    auto* c_chow = app.add_subcommand("chow", "graded rings: piece <NAME> <d> | inideal <NAME> <expr> | text <NAME>");
    c_chow->add_option("op", chow_op)->required();
    c_chow->add_option("name", chow_name)->required();
    c_chow->add_option("arg", chow_arg);
    auto* c_chr = app.add_subcommand("chars", "character tables and the restriction decompositions");
    c_chr->add_option("--group", group_name, "S4 | A4 | D8 | D4 | C3");
    auto* c_all = app.add_subcommand("verify-all", "replay every verified claim");
    c_all->add_option("--corrupt-builtin", corrupt)->group(""); // test hook, hidden

    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Report report;
    report.field = field_spec;
    try {
        FieldPtr k = Field::parse(field_spec);

        if (*c_inv) {
            report.command = "invariants";
            Pencil p = parse_pencil(k, pencil_text);
            PencilInvariants inv = pencil_invariants(p);
            CheckRecord rec{"invariants", "I' = 3 p03 - p12; J of the Wronskian quartic", "pass",
                            Json::object()};
            rec.witness["Iprime"] = fel_json(inv.Iprime);
            rec.witness["J"] = fel_json(inv.J);
            Stability s = classify_stability(p);
            rec.witness["stability"] = stability_name(s);
            if (s != Stability::Unstable) {
                ProjPoint nu = newstead_point(p);
                rec.witness["newstead"] = point_json(nu);
                if (!k->finite() && !k->is_extension()) {
                    auto prim = nu.primitive_integer();
                    std::string ps;
                    for (std::size_t i = 0; i < prim.size(); ++i) {
                        if (i) ps += ":";
                        ps += rat_str(prim[i]);
                    }
                    rec.witness["newstead_primitive"] = ps;
                }
            }
            report.checks.push_back(std::move(rec));
        } else if (*c_cls) {
            report.command = "classify";
            Pencil p = parse_pencil(k, pencil_text);
            OrbitLabel label = classify_orbit(p);
            CheckRecord rec{"classify", "orbit atlas of the non-stable locus plus the stable family",
                            "pass", Json::object()};
            rec.witness["label"] = label.str();
            report.checks.push_back(std::move(rec));
            if (!json) {
                out << label.str() << "\n";
                if (!out_path.empty()) {
                    std::ofstream f(out_path);
                    f << report.to_json().dump(2) << "\n";
                }
                return 0;
            }
        } else if (*c_wf) {
            report.command = "wall-form";
            Pencil p = parse_pencil(k, pencil_text);
            auto [A, w] = wall_normal_form(p);
            CheckRecord rec{"wall-form", "every stable pencil is A . p_rho with rho outside F_Wall",
                            "pass", Json::object()};
            rec.witness["rho"] = w.str();
            rec.witness["matrix"] = A.str();
            rec.witness["verifies"] = act(A, wall_pencil(w)) == p;
            report.checks.push_back(std::move(rec));
        } else if (*c_st) {
            report.command = "stabilizer";
            Pencil p = parse_pencil(k, pencil_text);
            FiniteSubgroup st = stabilizer(p);
            CheckRecord rec{"stabilizer", "brute-force scan of PGL2 over the finite field", "pass",
                            Json::object()};
            rec.witness["order"] = st.order();
            rec.witness["type"] = st.type_guess();
            Json prof = Json::array();
            for (int o : st.order_profile()) prof.push_back(o);
            rec.witness["order_profile"] = prof;
            report.checks.push_back(std::move(rec));
        } else if (*c_fib) {
            report.command = "fiber";
            Pencil p = parse_pencil(k, pencil_text);
            auto fib = phi_fiber(p);
            CheckRecord rec{"fiber", "|Phi^-1(p)| = 24 over the stable locus", "pass", Json::object()};
            rec.witness["size"] = fib.size();
            std::map<std::string, int> by_rho;
            for (const auto& [A, w] : fib) by_rho[w.str()]++;
            Json j = Json::object();
            for (const auto& [r, n] : by_rho) j[r] = n;
            rec.witness["by_rho"] = j;
            report.checks.push_back(std::move(rec));
        } else if (*c_orb) {
            report.command = "orbit";
            WallParam w = parse_wall_param(k, rho_text);
            CheckRecord rec{"orbit", "S4-orbit {rho, -rho, +-(rho+3)/(rho-1), +-(rho-3)/(rho+1)}",
                            "pass", Json::object()};
            Json orb = Json::array();
            for (const auto& x : s4_orbit_rho(w)) orb.push_back(x.str());
            rec.witness["s4_orbit"] = orb;
            rec.witness["in_fwall"] = w.in_fwall();
            if (!w.is_infinity() && !w.value().is_zero()) {
                rec.witness["lambda"] = point_json(anharmonic_lambda(w));
                Json an = Json::array();
                for (const auto& x : anharmonic_orbit(anharmonic_lambda(w))) an.push_back(point_json(x));
                rec.witness["anharmonic_orbit"] = an;
            }
            report.checks.push_back(std::move(rec));
        } else if (*c_chow) {
            report.command = "chow";
            Presentation P = builtin_presentation(chow_name);
            P.set_default_bound(degree_bound);
            CheckRecord rec{"chow-" + chow_op, "graded pieces by Smith normal form", "pass",
                            Json::object()};
            if (chow_op == "piece") {
                require(!chow_arg.empty(), "BadDegree", "chow piece needs a degree");
                int d = std::stoi(chow_arg);
                GradedPiece piece = graded_piece(P, d, degree_bound);
                rec.witness["presentation"] = chow_name;
                rec.witness["degree"] = d;
                rec.witness["group"] = piece.group.str();
                if (!json) {
                    out << piece.group.str() << "\n";
                    if (!out_path.empty()) {
                        std::ofstream f(out_path);
                        f << piece.group.str() << "\n";
                    }
                    return 0;
                }
            } else if (chow_op == "inideal") {
                require(!chow_arg.empty(), "BadExpression", "chow inideal needs an expression");
                bool member = in_ideal(P, chow_arg, degree_bound);
                rec.witness["presentation"] = chow_name;
                rec.witness["expression"] = chow_arg;
                rec.witness["in_ideal"] = member;
            } else if (chow_op == "text") {
                rec.witness["presentation"] = chow_name;
                rec.witness["text"] = P.text();
            } else {
                fail("UnknownName", "chow op must be piece, inideal or text");
            }
            report.checks.push_back(std::move(rec));
        } else if (*c_chr) {
            report.command = "chars";
            FieldPtr km = k->finite() ? k : Field::quadratic(Field::rationals(), Rat(-1));
            GroupData G = GroupData::builtin(group_name, km);
            CheckRecord rec{"chars", "orthogonality of the exact character table", "pass",
                            Json::object()};
            Json classes = Json::array();
            for (const auto& cl : G.classes())
                classes.push_back(Json{{"label", cl.label},
                                       {"size", cl.size},
                                       {"order", cl.element_order},
                                       {"rep", cl.rep.str()}});
            rec.witness["classes"] = classes;
            Json table = Json::object();
            for (std::size_t i = 0; i < G.table().size(); ++i) {
                Json row = Json::array();
                for (const auto& v : G.table()[i]) row.push_back(v.str());
                table[G.irrep_names()[i]] = row;
            }
            rec.witness["table"] = table;
            if (group_name == "S4" || group_name == "D8") {
                Json dec = Json::array();
                for (const auto& m : decompose(v_character(G), G)) dec.push_back(m.str());
                rec.witness["V_multiplicities"] = dec;
                Json adec = Json::array();
                for (const auto& m : decompose(adjoint_character(G), G)) adec.push_back(m.str());
                rec.witness["sl2_multiplicities"] = adec;
            }
            report.checks.push_back(std::move(rec));
        } else if (*c_all) {
            VerifyOptions opt;
            opt.field = k;
            opt.seed = seed;
            opt.degree_bound = degree_bound;
            opt.corrupt_builtin = corrupt;
            report = verify_all(opt);
        }
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return is_usage_error(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    emit(report, json, out_path, out);
    return report.passed() ? 0 : 1;
}

} // namespace pencilgit
