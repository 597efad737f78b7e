// genera: exact computations with graph amalgamation classes.
//
// Exit codes: 0 success or a true predicate, 1 a false or distinguished
// predicate, 2 input error, 3 resource cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "genera/genera.hpp"

namespace {

using namespace genera;

bool g_porcelain = false;

void emit(const std::string& key, const std::string& value) {
    if (g_porcelain)
        std::cout << key << "=" << value << "\n";
    else
        std::cout << key << " = " << value << "\n";
}

int bool_exit(bool value) { return value ? 0 : 1; }

ClassSpec spec_from(const std::string& spec_text, const std::string& alpha_text, bool strict_default) {
    if (!spec_text.empty()) return ClassSpec::parse(spec_text);
    if (!alpha_text.empty()) {
        Rational a = Rational::parse(alpha_text);
        return strict_default ? ClassSpec::k_alpha_plus(a) : ClassSpec::k_alpha(a);
    }
    throw InputError("need --spec or --alpha");
}

std::vector<std::pair<int, int>> parse_glue(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    if (text.empty() || text == "-") return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw InputError("glue entries look like bvertex:cvertex, got '" + item + "'");
        out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    }
    return out;
}

std::string hex_prefix(const std::string& bytes, std::size_t max_bytes = 12) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::size_t i = 0; i < bytes.size() && i < max_bytes; ++i) {
        unsigned char c = static_cast<unsigned char>(bytes[i]);
        out += digits[c >> 4];
        out += digits[c & 15];
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"genera: predimension calculus, closures, amalgamation, and support systems on finite graphs"};
    app.require_subcommand(1);
    app.add_flag("--porcelain", g_porcelain, "line-oriented key=value output");
    int max_bits = 0;
    app.add_option("--max-bits", max_bits, "override the subset-search cap (bits)");

    // ---- shared option storage ----
    std::string ambient_path, b_path, c_path, out_path, spec_text, alpha_text, r_text;
    std::string a_list, b_list, set_list, model_list, z_list, u_list, glue_text, tuple1, tuple2, kind_text;
    int n_bound = 3, depth = 0, max_ext = 6, ext_cap = 5, stages = 4, max_base = 2, gen_max_ext = 2;
    int bound = 1, verify_bound = 0, max_vertices_opt = 48;
    std::uint64_t seed = 0;
    bool have_seed = false;

    // delta
    auto* cmd_delta = app.add_subcommand("delta", "predimension of a structure or subset");
    cmd_delta->add_option("--ambient", ambient_path)->required();
    cmd_delta->add_option("--set", set_list);
    cmd_delta->add_option("--alpha", alpha_text);
    cmd_delta->add_option("--spec", spec_text);
    cmd_delta->add_option("--a", a_list, "base for a relative predimension");
    cmd_delta->add_option("--b", b_list, "set for a relative predimension (with --a)");

    // strong
    auto* cmd_strong = app.add_subcommand("strong", "is A strong in B inside the ambient");
    cmd_strong->add_option("--ambient", ambient_path)->required();
    cmd_strong->add_option("--a", a_list)->required();
    cmd_strong->add_option("--b", b_list)->required();
    cmd_strong->add_option("--spec", spec_text);
    cmd_strong->add_option("--alpha", alpha_text);

    // member
    auto* cmd_member = app.add_subcommand("member", "class membership of a structure");
    cmd_member->add_option("--ambient", ambient_path)->required();
    cmd_member->add_option("--spec", spec_text)->required();
    cmd_member->add_option("--ext-cap", ext_cap);

    // gamma
    auto* cmd_gamma = app.add_subcommand("gamma", "granularity of a rational weight");
    cmd_gamma->add_option("--r", r_text)->required();
    cmd_gamma->add_option("--verify-bound", verify_bound, "exhaustively verify up to this size");

    // closure
    auto* cmd_closure = app.add_subcommand("closure", "intrinsic closure of a set in the ambient");
    cmd_closure->add_option("--ambient", ambient_path)->required();
    cmd_closure->add_option("--set", set_list)->required();
    cmd_closure->add_option("--spec", spec_text)->required();

    // minpairs
    auto* cmd_minpairs = app.add_subcommand("minpairs", "minimal pairs based inside a set");
    cmd_minpairs->add_option("--ambient", ambient_path)->required();
    cmd_minpairs->add_option("--set", set_list)->required();
    cmd_minpairs->add_option("--spec", spec_text)->required();
    cmd_minpairs->add_option("--max-ext", max_ext);

    // ecl
    auto* cmd_ecl = app.add_subcommand("ecl", "external closure of X relative to M");
    cmd_ecl->add_option("--ambient", ambient_path)->required();
    cmd_ecl->add_option("--model", model_list)->required();
    cmd_ecl->add_option("--set", set_list)->required();
    cmd_ecl->add_option("--spec", spec_text)->required();
    cmd_ecl->add_option("--max-ext", max_ext);

    // zeroext
    auto* cmd_zeroext = app.add_subcommand("zeroext", "proper 0-extension test with witness chain");
    cmd_zeroext->add_option("--ambient", ambient_path)->required();
    cmd_zeroext->add_option("--set", set_list, "the base X")->required();
    cmd_zeroext->add_option("--z", z_list, "the extension Z")->required();
    cmd_zeroext->add_option("--r", r_text);
    cmd_zeroext->add_option("--spec", spec_text);

    // amalgam
    auto* cmd_amalgam = app.add_subcommand("amalgam", "free amalgam of two structures over a glue map");
    cmd_amalgam->add_option("--b", b_path)->required();
    cmd_amalgam->add_option("--c", c_path)->required();
    cmd_amalgam->add_option("--glue", glue_text, "pairs b:c, e.g. 0:0,1:2");
    cmd_amalgam->add_option("--out", out_path);

    // generic
    auto* cmd_generic = app.add_subcommand("generic", "finite generic stages");
    cmd_generic->add_option("--spec", spec_text)->required();
    cmd_generic->add_option("--stages", stages);
    cmd_generic->add_option("--max-base", max_base);
    cmd_generic->add_option("--max-ext", gen_max_ext);
    cmd_generic->add_option("--out", out_path)->required();
    cmd_generic->add_option("--seed", seed)->each([&](const std::string&) { have_seed = true; });
    cmd_generic->add_option("--max-vertices", max_vertices_opt);

    // arith-witness
    std::string config_path;
    auto* cmd_arith = app.add_subcommand("arith-witness", "check the arithmetic-witness hypotheses");
    cmd_arith->add_option("config", config_path, "JSON configuration")->required();

    // admissible
    auto* cmd_adm = app.add_subcommand("admissible", "admissibility in the anti-collapse class");
    cmd_adm->add_option("--r", r_text)->required();
    cmd_adm->add_option("--n", n_bound)->required();
    cmd_adm->add_option("file", ambient_path)->required();
    cmd_adm->add_option("--ext-cap", ext_cap);

    // nu
    auto* cmd_nu = app.add_subcommand("nu", "the disjoint-copy bound of a structure");
    cmd_nu->add_option("--r", r_text)->required();
    cmd_nu->add_option("file", ambient_path)->required();

    // star-strong
    auto* cmd_star = app.add_subcommand("star-strong", "the starred strong-extension predicate");
    cmd_star->add_option("--ambient", ambient_path)->required();
    cmd_star->add_option("--a", a_list)->required();
    cmd_star->add_option("--b", b_list)->required();
    cmd_star->add_option("--r", r_text)->required();
    cmd_star->add_option("--n", n_bound);

    // bounded1
    auto* cmd_b1 = app.add_subcommand("bounded1", "disjoint proper 0-extension bound in an amalgam");
    cmd_b1->add_option("--b", b_path)->required();
    cmd_b1->add_option("--c", c_path)->required();
    cmd_b1->add_option("--glue", glue_text);
    cmd_b1->add_option("--u", u_list)->required();
    cmd_b1->add_option("--r", r_text)->required();
    cmd_b1->add_option("--n", n_bound);
    cmd_b1->add_option("--ext-cap", ext_cap);

    // supports verify
    auto* cmd_supports = app.add_subcommand("supports", "support systems over a model-like set");
    auto* cmd_sv = cmd_supports->add_subcommand("verify", "build a candidate system and verify it");
    cmd_sv->add_option("--ambient", ambient_path)->required();
    cmd_sv->add_option("--model", model_list)->required();
    cmd_sv->add_option("--spec", spec_text)->required();
    cmd_sv->add_option("--kind", kind_text)->default_val("singletons");
    cmd_sv->add_option("--bound", bound);
    cmd_sv->add_option("--max-ext", max_ext);

    // cltp
    auto* cmd_cltp = app.add_subcommand("cltp", "closure type of a tuple at a depth");
    cmd_cltp->add_option("--ambient", ambient_path)->required();
    cmd_cltp->add_option("--tuple", tuple1)->required();
    cmd_cltp->add_option("--depth", depth)->required();
    cmd_cltp->add_option("--spec", spec_text)->required();
    cmd_cltp->add_option("--max-ext", max_ext);

    // cltp-eq
    auto* cmd_cltpeq = app.add_subcommand("cltp-eq", "compare closure types of two tuples");
    cmd_cltpeq->add_option("--ambient", ambient_path)->required();
    cmd_cltpeq->add_option("--tuple1", tuple1)->required();
    cmd_cltpeq->add_option("--tuple2", tuple2)->required();
    cmd_cltpeq->add_option("--depth", depth)->required();
    cmd_cltpeq->add_option("--spec", spec_text)->required();
    cmd_cltpeq->add_option("--max-ext", max_ext);

    // fuzz
    FuzzConfig fuzz_cfg;
    bool list_suites = false;
    auto* cmd_fuzz = app.add_subcommand("fuzz", "run a property suite over seeded trials");
    cmd_fuzz->add_option("--suite", fuzz_cfg.suite);
    cmd_fuzz->add_option("--spec", spec_text);
    cmd_fuzz->add_option("--trials", fuzz_cfg.trials);
    cmd_fuzz->add_option("--max-vertices", fuzz_cfg.max_vertices);
    cmd_fuzz->add_option("--seed", fuzz_cfg.seed);
    cmd_fuzz->add_option("--only-trial", fuzz_cfg.only_trial);
    cmd_fuzz->add_option("--ext-cap", fuzz_cfg.ext_cap);
    cmd_fuzz->add_option("--u-cap", fuzz_cfg.u_cap);
    cmd_fuzz->add_flag("--list", list_suites, "list available suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (max_bits > 0) max_subset_bits() = max_bits;

        if (*cmd_delta) {
            Structure s = load_structure(ambient_path);
            Rational alpha = spec_from(spec_text, alpha_text.empty() ? "1" : alpha_text, true).alpha;
            if (!a_list.empty() || !b_list.empty()) {
                VertexSet a = parse_vertex_list(a_list, s);
                VertexSet b = parse_vertex_list(b_list, s);
                emit("delta_rel", delta_rel(s, b, a, alpha).str());
                emit("edge_boundary", std::to_string(edge_boundary(s, b, a)));
            } else {
                VertexSet v = set_list.empty() ? s.universe() : parse_vertex_list(set_list, s);
                emit("delta", delta(s, v, alpha).str());
            }
            return 0;
        }
        if (*cmd_strong) {
            Structure s = load_structure(ambient_path);
            ClassSpec spec = spec_from(spec_text, alpha_text, true);
            VertexSet a = parse_vertex_list(a_list, s);
            VertexSet b = parse_vertex_list(b_list, s);
            StrongResult res = is_strong(s, a, b, spec);
            emit("strong", res.strong ? "true" : "false");
            if (!res.strong) emit("witness", set_str(res.witness));
            return bool_exit(res.strong);
        }
        if (*cmd_member) {
            Structure s = load_structure(ambient_path);
            ClassSpec spec = ClassSpec::parse(spec_text);
            if (spec.is_star()) {
                auto rep = is_admissible(s, spec.params, ext_cap);
                std::cout << rep.str() << "\n";
                return bool_exit(rep.admissible);
            }
            bool ok = class_membership(s, spec);
            emit("member", ok ? "true" : "false");
            return bool_exit(ok);
        }
        if (*cmd_gamma) {
            Rational r = Rational::parse(r_text);
            Rational g = granularity(r);
            emit("gamma", g.str());
            if (verify_bound > 0) {
                auto rep = granularity_verify(r, verify_bound);
                emit("bounded", rep.all_bounded ? "true" : "false");
                emit("attained", rep.attained ? "true" : "false");
                emit("pairs_checked", std::to_string(rep.pairs_checked));
                return bool_exit(rep.all_bounded && rep.attained);
            }
            return 0;
        }
        if (*cmd_closure) {
            Structure s = load_structure(ambient_path);
            ClassSpec spec = ClassSpec::parse(spec_text);
            if (!class_membership(s, spec))
                throw InputError("ambient is not in the class; closure is undefined");
            VertexSet a = parse_vertex_list(set_list, s);
            emit("closure", set_str(closure_in(s, a, spec)));
            return 0;
        }
        if (*cmd_minpairs) {
            Structure s = load_structure(ambient_path);
            ClassSpec spec = ClassSpec::parse(spec_text);
            VertexSet a = parse_vertex_list(set_list, s);
            for (const MinimalPair& mp : enumerate_minimal_pairs(s, a, spec, max_ext))
                std::cout << "minpair base=" << set_str(mp.base) << " ext=" << set_str(mp.ext) << "\n";
            return 0;
        }
        if (*cmd_ecl) {
            Structure s = load_structure(ambient_path);
            ClassSpec spec = ClassSpec::parse(spec_text);
            VertexSet m = parse_vertex_list(model_list, s);
            VertexSet x = parse_vertex_list(set_list, s);
            emit("ecl", set_str(external_closure(s, m, x, spec, max_ext)));
            return 0;
        }
        if (*cmd_zeroext) {
            Structure s = load_structure(ambient_path);
            Rational r = r_text.empty() ? spec_from(spec_text, "", true).alpha : Rational::parse(r_text);
            VertexSet x = parse_vertex_list(set_list, s);
            VertexSet z = parse_vertex_list(z_list, s);
            bool proper = is_proper_zero_extension(s, x, z, r);
            emit("proper_zero_extension", proper ? "true" : "false");
            if (auto chain = zero_extension_chain(s, x, z, r)) {
                std::string line;
                for (VertexSet level : *chain) line += (line.empty() ? "" : " ") + set_str(level);
                emit("chain", line);
            }
            return bool_exit(proper);
        }
        if (*cmd_amalgam) {
            Structure b = load_structure(b_path);
            Structure c = load_structure(c_path);
            Amalgam am = free_amalgam(GluedTriple{b, c, parse_glue(glue_text)});
            std::string text = format_structure(am.d, "amalgam");
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << text;
            } else {
                std::cout << text;
            }
            return 0;
        }
        if (*cmd_generic) {
            ClassSpec spec = ClassSpec::parse(spec_text);
            std::optional<std::uint64_t> opt_seed;
            if (have_seed) opt_seed = seed;
            GenericBuildResult res =
                build_generic_stages(spec, stages, max_base, gen_max_ext, opt_seed, max_vertices_opt);
            std::filesystem::create_directories(out_path);
            std::ofstream log(out_path + "/provenance.log");
            for (const GenericStage& st : res.stages) {
                std::ofstream f(out_path + "/stage" + std::to_string(st.stage_index) + ".txt");
                f << format_structure(st.structure, "stage" + std::to_string(st.stage_index));
                for (const AttachRecord& rec : st.provenance)
                    log << "stage=" << rec.stage << " base=" << set_str(rec.base)
                        << " ext=" << hex_prefix(rec.ext_canon) << " attached=" << [&] {
                               VertexSet s2 = 0;
                               for (int v : rec.attached) s2 |= bit(v);
                               return set_str(s2);
                           }() << "\n";
                emit("stage" + std::to_string(st.stage_index),
                     std::to_string(st.structure.size()) + " vertices, " +
                         std::to_string(st.structure.edge_count()) + " edges");
            }
            if (!res.complete) {
                emit("incomplete", res.note);
                return 3;
            }
            return 0;
        }
        if (*cmd_arith) {
            std::ifstream in(config_path);
            if (!in) throw InputError("cannot open config '" + config_path + "'");
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw InputError(std::string("bad JSON config: ") + e.what());
            }
            auto parse_block = [&](const std::string& key) {
                if (!j.contains(key)) throw InputError("config needs '" + key + "'");
                std::istringstream ss(j[key].get<std::string>());
                auto all = parse_structures(ss);
                if (all.empty()) throw InputError("config '" + key + "' holds no structure");
                return all.front().structure;
            };
            ArithWitnessConfig cfg;
            cfg.spec = ClassSpec::parse(j.value("spec", std::string("kplus:1/2")));
            cfg.b = parse_block("b");
            cfg.x = parse_block("x");
            auto mask_of = [&](const std::string& key, const Structure& s) {
                VertexSet out = 0;
                for (int v : j.value(key, std::vector<int>{})) {
                    s.check_vertex(v);
                    out |= bit(v);
                }
                return out;
            };
            cfg.a_in_b = mask_of("a", cfg.b);
            cfg.u_in_b = mask_of("u", cfg.b);
            cfg.v_in_u = mask_of("v", cfg.b);
            cfg.u_image = j.value("u_image", std::vector<int>{});
            cfg.uprime_image = j.value("uprime_image", std::vector<int>{});
            cfg.n_max = j.value("n_max", 0);
            ArithWitnessOutcome out = check_arithmetic_witness(cfg);
            emit("witness", out.ok ? "true" : "false");
            if (!out.ok) {
                emit("failed_clause", std::to_string(out.failed_clause));
                emit("detail", out.detail);
            }
            return bool_exit(out.ok);
        }
        if (*cmd_adm) {
            Structure s = load_structure(ambient_path);
            AntiCollapseParams params(Rational::parse(r_text), n_bound);
            auto rep = is_admissible(s, params, ext_cap);
            std::cout << rep.str() << "\n";
            return bool_exit(rep.admissible);
        }
        if (*cmd_nu) {
            Structure s = load_structure(ambient_path);
            AntiCollapseParams params(Rational::parse(r_text), 2);
            emit("nu", std::to_string(nu(s, params)));
            return 0;
        }
        if (*cmd_star) {
            Structure s = load_structure(ambient_path);
            ClassSpec spec = ClassSpec::anti_collapse(Rational::parse(r_text), n_bound);
            VertexSet a = parse_vertex_list(a_list, s);
            VertexSet b = parse_vertex_list(b_list, s);
            StrongResult res = is_strong(s, a, b, spec);
            emit("star_strong", res.strong ? "true" : "false");
            if (!res.strong) emit("witness", set_str(res.witness));
            return bool_exit(res.strong);
        }
        if (*cmd_b1) {
            Structure b = load_structure(b_path);
            Structure c = load_structure(c_path);
            AntiCollapseParams params(Rational::parse(r_text), n_bound);
            Bounded1Instance inst = build_bounded1_instance(GluedTriple{b, c, parse_glue(glue_text)}, params);
            VertexSet u = parse_vertex_list(u_list, inst.amalgam.d);
            Bounded1Report rep = check_bounded1_instance(inst, u, params, ext_cap);
            std::cout << rep.str() << "\n";
            return bool_exit(!rep.applicable || rep.ok);
        }
        if (*cmd_sv) {
            Structure s = load_structure(ambient_path);
            ClassSpec spec = ClassSpec::parse(spec_text);
            VertexSet m = parse_vertex_list(model_list, s);
            SystemKind kind;
            if (kind_text == "singletons") kind = SystemKind::Singletons;
            else if (kind_text == "s-homogeneous") kind = SystemKind::SHomogeneous;
            else throw InputError("kind must be 'singletons' or 's-homogeneous'");
            SupportSystem sys = build_candidate_system(s, m, spec, kind, max_ext);
            SystemReport rep = verify_system(s, sys, spec, bound, max_ext);
            std::cout << rep.str();
            return bool_exit(rep.all());
        }
        if (*cmd_cltp) {
            Structure s = load_structure(ambient_path);
            ClassSpec spec = ClassSpec::parse(spec_text);
            auto tuple = parse_vertex_tuple(tuple1, s);
            ClosureTypeTree tree = cltp(s, tuple, depth, spec, max_ext);
            std::string rendered;
            render_tree(tree, "", rendered);
            std::cout << rendered;
            emit("encoding_bytes", std::to_string(tree.encoding.size()));
            return 0;
        }
        if (*cmd_cltpeq) {
            Structure s = load_structure(ambient_path);
            ClassSpec spec = ClassSpec::parse(spec_text);
            auto ta = parse_vertex_tuple(tuple1, s);
            auto tb = parse_vertex_tuple(tuple2, s);
            CltpComparison cmp = cltp_equal(s, ta, tb, depth, spec, max_ext);
            if (cmp.equal) {
                emit("equal", "true");
                return 0;
            }
            emit("equal", "false");
            emit("distinguishing_depth", std::to_string(cmp.distinguishing_depth));
            for (const std::string& step : cmp.certificate) emit("certificate", step);
            return 1;
        }
        if (*cmd_fuzz) {
            if (list_suites) {
                for (const std::string& name : suite_names()) std::cout << name << "\n";
                return 0;
            }
            if (fuzz_cfg.suite.empty()) throw InputError("fuzz needs --suite (or --list)");
            if (!spec_text.empty()) fuzz_cfg.spec = ClassSpec::parse(spec_text);
            FuzzReport rep = run_suite(fuzz_cfg);
            std::cout << rep.str(g_porcelain);
            return bool_exit(rep.ok());
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
