#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "wreathrep/gz_rep.hpp"
#include "wreathrep/johnson.hpp"
#include "wreathrep/json_io.hpp"

using namespace wreathrep;

namespace {

struct RunConfig {
    std::string group = "trivial";
    int n = 1;
    std::string mu_json;
    std::string form = "seminormal";
    std::string suite = "all";
    double tol = 1e-9;
    unsigned seed = 12345;
    std::string out;
};

void emit(const RunConfig& cfg, const json& j) {
    std::string text = j.dump(2);
    text += "\n";
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file " + cfg.out);
        f << text;
    }
}

RepForm parse_form(const std::string& s) {
    if (s == "seminormal") return RepForm::seminormal;
    if (s == "orthogonal") return RepForm::orthogonal;
    throw CLI::ValidationError("--form must be seminormal or orthogonal");
}

GYoungDiagram parse_mu(const RunConfig& cfg, const GroupTable& G) {
    if (cfg.mu_json.empty()) throw CLI::RequiredError("--mu");
    json j = json::parse(cfg.mu_json);
    return gdiagram_from_json(j, G.num_irreps());
}

// Builtin multiplicity-free action: a point for the trivial group, the
// regular action for abelian groups.
GAction builtin_action(const GroupTable& G) {
    if (G.order() == 1) return point_action(G);
    bool abelian = true;
    for (int a = 0; a < G.order() && abelian; ++a)
        for (int b = 0; b < G.order() && abelian; ++b)
            if (G.mul(a, b) != G.mul(b, a)) abelian = false;
    if (!abelian)
        throw std::invalid_argument(
            "no builtin multiplicity-free action for nonabelian groups");
    return regular_action(G);
}

CheckReport yjm_suite(const GroupTable& G, int n, double tol) {
    CheckReport rep;
    for (const auto& mu : enumerate_gdiagrams(n, G.num_irreps())) {
        GZRep r(mu, G, RepForm::seminormal);
        bool ok = true;
        double res = 0.0;
        for (int i = 1; i <= n; ++i) {
            if (r.kind() == ScalarKind::exact) {
                if (!(r.exact()->yjm_matrix(i) == r.exact()->yjm_expected_matrix(i))) ok = false;
            } else {
                double d = r.approx()->yjm_matrix(i).max_diff(r.approx()->yjm_expected_matrix(i));
                res = std::max(res, d);
                if (d > tol) ok = false;
            }
        }
        rep.add("yjm diagonal " + gdiagram_to_json(mu).dump(), ok, res);
    }
    return rep;
}

CheckReport character_suite(const GroupTable& G, int n, double tol) {
    CheckReport rep;
    Int sum = 0;
    for (const auto& mu : enumerate_gdiagrams(n, G.num_irreps())) {
        Int d = dimension(mu, G);
        sum += d * d;
    }
    rep.add("sum of squared dimensions", sum == wreath_order(G, n));

    auto ct = char_table(G, n);
    std::map<WreathType, Int> class_size;
    for (const auto& w : enumerate_wreath(G, n)) ++class_size[type_of(G, w)];
    rep.add("class count matches diagram count", ct.types.size() == ct.mus.size());
    double order = wreath_order(G, n).convert_to<double>();
    bool ortho = true;
    double res = 0.0;
    for (size_t a = 0; a < ct.mus.size(); ++a)
        for (size_t b = 0; b < ct.mus.size(); ++b) {
            std::complex<double> s = 0;
            for (size_t ty = 0; ty < ct.types.size(); ++ty)
                s += class_size.at(ct.types[ty]).convert_to<double>() * ct.values[a][ty] *
                     std::conj(ct.values[b][ty]);
            double want = a == b ? order : 0.0;
            res = std::max(res, std::abs(s - want));
            if (std::abs(s - want) > tol * order) ortho = false;
        }
    rep.add("character rows orthogonal", ortho, res);
    return rep;
}

CheckReport rep_suite(const GroupTable& G, int n, double tol, unsigned seed) {
    CheckReport rep;
    for (const auto& mu : enumerate_gdiagrams(n, G.num_irreps()))
        for (RepForm form : {RepForm::seminormal, RepForm::orthogonal}) {
            GZRep r(mu, G, form);
            auto chk = check_rep(r, tol, seed);
            rep.add("rep " + gdiagram_to_json(mu).dump() +
                        (form == RepForm::seminormal ? " seminormal" : " orthogonal"),
                    chk.all_pass(), 0.0, chk.first_failure());
        }
    return rep;
}

CheckReport johnson_suite(const GroupTable& G, int n) {
    CheckReport rep;
    rep.add("square identity", identity_bi(n));
    auto sjb = build_sjb(n);
    auto ev = verify_ev(sjb, n);
    rep.add("chain eigenvalues", ev.all_pass(), 0.0, ev.first_failure());
    auto scheme = generalized_scheme(builtin_action(G), n);
    for (const auto& it : scheme.items) rep.items.push_back(it);
    return rep;
}

int run(int argc, char** argv) {
    CLI::App app{"Irreducible representations of wreath products with symmetric groups"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--group", cfg.group, "group spec: trivial, cyclic:m, sym:3, or a JSON file");
    app.add_option("--n", cfg.n, "number of permuted slots")->check(CLI::PositiveNumber);
    app.add_option("--mu", cfg.mu_json, "diagram tuple as inline JSON, e.g. [[2,1],[]]");
    app.add_option("--form", cfg.form, "seminormal or orthogonal");
    app.add_option("--tol", cfg.tol, "tolerance for floating point checks")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for randomized checks");
    app.add_option("--out", cfg.out, "write output to this file instead of stdout");

    auto* c_tab = app.add_subcommand("tableaux", "list diagrams, tableaux and content vectors")->fallthrough();
    auto* c_rep = app.add_subcommand("rep", "export a representation")->fallthrough();
    auto* c_verify = app.add_subcommand("verify", "run verification suites")->fallthrough();
    c_verify->add_option("--suite", cfg.suite,
                         "relations, commutant, yjm, characters, reps, johnson, or all");
    auto* c_branch = app.add_subcommand("branch", "restriction to the next smaller wreath product")->fallthrough();
    auto* c_sjb = app.add_subcommand("sjb", "symmetric Jordan basis of the Boolean lattice")->fallthrough();
    auto* c_johnson = app.add_subcommand("johnson", "generalized Johnson scheme checks")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    auto G = GroupTable::load(cfg.group);
    bool failed = false;

    if (c_tab->parsed()) {
        json out;
        out["group"] = cfg.group;
        out["n"] = cfg.n;
        out["scalar_kind"] = "exact";
        json diagrams = json::array();
        std::vector<GYoungDiagram> mus;
        if (!cfg.mu_json.empty())
            mus.push_back(parse_mu(cfg, G));
        else
            mus = enumerate_gdiagrams(cfg.n, G.num_irreps());
        for (const auto& mu : mus) {
            if (mu.total() != cfg.n) throw std::invalid_argument("--mu must have n boxes");
            json d;
            d["shape"] = gdiagram_to_json(mu);
            d["dim"] = dimension(mu, G).str();
            json tabs = json::array();
            for (const auto& T : enumerate_gtableaux(mu)) {
                json tj = tableau_to_json(T);
                auto cv = phi(T, G);
                tj["content_labels"] = cv.labels;
                json vals = json::array();
                for (const auto& v : cv.values) vals.push_back(frac_string(v));
                tj["content_values"] = vals;
                tabs.push_back(tj);
            }
            d["tableaux"] = tabs;
            diagrams.push_back(d);
        }
        out["diagrams"] = diagrams;
        emit(cfg, out);
    } else if (c_rep->parsed()) {
        auto mu = parse_mu(cfg, G);
        if (mu.total() != cfg.n) throw std::invalid_argument("--mu must have n boxes");
        GZRep rep(mu, G, parse_form(cfg.form));
        emit(cfg, rep_to_json(rep, cfg.group, cfg.n));
    } else if (c_verify->parsed()) {
        CheckReport rep;
        auto merge = [&rep](const CheckReport& r, const std::string& prefix) {
            for (const auto& it : r.items)
                rep.add(prefix + "/" + it.name, it.pass, it.residual, it.detail);
        };
        bool all = cfg.suite == "all";
        bool known = all;
        if (all || cfg.suite == "relations") {
            merge(verify_relations(G, cfg.n), "relations");
            known = true;
        }
        if (all || cfg.suite == "commutant") {
            merge(verify_commutant(G, cfg.n), "commutant");
            known = true;
        }
        if (all || cfg.suite == "yjm") {
            merge(yjm_suite(G, cfg.n, cfg.tol), "yjm");
            known = true;
        }
        if (all || cfg.suite == "characters") {
            merge(character_suite(G, cfg.n, cfg.tol), "characters");
            known = true;
        }
        if (all || cfg.suite == "reps") {
            merge(rep_suite(G, cfg.n, cfg.tol, cfg.seed), "reps");
            known = true;
        }
        if (all || cfg.suite == "johnson") {
            merge(johnson_suite(G, cfg.n), "johnson");
            known = true;
        }
        if (!known) throw CLI::ValidationError("unknown suite " + cfg.suite);
        json out = check_report_to_json(rep);
        out["group"] = cfg.group;
        out["n"] = cfg.n;
        emit(cfg, out);
        failed = !rep.all_pass();
    } else if (c_branch->parsed()) {
        auto mu = parse_mu(cfg, G);
        auto br = branch(mu, G);
        json out;
        out["group"] = cfg.group;
        out["mu"] = gdiagram_to_json(mu);
        json terms = json::array();
        for (const auto& [lam, m] : br.terms)
            terms.push_back({{"shape", gdiagram_to_json(lam)}, {"multiplicity", m}});
        out["terms"] = terms;
        emit(cfg, out);
    } else if (c_sjb->parsed()) {
        json out;
        out["n"] = cfg.n;
        out["scalar_kind"] = "exact";
        out["chains"] = sjb_to_json(build_sjb(cfg.n));
        emit(cfg, out);
    } else if (c_johnson->parsed()) {
        auto rep = generalized_scheme(builtin_action(G), cfg.n);
        json out = check_report_to_json(rep);
        out["group"] = cfg.group;
        out["n"] = cfg.n;
        json layers = json::array();
        if (G.order() == 1)
            for (int i = 0; i <= cfg.n; ++i) {
                json layer = json::array();
                for (const auto& [k, d] : johnson_decomposition(cfg.n, i))
                    layer.push_back({{"k", k}, {"dim", d.str()}});
                layers.push_back(layer);
            }
        out["layers"] = layers;
        emit(cfg, out);
        failed = !rep.all_pass();
    }
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
