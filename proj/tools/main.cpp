#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "modr/compare.hpp"
#include "modr/errors.hpp"
#include "modr/json_io.hpp"
#include "modr/polynomial.hpp"
#include "modr/pushforward.hpp"
#include "modr/scan.hpp"
#include "modr/shadow.hpp"

using namespace modr;

namespace {

constexpr Int kDefaultCap = 100000;

struct Output {
    Json result = Json::object();
    std::vector<std::string> warnings;
    int exit_code = 0;

    int emit() const {
        Json doc;
        doc["result"] = result;
        if (!warnings.empty()) doc["warnings"] = warnings;
        std::cout << doc.dump(2) << "\n";
        return exit_code;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "1..6" or "1,2,5"
std::vector<Int> parse_lambdas(const std::string& text) {
    std::vector<Int> out;
    auto dots = text.find("..");
    try {
        if (dots != std::string::npos) {
            Int lo = std::stoll(text.substr(0, dots));
            Int hi = std::stoll(text.substr(dots + 2));
            for (Int l = lo; l <= hi; ++l) out.push_back(l);
        } else {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
        }
    } catch (const std::exception&) {
        throw ArgumentError("malformed lambda list: " + text);
    }
    if (out.empty()) throw ArgumentError("empty lambda list: " + text);
    for (Int l : out)
        if (l < 1) throw ArgumentError("lambdas must be positive");
    return out;
}

Json count_json(const BigInt& n) {
    if (n <= BigInt(std::numeric_limits<long long>::max()))
        return Json(n.convert_to<long long>());
    return Json(big_to_string(n));
}

ModRType load_type(const ProblemFile& pf) {
    auto T = problem_to_type(pf);
    auto vp = validate_pretype(T.graph, T.contact, T.r, T.graph.vertices.size() <= 20);
    auto vc = validate_contact(T.contact, T.r);
    if (!vp.ok() || !vc.ok()) {
        std::string why;
        for (const auto& f : vp.failures()) why += f + "; ";
        for (const auto& f : vc.failures()) why += f + "; ";
        throw DomainError("invalid input type: " + why);
    }
    if (!balanced(T)) throw DomainError("weighting does not satisfy balancing");
    return T;
}

int cmd_validate(const std::string& file, bool no_window) {
    auto pf = parse_problem(slurp(file));
    Output out;
    auto vp = validate_pretype(pf.graph, pf.contact, pf.r, !no_window);
    auto vc = validate_contact(pf.contact, pf.r);
    out.result["pretype"] = report_to_json(vp);
    out.result["contact"] = report_to_json(vc);
    bool ok = vp.ok() && vc.ok();
    if (pf.weighting) {
        auto T = problem_to_type(pf);
        bool bal = balanced(T);
        out.result["balanced"] = bal;
        ok = ok && bal;
    }
    out.result["valid"] = ok;
    out.exit_code = ok ? 0 : 1;
    return out.emit();
}

int cmd_weightings(const std::string& file, Int cap) {
    auto pf = parse_problem(slurp(file));
    auto en = enumerate_weightings(pf.graph, pf.contact, pf.r, BigInt(cap));
    Output out;
    out.result["count"] = {{"base", en.count.base}, {"exp", en.count.exp}};
    Json list = Json::array();
    for (const auto& T : en.list) list.push_back(weighting_to_json(T));
    out.result["weightings"] = list;
    return out.emit();
}

int cmd_classify(const std::string& file) {
    auto pf = parse_problem(slurp(file));
    auto T = load_type(pf);
    auto cls = classify_type(T);
    Output out;
    out.result["essential"] = cls.essential;
    out.result["trivial"] = cls.trivial;
    out.result["reasons"] = cls.reasons;
    auto ind = inducibility_necessary(T, T.graph.vertices.size() <= 20);
    Json push = Json::object();
    for (const auto& [v, deg] : ind.pushdeg) push[v] = deg;
    out.result["pushdeg"] = push;
    out.result["possibly_inducible"] = ind.possibly_inducible;
    return out.emit();
}

int cmd_dims(const std::string& file) {
    auto pf = parse_problem(slurp(file));
    Output out;
    auto inv = compute_invariants(pf.graph);
    auto cls = classify_graph(pf.graph, inv);
    out.result["dim"] = dim_stratum_graph(pf.graph, inv, pf.contact.g, pf.contact.n());
    out.result["essential"] = cls.essential;
    out.result["trivial"] = cls.trivial;
    if (cls.essential)
        out.result["k"] = k_tau_graph(pf.graph, inv, pf.contact.g).k;
    return out.emit();
}

int cmd_sh(const std::string& file, Int cap, bool enumerate) {
    auto pf = parse_problem(slurp(file));
    auto T = load_type(pf);
    Output out;
    out.result["order"] = count_json(sh_order(T));
    auto sys = build_sh_system(T);
    Json moduli = Json::object();
    for (const auto& [id, t] : sys.moduli) moduli[id] = t;
    out.result["moduli"] = moduli;
    if (enumerate) {
        auto elems = sh_enumerate(T, BigInt(cap));
        Json list = Json::array();
        for (const auto& a : elems) list.push_back(a);
        out.result["elements"] = list;
    }
    return out.emit();
}

int cmd_degree(const std::string& file, Int lambda, bool raw) {
    auto pf = parse_problem(slurp(file));
    auto T = load_type(pf);
    auto d = comparison_degree(T, lambda);
    Output out;
    out.result["coefficient"] = format_rational(d.coefficient);
    out.result["exponent"] = d.exponent;
    if (raw) {
        out.result["raw_exponent"] = d.exponent_raw;
        out.result["raw_total"] = format_rational(d.total_raw(lambda));
    }
    out.result["total"] = format_rational(d.total(lambda));
    out.result["certified"] = d.regime_certified;
    if (!d.regime_certified) out.warnings.push_back("regime not certified");
    return out.emit();
}

int cmd_lift(const std::string& file, Int lambda) {
    auto pf = parse_problem(slurp(file));
    auto T = load_type(pf);
    auto lift = canonical_lift(T, lambda);
    Output out;
    out.result["found"] = lift.found;
    if (lift.found) {
        Json islope = Json::object();
        for (const auto& [id, m] : canonical_islopes(T)) islope[id] = m;
        out.result["islope"] = islope;
        out.result["r"] = lift.lifted.r;
        out.result["weighting"] = weighting_to_json(lift.lifted);
    }
    out.result["size_ok"] = lift.size_ok;
    if (!lift.size_ok) out.warnings.push_back("size bound not satisfied");
    return out.emit();
}

int cmd_sweep(const std::string& file, const std::string& lambdas_text) {
    auto pf = parse_problem(slurp(file));
    auto Z = problem_to_zhat(pf);
    auto lambdas = parse_lambdas(lambdas_text);
    auto sweep = monomiality_sweep(Z, pf.r, lambdas);
    Output out;
    out.result["C"] = format_rational(sweep.constant);
    out.result["k"] = sweep.k;
    out.result["certified"] = sweep.monomial && sweep.regime_ok;
    Json samples = Json::array();
    for (const auto& s : sweep.samples)
        samples.push_back({{"lambda", s.lambda}, {"total", format_rational(s.total)}});
    out.result["samples"] = samples;
    if (!sweep.regime_ok) out.warnings.push_back("regime not certified");
    if (!sweep.monomial) {
        out.warnings.push_back("samples do not fit a single monomial");
        out.exit_code = 1;
    }
    return out.emit();
}

int cmd_poly(const std::vector<std::string>& files, const std::string& lambdas_text,
             bool genus1) {
    std::vector<ZhatType> family;
    std::vector<std::string> labels;
    Int r = 0;
    for (const auto& file : files) {
        auto pf = parse_problem(slurp(file));
        if (r == 0) r = pf.r;
        if (pf.r != r) throw ArgumentError("family members disagree on r");
        family.push_back(problem_to_zhat(pf));
        auto slash = file.find_last_of('/');
        labels.push_back(slash == std::string::npos ? file : file.substr(slash + 1));
    }
    auto lambdas = parse_lambdas(lambdas_text);
    auto P = genus1 ? genus1_virtual_polynomial(family, labels, r, lambdas)
                    : assemble_family_polynomial(family, labels, r, lambdas);
    Output out;
    Json terms = Json::object();
    Json prov = Json::object();
    for (const auto& [k, c] : P.terms) {
        terms[std::to_string(k)] = format_rational(c);
        prov[std::to_string(k)] = P.provenance.at(k);
    }
    out.result["terms"] = terms;
    out.result["provenance"] = prov;
    out.result["degree"] = P.degree();
    return out.emit();
}

int cmd_maulik(Int r, Int s) {
    Output out;
    out.result["total"] = format_rational(maulik_total_degree(r, s));
    return out.emit();
}

int cmd_oracle(const std::string& file, Int cap) {
    auto pf = parse_problem(slurp(file));
    Output out;
    Json checks = Json::array();
    auto add = [&](const std::string& name, const std::string& status,
                   const std::string& detail) {
        checks.push_back({{"name", name}, {"status", status}, {"detail", detail}});
        if (status == "fail") out.exit_code = 1;
    };

    // solver enumeration vs exhaustive balanced-assignment scan
    try {
        auto inv = compute_invariants(pf.graph);
        BigInt count = big_pow(pf.r, inv.b1);
        BigInt space = 1;
        for (std::size_t i = 0; i < pf.graph.edges.size(); ++i) space *= pf.r;
        if (count > cap || space > cap) {
            add("weighting_scan", "skipped", "search space exceeds cap");
        } else {
            auto en = enumerate_weightings(pf.graph, pf.contact, pf.r, BigInt(cap));
            auto sys = balancing_system(pf.graph, pf.contact, pf.r);
            auto brute = scan_solutions_parallel(sys, BigInt(cap));
            std::set<Json> solver, scanner;
            for (const auto& T : en.list) solver.insert(weighting_to_json(T));
            std::vector<std::string> ids;
            for (const auto& e : pf.graph.edges) ids.push_back(e.id);
            std::sort(ids.begin(), ids.end());
            for (const auto& sol : brute) {
                Json w = Json::object();
                for (std::size_t i = 0; i < ids.size(); ++i) w[ids[i]] = sol[i];
                scanner.insert(w);
            }
            add("weighting_scan", solver == scanner ? "pass" : "fail",
                "solver count " + big_to_string(BigInt(en.list.size())) +
                    ", scan count " + big_to_string(BigInt(brute.size())));
        }
    } catch (const BudgetError&) {
        add("weighting_scan", "skipped", "budget");
    }

    if (pf.weighting) {
        auto T = load_type(pf);
        // shadow group order vs exhaustive enumeration
        try {
            auto order = sh_order(T);
            auto elems = sh_enumerate(T, BigInt(cap));
            add("sh_enumeration", order == BigInt(elems.size()) ? "pass" : "fail",
                "order " + big_to_string(order));
        } catch (const BudgetError&) {
            add("sh_enumeration", "skipped", "budget");
        }
        // re-solving from the free-edge projection reproduces the weighting
        {
            auto inv = compute_invariants(T.graph);
            std::map<std::string, Int> free;
            for (const auto& [id, m] : T.slope)
                if (!inv.spanning_tree.count(id)) free[id] = m;
            auto solved = solve_weighting(T.graph, T.contact, T.r, free);
            add("solve_projection",
                solved.feasible && solved.type.slope == T.slope ? "pass" : "fail",
                "tree slopes recovered from the free edges");
        }
        // pushforward bookkeeping at external vertices
        bool push_ok = true;
        for (const auto& v : T.graph.vertices) {
            if (v.cone != Cone::External) continue;
            auto D = external_vertex_divisor(T, v.id);
            Rat exact = exact_degree(D);
            Int push = pushforward_degree(D);
            if (Rat(push) > exact) push_ok = false;
            if (exact != Rat(v.degree, T.r)) push_ok = false;
        }
        add("pushforward_degree", push_ok ? "pass" : "fail",
            "divisor degrees match d_v/r at external vertices");
    } else {
        add("sh_enumeration", "skipped", "no weighting in input");
    }

    if (pf.islope) {
        auto Z = problem_to_zhat(pf);
        add("islope_balancing", z_balanced(Z, pf.r) ? "pass" : "fail", "integer balancing");
        if (pf.weighting) {
            bool match = true;
            for (const auto& [id, m] : Z.islope)
                if (rep_mod(m, pf.r) != rep_mod(pf.weighting->at(id), pf.r)) match = false;
            add("islope_reduction", match ? "pass" : "fail",
                "integer slopes reduce to the weighting mod r");
        }
    }

    out.result["checks"] = checks;
    return out.emit();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of mod-r tropical types"};
    app.require_subcommand(1);

    std::string file;
    std::vector<std::string> files;
    Int cap = kDefaultCap;
    Int lambda = 1;
    Int rpar = 1, spar = 1;
    std::string lambdas_text = "1..6";
    bool no_window = false, raw_exponent = false, enumerate_flag = false, genus1 = false;

    auto* validate = app.add_subcommand("validate", "check contact data and pre-type conditions");
    validate->add_option("file", file)->required();
    validate->add_flag("--no-window", no_window, "skip the exponential subset window check");

    auto* weightings = app.add_subcommand("weightings", "enumerate admissible slope assignments");
    weightings->add_option("file", file)->required();
    weightings->add_option("--cap", cap, "enumeration budget");

    auto* classify = app.add_subcommand("classify", "essential/trivial classification");
    classify->add_option("file", file)->required();

    auto* dims = app.add_subcommand("dims", "stratum dimension");
    dims->add_option("file", file)->required();

    auto* sh = app.add_subcommand("sh", "shadow group order");
    sh->add_option("file", file)->required();
    sh->add_option("--cap", cap, "enumeration budget");
    sh->add_flag("--enumerate", enumerate_flag, "also list the elements");

    auto* degree = app.add_subcommand("degree", "comparison degree of a level-(lambda r) type");
    degree->add_option("file", file)->required();
    degree->add_option("--lambda", lambda, "scaling factor")->required();
    degree->add_flag("--raw-exponent", raw_exponent, "also emit the uncorrected exponent");

    auto* lift = app.add_subcommand("lift", "canonical lift to level lambda*r");
    lift->add_option("file", file)->required();
    lift->add_option("--lambda", lambda, "scaling factor")->required();

    auto* sweep = app.add_subcommand("sweep", "degree monomiality across lambda");
    sweep->add_option("file", file)->required();
    sweep->add_option("--lambdas", lambdas_text, "range 1..6 or list 1,2,3");

    auto* poly = app.add_subcommand("poly", "assemble the family polynomial");
    poly->add_option("files", files)->required();
    poly->add_option("--lambdas", lambdas_text, "range 1..6 or list 1,2,3");
    poly->add_flag("--genus1", genus1, "assert the genus-1 pushforward shape");

    auto* maulik = app.add_subcommand("maulik", "elliptic fibration total degree");
    maulik->add_option("--r", rpar, "first rooting parameter")->required();
    maulik->add_option("--s", spar, "second rooting parameter")->required();

    auto* oracle = app.add_subcommand("oracle", "run brute-force cross-checks");
    oracle->add_option("file", file)->required();
    oracle->add_option("--cap", cap, "enumeration budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << app.help() << "\n";
        return 3;
    }

    try {
        if (validate->parsed()) return cmd_validate(file, no_window);
        if (weightings->parsed()) return cmd_weightings(file, cap);
        if (classify->parsed()) return cmd_classify(file);
        if (dims->parsed()) return cmd_dims(file);
        if (sh->parsed()) return cmd_sh(file, cap, enumerate_flag);
        if (degree->parsed()) return cmd_degree(file, lambda, raw_exponent);
        if (lift->parsed()) return cmd_lift(file, lambda);
        if (sweep->parsed()) return cmd_sweep(file, lambdas_text);
        if (poly->parsed()) return cmd_poly(files, lambdas_text, genus1);
        if (maulik->parsed()) return cmd_maulik(rpar, spar);
        if (oracle->parsed()) return cmd_oracle(file, cap);
    } catch (const BudgetError& e) {
        std::cout << Json{{"error", e.what()}, {"count", e.count}}.dump(2) << "\n";
        return 2;
    } catch (const ArgumentError& e) {
        std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
        return 3;
    } catch (const Error& e) {
        std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
    std::cerr << app.help() << "\n";
    return 3;
}
