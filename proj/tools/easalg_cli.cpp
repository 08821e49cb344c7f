// Command-line frontend: loads EAS / lEAS JSON files or catalog names, runs
// the verifications and table generators, and prints a JSON (or TSV) report
// with deterministic ordering. Exit codes: 0 = ok, 1 = a check failed,
// 2 = usage, parse or size-limit error.

#include <exception>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "easalg/catalog.hpp"
#include "easalg/freealg.hpp"
#include "easalg/json_io.hpp"
#include "easalg/leas.hpp"
#include "easalg/links.hpp"
#include "easalg/morphisms.hpp"
#include "easalg/operad.hpp"
#include "easalg/rewriting.hpp"
#include "easalg/series.hpp"

using namespace easalg;

namespace {

int emit(const std::string& status, Json payload, const Json& witnesses = Json()) {
    Json out;
    out["status"] = status;
    out["payload"] = std::move(payload);
    if (!witnesses.is_null()) out["witnesses"] = witnesses;
    std::cout << out.dump(2) << "\n";
    if (status == "ok") return 0;
    if (status == "fail") return 1;
    return 2;
}

int emit_error(const std::string& message) {
    Json payload;
    payload["message"] = message;
    return emit("error", payload);
}

Json leas_report_json(const LeasReport& r) {
    Json j;
    j["ok"] = r.ok;
    if (!r.ok) {
        j["row_index"] = *r.row_index;
        j["col_index"] = *r.col_index;
    }
    return j;
}

Json eas_report_json(const FiniteEAS& s, const EasReport& r) {
    Json j;
    j["is_eas"] = r.is_eas;
    j["nondegenerate"] = r.nondegenerate;
    Json fails = Json::array();
    for (const auto& f : r.failures) {
        Json e;
        e["axiom"] = f.axiom;
        e["triple"] = Json::array({s.elements[f.triple[0]], s.elements[f.triple[1]], s.elements[f.triple[2]]});
        fails.push_back(e);
    }
    j["failures"] = fails;
    return j;
}

// Known names for the small groups used by theta-prime and the subgroup tests.
OpTable builtin_group(const std::string& name, std::vector<std::string>& labels) {
    auto cyclic = [&](int n) {
        OpTable t(n, std::vector<int>(n));
        labels.clear();
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        return t;
    };
    if (name == "Z2") return cyclic(2);
    if (name == "Z3") return cyclic(3);
    if (name == "Z4") return cyclic(4);
    if (name == "Z2xZ2") {
        labels = {"00", "01", "10", "11"};
        OpTable t(4, std::vector<int>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t[i][j] = (i ^ j);
        return t;
    }
    throw std::invalid_argument("unknown group name: " + name);
}

OpTable semigroup_from_arg(const std::string& arg, std::vector<std::string>& labels) {
    try {
        return builtin_group(arg, labels);
    } catch (const std::invalid_argument&) {
    }
    Json j = load_json_file(arg);
    labels = j.at("elements").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
    OpTable t;
    for (const auto& row : j.at("star")) {
        std::vector<int> r;
        for (const auto& cell : row) r.push_back(index.at(cell.get<std::string>()));
        t.push_back(std::move(r));
    }
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for extended associative semigroups and their operads"};
    app.require_subcommand(1);

    // eas
    auto* eas_cmd = app.add_subcommand("eas", "finite EAS tables");
    eas_cmd->require_subcommand(1);
    std::string eas_target;
    auto* eas_check = eas_cmd->add_subcommand("check", "verify the three defining identities");
    eas_check->add_option("target", eas_target, "catalog name or JSON file")->required();
    int classify_size = 2;
    bool classify_full = false;
    auto* eas_classify = eas_cmd->add_subcommand("classify", "enumerate all EAS up to isomorphism");
    eas_classify->add_option("--size", classify_size, "cardinality")->required();
    eas_classify->add_flag("--full", classify_full, "allow the size-3 enumeration");

    // leas
    auto* leas_cmd = app.add_subcommand("leas", "linear EAS matrices");
    leas_cmd->require_subcommand(1);
    std::string leas_target;
    auto* leas_check = leas_cmd->add_subcommand("check", "verify the braid identity");
    leas_check->add_option("target", leas_target, "catalog name or JSON file")->required();
    auto* leas_lin = leas_cmd->add_subcommand("linearize", "linearize a finite EAS");
    leas_lin->add_option("target", leas_target, "catalog name or JSON file")->required();
    auto* leas_dual = leas_cmd->add_subcommand("dual", "Koszul-dual structure map");
    leas_dual->add_option("target", leas_target, "catalog name or JSON file")->required();
    auto* leas_inv = leas_cmd->add_subcommand("invert", "invert the structure map");
    leas_inv->add_option("target", leas_target, "catalog name or JSON file")->required();

    // free
    auto* free_cmd = app.add_subcommand("free", "free algebra checks");
    free_cmd->require_subcommand(1);
    std::string free_target;
    int max_len = 4;
    auto* free_assoc = free_cmd->add_subcommand("assoc-check", "Phi-associativity on the free algebra");
    free_assoc->add_option("target", free_target, "catalog name or JSON file")->required();
    free_assoc->add_option("--max-len", max_len, "total word length bound (default 4)");

    // operad
    auto* operad_cmd = app.add_subcommand("operad", "operad structure checks");
    operad_cmd->require_subcommand(1);
    std::string operad_target;
    int arity_check = 4;
    auto* op_compose = operad_cmd->add_subcommand("compose", "axiom check of the composition");
    op_compose->add_option("target", operad_target, "catalog name or JSON file")->required();
    op_compose->add_option("--arity-check", arity_check, "composite arity bound (default 4)");
    auto* op_conf = operad_cmd->add_subcommand("confluence", "critical-pair confluence");
    op_conf->add_option("target", operad_target, "catalog name or JSON file")->required();
    std::string tree_arg;
    auto* op_nf = operad_cmd->add_subcommand("normal-form", "rewrite a decorated tree to normal form");
    op_nf->add_option("target", operad_target, "catalog name or JSON file")->required();
    op_nf->add_option("--tree", tree_arg, "nested JSON tree, [\"node\",dec,left,right] / \"leaf\"")
        ->required();
    int count_omega = 2, count_n = 4;
    auto* op_count = operad_cmd->add_subcommand("count", "normal-form count of the two-parameter operad");
    op_count->add_option("--omega", count_omega, "parameter set size")->required();
    op_count->add_option("--n", count_n, "arity")->required();

    // series
    auto* series_cmd = app.add_subcommand("series", "dimension series");
    series_cmd->require_subcommand(1);
    int omega_max = 9, n_max = 7;
    bool tsv = false;
    auto* se_table = series_cmd->add_subcommand("table", "table of p_n(omega)");
    se_table->add_option("--omega-max", omega_max, "largest omega")->required();
    se_table->add_option("--n-max", n_max, "largest n")->required();
    se_table->add_flag("--tsv", tsv, "tab-separated output");
    int poly_n = 4;
    auto* se_poly = series_cmd->add_subcommand("poly", "p_n as a polynomial in omega");
    se_poly->add_option("--n", poly_n, "index n")->required();
    int kz_omega = 2, kz_order = 8;
    auto* se_koszul = series_cmd->add_subcommand("koszul-check", "dual series inverts -P(-X)");
    se_koszul->add_option("--omega", kz_omega, "parameter set size")->required();
    se_koszul->add_option("--order", kz_order, "truncation order")->required();

    // assoc
    auto* assoc_cmd = app.add_subcommand("assoc", "associative elements of Sym As_Phi(2)");
    assoc_cmd->require_subcommand(1);
    std::string assoc_target;
    auto* assoc_scan = assoc_cmd->add_subcommand("scan", "indicator-pattern solutions of the lambda system");
    assoc_scan->add_option("target", assoc_target, "catalog name or JSON file")->required();

    // morphism
    auto* morph_cmd = app.add_subcommand("morphism", "operad morphism checks");
    morph_cmd->require_subcommand(1);
    std::string morph_target;
    auto* mo_theta = morph_cmd->add_subcommand("theta", "two-parameter to As_Phi morphism");
    mo_theta->add_option("target", morph_target, "catalog name or JSON file")->required();
    auto* mo_theta_prime = morph_cmd->add_subcommand("theta-prime", "morphism into the product EAS");
    mo_theta_prime->add_option("target", morph_target, "group name (Z2,Z3,Z4,Z2xZ2) or semigroup JSON file")
        ->required();

    // links
    auto* links_cmd = app.add_subcommand("links", "linked algebra families");
    links_cmd->require_subcommand(1);
    std::string link_name;
    auto* links_verify_cmd = links_cmd->add_subcommand("verify", "verify a linked-family statement");
    links_verify_cmd->add_option("name", link_name, "dendriform | tridendriform | duplicial | "
                                                    "dual-duplicial | diassociative | triassociative | "
                                                    "comtrias | postlie")
        ->required();

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "shipped tables and matrices");
    catalog_cmd->require_subcommand(1);
    auto* catalog_list = catalog_cmd->add_subcommand("list", "list catalog names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (eas_check->parsed()) {
            FiniteEAS s = resolve_eas(eas_target);
            auto r = check_eas(s);
            Json payload = eas_report_json(s, r);
            Json witnesses;
            if (!r.is_eas) witnesses = payload["failures"];
            return emit(r.is_eas ? "ok" : "fail", payload, witnesses);
        }
        if (eas_classify->parsed()) {
            ClassificationResult r = classify(classify_size, classify_full);
            Json payload;
            payload["size"] = classify_size;
            payload["labeled_solutions"] = r.labeled_solutions;
            payload["class_count"] = r.representatives.size();
            Json classes = Json::array();
            for (const auto& rep : r.representatives) {
                Json e = eas_to_json(rep);
                e["nondegenerate"] = phi_bijective(rep);
                if (classify_size == 2) {
                    for (const auto& nm : Catalog::size2_names())
                        if (are_isomorphic(rep, *Catalog::instance().find_eas(nm))) {
                            e["name"] = nm;
                            break;
                        }
                }
                classes.push_back(e);
            }
            payload["classes"] = classes;
            return emit("ok", payload);
        }
        if (leas_check->parsed()) {
            LinearEAS l = resolve_leas(leas_target);
            auto r = check_leas(l);
            Json payload = leas_report_json(r);
            Json witnesses;
            if (!r.ok) {
                Json w;
                w["row_index"] = *r.row_index;
                w["col_index"] = *r.col_index;
                witnesses = Json::array({w});
            }
            return emit(r.ok ? "ok" : "fail", payload, witnesses);
        }
        if (leas_lin->parsed()) {
            FiniteEAS s = resolve_eas(leas_target);
            LinearEAS l = linearize(s);
            Json payload = leas_to_json(l);
            payload["check"] = leas_report_json(check_leas(l));
            return emit("ok", payload);
        }
        if (leas_dual->parsed()) {
            LinearEAS l = dualize(resolve_leas(leas_target));
            Json payload = leas_to_json(l);
            payload["check"] = leas_report_json(check_leas(l));
            return emit("ok", payload);
        }
        if (leas_inv->parsed()) {
            LinearEAS l = resolve_leas(leas_target);
            auto r = invert_leas(l);
            if (std::holds_alternative<NotInvertible>(r)) {
                Json payload;
                payload["not_invertible"] = true;
                payload["rank"] = std::get<NotInvertible>(r).rank;
                Json w;
                w["rank"] = std::get<NotInvertible>(r).rank;
                return emit("fail", payload, Json::array({w}));
            }
            Json payload = leas_to_json(std::get<LinearEAS>(r));
            payload["check"] = leas_report_json(check_leas(std::get<LinearEAS>(r)));
            return emit("ok", payload);
        }
        if (free_assoc->parsed()) {
            LinearEAS l = resolve_leas(free_target);
            auto r = check_phi_associativity(l, max_len);
            Json payload;
            payload["max_len"] = max_len;
            payload["ok"] = r.ok;
            Json witnesses;
            if (!r.ok) witnesses = Json::array({r.witness});
            return emit(r.ok ? "ok" : "fail", payload, witnesses);
        }
        if (op_compose->parsed()) {
            LinearEAS l = resolve_leas(operad_target);
            AsPhiProvider provider(l);
            auto r = operad_axiom_check(provider, arity_check);
            Json payload;
            payload["arity"] = arity_check;
            payload["ok"] = r.ok;
            Json witnesses;
            if (!r.ok) witnesses = Json::array({r.witness});
            return emit(r.ok ? "ok" : "fail", payload, witnesses);
        }
        if (op_conf->parsed()) {
            LinearEAS l = resolve_leas(operad_target);
            auto r = confluence_check_asphi(l);
            Json payload;
            payload["confluent"] = r.confluent;
            payload["braid_identity"] = check_leas(l).ok;
            Json witnesses;
            if (!r.confluent) witnesses = Json::array({r.witness});
            return emit(r.confluent ? "ok" : "fail", payload, witnesses);
        }
        if (op_nf->parsed()) {
            LinearEAS l = resolve_leas(operad_target);
            Tree t = tree_from_json(Json::parse(tree_arg));
            AsPhiRules rules(l);
            TreeSum nf = rewrite_normal_form(rules, TreeSum(t));
            Json payload;
            payload["input"] = tree_to_json(t);
            payload["normal_form"] = tree_sum_to_json(nf);
            payload["leaves"] = tree_leaves(t);
            return emit("ok", payload);
        }
        if (op_count->parsed()) {
            Json payload;
            payload["omega"] = count_omega;
            payload["n"] = count_n;
            if (count_n > 12) return emit_error("n too large for the normal-form count (n <= 12)");
            payload["count"] = to_string(count_normal_forms_two_param(count_omega, count_n));
            return emit("ok", payload);
        }
        if (se_table->parsed()) {
            if (tsv) {
                std::cout << "omega\tn\tp_n\n";
                for (int w = 1; w <= omega_max; ++w) {
                    auto t = p_recursive(w, n_max);
                    for (int n = 1; n <= n_max; ++n)
                        std::cout << w << "\t" << n << "\t" << t.p(n).str() << "\n";
                }
                return 0;
            }
            Json payload;
            payload["omega_max"] = omega_max;
            payload["n_max"] = n_max;
            Json rows = Json::array();
            for (int w = 1; w <= omega_max; ++w) {
                auto t = p_recursive(w, n_max);
                Json row = Json::array();
                for (int n = 1; n <= n_max; ++n) row.push_back(t.p(n).str());
                rows.push_back(row);
            }
            payload["table"] = rows;
            return emit("ok", payload);
        }
        if (se_poly->parsed()) {
            IntPolynomial p = p_polynomial(poly_n);
            Json payload;
            payload["n"] = poly_n;
            Json coeffs = Json::array();
            for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
            payload["coefficients"] = coeffs;
            payload["degree"] = p.degree();
            return emit("ok", payload);
        }
        if (se_koszul->parsed()) {
            if (kz_order > 20) return emit_error("order too large (<= 20)");
            bool ok = verify_koszul_inversion(kz_omega, kz_order);
            Json payload;
            payload["omega"] = kz_omega;
            payload["order"] = kz_order;
            payload["inverse_of_minus_P_minus_X"] = ok;
            Json witnesses;
            if (!ok) {
                TruncatedSeries comp = series_compose(koszul_dual_series(kz_omega, kz_order),
                                                      p_series(kz_omega, kz_order).negate_argument().scaled(-1));
                TruncatedSeries x = TruncatedSeries::x(kz_order);
                for (std::size_t k = 0; k <= comp.order(); ++k)
                    if (comp.coeff(k) != x.coeff(k)) {
                        Json w;
                        w["degree"] = k;
                        w["coefficient"] = to_string(comp.coeff(k));
                        witnesses = Json::array({w});
                        break;
                    }
            }
            return emit(ok ? "ok" : "fail", payload, witnesses);
        }
        if (assoc_scan->parsed()) {
            FiniteEAS s = resolve_eas(assoc_target);
            auto r = find_indicator_solutions(s);
            LinearEAS lin = linearize(s);
            Json payload;
            payload["scope"] = r.scope;
            Json list = Json::array();
            for (const auto& pat : r.patterns) {
                ProductCandidate c;
                c.coeffs.assign(s.elements.size(), 0);
                for (int i : pat.plus) c.coeffs[i] = 1;
                for (int i : pat.minus) c.coeffs[i] = -1;
                Json e;
                Json cand;
                cand["side"] = "direct";
                Json coeffs = Json::array();
                for (const auto& x : c.coeffs) coeffs.push_back(to_string(x));
                cand["coeffs"] = coeffs;
                e["candidate"] = cand;
                e["associative"] = pat.associative;
                e["square_zero"] = pat.square_zero;
                if (check_associative(lin, c) != pat.associative)
                    return emit_error("indicator scan and linearized check disagree");
                list.push_back(e);
            }
            payload["solutions"] = list;
            return emit("ok", payload);
        }
        if (mo_theta->parsed()) {
            FiniteEAS s = resolve_eas(morph_target);
            auto r = theta_check(s);
            Json payload;
            payload["arrow_associative"] = r.arrow_associative;
            payload["relations_preserved"] = r.relations_preserved;
            Json witnesses;
            if (!r.arrow_associative) {
                auto w = associativity_witness(s.arrow);
                witnesses = Json::array();
                witnesses.push_back(Json::array({s.elements[(*w)[0]], s.elements[(*w)[1]], s.elements[(*w)[2]]}));
            } else if (r.witness) {
                witnesses = Json::array();
                witnesses.push_back(Json::array({s.elements[(*r.witness)[0]], s.elements[(*r.witness)[1]],
                                                 s.elements[(*r.witness)[2]]}));
            }
            return emit(r.ok ? "ok" : "fail", payload, witnesses);
        }
        if (mo_theta_prime->parsed()) {
            std::vector<std::string> labels;
            OpTable star = semigroup_from_arg(morph_target, labels);
            auto r = theta_prime_check(labels, star);
            Json payload;
            payload["relations_preserved"] = r.relations_preserved;
            payload["dim_two_param_arity3"] = r.dim_two_param_3.str();
            payload["dim_asphi_arity3"] = r.dim_asphi_3.str();
            Json witnesses;
            if (r.witness) {
                witnesses = Json::array();
                witnesses.push_back(Json::array(
                    {labels[(*r.witness)[0]], labels[(*r.witness)[1]], labels[(*r.witness)[2]]}));
            }
            return emit(r.ok ? "ok" : "fail", payload, witnesses);
        }
        if (links_verify_cmd->parsed()) {
            auto r = links_verify(link_name);
            Json witnesses;
            if (!r.ok) witnesses = Json::array({r.payload});
            return emit(r.ok ? "ok" : "fail", r.payload, witnesses);
        }
        if (catalog_list->parsed()) {
            Json payload;
            payload["eas"] = Catalog::instance().eas_names();
            payload["leas"] = Catalog::instance().leas_names();
            return emit("ok", payload);
        }
        return emit_error("no subcommand matched");
    } catch (const SizeLimitExceeded& e) {
        return emit_error("size limit exceeded: " + std::to_string(e.size) +
                          (e.size == 3 ? " (pass --full to enable the size-3 enumeration)" : ""));
    } catch (const NotAssociative& e) {
        return emit_error("operation is not associative");
    } catch (const NoRightInverses&) {
        return emit_error("right translations are not bijective");
    } catch (const NotAGroup& e) {
        return emit_error("not a group: " + e.reason);
    } catch (const Json::exception& e) {
        return emit_error(std::string("malformed JSON: ") + e.what());
    } catch (const std::exception& e) {
        return emit_error(e.what());
    }
}
