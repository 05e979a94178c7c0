#include "ballcalc/cli.hpp"

#include "ballcalc/borcherds.hpp"
#include "ballcalc/kirwan.hpp"
#include "ballcalc/ledger.hpp"
#include "ballcalc/luna.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <sstream>

namespace ballcalc {

namespace {

using json = nlohmann::ordered_json;

struct CommandResult {
    std::string command;
    json inputs = json::object();
    json outputs = json::object();
    std::vector<std::string> provenance;
    int exit_code = 0;

    json to_json() const {
        json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["outputs"] = outputs;
        j["provenance"] = provenance;
        return j;
    }
};

// Human rendering: one "key: value" line per scalar, nested objects indented.
void render_human(const json& j, std::ostream& out, const std::string& indent) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (v.is_object()) {
            out << indent << it.key() << ":\n";
            render_human(v, out, indent + "  ");
        } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
            out << indent << it.key() << ":\n";
            for (const auto& e : v) {
                if (e.is_object()) {
                    out << indent << "  -\n";
                    render_human(e, out, indent + "    ");
                } else {
                    out << indent << "  " << e.dump() << "\n";
                }
            }
        } else if (v.is_array()) {
            out << indent << it.key() << ": ";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
            out << "\n";
        } else {
            out << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

std::string s(const Rational& r) { return to_string(r); }

json series_json(const QSeries& q) {
    json c = json::object();
    for (const auto& [k, v] : q.terms()) c[s(rat(k, q.grid()))] = to_string(v);
    json j;
    j["series"] = q.to_string();
    j["coefficients"] = c;
    if (q.truncation()) j["known_below"] = s(*q.truncation());
    return j;
}

json cmat_json(const CMat& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& e : r) row.push_back(to_string(e));
        rows.push_back(row);
    }
    return rows;
}

json betti_json(const BettiTable& b) { return b.even(); }

json combo_json(const HeegnerCombo& c) {
    json j = json::object();
    for (const auto& [key, m] : c.entries()) j["D(" + key.first + "," + s(key.second) + ")"] = s(m);
    return j;
}

json vvform_json(const VVForm& f) {
    json j = json::object();
    for (const auto& t : f.labels) j[t] = series_json(f[t]);
    return j;
}

// "1,0" -> {1, 0}
std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list: " + text);
        std::size_t pos = 0;
        long v = std::stol(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("not an integer: " + item);
        out.push_back(v);
    }
    return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations for the moduli of twelve points on the line and its ball quotient"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    bool as_json = false;
    std::string out_file;
    app.add_flag("--json", as_json, "machine readable output");
    app.add_option("--out", out_file, "also write the JSON result to this file");

    // empty means the subcommand default: 3 for theta, 2 otherwise
    std::string prec_text;
    auto add_prec = [&](CLI::App* sub) {
        sub->add_option("--prec", prec_text, "series known below q^prec, a rational such as 5/3");
    };

    CommandResult res;

    // lattice
    std::string lat_spec = "L_dm";
    auto* c_lattice = app.add_subcommand("lattice", "invariants and discriminant form of a lattice");
    c_lattice->add_option("--spec", lat_spec, "lattice such as L_dm, E8, U+U(3)+E8^2")->capture_default_str();

    // theta
    std::string theta_lat = "E8", theta_coset;
    auto* c_theta = app.add_subcommand("theta", "theta series of a coset of a negative definite lattice");
    c_theta->add_option("--lattice", theta_lat, "negative definite lattice")->capture_default_str();
    c_theta->add_option("--coset", theta_coset, "coset coordinates on the invariant factors, comma separated");

    // weil
    bool weil_dual = true;
    auto* c_weil = app.add_subcommand("weil", "symmetrized Weil representation of L_dm");
    c_weil->add_flag("--dual,!--primal", weil_dual, "dual representation (default) or the representation itself");

    // dimension
    long dim_k = 10;
    auto* c_dim = app.add_subcommand("dimension", "dimension formula for the dual symmetrized representation of L_dm");
    c_dim->add_option("--k", dim_k, "weight")->capture_default_str();

    // eisenstein
    long eis_k = 10;
    std::string eis_label = "1,0";
    auto* c_eis = app.add_subcommand("eisenstein", "level 3 Eisenstein series");
    c_eis->add_option("--k", eis_k, "weight 2, 6 or 10")->capture_default_str();
    c_eis->add_option("--label", eis_label, "label a1,a2 modulo 3")->capture_default_str();

    // obstruction
    auto* c_obs = app.add_subcommand("obstruction", "Eisenstein and cusp tuples of the weight 10 obstruction space");

    // borcherds
    std::string combo_text = "1,27,3", lift_name;
    auto* c_bor = app.add_subcommand("borcherds", "product existence for a Heegner combination, or the lift of a named input");
    c_bor->add_option("--combo", combo_text, "multiplicities m00,m4/3,m2/3 on D(-2), D(-2/3), D(-4/3)")->capture_default_str();
    c_bor->add_option("--lift", lift_name, "lift a named input instead: delta (II_2_26), e4-delta (II_2_18) or ma (L_dm)");

    // quasi-pullback
    std::string qp_lat = "E6+A2";
    auto* c_qp = app.add_subcommand("quasi-pullback", "quasi-pullback of the weight 12 form along a negative definite lattice");
    c_qp->add_option("--lattice", qp_lat, "negative definite lattice, or 0")->capture_default_str();

    // ma-input
    auto* c_ma = app.add_subcommand("ma-input", "theta product input form on L_dm");

    // kirwan
    int kir_cutoff = 10;
    auto* c_kir = app.add_subcommand("kirwan", "equivariant Poincare series and correction terms for 12 points");
    c_kir->add_option("--cutoff", kir_cutoff, "series modulo t^cutoff")->capture_default_str();

    // betti
    std::string betti_space = "MK";
    auto* c_betti = app.add_subcommand("betti", "Betti table of MK (Kirwan blow-up), tor (toroidal) or T (boundary)");
    c_betti->add_option("--space", betti_space, "MK, tor or T")->check(CLI::IsMember({"MK", "tor", "T"}))->capture_default_str();

    // ledger, t9, kequiv
    auto* c_ledger = app.add_subcommand("ledger", "divisor class ledger: solved coefficients and the consistency report");
    auto* c_t9 = app.add_subcommand("t9", "top self-intersection of the toroidal boundary");
    auto* c_kequiv = app.add_subcommand("kequiv", "3-adic obstruction to K-equivalence");

    // luna
    unsigned luna_seed = 20240611;
    auto* c_luna = app.add_subcommand("luna", "Luna slice, sextic discriminant and vanishing order of the 12-ic discriminant");
    c_luna->add_option("--seed", luna_seed, "seed for slice directions")->capture_default_str();

    // fixtures
    auto* c_fix = app.add_subcommand("fixtures", "cited Betti tables, not recomputed");

    for (auto* sub : {c_theta, c_eis, c_obs, c_ma}) add_prec(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        auto* sub = app.get_subcommands().front();
        Rational prec = !prec_text.empty() ? parse_rational(prec_text) : sub == c_theta ? Rational(3) : Rational(2);
        if (prec <= 0) throw std::invalid_argument("--prec must be positive");
        res.command = sub->get_name();

        if (sub == c_lattice) {
            Lattice l = build_standard(lat_spec);
            auto in = l.inertia();
            res.inputs["spec"] = lat_spec;
            res.outputs["rank"] = l.rank();
            res.outputs["det"] = s(l.det());
            res.outputs["signature"] = json::array({in.pos, in.neg});
            res.outputs["even"] = l.even();
            DiscGroup a(l);
            res.outputs["invariant_factors"] = a.invariant_factors();
            res.outputs["order"] = a.order();
            json census = json::object();
            if (a.order() <= 1000)
                for (const auto& [t, n] : classify_disc_elements(l)) census[t] = n;
            res.outputs["type_census"] = census;
            res.provenance = {"Gram matrix assembled from named blocks", "discriminant group by Smith normal form"};
        } else if (sub == c_theta) {
            Lattice l = build_standard(theta_lat);
            DiscGroup a(l);
            DiscGroup::Elem e = a.zero();
            if (!theta_coset.empty()) {
                auto v = parse_longs(theta_coset);
                if (v.size() != e.size())
                    throw std::invalid_argument("coset needs " + std::to_string(e.size()) + " coordinates");
                e = a.reduce(a.lift(v));
            }
            res.inputs["lattice"] = theta_lat;
            res.inputs["coset"] = e;
            res.inputs["prec"] = s(prec);
            res.outputs["theta"] = series_json(theta_series(l, e, prec));
            res.provenance = {"exact short vector enumeration on the coset"};
        } else if (sub == c_weil) {
            auto w = weil_rep(build_standard("L_dm"), weil_dual);
            auto r = symmetrize(w, ldm_type_order());
            res.inputs["dual"] = weil_dual;
            res.outputs["basis"] = r.basis;
            res.outputs["T"] = cmat_json(r.matT);
            res.outputs["S"] = cmat_json(r.matS);
            res.provenance = {"Weil representation on class sums of the discriminant form of U+U(3)+E8+E8"};
        } else if (sub == c_dim) {
            auto r = ldm_dual_rep();
            auto d = vvmf_dimension(dim_k, r.matT, r.matS);
            res.inputs["k"] = dim_k;
            res.outputs["total"] = s(d.total);
            res.outputs["eisenstein"] = s(d.eisenstein);
            res.outputs["cusp"] = s(d.cusp);
            res.outputs["d"] = d.d;
            res.outputs["alpha"] = json::array({s(d.alpha_S), s(d.alpha_ST), s(d.alpha_T)});
            res.provenance = {"Riemann-Roch dimension formula for vector valued modular forms"};
        } else if (sub == c_eis) {
            auto lab = parse_longs(eis_label);
            if (lab.size() != 2) throw std::invalid_argument("label needs two entries");
            res.inputs["k"] = eis_k;
            res.inputs["label"] = lab;
            res.inputs["prec"] = s(prec);
            res.outputs["E"] = series_json(eisenstein_level3(eis_k, lab[0], lab[1], prec));
            res.provenance = {"level 3 Eisenstein series with Bernoulli constant term and twisted divisor sums"};
        } else if (sub == c_obs) {
            res.inputs["prec"] = s(prec);
            auto e = obstruction_eisenstein(prec);
            auto cb = obstruction_cusp_basis(prec);
            auto rep = ldm_dual_rep();
            res.outputs["eisenstein"] = vvform_json(e);
            res.outputs["cusp_case_a"] = vvform_json(cb.case_a);
            res.outputs["cusp_case_b"] = vvform_json(cb.case_b);
            res.outputs["t_law"] = satisfies_t_law(e) && satisfies_t_law(cb.case_a) && satisfies_t_law(cb.case_b);
            res.provenance = {"weight 10 forms for the dual Weil representation of L_dm"};
        } else if (sub == c_bor) {
            if (!lift_name.empty()) {
                VVForm f;
                std::string ctx;
                if (lift_name == "delta") {
                    f.labels = {"00"};
                    f.comp["00"] = delta_series(3).inverse();
                    ctx = "II_2_26";
                } else if (lift_name == "e4-delta") {
                    f.labels = {"00"};
                    f.comp["00"] = theta_series(build_standard("E8"), {}, 2) * delta_series(3).inverse();
                    ctx = "II_2_18";
                } else if (lift_name == "ma") {
                    f = ma_input(1);
                    ctx = "L_dm";
                } else {
                    throw std::invalid_argument("unknown lift input: " + lift_name);
                }
                auto l = lift_weight_divisor(f, ctx);
                res.inputs["lift"] = lift_name;
                res.outputs["lattice"] = ctx;
                res.outputs["weight"] = s(l.weight);
                res.outputs["divisor"] = combo_json(l.divisor);
                res.provenance = {"weight is half the constant term, divisor from the principal part"};
            } else {
                auto m = parse_rationals(combo_text);
                if (m.size() != 3) throw std::invalid_argument("combo needs three multiplicities");
                auto c = ldm_combo(m[0], m[1], m[2]);
                auto cert = product_existence(c);
                res.inputs["combo"] = combo_json(c);
                res.outputs["exists"] = cert.exists;
                if (cert.exists) {
                    res.outputs["weight"] = s(cert.weight);
                    auto b = ball_divisor(c);
                    res.outputs["ball_divisor"] = {{"H_n", s(b.nodal)}, {"H_h", s(b.hyperelliptic)}, {"H_vt", s(b.vertical)}};
                }
                json v = json::object();
                for (const auto& [id, val] : cert.violated_pairings) v[id] = s(val);
                res.outputs["violated_pairings"] = v;
                res.provenance = {"pairing against the cusp forms of the obstruction space",
                                  "weight from the Eisenstein tuple"};
            }
        } else if (sub == c_qp) {
            Lattice r = qp_lat == "0" ? Lattice{{}, "0"} : build_standard(qp_lat);
            auto q = quasi_pullback(r);
            res.inputs["lattice"] = qp_lat;
            res.outputs["positive_roots"] = q.positive_roots;
            res.outputs["weight"] = s(q.weight);
            res.outputs["divisor"] = combo_json(q.divisor);
            res.provenance = {"weight 12 plus positive roots, divisors from short dual vectors"};
        } else if (sub == c_ma) {
            res.inputs["prec"] = s(prec);
            res.outputs["f"] = vvform_json(ma_input(prec));
            res.provenance = {"theta series of A2, E6 and their cosets divided by Delta"};
        } else if (sub == c_kir) {
            auto st = kirwan_strata(12);
            res.inputs["cutoff"] = kir_cutoff;
            res.outputs["strata_min_2d"] = st.min_nonzero_2d;
            res.outputs["strata_argmin"] = st.argmin;
            res.outputs["equivariant_ss"] = equivariant_series_ss(12, kir_cutoff).to_string();
            res.outputs["correction_main"] = correction_main(kir_cutoff).to_string();
            res.outputs["extra_term_bound"] = correction_extra_bound(slice_weights_12(), b_rho_12());
            res.outputs["total"] = (equivariant_series_ss(12, kir_cutoff) + correction_main(kir_cutoff)).to_string();
            res.provenance = {"Kirwan stratification for SL2 on binary forms of degree 12"};
        } else if (sub == c_betti) {
            res.inputs["space"] = betti_space;
            BettiTable b = betti_space == "MK"    ? kirwan_blowup_betti()
                           : betti_space == "tor" ? toroidal_compactification_betti()
                                                  : invariant_product_cohomology(4);
            res.outputs["even_betti"] = betti_json(b);
            res.outputs["poincare_dual"] = b.poincare_dual();
            res.provenance = {betti_space == "MK"    ? "semistable series plus main correction, completed by duality"
                              : betti_space == "tor" ? "cited intersection cohomology plus boundary above the middle degree"
                                                     : "swap invariants of the cohomology of P4 x P4"};
        } else if (sub == c_ledger) {
            auto nb = kirwan_boundary_normal_bundle();
            res.outputs["K_ord_blowup_boundary_coefficient"] = s(kirwan_ordered_boundary_coefficient());
            res.outputs["phi1_discrepancy"] = s(phi1_discrepancy_oracle());
            json kc = json::object();
            for (long k = 2; k <= 6; ++k) kc["D" + std::to_string(k)] = s(mbar0n_canonical_coefficient(12, k));
            res.outputs["M0_12_canonical_coefficients"] = kc;
            res.outputs["normal_bundle"] = json::array({s(nb.first), s(nb.second)});
            res.outputs["log_discrepancy"] = s(kirwan_log_discrepancy());
            res.outputs["hassett_keel_consistent"] = hassett_keel_ledger().rels.consistent();
            auto rep = ball_quotient_ledger().consistency_report();
            json forced = json::array();
            for (const auto& f : rep.forced_basis_relations) forced.push_back(f.to_string() + " = 0");
            json repairs = json::array();
            for (const auto& r : rep.repairs)
                repairs.push_back({{"relation", r.relation}, {"class", r.symbol}, {"printed", s(r.printed)}, {"repaired", s(r.repaired)}});
            res.outputs["ball_quotient_system_consistent"] = rep.consistent;
            res.outputs["forced"] = forced;
            res.outputs["conflicting"] = rep.conflicting;
            res.outputs["repairs"] = repairs;
            bool ok = !rep.consistent && rep.conflicting.size() == 1 && rep.repairs.size() == 1;
            res.outputs["verified"] = ok;
            if (!ok) res.exit_code = 2;
            res.provenance = {"Gaussian elimination over Q on the stacked canonical class relations"};
        } else if (sub == c_t9) {
            auto t = top_intersection_T9();
            res.outputs["top_power"] = to_string(t.top_power);
            res.outputs["components"] = to_string(t.components);
            res.outputs["T9"] = s(t.t9);
            res.provenance = {"normal bundle O(-1,-1) on each P4 x P4 boundary component"};
        } else if (sub == c_kequiv) {
            auto v = k_equiv_obstruction();
            res.outputs["delta9_required"] = s(v.delta9_required);
            res.outputs["valuation_at_3"] = v.valuation_at_3;
            res.outputs["contradiction"] = v.contradiction;
            if (!v.contradiction) res.exit_code = 2;
            res.provenance = {"(9 Delta)^9 = (16 T)^9 against stabilizers of order prime to 3"};
        } else if (sub == c_luna) {
            auto sd = slice_data();
            auto d = sextic_discriminant();
            int deg5 = 0;
            for (const auto& [e, c] : d.terms()) deg5 += MultiPoly::total_degree(e) == 5;
            auto vo = disc12_vanishing_order(luna_seed);
            res.inputs["seed"] = luna_seed;
            res.outputs["slice_weights"] = sd.weights;
            res.outputs["slice_spans_normal_space"] = sd.spans_normal_space;
            res.outputs["stabilizer_scalars"] = json::array({s(sd.diagonal_scalar), s(sd.antidiagonal_scalar)});
            res.outputs["sextic_discriminant_terms"] = d.size();
            res.outputs["epsilon5_coefficient"] = s(d.coeff({0, 0, 0, 0, 5}));
            res.outputs["degree5_terms"] = deg5;
            auto ws = sextic_isobaric_weights(d);
            res.outputs["isobaric_weights"] = std::vector<int>(ws.begin(), ws.end());
            res.outputs["disc12_orders"] = vo.orders;
            res.outputs["disc12_vanishing_order"] = vo.order;
            json dirs = json::array();
            for (const auto& dir : vo.directions) {
                json j = json::object();
                for (const auto& [i, c] : dir) j[std::to_string(i)] = s(c);
                dirs.push_back(j);
            }
            res.outputs["directions"] = dirs;
            res.provenance = {"Sylvester determinants by fraction-free elimination"};
        } else if (sub == c_fix) {
            json arr = json::array();
            for (const auto& f : cited_betti_fixtures())
                arr.push_back({{"space", f.space}, {"source", f.source}, {"even_betti", betti_json(f.table)}, {"recomputed", false}});
            res.outputs["tables"] = arr;
            res.provenance = {"cited data"};
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    json j = res.to_json();
    if (as_json)
        out << j.dump(2) << "\n";
    else {
        json body = j;
        body.erase("provenance");
        render_human(body, out, "");
        std::string joined;
        for (const auto& p : res.provenance) joined += (joined.empty() ? "" : "; ") + p;
        out << "provenance: " << joined << "\n";
    }
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) {
            err << "error: cannot write " << out_file << "\n";
            return 1;
        }
        f << j.dump(2) << "\n";
    }
    return res.exit_code;
}

}  // namespace ballcalc
