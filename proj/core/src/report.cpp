#include "nzeta/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "nzeta/invariants.hpp"
#include "nzeta/ranklow.hpp"

namespace nzeta {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kFloatDigits = 40;
constexpr const char* kToolVersion = "0.1.0";

std::string dec(const BigFloat& x) { return x.str(kFloatDigits); }

ordered_json rationals(const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

ordered_json meta(const RunConfig& cfg) {
    ordered_json m;
    m["tool"] = "nzeta";
    m["version"] = kToolVersion;
    m["precision_bits"] = static_cast<long>(cfg.precision);
    m["tolerance"] = cfg.tolerance;
    m["samples"] = cfg.samples;
    m["seed"] = cfg.seed;
    return m;
}

ordered_json curve_header(const Curve& c) {
    ordered_json j;
    j["name"] = c.name;
    j["q"] = c.q;
    j["g"] = c.g;
    j["p_coefficients"] = rationals(c.p_coeffs);
    return j;
}

ordered_json special_values_json(const Curve& c, int n_max) {
    SpecialValues sv = special_values(c, n_max);
    ordered_json j;
    ordered_json za = ordered_json::array(), nu = ordered_json::array();
    for (int k = 1; k <= n_max; ++k) {
        za.push_back(sv.zeta_at[static_cast<std::size_t>(k)].str());
        nu.push_back(sv.nu_hat[static_cast<std::size_t>(k)].str());
    }
    j["zeta_at"] = za;
    j["nu_hat"] = nu;
    return j;
}

ordered_json verdict_json(const RhVerdict& v) {
    ordered_json j;
    j["holds"] = v.holds;
    j["target"] = dec(v.target);
    j["max_rel_deviation"] = dec(v.max_rel_deviation);
    j["precision_bits"] = static_cast<long>(v.precision_bits);
    j["tolerance"] = v.tolerance;
    ordered_json roots = ordered_json::array();
    for (std::size_t i = 0; i < v.roots_T.size(); ++i) {
        ordered_json r;
        r["t_re"] = dec(v.roots_T[i].re);
        r["t_im"] = dec(v.roots_T[i].im);
        r["omega_re"] = dec(v.recip_roots[i].re);
        r["omega_im"] = dec(v.recip_roots[i].im);
        r["modulus"] = dec(v.moduli[i]);
        r["re_s"] = dec(v.s_lines[i]);
        roots.push_back(r);
    }
    j["roots"] = roots;
    return j;
}

ordered_json circle_json(const CircleVerdict& v) {
    ordered_json j;
    j["holds"] = v.holds;
    j["target_recip_modulus"] = dec(v.target);
    j["max_rel_deviation"] = dec(v.max_rel_deviation);
    j["precision_bits"] = static_cast<long>(v.precision_bits);
    ordered_json roots = ordered_json::array();
    for (std::size_t i = 0; i < v.roots.size(); ++i) {
        ordered_json r;
        r["t_re"] = dec(v.roots[i].re);
        r["t_im"] = dec(v.roots[i].im);
        r["recip_modulus"] = dec(v.moduli[i]);
        roots.push_back(r);
    }
    j["roots"] = roots;
    return j;
}

ordered_json inequality_json(const InequalityCheck& c) {
    ordered_json j;
    j["name"] = c.name;
    j["lower"] = c.lower;
    j["value"] = c.value;
    j["upper"] = c.upper;
    j["verdict"] = verdict_str(c.verdict);
    return j;
}

ordered_json bundle_json(const Curve& c, int n) {
    ZetaBundle b = bundle(c, n);
    ordered_json j;
    j["rank"] = n;
    j["Q"] = b.Q.str();
    j["numerator"] = rationals(b.numerator.coeffs());
    j["alpha"] = rationals(b.alpha);
    j["beta0"] = b.beta0.str();
    j["zhat"] = {{"num", rationals(b.zhat.num().coeffs())},
                 {"den", rationals(b.zhat.den().coeffs())}};
    j["cancellation"] = verify_cancellation(b.zhat, n, c.q, c.g);
    j["functional_equation"] = (b.zhat.invert_substitute(b.Q) == b.zhat);
    return j;
}

ordered_json invariants_json(const Curve& c, int n) {
    ordered_json j;
    j["rank"] = n;
    j["beta_total"] = beta_total(c, n).str();
    j["beta_zagier_0"] = beta_zagier(c, n, 0).str();
    j["beta_matches_residue"] = beta_relation_check(c, n);
    if (n >= 2) j["counting_miracle"] = counting_miracle_check(c, n);
    ordered_json al = ordered_json::array();
    for (long m = 0; m <= std::max(2, c.g); ++m) al.push_back(alpha_large(c, n, m).str());
    j["alpha_series"] = al;
    return j;
}

ordered_json bounds_json(const Curve& c, int n, const RunConfig& cfg) {
    ordered_json j;
    j["rank"] = n;
    RhVerdict v = rh_verdict(bundle(c, n), c.q, cfg.tolerance, cfg.precision);
    j["rh_holds"] = v.holds;
    ordered_json rough = ordered_json::array();
    for (const auto& rowv : check_rough_bounds(c, n, cfg.precision))
        rough.push_back(inequality_json(rowv));
    j["rough_bounds"] = rough;
    j["beta_product_bounds"] = inequality_json(check_beta_product_bounds(c, n, cfg.precision));
    j["beta_ratio_bounds"] = inequality_json(check_beta_ratio_bounds(c, n, cfg.precision));
    return j;
}

ordered_json predicate_json(const PredicateReport& r) {
    ordered_json j;
    j["samples"] = r.samples;
    j["violations"] = r.violations;
    j["boundary"] = r.boundary;
    j["boundary_violations"] = r.boundary_violations;
    j["identity_cases"] = r.identity;
    j["skipped_at_pole"] = r.skipped_at_pole;
    j["pass"] = r.pass();
    return j;
}

ordered_json rank3_json(const Curve& c, const RunConfig& cfg) {
    ordered_json j;
    Rank3Parts parts = rank3_parts(c);  // identities verified at construction
    j["identities_exact"] = true;
    j["ge2_numerator"] = rationals(parts.z_ge2.num().coeffs());

    CircleVerdict third = rh_third_line(parts, c, cfg.tolerance, cfg.precision);
    j["third_line"] = circle_json(third);

    ZetaBundle b3 = bundle(c, 3);
    RhVerdict full = rh_verdict(b3, c.q, cfg.tolerance, cfg.precision);
    j["rh"] = verdict_json(full);
    // no numerator root beyond the critical circle: |T| <= Q^{-1/2} + tol
    bool half_plane = true;
    BigFloat bound = BigFloat::of(1L, full.precision_bits) /
                         BigFloat::of(b3.Q, full.precision_bits).sqrt() +
                     BigFloat::of(cfg.tolerance, full.precision_bits);
    for (const auto& r : full.roots_T)
        if (r.abs() > bound) half_plane = false;
    j["no_zero_below_half_line"] = half_plane;

    UnitDiscReport disc = check_unit_disc_containment(c);
    ordered_json dj;
    dj["nu2_over_nu1_sq"] = disc.ratio.str();
    dj["threshold_q_over_q2m1"] = disc.threshold_a.str();
    dj["threshold_3_over_2qm1"] = disc.threshold_b.str();
    dj["ratio_gt_threshold_a"] = disc.ratio_gt_a;
    dj["ratio_gt_threshold_b"] = disc.ratio_gt_b;
    dj["radius_defined"] = disc.radius_defined;
    if (disc.radius_defined) {
        dj["center"] = disc.center.str();
        dj["radius"] = disc.radius.str();
    }
    dj["contained_in_unit_disc"] = disc.contained;
    j["unit_disc"] = dj;

    ordered_json preds = ordered_json::object();
    for (int a = 1; a <= 3; ++a)
        preds["reflected_a" + std::to_string(a)] =
            predicate_json(check_reflected_zeta_ratio(c, 3, a, cfg.samples, cfg.seed,
                                                      cfg.precision));
    for (int a = 1; a <= 2; ++a)
        preds["adjacent_a" + std::to_string(a)] =
            predicate_json(check_adjacent_zeta_ratio(c, 3, a, cfg.samples, cfg.seed,
                                                     cfg.precision));
    j["zeta_ratio_predicates"] = preds;
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string artin_report(const Curve& c, const RunConfig& cfg) {
    ordered_json j = curve_header(c);
    RatFunc z = artin_zeta(c);
    j["zhat"] = {{"num", rationals(z.num().coeffs())}, {"den", rationals(z.den().coeffs())}};
    j["functional_equation"] = (z.invert_substitute(Rational(c.q)) == z);
    j["special_values"] = special_values_json(c, std::max(3, cfg.rank_hi));
    j["metadata"] = meta(cfg);
    return dump(j);
}

std::string bundle_report(const Curve& c, int n, const RunConfig& cfg) {
    ordered_json j = curve_header(c);
    j["bundle"] = bundle_json(c, n);
    j["metadata"] = meta(cfg);
    return dump(j);
}

std::string invariants_report(const Curve& c, int n, const RunConfig& cfg) {
    ordered_json j = curve_header(c);
    j["invariants"] = invariants_json(c, n);
    j["metadata"] = meta(cfg);
    return dump(j);
}

std::string rh_report(const Curve& c, int n, const RunConfig& cfg) {
    ordered_json j = curve_header(c);
    j["rank"] = n;
    j["rh"] = verdict_json(rh_verdict(bundle(c, n), c.q, cfg.tolerance, cfg.precision));
    j["metadata"] = meta(cfg);
    return dump(j);
}

std::string bounds_report(const Curve& c, int n, const RunConfig& cfg) {
    ordered_json j = curve_header(c);
    j["bounds"] = bounds_json(c, n, cfg);
    j["metadata"] = meta(cfg);
    return dump(j);
}

std::string miracle_report(const Curve& c, int max_rank, const RunConfig& cfg) {
    ordered_json j = curve_header(c);
    ordered_json verdicts = ordered_json::array();
    // rank 1 carries the base identity alpha_1(0) = 1 the chain starts from
    ordered_json base;
    base["rank"] = 1;
    base["holds"] = (bundle(c, 1).alpha[0] == Rational(1));
    verdicts.push_back(base);
    for (int n = 2; n <= max_rank; ++n) {
        ordered_json v;
        v["rank"] = n;
        v["holds"] = counting_miracle_check(c, n);
        verdicts.push_back(v);
    }
    j["counting_miracle"] = verdicts;
    j["metadata"] = meta(cfg);
    return dump(j);
}

std::string rank3_report(const Curve& c, const RunConfig& cfg) {
    ordered_json j = curve_header(c);
    j["rank3"] = rank3_json(c, cfg);
    j["metadata"] = meta(cfg);
    return dump(j);
}

std::string full_report(const Catalog& cat, const RunConfig& cfg) {
    ordered_json j;
    j["metadata"] = meta(cfg);
    j["ranks"] = {cfg.rank_lo, cfg.rank_hi};
    ordered_json curves = ordered_json::array();
    for (const auto& c : cat.curves) {
        ordered_json cj = curve_header(c);
        cj["special_values"] = special_values_json(c, std::max(3, cfg.rank_hi));
        ordered_json per_rank = ordered_json::array();
        for (int n = cfg.rank_lo; n <= cfg.rank_hi; ++n) {
            ordered_json rj;
            rj["rank"] = n;
            rj["bundle"] = bundle_json(c, n);
            rj["invariants"] = invariants_json(c, n);
            rj["rh"] = verdict_json(rh_verdict(bundle(c, n), c.q, cfg.tolerance, cfg.precision));
            rj["bounds"] = bounds_json(c, n, cfg);
            per_rank.push_back(rj);
        }
        cj["ranks"] = per_rank;
        if (cfg.rank_lo <= 3 && 3 <= cfg.rank_hi) cj["rank3"] = rank3_json(c, cfg);
        curves.push_back(cj);
    }
    j["curves"] = curves;
    ordered_json diag = ordered_json::object();
    ordered_json errs = ordered_json::array();
    for (const auto& e : cat.errors) errs.push_back({{"name", e.name}, {"error", e.message}});
    diag["errors"] = errs;
    diag["warnings"] = cat.warnings;
    j["diagnostics"] = diag;
    return dump(j);
}

std::string scatter_csv(const Catalog& cat, const RunConfig& cfg) {
    std::ostringstream os;
    os << "curve,rank,root_re,root_im,modulus,re_s\n";
    for (const auto& c : cat.curves) {
        for (int n = cfg.rank_lo; n <= cfg.rank_hi; ++n) {
            RhVerdict v = rh_verdict(bundle(c, n), c.q, cfg.tolerance, cfg.precision);
            for (std::size_t i = 0; i < v.roots_T.size(); ++i)
                os << c.name << "," << n << "," << dec(v.roots_T[i].re) << ","
                   << dec(v.roots_T[i].im) << "," << dec(v.moduli[i]) << ","
                   << dec(v.s_lines[i]) << "\n";
        }
        if (cfg.rank_lo <= 3 && 3 <= cfg.rank_hi) {
            Rank3Parts parts = rank3_parts(c);
            CircleVerdict third = rh_third_line(parts, c, cfg.tolerance, cfg.precision);
            BigFloat nlogq = BigFloat::of(3L, third.precision_bits) *
                             BigFloat::of(c.q, third.precision_bits).log();
            for (std::size_t i = 0; i < third.roots.size(); ++i) {
                BigFloat re_s = -(third.roots[i].abs().log()) / nlogq;
                os << c.name << ",3:ge2," << dec(third.roots[i].re) << ","
                   << dec(third.roots[i].im) << "," << dec(third.moduli[i]) << ","
                   << dec(re_s) << "\n";
            }
        }
    }
    return os.str();
}

}  // namespace nzeta
