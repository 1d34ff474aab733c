#include "lipcex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lipcex {

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Rng seeded_rng(const VerifyConfig& cfg, const std::string& check) {
    return Rng(cfg.seed ^ fnv1a(check));
}

std::string q_string(double q) { return q == kInf ? "inf" : std::to_string(q); }

std::string eps_key(double eps) {
    std::string s = std::to_string(eps);
    while (s.size() > 3 && s.back() == '0') s.pop_back();
    return s;
}

}  // namespace

ordered_json VerifyConfig::to_json() const {
    ordered_json j;
    j["p"] = p;
    j["theta"] = theta;
    j["q"] = q == kInf ? ordered_json("inf") : ordered_json(q);
    j["n_max"] = n_max;
    j["N_max"] = big_n_max;
    j["sample_size"] = sample_size;
    j["pair_samples"] = pair_samples;
    j["witness_count"] = witness_count;
    j["tol"] = tol;
    j["seed"] = seed;
    return j;
}

ordered_json CheckResult::to_json() const {
    ordered_json j;
    j["check"] = name;
    j["params"] = params;
    j["certificate"] = certificate;
    j["margin"] = margin;
    j["hard"] = hard;
    j["verdict"] = pass ? "pass" : "fail";
    return j;
}

ordered_json scan_to_json(const ScanCertificate& c) {
    ordered_json j;
    j["threshold"] = c.threshold;
    j["checked_from"] = c.checked_from;
    j["checked_to"] = c.checked_to;
    j["monotone_from"] = c.monotone_from;
    j["minimal"] = c.minimal;
    return j;
}

const std::vector<std::string>& known_operators() {
    static const std::vector<std::string> names{"lambda", "mtilde", "q",  "t1", "t2",
                                                "t3",     "t4",     "t5", "t6", "v"};
    return names;
}

StepFunction dyadic_psi(int N, double p) {
    const IntervalFamily fam = IntervalFamily::dyadic();
    return StepFunction::indicator(fam.lo(N), fam.hi(N), std::exp2(N / p));
}

StepFunction block_psi(int N, double p) {
    return StepFunction::indicator(std::exp2(N), std::exp2(N + 1), std::exp2(-N / p));
}

StepFunction geometric_psi(const IntervalFamily& fam, int N) {
    return StepFunction::indicator(fam.lo(N), fam.hi(N), std::exp2(N) - 1.0);
}

namespace {

// ---------------------------------------------------------------- operators

enum class OpKind { step, profile };

struct AnyOperator {
    OpKind kind = OpKind::step;
    Operator step;
    ProfileOperator profile;
    bool sequence_domain = false;  // t4: samples come from embedded sequences
    StepFunction weight;           // lambda/mtilde: the fixed weight
};

StepFunction fixed_weight(const VerifyConfig& cfg) {
    Rng rng = seeded_rng(cfg, "weight");
    return StepGenerator{}(rng).abs();
}

AnyOperator build_operator(const std::string& name, const VerifyConfig& cfg) {
    AnyOperator op;
    if (name == "t1") {
        op.step = make_t1(cfg.n_max);
    } else if (name == "t2") {
        op.step = make_t2(cfg.n_max);
    } else if (name == "t3") {
        op.step = make_t3(cfg.n_max);
    } else if (name == "t4") {
        op.step = make_t4_embedded();
        op.sequence_domain = true;
    } else if (name == "q") {
        op.step = make_q_dyadic(cfg.n_max);
    } else if (name == "v") {
        op.step = make_v(cfg.p, cfg.n_max);
    } else if (name == "lambda") {
        op.weight = fixed_weight(cfg);
        op.step = make_lambda(op.weight);
    } else if (name == "mtilde") {
        op.weight = fixed_weight(cfg);
        op.step = make_m_tilde(op.weight);
    } else if (name == "t5") {
        op.kind = OpKind::profile;
        op.profile = make_t5(cfg.p, cfg.big_n_max, cfg.big_n_max);
    } else if (name == "t6") {
        op.kind = OpKind::profile;
        op.profile = make_t6(cfg.p, cfg.big_n_max, cfg.big_n_max);
    } else {
        throw DomainError("unknown operator: " + name);
    }
    return op;
}

StepFunction draw_sample(const AnyOperator& op, Rng& rng) {
    if (op.sequence_domain) return SequenceGenerator{}(rng).to_step();
    return StepGenerator{}(rng);
}

// ------------------------------------------------------------------ helpers

double step_norm(const StepFunction& f, bool l1) {
    return l1 ? f.norm_l1() : f.norm_linf();
}

double pl_norm(const PiecewiseLinear& f, bool l1) {
    return l1 ? f.lp_norm(1.0) : f.sup_norm();
}

struct Containment {
    bool ok = true;
    double margin = kInf;
    std::string why;

    void fail(const std::string& reason) {
        ok = false;
        if (why.empty()) why = reason;
    }
    void bound(double m) { margin = std::min(margin, m); }
};

// Checks that g is built from whole family intervals (plus a constant run
// into the accumulation point) with 0 <= g <= env(n) on I_n.
void check_family_envelope(Containment& c, const StepFunction& g,
                           const IntervalFamily& fam, const IndexEnvelope& env) {
    const bool dyadic = fam.kind() == IntervalFamily::Kind::dyadic;
    for (const Piece& piece : g.pieces()) {
        if (piece.value < 0.0) {
            c.fail("negative value");
            return;
        }
        if (dyadic && piece.lo == 0.0) {
            int j = 1;
            while (j <= fam.max_live() && fam.hi(j) > piece.hi) ++j;
            if (j > fam.max_live() || fam.hi(j) != piece.hi) {
                c.fail("tail piece not aligned with the family");
                return;
            }
            if (env.stable_from(piece.value) > j) {
                c.fail("tail value exceeds the envelope at depth");
                return;
            }
            for (int n = j; n <= std::min(fam.max_live(), j + 64); ++n)
                c.bound(env.value(n) - piece.value);
            continue;
        }
        if (!dyadic && piece.hi == fam.accumulation_point()) {
            const int n = fam.index_of(piece.lo);
            if (n < 1 || fam.lo(n) != piece.lo) {
                c.fail("tail piece not aligned with the family");
                return;
            }
            if (env.stable_from(piece.value) > n) {
                c.fail("tail value exceeds the envelope at depth");
                return;
            }
            for (int k = n; k <= std::min(fam.max_live(), n + 64); ++k)
                c.bound(env.value(k) - piece.value);
            continue;
        }
        int n = fam.index_of(piece.lo);
        if (n < 1 || fam.lo(n) != piece.lo) {
            c.fail("piece does not start at a family endpoint");
            return;
        }
        while (true) {
            c.bound(env.value(n) - piece.value);
            if (c.margin < 0.0) {
                c.fail("value exceeds the envelope");
                return;
            }
            const double x = fam.hi(n);
            if (x == piece.hi) break;
            if (x > piece.hi) {
                c.fail("piece end is not a family endpoint");
                return;
            }
            n += dyadic ? -1 : 1;
            if (n < 1 || n > fam.max_live()) {
                c.fail("piece leaves the family");
                return;
            }
        }
    }
}

}  // namespace

// ----------------------------------------------------------------- suites

std::vector<CheckResult> zero_fixed_check(const std::string& name,
                                          const VerifyConfig& cfg) {
    const AnyOperator op = build_operator(name, cfg);
    CheckResult r;
    r.name = "zero_fixed";
    r.params["operator"] = name;
    if (op.kind == OpKind::step) {
        r.pass = op.step(StepFunction{}).is_zero();
    } else {
        const PiecewiseLinear out = op.profile(StepFunction{});
        r.pass = out.sup_norm() == 0.0;
    }
    r.certificate["exact"] = true;
    return {r};
}

std::vector<CheckResult> pointwise_inequality_checks(const VerifyConfig& cfg) {
    Rng rng = seeded_rng(cfg, "pointwise");
    const StepGenerator gen;
    double worst_lambda = kInf, worst_m = kInf, worst_mtilde = kInf;
    for (int i = 0; i < cfg.pair_samples; ++i) {
        const StepFunction f = gen(rng), g = gen(rng);
        const StepFunction v = gen(rng).abs();
        const StepFunction din = (f - g).abs();
        const auto gap = [&](const StepFunction& a, const StepFunction& b) {
            return StepFunction::min_gap((a - b).abs(), din);
        };
        worst_lambda = std::min(worst_lambda, gap(lambda_v(f, v), lambda_v(g, v)));
        worst_m = std::min(worst_m, gap(m_v(f, v), m_v(g, v)));
        worst_mtilde = std::min(worst_mtilde, gap(m_tilde_v(f, v), m_tilde_v(g, v)));
    }
    auto mk = [&](const std::string& name, double worst) {
        CheckResult r;
        r.name = name;
        r.params["pairs"] = cfg.pair_samples;
        r.certificate["tolerance"] = 0.0;
        r.margin = worst;
        r.pass = worst >= 0.0;
        return r;
    };
    return {mk("pointwise_lambda", worst_lambda), mk("pointwise_m", worst_m),
            mk("pointwise_mtilde", worst_mtilde)};
}

std::vector<CheckResult> lipschitz_sweep(const std::string& name,
                                         const VerifyConfig& cfg) {
    const AnyOperator op = build_operator(name, cfg);
    std::vector<CheckResult> out;
    for (const bool l1 : {true, false}) {
        Rng rng = seeded_rng(cfg, "lipschitz." + name + (l1 ? ".l1" : ".linf"));
        double max_ratio = 0.0, max_bound_ratio = 0.0;
        ordered_json failing;
        for (int i = 0; i < cfg.pair_samples; ++i) {
            const StepFunction f = draw_sample(op, rng);
            const StepFunction g = draw_sample(op, rng);
            const double din = step_norm(f - g, l1);
            double dout, bout, bin;
            if (op.kind == OpKind::step) {
                const StepFunction tf = op.step(f), tg = op.step(g);
                dout = step_norm(tf - tg, l1);
                bout = step_norm(tf, l1);
            } else {
                const PiecewiseLinear tf = op.profile(f), tg = op.profile(g);
                dout = pl_norm(tf - tg, l1);
                bout = pl_norm(tf, l1);
            }
            bin = step_norm(f, l1);
            if (bin > 0.0) max_bound_ratio = std::max(max_bound_ratio, bout / bin);
            if (din == 0.0) continue;
            const double ratio = dout / din;
            if (ratio > max_ratio) {
                max_ratio = ratio;
                if (ratio > 1.0 + 1e-12)
                    failing = ordered_json{{"f", step_to_json(f)}, {"g", step_to_json(g)}};
            }
        }
        CheckResult r;
        r.name = l1 ? "lipschitz_l1" : "lipschitz_linf";
        r.params["operator"] = name;
        r.params["pairs"] = cfg.pair_samples;
        r.certificate["max_ratio"] = max_ratio;
        r.certificate["max_bound_ratio"] = max_bound_ratio;
        if (!failing.is_null() && !failing.empty()) r.certificate["failing"] = failing;
        r.margin = 1.0 + 1e-12 - std::max(max_ratio, max_bound_ratio);
        r.pass = r.margin >= 0.0;
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

struct WitnessPlan {
    double gamma_p = 1.0;
    int n_start = 1;
    bool expect_fixed_point = false;  // T(psi_N) == psi_N bit for bit
    std::vector<std::pair<std::string, ScanCertificate>> scans;
};

WitnessPlan witness_plan(const std::string& name, double p) {
    WitnessPlan plan;
    if (name == "t1") {
        const ScanCertificate s = sigma_threshold(p);
        plan.gamma_p = 1.0;
        plan.n_start = s.threshold;  // bound holds from sigma_p on
        plan.expect_fixed_point = true;
        plan.scans.emplace_back("sigma_p", s);
    } else if (name == "t2") {
        const ScanCertificate s = tau_threshold(p);
        plan.gamma_p = 1.0 - std::exp2(-1.0 / p);
        plan.n_start = s.threshold + 1;
        plan.scans.emplace_back("tau_p", s);
    } else if (name == "t3") {
        const ScanCertificate s1 = sigma_threshold(p);
        const ScanCertificate s2 = tau_threshold(p);
        plan.gamma_p = 1.0 - std::exp2(-1.0 / p);
        plan.n_start = std::max(s1.threshold, s2.threshold) + 1;
        plan.scans.emplace_back("sigma_p", s1);
        plan.scans.emplace_back("tau_p", s2);
    } else if (name == "t4") {
        const ScanCertificate s = nu4_threshold(p);
        plan.gamma_p = 1.0;
        plan.n_start = s.threshold + 1;
        plan.expect_fixed_point = true;
        plan.scans.emplace_back("nu_p", s);
    } else {
        throw DomainError("no sandwich witness for operator " + name);
    }
    return plan;
}

}  // namespace

std::vector<CheckResult> noncompact_witness(const std::string& name,
                                            const VerifyConfig& cfg) {
    const double p = cfg.p;
    std::vector<CheckResult> out;

    if (name == "t5" || name == "t6") {
        const AnyOperator op = build_operator(name, cfg);
        const IntervalFamily fam = IntervalFamily::geometric(p);
        const T5Operator t5(p, cfg.big_n_max, cfg.big_n_max);
        const int n_hi = std::min({12, fam.max_live(), t5.terms()});
        const double lp_bound = 1.0 / (1.0 + std::sqrt(2.0));
        double lp_margin = kInf, l1_margin = kInf;
        ordered_json rows = ordered_json::array();
        bool fixed_ok = true;
        for (int n = 1; n <= n_hi; ++n) {
            const StepFunction psi = geometric_psi(fam, n);
            const PiecewiseLinear img = op.profile(psi);
            const double lp = img.lp_norm(p);
            const double l1 = img.lp_norm(1.0);
            const double l1_cap = std::exp2(-n * (p - 1.0));
            lp_margin = std::min(lp_margin, lp - lp_bound);
            l1_margin = std::min(l1_margin, l1_cap - l1);
            rows.push_back(ordered_json{{"N", n}, {"lp", lp}, {"l1", l1}});
            if (name == "t6" && !(img == t5(psi))) fixed_ok = false;
        }
        CheckResult r;
        r.name = "witness_norm_collapse";
        r.params = ordered_json{{"operator", name}, {"p", p}, {"N_range", n_hi}};
        r.certificate["ramp_terms"] = t5.terms();
        r.certificate["exact_from"] = op.profile.exact_from;
        r.certificate["lp_lower_bound"] = lp_bound;
        r.certificate["rows"] = rows;
        r.certificate["verdict"] =
            "images stay uniformly bounded below in L^p while the L^1 norms vanish, "
            "so no subsequence converges in L^p";
        if (name == "t6") r.certificate["t6_equals_t5_on_psi"] = fixed_ok;
        r.margin = std::min(lp_margin, l1_margin);
        r.pass = r.margin >= -kTolDyadic && (name != "t6" || fixed_ok);
        out.push_back(std::move(r));
        return out;
    }

    const WitnessPlan plan = witness_plan(name, p);
    const AnyOperator op = build_operator(name, cfg);
    const auto psi_of = [&](int n) {
        return name == "t4" ? block_psi(n, p) : dyadic_psi(n, p);
    };

    std::vector<int> ns(static_cast<size_t>(cfg.witness_count));
    for (int i = 0; i < cfg.witness_count; ++i) ns[static_cast<size_t>(i)] = plan.n_start + i;

    // sandwich gamma_p psi_N <= T(psi_N) <= psi_N
    double sandwich_margin = kInf;
    bool fixed_ok = true;
    ordered_json first_violation;
    std::vector<StepFunction> images;
    for (int n : ns) {
        const StepFunction psi = psi_of(n);
        const StepFunction img = op.step(psi);
        images.push_back(img);
        const double scale = psi.norm_linf();
        const double gap =
            std::min(StepFunction::min_gap(psi.scaled(plan.gamma_p), img),
                     StepFunction::min_gap(img, psi)) /
            scale;
        if (gap < sandwich_margin) {
            sandwich_margin = gap;
            if (gap < -cfg.tol && first_violation.empty())
                first_violation = ordered_json{{"N", n},
                                               {"psi", step_to_json(psi)},
                                               {"image", step_to_json(img)}};
        }
        if (plan.expect_fixed_point && !(img == psi)) fixed_ok = false;
    }
    CheckResult sw;
    sw.name = "witness_sandwich";
    sw.params = ordered_json{{"operator", name},
                             {"p", p},
                             {"N_from", ns.front()},
                             {"N_to", ns.back()},
                             {"gamma_p", plan.gamma_p}};
    for (const auto& [label, cert] : plan.scans) sw.certificate[label] = scan_to_json(cert);
    sw.certificate["fixed_point"] = plan.expect_fixed_point ? (fixed_ok ? "exact" : "violated")
                                                            : "not expected";
    if (!first_violation.empty()) sw.certificate["first_violation"] = first_violation;
    sw.margin = sandwich_margin;
    sw.pass = sandwich_margin >= -cfg.tol && fixed_ok;
    out.push_back(std::move(sw));

    // pairwise separation in L^p and L^{p,q}
    const double req_lp = plan.gamma_p * std::exp2(1.0 / p);
    const double req_lorentz =
        plan.gamma_p * (cfg.q == kInf ? 1.0 : std::pow(p / cfg.q, 1.0 / cfg.q));
    double lp_margin = kInf, lorentz_margin = kInf, eq_err = 0.0;
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < images.size(); ++i) {
        for (size_t j = i + 1; j < images.size(); ++j) {
            const StepFunction diff = images[i] - images[j];
            const double d_lp = diff.norm_lp(p);
            const double d_lor = lorentz_quasinorm(diff, p, cfg.q);
            lp_margin = std::min(lp_margin, d_lp - req_lp);
            lorentz_margin = std::min(lorentz_margin, d_lor - req_lorentz);
            if (plan.expect_fixed_point)
                eq_err = std::max(eq_err, rel_err(d_lp, std::exp2(1.0 / p)));
            rows.push_back(ordered_json{
                {"N", ns[i]}, {"N'", ns[j]}, {"d_lp", d_lp}, {"d_lorentz", d_lor}});
        }
    }
    CheckResult ds;
    ds.name = "witness_distances";
    ds.params = ordered_json{{"operator", name},
                             {"p", p},
                             {"q", q_string(cfg.q)},
                             {"required_lp", req_lp},
                             {"required_lorentz", req_lorentz}};
    ds.certificate["pairs"] = rows;
    if (plan.expect_fixed_point) {
        ds.certificate["lp_distance_equals_2^(1/p)_rel_err"] = eq_err;
        if (eq_err > kTolDyadic) lp_margin = std::min(lp_margin, -1.0);
    }
    ds.margin = std::min(lp_margin, lorentz_margin);
    ds.pass = ds.margin >= -cfg.tol;
    out.push_back(std::move(ds));
    return out;
}

std::vector<CheckResult> compactness_evidence(const std::string& name,
                                              const VerifyConfig& cfg) {
    const AnyOperator op = build_operator(name, cfg);
    Rng rng = seeded_rng(cfg, "containment." + name);
    std::vector<CheckResult> out;

    const bool l1_space = name == "t1" || name == "v";
    const double bound = name == "t2" ? 3.0 : (name == "t5" || name == "t6" ? 2.0 : 1.0);

    // bounded samples and their images
    std::vector<StepFunction> step_images;
    std::vector<PiecewiseLinear> pl_images;
    Containment cont;
    const IntervalFamily dyfam = IntervalFamily::dyadic();
    const IntervalFamily geofam =
        op.kind == OpKind::profile || name == "v" ? IntervalFamily::geometric(cfg.p)
                                                  : IntervalFamily::dyadic();
    const double lip_cap =
        op.kind == OpKind::profile ? lip_bound(bound, cfg.p) : 0.0;

    for (int i = 0; i < cfg.sample_size; ++i) {
        StepFunction f = draw_sample(op, rng);
        const double norm = l1_space ? f.norm_l1() : f.norm_linf();
        if (norm > 0.0) f = f.scaled(rng.uniform(0.1, 1.0) * bound / norm);
        if (op.kind == OpKind::step) {
            const StepFunction g = op.step(f);
            step_images.push_back(g);
            if (name == "t1") {
                check_family_envelope(cont, g, dyfam, t1_envelope());
            } else if (name == "v") {
                check_family_envelope(cont, g, geofam, v_envelope());
            } else if (name == "t2") {
                const int box_n = static_cast<int>(std::ceil(bound));
                IndexEnvelope box;
                box.value = [box_n](int) { return static_cast<double>(box_n); };
                box.stable_from = [](double) { return 1; };
                check_family_envelope(cont, g, dyfam, box);
                if (!g.is_zero() &&
                    (box_n < 2 || g.support_begin() < dyfam.lo(box_n - 1)))
                    cont.fail("support extends past I_{N-1}");
            } else if (name == "t4") {
                std::vector<Piece> blocks;
                const double end = std::max(g.support_end(), 2.0);
                for (int k = 1; std::exp2(k) < end; ++k)
                    blocks.push_back(Piece{std::exp2(k), std::exp2(k + 1), 1.0 / k});
                const StepFunction v4{std::move(blocks)};
                const double gap = StepFunction::min_gap(g, v4);
                cont.bound(gap);
                if (gap < 0.0) cont.fail("image exceeds the weight v");
                if (g.norm_linf() > 0.0 &&
                    StepFunction::min_gap(StepFunction{}, g) < 0.0)
                    cont.fail("negative image entry");
            }
        } else {
            const PiecewiseLinear g = op.profile(f);
            pl_images.push_back(g);
            cont.bound((1.0 + kTolDyadic) * bound - g.sup_norm());
            cont.bound((1.0 + cfg.tol) * lip_cap - g.lipschitz_constant());
            if (g.min_value() < 0.0) cont.fail("negative profile");
            if (cont.margin < 0.0) cont.fail("sup or Lipschitz bound exceeded");
        }
    }

    CheckResult cres;
    cres.name = "containment";
    cres.params = ordered_json{{"operator", name},
                               {"space", l1_space ? "L1" : "Linf"},
                               {"bound", bound},
                               {"samples", cfg.sample_size}};
    if (op.kind == OpKind::profile) {
        cres.params["lip_bound"] = lip_cap;
        cres.certificate["analytic"] = "sup <= bound and Lipschitz <= L(bound, p)";
    } else {
        cres.certificate["analytic"] = "image lies in the operator's compact envelope set";
    }
    if (!cont.why.empty()) cres.certificate["violation"] = cont.why;
    cres.margin = cont.margin == kInf ? 0.0 : cont.margin;
    cres.pass = cont.ok;
    out.push_back(std::move(cres));

    // greedy epsilon-net sizes (informational)
    CheckResult net;
    net.name = "epsilon_net";
    net.params = ordered_json{{"operator", name},
                              {"space", l1_space ? "L1" : "Linf"},
                              {"samples", cfg.sample_size}};
    ordered_json sizes = ordered_json::object();
    std::vector<double> eps_grid{0.2, 0.1, 0.05};
    int prev = 0;
    bool monotone = true;
    for (double eps : eps_grid) {
        int covers = 0;
        if (op.kind == OpKind::step) {
            std::vector<size_t> centers;
            for (size_t i = 0; i < step_images.size(); ++i) {
                bool covered = false;
                for (size_t c : centers)
                    if (step_norm(step_images[i] - step_images[c], l1_space) <= eps) {
                        covered = true;
                        break;
                    }
                if (!covered) centers.push_back(i);
            }
            covers = static_cast<int>(centers.size());
        } else {
            std::vector<size_t> centers;
            for (size_t i = 0; i < pl_images.size(); ++i) {
                bool covered = false;
                for (size_t c : centers)
                    if ((pl_images[i] - pl_images[c]).sup_norm() <= eps) {
                        covered = true;
                        break;
                    }
                if (!covered) centers.push_back(i);
            }
            covers = static_cast<int>(centers.size());
        }
        sizes[eps_key(eps)] = covers;
        if (prev != 0 && covers < prev) monotone = false;  // grid descends in eps
        prev = covers;
    }
    net.certificate["cover_sizes"] = sizes;
    net.certificate["nondecreasing_as_eps_shrinks"] = monotone;
    net.margin = 0.0;
    net.pass = true;
    net.hard = false;
    out.push_back(std::move(net));

    // summable-envelope tail indices
    if (name == "t1" || name == "t4" || name == "v") {
        CheckResult tail;
        tail.name = "tail_index";
        tail.params = ordered_json{{"operator", name}};
        ordered_json cert = ordered_json::object();
        bool ok = true;
        for (double eps : eps_grid) {
            int n_eps = 0;
            double tail_mass = 0.0;
            if (name == "t1") {
                // sum_{n >= N} 1/n^2 < eps
                const double total = std::numbers::pi * std::numbers::pi / 6.0;
                double partial = 0.0;
                n_eps = 1;
                while (total - partial >= eps) {
                    partial += 1.0 / (static_cast<double>(n_eps) * n_eps);
                    ++n_eps;
                }
                double direct = 0.0;
                for (int n = n_eps; n < n_eps + 2000000; ++n)
                    direct += 1.0 / (static_cast<double>(n) * n);
                tail_mass = direct + 1.0 / (n_eps + 2000000.0 - 1.0);  // integral bound
                ok = ok && tail_mass < eps;
            } else if (name == "t4") {
                const int k = static_cast<int>(std::floor(1.0 / eps)) + 1;
                n_eps = 1 << k;
                tail_mass = t4_weight(n_eps);
                ok = ok && tail_mass < eps;
            } else {  // v: sum_{N >= K} (2^N - 1) 2^{-Np} < eps
                const auto mass_from = [&](int k) {
                    double mass = 0.0;  // (2^n - 1) 2^{-np} = 2^{-n(p-1)} - 2^{-np}
                    for (int n = k;; ++n) {
                        const double term =
                            std::exp2(-n * (cfg.p - 1.0)) - std::exp2(-n * cfg.p);
                        mass += term;
                        if (term < 1e-300 || term < 1e-18 * mass) break;
                    }
                    return mass;
                };
                n_eps = 1;
                while (mass_from(n_eps) >= eps) ++n_eps;
                tail_mass = mass_from(n_eps);
                ok = ok && tail_mass < eps;
            }
            cert[eps_key(eps)] =
                ordered_json{{"N_eps", n_eps}, {"tail_mass", tail_mass}};
        }
        tail.certificate = cert;
        tail.margin = 0.0;
        tail.pass = ok;
        out.push_back(std::move(tail));
    }
    return out;
}

std::vector<CheckResult> interpolation_bound_check(const std::string& name,
                                                   const VerifyConfig& cfg) {
    const AnyOperator op = build_operator(name, cfg);
    Rng rng = seeded_rng(cfg, "interp." + name);
    const CoupleOrder couple =
        name == "t4" ? CoupleOrder::l1_linf : CoupleOrder::linf_l1;
    InterpParams params;
    params.theta = cfg.theta;
    params.q = cfg.q;
    params.couple = couple;
    params.validate();

    double k_margin = kInf, norm_margin = kInf;
    const int samples = std::min(cfg.sample_size, 256);
    for (int i = 0; i < samples; ++i) {
        const StepFunction f = draw_sample(op, rng);
        const KProfile kf = k_profile(f);
        KProfile kg;
        double out_interp;
        if (op.kind == OpKind::step) {
            const StepFunction g = op.step(f);
            kg = k_profile(g);
            out_interp = interp_norm(kg, params);
        } else {
            const PiecewiseLinear g = op.profile(f);
            kg = k_profile(g);
            out_interp = interp_norm(kg, params);
        }
        for (int k = -20; k <= 20; ++k) {
            const double t = std::exp2(k);
            const double kin = kf.eval(t), kout = kg.eval(t);
            k_margin = std::min(k_margin, (kin - kout) / std::max(1.0, kin));
        }
        norm_margin =
            std::min(norm_margin, interp_norm(kf, params) + 1e-8 - out_interp);
    }

    CheckResult kc;
    kc.name = "k_contraction";
    kc.params = ordered_json{{"operator", name},
                             {"samples", samples},
                             {"t_grid", "2^k, k = -20..20"}};
    kc.margin = k_margin;
    kc.pass = k_margin >= -kTolDyadic;
    CheckResult ic;
    ic.name = "interp_contraction";
    ic.params = ordered_json{{"operator", name},
                             {"theta", cfg.theta},
                             {"q", q_string(cfg.q)},
                             {"samples", samples},
                             {"couple", couple == CoupleOrder::l1_linf ? "(L1,Linf)"
                                                                       : "(Linf,L1)"}};
    ic.certificate["slack"] = 1e-8;
    ic.margin = norm_margin;
    ic.pass = norm_margin >= 0.0;
    return {kc, ic};
}

std::vector<CheckResult> threshold_checks(const std::string& name,
                                          const VerifyConfig& cfg) {
    std::vector<std::pair<std::string, ScanCertificate>> scans;
    if (name == "t1") scans.emplace_back("sigma_p", sigma_threshold(cfg.p));
    if (name == "t2") scans.emplace_back("tau_p", tau_threshold(cfg.p));
    if (name == "t3") {
        scans.emplace_back("sigma_p", sigma_threshold(cfg.p));
        scans.emplace_back("tau_p", tau_threshold(cfg.p));
    }
    if (name == "t4") scans.emplace_back("nu_p", nu4_threshold(cfg.p));
    std::vector<CheckResult> out;
    if (scans.empty()) return out;
    CheckResult r;
    r.name = "thresholds";
    r.params = ordered_json{{"operator", name}, {"p", cfg.p}};
    bool ok = true;
    for (const auto& [label, cert] : scans) {
        r.certificate[label] = scan_to_json(cert);
        ok = ok && cert.minimal && cert.monotone_from <= cert.checked_to;
    }
    if (name == "t3") {
        const int nu = std::max(r.certificate["sigma_p"]["threshold"].get<int>(),
                                r.certificate["tau_p"]["threshold"].get<int>());
        r.certificate["nu_p"] = nu;
    }
    r.margin = 0.0;
    r.pass = ok;
    out.push_back(std::move(r));
    return out;
}

std::vector<CheckResult> verify_operator(const std::string& name,
                                         const VerifyConfig& cfg) {
    std::vector<CheckResult> checks;
    auto append = [&](std::vector<CheckResult> more) {
        for (auto& c : more) checks.push_back(std::move(c));
    };
    append(threshold_checks(name, cfg));
    append(zero_fixed_check(name, cfg));
    if (name == "lambda" || name == "mtilde") append(pointwise_inequality_checks(cfg));
    append(lipschitz_sweep(name, cfg));
    if (name == "t1" || name == "t2" || name == "t3" || name == "t4" || name == "t5" ||
        name == "t6")
        append(noncompact_witness(name, cfg));
    if (name == "t1" || name == "t2" || name == "t4" || name == "t5" || name == "t6" ||
        name == "v")
        append(compactness_evidence(name, cfg));
    append(interpolation_bound_check(name, cfg));
    return checks;
}

ordered_json verify_report(const std::string& name, const VerifyConfig& cfg) {
    ordered_json report;
    report["schema"] = 1;
    report["command"] = "verify";
    report["operator"] = name;
    report["params"] = cfg.to_json();
    ordered_json ops = ordered_json::object();
    bool all_pass = true;
    const std::vector<std::string> names =
        name == "all" ? known_operators() : std::vector<std::string>{name};
    for (const std::string& n : names) {
        ordered_json checks = ordered_json::array();
        bool op_pass = true;
        for (const CheckResult& c : verify_operator(n, cfg)) {
            checks.push_back(c.to_json());
            if (c.hard && !c.pass) op_pass = false;
        }
        ops[n] = ordered_json{{"checks", checks}, {"verdict", op_pass ? "pass" : "fail"}};
        all_pass = all_pass && op_pass;
    }
    report["operators"] = ops;
    report["verdict"] = all_pass ? "pass" : "fail";
    return report;
}

bool report_passed(const ordered_json& report) {
    return report.at("verdict").get<std::string>() == "pass";
}

}  // namespace lipcex
