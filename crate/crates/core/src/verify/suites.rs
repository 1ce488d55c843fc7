use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::Ratio;
use serde_json::json;

use super::{Check, Outcome, Runner, SuiteReport, VerifyConfig};
use crate::algebra::enumerate::prime_power_base;
use crate::algebra::{
    enumerate_monic, irreducibles_up_to, monic_below, PolyA, PowerSeries, RatK, Ring,
};
use crate::carlitz::{
    carlitz_coeffs, carlitz_cyclotomic, carlitz_factorial, u_carlitz_factorial, UPoly,
};
use crate::error::Result;
use crate::harmonic::{
    analytic_limit_check, finite_euler_carlitz_check, finite_mzv, finite_mzv_via_torsion,
    t_expansion, Harmonic, Index, UFormalBracket, ZetaEngine,
};
use crate::laurent::{argmax, dominance_profile, in_domain_d, Laurent, LaurentField};
use crate::shuffle::{homomorphism_check, ShuffleAlgebra};
use crate::uexp::{
    gamma_shuffle_check, hasse_schmidt_check, identity_check_explicit, local_expansion_direct,
    local_expansion_w, x_bracket_route_check, UExpansion,
};

fn positive_indices(max_weight: i64, max_depth: usize) -> Vec<Index> {
    Index::positive_up_to(max_weight, max_depth)
}

pub(super) fn u_sinnott(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let f = cfg.field()?;
    let r = cfg.r;
    let mut run = Runner::new(cfg);
    let top = r.pow(cfg.deg_max as u32);
    // Q_k = ∏_{deg a = k} Φ_a^C, so the product side is ∏_k Q_k^{⌊n/r^k⌋}.
    let one = UPoly::constant(PolyA::one(&f));
    let mut q = vec![one.clone()];
    for k in 1..=cfg.deg_max {
        let mut acc = one.clone();
        for a in enumerate_monic(&f, k) {
            acc = acc.mul(&carlitz_cyclotomic(&a)?);
        }
        q.push(acc);
    }
    let irr = irreducibles_up_to(&f, cfg.deg_max);
    for n in 0..=top {
        run.case(
            format!("u-sinnott/n={n}"),
            json!({"r": r, "n": n}),
            "Γ_{u,n+1} = ∏_{a≠1} Φ_a^C(u)^{⌊n/|a|⌋}",
            || {
                let lhs = u_carlitz_factorial(&f, n);
                let mut rhs = one.clone();
                for (k, qk) in q.iter().enumerate().skip(1) {
                    rhs = rhs.mul(&qk.pow(n / r.pow(k as u32)));
                }
                Ok(Outcome::exact(lhs == rhs, || {
                    "the two polynomials in u differ".into()
                }))
            },
        );
        run.case(
            format!("sinnott-at-zero/n={n}"),
            json!({"r": r, "n": n}),
            "Γ_{n+1} = ∏_v v^{Σ_e ⌊n/|v^e|⌋}",
            || {
                let lhs = carlitz_factorial(&f, n);
                let mut rhs = PolyA::one(&f);
                for v in &irr {
                    let mut e = 0;
                    let mut pe = r.pow(v.degree() as u32);
                    while pe <= n {
                        e += n / pe;
                        pe *= r.pow(v.degree() as u32);
                    }
                    rhs = rhs.mul(&v.pow(e));
                }
                let at_zero = u_carlitz_factorial(&f, n).coeff(0);
                Ok(Outcome::exact(lhs == rhs && at_zero == lhs, || {
                    format!("Γ_{{n+1}} = {lhs}, product = {rhs}, Γ_{{u,n+1}}(0) = {at_zero}")
                }))
            },
        );
    }
    Ok(run.finish("u-sinnott"))
}

pub(super) fn cyclotomic_zero(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let f = cfg.field()?;
    let mut run = Runner::new(cfg);
    for d in 1..=cfg.d_max {
        for a in enumerate_monic(&f, d) {
            run.case(
                format!("cyclotomic-zero/a={a}"),
                json!({"r": cfg.r, "a": a.to_string()}),
                "Φ_a^C(0) = v if a = v^e, else 1",
                || {
                    let got = carlitz_cyclotomic(&a)?.coeff(0);
                    let want = prime_power_base(&a)
                        .map(|(v, _)| v)
                        .unwrap_or_else(|| PolyA::one(&f));
                    Ok(Outcome::exact(got == want, || {
                        format!("Φ_a^C(0) = {got}, expected {want}")
                    }))
                },
            );
        }
    }
    Ok(run.finish("cyclotomic-zero"))
}

/// The first 20 admissible η = a/b with b ≤ 4, ordered by |η| then η.
pub fn admissible_etas(r: u64) -> Vec<Ratio<i64>> {
    let mut all = BTreeSet::new();
    for b in 1..=4i64 {
        for a in -12..=12i64 {
            all.insert(Ratio::new(a, b));
        }
    }
    let mut v: Vec<Ratio<i64>> = all.into_iter().filter(|&e| in_domain_d(r, e)).collect();
    let abs = |x: &Ratio<i64>| if *x < Ratio::from(0) { -*x } else { *x };
    v.sort_by_key(|x| (abs(x), *x));
    v.truncate(20);
    v
}

/// Sample points u ∈ L with |u| in the admissible range, as (label, u).
pub fn divergence_points(l: &Arc<LaurentField>) -> Vec<(String, Laurent)> {
    let e = l.e_ram();
    let mono = |k: i64| Laurent::monomial(l, 1, k);
    if l.r() == 2 {
        vec![
            ("θ^2".into(), mono(-2 * e)),
            ("θ^2+1".into(), mono(-2 * e).add(&Laurent::one(l))),
            ("θ^3+θ".into(), mono(-3 * e).add(&mono(-e))),
        ]
    } else {
        vec![
            ("θ^{-1}+θ^{-2}".into(), mono(e).add(&mono(2 * e))),
            ("1".into(), Laurent::one(l)),
            ("w^{-3}".into(), mono(-3)),
        ]
    }
}

/// min over a ∈ A_{+,d} of the exponent of |[a]_u|_∞, exact in the leading term.
pub fn min_bracket_exponent(u: &Laurent, d: usize) -> Result<Ratio<i64>> {
    const REL: i64 = 8;
    let l = u.field();
    let f = l.base().clone();
    let r = l.r();
    let uv = u.valuation().expect("sample point is nonzero");
    let ut = u.with_prec(uv + REL);
    let pows: Vec<Laurent> = (0..=d as u32).map(|i| ut.pow(r.pow(i) - 1)).collect();
    let mut best: Option<Ratio<i64>> = None;
    for a in enumerate_monic(&f, d) {
        let mut acc = Laurent::zero(l, crate::laurent::EXACT);
        for (c, pw) in carlitz_coeffs(&a).iter().zip(&pows) {
            if !c.is_zero() {
                acc = acc.add(&Laurent::embed_poly(l, c).mul(pw));
            }
        }
        let x = acc.abs_exponent()?;
        best = Some(best.map_or(x, |b| b.min(x)));
    }
    Ok(best.expect("A_{+,d} is nonempty"))
}

pub(super) fn dominance(cfg: &VerifyConfig) -> Result<SuiteReport> {
    const D_TOP: i64 = 12;
    const D_DIV: usize = 6;
    let r = cfg.r;
    let mut run = Runner::new(cfg);
    for eta in admissible_etas(r) {
        let inputs = json!({"r": r, "eta": eta.to_string(), "d_max": D_TOP});
        run.case(
            format!("dominance/unique/eta={eta}"),
            inputs.clone(),
            "uniqueness of the dominant Carlitz term",
            || {
                let bad: Vec<i64> = (1..=D_TOP).filter(|&d| !argmax(r, eta, d).1).collect();
                Ok(Outcome::exact(bad.is_empty(), || {
                    format!("maximum attained twice at d = {bad:?}")
                }))
            },
        );
        run.case(
            format!("dominance/stable/eta={eta}"),
            inputs,
            "stabilization of d − i0(d)",
            || {
                let kappa = dominance_profile(r, eta, D_TOP).kappa;
                let start = (-eta).ceil().to_integer().max(0) + 3;
                let gaps: Vec<i64> = (start..=D_TOP).map(|d| d - argmax(r, eta, d).0).collect();
                let ok = kappa.is_some() && gaps.iter().all(|&g| Some(g) == kappa);
                Ok(Outcome::exact(ok, || {
                    format!("κ = {kappa:?}, d − i0(d) for d ≥ {start}: {gaps:?}")
                }))
            },
        );
    }
    let l = LaurentField::period_field(&cfg.field()?)?;
    for (label, u) in divergence_points(&l) {
        run.case(
            format!("dominance/divergence/u={label}"),
            json!({"r": r, "u": label, "d_max": D_DIV}),
            "divergence of min |[a]_u|_∞",
            || {
                let ex = (1..=D_DIV)
                    .map(|d| min_bracket_exponent(&u, d))
                    .collect::<Result<Vec<_>>>()?;
                let ok = ex.windows(2).all(|w| w[0] < w[1]);
                Ok(Outcome::exact(ok, || {
                    format!(
                        "exponents for d = 1..{D_DIV}: {}",
                        ex.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                }))
            },
        );
    }
    Ok(run.finish("dominance"))
}

pub(super) fn shuffle_hom(cfg: &VerifyConfig) -> Result<SuiteReport> {
    const FORMAL_WEIGHT: i64 = 4;
    const FORMAL_DEGREE: usize = 3;
    let f = cfg.field()?;
    let zeta = ZetaEngine::new(&f);
    let alg = ShuffleAlgebra::new(cfg.r, f.p());
    let mut run = Runner::new(cfg);
    let weight = cfg.weight_max.unwrap_or(5);
    let words = positive_indices(weight, 2);
    let one = RatK::one(&f);
    for rr in &words {
        for ss in &words {
            let inputs = json!({"r": cfg.r, "lhs": rr.to_string(), "rhs": ss.to_string(), "d_max": cfg.d_max});
            run.case(
                format!("shuffle-hom/S/{rr}*{ss}"),
                inputs,
                "S_{<d}(x_𝐫 ∗ x_𝐬) = S_{<d}(𝐫)·S_{<d}(𝐬)",
                || {
                    for d in 1..=cfg.d_max {
                        if !homomorphism_check(&alg, rr, ss, &one, |s| {
                            Ok(zeta.truncated_sum(d as i64, s))
                        })? {
                            return Ok(Outcome::exact(false, || format!("d = {d}")));
                        }
                    }
                    Ok(Outcome::exact(true, String::new))
                },
            );
        }
    }
    let formal = positive_indices(weight.min(FORMAL_WEIGHT), 2);
    let degree = cfg.d_max.min(FORMAL_DEGREE);
    let hs: Vec<Harmonic<UFormalBracket>> = (0..=degree)
        .map(|d| Harmonic::new(UFormalBracket::new(&f, (cfg.r as usize).pow(d as u32))))
        .collect();
    for rr in &formal {
        for ss in &formal {
            let inputs =
                json!({"r": cfg.r, "lhs": rr.to_string(), "rhs": ss.to_string(), "d_max": degree});
            run.case(
                format!("shuffle-hom/Hu/{rr}*{ss}"),
                inputs,
                "H_{<d}(x_𝐫 ∗ x_𝐬; u) = H_{<d}(𝐫; u)·H_{<d}(𝐬; u)",
                || {
                    for (d, h) in hs.iter().enumerate().skip(1) {
                        let unit = PowerSeries::constant(one.clone(), h.bracket().order());
                        if !homomorphism_check(&alg, rr, ss, &unit, |s| h.h_lt(d, s))? {
                            return Ok(Outcome::exact(false, || format!("d = {d}")));
                        }
                    }
                    Ok(Outcome::exact(true, String::new))
                },
            );
        }
    }
    Ok(run.finish("shuffle-hom"))
}

pub(super) fn finite_euler_carlitz(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let f = cfg.field()?;
    let mut run = Runner::new(cfg);
    for d in 1..=cfg.deg_max {
        for n in enumerate_monic(&f, d) {
            for k in 1..=3u64 {
                let s = (cfg.r - 1) * k;
                let inputs = json!({"r": cfg.r, "n": n.to_string(), "s": s});
                run.case(
                    format!("finite-euler-carlitz/n={n}/s={s}"),
                    inputs,
                    "H_{<deg 𝔫}(s; λ_𝔫)·Γ_{s+1} = dBC_s(𝔫)·(𝔫λ_𝔫)^s",
                    || {
                        Ok(Outcome::exact(finite_euler_carlitz_check(&n, s)?, || {
                            "the two sides differ in the cyclotomic ring".into()
                        }))
                    },
                );
            }
        }
    }
    Ok(run.finish("finite-euler-carlitz"))
}

pub(super) fn analytic_limit(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let f = cfg.field()?;
    let zeta = ZetaEngine::new(&f);
    let mut run = Runner::new(cfg);
    for s in [vec![1], vec![2], vec![1, 1], vec![2, 1]] {
        let s = Index::new(s);
        let mut defects = Vec::new();
        for d in 1..=cfg.d_max {
            let n = PolyA::theta_pow(&f, d);
            let inputs =
                json!({"r": cfg.r, "n": n.to_string(), "index": s.to_string(), "prec": cfg.prec});
            let identity = "|H_{<deg 𝔫}(𝐬; λ_𝔫) − ζ_A(𝐬)|_∞ ≤ r^{r(−1+1/(r−1))−deg 𝔫+1−1/(r−1)}";
            let mut report = None;
            run.case(
                format!("analytic-limit/n={n}/s={s}"),
                inputs,
                identity,
                || {
                    let rep = analytic_limit_check(&zeta, &n, &s, cfg.prec)?;
                    let out = Outcome {
                        pass: rep.pass,
                        check: Check::Defect {
                            exponent: rep.defect,
                            bound: rep.bound,
                        },
                        detail: match rep.defect {
                            Some(_) => format!("resolved at w-precision {}", rep.prec),
                            None => format!(
                                "defect below r^{} at w-precision {}",
                                rep.resolved_to, rep.prec
                            ),
                        },
                    };
                    report = Some(rep);
                    Ok(out)
                },
            );
            defects.push(report.and_then(|r| r.defect));
        }
        let inputs =
            json!({"r": cfg.r, "index": s.to_string(), "deg": format!("1..{}", cfg.d_max)});
        run.case(
            format!("analytic-limit/decreasing/s={s}"),
            inputs,
            "strict decrease of the defect in deg 𝔫",
            || {
                let ok =
                    defects.iter().all(Option::is_some) && defects.windows(2).all(|w| w[1] < w[0]);
                let shown: Vec<String> = defects
                    .iter()
                    .map(|d| d.map_or("unresolved".into(), |x| x.to_string()))
                    .collect();
                Ok(Outcome::exact(ok, || {
                    format!("defect exponents {}", shown.join(", "))
                }))
            },
        );
    }
    Ok(run.finish("analytic-limit"))
}

/// Depth ≤ 2 indices with entries in [−2, 4], weight ≤ `max_weight`, at most
/// one non-positive entry and at least one positive one.
pub fn algebraic_limit_indices(max_weight: i64) -> Vec<Index> {
    (1..=2)
        .flat_map(|m| Index::all_with_entries(m, -2, 4))
        .filter(|s| s.weight() <= max_weight)
        .filter(|s| s.entries().iter().filter(|&&x| x <= 0).count() <= 1)
        .filter(|s| s.entries().iter().any(|&x| x > 0))
        .collect()
}

pub(super) fn algebraic_limit(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let f = cfg.field()?;
    let zeta = ZetaEngine::new(&f);
    let mut run = Runner::new(cfg);
    for s in algebraic_limit_indices(cfg.weight_max.unwrap_or(4)) {
        let inputs = json!({"r": cfg.r, "index": s.to_string(), "D_max": cfg.big_d_max});
        run.case(
            format!("algebraic-limit/s={s}"),
            inputs,
            "ζ_𝒜(𝐬) = H_{<deg v}(𝐬; λ_v) at λ_v = 0",
            || {
                let a = finite_mzv(&zeta, &s, cfg.big_d_max)?;
                let b = finite_mzv_via_torsion(&f, &s, cfg.big_d_max)?;
                let bad: Vec<String> = a
                    .components
                    .iter()
                    .zip(&b.components)
                    .filter(|(x, y)| x != y)
                    .map(|((v, x), (_, y))| format!("v = {v}: {x} vs {y}"))
                    .collect();
                Ok(Outcome::exact(bad.is_empty(), || bad.join("; ")))
            },
        );
    }
    Ok(run.finish("algebraic-limit"))
}

/// One case per component: the component of ζ_𝒜(s) at v must be zero.
/// Components with (r^{deg v} − 1) | s equal 1, so those cases fail.
pub(super) fn vanishing_reven(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let f = cfg.field()?;
    let zeta = ZetaEngine::new(&f);
    let mut run = Runner::new(cfg);
    for k in 1..=2i64 {
        let s = k * (cfg.r as i64 - 1);
        let vec = finite_mzv(&zeta, &Index::new([s]), cfg.d_max)?;
        for (v, x) in vec.components {
            let inputs = json!({"r": cfg.r, "s": s, "v": v.to_string(), "D_max": cfg.d_max});
            let q = (cfg.r as i64).pow(v.degree() as u32) - 1;
            run.case(
                format!("vanishing-reven/s={s}/v={v}"),
                inputs,
                "vanishing of ζ_𝒜(s) at r-even s",
                || {
                    Ok(Outcome::exact(x.is_zero(), || {
                        let why = if s % q == 0 {
                            format!(", and r^deg v − 1 = {q} divides s")
                        } else {
                            String::new()
                        };
                        format!("component is {x}{why}")
                    }))
                },
            );
        }
    }
    Ok(run.finish("vanishing-reven"))
}

pub(super) fn t_expansion_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    const TERMS: usize = 30;
    let f = cfg.field()?;
    let mut run = Runner::new(cfg);
    for s in [vec![1], vec![2], vec![1, 1], vec![2, 1]] {
        let s = Index::new(s);
        let inputs = json!({"r": cfg.r, "index": s.to_string(), "terms": TERMS});
        run.case(
            format!("t-expansion/s={s}"),
            inputs,
            "t-expansion of ζ_u with coefficients in A",
            || {
                let c = t_expansion(&f, &s, TERMS)?;
                let want = if s.depth() == 1 {
                    PolyA::one(&f)
                } else {
                    PolyA::zero(&f)
                };
                Ok(Outcome::exact(c.len() == TERMS && c[0] == want, || {
                    format!("constant term {} instead of {want}", c[0])
                }))
            },
        );
    }
    Ok(run.finish("t-expansion"))
}

pub(super) fn w_oracle(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let f = cfg.field()?;
    let order = 3 * (cfg.r as usize - 1) + 1;
    let mut run = Runner::new(cfg);
    for a in monic_below(&f, 3) {
        for s in -2..=4i64 {
            let inputs = json!({"r": cfg.r, "a": a.to_string(), "s": s, "order": order - 1});
            run.case(
                format!("w-oracle/a={a}/s={s}"),
                inputs,
                "[a]_u^{−s} = Σ_N W_N^{(s)}(a)·u^{N(r−1)} / a^s",
                || {
                    let w = local_expansion_w(&a, s, order);
                    let d = local_expansion_direct(&a, s, order);
                    let bad = (0..order).find(|&i| w.coeff(i) != d.coeff(i));
                    Ok(Outcome::exact(bad.is_none(), || {
                        format!("first disagreement at u^{}", bad.unwrap())
                    }))
                },
            );
        }
    }
    Ok(run.finish("w-oracle"))
}

pub(super) fn gamma_routes(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let f = cfg.field()?;
    let zeta = Arc::new(ZetaEngine::new(&f));
    let u = UExpansion::new(zeta.clone());
    let prec = cfg.prec;
    let mut run = Runner::new(cfg);
    let indices: Vec<Index> = (1..=2)
        .flat_map(|m| Index::all_with_entries(m, 1, 4))
        .collect();
    for s in &indices {
        for n in 0..=cfg.n_max {
            let inputs = json!({"r": cfg.r, "index": s.to_string(), "N": n, "prec": prec});
            run.case(
                format!("gamma-routes/N={n}/s={s}"),
                inputs,
                "γ_N by harmonic sums = γ_N by ζ_A",
                || {
                    let a = u.gamma_direct(n, s, prec)?;
                    let b = u.gamma_mzv(n, s, prec)?;
                    Ok(Outcome::certified(a.eq_to(&b, prec), prec, || {
                        format!("routes agree only below {}", a.agreement(&b))
                    }))
                },
            );
        }
        let inputs = json!({"r": cfg.r, "index": s.to_string(), "prec": prec});
        run.case(
            format!("gamma-routes/closed-form/s={s}"),
            inputs,
            "closed form for γ_1",
            || {
                let a = u.gamma_one_closed_form(s, prec)?;
                let b = u.gamma_mzv(1, s, prec)?;
                Ok(Outcome::certified(a.eq_to(&b, prec), prec, || {
                    format!("agree only below {}", a.agreement(&b))
                }))
            },
        );
    }
    for s in positive_indices(3, 2) {
        let inputs =
            json!({"r": cfg.r, "index": s.to_string(), "d_max": cfg.d_max, "N": cfg.n_max});
        run.case(
            format!("gamma-routes/x-bracket/s={s}"),
            inputs,
            "H^X_{<d}(𝐬) = Σ Π C(−s_j, n_j) S_{<d}(shifted 𝐬)",
            || {
                for d in 0..=cfg.d_max {
                    if !x_bracket_route_check(&zeta, &s, d, cfg.n_max)? {
                        return Ok(Outcome::exact(false, || format!("d = {d}")));
                    }
                }
                Ok(Outcome::exact(true, String::new))
            },
        );
    }
    Ok(run.finish("gamma-routes"))
}

pub(super) fn hasse_schmidt(cfg: &VerifyConfig) -> Result<SuiteReport> {
    const GAMMA_WEIGHT: i64 = 3;
    let f = cfg.field()?;
    let zeta = Arc::new(ZetaEngine::new(&f));
    let alg = ShuffleAlgebra::new(cfg.r, f.p());
    let prec = cfg.prec;
    let mut run = Runner::new(cfg);
    let weight = cfg.weight_max.unwrap_or(4);
    let words = positive_indices(weight, 2);
    for rr in &words {
        for ss in &words {
            let inputs = json!({"r": cfg.r, "lhs": rr.to_string(), "rhs": ss.to_string(), "N": cfg.n_max, "prec": prec});
            run.case(
                format!("hasse-schmidt/{rr}*{ss}"),
                inputs,
                "𝒟_N(x_𝐫 ∗ x_𝐬) = Σ_k 𝒟_k(x_𝐫)·𝒟_{N−k}(x_𝐬)",
                || {
                    for n in 0..=cfg.n_max {
                        if !hasse_schmidt_check(&zeta, &alg, n, rr, ss, prec)? {
                            return Ok(Outcome::certified(false, prec, || format!("N = {n}")));
                        }
                    }
                    Ok(Outcome::certified(true, prec, String::new))
                },
            );
        }
    }
    let u = UExpansion::new(zeta.clone());
    let small = positive_indices(weight.min(GAMMA_WEIGHT), 2);
    for rr in &small {
        for ss in &small {
            let inputs = json!({"r": cfg.r, "lhs": rr.to_string(), "rhs": ss.to_string(), "N": cfg.n_max, "prec": prec});
            run.case(
                format!("gamma-shuffle/{rr}*{ss}"),
                inputs,
                "γ̂_N(x_𝐫 ∗ x_𝐬) = Σ_k γ_k(𝐫)·γ_{N−k}(𝐬)",
                || {
                    for n in 0..=cfg.n_max {
                        if !gamma_shuffle_check(&u, &alg, n, rr, ss, prec)? {
                            return Ok(Outcome::certified(false, prec, || format!("N = {n}")));
                        }
                    }
                    Ok(Outcome::certified(true, prec, String::new))
                },
            );
        }
    }
    Ok(run.finish("hasse-schmidt"))
}

pub(super) fn explicit_identities(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let zeta = ZetaEngine::new(&cfg.field()?);
    let prec = cfg.prec;
    let mut run = Runner::new(cfg);
    for level in [1u8, 2] {
        for r1 in 1..=3i64 {
            for s1 in 1..=3i64 {
                let inputs = json!({"r": cfg.r, "N": level, "r1": r1, "s1": s1, "prec": prec});
                let identity = if level == 1 {
                    "first-order derivation identity"
                } else {
                    "second-order derivation identity"
                };
                run.case(
                    format!("explicit-identities/N={level}/({r1},{s1})"),
                    inputs,
                    identity,
                    || {
                        Ok(Outcome::certified(
                            identity_check_explicit(&zeta, level, r1, s1, prec)?,
                            prec,
                            || "the two sides differ".into(),
                        ))
                    },
                );
            }
        }
    }
    Ok(run.finish("explicit-identities"))
}
