//! Acceptance suite: one pass/fail line per criterion.
//!
//! Runs without the libtest harness so that every criterion reports its own
//! line, timing and detail.  The process exits non-zero if any criterion
//! fails.

use std::process::Command;
use std::time::{Duration, Instant};

use thermolaws::base::{gibbs_state, Hamiltonian, ProbDist, ThermalContext, Weights};
use thermolaws::catalysis::{
    classify_regime, embezzle_erase, embezzler, tensor_catalyst_report, verify_catalyst, Catalyst, Regime,
};
use thermolaws::channels::{lp_dmajorization, EmbeddingSpec};
use thermolaws::majorize::{curve_dominates_tol, majorizes, thermo_curve};
use thermolaws::quantum::{
    dephase, hat_divergence, quantum_second_law_check, random_energy_preserving_unitary, thermal_op,
    tilde_divergence, DensityMatrix, Family, QuantumVerdict, StinespringChannel,
};
use thermolaws::renyi::{
    divergence_weights, entropy_weights, full_alpha_grid, property_alpha_grid, smooth_d0, smooth_d_inf,
    smooth_h0, smooth_hinf,
};
use thermolaws::sampling::{
    random_dist, random_dist_with_zeros, random_gibbs_preserving, random_hamiltonian, random_rational_dist,
    random_stochastic, seeded_rng,
};
use thermolaws::secondlaws::{check_transition, two_condition_check, CheckMode, Verdict};
use thermolaws::work::{wit_transition_check, work_distance};
use thermolaws::zeroeth::{extraction_simulation, is_completely_passive};
use thermolaws::ExtendedReal;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed <= limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

/// `a ≤ b + tol` on the extended reals.
fn le(a: ExtendedReal, b: ExtendedReal, tol: f64) -> bool {
    match (a.finite(), b.finite()) {
        (Some(x), Some(y)) => x <= y + tol,
        _ => a <= b,
    }
}

fn pd(w: &[f64]) -> ProbDist {
    ProbDist::new(w.to_vec()).unwrap()
}

fn jonathan_plenio() -> Outcome {
    let start = Instant::now();
    let p = ProbDist::from_rational_strs(&["2/5", "2/5", "1/10", "1/10"]).unwrap();
    let q = ProbDist::from_rational_strs(&["1/2", "1/4", "1/4", "0"]).unwrap();
    let r = ProbDist::from_rational_strs(&["3/5", "2/5"]).unwrap();
    let h = Hamiltonian::trivial(4);
    let ctx = ThermalContext::new(1.0).unwrap();
    ensure(!majorizes(&q, &p) && !majorizes(&p, &q), || "majorization holds in some direction".into())?;
    ensure(verify_catalyst(&q, &p, &Catalyst::trivial(r), &h, &ctx).unwrap(), || "catalyst rejected".into())?;
    let fwd = check_transition(&q, &p, &h, &ctx, CheckMode::ExactAllAlpha).unwrap();
    ensure(fwd.verdict == Verdict::Feasible, || format!("forward verdict {:?}", fwd.verdict))?;
    let back = check_transition(&p, &q, &h, &ctx, CheckMode::ExactAllAlpha).unwrap();
    ensure(back.verdict == Verdict::Infeasible, || format!("reverse verdict {:?}", back.verdict))?;
    let t = start.elapsed();
    within(t, Duration::from_secs(1))?;
    Ok(format!("forward margin {:?}, reverse margin {:?}, {t:.2?}", fwd.margin, back.margin))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded_rng(2024);
    let (mut feasible, mut total) = (0, 0);
    for k in 0..500 {
        let d = 2 + k % 4;
        let ctx = ThermalContext::new(0.2 + 2.0 * rand::Rng::gen::<f64>(&mut rng)).unwrap();
        let h = random_hamiltonian(&mut rng, d, 3.0);
        let g = gibbs_state(&h, &ctx);
        let p = random_dist(&mut rng, d);
        let p_prime = if k % 2 == 0 {
            random_gibbs_preserving(&mut rng, &g, 6).apply(&p).unwrap()
        } else {
            random_dist(&mut rng, d)
        };
        let lp = lp_dmajorization(&p, &g, &p_prime, &g).map_err(|e| format!("instance {k}: {e}"))?;
        let curves = curve_dominates_tol(
            &thermo_curve(&p, &h, &ctx).unwrap(),
            &thermo_curve(&p_prime, &h, &ctx).unwrap(),
            1e-8,
        )
        .unwrap();
        ensure(lp.is_feasible() == curves, || format!("instance {k}: LP {} vs curves {curves}", lp.is_feasible()))?;
        feasible += usize::from(curves);
        total += 1;
    }
    let t = start.elapsed();
    within(t, Duration::from_secs(60))?;
    Ok(format!("{total}/{total} agree ({feasible} feasible), {t:.2?}"))
}

fn monotonicity_suite() -> Outcome {
    let mut rng = seeded_rng(3);
    let grid = full_alpha_grid();
    let mut checks = 0usize;
    for k in 0..1000 {
        let d = 2 + k % 4;
        let (p, q) = if k % 3 == 0 {
            (random_dist_with_zeros(&mut rng, d, 0.3), random_dist_with_zeros(&mut rng, d, 0.3))
        } else {
            (random_dist(&mut rng, d), random_dist(&mut rng, d))
        };
        let lambda = random_stochastic(&mut rng, 2 + (k / 4) % 4, d);
        let (lp, lq) = (lambda.apply(&p).unwrap(), lambda.apply(&q).unwrap());
        let (r, s) = (random_dist(&mut rng, 2), random_dist(&mut rng, 2));
        let (pr, qs) = (p.tensor(&r), q.tensor(&s));
        let mut last: Option<ExtendedReal> = None;
        for &a in &grid {
            let dpq = divergence_weights(p.weights(), q.weights(), a);
            let dl = divergence_weights(lp.weights(), lq.weights(), a);
            ensure(le(dl, dpq, 1e-9), || format!("data processing, instance {k}, α={a}: {dl:?} > {dpq:?}"))?;
            if a >= 0.0 {
                if let Some(prev) = last {
                    ensure(le(prev, dpq, 1e-9), || format!("monotonicity, instance {k}, α={a}"))?;
                }
                last = Some(dpq);
            }
            let joint = divergence_weights(pr.weights(), qs.weights(), a);
            let sum = dpq.checked_add(divergence_weights(r.weights(), s.weights(), a));
            if let (Some(j), Some(sv)) = (joint.finite(), sum.and_then(ExtendedReal::finite)) {
                ensure((j - sv).abs() <= 1e-9, || format!("additivity, instance {k}, α={a}: {j} vs {sv}"))?;
            }
            checks += 3;
        }
    }
    Ok(format!("1000 instances × {} orders, {checks} comparisons, 0 violations", grid.len()))
}

fn embedding_lemma() -> Outcome {
    let mut rng = seeded_rng(4);
    let mut grid = full_alpha_grid();
    for a in [0.0, 1.0, f64::INFINITY, f64::NEG_INFINITY] {
        if !grid.contains(&a) {
            grid.push(a);
        }
    }
    let mut worst: f64 = 0.0;
    for k in 0..200 {
        let d = 2 + k % 4;
        let gamma = random_rational_dist(&mut rng, d, 6 + (k % 7) as u32);
        if !gamma.is_full_rank() {
            continue;
        }
        let spec = EmbeddingSpec::from_rational(&gamma).unwrap();
        let p = if k % 2 == 0 { random_dist(&mut rng, d) } else { random_dist_with_zeros(&mut rng, d, 0.3) };
        let emb = spec.embed(&p).unwrap();
        let eta = ProbDist::uniform(spec.total()).to_float();
        for &a in &grid {
            let lhs = divergence_weights(p.weights(), gamma.weights(), a);
            let rhs = divergence_weights(emb.weights(), eta.weights(), a);
            match (lhs.finite(), rhs.finite()) {
                (Some(x), Some(y)) => {
                    worst = worst.max((x - y).abs());
                    ensure((x - y).abs() <= 1e-9, || format!("instance {k}, α={a}: {x} vs {y}"))?;
                }
                _ => ensure(lhs == rhs, || format!("instance {k}, α={a}: {lhs:?} vs {rhs:?}"))?,
            }
        }
    }
    Ok(format!("200 block specs, worst deviation {worst:.1e}"))
}

fn work_identities() -> Outcome {
    let mut rng = seeded_rng(5);
    let mut worst: f64 = 0.0;
    for k in 0..200 {
        let d = 2 + k % 4;
        let ctx = ThermalContext::new(0.3 + 2.0 * rand::Rng::gen::<f64>(&mut rng)).unwrap();
        let h = random_hamiltonian(&mut rng, d, 2.0);
        let g = gibbs_state(&h, &ctx);
        let p = if k % 4 == 0 { random_dist_with_zeros(&mut rng, d, 0.3) } else { random_dist(&mut rng, d) };
        let kt = ctx.kt();
        let ext = work_distance(&p, &g, &h, &ctx).unwrap().to_f64();
        let d0 = kt * divergence_weights(p.weights(), g.weights(), 0.0).to_f64();
        let form = work_distance(&g, &p, &h, &ctx).unwrap().to_f64();
        let dinf = -kt * divergence_weights(p.weights(), g.weights(), f64::INFINITY).to_f64();
        worst = worst.max((ext - d0).abs()).max((form - dinf).abs());
        ensure((ext - d0).abs() <= 1e-8, || format!("instance {k}: extraction {ext} vs {d0}"))?;
        ensure((form - dinf).abs() <= 1e-8, || format!("instance {k}: formation {form} vs {dinf}"))?;

        let p_prime = random_dist(&mut rng, d);
        let wd = work_distance(&p, &p_prime, &h, &ctx).unwrap();
        if let Some(w) = wd.finite() {
            let below = wit_transition_check(&p, &p_prime, &h, &ctx, w - 1e-6).unwrap();
            let above = wit_transition_check(&p, &p_prime, &h, &ctx, w + 1e-6).unwrap();
            ensure(below.is_feasible() && above.verdict == Verdict::Infeasible, || {
                format!("instance {k}: wit at W = {w} ± 1e-6 gives {:?} / {:?}", below.verdict, above.verdict)
            })?;
        }
    }
    Ok(format!("200 instances, worst deviation {worst:.1e}, wit flips at every work distance"))
}

fn tensor_catalyst() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded_rng(6);
    let mut pairs = 0;
    let mut max_residual: f64 = 0.0;
    while pairs < 20 {
        let (p, q) = (random_dist(&mut rng, 2), random_dist(&mut rng, 2));
        if entropy_weights(p.weights(), 1.0) >= entropy_weights(q.weights(), 1.0) {
            continue;
        }
        pairs += 1;
        let mut last = f64::INFINITY;
        for n in 2..=6 {
            let r = tensor_catalyst_report(&p, &q, n).map_err(|e| e.to_string())?;
            ensure(r.residual <= last + 1e-9, || format!("pair {pairs}: residual rose at n={n}"))?;
            ensure(r.continuity_holds && r.entropy_bound_holds, || format!("pair {pairs}: bound fails at n={n}"))?;
            max_residual = max_residual.max(r.residual);
            last = r.residual;
        }
    }
    let t = start.elapsed();
    within(t, Duration::from_secs(300))?;
    Ok(format!("20 pairs × n=2..6, largest residual {max_residual:.1e}, {t:.2?}"))
}

fn embezzling() -> Outcome {
    let ctx = ThermalContext::new(1.0).unwrap();
    let mut last = f64::INFINITY;
    let mut dists = Vec::new();
    for k in [6, 10, 14] {
        let n = 1usize << k;
        let r = embezzle_erase(2, n).unwrap();
        ensure(r.trace_dist < last, || format!("distance did not decrease at n=2^{k}"))?;
        ensure(r.fidelity_bound_holds, || format!("fidelity bound fails at n=2^{k}"))?;
        last = r.trace_dist;
        dists.push(format!("{:.4}", r.trace_dist));
        if k == 14 {
            let e = embezzler(n).unwrap().state;
            let reg = classify_regime(&e, &r.final_catalyst, &Hamiltonian::trivial(n), &ctx, 0.3).unwrap();
            ensure(reg.regime == Regime::Embezzling, || format!("classified as {:?}", reg.regime))?;
            dists.push(format!("restore work {:?}", reg.work_to_restore));
        }
    }
    Ok(format!("trace distances {}", dists.join(", ")))
}

fn smoothing_lemmas() -> Outcome {
    let mut rng = seeded_rng(8);
    let lower: Vec<f64> = property_alpha_grid().into_iter().filter(|&a| a > 0.0 && a < 1.0).collect();
    let upper: Vec<f64> = property_alpha_grid().into_iter().filter(|&a| a > 1.0 && a.is_finite()).collect();
    let mut checks = 0usize;
    for k in 0..500 {
        let d = 2 + k % 5;
        let p = random_dist(&mut rng, d);
        let q = random_dist(&mut rng, d);
        for eps in [0.3, 0.1, 0.01] {
            let c = (1.0f64 / eps).ln();
            let (_, h0) = smooth_h0(&p, eps).unwrap();
            let (_, hinf) = smooth_hinf(&p, eps).unwrap();
            let (_, dinf) = smooth_d_inf(&p, &q, eps).unwrap();
            let (_, d0) = smooth_d0(&p, &q, eps).unwrap();
            for &a in &lower {
                let h = entropy_weights(p.weights(), a).to_f64();
                ensure(h >= h0.to_f64() - c / (1.0 - a) - 1e-9, || format!("H_0 lemma, instance {k}, ε={eps}, α={a}"))?;
                let dv = divergence_weights(p.weights(), q.weights(), a).to_f64();
                ensure(dv <= d0.to_f64() + c / (1.0 - a) + 1e-9, || format!("D_0 lemma, instance {k}, ε={eps}, α={a}"))?;
                checks += 2;
            }
            for &a in &upper {
                let h = entropy_weights(p.weights(), a).to_f64();
                ensure(hinf.to_f64() + c / (a - 1.0) >= h - 1e-9, || format!("H_∞ lemma, instance {k}, ε={eps}, α={a}"))?;
                let dv = divergence_weights(p.weights(), q.weights(), a).to_f64();
                ensure(dv >= dinf.to_f64() - c / (a - 1.0) - 1e-9, || format!("D_∞ lemma, instance {k}, ε={eps}, α={a}"))?;
                checks += 2;
            }
        }
    }
    let ctx = ThermalContext::new(1.0).unwrap();
    let mut passes = 0;
    for k in 0..500 {
        let d = 2 + k % 4;
        let h = random_hamiltonian(&mut rng, d, 2.0);
        let p = if k % 2 == 0 { ProbDist::pure(d, 0).to_float() } else { random_dist(&mut rng, d) };
        let p_prime = random_dist(&mut rng, d);
        let two = two_condition_check(&p, &p_prime, &h, &ctx, 0.1).unwrap();
        let full = check_transition(&p, &p_prime, &h, &ctx, CheckMode::ExactAllAlpha).unwrap();
        ensure(!(two.verdict == Verdict::SufficientPass && full.verdict == Verdict::Infeasible), || {
            format!("instance {k}: sufficient pass on an infeasible transition")
        })?;
        passes += usize::from(two.verdict == Verdict::SufficientPass);
    }
    Ok(format!("{checks} lemma inequalities hold; two-condition check passed {passes}/500, never against an infeasible verdict"))
}

fn quantum_layer() -> Outcome {
    let mut rng = seeded_rng(9);
    // Commuting reduction.
    let grid = property_alpha_grid();
    for k in 0..50 {
        let d = 2 + k % 3;
        let (p, q) = (random_dist(&mut rng, d), random_dist(&mut rng, d));
        let u = thermolaws::quantum::linalg::haar_unitary(&mut rng, d);
        let rot = |x: &ProbDist| {
            DensityMatrix::new(&u * DensityMatrix::from_diagonal(x).matrix() * u.adjoint()).unwrap()
        };
        let (rho, sigma) = (rot(&p), rot(&q));
        for &a in &grid {
            let c = divergence_weights(p.weights(), q.weights(), a);
            let t = tilde_divergence(&rho, &sigma, a).unwrap();
            ensure(t.approx_eq(c, 1e-8), || format!("tilde reduction, instance {k}, α={a}"))?;
            if a >= 0.5 {
                let h = hat_divergence(&rho, &sigma, a).unwrap();
                ensure(h.approx_eq(c, 1e-8), || format!("hat reduction, instance {k}, α={a}"))?;
            }
        }
    }
    // Data processing under random channels.
    let hat_grid = Family::Hat.alpha_grid();
    let tilde_grid = Family::Tilde.alpha_grid();
    for k in 0..300 {
        let d_in: usize = 2 + k % 3;
        let d_out = 2 + (k / 3) % 3;
        let max_env = 16 / d_out;
        let min_env = d_in.div_ceil(d_out);
        let d_env = min_env + (k / 9) % (max_env - min_env + 1);
        let ch = StinespringChannel::random(&mut rng, d_in, d_out, d_env).unwrap();
        let (rho, sigma) = (DensityMatrix::random(&mut rng, d_in), DensityMatrix::random(&mut rng, d_in));
        let (lr, ls) = (ch.apply(&rho).unwrap(), ch.apply(&sigma).unwrap());
        for &a in &hat_grid {
            let (before, after) = (hat_divergence(&rho, &sigma, a).unwrap(), hat_divergence(&lr, &ls, a).unwrap());
            ensure(le(after, before, 1e-8), || format!("hat data processing, channel {k}, α={a}"))?;
        }
        for &a in &tilde_grid {
            let (before, after) = (tilde_divergence(&rho, &sigma, a).unwrap(), tilde_divergence(&lr, &ls, a).unwrap());
            ensure(le(after, before, 1e-8), || format!("tilde data processing, channel {k}, α={a}"))?;
        }
    }
    // Diagonal catalysts and soundness of the necessary conditions.
    let mut worst: f64 = 0.0;
    for k in 0..100 {
        let ctx = ThermalContext::new(0.5 + rand::Rng::gen::<f64>(&mut rng)).unwrap();
        let level = |rng: &mut rand_chacha::ChaCha8Rng| Hamiltonian::new(vec![0.0, f64::from(rand::Rng::gen_range(rng, 1..=2u8))]).unwrap();
        let (h_s, h_c, h_r) = (level(&mut rng), level(&mut rng), level(&mut rng));
        let h_sc = h_s.tensor(&h_c);
        let u = random_energy_preserving_unitary(&h_sc.tensor(&h_r), &mut rng);
        let rho_s = DensityMatrix::from_diagonal(&random_dist(&mut rng, 2));
        let rho_c = DensityMatrix::random(&mut rng, 2);
        let coherent = thermal_op(&rho_s.kron(&rho_c), &h_sc, &h_r, &ctx, &u).unwrap();
        let dephased_c = dephase(&rho_c, &h_c).unwrap();
        let incoherent = thermal_op(&rho_s.kron(&dephased_c), &h_sc, &h_r, &ctx, &u).unwrap();
        let (a, b) = (
            coherent.partial_trace_second(2, 2).unwrap().diagonal(),
            incoherent.partial_trace_second(2, 2).unwrap().diagonal(),
        );
        for (x, y) in a.iter().zip(&b) {
            worst = worst.max((x - y).abs());
        }
        ensure(a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= 1e-8), || format!("diagonal differs, instance {k}"))?;
        let check = quantum_second_law_check(&rho_s.kron(&rho_c), &coherent, &h_sc, &ctx).unwrap();
        ensure(check.overall == QuantumVerdict::PossiblyFeasible, || format!("thermal op {k} flagged infeasible: {check:?}"))?;
    }
    Ok(format!("commuting reduction on 50 pairs, data processing on 300 channels, 100 thermal ops (diagonal deviation {worst:.1e})"))
}

fn zeroeth_law() -> Outcome {
    let mut rng = seeded_rng(10);
    for k in 0..100 {
        let h = random_hamiltonian(&mut rng, 3, 2.0);
        let ctx = ThermalContext::new(0.2 + 2.0 * rand::Rng::gen::<f64>(&mut rng)).unwrap();
        let r = is_completely_passive(&gibbs_state(&h, &ctx), &h, 3).unwrap();
        ensure(r.passive, || format!("Gibbs state {k} not passive at n={}", r.n_checked))?;
    }
    let p = pd(&[0.3, 0.7]);
    let h = Hamiltonian::new(vec![0.0, 1.0]).unwrap();
    let mean = extraction_simulation(&p, &h, 1, 0, 10_000, 0.1, 1, 1).unwrap();
    ensure((mean.mean_work - 0.4).abs() <= 3.0 * mean.std_error, || {
        format!("mean work {} off 0.4 by more than 3σ = {}", mean.mean_work, 3.0 * mean.std_error)
    })?;
    let mut worst_tail: f64 = 0.0;
    for seed in 0..100 {
        let r = extraction_simulation(&p, &h, 1, 0, 2000, 0.1, 50, seed).unwrap();
        ensure(r.empirical_tail <= r.hoeffding_bound + 3.0 * r.tail_std_error, || {
            format!("seed {seed}: tail {} above bound {}", r.empirical_tail, r.hoeffding_bound)
        })?;
        worst_tail = worst_tail.max(r.empirical_tail);
    }
    Ok(format!(
        "100 Gibbs states passive to n=3; mean work {:.4} ± {:.4}; largest tail {worst_tail} vs bound {:.2e}",
        mean.mean_work,
        mean.std_error,
        (-0.01f64 * 2000.0 / 2.0).exp()
    ))
}

fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_thermolaws");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let write = |name: &str, body: &str| {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        path
    };
    let q = write("jp_q.json", r#"{"probs": ["1/2", "1/4", "1/4", "0"]}"#);
    let p = write("jp_p.json", r#"{"probs": ["2/5", "2/5", "1/10", "1/10"]}"#);
    let ctx = write("trivial.json", r#"{"beta": 1.0, "k": 1.0}"#);
    let bad = write("bad.json", "{\"probs\": [0.5,\n 0.5");
    let run = |args: &[&std::ffi::OsStr]| Command::new(bin).args(args).output().unwrap();
    let os = |s: &str| std::ffi::OsString::from(s);
    let check = |from: &std::path::Path, to: &std::path::Path, extra: &[&str]| {
        let mut a = vec![os("check"), os("--from"), from.into(), os("--to"), to.into(), os("--ctx"), ctx.clone().into()];
        a.extend(extra.iter().map(|s| os(s)));
        let refs: Vec<&std::ffi::OsStr> = a.iter().map(|s| s.as_os_str()).collect();
        run(&refs)
    };
    let code = |o: &std::process::Output| o.status.code().unwrap_or(-1);

    let fwd = check(&q, &p, &["--mode", "exact"]);
    ensure(code(&fwd) == 0, || format!("feasible check exited {}", code(&fwd)))?;
    let back = check(&p, &q, &["--mode", "exact"]);
    ensure(code(&back) == 1, || format!("infeasible check exited {}", code(&back)))?;
    let missing = check(&dir.path().join("nope.json"), &q, &[]);
    ensure(code(&missing) == 2, || format!("missing file exited {}", code(&missing)))?;
    let malformed = check(&bad, &q, &[]);
    let diag = String::from_utf8_lossy(&malformed.stderr).to_string();
    ensure(code(&malformed) == 2 && diag.contains("line 2"), || format!("malformed input: {} {diag}", code(&malformed)))?;
    let inconclusive = check(&q, &p, &["--eps", "0.1"]);
    ensure(code(&inconclusive) == 3, || format!("two-condition check exited {}", code(&inconclusive)))?;

    let v: serde_json::Value = serde_json::from_slice(&fwd.stdout).map_err(|e| e.to_string())?;
    let again: serde_json::Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    ensure(v == again, || "report does not round-trip".into())?;

    let search = |seed: &str| {
        run(&[
            os("catalyst").as_os_str(), os("search").as_os_str(), os("--from").as_os_str(), q.as_os_str(),
            os("--to").as_os_str(), p.as_os_str(), os("--ctx").as_os_str(), ctx.as_os_str(),
            os("--seed").as_os_str(), os(seed).as_os_str(),
        ])
    };
    let (s1, s2) = (search("11"), search("11"));
    ensure(code(&s1) == 0 && s1.stdout == s2.stdout, || "seeded catalyst search not reproducible".into())?;
    let sim = || run(&[os("extract-sim").as_os_str(), os("--seed").as_os_str(), os("7").as_os_str()]);
    let (e1, e2) = (sim(), sim());
    ensure(code(&e1) == 0 && e1.stdout == e2.stdout, || "seeded extraction not reproducible".into())?;
    Ok("exit codes 0/1/2/2/3, round trip and byte-identical seeded runs".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 11] = [
        ("Jonathan–Plenio golden example", jonathan_plenio),
        ("LP oracle matches thermo-majorization curves", oracle_equivalence),
        ("monotonicity, data processing and additivity", monotonicity_suite),
        ("embedding lemma", embedding_lemma),
        ("work identities and wit threshold", work_identities),
        ("tensor-catalyst convergence", tensor_catalyst),
        ("embezzling regime", embezzling),
        ("smoothing lemmas and two-condition soundness", smoothing_lemmas),
        ("quantum layer", quantum_layer),
        ("zeroeth law and work extraction", zeroeth_law),
        ("command-line contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("[PASS] {:>2} {name} ({t:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2} {name} ({t:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
