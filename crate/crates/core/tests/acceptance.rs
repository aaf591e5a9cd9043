//! Acceptance criteria, one line each. Runs without the libtest harness so
//! every criterion reports even when an earlier one fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use pathseq::closed_forms::piecewise;
use pathseq::oracle::DFS_MAX_N;
use pathseq::{
    build, classify_starlike_paths, complete_bipartite_count, identify, is_connected,
    path_sequence_dfs, path_sequence_dp, sequence_of, starlike_count, starlike_type_counts,
    BranchSequence, FamilyKind, FamilySpec, PathSequence,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn seq(v: &[u64]) -> PathSequence {
    PathSequence::from(v.to_vec())
}

fn oracle_cross_validation() -> Outcome {
    let grid = common::all_grids();
    let mut over_guard = Vec::new();
    for spec in &grid {
        let g = build(spec).unwrap();
        let dp = path_sequence_dp(&g).unwrap();
        if g.vertex_count() > DFS_MAX_N {
            // The enumerator refuses these; the closed form stands in.
            let formula = sequence_of(spec).unwrap();
            check(formula == dp, || {
                format!("{spec}: formula {formula} dp {dp}")
            })?;
            over_guard.push(spec.to_string());
            continue;
        }
        let dfs = path_sequence_dfs(&g).unwrap();
        check(dfs == dp, || format!("{spec}: dfs {dfs} dp {dp}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut random = 0;
    for n in 5..=12 {
        for _ in 0..200 {
            let p = rng.gen_range(0.15..0.6);
            let g = common::random_graph(&mut rng, n, p);
            let (dfs, dp) = (
                path_sequence_dfs(&g).unwrap(),
                path_sequence_dp(&g).unwrap(),
            );
            check(dfs == dp, || format!("random n={n}: dfs {dfs} dp {dp}"))?;
            random += 1;
        }
    }
    Ok(format!(
        "{} family graphs, {random} random graphs; over the {DFS_MAX_N}-vertex DFS guard, checked dp = closed form: [{}]",
        grid.len() - over_guard.len(),
        over_guard.join("; ")
    ))
}

fn formula_oracle_equality() -> Outcome {
    let mut per_kind = Vec::new();
    for kind in FamilyKind::ALL {
        let grid = common::grid(kind);
        for spec in &grid {
            let (formula, oracle) = (sequence_of(spec).unwrap(), oracle_sequence(spec));
            check(formula == oracle, || {
                format!("{spec}: formula {formula} oracle {oracle}")
            })?;
        }
        per_kind.push(format!("{kind}={}", grid.len()));
    }
    Ok(per_kind.join(" "))
}

fn type_census() -> Outcome {
    let mut buckets = 0;
    for spec in common::grid(FamilyKind::Starlike) {
        let FamilySpec::Starlike { branches } = &spec else {
            unreachable!()
        };
        let g = build(&spec).unwrap();
        for h in 1..=branches.longest() + branches.second_longest() + 1 {
            let formula = starlike_type_counts(branches, h).unwrap();
            let observed = classify_starlike_paths(&g, 0, h).unwrap();
            check(formula == observed, || {
                format!("{spec} h={h}: formula {formula:?} observed {observed:?}")
            })?;
            buckets += 4 + formula.z1.len() + formula.z2.len() + formula.z3.len();
        }
    }
    Ok(format!("{buckets} buckets matched"))
}

fn given_sequences() -> Outcome {
    let claw = path_sequence_dfs(&build(&FamilySpec::Star { n: 4 }).unwrap()).unwrap();
    check(claw == seq(&[4, 3, 3]), || format!("K_1,3 gave {claw}"))?;
    for n in 3..=12u64 {
        let expect_path: Vec<u64> = (1..=n).rev().collect();
        let expect_cycle = vec![n; n as usize];
        let expect_star = vec![n, n - 1, (n - 1) * (n - 2) / 2];
        let k = n as usize;
        for (spec, expect) in [
            (FamilySpec::Path { n: k }, expect_path),
            (FamilySpec::Cycle { n: k }, expect_cycle),
            (FamilySpec::Star { n: k }, expect_star),
        ] {
            let expect = seq(&expect);
            let oracle = path_sequence_dfs(&build(&spec).unwrap()).unwrap();
            let formula = sequence_of(&spec).unwrap();
            check(oracle == expect && formula == expect, || {
                format!("{spec}: expected {expect}, oracle {oracle}, formula {formula}")
            })?;
        }
    }
    Ok("claw, paths, cycles, stars for n in 3..=12".into())
}

/// DFS enumeration where its guard allows, subset DP above it.
fn oracle_sequence(spec: &FamilySpec) -> PathSequence {
    let g = build(spec).unwrap();
    if g.vertex_count() <= DFS_MAX_N {
        path_sequence_dfs(&g).unwrap()
    } else {
        path_sequence_dp(&g).unwrap()
    }
}

/// Pairs that share `n`, `m` and `L_1..L_{h-3}` but differ in `L_{h-2}`,
/// with the observed `(P_h - P'_h) / (L_{h-2} - L'_{h-2})` for each.
fn slope_pairs(
    specs: &[(FamilySpec, BranchSequence)],
) -> Vec<(FamilySpec, FamilySpec, usize, BigInt)> {
    let sequences: Vec<PathSequence> = specs.iter().map(|(s, _)| oracle_sequence(s)).collect();
    let mut out = Vec::new();
    for i in 0..specs.len() {
        for j in i + 1..specs.len() {
            let ((a, la), (b, lb)) = (&specs[i], &specs[j]);
            if a.vertex_count() != b.vertex_count()
                || la.vertex_count() != lb.vertex_count()
                || la.branch_count() != lb.branch_count()
                || std::mem::discriminant(a) != std::mem::discriminant(b)
                || a.coalescence_degree() != b.coalescence_degree()
            {
                continue;
            }
            let top = sequences[i].rho().max(sequences[j].rho());
            for h in 3..=top {
                let shared = (1..=h - 3).all(|l| la.get(l) == lb.get(l));
                let dl = la.get(h - 2) as i64 - lb.get(h - 2) as i64;
                if !shared || dl == 0 {
                    continue;
                }
                let dp = BigInt::from(sequences[i].get(h)) - BigInt::from(sequences[j].get(h));
                if (&dp % dl).is_zero() {
                    out.push((a.clone(), b.clone(), h, dp / dl));
                } else {
                    out.push((a.clone(), b.clone(), h, BigInt::from(i64::MIN)));
                }
            }
        }
    }
    out
}

fn affine_slopes() -> Outcome {
    let starlike: Vec<(FamilySpec, BranchSequence)> = common::grid(FamilyKind::Starlike)
        .into_iter()
        .map(|s| match &s {
            FamilySpec::Starlike { branches } => (s.clone(), branches.clone()),
            _ => unreachable!(),
        })
        .collect();
    let star_pairs = slope_pairs(&starlike);
    for (a, b, h, slope) in &star_pairs {
        let FamilySpec::Starlike { branches } = a else {
            unreachable!()
        };
        let m = branches.branch_count() as i64;
        check(*slope == BigInt::from(2 - m), || {
            format!("{a} vs {b} h={h}: slope {slope}, expected {}", 2 - m)
        })?;
    }
    check(star_pairs.len() >= 20, || {
        format!("only {} starlike pairs", star_pairs.len())
    })?;

    let generalized: Vec<(FamilySpec, BranchSequence)> =
        common::grid(FamilyKind::GeneralizedStarlike)
            .into_iter()
            .map(|s| match &s {
                FamilySpec::GeneralizedStarlike { branches, .. } => (s.clone(), branches.clone()),
                _ => unreachable!(),
            })
            .collect();
    let gen_pairs = slope_pairs(&generalized);
    let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
    for (a, b, h, slope) in &gen_pairs {
        let FamilySpec::GeneralizedStarlike { n1, branches } = a else {
            unreachable!()
        };
        let (m, n1) = (branches.branch_count() as i64, *n1 as i64);
        let label = if *slope == BigInt::from(3 - m - n1) {
            "3-m-n1"
        } else if *slope == BigInt::from(2 - m) {
            "2-m"
        } else {
            return Err(format!(
                "{a} vs {b} h={h}: slope {slope} not in {{3-m-n1, 2-m}}"
            ));
        };
        *tally.entry(label).or_default() += 1;
    }
    check(gen_pairs.len() >= 20, || {
        format!("only {} generalized pairs", gen_pairs.len())
    })?;
    Ok(format!(
        "starlike: {} pairs at 2-m; generalized: {} pairs, 3-m-n1 on {}, 2-m on {}",
        star_pairs.len(),
        gen_pairs.len(),
        tally.get("3-m-n1").copied().unwrap_or(0),
        tally.get("2-m").copied().unwrap_or(0)
    ))
}

fn identification_round_trip() -> Outcome {
    let mut total = 0;
    for kind in FamilyKind::ALL {
        for spec in common::grid(kind) {
            let s = sequence_of(&spec).unwrap();
            let r = identify(kind, &s).unwrap();
            check(r.matched.as_ref() == Some(&spec), || {
                format!("{spec}: identified as {:?}", r.matched)
            })?;
            if matches!(kind, FamilyKind::Lollipop | FamilyKind::GeneralizedStarlike) {
                check(r.survivors.len() == 1, || {
                    format!("{spec}: {} survivors", r.survivors.len())
                })?;
            }
            check(
                r.recovery.iter().all(|step| step.remainder.is_zero()),
                || format!("{spec}: inexact starlike division"),
            )?;
            total += 1;
        }
    }
    // K_1,3 is a star, a starlike tree and the complete bipartite K_1,3.
    let claw = seq(&[4, 3, 3]);
    for kind in FamilyKind::ALL {
        let hit = identify(kind, &claw).unwrap().matched;
        let expected = matches!(
            kind,
            FamilyKind::Star | FamilyKind::Starlike | FamilyKind::CompleteBipartite
        );
        check(hit.is_some() == expected, || {
            format!("(4,3,3) as {kind}: {hit:?}")
        })?;
    }
    Ok(format!("{total} specs, unique survivors"))
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let status = pathseq::cli::run(
        std::iter::once("pathseq").chain(args.iter().copied()),
        &mut std::io::empty(),
        &mut stdout,
        &mut stderr,
    );
    (status, String::from_utf8(stdout).unwrap())
}

fn collision_fixture() -> Outcome {
    let (status, report) = run_cli(&["collide", "--enumerate", "4"]);
    let line = report
        .lines()
        .find(|l| l.starts_with("sequence=4,3,3 "))
        .ok_or_else(|| format!("no (4,3,3) line in:\n{report}"))?;
    check(status == 1, || format!("status {status}"))?;
    check(
        line == "sequence=4,3,3 members=Cw,Cs classes=0,1 connected=0,1",
        || line.to_string(),
    )?;
    let claw = build(&FamilySpec::Star { n: 4 }).unwrap();
    let triangle_plus = pathseq::parse_graph6("Cw").unwrap();
    check(
        !is_connected(&triangle_plus)
            && pathseq::are_isomorphic_small(&claw, &pathseq::parse_graph6("Cs").unwrap()).unwrap(),
        || "members are not K_1,3 and K_3 + K_1".into(),
    )?;
    let (_, connected) = run_cli(&["collide", "--enumerate", "4", "--connected-only"]);
    check(!connected.contains("sequence=4,3,3 "), || {
        format!("connected-only report:\n{connected}")
    })?;
    Ok(format!("{line}; absent with --connected-only"))
}

fn errata_guards() -> Outcome {
    let kb = complete_bipartite_count(2, 3, 4);
    let kb_oracle = oracle_sequence(&FamilySpec::CompleteBipartite { n1: 2, n2: 3 }).get(4);
    check(kb == BigUint::from(6u32) && kb_oracle == kb, || {
        format!("K_2,3 P_4 = {kb}, oracle {kb_oracle}")
    })?;
    check(
        piecewise::complete_bipartite_cancelled(2, 3, 4).is_none(),
        || "cancelled form defined at 0/0".into(),
    )?;
    let claw4 = BranchSequence::new(vec![4]).unwrap();
    let p3 = starlike_count(&claw4, 3);
    let p3_oracle = oracle_sequence(&FamilySpec::Starlike {
        branches: claw4.clone(),
    })
    .get(3);
    let poly = piecewise::starlike_p3_polynomial(&claw4);
    check(
        p3.is_zero() && p3_oracle.is_zero() && poly == BigInt::from(16),
        || format!("L=(4) P_3 = {p3}, oracle {p3_oracle}, polynomial {poly}"),
    )?;
    Ok("K_2,3 P_4 = 6 (displayed form 0/0); L=(4) P_3 = 0 (polynomial 16)".into())
}

fn performance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0020);
    let g = loop {
        let g = common::random_graph(&mut rng, 20, 0.3);
        if is_connected(&g) {
            break g;
        }
    };
    let start = Instant::now();
    let s = path_sequence_dp(&g).unwrap();
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(60), || {
        format!("n=20 took {elapsed:?}")
    })?;
    check(
        s.get(0) == BigUint::from(20u32) && s.get(1) == BigUint::from(g.edge_count()),
        || format!("n=20 sequence starts {s}"),
    )?;

    let start_k = Instant::now();
    let k21 = path_sequence_dp(&build(&FamilySpec::Complete { n: 21 }).unwrap()).unwrap();
    let k_elapsed = start_k.elapsed();
    let half_factorial: BigUint = (1..=21u32).fold(BigUint::one(), |acc, i| acc * i) / 2u32;
    check(k21.get(20) == half_factorial && k21.rho() == 20, || {
        format!("K_21 P_20 = {}", k21.get(20))
    })?;
    check(
        k21 == sequence_of(&FamilySpec::Complete { n: 21 }).unwrap(),
        || "K_21 sequence differs from formula".into(),
    )?;
    Ok(format!(
        "G(20, 0.3) with {} edges in {:.2?} (rho {}); K_21 in {:.2?}, P_20 = {half_factorial}",
        g.edge_count(),
        elapsed,
        s.rho(),
        k_elapsed
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("oracle cross-validation", oracle_cross_validation),
        ("formula/oracle equality", formula_oracle_equality),
        ("per-type census", type_census),
        ("given sequences", given_sequences),
        ("affine slopes", affine_slopes),
        ("identification round trip", identification_round_trip),
        ("collision fixture", collision_fixture),
        ("errata guards", errata_guards),
        ("performance", performance),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            std::panic::catch_unwind(criterion).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {} [PRIMARY] {name}: PASS ({detail}) [{secs:.1}s]",
                i + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {} [PRIMARY] {name}: FAIL ({detail}) [{secs:.1}s]",
                    i + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
