//! Acceptance criteria. Runs every criterion, prints one line per criterion
//! and exits nonzero if any failed.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use semicomplex::oracle::{self, GENUS_COUNTS};
use semicomplex::{
    chain, complexity, count, enumerate, ideal_extensions, is_pertinent, level, mu,
    pf_chain_exceeds_complexity, proper_ideal_extensions, shift_embed, NumericalSemigroup,
    ThetaMap,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ns(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).unwrap()
}

fn msg_set(v: &[NumericalSemigroup]) -> HashSet<Vec<i64>> {
    v.iter().map(|s| s.generators().to_vec()).collect()
}

fn lists(v: &[&[i64]]) -> HashSet<Vec<i64>> {
    v.iter().map(|g| g.to_vec()).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, budget: Duration) -> Outcome {
    ensure(elapsed < budget, || {
        format!("took {elapsed:?}, budget {budget:?}")
    })
}

/// Fastest of a few runs, for sub-millisecond budgets.
fn best_of<T>(runs: usize, mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut best = Duration::MAX;
    let mut out = None;
    for _ in 0..runs {
        let t = Instant::now();
        let v = f();
        best = best.min(t.elapsed());
        out = Some(v);
    }
    (out.unwrap(), best)
}

fn apery_and_pf() -> Outcome {
    let s = ns(&[5, 6, 8, 9]);
    let ((ap, pf), took) = best_of(5, || {
        (
            s.apery_set(5).unwrap().sorted(),
            s.pseudo_frobenius().unwrap(),
        )
    });
    ensure(ap == [0, 6, 8, 9, 12], || format!("Ap(S,5) = {ap:?}"))?;
    ensure(pf == [3, 4, 7], || format!("PF = {pf:?}"))?;
    within(took, Duration::from_millis(1))
}

fn extensions_of_5_6_8_9() -> Outcome {
    let s = ns(&[5, 6, 8, 9]);
    let ((all, proper), took) = best_of(5, || {
        (
            ideal_extensions(&s).unwrap(),
            proper_ideal_extensions(&s).unwrap(),
        )
    });
    ensure(all.len() == 7, || format!("{} extensions", all.len()))?;
    ensure(proper.len() == 6, || {
        format!("{} proper extensions", proper.len())
    })?;
    let expected = lists(&[
        &[3, 5],
        &[4, 5, 6],
        &[5, 6, 7, 8, 9],
        &[3, 4, 5],
        &[3, 5, 7],
        &[4, 5, 6, 7],
    ]);
    ensure(msg_set(&proper) == expected, || {
        format!("proper = {:?}", msg_set(&proper))
    })?;
    within(took, Duration::from_millis(1))
}

fn gamma_chain_of_5_7() -> Outcome {
    let s = ns(&[5, 7]);
    let ((c, links), took) = best_of(5, || {
        let ch = chain(ThetaMap::Gamma, &s);
        let links: Vec<Vec<i64>> = ch.links()[1..]
            .iter()
            .map(|l| l.generators().to_vec())
            .collect();
        (complexity(&s), links)
    });
    ensure(c == 5, || format!("C = {c}"))?;
    let expected: Vec<Vec<i64>> = vec![
        vec![5, 7, 23],
        vec![5, 7, 16, 18],
        vec![5, 7, 11, 13],
        vec![5, 6, 7, 8, 9],
        vec![1],
    ];
    ensure(links == expected, || format!("chain = {links:?}"))?;
    within(took, Duration::from_millis(1))
}

fn pf_chain_longer_than_complexity() -> Outcome {
    let t = Instant::now();
    let s = ns(&[4, 6, 9, 11]);
    ensure(complexity(&s) == 2, || format!("C = {}", complexity(&s)))?;
    let ch = chain(ThetaMap::Pf, &s);
    ensure(ch.len() == 3, || format!("μ(PF) = {}", ch.len()))?;
    let links: Vec<NumericalSemigroup> = ch.links().to_vec();
    ensure(links[1] == ns(&[2, 5]) && links[2] == ns(&[2, 3]), || {
        format!("intermediate links {} {}", links[1], links[2])
    })?;
    // Every semigroup with F <= 7 has genus <= 7.
    let catalog = oracle::enumerate_by_genus(7).map_err(|e| e.to_string())?;
    let offenders: Vec<&NumericalSemigroup> = catalog
        .semigroups
        .iter()
        .filter(|s| s.frobenius() <= 7 && pf_chain_exceeds_complexity(s))
        .collect();
    ensure(offenders.iter().all(|s| s.frobenius() > 6), || {
        format!("F <= 6 offenders: {offenders:?}")
    })?;
    ensure(offenders == [&s], || {
        format!("F = 7 offenders: {offenders:?}")
    })?;
    within(t.elapsed(), Duration::from_secs(1))
}

fn small_tree_levels() -> Outcome {
    let t = Instant::now();
    for k in 0..=10usize {
        let members = level(2, k).map_err(|e| e.to_string())?.members;
        ensure(members == [ns(&[2, 2 * k as i64 + 3])], || {
            format!("level(2,{k}) = {members:?}")
        })?;
    }
    let expected: [HashSet<Vec<i64>>; 3] = [
        lists(&[&[3, 5, 7], &[3, 4], &[3, 7, 8]]),
        lists(&[&[3, 5], &[3, 8, 10], &[3, 7, 11], &[3, 10, 11]]),
        lists(&[
            &[3, 8, 13],
            &[3, 7],
            &[3, 11, 13],
            &[3, 10, 14],
            &[3, 13, 14],
        ]),
    ];
    for (depth, want) in (1..=3).zip(&expected) {
        let got = level(3, depth).map_err(|e| e.to_string())?.members;
        ensure(got.len() == want.len() && msg_set(&got) == *want, || {
            format!("level(3,{depth}) = {:?}", msg_set(&got))
        })?;
    }
    let e34 = enumerate(3, 4).map_err(|e| e.to_string())?;
    ensure(msg_set(&e34) == expected[2] && e34.len() == 5, || {
        format!("enumerate(3,4) = {:?}", msg_set(&e34))
    })?;
    within(t.elapsed(), Duration::from_secs(1))
}

fn frobenius_bounds() -> Outcome {
    let t = Instant::now();
    let catalog = oracle::enumerate_by_genus(10).map_err(|e| e.to_string())?;
    let total: usize = GENUS_COUNTS[..=10].iter().sum();
    ensure(catalog.semigroups.len() == total, || {
        format!("{} semigroups, expected {total}", catalog.semigroups.len())
    })?;
    for s in catalog.semigroups.iter().filter(|s| !s.is_whole()) {
        let c = complexity(s);
        let (f, m, k) = (s.frobenius(), s.multiplicity(), c as i64);
        ensure((k - 1) * m < f && f < k * m, || {
            format!("{s}: bounds fail for C = {c}")
        })?;
        ensure(c as i64 == f / m + 1, || format!("{s}: C = {c}"))?;
        let g = mu(ThetaMap::Gamma, s);
        ensure(g == c, || format!("{s}: μ(γ) = {g}, C = {c}"))?;
    }
    within(t.elapsed(), Duration::from_secs(30))
}

fn oracle_equivalence() -> Outcome {
    let t = Instant::now();
    let catalog = oracle::enumerate_by_genus(10).map_err(|e| e.to_string())?;
    for s in &catalog.semigroups {
        if s.genus() <= 8 {
            let bfs = oracle::min_ichain_bfs(s).map_err(|e| e.to_string())?;
            ensure(bfs == complexity(s), || {
                format!("{s}: BFS {bfs}, C {}", complexity(s))
            })?;
        }
        if s.is_whole() {
            continue;
        }
        let pf = s.pseudo_frobenius().unwrap();
        let brute = oracle::pf_bruteforce(s).unwrap();
        ensure(pf == brute, || format!("{s}: PF {pf:?}, brute {brute:?}"))?;
        let mut fast = ideal_extensions(s).unwrap();
        fast.sort();
        let brute = oracle::extensions_bruteforce(s).unwrap();
        ensure(fast == brute, || format!("{s}: extensions differ"))?;
    }
    within(t.elapsed(), Duration::from_secs(300))
}

fn monotone_counts() -> Outcome {
    let t = Instant::now();
    for m in 2..=6i64 {
        for c in 1..=5usize {
            let lo = count(m, c).map_err(|e| e.to_string())?;
            let hi = count(m, c + 1).map_err(|e| e.to_string())?;
            ensure(lo <= hi, || {
                format!("count({m},{c}) = {lo} > count({m},{}) = {hi}", c + 1)
            })?;

            let class = enumerate(m, c).map_err(|e| e.to_string())?;
            let next: HashSet<NumericalSemigroup> = enumerate(m, c + 1)
                .map_err(|e| e.to_string())?
                .into_iter()
                .collect();
            let mut images = HashSet::new();
            for s in &class {
                let img = shift_embed(s).map_err(|e| e.to_string())?;
                ensure(next.contains(&img), || {
                    format!("shift of {s} = {img} not in class ({m},{})", c + 1)
                })?;
                ensure(images.insert(img.clone()), || {
                    format!("shift not injective at {img}")
                })?;
            }
        }
    }
    within(t.elapsed(), Duration::from_secs(60))
}

fn staircase(m: i64, k: i64) -> NumericalSemigroup {
    let gaps: Vec<i64> = (1..k * m).filter(|x| x % m != 0).collect();
    NumericalSemigroup::from_gaps(&gaps).unwrap()
}

fn two_three_four(k: i64) -> NumericalSemigroup {
    let gaps: Vec<i64> = (1..4 * k).filter(|&x| x != 2 * k && x != 3 * k).collect();
    NumericalSemigroup::from_gaps(&gaps).unwrap()
}

fn theta_suite() -> Outcome {
    let t = Instant::now();
    let catalog = oracle::enumerate_by_genus(10).map_err(|e| e.to_string())?;
    for s in catalog.semigroups.iter().filter(|s| !s.is_whole()) {
        for theta in ThetaMap::ALL {
            let a = theta.apply(s).unwrap();
            ensure(!a.is_empty(), || format!("{theta} empty on {s}"))?;
            ensure(is_pertinent(s, &a).unwrap(), || {
                format!("{theta} on {s}: {a:?} not pertinent")
            })?;
        }
    }
    for m in 2..=6 {
        for k in 1..=6 {
            let s = staircase(m, k);
            let (pf_len, c) = (mu(ThetaMap::Pf, &s), complexity(&s));
            ensure(pf_len == c && c == k as usize, || {
                format!("S_k m={m} k={k} = {s}: μ(PF) = {pf_len}, C = {c}")
            })?;
        }
    }
    for k in 2..=10 {
        let s = two_three_four(k);
        let (pf_len, c) = (mu(ThetaMap::Pf, &s), complexity(&s));
        ensure(pf_len == 3 && c == 2, || {
            format!("k={k} {s}: μ(PF) = {pf_len}, C = {c}")
        })?;
    }
    within(t.elapsed(), Duration::from_secs(30))
}

fn genus_counts() -> Outcome {
    let t = Instant::now();
    let catalog = oracle::enumerate_by_genus(10).map_err(|e| e.to_string())?;
    let counts = catalog.counts();
    let expected = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204];
    ensure(counts == expected, || format!("counts {counts:?}"))?;
    within(t.elapsed(), Duration::from_secs(10))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 Apéry set and PF of <5,6,8,9>", apery_and_pf),
        ("2 ideal extensions of <5,6,8,9>", extensions_of_5_6_8_9),
        ("3 complexity and γ chain of <5,7>", gamma_chain_of_5_7),
        (
            "4 PF chain of <4,6,9,11> and minimality scan",
            pf_chain_longer_than_complexity,
        ),
        ("5 G(2) and G(3) levels", small_tree_levels),
        (
            "6 Frobenius bounds and C = μ(γ) up to genus 10",
            frobenius_bounds,
        ),
        (
            "7 oracle equivalence (BFS, PF, extensions)",
            oracle_equivalence,
        ),
        ("8 count monotonicity and shift embedding", monotone_counts),
        ("9 θ maps and the PF chain families", theta_suite),
        ("10 genus catalog counts", genus_counts),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        match run() {
            Ok(()) => println!("PASS  criterion {name} ({:.1?})", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
