//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the
//! process exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use polygon_duality::combinatorics::{
    binom_parity_unsigned, compositions, in_s_k, set_leq, theta, IndexSet, ThetaVector,
};
use polygon_duality::duality::{
    closed_form_k3, count_disjoint_subgees, phi, phi_by_theta, phi_sum, TopMonomial,
};
use polygon_duality::length::{enumerate_subgees, GeeParams, LengthVector, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn gee(a: &[u32]) -> GeeParams {
    GeeParams::new(a.to_vec()).unwrap()
}

fn all_gees(k: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (1..=max).map(move |x| {
                    let mut v = p.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// k = 1..4 with a_i <= 3, together with k <= 2 with a_i <= 6.
fn sweep() -> Vec<Vec<u32>> {
    let mut set = BTreeSet::new();
    for k in 1..=4 {
        set.extend(all_gees(k, 3));
    }
    for k in 1..=2 {
        set.extend(all_gees(k, 6));
    }
    set.into_iter().collect()
}

fn joined(a: &[u32]) -> String {
    a.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn pdual(args: &[&str]) -> (Option<i32>, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_pdual"))
        .args(args)
        .output()
        .expect("spawn pdual");
    (o.status.code(), String::from_utf8(o.stdout).unwrap())
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure!(t < limit, "{what} took {t:?}, limit {limit:?}");
    Ok(t)
}

fn theorem_at_desk_scale() -> Outcome {
    let start = Instant::now();
    let tuples = sweep();
    let mut largest = 0;
    for a in &tuples {
        let (code, out) = pdual(&["oracle", "--a", &joined(a), "--format", "json"]);
        ensure!(code == Some(0), "oracle exit {code:?} for a={a:?}");
        let v: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
        ensure!(v["nullspace_dimension"] == 1, "a={a:?}: dimension {}", v["nullspace_dimension"]);
        ensure!(v["agree"] == true, "a={a:?}: disagreement");
        for x in v["values"].as_array().unwrap() {
            ensure!(x["oracle"] == x["formula"], "a={a:?}: J={} differs", x["J"]);
        }
        largest = largest.max(v["basis"].as_u64().unwrap());
    }
    let t = within(start, Duration::from_secs(60), "sweep")?;
    Ok(format!("{} tuples, largest basis {largest}, {t:.2?}", tuples.len()))
}

/// Every T in S_3 with |T| <= 3, whether or not a given a admits it.
fn s3_classes() -> Vec<ThetaVector> {
    (0..=3).flat_map(|w| compositions(w, 3)).filter(in_s_k).collect()
}

fn example_table_reproduction() -> Outcome {
    let start = Instant::now();
    let classes = s3_classes();
    ensure!(classes.len() == 14, "{} classes in S_3", classes.len());
    let mut compared = 0;
    for a in all_gees(3, 6) {
        let a = gee(&a);
        for t in &classes {
            let closed = closed_form_k3(&a, t).unwrap();
            ensure!(closed == phi_sum(&a, t), "a={a} T={t}: closed form {closed}");
            if let Ok(p) = phi_by_theta(&a, t) {
                ensure!(p == closed, "a={a} T={t}");
            }
            compared += 1;
        }
    }
    let golden = include_str!("golden/table_2_2_2.csv");
    let (code, out) = pdual(&["table", "--a", "2,2,2", "--format", "csv"]);
    ensure!(code == Some(0) && out == golden, "table --a 2,2,2 differs from golden:\n{out}");
    let t = within(start, Duration::from_secs(5), "table comparison")?;
    Ok(format!("{compared} (a, T) pairs and golden table, {t:.2?}"))
}

fn top_class_rule() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let k = rng.gen_range(1..=6);
        let a: Vec<u32> = (0..k).map(|_| rng.gen_range(1..=6)).collect();
        let a = gee(&a);
        let tops: Vec<ThetaVector> = a
            .feasible_classes()
            .into_iter()
            .filter(|t| t.weight() as usize == k)
            .collect();
        let t = tops.choose(&mut rng).unwrap();
        let starts: Vec<u32> = std::iter::once(0).chain(a.partial_sums().iter().copied()).collect();
        let mut j = Vec::new();
        for (i, &count) in t.entries().iter().enumerate() {
            let block: Vec<u32> = (starts[i] + 1..=starts[i + 1]).collect();
            j.extend(block.choose_multiple(&mut rng, count as usize));
        }
        let j = IndexSet::new(j).unwrap();
        ensure!(set_leq(&j, &a.gee()) && j.len() == k, "sampler produced {j} for {a}");
        let mono = TopMonomial::for_gee(j.clone(), &a).unwrap();
        ensure!(phi(&a, &mono), "phi = 0 at a={a} J={j}");
    }
    Ok("500 sampled (a, J), seed 0x5eed".into())
}

fn relation_annihilation() -> Outcome {
    let tuples = sweep();
    let mut relations = 0;
    for a in &tuples {
        let (code, out) = pdual(&["verify", "--a", &joined(a), "--format", "json"]);
        ensure!(code == Some(0), "verify exit {code:?} for a={a:?}: {out}");
        let v: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
        ensure!(v["ok"] == true, "a={a:?}");
        relations += v["relations"].as_u64().unwrap();
    }
    Ok(format!("{} tuples, {relations} relations", tuples.len()))
}

fn counting_formula() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for k in 1..=3 {
        for a in all_gees(k, 4) {
            let a = gee(&a);
            let subgees = enumerate_subgees(&a);
            let thetas: Vec<ThetaVector> = subgees.iter().map(|j| theta(j, &a).unwrap()).collect();
            for i in &subgees {
                let m = theta(i, &a).unwrap();
                for c in (0..=k as u32).flat_map(|w| compositions(w, k)).filter(in_s_k) {
                    let brute = subgees
                        .iter()
                        .zip(&thetas)
                        .filter(|(j, t)| **t == c && j.is_disjoint(i))
                        .count() as u128;
                    let formula = count_disjoint_subgees(&a, &m, &c).unwrap();
                    ensure!(formula == brute, "a={a} I={i} C={c}: {formula} vs {brute}");
                    checks += 1;
                }
            }
        }
    }
    let t = within(start, Duration::from_secs(10), "counting check")?;
    Ok(format!("{checks} (a, I, C) triples, {t:.2?}"))
}

fn subgee_criterion() -> Outcome {
    let mut sets = 0u64;
    for k in 1..=4 {
        for a in all_gees(k, 3) {
            let a = gee(&a);
            let g = a.gee();
            for mask in 0u64..1 << a.total() {
                let j = IndexSet::from_mask(mask);
                let by_theta = in_s_k(&theta(&j, &a).unwrap());
                ensure!(by_theta == set_leq(&j, &g), "a={a} J={j}");
                sets += 1;
            }
        }
    }
    Ok(format!("{sets} (a, J) pairs"))
}

fn pascal_mod2(rows: usize) -> Vec<Vec<bool>> {
    let mut t = vec![vec![true]];
    for m in 1..=rows {
        let prev = &t[m - 1];
        t.push(
            (0..=m)
                .map(|r| (r > 0 && prev[r - 1]) ^ (r < m && prev[r]))
                .collect(),
        );
    }
    t
}

fn product_parity(m: &[u32], t: &[u32]) -> bool {
    m.iter()
        .zip(t)
        .all(|(&m, &t)| binom_parity_unsigned(1 - m as i64, t as u64))
}

fn identity_suite() -> Outcome {
    let pascal = pascal_mod2(64);
    for m in 0..=64usize {
        for r in 0..=m {
            ensure!(binom_parity_unsigned(m as i64, r as u64) == pascal[m][r], "Lucas ({m},{r})");
        }
    }
    for a in 0..=12i64 {
        for b in 0..=12i64 {
            for t in 0..=12u64 {
                let conv = (0..=t).fold(false, |acc, s| {
                    acc ^ (binom_parity_unsigned(a, t - s) & binom_parity_unsigned(b, s))
                });
                ensure!(conv == binom_parity_unsigned(a + b, t), "Vandermonde ({a},{b},{t})");
            }
        }
    }
    for a in 1..=16i64 {
        for b in 0..=16u64 {
            ensure!(
                binom_parity_unsigned(a + b as i64 - 2, b) == binom_parity_unsigned(1 - a, b),
                "substitution ({a},{b})"
            );
        }
    }

    // m runs over θ-vectors of nonempty subgees: m in S_k, m_i <= 3, |m| >= 1
    let mut sigma1 = 0;
    let mut blocks = 0;
    for k in 1..=4usize {
        let ms: Vec<ThetaVector> = (1..=k as u32)
            .flat_map(|w| compositions(w, k))
            .filter(|m| in_s_k(m) && m.entries().iter().all(|&x| x <= 3))
            .collect();
        let all_t: Vec<ThetaVector> = compositions(k as u32, k).collect();
        for m in &ms {
            let m = m.entries();
            let total = all_t.iter().fold(false, |acc, t| acc ^ product_parity(m, t.entries()));
            let closed = binom_parity_unsigned(k as i64 - m.iter().sum::<u32>() as i64, k as u64);
            ensure!(total == closed, "Σ₁ identity at m={m:?}");
            ensure!(!total, "Σ₁ does not vanish at m={m:?}");
            sigma1 += 1;

            let mut covered = 0;
            for j in 1..=k {
                let prefixes = (0..=k as u32).flat_map(|w| compositions(w, j)).filter(|p| {
                    let e = p.entries();
                    let mut run = 0;
                    e.iter().enumerate().all(|(i, &x)| {
                        run += x;
                        if i + 1 < j { run as usize >= i + 1 } else { (run as usize) < j }
                    })
                });
                for p in prefixes {
                    let rest = k as u32 - p.weight();
                    let members: Vec<ThetaVector> = compositions(rest, k - j)
                        .map(|tail| {
                            let mut v = p.entries().to_vec();
                            v.extend_from_slice(tail.entries());
                            ThetaVector::new(v)
                        })
                        .collect();
                    covered += members.len();
                    let block = members.iter().fold(false, |acc, t| acc ^ product_parity(m, t.entries()));
                    let suffix: u32 = m[j..].iter().sum();
                    let head = product_parity(&m[..j], p.entries());
                    let tail_closed = binom_parity_unsigned((k - j) as i64 - suffix as i64, rest as u64);
                    ensure!(block == (head && tail_closed), "U-block closed form m={m:?} prefix={p}");
                    if suffix as usize <= k - j {
                        ensure!(!block, "U-block m={m:?} prefix={p} does not vanish");
                    }
                    blocks += 1;
                }
            }
            let outside = all_t.iter().filter(|t| !in_s_k(t)).count();
            ensure!(covered == outside, "U-blocks cover {covered} of {outside} tuples outside S_{k}");
        }
    }
    Ok(format!("Lucas, Vandermonde, substitution; Σ₁ at {sigma1} m; {blocks} U-blocks"))
}

/// Short sets containing n by direct summation, then pairwise maximality.
fn brute_force_code(lengths: &[i64]) -> Vec<IndexSet> {
    let n = lengths.len();
    let total: i64 = lengths.iter().sum();
    let short: Vec<IndexSet> = (0u64..1 << n)
        .filter(|m| m >> (n - 1) & 1 == 1)
        .filter(|&m| 2 * (0..n).filter(|i| m >> i & 1 == 1).map(|i| lengths[i]).sum::<i64>() < total)
        .map(IndexSet::from_mask)
        .collect();
    short
        .iter()
        .filter(|s| !short.iter().any(|t| t != *s && set_leq(s, t)))
        .cloned()
        .collect()
}

fn genetic_code_fixtures() -> Outcome {
    let pentagon = [1, 1, 1, 1, 1];
    let expected = vec![IndexSet::new([4, 5]).unwrap()];
    ensure!(brute_force_code(&pentagon) == expected, "brute force pentagon code");
    let lv = LengthVector::from_integers(&pentagon).unwrap();
    ensure!(lv.genetic_code().unwrap().genes == expected, "library pentagon code");
    ensure!(!LengthVector::from_integers(&[1, 1, 2]).unwrap().is_generic(), "(1,1,2) generic");

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut codes = 0;
    for _ in 0..100 {
        let n = rng.gen_range(3..=10);
        let raw: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=25)).collect();
        let factor = Rational::new(rng.gen_range(1..=40), rng.gen_range(1..=40));
        let lv = LengthVector::from_integers(&raw).unwrap();
        let scaled: Vec<Rational> = raw.iter().map(|&x| Rational::from_integer(x) * factor).collect();
        let sv = LengthVector::normalize(&scaled).unwrap();
        ensure!(lv.is_generic() == sv.is_generic(), "genericity changed for {raw:?} × {factor}");
        for mask in 0u64..1 << n {
            let s = IndexSet::from_mask(mask);
            ensure!(lv.is_short(&s) == sv.is_short(&s), "shortness of {s} changed for {raw:?}");
        }
        let code = lv.genetic_code();
        ensure!(code == sv.genetic_code(), "code changed for {raw:?} × {factor}");
        codes += code.is_ok() as u32;
    }
    Ok(format!("pentagon {{5,4}}, (1,1,2) flagged, 100 scaled vectors ({codes} with codes)"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 theorem at desk scale (oracle sweep)", theorem_at_desk_scale),
        ("2 k=3 closed-form table", example_table_reproduction),
        ("3 top-class rule", top_class_rule),
        ("4 relation annihilation (verify sweep)", relation_annihilation),
        ("5 disjoint-subgee counting formula", counting_formula),
        ("6 subgee criterion", subgee_criterion),
        ("7 binomial identity suite", identity_suite),
        ("8 genetic-code fixtures", genetic_code_fixtures),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
