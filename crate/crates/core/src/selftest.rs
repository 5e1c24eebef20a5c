//! The acceptance checks, runnable from the library, the CLI and the test suite.
//!
//! Every check is deterministic: random inputs come from a fixed seed.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::conjugacy::{are_conjugate, brute, ultra_summit_set};
use crate::diagram::{closure, exchange_factorization, figure_eight, five_two, homfly_via_skein, seifert, stabilize, trefoil, Side};
use crate::dual::{band_to_classical, delta_band, dual_divisors};
use crate::garside::{classical, count_positive_words_of_delta, equal, normalize, NormalForm};
use crate::hecke::{hecke_image, homfly_via_trace, ocneanu_trace, parse_homfly, trace_vars};
use crate::laurent::LaurentPoly;
use crate::ordering;
use crate::representations::{alexander, burau_equal, lk_full_twist_scalar, lk_generators, lk_generators_mod, lk_matrix, word_oracle_equal, ModMatrix};
use crate::simple;
use crate::word::BraidWord;

pub const SEED: u64 = 0x5EED_B4A1D;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
}

type Check = fn() -> std::result::Result<String, String>;

const CRITERIA: [(&str, u64, Check); 14] = [
    ("left-greedy normal form example", 1, c01_leftgreedy),
    ("positive words representing delta", 60_000, c02_delta_words),
    ("simple element counts", 5_000, c03_simple_counts),
    ("periodic braids give the full twist", 1_000, c04_periodic),
    ("Ocneanu trace values", 10, c05_trace),
    ("HOMFLY of trefoil and figure-eight, trace and skein", 1_000, c06_homfly),
    ("Markov invariance of HOMFLY", 60_000, c07_markov),
    ("Morton's irreducible 4-braid", 1_000, c08_morton),
    ("Yamada-Vogel on 5_2", 1_000, c09_yamada_vogel),
    ("height drops by one per reducing move", 60_000, c10_height),
    ("word problem oracles agree", 120_000, c11_oracles),
    ("ultra summit sets and conjugacy", 300_000, c12_conjugacy),
    ("Lawrence-Krammer properties", 120_000, c13_lk),
    ("ordering properties", 60_000, c14_ordering),
];

pub fn criterion_count() -> usize {
    CRITERIA.len()
}

/// Runs criterion `id` (1-based).
pub fn run_one(id: usize) -> Option<CriterionReport> {
    let (name, budget, check) = *CRITERIA.get(id.checked_sub(1)?)?;
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
    let elapsed = start.elapsed();
    let budget = Duration::from_millis(budget);
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if passed && budget >= Duration::from_millis(1_000) && elapsed > budget {
        passed = false;
        detail = format!("{detail}; took {} ms, over the {} ms budget", elapsed.as_millis(), budget.as_millis());
    }
    Some(CriterionReport { id, name, passed, detail, elapsed_ms: elapsed.as_millis(), budget_ms: budget.as_millis() })
}

pub fn run_all() -> Vec<CriterionReport> {
    (1..=CRITERIA.len()).filter_map(run_one).collect()
}

pub fn render_line(r: &CriterionReport) -> String {
    format!("[{}] {:2} {} ({} ms): {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.name, r.elapsed_ms, r.detail)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn w(s: &str) -> BraidWord {
    s.parse().expect("valid literal")
}

fn random_word(rng: &mut StdRng, n: usize, min_len: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(min_len..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("in range")
}

fn random_positive_word(rng: &mut StdRng, n: usize, min_len: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(min_len..=max_len);
    BraidWord::new(n, (0..len).map(|_| rng.gen_range(1..n as i32)).collect()).expect("in range")
}

/// A different spelling of the same braid, by random relation moves.
fn random_rewrite(rng: &mut StdRng, x: &BraidWord) -> BraidWord {
    let n = x.strands();
    let mut l = x.letters().to_vec();
    for _ in 0..rng.gen_range(1..=8) {
        match rng.gen_range(0..3) {
            0 if n > 1 => {
                let i = rng.gen_range(1..n as i32);
                let i = if rng.gen_bool(0.5) { i } else { -i };
                let p = rng.gen_range(0..=l.len());
                l.splice(p..p, [i, -i]);
            }
            1 => {
                let spots: Vec<usize> = (0..l.len().saturating_sub(1)).filter(|&p| (l[p].abs() - l[p + 1].abs()).abs() >= 2).collect();
                if !spots.is_empty() {
                    let p = spots[rng.gen_range(0..spots.len())];
                    l.swap(p, p + 1);
                }
            }
            _ => {
                let spots: Vec<usize> = (0..l.len().saturating_sub(2))
                    .filter(|&p| l[p] == l[p + 2] && (l[p].abs() - l[p + 1].abs()).abs() == 1 && l[p].signum() == l[p + 1].signum())
                    .collect();
                if !spots.is_empty() {
                    let p = spots[rng.gen_range(0..spots.len())];
                    let (a, b) = (l[p], l[p + 1]);
                    l[p..p + 3].copy_from_slice(&[b, a, b]);
                }
            }
        }
    }
    BraidWord::new(n, l).expect("in range")
}

fn c01_leftgreedy() -> std::result::Result<String, String> {
    let nf = normalize(&w("4: 1 3 2 2 1 3 3 2 3 2"));
    let expected: Vec<_> = [&[1, 3, 2, 1][..], &[2, 1, 3, 2], &[2], &[2]]
        .iter()
        .map(|l| BraidWord::new(4, l.to_vec()).expect("in range").permutation())
        .collect();
    ensure(nf.inf == 0 && nf.factors == expected, || format!("got {nf}"))?;
    Ok(format!("{nf}"))
}

/// Standard Young tableaux of a shape, by the hook length formula.
fn hook_count(shape: &[usize]) -> u128 {
    let cells: usize = shape.iter().sum();
    let mut num: u128 = (1..=cells as u128).product();
    let mut den: u128 = 1;
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = shape[r + 1..].iter().filter(|&&l| l > c).count();
            den *= (arm + leg + 1) as u128;
        }
    }
    let g = gcd(num, den);
    num /= g;
    den /= g;
    assert_eq!(den, 1);
    num
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(n(n-1)/2)! / (1^{n-1} 3^{n-2} 5^{n-3} ⋯ (2n-3)^1)`.
fn odd_power_formula(n: usize) -> u128 {
    let cells = n * (n - 1) / 2;
    let num: u128 = (1..=cells as u128).product();
    let den: u128 = (1..n).map(|i| ((2 * i - 1) as u128).pow((n - i) as u32)).product();
    num / den
}

fn c02_delta_words() -> std::result::Result<String, String> {
    let mut out = Vec::new();
    for (n, expected) in [(3, 2u128), (4, 16), (5, 768)] {
        let staircase: Vec<usize> = (1..n).rev().collect();
        let (hook, formula) = (hook_count(&staircase), odd_power_formula(n));
        let census = count_positive_words_of_delta(n) as u128;
        ensure(census == expected && hook == expected && formula == expected, || {
            format!("n={n}: census {census}, hook lengths {hook}, product formula {formula}, expected {expected}")
        })?;
        out.push(format!("n={n}: {census}"));
    }
    Ok(out.join(", "))
}

fn c03_simple_counts() -> std::result::Result<String, String> {
    for n in 1..=6 {
        let all = simple::all(n);
        let fact: usize = (1..=n).product();
        let distinct: std::collections::BTreeSet<_> = all.iter().collect();
        ensure(all.len() == fact && distinct.len() == fact, || format!("n={n}: {} simples", all.len()))?;
        ensure(all.iter().all(|a| simple::left_divides(a, &simple::delta(n))), || format!("n={n}: a simple does not divide delta"))?;
    }
    for (n, cat) in [(2, 2), (3, 5), (4, 14), (5, 42)] {
        let c = dual_divisors(n).len();
        ensure(c == cat, || format!("dual n={n}: {c} divisors, expected {cat}"))?;
    }
    Ok("n! for n <= 6; Catalan 2, 5, 14, 42".into())
}

fn c04_periodic() -> std::result::Result<String, String> {
    for n in 2..=6 {
        let delta_classical = BraidWord::new(n, (1..n as i32).collect()).expect("in range");
        let mut alpha = delta_classical.letters().to_vec();
        alpha.push(1);
        let alpha = BraidWord::new(n, alpha).expect("in range");
        let band_delta = band_to_classical(&delta_band(n));
        let candidates = [
            ("delta^n", delta_classical.pow(n)),
            ("band delta^n", band_delta.pow(n)),
            ("alpha^(n-1)", alpha.pow(n - 1)),
            ("Delta^2", BraidWord::delta(n).pow(2)),
        ];
        for (label, x) in candidates {
            let nf = normalize(&x);
            ensure(nf.inf == 2 && nf.factors.is_empty(), || format!("n={n}: {label} normalizes to {nf}"))?;
        }
    }
    Ok("all normalize to D^2 for n = 2..6".into())
}

fn c05_trace() -> std::result::Result<String, String> {
    let tz = |s: &str| LaurentPoly::parse(&trace_vars(), s).expect("valid");
    let t1 = ocneanu_trace(&hecke_image(&w("2: 1 1 1")));
    let e1 = &(&tz("t^2 - t + 1") * &tz("z")) + &tz("t^2 - t");
    ensure(t1 == e1, || format!("tr(σ₁³) = {t1}"))?;
    let t2 = ocneanu_trace(&hecke_image(&w("3: 1 -2 1 -2")));
    let a = tz("3 - t^-1 - t");
    let e2 = &(&(&a * &tz("t^-1*z^2")) + &(&a * &tz("t^-1*z - z"))) - &tz("2 - t^-1 - t");
    ensure(t2 == e2, || format!("tr(σ₁σ₂⁻¹σ₁σ₂⁻¹) = {t2}"))?;
    Ok(format!("{t1}; {t2}"))
}

fn c06_homfly() -> std::result::Result<String, String> {
    let tref = parse_homfly("2*l^2 - l^4 + l^2*m^2").expect("valid");
    let fig8 = parse_homfly("l^-2 - m^2 - 1 + l^2").expect("valid");
    for (label, word, diagram, expected) in [("trefoil", w("2: 1 1 1"), trefoil(), &tref), ("figure-eight", w("3: 1 -2 1 -2"), figure_eight(), &fig8)] {
        let by_trace = homfly_via_trace(&word);
        let by_skein = homfly_via_skein(&diagram).map_err(|e| e.to_string())?;
        let by_closure = homfly_via_skein(&closure(&word)).map_err(|e| e.to_string())?;
        ensure(by_trace == *expected && by_skein == *expected && by_closure == *expected, || {
            format!("{label}: trace {by_trace}, skein {by_skein}, closure skein {by_closure}")
        })?;
    }
    Ok(format!("trefoil {tref}; figure-eight {fig8}"))
}

fn c07_markov() -> std::result::Result<String, String> {
    let mut rng = StdRng::seed_from_u64(SEED ^ 7);
    for _ in 0..500 {
        let n = rng.gen_range(2..=4);
        let x = random_word(&mut rng, n, 0, 8);
        let p = homfly_via_trace(&x);
        let a = random_word(&mut rng, n, 0, 4);
        let conj = a.inverse().concat(&x).and_then(|y| y.concat(&a)).map_err(|e| e.to_string())?;
        ensure(homfly_via_trace(&conj) == p, || format!("conjugating {x} by {a} changes HOMFLY"))?;
        for positive in [true, false] {
            let s = stabilize(&x, positive);
            ensure(homfly_via_trace(&s) == p, || format!("stabilizing {x} to {s} changes HOMFLY"))?;
        }
    }
    Ok("500 braids".into())
}

fn c08_morton() -> std::result::Result<String, String> {
    let x = w("4: -3 -3 2 -3 2 1 1 1 -2 1 -2");
    let p = homfly_via_trace(&x);
    ensure(p.is_one(), || format!("HOMFLY {p}"))?;
    let a = alexander(&x);
    ensure(a.is_one(), || format!("Alexander {a}"))?;
    let xp = w("4: -2 -2 1 -2 3 2 2 2 -1 2 -3");
    let c = w("4: 3 2 1");
    let conj = c.concat(&x).and_then(|y| y.concat(&c.inverse())).map_err(|e| e.to_string())?;
    ensure(are_conjugate(&conj, &xp).map_err(|e| e.to_string())?.is_some(), || "X' is not conjugate to X".into())?;
    let (w1, w2) = exchange_factorization(&xp).ok_or("no exchange factorization of X'")?;
    ensure(w1 == w("4: -2 -2 1 -2") && w2 == w("4: 2 2 2 -1 2"), || format!("factorization {w1} / {w2}"))?;
    Ok(format!("HOMFLY 1, Alexander 1, X' = ({}) s3 ({}) s3^-1", w1.to_sigma_string(), w2.to_sigma_string()))
}

fn c09_yamada_vogel() -> std::result::Result<String, String> {
    let yv = seifert::yamada_vogel(&five_two()).map_err(|e| e.to_string())?;
    ensure(yv.circles == 4 && yv.initial_height == 2 && yv.moves == 2 && yv.braid.strands() == 4, || {
        format!("circles {}, height {}, moves {}, braid {}", yv.circles, yv.initial_height, yv.moves, yv.braid)
    })?;
    let p = homfly_via_trace(&yv.braid);
    let known4 = homfly_via_trace(&w("4: 2 -1 2 -3 2 1 2 3 2"));
    let known3 = homfly_via_trace(&w("3: 2 -1 2 1 1 2"));
    ensure(p == known4 && p == known3, || format!("braid {} has HOMFLY {p}", yv.braid))?;
    Ok(format!("braid {}, HOMFLY {p}", yv.braid))
}

fn c10_height() -> std::result::Result<String, String> {
    let mut rng = StdRng::seed_from_u64(SEED ^ 10);
    let mut total_moves = 0;
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(2..=4);
        let x = random_word(&mut rng, n, 1, 6);
        let mut d = closure(&x);
        for _ in 0..rng.gen_range(1..=2) {
            let faces = d.face_boundaries();
            let options: Vec<_> = faces.iter().filter(|f| f.iter().map(|e| e.0).collect::<std::collections::BTreeSet<_>>().len() >= 2).collect();
            if options.is_empty() {
                break;
            }
            let f = options[rng.gen_range(0..options.len())];
            let i = rng.gen_range(0..f.len());
            let mut j = rng.gen_range(0..f.len());
            while f[j].0 == f[i].0 {
                j = rng.gen_range(0..f.len());
            }
            let ((a, sa), (b, sb)): ((u32, Side), (u32, Side)) = (f[i], f[j]);
            d = d.finger_move(a, sa, b, sb, rng.gen_bool(0.5)).map_err(|e| format!("finger move on {x}: {e}"))?;
        }
        let yv = seifert::yamada_vogel(&d).map_err(|e| format!("{x}: {e}"))?;
        let c = yv.circles;
        ensure(yv.heights.windows(2).all(|h| h[1] + 1 == h[0]), || format!("{x}: heights {:?}", yv.heights))?;
        ensure(yv.moves == yv.initial_height && yv.initial_height <= (c.max(2) - 1) * (c.max(2) - 2) / 2, || {
            format!("{x}: {} moves from height {} with {c} circles", yv.moves, yv.initial_height)
        })?;
        ensure(yv.braid.strands() == c, || format!("{x}: read {} on {c} circles", yv.braid))?;
        ensure(homfly_via_trace(&yv.braid) == homfly_via_trace(&x), || format!("{x}: read back {} with another HOMFLY", yv.braid))?;
        total_moves += yv.moves;
        done += 1;
    }
    Ok(format!("200 diagrams, {total_moves} reducing moves"))
}

fn c11_oracles() -> std::result::Result<String, String> {
    let mut rng = StdRng::seed_from_u64(SEED ^ 11);
    let mut equal_pairs = 0;
    for k in 0..1000 {
        let n = rng.gen_range(2..=5);
        let u = random_word(&mut rng, n, 0, 12);
        let v = match k % 3 {
            0 => random_rewrite(&mut rng, &u),
            1 => random_word(&mut rng, n, 0, 12),
            _ => {
                let mut v = random_rewrite(&mut rng, &u);
                if !v.is_empty() {
                    let mut l = v.letters().to_vec();
                    let p = rng.gen_range(0..l.len());
                    l[p] = -l[p];
                    v = BraidWord::new(n, l).expect("in range");
                }
                v
            }
        };
        let g = equal(&u, &v).map_err(|e| e.to_string())?;
        let a = word_oracle_equal(&u, &v).map_err(|e| e.to_string())?;
        ensure(g == a, || format!("{u} vs {v}: normal forms say {g}, Artin action says {a}"))?;
        if n <= 3 {
            let b = burau_equal(&u, &v).map_err(|e| e.to_string())?;
            ensure(g == b, || format!("{u} vs {v}: normal forms say {g}, Burau says {b}"))?;
        }
        equal_pairs += usize::from(g);
    }
    Ok(format!("1000 pairs, {equal_pairs} equal"))
}

fn c12_conjugacy() -> std::result::Result<String, String> {
    let mut rng = StdRng::seed_from_u64(SEED ^ 12);
    for _ in 0..200 {
        let n = rng.gen_range(2..=4);
        let x = random_word(&mut rng, n, 0, 8);
        let a = random_word(&mut rng, n, 0, 8);
        let y = a.inverse().concat(&x).and_then(|z| z.concat(&a)).map_err(|e| e.to_string())?;
        let ux = ultra_summit_set(&normalize(&x)).map_err(|e| e.to_string())?;
        let uy = ultra_summit_set(&normalize(&y)).map_err(|e| e.to_string())?;
        ensure(ux.elements == uy.elements, || format!("USS of {x} and of its conjugate by {a} differ"))?;
        let cert = are_conjugate(&x, &y).map_err(|e| e.to_string())?.ok_or_else(|| format!("{x} and {y} not found conjugate"))?;
        ensure(cert.verify(), || format!("certificate for {x} ~ {y} does not verify"))?;
    }
    let mut agreements = 0;
    for k in 0..300 {
        let u = random_word(&mut rng, 3, 0, 6);
        let v = if k % 2 == 0 {
            let a = random_word(&mut rng, 3, 0, 3);
            let c = a.inverse().concat(&u).and_then(|z| z.concat(&a)).map_err(|e| e.to_string())?;
            random_rewrite(&mut rng, &c)
        } else {
            random_word(&mut rng, 3, 0, 6)
        };
        let fast = are_conjugate(&u, &v).map_err(|e| e.to_string())?;
        let slow = brute::are_conjugate(&u, &v, 100_000).map_err(|e| e.to_string())?;
        ensure(fast.is_some() == slow, || format!("{u} ~ {v}: USS says {}, brute force says {slow}", fast.is_some()))?;
        if let Some(c) = fast {
            ensure(c.verify(), || format!("certificate for {u} ~ {v} does not verify"))?;
        }
        agreements += 1;
    }
    Ok(format!("200 USS pairs, {agreements} brute-force comparisons in B3"))
}

/// Distinct elements reachable by words of length at most `radius`, with their
/// Lawrence-Krammer images reduced mod `p`.
fn lk_ball(n: usize, radius: usize, q: u64, t: u64, p: u64) -> HashMap<NormalForm, ModMatrix> {
    let e = classical(n);
    let gens = lk_generators_mod(n, q, t, p);
    let letters: Vec<(NormalForm, &ModMatrix)> = (1..n as i32)
        .flat_map(|i| [i, -i])
        .map(|l| {
            let nf = normalize(&BraidWord::new(n, vec![l]).expect("in range"));
            let (g, gi) = &gens[l.unsigned_abs() as usize - 1];
            (nf, if l > 0 { g } else { gi })
        })
        .collect();
    let dim = n * (n - 1) / 2;
    let start = NormalForm::identity(n);
    let mut seen = HashMap::from([(start.clone(), ModMatrix::identity(dim, p))]);
    let mut frontier = VecDeque::from([(start, 0usize)]);
    while let Some((x, d)) = frontier.pop_front() {
        if d == radius {
            continue;
        }
        let mx = seen[&x].clone();
        for (l, m) in &letters {
            let y = e.multiply(&x, l).expect("same strands");
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), mx.mul(m));
                frontier.push_back((y, d + 1));
            }
        }
    }
    seen
}

fn c13_lk() -> std::result::Result<String, String> {
    for n in 3..=4 {
        let gens = lk_generators(n);
        for (g, gi) in gens.iter() {
            ensure(g.mul(gi).is_identity(), || format!("n={n}: generator times inverse is not 1"))?;
        }
        for i in 1..n as i32 {
            for j in 1..n as i32 {
                let (a, b) = if (i - j).abs() == 1 { (vec![i, j, i], vec![j, i, j]) } else { (vec![i, j], vec![j, i]) };
                let ma = lk_matrix(&BraidWord::new(n, a).expect("in range")).map_err(|e| e.to_string())?;
                let mb = lk_matrix(&BraidWord::new(n, b).expect("in range")).map_err(|e| e.to_string())?;
                ensure(ma == mb, || format!("n={n}: relation between σ{i} and σ{j} fails"))?;
            }
        }
        let twist = lk_matrix(&BraidWord::delta(n).pow(2)).map_err(|e| e.to_string())?;
        let s = lk_full_twist_scalar(n);
        let dim = twist.dim();
        let scalar = (0..dim).all(|r| (0..dim).all(|c| if r == c { *twist.get(r, c) == s } else { twist.get(r, c).is_zero() }));
        ensure(scalar, || format!("n={n}: Δ² is not {s} times the identity"))?;
    }
    let p = 2_147_483_647;
    let mut counts = Vec::new();
    for n in 2..=4 {
        let ball = lk_ball(n, 8, 3, 7, p);
        for (x, m) in &ball {
            if x.is_identity() || !m.is_identity() {
                continue;
            }
            let exact = lk_matrix(&x.to_word(&crate::garside::Classical::new(n))).map_err(|e| e.to_string())?;
            ensure(!exact.is_identity(), || format!("nontrivial {x} maps to the identity"))?;
        }
        counts.push(format!("n={n}: {} elements", ball.len()));
    }
    Ok(format!("relations and Δ² for n = 3, 4; kernel empty on balls of radius 8 ({})", counts.join(", ")))
}

fn c14_ordering() -> std::result::Result<String, String> {
    let mut rng = StdRng::seed_from_u64(SEED ^ 14);
    let err = |e: crate::Error| e.to_string();
    for _ in 0..500 {
        let n = rng.gen_range(2..=4);
        let u = random_word(&mut rng, n, 0, 8);
        let v = if rng.gen_bool(0.2) { random_rewrite(&mut rng, &u) } else { random_word(&mut rng, n, 0, 8) };
        let x = random_word(&mut rng, n, 0, 8);
        let c = ordering::compare(&u, &v).map_err(err)?;
        ensure(ordering::compare(&v, &u).map_err(err)? == c.reverse(), || format!("{u} vs {v}: not antisymmetric"))?;
        ensure((c == Ordering::Equal) == equal(&u, &v).map_err(err)?, || format!("{u} vs {v}: Equal disagrees with normal forms"))?;
        let xu = x.concat(&u).map_err(err)?;
        let xv = x.concat(&v).map_err(err)?;
        ensure(ordering::compare(&xu, &xv).map_err(err)? == c, || format!("{u} vs {v}: left multiplication by {x} changes the order"))?;
        let cv = ordering::compare(&v, &x).map_err(err)?;
        if c == cv && c != Ordering::Equal {
            ensure(ordering::compare(&u, &x).map_err(err)? == c, || format!("{u}, {v}, {x}: not transitive"))?;
        }
        let pos = random_positive_word(&mut rng, n, 1, 8);
        ensure(ordering::is_positive(&pos).map_err(err)?, || format!("positive word {pos} is not above 1"))?;
        ensure(!(ordering::is_positive(&u).map_err(err)? && ordering::is_positive(&u.inverse()).map_err(err)?), || format!("{u} and its inverse both positive"))?;
        if !normalize(&u).is_identity() {
            ensure(ordering::torsion_probe(&u, 3).map_err(err)?, || format!("torsion probe fails on {u}"))?;
        }
    }
    Ok("500 cases".into())
}
