//! Acceptance criteria; one PASS/FAIL line each. Exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use primideal::branching::{
    bounded_branch_sp, bounded_branch_sp_direct, coordinatewise_criterion, insert_left, insert_right, is_admissible,
    is_bounded_hw_sp, is_one_step, mixed_guard, restricts_to, Boundedness,
};
use primideal::cls::{is_coherent_at, NormalForm, Triple};
use primideal::half::{format_list, Half};
use primideal::hecke::{coxeter_matrix, CoxeterGroup, CoxeterType, HeckeAlgebra, KlTable};
use primideal::primitive::{
    degree_of_bounded, ideals_equal_at_level, separate, tau_conditions, tau_move, tau_move_applies, Separation,
};
use primideal::symbols::symbol_of_w;
use primideal::tableaux::{p_of_w, rs_insert_sequence, rs_of_permutation, Partition};
use primideal::weyl::{Algebra, GroupType, SignedPermutation, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Report {
    ok: bool,
    detail: String,
    info: Vec<String>,
}

impl Report {
    fn check(ok: bool, detail: impl Into<String>) -> Self {
        Report { ok, detail: detail.into(), info: Vec::new() }
    }
    fn with_info(mut self, line: impl Into<String>) -> Self {
        self.info.push(line.into());
        self
    }
}

fn h(v: &[i64]) -> Vec<Half> {
    v.iter().map(|&x| Half::from_int(x)).collect()
}

// 1
fn rs_golden() -> Report {
    let expected = r#"{"insertion":{"rows":[[6,4,2],[5,3],[3],[1]]},"recording":{"rows":[[7,6,4],[5,1],[3],[2]]},"steps":[{"insertion":{"rows":[[5]]},"recording":{"rows":[[7]]}},{"insertion":{"rows":[[5,1]]},"recording":{"rows":[[7,6]]}},{"insertion":{"rows":[[5,3],[1]]},"recording":{"rows":[[7,6],[5]]}},{"insertion":{"rows":[[5,3,2],[1]]},"recording":{"rows":[[7,6,4],[5]]}},{"insertion":{"rows":[[5,3,2],[3],[1]]},"recording":{"rows":[[7,6,4],[5],[3]]}},{"insertion":{"rows":[[6,3,2],[5],[3],[1]]},"recording":{"rows":[[7,6,4],[5],[3],[2]]}},{"insertion":{"rows":[[6,4,2],[5,3],[3],[1]]},"recording":{"rows":[[7,6,4],[5,1],[3],[2]]}}]}"#;
    let out = primideal::cli::run(["primideal", "--json", "rs", "5,1,3,2,3,6,4"]);
    let got = out.stdout.trim_end();
    Report::check(out.code == 0 && got == expected, format!("{} steps byte-compared", 7))
}

// 2
fn longest_decreasing(seq: &[i64]) -> usize {
    let n = seq.len();
    (0u32..1 << n)
        .filter(|mask| {
            let picked: Vec<i64> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| seq[i]).collect();
            picked.windows(2).all(|p| p[0] > p[1])
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn lds_law() -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut bad = 0;
    for _ in 0..500 {
        let len = rng.gen_range(1..=12);
        let seq: Vec<i64> = (0..len).map(|_| rng.gen_range(1..=9)).collect();
        let (p, _) = rs_insert_sequence(&seq).expect("positive entries");
        if p.rows[0].len() != longest_decreasing(&seq) {
            bad += 1;
        }
    }
    Report::check(bad == 0, format!("500 sequences, {bad} mismatches"))
}

// 3
fn symbol_round_trip() -> Report {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (n, ty) in [(2, GroupType::C), (3, GroupType::C), (3, GroupType::D)] {
        for w in SignedPermutation::all_elements(n, ty) {
            checked += 1;
            let ok = match symbol_of_w(&w) {
                Ok(s) => {
                    let m = s.m() as u64;
                    let need = match ty {
                        GroupType::C => n as u64 + m * m,
                        GroupType::D => n as u64 + m * m.saturating_sub(1),
                    };
                    s.nu() == p_of_w(&w) && s.entry_sum() == need
                }
                Err(_) => false,
            };
            if !ok {
                bad.push(format!("{ty:?}{n} {:?}", w.images()));
            }
        }
    }
    Report::check(bad.is_empty(), format!("{checked} elements, {} failures {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
}

// 4
fn kl_contract() -> Report {
    let mut problems = Vec::new();
    let mut pairs = 0;
    for (ty, r) in [(CoxeterType::A, 2), (CoxeterType::C, 2), (CoxeterType::D, 3)] {
        let g = CoxeterGroup::of_type(ty, r).expect("finite group");
        let kl = KlTable::compute(&g).expect("small group");
        let mut hk = HeckeAlgebra::new(&g);
        for y in 0..g.size() {
            let c = kl.canonical(&hk, y);
            if hk.bar(&c).expect("same system") != c {
                problems.push(format!("{ty:?}{r}: C_{y} not bar-invariant"));
            }
            for x in 0..g.size() {
                pairs += 1;
                let p = kl.polynomial(x, y);
                let ok = if x == y {
                    p == [1]
                } else if !g.bruhat_leq(x, y) {
                    p.is_empty()
                } else {
                    let deg = p.len() as i64 - 1;
                    let ok = !p.is_empty() && 2 * deg <= g.length(y) as i64 - g.length(x) as i64 - 1;
                    ok && (ty != CoxeterType::A || p == [1])
                };
                if !ok {
                    problems.push(format!("{ty:?}{r}: P({x},{y}) = {p:?}"));
                }
            }
        }
    }
    Report::check(problems.is_empty(), format!("{pairs} pairs, {} problems {:?}", problems.len(), problems.iter().take(3).collect::<Vec<_>>()))
}

// 5
fn kl_subgroup_identity() -> Report {
    let c3: Vec<SignedPermutation> = SignedPermutation::simple_reflections(3, GroupType::C);
    // s_1, s_2 and the conjugate s_3 s_2 s_3 generate the even sign changes
    let t = c3[2].compose(&c3[1]).and_then(|x| x.compose(&c3[2])).expect("same rank");
    let gens: Vec<Vec<i32>> = [&c3[0], &c3[1], &t].iter().map(|s| s.images().to_vec()).collect();
    let full = CoxeterGroup::of_type(CoxeterType::C, 3).expect("C3");
    let sub = CoxeterGroup::from_generators(&gens).expect("reflection subgroup");
    let abs = CoxeterGroup::from_coxeter_matrix(coxeter_matrix(CoxeterType::D, 3)).expect("D3");
    if full.size() != 2 * sub.size() || sub.matrix() != abs.matrix() {
        return Report::check(false, format!("index {} / matrix mismatch", full.size() as f64 / sub.size() as f64));
    }
    let (ks, ka) = (KlTable::compute(&sub).expect("24"), KlTable::compute(&abs).expect("24"));
    let map: Vec<usize> = (0..abs.size()).map(|w| sub.eval_word(abs.word(w))).collect();
    let mut bad = 0;
    for x in 0..abs.size() {
        for y in 0..abs.size() {
            if ka.polynomial(x, y) != ks.polynomial(map[x], map[y]) {
                bad += 1;
            }
        }
    }
    Report::check(bad == 0, format!("{} entries, {bad} mismatches", abs.size() * abs.size()))
}

fn tuples(width: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..width {
        out = out
            .into_iter()
            .flat_map(|t| (lo..=hi).map(move |v| [t.clone(), vec![v]].concat()))
            .filter(|t| t.windows(2).all(|p| p[0] >= p[1]))
            .collect();
    }
    out
}

// 6
fn coordinatewise_oracle() -> Report {
    let mut cases = 0;
    let mut bad = Vec::new();
    for alg in [Algebra::Sp, Algebra::O] {
        let lo = if alg == Algebra::O { -4 } else { 0 };
        for w in 1..=2 {
            for lam in tuples(w, lo, 4).into_iter().map(|t| h(&t)).filter(|t| is_admissible(t, alg)) {
                for mu in tuples(2 * w, lo, 4).into_iter().map(|t| h(&t)).filter(|t| is_admissible(t, alg)) {
                    cases += 1;
                    let a = coordinatewise_criterion(&lam, &mu, alg).expect("width precondition holds");
                    let b = restricts_to(&mu, &lam, alg).expect("admissible");
                    if a != b {
                        bad.push(format!("{alg:?} λ=({}) μ=({})", format_list(&lam), format_list(&mu)));
                    }
                }
            }
        }
    }
    Report::check(bad.is_empty(), format!("{cases} pairs, {} mismatches {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
}

// 7
fn monotone_operators() -> Report {
    fn count(alg: Algebra, lo: i64) -> (usize, Vec<String>) {
        let mut checks = 0;
        let mut bad = Vec::new();
        for w in 1..=3 {
            for mu in tuples(w, lo, 4).into_iter().map(|t| h(&t)).filter(|t| is_admissible(t, alg)) {
                for lam in tuples(w - 1, lo, 4).into_iter().map(|t| h(&t)).filter(|t| is_one_step(&mu, t, alg)) {
                    for k in (-1..=5).map(Half::from_int) {
                        let (rm, rl) = (insert_right(&mu, k), insert_right(&lam, k));
                        let (lm, ll) = (insert_left(&mu, k), insert_left(&lam, k));
                        let adm = |a: &[Half], b: &[Half]| is_admissible(a, alg) && is_admissible(b, alg);
                        let mut test = |name: &str, a: &[Half], b: &[Half]| {
                            checks += 1;
                            if !is_one_step(a, b, alg) {
                                bad.push(format!("{name} {alg:?} μ=({}) λ=({}) k={k}", format_list(&mu), format_list(&lam)));
                            }
                        };
                        if adm(&rm, &rl) {
                            test("R/R", &rm, &rl);
                        }
                        if adm(&lm, &ll) {
                            test("L/L", &lm, &ll);
                        }
                        if mixed_guard(&lam, &mu, k) && adm(&lm, &rl) {
                            test("L/R", &lm, &rl);
                        }
                    }
                }
            }
        }
        (checks, bad)
    }
    let mut checks = 0;
    let mut bad = Vec::new();
    for alg in [Algebra::Sp, Algebra::O] {
        let (c, b) = count(alg, 0);
        checks += c;
        bad.extend(b);
    }
    let (signed_checks, signed_bad) = count(Algebra::O, -4);
    Report::check(bad.is_empty(), format!("{checks} checks, {} counterexamples {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
        .with_info(format!(
            "signed o entries in [-4,4]: {signed_checks} checks, {} counterexamples, e.g. {:?}",
            signed_bad.len(),
            signed_bad.first()
        ))
}

fn random_bounded(rng: &mut ChaCha8Rng, n: usize) -> Vec<Half> {
    loop {
        let mut d = vec![0i64; n];
        d[n - 1] = 2 * rng.gen_range(-2i64..=3) + 1;
        for i in (0..n - 1).rev() {
            d[i] = d[i + 1] + 2 * rng.gen_range(0i64..=3);
        }
        let lam: Vec<Half> = d.iter().map(|&x| Half::from_doubled(x)).collect();
        if is_bounded_hw_sp(&lam) == Boundedness::BoundedInfinite {
            return lam;
        }
    }
}

// 8
fn bounded_correspondence() -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut bad = Vec::new();
    for i in 0..200 {
        let lam = random_bounded(&mut rng, 2 + i % 3);
        let a = bounded_branch_sp(&lam);
        let b = bounded_branch_sp_direct(&lam);
        if a.is_err() || a.ok() != b.ok() {
            bad.push(format_list(&lam));
        }
    }
    Report::check(bad.is_empty(), format!("200 weights, {} disagreements {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
}

// 9
fn degree_formula() -> Report {
    let sw_ok = (1..=6).all(|n| degree_of_bounded(&Weight::from_doubled(&vec![-1; n])).ok() == Some(BigInt::from(1)));
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut bad = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let lam = random_bounded(&mut rng, n);
        if degree_of_bounded(&Weight::new(lam)).is_err() {
            bad += 1;
        }
    }
    Report::check(sw_ok && bad == 0, format!("SW+ degree 1 for n=1..6: {sw_ok}; 100 random weights, {bad} inexact"))
}

// 10
fn coherence_grid() -> Report {
    let mut forms = BTreeMap::new();
    for alg in [Algebra::O, Algebra::Sp] {
        for v in 0..=1u32 {
            for x1 in 0..=2u32 {
                for x2 in 0..=2u32 {
                    for m in 0..=2u32 {
                        for spinor in [false, true] {
                            let x: BTreeMap<u32, u32> =
                                [(1, x1), (2, x2)].into_iter().filter(|&(p, e)| e > 0 && p > v).collect();
                            if let Ok(nf) = NormalForm::new(v, x, m, spinor, alg) {
                                forms.insert(nf.to_string(), nf);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut bad = Vec::new();
    let mut cases = 0;
    for nf in forms.values() {
        for n in [3, 4] {
            cases += 1;
            if !is_coherent_at(nf, n, Some(5)).unwrap_or(false) {
                bad.push(format!("{nf} n={n}"));
            }
        }
    }
    Report::check(bad.is_empty(), format!("{} forms, {cases} cases, {} failures {:?}", forms.len(), bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
}

// 11
fn separation_grid() -> Report {
    let ys = [Half::ZERO, Half::HALF, Half::ONE, Half::from_doubled(3)];
    let zs: Vec<Partition> = (0..=3).flat_map(Partition::all_of).collect();
    let mut triples = Vec::new();
    for x in 0..=2 {
        for &y in &ys {
            for z in &zs {
                triples.push(Triple::new(x, y, z.clone()).expect("y >= 0"));
            }
        }
    }
    let alg = Algebra::Sp;
    let self_ok = triples
        .iter()
        .all(|t| matches!(separate(t, t, 5, 6, alg), Ok(Separation::Indistinguishable { .. })));
    let mut unseparated = Vec::new();
    let mut pairs = 0;
    for i in 0..triples.len() {
        for j in i + 1..triples.len() {
            pairs += 1;
            match separate(&triples[i], &triples[j], 5, 6, alg) {
                Ok(Separation::Separated { .. }) => {}
                _ => unseparated.push((triples[i].clone(), triples[j].clone())),
            }
        }
    }
    let mut r = Report::check(
        self_ok && unseparated.is_empty(),
        format!("{pairs} pairs, {} unseparated within n<=5, B<=6; equal triples never separated: {self_ok}", unseparated.len()),
    );
    for (a, b) in &unseparated {
        let at6 = ideals_equal_at_level(a, b, 6, 6, alg).map(|eq| if eq { "still equal" } else { "separated" });
        r = r.with_info(format!("{a} vs {b}: at n=6, B=6 {}", at6.unwrap_or("error")));
    }
    r
}

// 12
fn tau_soundness() -> Report {
    let mut applies = 0;
    let mut kept = 0;
    let mut by_cond = [[0usize; 3]; 8];
    for (n, ty) in [(3, GroupType::D), (3, GroupType::C)] {
        for w in SignedPermutation::all_elements(n, ty) {
            for i in -(n as i32) + 1..=-1 {
                if !tau_move_applies(&w, i).expect("index in range") {
                    continue;
                }
                applies += 1;
                let moved = tau_move(&w, i).expect("index in range");
                let same_p = rs_of_permutation(&moved).0 == rs_of_permutation(&w).0;
                let same_q = rs_of_permutation(&moved).1 == rs_of_permutation(&w).1;
                kept += same_p as usize;
                for (c, hit) in tau_conditions(&w, i).expect("index in range").iter().enumerate() {
                    if *hit {
                        by_cond[c][0] += 1;
                        by_cond[c][1] += same_p as usize;
                        by_cond[c][2] += same_q as usize;
                    }
                }
            }
        }
    }
    let mut r = Report::check(applies > 0 && kept == applies, format!("{applies} applicable moves, insertion tableau kept in {kept}"));
    for (c, [hits, p, q]) in by_cond.iter().enumerate() {
        r = r.with_info(format!("condition {}: {hits} hits, insertion kept {p}, recording kept {q}", c + 1));
    }
    r
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Report); 12] = [
        ("RS golden vectors", Duration::from_millis(1), rs_golden),
        ("longest-decreasing-subsequence law", Duration::from_secs(5), lds_law),
        ("symbol round-trip", Duration::from_secs(1), symbol_round_trip),
        ("KL contract", Duration::from_secs(30), kl_contract),
        ("KL identity for the D3 reflection subgroup", Duration::from_secs(60), kl_subgroup_identity),
        ("coordinatewise restriction oracle", Duration::from_secs(60), coordinatewise_oracle),
        ("R/L monotonicity", Duration::from_secs(60), monotone_operators),
        ("bounded branching correspondence", Duration::from_secs(30), bounded_correspondence),
        ("degree formula", Duration::from_secs(10), degree_formula),
        ("coherence of normal forms", Duration::from_secs(120), coherence_grid),
        ("separation of triples", Duration::from_secs(300), separation_grid),
        ("tau-move soundness", Duration::from_secs(10), tau_soundness),
    ];
    let mut failures = 0;
    for (i, (name, budget, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let report = f();
        let took = start.elapsed();
        let in_time = took <= *budget;
        let ok = report.ok && in_time;
        failures += !ok as usize;
        let timing = if in_time { String::new() } else { format!(" over budget {budget:?}") };
        println!(
            "{} {:>2} {name}: {} [{took:.2?}{timing}]",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            report.detail
        );
        for line in report.info {
            println!("        {line}");
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
