//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::time::{Duration, Instant};

use fockcap::basis::binomial;
use fockcap::lie::{run_lie_checks, LieCheck};
use fockcap::model::{diagonal_hamiltonian, exact_spectrum, quadratic_hamiltonian_spectrum, toy_levels, toy_spectrum, Eigenvalue};
use fockcap::relations::{check_classical_limit, grid, vacuum_span_rank, verify_specs};
use fockcap::{AlgebraSpec, Backend, Exact, Execution, FockBasis, FockSpace, Generators, Kind, Scalar};
use num_bigint::BigInt;

const KINDS: [Kind; 2] = [Kind::Fermi, Kind::Bose];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

fn q(n: i64, d: i64) -> Exact {
    Exact::ratio(n, d)
}

fn relation_suite() -> Outcome {
    let start = Instant::now();
    let reports = verify_specs(&grid(&KINDS, 4, 4), Backend::Exact, Execution::Parallel);
    let elapsed = start.elapsed();
    let wanted = ["pp.", "number.", "mixed", "hermiticity", "cap"];
    let relevant: Vec<_> = reports
        .iter()
        .filter(|r| wanted.iter().any(|w| r.relation.starts_with(w)))
        .collect();
    let failures = relevant.iter().filter(|r| !(r.pass && r.residual.is_exact_zero())).count();
    let specs_covered = {
        let mut s: Vec<_> = relevant.iter().map(|r| r.spec).collect();
        s.dedup();
        s.len()
    };
    Outcome::new(
        failures == 0 && specs_covered == 32 && elapsed < Duration::from_secs(10),
        format!("{} reports over {specs_covered} specs, {failures} nonzero, {elapsed:.2?} (limit 10s)", relevant.len()),
    )
}

/// `p! prod(l_i!) / (p^k (p-k)!)` evaluated independently with big integers.
fn norm_formula(p: u32, entries: &[u32]) -> Exact {
    let fact = |m: u32| (1..=m).fold(BigInt::from(1), |a, x| a * x);
    let k: u32 = entries.iter().sum();
    let num = entries.iter().fold(fact(p), |a, &l| a * fact(l));
    Exact::new(num, BigInt::from(p).pow(k) * fact(p - k))
}

/// `<v|v> = <0| ... (a_1^-)^{v_1} (a_1^+)^{v_1} ... |0>` via the matrices.
fn gram_from_matrices(g: &Generators<Exact>, entries: &[u32]) -> Exact {
    let dim = g.dimension();
    let mut vector = vec![Exact::from_i64(0); dim];
    vector[0] = Exact::from_i64(1);
    // |v> = (a_1^+)^{v_1} (a_2^+)^{v_2} ... |0>: apply the last mode first
    for i in (0..entries.len()).rev() {
        for _ in 0..entries[i] {
            vector = g.creation[i].apply(&vector);
        }
    }
    // the bra side is the adjoint product, so the first mode is lowered first
    for i in 0..entries.len() {
        for _ in 0..entries[i] {
            vector = g.annihilation[i].apply(&vector);
        }
    }
    vector.swap_remove(0)
}

fn gram_formulas() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for spec in grid(&KINDS, 4, 4) {
        let space = FockSpace::new(spec);
        let gram = space.gram();
        let g = Generators::exact(&space);
        for (rank, v) in space.basis().states().iter().enumerate() {
            let formula = norm_formula(spec.p(), v.entries());
            let oracle = gram_from_matrices(&g, v.entries());
            checked += 1;
            if gram.get(rank) != &formula || formula != oracle {
                failures.push(format!("{spec} {v}"));
            }
        }
    }
    let spot = {
        let s = FockSpace::new(AlgebraSpec::fermi(3, 2).unwrap());
        s.gram().get(s.basis().grade_range(2).start) == &q(1, 2)
    };
    Outcome::new(
        failures.is_empty() && spot,
        format!("{checked} basis vectors, {} mismatches {:?}", failures.len(), failures.iter().take(3).collect::<Vec<_>>()),
    )
}

fn brute_force_grades(spec: AlgebraSpec) -> Vec<usize> {
    let max = match spec.kind() {
        Kind::Fermi => 1,
        Kind::Bose => spec.p(),
    };
    let mut counts = vec![0usize; spec.p() as usize + 1];
    let total_tuples = (max as usize + 1).pow(spec.n() as u32);
    for code in 0..total_tuples {
        let mut rest = code;
        let mut sum = 0u32;
        for _ in 0..spec.n() {
            sum += (rest % (max as usize + 1)) as u32;
            rest /= max as usize + 1;
        }
        if sum <= spec.p() {
            counts[sum as usize] += 1;
        }
    }
    counts
}

fn dimensions() -> Outcome {
    let mut ok = true;
    for spec in grid(&KINDS, 6, 6) {
        let (n, p) = (spec.n() as u64, spec.p() as u64);
        let closed: Vec<usize> = (0..=p)
            .map(|k| match spec.kind() {
                Kind::Fermi => binomial(n, k),
                Kind::Bose => binomial(n + k - 1, k),
            } as usize)
            .collect();
        let brute = brute_force_grades(spec);
        ok &= spec.graded_dimensions() == closed
            && brute == closed
            && spec.dimension() == closed.iter().sum::<usize>()
            && FockBasis::new(spec).dimension() == spec.dimension();
    }
    let f42 = AlgebraSpec::fermi(4, 2).unwrap();
    let b33 = AlgebraSpec::bose(3, 3).unwrap();
    let examples = f42.dimension() == 11 && f42.graded_dimensions() == vec![1, 4, 6] && b33.dimension() == 20;
    Outcome::new(ok && examples, "n,p <= 6 closed form = enumeration = brute force; Fermi(4,2) = 11 [1,4,6], Bose(3,3) = 20")
}

fn lie_structure() -> Outcome {
    let specs = grid(&KINDS, 3, 4);
    let mut total = 0;
    let mut bad = Vec::new();
    for spec in specs {
        let report = run_lie_checks(spec, LieCheck::All, Backend::Exact, Execution::Parallel);
        total += report.reports.len();
        let exact_zero = report.reports.iter().all(|r| r.pass && r.residual.is_exact_zero());
        let weight_ok = report.vacuum_weight.as_ref().is_some_and(|w| {
            w.coordinates[0] == spec.p() as i64 && w.coordinates[1..].iter().all(|&c| c == 0)
        });
        let branching_ok = report.branching.as_ref().is_some_and(|b| b.pass);
        let families = ["gl.commutator", "adjoint.creation", "adjoint.annihilation", "identify.bracket", "identify.identity", "identify.number", "highest_weight"];
        let complete = families.iter().all(|f| report.reports.iter().any(|r| r.relation == *f));
        if !(exact_zero && weight_ok && branching_ok && complete) {
            bad.push(spec.to_string());
        }
    }
    Outcome::new(bad.is_empty(), format!("{total} exact bracket/identification reports, failing specs {bad:?}"))
}

fn toy_model() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    for p in [1u32, 2, 3, 10, 100] {
        let space = FockSpace::new(AlgebraSpec::bose(2, p).unwrap());
        let h = diagonal_hamiltonian(&space, &[q(1, 1), q(1, 1)]).unwrap();
        ok &= exact_spectrum(&h).map(|s| s == toy_spectrum(p)).unwrap_or(false);
        let levels = toy_levels(p);
        for w in levels.windows(2) {
            let gap = q(1, 1) - q(2 * w[0].n as i64, p as i64);
            ok &= w[1].energy.clone() - w[0].energy.clone() == gap && w[0].gap.as_ref() == Some(&gap);
        }
        ok &= levels.iter().all(|l| l.mult == l.n as usize + 1);
    }
    let level3 = &toy_levels(10)[3];
    let e3 = level3.energy == q(12, 5) && level3.mult == 4;
    let p2: Vec<(Eigenvalue, usize)> = toy_spectrum(2).levels.into_iter().map(|l| (l.value, l.mult)).collect();
    let p2_ok = p2 == vec![(Eigenvalue::Exact(q(0, 1)), 1), (Eigenvalue::Exact(q(1, 1)), 5)];
    let elapsed = start.elapsed();
    Outcome::new(
        ok && e3 && p2_ok && elapsed < Duration::from_secs(1),
        format!("p in {{1,2,3,10,100}} closed form = diagonalization, E_3(p=10) = 12/5 mult 4, p=2 -> {{0:1, 1:5}}, {elapsed:.2?} (limit 1s)"),
    )
}

fn classical_limit() -> Outcome {
    let cases = [(Kind::Bose, 1), (Kind::Bose, 2), (Kind::Bose, 3), (Kind::Fermi, 2), (Kind::Fermi, 3)];
    let mut lines = Vec::new();
    let mut ok = true;
    for (kind, n) in cases {
        let r = check_classical_limit(kind, n, 2, &[10, 100, 1000]).unwrap();
        let bound_six = r.points.iter().all(|pt| pt.deviation <= 6.0 / pt.p as f64);
        ok &= r.pass && bound_six && r.strictly_decreasing;
        let devs: Vec<String> = r.points.iter().map(|pt| format!("{:.2e}", pt.deviation)).collect();
        lines.push(format!("{kind}{n}:[{}]", devs.join(",")));
    }
    Outcome::new(ok, format!("window 2, sup-dev <= 6/p and strictly decreasing: {}", lines.join(" ")))
}

fn irreducibility() -> Outcome {
    let mut bad = Vec::new();
    for spec in grid(&KINDS, 4, 4) {
        let g = Generators::exact(&FockSpace::new(spec));
        if vacuum_span_rank(&g) != spec.dimension() {
            bad.push(spec.to_string());
        }
    }
    Outcome::new(bad.is_empty(), format!("vacuum span rank = dimension on 32 specs, failing {bad:?}"))
}

fn backend_agreement() -> Outcome {
    let reports = verify_specs(&grid(&KINDS, 4, 4), Backend::Float, Execution::Parallel);
    let agreement: Vec<_> = reports.iter().filter(|r| r.relation.starts_with("agreement.")).collect();
    let worst = agreement
        .iter()
        .map(|r| match r.residual {
            fockcap::scalar::Residual::Float(v) => v,
            _ => f64::INFINITY,
        })
        .fold(0.0, f64::max);
    let ops_ok = !agreement.is_empty() && worst <= 1e-12;

    let energies = [q(1, 1), q(1, 2), q(3, 4), q(2, 1)];
    let mut spectra_ok = true;
    let mut worst_level: f64 = 0.0;
    for spec in grid(&KINDS, 4, 4) {
        let n = spec.n();
        let eps = &energies[..n];
        let exact = exact_spectrum(&diagonal_hamiltonian(&FockSpace::new(spec), eps).unwrap()).unwrap();
        let table: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { eps[i].to_f64() } else { 0.0 }).collect())
            .collect();
        let float = quadratic_hamiltonian_spectrum(spec, &table).unwrap();
        spectra_ok &= exact.levels.len() == float.levels.len();
        for (a, b) in exact.levels.iter().zip(&float.levels) {
            let d = (a.value.to_f64() - b.value.to_f64()).abs();
            worst_level = worst_level.max(d);
            spectra_ok &= a.mult == b.mult && d <= 1e-10;
        }
    }
    Outcome::new(
        ops_ok && spectra_ok,
        format!("operator entries max dev {worst:.1e} (<= 1e-12), diagonal spectra max dev {worst_level:.1e} (<= 1e-10)"),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 exact relation suite", relation_suite),
        ("2 norm / Gram formulas", gram_formulas),
        ("3 dimensions and grading", dimensions),
        ("4 Lie structure", lie_structure),
        ("5 toy model", toy_model),
        ("6 classical limit", classical_limit),
        ("7 irreducibility witness", irreducibility),
        ("8 backend agreement", backend_agreement),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = run();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {name}: {}", outcome.detail);
        failed += usize::from(!outcome.pass);
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
