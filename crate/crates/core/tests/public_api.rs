use fockcap::lie::{check_branching, run_lie_checks, LieCheck};
use fockcap::relations::check_classical_limit;
use fockcap::{AlgebraSpec, Backend, Execution, FockSpace, Generators, Kind};

#[test]
fn branching_with_empty_fermi_grades() {
    // p > n leaves the top grades empty
    let space = FockSpace::new(AlgebraSpec::fermi(2, 4).unwrap());
    let report = check_branching(&space, &Generators::exact(&space));
    assert!(report.pass);
    let dims: Vec<usize> = report.blocks.iter().map(|b| b.dimension).collect();
    assert_eq!(dims, [1, 2, 1, 0, 0]);
}

#[test]
fn lie_checks_agree_across_execution_modes() {
    let spec = AlgebraSpec::bose(2, 3).unwrap();
    let seq = run_lie_checks(spec, LieCheck::All, Backend::Exact, Execution::Sequential);
    let par = run_lie_checks(spec, LieCheck::All, Backend::Exact, Execution::Parallel);
    assert_eq!(seq, par);
    assert!(seq.pass());
}

#[test]
fn classical_limit_window_one_fermi_is_flat() {
    // one-particle window sees no deformation for fermions
    let report = check_classical_limit(Kind::Fermi, 2, 1, &[10, 100]).unwrap();
    assert!(report.points.iter().all(|p| p.deviation == 0.0));
    assert!(report.pass && !report.strictly_decreasing);
}
