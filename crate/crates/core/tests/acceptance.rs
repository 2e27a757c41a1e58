//! Acceptance criteria, one PASS/FAIL line each.
//!
//! A few statements are checked exactly as printed even though they are false;
//! their lines are listed in `DOCUMENTED_DEFECTS` and print FAIL. The process
//! exits nonzero only if some other line fails.

use std::time::{Duration, Instant};

use dforms::curvature::CurvatureTensor;
use dforms::identities::{registry, run_identity, Expectation, SuiteConfig};
use dforms::models::ModelSpec;
use dforms::pontrjagin::{
    chern_form_oracle, mixed_coefficient, mixed_pontrjagin_by_wedge, mixed_pontrjagin_form,
    mixed_pontrjagin_form_with, pontrjagin_form, pontrjagin_scalar, pontrjagin_scalar_by_contraction,
    printed_mixed_coefficient, thorpe_bound, Partition, PiScalar,
};
use dforms::random::{self, TestRng};
use dforms::rational::{factorial, int};
use dforms::{DoubleForm, Form, MultiIndex, Orientation, Rational};
use rand::seq::index::sample;
use rand::Rng;

const DOCUMENTED_DEFECTS: &[&str] = &[
    "C1 alt-g-composition-1-printed",
    "C1 alt-g-composition-2-printed",
    "C1 lemma-a-printed",
    "C1 volume-double-form-unit-norm-printed",
    "C1 interior-star-printed",
    "C5 printed coefficient, partition (2)",
];

struct Board {
    lines: Vec<(String, bool)>,
}

impl Board {
    fn check(&mut self, label: impl Into<String>, ok: bool, detail: impl AsRef<str>) {
        let label = label.into();
        let detail = detail.as_ref();
        let verdict = if ok { "PASS" } else { "FAIL" };
        if detail.is_empty() {
            println!("{verdict} {label}");
        } else {
            println!("{verdict} {label} ({detail})");
        }
        self.lines.push((label, ok));
    }
}

fn rng(seed: u64) -> TestRng {
    random::rng(seed)
}

fn random_curvature(g: &mut TestRng, n: usize) -> CurvatureTensor {
    CurvatureTensor::validate(random::curvature(g, n)).expect("generator output is a curvature tensor")
}

fn random_symmetric_one_one(g: &mut TestRng, n: usize) -> DoubleForm {
    random::symmetric(g, n, 1, 0.6)
}

fn mins(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

fn c1(board: &mut Board) {
    let start = Instant::now();
    let cfg = SuiteConfig::default();
    let ids = registry();
    let outcomes: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = ids.iter().map(|id| s.spawn(|| run_identity(id, &cfg))).collect();
        handles.into_iter().map(|h| h.join().expect("identity run")).collect()
    });
    for (id, out) in ids.iter().zip(&outcomes) {
        if id.scope == "curvature" || id.scope == "pontrjagin" {
            continue;
        }
        let detail = match &out.counterexample {
            Some(ce) => format!("counterexample at n = {}: {}", ce.n, ce.mismatch.what),
            None => format!("{} random, {} exhaustive", out.random_cases, out.exhaustive_cases),
        };
        board.check(format!("C1 {}", id.name), out.holds(), detail);
    }
    let minimum = ids
        .iter()
        .zip(&outcomes)
        .filter(|(id, out)| id.expectation == Expectation::Holds && id.scope != "volume" && out.holds())
        .filter(|(id, _)| !id.name.starts_with("mu-star-square") && id.name != "plucker-two-forms-n4")
        .all(|(_, out)| out.random_cases >= 200);
    board.check("C1 at least 200 random cases per identity with inputs", minimum, "");
    let exhaustive = outcomes
        .iter()
        .filter(|o| o.expectation == Expectation::Holds)
        .map(|o| o.exhaustive_cases)
        .sum::<usize>();
    board.check("C1 exhaustive basis cases for n ≤ 4", exhaustive > 0, format!("{exhaustive} cases"));
    let elapsed = start.elapsed();
    board.check("C1 runtime under 5 minutes", elapsed < Duration::from_secs(300), mins(elapsed));
}

fn c2(board: &mut Board) {
    let mut g = rng(2);
    let mut ok = true;
    for t in 0..50 {
        let n = 4 + t % 3;
        let r = random_curvature(&mut g, n);
        ok &= pontrjagin_form(&r, 1).unwrap() == pontrjagin_form(&r.weyl().unwrap(), 1).unwrap();
    }
    board.check("C2 P1(R) = P1(W), 50 random tensors, n = 4,5,6", ok, "");
    let mut ok = true;
    let mut nonzero = 0;
    for _ in 0..5 {
        let r = random_curvature(&mut g, 8);
        let p = pontrjagin_form(&r, 2).unwrap();
        nonzero += usize::from(!p.is_zero());
        ok &= p == pontrjagin_form(&r.weyl().unwrap(), 2).unwrap();
    }
    board.check("C2 P2(R) = P2(W), 5 random tensors, n = 8", ok, format!("{nonzero} of 5 nonzero"));
}

/// `R = g_B h_B + g h` with `h_B = κ diag(1,1,1,-1)` on a 4-element block `B`:
/// `(g_B h_B)² = 0` because `σ₂(1,1,1,-1) = 0`, so `R² = g·H` while `R` itself
/// is not divisible by `g`.
fn second_power_divisible(g: &mut TestRng) -> CurvatureTensor {
    let n = 8;
    let mut block: Vec<usize> = sample(g, n, 4).into_iter().map(|i| i + 1).collect();
    block.sort_unstable();
    let kappa = int(g.random_range(1..=3));
    let mut signs = [1i64, 1, 1, -1];
    signs.swap(0, g.random_range(0..4));
    let terms = block.iter().zip(signs).map(|(i, s)| {
        let e = MultiIndex::singleton(*i);
        ((e, e), int(s) * &kappa)
    });
    let hb = DoubleForm::from_terms(n, 1, 1, terms).unwrap();
    let gb = dforms::curvature::block_metric(n, MultiIndex::from_indices(&block).unwrap());
    let h = random_symmetric_one_one(g, n);
    let r = &(&gb * &hb) + &(&DoubleForm::metric(n) * &h);
    CurvatureTensor::validate(r).unwrap()
}

fn c3(board: &mut Board) {
    let mut g = rng(3);
    let mut ok = true;
    for t in 0..25 {
        let n = 4 + t % 3;
        let h = random_symmetric_one_one(&mut g, n);
        let r = CurvatureTensor::validate(&DoubleForm::metric(n) * &h).unwrap();
        ok &= r.is_k_conformally_flat(1).unwrap().holds();
        ok &= (1..=n / 4).all(|i| pontrjagin_form(&r, i).unwrap().is_zero());
    }
    board.check("C3 R = g h: all P_i, i ≥ 1, vanish; 25 tensors, n = 4,5,6", ok, "");
    let mut ok = true;
    let mut not_one_flat = 0;
    for _ in 0..5 {
        let r = second_power_divisible(&mut g);
        ok &= r.is_k_conformally_flat(2).unwrap().holds();
        not_one_flat += usize::from(!r.is_k_conformally_flat(1).unwrap().holds());
        ok &= pontrjagin_form(&r, 2).unwrap().is_zero();
    }
    board.check(
        "C3 R² = g H: P_2 vanishes; 5 tensors, n = 8",
        ok,
        format!("{not_one_flat} of 5 not divisible at k = 1"),
    );
}

fn c4_c8(board: &mut Board) {
    let start = Instant::now();
    let mut g = rng(4);
    let o = Orientation::Standard;
    let (mut forms, mut scalars, mut thorpe) = (true, true, true);
    for _ in 0..50 {
        let r = random_curvature(&mut g, 4);
        forms &= pontrjagin_form(&r, 1).unwrap() == chern_form_oracle(&r, 1).unwrap();
        let p = pontrjagin_scalar(&r, 1, o).unwrap();
        scalars &= p == pontrjagin_scalar_by_contraction(&r, 1, o).unwrap();
        scalars &= p == chern_form_oracle(&r, 1).unwrap().volume_pairing(o).unwrap();
        let tb = thorpe_bound(&r, 1).unwrap();
        thorpe &= tb.inequality_holds() && tb.equality_clause_holds();
    }
    board.check("C4 n = 4, k = 1: primary form = Chern oracle, 50 tensors", forms, "");
    board.check("C4 n = 4, k = 1: pairing = contraction = Chern pairing, 50 tensors", scalars, "");
    board.check("C8 n = 4, k = 1: Thorpe inequality, 50 tensors", thorpe, "");
    let (mut k1, mut k2, mut s2, mut thorpe8) = (true, true, true, true);
    for _ in 0..5 {
        let r = random_curvature(&mut g, 8);
        k1 &= pontrjagin_form(&r, 1).unwrap() == chern_form_oracle(&r, 1).unwrap();
        let p2 = pontrjagin_form(&r, 2).unwrap();
        k2 &= p2 == chern_form_oracle(&r, 2).unwrap();
        let s = pontrjagin_scalar(&r, 2, o).unwrap();
        s2 &= s == pontrjagin_scalar_by_contraction(&r, 2, o).unwrap();
        s2 &= s == p2.volume_pairing(o).unwrap();
        let tb = thorpe_bound(&r, 2).unwrap();
        thorpe8 &= tb.inequality_holds() && tb.equality_clause_holds();
    }
    board.check("C4 n = 8, k = 1: primary form = Chern oracle, 5 tensors", k1, "");
    board.check("C4 n = 8, k = 2: primary form = Chern oracle, 5 tensors", k2, "");
    board.check("C4 n = 8, k = 2: pairing = contraction, 5 tensors", s2, "");
    board.check("C8 n = 8, k = 2: Thorpe inequality, 5 tensors", thorpe8, "");
    let elapsed = start.elapsed();
    board.check("C4 runtime under 10 minutes", elapsed < Duration::from_secs(600), mins(elapsed));

    let flat = CurvatureTensor::validate(DoubleForm::zero(4, 2, 2)).unwrap();
    let tb = thorpe_bound(&flat, 1).unwrap();
    board.check(
        "C8 R = 0: equality 0 = 0 with cR = 0",
        tb.equality && tb.p_k.is_zero() && tb.contraction.is_zero() && tb.equality_clause_holds(),
        "",
    );
    let a = Form::from_terms(4, 2, [(MultiIndex::from_indices(&[1, 2]).unwrap(), int(1)), (MultiIndex::from_indices(&[3, 4]).unwrap(), int(1))])
        .unwrap();
    let sd = CurvatureTensor::new_unchecked(DoubleForm::tensor(&a, &a).unwrap());
    let tb = thorpe_bound(&sd, 1).unwrap();
    board.check(
        "C8 self-dual (e12+e34)⊗(e12+e34): equality with cR = g ≠ 0 and 𝔖R ≠ 0",
        tb.equality && !tb.bianchi && tb.contraction == DoubleForm::metric(4),
        format!("p1 = {}, bound = {}", tb.p_k, tb.bound),
    );
}

fn c5(board: &mut Board) {
    let mut g = rng(5);
    let mut tensors: Vec<CurvatureTensor> = (0..5).map(|_| random_curvature(&mut g, 8)).collect();
    tensors.push(
        ModelSpec::ProductOfSpaceForms {
            dims: vec![4, 4],
            kappas: vec![int(1), int(2)],
        }
        .build()
        .unwrap(),
    );
    for text in ["2", "0,1"] {
        let partition: Partition = text.parse().unwrap();
        let (mut corrected, mut printed) = (true, true);
        for r in &tensors {
            let wedge = mixed_pontrjagin_by_wedge(r, &partition).unwrap();
            corrected &= mixed_pontrjagin_form(r, &partition).unwrap() == wedge;
            let p = mixed_pontrjagin_form_with(r, &partition, &printed_mixed_coefficient(&partition)).unwrap();
            printed &= p == wedge;
        }
        board.check(
            format!("C5 theorem formula = wedge definition, partition {partition}"),
            corrected,
            "5 random tensors and S⁴×S⁴, n = 8",
        );
        board.check(
            format!("C5 printed coefficient, partition {partition}"),
            printed,
            format!(
                "printed {} vs corrected {}",
                printed_mixed_coefficient(&partition),
                mixed_coefficient(&partition)
            ),
        );
    }
    let one: Partition = "1".parse().unwrap();
    let r = &tensors[0];
    board.check(
        "C5 partition (1): coefficient exactly 1 and formula = P1",
        mixed_coefficient(&one) == int(1)
            && printed_mixed_coefficient(&one) == int(1)
            && mixed_pontrjagin_form(r, &one).unwrap() == pontrjagin_form(r, 1).unwrap(),
        "",
    );
}

fn homogeneous(spec: &ModelSpec, density: Rational) -> PiScalar {
    let vol = spec.reference_volume().expect("closed-form volume");
    &PiScalar::rational(density) * &vol
}

fn c6(board: &mut Board) {
    let spec = ModelSpec::ConstantCurvature { n: 4, kappa: int(1) };
    let r = spec.build().unwrap();
    let d = r.weyl_decompose().unwrap();
    let h4 = r.gauss_bonnet(1).unwrap().as_scalar().unwrap().clone();
    board.check("C6 S⁴: ric = 3g", r.ricci() == DoubleForm::metric(4).scale(&int(3)), "");
    board.check("C6 S⁴: scal = 12", r.scalar_curvature() == int(12), "");
    board.check("C6 S⁴: W = 0", d.weyl.is_zero(), "");
    board.check("C6 S⁴: h4 = 6", h4 == int(6), format!("h4 = {h4}"));
    board.check(
        "C6 S⁴: p1 = 0",
        pontrjagin_scalar(&r, 1, Orientation::Standard).unwrap().is_zero(),
        "",
    );
    board.check("C6 S⁴: Thorpe", r.is_thorpe(1).unwrap(), "");
    let lhs = homogeneous(&spec, h4);
    let rhs = PiScalar::new(int(4) * Rational::from_integer(factorial(2)) * int(2), 2);
    board.check(
        "C6 S⁴: h4·Vol = (2π)²·2!·χ with Vol = 8π²/3, χ = 2",
        spec.reference_volume() == Some(PiScalar::new(Rational::new(8.into(), 3.into()), 2)) && lhs == rhs,
        format!("{lhs} = {rhs}"),
    );
}

fn c7(board: &mut Board) {
    let spec = ModelSpec::ProductOfSpaceForms {
        dims: vec![2, 2],
        kappas: vec![int(1), int(1)],
    };
    let r = spec.build().unwrap();
    let e = r.is_einstein().unwrap();
    let h4 = r.gauss_bonnet(1).unwrap().as_scalar().unwrap().clone();
    board.check("C7 S²×S²: ric = g", r.ricci() == DoubleForm::metric(4), "");
    board.check("C7 S²×S²: Einstein, λ = 1", e.holds && e.lambda == int(1), "");
    board.check("C7 S²×S²: h4 = 2", h4 == int(2), format!("h4 = {h4}"));
    board.check(
        "C7 S²×S²: p1 = 0",
        pontrjagin_scalar(&r, 1, Orientation::Standard).unwrap().is_zero(),
        "",
    );
    board.check("C7 S²×S²: Thorpe", r.is_thorpe(1).unwrap(), "");
    let lhs = homogeneous(&spec, h4);
    let rhs = PiScalar::new(int(8) * int(4), 2);
    board.check(
        "C7 S²×S²: h4·Vol = 8π²·χ with Vol = 16π², χ = 4",
        spec.reference_volume() == Some(PiScalar::new(int(16), 2)) && lhs == rhs,
        format!("{lhs} = {rhs}"),
    );
    let unequal = ModelSpec::ProductOfSpaceForms {
        dims: vec![2, 2],
        kappas: vec![int(1), int(2)],
    }
    .build()
    .unwrap();
    board.check("C7 S²×S² with unequal curvatures: not Thorpe", !unequal.is_thorpe(1).unwrap(), "");
}

fn c9(board: &mut Board) {
    let spec = ModelSpec::FubiniStudy { m: 2, c: int(4) };
    let r = spec.build().unwrap();
    let e = r.is_einstein().unwrap();
    board.check(
        "C9 CP² fixture: 𝔖R = 0, symmetric, Einstein λ = 6",
        r.form().bianchi_sum().is_zero() && r.form().is_symmetric() && e.holds && e.lambda == int(6),
        "",
    );
    let vol = spec.reference_volume().unwrap();
    let chern = chern_form_oracle(&r, 1).unwrap().volume_pairing(Orientation::Standard).unwrap();
    let number = &chern * &vol;
    let primary = &pontrjagin_scalar(&r, 1, Orientation::Standard).unwrap() * &vol;
    board.check(
        "C9 CP²: p1·Vol = 3 via the Chern oracle and the primary formula",
        number.as_integer() == Some(3.into()) && primary == number,
        format!("{number}, Vol = {vol}"),
    );
}

fn main() {
    let mut board = Board { lines: vec![] };
    let start = Instant::now();
    c1(&mut board);
    c2(&mut board);
    c3(&mut board);
    c4_c8(&mut board);
    c5(&mut board);
    c6(&mut board);
    c7(&mut board);
    c9(&mut board);
    let failed: Vec<&String> = board.lines.iter().filter(|(_, ok)| !ok).map(|(l, _)| l).collect();
    let unexpected: Vec<&&String> = failed.iter().filter(|l| !DOCUMENTED_DEFECTS.contains(&l.as_str())).collect();
    println!(
        "{} lines: {} PASS, {} FAIL ({} documented defects of the printed statements), {}",
        board.lines.len(),
        board.lines.len() - failed.len(),
        failed.len(),
        failed.len() - unexpected.len(),
        mins(start.elapsed())
    );
    if !unexpected.is_empty() {
        for l in &unexpected {
            println!("unexpected failure: {l}");
        }
        std::process::exit(1);
    }
}
