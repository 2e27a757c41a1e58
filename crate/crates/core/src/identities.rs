//! Every algebraic identity of the engine as a runnable, seeded check.
//!
//! An [`Identity`] names a statement, the dimensions it applies to, the
//! bidegrees of its inputs and the law itself. [`run_identity`] feeds it random
//! inputs (small integer coefficients, so every comparison is exact) and, for
//! multilinear statements in small dimension, every combination of basis
//! elements, which proves the statement outright for that dimension.
//!
//! Statements marked [`Expectation::KnownDefect`] are kept exactly as printed in
//! the source literature even though they are false in general; running them
//! produces the counterexample that documents the defect. Their corrected forms
//! are separate identities.
//!
//! A [`Fault`] deliberately corrupts one operator, so that the harness itself can
//! be tested: a faulty run must produce counterexamples.

use std::collections::HashMap;
use std::fmt;

use num::{One, Signed, Zero};
use rand::Rng;

use crate::curvature::{divide_by_metric, normalized_metric_power, CurvatureTensor};
use crate::double::{is_decomposable, Action, DoubleForm};
use crate::error::{Error, Result};
use crate::exterior::{Form, Orientation};
use crate::index::MultiIndex;
use crate::linalg::{basis_keys, operator_rows, SparseSystem};
use crate::pontrjagin::{
    chern_form_oracle, mixed_pontrjagin_by_wedge, mixed_pontrjagin_form, pontrjagin_form, pontrjagin_scalar,
    pontrjagin_scalar_by_contraction, pontrjagin_scalar_by_index_sum, thorpe_bound, weyl_bound, Partition,
};
use crate::random::{self, TestRng};
use crate::rational::{binomial, factorial, int, sign_pow, Rational};

/// What kind of double form fills an input slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Any,
    /// `𝔖ω = 0`.
    BianchiClosed,
    /// `ω^t` satisfies `𝔖ω^t = 0`.
    TransposeBianchiClosed,
    /// An algebraic curvature tensor (nonlinear laws only).
    Curvature,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slot {
    pub p: usize,
    pub q: usize,
    pub kind: Kind,
}

const fn any(p: usize, q: usize) -> Slot {
    Slot { p, q, kind: Kind::Any }
}

const fn form(p: usize) -> Slot {
    any(p, 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    /// Printed statement known to be false in general; kept to document it.
    KnownDefect,
}

/// A deliberate corruption of one operator, for testing the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// `𝔖̃` returns the negative of its true value.
    NegateAdjointBianchi,
    /// `𝔖` flips sign on inputs of odd total degree.
    FlipBianchiSign,
    /// `Alt` omits the `p! q! / (p+q)!` normalization.
    SkipAltNormalization,
}

impl std::str::FromStr for Fault {
    type Err = Error;

    fn from_str(s: &str) -> Result<Fault> {
        match s {
            "negate-adjoint-bianchi" => Ok(Fault::NegateAdjointBianchi),
            "flip-bianchi-sign" => Ok(Fault::FlipBianchiSign),
            "skip-alt-normalization" => Ok(Fault::SkipAltNormalization),
            _ => Err(Error::Parse(format!("unknown fault {s:?}"))),
        }
    }
}

/// The operators under test, possibly corrupted by a [`Fault`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Ops {
    fault: Option<Fault>,
}

impl Ops {
    pub fn new(fault: Option<Fault>) -> Self {
        Ops { fault }
    }

    pub fn bianchi(&self, w: &DoubleForm) -> DoubleForm {
        let (p, q) = w.bidegree();
        let s = w.bianchi_sum();
        if self.fault == Some(Fault::FlipBianchiSign) && (p + q) % 2 == 1 {
            -&s
        } else {
            s
        }
    }

    pub fn bianchi_times(&self, w: &DoubleForm, k: usize) -> DoubleForm {
        (0..k).fold(w.clone(), |acc, _| self.bianchi(&acc))
    }

    pub fn adjoint_bianchi(&self, w: &DoubleForm) -> DoubleForm {
        let s = w.adjoint_bianchi_sum();
        if self.fault == Some(Fault::NegateAdjointBianchi) {
            -&s
        } else {
            s
        }
    }

    pub fn alt(&self, w: &DoubleForm) -> Form {
        let a = w.alt();
        if self.fault == Some(Fault::SkipAltNormalization) {
            let (p, q) = w.bidegree();
            a.scale(&Rational::new(factorial(p + q), factorial(p) * factorial(q)))
        } else {
            a
        }
    }
}

/// The two sides of a failed comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub what: String,
    pub lhs: String,
    pub rhs: String,
}

/// `Ok(k)`: the law held for `k` comparisons.
pub type Verdict = std::result::Result<usize, Mismatch>;

/// Exact equality, except that zeros of different (bi)degree compare equal:
/// an operator applied out of an empty slot yields a zero of shifted degree.
trait Exact: PartialEq + fmt::Display {
    fn exact_eq(&self, other: &Self) -> bool {
        self == other
    }
}

impl Exact for DoubleForm {
    fn exact_eq(&self, other: &Self) -> bool {
        self == other || (self.is_zero() && other.is_zero())
    }
}

impl Exact for Form {
    fn exact_eq(&self, other: &Self) -> bool {
        self == other || (self.is_zero() && other.is_zero())
    }
}

impl Exact for Rational {}
impl Exact for bool {}
impl Exact for crate::pontrjagin::PiForm {}
impl Exact for crate::pontrjagin::PiScalar {}

fn same<T: Exact>(what: &str, lhs: &T, rhs: &T) -> std::result::Result<(), Mismatch> {
    if lhs.exact_eq(rhs) {
        Ok(())
    } else {
        Err(Mismatch {
            what: what.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

fn truth(what: &str, cond: bool, detail: impl FnOnce() -> String) -> std::result::Result<(), Mismatch> {
    if cond {
        Ok(())
    } else {
        Err(Mismatch {
            what: what.to_string(),
            lhs: detail(),
            rhs: "true".to_string(),
        })
    }
}

type Law = fn(&Ops, usize, &[DoubleForm]) -> Verdict;
type Shapes = fn(usize) -> Vec<Vec<Slot>>;

pub struct Identity {
    pub name: &'static str,
    pub scope: &'static str,
    pub statement: &'static str,
    pub expectation: Expectation,
    /// Admissible ambient dimensions.
    pub dims: fn(usize) -> bool,
    shapes: Shapes,
    law: Law,
    /// Largest `n` for which every combination of basis inputs is checked.
    pub exhaustive_up_to: usize,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Identity({})", self.name)
    }
}

/// A failing case, with every input printed in full.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    pub inputs: Vec<String>,
    pub mismatch: Mismatch,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        for (k, w) in self.inputs.iter().enumerate() {
            writeln!(f, "input {}: {w}", k + 1)?;
        }
        writeln!(f, "check: {}", self.mismatch.what)?;
        writeln!(f, "  lhs: {}", self.mismatch.lhs)?;
        write!(f, "  rhs: {}", self.mismatch.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub scope: &'static str,
    pub expectation: Expectation,
    pub random_cases: usize,
    pub exhaustive_cases: usize,
    pub counterexample: Option<Counterexample>,
}

impl IdentityOutcome {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    /// A failure that should fail a self-test: a statement expected to hold did not.
    pub fn is_failure(&self) -> bool {
        self.expectation == Expectation::Holds && !self.holds()
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random cases per identity.
    pub cases: usize,
    pub dims: Vec<usize>,
    /// Cap on the exhaustive basis checks (combined with each identity's own cap).
    pub exhaustive_up_to: usize,
    pub fault: Option<Fault>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            cases: 200,
            dims: (2..=6).collect(),
            exhaustive_up_to: 4,
            fault: None,
        }
    }
}

fn name_hash(name: &str) -> u64 {
    // FNV-1a, stable across platforms and releases
    name.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

/// Kernel bases are expensive to recompute; they are cached per slot.
#[derive(Default)]
struct Kernels(HashMap<(usize, usize, usize, Kind), Vec<DoubleForm>>);

impl Kernels {
    fn basis(&mut self, n: usize, slot: Slot) -> &[DoubleForm] {
        self.0.entry((n, slot.p, slot.q, slot.kind)).or_insert_with(|| match slot.kind {
            Kind::Any | Kind::Curvature => basis_keys(n, slot.p, slot.q)
                .into_iter()
                .map(|(i, j)| DoubleForm::basis(n, i, j))
                .collect(),
            Kind::BianchiClosed => bianchi_kernel(n, slot.p, slot.q),
            Kind::TransposeBianchiClosed => bianchi_kernel(n, slot.q, slot.p)
                .into_iter()
                .map(|w| w.transpose())
                .collect(),
        })
    }

    fn random(&mut self, rng: &mut TestRng, n: usize, slot: Slot) -> DoubleForm {
        let density = [0.15, 0.4, 0.8][rng.random_range(0..3)];
        match slot.kind {
            Kind::Any => random::double_form(rng, n, slot.p, slot.q, density),
            Kind::Curvature => random::curvature(rng, n),
            Kind::BianchiClosed | Kind::TransposeBianchiClosed => {
                let basis = self.basis(n, slot).to_vec();
                let mut out = DoubleForm::zero(n, slot.p, slot.q);
                for b in basis {
                    if rng.random_bool(density) {
                        out = &out + &b.scale(&int(rng.random_range(-3..=3)));
                    }
                }
                out
            }
        }
    }
}

fn bianchi_kernel(n: usize, p: usize, q: usize) -> Vec<DoubleForm> {
    let columns = basis_keys(n, p, q);
    let mut system = SparseSystem::new(columns.len());
    for (_, row) in operator_rows(n, &columns, DoubleForm::bianchi_sum) {
        system.push_row(row, Rational::zero());
    }
    system
        .nullspace()
        .into_iter()
        .map(|v| {
            DoubleForm::from_terms(n, p, q, v.into_iter().map(|(c, x)| (columns[c], x))).expect("kernel vector")
        })
        .collect()
}

/// Runs one identity: `cfg.cases` random cases spread over the admissible
/// dimensions, then every basis combination up to the exhaustive cap.
/// Stops at the first counterexample.
pub fn run_identity(id: &Identity, cfg: &SuiteConfig) -> IdentityOutcome {
    let ops = Ops::new(cfg.fault);
    let mut rng = random::rng(cfg.seed ^ name_hash(id.name));
    let mut kernels = Kernels::default();
    let mut outcome = IdentityOutcome {
        name: id.name,
        scope: id.scope,
        expectation: id.expectation,
        random_cases: 0,
        exhaustive_cases: 0,
        counterexample: None,
    };
    let dims: Vec<(usize, Vec<Vec<Slot>>)> = cfg
        .dims
        .iter()
        .copied()
        .filter(|&n| (id.dims)(n))
        .map(|n| (n, (id.shapes)(n)))
        .filter(|(_, s)| !s.is_empty())
        .collect();
    if dims.is_empty() {
        return outcome;
    }
    let record = |outcome: &mut IdentityOutcome, n: usize, inputs: &[DoubleForm], m: Mismatch| {
        outcome.counterexample = Some(Counterexample {
            n,
            inputs: inputs.iter().map(|w| format!("{w:?}")).collect(),
            mismatch: m,
        });
    };
    let mut constant_done = vec![];
    for case in 0..cfg.cases {
        let (n, shapes) = &dims[case % dims.len()];
        let shape = &shapes[rng.random_range(0..shapes.len())];
        if shape.is_empty() {
            // statements without inputs are checked once per dimension
            if constant_done.contains(n) {
                continue;
            }
            constant_done.push(*n);
        }
        let inputs: Vec<DoubleForm> = shape.iter().map(|s| kernels.random(&mut rng, *n, *s)).collect();
        match (id.law)(&ops, *n, &inputs) {
            Ok(k) => outcome.random_cases += k,
            Err(m) => {
                record(&mut outcome, *n, &inputs, m);
                return outcome;
            }
        }
    }
    let cap = id.exhaustive_up_to.min(cfg.exhaustive_up_to);
    for (n, shapes) in dims.iter().filter(|(n, _)| *n <= cap) {
        for shape in shapes {
            if shape.iter().any(|s| s.kind == Kind::Curvature) {
                continue;
            }
            let bases: Vec<Vec<DoubleForm>> = shape.iter().map(|s| kernels.basis(*n, *s).to_vec()).collect();
            let mut cursor = vec![0usize; bases.len()];
            if bases.iter().any(Vec::is_empty) {
                continue;
            }
            loop {
                let inputs: Vec<DoubleForm> = cursor.iter().zip(&bases).map(|(c, b)| b[*c].clone()).collect();
                match (id.law)(&ops, *n, &inputs) {
                    Ok(k) => outcome.exhaustive_cases += k,
                    Err(m) => {
                        record(&mut outcome, *n, &inputs, m);
                        return outcome;
                    }
                }
                // odometer over the basis lists
                let mut pos = bases.len();
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    cursor[pos] += 1;
                    if cursor[pos] < bases[pos].len() {
                        break;
                    }
                    cursor[pos] = 0;
                }
                if pos == 0 && cursor.iter().all(|&c| c == 0) {
                    break;
                }
            }
        }
    }
    outcome
}

/// All scope names, in registry order.
pub fn scopes() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = vec![];
    for id in registry() {
        if !out.contains(&id.scope) {
            out.push(id.scope);
        }
    }
    out
}

/// Identities in a scope (all of them for `None`); unknown scopes are an error.
pub fn select(scope: Option<&str>) -> Result<Vec<Identity>> {
    let all = registry();
    match scope {
        None | Some("all") => Ok(all),
        Some(s) => {
            let chosen: Vec<Identity> = all.into_iter().filter(|id| id.scope == s || id.name == s).collect();
            if chosen.is_empty() {
                Err(Error::Parse(format!("unknown scope {s:?}; known scopes: {}", scopes().join(", "))))
            } else {
                Ok(chosen)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// shapes

fn all_bidegrees(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=n).flat_map(move |p| (0..=n).map(move |q| (p, q)))
}

fn unary_forms(n: usize) -> Vec<Vec<Slot>> {
    (0..=n).map(|p| vec![form(p)]).collect()
}

fn binary_forms(n: usize) -> Vec<Vec<Slot>> {
    (0..=n).flat_map(|p| (0..=n).map(move |q| vec![form(p), form(q)])).collect()
}

fn unary_double(n: usize) -> Vec<Vec<Slot>> {
    all_bidegrees(n).map(|(p, q)| vec![any(p, q)]).collect()
}

fn binary_double(n: usize) -> Vec<Vec<Slot>> {
    all_bidegrees(n)
        .flat_map(|(p, q)| all_bidegrees(n).map(move |(r, s)| vec![any(p, q), any(r, s)]))
        .collect()
}

fn curvature_only(_: usize) -> Vec<Vec<Slot>> {
    vec![vec![Slot {
        p: 2,
        q: 2,
        kind: Kind::Curvature,
    }]]
}

fn no_inputs(_: usize) -> Vec<Vec<Slot>> {
    vec![vec![]]
}

fn middle(n: usize) -> Vec<Vec<Slot>> {
    vec![vec![any(n / 2, n / 2)]]
}

fn middle_pair(n: usize) -> Vec<Vec<Slot>> {
    vec![vec![any(n / 2, n / 2), any(n / 2, n / 2)]]
}

fn all_n(_: usize) -> bool {
    true
}

fn even_n(n: usize) -> bool {
    n.is_multiple_of(2)
}

fn four_k(n: usize) -> bool {
    n.is_multiple_of(4)
}

// ---------------------------------------------------------------------------
// laws

fn as_form(w: &DoubleForm) -> Form {
    w.to_form().expect("form slots have bidegree (p, 0)")
}

fn law_wedge_antisymmetry(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let (a, b) = (as_form(&x[0]), as_form(&x[1]));
    let sign = sign_pow(a.degree() * b.degree());
    same("a∧b = (-1)^{pq} b∧a", &a.wedge(&b).unwrap(), &b.wedge(&a).unwrap().scale(&sign))?;
    Ok(1)
}

fn law_wedge_associativity(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let (a, b, c) = (as_form(&x[0]), as_form(&x[1]), as_form(&x[2]));
    same(
        "(a∧b)∧c = a∧(b∧c)",
        &a.wedge(&b).unwrap().wedge(&c).unwrap(),
        &a.wedge(&b.wedge(&c).unwrap()).unwrap(),
    )?;
    Ok(1)
}

fn law_wedge_interior_adjoint(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let (a, b) = (as_form(&x[0]), as_form(&x[1]));
    for i in 1..=n {
        let ei = Form::covector(n, i).unwrap();
        same(
            "⟨e_i∧a, b⟩ = ⟨a, i_{e_i} b⟩",
            &ei.wedge(&a).unwrap().inner(&b),
            &a.inner(&b.interior(i).unwrap()),
        )?;
    }
    Ok(n)
}

fn law_star_involution(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let a = as_form(&x[0]);
    let p = a.degree();
    same("★★a = (-1)^{p(n-p)} a", &a.hodge_star().hodge_star(), &a.scale(&sign_pow(p * (n - p))))?;
    Ok(1)
}

fn law_star_defining(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let (a, b) = (as_form(&x[0]), as_form(&x[1]));
    let vol = Form::volume(n, Orientation::Standard);
    same("b∧★a = ⟨a,b⟩ vol", &b.wedge(&a.hodge_star()).unwrap(), &vol.scale(&a.inner(&b)))?;
    Ok(1)
}

fn law_interior_star(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let a = as_form(&x[0]);
    for i in 1..=n {
        let ei = Form::covector(n, i).unwrap();
        same(
            "i_{e_i}(★a) = ★(a∧e_i)",
            &a.hodge_star().interior(i).unwrap(),
            &a.wedge(&ei).unwrap().hodge_star(),
        )?;
    }
    Ok(n)
}

fn law_interior_star_printed(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let a = as_form(&x[0]);
    for i in 1..=n {
        let ei = Form::covector(n, i).unwrap();
        same(
            "i_{e_i}(★a) = ★(e_i∧a)",
            &a.hodge_star().interior(i).unwrap(),
            &ei.wedge(&a).unwrap().hodge_star(),
        )?;
    }
    Ok(n)
}

fn law_graded_commutativity(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let ((p, q), (r, s)) = (x[0].bidegree(), x[1].bidegree());
    let sign = sign_pow(p * r + q * s);
    same("ω1ω2 = (-1)^{pr+qs} ω2ω1", &(&x[0] * &x[1]), &(&x[1] * &x[0]).scale(&sign))?;
    Ok(1)
}

fn law_ext_associativity(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    same(
        "(ω1ω2)ω3 = ω1(ω2ω3)",
        &(&(&x[0] * &x[1]) * &x[2]),
        &(&x[0] * &(&x[1] * &x[2])),
    )?;
    Ok(1)
}

fn law_comp_associativity(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    same(
        "(ω1∘ω2)∘ω3 = ω1∘(ω2∘ω3)",
        &x[0].comp_mul(&x[1]).comp_mul(&x[2]),
        &x[0].comp_mul(&x[1].comp_mul(&x[2])),
    )?;
    Ok(1)
}

fn law_right_identity(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let p = x[0].bidegree().0;
    same("ω∘(g^p/p!) = ω", &x[0].comp_mul(&normalized_metric_power(n, p)), &x[0])?;
    Ok(1)
}

fn law_double_star_involution(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let (p, q) = x[0].bidegree();
    let sign = sign_pow(p * (n - p) + q * (n - q));
    same("★★ω = (-1)^{p(n-p)+q(n-q)} ω", &x[0].double_hodge_star().double_hodge_star(), &x[0].scale(&sign))?;
    if p == q {
        same("★★ω = ω for p = q", &x[0].double_hodge_star().double_hodge_star(), &x[0])?;
    }
    Ok(1)
}

fn law_adjoint_exterior_contraction(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let (h, w1, w2) = (&x[0], &x[1], &x[2]);
    let lhs = w1.basic_map(h, Action::Exterior, Action::Exterior).unwrap().inner(w2);
    let rhs = w1.inner(&w2.basic_map(h, Action::Interior, Action::Interior).unwrap());
    same("⟨L_h^{1,1} ω1, ω2⟩ = ⟨ω1, L_h^{-1,-1} ω2⟩", &lhs, &rhs)?;
    Ok(1)
}

fn law_adjoint_bianchi_maps(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let (h, w1, w2) = (&x[0], &x[1], &x[2]);
    let lhs = w1.basic_map(h, Action::Exterior, Action::Interior).unwrap().inner(w2);
    let rhs = w1.inner(&w2.basic_map(h, Action::Interior, Action::Exterior).unwrap());
    same("⟨L_h^{1,-1} ω1, ω2⟩ = ⟨ω1, L_h^{-1,1} ω2⟩", &lhs, &rhs)?;
    Ok(1)
}

fn law_adjoint_bianchi_sums(ops: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    same(
        "⟨𝔖ω1, ω2⟩ = ⟨ω1, 𝔖̃ω2⟩",
        &ops.bianchi(&x[0]).inner(&x[1]),
        &x[0].inner(&ops.adjoint_bianchi(&x[1])),
    )?;
    same(
        "⟨gω1, ω2⟩ = ⟨ω1, cω2⟩",
        &x[0].mul_metric().inner(&x[2]),
        &x[0].inner(&x[2].contract()),
    )?;
    Ok(1)
}

fn law_metric_maps(ops: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let g = DoubleForm::metric(n);
    let w = &x[0];
    let map = |a, b| w.basic_map(&g, a, b).unwrap();
    same("L_g^{1,1} ω = gω", &map(Action::Exterior, Action::Exterior), &(&g * w))?;
    same("L_g^{-1,-1} ω = cω", &map(Action::Interior, Action::Interior), &w.contract())?;
    same("L_g^{1,-1} ω = 𝔖ω", &map(Action::Exterior, Action::Interior), &ops.bianchi(w))?;
    same("L_g^{-1,1} ω = 𝔖̃ω", &map(Action::Interior, Action::Exterior), &ops.adjoint_bianchi(w))?;
    Ok(1)
}

fn law_adjoint_transpose(ops: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    same(
        "𝔖̃ω = (𝔖(ω^t))^t",
        &ops.adjoint_bianchi(&x[0]),
        &ops.bianchi(&x[0].transpose()).transpose(),
    )?;
    Ok(1)
}

fn law_bianchi_derivation(ops: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let (w1, w2) = (&x[0], &x[1]);
    let (p, q) = w1.bidegree();
    let lhs = ops.bianchi(&(w1 * w2));
    let (a, b) = (&ops.bianchi(w1) * w2, (w1 * &ops.bianchi(w2)).scale(&sign_pow(p + q)));
    // a Bianchi sum out of an empty slot is a zero of shifted bidegree
    let rhs = match (a.is_zero(), b.is_zero()) {
        (true, _) => b,
        (_, true) => a,
        _ => &a + &b,
    };
    same("𝔖(ω1ω2) = (𝔖ω1)ω2 + (-1)^{p+q} ω1(𝔖ω2)", &lhs, &rhs)?;
    Ok(1)
}

fn law_alt_bianchi(ops: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let w = &x[0];
    let (p, q) = w.bidegree();
    let sign = sign_pow(p * q + q * (q.saturating_sub(1)) / 2);
    let factor = Rational::new(factorial(p), factorial(p + q)) * sign;
    let rhs = ops.bianchi_times(w, q).to_form().expect("(p+q, 0)").scale(&factor);
    same("Alt ω = (-1)^{pq+q(q-1)/2} p!/(p+q)! 𝔖^q ω", &ops.alt(w), &rhs)?;
    Ok(1)
}

fn law_alt_kills_bianchi(ops: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    truth("𝔖ω = 0", ops.bianchi(&x[0]).is_zero(), || format!("{:?}", ops.bianchi(&x[0])))?;
    let a = ops.alt(&x[0]);
    truth("Alt ω = 0", a.is_zero(), || a.to_string())?;
    Ok(1)
}

fn law_alt_endomorphism(ops: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let (w1, w2) = (&x[0], &x[1]);
    let ((p, q), (r, s)) = (w1.bidegree(), w2.bidegree());
    let multinomial = |a: usize, b: usize| Rational::new(factorial(a + b), factorial(a) * factorial(b));
    let lhs = ops.alt(&(w1 * w2)).scale(&multinomial(p + r, q + s));
    let left = ops.alt(w1).scale(&multinomial(p, q));
    let right = ops.alt(w2).scale(&multinomial(r, s));
    let rhs = left.wedge(&right).unwrap().scale(&sign_pow(q * r));
    same("normalized Alt is multiplicative up to (-1)^{qr}", &lhs, &rhs)?;
    Ok(1)
}

fn law_alt_ideal(ops: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    truth("Alt ω1 = 0", ops.alt(&x[0]).is_zero(), || ops.alt(&x[0]).to_string())?;
    let a = ops.alt(&(&x[0] * &x[1]));
    truth("Alt(ω1 ω2) = 0", a.is_zero(), || a.to_string())?;
    Ok(1)
}

fn altgomega_one(ops: &Ops, n: usize, x: &[DoubleForm], printed: bool) -> Verdict {
    let (w1, w2) = (&x[0], &x[1]);
    let (_, q) = w1.bidegree();
    let r = w2.bidegree().0 + 1;
    let g = DoubleForm::metric(n);
    let lhs = ops.alt(&w1.comp_mul(&(&g * w2)));
    let ratio = if printed {
        Rational::new((q + 1).into(), r.into())
    } else {
        Rational::new(r.into(), (q + 1).into())
    };
    let rhs = ops.alt(&ops.adjoint_bianchi(w1).comp_mul(w2)).scale(&(ratio * sign_pow(r - 1)));
    same("Alt(ω1∘gω2) = ±ratio · Alt(𝔖̃ω1∘ω2)", &lhs, &rhs)?;
    Ok(1)
}

fn altgomega_two(ops: &Ops, n: usize, x: &[DoubleForm], printed: bool) -> Verdict {
    let (w1, w2) = (&x[0], &x[1]);
    let (p, _) = w1.bidegree();
    let s = w2.bidegree().1 + 1;
    let g = DoubleForm::metric(n);
    let lhs = ops.alt(&(&g * w2).comp_mul(w1));
    let ratio = if printed {
        Rational::new((p + 1).into(), s.into())
    } else {
        Rational::new(s.into(), (p + 1).into())
    };
    let rhs = ops.alt(&w2.comp_mul(&ops.bianchi(w1))).scale(&(ratio * sign_pow(p)));
    same("Alt(gω2∘ω1) = ±ratio · Alt(ω2∘𝔖ω1)", &lhs, &rhs)?;
    Ok(1)
}

fn law_altgomega_one(ops: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    altgomega_one(ops, n, x, false)
}

fn law_altgomega_one_printed(ops: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    altgomega_one(ops, n, x, true)
}

fn law_altgomega_two(ops: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    altgomega_two(ops, n, x, false)
}

fn law_altgomega_two_printed(ops: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    altgomega_two(ops, n, x, true)
}

fn law_altgomega_annihilation(ops: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let g = DoubleForm::metric(n);
    let one = ops.alt(&x[0].comp_mul(&(&g * &x[1])));
    truth("Alt(ω1∘gω2) = 0 when 𝔖ω1^t = 0", one.is_zero(), || one.to_string())?;
    Ok(1)
}

fn law_altgomega_annihilation_two(ops: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let g = DoubleForm::metric(n);
    let two = ops.alt(&(&g * &x[1]).comp_mul(&x[0]));
    truth("Alt(gω2∘ω1) = 0 when 𝔖ω1 = 0", two.is_zero(), || two.to_string())?;
    Ok(1)
}

fn altgomega_one_shapes(n: usize) -> Vec<Vec<Slot>> {
    let mut out = vec![];
    for p in 1..=n {
        for q in 0..=n {
            for r in 1..=n {
                out.push(vec![any(p, q), any(r - 1, p - 1)]);
            }
        }
    }
    out
}

fn altgomega_two_shapes(n: usize) -> Vec<Vec<Slot>> {
    let mut out = vec![];
    for q in 1..=n {
        for s in 1..=n {
            for p in 0..=n {
                out.push(vec![any(p, q), any(q - 1, s - 1)]);
            }
        }
    }
    out
}

fn altgomega_annihilation_shapes(n: usize) -> Vec<Vec<Slot>> {
    altgomega_one_shapes(n)
        .into_iter()
        .map(|s| {
            vec![
                Slot {
                    kind: Kind::TransposeBianchiClosed,
                    ..s[0]
                },
                s[1],
            ]
        })
        .collect()
}

fn altgomega_annihilation_two_shapes(n: usize) -> Vec<Vec<Slot>> {
    altgomega_two_shapes(n)
        .into_iter()
        .map(|s| {
            vec![
                Slot {
                    kind: Kind::BianchiClosed,
                    ..s[0]
                },
                s[1],
            ]
        })
        .collect()
}

/// Independent decomposability oracle: a nonzero `p`-form is decomposable iff
/// its annihilator `{v : v∧α = 0}` has dimension `p`.
fn annihilator_dim(a: &Form) -> usize {
    let n = a.dim();
    let mut system = SparseSystem::new(n);
    let mut rows: std::collections::BTreeMap<MultiIndex, Vec<(usize, Rational)>> = Default::default();
    for i in 1..=n {
        let vi = Form::covector(n, i).unwrap().wedge(a).unwrap();
        for (k, c) in vi.terms() {
            rows.entry(k).or_default().push((i - 1, c.clone()));
        }
    }
    for row in rows.into_values() {
        system.push_row(row, Rational::zero());
    }
    system.nullspace().len()
}

fn law_plucker(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let a = as_form(&x[0]);
    let oracle = a.is_zero() || annihilator_dim(&a) == a.degree();
    same("decomposable ⟺ 𝔖(α⊗α) = 0", &is_decomposable(&a), &oracle)?;
    Ok(1)
}

fn law_plucker_products(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let a = x.iter().map(as_form).reduce(|acc, f| acc.wedge(&f).unwrap()).expect("at least one factor");
    truth("a product of 1-forms is decomposable", is_decomposable(&a), || a.to_string())?;
    Ok(1)
}

fn plucker_product_shapes(n: usize) -> Vec<Vec<Slot>> {
    (2..=n).map(|p| vec![form(1); p]).collect()
}

fn law_plucker_two_forms_exhaustive(_: &Ops, n: usize, _: &[DoubleForm]) -> Verdict {
    // every 2-form with coefficients in {-1, 0, 1}; decomposable iff a∧a = 0
    let pairs: Vec<MultiIndex> = MultiIndex::subsets(n, 2).collect();
    let total = 3usize.pow(pairs.len() as u32);
    for code in 0..total {
        let mut c = code;
        let terms: Vec<(MultiIndex, Rational)> = pairs
            .iter()
            .map(|i| {
                let v = (c % 3) as i64 - 1;
                c /= 3;
                (*i, int(v))
            })
            .collect();
        let a = Form::from_terms(n, 2, terms).unwrap();
        same(
            &format!("Plücker on {a}"),
            &is_decomposable(&a),
            &a.wedge(&a).unwrap().is_zero(),
        )?;
    }
    Ok(total)
}

fn omega(n: usize) -> DoubleForm {
    DoubleForm::volume_middle(n).expect("even n")
}

fn law_omega_properties(_: &Ops, n: usize, _: &[DoubleForm]) -> Verdict {
    let w = omega(n);
    same("★ω_g = ω_g", &w.double_hodge_star(), &w)?;
    truth("cω_g = 0", w.contract().is_zero(), || w.contract().to_string())?;
    truth("gω_g = 0", w.mul_metric().is_zero(), || w.mul_metric().to_string())?;
    same("ω_g^t = (-1)^{n/2} ω_g", &w.transpose(), &w.scale(&sign_pow(n / 2)))?;
    same(
        "⟨ω_g, ω_g⟩ = C(n, n/2)",
        &w.norm_sq(),
        &Rational::from_integer(binomial(n, n / 2)),
    )?;
    let mut sum = DoubleForm::zero(n, n / 2, n / 2);
    for i in MultiIndex::subsets(n, n / 2) {
        let e = Form::basis(n, i);
        sum = &sum + &DoubleForm::tensor(&e, &e.hodge_star()).unwrap();
    }
    same("ω_g = Σ_I e_I ⊗ ★e_I", &w, &sum)?;
    Ok(6)
}

fn law_omega_norm_printed(_: &Ops, n: usize, _: &[DoubleForm]) -> Verdict {
    same("⟨ω_g, ω_g⟩ = 1", &omega(n).norm_sq(), &Rational::one())?;
    Ok(1)
}

fn law_omega_bilinear(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let (a, b) = (as_form(&x[0]), as_form(&x[1]));
    let w = omega(n);
    let value = a
        .terms()
        .flat_map(|(i, x)| b.terms().map(move |(j, y)| (i, j, x * y)))
        .fold(Rational::zero(), |acc, (i, j, c)| acc + w.coeff(i, j) * c);
    let star = a.wedge(&b).unwrap().hodge_star().coeff(MultiIndex::EMPTY);
    same("ω_g(α, β) = ★(α∧β)", &value, &star)?;
    same("ω_g(α, β) = ⟨★α, β⟩", &value, &a.hodge_star().inner(&b))?;
    Ok(1)
}

fn omega_bilinear_shapes(n: usize) -> Vec<Vec<Slot>> {
    vec![vec![form(n / 2), form(n / 2)]]
}

fn law_mu_square(_: &Ops, n: usize, _: &[DoubleForm]) -> Verdict {
    let w = omega(n);
    same("ω_g∘ω_g = g^{n/2}/(n/2)!", &w.comp_mul(&w), &normalized_metric_power(n, n / 2))?;
    Ok(1)
}

fn law_mu_square_signed(_: &Ops, n: usize, _: &[DoubleForm]) -> Verdict {
    let w = omega(n);
    let rhs = normalized_metric_power(n, n / 2).scale(&sign_pow(n / 2));
    same("ω_g∘ω_g = (-1)^{n/2} g^{n/2}/(n/2)!", &w.comp_mul(&w), &rhs)?;
    Ok(1)
}

fn law_mu_isometry(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let w = omega(n);
    let (a, b) = (&x[0], &x[1]);
    let base = a.inner(b);
    same("⟨ω_g∘ω1, ω_g∘ω2⟩ = ⟨ω1, ω2⟩", &w.comp_mul(a).inner(&w.comp_mul(b)), &base)?;
    same("⟨ω1∘ω_g, ω2∘ω_g⟩ = ⟨ω1, ω2⟩", &a.comp_mul(&w).inner(&b.comp_mul(&w)), &base)?;
    Ok(1)
}

fn law_mu_star_sides(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let w = omega(n);
    let psi = &x[0];
    let star = psi.double_hodge_star();
    same("(★ψ)∘ω_g = ω_g∘ψ", &star.comp_mul(&w), &w.comp_mul(psi))?;
    same("ψ∘ω_g = ω_g∘(★ψ)", &psi.comp_mul(&w), &w.comp_mul(&star))?;
    Ok(1)
}

fn law_mu_conjugation(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let w = omega(n);
    let psi = &x[0];
    same("★ψ = ω_g∘ψ∘ω_g", &psi.double_hodge_star(), &w.comp_mul(psi).comp_mul(&w))?;
    Ok(1)
}

fn law_mu_conjugation_signed(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let w = omega(n);
    let psi = &x[0];
    let rhs = w.comp_mul(psi).comp_mul(&w).scale(&sign_pow(n / 2));
    same("★ψ = (-1)^{n/2} ω_g∘ψ∘ω_g", &psi.double_hodge_star(), &rhs)?;
    Ok(1)
}

fn lemma_a(ops: &Ops, n: usize, x: &[DoubleForm], printed: bool) -> Verdict {
    let p = n / 2;
    let w = &x[0];
    let lhs = w.comp_mul(&omega(n)).contract();
    let shifted = DoubleForm::volume_double_form(n, p - 1, p + 1).expect("a + b = n");
    let mut rhs = ops.bianchi(w).comp_mul(&shifted);
    if !printed {
        rhs = rhs.scale(&sign_pow(p + 1));
    }
    same("c(ω∘ω_g) = ±𝔖ω∘ω_g^{(p-1,p+1)}", &lhs, &rhs)?;
    Ok(1)
}

fn law_lemma_a(ops: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    lemma_a(ops, n, x, false)
}

fn law_lemma_a_printed(ops: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    lemma_a(ops, n, x, true)
}

fn law_contraction_of_closed(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let c = x[0].comp_mul(&omega(n)).contract();
    truth("c(ψ∘ω_g) = 0 when 𝔖ψ = 0", c.is_zero(), || c.to_string())?;
    Ok(1)
}

fn closed_middle(n: usize) -> Vec<Vec<Slot>> {
    vec![vec![Slot {
        p: n / 2,
        q: n / 2,
        kind: Kind::BianchiClosed,
    }]]
}

fn curvature_of(x: &[DoubleForm]) -> CurvatureTensor {
    CurvatureTensor::validate(x[0].clone()).expect("generated curvature tensor")
}

fn law_weyl_reconstruction(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let r = curvature_of(x);
    let d = r.weyl_decompose().unwrap();
    same("R = W + g s", &(&d.weyl + &(&DoubleForm::metric(n) * &d.schouten)), r.form())?;
    truth("cW = 0", d.weyl.contract().is_zero(), || d.weyl.contract().to_string())?;
    same("ric = cR", &d.ricci, &r.form().contract())?;
    same("scal = c ric", &d.scalar, &d.ricci.contract().as_scalar().unwrap())?;
    Ok(1)
}

fn law_gauss_bonnet_formulas(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let r = curvature_of(x);
    let h = r.gauss_bonnet(1).unwrap();
    let h = h.as_scalar().expect("n = 4").clone();
    same("★R² = ⟨★R, R⟩", &h, &r.gauss_bonnet_by_pairing(1).unwrap())?;
    Ok(1)
}

fn law_divisibility_soundness(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let r = curvature_of(x);
    let g = DoubleForm::metric(n);
    let s = r.weyl_decompose().unwrap().schouten;
    let pure = CurvatureTensor::validate(&g * &s).unwrap();
    for t in [&r, &pure] {
        let d = t.is_k_conformally_flat(1).unwrap();
        if let Some(h) = &d.witness {
            same("g H = R", &(&g * h), t.form())?;
        }
        same(
            "R = gH ⟺ W = 0",
            &d.holds(),
            &t.weyl_decompose().unwrap().weyl.is_zero(),
        )?;
    }
    let divided = divide_by_metric(pure.form());
    truth("divide(g s) = s", divided.as_ref() == Some(&s), || format!("{divided:?}"))?;
    Ok(2)
}

fn law_weyl_invariance(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let r = curvature_of(x);
    same("P_1(R) = P_1(W)", &pontrjagin_form(&r, 1).unwrap(), &pontrjagin_form(&r.weyl().unwrap(), 1).unwrap())?;
    Ok(1)
}

fn law_pontrjagin_routes(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let r = curvature_of(x);
    let o = Orientation::Standard;
    let form = pontrjagin_form(&r, 1).unwrap();
    same("Alt route = Chern-Weil route", &form, &chern_form_oracle(&r, 1).unwrap())?;
    let p = pontrjagin_scalar(&r, 1, o).unwrap();
    same("pairing = contraction", &p, &pontrjagin_scalar_by_contraction(&r, 1, o).unwrap())?;
    same("pairing = ordered index sum", &p, &pontrjagin_scalar_by_index_sum(&r, 1, o).unwrap())?;
    same("pairing = ⟨P_1, ω_g⟩", &p, &form.volume_pairing(o).unwrap())?;
    Ok(1)
}

fn law_thorpe_inequality(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let r = curvature_of(x);
    let tb = thorpe_bound(&r, 1).unwrap();
    truth("|p_1| ≤ ‖R‖²/(2π)²", tb.inequality_holds(), || format!("{} vs {}", tb.p_k, tb.bound))?;
    truth("equality with 𝔖R = 0 forces cR = 0", tb.equality_clause_holds(), || {
        tb.contraction.to_string()
    })?;
    let wb = weyl_bound(&r, 1).unwrap();
    truth("|p_1| ≤ ‖W‖²/(2π)²", tb.p_k.abs().coeff() <= wb.coeff() || tb.p_k.is_zero(), || {
        format!("{} vs {wb}", tb.p_k)
    })?;
    Ok(1)
}

fn law_vanishing(_: &Ops, n: usize, x: &[DoubleForm]) -> Verdict {
    let r = curvature_of(x);
    let s = r.weyl_decompose().unwrap().schouten;
    let conformally_flat = CurvatureTensor::validate(&DoubleForm::metric(n) * &s).unwrap();
    let p = pontrjagin_form(&conformally_flat, 1).unwrap();
    truth("P_1(g h) = 0", p.is_zero(), || p.to_string())?;
    Ok(1)
}

fn law_mixed_single(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    let r = curvature_of(x);
    let one = Partition::new(vec![1]).unwrap();
    let p1 = pontrjagin_form(&r, 1).unwrap();
    same("mixed formula (1) = P_1", &mixed_pontrjagin_form(&r, &one).unwrap(), &p1)?;
    same("wedge definition (1) = P_1", &mixed_pontrjagin_by_wedge(&r, &one).unwrap(), &p1)?;
    Ok(1)
}

fn law_thorpe_chain(_: &Ops, _: usize, x: &[DoubleForm]) -> Verdict {
    // Self-dual part of a random curvature tensor in n = 4: R + ★R is Thorpe.
    let r0 = curvature_of(x);
    let r = CurvatureTensor::validate(r0.form() + &r0.form().double_hodge_star()).unwrap();
    truth("R + ★R is Thorpe", r.is_thorpe(1).unwrap(), || r.form().to_string())?;
    let h = r.gauss_bonnet(1).unwrap().as_scalar().unwrap().clone();
    same("h_4 = ‖R‖²", &h, &r.form().norm_sq())?;
    let p = pontrjagin_scalar(&r, 1, Orientation::Standard).unwrap();
    truth("4π² |p_1| ≤ h_4", p.coeff().abs() * int(4) <= h, || format!("{p} vs {h}"))?;
    Ok(1)
}

fn dims_ge3(n: usize) -> bool {
    n >= 3
}

fn dims_4(n: usize) -> bool {
    n == 4
}

fn dims_4_to_6(n: usize) -> bool {
    (4..=6).contains(&n)
}

fn plucker_n4(n: usize) -> bool {
    n == 4
}

/// The full list of identities.
pub fn registry() -> Vec<Identity> {
    use Expectation::{Holds, KnownDefect};
    let id = |name, scope, statement, dims, shapes, law, exhaustive_up_to| Identity {
        name,
        scope,
        statement,
        expectation: Holds,
        dims,
        shapes,
        law,
        exhaustive_up_to,
    };
    let defect = |name, scope, statement, dims, shapes, law, exhaustive_up_to| Identity {
        expectation: KnownDefect,
        ..id(name, scope, statement, dims, shapes, law, exhaustive_up_to)
    };
    vec![
        id(
            "wedge-antisymmetry",
            "exterior",
            "a∧b = (-1)^{pq} b∧a",
            all_n,
            binary_forms as Shapes,
            law_wedge_antisymmetry as Law,
            5,
        ),
        id(
            "wedge-associativity",
            "exterior",
            "(a∧b)∧c = a∧(b∧c)",
            all_n,
            |n| {
                (0..=n)
                    .flat_map(|p| (0..=n).flat_map(move |q| (0..=n).map(move |r| vec![form(p), form(q), form(r)])))
                    .collect()
            },
            law_wedge_associativity,
            3,
        ),
        id(
            "wedge-interior-adjoint",
            "exterior",
            "⟨e_i∧a, b⟩ = ⟨a, i_{e_i} b⟩",
            all_n,
            |n| (0..n).map(|p| vec![form(p), form(p + 1)]).collect(),
            law_wedge_interior_adjoint,
            5,
        ),
        id(
            "star-involution",
            "exterior",
            "★★a = (-1)^{p(n-p)} a",
            all_n,
            unary_forms,
            law_star_involution,
            6,
        ),
        id(
            "star-defining-identity",
            "exterior",
            "b∧★a = ⟨a,b⟩ e_{1..n}",
            all_n,
            |n| (0..=n).map(|p| vec![form(p), form(p)]).collect(),
            law_star_defining,
            5,
        ),
        id(
            "interior-star",
            "exterior",
            "i_{e_i}★a = ★(a∧e_i)",
            all_n,
            unary_forms,
            law_interior_star,
            6,
        ),
        defect(
            "interior-star-printed",
            "exterior",
            "i_{e_i}★a = ★(e_i∧a) (holds only for even degree)",
            all_n,
            unary_forms,
            law_interior_star_printed,
            6,
        ),
        id(
            "graded-commutativity",
            "products",
            "ω1ω2 = (-1)^{pr+qs} ω2ω1",
            all_n,
            binary_double,
            law_graded_commutativity,
            4,
        ),
        id(
            "exterior-product-associativity",
            "products",
            "(ω1ω2)ω3 = ω1(ω2ω3)",
            all_n,
            |n| {
                let b: Vec<_> = all_bidegrees(n).collect();
                let mut out = vec![];
                for x in &b {
                    for y in &b {
                        for z in &b {
                            if x.0 + y.0 + z.0 <= n && x.1 + y.1 + z.1 <= n {
                                out.push(vec![any(x.0, x.1), any(y.0, y.1), any(z.0, z.1)]);
                            }
                        }
                    }
                }
                out
            },
            law_ext_associativity,
            3,
        ),
        id(
            "composition-associativity",
            "products",
            "(ω1∘ω2)∘ω3 = ω1∘(ω2∘ω3)",
            all_n,
            |n| {
                let mut out = vec![];
                for (p, q) in all_bidegrees(n) {
                    for r in 0..=n {
                        for s in 0..=n {
                            out.push(vec![any(p, q), any(r, p), any(s, r)]);
                        }
                    }
                }
                out
            },
            law_comp_associativity,
            3,
        ),
        id(
            "composition-right-identity",
            "products",
            "ω∘(g^p/p!) = ω",
            all_n,
            unary_double,
            law_right_identity,
            4,
        ),
        id(
            "double-star-involution",
            "products",
            "★★ω = (-1)^{p(n-p)+q(n-q)} ω",
            all_n,
            unary_double,
            law_double_star_involution,
            4,
        ),
        id(
            "adjoint-exterior-contraction",
            "basic-maps",
            "⟨L_h^{1,1}ω1, ω2⟩ = ⟨ω1, L_h^{-1,-1}ω2⟩",
            all_n,
            |n| {
                all_bidegrees(n)
                    .filter(|(p, q)| *p < n && *q < n)
                    .map(|(p, q)| vec![any(1, 1), any(p, q), any(p + 1, q + 1)])
                    .collect()
            },
            law_adjoint_exterior_contraction,
            4,
        ),
        id(
            "adjoint-bianchi-maps",
            "basic-maps",
            "⟨L_h^{1,-1}ω1, ω2⟩ = ⟨ω1, L_h^{-1,1}ω2⟩",
            all_n,
            |n| {
                all_bidegrees(n)
                    .filter(|(p, q)| *p < n && *q > 0)
                    .map(|(p, q)| vec![any(1, 1), any(p, q), any(p + 1, q - 1)])
                    .collect()
            },
            law_adjoint_bianchi_maps,
            4,
        ),
        id(
            "adjoint-bianchi-sums",
            "basic-maps",
            "⟨𝔖ω1, ω2⟩ = ⟨ω1, 𝔖̃ω2⟩ and ⟨gω1, ω3⟩ = ⟨ω1, cω3⟩",
            all_n,
            |n| {
                all_bidegrees(n)
                    .filter(|(p, q)| *p < n && *q > 0 && *q < n)
                    .map(|(p, q)| vec![any(p, q), any(p + 1, q - 1), any(p + 1, q + 1)])
                    .collect()
            },
            law_adjoint_bianchi_sums,
            3,
        ),
        id(
            "basic-maps-of-the-metric",
            "basic-maps",
            "L_g^{±1,±1} are g·, c, 𝔖 and 𝔖̃",
            all_n,
            unary_double,
            law_metric_maps,
            4,
        ),
        id(
            "adjoint-bianchi-transpose",
            "basic-maps",
            "𝔖̃ω = (𝔖(ω^t))^t",
            all_n,
            unary_double,
            law_adjoint_transpose,
            4,
        ),
        id(
            "bianchi-derivation",
            "bianchi",
            "𝔖(ω1ω2) = (𝔖ω1)ω2 + (-1)^{p+q} ω1(𝔖ω2)",
            all_n,
            binary_double,
            law_bianchi_derivation,
            4,
        ),
        id(
            "alt-bianchi-power",
            "bianchi",
            "Alt ω = (-1)^{pq+q(q-1)/2} p!/(p+q)! 𝔖^q ω",
            all_n,
            unary_double,
            law_alt_bianchi,
            4,
        ),
        id(
            "alt-kills-bianchi-closed",
            "bianchi",
            "𝔖ω = 0 ⟹ Alt ω = 0 (q ≥ 1)",
            all_n,
            |n| {
                all_bidegrees(n)
                    .filter(|(_, q)| *q > 0)
                    .map(|(p, q)| {
                        vec![Slot {
                            p,
                            q,
                            kind: Kind::BianchiClosed,
                        }]
                    })
                    .collect()
            },
            law_alt_kills_bianchi,
            4,
        ),
        id(
            "alt-endomorphism",
            "bianchi",
            "(p+r+q+s)!/((p+r)!(q+s)!) Alt(ω1ω2) = (-1)^{qr} (normalized Alt ω1)∧(normalized Alt ω2)",
            all_n,
            binary_double,
            law_alt_endomorphism,
            4,
        ),
        id(
            "alt-ideal",
            "bianchi",
            "𝔖ω1 = 0 ⟹ Alt(ω1ω2) = 0 (q ≥ 1)",
            all_n,
            |n| {
                let mut out = vec![];
                for (p, q) in all_bidegrees(n).filter(|(_, q)| *q > 0) {
                    for (r, s) in all_bidegrees(n) {
                        out.push(vec![
                            Slot {
                                p,
                                q,
                                kind: Kind::BianchiClosed,
                            },
                            any(r, s),
                        ]);
                    }
                }
                out
            },
            law_alt_ideal,
            3,
        ),
        id(
            "plucker-relations",
            "bianchi",
            "α decomposable ⟺ 𝔖(α⊗α) = 0",
            all_n,
            unary_forms,
            law_plucker,
            5,
        ),
        id(
            "plucker-products",
            "bianchi",
            "products of 1-forms satisfy 𝔖(α⊗α) = 0",
            all_n,
            plucker_product_shapes,
            law_plucker_products,
            0,
        ),
        id(
            "plucker-two-forms-n4",
            "bianchi",
            "all 2-forms in n = 4 with coefficients in {-1,0,1}: 𝔖(α⊗α) = 0 ⟺ α∧α = 0",
            plucker_n4,
            no_inputs,
            law_plucker_two_forms_exhaustive,
            0,
        ),
        id(
            "alt-g-composition-1",
            "alt-g-composition",
            "Alt(ω1∘gω2) = (-1)^{r-1} r/(q+1) Alt(𝔖̃ω1∘ω2)",
            all_n,
            altgomega_one_shapes,
            law_altgomega_one,
            3,
        ),
        defect(
            "alt-g-composition-1-printed",
            "alt-g-composition",
            "Alt(ω1∘gω2) = (-1)^{r-1} (q+1)/r Alt(𝔖̃ω1∘ω2)",
            all_n,
            altgomega_one_shapes,
            law_altgomega_one_printed,
            3,
        ),
        id(
            "alt-g-composition-2",
            "alt-g-composition",
            "Alt(gω2∘ω1) = (-1)^p s/(p+1) Alt(ω2∘𝔖ω1)",
            all_n,
            altgomega_two_shapes,
            law_altgomega_two,
            3,
        ),
        defect(
            "alt-g-composition-2-printed",
            "alt-g-composition",
            "Alt(gω2∘ω1) = (-1)^p (p+1)/s Alt(ω2∘𝔖ω1)",
            all_n,
            altgomega_two_shapes,
            law_altgomega_two_printed,
            3,
        ),
        id(
            "alt-g-composition-annihilation-1",
            "alt-g-composition",
            "𝔖ω1^t = 0 ⟹ Alt(ω1∘gω2) = 0",
            all_n,
            altgomega_annihilation_shapes,
            law_altgomega_annihilation,
            3,
        ),
        id(
            "alt-g-composition-annihilation-2",
            "alt-g-composition",
            "𝔖ω1 = 0 ⟹ Alt(gω2∘ω1) = 0",
            all_n,
            altgomega_annihilation_two_shapes,
            law_altgomega_annihilation_two,
            3,
        ),
        id(
            "volume-double-form",
            "volume",
            "★ω_g = ω_g, cω_g = 0, gω_g = 0, ω_g^t = (-1)^{n/2} ω_g, ⟨ω_g,ω_g⟩ = C(n,n/2), ω_g = Σ e_I⊗★e_I",
            even_n,
            no_inputs,
            law_omega_properties,
            0,
        ),
        defect(
            "volume-double-form-unit-norm-printed",
            "volume",
            "⟨ω_g, ω_g⟩ = 1",
            even_n,
            no_inputs,
            law_omega_norm_printed,
            0,
        ),
        id(
            "volume-double-form-as-bilinear-form",
            "volume",
            "ω_g(α, β) = ★(α∧β) = ⟨★α, β⟩",
            even_n,
            omega_bilinear_shapes,
            law_omega_bilinear,
            6,
        ),
        id(
            "mu-star-square",
            "mu-star",
            "ω_g∘ω_g = g^{2k}/(2k)! (n = 4k)",
            four_k,
            no_inputs,
            law_mu_square,
            0,
        ),
        id(
            "mu-star-square-signed",
            "mu-star",
            "ω_g∘ω_g = (-1)^{n/2} g^{n/2}/(n/2)! (all even n)",
            even_n,
            no_inputs,
            law_mu_square_signed,
            0,
        ),
        id(
            "mu-star-isometry",
            "mu-star",
            "⟨ω_g∘ω1, ω_g∘ω2⟩ = ⟨ω1,ω2⟩ = ⟨ω1∘ω_g, ω2∘ω_g⟩",
            even_n,
            middle_pair,
            law_mu_isometry,
            4,
        ),
        id(
            "mu-star-hodge",
            "mu-star",
            "(★ψ)∘ω_g = ω_g∘ψ and ψ∘ω_g = ω_g∘(★ψ)",
            even_n,
            middle,
            law_mu_star_sides,
            6,
        ),
        id(
            "mu-star-conjugation",
            "mu-star",
            "★ψ = ω_g∘ψ∘ω_g (n = 4k)",
            four_k,
            middle,
            law_mu_conjugation,
            4,
        ),
        id(
            "mu-star-conjugation-signed",
            "mu-star",
            "★ψ = (-1)^{n/2} ω_g∘ψ∘ω_g (all even n)",
            even_n,
            middle,
            law_mu_conjugation_signed,
            6,
        ),
        id(
            "lemma-a",
            "lemma-a",
            "c(ω∘ω_g) = (-1)^{p+1} 𝔖ω∘ω_g^{(p-1,p+1)}, n = 2p",
            even_n,
            middle,
            law_lemma_a,
            6,
        ),
        defect(
            "lemma-a-printed",
            "lemma-a",
            "c(ω∘ω_g) = 𝔖ω∘ω_g^{(p-1,p+1)}, n = 2p",
            even_n,
            middle,
            law_lemma_a_printed,
            6,
        ),
        id(
            "contraction-of-bianchi-closed",
            "lemma-a",
            "𝔖ψ = 0 ⟹ c(ψ∘ω_g) = 0",
            even_n,
            closed_middle,
            law_contraction_of_closed,
            6,
        ),
        id(
            "weyl-decomposition",
            "curvature",
            "R = W + g s, cW = 0",
            dims_ge3,
            curvature_only,
            law_weyl_reconstruction,
            0,
        ),
        id(
            "gauss-bonnet-formulas",
            "curvature",
            "★R² = ⟨★R, R⟩ (n = 4)",
            dims_4,
            curvature_only,
            law_gauss_bonnet_formulas,
            0,
        ),
        id(
            "divisibility-soundness",
            "curvature",
            "g H = R for every witness; R = gH ⟺ W = 0",
            dims_4_to_6,
            curvature_only,
            law_divisibility_soundness,
            0,
        ),
        id(
            "thorpe-chain",
            "curvature",
            "Thorpe R: h_4 = ‖R‖² ≥ 4π²|p_1|",
            dims_4,
            curvature_only,
            law_thorpe_chain,
            0,
        ),
        id(
            "weyl-invariance",
            "pontrjagin",
            "P_1(R) = P_1(W)",
            dims_4_to_6,
            curvature_only,
            law_weyl_invariance,
            0,
        ),
        id(
            "pontrjagin-routes",
            "pontrjagin",
            "Alt route = Chern-Weil route; pairing = contraction = index sum = ⟨P_1, ω_g⟩ (n = 4)",
            dims_4,
            curvature_only,
            law_pontrjagin_routes,
            0,
        ),
        id(
            "thorpe-inequality",
            "pontrjagin",
            "|p_1| ≤ ‖R‖²/(2π)², |p_1| ≤ ‖W‖²/(2π)², equality clause (n = 4)",
            dims_4,
            curvature_only,
            law_thorpe_inequality,
            0,
        ),
        id(
            "vanishing-for-conformally-flat",
            "pontrjagin",
            "R = g h ⟹ P_1(R) = 0",
            dims_4_to_6,
            curvature_only,
            law_vanishing,
            0,
        ),
        id(
            "mixed-single-factor",
            "pontrjagin",
            "mixed formula and wedge definition at partition (1) equal P_1",
            dims_4_to_6,
            curvature_only,
            law_mixed_single,
            0,
        ),
    ]
}
