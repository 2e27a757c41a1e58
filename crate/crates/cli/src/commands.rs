use dforms::identities::{self, run_identity, Expectation, Fault, Identity, IdentityOutcome, SuiteConfig};
use dforms::models::CATALOG;
use dforms::pontrjagin::{
    chern_form_oracle, mixed_number_density, mixed_pontrjagin_by_wedge, mixed_pontrjagin_form, pontrjagin_form,
    pontrjagin_scalar, pontrjagin_scalar_by_contraction, pontrjagin_scalar_by_index_sum, Partition,
};
use dforms::{CurvatureTensor, PiScalar};

use crate::document::TensorDocument;
use crate::report::{CheckStatus, Quantity, Report, Section};
use crate::CliError;

fn lib(e: dforms::Error) -> CliError {
    CliError::Validation(e.to_string())
}

pub fn cmd_models() -> Report {
    let mut r = Report::new("models", "catalog");
    let mut s = Section::new("models");
    for (name, description) in CATALOG {
        s.row(*name, Quantity::Text {
            value: description.to_string(),
        });
    }
    r.sections.push(s);
    r
}

pub fn cmd_invariants(doc: &TensorDocument) -> Result<Report, CliError> {
    let r = doc.build()?;
    let n = r.dim();
    let mut report = Report::new("invariants", doc.subject());
    let mut ricci = Section::new("Ricci");
    ricci
        .row("ric", Quantity::tensor(&r.ricci()))
        .row("scal", Quantity::rational(&r.scalar_curvature()));
    report.sections.push(ricci);
    if n >= 3 {
        let w = r.weyl().map_err(lib)?;
        let mut weyl = Section::new("Weyl");
        weyl.row("|W|^2", Quantity::rational(&w.form().norm_sq()));
        report.sections.push(weyl);
    } else {
        report.notes.push("the Weyl tensor is undefined for n = 2".into());
    }
    let mut gb = Section::new("Gauss-Bonnet curvatures");
    for k in (1..).take_while(|k| 4 * k <= n) {
        let h = r.gauss_bonnet(k).map_err(lib)?;
        let key = format!("h_{}", 4 * k);
        match h {
            dforms::curvature::GaussBonnet::Scalar(v) => gb.row(key, Quantity::rational(&v)),
            dforms::curvature::GaussBonnet::Form(w) => gb.row(key, Quantity::tensor(&w)),
        };
    }
    if !gb.rows.is_empty() {
        report.sections.push(gb);
    }
    let mut powers = Section::new("norms of powers");
    for k in (1..).take_while(|k| 2 * k <= n) {
        powers.row(format!("|R^{k}|^2"), Quantity::rational(&r.power(k).norm_sq()));
    }
    report.sections.push(powers);
    Ok(report)
}

pub enum Degree {
    K(usize),
    Partition(Partition),
}

pub fn cmd_pontrjagin(
    doc: &TensorDocument,
    degree: &Degree,
    oracle: bool,
    volume: Option<PiScalar>,
) -> Result<Report, CliError> {
    let r = doc.build()?;
    let orientation = doc.orientation()?;
    let volume = match volume {
        Some(v) => Some(v),
        None => doc.volume()?,
    };
    let n = r.dim();
    let mut report = Report::new("pontrjagin", doc.subject());
    let (k, name, form) = match degree {
        Degree::K(k) => (*k, format!("P_{k}"), pontrjagin_form(&r, *k).map_err(lib)?),
        Degree::Partition(p) => (p.weight(), format!("P{p}"), mixed_pontrjagin_form(&r, p).map_err(lib)?),
    };
    let mut forms = Section::new("form");
    forms.row(name.clone(), Quantity::form(&form));
    report.sections.push(forms);
    let scalar = if n == 4 * k {
        let s = match degree {
            Degree::K(k) => pontrjagin_scalar(&r, *k, orientation).map_err(lib)?,
            Degree::Partition(p) => mixed_number_density(&r, p).map_err(lib)?,
        };
        let s = match (degree, orientation) {
            (Degree::Partition(_), dforms::Orientation::Reversed) => {
                PiScalar::new(-s.coeff().clone(), s.pi_pow())
            }
            _ => s,
        };
        let mut sc = Section::new("scalar");
        let key = match degree {
            Degree::K(k) => format!("p_{k}"),
            Degree::Partition(p) => format!("p{p}"),
        };
        sc.row(key.clone(), Quantity::pi(&s));
        if let Some(v) = &volume {
            sc.row("volume", Quantity::pi(v));
            sc.row(format!("{key} * volume"), Quantity::pi(&(&s * v)));
        }
        report.sections.push(sc);
        Some(s)
    } else {
        report.notes.push(format!(
            "n = {n} exceeds 4k = {}: only the {}-form is defined, listed coefficient by coefficient",
            4 * k,
            4 * k
        ));
        if volume.is_some() {
            report.notes.push("volume ignored: no scalar at n > 4k".into());
        }
        None
    };
    if oracle {
        report.sections.push(run_oracles(&r, degree, &form, scalar.as_ref(), orientation, &mut report.failures)?);
    }
    Ok(report)
}

fn run_oracles(
    r: &CurvatureTensor,
    degree: &Degree,
    form: &dforms::PiForm,
    scalar: Option<&PiScalar>,
    orientation: dforms::Orientation,
    failures: &mut Vec<String>,
) -> Result<Section, CliError> {
    let mut s = Section::new("oracles");
    let mut agree = |key: &str, ok: bool, failures: &mut Vec<String>| {
        s.row(key, Quantity::Flag { value: ok });
        if !ok {
            failures.push(format!("oracle disagreement: {key}"));
        }
    };
    match degree {
        Degree::K(k) => {
            agree("form = Chern-Weil oracle", *form == chern_form_oracle(r, *k).map_err(lib)?, failures);
            if let Some(p) = scalar {
                let c = pontrjagin_scalar_by_contraction(r, *k, orientation).map_err(lib)?;
                agree("scalar = contraction route", *p == c, failures);
                let i = pontrjagin_scalar_by_index_sum(r, *k, orientation).map_err(lib)?;
                agree("scalar = ordered index sum", *p == i, failures);
                agree("scalar = pairing of the form", *p == form.volume_pairing(orientation).map_err(lib)?, failures);
            }
        }
        Degree::Partition(p) => {
            let w = mixed_pontrjagin_by_wedge(r, p).map_err(lib)?;
            agree("formula = wedge of single forms", *form == w, failures);
        }
    }
    Ok(s)
}

pub fn cmd_classify(doc: &TensorDocument) -> Result<Report, CliError> {
    let r = doc.build()?;
    let c = r.classify();
    let mut report = Report::new("classify", doc.subject());
    let mut s = Section::new("Einstein");
    if let Some(e) = &c.einstein {
        s.row("einstein", Quantity::Flag { value: e.holds });
        if e.holds {
            s.row("lambda", Quantity::rational(&e.lambda));
        }
    }
    for (q, h) in &c.hyper_einstein {
        s.row(format!("hyper {}-Einstein", 2 * q), Quantity::Flag { value: h.holds });
        if h.holds {
            s.row(format!("hyper {}-Einstein constant", 2 * q), Quantity::rational(&h.lambda));
        }
    }
    report.sections.push(s);
    let mut s = Section::new("Thorpe");
    match c.thorpe {
        Some((k, t)) => {
            s.row(format!("thorpe (k = {k})"), Quantity::Flag { value: t });
        }
        None => {
            s.row("thorpe", Quantity::Text {
                value: "undefined (n is not a multiple of 4)".into(),
            });
        }
    }
    report.sections.push(s);
    let mut s = Section::new("conformal flatness");
    for (k, d) in &c.conformally_flat {
        s.row(format!("{k}-conformally flat"), Quantity::Flag { value: d.holds() });
        if let Some(b) = d.witness_bianchi {
            s.row(format!("{k}-witness satisfies Bianchi"), Quantity::Flag { value: b });
        }
    }
    report.sections.push(s);
    let mut s = Section::new("flatness");
    for (k, f) in &c.k_flat {
        s.row(format!("{k}-flat"), Quantity::Flag { value: *f });
    }
    report.sections.push(s);
    let mut s = Section::new("Gauss-Bonnet curvatures");
    for (k, h) in &c.gauss_bonnet {
        let key = format!("h_{}", 4 * k);
        match h {
            dforms::curvature::GaussBonnet::Scalar(v) => s.row(key, Quantity::rational(v)),
            dforms::curvature::GaussBonnet::Form(w) => s.row(key, Quantity::tensor(w)),
        };
    }
    if !s.rows.is_empty() {
        report.sections.push(s);
    }
    Ok(report)
}

pub struct SelftestOptions {
    pub scope: Option<String>,
    pub seed: u64,
    pub n: Option<usize>,
    pub cases: usize,
    pub fault: Option<Fault>,
}

/// Runs identities on worker threads; results are merged in registry order.
fn run_all(ids: &[Identity], cfg: &SuiteConfig) -> Vec<IdentityOutcome> {
    let workers = std::thread::available_parallelism().map_or(4, |n| n.get()).min(ids.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<IdentityOutcome>> = vec![None; ids.len()];
    let results = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= ids.len() {
                    break;
                }
                let out = run_identity(&ids[i], cfg);
                results.lock().expect("no poisoned workers")[i] = Some(out);
            });
        }
    });
    slots.into_iter().map(|o| o.expect("every identity ran")).collect()
}

pub fn cmd_selftest(opts: &SelftestOptions) -> Result<Report, CliError> {
    let ids = identities::select(opts.scope.as_deref()).map_err(|e| CliError::Usage(e.to_string()))?;
    let dims = match opts.n {
        Some(n) if !(2..=8).contains(&n) => {
            return Err(CliError::Usage(format!("--n must lie in 2..=8, got {n}")));
        }
        Some(n) => vec![n],
        None => (2..=6).collect(),
    };
    let cfg = SuiteConfig {
        seed: opts.seed,
        cases: opts.cases,
        dims,
        exhaustive_up_to: 4,
        fault: opts.fault,
    };
    let subject = format!(
        "scope {}, seed {}, n in {:?}, {} cases per identity",
        opts.scope.as_deref().unwrap_or("all"),
        cfg.seed,
        cfg.dims,
        cfg.cases
    );
    let mut report = Report::new("selftest", subject);
    if let Some(f) = opts.fault {
        report.notes.push(format!("fault injected: {f:?}"));
    }
    let outcomes = run_all(&ids, &cfg);
    for (id, out) in ids.iter().zip(&outcomes) {
        let status = match (id.expectation, out.holds()) {
            (Expectation::Holds, true) => CheckStatus::Holds,
            (Expectation::Holds, false) => CheckStatus::Failed,
            (Expectation::KnownDefect, false) => CheckStatus::KnownDefectRefuted,
            (Expectation::KnownDefect, true) => CheckStatus::KnownDefectNotRefuted,
        };
        if report.sections.last().is_none_or(|s| s.title != id.scope) {
            report.sections.push(Section::new(id.scope));
        }
        let counterexample = out.counterexample.as_ref().map(ToString::to_string);
        if status == CheckStatus::Failed {
            report.failures.push(format!(
                "{}: {}\n{}",
                id.name,
                id.statement,
                counterexample.as_deref().unwrap_or_default()
            ));
        }
        let ran = out.random_cases + out.exhaustive_cases > 0 || out.counterexample.is_some();
        let section = report.sections.last_mut().expect("pushed above");
        if ran {
            section.row(id.name, Quantity::Check {
                status,
                random_cases: out.random_cases,
                exhaustive_cases: out.exhaustive_cases,
                counterexample,
            });
        } else {
            section.row(id.name, Quantity::Text {
                value: "not applicable in the selected dimensions".into(),
            });
        }
    }
    Ok(report)
}
