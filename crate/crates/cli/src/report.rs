//! Structured command output: a human-readable table and a JSON document that
//! round-trips losslessly. Rationals are canonical `"p/q"` strings and powers of
//! π are a separate integer field.

use std::fmt::Write as _;

use dforms::pontrjagin::PiForm;
use dforms::rational::{self, Rational};
use dforms::{DoubleForm, MultiIndex, PiScalar};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub subject: String,
    pub sections: Vec<Section>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Failed checks; a nonempty list makes the command exit with status 3.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub title: String,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub key: String,
    #[serde(flatten)]
    pub value: Quantity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Quantity {
    Number {
        value: String,
        pi_pow: i32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        approx: Option<String>,
    },
    Flag {
        value: bool,
    },
    Text {
        value: String,
    },
    Form {
        degree: usize,
        pi_pow: i32,
        terms: Vec<FormTerm>,
    },
    Tensor {
        p: usize,
        q: usize,
        terms: Vec<TensorTerm>,
    },
    Check {
        status: CheckStatus,
        random_cases: usize,
        exhaustive_cases: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        counterexample: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Holds,
    Failed,
    /// A statement kept as printed that is known to be false.
    KnownDefectRefuted,
    KnownDefectNotRefuted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormTerm {
    pub index: Vec<usize>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTerm {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub value: String,
}

/// π to 62 decimal places; ample for 20 significant digits of `c π^k` at the
/// exponents that occur.
fn pi() -> Rational {
    rational::parse("314159265358979323846264338327950288419716939937510582097494459/100000000000000000000000000000000000000000000000000000000000000")
        .expect("literal")
}

fn approx(c: &Rational, pi_pow: i32) -> String {
    let v = c * pi().pow(pi_pow);
    rational::to_decimal(&v, 20)
}

fn indices(i: MultiIndex) -> Vec<usize> {
    i.indices().collect()
}

impl Quantity {
    pub fn rational(v: &Rational) -> Self {
        Quantity::Number {
            value: rational::format(v),
            pi_pow: 0,
            approx: None,
        }
    }

    pub fn pi(v: &PiScalar) -> Self {
        Quantity::Number {
            value: rational::format(v.coeff()),
            pi_pow: v.pi_pow(),
            approx: None,
        }
    }

    pub fn form(f: &PiForm) -> Self {
        Quantity::Form {
            degree: f.degree(),
            pi_pow: f.pi_pow(),
            terms: f
                .form()
                .terms()
                .map(|(i, c)| FormTerm {
                    index: indices(i),
                    value: rational::format(c),
                })
                .collect(),
        }
    }

    pub fn tensor(w: &DoubleForm) -> Self {
        let (p, q) = w.bidegree();
        Quantity::Tensor {
            p,
            q,
            terms: w
                .terms()
                .map(|(i, j, c)| TensorTerm {
                    left: indices(i),
                    right: indices(j),
                    value: rational::format(c),
                })
                .collect(),
        }
    }

    fn with_approx(mut self) -> Self {
        if let Quantity::Number { value, pi_pow, approx: a } = &mut self {
            let c = rational::parse(value).expect("canonical rational");
            *a = Some(approx(&c, *pi_pow));
        }
        self
    }
}

fn pi_suffix(pi_pow: i32) -> String {
    match pi_pow {
        0 => String::new(),
        1 => "*pi".to_string(),
        e => format!("*pi^{e}"),
    }
}

fn label(ix: &[usize]) -> String {
    if ix.is_empty() {
        "1".to_string()
    } else {
        format!("e{}", ix.iter().map(ToString::to_string).collect::<Vec<_>>().join(if ix.iter().any(|&i| i > 9) { "," } else { "" }))
    }
}

fn render_terms<'a>(terms: impl Iterator<Item = (String, &'a str)>) -> String {
    let mut out = String::new();
    for (basis, v) in terms {
        let (neg, mag) = match v.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, v),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != "1" {
            out.push_str(mag);
            out.push(' ');
        }
        out.push_str(&basis);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

impl std::fmt::Display for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Quantity::Number { value, pi_pow, approx } => {
                write!(f, "{value}{}", pi_suffix(*pi_pow))?;
                if let Some(a) = approx {
                    write!(f, "  (approximately {a})")?;
                }
                Ok(())
            }
            Quantity::Flag { value } => write!(f, "{value}"),
            Quantity::Text { value } => write!(f, "{value}"),
            Quantity::Form { pi_pow, terms, .. } => {
                let body = render_terms(terms.iter().map(|t| (label(&t.index), t.value.as_str())));
                if *pi_pow == 0 || terms.is_empty() {
                    write!(f, "{body}")
                } else {
                    write!(f, "({body}) * pi^{pi_pow}")
                }
            }
            Quantity::Tensor { terms, .. } => {
                let body = render_terms(
                    terms
                        .iter()
                        .map(|t| (format!("{}⊗{}", label(&t.left), label(&t.right)), t.value.as_str())),
                );
                write!(f, "{body}")
            }
            Quantity::Check {
                status,
                random_cases,
                exhaustive_cases,
                ..
            } => {
                let s = match status {
                    CheckStatus::Holds => "holds",
                    CheckStatus::Failed => "FAILED",
                    CheckStatus::KnownDefectRefuted => "known defect, refuted",
                    CheckStatus::KnownDefectNotRefuted => "known defect, not refuted on this sample",
                };
                write!(f, "{s} ({random_cases} random, {exhaustive_cases} exhaustive)")
            }
        }
    }
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section {
            title: title.into(),
            rows: vec![],
        }
    }

    pub fn row(&mut self, key: impl Into<String>, value: Quantity) -> &mut Self {
        self.rows.push(Row { key: key.into(), value });
        self
    }
}

impl Report {
    pub fn new(command: &str, subject: impl Into<String>) -> Self {
        Report {
            command: command.to_string(),
            subject: subject.into(),
            sections: vec![],
            notes: vec![],
            failures: vec![],
        }
    }

    /// Attaches 20-digit decimal approximations to every number.
    pub fn with_decimals(mut self) -> Self {
        for s in &mut self.sections {
            for r in &mut s.rows {
                r.value = r.value.clone().with_approx();
            }
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: {}", self.command, self.subject);
        let width = self
            .sections
            .iter()
            .flat_map(|s| s.rows.iter().map(|r| r.key.chars().count()))
            .max()
            .unwrap_or(0);
        for s in &self.sections {
            let _ = writeln!(out, "\n[{}]", s.title);
            for r in &s.rows {
                let pad = width - r.key.chars().count();
                let _ = writeln!(out, "  {}{}  {}", r.key, " ".repeat(pad), r.value);
                if let Quantity::Check {
                    counterexample: Some(ce),
                    ..
                } = &r.value
                {
                    for line in ce.lines() {
                        let _ = writeln!(out, "      {line}");
                    }
                }
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "\nnote: {n}");
        }
        for f in &self.failures {
            let _ = writeln!(out, "\nFAILURE: {f}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dforms::rational::{int, ratio};

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("invariants", "test");
        let mut s = Section::new("numbers");
        s.row("scal", Quantity::rational(&int(12)))
            .row("vol", Quantity::pi(&PiScalar::new(ratio(8, 3), 2)))
            .row("flag", Quantity::Flag { value: true })
            .row("ric", Quantity::tensor(&DoubleForm::metric(3).scale(&int(-2))));
        r.sections.push(s);
        r.notes.push("n".into());
        let r = r.with_decimals();
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn decimals_are_labelled() {
        let q = Quantity::pi(&PiScalar::new(ratio(8, 3), 2)).with_approx();
        assert_eq!(q.to_string(), "8/3*pi^2  (approximately 2.6318945069571622984e1)");
    }

    #[test]
    fn tensor_rendering() {
        let q = Quantity::tensor(&DoubleForm::metric(2).scale(&int(-1)));
        assert_eq!(q.to_string(), "-e1⊗e1 - e2⊗e2");
        assert_eq!(Quantity::tensor(&DoubleForm::zero(2, 1, 1)).to_string(), "0");
    }
}
