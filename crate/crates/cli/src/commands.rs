use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;
use torelli_core::classes::{classify, EdgeType};
use torelli_core::homology::{build_model, conjecture_counterexample, is_identity_action, HomologyError};
use torelli_core::surface::{check_bounds, gen_extremal, gen_random, validate, SurfaceError};
use torelli_core::torelli::{decompose, gamma_m_violation, torelli_rank, torelli_violation, TorelliError};
use torelli_core::TwistFactor;

use crate::format::{parse, write_surface, FormatError};

/// What a command printed and how the process should exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub code: u8,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Report { stdout, code: 0 }
    }

    fn verdict(yes: bool, stdout: String) -> Self {
        Report { stdout, code: if yes { 0 } else { 1 } }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Surface(#[from] SurfaceError),
    #[error("{0}")]
    Torelli(#[from] TorelliError),
    #[error("{0}")]
    Homology(#[from] HomologyError),
    #[error("invalid surface model: {0}")]
    InvalidSurface(String),
}

impl CliError {
    pub const EXIT_CODE: u8 = 2;
}

pub fn classify_cmd(text: &str) -> Result<Report, CliError> {
    let g = parse(text)?.graph()?;
    let cls = classify(&g);
    let mut out = String::new();
    for e in g.edges() {
        let label = g.edge_label(e);
        let _ = match cls.edge_type(e) {
            EdgeType::A => writeln!(out, "{label} a"),
            EdgeType::B(j) => writeln!(out, "{label} b {j}"),
            EdgeType::C => writeln!(out, "{label} c"),
        };
    }
    Ok(Report::ok(out))
}

pub fn check_torelli(text: &str) -> Result<Report, CliError> {
    let m = parse(text)?.multitwist()?;
    Ok(match torelli_violation(&m) {
        None => Report::verdict(true, "YES\n".into()),
        Some(v) => Report::verdict(false, format!("NO {v}\n")),
    })
}

pub fn rank(text: &str) -> Result<Report, CliError> {
    let g = parse(text)?.graph()?;
    Ok(Report::ok(format!("{}\n", torelli_rank(&classify(&g)))))
}

pub fn decompose_cmd(text: &str) -> Result<Report, CliError> {
    let m = parse(text)?.multitwist()?;
    if let Some(v) = torelli_violation(&m) {
        return Ok(Report::verdict(false, format!("NO {v}\n")));
    }
    let g = m.graph();
    let mut out = String::new();
    for f in decompose(&m)? {
        let _ = match f {
            TwistFactor::SeparatingTwist { edge, exponent } => writeln!(out, "SEP {} {exponent}", g.edge_label(edge)),
            TwistFactor::BpMap { plus, minus, exponent } => {
                writeln!(out, "BP {} {} {exponent}", g.edge_label(plus), g.edge_label(minus))
            }
        };
    }
    Ok(Report::ok(out))
}

pub fn check_mod(modulus: &BigInt, text: &str) -> Result<Report, CliError> {
    let m = parse(text)?.multitwist()?;
    Ok(match gamma_m_violation(&m, modulus)? {
        None => Report::verdict(true, "YES\n".into()),
        Some(v) => Report::verdict(false, format!("NO {v}\n")),
    })
}

fn valid_surface(text: &str) -> Result<(crate::format::Document, torelli_core::SurfaceModel), CliError> {
    let doc = parse(text)?;
    let s = doc.surface()?;
    let problems = validate(&s);
    if !problems.is_empty() {
        let all: Vec<String> = problems.iter().map(ToString::to_string).collect();
        return Err(CliError::InvalidSurface(all.join("; ")));
    }
    Ok((doc, s))
}

pub fn verify_homology(text: &str) -> Result<Report, CliError> {
    let (doc, s) = valid_surface(text)?;
    let m = doc.multitwist()?;
    let model = build_model(&s)?;
    let torelli = torelli_violation(&m).is_none();
    let identity = is_identity_action(&model, &m)?;
    let yn = |b: bool| if b { "YES" } else { "NO" };
    let out = format!(
        "torelli {}\nidentity-action {}\n{}\n",
        yn(torelli),
        yn(identity),
        if torelli == identity { "AGREE" } else { "DISAGREE" }
    );
    Ok(Report::verdict(torelli == identity, out))
}

pub fn bounds(text: &str) -> Result<Report, CliError> {
    let (_, s) = valid_surface(text)?;
    let r = check_bounds(&s)?;
    let holds = |b: bool| if b { "HOLDS" } else { "FAILS" };
    let mut out = String::new();
    let _ = writeln!(out, "genus {}", r.genus);
    let _ = writeln!(out, "vertices {}", r.vertices);
    let _ = writeln!(out, "rank {}", r.rank);
    let _ = writeln!(out, "omega {}", r.omega);
    let _ = writeln!(out, "vertex-bound {} slack {}", holds(r.vertex_bound_holds()), r.vertex_slack);
    let _ = match r.omega_slack {
        Some(slack) => writeln!(out, "omega-bound {} slack {slack}", holds(r.omega_bound_holds())),
        None => writeln!(out, "omega-bound SKIPPED genus below 2"),
    };
    Ok(Report::verdict(r.holds(), out))
}

pub fn extremal(g: u64) -> Result<Report, CliError> {
    Ok(Report::ok(write_surface(&gen_extremal(g)?)))
}

pub fn random(g: u64, seed: u64) -> Result<Report, CliError> {
    Ok(Report::ok(write_surface(&gen_random(g, seed)?)))
}

pub fn conjecture_demo() -> Report {
    let c = conjecture_counterexample();
    let mut out = String::new();
    let _ = writeln!(out, "lattice genus {} basis a1 b1 a2 b2", c.lattice.genus());
    for (i, t) in c.transvections.iter().enumerate() {
        let v: Vec<String> = t.vector.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "v{} {} exponent {}", i + 1, v.join(" "), t.exponent);
    }
    let _ = writeln!(out, "product");
    let _ = writeln!(out, "{}", c.matrix);
    let nonzero = c.transvections.iter().all(|t| t.exponent != BigInt::from(0));
    let _ = writeln!(out, "exponents nonzero {}", if nonzero { "YES" } else { "NO" });
    let _ = writeln!(out, "product is identity {}", if c.matrix.is_identity() { "YES" } else { "NO" });
    Report::verdict(nonzero && c.matrix.is_identity(), out)
}
