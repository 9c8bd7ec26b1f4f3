//! Subcommand dispatch and output formatting.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use nilmult::grid::{group_grid, range};
use nilmult::{
    counterexample_suite, ext1, free_product_coprime_cyclic, free_product_n2_all,
    free_rank_witness, hall_basis, hom, nilpotent_multiplier, sweep, tensor, tor1, witt_count,
    CompositionId, Cyclic, Error, FgAbGroup, Functor,
};
use num_bigint::BigUint;
use serde_json::{json, Number, Value};

use crate::expr::{parse_group, GroupExpr, SyntaxError};

#[derive(Debug, Parser)]
#[command(
    name = "nilmult",
    version,
    about = "Nilpotent multipliers of finitely generated abelian groups"
)]
pub struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical form of a group.
    Normalize { expr: String },
    /// The c-nilpotent multiplier of a group or a free product of groups.
    Multiplier {
        /// Nilpotency class, at least 1 (1 gives the Schur multiplier).
        #[arg(short = 'c', long = "class")]
        class: u32,
        expr: String,
    },
    /// Apply a two-argument functor.
    Functor {
        #[arg(value_enum)]
        name: FunctorName,
        a: String,
        b: String,
    },
    /// Number of basic commutators of a given weight.
    Witt {
        #[arg(short = 'n', long = "letters")]
        letters: BigUint,
        #[arg(short = 'w', long = "weight")]
        weight: u32,
    },
    /// List the Hall basis of a given weight.
    Hall {
        #[arg(short = 'n', long = "letters")]
        letters: usize,
        #[arg(short = 'w', long = "weight")]
        weight: usize,
    },
    /// Verify the closed forms and commutation laws.
    Check {
        #[arg(long = "theorem", value_enum)]
        suite: Suite,
        /// Order of the cyclic group (the `n` of `Z_n` for `examples`).
        #[arg(short = 'm')]
        m: Option<BigUint>,
        /// Nilpotency class.
        #[arg(short = 'c', long = "class")]
        class: Option<u32>,
        /// Sweep the full grid of groups, m in 2..=30 and c in 1..=3.
        #[arg(long)]
        grid: bool,
        /// Check at this group instead of the built-in sample.
        #[arg(long = "group")]
        groups: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctorName {
    Tensor,
    Hom,
    Ext1,
    Tor1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Closed forms of the multiplier composed with Ext, Tor and Hom.
    #[value(name = "3.4", alias = "composites")]
    Composites,
    /// Closed forms involving Hom and tensor products.
    #[value(name = "3.6", alias = "hom-tensor")]
    HomAndTensor,
    /// Which functors commute with the multiplier.
    #[value(name = "3.5", alias = "commutation")]
    Commutation,
    /// Fixed non-commuting examples.
    #[value(name = "examples")]
    Examples,
}

impl Suite {
    fn functors(self) -> &'static [Functor] {
        match self {
            Suite::Composites => &[
                Functor::ExtFromCyclic,
                Functor::ExtIntoCyclic,
                Functor::TorWithCyclic,
            ],
            Suite::HomAndTensor => &[
                Functor::HomFromCyclic,
                Functor::HomIntoCyclic,
                Functor::TensorWithCyclic,
            ],
            Suite::Commutation | Suite::Examples => &Functor::ALL,
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum AppError {
    #[error("{0}")]
    Syntax(#[from] SyntaxError),
    #[error("{0}")]
    Core(#[from] Error),
}

impl AppError {
    fn exit_code(&self) -> i32 {
        match self {
            AppError::Syntax(_) => 1,
            AppError::Core(Error::Capacity { .. }) => 2,
            AppError::Core(Error::Verification(_)) => 3,
            AppError::Core(_) => 1,
        }
    }
}

/// Runs one command line (including the program name) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(Output { text, json }) => {
            let written = if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&json).expect("serializable")
                )
            } else {
                write!(out, "{text}")
            };
            if written.is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

struct Output {
    text: String,
    json: Value,
}

impl Output {
    fn group(g: &FgAbGroup) -> Self {
        Output {
            text: format!("{g}\n"),
            json: group_json(g),
        }
    }
}

fn big_number(n: &BigUint) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("decimal digits"))
}

/// `{"free_rank": r, "invariant_factors": [[d, mult], ...]}`, factors in
/// descending order.
pub fn group_json(g: &FgAbGroup) -> Value {
    let factors: Vec<Value> = g
        .torsion()
        .iter()
        .map(|(d, k)| Value::Array(vec![big_number(d), big_number(k)]))
        .collect();
    json!({
        "free_rank": big_number(g.free_rank()),
        "invariant_factors": factors,
    })
}

fn parse_abelian(text: &str) -> Result<FgAbGroup, AppError> {
    let e = parse_group(text)?;
    e.as_direct_sum().ok_or_else(|| {
        Error::Scope(format!(
            "free products are only supported by `multiplier`; got {e}"
        ))
        .into()
    })
}

fn execute(cli: &Cli) -> Result<Output, AppError> {
    match &cli.command {
        Command::Normalize { expr } => Ok(Output::group(&parse_abelian(expr)?)),
        Command::Multiplier { class, expr } => {
            let e = parse_group(expr)?;
            Ok(Output::group(&multiplier(&e, *class)?))
        }
        Command::Functor { name, a, b } => {
            let (a, b) = (parse_abelian(a)?, parse_abelian(b)?);
            let g = match name {
                FunctorName::Tensor => tensor(&a, &b),
                FunctorName::Hom => hom(&a, &b),
                FunctorName::Ext1 => ext1(&a, &b),
                FunctorName::Tor1 => tor1(&a, &b),
            };
            Ok(Output::group(&g))
        }
        Command::Witt { letters, weight } => {
            let count = witt_count(letters.clone(), *weight);
            Ok(Output {
                text: format!("{count}\n"),
                json: json!({
                    "letters": big_number(letters),
                    "weight": weight,
                    "count": big_number(&count),
                }),
            })
        }
        Command::Hall { letters, weight } => {
            let basis = hall_basis(*letters, *weight)?;
            let rendered: Vec<String> = basis.iter().map(ToString::to_string).collect();
            let mut text = String::new();
            for line in &rendered {
                text.push_str(line);
                text.push('\n');
            }
            Ok(Output {
                text,
                json: json!({
                    "letters": letters,
                    "weight": weight,
                    "count": rendered.len(),
                    "basis": rendered,
                }),
            })
        }
        Command::Check {
            suite,
            m,
            class,
            grid,
            groups,
        } => check(*suite, m.as_ref(), *class, *grid, groups),
    }
}

/// Dispatches on the shape of the expression: a single abelian factor uses
/// the closed form, pairwise coprime cyclic factors have a trivial
/// multiplier for every class, and other free products are handled at
/// class 2 only.
fn multiplier(e: &GroupExpr, c: u32) -> Result<FgAbGroup, AppError> {
    if c == 0 {
        return Err(Error::InvalidClass(c).into());
    }
    let factors: Vec<FgAbGroup> = e
        .free_factors()
        .into_iter()
        .filter(|g| !g.is_trivial())
        .collect();
    match factors.as_slice() {
        [] => return Ok(FgAbGroup::trivial()),
        [g] => return Ok(nilpotent_multiplier(g, c)?),
        _ => {}
    }
    let cyclic_orders: Option<Vec<BigUint>> = factors
        .iter()
        .map(|g| match g.cyclic_summands(1) {
            Ok(s) => match s.as_slice() {
                [Cyclic::Finite(d)] => Some(d.clone()),
                _ => None,
            },
            Err(_) => None,
        })
        .collect();
    if let Some(orders) = &cyclic_orders {
        match free_product_coprime_cyclic(orders, c) {
            Ok(g) => return Ok(g),
            Err(Error::NotCoprime(..)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    if c == 2 {
        return Ok(free_product_n2_all(&factors));
    }
    Err(Error::Scope(format!(
        "free products are supported for class 2, or for pairwise coprime finite cyclic factors at any class; got class {c} and {e}"
    ))
    .into())
}

fn sample_groups() -> Vec<FgAbGroup> {
    [
        &[][..],
        &[2],
        &[12],
        &[6, 2],
        &[4, 4],
        &[12, 6, 2],
        &[0],
        &[0, 4],
        &[0, 2],
        &[0, 0],
        &[0, 0, 6, 3],
    ]
    .iter()
    .map(|o: &&[i64]| FgAbGroup::from_cyclic_orders(o.iter().copied()).expect("valid orders"))
    .collect()
}

fn check(
    suite: Suite,
    m: Option<&BigUint>,
    class: Option<u32>,
    grid: bool,
    groups: &[String],
) -> Result<Output, AppError> {
    if suite == Suite::Examples {
        let n = m.cloned().unwrap_or_else(|| BigUint::from(4u32));
        let cs: Vec<u32> = match class {
            Some(c) => vec![c],
            None if grid => vec![1, 2, 3],
            None => vec![1],
        };
        let mut text = String::new();
        let mut rows = Vec::new();
        for c in cs {
            for r in counterexample_suite(&n, c)? {
                text.push_str(&format!(
                    "({}) n={n} c={c}: {} : {} vs {}\n",
                    r.label, r.statement, r.lhs, r.rhs
                ));
                rows.push(json!({
                    "label": r.label.to_string(),
                    "n": big_number(&n),
                    "c": c,
                    "lhs": group_json(&r.lhs),
                    "rhs": group_json(&r.rhs),
                    "isomorphic": r.isomorphic,
                }));
            }
        }
        return Ok(Output {
            text,
            json: json!({ "status": "ok", "examples": rows }),
        });
    }

    let ms = match m {
        Some(m) => vec![m.clone()],
        None if grid => range(2, 30),
        None => vec![BigUint::from(4u32)],
    };
    let cs = match class {
        Some(c) => vec![c],
        None if grid => vec![1, 2, 3],
        None => vec![1],
    };
    let ds = if !groups.is_empty() {
        groups
            .iter()
            .map(|g| parse_abelian(g))
            .collect::<Result<Vec<_>, _>>()?
    } else if grid {
        group_grid(2, 3, 12)
    } else {
        sample_groups()
    };

    let summary = sweep(&ms, &cs, &ds)?;
    let mut text = format!(
        "ok: {} inputs, {} composite evaluations agree with their closed forms\n",
        summary.cases, summary.reports
    );
    let mut witnesses = Vec::new();
    if suite == Suite::Commutation {
        for c in [1, 2] {
            for r in free_rank_witness(c)? {
                text.push_str(&format!(
                    "witness m={} c={c} D={}: {} = {} but {} = {}\n",
                    r.m,
                    r.d,
                    r.id,
                    r.lhs,
                    r.id.partner(),
                    r.partner
                ));
            }
        }
    }
    for f in suite.functors() {
        let ids = [CompositionId::new(*f, true), CompositionId::new(*f, false)];
        let verdict = match summary.witnesses.get(f) {
            Some((wm, wc, wd)) => {
                witnesses.push(json!({
                    "functor": f.to_string(),
                    "m": big_number(wm),
                    "c": wc,
                    "group": group_json(wd),
                }));
                format!("first differs at m={wm} c={wc} D={wd}")
            }
            None => "commutes on every input".to_string(),
        };
        text.push_str(&format!("{} vs {}: {verdict}\n", ids[0], ids[1]));
    }
    Ok(Output {
        text,
        json: json!({
            "status": "ok",
            "cases": summary.cases,
            "reports": summary.reports,
            "non_commuting": witnesses,
        }),
    })
}
