use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use rayon::prelude::*;

use goodsemi::curve::{
    blowup_chain, colon_values, gorenstein_report, theorem26_report, value_semigroup,
    value_semigroup_ideal, DEFAULT_BLOWUP_BUDGET,
};
use goodsemi::io::parse_point;
use goodsemi::{
    canonical_ideal, canonical_ideal_on, classify_tower, decompose, dual,
    enumerate_intermediate_good, is_canonical_ideal, is_self_dual, is_stable, is_symmetric,
    localize, maximal_ideals, render_grid, Box, CurveFile, GoodSemigroup, IdealRep, LatticePoint,
    RenderFormat, SemigroupFile, TowerKind, DEFAULT_TOWER_BUDGET,
};

/// Good semigroups, their ideals, and value semigroups of algebroid curves.
///
/// Predicates exit with 0 (true), 1 (false) or 2 (error). Computations print
/// a semigroup file on stdout.
#[derive(Parser)]
#[command(name = "goodsemi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Window `LO:HI`, e.g. `0,0:9,5`.
    #[arg(long, global = true)]
    window: Option<String>,
    /// Truncation degree for curve computations.
    #[arg(long, global = true)]
    truncation: Option<usize>,
    /// Extra degrees checked beyond the detected conductor.
    #[arg(long, global = true)]
    margin: Option<i64>,
    /// Search budget (tower nodes or blowup steps).
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[arg(long, global = true, default_value = "text")]
    format: RenderFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Check (E0)-(E2); semigroup axioms unless `--ideal`.
    Axioms {
        file: PathBuf,
        #[arg(long)]
        ideal: bool,
    },
    /// Summary of a semigroup or ideal file.
    Info { file: PathBuf },
    /// `K - E` for the canonical ideal `K` (default: the normalized one).
    Dual {
        semigroup: PathBuf,
        ideal: PathBuf,
        #[arg(long)]
        canonical: Option<PathBuf>,
    },
    /// The normalized canonical ideal.
    Canonical { semigroup: PathBuf },
    /// `K = S` for the normalized canonical ideal
    Symmetric { semigroup: PathBuf },
    /// `μ_E + (E - E) = E`.
    Stable { ideal: PathBuf },
    /// `K - E` is a translate of `E`.
    Selfdual {
        semigroup: PathBuf,
        ideal: PathBuf,
        #[arg(long)]
        canonical: Option<PathBuf>,
    },
    /// Normal-form classification of symmetric towers.
    Classify { semigroup: PathBuf },
    /// All good semigroups between the given one and its saturation.
    Tower { semigroup: PathBuf },
    /// `E - F`.
    Diff { e: PathBuf, f: PathBuf },
    /// `E + F`.
    Sum { e: PathBuf, f: PathBuf },
    /// `α + E`.
    Shift {
        e: PathBuf,
        #[arg(allow_hyphen_values = true)]
        alpha: String,
    },
    /// Projection onto branches, 1-based and comma-separated.
    Project { e: PathBuf, branches: String },
    /// `E_M` at the `k`-th maximal ideal (1-based, in `info` order).
    Localize {
        semigroup: PathBuf,
        ideal: PathBuf,
        #[arg(long, default_value_t = 1)]
        maximal: usize,
    },
    /// Split into local components.
    Decompose { semigroup: PathBuf, ideal: PathBuf },
    /// Value semigroup of a curve.
    Values { curve: PathBuf },
    /// Values of a named ideal: `R`, `m`, a name from the file, `I*J`, `m^2`.
    IdealValues { curve: PathBuf, ideal: String },
    /// Values of `num : den`.
    Colon {
        curve: PathBuf,
        num: String,
        den: String,
    },
    /// Values of `I^n : I^n` until stabilization.
    EndoChain {
        curve: PathBuf,
        #[arg(default_value = "m")]
        ideal: String,
    },
    /// Value-level Gorenstein criterion for `I : I`; true when it holds.
    Gorenstein {
        curve: PathBuf,
        #[arg(default_value = "m")]
        ideal: String,
    },
    /// Normal-form conditions for curves; true when all hold.
    Thm26 { curve: PathBuf },
    /// Draw a semigroup file (or a curve's values) on a window.
    Plot {
        file: PathBuf,
        /// Plot a curve ideal instead of the ring.
        #[arg(long)]
        ideal: Option<String>,
    },
}

enum Outcome {
    Printed(String),
    Predicate(bool, String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(Outcome::Printed(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Predicate(value, text)) => {
            print!("{text}");
            ExitCode::from(if value { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("GOODSEMI_THREADS") {
        let n: usize = v
            .parse()
            .with_context(|| format!("GOODSEMI_THREADS={v} is not a number"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    Ok(())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_rep(path: &Path) -> Result<IdealRep> {
    let file =
        SemigroupFile::parse(&read(path)?).with_context(|| format!("in {}", path.display()))?;
    Ok(file.rep)
}

fn load_semigroup(path: &Path) -> Result<GoodSemigroup> {
    GoodSemigroup::new(load_rep(path)?)
        .with_context(|| format!("{} is not a good semigroup", path.display()))
}

fn load_curve(path: &Path, cli: &Cli) -> Result<CurveFile> {
    let mut file =
        CurveFile::parse(&read(path)?).with_context(|| format!("in {}", path.display()))?;
    if let Some(d) = cli.truncation {
        file.curve = file.curve.with_truncation(d);
    }
    if let Some(m) = cli.margin {
        file.curve = file.curve.with_margin(m);
    }
    Ok(file)
}

fn require_good_ideal(rep: &IdealRep, path: &Path) -> Result<()> {
    let report = rep.check_axioms(false);
    if !report.is_good_ideal() {
        bail!("{} is not a good ideal:\n{report}", path.display());
    }
    Ok(())
}

fn canonical_for(s: &GoodSemigroup, path: Option<&PathBuf>) -> Result<IdealRep> {
    match path {
        None => Ok(canonical_ideal(s)),
        Some(p) => {
            let k = load_rep(p)?;
            if !is_canonical_ideal(s, &k) {
                bail!("{} is not a canonical ideal of the semigroup", p.display());
            }
            Ok(k)
        }
    }
}

fn parse_window(text: &str) -> Result<Box> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| anyhow!("window `{text}` must have the form LO:HI"))?;
    let lo = parse_point(lo).map_err(|e| anyhow!("window: {e}"))?;
    let hi = parse_point(hi).map_err(|e| anyhow!("window: {e}"))?;
    Ok(Box::new(lo, hi)?)
}

fn show(rep: IdealRep) -> String {
    SemigroupFile::with_auto_label(rep).print()
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    use Outcome::{Predicate, Printed};
    Ok(match &cli.command {
        Command::Axioms { file, ideal } => {
            let report = load_rep(file)?.check_axioms(!ideal);
            let ok = if *ideal {
                report.is_good_ideal()
            } else {
                report.is_good_semigroup()
            };
            Predicate(ok, format!("{report}\n"))
        }
        Command::Info { file } => Printed(info(&load_rep(file)?)),
        Command::Dual {
            semigroup,
            ideal,
            canonical,
        } => {
            let s = load_semigroup(semigroup)?;
            let e = load_rep(ideal)?;
            require_good_ideal(&e, ideal)?;
            let k = canonical_for(&s, canonical.as_ref())?;
            Printed(show(dual(&s, &k, &e)?))
        }
        Command::Canonical { semigroup } => {
            let s = load_semigroup(semigroup)?;
            let k = match &cli.window {
                Some(w) => canonical_ideal_on(&s, &parse_window(w)?),
                None => canonical_ideal(&s),
            };
            Printed(show(k))
        }
        Command::Symmetric { semigroup } => {
            let s = load_semigroup(semigroup)?;
            let b = is_symmetric(&s);
            Predicate(b, format!("symmetric: {}\n", yes(b)))
        }
        Command::Stable { ideal } => {
            let e = load_rep(ideal)?;
            require_good_ideal(&e, ideal)?;
            let b = is_stable(&e)?;
            Predicate(b, format!("stable: {}\n", yes(b)))
        }
        Command::Selfdual {
            semigroup,
            ideal,
            canonical,
        } => {
            let s = load_semigroup(semigroup)?;
            let e = load_rep(ideal)?;
            require_good_ideal(&e, ideal)?;
            let k = canonical_for(&s, canonical.as_ref())?;
            let b = is_self_dual(&s, &e, &k)?;
            Predicate(b, format!("self-dual: {}\n", yes(b)))
        }
        Command::Classify { semigroup } => {
            let s = load_semigroup(semigroup)?;
            let r = classify_tower(&s)?;
            let mut out = match r.kind {
                TowerKind::NumericalTwoGen(n) => {
                    format!("kind: numerical <2,{}> (n = {n})\n", n + 1)
                }
                TowerKind::TwoBranchDiagonal(n) => format!("kind: two-branch diagonal (n = {n})\n"),
                TowerKind::NotClassified => "kind: not classified\n".to_string(),
            };
            if let Some(f) = r.failed {
                out.push_str(&format!("failed: {f:?}\n"));
            }
            if r.degenerate {
                out.push_str("degenerate: n = 0, the semigroup is N\n");
            }
            Printed(out)
        }
        Command::Tower { semigroup } => {
            let s = load_semigroup(semigroup)?;
            let tower =
                enumerate_intermediate_good(&s, cli.budget.unwrap_or(DEFAULT_TOWER_BUDGET))?;
            let symmetric: Vec<bool> = tower.par_iter().map(is_symmetric).collect();
            let mut out = format!("# {} good semigroups\n", tower.len());
            for (t, sym) in tower.into_iter().zip(symmetric) {
                out.push_str(&format!("\n# symmetric: {}\n", yes(sym)));
                out.push_str(&show(t.into_rep()));
            }
            Printed(out)
        }
        Command::Diff { e, f } => Printed(show(load_rep(e)?.difference(&load_rep(f)?)?)),
        Command::Sum { e, f } => Printed(show(load_rep(e)?.sum(&load_rep(f)?)?)),
        Command::Shift { e, alpha } => {
            let a = parse_point(alpha).map_err(|m| anyhow!("shift: {m}"))?;
            let e = load_rep(e)?;
            if a.branches() != e.branches() {
                bail!(
                    "shift vector has {} coordinates, expected {}",
                    a.branches(),
                    e.branches()
                );
            }
            Printed(show(e.shift(&a)))
        }
        Command::Project { e, branches } => {
            let idx = branches
                .split(',')
                .map(|b| match b.trim().parse::<usize>() {
                    Ok(k) if k >= 1 => Ok(k - 1),
                    _ => Err(anyhow!(
                        "branch index `{}` must be a positive integer",
                        b.trim()
                    )),
                })
                .collect::<Result<Vec<_>>>()?;
            Printed(show(load_rep(e)?.projection(&idx)?))
        }
        Command::Localize {
            semigroup,
            ideal,
            maximal,
        } => {
            let s = load_semigroup(semigroup)?;
            let e = load_rep(ideal)?;
            let max = maximal_ideals(&s);
            let m = maximal
                .checked_sub(1)
                .and_then(|k| max.get(k))
                .ok_or_else(|| {
                    anyhow!(
                        "maximal ideal index {maximal} out of range 1..={}",
                        max.len()
                    )
                })?;
            Printed(show(localize(&s, &e, &m.ideal)?))
        }
        Command::Decompose { semigroup, ideal } => {
            let s = load_semigroup(semigroup)?;
            let e = load_rep(ideal)?;
            let d = decompose(&s, &e)?;
            let mut out = format!("# {} components\n", d.components.len());
            for c in &d.components {
                let names: Vec<String> = c.branches.iter().map(|b| (b + 1).to_string()).collect();
                out.push_str(&format!("\n# branches {}\n", names.join(",")));
                out.push_str(&show(c.local.clone()));
            }
            Printed(out)
        }
        Command::Values { curve } => {
            let c = load_curve(curve, cli)?;
            Printed(show(value_semigroup(&c.curve)?.into_rep()))
        }
        Command::IdealValues { curve, ideal } => {
            let c = load_curve(curve, cli)?;
            let i = c.resolve_ideal(ideal)?;
            Printed(show(value_semigroup_ideal(&c.curve, &i)?))
        }
        Command::Colon { curve, num, den } => {
            let c = load_curve(curve, cli)?;
            let (n, d) = (c.resolve_ideal(num)?, c.resolve_ideal(den)?);
            Printed(show(colon_values(&c.curve, &n, &d)?))
        }
        Command::EndoChain { curve, ideal } => {
            let c = load_curve(curve, cli)?;
            let i = c.resolve_ideal(ideal)?;
            let report = blowup_chain(&c.curve, &i, cli.budget.unwrap_or(DEFAULT_BLOWUP_BUDGET))?;
            let mut out = format!(
                "# {} steps, stable: {}\n",
                report.chain.len(),
                yes(report.stable)
            );
            for (n, g) in report.chain.into_iter().enumerate() {
                out.push_str(&format!("\n# n = {}\n", n + 1));
                out.push_str(&show(g.into_rep()));
            }
            Printed(out)
        }
        Command::Gorenstein { curve, ideal } => {
            let c = load_curve(curve, cli)?;
            let i = c.resolve_ideal(ideal)?;
            let r = gorenstein_report(&c.curve, &i)?;
            if !r.agree() {
                bail!("Gorenstein conditions disagree: {r:?}");
            }
            let text = format!(
                "endomorphisms: {}\nendomorphisms symmetric: {}\nequal to difference and symmetric: {}\nstable and symmetric: {}\n",
                r.endomorphisms,
                yes(r.endomorphisms_symmetric),
                yes(r.equal_and_symmetric),
                yes(r.stable_and_symmetric)
            );
            Predicate(r.endomorphisms_symmetric, text)
        }
        Command::Thm26 { curve } => {
            let c = load_curve(curve, cli)?;
            let r = theorem26_report(&c.curve, cli.budget.unwrap_or(DEFAULT_TOWER_BUDGET))?;
            if !r.agree() {
                bail!(
                    "normal-form conditions disagree: semigroup {}, ring {}, tower {}",
                    r.semigroup_condition,
                    r.ring_condition,
                    r.tower_condition
                );
            }
            let text = format!(
                "values: {}\nendomorphisms: {}\nsemigroup condition: {}\nring condition: {}\ntower condition: {} ({} semigroups)\n",
                r.semigroup,
                r.endomorphisms,
                yes(r.semigroup_condition),
                yes(r.ring_condition),
                yes(r.tower_condition),
                r.tower_size
            );
            Predicate(r.all_hold(), text)
        }
        Command::Plot { file, ideal } => {
            let rep = if file.extension().is_some_and(|e| e == "curve") {
                let c = load_curve(file, cli)?;
                match ideal {
                    Some(name) => value_semigroup_ideal(&c.curve, &c.resolve_ideal(name)?)?,
                    None => value_semigroup(&c.curve)?.into_rep(),
                }
            } else {
                load_rep(file)?
            };
            let window = match &cli.window {
                Some(w) => parse_window(w)?,
                None => default_window(&rep)?,
            };
            if window.branches() != rep.branches() {
                bail!(
                    "window has {} coordinates, expected {}",
                    window.branches(),
                    rep.branches()
                );
            }
            Printed(render_grid(&rep, &window, cli.format))
        }
    })
}

/// `[min(μ, 0), γ + 2]`.
fn default_window(rep: &IdealRep) -> Result<Box> {
    let n = rep.branches();
    let lo = rep.mu().inf(&LatticePoint::zero(n));
    let hi = rep.gamma() + &LatticePoint::constant(n, 2);
    Ok(Box::new(lo, hi)?)
}

fn info(rep: &IdealRep) -> String {
    let mut out = format!(
        "branches: {}\nmu: {}\ngamma: {}\ntau: {}\n",
        rep.branches(),
        rep.mu(),
        rep.gamma(),
        rep.tau()
    );
    let report = rep.check_axioms(true);
    out.push_str(&format!(
        "good ideal: {}\n",
        yes(rep.check_axioms(false).is_good_ideal())
    ));
    out.push_str(&format!(
        "good semigroup: {}\n",
        yes(report.is_good_semigroup())
    ));
    if let Ok(s) = GoodSemigroup::new(rep.clone()) {
        out.push_str(&format!("local: {}\n", yes(s.is_local())));
        if let Some(l) = s.label() {
            out.push_str(&format!("generators: {l}\n"));
        }
        if let Some(g) = s.genus() {
            out.push_str(&format!("genus: {g}\n"));
        }
        out.push_str(&format!("symmetric: {}\n", yes(is_symmetric(&s))));
        for (k, m) in maximal_ideals(&s).iter().enumerate() {
            let support: Vec<String> = m.support().iter().map(|b| (b + 1).to_string()).collect();
            out.push_str(&format!(
                "maximal ideal {}: branches {}\n",
                k + 1,
                support.join(",")
            ));
        }
    }
    out
}
