use std::fmt::Write as _;
use std::fs;
use std::io::{self as stdio, Read, Write};
use std::path::Path;

use anyhow::{Context, Result};
use laver::braid::{rewrite_check_many, ColoringBudget};
use laver::cocycles::{cocycle_space, const_prime};
use laver::complex::ComplexCaps;
use laver::identities::SweepBudget;
use laver::io;
use laver::poset::POSET_MAX_N;
use laver::*;

use crate::args::{Cli, CochainFormat, Command, Family2Arg, Family3Arg, TableFormat, VerifySuite};

/// Whether every check a command ran passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

/// A request the command line cannot satisfy; reported with exit status 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

struct Env {
    max_n: u32,
    cache_dir: Option<std::path::PathBuf>,
}

impl Env {
    fn table(&self, n: u32) -> Result<LaverTable> {
        let t = match &self.cache_dir {
            Some(dir) => io::load_or_build(n, self.max_n, dir)?,
            None => LaverTable::build_capped(n, self.max_n)?,
        };
        Ok(t)
    }
}

fn emit(path: &Path, bytes: &[u8]) -> Result<()> {
    if path == Path::new("-") {
        let mut out = stdio::stdout().lock();
        out.write_all(bytes)?;
        out.flush()?;
    } else {
        fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        stdio::stdin().lock().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn need(value: Option<u32>, flag: &str) -> Result<u32> {
    value.ok_or_else(|| usage(format!("this family needs --{flag}")))
}

fn cochain_text(phi: &Cochain) -> String {
    let size = 1u32 << phi.n();
    let mut out = String::new();
    match phi.arity() {
        2 => {
            for x in 1..=size {
                let row: Vec<String> = (1..=size).map(|y| format!("{:>2}", phi.at(&[x, y]))).collect();
                let _ = writeln!(out, "{x:>3} | {}", row.join(" "));
            }
        }
        _ => {
            for (i, v) in phi.values().iter().enumerate() {
                if *v != 0 {
                    let _ = writeln!(out, "{:?} {v}", phi.tuple_at(i));
                }
            }
            if out.is_empty() {
                out.push_str("zero\n");
            }
        }
    }
    out
}

fn print_cochain(phi: &Cochain, format: CochainFormat) -> Result<()> {
    let text = match format {
        CochainFormat::Text => cochain_text(phi),
        CochainFormat::Json => io::cochain_json(phi) + "\n",
        CochainFormat::Csv => io::cochain_csv(phi)?,
    };
    emit(Path::new("-"), text.as_bytes())
}

fn cocycle_verdict(t: &LaverTable, phi: &Cochain) -> Result<Outcome> {
    Ok(match cocycle_defect(t, phi)? {
        None => {
            eprintln!("cocycle: yes");
            Outcome::Pass
        }
        Some((tuple, value)) => {
            eprintln!("cocycle: no, δφ{tuple:?} = {value}");
            Outcome::Fail
        }
    })
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let env = Env {
        max_n: cli.max_n.min(HARD_MAX_N),
        cache_dir: cli.cache_dir,
    };
    match cli.command {
        Command::Table {
            table,
            format,
            descending,
            output,
        } => {
            let t = env.table(table.n)?;
            let bytes = match format {
                TableFormat::Text => io::table_text(&t, descending).into_bytes(),
                TableFormat::Json => (io::table_json(&t) + "\n").into_bytes(),
                TableFormat::Binary => io::encode_table(&t),
            };
            emit(&output, &bytes)?;
        }
        Command::Eval { table, p, q } => {
            println!("{}", env.table(table.n)?.apply(p, q)?);
        }
        Command::Period { table, p, from_cocycle } => {
            let t = env.table(table.n)?;
            match (p, from_cocycle) {
                (Some(p), false) => println!("{}", t.period(p)?),
                (Some(p), true) => println!("{}", period_from_cocycle(&t, p)?),
                (None, false) => print_list(&t.periods()),
                (None, true) => print_list(&periods_from_cocycle(&t)?),
            }
        }
        Command::Threshold { table, p, from_cocycle } => {
            let t = env.table(table.n)?;
            match (p, from_cocycle) {
                (Some(p), false) => println!("{}", t.threshold(p)?),
                (Some(p), true) => println!("{}", threshold_from_cocycle(&t, p)?),
                (None, false) => print_list(t.thresholds()),
                (None, true) => print_list(&thresholds_from_cocycle(&t)?),
            }
        }
        Command::Comp { table, p, q } => {
            let t = env.table(table.n)?;
            match (p, q) {
                (Some(p), Some(q)) => println!("{}", t.compose(p, q)?),
                (None, None) => {
                    for p in 1..=t.size() {
                        let row: Vec<u32> = (1..=t.size()).map(|q| t.compose_unchecked(p, q)).collect();
                        print_list(&row);
                    }
                }
                _ => return Err(usage("comp takes both p and q, or neither")),
            }
        }
        Command::Poset { table, dot, bounds } => {
            let t = env.table(table.n)?;
            let poset = DivisibilityPoset::new(&t)?;
            if let Some(path) = dot {
                emit(&path, io::poset_dot(&poset).as_bytes())?;
                return Ok(Outcome::Pass);
            }
            if let Some(pair) = bounds {
                let (a, b) = (pair[0], pair[1]);
                println!("lub({a},{b}) = {}", show(poset.lub(a, b)?));
                println!("glb({a},{b}) = {}", show(poset.glb(a, b)?));
                return Ok(Outcome::Pass);
            }
            for (a, b) in poset.covers() {
                println!("{a} -> {b}");
            }
            let v = poset.is_lattice();
            match v.witness {
                None => println!("lattice: yes"),
                Some((a, b)) => println!(
                    "lattice: no, {} pairs without lub or glb, first ({a},{b})",
                    v.failing_pairs.len()
                ),
            }
        }
        Command::Cocycle2 {
            table,
            family,
            q,
            format,
            check,
        } => {
            let t = env.table(table.n)?;
            let phi = match family {
                Family2Arg::Phi => phi2(&t, need(q, "q")?)?,
                Family2Arg::Psi => psi2(&t, need(q, "q")?)?,
                Family2Arg::Theta => theta(&t)?,
                Family2Arg::Const => const_cochain(t.n(), 2, 1)?,
                Family2Arg::ConstPrime => const_prime(&t)?,
            };
            print_cochain(&phi, format)?;
            if check {
                return cocycle_verdict(&t, &phi);
            }
        }
        Command::Cocycle3 {
            table,
            family,
            p,
            q,
            format,
            check,
        } => {
            let t = env.table(table.n)?;
            let phi = match family {
                Family3Arg::Phi => phi3(&t, need(p, "p")?, need(q, "q")?)?,
                Family3Arg::PhiPrime => phi3_prime(&t, need(p, "p")?, need(q, "q")?)?,
                Family3Arg::Const => const_cochain(t.n(), 3, 1)?,
            };
            print_cochain(&phi, format)?;
            if check {
                return cocycle_verdict(&t, &phi);
            }
        }
        Command::Decompose {
            table,
            input,
            psi,
            json,
        } => {
            let t = env.table(table.n)?;
            let phi = match (input, psi) {
                (Some(path), _) => io::parse_cochain_json(&read_input(&path)?)?,
                (None, Some(q)) => psi2(&t, q)?,
                (None, None) => return Err(usage("decompose needs --input or --psi")),
            };
            let d = match decompose2(&t, &phi) {
                Ok(d) => d,
                Err(LaverError::Contract(msg)) => {
                    eprintln!("{msg}");
                    return Ok(Outcome::Fail);
                }
                Err(e) => return Err(e.into()),
            };
            if json {
                println!("{}", serde_json::to_string(&d)?);
            } else {
                for (i, l) in d.lambdas.iter().enumerate().filter(|(_, l)| **l != 0) {
                    println!("φ_{} {l}", i + 1);
                }
                println!("const {}", d.constant);
            }
        }
        Command::Cohomology { table, k, json } => {
            let t = env.table(table.n)?;
            let h = cohomology(&t, k)?;
            if json {
                let torsion: Vec<String> = h.torsion.iter().map(ToString::to_string).collect();
                let doc = serde_json::json!({"n": t.n(), "k": k, "free_rank": h.free_rank, "torsion": torsion});
                println!("{doc}");
            } else {
                println!("H^{k}(A_{}) = {h}", t.n());
            }
        }
        Command::Verify {
            table,
            suite,
            json,
            seed,
        } => {
            let t = env.table(table.n)?;
            return verify(&t, suite, json, seed);
        }
        Command::Braid {
            table,
            strands,
            word,
            colors,
            psi,
            phi,
            phi3: phi3_pq,
            cocycle,
            top,
            rewrites,
            seed,
            trace,
        } => {
            let t = env.table(table.n)?;
            let w = parse_word(&word, strands)?;
            let colors = colors.unwrap_or_else(|| vec![1; strands]);
            let weight = match (psi, phi, phi3_pq, cocycle) {
                (Some(q), ..) => Some(psi2(&t, q)?),
                (_, Some(q), ..) => Some(phi2(&t, q)?),
                (_, _, Some(pq), _) => Some(laver::phi3(&t, pq[0], pq[1])?),
                (_, _, _, Some(path)) => Some(io::parse_cochain_json(&read_input(&path)?)?),
                _ => None,
            };
            let d = top.unwrap_or(t.size());
            let shadow = weight.as_ref().is_some_and(|c| c.arity() == 3);
            let tr = if shadow {
                color_propagate_shadow(&t, &w, &colors, d)?
            } else {
                color_propagate(&t, &w, &colors)?
            };
            if let Some(path) = trace {
                emit(&path, (serde_json::to_string(&tr)? + "\n").as_bytes())?;
            }
            println!("final {}", join(&tr.final_colors));
            let Some(weight) = weight else {
                return Ok(Outcome::Pass);
            };
            let value = match weight.arity() {
                2 => invariant2(&t, &w, &colors, &weight),
                3 => invariant3(&t, &w, &colors, d, &weight),
                k => return Err(usage(format!("braid invariants use 2- or 3-cocycles, got arity {k}"))),
            };
            match value {
                Ok(v) => println!("invariant {v}"),
                Err(LaverError::Contract(msg)) => {
                    eprintln!("{msg}");
                    return Ok(Outcome::Fail);
                }
                Err(e) => return Err(e.into()),
            }
            if rewrites {
                let mode = if shadow { Mode::Shadow } else { Mode::Arc };
                let budget = ColoringBudget {
                    seed,
                    ..ColoringBudget::default()
                };
                let r = rewrite_check_many(&t, &w, mode, std::slice::from_ref(&weight), &budget)?;
                println!("{r}");
                if !r.passed() {
                    return Ok(Outcome::Fail);
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

fn show(v: Option<u32>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

fn join(values: &[u32]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn print_list(values: &[u32]) {
    println!("{}", join(values));
}

type Check<'a> = Box<dyn FnOnce() -> laver::Result<CheckReport> + 'a>;

fn verify(t: &LaverTable, suite: VerifySuite, json: bool, seed: u64) -> Result<Outcome> {
    use VerifySuite as V;
    let wants = |s: VerifySuite| suite == V::All || suite == s;
    let mut checks: Vec<(String, Check)> = Vec::new();

    if wants(V::Ld) {
        let budget = SweepBudget {
            seed,
            ..SweepBudget::default()
        };
        checks.push((
            "ld".into(),
            Box::new(move || Ok(check_selfdistributivity_with(t, &budget))),
        ));
    }
    let single = match suite {
        V::LastColumn => Some(Suite::LastColumn),
        V::Monotone => Some(Suite::Monotone),
        V::PlusOne => Some(Suite::PlusOne),
        V::LastRows => Some(Suite::LastRows),
        V::Parity => Some(Suite::Parity),
        V::Valuation => Some(Suite::Valuation),
        V::Monoid => Some(Suite::Monoid),
        _ => None,
    };
    let identity_suites: Vec<Suite> = match single {
        Some(s) => vec![s],
        None if wants(V::Identities) => Suite::INDIVIDUAL.to_vec(),
        None => Vec::new(),
    };
    for s in identity_suites {
        checks.push((s.name().into(), Box::new(move || Ok(check_identities(t, s)))));
    }
    if wants(V::Poset) {
        checks.push(("order-axioms".into(), Box::new(|| check_order_axioms(t))));
        checks.push(("structure".into(), Box::new(|| check_structure(t))));
        checks.push(("beforesym".into(), Box::new(|| Ok(beforesym_demo(t)))));
        let n = t.n();
        if n <= POSET_MAX_N {
            let rmax = (1u32 << n).min(8);
            checks.push((
                "occurrences".into(),
                Box::new(move || {
                    (1..rmax).try_fold(CheckReport::new("occurrences"), |acc, r| {
                        Ok(acc.merge(occurrence_check(n, r)?))
                    })
                }),
            ));
        }
    }
    if wants(V::Cocycles) {
        checks.push(("cocycle-families".into(), Box::new(|| check_families(t))));
        for k in [2, 3] {
            checks.push((
                format!("cocycle-space-k{k}"),
                Box::new(move || Ok(cocycle_space(t, k)?.to_check_report())),
            ));
        }
        checks.push(("z2-properties".into(), Box::new(|| check_z2_properties(t))));
        checks.push(("z3-properties".into(), Box::new(|| check_z3_properties(t))));
        if suite == V::Cocycles || t.n() == 1 {
            checks.push(("no-01-basis".into(), Box::new(not_zero_one_check)));
        }
    }
    if wants(V::Complex) {
        for k in [2, 3] {
            checks.push((format!("bicomplex-k{k}"), Box::new(move || bicomplex_check(t, k))));
        }
    }
    if wants(V::Braid) {
        checks.push(("braid-rewrites".into(), Box::new(move || braid_suite(t, seed))));
    }

    let mut outcome = Outcome::Pass;
    for (name, check) in checks {
        match check() {
            Ok(report) => {
                if json {
                    println!("{}", serde_json::to_string(&report)?);
                } else {
                    println!("{report}");
                }
                if !report.passed() {
                    outcome = Outcome::Fail;
                }
            }
            Err(LaverError::SizeLimit { what, requested, cap }) => {
                println!("SKIP {name}: {what} needs n ≤ {cap}, have {requested}");
            }
            Err(e) => return Err(anyhow::Error::new(e).context(format!("running {name}"))),
        }
    }
    Ok(outcome)
}

fn braid_suite(t: &LaverTable, seed: u64) -> laver::Result<CheckReport> {
    let caps = ComplexCaps::default();
    caps.check_exhaustive(t.n(), 3)?;
    let budget = ColoringBudget {
        seed,
        max_exhaustive_bits: 12,
        sample: 512,
    };
    let b2 = basis2(t, Family2::Psi)?;
    let b3 = basis3(t)?;
    let mut report = CheckReport::new("braid-rewrites");
    for word in ["1 2 1", "2 1 2 3 2", "1 3 2 1 3 2"] {
        let w = parse_word(word, 4)?;
        report = report
            .merge(rewrite_check_many(t, &w, Mode::Arc, &b2, &budget)?)
            .merge(rewrite_check_many(t, &w, Mode::Shadow, &b3, &budget)?);
    }
    Ok(report)
}
