use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde_json::{json, Value};
use vincular::bijections::{self, BinarySequence, Composition, DyckWord, Subset};
use vincular::enumerate::{
    class2_witness, classify, render_checks, summarize_multi, verify_table, TableKind, Verdict,
};
use vincular::sequences::identify;
use vincular::{
    count_avoiders, counting_sequence, list_avoiders, occurrences, PatternSet, Permutation,
    SetPartition, VincularPattern, MAX_N,
};

use crate::report::Report;
use crate::{BijectionArgs, Cli, Command, MapName, Table, VerifyArgs};

pub struct Outcome {
    pub text: String,
    pub report: Report,
    /// False when a verification failed.
    pub verified: bool,
}

impl Outcome {
    fn ok(text: String, report: Report) -> Self {
        Outcome {
            text,
            report,
            verified: true,
        }
    }
}

fn check_n(cli: &Cli, n: usize) -> Result<()> {
    let bound = cli.max_n_bound.map_or(MAX_N, |b| b.min(MAX_N));
    if n > bound {
        bail!("n = {n} is out of range (maximum {bound})");
    }
    Ok(())
}

fn pattern_set(text: &str) -> Result<PatternSet> {
    text.parse()
        .with_context(|| format!("reading pattern set `{text}`"))
}

fn permutation(text: &str) -> Result<Permutation> {
    text.parse()
        .with_context(|| format!("reading permutation `{text}`"))
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Count {
            pattern,
            perm,
            occurrences: list,
        } => count(pattern, perm, *list),
        Command::Avoiders { patterns, n, list } => {
            check_n(cli, *n)?;
            avoiders(patterns, *n, *list)
        }
        Command::Sequence {
            patterns,
            max_n,
            identify,
        } => {
            check_n(cli, *max_n)?;
            sequence(patterns, *max_n, *identify)
        }
        Command::Classify { k, max_n } => {
            let max_n = max_n.unwrap_or(if *k <= 2 { 9 } else { 8 });
            check_n(cli, max_n)?;
            let report = classify(*k, max_n)?;
            Ok(Outcome::ok(
                report.render_text(),
                Report::new(
                    "classify",
                    json!({ "k": k, "max_n": max_n }),
                    serde_json::to_value(&report)?,
                ),
            ))
        }
        Command::Verify(args) => verify(cli, args),
        Command::Bijection(args) => bijection(args),
        Command::Witness { n } => {
            let w = class2_witness(*n)?;
            Ok(Outcome::ok(
                format!("{w}\n"),
                Report::new("witness", json!({ "n": n }), json!({ "witness": w })),
            ))
        }
    }
}

fn count(pattern: &str, perm: &str, list: bool) -> Result<Outcome> {
    let p: VincularPattern = pattern
        .parse()
        .with_context(|| format!("reading pattern `{pattern}`"))?;
    let host = permutation(perm)?;
    let occ = occurrences(&p, &host);
    let mut text = format!("{}\n", occ.len());
    if list {
        for o in &occ {
            let letters: Vec<String> = o.letters(&host).iter().map(|x| x.to_string()).collect();
            let _ = writeln!(text, "{o}  {}", letters.join(""));
        }
    }
    let listed: Vec<Value> = occ
        .iter()
        .map(|o| json!({ "positions": o.to_string(), "letters": o.letters(&host) }))
        .collect();
    Ok(Outcome::ok(
        text,
        Report::new(
            "count",
            json!({ "pattern": p.as_str(), "perm": host }),
            json!({ "count": occ.len(), "occurrences": listed }),
        ),
    ))
}

fn avoiders(patterns: &str, n: usize, list: bool) -> Result<Outcome> {
    let set = pattern_set(patterns)?;
    let inputs = json!({ "patterns": set.to_string(), "n": n });
    if list {
        let all = list_avoiders(&set, n)?;
        let mut text = String::new();
        for p in &all {
            let _ = writeln!(text, "{p}");
        }
        let result = json!({ "count": all.len(), "avoiders": all });
        Ok(Outcome::ok(text, Report::new("avoiders", inputs, result)))
    } else {
        let c = count_avoiders(&set, n)?;
        Ok(Outcome::ok(
            format!("{c}\n"),
            Report::new("avoiders", inputs, json!({ "count": c })),
        ))
    }
}

fn sequence(patterns: &str, max_n: usize, with_ids: bool) -> Result<Outcome> {
    let set = pattern_set(patterns)?;
    let seq = counting_sequence(&set, max_n)?;
    let mut text = format!("{seq}\n");
    let mut result = json!({ "sequence": seq });
    if with_ids {
        let ids = identify(&seq)?;
        if ids.is_empty() {
            text.push_str("no catalog match\n");
        }
        for id in &ids {
            let _ = writeln!(text, "{id}");
        }
        result["identified_as"] = serde_json::to_value(&ids)?;
    }
    Ok(Outcome::ok(
        text,
        Report::new(
            "sequence",
            json!({ "patterns": set.to_string(), "max_n": max_n }),
            result,
        ),
    ))
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<Outcome> {
    let max_n = args
        .max_n
        .unwrap_or(if args.table == Table::Multi { 8 } else { 9 });
    check_n(cli, max_n)?;
    let inputs = json!({ "table": value_name(args.table), "k": args.k, "max_n": max_n });
    match args.table {
        Table::Singles | Table::Pairs => {
            if args.k.is_some() {
                bail!("--k only applies to --table multi");
            }
            let kind = if args.table == Table::Singles {
                TableKind::Singles
            } else {
                TableKind::Pairs
            };
            let checks = verify_table(kind, max_n)?;
            let failed = checks.iter().filter(|c| c.verdict == Verdict::Fail).count();
            let mut text = render_checks(&checks);
            let _ = writeln!(
                text,
                "{} checks: {} pass, {} fail",
                checks.len(),
                checks.len() - failed,
                failed
            );
            let result =
                json!({ "checks": checks, "passed": checks.len() - failed, "failed": failed });
            Ok(Outcome {
                text,
                report: Report::new("verify", inputs, result),
                verified: failed == 0,
            })
        }
        Table::Multi => {
            let ks: Vec<usize> = match args.k {
                Some(k) if (3..=12).contains(&k) => vec![k],
                Some(k) => bail!("--k {k}: the multi table covers set sizes 3 to 12"),
                None => (3..=12).collect(),
            };
            let mut text = String::new();
            let mut panels = Vec::new();
            let mut verified = true;
            for k in ks {
                let checks = verify_table(TableKind::Multi(k), max_n)?;
                let summary = summarize_multi(k, &checks)?;
                verified &= summary.verdict == Verdict::Pass;
                if !text.is_empty() {
                    text.push('\n');
                }
                text.push_str(&summary.render_text());
                if args.rows {
                    text.push_str(&render_checks(&checks));
                }
                let mut panel = json!({ "summary": summary });
                if args.rows {
                    panel["checks"] = serde_json::to_value(&checks)?;
                }
                panels.push(panel);
            }
            Ok(Outcome {
                text,
                report: Report::new("verify", inputs, json!({ "panels": panels })),
                verified,
            })
        }
    }
}

fn bijection(args: &BijectionArgs) -> Result<Outcome> {
    let name = value_name(args.name);
    let (direction, input, output) = match (&args.perm, &args.inverse) {
        (Some(text), _) => {
            let p = permutation(text)?;
            let out = match args.name {
                MapName::Phi123 => bijections::phi_123(&p)?.to_string(),
                MapName::Phi132 => bijections::phi_132(&p)?.to_string(),
                MapName::Theta => bijections::theta(&p)?.to_string(),
                MapName::PsiDyck => bijections::dyck_of_avoider(&p)?.to_string(),
                MapName::PsiComp => bijections::psi_comp(&p)?.to_string(),
                MapName::Subset => bijections::subset_map(&p)?.to_string(),
                MapName::Binstring => bijections::binstring_map(&p)?.to_string(),
                MapName::Lambda => bijections::lambda_map(&p)?.to_string(),
                MapName::Smp => bijections::smp_map(&p)?.to_string(),
            };
            ("forward", p.to_string(), out)
        }
        (None, Some(text)) => {
            let out = match args.name {
                MapName::Phi123 => bijections::phi_123_inverse(&partition(text)?),
                MapName::Phi132 => bijections::phi_132_inverse(&partition(text)?),
                MapName::Theta => bijections::theta(&permutation(text)?)?,
                MapName::PsiDyck => {
                    bijections::avoider_of_dyck(&parse::<DyckWord>(text, "Dyck word")?)
                }
                MapName::PsiComp => {
                    bijections::psi_comp_inverse(&parse::<Composition>(text, "composition")?)
                }
                MapName::Subset => {
                    let n = args.n.context("--n is required to read a subset back")?;
                    bijections::subset_inverse(&Subset::parse(text, n)?)
                }
                MapName::Binstring => bijections::binstring_inverse(&parse::<BinarySequence>(
                    text,
                    "binary sequence",
                )?),
                MapName::Lambda => bijections::lambda_inverse(&permutation(text)?)?,
                MapName::Smp => bijections::smp_inverse(&partition(text)?)?,
            };
            ("inverse", text.clone(), out.to_string())
        }
        (None, None) => unreachable!("clap requires --perm or --inverse"),
    };
    Ok(Outcome::ok(
        format!("{output}\n"),
        Report::new(
            "bijection",
            json!({ "name": name, "direction": direction, "input": input }),
            json!({ "output": output }),
        ),
    ))
}

fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn partition(text: &str) -> Result<SetPartition> {
    parse(text, "set partition")
}

fn parse<T>(text: &str, what: &str) -> Result<T>
where
    T: std::str::FromStr,
    T::Err: std::error::Error + Send + Sync + 'static,
{
    text.parse()
        .with_context(|| format!("reading {what} `{text}`"))
}
