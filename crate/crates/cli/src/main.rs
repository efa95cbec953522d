use std::io::{BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};

use kpromo::analysis::{
    csp_check_sizes, homometry_check, homomesy_check, q_hook_polynomial, CspReport, IntPolynomial, LabelOf,
    LabelSum, MinimallyLabeled, Statistic,
};
use kpromo::dynamics::{k_orbits, orbit_decomposition, OrbitDecomposition};
use kpromo::io::{load_polynomial, load_poset, DecompositionSummary};
use kpromo::verify::{self, MRange, Report, Table, TableFamily};
use kpromo::{Exec, Operator, PackedLabeling, PackedLabelings, Poset};

#[derive(Parser, Debug)]
#[command(name = "kpromo", version, about = "K-promotion on m-packed labelings of finite posets")]
struct Cli {
    /// Worker threads; 1 runs sequentially, 0 uses every core.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream the m-packed labelings in lexicographic order.
    Enumerate {
        poset: String,
        m: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Orbit decomposition of an operator.
    Orbits {
        poset: String,
        m: usize,
        #[arg(long, default_value = "kpromotion")]
        operator: Operator,
    },
    /// Order of an operator (lcm of its orbit sizes).
    Order {
        poset: String,
        m: usize,
        #[arg(conflicts_with = "operator")]
        op: Option<Operator>,
        #[arg(long)]
        operator: Option<Operator>,
    },
    /// Run one theorem check; exit status 1 if any clause fails.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        params: Vec<String>,
    },
    /// Orbit sizes and orders over a range, compared with published data.
    Table {
        family: TableFamily,
        /// `a..b` (inclusive) or a single value.
        n_range: String,
        /// `all`, `a..b` (inclusive) or a single value.
        #[arg(default_value = "all")]
        m_range: String,
    },
    /// Cyclic sieving check of an operator against a polynomial.
    Csp {
        poset: String,
        m: usize,
        /// `hook` for the q-hook polynomial, otherwise a JSON coefficient file.
        #[arg(long, default_value = "hook")]
        polynomial: String,
        #[arg(long, default_value = "kpromotion")]
        operator: Operator,
    },
    /// Homomesy or homometry of a statistic under K-promotion.
    Stats {
        poset: String,
        m: usize,
        /// `minimal`, `sum`, or `label:E` for the label of element E.
        #[arg(long, default_value = "minimal")]
        statistic: String,
        #[arg(long, value_enum, default_value_t = StatCheck::Homomesy)]
        check: StatCheck,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Existence,
    Trunk,
    BranchDivisibility,
    BoundedUnion,
    Equivariance,
    StarOrder,
    StarUniform,
    CombMax,
    CombMin,
    ZipperMin,
    ThreeLeaf,
    /// Every structural check over its standard range.
    Suite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StatCheck {
    Homomesy,
    Homometry,
}

/// Problems with the request itself; exit status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(Usage(msg.into()))
}

fn poset(spec: &str) -> Result<Poset> {
    load_poset(spec).map_err(|e| usage(format!("cannot load poset {spec:?}: {e}")))
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| usage(format!("bad range {s:?}")));
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let v = num(s)?;
            v..=v
        }
    };
    if r.is_empty() {
        return Err(usage(format!("empty range {s:?}")));
    }
    Ok(r)
}

fn emit(out: &mut impl Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn reports_tsv(reports: &[Report]) -> String {
    let mut s = String::from("check\tsubject\tclause\tstatus\tdetail\n");
    for r in reports {
        for c in &r.clauses {
            s.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", r.check, r.subject, c.name, c.status.label(), c.detail));
        }
    }
    s
}

fn exec_for(threads: usize) -> Exec {
    if threads == 1 {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = exec_for(cli.threads);
    let result = kpromo::par::with_threads(cli.threads, || {
        let stdout = std::io::stdout();
        let mut out = BufWriter::new(stdout.lock());
        let ok = run(&cli, exec, &mut out)?;
        out.flush()?;
        Ok::<_, anyhow::Error>(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() || e.downcast_ref::<kpromo::Error>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

/// `Ok(false)` means a check ran and failed.
fn run(cli: &Cli, exec: Exec, out: &mut impl Write) -> Result<bool> {
    let format = cli.format;
    match &cli.command {
        Command::Enumerate { poset: spec, m, limit } => {
            let p = poset(spec)?;
            let it = PackedLabelings::new(&p, *m).take(limit.unwrap_or(usize::MAX));
            if format == Format::Tsv {
                let header: Vec<String> = (0..p.len()).map(|x| x.to_string()).collect();
                writeln!(out, "{}", header.join("\t"))?;
            }
            for l in it {
                let labels = l.labels();
                let line = match format {
                    Format::Json => serde_json::to_string(labels)?,
                    Format::Tsv => labels.iter().map(ToString::to_string).collect::<Vec<_>>().join("\t"),
                    Format::Pretty => format!("{labels:?}"),
                };
                writeln!(out, "{line}")?;
            }
            Ok(true)
        }
        Command::Orbits { poset: spec, m, operator } => {
            let p = poset(spec)?;
            let d = orbit_decomposition(&p, *m, *operator, exec)?;
            let summary = DecompositionSummary::new(spec.as_str(), *m, *operator, &d);
            let text = match format {
                Format::Json => summary.to_json(),
                Format::Tsv => summary.to_tsv(),
                Format::Pretty => summary.to_pretty(),
            };
            emit(out, &text)?;
            Ok(true)
        }
        Command::Order { poset: spec, m, op, operator } => {
            let p = poset(spec)?;
            let op = op.or(*operator).unwrap_or(Operator::Kpromotion);
            let order = kpromo::dynamics::order_of(&p, *m, op, exec)?;
            let text = match format {
                Format::Json => json(&serde_json::json!({
                    "poset": spec, "m": m, "operator": op, "order": order.to_string()
                })),
                Format::Tsv | Format::Pretty => order.to_string(),
            };
            emit(out, &text)?;
            Ok(true)
        }
        Command::Verify { theorem, params } => {
            let reports = run_verify(*theorem, params, exec)?;
            let text = match format {
                Format::Json if reports.len() == 1 => json(&reports[0]),
                Format::Json => json(&reports),
                Format::Tsv => reports_tsv(&reports),
                Format::Pretty => reports.iter().map(ToString::to_string).collect(),
            };
            emit(out, &text)?;
            Ok(reports.iter().all(Report::passed))
        }
        Command::Table { family, n_range, m_range } => {
            let ns = parse_range(n_range)?;
            let ms = if m_range == "all" {
                MRange::All
            } else {
                MRange::Range(parse_range(m_range)?)
            };
            let table: Table = verify::reproduce_table(*family, ns, &ms, exec)?;
            let text = match format {
                Format::Json => json(&table),
                Format::Tsv => table.to_tsv(),
                Format::Pretty => table.to_string(),
            };
            emit(out, &text)?;
            Ok(table.passed())
        }
        Command::Csp { poset: spec, m, polynomial, operator } => {
            let p = poset(spec)?;
            let f: IntPolynomial = if polynomial == "hook" {
                q_hook_polynomial(&p)?
            } else {
                load_polynomial(Path::new(polynomial))
                    .map_err(|e| usage(format!("cannot read polynomial {polynomial:?}: {e}")))?
            };
            let d = orbit_decomposition(&p, *m, *operator, exec)?;
            let report: CspReport = csp_check_sizes(&d.orbit_sizes(), &f)?;
            let text = match format {
                Format::Json => json(&report),
                Format::Tsv => report.to_tsv(),
                Format::Pretty => format!(
                    "f(q) = {f}\norder {}, {} states: CSP {}\n{}",
                    report.order,
                    report.state_count,
                    if report.holds() { "holds" } else { "fails" },
                    report.to_tsv()
                ),
            };
            emit(out, &text)?;
            Ok(report.holds())
        }
        Command::Stats { poset: spec, m, statistic, check } => {
            let p = poset(spec)?;
            let st = parse_statistic(&p, statistic)?;
            let d: OrbitDecomposition<PackedLabeling> = k_orbits(&p, *m, exec)?;
            let (value, ok, verdict) = match check {
                StatCheck::Homomesy => {
                    let r = homomesy_check(&d, st.as_ref());
                    let verdict = match &r.constant {
                        Some(c) => format!("homomesic with average {c}"),
                        None => "not homomesic".into(),
                    };
                    (serde_json::to_value(&r)?, r.is_homomesic(), verdict)
                }
                StatCheck::Homometry => {
                    let r = homometry_check(&d, st.as_ref());
                    let verdict = if r.is_homometric() {
                        "homometric".to_string()
                    } else {
                        format!("not homometric; conflicting sizes {:?}", r.conflicting_sizes)
                    };
                    (serde_json::to_value(&r)?, r.is_homometric(), verdict)
                }
            };
            let text = match format {
                Format::Json => json(&value),
                Format::Tsv | Format::Pretty => {
                    let mut s = String::from("size\tsum\taverage\n");
                    for o in value["orbits"].as_array().into_iter().flatten() {
                        s.push_str(&format!(
                            "{}\t{}\t{}\n",
                            o["size"],
                            o["sum"].as_str().unwrap_or(""),
                            o["average"].as_str().unwrap_or("")
                        ));
                    }
                    if format == Format::Pretty {
                        s = format!("{verdict}\n{s}");
                    }
                    s
                }
            };
            emit(out, &text)?;
            Ok(ok)
        }
    }
}

fn parse_statistic(p: &Poset, spec: &str) -> Result<Box<dyn Statistic<PackedLabeling>>> {
    Ok(match spec {
        "minimal" => Box::new(MinimallyLabeled::new(p)?),
        "sum" => Box::new(LabelSum),
        _ => match spec.strip_prefix("label:") {
            Some(e) => {
                let e: usize = e.parse().map_err(|_| usage(format!("bad element in {spec:?}")))?;
                if e >= p.len() {
                    return Err(usage(format!("element {e} out of range")));
                }
                Box::new(LabelOf(e))
            }
            None => bail!(Usage(format!("unknown statistic {spec:?} (minimal, sum, label:E)"))),
        },
    })
}

fn param<'a>(params: &'a [String], i: usize, what: &str) -> Result<&'a str> {
    params
        .get(i)
        .map(String::as_str)
        .ok_or_else(|| usage(format!("missing parameter <{what}>")))
}

fn num(params: &[String], i: usize, what: &str) -> Result<usize> {
    let s = param(params, i, what)?;
    s.parse().map_err(|_| usage(format!("<{what}> must be a nonnegative integer, got {s:?}")))
}

fn run_verify(theorem: Theorem, params: &[String], exec: Exec) -> Result<Vec<Report>> {
    let arity = match theorem {
        Theorem::Suite => 0,
        Theorem::BranchDivisibility | Theorem::BoundedUnion | Theorem::StarOrder | Theorem::StarUniform => 2,
        _ => 1,
    };
    if params.len() != arity {
        bail!(Usage(format!(
            "{} takes {arity} parameter(s), got {}",
            theorem.to_possible_value().expect("no skipped variants").get_name(),
            params.len()
        )));
    }
    let named = |mut r: Report, name: &str| {
        r.subject = format!("{name}: {}", r.subject);
        r
    };
    let r = match theorem {
        Theorem::Suite => return Ok(verify::theorem_suite(exec)?),
        Theorem::Existence => named(verify::check_existence(&poset(&params[0])?)?, &params[0]),
        Theorem::Trunk => named(verify::check_trunk(&poset(&params[0])?, exec)?, &params[0]),
        Theorem::Equivariance => named(verify::check_equivariance(&poset(&params[0])?, exec)?, &params[0]),
        Theorem::BranchDivisibility => {
            let p = poset(&params[0])?;
            named(verify::check_branch_divisibility(&p, num(params, 1, "m")?, exec)?, &params[0])
        }
        Theorem::BoundedUnion => {
            let (p, q) = (poset(&params[0])?, poset(&params[1])?);
            verify::check_bounded_union(&p, &q, exec)?
        }
        Theorem::StarOrder => {
            let b = params[0]
                .split(',')
                .map(|t| t.parse::<usize>().map_err(|_| usage(format!("bad branch list {:?}", params[0]))))
                .collect::<Result<Vec<_>>>()?;
            verify::check_star_order(&b, num(params, 1, "m")?, exec)?
        }
        Theorem::StarUniform => {
            let (b, k) = (num(params, 0, "b")?, num(params, 1, "k")?);
            if b == 0 || k == 0 {
                bail!(Usage("b and k must be positive".into()));
            }
            verify::check_star_uniform(b, k, exec)?
        }
        Theorem::CombMax => verify::check_comb_max(num(params, 0, "n")?, exec)?,
        Theorem::CombMin => verify::check_comb_min(num(params, 0, "n")?, exec)?,
        Theorem::ZipperMin => verify::check_zipper_min(num(params, 0, "n")?, exec)?,
        Theorem::ThreeLeaf => verify::check_three_leaf(num(params, 0, "c")?, exec)?,
    };
    Ok(vec![r])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..6").unwrap(), 3..=6);
        assert_eq!(parse_range("3..=6").unwrap(), 3..=6);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("6..3").is_err());
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
