use std::fmt::Write as _;

use anyhow::Result;
use serde::Serialize;

use cubicmap::numeric;
use cubicmap::{
    gamma_direct, inner_product, moment_table, recurrence_polys, verify_conjecture,
    verify_decomposition, weight_transfer_check, ConjectureReport, IdentityRow, LedgerRow,
    MappingReport, Rat, RecurrenceTable, RouteComparison, RouteRow, TransferReport, WeightChecks,
    WeightId, WeightSpec, QS2,
};

use crate::args::{Format, Table};

/// Grid size for the pointwise weight checks.
pub const WEIGHT_GRID: usize = 10_000;

/// A rendered report and whether every check in it passed.
pub struct Report {
    pub body: String,
    pub pass: bool,
}

/// Floats in reports: 17 significant digits, fixed layout.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn csv_table<I, R>(header: &[&str], rows: I) -> Result<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Serialize)]
struct MomentEntry<'a> {
    k: usize,
    rat: &'a Rat,
    sqrt2: &'a Rat,
}

#[derive(Serialize)]
struct MomentsOut<'a> {
    weight: WeightId,
    count: usize,
    moments: Vec<MomentEntry<'a>>,
}

pub fn moments(weight: WeightId, count: usize, format: Format) -> Result<Report> {
    let table = moment_table(&WeightSpec::of(weight), count)?;
    let entries: Vec<MomentEntry> = table
        .moments()
        .iter()
        .enumerate()
        .map(|(k, m)| MomentEntry {
            k,
            rat: m.rat_part(),
            sqrt2: m.sqrt2_part(),
        })
        .collect();
    let body = match format {
        Format::Json => json(&MomentsOut {
            weight,
            count,
            moments: entries,
        })?,
        Format::Csv => csv_table(
            &["k", "rat", "sqrt2"],
            entries
                .iter()
                .map(|e| [e.k.to_string(), e.rat.to_string(), e.sqrt2.to_string()]),
        )?,
        Format::Plain => {
            let mut s = format!("moments of w_{weight}, k = 0..={}\n", 2 * count);
            for (k, m) in table.moments().iter().enumerate() {
                writeln!(s, "mu_{k} = {m}")?;
            }
            s
        }
    };
    Ok(Report { body, pass: true })
}

#[derive(Serialize)]
struct GammasOut<'a> {
    depth: usize,
    agree: bool,
    routes: &'a [RouteRow],
    ledger: &'a [LedgerRow],
}

fn corrupted_comparison(depth: usize, k: usize) -> Result<(RecurrenceTable, RouteComparison)> {
    let table_q = moment_table(&WeightSpec::q(), depth)?;
    let table_p = moment_table(&WeightSpec::p(), 3 * depth + 2)?;
    let bumped = table_p.get(k)? + &QS2::sqrt2_multiple(Rat::new(1, 1000)?);
    let table_p = table_p.with_moment(k, bumped)?;
    Ok(RouteComparison::from_tables(&table_q, &table_p, depth)?)
}

pub fn gammas(
    depth: usize,
    table: Table,
    corrupt: Option<usize>,
    format: Format,
) -> Result<Report> {
    let (ledger, routes) = match corrupt {
        Some(k) => corrupted_comparison(depth, k)?,
        None => RouteComparison::compute(depth)?,
    };
    let rows = ledger.rows();
    let body = match format {
        Format::Json => json(&GammasOut {
            depth,
            agree: routes.agree,
            routes: &routes.rows,
            ledger: &rows,
        })?,
        Format::Csv => match table {
            Table::Routes => csv_table(
                &["n", "gamma_chain", "gamma_direct", "agree"],
                routes.rows.iter().map(|r| {
                    [
                        r.n.to_string(),
                        r.chain.to_string(),
                        r.direct.to_string(),
                        r.agree.to_string(),
                    ]
                }),
            )?,
            Table::Ledger => csv_table(
                &LedgerRow::CSV_HEADER,
                rows.iter().map(LedgerRow::csv_record),
            )?,
        },
        Format::Plain => {
            let mut s = format!("recurrence coefficients to depth {depth}\n");
            writeln!(s, "{:>4}  {:<28}  {:<28}  agree", "n", "chain", "direct")?;
            for r in &routes.rows {
                writeln!(
                    s,
                    "{:>4}  {:<28}  {:<28}  {}",
                    r.n,
                    r.chain.to_string(),
                    r.direct.to_string(),
                    r.agree
                )?;
            }
            writeln!(s, "\nledger")?;
            for r in &rows {
                writeln!(
                    s,
                    "n = {}: Delta = {}, s = {}, g = {}",
                    r.n, r.delta, r.s, r.g
                )?;
            }
            writeln!(s, "routes agree: {}", pass_word(routes.agree))?;
            s
        }
    };
    Ok(Report {
        body,
        pass: routes.agree,
    })
}

#[derive(Serialize)]
struct ConjectureOut<'a> {
    depth: usize,
    pass: bool,
    routes_agree: bool,
    ledger_pass: bool,
    chain: &'a ConjectureReport,
    direct: &'a ConjectureReport,
}

pub fn verify_conjecture_cmd(depth: usize, format: Format) -> Result<Report> {
    let (ledger, routes) = RouteComparison::compute(depth)?;
    let direct_gamma: Vec<Rat> = std::iter::once(Rat::zero())
        .chain(routes.rows.iter().map(|r| r.direct.clone()))
        .collect();
    let chain = verify_conjecture(ledger.gamma());
    let direct = verify_conjecture(&direct_gamma);
    let ledger_pass = ledger
        .rows()
        .iter()
        .all(|r| r.checks.iter().all(|c| c.pass));
    let pass = chain.pass && direct.pass && routes.agree && ledger_pass;
    let body = match format {
        Format::Json => json(&ConjectureOut {
            depth,
            pass,
            routes_agree: routes.agree,
            ledger_pass,
            chain: &chain,
            direct: &direct,
        })?,
        Format::Csv => csv_table(
            &["route", "check", "n", "pass"],
            [("chain", &chain), ("direct", &direct)]
                .into_iter()
                .flat_map(|(route, rep)| {
                    rep.checks.iter().map(move |c| {
                        [
                            route.to_string(),
                            c.name.clone(),
                            c.n.to_string(),
                            c.pass.to_string(),
                        ]
                    })
                }),
        )?,
        Format::Plain => {
            let mut s = format!(
                "conjecture checks to depth {depth} (gamma up to {})\n",
                3 * depth + 2
            );
            for (route, rep) in [("chain", &chain), ("direct", &direct)] {
                let failed: Vec<String> = rep
                    .failures()
                    .map(|c| format!("{}@{}", c.name, c.n))
                    .collect();
                writeln!(
                    s,
                    "{route}: {} checks, {}",
                    rep.checks.len(),
                    pass_word(rep.pass)
                )?;
                if !failed.is_empty() {
                    writeln!(s, "  failed: {}", failed.join(", "))?;
                }
            }
            writeln!(s, "routes agree: {}", pass_word(routes.agree))?;
            writeln!(s, "ledger checks: {}", pass_word(ledger_pass))?;
            writeln!(s, "overall: {}", pass_word(pass))?;
            s
        }
    };
    Ok(Report { body, pass })
}

fn identity_csv(rows: &[IdentityRow]) -> Result<String> {
    csv_table(
        &["n", "identity", "pass", "first_bad_coeff"],
        rows.iter().map(|r| {
            [
                r.n.to_string(),
                r.identity.as_str().to_string(),
                r.pass.to_string(),
                r.first_bad_coeff.map(|c| c.to_string()).unwrap_or_default(),
            ]
        }),
    )
}

pub fn verify_mapping_cmd(depth: usize, format: Format) -> Result<Report> {
    let ledger = RecurrenceTable::build(depth)?;
    let report: MappingReport = verify_decomposition(ledger.gamma(), depth)?;
    let body = match format {
        Format::Json => json(&report)?,
        Format::Csv => identity_csv(&report.rows)?,
        Format::Plain => {
            let mut s = format!("cubic mapping identities for n = 0..={depth}\n");
            for r in &report.rows {
                write!(
                    s,
                    "n = {:>2}  {:<12}  {}",
                    r.n,
                    r.identity.as_str(),
                    pass_word(r.pass)
                )?;
                match r.first_bad_coeff {
                    Some(c) => writeln!(s, "  (first differing coefficient: x^{c})")?,
                    None => writeln!(s)?,
                }
            }
            writeln!(s, "overall: {}", pass_word(report.pass))?;
            s
        }
    };
    Ok(Report {
        body,
        pass: report.pass,
    })
}

#[derive(Serialize)]
struct OrthoRow {
    m: usize,
    n: usize,
    exact: QS2,
    exact_pass: bool,
    numeric: String,
    expected: String,
    diff: String,
    numeric_pass: bool,
}

#[derive(Serialize)]
struct OrthoOut<'a> {
    depth: usize,
    tol: String,
    pass: bool,
    rows: &'a [OrthoRow],
}

/// Exact and numeric `⟨P_m, P_n⟩` on `w_P` for `0 ≤ m ≤ n ≤ depth`.
pub fn verify_orthogonality_cmd(depth: usize, tol: f64, format: Format) -> Result<Report> {
    let table = moment_table(&WeightSpec::p(), depth)?;
    let gamma = gamma_direct(&table, depth)?;
    let polys = recurrence_polys(&gamma, depth + 1)?;
    let mut norm = table.get(0)?.clone();
    let mut rows = Vec::new();
    for n in 0..=depth {
        if n >= 1 {
            norm = norm.scale(&gamma[n]);
        }
        for m in 0..=n {
            let expect = if m == n { norm.clone() } else { QS2::zero() };
            let exact = inner_product(&polys[m], &polys[n], &table)?;
            let numeric = numeric::orthogonality_residual(m, n, &gamma, tol / 100.0)?.to_f64();
            let expected = expect.to_f64();
            let diff = (numeric - expected).abs();
            rows.push(OrthoRow {
                m,
                n,
                exact_pass: exact == expect,
                exact,
                numeric: fmt_float(numeric),
                expected: fmt_float(expected),
                diff: fmt_float(diff),
                numeric_pass: diff <= tol,
            });
        }
    }
    let pass = rows.iter().all(|r| r.exact_pass && r.numeric_pass);
    let body = match format {
        Format::Json => json(&OrthoOut {
            depth,
            tol: fmt_float(tol),
            pass,
            rows: &rows,
        })?,
        Format::Csv => csv_table(
            &[
                "m",
                "n",
                "exact_rat",
                "exact_sqrt2",
                "exact_pass",
                "numeric",
                "expected",
                "diff",
                "numeric_pass",
            ],
            rows.iter().map(|r| {
                [
                    r.m.to_string(),
                    r.n.to_string(),
                    r.exact.rat_part().to_string(),
                    r.exact.sqrt2_part().to_string(),
                    r.exact_pass.to_string(),
                    r.numeric.clone(),
                    r.expected.clone(),
                    r.diff.clone(),
                    r.numeric_pass.to_string(),
                ]
            }),
        )?,
        Format::Plain => {
            let mut s = format!(
                "orthogonality on w_P for 0 <= m <= n <= {depth}, tol {}\n",
                fmt_float(tol)
            );
            for r in &rows {
                writeln!(
                    s,
                    "({:>2},{:>2})  exact {:<28}  {}  numeric diff {}  {}",
                    r.m,
                    r.n,
                    r.exact.to_string(),
                    pass_word(r.exact_pass),
                    r.diff,
                    pass_word(r.numeric_pass)
                )?;
            }
            writeln!(s, "overall: {}", pass_word(pass))?;
            s
        }
    };
    Ok(Report { body, pass })
}

#[derive(Serialize)]
struct WeightCheckRow {
    check: &'static str,
    value: String,
    pass: bool,
}

#[derive(Serialize)]
struct WeightsOut<'a> {
    tol: String,
    grid: usize,
    pass: bool,
    checks: &'a [WeightCheckRow],
}

pub fn verify_weights_cmd(tol: f64, format: Format) -> Result<Report> {
    let w: WeightChecks = numeric::weight_checks(WEIGHT_GRID)?;
    let transfer: TransferReport = weight_transfer_check(WEIGHT_GRID, tol)?;
    let min_dev = (w.grid_min - 4.0).abs();
    let row = |check, value: f64| WeightCheckRow {
        check,
        value: fmt_float(value),
        pass: value <= tol,
    };
    let checks = vec![
        row("dual_form_max_diff", w.dual_form_max_diff),
        row("triple_angle_max_diff", w.triple_angle_max_diff),
        row("evenness_max_diff", w.evenness_max_diff),
        row("grid_min_minus_4", min_dev),
        row("transfer_max_diff", transfer.max_diff),
    ];
    let pass = checks.iter().all(|c| c.pass) && transfer.pass;
    let body = match format {
        Format::Json => json(&WeightsOut {
            tol: fmt_float(tol),
            grid: WEIGHT_GRID,
            pass,
            checks: &checks,
        })?,
        Format::Csv => csv_table(
            &["check", "value", "pass"],
            checks
                .iter()
                .map(|c| [c.check.to_string(), c.value.clone(), c.pass.to_string()]),
        )?,
        Format::Plain => {
            let mut s = format!(
                "pointwise weight checks on {WEIGHT_GRID}-step grids, tol {}\n",
                fmt_float(tol)
            );
            for c in &checks {
                writeln!(s, "{:<22}  {}  {}", c.check, c.value, pass_word(c.pass))?;
            }
            writeln!(s, "grid minimum at x = {}", fmt_float(w.grid_argmin))?;
            writeln!(s, "overall: {}", pass_word(pass))?;
            s
        }
    };
    Ok(Report { body, pass })
}
