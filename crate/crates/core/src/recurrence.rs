//! Hankel determinants, the chain sequence `16·s_n`, and the two routes to the
//! recurrence coefficients `γ_n`.
//!
//! Route one works on `w_Q`: `s_n = Δ_nΔ_{n−2}/Δ_{n−1}²`, then the minimal
//! parameters `g₀ = 0`, `g_n = 16s_n/(1 − g_{n−1})`, then
//! `γ_{3n} = g_n/2`, `γ_{3n+1} = (1 − g_n)/2`, `γ_{3n+2} = ¼`.
//! Route two applies the same determinant ratio directly to the `w_P`
//! moments. The routes share no code past the determinant kernel.

use rayon::prelude::*;
use rug::ops::Pow;
use rug::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::moments::{moment_table, MomentTable, WeightSpec};
use crate::qfield::{Rat, QS2};

/// Element `a + b√2` of Z[√2], the working ring of the elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ZS2 {
    a: Integer,
    b: Integer,
}

impl ZS2 {
    fn zero() -> Self {
        ZS2 {
            a: Integer::new(),
            b: Integer::new(),
        }
    }

    fn one() -> Self {
        ZS2 {
            a: Integer::from(1),
            b: Integer::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn mul(&self, rhs: &ZS2) -> ZS2 {
        let ac = Integer::from(&self.a * &rhs.a);
        let bd = Integer::from(&self.b * &rhs.b);
        let ad = Integer::from(&self.a * &rhs.b);
        let bc = Integer::from(&self.b * &rhs.a);
        ZS2 {
            a: ac + (bd << 1u32),
            b: ad + bc,
        }
    }

    fn sub_assign(&mut self, rhs: &ZS2) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }

    /// Exact quotient; the caller guarantees divisibility in Z[√2].
    fn div_exact(&self, d: &ZS2) -> ZS2 {
        if d.b == 0 {
            return ZS2 {
                a: Integer::from(self.a.div_exact_ref(&d.a)),
                b: Integer::from(self.b.div_exact_ref(&d.a)),
            };
        }
        // (a + b√2)(c − d√2) / (c² − 2d²)
        let norm = Integer::from(d.a.square_ref()) - (Integer::from(d.b.square_ref()) << 1u32);
        let conj = ZS2 {
            a: d.a.clone(),
            b: Integer::from(-&d.b),
        };
        let num = self.mul(&conj);
        debug_assert!(num.a.is_divisible(&norm) && num.b.is_divisible(&norm));
        ZS2 {
            a: num.a.div_exact(&norm),
            b: num.b.div_exact(&norm),
        }
    }

    fn neg(self) -> ZS2 {
        ZS2 {
            a: -self.a,
            b: -self.b,
        }
    }
}

/// Lower-triangular Bareiss elimination over Z[√2]. Consumes the matrix.
fn bareiss(mut m: Vec<Vec<ZS2>>) -> ZS2 {
    let size = m.len();
    if size == 0 {
        return ZS2::one();
    }
    let mut negate = false;
    let mut prev = ZS2::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return ZS2::zero(),
            }
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..size {
                let mut v = row[j].mul(pivot);
                v.sub_assign(&lead.mul(&pivot_row[j]));
                row[j] = v.div_exact(&prev);
            }
            row[k] = ZS2::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Determinant of a square matrix over Q(√2) by fraction-free elimination.
///
/// Entries are first scaled by the lcm `L` of all component denominators,
/// so the elimination runs in Z[√2]; the result is divided by `L^size`.
pub fn det_fraction_free(matrix: &[Vec<QS2>]) -> QS2 {
    let size = matrix.len();
    assert!(
        matrix.iter().all(|r| r.len() == size),
        "matrix must be square"
    );
    let mut lcm = Integer::from(1);
    for x in matrix.iter().flatten() {
        lcm.lcm_mut(x.rat_part().denom());
        lcm.lcm_mut(x.sqrt2_part().denom());
    }
    let lift = |r: &Rat| -> Integer { r.numer() * Integer::from(lcm.div_exact_ref(r.denom())) };
    let scaled: Vec<Vec<ZS2>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| ZS2 {
                    a: lift(x.rat_part()),
                    b: lift(x.sqrt2_part()),
                })
                .collect()
        })
        .collect();
    let det = bareiss(scaled);
    let scale = Rat::from(Integer::from((&lcm).pow(size as u32)))
        .recip()
        .expect("lcm is positive");
    QS2::new(Rat::from(det.a), Rat::from(det.b)).scale(&scale)
}

/// `(μ_{i+j})_{i,j=0..=n}`.
pub fn hankel_matrix(table: &MomentTable, n: usize) -> Result<Vec<Vec<QS2>>> {
    if table.is_empty() || table.max_index() < 2 * n {
        return Err(Error::TableTooShort {
            needed: 2 * n,
            available: table.max_index(),
        });
    }
    let mu = table.moments();
    Ok((0..=n).map(|i| mu[i..=i + n].to_vec()).collect())
}

/// `Δ_n = det(μ_{i+j})_{i,j=0..=n}`.
pub fn hankel_det(table: &MomentTable, n: usize) -> Result<QS2> {
    Ok(det_fraction_free(&hankel_matrix(table, n)?))
}

/// `[Δ_{−1} = 1, Δ₀, …, Δ_N]`. Each determinant is computed independently.
pub fn hankel_dets(table: &MomentTable, depth: usize) -> Result<Vec<QS2>> {
    hankel_matrix(table, depth)?;
    let dets: Vec<QS2> = (0..=depth)
        .into_par_iter()
        .map(|n| hankel_det(table, n))
        .collect::<Result<_>>()?;
    Ok(std::iter::once(QS2::one()).chain(dets).collect())
}

/// `r_n = Δ_nΔ_{n−2}/Δ_{n−1}²` for `1 ≤ n ≤ N`, with `r₀ = 0`.
/// `dets` is laid out as returned by [`hankel_dets`].
fn determinant_ratios(dets: &[QS2], depth: usize) -> Result<Vec<Rat>> {
    let delta = |n: usize| &dets[n + 1];
    let mut out = Vec::with_capacity(depth + 1);
    out.push(Rat::zero());
    for n in 1..=depth {
        let denom = delta(n - 1);
        if denom.is_zero() {
            return Err(Error::ZeroDeterminant { n: n - 1 });
        }
        let r = (delta(n) * &dets[n - 1]).checked_div(&(denom * denom))?;
        out.push(r.to_rat().ok_or(Error::NonRationalRatio { n })?);
    }
    Ok(out)
}

/// `[s₀ = 0, s₁, …, s_N]` from a moment table holding `μ₀..=μ_{2N}`.
pub fn s_sequence(table: &MomentTable, depth: usize) -> Result<Vec<Rat>> {
    let dets = hankel_dets(table, depth)?;
    determinant_ratios(&dets, depth)
}

fn in_unit_interval(g: &Rat) -> bool {
    g.signum() > 0 && *g < Rat::one()
}

/// Minimal parameters of the chain sequence `(16 s_n)`: `g₀ = 0` and
/// `g_n = 16 s_n / (1 − g_{n−1})`. Every `g_n`, `n ≥ 1`, must lie in `(0, 1)`.
///
/// `s[0]` is `s₀` and is not read.
pub fn chain_params(s: &[Rat]) -> Result<Vec<Rat>> {
    let sixteen = Rat::from_int(16);
    let mut g = Vec::with_capacity(s.len().max(1));
    g.push(Rat::zero());
    for (n, sn) in s.iter().enumerate().skip(1) {
        let gap = Rat::one() - &g[n - 1];
        let next = &sixteen * sn * gap.recip()?;
        if !in_unit_interval(&next) {
            return Err(Error::ChainViolation {
                n,
                value: next.to_string(),
            });
        }
        g.push(next);
    }
    Ok(g)
}

/// `[γ₀, …, γ_{3N+2}]` from `[g₀, …, g_N]`.
pub fn gamma_from_chain(g: &[Rat]) -> Result<Vec<Rat>> {
    match g.first() {
        Some(g0) if g0.is_zero() => {}
        Some(g0) => {
            return Err(Error::ChainViolation {
                n: 0,
                value: g0.to_string(),
            })
        }
        None => return Ok(Vec::new()),
    }
    let half = Rat::frac(1, 2);
    let quarter = Rat::frac(1, 4);
    let mut gamma = Vec::with_capacity(3 * g.len());
    for (n, gn) in g.iter().enumerate() {
        if n > 0 && !in_unit_interval(gn) {
            return Err(Error::ChainViolation {
                n,
                value: gn.to_string(),
            });
        }
        gamma.push(gn * &half);
        gamma.push((Rat::one() - gn) * &half);
        gamma.push(quarter.clone());
    }
    Ok(gamma)
}

/// `[γ₀ = 0, γ₁, …, γ_N]` straight from the determinant ratios of the
/// P-moment table, which must hold `μ₀..=μ_{2N}`.
pub fn gamma_direct(table_p: &MomentTable, depth: usize) -> Result<Vec<Rat>> {
    let dets = hankel_dets(table_p, depth)?;
    determinant_ratios(&dets, depth)
}

/// One named check in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub n: usize,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, n: usize, pass: bool) -> Self {
        Check {
            name: name.to_string(),
            n,
            pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl ConjectureReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// The six low-index coefficients that are not fixed by
/// the pattern itself.
pub fn pinned_gammas() -> [(usize, Rat); 6] {
    [
        (3, Rat::frac(7, 30)),
        (4, Rat::frac(4, 15)),
        (6, Rat::frac(12, 49)),
        (7, Rat::frac(25, 98)),
        (9, Rat::frac(3187, 12870)),
        (10, Rat::frac(1624, 6435)),
    ]
}

/// Checks `γ₁ = ½`, `γ_{3n+2} = ¼`, `γ_{3n+3} + γ_{3n+4} = ½`, `γ_n > 0` and
/// the pinned values, wherever the supplied indices reach.
///
/// `gamma[n]` is `γ_n`; `gamma[0]` is ignored.
pub fn verify_conjecture(gamma: &[Rat]) -> ConjectureReport {
    let top = gamma.len().saturating_sub(1);
    let half = Rat::frac(1, 2);
    let quarter = Rat::frac(1, 4);
    let mut checks = Vec::new();
    if top >= 1 {
        checks.push(Check::new("gamma1_half", 1, gamma[1] == half));
    }
    for n in (0..).take_while(|n| 3 * n + 2 <= top) {
        checks.push(Check::new(
            "gamma_3n2_quarter",
            n,
            gamma[3 * n + 2] == quarter,
        ));
    }
    for n in (0..).take_while(|n| 3 * n + 4 <= top) {
        let sum = &gamma[3 * n + 3] + &gamma[3 * n + 4];
        checks.push(Check::new("gamma_pair_half", n, sum == half));
    }
    for (n, g) in gamma.iter().enumerate().skip(1) {
        checks.push(Check::new("gamma_positive", n, g.signum() > 0));
    }
    for (index, value) in pinned_gammas() {
        if index <= top {
            checks.push(Check::new("gamma_pinned", index, gamma[index] == value));
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    ConjectureReport { checks, pass }
}

/// Per-`n` exact ledger: `Δ_n`, `s_n`, `g_n`, `γ_{3n..=3n+2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceTable {
    depth: usize,
    /// `Δ_{−1}, Δ₀, …, Δ_N`.
    delta: Vec<QS2>,
    s: Vec<Rat>,
    g: Vec<Rat>,
    gamma: Vec<Rat>,
}

impl RecurrenceTable {
    /// Runs the chain-sequence route on `w_Q` to `depth` triples.
    pub fn build(depth: usize) -> Result<Self> {
        let table = moment_table(&WeightSpec::q(), depth)?;
        RecurrenceTable::from_q_table(&table, depth)
    }

    pub fn from_q_table(table: &MomentTable, depth: usize) -> Result<Self> {
        let delta = hankel_dets(table, depth)?;
        for (n, d) in delta.iter().enumerate().skip(1) {
            if d.sign() <= 0 {
                return Err(Error::NotPositiveDefinite { n: n - 1 });
            }
        }
        let s = determinant_ratios(&delta, depth)?;
        let g = chain_params(&s)?;
        let gamma = gamma_from_chain(&g)?;
        Ok(RecurrenceTable {
            depth,
            delta,
            s,
            g,
            gamma,
        })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `Δ_n` for `n ≥ −1`.
    pub fn delta(&self, n: isize) -> &QS2 {
        &self.delta[(n + 1) as usize]
    }

    /// `Δ_{−1}, Δ₀, …, Δ_N`.
    pub fn deltas(&self) -> &[QS2] {
        &self.delta
    }

    pub fn s(&self) -> &[Rat] {
        &self.s
    }

    pub fn g(&self) -> &[Rat] {
        &self.g
    }

    /// `γ₀..=γ_{3N+2}`.
    pub fn gamma(&self) -> &[Rat] {
        &self.gamma
    }

    /// Rows for the report, one per `n = 0..=N`.
    pub fn rows(&self) -> Vec<LedgerRow> {
        let quarter = Rat::frac(1, 4);
        let half = Rat::frac(1, 2);
        (0..=self.depth)
            .map(|n| {
                let triple = self.gamma[3 * n..3 * n + 3].to_vec();
                let delta = self.delta(n as isize).clone();
                let mut checks = vec![Check::new("delta_positive", n, delta.sign() > 0)];
                if n >= 1 {
                    checks.push(Check::new(
                        "g_in_unit_interval",
                        n,
                        in_unit_interval(&self.g[n]),
                    ));
                    let from_gamma = &quarter * &self.gamma[3 * n - 2] * &self.gamma[3 * n];
                    checks.push(Check::new("s_from_gamma", n, from_gamma == self.s[n]));
                }
                checks.push(Check::new("gamma_3n2_quarter", n, triple[2] == quarter));
                checks.push(Check::new(
                    "gamma_pair_half",
                    n,
                    &triple[0] + &triple[1] == half,
                ));
                LedgerRow {
                    n,
                    delta,
                    s: self.s[n].clone(),
                    g: self.g[n].clone(),
                    gamma: triple,
                    checks,
                }
            })
            .collect()
    }
}

/// One row of the ledger report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerRow {
    pub n: usize,
    pub delta: QS2,
    pub s: Rat,
    pub g: Rat,
    /// `[γ_{3n}, γ_{3n+1}, γ_{3n+2}]`.
    pub gamma: Vec<Rat>,
    pub checks: Vec<Check>,
}

impl LedgerRow {
    pub const CSV_HEADER: [&'static str; 9] = [
        "n",
        "delta_rat",
        "delta_sqrt2",
        "s",
        "g",
        "gamma_3n",
        "gamma_3n1",
        "gamma_3n2",
        "checks_pass",
    ];

    pub fn csv_record(&self) -> Vec<String> {
        let mut rec = vec![
            self.n.to_string(),
            self.delta.rat_part().to_string(),
            self.delta.sqrt2_part().to_string(),
            self.s.to_string(),
            self.g.to_string(),
        ];
        rec.extend(self.gamma.iter().map(Rat::to_string));
        rec.push(self.checks.iter().all(|c| c.pass).to_string());
        rec
    }
}

/// `γ_n` from both routes, side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteRow {
    pub n: usize,
    pub chain: Rat,
    pub direct: Rat,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteComparison {
    pub depth: usize,
    pub rows: Vec<RouteRow>,
    pub agree: bool,
}

impl RouteComparison {
    /// Compares the two routes on `γ₁..=γ_{3N+2}`, building both moment tables.
    pub fn compute(depth: usize) -> Result<(RecurrenceTable, RouteComparison)> {
        let table_q = moment_table(&WeightSpec::q(), depth)?;
        let table_p = moment_table(&WeightSpec::p(), 3 * depth + 2)?;
        RouteComparison::from_tables(&table_q, &table_p, depth)
    }

    /// As [`RouteComparison::compute`] with caller-supplied tables. `table_p`
    /// must hold `μ₀..=μ_{6N+4}`.
    pub fn from_tables(
        table_q: &MomentTable,
        table_p: &MomentTable,
        depth: usize,
    ) -> Result<(RecurrenceTable, RouteComparison)> {
        let ledger = RecurrenceTable::from_q_table(table_q, depth)?;
        let top = 3 * depth + 2;
        let direct = gamma_direct(table_p, top)?;
        let rows: Vec<RouteRow> = (1..=top)
            .map(|n| {
                let chain = ledger.gamma()[n].clone();
                let d = direct[n].clone();
                RouteRow {
                    n,
                    agree: chain == d,
                    chain,
                    direct: d,
                }
            })
            .collect();
        let agree = rows.iter().all(|r| r.agree);
        Ok((ledger, RouteComparison { depth, rows, agree }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::frac(n, d)
    }

    fn s2(n: i64, d: i64) -> QS2 {
        QS2::sqrt2_multiple(r(n, d))
    }

    #[test]
    fn zs2_exact_division() {
        let x = ZS2 {
            a: Integer::from(7),
            b: Integer::from(-3),
        };
        let y = ZS2 {
            a: Integer::from(5),
            b: Integer::from(2),
        };
        assert_eq!(x.mul(&y).div_exact(&y), x);
        let c = ZS2 {
            a: Integer::from(4),
            b: Integer::new(),
        };
        assert_eq!(x.mul(&c).div_exact(&c), x);
    }

    #[test]
    fn bareiss_pivots_past_zero() {
        let m = vec![vec![QS2::zero(), QS2::one()], vec![QS2::one(), QS2::zero()]];
        assert_eq!(det_fraction_free(&m), QS2::from(-1));
        let singular = vec![
            vec![QS2::one(), QS2::sqrt2()],
            vec![QS2::sqrt2(), QS2::from(2)],
        ];
        assert_eq!(det_fraction_free(&singular), QS2::zero());
        assert_eq!(det_fraction_free(&[]), QS2::one());
    }

    #[test]
    fn q_hankel_dets_match_known_values() {
        let t = moment_table(&WeightSpec::q(), 3).unwrap();
        assert_eq!(hankel_det(&t, 0).unwrap(), s2(2, 1));
        assert_eq!(hankel_det(&t, 1).unwrap(), QS2::from(r(7, 30)));
        assert_eq!(hankel_det(&t, 2).unwrap(), s2(1, 4500));
        let d3: Rat = "3187/476756280000".parse().unwrap();
        assert_eq!(hankel_det(&t, 3).unwrap(), QS2::from(d3));
        assert_eq!(
            hankel_det(&t, 4),
            Err(Error::TableTooShort {
                needed: 8,
                available: 6
            })
        );
    }

    #[test]
    fn size_one_det_is_mu0() {
        let t = moment_table(&WeightSpec::p(), 0).unwrap();
        assert_eq!(hankel_det(&t, 0).unwrap(), t.moments()[0]);
    }

    #[test]
    fn s_and_g_match_known_values() {
        let t = moment_table(&WeightSpec::q(), 3).unwrap();
        let s = s_sequence(&t, 3).unwrap();
        assert_eq!(
            s,
            vec![Rat::zero(), r(7, 240), r(4, 245), r(15935, 1009008)]
        );
        let g = chain_params(&s).unwrap();
        assert_eq!(g, vec![Rat::zero(), r(7, 15), r(24, 49), r(3187, 6435)]);
    }

    #[test]
    fn s_sequence_flags_irrational_ratio() {
        let t = moment_table(&WeightSpec::q(), 2)
            .unwrap()
            .with_moment(2, QS2::new(r(1, 100), r(7, 120)))
            .unwrap();
        assert!(matches!(
            s_sequence(&t, 2),
            Err(Error::NonRationalRatio { .. })
        ));
    }

    #[test]
    fn s_sequence_flags_zero_determinant() {
        let mu = vec![QS2::one(), QS2::one(), QS2::one(), QS2::one(), QS2::one()];
        let t = MomentTable::from_moments(crate::moments::WeightId::Q, mu);
        assert_eq!(s_sequence(&t, 2), Err(Error::ZeroDeterminant { n: 1 }));
    }

    #[test]
    fn chain_params_rejects_violation() {
        let s = vec![Rat::zero(), r(1, 32), r(1, 16)];
        // g₁ = ½, g₂ = 1/(1 − ½) = 2
        assert_eq!(
            chain_params(&s),
            Err(Error::ChainViolation {
                n: 2,
                value: "2".into()
            })
        );
        assert_eq!(chain_params(&[Rat::zero()]).unwrap(), vec![Rat::zero()]);
    }

    #[test]
    fn gamma_from_chain_examples() {
        let g = vec![Rat::zero(), r(7, 15)];
        let gamma = gamma_from_chain(&g).unwrap();
        assert_eq!(gamma.len(), 6);
        assert_eq!(gamma[0], Rat::zero());
        assert_eq!(gamma[1], r(1, 2));
        assert_eq!(gamma[2], r(1, 4));
        assert_eq!(gamma[3], r(7, 30));
        assert_eq!(gamma[4], r(4, 15));
        assert_eq!(gamma[5], r(1, 4));
        assert!(gamma_from_chain(&[r(1, 3)]).is_err());
        assert!(gamma_from_chain(&[Rat::zero(), Rat::one()]).is_err());
    }

    #[test]
    fn gamma_direct_small() {
        let t = moment_table(&WeightSpec::p(), 4).unwrap();
        let gamma = gamma_direct(&t, 4).unwrap();
        assert_eq!(
            gamma,
            vec![Rat::zero(), r(1, 2), r(1, 4), r(7, 30), r(4, 15)]
        );
        assert!(verify_conjecture(&gamma).pass);
    }

    #[test]
    fn verify_conjecture_flags_injected_value() {
        let t = moment_table(&WeightSpec::p(), 10).unwrap();
        let mut gamma = gamma_direct(&t, 10).unwrap();
        assert!(verify_conjecture(&gamma).pass);
        gamma[5] = r(1, 3);
        let report = verify_conjecture(&gamma);
        assert!(!report.pass);
        let failed: Vec<_> = report.failures().collect();
        assert_eq!(failed, vec![&Check::new("gamma_3n2_quarter", 1, false)]);
    }

    #[test]
    fn ledger_rows_pass() {
        let table = RecurrenceTable::build(3).unwrap();
        assert_eq!(table.delta(-1), &QS2::one());
        assert_eq!(table.gamma().len(), 12);
        let rows = table.rows();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().flat_map(|r| &r.checks).all(|c| c.pass));
        assert_eq!(rows[3].gamma[0], r(3187, 12870));
        assert_eq!(rows[1].csv_record()[3], "7/240");
    }

    #[test]
    fn routes_agree_small_depth() {
        let (_, cmp) = RouteComparison::compute(3).unwrap();
        assert!(cmp.agree);
        assert_eq!(cmp.rows.len(), 11);
        assert_eq!(cmp.rows[8].n, 9);
        assert_eq!(cmp.rows[8].direct, r(3187, 12870));
    }
}
