//! Exact moments of the two weights and the moment functional they define.
//!
//! * `w_P(x) = |x + ½|/√(1+x) + |x − ½|/√(1−x)` on `(−1, 1)`;
//! * `w_Q(x) = w(4x)` on `(−¼, ¼)`, related to `w_P` by
//!   `w_P = |Û₂|·(w_Q ∘ T̂₃)`.
//!
//! P-moments come from `t = √(1+x)`, which turns the first term of `w_P`
//! into `2∫₀^{√2} (t²−1)^k |t² − ½| dt`; splitting at `t = 1/√2` leaves a
//! polynomial integral whose endpoint values lie in `Q·√2`. The second term
//! is the mirror image of the first. Q-moments are pushed forward through
//! `T̂₃`, which maps `[−1, 1]` three-to-one onto `[−¼, ¼]`:
//! `∫ yⁿ w_Q(y) dy = ∫ T̂₃(x)ⁿ w_P(x) dx`.

use std::fmt;
use std::str::FromStr;

use rug::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyalg::{cheb_t_monic, Poly};
use crate::qfield::{Rat, QS2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightId {
    P,
    Q,
}

impl fmt::Display for WeightId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightId::P => "P",
            WeightId::Q => "Q",
        })
    }
}

impl FromStr for WeightId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(WeightId::P),
            "Q" | "q" => Ok(WeightId::Q),
            other => Err(Error::Parse(format!(
                "unknown weight {other:?}, expected P or Q"
            ))),
        }
    }
}

/// A weight together with its support `[ξ, η]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpec {
    id: WeightId,
    support: (Rat, Rat),
}

impl WeightSpec {
    /// Validates `ξ < η`, and for Q that `[ξ, η] ⊆ [−¼, ¼]`.
    pub fn new(id: WeightId, xi: Rat, eta: Rat) -> Result<Self> {
        let invalid = |reason| Error::InvalidSupport {
            xi: xi.to_string(),
            eta: eta.to_string(),
            reason,
        };
        if xi >= eta {
            return Err(invalid("endpoints out of order"));
        }
        let (lo, hi) = natural_support(id);
        if xi < lo || eta > hi {
            return Err(invalid("support exceeds the weight's natural interval"));
        }
        Ok(WeightSpec {
            id,
            support: (xi, eta),
        })
    }

    /// `w_P` on `[−1, 1]`.
    pub fn p() -> Self {
        let (xi, eta) = natural_support(WeightId::P);
        WeightSpec {
            id: WeightId::P,
            support: (xi, eta),
        }
    }

    /// `w_Q` on `[−¼, ¼]`.
    pub fn q() -> Self {
        let (xi, eta) = natural_support(WeightId::Q);
        WeightSpec {
            id: WeightId::Q,
            support: (xi, eta),
        }
    }

    pub fn of(id: WeightId) -> Self {
        match id {
            WeightId::P => WeightSpec::p(),
            WeightId::Q => WeightSpec::q(),
        }
    }

    pub fn id(&self) -> WeightId {
        self.id
    }

    pub fn support(&self) -> (&Rat, &Rat) {
        (&self.support.0, &self.support.1)
    }

    pub fn is_natural(&self) -> bool {
        self.support == natural_support(self.id)
    }
}

fn natural_support(id: WeightId) -> (Rat, Rat) {
    match id {
        WeightId::P => (Rat::from_int(-1), Rat::one()),
        WeightId::Q => (Rat::frac(-1, 4), Rat::frac(1, 4)),
    }
}

/// The rational `r_k` with `∫_{−1}^{1} x^k |x+½|/√(1+x) dx = r_k·√2`.
fn half_moment_p(k: usize) -> Rat {
    // f(u) = (u − 1)^k (u − ½) = Σ c_j u^j with u = t².
    let k32 = k as u32;
    let mut binom_sign: Vec<Rat> = (0..=k32)
        .map(|i| {
            let b = Integer::from(Integer::binomial_u(k32, i));
            let b = if (k32 - i) % 2 == 1 { -b } else { b };
            Rat::from(b)
        })
        .collect();
    binom_sign.push(Rat::zero());
    let half = Rat::frac(1, 2);
    let coeff = |j: usize| -> Rat {
        let lower = if j == 0 {
            Rat::zero()
        } else {
            binom_sign[j - 1].clone()
        };
        lower - &binom_sign[j] * &half
    };
    // 2·[F(√2) − 2F(1/√2)] with F(t) = Σ c_j t^{2j+1}/(2j+1)
    //   = 2√2 · Σ c_j (2^j − 2^{−j})/(2j+1).
    let mut acc = Rat::zero();
    for j in 0..=k + 1 {
        let c = coeff(j);
        if c.is_zero() {
            continue;
        }
        let two_j = Rat::from(Integer::from(1) << j as u32);
        let weight = (&two_j - two_j.recip().expect("nonzero power of two"))
            * Rat::frac(1, 2 * j as i64 + 1);
        acc += &(c * weight);
    }
    Rat::from_int(2) * acc
}

/// `∫_{−1}^{1} x^k w_P(x) dx`, exactly.
pub fn moment_p(k: usize) -> QS2 {
    if k % 2 == 1 {
        return QS2::zero();
    }
    QS2::sqrt2_multiple(Rat::from_int(2) * half_moment_p(k))
}

/// `∫_{−¼}^{¼} yⁿ w_Q(y) dy`, exactly.
pub fn moment_q(n: usize) -> QS2 {
    let t3n = cheb_t_monic(3).pow(n as u32);
    let p_moments: Vec<QS2> = (0..=3 * n).map(moment_p).collect();
    pushforward(&t3n, &p_moments)
}

fn pushforward(t3_power: &Poly, p_moments: &[QS2]) -> QS2 {
    t3_power
        .coeffs()
        .iter()
        .zip(p_moments)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, m)| c * m)
        .sum()
}

/// Exact moments `μ₀..=μ_{2N}` of one weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentTable {
    weight: WeightId,
    moments: Vec<QS2>,
}

impl MomentTable {
    /// Wraps precomputed moments. Used to build perturbed tables in tests.
    pub fn from_moments(weight: WeightId, moments: Vec<QS2>) -> Self {
        MomentTable { weight, moments }
    }

    pub fn weight(&self) -> WeightId {
        self.weight
    }

    pub fn moments(&self) -> &[QS2] {
        &self.moments
    }

    pub fn len(&self) -> usize {
        self.moments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moments.is_empty()
    }

    /// Highest moment index held.
    pub fn max_index(&self) -> usize {
        self.moments.len().saturating_sub(1)
    }

    pub fn get(&self, k: usize) -> Result<&QS2> {
        self.moments.get(k).ok_or(Error::TableTooShort {
            needed: k,
            available: self.max_index(),
        })
    }

    /// Same table with `μ_k` replaced.
    pub fn with_moment(mut self, k: usize, value: QS2) -> Result<Self> {
        let available = self.max_index();
        let slot = self.moments.get_mut(k).ok_or(Error::TableTooShort {
            needed: k,
            available,
        })?;
        *slot = value;
        Ok(self)
    }
}

/// `μ₀..=μ_{2·count}` for the chosen weight over its natural support.
pub fn moment_table(weight: &WeightSpec, count: usize) -> Result<MomentTable> {
    if !weight.is_natural() {
        let (xi, eta) = weight.support();
        return Err(Error::InvalidSupport {
            xi: xi.to_string(),
            eta: eta.to_string(),
            reason: "closed-form moments exist only over the natural support",
        });
    }
    let top = 2 * count;
    let moments = match weight.id() {
        WeightId::P => (0..=top).map(moment_p).collect(),
        WeightId::Q => {
            let p_moments: Vec<QS2> = (0..=3 * top).map(moment_p).collect();
            let t3 = cheb_t_monic(3);
            let mut power = Poly::one();
            let mut out = Vec::with_capacity(top + 1);
            for _ in 0..=top {
                out.push(pushforward(&power, &p_moments));
                power = &power * &t3;
            }
            out
        }
    };
    Ok(MomentTable {
        weight: weight.id(),
        moments,
    })
}

/// `𝓛[p] = Σ_k p_k μ_k`.
pub fn apply_functional(p: &Poly, table: &MomentTable) -> Result<QS2> {
    if let Some(d) = p.degree() {
        if d > table.max_index() || table.is_empty() {
            return Err(Error::TableTooShort {
                needed: d,
                available: table.max_index(),
            });
        }
    }
    Ok(p.coeffs()
        .iter()
        .zip(table.moments())
        .filter(|(c, m)| !c.is_zero() && !m.is_zero())
        .map(|(c, m)| c * m)
        .sum())
}

/// `𝓛[p·q]`.
pub fn inner_product(p: &Poly, q: &Poly, table: &MomentTable) -> Result<QS2> {
    apply_functional(&(p * q), table)
}
