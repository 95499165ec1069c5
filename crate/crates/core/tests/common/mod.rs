#![allow(dead_code)]

use cubicmap::{Rat, QS2};

/// Laplace expansion along the first row. Exponential; small matrices only.
pub fn cofactor_det(m: &[Vec<QS2>]) -> QS2 {
    match m.len() {
        0 => QS2::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = QS2::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<QS2>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &cofactor_det(&minor);
                if col % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
    }
}

pub fn rat(s: &str) -> Rat {
    s.parse().expect("valid rational literal")
}

pub fn sqrt2_times(s: &str) -> QS2 {
    QS2::sqrt2_multiple(rat(s))
}
