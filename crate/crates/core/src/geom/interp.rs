//! Exact polynomial interpolation at the integer nodes 0, 1, …, n.
//!
//! The Vandermonde system is cleared to integers and eliminated with the
//! fraction-free Bareiss scheme, so every intermediate value is an integer
//! minor of the original matrix; back substitution then runs over rationals.

use num::bigint::BigInt;
use num::{Integer, One, Zero};

use crate::rat::Rat;

/// Coefficients of the unique polynomial of degree < `values.len()` taking
/// `values[t]` at `t = 0, 1, …`.
// the row index doubles as the interpolation node
#[allow(clippy::needless_range_loop)]
pub(crate) fn interpolate_at_integer_nodes(values: &[Rat]) -> Vec<Rat> {
    let k = values.len();
    assert!(k >= 1);

    // Common denominator for the right-hand side.
    let mut denom = BigInt::one();
    for v in values {
        denom = denom.lcm(v.denom());
    }

    // Augmented integer matrix [V | denom · values].
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(k);
    for t in 0..k {
        let mut row = Vec::with_capacity(k + 1);
        let tb = BigInt::from(t);
        let mut power = BigInt::one();
        for _ in 0..k {
            row.push(power.clone());
            power *= &tb;
        }
        let v = &values[t];
        row.push(v.numer() * (&denom / v.denom()));
        m.push(row);
    }

    // Fraction-free elimination with row pivoting.
    let mut prev = BigInt::one();
    for p in 0..k - 1 {
        if m[p][p].is_zero() {
            let swap = (p + 1..k)
                .find(|&r| !m[r][p].is_zero())
                .expect("vandermonde at distinct nodes is nonsingular");
            m.swap(p, swap);
        }
        for r in p + 1..k {
            for c in p + 1..=k {
                m[r][c] = (&m[p][p] * &m[r][c] - &m[r][p] * &m[p][c]) / &prev;
            }
            m[r][p] = BigInt::zero();
        }
        prev = m[p][p].clone();
    }

    // Back substitution over exact rationals, undoing the denominator.
    let mut coeffs = vec![Rat::zero(); k];
    for i in (0..k).rev() {
        let mut acc = Rat::integer(m[i][k].clone());
        for j in i + 1..k {
            acc -= Rat::integer(m[i][j].clone()) * &coeffs[j];
        }
        coeffs[i] = acc / Rat::integer(m[i][i].clone());
    }
    let scale = Rat::integer(denom);
    coeffs.into_iter().map(|c| c / &scale).collect()
}
