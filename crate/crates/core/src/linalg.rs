//! Fraction-free (Bareiss) solving over `Z[q^±, t^±]`.

use crate::error::{Result, SkeinError};
use crate::{IntLaurent, Scalar};

fn exact(a: &IntLaurent, b: &IntLaurent) -> Result<IntLaurent> {
    a.exact_div(b).ok_or_else(|| SkeinError::NonIntegral(format!("({a}) / ({b}) is not exact")))
}

/// Solve `a x = rhs` exactly. Returns `(y, d)` with `x = y / d`, `d` the
/// determinant of `a` up to sign. Errors if `a` is singular.
pub fn bareiss_solve(a: &[Vec<IntLaurent>], rhs: &[IntLaurent]) -> Result<(Vec<IntLaurent>, IntLaurent)> {
    let n = a.len();
    let mut m: Vec<Vec<IntLaurent>> = a
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut row = row.clone();
            row.push(r.clone());
            row
        })
        .collect();
    let mut prev = IntLaurent::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero()).ok_or_else(|| SkeinError::DegeneratePairing(format!("pivot {k}")))?;
        m.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..=n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = exact(&num, &prev)?;
            }
            m[i][k] = IntLaurent::zero();
        }
        prev = m[k][k].clone();
    }
    let det = prev;
    let mut y = vec![IntLaurent::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &det * &m[i][n];
        for j in i + 1..n {
            acc -= &(&m[i][j] * &y[j]);
        }
        y[i] = exact(&acc, &m[i][i])?;
    }
    Ok((y, det))
}

/// `y / d` as an element of `Z[q^±, t^±, 1/z]`, trying denominators `z^k` for `k ≤ max_k`.
pub fn quotient_in_ring(y: &IntLaurent, d: &IntLaurent, max_k: u32) -> Result<Scalar> {
    let z = IntLaurent::z();
    let mut num = y.clone();
    for k in 0..=max_k {
        if let Some(q) = num.exact_div(d) {
            return Ok(Scalar::reduce(q, k));
        }
        num = &num * &z;
    }
    Err(SkeinError::NonIntegral(format!("({y}) / ({d})")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn two_by_two() {
        // [[q, 1], [1, q]] x = [q + 1, q + 1]  =>  x = [1, 1]
        let a = vec![vec![p("q"), p("1")], vec![p("1"), p("q")]];
        let (y, d) = bareiss_solve(&a, &[p("q + 1"), p("q + 1")]).unwrap();
        for yi in &y {
            assert!(quotient_in_ring(yi, &d, 4).unwrap().is_one());
        }
    }

    #[test]
    fn needs_pivoting_and_z_denominators() {
        // [[0, z], [1, 0]] x = [t, 1]  =>  x = [1, t/z]
        let a = vec![vec![p("0"), p("q - q^-1")], vec![p("1"), p("0")]];
        let (y, d) = bareiss_solve(&a, &[p("t"), p("1")]).unwrap();
        let x1 = quotient_in_ring(&y[1], &d, 4).unwrap();
        assert_eq!(x1, "(t)/z^1".parse().unwrap());
        assert!(bareiss_solve(&[vec![p("0")]], &[p("1")]).is_err());
    }
}
