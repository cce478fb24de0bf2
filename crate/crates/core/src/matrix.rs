//! Matrices of polynomials: Jacobians, determinants, resultants.
//!
//! Determinants of small matrices use cofactor expansion; anything larger
//! uses the fraction-free Bareiss elimination, whose interior divisions are
//! exact over any integral domain — here they are performed with
//! [`MultiPoly::div_exact`] and checked at runtime.

use crate::poly::MultiPoly;
use crate::ring::PolyRing;

/// A dense rows × cols matrix of polynomials over one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: PolyRing,
    rows: usize,
    cols: usize,
    data: Vec<MultiPoly>,
}

impl PolyMatrix {
    /// A zero-filled matrix.
    pub fn zero(ring: &PolyRing, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![MultiPoly::zero(ring); rows * cols],
        }
    }

    /// Builds a matrix from rows.
    ///
    /// # Panics
    ///
    /// Panics on ragged rows, an empty matrix, or mixed rings.
    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> PolyMatrix {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(cols > 0, "matrix needs at least one column");
        let ring = rows[0][0].ring().clone();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            for entry in row {
                assert_eq!(entry.ring(), &ring, "ring mismatch");
                data.push(entry.clone());
            }
        }
        PolyMatrix {
            ring,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The entry at (`r`, `c`).
    pub fn at(&self, r: usize, c: usize) -> &MultiPoly {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.data[r * self.cols + c]
    }

    /// Replaces an entry.
    pub fn set(&mut self, r: usize, c: usize, value: MultiPoly) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        assert_eq!(value.ring(), &self.ring, "ring mismatch");
        self.data[r * self.cols + c] = value;
    }

    /// A copy with column `c` replaced by `column`.
    pub fn with_column_replaced(&self, c: usize, column: &[MultiPoly]) -> PolyMatrix {
        assert!(c < self.cols, "column out of range");
        assert_eq!(column.len(), self.rows, "column length mismatch");
        let mut out = self.clone();
        for (r, value) in column.iter().enumerate() {
            out.set(r, c, value.clone());
        }
        out
    }

    /// The determinant of a square matrix.
    ///
    /// # Panics
    ///
    /// Panics if the matrix is not square.
    pub fn determinant(&self) -> MultiPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        match self.rows {
            1 => self.at(0, 0).clone(),
            2 => {
                &(self.at(0, 0) * self.at(1, 1)) - &(self.at(0, 1) * self.at(1, 0))
            }
            3 => {
                let m = |r: usize, c: usize| self.at(r, c);
                let a = &(m(1, 1) * m(2, 2)) - &(m(1, 2) * m(2, 1));
                let b = &(m(1, 0) * m(2, 2)) - &(m(1, 2) * m(2, 0));
                let c = &(m(1, 0) * m(2, 1)) - &(m(1, 1) * m(2, 0));
                &(&(m(0, 0) * &a) - &(m(0, 1) * &b)) + &(m(0, 2) * &c)
            }
            _ => self.bareiss_determinant(),
        }
    }

    /// Fraction-free Bareiss elimination.  Every interior division is exact;
    /// this is checked and a failure is a bug, so it panics.
    fn bareiss_determinant(&self) -> MultiPoly {
        let n = self.rows;
        let mut m: Vec<Vec<MultiPoly>> = (0..n)
            .map(|r| (0..n).map(|c| self.at(r, c).clone()).collect())
            .collect();
        let mut sign = false;
        let mut prev = MultiPoly::one(&self.ring);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = !sign;
                    }
                    None => return MultiPoly::zero(&self.ring),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss interior division is exact");
                }
                m[i][k] = MultiPoly::zero(&self.ring);
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign {
            -&det
        } else {
            det
        }
    }
}

/// The Jacobian matrix of `fns` with respect to the given variables: entry
/// (i, j) is `∂ fns[i] / ∂ x_{vars[j]}`.
pub fn jacobian(fns: &[MultiPoly], vars: &[usize]) -> PolyMatrix {
    assert!(!fns.is_empty(), "Jacobian of an empty system");
    let ring = fns[0].ring().clone();
    let rows = fns
        .iter()
        .map(|f| {
            assert_eq!(f.ring(), &ring, "ring mismatch");
            vars.iter().map(|&v| f.derivative(v)).collect()
        })
        .collect();
    PolyMatrix::from_rows(rows)
}

/// The Sylvester matrix of `f` and `g` viewed as univariate polynomials in
/// variable `var`; its determinant is their resultant.
///
/// # Panics
///
/// Panics if either polynomial has degree zero in `var`.
pub fn sylvester(f: &MultiPoly, g: &MultiPoly, var: usize) -> PolyMatrix {
    assert_eq!(f.ring(), g.ring(), "ring mismatch");
    let ring = f.ring().clone();
    let m = f.degree_in(var).unwrap_or(0) as usize;
    let n = g.degree_in(var).unwrap_or(0) as usize;
    assert!(m > 0 && n > 0, "Sylvester matrix needs positive degrees");
    let size = m + n;
    let mut out = PolyMatrix::zero(&ring, size, size);
    // n rows of f's coefficients (descending), then m rows of g's.
    for shift in 0..n {
        for k in 0..=m {
            out.set(shift, shift + k, f.coefficient_of(var, (m - k) as u32));
        }
    }
    for shift in 0..m {
        for k in 0..=n {
            out.set(n + shift, shift + k, g.coefficient_of(var, (n - k) as u32));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_polynomial;
    use crate::rational::integer;

    fn ring() -> PolyRing {
        PolyRing::new(&["x", "y", "z", "w"]).unwrap()
    }

    fn p(r: &PolyRing, s: &str) -> MultiPoly {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn small_determinants() {
        let r = ring();
        let m = PolyMatrix::from_rows(vec![
            vec![p(&r, "x"), p(&r, "y")],
            vec![p(&r, "z"), p(&r, "w")],
        ]);
        assert_eq!(m.determinant(), p(&r, "x*w - y*z"));
        let id3 = PolyMatrix::from_rows(vec![
            vec![p(&r, "1"), p(&r, "0"), p(&r, "0")],
            vec![p(&r, "0"), p(&r, "1"), p(&r, "0")],
            vec![p(&r, "0"), p(&r, "0"), p(&r, "1")],
        ]);
        assert_eq!(id3.determinant(), MultiPoly::one(&r));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion_and_handles_pivoting() {
        let r = ring();
        // A 4x4 Vandermonde-style matrix in x, y, z, w: the determinant is
        // the product of the pairwise differences.
        let vars = ["x", "y", "z", "w"];
        let rows: Vec<Vec<MultiPoly>> = vars
            .iter()
            .map(|v| (0..4).map(|e| p(&r, &format!("{v}^{e}"))).collect())
            .collect();
        let det = PolyMatrix::from_rows(rows).determinant();
        let expected = p(
            &r,
            "(y - x)*(z - x)*(w - x)*(z - y)*(w - y)*(w - z)",
        );
        assert_eq!(det, expected);

        // Zero pivot in the corner forces a row swap.
        let m = PolyMatrix::from_rows(vec![
            vec![p(&r, "0"), p(&r, "1"), p(&r, "0"), p(&r, "0")],
            vec![p(&r, "1"), p(&r, "0"), p(&r, "0"), p(&r, "0")],
            vec![p(&r, "0"), p(&r, "0"), p(&r, "0"), p(&r, "1")],
            vec![p(&r, "0"), p(&r, "0"), p(&r, "1"), p(&r, "0")],
        ]);
        assert_eq!(m.determinant(), MultiPoly::one(&r));

        // Singular matrix.
        let s = PolyMatrix::from_rows(vec![
            vec![p(&r, "x"), p(&r, "y"), p(&r, "0"), p(&r, "0")],
            vec![p(&r, "x"), p(&r, "y"), p(&r, "0"), p(&r, "0")],
            vec![p(&r, "0"), p(&r, "0"), p(&r, "1"), p(&r, "0")],
            vec![p(&r, "0"), p(&r, "0"), p(&r, "0"), p(&r, "1")],
        ]);
        assert!(s.determinant().is_zero());
    }

    #[test]
    fn jacobian_entries() {
        let r = ring();
        let fns = vec![p(&r, "x^2 + y"), p(&r, "x*y")];
        let j = jacobian(&fns, &[0, 1]);
        assert_eq!(j.at(0, 0), &p(&r, "2*x"));
        assert_eq!(j.at(0, 1), &MultiPoly::one(&r));
        assert_eq!(j.at(1, 0), &p(&r, "y"));
        assert_eq!(j.at(1, 1), &p(&r, "x"));
    }

    #[test]
    fn cramer_identity_on_a_generic_matrix() {
        // M * adj-solution = det(M) * rhs, verified via column replacement.
        let r = ring();
        let m = PolyMatrix::from_rows(vec![
            vec![p(&r, "x"), p(&r, "y"), p(&r, "1")],
            vec![p(&r, "z"), p(&r, "x"), p(&r, "y")],
            vec![p(&r, "1"), p(&r, "0"), p(&r, "x")],
        ]);
        let rhs = vec![p(&r, "w"), p(&r, "w^2"), p(&r, "1")];
        let det = m.determinant();
        let q: Vec<MultiPoly> = (0..3)
            .map(|i| m.with_column_replaced(i, &rhs).determinant())
            .collect();
        for row in 0..3 {
            let mut lhs = MultiPoly::zero(&r);
            for col in 0..3 {
                lhs = &lhs + &(m.at(row, col) * &q[col]);
            }
            assert_eq!(lhs, &det * &rhs[row]);
        }
    }

    #[test]
    fn resultant_of_univariate_pair() {
        // res_x(x^2 - 3, x - 2) = 1 (evaluate x^2 - 3 at x = 2).
        let r = ring();
        let f = p(&r, "x^2 - 3");
        let g = p(&r, "x - 2");
        let res = sylvester(&f, &g, 0).determinant();
        assert_eq!(res, MultiPoly::constant(&r, integer(1)));

        // Common root => resultant zero.
        let res0 = sylvester(&p(&r, "x^2 - 1"), &p(&r, "x - 1"), 0).determinant();
        assert!(res0.is_zero());
    }
}
