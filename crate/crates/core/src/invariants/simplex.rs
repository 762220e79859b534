//! Exact simplex for `max c·y  s.t.  A y ≤ b, y ≥ 0` with integer data and `b ≥ 0`.
//!
//! The origin is feasible, so no phase one is needed. The solver pivots a
//! condensed (Tucker) tableau with fraction-free integer updates: all entries
//! share the divisor `d` (the previous pivot) and every update divides
//! exactly. Bland's rule is used for both the entering and the leaving
//! variable. The kernel first runs on checked `i128` and restarts on `BigInt`
//! if any intermediate value overflows, so results are exact either way.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

trait PivotInt: Clone + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn div_exact(&self, o: &Self) -> Self;
    fn sign(&self) -> i8;
    fn to_big(&self) -> BigInt;
}

impl PivotInt for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert_eq!(self % o, 0);
        self / o
    }
    fn sign(&self) -> i8 {
        self.signum() as i8
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl PivotInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert!((self % o).is_zero());
        self / o
    }
    fn sign(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Optimal primal/dual pair of a packing-form LP.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpOptimum {
    pub value: Rational,
    /// Optimal `y`, one entry per column of `A`.
    pub primal: Vec<Rational>,
    /// Optimal multipliers `x ≥ 0` of the rows of `A` (`xᵀA ≥ c`, `x·b = value`).
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingLp {
    pub a: Vec<Vec<i64>>,
    pub b: Vec<i64>,
    pub c: Vec<i64>,
}

enum Outcome<I> {
    Optimal {
        table: Vec<Vec<I>>,
        d: I,
        row_label: Vec<usize>,
        col_label: Vec<usize>,
        pivots: usize,
    },
    Unbounded,
}

impl PackingLp {
    pub fn new(a: Vec<Vec<i64>>, b: Vec<i64>, c: Vec<i64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::arg("row count of A and length of b differ"));
        }
        if a.iter().any(|row| row.len() != c.len()) {
            return Err(Error::arg("column count of A and length of c differ"));
        }
        if b.iter().any(|&v| v < 0) {
            return Err(Error::arg("right-hand side must be non-negative"));
        }
        Ok(PackingLp { a, b, c })
    }

    pub fn solve(&self) -> Result<LpOptimum> {
        match self.run::<i128>() {
            Some(out) => self.extract(out),
            None => {
                let out = self.run::<BigInt>().expect("BigInt arithmetic cannot overflow");
                self.extract(out)
            }
        }
    }

    /// `None` means the integer type overflowed.
    fn run<I: PivotInt>(&self) -> Option<Outcome<I>> {
        let m = self.b.len();
        let n = self.c.len();
        let mut t: Vec<Vec<I>> = Vec::with_capacity(m + 1);
        for i in 0..m {
            let mut row: Vec<I> = self.a[i].iter().map(|&v| I::from_i64(v)).collect();
            row.push(I::from_i64(self.b[i]));
            t.push(row);
        }
        let mut obj: Vec<I> = self.c.iter().map(|&v| I::from_i64(-v)).collect();
        obj.push(I::from_i64(0));
        t.push(obj);

        let mut d = I::from_i64(1);
        let mut row_label: Vec<usize> = (n..n + m).collect();
        let mut col_label: Vec<usize> = (0..n).collect();
        let mut pivots = 0usize;

        loop {
            // Bland: entering = improving column with the smallest variable label.
            let entering = (0..n)
                .filter(|&j| t[m][j].sign() < 0)
                .min_by_key(|&j| col_label[j]);
            let Some(s) = entering else {
                return Some(Outcome::Optimal {
                    table: t,
                    d,
                    row_label,
                    col_label,
                    pivots,
                });
            };

            // Ratio test; ties broken by smallest basic label.
            let mut leave: Option<usize> = None;
            for i in 0..m {
                if t[i][s].sign() <= 0 {
                    continue;
                }
                leave = match leave {
                    None => Some(i),
                    Some(r) => {
                        // compare t[i][n]/t[i][s] with t[r][n]/t[r][s]
                        let lhs = t[i][n].mul(&t[r][s])?;
                        let rhs = t[r][n].mul(&t[i][s])?;
                        match lhs.sub(&rhs)?.sign() {
                            -1 => Some(i),
                            0 if row_label[i] < row_label[r] => Some(i),
                            _ => Some(r),
                        }
                    }
                };
            }
            let Some(r) = leave else {
                return Some(Outcome::Unbounded);
            };

            let p = t[r][s].clone();
            for i in 0..=m {
                if i == r {
                    continue;
                }
                let fac = t[i][s].clone();
                for j in 0..=n {
                    if j == s {
                        continue;
                    }
                    let v = p.mul(&t[i][j])?.sub(&fac.mul(&t[r][j])?)?;
                    t[i][j] = v.div_exact(&d);
                }
                t[i][s] = fac.neg()?;
            }
            t[r][s] = d;
            d = p;
            std::mem::swap(&mut row_label[r], &mut col_label[s]);
            pivots += 1;
        }
    }

    fn extract<I: PivotInt>(&self, out: Outcome<I>) -> Result<LpOptimum> {
        let Outcome::Optimal {
            table,
            d,
            row_label,
            col_label,
            pivots,
        } = out
        else {
            return Err(Error::arg("linear program is unbounded"));
        };
        let m = self.b.len();
        let n = self.c.len();
        let den = d.to_big();
        let frac = |v: &I| Rational::from_bigints(v.to_big(), den.clone());

        let mut primal = vec![Rational::zero(); n];
        for (i, &label) in row_label.iter().enumerate() {
            if label < n {
                primal[label] = frac(&table[i][n]);
            }
        }
        let mut dual = vec![Rational::zero(); m];
        for (j, &label) in col_label.iter().enumerate() {
            if label >= n {
                dual[label - n] = frac(&table[m][j]);
            }
        }
        Ok(LpOptimum {
            value: frac(&table[m][n]),
            primal,
            dual,
            pivots,
        })
    }
}
