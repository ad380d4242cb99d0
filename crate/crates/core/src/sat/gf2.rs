use crate::error::{Error, Result};
use crate::formula::BitVector;

/// Linear system `A·x = b` over GF(2), one bit-vector per row of `A`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2System {
    num_vars: usize,
    rows: Vec<BitVector>,
    rhs: Vec<bool>,
}

impl F2System {
    pub fn new(num_vars: usize, rows: Vec<BitVector>, rhs: Vec<bool>) -> Result<Self> {
        if rows.len() != rhs.len() {
            return Err(Error::LengthMismatch {
                expected: rows.len(),
                found: rhs.len(),
            });
        }
        if let Some(r) = rows.iter().find(|r| r.len() != num_vars) {
            return Err(Error::LengthMismatch {
                expected: num_vars,
                found: r.len(),
            });
        }
        Ok(Self {
            num_vars,
            rows,
            rhs,
        })
    }

    /// Homogeneous system `A·x = 0`.
    pub fn homogeneous(num_vars: usize, rows: Vec<BitVector>) -> Result<Self> {
        let rhs = vec![false; rows.len()];
        Self::new(num_vars, rows, rhs)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn rhs(&self) -> &[bool] {
        &self.rhs
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// `A·x`.
    pub fn apply(&self, x: &BitVector) -> Result<Vec<bool>> {
        self.rows
            .iter()
            .map(|r| Ok(r.and(x)?.weight() % 2 == 1))
            .collect()
    }

    pub fn is_solution(&self, x: &BitVector) -> Result<bool> {
        Ok(self.apply(x)? == self.rhs)
    }
}

/// Solution space of an [`F2System`]: `particular + span(kernel_basis)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Solution {
    /// Present iff the system is consistent. Free variables are zero.
    pub particular: Option<BitVector>,
    /// One vector per free column, in increasing column order.
    pub kernel_basis: Vec<BitVector>,
    pub rank: usize,
}

/// Gauss–Jordan elimination with the lowest available column as pivot.
pub fn gauss_solve(sys: &F2System) -> F2Solution {
    let n = sys.num_vars;
    let mut rows = sys.rows.clone();
    let mut rhs = sys.rhs.clone();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let (pivot_row, pivot_rhs) = (rows[r].clone(), rhs[r]);
        for i in 0..rows.len() {
            if i != r && rows[i].get(col) {
                rows[i].xor_assign(&pivot_row);
                rhs[i] ^= pivot_rhs;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let rank = pivots.len();
    let consistent = rhs[rank..].iter().all(|&b| !b);

    let particular = consistent.then(|| {
        let mut x = BitVector::zeros(n);
        for (i, &p) in pivots.iter().enumerate() {
            x.set(p, rhs[i]);
        }
        x
    });

    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let kernel_basis = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = BitVector::zeros(n);
            v.set(f, true);
            for (i, &p) in pivots.iter().enumerate() {
                if rows[i].get(f) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect();

    F2Solution {
        particular,
        kernel_basis,
        rank,
    }
}
