use std::fmt;
use std::sync::Arc;

use crate::finite_field::{FieldCtx, FieldElement, FieldTables};

/// Largest matrix dimension handled by the oracle.
pub const MAX_DIM: usize = 4;

/// A square matrix over a small field, entries stored as packed field elements
/// in row-major order. Unused slots are zero.
///
/// The derived ordering compares entries row-major by packed value, which is
/// the canonical order used for PSL representatives and for tie-breaking.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixElement {
    dim: u8,
    entries: [u16; MAX_DIM * MAX_DIM],
}

impl MatrixElement {
    pub fn from_packed(dim: usize, packed: &[u16]) -> Self {
        assert!(dim <= MAX_DIM && packed.len() == dim * dim, "bad matrix shape");
        let mut entries = [0u16; MAX_DIM * MAX_DIM];
        entries[..packed.len()].copy_from_slice(packed);
        MatrixElement {
            dim: dim as u8,
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn packed(&self) -> &[u16] {
        &self.entries[..self.dim() * self.dim()]
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u16 {
        self.entries[row * self.dim() + col]
    }

    pub fn entry(&self, ctx: &Arc<FieldCtx>, row: usize, col: usize) -> FieldElement {
        FieldElement::from_packed(ctx, self.get(row, col) as u64).expect("packed entry in range")
    }
}

impl fmt::Debug for MatrixElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u16]> = self.packed().chunks(self.dim()).collect();
        write!(f, "{rows:?}")
    }
}

/// Multiplication in SL(dim, q), or in PSL(2,q) when `projective` is set.
#[derive(Debug, Clone)]
pub struct MatrixArith {
    tables: Arc<FieldTables>,
    dim: usize,
    projective: bool,
}

impl MatrixArith {
    pub fn new(tables: Arc<FieldTables>, dim: usize, projective: bool) -> Self {
        assert!((1..=MAX_DIM).contains(&dim));
        MatrixArith {
            tables,
            dim,
            projective,
        }
    }

    pub fn tables(&self) -> &FieldTables {
        &self.tables
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.tables.ctx()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn identity(&self) -> MatrixElement {
        let mut m = MatrixElement {
            dim: self.dim as u8,
            entries: [0; MAX_DIM * MAX_DIM],
        };
        for i in 0..self.dim {
            m.entries[i * self.dim + i] = 1;
        }
        m
    }

    /// Entries given as field elements, row-major.
    pub fn from_elements(&self, entries: &[FieldElement]) -> MatrixElement {
        let packed: Vec<u16> = entries.iter().map(|e| e.to_packed() as u16).collect();
        self.canonical(MatrixElement::from_packed(self.dim, &packed))
    }

    /// Representative of `{M, -M}` with the smaller packing; `M` itself
    /// outside the projective case or in characteristic 2.
    pub fn canonical(&self, m: MatrixElement) -> MatrixElement {
        if !self.projective || self.ctx().characteristic() == 2 {
            return m;
        }
        let mut neg = m;
        for e in &mut neg.entries[..self.dim * self.dim] {
            *e = self.tables.neg(*e);
        }
        m.min(neg)
    }

    pub fn mul(&self, a: &MatrixElement, b: &MatrixElement) -> MatrixElement {
        let d = self.dim;
        let t = &*self.tables;
        let mut out = MatrixElement {
            dim: d as u8,
            entries: [0; MAX_DIM * MAX_DIM],
        };
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0u16;
                for l in 0..d {
                    let x = a.entries[i * d + l];
                    if x != 0 {
                        acc = t.add(acc, t.mul(x, b.entries[l * d + j]));
                    }
                }
                out.entries[i * d + j] = acc;
            }
        }
        self.canonical(out)
    }

    pub fn is_identity(&self, m: &MatrixElement) -> bool {
        *m == self.identity()
    }

    /// Determinant of a 2x2 matrix.
    pub fn det2(&self, m: &MatrixElement) -> u16 {
        assert_eq!(self.dim, 2);
        let t = &*self.tables;
        t.sub(t.mul(m.get(0, 0), m.get(1, 1)), t.mul(m.get(0, 1), m.get(1, 0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::field_make;

    fn arith(p: u64, k: u32, dim: usize, projective: bool) -> MatrixArith {
        let f = field_make(p, k).unwrap();
        MatrixArith::new(Arc::new(FieldTables::new(&f).unwrap()), dim, projective)
    }

    #[test]
    fn identity_is_neutral() {
        let a = arith(2, 3, 4, false);
        let m = MatrixElement::from_packed(4, &[1, 0, 0, 0, 3, 1, 0, 0, 5, 2, 1, 0, 7, 6, 3, 1]);
        assert_eq!(a.mul(&m, &a.identity()), m);
        assert_eq!(a.mul(&a.identity(), &m), m);
    }

    #[test]
    fn projective_canonical_picks_smaller() {
        let a = arith(7, 1, 2, true);
        // -I = diag(6, 6) has I as its smaller representative
        let minus_i = MatrixElement::from_packed(2, &[6, 0, 0, 6]);
        assert_eq!(a.canonical(minus_i), a.identity());
        let m = MatrixElement::from_packed(2, &[3, 1, 6, 5]);
        let neg = MatrixElement::from_packed(2, &[4, 6, 1, 2]);
        assert_eq!(a.canonical(m), m);
        assert_eq!(a.canonical(neg), m);
        assert_eq!(a.det2(&m), (15 - 6) % 7);
    }

    #[test]
    fn mul_matches_hand_computation_over_gf3() {
        let a = arith(3, 1, 2, false);
        let x = MatrixElement::from_packed(2, &[1, 1, 0, 1]);
        let y = MatrixElement::from_packed(2, &[1, 0, 1, 1]);
        // [[1,1],[0,1]] [[1,0],[1,1]] = [[2,1],[1,1]]
        assert_eq!(a.mul(&x, &y), MatrixElement::from_packed(2, &[2, 1, 1, 1]));
    }
}
