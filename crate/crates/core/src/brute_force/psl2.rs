use std::collections::HashSet;
use std::sync::Arc;

use super::group::MatrixGroup;
use super::matrix::{MatrixArith, MatrixElement};
use super::{BruteForceError, BruteForceGroup};
use crate::closed_form::GroupSpec;
use crate::finite_field::{field_make, FieldElement, FieldTables};

pub const PSL2_BRUTE_FORCE_MAX_Q: u64 = 13;

pub(crate) fn psl2_arith(spec: &GroupSpec) -> Result<MatrixArith, BruteForceError> {
    let ctx = field_make(spec.p, spec.k)?;
    Ok(MatrixArith::new(Arc::new(FieldTables::new(&ctx)?), 2, true))
}

/// `x(t^i) = [[1, t^i], [0, 1]]` and `y(t^i) = [[1, 0], [t^i, 1]]` for `i < k`;
/// the `t^i` span GF(q) additively, so these generate SL(2,q).
pub(crate) fn psl2_generators(arith: &MatrixArith) -> Vec<MatrixElement> {
    let ctx = arith.ctx();
    let t = FieldElement::generator(ctx);
    let mut gens = Vec::new();
    for i in 0..ctx.degree() {
        let a = t.pow(i as u64).to_packed() as u16;
        gens.push(arith.canonical(MatrixElement::from_packed(2, &[1, a, 0, 1])));
        gens.push(arith.canonical(MatrixElement::from_packed(2, &[1, 0, a, 1])));
    }
    gens
}

/// All of PSL(2,q) by listing SL(2,q) and identifying `M` with `-M`.
pub fn enumerate_psl2(q: u64) -> Result<BruteForceGroup, BruteForceError> {
    let spec = GroupSpec::psl2(q)?;
    if q > PSL2_BRUTE_FORCE_MAX_Q {
        return Err(BruteForceError::Unsupported { q });
    }
    let arith = psl2_arith(&spec)?;
    let t = arith.tables();
    let size = q as u16;
    let mut seen = HashSet::new();
    let mut elements = Vec::with_capacity(spec.group_order as usize);
    let mut push = |m: MatrixElement| {
        let m = arith.canonical(m);
        if seen.insert(m) {
            elements.push(m);
        }
    };
    for a in 0..size {
        for b in 0..size {
            for c in 0..size {
                if a != 0 {
                    // d = (1 + bc) / a
                    let d = t.mul(t.add(1, t.mul(b, c)), t.inv(a));
                    push(MatrixElement::from_packed(2, &[a, b, c, d]));
                } else if b != 0 && c == t.neg(t.inv(b)) {
                    for d in 0..size {
                        push(MatrixElement::from_packed(2, &[a, b, c, d]));
                    }
                }
            }
        }
    }
    debug_assert!(elements.iter().all(|m| arith.det2(m) == 1));
    let gens = psl2_generators(&arith);
    let group = MatrixGroup::from_elements(arith, elements, &gens)?;
    BruteForceGroup::new(spec, group)
}

impl BruteForceGroup {
    /// PSL(2,q): the unipotent subgroup `{[[1, b], [0, 1]]}` of order q.
    pub fn psl2_unipotent(&self) -> Vec<usize> {
        let arith = self.arith();
        let mut members: Vec<usize> = (0..self.spec().q as u16)
            .map(|b| {
                let m = arith.canonical(MatrixElement::from_packed(2, &[1, b, 0, 1]));
                self.index_of(&m).expect("unipotent element present")
            })
            .collect();
        members.sort_unstable();
        members
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(enumerate_psl2(4).unwrap().order(), 60);
        assert_eq!(enumerate_psl2(5).unwrap().order(), 60);
        assert_eq!(enumerate_psl2(7).unwrap().order(), 168);
    }

    #[test]
    fn unsupported_q() {
        assert!(matches!(
            enumerate_psl2(16),
            Err(BruteForceError::Unsupported { q: 16 })
        ));
        assert!(matches!(enumerate_psl2(3), Err(BruteForceError::Group(_))));
    }

    #[test]
    fn psl2_7_classes() {
        let g = enumerate_psl2(7).unwrap();
        assert_eq!(g.class_sizes(), vec![1, 21, 24, 24, 42, 56]);
    }

    #[test]
    fn unipotent_subgroup() {
        let g = enumerate_psl2(9).unwrap();
        let k = g.psl2_unipotent();
        assert_eq!(k.len(), 9);
        assert!(g.is_subgroup(&k));
    }

    #[test]
    fn cyclic_l_in_psl2_7() {
        let g = enumerate_psl2(7).unwrap();
        let l = g.find_cyclic_subgroup(4).unwrap();
        assert_eq!(l.len(), 4);
        for &x in &l {
            let class = g.class_of(x);
            let meet: Vec<usize> = l.iter().copied().filter(|&y| g.class_of(y) == class).collect();
            let mut expected = vec![x, g.inverse(x)];
            expected.sort_unstable();
            expected.dedup();
            assert_eq!(meet, expected);
        }
        assert!(matches!(
            g.find_cyclic_subgroup(5),
            Err(BruteForceError::NoElementOfOrder(5))
        ));
        assert!(matches!(
            g.find_cyclic_subgroup(6),
            Err(BruteForceError::NoElementOfOrder(6))
        ));
    }
}
