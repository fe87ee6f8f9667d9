use std::sync::Arc;

use super::group::MatrixGroup;
use super::matrix::{MatrixArith, MatrixElement};
use super::{BruteForceError, BruteForceGroup};
use crate::closed_form::GroupSpec;
use crate::finite_field::{field_make, FieldElement, FieldError, FieldTables};

/// Rough peak memory of enumerating Sz(32) (32,537,600 elements plus index).
pub const SZ32_MEMORY_ESTIMATE: &str = "3 GiB";

/// The lower unitriangular matrix `(α, β)` of the Sylow 2-subgroup `K`:
///
/// ```text
/// 1                   0    0  0
/// α                   1    0  0
/// α^(1+r) + β         α^r  1  0
/// α^(2+r) + αβ + β^r  β    α  1
/// ```
///
/// with `(α,β)(γ,δ) = (α+γ, αγ^r + β + δ)`.
pub fn suzuki_unipotent(
    alpha: &FieldElement,
    beta: &FieldElement,
) -> Result<MatrixElement, BruteForceError> {
    if alpha.ctx() != beta.ctx() {
        return Err(FieldError::ContextMismatch.into());
    }
    let ctx = alpha.ctx();
    let alpha_r = alpha.frobenius_r()?;
    let beta_r = beta.frobenius_r()?;
    let zero = FieldElement::zero(ctx);
    let one = FieldElement::one(ctx);
    let a1r = alpha * &alpha_r;
    let entries = [
        one.clone(),
        zero.clone(),
        zero.clone(),
        zero.clone(),
        alpha.clone(),
        one.clone(),
        zero.clone(),
        zero.clone(),
        &a1r + beta,
        alpha_r,
        one.clone(),
        zero.clone(),
        &(&(alpha * &a1r) + &(alpha * beta)) + &beta_r,
        beta.clone(),
        alpha.clone(),
        one,
    ];
    let packed: Vec<u16> = entries.iter().map(|e| e.to_packed() as u16).collect();
    Ok(MatrixElement::from_packed(4, &packed))
}

/// `diag(λ^(1+r/2), λ^(r/2), λ^(-r/2), λ^(-1-r/2))`, which normalizes `K`.
fn torus_element(lambda: &FieldElement, r: u64) -> Result<MatrixElement, BruteForceError> {
    let half = r / 2;
    let inv = lambda.inv()?;
    let diag = [
        lambda.pow(1 + half),
        lambda.pow(half),
        inv.pow(half),
        inv.pow(1 + half),
    ];
    let mut packed = [0u16; 16];
    for (i, d) in diag.iter().enumerate() {
        packed[i * 4 + i] = d.to_packed() as u16;
    }
    Ok(MatrixElement::from_packed(4, &packed))
}

/// The antidiagonal permutation matrix.
fn antidiagonal() -> MatrixElement {
    MatrixElement::from_packed(4, &[0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0])
}

pub(crate) fn sz_arith(spec: &GroupSpec) -> Result<MatrixArith, BruteForceError> {
    let ctx = field_make(2, spec.k)?;
    Ok(MatrixArith::new(Arc::new(FieldTables::new(&ctx)?), 4, false))
}

/// Generator sets tried in order: two unipotents with the antidiagonal
/// involution, then the same with a torus element adjoined.
pub(crate) fn sz_generator_sets(arith: &MatrixArith) -> Result<Vec<Vec<MatrixElement>>, BruteForceError> {
    let ctx = arith.ctx();
    let zero = FieldElement::zero(ctx);
    let one = FieldElement::one(ctx);
    let t = FieldElement::generator(ctx);
    let base = vec![
        suzuki_unipotent(&one, &zero)?,
        suzuki_unipotent(&t, &zero)?,
        antidiagonal(),
    ];
    let mut with_torus = base.clone();
    with_torus.push(torus_element(&t, ctx.suzuki_r()?)?);
    Ok(vec![base, with_torus])
}

/// Sz(q) as a subgroup of SL(4,q), by closure from generators.
///
/// `q = 8` is always available; `q = 32` requires `allow_large`. The closure
/// must have order `q^2 (q-1) (q^2+1)` exactly.
pub fn generate_sz(q: u64, allow_large: bool) -> Result<BruteForceGroup, BruteForceError> {
    let spec = GroupSpec::sz(q)?;
    match q {
        8 => {}
        32 if allow_large => {}
        32 => return Err(BruteForceError::LargeGroupNotEnabled),
        _ => return Err(BruteForceError::Unsupported { q }),
    }
    let arith = sz_arith(&spec)?;
    let limit = spec.group_order as usize;
    let mut last_err = None;
    for gens in sz_generator_sets(&arith)? {
        match MatrixGroup::closure(arith.clone(), &gens, limit) {
            Ok(group) if group.order() == limit => return BruteForceGroup::new(spec, group),
            Ok(group) => {
                last_err = Some(BruteForceError::OrderMismatch {
                    expected: spec.group_order,
                    found: group.order() as u128,
                })
            }
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.expect("at least one generator set"))
}

impl BruteForceGroup {
    /// Sz(q): index of `(α, β)`.
    pub fn sz_unipotent_index(&self, alpha: u64, beta: u64) -> Result<usize, BruteForceError> {
        let ctx = self.arith().ctx();
        let m = suzuki_unipotent(
            &FieldElement::from_packed(ctx, alpha)?,
            &FieldElement::from_packed(ctx, beta)?,
        )?;
        self.index_of(&m)
            .ok_or_else(|| BruteForceError::Invalid(format!("({alpha},{beta}) not in group")))
    }

    /// Sz(q): the Sylow 2-subgroup `K = {(α, β)}`, ascending.
    pub fn sz_kernel(&self) -> Result<Vec<usize>, BruteForceError> {
        let q = self.spec().q;
        let mut members = Vec::with_capacity((q * q) as usize);
        for a in 0..q {
            for b in 0..q {
                members.push(self.sz_unipotent_index(a, b)?);
            }
        }
        members.sort_unstable();
        Ok(members)
    }

    /// Sz(q): the centre `Z(K) = {(0, β)}`, ascending.
    pub fn sz_center(&self) -> Result<Vec<usize>, BruteForceError> {
        let mut members = (0..self.spec().q)
            .map(|b| self.sz_unipotent_index(0, b))
            .collect::<Result<Vec<_>, _>>()?;
        members.sort_unstable();
        Ok(members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::FieldTables;

    fn gf8_arith() -> MatrixArith {
        let f = field_make(2, 3).unwrap();
        MatrixArith::new(Arc::new(FieldTables::new(&f).unwrap()), 4, false)
    }

    #[test]
    fn zero_pair_is_identity() {
        let f = field_make(2, 3).unwrap();
        let z = FieldElement::zero(&f);
        assert_eq!(suzuki_unipotent(&z, &z).unwrap(), gf8_arith().identity());
    }

    #[test]
    fn center_elements_are_involutions() {
        let f = field_make(2, 3).unwrap();
        let arith = gf8_arith();
        let z = FieldElement::zero(&f);
        for beta in FieldElement::all(&f).skip(1) {
            let m = suzuki_unipotent(&z, &beta).unwrap();
            assert_ne!(m, arith.identity());
            assert_eq!(arith.mul(&m, &m), arith.identity());
        }
    }

    #[test]
    fn rejects_non_suzuki_fields() {
        let f = field_make(3, 2).unwrap();
        let one = FieldElement::one(&f);
        assert!(matches!(
            suzuki_unipotent(&one, &one),
            Err(BruteForceError::Field(FieldError::NotSuzukiField { .. }))
        ));
        let f4 = field_make(2, 2).unwrap();
        let one4 = FieldElement::one(&f4);
        assert!(suzuki_unipotent(&one4, &one4).is_err());
    }

    #[test]
    fn torus_normalizes_kernel() {
        let f = field_make(2, 3).unwrap();
        let arith = gf8_arith();
        let t = FieldElement::generator(&f);
        let d = torus_element(&t, 4).unwrap();
        let d_inv = torus_element(&t.inv().unwrap(), 4).unwrap();
        assert_eq!(arith.mul(&d, &d_inv), arith.identity());
        let kernel: std::collections::HashSet<MatrixElement> = FieldElement::all(&f)
            .flat_map(|a| {
                FieldElement::all(&f)
                    .map(move |b| (a.clone(), b))
                    .collect::<Vec<_>>()
            })
            .map(|(a, b)| suzuki_unipotent(&a, &b).unwrap())
            .collect();
        for u in &kernel {
            assert!(kernel.contains(&arith.mul(&arith.mul(&d_inv, u), &d)));
        }
    }

    #[test]
    fn gating() {
        assert!(matches!(
            generate_sz(32, false),
            Err(BruteForceError::LargeGroupNotEnabled)
        ));
        assert!(matches!(
            generate_sz(128, true),
            Err(BruteForceError::Unsupported { q: 128 })
        ));
        assert!(matches!(generate_sz(16, false), Err(BruteForceError::Group(_))));
    }
}
