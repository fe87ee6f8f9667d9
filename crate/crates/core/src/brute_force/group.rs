use std::collections::{HashMap, HashSet, VecDeque};

use super::matrix::{MatrixArith, MatrixElement};
use super::BruteForceError;

/// An explicitly enumerated matrix group.
///
/// Elements are addressed by index. Conjugacy classes are computed once at
/// construction from the generator set.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    arith: MatrixArith,
    elements: Vec<MatrixElement>,
    index: HashMap<MatrixElement, u32>,
    generators: Vec<usize>,
    generator_inverses: Vec<usize>,
    identity: usize,
    classes: Vec<Vec<usize>>,
    class_of: Vec<u32>,
}

/// Result of checking `|N_G(H)| = |h^G ∩ H| · |C_G(h)|` on every `h ≠ 1` in `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiReport {
    pub subgroup_order: usize,
    pub normalizer_order: usize,
    pub rows: Vec<TiRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TiRow {
    pub element: usize,
    pub conjugates_in_subgroup: usize,
    pub centralizer_order: usize,
}

impl TiReport {
    pub fn holds(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.conjugates_in_subgroup * r.centralizer_order == self.normalizer_order)
    }

    /// `[N_G(H) : H]`.
    pub fn normalizer_index(&self) -> usize {
        self.normalizer_order / self.subgroup_order
    }
}

impl MatrixGroup {
    /// Closes `generators` under multiplication, breadth first.
    ///
    /// Fails with [`BruteForceError::ResourceLimit`] once more than `limit`
    /// elements have been found.
    pub fn closure(
        arith: MatrixArith,
        generators: &[MatrixElement],
        limit: usize,
    ) -> Result<Self, BruteForceError> {
        let identity = arith.identity();
        let mut elements = vec![identity];
        let mut index: HashMap<MatrixElement, u32> = HashMap::from([(identity, 0)]);
        let mut cursor = 0;
        while cursor < elements.len() {
            let x = elements[cursor];
            cursor += 1;
            for g in generators {
                let y = arith.mul(&x, g);
                if !index.contains_key(&y) {
                    if elements.len() == limit {
                        return Err(BruteForceError::ResourceLimit { limit });
                    }
                    index.insert(y, elements.len() as u32);
                    elements.push(y);
                }
            }
        }
        Self::assemble(arith, elements, index, generators)
    }

    /// Wraps an already enumerated element list. `generators` must generate
    /// the whole list; this is checked.
    pub fn from_elements(
        arith: MatrixArith,
        elements: Vec<MatrixElement>,
        generators: &[MatrixElement],
    ) -> Result<Self, BruteForceError> {
        let mut index = HashMap::with_capacity(elements.len());
        for (i, m) in elements.iter().enumerate() {
            if index.insert(*m, i as u32).is_some() {
                return Err(BruteForceError::Invalid(format!("duplicate element {m:?}")));
            }
        }
        let expected = elements.len();
        let group = Self::assemble(arith, elements, index, generators)?;
        let generated = Self::closure(group.arith.clone(), generators, expected)?.order();
        if generated != expected {
            return Err(BruteForceError::OrderMismatch {
                expected: expected as u128,
                found: generated as u128,
            });
        }
        Ok(group)
    }

    fn assemble(
        arith: MatrixArith,
        elements: Vec<MatrixElement>,
        index: HashMap<MatrixElement, u32>,
        generators: &[MatrixElement],
    ) -> Result<Self, BruteForceError> {
        let identity = *index
            .get(&arith.identity())
            .ok_or_else(|| BruteForceError::Invalid("identity missing".into()))?
            as usize;
        let generators = generators
            .iter()
            .map(|g| {
                index.get(g).map(|&i| i as usize).ok_or_else(|| {
                    BruteForceError::Invalid(format!("generator {g:?} not in the group"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut group = MatrixGroup {
            arith,
            elements,
            index,
            generators,
            generator_inverses: Vec::new(),
            identity,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        group.generator_inverses = group.generators.iter().map(|&g| group.inverse(g)).collect();
        group.classes = conjugacy_classes(&group);
        group.class_of = vec![0; group.order()];
        for (c, class) in group.classes.iter().enumerate() {
            for &x in class {
                group.class_of[x] = c as u32;
            }
        }
        Ok(group)
    }

    pub fn arith(&self) -> &MatrixArith {
        &self.arith
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[MatrixElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &MatrixElement {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &MatrixElement) -> Option<usize> {
        self.index.get(m).map(|&i| i as usize)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let m = self.arith.mul(&self.elements[a], &self.elements[b]);
        self.index[&m] as usize
    }

    /// Smallest `n >= 1` with `x^n = 1`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut n = 1;
        while acc != self.identity {
            acc = self.mul(acc, x);
            n += 1;
        }
        n
    }

    pub fn inverse(&self, x: usize) -> usize {
        let mut prev = self.identity;
        let mut acc = x;
        while acc != self.identity {
            prev = acc;
            acc = self.mul(acc, x);
        }
        prev
    }

    /// `g^-1 x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverse(g), x), g)
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    pub fn class_size(&self, x: usize) -> usize {
        self.classes[self.class_of(x)].len()
    }

    /// One size per class, ascending.
    pub fn class_sizes(&self) -> Vec<u128> {
        let mut sizes: Vec<u128> = self.classes.iter().map(|c| c.len() as u128).collect();
        sizes.sort_unstable();
        sizes
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        let (x, y) = (&self.elements[a], &self.elements[b]);
        self.arith.mul(x, y) == self.arith.mul(y, x)
    }

    /// `C_G(x)` by direct scan, ascending.
    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        (0..self.order()).filter(|&g| self.commutes(x, g)).collect()
    }

    pub fn centralizer_order(&self, x: usize) -> usize {
        (0..self.order()).filter(|&g| self.commutes(x, g)).count()
    }

    /// Contains the identity and is closed under multiplication.
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let set: HashSet<usize> = subset.iter().copied().collect();
        set.contains(&self.identity)
            && subset
                .iter()
                .all(|&a| subset.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    /// `<x>`, ascending.
    pub fn cyclic_closure(&self, x: usize) -> Vec<usize> {
        let mut members = vec![self.identity];
        let mut acc = x;
        while acc != self.identity {
            members.push(acc);
            acc = self.mul(acc, x);
        }
        members.sort_unstable();
        members
    }

    /// Cyclic subgroup generated by the element of exact order `order` whose
    /// matrix is least in the canonical ordering.
    pub fn find_cyclic_subgroup(&self, order: usize) -> Result<Vec<usize>, BruteForceError> {
        if order == 0 || self.order() % order != 0 {
            return Err(BruteForceError::NoElementOfOrder(order));
        }
        let generator = (0..self.order())
            .filter(|&x| self.element_order(x) == order)
            .min_by_key(|&x| self.elements[x])
            .ok_or(BruteForceError::NoElementOfOrder(order))?;
        Ok(self.cyclic_closure(generator))
    }

    /// Elements `g` with `H^g = H`, given the conjugation images of `H`.
    ///
    /// Fails if some conjugate meets `H` in a proper nontrivial subgroup.
    fn ti_normalizer(&self, subgroup: &[usize]) -> Result<usize, BruteForceError> {
        let set: HashSet<usize> = subgroup.iter().copied().collect();
        let mut normalizer = 0;
        for g in 0..self.order() {
            let g_inv = self.inverse(g);
            let meet = subgroup
                .iter()
                .filter(|&&h| set.contains(&self.mul(self.mul(g_inv, h), g)))
                .count();
            if meet == subgroup.len() {
                normalizer += 1;
            } else if meet != 1 {
                return Err(BruteForceError::NotTi {
                    witness: g,
                    intersection: meet,
                });
            }
        }
        Ok(normalizer)
    }

    /// Checks that `subgroup` is TI and that `|N| = |h^G ∩ H| |C_G(h)|` for
    /// every non-identity `h` in it.
    pub fn verify_ti_lemma(&self, subgroup: &[usize]) -> Result<TiReport, BruteForceError> {
        if !self.is_subgroup(subgroup) {
            return Err(BruteForceError::NotSubgroup);
        }
        let normalizer_order = self.ti_normalizer(subgroup)?;
        let rows = subgroup
            .iter()
            .filter(|&&h| h != self.identity)
            .map(|&h| {
                let class = self.class_of(h);
                TiRow {
                    element: h,
                    conjugates_in_subgroup: subgroup
                        .iter()
                        .filter(|&&x| self.class_of(x) == class)
                        .count(),
                    centralizer_order: self.centralizer_order(h),
                }
            })
            .collect();
        Ok(TiReport {
            subgroup_order: subgroup.len(),
            normalizer_order,
            rows,
        })
    }
}

/// Conjugacy classes as orbits of `x -> g^-1 x g` over the generators `g`.
///
/// Classes are listed by least member; each class is sorted.
pub fn conjugacy_classes(group: &MatrixGroup) -> Vec<Vec<usize>> {
    let n = group.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut class = vec![start];
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for (&g, &g_inv) in group.generators.iter().zip(&group.generator_inverses) {
                let y = group.mul(group.mul(g_inv, x), g);
                if !seen[y] {
                    seen[y] = true;
                    class.push(y);
                    queue.push_back(y);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}
