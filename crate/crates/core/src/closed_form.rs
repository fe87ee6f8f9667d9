//! Closed-form conjugacy class sizes of PSL(2,q) and Sz(q).
//!
//! Each table is assembled from the classes meeting the subgroups `H`, `K`,
//! `L` (for PSL(2,q)) or `H`, `K`, `A1`, `A2` (for Sz(q)), whose non-identity
//! elements are pairwise non-conjugate.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numtheory::{checked_add, checked_mul, gcd, prime_power, ArithmeticError};

/// PSL(2,q) is supported for `q < PSL2_Q_LIMIT`.
pub const PSL2_Q_LIMIT: u64 = 1 << 20;
/// Sz(q) is supported for `q < SZ_Q_LIMIT`; class sizes are then below 2^75.
pub const SZ_Q_LIMIT: u64 = 1 << 15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("q must exceed 3 (got {0})")]
    QTooSmall(u64),
    #[error("q must be a prime power (got {0})")]
    NotPrimePower(u64),
    #[error("Sz(q) needs q = 2^m with m odd and m >= 3 (got {0})")]
    NotSuzukiParameter(u64),
    #[error("q = {q} is outside the supported range q < {limit}")]
    OutOfRange { q: u64, limit: u64 },
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error("class equation does not balance for {family} with q = {q}")]
    Unbalanced { family: Family, q: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Psl2,
    Sz,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Psl2 => "psl2",
            Family::Sz => "sz",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "psl2" | "psl" => Ok(Family::Psl2),
            "sz" | "suzuki" => Ok(Family::Sz),
            other => Err(format!("unknown family `{other}` (expected psl2 or sz)")),
        }
    }
}

/// A simple Zassenhaus group and its derived parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub q: u64,
    pub p: u64,
    pub k: u32,
    /// Order of the Frobenius kernel `K`; equals `q` for both families.
    pub n: u64,
    /// Order of the Frobenius complement `H`.
    pub e: u64,
    pub group_order: u128,
    /// PSL(2,q) only: order of the cyclic subgroup `L`.
    pub l_order: Option<u64>,
    /// Sz(q) only: `r = 2^((m+1)/2)`.
    pub r: Option<u64>,
    pub a1_order: Option<u64>,
    pub a2_order: Option<u64>,
}

impl GroupSpec {
    pub fn new(family: Family, q: u64) -> Result<Self, GroupError> {
        match family {
            Family::Psl2 => Self::psl2(q),
            Family::Sz => Self::sz(q),
        }
    }

    pub fn psl2(q: u64) -> Result<Self, GroupError> {
        if q <= 3 {
            return Err(GroupError::QTooSmall(q));
        }
        let (p, k) = prime_power(q).ok_or(GroupError::NotPrimePower(q))?;
        if q >= PSL2_Q_LIMIT {
            return Err(GroupError::OutOfRange {
                q,
                limit: PSL2_Q_LIMIT,
            });
        }
        let e = if q % 2 == 0 { q - 1 } else { (q - 1) / 2 };
        let l_order = (q + 1) / gcd(2, q + 1);
        let n = q as u128;
        // |G| = e n (n + 1)
        let group_order = checked_mul(
            checked_mul(e as u128, n, "|G|")?,
            n + 1,
            "|G|",
        )?;
        Ok(GroupSpec {
            family: Family::Psl2,
            q,
            p,
            k,
            n: q,
            e,
            group_order,
            l_order: Some(l_order),
            r: None,
            a1_order: None,
            a2_order: None,
        })
    }

    pub fn sz(q: u64) -> Result<Self, GroupError> {
        let (p, m) = prime_power(q).ok_or(GroupError::NotSuzukiParameter(q))?;
        if p != 2 || m < 3 || m % 2 == 0 {
            return Err(GroupError::NotSuzukiParameter(q));
        }
        if q >= SZ_Q_LIMIT {
            return Err(GroupError::OutOfRange {
                q,
                limit: SZ_Q_LIMIT,
            });
        }
        let r = 1u64 << ((m + 1) / 2);
        let qq = q as u128;
        let group_order = checked_mul(
            checked_mul(qq * qq, qq - 1, "|G|")?,
            qq * qq + 1,
            "|G|",
        )?;
        Ok(GroupSpec {
            family: Family::Sz,
            q,
            p,
            k: m,
            n: q,
            e: q - 1,
            group_order,
            l_order: None,
            r: Some(r),
            a1_order: Some(q + r + 1),
            a2_order: Some(q - r + 1),
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Psl2 => write!(f, "PSL(2,{})", self.q),
            Family::Sz => write!(f, "Sz({})", self.q),
        }
    }
}

/// The subgroup whose non-identity elements a class meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Origin {
    Identity,
    H,
    #[serde(rename = "H-involution")]
    HInvolution,
    K,
    #[serde(rename = "K-involution")]
    KInvolution,
    #[serde(rename = "K-noncenter")]
    KNoncenter,
    L,
    #[serde(rename = "L-involution")]
    LInvolution,
    A1,
    A2,
}

impl Origin {
    pub fn label(self) -> &'static str {
        match self {
            Origin::Identity => "Identity",
            Origin::H => "H",
            Origin::HInvolution => "H-involution",
            Origin::K => "K",
            Origin::KInvolution => "K-involution",
            Origin::KNoncenter => "K-noncenter",
            Origin::L => "L",
            Origin::LInvolution => "L-involution",
            Origin::A1 => "A1",
            Origin::A2 => "A2",
        }
    }
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub size: u128,
    pub mult: u64,
    pub origin: Origin,
}

/// Class sizes with multiplicities, sorted by size and then origin label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSizeTable {
    pub family: Family,
    pub q: u64,
    pub order: u128,
    pub entries: Vec<ClassEntry>,
}

impl ClassSizeTable {
    /// Builds a table from raw parts; zero-multiplicity entries are dropped.
    pub fn new(family: Family, q: u64, order: u128, entries: Vec<ClassEntry>) -> Self {
        let mut entries: Vec<ClassEntry> = entries.into_iter().filter(|e| e.mult > 0).collect();
        entries.sort_by(|a, b| {
            a.size
                .cmp(&b.size)
                .then_with(|| a.origin.label().cmp(b.origin.label()))
        });
        ClassSizeTable {
            family,
            q,
            order,
            entries,
        }
    }

    /// `Σ size · mult`, with overflow reported.
    pub fn total(&self) -> Result<u128, ArithmeticError> {
        self.entries.iter().try_fold(0u128, |acc, e| {
            let term = checked_mul(e.size, e.mult as u128, "class equation term")?;
            checked_add(acc, term, "class equation sum")
        })
    }

    pub fn class_count(&self) -> u64 {
        self.entries.iter().map(|e| e.mult).sum()
    }

    /// Distinct class sizes, ascending (including 1).
    pub fn distinct_sizes(&self) -> Vec<u128> {
        let mut sizes: Vec<u128> = self.entries.iter().map(|e| e.size).collect();
        sizes.dedup();
        sizes
    }

    /// One size per class, ascending.
    pub fn size_multiset(&self) -> Vec<u128> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat(e.size).take(e.mult as usize))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tables serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// True iff the class sizes sum to the group order.
pub fn check_class_equation(table: &ClassSizeTable) -> Result<bool, ArithmeticError> {
    Ok(table.total()? == table.order)
}

struct Builder(Vec<ClassEntry>);

impl Builder {
    fn new() -> Self {
        Builder(vec![ClassEntry {
            size: 1,
            mult: 1,
            origin: Origin::Identity,
        }])
    }

    fn push(&mut self, size: u128, mult: u64, origin: Origin) {
        if mult > 0 {
            self.0.push(ClassEntry { size, mult, origin });
        }
    }

    fn finish(self, spec: &GroupSpec) -> Result<ClassSizeTable, GroupError> {
        let table = ClassSizeTable::new(spec.family, spec.q, spec.group_order, self.0);
        if !check_class_equation(&table)? {
            return Err(GroupError::Unbalanced {
                family: spec.family,
                q: spec.q,
            });
        }
        Ok(table)
    }
}

/// Class sizes of PSL(2,q), q > 3.
pub fn psl2_table(q: u64) -> Result<ClassSizeTable, GroupError> {
    let spec = GroupSpec::psl2(q)?;
    let e = spec.e;
    let l = spec.l_order.expect("PSL2 has L");
    let (q128, e128) = (q as u128, e as u128);
    let eq = e128 * q128;
    let h_size = q128 * (q128 + 1);
    let mut b = Builder::new();
    if q % 2 == 0 {
        b.push(eq, (l - 1) / 2, Origin::L);
        b.push(q128 * q128 - 1, 1, Origin::KInvolution);
        b.push(h_size, (e - 1) / 2, Origin::H);
    } else if e % 2 == 1 {
        b.push(2 * eq, (l - 2) / 2, Origin::L);
        b.push(eq, 1, Origin::LInvolution);
        b.push(e128 * (q128 + 1), 2, Origin::K);
        b.push(h_size, (e - 1) / 2, Origin::H);
    } else {
        b.push(2 * eq, (l - 1) / 2, Origin::L);
        b.push(e128 * (q128 + 1), 2, Origin::K);
        b.push(h_size, (e - 2) / 2, Origin::H);
        b.push(h_size / 2, 1, Origin::HInvolution);
    }
    b.finish(&spec)
}

/// Class sizes of Sz(q), q = 2^m with m odd, m >= 3.
pub fn sz_table(q: u64) -> Result<ClassSizeTable, GroupError> {
    let spec = GroupSpec::sz(q)?;
    let r = spec.r.expect("Sz has r");
    let (q, r128) = (q as u128, r as u128);
    let q2 = q * q;
    let mut b = Builder::new();
    b.push(q2 * (q2 + 1), (spec.q - 2) / 2, Origin::H);
    b.push((q - 1) * (q2 + 1), 1, Origin::KInvolution);
    b.push(q * (q - 1) * (q2 + 1) / 2, 2, Origin::KNoncenter);
    b.push(q2 * (q - 1) * (q - r128 + 1), (spec.q + r) / 4, Origin::A1);
    b.push(q2 * (q - 1) * (q + r128 + 1), (spec.q - r) / 4, Origin::A2);
    b.finish(&spec)
}

/// Dispatches on the family.
pub fn class_table(family: Family, q: u64) -> Result<ClassSizeTable, GroupError> {
    match family {
        Family::Psl2 => psl2_table(q),
        Family::Sz => sz_table(q),
    }
}

/// Valid `q` for `family` in `lo..=hi`, ascending. The range is clipped to
/// the supported limits.
pub fn valid_q_in_range(family: Family, lo: u64, hi: u64) -> Vec<u64> {
    let limit = match family {
        Family::Psl2 => PSL2_Q_LIMIT,
        Family::Sz => SZ_Q_LIMIT,
    };
    let hi = hi.min(limit - 1);
    if lo > hi {
        return Vec::new();
    }
    (lo..=hi)
        .filter(|&q| GroupSpec::new(family, q).is_ok())
        .collect()
}
