//! Grothendieck groups of FB-modules and FB-bimodules, truncated at a maximum degree.
//!
//! A class is a finite integer combination of partitions; the partition λ ⊢ n
//! stands for the irreducible S_n-module S_λ placed in degree n. Binary
//! operations first truncate both operands to the smaller truncation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::symrep::{induction_product, kronecker, BimodDecomposition, IrrDecomposition};

fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("virtual class"))
}

fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("virtual class"))
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, c: i64) -> Result<()> {
    if c == 0 {
        return Ok(());
    }
    let e = map.entry(key).or_insert(0);
    *e = checked_add(*e, c)?;
    Ok(())
}

/// A virtual FB-module in degrees ≤ `trunc`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VirtualFB {
    trunc: usize,
    coeffs: BTreeMap<Partition, i64>,
}

impl VirtualFB {
    pub fn new(trunc: usize, coeffs: BTreeMap<Partition, i64>) -> Result<Self> {
        if let Some(p) = coeffs.keys().find(|p| p.size() > trunc) {
            return Err(Error::InvalidArgument(format!(
                "{} exceeds the truncation degree {trunc}",
                p.pretty()
            )));
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| *c != 0).collect();
        Ok(VirtualFB { trunc, coeffs })
    }

    pub fn zero(trunc: usize) -> Self {
        VirtualFB { trunc, coeffs: BTreeMap::new() }
    }

    /// c·[S_λ]; zero when |λ| > trunc.
    pub fn monomial(trunc: usize, lambda: Partition, c: i64) -> Self {
        let mut v = Self::zero(trunc);
        if lambda.size() <= trunc && c != 0 {
            v.coeffs.insert(lambda, c);
        }
        v
    }

    /// A single S_n-module placed in degree n.
    pub fn from_degree(trunc: usize, d: &IrrDecomposition) -> Self {
        let mut v = Self::zero(trunc);
        if d.degree() <= trunc {
            v.coeffs = d.mults().clone();
        }
        v
    }

    /// The constant FB-module k: triv_n in every degree.
    pub fn triv(trunc: usize) -> Self {
        VirtualFB { trunc, coeffs: (0..=trunc).map(|n| (Partition::row(n), 1)).collect() }
    }

    /// sgn_k in degree k.
    pub fn sgn(k: usize, trunc: usize) -> Self {
        Self::monomial(trunc, Partition::column(k), 1)
    }

    /// k_0: the unit for Day convolution.
    pub fn unit(trunc: usize) -> Self {
        Self::monomial(trunc, Partition::empty(), 1)
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, i64> {
        &self.coeffs
    }

    pub fn get(&self, lambda: &Partition) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// All coefficients nonnegative.
    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// The degree-n component as an S_n-class.
    pub fn degree(&self, n: usize) -> IrrDecomposition {
        let mults = self.coeffs.iter().filter(|(p, _)| p.size() == n).map(|(p, &c)| (p.clone(), c)).collect();
        IrrDecomposition::new(n, mults).expect("degree filter keeps sizes equal")
    }

    /// Σ coeff · dim S_λ over λ ⊢ n.
    pub fn dimension(&self, n: usize) -> Result<i64> {
        self.degree(n).dimension()
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        let trunc = trunc.min(self.trunc);
        let coeffs = self.coeffs.iter().filter(|(p, _)| p.size() <= trunc).map(|(p, &c)| (p.clone(), c)).collect();
        VirtualFB { trunc, coeffs }
    }

    fn combine(&self, other: &Self, sign: i64) -> Result<Self> {
        let trunc = self.trunc.min(other.trunc);
        let mut out = self.truncate(trunc);
        for (p, &c) in &other.truncate(trunc).coeffs {
            accumulate(&mut out.coeffs, p.clone(), checked_mul(c, sign)?)?;
        }
        out.coeffs.retain(|_, c| *c != 0);
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    pub fn neg(&self) -> Self {
        VirtualFB { trunc: self.trunc, coeffs: self.coeffs.iter().map(|(p, &c)| (p.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (p, &c) in &self.coeffs {
            accumulate(&mut coeffs, p.clone(), checked_mul(c, k)?)?;
        }
        Ok(VirtualFB { trunc: self.trunc, coeffs })
    }

    fn nonzero_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.coeffs.keys().map(Partition::size).collect();
        d.dedup();
        d
    }

    /// Day convolution: degreewise induction products.
    pub fn day(&self, other: &Self) -> Result<Self> {
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(trunc);
        for m in self.nonzero_degrees() {
            for n in other.nonzero_degrees() {
                if m + n > trunc {
                    continue;
                }
                let prod = induction_product(&self.degree(m), &other.degree(n))?;
                for (p, &c) in prod.mults() {
                    accumulate(&mut out.coeffs, p.clone(), c)?;
                }
            }
        }
        out.coeffs.retain(|_, c| *c != 0);
        Ok(out)
    }

    /// Degreewise internal tensor product.
    pub fn pointwise(&self, other: &Self) -> Result<Self> {
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(trunc);
        for n in self.nonzero_degrees() {
            if n > trunc {
                continue;
            }
            let prod = kronecker(&self.degree(n), &other.degree(n))?;
            out.coeffs.extend(prod.mults().iter().map(|(p, &c)| (p.clone(), c)));
        }
        Ok(out)
    }
}

/// Σ_{t ≥ 0} (−1)^t [sgn_{k+t}], truncated; zero when k > trunc.
pub fn series_s(k: usize, trunc: usize) -> VirtualFB {
    let coeffs = (k..=trunc).map(|n| (Partition::column(n), if (n - k).is_multiple_of(2) { 1 } else { -1 })).collect();
    VirtualFB { trunc, coeffs }
}

/// H(0) = [k_0]; H(k) = Σ_{n ≥ k} [S_(n−k+1, 1^{k−1})] for k ≥ 1.
pub fn series_h(k: usize, trunc: usize) -> VirtualFB {
    if k == 0 {
        return VirtualFB::unit(trunc);
    }
    let coeffs = (k..=trunc)
        .map(|n| (crate::partitions::hook(n, k).expect("1 <= k <= n"), 1))
        .collect();
    VirtualFB { trunc, coeffs }
}

/// The inverse of − ⊙ triv: convolution with 𝒮(0).
pub fn invert_triv(a: &VirtualFB) -> Result<VirtualFB> {
    a.day(&series_s(0, a.trunc))
}

impl fmt::Display for VirtualFB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.coeffs.iter().map(|(p, c)| format!("{c}·S{}", p.pretty())).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for VirtualFB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VirtualFB[≤{}]({self})", self.trunc)
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffEntry {
    partition: Partition,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct VirtualFBJson {
    trunc: usize,
    coeffs: Vec<CoeffEntry>,
}

impl Serialize for VirtualFB {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self.coeffs.iter().map(|(p, &c)| CoeffEntry { partition: p.clone(), coeff: c }).collect();
        VirtualFBJson { trunc: self.trunc, coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for VirtualFB {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = VirtualFBJson::deserialize(d)?;
        let mut coeffs = BTreeMap::new();
        for e in raw.coeffs {
            if coeffs.insert(e.partition.clone(), e.coeff).is_some() {
                return Err(serde::de::Error::custom(format!("duplicate partition {}", e.partition.pretty())));
            }
        }
        VirtualFB::new(raw.trunc, coeffs).map_err(serde::de::Error::custom)
    }
}

/// A virtual FB-bimodule. The left index is the contravariant (domain) variable,
/// the right index the covariant one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VirtualFBBimod {
    trunc_left: usize,
    trunc_right: usize,
    coeffs: BTreeMap<(Partition, Partition), i64>,
}

impl VirtualFBBimod {
    pub fn new(trunc_left: usize, trunc_right: usize, coeffs: BTreeMap<(Partition, Partition), i64>) -> Result<Self> {
        if let Some((l, r)) = coeffs.keys().find(|(l, r)| l.size() > trunc_left || r.size() > trunc_right) {
            return Err(Error::InvalidArgument(format!(
                "({}, {}) exceeds the truncation ({trunc_left}, {trunc_right})",
                l.pretty(),
                r.pretty()
            )));
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| *c != 0).collect();
        Ok(VirtualFBBimod { trunc_left, trunc_right, coeffs })
    }

    pub fn zero(trunc_left: usize, trunc_right: usize) -> Self {
        VirtualFBBimod { trunc_left, trunc_right, coeffs: BTreeMap::new() }
    }

    /// External product a ⊠ b.
    pub fn boxtimes(left: &VirtualFB, right: &VirtualFB) -> Result<Self> {
        let mut out = Self::zero(left.trunc, right.trunc);
        for (l, &a) in &left.coeffs {
            for (r, &b) in &right.coeffs {
                out.coeffs.insert((l.clone(), r.clone()), checked_mul(a, b)?);
            }
        }
        Ok(out)
    }

    /// Places a bimodule decomposition at bidegree (s, t).
    pub fn from_bidegree(trunc_left: usize, trunc_right: usize, d: &BimodDecomposition) -> Self {
        let mut out = Self::zero(trunc_left, trunc_right);
        if d.s <= trunc_left && d.t <= trunc_right {
            out.coeffs = d.mults.clone();
        }
        out
    }

    pub fn trunc_left(&self) -> usize {
        self.trunc_left
    }

    pub fn trunc_right(&self) -> usize {
        self.trunc_right
    }

    pub fn coeffs(&self) -> &BTreeMap<(Partition, Partition), i64> {
        &self.coeffs
    }

    pub fn get(&self, left: &Partition, right: &Partition) -> i64 {
        self.coeffs.get(&(left.clone(), right.clone())).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// The component in bidegree (s, t).
    pub fn entry(&self, s: usize, t: usize) -> BimodDecomposition {
        let mults = self
            .coeffs
            .iter()
            .filter(|((l, r), _)| l.size() == s && r.size() == t)
            .map(|(k, &c)| (k.clone(), c))
            .collect();
        BimodDecomposition { s, t, mults }
    }

    /// Total dimension of the bidegree (s, t) component.
    pub fn dimension(&self, s: usize, t: usize) -> i64 {
        self.entry(s, t).dimension()
    }

    /// Only the components with left degree `s`.
    pub fn left_row(&self, s: usize) -> Self {
        let coeffs = self.coeffs.iter().filter(|((l, _), _)| l.size() == s).map(|(k, &c)| (k.clone(), c)).collect();
        VirtualFBBimod { trunc_left: self.trunc_left, trunc_right: self.trunc_right, coeffs }
    }

    /// M ⊗_{S_s} S_λ: the right-variable class paired with the left label λ.
    pub fn tensor_left(&self, lambda: &Partition) -> VirtualFB {
        let coeffs = self.coeffs.iter().filter(|((l, _), _)| l == lambda).map(|((_, r), &c)| (r.clone(), c)).collect();
        VirtualFB { trunc: self.trunc_right, coeffs }
    }

    /// S_μ ⊗_{S_t} M: the left-variable class paired with the right label μ.
    pub fn tensor_right(&self, mu: &Partition) -> VirtualFB {
        let coeffs = self.coeffs.iter().filter(|((_, r), _)| r == mu).map(|((l, _), &c)| (l.clone(), c)).collect();
        VirtualFB { trunc: self.trunc_left, coeffs }
    }

    /// Swaps the two variables.
    pub fn transpose(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|((l, r), &c)| ((r.clone(), l.clone()), c)).collect();
        VirtualFBBimod { trunc_left: self.trunc_right, trunc_right: self.trunc_left, coeffs }
    }

    pub fn truncate(&self, trunc_left: usize, trunc_right: usize) -> Self {
        let (tl, tr) = (trunc_left.min(self.trunc_left), trunc_right.min(self.trunc_right));
        let coeffs = self
            .coeffs
            .iter()
            .filter(|((l, r), _)| l.size() <= tl && r.size() <= tr)
            .map(|(k, &c)| (k.clone(), c))
            .collect();
        VirtualFBBimod { trunc_left: tl, trunc_right: tr, coeffs }
    }

    fn combine(&self, other: &Self, sign: i64) -> Result<Self> {
        let (tl, tr) = (self.trunc_left.min(other.trunc_left), self.trunc_right.min(other.trunc_right));
        let mut out = self.truncate(tl, tr);
        for (k, &c) in &other.truncate(tl, tr).coeffs {
            accumulate(&mut out.coeffs, k.clone(), checked_mul(c, sign)?)?;
        }
        out.coeffs.retain(|_, c| *c != 0);
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero(self.trunc_left, self.trunc_right);
        for (key, &c) in &self.coeffs {
            accumulate(&mut out.coeffs, key.clone(), checked_mul(c, k)?)?;
        }
        Ok(out)
    }

    /// Day convolution with `b` in the right (covariant) variable.
    pub fn convolve_right(&self, b: &VirtualFB) -> Result<Self> {
        let tr = self.trunc_right.min(b.trunc);
        let mut out = Self::zero(self.trunc_left, tr);
        for l in self.left_labels() {
            let slice = self.tensor_left(&l).truncate(tr).day(b)?;
            for (r, &c) in &slice.coeffs {
                accumulate(&mut out.coeffs, (l.clone(), r.clone()), c)?;
            }
        }
        out.coeffs.retain(|_, c| *c != 0);
        Ok(out)
    }

    /// Day convolution with `b` in the left (contravariant) variable.
    pub fn convolve_left(&self, b: &VirtualFB) -> Result<Self> {
        Ok(self.transpose().convolve_right(b)?.transpose())
    }

    fn left_labels(&self) -> Vec<Partition> {
        let mut v: Vec<Partition> = self.coeffs.keys().map(|(l, _)| l.clone()).collect();
        v.dedup();
        v
    }
}

impl fmt::Debug for VirtualFBBimod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.coeffs.iter().map(|((l, r), c)| format!("{c}·S{}⊠S{}", l.pretty(), r.pretty())).collect();
        write!(f, "VirtualFBBimod[≤{},≤{}]({})", self.trunc_left, self.trunc_right, terms.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct BimodEntry {
    left: Partition,
    right: Partition,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct VirtualFBBimodJson {
    trunc_left: usize,
    trunc_right: usize,
    coeffs: Vec<BimodEntry>,
}

impl Serialize for VirtualFBBimod {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|((l, r), &c)| BimodEntry { left: l.clone(), right: r.clone(), coeff: c })
            .collect();
        VirtualFBBimodJson { trunc_left: self.trunc_left, trunc_right: self.trunc_right, coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for VirtualFBBimod {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = VirtualFBBimodJson::deserialize(d)?;
        let mut coeffs = BTreeMap::new();
        for e in raw.coeffs {
            if coeffs.insert((e.left.clone(), e.right.clone()), e.coeff).is_some() {
                return Err(serde::de::Error::custom("duplicate bimodule entry"));
            }
        }
        VirtualFBBimod::new(raw.trunc_left, raw.trunc_right, coeffs).map_err(serde::de::Error::custom)
    }
}

/// Every irreducible of degree ≤ trunc with coefficient 1; handy for tests.
pub fn all_irreducibles(trunc: usize) -> VirtualFB {
    VirtualFB { trunc, coeffs: (0..=trunc).flat_map(partitions_of).map(|p| (p, 1)).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn class(trunc: usize, terms: &[(&str, i64)]) -> VirtualFB {
        VirtualFB::new(trunc, terms.iter().map(|(s, c)| (p(s), *c)).collect()).unwrap()
    }

    #[test]
    fn day_examples() {
        let a = class(4, &[("2,1", 3), ("1", -1)]);
        assert_eq!(VirtualFB::unit(4).day(&a).unwrap(), a);
        assert_eq!(VirtualFB::triv(6).day(&series_s(0, 6)).unwrap(), VirtualFB::unit(6));
        let sq = VirtualFB::sgn(1, 3).day(&VirtualFB::sgn(1, 3)).unwrap();
        assert_eq!(sq, class(3, &[("2", 1), ("1,1", 1)]));
    }

    #[test]
    fn pointwise_examples() {
        assert_eq!(VirtualFB::sgn(3, 3).pointwise(&VirtualFB::sgn(3, 3)).unwrap(), class(3, &[("3", 1)]));
        let s21 = class(3, &[("2,1", 1)]);
        assert_eq!(s21.pointwise(&VirtualFB::sgn(3, 3)).unwrap(), s21);
        let a = class(4, &[("2,2", 2), ("1", 1), ("", -1)]);
        assert_eq!(VirtualFB::triv(4).pointwise(&a).unwrap(), a);
    }

    #[test]
    fn series_examples() {
        assert_eq!(series_s(0, 2), class(2, &[("", 1), ("1", -1), ("1,1", 1)]));
        assert_eq!(series_s(2, 3), class(3, &[("1,1", 1), ("1,1,1", -1)]));
        assert_eq!(series_s(3, 3).get(&p("1,1,1")), 1);
        assert!(series_s(5, 3).is_zero());
        assert_eq!(series_h(0, 5), class(5, &[("", 1)]));
        assert_eq!(series_h(1, 3), class(3, &[("1", 1), ("2", 1), ("3", 1)]));
        assert_eq!(series_h(2, 4), class(4, &[("1,1", 1), ("2,1", 1), ("3,1", 1)]));
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(invert_triv(&VirtualFB::triv(7)).unwrap(), VirtualFB::unit(7));
        assert_eq!(invert_triv(&VirtualFB::unit(7)).unwrap(), series_s(0, 7));
        for k in 0..=5 {
            assert_eq!(invert_triv(&series_h(k, 6)).unwrap(), series_s(k, 6));
        }
    }

    #[test]
    fn truncation_takes_minimum() {
        let a = VirtualFB::triv(5);
        let b = VirtualFB::triv(3);
        let s = a.add(&b).unwrap();
        assert_eq!(s.trunc(), 3);
        assert_eq!(s.get(&p("3")), 2);
        assert!(VirtualFB::new(2, [(p("3"), 1)].into()).is_err());
    }

    #[test]
    fn bimodule_convolution() {
        let a = VirtualFBBimod::boxtimes(&class(3, &[("1", 2)]), &class(3, &[("1", 1), ("", 1)])).unwrap();
        assert_eq!(a.convolve_right(&VirtualFB::unit(3)).unwrap(), a);
        assert_eq!(a.convolve_left(&VirtualFB::unit(3)).unwrap(), a);
        let c = a.convolve_right(&VirtualFB::sgn(1, 3)).unwrap();
        assert_eq!(c.get(&p("1"), &p("2")), 2);
        assert_eq!(c.get(&p("1"), &p("1,1")), 2);
        assert_eq!(c.get(&p("1"), &p("1")), 2);
    }

    #[test]
    fn json_forms() {
        let a = class(2, &[("1", -1), ("", 1)]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"trunc":2,"coeffs":[{"partition":[],"coeff":1},{"partition":[1],"coeff":-1}]}"#);
        assert_eq!(serde_json::from_str::<VirtualFB>(&s).unwrap(), a);
        let b = VirtualFBBimod::boxtimes(&a, &VirtualFB::sgn(2, 2)).unwrap();
        let s = serde_json::to_string(&b).unwrap();
        assert!(s.contains(r#""left":[1],"right":[1,1],"coeff":-1"#));
        assert_eq!(serde_json::from_str::<VirtualFBBimod>(&s).unwrap(), b);
    }
}
