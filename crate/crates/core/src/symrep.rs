//! Characters of the symmetric groups.
//!
//! Irreducibles and conjugacy classes of S_n are both indexed by partitions of n.
//! Character tables come from the Murnaghan–Nakayama rule and are cached per
//! degree; everything else (induction, inner products, permutation characters) is
//! computed from class functions and decomposed against the table.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{to_i64, Q};
use crate::partitions::{partitions_of, Partition};

static DEGREE_LIMIT: AtomicUsize = AtomicUsize::new(12);

pub fn degree_limit() -> usize {
    DEGREE_LIMIT.load(Ordering::Relaxed)
}

/// Sets the largest degree for which character tables may be built.
pub fn set_degree_limit(n: usize) {
    DEGREE_LIMIT.store(n, Ordering::Relaxed);
}

fn check_degree(n: usize) -> Result<()> {
    let limit = degree_limit();
    if n > limit {
        Err(Error::DegreeLimit { n, limit })
    } else {
        Ok(())
    }
}

/// χ_λ(μ) for all λ, μ ⊢ n. Rows and columns share the order of `partitions_of(n)`.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
    z: Vec<u128>,
    factorial: u128,
}

impl CharacterTable {
    fn build(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index = partitions.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|lam| partitions.iter().map(|mu| mn(lam.parts(), mu.parts(), &mut memo)).collect())
            .collect();
        let z = partitions.iter().map(Partition::z).collect();
        CharacterTable { n, partitions, index, values, z, factorial: (1..=n as u128).product() }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// χ_λ at cycle type μ.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        let (i, j) = (self.require(lambda)?, self.require(mu)?);
        Ok(self.values[i][j])
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.values[i]
    }

    /// Centraliser order of the `j`-th class.
    pub fn z(&self, j: usize) -> u128 {
        self.z[j]
    }

    pub fn class_size(&self, j: usize) -> u128 {
        self.factorial / self.z[j]
    }

    pub fn group_order(&self) -> u128 {
        self.factorial
    }

    fn require(&self, p: &Partition) -> Result<usize> {
        self.index_of(p).ok_or_else(|| {
            Error::InvalidArgument(format!("{} is not a partition of {}", p.pretty(), self.n))
        })
    }

    /// Decomposes an integer-valued class function given in class order.
    fn decompose_ints(&self, values: &[i128]) -> Result<BTreeMap<Partition, i64>> {
        let mut out = BTreeMap::new();
        for (i, lam) in self.partitions.iter().enumerate() {
            let mut num: i128 = 0;
            for (j, v) in values.iter().enumerate() {
                if *v != 0 {
                    num += self.values[i][j] as i128 * v * self.class_size(j) as i128;
                }
            }
            let order = self.factorial as i128;
            if num % order != 0 {
                return Err(Error::NonIntegral(format!("{}/{} at {}", num, order, lam.pretty())));
            }
            let m = i64::try_from(num / order).map_err(|_| Error::Overflow("decompose"))?;
            if m != 0 {
                out.insert(lam.clone(), m);
            }
        }
        Ok(out)
    }
}

/// Murnaghan–Nakayama on beta-sets, removing a rim hook of length `mu[0]`.
fn mn(lambda: &[usize], mu: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return i64::from(lambda.is_empty());
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let l = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut total = 0;
    for &b in &beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let nb = b - r;
        let height = beta.iter().filter(|&&c| nb < c && c < b).count();
        let mut new_beta: Vec<usize> = beta.iter().map(|&c| if c == b { nb } else { c }).collect();
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (l - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&parts, rest, memo);
    }
    memo.insert(key, total);
    total
}

static TABLES: LazyLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The character table of S_n, built once per process.
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    check_degree(n)?;
    if let Some(t) = TABLES.lock().expect("table cache poisoned").get(&n) {
        return Ok(t.clone());
    }
    let table = Arc::new(CharacterTable::build(n));
    Ok(TABLES.lock().expect("table cache poisoned").entry(n).or_insert(table).clone())
}

/// A rational-valued function on the cycle types of S_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, Q>,
}

impl ClassFunction {
    /// Every partition of `n` must be a key.
    pub fn new(n: usize, values: BTreeMap<Partition, Q>) -> Result<Self> {
        let expected = partitions_of(n);
        if values.len() != expected.len() || expected.iter().any(|p| !values.contains_key(p)) {
            return Err(Error::InvalidArgument(format!(
                "class function on S_{n} needs exactly the partitions of {n} as keys"
            )));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> Q) -> Self {
        let values = partitions_of(n).into_iter().map(|p| {
            let v = f(&p);
            (p, v)
        });
        ClassFunction { n, values: values.collect() }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| Q::zero())
    }

    pub fn irreducible(lambda: &Partition) -> Result<Self> {
        let t = character_table(lambda.size())?;
        let i = t.require(lambda)?;
        let row = t.row(i);
        Ok(Self::from_fn(lambda.size(), |mu| Q::from_integer(BigInt::from(row[t.index[mu]]))))
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| Q::from_integer(1.into()))
    }

    pub fn sign(n: usize) -> Self {
        Self::from_fn(n, |mu| Q::from_integer(BigInt::from(perm_sign_of_type(mu))))
    }

    /// The character of the regular representation.
    pub fn regular(n: usize) -> Self {
        let order: u128 = (1..=n as u128).product();
        Self::from_fn(n, |mu| {
            if mu.parts().iter().all(|&p| p == 1) {
                Q::from_integer(BigInt::from(order))
            } else {
                Q::zero()
            }
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn value(&self, mu: &Partition) -> Option<&Q> {
        self.values.get(mu)
    }

    pub fn values(&self) -> &BTreeMap<Partition, Q> {
        &self.values
    }

    /// Value at the identity.
    pub fn dimension(&self) -> Q {
        self.values[&Partition::column(self.n)].clone()
    }

    fn zip(&self, other: &Self, f: impl Fn(&Q, &Q) -> Q) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "class functions of degrees {} and {}",
                self.n, other.n
            )));
        }
        let values = self.values.iter().map(|(k, v)| (k.clone(), f(v, &other.values[k]))).collect();
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise (Kronecker) product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &Q) -> Self {
        let values = self.values.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        ClassFunction { n: self.n, values }
    }

    /// ⟨f, g⟩ = Σ_μ f(μ) g(μ) / z_μ (characters of S_n are real).
    pub fn inner(&self, other: &Self) -> Result<Q> {
        if self.n != other.n {
            return Err(Error::InvalidArgument("inner product across degrees".into()));
        }
        Ok(self
            .values
            .iter()
            .map(|(mu, v)| v * &other.values[mu] / Q::from_integer(BigInt::from(mu.z())))
            .sum())
    }
}

/// Sign of a permutation with cycle type `mu`.
pub fn perm_sign_of_type(mu: &Partition) -> i64 {
    let even_cycles = mu.parts().iter().filter(|&&p| p % 2 == 0).count();
    if even_cycles % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A virtual S_n-module: integer multiplicities of irreducibles (zeros omitted).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrrDecomposition {
    n: usize,
    mults: BTreeMap<Partition, i64>,
}

impl IrrDecomposition {
    pub fn new(n: usize, mults: BTreeMap<Partition, i64>) -> Result<Self> {
        if let Some(p) = mults.keys().find(|p| p.size() != n) {
            return Err(Error::InvalidArgument(format!("{} is not a partition of {n}", p.pretty())));
        }
        let mults = mults.into_iter().filter(|(_, m)| *m != 0).collect();
        Ok(IrrDecomposition { n, mults })
    }

    pub fn zero(n: usize) -> Self {
        IrrDecomposition { n, mults: BTreeMap::new() }
    }

    pub fn irreducible(lambda: Partition) -> Self {
        Self::irreducible_times(lambda, 1)
    }

    pub fn irreducible_times(lambda: Partition, m: i64) -> Self {
        let n = lambda.size();
        let mut mults = BTreeMap::new();
        if m != 0 {
            mults.insert(lambda, m);
        }
        IrrDecomposition { n, mults }
    }

    pub fn trivial(n: usize) -> Self {
        Self::irreducible(Partition::row(n))
    }

    pub fn sign(n: usize) -> Self {
        Self::irreducible(Partition::column(n))
    }

    /// The regular module: each S_λ with multiplicity dim S_λ.
    pub fn regular(n: usize) -> Self {
        let mults = partitions_of(n).into_iter().map(|p| {
            let d = p.dim() as i64;
            (p, d)
        });
        IrrDecomposition { n, mults: mults.collect() }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn mults(&self) -> &BTreeMap<Partition, i64> {
        &self.mults
    }

    pub fn get(&self, lambda: &Partition) -> i64 {
        self.mults.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.mults.values().all(|&m| m >= 0)
    }

    /// Σ mult · dim S_λ.
    pub fn dimension(&self) -> Result<i64> {
        self.mults.iter().try_fold(0i64, |acc, (p, &m)| {
            (p.dim() as i64).checked_mul(m).and_then(|x| acc.checked_add(x)).ok_or(Error::Overflow("dimension"))
        })
    }

    fn combine(&self, other: &Self, sign: i64) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "decompositions of degrees {} and {}",
                self.n, other.n
            )));
        }
        let mut mults = self.mults.clone();
        for (p, &m) in &other.mults {
            let e = mults.entry(p.clone()).or_insert(0);
            *e = m.checked_mul(sign).and_then(|x| e.checked_add(x)).ok_or(Error::Overflow("add"))?;
        }
        mults.retain(|_, m| *m != 0);
        Ok(IrrDecomposition { n: self.n, mults })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    pub fn scale(&self, c: i64) -> Result<Self> {
        let mut mults = BTreeMap::new();
        for (p, &m) in &self.mults {
            let v = m.checked_mul(c).ok_or(Error::Overflow("scale"))?;
            if v != 0 {
                mults.insert(p.clone(), v);
            }
        }
        Ok(IrrDecomposition { n: self.n, mults })
    }

    /// Rebuilds the class function Σ mult · χ_λ.
    pub fn character(&self) -> Result<ClassFunction> {
        let ints = self.character_ints()?;
        let t = character_table(self.n)?;
        Ok(ClassFunction::from_fn(self.n, |mu| Q::from_integer(BigInt::from(ints[t.index[mu]]))))
    }

    fn character_ints(&self) -> Result<Vec<i128>> {
        let t = character_table(self.n)?;
        let mut out = vec![0i128; t.partitions.len()];
        for (p, &m) in &self.mults {
            let row = t.row(t.require(p)?);
            for (o, &v) in out.iter_mut().zip(row) {
                *o += m as i128 * v as i128;
            }
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct MultEntry {
    partition: Partition,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct IrrDecompositionJson {
    n: usize,
    mults: Vec<MultEntry>,
}

impl Serialize for IrrDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mults = self.mults.iter().map(|(p, &m)| MultEntry { partition: p.clone(), mult: m }).collect();
        IrrDecompositionJson { n: self.n, mults }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IrrDecomposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = IrrDecompositionJson::deserialize(d)?;
        let mut mults = BTreeMap::new();
        for e in raw.mults {
            if mults.insert(e.partition.clone(), e.mult).is_some() {
                return Err(serde::de::Error::custom(format!("duplicate partition {}", e.partition.pretty())));
            }
        }
        IrrDecomposition::new(raw.n, mults).map_err(serde::de::Error::custom)
    }
}

/// Result of decomposing an arbitrary class function: exact rational
/// multiplicities, flagged when they do not describe a genuine module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub n: usize,
    pub mults: BTreeMap<Partition, Q>,
}

impl Decomposition {
    pub fn is_integral(&self) -> bool {
        self.mults.values().all(|m| m.is_integer())
    }

    /// Integral with all multiplicities ≥ 0.
    pub fn is_genuine(&self) -> bool {
        self.is_integral() && self.mults.values().all(|m| *m >= Q::zero())
    }

    /// True for classes that are only virtual (negative or non-integral multiplicities).
    pub fn is_virtual(&self) -> bool {
        !self.is_genuine()
    }

    /// The integral decomposition; negative entries are allowed.
    pub fn integral(&self) -> Result<IrrDecomposition> {
        let mut mults = BTreeMap::new();
        for (p, m) in &self.mults {
            let v = to_i64(m).ok_or_else(|| Error::NonIntegral(format!("{m} at {}", p.pretty())))?;
            mults.insert(p.clone(), v);
        }
        IrrDecomposition::new(self.n, mults)
    }

    /// The decomposition of a genuine module; errors on virtual input.
    pub fn genuine(&self) -> Result<IrrDecomposition> {
        let d = self.integral()?;
        if let Some((p, m)) = d.mults.iter().find(|(_, &m)| m < 0) {
            return Err(Error::NegativeMultiplicity(format!("{} has multiplicity {m}", p.pretty())));
        }
        Ok(d)
    }
}

/// ⟨f, χ_λ⟩ for every λ ⊢ n.
pub fn decompose(f: &ClassFunction) -> Result<Decomposition> {
    let t = character_table(f.n)?;
    let mut mults = BTreeMap::new();
    for (i, lam) in t.partitions.iter().enumerate() {
        let row = t.row(i);
        let m: Q = t
            .partitions
            .iter()
            .enumerate()
            .filter(|&(j, _)| row[j] != 0)
            .map(|(j, mu)| &f.values[mu] * Q::from_integer(BigInt::from(row[j])) / Q::from_integer(BigInt::from(t.z(j))))
            .sum();
        if !m.is_zero() {
            mults.insert(lam.clone(), m);
        }
    }
    Ok(Decomposition { n: f.n, mults })
}

type PairKey = (Partition, Partition);

static INDUCTION_MEMO: LazyLock<Mutex<HashMap<PairKey, Arc<BTreeMap<Partition, i64>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Ind from S_m × S_n to S_{m+n} of S_λ ⊠ S_μ.
fn induce_irreducibles(lambda: &Partition, mu: &Partition) -> Result<Arc<BTreeMap<Partition, i64>>> {
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = INDUCTION_MEMO.lock().expect("induction memo poisoned").get(&key) {
        return Ok(v.clone());
    }
    let (m, n) = (lambda.size(), mu.size());
    let total = character_table(m + n)?;
    let (ta, tb) = (character_table(m)?, character_table(n)?);
    let (ra, rb) = (ta.row(ta.require(lambda)?), tb.row(tb.require(mu)?));
    let values: Vec<i128> = total
        .partitions
        .iter()
        .map(|rho| {
            let mut acc = 0i128;
            for_each_split(rho, m, |alpha, beta, weight| {
                let a = ra[ta.index[alpha]] as i128;
                let b = rb[tb.index[beta]] as i128;
                acc += weight * a * b;
            });
            acc
        })
        .collect();
    let result = Arc::new(total.decompose_ints(&values)?);
    INDUCTION_MEMO.lock().expect("induction memo poisoned").insert(key, result.clone());
    Ok(result)
}

/// Calls `f(α, ρ∖α, Π_i C(m_i(ρ), m_i(α)))` for every sub-multiset α ⊆ ρ of size `m`.
fn for_each_split(rho: &Partition, m: usize, mut f: impl FnMut(&Partition, &Partition, i128)) {
    let mults: Vec<(usize, usize)> =
        rho.multiplicities().iter().enumerate().skip(1).filter(|(_, &c)| c > 0).map(|(i, &c)| (i, c)).collect();
    let mut chosen = vec![0usize; mults.len()];
    fn rec(
        k: usize,
        left: usize,
        mults: &[(usize, usize)],
        chosen: &mut Vec<usize>,
        f: &mut dyn FnMut(&Partition, &Partition, i128),
    ) {
        if k == mults.len() {
            if left != 0 {
                return;
            }
            let mut a = Vec::new();
            let mut b = Vec::new();
            let mut w = 1i128;
            for (&(part, c), &x) in mults.iter().zip(chosen.iter()) {
                a.extend(std::iter::repeat_n(part, x));
                b.extend(std::iter::repeat_n(part, c - x));
                w *= binomial(c, x) as i128;
            }
            f(&Partition::from_unsorted(a), &Partition::from_unsorted(b), w);
            return;
        }
        let (part, c) = mults[k];
        for x in 0..=c.min(left / part) {
            chosen[k] = x;
            rec(k + 1, left - x * part, mults, chosen, f);
        }
        chosen[k] = 0;
    }
    rec(0, m, &mults, &mut chosen, &mut f);
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Character-theoretic induction product (degreewise Day convolution).
pub fn induction_product(a: &IrrDecomposition, b: &IrrDecomposition) -> Result<IrrDecomposition> {
    let n = a.n + b.n;
    check_degree(n)?;
    let mut mults: BTreeMap<Partition, i64> = BTreeMap::new();
    for (lam, &x) in &a.mults {
        for (mu, &y) in &b.mults {
            let xy = x.checked_mul(y).ok_or(Error::Overflow("induction_product"))?;
            for (nu, &c) in induce_irreducibles(lam, mu)?.iter() {
                let e = mults.entry(nu.clone()).or_insert(0);
                *e = c.checked_mul(xy).and_then(|v| e.checked_add(v)).ok_or(Error::Overflow("induction_product"))?;
            }
        }
    }
    mults.retain(|_, m| *m != 0);
    Ok(IrrDecomposition { n, mults })
}

/// Internal tensor product.
pub fn kronecker(a: &IrrDecomposition, b: &IrrDecomposition) -> Result<IrrDecomposition> {
    if a.n != b.n {
        return Err(Error::InvalidArgument("kronecker product across degrees".into()));
    }
    let (x, y) = (a.character_ints()?, b.character_ints()?);
    let prod: Vec<i128> = x.iter().zip(&y).map(|(u, v)| u * v).collect();
    let t = character_table(a.n)?;
    Ok(IrrDecomposition { n: a.n, mults: t.decompose_ints(&prod)? })
}

/// M ⊗ sgn, i.e. conjugation of every label.
pub fn sign_twist(a: &IrrDecomposition) -> IrrDecomposition {
    IrrDecomposition { n: a.n, mults: a.mults.iter().map(|(p, &m)| (p.conjugate(), m)).collect() }
}

/// dim sgn_k ⊗_{S_k} M, the multiplicity of S_(1^k).
pub fn sgn_coinvariants(a: &IrrDecomposition) -> i64 {
    a.get(&Partition::column(a.n))
}

/// Which maps s → t a permutation character counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    All,
    Surjective,
    Injective,
}

/// A rational function on pairs of cycle types (σ ∈ S_s, τ ∈ S_t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiClassFunction {
    pub s: usize,
    pub t: usize,
    pub values: BTreeMap<(Partition, Partition), Q>,
}

impl BiClassFunction {
    pub fn from_fn(s: usize, t: usize, mut f: impl FnMut(&Partition, &Partition) -> Q) -> Self {
        let mut values = BTreeMap::new();
        for a in partitions_of(s) {
            for b in partitions_of(t) {
                let v = f(&a, &b);
                values.insert((a.clone(), b), v);
            }
        }
        BiClassFunction { s, t, values }
    }

    pub fn value(&self, alpha: &Partition, beta: &Partition) -> Option<&Q> {
        self.values.get(&(alpha.clone(), beta.clone()))
    }

    /// Value at (id, id).
    pub fn dimension(&self) -> Q {
        self.values[&(Partition::column(self.s), Partition::column(self.t))].clone()
    }

    /// Σ_{α,β} f(α,β) χ_λ(α) χ_μ(β) / (z_α z_β) for all λ ⊢ s, μ ⊢ t.
    pub fn decompose(&self) -> Result<BimodDecomposition> {
        let (ts, tt) = (character_table(self.s)?, character_table(self.t)?);
        let mut mults = BTreeMap::new();
        for (i, lam) in ts.partitions.iter().enumerate() {
            // Partial decomposition in the left variable first.
            let partial: Vec<Q> = tt
                .partitions
                .iter()
                .map(|beta| {
                    ts.partitions
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| ts.row(i)[j] != 0)
                        .map(|(j, alpha)| {
                            &self.values[&(alpha.clone(), beta.clone())] * Q::from_integer(BigInt::from(ts.row(i)[j]))
                                / Q::from_integer(BigInt::from(ts.z(j)))
                        })
                        .sum()
                })
                .collect();
            if partial.iter().all(Zero::is_zero) {
                continue;
            }
            for (k, mu) in tt.partitions.iter().enumerate() {
                let m: Q = partial
                    .iter()
                    .enumerate()
                    .filter(|&(j, v)| tt.row(k)[j] != 0 && !v.is_zero())
                    .map(|(j, v)| v * Q::from_integer(BigInt::from(tt.row(k)[j])) / Q::from_integer(BigInt::from(tt.z(j))))
                    .sum();
                if m.is_zero() {
                    continue;
                }
                let v = to_i64(&m).ok_or_else(|| {
                    Error::NonIntegral(format!("{m} at ({}, {})", lam.pretty(), mu.pretty()))
                })?;
                mults.insert((lam.clone(), mu.clone()), v);
            }
        }
        Ok(BimodDecomposition { s: self.s, t: self.t, mults })
    }
}

/// Integer multiplicities of S_λ ⊠ S_μ in a virtual S_s × S_t-module.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BimodDecomposition {
    pub s: usize,
    pub t: usize,
    pub mults: BTreeMap<(Partition, Partition), i64>,
}

impl BimodDecomposition {
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.mults.get(&(lambda.clone(), mu.clone())).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> i64 {
        self.mults.iter().map(|((a, b), &m)| m * a.dim() as i64 * b.dim() as i64).sum()
    }

    /// M ⊗_{S_s} S_λ as an S_t-module (symmetric-group modules are self-dual).
    pub fn tensor_left(&self, lambda: &Partition) -> IrrDecomposition {
        let mults = self.mults.iter().filter(|((a, _), _)| a == lambda).map(|((_, b), &m)| (b.clone(), m));
        IrrDecomposition { n: self.t, mults: mults.collect() }
    }

    /// S_μ ⊗_{S_t} M as an S_s-module.
    pub fn tensor_right(&self, mu: &Partition) -> IrrDecomposition {
        let mults = self.mults.iter().filter(|((_, b), _)| b == mu).map(|((a, _), &m)| (a.clone(), m));
        IrrDecomposition { n: self.s, mults: mults.collect() }
    }
}

/// fix(τ^ℓ) for τ of cycle type `beta`, restricted to the cycles selected by `mask`.
fn fixed_points_of_power(beta: &[usize], mask: u64, l: usize) -> u128 {
    beta.iter()
        .enumerate()
        .filter(|&(i, &d)| mask & (1 << i) != 0 && l.is_multiple_of(d))
        .map(|(_, &d)| d as u128)
        .sum()
}

fn all_maps_fixed(alpha: &Partition, beta: &Partition, mask: u64) -> u128 {
    alpha.parts().iter().map(|&l| fixed_points_of_power(beta.parts(), mask, l)).product()
}

/// Number of maps f: s → t with f∘σ = τ∘f, for σ, τ of cycle types α, β.
pub fn fixed_map_count(alpha: &Partition, beta: &Partition, kind: MapKind) -> i128 {
    let full = if beta.len() >= 64 { u64::MAX } else { (1u64 << beta.len()) - 1 };
    match kind {
        MapKind::All => all_maps_fixed(alpha, beta, full) as i128,
        MapKind::Surjective => {
            // Images of equivariant maps are unions of τ-cycles.
            let k = beta.len();
            (0..1u64 << k)
                .map(|mask| {
                    let missing = k - mask.count_ones() as usize;
                    let c = all_maps_fixed(alpha, beta, mask) as i128;
                    if missing.is_multiple_of(2) {
                        c
                    } else {
                        -c
                    }
                })
                .sum()
        }
        MapKind::Injective => {
            let (a, b) = (alpha.multiplicities(), beta.multiplicities());
            let mut count: i128 = 1;
            for (l, &al) in a.iter().enumerate().skip(1) {
                let bl = b.get(l).copied().unwrap_or(0);
                if al > bl {
                    return 0;
                }
                for i in 0..al {
                    count *= ((bl - i) * l) as i128;
                }
            }
            count
        }
    }
}

/// Joint character of S_s^op × S_t on the maps s → t of the given kind,
/// (σ, τ)·f = τ∘f∘σ^{-1}.
pub fn perm_character(s: usize, t: usize, kind: MapKind) -> BiClassFunction {
    BiClassFunction::from_fn(s, t, |a, b| Q::from_integer(BigInt::from(fixed_map_count(a, b, kind))))
}

/// The same character by enumerating all t^s maps; only for small sizes.
pub fn perm_character_enumerated(s: usize, t: usize, kind: MapKind) -> Result<BiClassFunction> {
    let total = (t as u128).checked_pow(s as u32).unwrap_or(u128::MAX);
    if total > 50_000_000 {
        return Err(Error::InvalidArgument(format!("{t}^{s} maps is too many to enumerate")));
    }
    let maps: Vec<Vec<usize>> = all_maps(s, t).filter(|f| map_is(f, t, kind)).collect();
    Ok(BiClassFunction::from_fn(s, t, |a, b| {
        let (sigma, tau) = (permutation_of_type(a), permutation_of_type(b));
        let fixed = maps.iter().filter(|f| (0..s).all(|x| f[sigma[x]] == tau[f[x]])).count();
        Q::from_integer(BigInt::from(fixed))
    }))
}

fn map_is(f: &[usize], t: usize, kind: MapKind) -> bool {
    match kind {
        MapKind::All => true,
        MapKind::Surjective => {
            let mut hit = vec![false; t];
            for &y in f {
                hit[y] = true;
            }
            hit.into_iter().all(|h| h)
        }
        MapKind::Injective => {
            let mut hit = vec![false; t];
            f.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
        }
    }
}

/// Every map {0..s} → {0..t} as an image vector, in lexicographic order.
pub fn all_maps(s: usize, t: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if t == 0 { usize::from(s == 0) } else { t.pow(s as u32) };
    (0..total).map(move |mut idx| {
        let mut f = vec![0; s];
        for x in (0..s).rev() {
            f[x] = idx % t;
            idx /= t;
        }
        f
    })
}

/// A permutation of {0..n} with the given cycle type, cycles on consecutive points.
pub fn permutation_of_type(mu: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(mu.size());
    let mut start = 0;
    for &l in mu.parts() {
        for i in 0..l {
            perm.push(start + (i + 1) % l);
        }
        start += l;
    }
    perm
}

pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for i in 0..perm.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_unsorted(parts)
}

pub fn sign_of(perm: &[usize]) -> i64 {
    perm_sign_of_type(&cycle_type(perm))
}

/// All permutations of {0..n} in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// `a ∘ b` (apply `b` first).
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_tables() {
        let t1 = character_table(1).unwrap();
        assert_eq!(t1.row(0), &[1]);
        let t2 = character_table(2).unwrap();
        // classes in order (2), (1,1)
        assert_eq!(t2.value(&p("2"), &p("1,1")).unwrap(), 1);
        assert_eq!(t2.value(&p("2"), &p("2")).unwrap(), 1);
        assert_eq!(t2.value(&p("1,1"), &p("2")).unwrap(), -1);
        let t3 = character_table(3).unwrap();
        let row: Vec<i64> =
            ["1,1,1", "2,1", "3"].iter().map(|c| t3.value(&p("2,1"), &p(c)).unwrap()).collect();
        assert_eq!(row, vec![2, 0, -1]);
    }

    #[test]
    fn degree_limit_is_enforced() {
        assert!(matches!(character_table(40), Err(Error::DegreeLimit { .. })));
    }

    #[test]
    fn decompose_examples() {
        let reg = decompose(&ClassFunction::regular(3)).unwrap().genuine().unwrap();
        assert_eq!(reg, IrrDecomposition::regular(3));
        assert_eq!(reg.get(&p("2,1")), 2);
        let triv = decompose(&ClassFunction::trivial(4)).unwrap().genuine().unwrap();
        assert_eq!(triv, IrrDecomposition::trivial(4));
        let twisted = ClassFunction::irreducible(&p("2,1")).unwrap().mul(&ClassFunction::sign(3)).unwrap();
        assert_eq!(decompose(&twisted).unwrap().genuine().unwrap(), IrrDecomposition::irreducible(p("2,1")));
        let virt = ClassFunction::trivial(3).sub(&ClassFunction::regular(3)).unwrap();
        let d = decompose(&virt).unwrap();
        assert!(d.is_virtual() && d.is_integral());
        assert!(d.genuine().is_err());
        let half = ClassFunction::trivial(2).scale(&crate::linalg::q_frac(1, 2));
        assert!(matches!(decompose(&half).unwrap().integral(), Err(Error::NonIntegral(_))));
    }

    #[test]
    fn pieri_example_and_unit() {
        let got = induction_product(&IrrDecomposition::trivial(1), &IrrDecomposition::trivial(1)).unwrap();
        assert_eq!(got, IrrDecomposition::regular(2));
        let a = IrrDecomposition::irreducible(p("2,1"));
        assert_eq!(induction_product(&a, &IrrDecomposition::trivial(0)).unwrap(), a);
    }

    #[test]
    fn sgn_coinvariant_examples() {
        assert_eq!(sgn_coinvariants(&IrrDecomposition::regular(4)), 1);
        assert_eq!(sgn_coinvariants(&IrrDecomposition::trivial(3)), 0);
        assert_eq!(sgn_coinvariants(&IrrDecomposition::irreducible(p("2,1"))), 0);
    }

    #[test]
    fn perm_character_examples() {
        let f = perm_character(1, 2, MapKind::All);
        assert_eq!(f.value(&p("1"), &p("1,1")).unwrap(), &crate::linalg::q(2));
        assert_eq!(f.value(&p("1"), &p("2")).unwrap(), &crate::linalg::q(0));
        let d = f.decompose().unwrap();
        assert_eq!(d.tensor_left(&p("1")), IrrDecomposition::regular(2));
        assert_eq!(perm_character(3, 2, MapKind::Surjective).dimension(), crate::linalg::q(6));
        for n in 0..=4 {
            let bij = perm_character(n, n, MapKind::Surjective).decompose().unwrap();
            let expected: BTreeMap<_, _> = partitions_of(n).into_iter().map(|l| ((l.clone(), l), 1)).collect();
            assert_eq!(bij.mults, expected);
        }
    }

    #[test]
    fn formulas_match_enumeration() {
        for s in 0..=4 {
            for t in 0..=4 {
                for kind in [MapKind::All, MapKind::Surjective, MapKind::Injective] {
                    assert_eq!(perm_character(s, t, kind), perm_character_enumerated(s, t, kind).unwrap());
                }
            }
        }
    }

    #[test]
    fn permutation_helpers() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(cycle_type(&permutation_of_type(&p("3,2,2,1"))), p("3,2,2,1"));
        assert_eq!(sign_of(&[1, 0, 2]), -1);
        assert_eq!(compose(&[1, 2, 0], &inverse(&[1, 2, 0])), vec![0, 1, 2]);
    }
}
