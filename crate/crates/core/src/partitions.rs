//! Integer partitions in canonical form.
//!
//! Partitions are ordered first by size and then reverse-lexicographically, so
//! that `partitions_of(3)` is `[(3), (2,1), (1,1,1)]` and a `BTreeMap` keyed by
//! partitions iterates in the same order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and strictly positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros; any multiset of part sizes is accepted.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition (n).
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition (1^n), indexing the sign representation.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// `Some(s)` when the partition is a hook (s, 1^{n-s}) of positive size.
    pub fn hook_arm(&self) -> Option<usize> {
        if self.is_empty() || self.parts[1..].iter().any(|&p| p != 1) {
            None
        } else {
            Some(self.parts[0])
        }
    }

    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// True iff the Young diagram of `mu` sits inside that of `self`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// Number of standard Young tableaux, i.e. dim S_λ, by the hook length formula.
    pub fn dim(&self) -> u64 {
        let conj = self.conjugate();
        let mut num: u128 = 1;
        for k in 2..=self.size() as u128 {
            num *= k;
        }
        let mut den: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                den *= (row - j + conj.parts[j] - i - 1) as u128;
            }
        }
        (num / den) as u64
    }

    /// Multiplicity vector: `m[i]` is the number of parts equal to `i` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Size of the centraliser of a permutation with this cycle type.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m as u128 {
                z *= i as u128 * k;
            }
        }
        z
    }

    /// Human-readable form `(2,1)`; the empty partition prints as `()`.
    pub fn pretty(&self) -> String {
        format!("({self})")
    }

    /// All ν ⊆ λ with λ/ν a horizontal strip (including ν = λ).
    pub fn horizontal_strip_removals(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        strip_removals(&self.parts, 0, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All μ ⊢ t containing λ with μ/λ a horizontal strip.
    pub fn horizontal_strip_additions(&self, t: usize) -> Vec<Partition> {
        if t < self.size() {
            return Vec::new();
        }
        partitions_of(t)
            .into_iter()
            .filter(|mu| mu.contains(self) && is_strip(mu, self))
            .collect()
    }
}

fn strip_removals(parts: &[usize], i: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i == parts.len() {
        out.push(Partition::from_unsorted(cur.clone()));
        return;
    }
    let lo = parts.get(i + 1).copied().unwrap_or(0);
    for v in lo..=parts[i] {
        cur.push(v);
        strip_removals(parts, i + 1, cur, out);
        cur.pop();
    }
}

fn is_strip(lambda: &Partition, mu: &Partition) -> bool {
    (0..lambda.len()).all(|i| lambda.part(i + 1) <= mu.part(i))
}

/// True iff λ/μ has at most one box per column; errors unless μ ⊆ λ.
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained { lambda: lambda.pretty(), mu: mu.pretty() });
    }
    Ok(is_strip(lambda, mu))
}

/// The hook (n−k+1, 1^{k−1}).
pub fn hook(n: usize, k: usize) -> Result<Partition> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("hook({n},{k}) needs 1 <= k <= n")));
    }
    let mut parts = vec![n - k + 1];
    parts.extend(std::iter::repeat_n(1, k - 1));
    Ok(Partition { parts })
}

/// Every partition of `n`, in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Accepts `2,1`, `(2,1)`, `[2,1]`, and the empty forms ``, `()`, `[]`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
            .unwrap_or(t)
            .trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition '{s}'"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(4).len(), 5);
        let mut sorted = partitions_of(6);
        sorted.sort();
        assert_eq!(sorted, partitions_of(6));
    }

    #[test]
    fn containment_and_strips() {
        assert!(p(&[2, 1]).contains(&p(&[2])));
        assert!(!p(&[2, 1]).contains(&p(&[1, 1, 1])));
        assert!(p(&[3, 3, 1]).contains(&p(&[2, 2])));
        assert!(is_horizontal_strip(&p(&[2, 1]), &p(&[2])).unwrap());
        assert!(!is_horizontal_strip(&p(&[2, 2]), &p(&[1, 1])).unwrap());
        assert!(is_horizontal_strip(&p(&[3, 1]), &p(&[2])).unwrap());
        assert!(is_horizontal_strip(&p(&[2]), &p(&[3])).is_err());
    }

    #[test]
    fn hooks() {
        assert_eq!(hook(3, 1).unwrap(), p(&[3]));
        assert_eq!(hook(3, 3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(hook(5, 2).unwrap(), p(&[4, 1]));
        assert!(hook(3, 0).is_err());
        assert!(hook(3, 4).is_err());
    }

    #[test]
    fn dims_and_conjugates() {
        assert_eq!(p(&[2, 1]).dim(), 2);
        assert_eq!(p(&[3, 2]).dim(), 5);
        assert_eq!(p(&[3, 2, 1]).dim(), 16);
        assert_eq!(Partition::empty().dim(), 1);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1, 1]).z(), 4);
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(p(&[2, 1]).to_string(), "2,1");
        assert_eq!(Partition::empty().to_string(), "");
        assert_eq!("(2,1)".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[2, 1])).unwrap(), "[2,1]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
