//! Maps between finite sets {0..s} → {0..t} and their factorization into
//! generating morphisms.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetMap {
    dst: usize,
    img: Vec<usize>,
}

impl SetMap {
    pub fn new(dst: usize, img: Vec<usize>) -> Result<Self> {
        if let Some(&y) = img.iter().find(|&&y| y >= dst) {
            return Err(Error::InvalidArgument(format!("image {y} outside a set of size {dst}")));
        }
        Ok(SetMap { dst, img })
    }

    pub(crate) fn new_unchecked(dst: usize, img: Vec<usize>) -> Self {
        debug_assert!(img.iter().all(|&y| y < dst));
        SetMap { dst, img }
    }

    pub fn identity(n: usize) -> Self {
        SetMap { dst: n, img: (0..n).collect() }
    }

    pub fn from_permutation(perm: &[usize]) -> Self {
        SetMap { dst: perm.len(), img: perm.to_vec() }
    }

    pub fn src(&self) -> usize {
        self.img.len()
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn img(&self) -> &[usize] {
        &self.img
    }

    pub fn apply(&self, x: usize) -> usize {
        self.img[x]
    }

    /// `self ∘ g` (apply `g` first).
    pub fn after(&self, g: &SetMap) -> SetMap {
        assert_eq!(g.dst, self.src(), "composable maps");
        SetMap { dst: self.dst, img: g.img.iter().map(|&x| self.img[x]).collect() }
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.dst];
        self.img.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.dst];
        for &y in &self.img {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_identity(&self) -> bool {
        self.dst == self.src() && self.img.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// Every map s → t in lexicographic order of image vectors.
    pub fn all(s: usize, t: usize) -> impl Iterator<Item = SetMap> {
        crate::symrep::all_maps(s, t).map(move |img| SetMap { dst: t, img })
    }
}

impl fmt::Debug for SetMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}→{}", self.img, self.dst)
    }
}

/// Generating morphisms of FA.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// Transposition of i and i+1 in {0..size}.
    Swap { size: usize, i: usize },
    /// Inclusion size → size+1 missing the top point.
    Inject { size: usize },
    /// size+1 → size, sending the top point to the one below and fixing the rest.
    Fold { size: usize },
}

impl Generator {
    pub fn src(&self) -> usize {
        match *self {
            Generator::Swap { size, .. } | Generator::Inject { size } => size,
            Generator::Fold { size } => size + 1,
        }
    }

    pub fn dst(&self) -> usize {
        match *self {
            Generator::Swap { size, .. } | Generator::Fold { size } => size,
            Generator::Inject { size } => size + 1,
        }
    }

    pub fn as_map(&self) -> SetMap {
        match *self {
            Generator::Swap { size, i } => {
                let mut img: Vec<usize> = (0..size).collect();
                img.swap(i, i + 1);
                SetMap { dst: size, img }
            }
            Generator::Inject { size } => SetMap { dst: size + 1, img: (0..size).collect() },
            Generator::Fold { size } => {
                let mut img: Vec<usize> = (0..=size).collect();
                img[size] = size - 1;
                SetMap { dst: size, img }
            }
        }
    }

    /// All generators with source and target of size ≤ n.
    pub fn all_up_to(n: usize) -> Vec<Generator> {
        let mut out = Vec::new();
        for size in 0..=n {
            for i in 0..size.saturating_sub(1) {
                out.push(Generator::Swap { size, i });
            }
            if size < n {
                out.push(Generator::Inject { size });
                if size >= 1 {
                    out.push(Generator::Fold { size });
                }
            }
        }
        out
    }
}

/// Which colliding pair and sorting method a factorization uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// First colliding pair, bubble sort.
    Primary,
    /// Last colliding pair, selection sort.
    Alternate,
}

/// Generators whose composite (first element applied first) is `f`.
pub fn factor(f: &SetMap) -> Vec<Generator> {
    factor_with(f, Strategy::Primary)
}

pub fn factor_with(f: &SetMap, strategy: Strategy) -> Vec<Generator> {
    let mut out = Vec::new();
    factor_into(f, strategy, &mut out);
    out
}

fn colliding_pair(f: &SetMap, strategy: Strategy) -> Option<(usize, usize)> {
    let s = f.src();
    let mut pairs = (0..s).flat_map(|i| (i + 1..s).map(move |j| (i, j))).filter(|&(i, j)| f.img[i] == f.img[j]);
    match strategy {
        Strategy::Primary => pairs.next(),
        Strategy::Alternate => pairs.next_back(),
    }
}

fn factor_into(f: &SetMap, strategy: Strategy, out: &mut Vec<Generator>) {
    let s = f.src();
    if let Some((i, j)) = colliding_pair(f, strategy) {
        // σ sends i, j to the top two points and keeps the others in order.
        let mut sigma = vec![0; s];
        let mut next = 0;
        for (x, slot) in sigma.iter_mut().enumerate() {
            *slot = if x == i {
                s - 2
            } else if x == j {
                s - 1
            } else {
                next += 1;
                next - 1
            };
        }
        factor_permutation(&sigma, strategy, out);
        out.push(Generator::Fold { size: s - 1 });
        let inv = crate::symrep::inverse(&sigma);
        let img = (0..s - 1).map(|k| f.img[inv[k]]).collect();
        factor_into(&SetMap { dst: f.dst, img }, strategy, out);
        return;
    }
    let t = f.dst;
    for size in s..t {
        out.push(Generator::Inject { size });
    }
    let mut used = vec![false; t];
    for &y in &f.img {
        used[y] = true;
    }
    let mut tau = f.img.clone();
    tau.extend((0..t).filter(|&y| !used[y]));
    factor_permutation(&tau, strategy, out);
}

/// Adjacent transpositions whose composite (first applied first) is `perm`.
fn factor_permutation(perm: &[usize], strategy: Strategy, out: &mut Vec<Generator>) {
    let n = perm.len();
    let mut a = perm.to_vec();
    // Each swap replaces a by a ∘ s_k; once sorted, perm = s_{k_m} ∘ … ∘ s_{k_1}.
    match strategy {
        Strategy::Primary => loop {
            let mut swapped = false;
            for k in 0..n.saturating_sub(1) {
                if a[k] > a[k + 1] {
                    a.swap(k, k + 1);
                    out.push(Generator::Swap { size: n, i: k });
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        },
        Strategy::Alternate => {
            for target in 0..n {
                let mut pos = (target..n).find(|&p| a[p] == target).expect("permutation");
                while pos > target {
                    a.swap(pos - 1, pos);
                    out.push(Generator::Swap { size: n, i: pos - 1 });
                    pos -= 1;
                }
            }
        }
    }
}

/// Composite of a generator word.
pub fn compose_word(src: usize, word: &[Generator]) -> SetMap {
    word.iter().fold(SetMap::identity(src), |acc, g| g.as_map().after(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_have_expected_shapes() {
        assert_eq!(Generator::Fold { size: 2 }.as_map().img(), &[0, 1, 1]);
        assert_eq!(Generator::Inject { size: 2 }.as_map().dst(), 3);
        assert_eq!(Generator::Swap { size: 3, i: 1 }.as_map().img(), &[0, 2, 1]);
    }

    #[test]
    fn factorizations_reproduce_every_small_map() {
        for s in 0..=4 {
            for t in 0..=4 {
                for f in SetMap::all(s, t) {
                    for strategy in [Strategy::Primary, Strategy::Alternate] {
                        let word = factor_with(&f, strategy);
                        assert!(word.windows(2).all(|w| w[0].dst() == w[1].src()));
                        assert_eq!(compose_word(s, &word), f, "{f:?} via {strategy:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn map_predicates() {
        let f = SetMap::new(3, vec![2, 0, 2]).unwrap();
        assert!(!f.is_injective());
        assert!(!f.is_surjective());
        assert!(SetMap::new(2, vec![2]).is_err());
        let g = SetMap::new(3, vec![1, 0]).unwrap();
        assert_eq!(f.after(&SetMap::new(3, vec![1, 2]).unwrap()).img(), &[0, 2]);
        assert!(g.is_injective());
    }
}
