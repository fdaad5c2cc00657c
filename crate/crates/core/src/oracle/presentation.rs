//! Finite presentations of kFA-modules by generators and relations.
//!
//! A module G is presented by generators g_j ∈ G(x_j) and relations
//! Σ c·G(f)g_j = 0; then Hom(G, F) is the space of tuples w_j ∈ F(x_j)
//! satisfying the same relations.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{axpy, q, Echelon, SparseVec, Q};
use crate::partitions::Partition;
use crate::symrep::{all_maps, inverse, permutations, sign_of};

use super::models::{apply, young_symmetrizer, FaModel};
use super::setmap::SetMap;

/// c·(the map) applied to a generator.
#[derive(Clone, Debug)]
pub struct Term {
    pub generator: usize,
    pub map: SetMap,
    pub coeff: Q,
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub size: usize,
    pub terms: Vec<Term>,
}

/// For an outer permutation, the image of each generator as a combination of maps applied to generators.
pub type OuterLift = Arc<dyn Fn(&[usize]) -> Vec<Vec<Term>> + Send + Sync>;

#[derive(Clone)]
pub struct Presentation {
    /// Generator sizes and their vectors in the model basis.
    pub generators: Vec<(usize, SparseVec)>,
    pub relations: Vec<Relation>,
    pub outer: Option<OuterLift>,
}

/// Outcome of comparing a presentation with its model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationReport {
    pub max_size: usize,
    pub relations_vanish: bool,
    pub outer_matches: bool,
    pub generates: bool,
    pub presented_dims: Vec<usize>,
    pub model_dims: Vec<usize>,
}

impl PresentationReport {
    pub fn pass(&self) -> bool {
        self.relations_vanish && self.outer_matches && self.generates && self.presented_dims == self.model_dims
    }
}

fn term(generator: usize, map: SetMap, coeff: Q) -> Term {
    Term { generator, map, coeff }
}

/// h(0) = 0, h(j+1) = σ⁻¹(j)+1: moves the marked points as σ moves tensor positions.
pub fn point_lift(perm: &[usize]) -> SetMap {
    let inv = inverse(perm);
    let mut img = vec![0];
    img.extend(inv.iter().map(|&j| j + 1));
    SetMap::from_permutation(&img)
}

impl Presentation {
    /// Largest size of any generator or relation.
    pub fn max_size(&self) -> usize {
        let g = self.generators.iter().map(|(x, _)| *x).max().unwrap_or(0);
        let r = self.relations.iter().map(|r| r.size).max().unwrap_or(0);
        g.max(r)
    }

    pub fn generator_sizes(&self) -> Vec<usize> {
        self.generators.iter().map(|(x, _)| *x).collect()
    }

    /// The free module k[FA(x, −)] on the identity of x.
    pub fn representable(n: usize) -> Self {
        let outer: OuterLift = Arc::new(|perm: &[usize]| {
            vec![vec![term(0, SetMap::from_permutation(&inverse(perm)), Q::one())]]
        });
        let id = (0..n).fold(0, |acc, i| acc * n + i);
        Presentation {
            generators: vec![(n, [(id, Q::one())].into())],
            relations: Vec::new(),
            outer: Some(outer),
        }
    }

    /// kFI(n, −): the representable modulo every map identifying two points.
    pub fn injections(n: usize, generator: SparseVec) -> Self {
        let mut p = Self::representable(n);
        p.generators[0].1 = generator;
        for i in 0..n {
            for j in i + 1..n {
                let img = (0..n).map(|y| if y == j { i } else if y > j { y - 1 } else { y }).collect();
                p.relations.push(Relation {
                    size: n - 1,
                    terms: vec![term(0, SetMap::new_unchecked(n - 1, img), Q::one())],
                });
            }
        }
        p
    }

    pub fn constant() -> Self {
        Presentation { generators: vec![(0, [(0, Q::one())].into())], relations: Vec::new(), outer: None }
    }

    pub fn point() -> Self {
        let mut p = Self::constant();
        p.relations.push(Relation { size: 1, terms: vec![term(0, SetMap::new_unchecked(1, Vec::new()), Q::one())] });
        p
    }

    /// Relations satisfied by ⊗_{i=1..s}([i] − [0]) ∈ P̄^{⊗s}(s+1).
    fn pbar_relations(s: usize, g: usize) -> Vec<Relation> {
        let size = s + 1;
        // Idempotence: g = Σ_{S ⊆ {1..s}} (−1)^{|S|} g with the points in S sent to 0.
        let mut r1 = vec![term(g, SetMap::identity(size), Q::one())];
        for mask in 0..(1usize << s) {
            let img = (0..size).map(|i| if i > 0 && mask >> (i - 1) & 1 == 1 { 0 } else { i }).collect();
            let sign = if mask.count_ones() % 2 == 0 { -1 } else { 1 };
            r1.push(term(g, SetMap::new_unchecked(size, img), q(sign)));
        }
        // Base-point independence: Σ_{S ⊆ {0..s}} (−1)^{|S|} [h_S] with h_S(i) = 0 on S, i+1 off S.
        let mut r2 = Vec::new();
        for mask in 0..(1usize << size) {
            let img = (0..size).map(|i| if mask >> i & 1 == 1 { 0 } else { i + 1 }).collect();
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            r2.push(term(g, SetMap::new_unchecked(size + 1, img), q(sign)));
        }
        vec![Relation { size, terms: r1 }, Relation { size: size + 1, terms: r2 }]
    }

    fn pbar_outer(g: usize) -> OuterLift {
        Arc::new(move |perm: &[usize]| {
            let mut out = vec![Vec::new(); g + 1];
            out[g] = vec![term(g, point_lift(perm), Q::one())];
            out
        })
    }

    /// P̄^{⊗s}, generated at s+1 by ⊗([i] − [0]).
    pub fn pbar_tensor(s: usize, generator: SparseVec) -> Self {
        Presentation {
            generators: vec![(s + 1, generator)],
            relations: Self::pbar_relations(s, 0),
            outer: Some(Self::pbar_outer(0)),
        }
    }

    /// Λ^k(P^FA), generated at k by e_0 ∧ … ∧ e_{k−1}.
    pub fn exterior(k: usize, generator: SparseVec) -> Self {
        let relations = (0..k.saturating_sub(1))
            .map(|i| {
                let mut img: Vec<usize> = (0..k).collect();
                img.swap(i, i + 1);
                Relation {
                    size: k,
                    terms: vec![term(0, SetMap::from_permutation(&img), Q::one()), term(0, SetMap::identity(k), Q::one())],
                }
            })
            .collect();
        Presentation { generators: vec![(k, generator)], relations, outer: None }
    }

    /// Λ^k(P̄): P̄^{⊗k} made antisymmetric in the marked points.
    pub fn exterior_bar(k: usize, generator: SparseVec) -> Self {
        let mut relations = Self::pbar_relations(k, 0);
        for i in 1..k {
            let mut img: Vec<usize> = (0..=k).collect();
            img.swap(i, i + 1);
            relations.push(Relation {
                size: k + 1,
                terms: vec![
                    term(0, SetMap::from_permutation(&img), Q::one()),
                    term(0, SetMap::identity(k + 1), Q::one()),
                ],
            });
        }
        Presentation { generators: vec![(k + 1, generator)], relations, outer: None }
    }

    /// P̄^{⊗m} with the image of the sign idempotent killed.
    pub fn pbar_mod_lambda(m: usize, generator: SparseVec) -> Self {
        let mut p = Self::pbar_tensor(m, generator);
        let terms = permutations(m).iter().map(|perm| term(0, point_lift(perm), q(sign_of(perm)))).collect();
        p.relations.push(Relation { size: m + 1, terms });
        p
    }

    /// S_λ(P̄) as the image of the normalized Young symmetrizer ẽ: generated by ẽg with (1 − ẽ)ẽg = 0.
    pub fn schur_pbar(lambda: &Partition, generator: SparseVec) -> Self {
        let n = lambda.size();
        let scale = Q::new(lambda.dim().into(), factorial(n).into());
        let size = n + 1;
        let mut relations = Self::pbar_relations(n, 0);
        let mut idem = vec![term(0, SetMap::identity(size), Q::one())];
        for (perm, c) in young_symmetrizer(lambda) {
            idem.push(term(0, point_lift(&perm), -(&scale * q(c))));
        }
        relations.push(Relation { size, terms: idem });
        Presentation { generators: vec![(size, generator)], relations, outer: None }
    }

    /// S_λ(P^FA) as the image of ẽ on P_n.
    pub fn schur_pfin(lambda: &Partition, generator: SparseVec) -> Self {
        let n = lambda.size();
        let scale = Q::new(lambda.dim().into(), factorial(n).into());
        let mut idem = vec![term(0, SetMap::identity(n), Q::one())];
        for (perm, c) in young_symmetrizer(lambda) {
            idem.push(term(0, SetMap::from_permutation(&inverse(&perm)), -(&scale * q(c))));
        }
        Presentation {
            generators: vec![(n, generator)],
            relations: vec![Relation { size: n, terms: idem }],
            outer: None,
        }
    }

    /// Direct sum; the outer lifts of the summands are combined by `outer`.
    pub fn sum(parts: Vec<Presentation>, outer: Option<OuterLift>) -> Self {
        let mut generators = Vec::new();
        let mut relations = Vec::new();
        for p in parts {
            let shift = generators.len();
            generators.extend(p.generators);
            relations.extend(p.relations.into_iter().map(|r| Relation {
                size: r.size,
                terms: r.terms.into_iter().map(|t| term(t.generator + shift, t.map, t.coeff)).collect(),
            }));
        }
        Presentation { generators, relations, outer }
    }

    /// ℙ_m = Λ^{m+1}(P^FA) ⊕ P̄^{⊗m}/Λ^m(P̄), with S_m acting by sign on the first summand.
    pub fn proj_cover(m: usize, first: SparseVec, second: SparseVec) -> Self {
        let outer: OuterLift = Arc::new(move |perm: &[usize]| {
            vec![
                vec![term(0, SetMap::identity(m + 1), q(sign_of(perm)))],
                vec![term(1, point_lift(perm), Q::one())],
            ]
        });
        Self::sum(vec![Self::exterior(m + 1, first), Self::pbar_mod_lambda(m, second)], Some(outer))
    }

    /// The vector Σ c·F(f)w_j of a list of terms, for w_j ∈ F(x_j).
    pub fn evaluate(model: &dyn FaModel, terms: &[Term], w: &[SparseVec]) -> SparseVec {
        let mut out = SparseVec::new();
        for t in terms {
            axpy(&mut out, &t.coeff, &apply(model, &t.map, &w[t.generator]));
        }
        out
    }

    /// dim G(y) computed from the presentation alone.
    pub fn presented_dim(&self, y: usize) -> usize {
        let mut offsets = Vec::new();
        let mut total = 0;
        for (x, _) in &self.generators {
            offsets.push(total);
            total += y.pow(*x as u32);
        }
        let index = |j: usize, img: &[usize]| offsets[j] + img.iter().fold(0, |acc, &v| acc * y + v);
        let mut e = Echelon::new();
        for r in &self.relations {
            for h in all_maps(r.size, y) {
                let h = SetMap::new_unchecked(y, h);
                let mut v = SparseVec::new();
                for t in &r.terms {
                    let composite = h.after(&t.map);
                    crate::linalg::add_entry(&mut v, index(t.generator, composite.img()), t.coeff.clone());
                }
                e.insert(&v);
            }
        }
        total - e.rank()
    }

    /// Checks relations, outer lifts, generation and dimensions against `model` up to `max_size`.
    pub fn check(&self, model: &dyn FaModel, max_size: usize) -> Result<PresentationReport> {
        let w: Vec<SparseVec> = self.generators.iter().map(|(_, v)| v.clone()).collect();
        for (j, (x, v)) in self.generators.iter().enumerate() {
            if v.keys().any(|&c| c >= model.dim(*x)) {
                return Err(Error::Inconsistent(format!("generator {j} lies outside {}", model.name())));
            }
        }
        let relations_vanish = self.relations.iter().all(|r| Self::evaluate(model, &r.terms, &w).values().all(Q::is_zero));
        let mut outer_matches = true;
        let d = model.outer_degree();
        if let Some(lift) = &self.outer {
            for perm in permutations(d) {
                let images = lift(&perm);
                for (j, (x, v)) in self.generators.iter().enumerate() {
                    let expected = super::models::apply_outer(model, &perm, *x, v);
                    let mut got = Self::evaluate(model, &images[j], &w);
                    got.retain(|_, a| !a.is_zero());
                    if got != expected {
                        outer_matches = false;
                    }
                }
            }
        } else if d > 0 {
            outer_matches = false;
        }
        let mut generates = true;
        let mut presented_dims = Vec::new();
        let mut model_dims = Vec::new();
        for y in 0..=max_size {
            let mut e = Echelon::new();
            for (x, v) in &self.generators {
                for img in all_maps(*x, y) {
                    e.insert(&apply(model, &SetMap::new_unchecked(y, img), v));
                }
            }
            if e.rank() != model.dim(y) {
                generates = false;
            }
            presented_dims.push(self.presented_dim(y));
            model_dims.push(model.dim(y));
        }
        Ok(PresentationReport { max_size, relations_vanish, outer_matches, generates, presented_dims, model_dims })
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::models::{self, PbarTensor, TensorPower};

    #[test]
    fn representable_presentation_matches_tensor_power() {
        let model = TensorPower { n: 2 };
        let report = Presentation::representable(2).check(&model, 3).unwrap();
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn pbar_presentation_matches_model() {
        for s in 0..=2 {
            let model = PbarTensor { n: s };
            let gen = models::unit((0..s).fold(0, |acc, i| acc * s + i));
            let report = Presentation::pbar_tensor(s, gen).check(&model, s + 2).unwrap();
            assert!(report.pass(), "s = {s}: {report:?}");
        }
    }

    #[test]
    fn point_lift_moves_marked_points() {
        assert_eq!(point_lift(&[1, 2, 0]).img(), &[0, 3, 1, 2]);
    }
}
