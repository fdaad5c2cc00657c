//! Natural transformations between truncated FA-modules, with their
//! symmetric-group characters.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{add_entry, Echelon, RationalMatrix, SparseVec, Q};
use crate::partitions::Partition;
use crate::symrep::{permutation_of_type, BiClassFunction};

use super::functor::TruncatedFunctor;
use super::models::{apply, apply_outer, FaModel};
use super::presentation::Presentation;
use super::setmap::{Generator, SetMap};

/// How the hom space was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Images of the generators of a presentation of the source.
    Presented,
    /// All components η_x for x ≤ N, constrained by the generating maps of FA_{≤N}.
    Generic,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Presented => "presented",
            Route::Generic => "generic",
        })
    }
}

/// A basis of Hom(G, F) in solver coordinates.
#[derive(Clone, Debug)]
pub struct NatHomResult {
    pub route: Route,
    pub trunc: usize,
    pub dimension: usize,
    pub basis: Vec<SparseVec>,
    /// The S_t × S_s character (t the outer degree of the target, s that of the source).
    pub character: Option<BiClassFunction>,
    /// Block offsets of the unknowns: one block per generator, or per set size.
    offsets: Vec<usize>,
}

/// The solver unknowns split into blocks.
fn split(v: &SparseVec, offsets: &[usize], total: usize) -> Vec<SparseVec> {
    let mut out = vec![SparseVec::new(); offsets.len()];
    for (&c, a) in v {
        let j = offsets.partition_point(|&o| o <= c) - 1;
        debug_assert!(c < total);
        out[j].insert(c - offsets[j], a.clone());
    }
    out
}

fn join(blocks: &[SparseVec], offsets: &[usize]) -> SparseVec {
    let mut out = SparseVec::new();
    for (b, &o) in blocks.iter().zip(offsets) {
        for (&c, a) in b {
            if !a.is_zero() {
                out.insert(c + o, a.clone());
            }
        }
    }
    out
}

fn free_columns(e: &Echelon, total: usize) -> Vec<usize> {
    let pivots: std::collections::HashSet<usize> = e.pivots().iter().copied().collect();
    (0..total).filter(|c| !pivots.contains(c)).collect()
}

/// Trace of a linear map on the span of `basis`, given the image of each basis vector.
fn trace(basis_len: usize, free: &[usize], image: impl Fn(usize) -> SparseVec) -> Q {
    (0..basis_len).map(|i| image(i).get(&free[i]).cloned().unwrap_or_else(Q::zero)).sum()
}

fn outer_pairs(t: usize, s: usize) -> Vec<(Partition, Partition, Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for a in crate::partitions::partitions_of(t) {
        for b in crate::partitions::partitions_of(s) {
            let (tau, sigma) = (permutation_of_type(&a), permutation_of_type(&b));
            out.push((a.clone(), b, tau, sigma));
        }
    }
    out
}

fn check_trunc(source: &TruncatedFunctor, target: &TruncatedFunctor) -> Result<usize> {
    if source.trunc != target.trunc {
        return Err(Error::InvalidArgument(format!(
            "truncations differ: {} and {}",
            source.trunc, target.trunc
        )));
    }
    Ok(source.trunc)
}

pub fn nat_hom(source: &TruncatedFunctor, target: &TruncatedFunctor, route: Route) -> Result<NatHomResult> {
    match route {
        Route::Presented => nat_hom_presented(source, target),
        Route::Generic => nat_hom_generic(source, target),
    }
}

/// Hom(G, F) as the tuples w_j ∈ F(x_j) satisfying the relations of G.
pub fn nat_hom_presented(source: &TruncatedFunctor, target: &TruncatedFunctor) -> Result<NatHomResult> {
    let n = check_trunc(source, target)?;
    let pres = &source.presentation;
    if pres.max_size() > n {
        return Err(Error::InvalidArgument(format!(
            "{} has relations in size {} above the truncation {n}",
            source.descriptor,
            pres.max_size()
        )));
    }
    let f = target.model.as_ref();
    let mut offsets = Vec::new();
    let mut total = 0;
    for (x, _) in &pres.generators {
        offsets.push(total);
        total += f.dim(*x);
    }
    let mut e = Echelon::new();
    for r in &pres.relations {
        let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for t in &r.terms {
            let x = pres.generators[t.generator].0;
            for b in 0..f.dim(x) {
                for (row, a) in f.image(&t.map, b) {
                    add_entry(rows.entry(row).or_default(), offsets[t.generator] + b, &t.coeff * a);
                }
            }
        }
        for row in rows.values() {
            e.insert(row);
        }
    }
    let basis = e.kernel_basis(total);
    let free = free_columns(&e, total);
    let character = match (&pres.outer, source.model.outer_degree()) {
        (None, d) if d > 0 => None,
        (lift, s) => {
            let t = f.outer_degree();
            let mut values = BTreeMap::new();
            for (a, b, tau, sigma) in outer_pairs(t, s) {
                let images = lift.as_ref().map(|l| l(&sigma));
                let value = trace(basis.len(), &free, |i| {
                    let w = split(&basis[i], &offsets, total);
                    let moved: Vec<SparseVec> = (0..w.len())
                        .map(|j| {
                            let v = match &images {
                                Some(images) => Presentation::evaluate(f, &images[j], &w),
                                None => w[j].clone(),
                            };
                            apply_outer(f, &tau, pres.generators[j].0, &v)
                        })
                        .collect();
                    join(&moved, &offsets)
                });
                values.insert((a, b), value);
            }
            Some(BiClassFunction { s: t, t: s, values })
        }
    };
    Ok(NatHomResult { route: Route::Presented, trunc: n, dimension: basis.len(), basis, character, offsets })
}

/// Hom(G, F) over FA_{≤N} from all components, constrained by the generating maps.
pub fn nat_hom_generic(source: &TruncatedFunctor, target: &TruncatedFunctor) -> Result<NatHomResult> {
    let n = check_trunc(source, target)?;
    let (g, f) = (source.model.as_ref(), target.model.as_ref());
    let dg: Vec<usize> = (0..=n).map(|x| g.dim(x)).collect();
    let df: Vec<usize> = (0..=n).map(|x| f.dim(x)).collect();
    let mut offsets = Vec::new();
    let mut total = 0;
    for x in 0..=n {
        offsets.push(total);
        total += dg[x] * df[x];
    }
    // η_x[r][c] is unknown offsets[x] + r·dg[x] + c.
    let var = |x: usize, r: usize, c: usize| offsets[x] + r * dg[x] + c;
    let mut e = Echelon::new();
    for gen in Generator::all_up_to(n) {
        let map = gen.as_map();
        let (x, y) = (map.src(), map.dst());
        let mut eqs: HashMap<(usize, usize), SparseVec> = HashMap::new();
        for c in 0..dg[x] {
            // (η_y G(f))[r][c] = Σ_k η_y[r][k] G(f)[k][c]
            for (k, a) in g.image(&map, c) {
                for r in 0..df[y] {
                    add_entry(eqs.entry((r, c)).or_default(), var(y, r, k), a.clone());
                }
            }
        }
        for k in 0..df[x] {
            // (F(f) η_x)[r][c] = Σ_k F(f)[r][k] η_x[k][c]
            for (r, a) in f.image(&map, k) {
                for c in 0..dg[x] {
                    add_entry(eqs.entry((r, c)).or_default(), var(x, k, c), -a.clone());
                }
            }
        }
        for v in eqs.values() {
            e.insert(v);
        }
    }
    let basis = e.kernel_basis(total);
    let free = free_columns(&e, total);
    let (t, s) = (f.outer_degree(), g.outer_degree());
    let mut values = BTreeMap::new();
    for (a, b, tau, sigma) in outer_pairs(t, s) {
        let value = trace(basis.len(), &free, |i| {
            let mut out = SparseVec::new();
            for x in 0..=n {
                for c in 0..dg[x] {
                    let moved = apply_outer(g, &sigma, x, &super::models::unit(c));
                    let mut col = SparseVec::new();
                    for (k, a) in moved {
                        for r in 0..df[x] {
                            if let Some(v) = basis[i].get(&var(x, r, k)) {
                                add_entry(&mut col, r, v * &a);
                            }
                        }
                    }
                    for (r, v) in apply_outer(f, &tau, x, &col) {
                        if !v.is_zero() {
                            out.insert(var(x, r, c), v);
                        }
                    }
                }
            }
            out
        });
        values.insert((a, b), value);
    }
    let character = Some(BiClassFunction { s: t, t: s, values });
    Ok(NatHomResult { route: Route::Generic, trunc: n, dimension: basis.len(), basis, character, offsets })
}

impl NatHomResult {
    /// The components η_x (x ≤ N) of basis element `i` as matrices F(x) × G(x).
    pub fn components(&self, source: &TruncatedFunctor, target: &TruncatedFunctor, i: usize) -> Result<Vec<RationalMatrix>> {
        let (g, f) = (source.model.as_ref(), target.model.as_ref());
        let v = &self.basis[i];
        match self.route {
            Route::Generic => Ok((0..=self.trunc)
                .map(|x| {
                    let (dg, df) = (g.dim(x), f.dim(x));
                    let mut m = RationalMatrix::zeros(df, dg);
                    for r in 0..df {
                        for c in 0..dg {
                            if let Some(a) = v.get(&(self.offsets[x] + r * dg + c)) {
                                m.set(r, c, a.clone());
                            }
                        }
                    }
                    m
                })
                .collect()),
            Route::Presented => {
                let pres = &source.presentation;
                let total = self.offsets.last().map_or(0, |&o| o + f.dim(pres.generators.last().unwrap().0));
                let w = split(v, &self.offsets, total);
                (0..=self.trunc).map(|y| presented_component(g, f, pres, &w, y)).collect()
            }
        }
    }

    /// η_y G(f) = F(f) η_x for every map f between sets of size ≤ N, for every basis element.
    pub fn verify_naturality(&self, source: &TruncatedFunctor, target: &TruncatedFunctor) -> Result<bool> {
        for i in 0..self.dimension {
            let eta = self.components(source, target, i)?;
            for x in 0..=self.trunc {
                for y in 0..=self.trunc {
                    for map in SetMap::all(x, y) {
                        let lhs = eta[y].mul(&source.direct_matrix(&map))?;
                        let rhs = target.direct_matrix(&map).mul(&eta[x])?;
                        if lhs != rhs {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Decomposition of the character into S_t × S_s irreducibles.
    pub fn decomposition(&self) -> Result<Option<crate::symrep::BimodDecomposition>> {
        self.character.as_ref().map(BiClassFunction::decompose).transpose()
    }
}

/// η_y determined by η_y(G(f)g_j) = F(f)w_j, solved on a basis of G(y) drawn from those vectors.
fn presented_component(
    g: &dyn FaModel,
    f: &dyn FaModel,
    pres: &Presentation,
    w: &[SparseVec],
    y: usize,
) -> Result<RationalMatrix> {
    let (dg, df) = (g.dim(y), f.dim(y));
    let mut e = Echelon::new();
    let mut sources = Vec::new();
    let mut images = Vec::new();
    'outer: for (j, (x, gen)) in pres.generators.iter().enumerate() {
        for img in crate::symrep::all_maps(*x, y) {
            if sources.len() == dg {
                break 'outer;
            }
            let map = SetMap::new_unchecked(y, img);
            let v = apply(g, &map, gen);
            if e.insert(&v) {
                sources.push(v);
                images.push(apply(f, &map, &w[j]));
            }
        }
    }
    if sources.len() != dg {
        return Err(Error::Inconsistent(format!("generators do not span G({y})")));
    }
    // η A = B with A, B the chosen columns; row r of η solves Aᵀ z = (row r of B).
    let a_t = RationalMatrix::from_sparse_columns(dg, &sources).transpose();
    let b = RationalMatrix::from_sparse_columns(df, &images);
    let mut eta = RationalMatrix::zeros(df, dg);
    for r in 0..df {
        let z = a_t
            .solve(b.row(r))?
            .ok_or_else(|| Error::Inconsistent("component system is singular".into()))?;
        for (c, v) in z.into_iter().enumerate() {
            eta.set(r, c, v);
        }
    }
    Ok(eta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn hom(src: &str, dst: &str, n: usize) -> (NatHomResult, NatHomResult) {
        let (s, t) = (TruncatedFunctor::parse(src, n).unwrap(), TruncatedFunctor::parse(dst, n).unwrap());
        let a = nat_hom_presented(&s, &t).unwrap();
        let b = nat_hom_generic(&s, &t).unwrap();
        assert!(a.verify_naturality(&s, &t).unwrap(), "{src} → {dst}");
        assert!(b.verify_naturality(&s, &t).unwrap(), "{src} → {dst}");
        (a, b)
    }

    #[test]
    fn routes_agree_on_small_cases() {
        for (src, dst) in [
            ("pfin:1", "pfin:2"),
            ("pbar:1", "pfin:2"),
            ("k", "pfin:1"),
            ("pfin:1", "k"),
            ("kbar", "pbar:1"),
            ("pbar:1", "pbar:1"),
            ("proj-cover:1", "pfin:2"),
            ("kfi:2", "pfin:2"),
        ] {
            let (a, b) = hom(src, dst, 3);
            assert_eq!(a.dimension, b.dimension, "{src} → {dst}");
            assert_eq!(a.character, b.character, "{src} → {dst}");
        }
    }

    #[test]
    fn yoneda_dimension() {
        // Hom(P_1, F) = F(1).
        let (a, _) = hom("pfin:1", "pfin:2", 3);
        assert_eq!(a.dimension, 1);
        let c = a.character.unwrap();
        assert_eq!(c.s, 2);
        assert_eq!(c.t, 1);
        assert_eq!(c.dimension(), q(1));
    }

    #[test]
    fn constant_maps() {
        let (a, _) = hom("k", "kbar", 3);
        assert_eq!(a.dimension, 0);
        let (a, _) = hom("kbar", "k", 3);
        assert_eq!(a.dimension, 1);
    }
}
