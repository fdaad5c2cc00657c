//! Explicit kFA-modules: a basis of F(x) for every finite set size x and the
//! action of every map on basis vectors.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::linalg::{add_entry, axpy, q, Echelon, SparseVec, Q};
use crate::partitions::Partition;
use crate::symrep::{compose, permutations, sign_of};

use super::setmap::SetMap;

/// A kFA-module given by bases and the action of maps on basis vectors.
///
/// Modules may also carry an action of S_d (d = `outer_degree`) commuting with
/// the FA-action, such as the place permutations of a tensor power.
pub trait FaModel: Send + Sync {
    fn name(&self) -> String;

    fn dim(&self, x: usize) -> usize;

    /// F(f) applied to basis vector `col` of F(f.src()).
    fn image(&self, f: &SetMap, col: usize) -> SparseVec;

    fn outer_degree(&self) -> usize {
        0
    }

    /// The permutation `perm` ∈ S_d applied to basis vector `col` of F(x).
    fn outer_image(&self, _perm: &[usize], _x: usize, col: usize) -> SparseVec {
        unit(col)
    }
}

pub fn unit(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, Q::one());
    v
}

/// F(f) applied to an arbitrary vector.
pub fn apply(model: &dyn FaModel, f: &SetMap, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (&c, x) in v {
        axpy(&mut out, x, &model.image(f, c));
    }
    out
}

pub fn apply_outer(model: &dyn FaModel, perm: &[usize], x: usize, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (&c, a) in v {
        axpy(&mut out, a, &model.outer_image(perm, x, c));
    }
    out
}

/// Lazily built per-size data.
struct SizeCache<T> {
    inner: Mutex<HashMap<usize, Arc<T>>>,
}

impl<T> SizeCache<T> {
    fn new() -> Self {
        SizeCache { inner: Mutex::new(HashMap::new()) }
    }

    fn get(&self, x: usize, build: impl FnOnce() -> T) -> Arc<T> {
        if let Some(v) = self.inner.lock().expect("cache poisoned").get(&x) {
            return v.clone();
        }
        let v = Arc::new(build());
        self.inner.lock().expect("cache poisoned").entry(x).or_insert(v).clone()
    }
}

/// An enumerated family of tuples with a reverse index.
struct TupleIndex {
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl TupleIndex {
    fn new(tuples: Vec<Vec<usize>>) -> Self {
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        TupleIndex { tuples, index }
    }
}

fn radix(tuple: &[usize], base: usize) -> usize {
    tuple.iter().fold(0, |acc, &d| acc * base + d)
}

fn unradix(mut idx: usize, base: usize, len: usize) -> Vec<usize> {
    let mut t = vec![0; len];
    for slot in t.iter_mut().rev() {
        *slot = idx % base;
        idx /= base;
    }
    t
}

fn pow(base: usize, e: usize) -> usize {
    base.pow(e as u32)
}

/// Places entry i at position perm[i].
fn permute_positions(tuple: &[usize], perm: &[usize]) -> Vec<usize> {
    let mut out = vec![0; tuple.len()];
    for (i, &y) in tuple.iter().enumerate() {
        out[perm[i]] = y;
    }
    out
}

/// Sorts distinct entries, returning the sign of the sorting permutation; `None` on repeats.
fn sort_with_sign(tuple: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..tuple.len() {
        let mut j = i;
        while j > 0 && tuple[j - 1] > tuple[j] {
            tuple.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && tuple[j - 1] == tuple[j] {
            return None;
        }
    }
    Some(sign)
}

/// The constant functor k.
pub struct Constant;

impl FaModel for Constant {
    fn name(&self) -> String {
        "k".into()
    }
    fn dim(&self, _x: usize) -> usize {
        1
    }
    fn image(&self, _f: &SetMap, _col: usize) -> SparseVec {
        unit(0)
    }
}

/// k on nonempty sets, 0 on the empty set.
pub struct ConstantBar;

impl FaModel for ConstantBar {
    fn name(&self) -> String {
        "kbar".into()
    }
    fn dim(&self, x: usize) -> usize {
        usize::from(x > 0)
    }
    fn image(&self, _f: &SetMap, _col: usize) -> SparseVec {
        unit(0)
    }
}

/// k on the empty set, 0 elsewhere.
pub struct Point;

impl FaModel for Point {
    fn name(&self) -> String {
        "k0".into()
    }
    fn dim(&self, x: usize) -> usize {
        usize::from(x == 0)
    }
    fn image(&self, f: &SetMap, _col: usize) -> SparseVec {
        if f.dst() == 0 {
            unit(0)
        } else {
            SparseVec::new()
        }
    }
}

/// P^FA_n = k[X]^{⊗n}, basis the n-tuples of points, with place permutations.
pub struct TensorPower {
    pub n: usize,
}

impl FaModel for TensorPower {
    fn name(&self) -> String {
        format!("pfin:{}", self.n)
    }
    fn dim(&self, x: usize) -> usize {
        pow(x, self.n)
    }
    fn image(&self, f: &SetMap, col: usize) -> SparseVec {
        let t: Vec<usize> = unradix(col, f.src(), self.n).into_iter().map(|y| f.apply(y)).collect();
        unit(radix(&t, f.dst()))
    }
    fn outer_degree(&self) -> usize {
        self.n
    }
    fn outer_image(&self, perm: &[usize], x: usize, col: usize) -> SparseVec {
        unit(radix(&permute_positions(&unradix(col, x, self.n), perm), x))
    }
}

/// P̄^{⊗n}, basis ⊗_i ([y_i] − [0]) with y_i ∈ {1..x−1}; zero on the empty set.
pub struct PbarTensor {
    pub n: usize,
}

impl PbarTensor {
    fn tuple(&self, x: usize, col: usize) -> Vec<usize> {
        unradix(col, x - 1, self.n).into_iter().map(|d| d + 1).collect()
    }

    fn index(&self, x: usize, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &y| acc * (x - 1) + (y - 1))
    }

    /// ⊗_i ([v_i] − [c]) in the basis of P̄^{⊗n}(x), added to `out` with coefficient `coeff`.
    fn expand(&self, x: usize, v: &[usize], c: usize, coeff: &Q, out: &mut SparseVec) {
        let n = v.len();
        let mut cur = vec![0; n];
        fn rec(
            i: usize,
            v: &[usize],
            c: usize,
            sign: bool,
            cur: &mut Vec<usize>,
            x: usize,
            coeff: &Q,
            out: &mut SparseVec,
        ) {
            if i == v.len() {
                let idx = cur.iter().fold(0, |acc, &y| acc * (x - 1) + (y - 1));
                add_entry(out, idx, if sign { -coeff.clone() } else { coeff.clone() });
                return;
            }
            // [v_i] − [c] = ([v_i] − [0]) − ([c] − [0]); the [0] − [0] factor vanishes.
            if v[i] != 0 {
                cur[i] = v[i];
                rec(i + 1, v, c, sign, cur, x, coeff, out);
            }
            if c != 0 {
                cur[i] = c;
                rec(i + 1, v, c, !sign, cur, x, coeff, out);
            }
        }
        if n == 0 {
            add_entry(out, 0, coeff.clone());
            return;
        }
        rec(0, v, c, false, &mut cur, x, coeff, out);
    }
}

impl FaModel for PbarTensor {
    fn name(&self) -> String {
        format!("pbar:{}", self.n)
    }
    fn dim(&self, x: usize) -> usize {
        if x == 0 {
            0
        } else {
            pow(x - 1, self.n)
        }
    }
    fn image(&self, f: &SetMap, col: usize) -> SparseVec {
        let y = self.tuple(f.src(), col);
        let v: Vec<usize> = y.iter().map(|&a| f.apply(a)).collect();
        let mut out = SparseVec::new();
        self.expand(f.dst(), &v, f.apply(0), &Q::one(), &mut out);
        out
    }
    fn outer_degree(&self) -> usize {
        self.n
    }
    fn outer_image(&self, perm: &[usize], x: usize, col: usize) -> SparseVec {
        unit(self.index(x, &permute_positions(&self.tuple(x, col), perm)))
    }
}

/// kFI(n, −): injections n → X; non-injective composites act by zero.
pub struct Injections {
    pub n: usize,
    cache: SizeCache<TupleIndex>,
}

impl Injections {
    pub fn new(n: usize) -> Self {
        Injections { n, cache: SizeCache::new() }
    }

    fn basis(&self, x: usize) -> Arc<TupleIndex> {
        self.cache.get(x, || {
            let tuples = crate::symrep::all_maps(self.n, x)
                .filter(|t| SetMap::new_unchecked(x, t.clone()).is_injective())
                .collect();
            TupleIndex::new(tuples)
        })
    }

    /// Image vector of basis injection `col` into a set of size x.
    pub fn tuple(&self, x: usize, col: usize) -> Vec<usize> {
        self.basis(x).tuples[col].clone()
    }

    /// Basis index of the injection with image vector `tuple`.
    pub fn index_of(&self, x: usize, tuple: &[usize]) -> Option<usize> {
        self.basis(x).index.get(tuple).copied()
    }
}

impl FaModel for Injections {
    fn name(&self) -> String {
        format!("kfi:{}", self.n)
    }
    fn dim(&self, x: usize) -> usize {
        self.basis(x).tuples.len()
    }
    fn image(&self, f: &SetMap, col: usize) -> SparseVec {
        let t: Vec<usize> = self.basis(f.src()).tuples[col].iter().map(|&y| f.apply(y)).collect();
        match self.basis(f.dst()).index.get(&t) {
            Some(&i) => unit(i),
            None => SparseVec::new(),
        }
    }
    fn outer_degree(&self) -> usize {
        self.n
    }
    fn outer_image(&self, perm: &[usize], x: usize, col: usize) -> SparseVec {
        let b = self.basis(x);
        unit(b.index[&permute_positions(&b.tuples[col], perm)])
    }
}

fn increasing_tuples(lo: usize, hi: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, hi: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..hi {
            cur.push(v);
            rec(v + 1, hi, k, cur, out);
            cur.pop();
        }
    }
    rec(lo, hi, k, &mut cur, &mut out);
    out
}

/// Λ^k(P^FA), basis e_{y_1} ∧ … ∧ e_{y_k} with y increasing.
pub struct Exterior {
    pub k: usize,
    cache: SizeCache<TupleIndex>,
}

impl Exterior {
    pub fn new(k: usize) -> Self {
        Exterior { k, cache: SizeCache::new() }
    }

    fn basis(&self, x: usize) -> Arc<TupleIndex> {
        self.cache.get(x, || TupleIndex::new(increasing_tuples(0, x, self.k)))
    }
}

impl FaModel for Exterior {
    fn name(&self) -> String {
        format!("lambda-pfin:{}", self.k)
    }
    fn dim(&self, x: usize) -> usize {
        self.basis(x).tuples.len()
    }
    fn image(&self, f: &SetMap, col: usize) -> SparseVec {
        let mut t: Vec<usize> = self.basis(f.src()).tuples[col].iter().map(|&y| f.apply(y)).collect();
        match sort_with_sign(&mut t) {
            Some(sign) => {
                let mut v = SparseVec::new();
                v.insert(self.basis(f.dst()).index[&t], q(sign));
                v
            }
            None => SparseVec::new(),
        }
    }
}

/// Λ^k(P̄), basis ∧_i ([y_i] − [0]) with 1 ≤ y_1 < … < y_k ≤ x−1.
pub struct ExteriorBar {
    pub k: usize,
    cache: SizeCache<TupleIndex>,
}

impl ExteriorBar {
    pub fn new(k: usize) -> Self {
        ExteriorBar { k, cache: SizeCache::new() }
    }

    fn basis(&self, x: usize) -> Arc<TupleIndex> {
        self.cache.get(x, || {
            if x == 0 {
                TupleIndex::new(Vec::new())
            } else {
                TupleIndex::new(increasing_tuples(1, x, self.k))
            }
        })
    }

    /// Adds ± the basis wedge of `t` (entries ≥ 1) to `out`.
    fn add_wedge(&self, x: usize, mut t: Vec<usize>, coeff: i64, out: &mut SparseVec) {
        if t.contains(&0) {
            return;
        }
        if let Some(sign) = sort_with_sign(&mut t) {
            add_entry(out, self.basis(x).index[&t], q(sign * coeff));
        }
    }
}

impl FaModel for ExteriorBar {
    fn name(&self) -> String {
        format!("lambda-pbar:{}", self.k)
    }
    fn dim(&self, x: usize) -> usize {
        self.basis(x).tuples.len()
    }
    fn image(&self, f: &SetMap, col: usize) -> SparseVec {
        let v: Vec<usize> = self.basis(f.src()).tuples[col].iter().map(|&y| f.apply(y)).collect();
        let c = f.apply(0);
        let x = f.dst();
        let mut out = SparseVec::new();
        // ∧_i (v_i − w) = ∧v − Σ_i (w in slot i), where [a] − [0] is zero for a = 0.
        self.add_wedge(x, v.clone(), 1, &mut out);
        if c != 0 {
            for i in 0..v.len() {
                let mut t = v.clone();
                t[i] = c;
                self.add_wedge(x, t, -1, &mut out);
            }
        }
        out
    }
}

/// P̄^{⊗n}/Λ^n(P̄), basis the tuples over {1..x−1} that are not strictly increasing.
pub struct PbarModLambda {
    pub n: usize,
    tensor: PbarTensor,
    cache: SizeCache<TupleIndex>,
    perms: Vec<(Vec<usize>, i64)>,
}

impl PbarModLambda {
    pub fn new(n: usize) -> Self {
        let perms = permutations(n).into_iter().map(|p| {
            let s = sign_of(&p);
            (p, s)
        });
        PbarModLambda { n, tensor: PbarTensor { n }, cache: SizeCache::new(), perms: perms.collect() }
    }

    fn basis(&self, x: usize) -> Arc<TupleIndex> {
        self.cache.get(x, || {
            if x == 0 {
                return TupleIndex::new(Vec::new());
            }
            let tuples = (0..pow(x - 1, self.n))
                .map(|c| self.tensor.tuple(x, c))
                .filter(|t| !t.windows(2).all(|w| w[0] < w[1]))
                .collect();
            TupleIndex::new(tuples)
        })
    }

    /// Image of a P̄^{⊗n}(x) vector in the quotient.
    pub fn project(&self, x: usize, v: &SparseVec) -> SparseVec {
        let b = self.basis(x);
        let mut out = SparseVec::new();
        for (&c, a) in v {
            let t = self.tensor.tuple(x, c);
            if let Some(&i) = b.index.get(&t) {
                add_entry(&mut out, i, a.clone());
                continue;
            }
            // [z] ≡ −Σ_{σ ≠ id} sgn(σ) [z∘σ] for strictly increasing z.
            for (p, s) in &self.perms {
                let zs: Vec<usize> = p.iter().map(|&j| t[j]).collect();
                if zs == t {
                    continue;
                }
                add_entry(&mut out, b.index[&zs], a * q(-s));
            }
        }
        out
    }

    fn lift(&self, x: usize, col: usize) -> usize {
        self.tensor.index(x, &self.basis(x).tuples[col])
    }
}

impl FaModel for PbarModLambda {
    fn name(&self) -> String {
        format!("pbar-mod-lambda:{}", self.n)
    }
    fn dim(&self, x: usize) -> usize {
        if self.n <= 1 {
            0
        } else {
            self.basis(x).tuples.len()
        }
    }
    fn image(&self, f: &SetMap, col: usize) -> SparseVec {
        let v = self.tensor.image(f, self.lift(f.src(), col));
        self.project(f.dst(), &v)
    }
    fn outer_degree(&self) -> usize {
        self.n
    }
    fn outer_image(&self, perm: &[usize], x: usize, col: usize) -> SparseVec {
        let v = self.tensor.outer_image(perm, x, self.lift(x, col));
        self.project(x, &v)
    }
}

/// How a direct summand's basis vectors move under the sum's outer action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OuterMode {
    Own,
    Sign,
    Trivial,
}

pub struct DirectSum {
    name: String,
    parts: Vec<(Arc<dyn FaModel>, OuterMode)>,
    outer_degree: usize,
}

impl DirectSum {
    pub fn new(name: String, parts: Vec<(Arc<dyn FaModel>, OuterMode)>, outer_degree: usize) -> Self {
        DirectSum { name, parts, outer_degree }
    }

    /// Offset of summand `i` inside F(x).
    pub fn offset(&self, i: usize, x: usize) -> usize {
        self.parts[..i].iter().map(|(m, _)| m.dim(x)).sum()
    }

    fn locate(&self, x: usize, mut col: usize) -> (usize, usize) {
        for (i, (m, _)) in self.parts.iter().enumerate() {
            let d = m.dim(x);
            if col < d {
                return (i, col);
            }
            col -= d;
        }
        panic!("basis index out of range");
    }

    fn shift(v: SparseVec, by: usize) -> SparseVec {
        v.into_iter().map(|(k, a)| (k + by, a)).collect()
    }
}

impl FaModel for DirectSum {
    fn name(&self) -> String {
        self.name.clone()
    }
    fn dim(&self, x: usize) -> usize {
        self.parts.iter().map(|(m, _)| m.dim(x)).sum()
    }
    fn image(&self, f: &SetMap, col: usize) -> SparseVec {
        let (i, c) = self.locate(f.src(), col);
        Self::shift(self.parts[i].0.image(f, c), self.offset(i, f.dst()))
    }
    fn outer_degree(&self) -> usize {
        self.outer_degree
    }
    fn outer_image(&self, perm: &[usize], x: usize, col: usize) -> SparseVec {
        let (i, c) = self.locate(x, col);
        let (m, mode) = &self.parts[i];
        let v = match mode {
            OuterMode::Own => m.outer_image(perm, x, c),
            OuterMode::Sign => {
                let mut v = SparseVec::new();
                v.insert(c, q(sign_of(perm)));
                v
            }
            OuterMode::Trivial => unit(c),
        };
        Self::shift(v, self.offset(i, x))
    }
}

type SpanFn = Box<dyn Fn(usize) -> Vec<SparseVec> + Send + Sync>;

/// The subfunctor of `ambient` spanned at each size by `span(x)`.
pub struct SubModel {
    name: String,
    ambient: Arc<dyn FaModel>,
    span: SpanFn,
    cache: SizeCache<Echelon>,
}

impl SubModel {
    pub fn new(name: String, ambient: Arc<dyn FaModel>, span: SpanFn) -> Self {
        SubModel { name, ambient, span, cache: SizeCache::new() }
    }

    fn basis(&self, x: usize) -> Arc<Echelon> {
        self.cache.get(x, || {
            let mut e = Echelon::new();
            for v in (self.span)(x) {
                e.insert(&v);
            }
            e
        })
    }

    /// Coordinates of an ambient vector lying in the subfunctor.
    pub fn coordinates(&self, x: usize, v: &SparseVec) -> Option<SparseVec> {
        let c = self.basis(x).coordinates(v)?;
        Some(c.into_iter().enumerate().filter(|(_, a)| !a.is_zero()).collect())
    }

    /// Basis vector `col` as an ambient vector.
    pub fn ambient_vector(&self, x: usize, col: usize) -> SparseVec {
        self.basis(x).rows()[col].clone()
    }

    pub fn ambient(&self) -> &Arc<dyn FaModel> {
        &self.ambient
    }
}

impl FaModel for SubModel {
    fn name(&self) -> String {
        self.name.clone()
    }
    fn dim(&self, x: usize) -> usize {
        self.basis(x).rank()
    }
    fn image(&self, f: &SetMap, col: usize) -> SparseVec {
        let v = apply(self.ambient.as_ref(), f, &self.ambient_vector(f.src(), col));
        self.coordinates(f.dst(), &v).expect("span is closed under the FA-action")
    }
    fn outer_degree(&self) -> usize {
        0
    }
}

struct QuotientData {
    sub: Echelon,
    kept: Vec<usize>,
    position: HashMap<usize, usize>,
}

/// `ambient` modulo the subfunctor spanned at each size by `span(x)`.
pub struct QuotientModel {
    name: String,
    ambient: Arc<dyn FaModel>,
    span: SpanFn,
    cache: SizeCache<QuotientData>,
}

impl QuotientModel {
    pub fn new(name: String, ambient: Arc<dyn FaModel>, span: SpanFn) -> Self {
        QuotientModel { name, ambient, span, cache: SizeCache::new() }
    }

    fn data(&self, x: usize) -> Arc<QuotientData> {
        self.cache.get(x, || {
            let mut sub = Echelon::new();
            for v in (self.span)(x) {
                sub.insert(&v);
            }
            let pivots: std::collections::HashSet<usize> = sub.pivots().iter().copied().collect();
            let kept: Vec<usize> = (0..self.ambient.dim(x)).filter(|c| !pivots.contains(c)).collect();
            let position = kept.iter().enumerate().map(|(i, &c)| (c, i)).collect();
            QuotientData { sub, kept, position }
        })
    }

    /// Class of an ambient vector.
    pub fn project(&self, x: usize, v: &SparseVec) -> SparseVec {
        let d = self.data(x);
        d.sub.reduce(v).into_iter().map(|(c, a)| (d.position[&c], a)).collect()
    }
}

impl FaModel for QuotientModel {
    fn name(&self) -> String {
        self.name.clone()
    }
    fn dim(&self, x: usize) -> usize {
        self.data(x).kept.len()
    }
    fn image(&self, f: &SetMap, col: usize) -> SparseVec {
        let c = self.data(f.src()).kept[col];
        self.project(f.dst(), &self.ambient.image(f, c))
    }
    fn outer_degree(&self) -> usize {
        self.ambient.outer_degree()
    }
    fn outer_image(&self, perm: &[usize], x: usize, col: usize) -> SparseVec {
        let c = self.data(x).kept[col];
        self.project(x, &self.ambient.outer_image(perm, x, c))
    }
}

type ColumnFn = Box<dyn Fn(usize, usize) -> SparseVec + Send + Sync>;

struct KernelData {
    basis: Vec<SparseVec>,
    free: Vec<usize>,
}

/// The kernel of a natural map out of `ambient`, given by its value on basis vectors.
pub struct KernelModel {
    name: String,
    ambient: Arc<dyn FaModel>,
    map: ColumnFn,
    cache: SizeCache<KernelData>,
}

impl KernelModel {
    pub fn new(name: String, ambient: Arc<dyn FaModel>, map: ColumnFn) -> Self {
        KernelModel { name, ambient, map, cache: SizeCache::new() }
    }

    fn data(&self, x: usize) -> Arc<KernelData> {
        self.cache.get(x, || {
            let n = self.ambient.dim(x);
            let mut rows: std::collections::BTreeMap<usize, SparseVec> = Default::default();
            for c in 0..n {
                for (r, a) in (self.map)(x, c) {
                    rows.entry(r).or_default().insert(c, a);
                }
            }
            let mut e = Echelon::new();
            for r in rows.values() {
                e.insert(r);
            }
            let basis = e.kernel_basis(n);
            let pivots: std::collections::HashSet<usize> = e.pivots().iter().copied().collect();
            let free = (0..n).filter(|c| !pivots.contains(c)).collect();
            KernelData { basis, free }
        })
    }

    /// Coordinates of an ambient vector lying in the kernel.
    pub fn coordinates(&self, x: usize, v: &SparseVec) -> SparseVec {
        let d = self.data(x);
        d.free.iter().enumerate().filter_map(|(i, c)| v.get(c).map(|a| (i, a.clone()))).collect()
    }
}

impl FaModel for KernelModel {
    fn name(&self) -> String {
        self.name.clone()
    }
    fn dim(&self, x: usize) -> usize {
        self.data(x).basis.len()
    }
    fn image(&self, f: &SetMap, col: usize) -> SparseVec {
        let v = apply(self.ambient.as_ref(), f, &self.data(f.src()).basis[col]);
        self.coordinates(f.dst(), &v)
    }
    fn outer_degree(&self) -> usize {
        self.ambient.outer_degree()
    }
    fn outer_image(&self, perm: &[usize], x: usize, col: usize) -> SparseVec {
        let v = apply_outer(self.ambient.as_ref(), perm, x, &self.data(x).basis[col]);
        self.coordinates(x, &v)
    }
}

/// The Young symmetrizer Σ_{r ∈ R} Σ_{c ∈ C} sgn(c) r∘c of the row-reading tableau of λ.
pub fn young_symmetrizer(lambda: &Partition) -> Vec<(Vec<usize>, i64)> {
    let n = lambda.size();
    let mut rows = Vec::new();
    let mut start = 0;
    for &r in lambda.parts() {
        rows.push((start..start + r).collect::<Vec<_>>());
        start += r;
    }
    let cols: Vec<Vec<usize>> = (0..lambda.part(0))
        .map(|j| rows.iter().filter(|row| row.len() > j).map(|row| row[j]).collect())
        .collect();
    let row_group = block_permutations(n, &rows);
    let col_group = block_permutations(n, &cols);
    let mut terms: HashMap<Vec<usize>, i64> = HashMap::new();
    for r in &row_group {
        for c in &col_group {
            *terms.entry(compose(r, c)).or_insert(0) += sign_of(c);
        }
    }
    let mut out: Vec<_> = terms.into_iter().filter(|(_, c)| *c != 0).collect();
    out.sort();
    out
}

/// All permutations of {0..n} preserving each block setwise.
fn block_permutations(n: usize, blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![(0..n).collect::<Vec<_>>()];
    for block in blocks {
        let mut next = Vec::new();
        for base in &out {
            for p in permutations(block.len()) {
                let mut perm = base.clone();
                for (i, &b) in block.iter().enumerate() {
                    perm[b] = block[p[i]];
                }
                next.push(perm);
            }
        }
        out = next;
    }
    out
}

/// Σ c·(outer action of perm) on a vector.
pub fn apply_group_element(model: &dyn FaModel, elt: &[(Vec<usize>, i64)], x: usize, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (perm, c) in elt {
        axpy(&mut out, &q(*c), &apply_outer(model, perm, x, v));
    }
    out
}

/// S_λ applied to a functor with a place-permutation action: the image of the Young symmetrizer.
pub fn schur_model(lambda: &Partition, base: Arc<dyn FaModel>) -> SubModel {
    let e = young_symmetrizer(lambda);
    let name = format!("schur:{lambda}:{}", base.name().split(':').next().unwrap_or(""));
    let ambient = base.clone();
    let span: SpanFn = Box::new(move |x| {
        (0..ambient.dim(x)).map(|c| apply_group_element(ambient.as_ref(), &e, x, &unit(c))).collect()
    });
    SubModel::new(name, base, span)
}

/// P̄^{⊗n}/Λ^n(P̄) built generically as a quotient by antisymmetrized tensors.
pub fn pbar_mod_lambda_generic(n: usize) -> QuotientModel {
    let ambient: Arc<dyn FaModel> = Arc::new(PbarTensor { n });
    let anti: Vec<(Vec<usize>, i64)> = permutations(n).into_iter().map(|p| {
        let s = sign_of(&p);
        (p, s)
    }).collect();
    let amb = ambient.clone();
    let span: SpanFn = Box::new(move |x| {
        (0..amb.dim(x)).map(|c| apply_group_element(amb.as_ref(), &anti, x, &unit(c))).collect()
    });
    QuotientModel::new(format!("pbar-mod-lambda-generic:{n}"), ambient, span)
}

/// P̄^{⊗n} as the kernel of the augmentations P^FA_n → ⊕_i P^FA_{n−1}.
pub fn pbar_kernel(n: usize) -> KernelModel {
    let ambient: Arc<dyn FaModel> = Arc::new(TensorPower { n });
    let map: ColumnFn = Box::new(move |x, col| {
        // Contract position i; block i of the target has x^{n−1} coordinates.
        let t = unradix(col, x, n);
        let block = pow(x, n.saturating_sub(1));
        (0..n)
            .map(|i| {
                let mut rest = t.clone();
                rest.remove(i);
                (i * block + radix(&rest, x), Q::one())
            })
            .collect()
    });
    KernelModel::new(format!("pbar-kernel:{n}"), ambient, map)
}

/// ℙ_m = Λ^{m+1}(P^FA) ⊕ P̄^{⊗m}/Λ^m(P̄), with S_m acting on the first summand by sign.
pub fn proj_cover(m: usize) -> DirectSum {
    DirectSum::new(
        format!("proj-cover:{m}"),
        vec![
            (Arc::new(Exterior::new(m + 1)) as Arc<dyn FaModel>, OuterMode::Sign),
            (Arc::new(PbarModLambda::new(m)) as Arc<dyn FaModel>, OuterMode::Own),
        ],
        m,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symrep::binomial;

    fn map(dst: usize, img: &[usize]) -> SetMap {
        SetMap::new(dst, img.to_vec()).unwrap()
    }

    #[test]
    fn dimensions_match_closed_forms() {
        for x in 0..=5usize {
            assert_eq!(TensorPower { n: 2 }.dim(x), x * x);
            assert_eq!(PbarTensor { n: 2 }.dim(x), if x == 0 { 0 } else { (x - 1) * (x - 1) });
            assert_eq!(Exterior::new(2).dim(x) as u128, binomial(x, 2));
            assert_eq!(ExteriorBar::new(2).dim(x) as u128, if x == 0 { 0 } else { binomial(x - 1, 2) });
            assert_eq!(Injections::new(2).dim(x), x * x.saturating_sub(1));
            let quotient = if x == 0 { 0 } else { (x - 1) * (x - 1) - binomial(x - 1, 2) as usize };
            assert_eq!(PbarModLambda::new(2).dim(x), quotient);
            assert_eq!(pbar_mod_lambda_generic(2).dim(x), quotient);
            assert_eq!(pbar_kernel(2).dim(x), PbarTensor { n: 2 }.dim(x));
        }
        assert_eq!(PbarTensor { n: 0 }.dim(0), 0);
        assert_eq!(PbarTensor { n: 0 }.dim(3), 1);
        assert_eq!(PbarModLambda::new(1).dim(4), 0);
    }

    #[test]
    fn pbar_basis_rewrites_under_maps() {
        // At size 3 the basis of P̄ is [1]−[0], [2]−[0]; the swap of 0 and 2 sends
        // [1]−[0] to [1]−[2] = ([1]−[0]) − ([2]−[0]).
        let p = PbarTensor { n: 1 };
        let v = p.image(&map(3, &[2, 1, 0]), 0);
        assert_eq!(v, [(0, q(1)), (1, q(-1))].into());
        let folded = p.image(&map(2, &[0, 1, 0]), 1);
        assert!(folded.is_empty());
    }

    #[test]
    fn lambda_bar_top_degree_is_sign() {
        for t in 1..=3 {
            let m = ExteriorBar::new(t);
            assert_eq!(m.dim(t + 1), 1);
            for perm in permutations(t + 1) {
                let v = m.image(&SetMap::from_permutation(&perm), 0);
                assert_eq!(v, [(0, q(sign_of(&perm)))].into());
            }
        }
    }

    #[test]
    fn young_symmetrizer_is_quasi_idempotent() {
        let lam: Partition = "2,1".parse().unwrap();
        let e = young_symmetrizer(&lam);
        // e² = (n!/dim) e with n!/dim = 3.
        let mut sq: HashMap<Vec<usize>, i64> = HashMap::new();
        for (a, x) in &e {
            for (b, y) in &e {
                *sq.entry(compose(a, b)).or_insert(0) += x * y;
            }
        }
        for (p, c) in &e {
            assert_eq!(sq[p], 3 * c);
        }
    }

    #[test]
    fn schur_dimensions() {
        let base: Arc<dyn FaModel> = Arc::new(TensorPower { n: 3 });
        let s = schur_model(&"2,1".parse().unwrap(), base);
        assert_eq!(s.dim(3), 8);
        assert_eq!(s.dim(2), 2);
    }
}
