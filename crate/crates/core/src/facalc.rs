//! Closed-form computations for kFA-modules.
//!
//! Bimodule classes are indexed (left, right) with the left variable
//! contravariant. For hom classes of the form hom(X_s, Y_t) the left variable
//! carries the target's symmetric group and the right one the source's.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fbgroth::{series_s, VirtualFB, VirtualFBBimod};
use crate::partitions::{partitions_of, Partition};
use crate::symrep::{binomial, perm_character, sgn_coinvariants, IrrDecomposition, MapKind};

/// Class of kFA, kFS or kFI in bidegrees ≤ (trunc, trunc), from permutation characters.
fn map_class(trunc_left: usize, trunc_right: usize, kind: MapKind) -> Result<VirtualFBBimod> {
    let mut out = VirtualFBBimod::zero(trunc_left, trunc_right);
    for s in 0..=trunc_left {
        for t in 0..=trunc_right {
            let d = perm_character(s, t, kind).decompose()?;
            out = out.add(&VirtualFBBimod::from_bidegree(trunc_left, trunc_right, &d))?;
        }
    }
    Ok(out)
}

pub fn fa_class(trunc: usize) -> Result<VirtualFBBimod> {
    map_class(trunc, trunc, MapKind::All)
}

pub fn fi_class(trunc: usize) -> Result<VirtualFBBimod> {
    map_class(trunc, trunc, MapKind::Injective)
}

/// [kFS], computed from surjection characters and checked against kFA ⊙ 𝒮(0).
pub fn fs_class(trunc: usize) -> Result<VirtualFBBimod> {
    let direct = fs_class_direct(trunc, trunc)?;
    let via_fa = fa_class(trunc)?.convolve_right(&series_s(0, trunc))?;
    if direct != via_fa {
        return Err(Error::Inconsistent(format!(
            "surjection characters disagree with kFA ⊙ 𝒮(0) below degree {trunc}"
        )));
    }
    Ok(direct)
}

fn fs_class_direct(trunc_left: usize, trunc_right: usize) -> Result<VirtualFBBimod> {
    map_class(trunc_left, trunc_right, MapKind::Surjective)
}

/// A simple kFA-module.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleLabel {
    /// C_λ for λ ⊢ n > 0 not a column.
    C(Partition),
    /// Λ^n(P̄); n = 0 is the constant functor on nonempty sets.
    LambdaBar(usize),
    /// k supported on the empty set.
    K0,
}

impl SimpleLabel {
    pub fn c(lambda: Partition) -> Result<Self> {
        if lambda.is_empty() || lambda.is_column() {
            return Err(Error::InvalidArgument(format!(
                "C{} needs a nonempty partition that is not a column",
                lambda.pretty()
            )));
        }
        Ok(SimpleLabel::C(lambda))
    }

    /// The label of C̃_λ: C_λ unless λ = (1^n), which is Λ^{n−1}(P̄).
    pub fn c_tilde(lambda: Partition) -> Result<Self> {
        if !lambda.is_empty() && lambda.is_column() {
            Ok(SimpleLabel::LambdaBar(lambda.size() - 1))
        } else {
            Self::c(lambda)
        }
    }

    /// The smallest set size on which the simple is nonzero.
    pub fn min_degree(&self) -> usize {
        match self {
            SimpleLabel::C(l) => l.size(),
            SimpleLabel::LambdaBar(n) => n + 1,
            SimpleLabel::K0 => 0,
        }
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleLabel::C(l) => write!(f, "C {l}"),
            SimpleLabel::LambdaBar(n) => write!(f, "L {n}"),
            SimpleLabel::K0 => write!(f, "k0"),
        }
    }
}

/// Parses `C 2,1`, `L 1` and `k0`.
impl FromStr for SimpleLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "k0" {
            return Ok(SimpleLabel::K0);
        }
        let (kind, rest) = s.split_once(char::is_whitespace).ok_or_else(|| Error::Parse(format!("bad label '{s}'")))?;
        match kind {
            "C" => SimpleLabel::c(rest.parse()?),
            "L" => rest.trim().parse().map(SimpleLabel::LambdaBar).map_err(|_| Error::Parse(format!("bad label '{s}'"))),
            _ => Err(Error::Parse(format!("unknown label kind '{kind}'"))),
        }
    }
}

impl Serialize for SimpleLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// An indecomposable projective summand.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProjectiveLabel {
    /// S_ν(P̄).
    SchurPbar(Partition),
    /// Λ^m(P^FA).
    LambdaPfin(usize),
}

impl ProjectiveLabel {
    /// Dimension on a set of size m.
    pub fn dimension(&self, m: usize) -> u128 {
        match self {
            ProjectiveLabel::SchurPbar(nu) => {
                if m == 0 {
                    0
                } else {
                    schur_dimension(nu, m - 1)
                }
            }
            ProjectiveLabel::LambdaPfin(k) => binomial(m, *k),
        }
    }
}

impl fmt::Display for ProjectiveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectiveLabel::SchurPbar(nu) => write!(f, "S{}(Pbar)", nu.pretty()),
            ProjectiveLabel::LambdaPfin(k) => write!(f, "Lambda^{k}(P)"),
        }
    }
}

impl Serialize for ProjectiveLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Either kind of label, for mixed structure results.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModuleLabel {
    Simple(SimpleLabel),
    Projective(ProjectiveLabel),
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleLabel::Simple(s) => s.fmt(f),
            ModuleLabel::Projective(p) => p.fmt(f),
        }
    }
}

impl Serialize for ModuleLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// dim S_λ(k^m), by the hook-content formula.
pub fn schur_dimension(lambda: &Partition, m: usize) -> u128 {
    let conj = lambda.conjugate();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let content = m as i64 + j as i64 - i as i64;
            if content <= 0 {
                return 0;
            }
            num *= content as u128;
            den *= (row - j + conj.parts()[j] - i - 1) as u128;
        }
    }
    num / den
}

/// Evaluation of a simple module on a set of size t, as an S_t-class.
pub fn simple_eval(label: &SimpleLabel, t: usize) -> Result<IrrDecomposition> {
    match label {
        SimpleLabel::C(lambda) => {
            if lambda.is_empty() || lambda.is_column() {
                return Err(Error::InvalidArgument(format!("C{} is not a simple label", lambda.pretty())));
            }
            let mults = lambda.horizontal_strip_additions(t).into_iter().map(|mu| (mu, 1)).collect();
            IrrDecomposition::new(t, mults)
        }
        SimpleLabel::LambdaBar(n) => {
            if t <= *n {
                return Ok(IrrDecomposition::zero(t));
            }
            let mut parts = vec![t - n];
            parts.extend(std::iter::repeat_n(1, *n));
            Ok(IrrDecomposition::irreducible(Partition::new(parts)?))
        }
        SimpleLabel::K0 => {
            Ok(if t == 0 { IrrDecomposition::trivial(0) } else { IrrDecomposition::zero(t) })
        }
    }
}

pub fn simple_dimension(label: &SimpleLabel, t: usize) -> Result<i64> {
    simple_eval(label, t)?.dimension()
}

/// Indecomposable projective summands of S_λ(P^FA).
pub fn decompose_schur_pfin(lambda: &Partition) -> Result<Vec<ProjectiveLabel>> {
    let n = lambda.size();
    if n == 0 {
        return Err(Error::InvalidArgument("S_λ(P) needs |λ| ≥ 1".into()));
    }
    let mut nus = lambda.horizontal_strip_removals();
    let mut out = Vec::new();
    if let Some(s) = lambda.hook_arm() {
        let drop = [Partition::column(n - s + 1), Partition::column(n - s)];
        nus.retain(|nu| !drop.contains(nu));
        out.push(ProjectiveLabel::LambdaPfin(n - s + 1));
    }
    out.extend(nus.into_iter().rev().map(ProjectiveLabel::SchurPbar));
    out.sort();
    Ok(out)
}

/// Composition structure of kFI(n, −): Λ^n(P^FA) plus C_λ^{dim S_λ} for λ ⊢ n, λ ≠ (1^n).
pub fn structure_kfi(n: usize) -> Result<Vec<(ModuleLabel, u64)>> {
    if n == 0 {
        return Err(Error::InvalidArgument("kFI(n, −) structure needs n ≥ 1".into()));
    }
    let mut out = vec![(ModuleLabel::Projective(ProjectiveLabel::LambdaPfin(n)), 1)];
    for lambda in partitions_of(n) {
        if !lambda.is_column() {
            let d = lambda.dim();
            out.push((ModuleLabel::Simple(SimpleLabel::C(lambda)), d));
        }
    }
    Ok(out)
}

/// The underlying FB-module of a kFA-module, in degrees ≤ trunc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FBModuleData {
    pub trunc: usize,
    pub f0_dim: u64,
    /// Degrees 1..=trunc; absent degrees are zero.
    pub degrees: BTreeMap<usize, IrrDecomposition>,
}

impl FBModuleData {
    pub fn new(trunc: usize, f0_dim: u64, degrees: BTreeMap<usize, IrrDecomposition>) -> Result<Self> {
        for (&k, d) in &degrees {
            if k == 0 || k > trunc {
                return Err(Error::InvalidArgument(format!("degree {k} outside 1..={trunc}")));
            }
            if d.degree() != k {
                return Err(Error::InvalidArgument(format!("degree {k} holds an S_{} class", d.degree())));
            }
            if !d.is_effective() {
                return Err(Error::NegativeMultiplicity(format!("degree {k} of a genuine module")));
            }
        }
        let degrees = degrees.into_iter().filter(|(_, d)| !d.is_zero()).collect();
        Ok(FBModuleData { trunc, f0_dim, degrees })
    }

    /// Reads degrees 1..=trunc off a class; degree 0 must be a multiple of triv_0.
    pub fn from_class(class: &VirtualFB) -> Result<Self> {
        let f0 = class.get(&Partition::empty());
        if f0 < 0 {
            return Err(Error::NegativeMultiplicity("degree 0".into()));
        }
        let degrees = (1..=class.trunc()).map(|k| (k, class.degree(k))).collect();
        Self::new(class.trunc(), f0 as u64, degrees)
    }

    pub fn degree(&self, k: usize) -> IrrDecomposition {
        self.degrees.get(&k).cloned().unwrap_or_else(|| IrrDecomposition::zero(k))
    }

    pub fn dimension(&self, k: usize) -> Result<i64> {
        if k == 0 {
            Ok(self.f0_dim as i64)
        } else {
            self.degree(k).dimension()
        }
    }

    /// [F̄]: the positive degrees.
    pub fn bar_class(&self) -> VirtualFB {
        let mut v = VirtualFB::zero(self.trunc);
        for d in self.degrees.values() {
            v = v.add(&VirtualFB::from_degree(self.trunc, d)).expect("same truncation");
        }
        v
    }

    /// [F], including degree 0.
    pub fn class(&self) -> VirtualFB {
        self.bar_class()
            .add(&VirtualFB::monomial(self.trunc, Partition::empty(), self.f0_dim as i64))
            .expect("same truncation")
    }
}

#[derive(Serialize, Deserialize)]
struct FBModuleDataJson {
    trunc: usize,
    #[serde(rename = "F0_dim")]
    f0_dim: u64,
    degrees: BTreeMap<usize, IrrDecomposition>,
}

impl Serialize for FBModuleData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FBModuleDataJson { trunc: self.trunc, f0_dim: self.f0_dim, degrees: self.degrees.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FBModuleData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = FBModuleDataJson::deserialize(d)?;
        FBModuleData::new(raw.trunc, raw.f0_dim, raw.degrees).map_err(serde::de::Error::custom)
    }
}

/// Class of hom(ℙ_•, F) as an FB-module in •, valid in degrees ≤ trunc − 1.
pub fn hom_projcover(f: &FBModuleData) -> Result<VirtualFB> {
    if f.trunc == 0 {
        return Err(Error::InvalidArgument("hom(ℙ_•, F) needs trunc ≥ 1".into()));
    }
    let n = f.trunc;
    let mut out = f.bar_class().day(&series_s(0, n))?;
    for k in 1..=n {
        let c = sgn_coinvariants(&f.degree(k));
        if c != 0 {
            out = out.add(&series_s(k - 1, n).scale(c)?)?;
        }
    }
    Ok(out.truncate(n - 1))
}

/// The same formula applied in the right variable of a bimodule class, carrying
/// the left variable along.
pub fn hom_projcover_bimod(f: &VirtualFBBimod) -> Result<VirtualFBBimod> {
    let (tl, tr) = (f.trunc_left(), f.trunc_right());
    if tr == 0 {
        return Err(Error::InvalidArgument("hom(ℙ_•, F) needs trunc ≥ 1".into()));
    }
    let bar = VirtualFBBimod::new(
        tl,
        tr,
        f.coeffs().iter().filter(|((_, r), _)| !r.is_empty()).map(|(k, &c)| (k.clone(), c)).collect(),
    )?;
    let mut out = bar.convolve_right(&series_s(0, tr))?;
    for k in 1..=tr {
        let coinv = f.tensor_right(&Partition::column(k));
        if !coinv.is_zero() {
            out = out.add(&VirtualFBBimod::boxtimes(&coinv, &series_s(k - 1, tr))?)?;
        }
    }
    Ok(out.truncate(tl, tr - 1))
}

/// sgn_k ⊗_{S_k} kFS(−, k) as a class in the left variable.
fn sgn_tensor_fs(fs: &VirtualFBBimod, k: usize) -> VirtualFB {
    fs.tensor_right(&Partition::column(k))
}

/// hom(ℙ_•, P^FA_n): left degree n (the S_n-action on P^FA_n), right degree •.
pub fn hom_projcover_pfin(n: usize, trunc: usize) -> Result<VirtualFBBimod> {
    let fs = fs_class_direct(n, trunc + 1)?;
    let mut out = fs.left_row(n).truncate(n, trunc);
    for k in 1..=(trunc + 1).min(n) {
        let coinv = sgn_tensor_fs(&fs, k);
        let row = VirtualFB::new(n, coinv.coeffs().iter().filter(|(p, _)| p.size() == n).map(|(p, &c)| (p.clone(), c)).collect())?;
        if !row.is_zero() {
            out = out.add(&VirtualFBBimod::boxtimes(&row, &VirtualFB::sgn(k - 1, trunc))?)?;
        }
    }
    Ok(out)
}

/// hom(ℙ_•, P̄^{⊗*}): left degree * (target), right degree • (source).
pub fn hom_projcover_pbar(trunc_left: usize, trunc_right: usize) -> Result<VirtualFBBimod> {
    let fs = fs_class_direct(trunc_left, trunc_right + 1)?;
    let s0 = series_s(0, trunc_left);
    let mut out = fs.truncate(trunc_left, trunc_right).convolve_left(&s0)?;
    for k in 1..=trunc_right + 1 {
        let a = sgn_tensor_fs(&fs, k).day(&s0)?;
        if !a.is_zero() {
            out = out.add(&VirtualFBBimod::boxtimes(&a, &VirtualFB::sgn(k - 1, trunc_right))?)?;
        }
    }
    Ok(out)
}

/// Σ_{ℓ ≥ 0} sgn_ℓ ⊠ sgn_{ℓ+1}.
pub fn endo_correction(trunc_left: usize, trunc_right: usize) -> Result<VirtualFBBimod> {
    let mut out = VirtualFBBimod::zero(trunc_left, trunc_right);
    for l in 0..=trunc_left.min(trunc_right.saturating_sub(1)) {
        if l + 1 > trunc_right {
            break;
        }
        out = out.add(&VirtualFBBimod::boxtimes(&VirtualFB::sgn(l, trunc_left), &VirtualFB::sgn(l + 1, trunc_right))?)?;
    }
    Ok(out)
}

/// End of ⊕ ℙ_n: entry (left t, right s) is hom(ℙ_s, ℙ_t).
pub fn endo_projcover(trunc_left: usize, trunc_right: usize) -> Result<VirtualFBBimod> {
    hom_projcover_pbar(trunc_left, trunc_right)?.add(&endo_correction(trunc_left, trunc_right)?)
}

/// hom(P̄^{⊗s}, P̄^{⊗t}) at (left t, right s).
pub fn hom_pbar_pbar(trunc_left: usize, trunc_right: usize) -> Result<VirtualFBBimod> {
    let fs = fs_class_direct(trunc_left, trunc_right)?;
    let mut out = fs.convolve_left(&series_s(0, trunc_left))?;
    for k in 1..=trunc_right + 1 {
        let sk = series_s(k, trunc_left);
        if !sk.is_zero() {
            out = out.add(&VirtualFBBimod::boxtimes(&sk, &VirtualFB::sgn(k - 1, trunc_right))?)?;
        }
    }
    Ok(out)
}

/// hom(Λ^s(P̄), P̄^{⊗*}) as a class in *.
pub fn hom_lambdabar_pbar(s: usize, trunc: usize) -> Result<VirtualFB> {
    let fs = fs_class_direct(trunc, s)?;
    let s0 = series_s(0, trunc);
    sgn_tensor_fs(&fs, s).day(&s0)?.add(&series_s(s + 1, trunc))
}

/// [P̄^{⊗*}] as a bimodule class: left * (the tensor exponent), right the set size.
pub fn pbar_tensor_class(trunc_left: usize, trunc_right: usize) -> Result<VirtualFBBimod> {
    let fa = map_class(trunc_left, trunc_right, MapKind::All)?;
    let e00 = VirtualFBBimod::boxtimes(&VirtualFB::unit(trunc_left), &VirtualFB::unit(trunc_right))?;
    fa.sub(&e00)?.convolve_left(&series_s(0, trunc_left))
}

/// Composition-factor multiplicities from the FB-data of F, for simples whose
/// projective cover lies below the truncation.
pub fn multiplicities(f: &FBModuleData) -> Result<BTreeMap<SimpleLabel, i64>> {
    let h = hom_projcover(f)?;
    let mut out = BTreeMap::new();
    if f.f0_dim > 0 {
        out.insert(SimpleLabel::K0, f.f0_dim as i64);
    }
    for (lambda, &c) in h.coeffs() {
        if c < 0 {
            return Err(Error::NegativeMultiplicity(format!(
                "hom(ℙ_{}, F) has coefficient {c} at {}",
                lambda.size(),
                lambda.pretty()
            )));
        }
        let label = if lambda.is_column() {
            SimpleLabel::LambdaBar(lambda.size())
        } else {
            SimpleLabel::C(lambda.clone())
        };
        out.insert(label, c);
    }
    Ok(out)
}

/// Σ mult · dim(simple)(t).
pub fn composition_dimension(mults: &BTreeMap<SimpleLabel, i64>, t: usize) -> Result<i64> {
    mults.iter().try_fold(0i64, |acc, (label, &m)| Ok(acc + m * simple_dimension(label, t)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn fs_examples() {
        let fs = fs_class(4).unwrap();
        let e = fs.entry(2, 2);
        assert_eq!(e.mults.len(), 2);
        assert_eq!(e.get(&p("2"), &p("2")), 1);
        assert_eq!(e.get(&p("1,1"), &p("1,1")), 1);
        assert_eq!(fs.dimension(3, 2), 6);
        assert!(fs.entry(1, 3).mults.is_empty());
    }

    #[test]
    fn simple_eval_examples() {
        let c2 = simple_eval(&SimpleLabel::c(p("2")).unwrap(), 3).unwrap();
        assert_eq!(c2.mults().len(), 2);
        assert_eq!(c2.get(&p("3")) + c2.get(&p("2,1")), 2);
        assert_eq!(simple_eval(&SimpleLabel::LambdaBar(1), 3).unwrap(), IrrDecomposition::irreducible(p("2,1")));
        for l in ["2", "3,1", "2,2", "3,2,1"] {
            let lam = p(l);
            let got = simple_eval(&SimpleLabel::c(lam.clone()).unwrap(), lam.size()).unwrap();
            assert_eq!(got, IrrDecomposition::irreducible(lam));
        }
        assert!(simple_eval(&SimpleLabel::LambdaBar(0), 0).unwrap().is_zero());
        assert_eq!(simple_eval(&SimpleLabel::K0, 0).unwrap(), IrrDecomposition::trivial(0));
        assert!(SimpleLabel::c(p("1,1")).is_err());
    }

    #[test]
    fn label_text() {
        for s in ["C 2,1", "L 1", "k0", "L 0"] {
            assert_eq!(s.parse::<SimpleLabel>().unwrap().to_string(), s);
        }
        assert!("X 1".parse::<SimpleLabel>().is_err());
        assert!("C 1,1".parse::<SimpleLabel>().is_err());
        assert_eq!(SimpleLabel::c_tilde(p("1,1,1")).unwrap(), SimpleLabel::LambdaBar(2));
    }

    #[test]
    fn schur_examples() {
        use ProjectiveLabel::*;
        assert_eq!(decompose_schur_pfin(&p("2")).unwrap(), vec![SchurPbar(p("2")), LambdaPfin(1)]);
        assert_eq!(decompose_schur_pfin(&p("1,1")).unwrap(), vec![LambdaPfin(2)]);
        let got = decompose_schur_pfin(&p("2,1")).unwrap();
        assert_eq!(got, vec![SchurPbar(p("2")), SchurPbar(p("2,1")), LambdaPfin(2)]);
        let dims: Vec<u128> = got.iter().map(|l| l.dimension(3)).collect();
        assert_eq!(schur_dimension(&p("2,1"), 3), 8);
        assert_eq!(dims.iter().sum::<u128>(), 8);
        assert!(decompose_schur_pfin(&Partition::empty()).is_err());
    }

    #[test]
    fn kfi_structure_examples() {
        let one = structure_kfi(1).unwrap();
        assert_eq!(one, vec![(ModuleLabel::Projective(ProjectiveLabel::LambdaPfin(1)), 1)]);
        let two = structure_kfi(2).unwrap();
        assert_eq!(two.len(), 2);
        let dim3: i64 = binomial(3, 2) as i64 + simple_dimension(&SimpleLabel::C(p("2")), 3).unwrap();
        assert_eq!(dim3, 6);
    }

    fn constant(trunc: usize) -> FBModuleData {
        FBModuleData::new(trunc, 1, (1..=trunc).map(|k| (k, IrrDecomposition::trivial(k))).collect()).unwrap()
    }

    #[test]
    fn hom_projcover_examples() {
        let k0 = FBModuleData::new(5, 1, BTreeMap::new()).unwrap();
        assert!(hom_projcover(&k0).unwrap().is_zero());
        assert_eq!(hom_projcover(&constant(6)).unwrap(), VirtualFB::unit(5));
        let p1 = FBModuleData::new(
            6,
            0,
            (1..=6)
                .map(|k| {
                    let d = IrrDecomposition::trivial(k);
                    let d = if k >= 2 { d.add(&IrrDecomposition::irreducible(hook(k))).unwrap() } else { d };
                    (k, d)
                })
                .collect(),
        )
        .unwrap();
        let h = hom_projcover(&p1).unwrap();
        assert_eq!(h, VirtualFB::new(5, [(p(""), 1), (p("1"), 1)].into()).unwrap());
        let m = multiplicities(&p1).unwrap();
        assert_eq!(m, [(SimpleLabel::LambdaBar(0), 1), (SimpleLabel::LambdaBar(1), 1)].into());
        let mk = multiplicities(&constant(6)).unwrap();
        assert_eq!(mk, [(SimpleLabel::K0, 1), (SimpleLabel::LambdaBar(0), 1)].into());
    }

    fn hook(k: usize) -> Partition {
        crate::partitions::hook(k, 2).unwrap()
    }

    #[test]
    fn hom_projcover_pfin_examples() {
        let one = hom_projcover_pfin(1, 4).unwrap();
        assert_eq!(one.dimension(1, 0), 1);
        assert_eq!(one.dimension(1, 1), 1);
        assert_eq!(one.dimension(1, 2), 0);
        let two = hom_projcover_pfin(2, 4).unwrap();
        assert_eq!(two.dimension(2, 1), 2);
        let zero = hom_projcover_pfin(0, 4).unwrap();
        assert_eq!(zero.dimension(0, 0), 1);
        assert!((1..=4).all(|d| zero.dimension(0, d) == 0));
    }

    #[test]
    fn pbar_hom_examples() {
        let h = hom_projcover_pbar(4, 4).unwrap();
        assert_eq!(h.dimension(0, 0), 1);
        assert_eq!(h.dimension(1, 1), 1);
        let e = endo_projcover(4, 4).unwrap();
        for n in 0..=4 {
            let reg: BTreeMap<_, _> = partitions_of(n).into_iter().map(|l| ((l.clone(), l), 1)).collect();
            assert_eq!(e.entry(n, n).mults, reg);
        }
        assert_eq!(e.get(&Partition::column(1), &Partition::column(2)) - h.get(&Partition::column(1), &Partition::column(2)), 1);
        assert_eq!(e.dimension(1, 0), 0);
        let pp = hom_pbar_pbar(4, 4).unwrap();
        for t in 0..=4 {
            assert_eq!(pp.dimension(t, t), (1..=t as i64).product::<i64>());
            for s in t + 1..=4 {
                assert!(pp.entry(t, s).mults.is_empty());
            }
        }
        assert!(pp.entry(2, 1).mults.is_empty());
        assert!(pp.entry(1, 0).mults.is_empty());
    }

    #[test]
    fn hom_lambdabar_examples() {
        assert_eq!(hom_lambdabar_pbar(0, 4).unwrap().dimension(0).unwrap(), 1);
        for t in 0..=4 {
            assert_eq!(hom_lambdabar_pbar(t, 5).unwrap().degree(t), IrrDecomposition::sign(t));
        }
        assert_eq!(hom_lambdabar_pbar(1, 4).unwrap().dimension(0).unwrap(), 0);
    }

    #[test]
    fn fb_data_json() {
        let f = constant(2);
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.starts_with(r#"{"trunc":2,"F0_dim":1,"degrees":{"1":"#));
        assert_eq!(serde_json::from_str::<FBModuleData>(&s).unwrap(), f);
    }
}
