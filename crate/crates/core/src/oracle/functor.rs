//! Named FA-modules restricted to sets of size ≤ N, with matrices for every map.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{add_entry, RationalMatrix, SparseVec, Q};
use crate::partitions::Partition;

use super::models::{self, apply_group_element, unit, FaModel, OuterMode};
use super::presentation::Presentation;
use super::setmap::{compose_word, factor_with, Generator, SetMap, Strategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchurBase {
    Pfin,
    Pbar,
}

/// A named FA-module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    /// P^FA_n = k[X]^{⊗n}.
    Pfin(usize),
    /// P̄^{⊗n}.
    Pbar(usize),
    LambdaPbar(usize),
    LambdaPfin(usize),
    /// kFI(n, −).
    Kfi(usize),
    /// ℙ_n.
    ProjCover(usize),
    K,
    Kbar,
    K0,
    Schur(Partition, SchurBase),
    PbarModLambda(usize),
    /// The same quotient built generically from the antisymmetrized tensors.
    PbarModLambdaGeneric(usize),
    /// P̄^{⊗n} as a kernel inside P^FA_n.
    PbarKernel(usize),
    Sum(Vec<Descriptor>),
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Pfin(n) => write!(f, "pfin:{n}"),
            Descriptor::Pbar(n) => write!(f, "pbar:{n}"),
            Descriptor::LambdaPbar(k) => write!(f, "lambda-pbar:{k}"),
            Descriptor::LambdaPfin(k) => write!(f, "lambda-pfin:{k}"),
            Descriptor::Kfi(n) => write!(f, "kfi:{n}"),
            Descriptor::ProjCover(n) => write!(f, "proj-cover:{n}"),
            Descriptor::K => write!(f, "k"),
            Descriptor::Kbar => write!(f, "kbar"),
            Descriptor::K0 => write!(f, "k0"),
            Descriptor::Schur(l, SchurBase::Pfin) => write!(f, "schur:{l}:pfin"),
            Descriptor::Schur(l, SchurBase::Pbar) => write!(f, "schur:{l}:pbar"),
            Descriptor::PbarModLambda(n) => write!(f, "pbar-mod-lambda:{n}"),
            Descriptor::PbarModLambdaGeneric(n) => write!(f, "pbar-mod-lambda-generic:{n}"),
            Descriptor::PbarKernel(n) => write!(f, "pbar-kernel:{n}"),
            Descriptor::Sum(parts) => {
                let names: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", names.join("+"))
            }
        }
    }
}

impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('+') {
            let parts = s.split('+').map(str::parse).collect::<Result<Vec<_>>>()?;
            return Ok(Descriptor::Sum(parts));
        }
        let bad = || Error::Parse(format!("unknown module descriptor '{s}'"));
        let mut fields = s.splitn(2, ':');
        let head = fields.next().ok_or_else(bad)?;
        let arg = fields.next();
        let number = || -> Result<usize> {
            arg.ok_or_else(bad)?.trim().parse().map_err(|_| Error::Parse(format!("expected a size in '{s}'")))
        };
        Ok(match head {
            "pfin" => Descriptor::Pfin(number()?),
            "pbar" => Descriptor::Pbar(number()?),
            "lambda-pbar" => Descriptor::LambdaPbar(number()?),
            "lambda-pfin" => Descriptor::LambdaPfin(number()?),
            "kfi" => Descriptor::Kfi(number()?),
            "proj-cover" => Descriptor::ProjCover(number()?),
            "pbar-mod-lambda" => Descriptor::PbarModLambda(number()?),
            "pbar-mod-lambda-generic" => Descriptor::PbarModLambdaGeneric(number()?),
            "pbar-kernel" => {
                let n = number()?;
                if n == 0 {
                    return Err(Error::InvalidArgument("pbar-kernel needs n ≥ 1".into()));
                }
                Descriptor::PbarKernel(n)
            }
            "k" if arg.is_none() => Descriptor::K,
            "kbar" if arg.is_none() => Descriptor::Kbar,
            "k0" if arg.is_none() => Descriptor::K0,
            "schur" => {
                let rest = arg.ok_or_else(bad)?;
                let (lam, base) = rest.rsplit_once(':').ok_or_else(bad)?;
                let base = match base {
                    "pfin" => SchurBase::Pfin,
                    "pbar" => SchurBase::Pbar,
                    _ => return Err(bad()),
                };
                let lam: Partition = lam.parse()?;
                if lam.is_empty() {
                    return Err(Error::InvalidArgument("schur needs a nonempty partition".into()));
                }
                Descriptor::Schur(lam, base)
            }
            _ => return Err(bad()),
        })
    }
}

/// Basis index of ⊗([i] − [0]) in P̄^{⊗n}(n+1).
fn pbar_generator_index(n: usize) -> usize {
    (0..n).fold(0, |acc, i| acc * n + i)
}

/// ⊗_{i=1..n}([i] − [0]) expanded in the tuple basis of P^FA_n(n+1).
fn pbar_generator_in_pfin(n: usize) -> SparseVec {
    let mut out = SparseVec::new();
    for mask in 0..(1usize << n) {
        let idx = (0..n).fold(0, |acc, i| acc * (n + 1) + if mask >> i & 1 == 1 { 0 } else { i + 1 });
        add_entry(&mut out, idx, if mask.count_ones() % 2 == 0 { Q::one() } else { -Q::one() });
    }
    out
}

impl Descriptor {
    /// Builds the explicit model and a presentation whose generators live in it.
    pub fn build(&self) -> Result<(Arc<dyn FaModel>, Presentation)> {
        Ok(match self {
            Descriptor::Pfin(n) => (Arc::new(models::TensorPower { n: *n }), Presentation::representable(*n)),
            Descriptor::Pbar(n) => (
                Arc::new(models::PbarTensor { n: *n }),
                Presentation::pbar_tensor(*n, unit(pbar_generator_index(*n))),
            ),
            Descriptor::LambdaPbar(k) => (Arc::new(models::ExteriorBar::new(*k)), Presentation::exterior_bar(*k, unit(0))),
            Descriptor::LambdaPfin(k) => (Arc::new(models::Exterior::new(*k)), Presentation::exterior(*k, unit(0))),
            Descriptor::Kfi(n) => {
                let model = models::Injections::new(*n);
                let id: Vec<usize> = (0..*n).collect();
                let g = model.index_of(*n, &id).expect("identity is injective");
                (Arc::new(model), Presentation::injections(*n, unit(g)))
            }
            Descriptor::ProjCover(m) => {
                let model = models::proj_cover(*m);
                let quotient = models::PbarModLambda::new(*m);
                let second = quotient.project(m + 1, &unit(pbar_generator_index(*m)));
                let shift = model.offset(1, m + 1);
                let second = second.into_iter().map(|(c, a)| (c + shift, a)).collect();
                (Arc::new(model), Presentation::proj_cover(*m, unit(0), second))
            }
            Descriptor::K => (Arc::new(models::Constant), Presentation::constant()),
            Descriptor::Kbar => (Arc::new(models::ConstantBar), Presentation::pbar_tensor(0, unit(0))),
            Descriptor::K0 => (Arc::new(models::Point), Presentation::point()),
            Descriptor::Schur(lam, base) => {
                let n = lam.size();
                let e = models::young_symmetrizer(lam);
                let (ambient, size, g): (Arc<dyn FaModel>, usize, SparseVec) = match base {
                    SchurBase::Pfin => (
                        Arc::new(models::TensorPower { n }),
                        n,
                        unit((0..n).fold(0, |acc, i| acc * n + i)),
                    ),
                    SchurBase::Pbar => (Arc::new(models::PbarTensor { n }), n + 1, unit(pbar_generator_index(n))),
                };
                let eg = apply_group_element(ambient.as_ref(), &e, size, &g);
                let model = models::schur_model(lam, ambient);
                let gen = model.coordinates(size, &eg).ok_or_else(|| Error::Inconsistent("symmetrized generator".into()))?;
                let pres = match base {
                    SchurBase::Pfin => Presentation::schur_pfin(lam, gen),
                    SchurBase::Pbar => Presentation::schur_pbar(lam, gen),
                };
                (Arc::new(model), pres)
            }
            Descriptor::PbarModLambda(m) => {
                let model = models::PbarModLambda::new(*m);
                let g = model.project(m + 1, &unit(pbar_generator_index(*m)));
                (Arc::new(model), Presentation::pbar_mod_lambda(*m, g))
            }
            Descriptor::PbarModLambdaGeneric(m) => {
                let model = models::pbar_mod_lambda_generic(*m);
                let g = model.project(m + 1, &unit(pbar_generator_index(*m)));
                (Arc::new(model), Presentation::pbar_mod_lambda(*m, g))
            }
            Descriptor::PbarKernel(n) => {
                let model = models::pbar_kernel(*n);
                let g = model.coordinates(n + 1, &pbar_generator_in_pfin(*n));
                (Arc::new(model), Presentation::pbar_tensor(*n, g))
            }
            Descriptor::Sum(parts) => {
                let mut built = Vec::new();
                for p in parts {
                    built.push(p.build()?);
                }
                let summands: Vec<(Arc<dyn FaModel>, OuterMode)> =
                    built.iter().map(|(m, _)| (m.clone(), OuterMode::Trivial)).collect();
                let model = models::DirectSum::new(self.to_string(), summands, 0);
                let mut pres = Vec::new();
                for (i, (_, p)) in built.into_iter().enumerate() {
                    let mut p = p;
                    for (x, v) in p.generators.iter_mut() {
                        let shift = model.offset(i, *x);
                        *v = std::mem::take(v).into_iter().map(|(c, a)| (c + shift, a)).collect();
                    }
                    pres.push(p);
                }
                (Arc::new(model), Presentation::sum(pres, None))
            }
        })
    }
}

/// A module restricted to FA_{≤N}.
pub struct TruncatedFunctor {
    pub descriptor: Descriptor,
    pub trunc: usize,
    pub model: Arc<dyn FaModel>,
    pub presentation: Presentation,
}

impl fmt::Debug for TruncatedFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedFunctor({}, N = {})", self.descriptor, self.trunc)
    }
}

impl TruncatedFunctor {
    pub fn new(descriptor: Descriptor, trunc: usize) -> Result<Self> {
        if trunc < 2 {
            return Err(Error::InvalidArgument(format!("truncation {trunc} is below 2")));
        }
        let (model, presentation) = descriptor.build()?;
        Ok(TruncatedFunctor { descriptor, trunc, model, presentation })
    }

    pub fn parse(descriptor: &str, trunc: usize) -> Result<Self> {
        Self::new(descriptor.parse()?, trunc)
    }

    pub fn dim(&self, x: usize) -> usize {
        self.model.dim(x)
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.trunc).map(|x| self.dim(x)).collect()
    }

    /// The matrix of F(f) computed directly from the model.
    pub fn direct_matrix(&self, f: &SetMap) -> RationalMatrix {
        let cols: Vec<SparseVec> = (0..self.dim(f.src())).map(|c| self.model.image(f, c)).collect();
        RationalMatrix::from_sparse_columns(self.dim(f.dst()), &cols)
    }

    pub fn generator_matrix(&self, g: &Generator) -> RationalMatrix {
        self.direct_matrix(&g.as_map())
    }

    /// F(f) as the product of generator matrices along a factorization of f.
    pub fn map_matrix_with(&self, f: &SetMap, strategy: Strategy) -> Result<RationalMatrix> {
        self.check_size(f.src().max(f.dst()))?;
        let mut m = RationalMatrix::identity(self.dim(f.src()));
        for g in factor_with(f, strategy) {
            m = self.generator_matrix(&g).mul(&m)?;
        }
        Ok(m)
    }

    pub fn map_matrix(&self, f: &SetMap) -> Result<RationalMatrix> {
        self.map_matrix_with(f, Strategy::Primary)
    }

    fn check_size(&self, x: usize) -> Result<()> {
        if x > self.trunc {
            return Err(Error::InvalidArgument(format!("set size {x} exceeds the truncation {}", self.trunc)));
        }
        Ok(())
    }

    /// Every map between sets of size ≤ max_size: both factorizations agree with the direct action.
    pub fn check_functoriality(&self, max_size: usize) -> Result<bool> {
        let top = max_size.min(self.trunc);
        for s in 0..=top {
            for t in 0..=top {
                for f in SetMap::all(s, t) {
                    let direct = self.direct_matrix(&f);
                    for strategy in [Strategy::Primary, Strategy::Alternate] {
                        debug_assert_eq!(compose_word(s, &factor_with(&f, strategy)), f);
                        if self.map_matrix_with(&f, strategy)? != direct {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Whether each outer permutation commutes with every map, up to `max_size`.
    pub fn check_outer_action(&self, max_size: usize) -> bool {
        let d = self.model.outer_degree();
        let top = max_size.min(self.trunc);
        for perm in crate::symrep::permutations(d) {
            for s in 0..=top {
                for t in 0..=top {
                    for f in SetMap::all(s, t) {
                        for c in 0..self.dim(s) {
                            let a = models::apply_outer(self.model.as_ref(), &perm, t, &self.model.image(&f, c));
                            let b = models::apply(self.model.as_ref(), &f, &self.model.outer_image(&perm, s, c));
                            if a != b {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL: &[&str] = &[
        "pfin:2",
        "pbar:2",
        "lambda-pbar:2",
        "lambda-pfin:2",
        "kfi:2",
        "proj-cover:0",
        "proj-cover:1",
        "proj-cover:2",
        "k",
        "kbar",
        "k0",
        "schur:2,1:pfin",
        "schur:2:pbar",
        "pbar-mod-lambda:2",
        "pbar-mod-lambda-generic:2",
        "pbar-kernel:2",
        "k0+pbar:1",
    ];

    #[test]
    fn descriptors_round_trip() {
        for s in ALL {
            let d: Descriptor = s.parse().unwrap();
            assert_eq!(&d.to_string(), s);
        }
        for bad in ["pfin", "pfin:x", "k:1", "schur:2,1:q", "pbar-kernel:0", "widget:2"] {
            assert!(bad.parse::<Descriptor>().is_err(), "{bad}");
        }
    }

    #[test]
    fn presentations_match_models() {
        for s in ALL {
            let f = TruncatedFunctor::parse(s, 4).unwrap();
            let top = f.presentation.max_size().max(3);
            let report = f.presentation.check(f.model.as_ref(), top).unwrap();
            assert!(report.pass(), "{s}: {report:?}");
        }
    }

    #[test]
    fn models_are_functors() {
        for s in ALL {
            let f = TruncatedFunctor::parse(s, 3).unwrap();
            assert!(f.check_functoriality(3).unwrap(), "{s}");
            assert!(f.check_outer_action(3), "{s}");
        }
    }

    #[test]
    fn small_truncations_are_rejected() {
        assert!(TruncatedFunctor::parse("pfin:1", 1).is_err());
    }

    #[test]
    fn projective_cover_dimensions() {
        let f = TruncatedFunctor::parse("proj-cover:1", 4).unwrap();
        assert_eq!(f.dims(), vec![0, 0, 1, 3, 6]);
        let f = TruncatedFunctor::parse("proj-cover:2", 4).unwrap();
        // Λ³P ⊕ P̄^{⊗2}/Λ²P̄: C(x,3) + (x−1)² − C(x−1,2).
        assert_eq!(f.dims(), vec![0, 0, 1, 4, 10]);
    }
}
