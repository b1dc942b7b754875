//! Invariant subspaces of `R^{S_n}` spanned by the inversion functions and
//! their decomposition `Ũ_Inv = V_1 ⊥ V_2` into irreducibles.
//!
//! Irreducibility is certified with characters computed as traces of the
//! exact representation matrices; the exterior-square model `F ∧ F` is
//! checked against `Ũ_Inv` through `ψ(e_i ∧ e_j) = tk_ij`.

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{
    self, format_rational, gram_matrix, int, InnerProductSpace, Matrix, Rational,
};
use crate::funcspace::{
    k_func, lift_through_cosets, pair_position, pairs, tk_func, v_func, w_func, GroupFunction,
    Symmetry,
};
use crate::report::CheckReport;
use crate::symgroup::{binomial, conjugacy_classes, factorial, group, Permutation};

pub const MIN_N: usize = 3;
pub const MAX_N: usize = 6;

pub(crate) fn check_range(n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        return Err(Error::NOutOfRange { n, min, max });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SubspaceTag {
    V0,
    V1,
    V2,
    #[serde(rename = "U_INV")]
    UInv,
    #[serde(rename = "U_TILDE")]
    UTilde,
    Custom,
}

/// A subspace of `R^{S_n}` with a linearly independent basis and its cached
/// Gram matrix (and inverse).
#[derive(Clone, Debug)]
pub struct Subspace {
    n: usize,
    tag: SubspaceTag,
    basis: Vec<GroupFunction>,
    gram: Matrix,
    gram_inverse: Matrix,
}

impl Subspace {
    /// Fails with `SingularGram` when `basis` is linearly dependent.
    pub fn new(tag: SubspaceTag, n: usize, basis: Vec<GroupFunction>) -> Result<Self> {
        if let Some(bad) = basis.iter().find(|b| b.n() != n) {
            return Err(Error::SizeMismatch {
                left: bad.n(),
                right: n,
            });
        }
        let gram = gram_matrix(&basis);
        let gram_inverse = gram.inverse().ok_or(Error::SingularGram)?;
        Ok(Self {
            n,
            tag,
            basis,
            gram,
            gram_inverse,
        })
    }

    /// `V_0 = R·𝟙`.
    pub fn v0(n: usize) -> Result<Self> {
        Self::new(SubspaceTag::V0, n, vec![GroupFunction::one(n)?])
    }

    /// `V_1 = span{v_1, …, v_{n−1}}` (`v_n` is dropped since `Σ v_i = 0`).
    pub fn v1(n: usize) -> Result<Self> {
        let basis = (1..n).map(|i| v_func(n, i)).collect::<Result<_>>()?;
        Self::new(SubspaceTag::V1, n, basis)
    }

    /// `V_2 = span{w̃_ij : 1 ≤ i < j ≤ n − 1}`.
    pub fn v2(n: usize) -> Result<Self> {
        let basis = (1..n)
            .tuple_combinations()
            .map(|(i, j)| w_func(n, i, j))
            .collect::<Result<_>>()?;
        Self::new(SubspaceTag::V2, n, basis)
    }

    /// `U_Inv = span{𝟙, k_ij}`, basis ordered `𝟙` then pairs.
    pub fn u_inv(n: usize) -> Result<Self> {
        let mut basis = vec![GroupFunction::one(n)?];
        for p in pairs(n) {
            basis.push(k_func(n, p)?);
        }
        Self::new(SubspaceTag::UInv, n, basis)
    }

    /// `Ũ_Inv = span{tk_ij : i < j}` in pair order.
    pub fn u_tilde(n: usize) -> Result<Self> {
        let basis = pairs(n)
            .into_iter()
            .map(|p| tk_func(n, p.i, p.j))
            .collect::<Result<_>>()?;
        Self::new(SubspaceTag::UTilde, n, basis)
    }

    /// `span{k_ij : i < j}` without `𝟙`; not invariant under relabeling.
    pub fn k_span(n: usize) -> Result<Self> {
        let basis = pairs(n)
            .into_iter()
            .map(|p| k_func(n, p))
            .collect::<Result<_>>()?;
        Self::new(SubspaceTag::Custom, n, basis)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tag(&self) -> SubspaceTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[GroupFunction] {
        &self.basis
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Orthogonal projection together with its coefficients in the basis.
    pub fn project_with_coefficients(
        &self,
        f: &GroupFunction,
    ) -> Result<(GroupFunction, Vec<Rational>)> {
        if f.n() != self.n {
            return Err(Error::SizeMismatch {
                left: f.n(),
                right: self.n,
            });
        }
        exactlin::project_with_inverse(&self.basis, &self.gram_inverse, f)
    }

    pub fn project(&self, f: &GroupFunction) -> Result<GroupFunction> {
        Ok(self.project_with_coefficients(f)?.0)
    }

    /// Basis coefficients of the projection of `e_π`; only the values
    /// `b(π)` enter, so this avoids touching the other `n! − 1` entries.
    pub fn indicator_coefficients(&self, p: &Permutation) -> Vec<Rational> {
        let index = p.lex_rank();
        let rhs: Vec<Rational> = self.basis.iter().map(|b| b.value(index)).collect();
        self.gram_inverse.mul_vec(&rhs).expect("square gram")
    }

    pub fn combine(&self, coeffs: &[Rational]) -> GroupFunction {
        GroupFunction::linear_combination(&self.basis[0], coeffs, &self.basis)
    }

    /// Coefficients of `f` in the basis when `f` lies in the span.
    pub fn coordinates(&self, f: &GroupFunction) -> Result<Option<Vec<Rational>>> {
        let (p, c) = self.project_with_coefficients(f)?;
        Ok((p == *f).then_some(c))
    }

    pub fn contains(&self, f: &GroupFunction) -> Result<bool> {
        Ok(self.coordinates(f)?.is_some())
    }

    /// Same span: equal dimension and mutual containment of bases.
    pub fn spans_same(&self, other: &Subspace) -> Result<bool> {
        if self.dim() != other.dim() || self.n != other.n {
            return Ok(false);
        }
        for b in &other.basis {
            if !self.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact zero inner product between every pair of basis vectors.
    pub fn is_orthogonal_to(&self, other: &Subspace) -> bool {
        self.basis
            .iter()
            .all(|a| other.basis.iter().all(|b| a.inner(b).is_zero()))
    }
}

/// Orthogonal projection onto `sub` in `R^{S_n}`.
pub fn project(sub: &Subspace, f: &GroupFunction) -> Result<GroupFunction> {
    sub.project(f)
}

/// The three invariant pieces `V_0, V_1, V_2` of `U_Inv` for one `n`, and
/// the pulled-back scalar product on the pair coordinates.
#[derive(Clone, Debug)]
pub struct DecompositionBundle {
    pub n: usize,
    pub v0: Subspace,
    pub v1: Subspace,
    pub v2: Subspace,
    pub coordinate_gram: Matrix,
}

impl DecompositionBundle {
    pub fn dims(&self) -> [usize; 3] {
        [self.v0.dim(), self.v1.dim(), self.v2.dim()]
    }

    pub fn pieces(&self) -> [&Subspace; 3] {
        [&self.v0, &self.v1, &self.v2]
    }

    /// `V_0, V_1, V_2` pairwise orthogonal with exact zeros.
    pub fn is_pairwise_orthogonal(&self) -> bool {
        self.v0.is_orthogonal_to(&self.v1)
            && self.v0.is_orthogonal_to(&self.v2)
            && self.v1.is_orthogonal_to(&self.v2)
    }

    /// `V_0 ⊕ V_1 ⊕ V_2 = U_Inv`: dimensions add up, the union of bases is
    /// independent and every piece lies in `U_Inv`.
    pub fn is_complete(&self) -> Result<bool> {
        let u = Subspace::u_inv(self.n)?;
        if self.dims().iter().sum::<usize>() != u.dim() {
            return Ok(false);
        }
        let union: Vec<GroupFunction> = self
            .pieces()
            .iter()
            .flat_map(|s| s.basis().iter().cloned())
            .collect();
        if Subspace::new(SubspaceTag::Custom, self.n, union).is_err() {
            return Ok(false);
        }
        for piece in self.pieces() {
            for b in piece.basis() {
                if !u.contains(b)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn build_bundle(n: usize) -> Result<DecompositionBundle> {
    check_range(n, MIN_N, MAX_N)?;
    Ok(DecompositionBundle {
        n,
        v0: Subspace::v0(n)?,
        v1: Subspace::v1(n)?,
        v2: Subspace::v2(n)?,
        coordinate_gram: coordinate_gram(n)?,
    })
}

/// Gram matrix of `{tk_ij}` in pair order: the scalar product on
/// `R^{C(n,2)}` pulled back along `e_(i,j) ↦ tk_ij`.
pub fn coordinate_gram(n: usize) -> Result<Matrix> {
    check_range(n, MIN_N, MAX_N)?;
    let tks = pairs(n)
        .into_iter()
        .map(|p| tk_func(n, p.i, p.j))
        .collect::<Result<Vec<_>>>()?;
    Ok(gram_matrix(&tks))
}

/// Matrix of `g` restricted to `sub`: column `k` holds the coordinates of
/// `g · basis[k]`. Fails with `NotInvariant` if `g` moves a basis vector out
/// of the span.
pub fn rep_matrix(sub: &Subspace, g: &Symmetry) -> Result<Matrix> {
    if g.degree() != sub.n() {
        return Err(Error::SizeMismatch {
            left: g.degree(),
            right: sub.n(),
        });
    }
    let mut m = Matrix::zeros(sub.dim(), sub.dim());
    for (k, b) in sub.basis().iter().enumerate() {
        let moved = g.act(b)?;
        let coords = sub
            .coordinates(&moved)?
            .ok_or_else(|| Error::NotInvariant {
                action: g.to_string(),
            })?;
        for (r, c) in coords.into_iter().enumerate() {
            m.set(r, k, c);
        }
    }
    Ok(m)
}

/// Class function on S_n, one value per class of [`conjugacy_classes`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub n: usize,
    pub values: Vec<Rational>,
}

impl Character {
    pub fn to_strings(&self) -> Vec<String> {
        exactlin::format_vector(&self.values)
    }
}

pub fn character(sub: &Subspace) -> Result<Character> {
    let values = conjugacy_classes(sub.n())?
        .into_iter()
        .map(|c| Ok(rep_matrix(sub, &Symmetry::relabel(c.representative))?.trace()))
        .collect::<Result<_>>()?;
    Ok(Character { n: sub.n(), values })
}

/// `(1/n!) Σ_classes |class| · a · b`.
pub fn char_inner(a: &Character, b: &Character) -> Result<Rational> {
    if a.n != b.n {
        return Err(Error::SizeMismatch {
            left: a.n,
            right: b.n,
        });
    }
    let classes = conjugacy_classes(a.n)?;
    let total = classes
        .iter()
        .zip(a.values.iter().zip(&b.values))
        .fold(Rational::zero(), |acc, (c, (x, y))| {
            acc + int(c.size as i64) * x * y
        });
    Ok(total / int(factorial(a.n) as i64))
}

/// Element of `F ∧ F` with coordinates on `e_i ∧ e_j`, `i < j`, in pair
/// order. `F` carries `π e_i = e_{π(i)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bivector {
    n: usize,
    coeffs: Vec<Rational>,
}

impl Bivector {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: vec![Rational::zero(); binomial(n, 2)],
        }
    }

    /// `e_a ∧ e_b`, normalized antisymmetrically (`e_b ∧ e_a = −e_a ∧ e_b`,
    /// `e_a ∧ e_a = 0`).
    pub fn basis(n: usize, a: usize, b: usize) -> Self {
        let mut out = Self::zero(n);
        match a.cmp(&b) {
            std::cmp::Ordering::Less => out.coeffs[pair_position(n, a, b)] = Rational::one(),
            std::cmp::Ordering::Greater => out.coeffs[pair_position(n, b, a)] = -Rational::one(),
            std::cmp::Ordering::Equal => {}
        }
        out
    }

    /// `u ∧ v = Σ_{i<j} (u_i v_j − u_j v_i) e_i ∧ e_j` for `u, v ∈ F`.
    pub fn wedge(u: &[Rational], v: &[Rational]) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::SizeMismatch {
                left: u.len(),
                right: v.len(),
            });
        }
        let n = u.len();
        Ok(Self {
            n,
            coeffs: pairs(n)
                .iter()
                .map(|p| &u[p.i - 1] * &v[p.j - 1] - &u[p.j - 1] * &v[p.i - 1])
                .collect(),
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `π · (e_i ∧ e_j) = e_{π(i)} ∧ e_{π(j)}`, extended linearly.
    pub fn act(&self, p: &Permutation) -> Self {
        let mut out = Self::zero(self.n);
        for (c, q) in self.coeffs.iter().zip(pairs(self.n)) {
            if c.is_zero() {
                continue;
            }
            let image = Self::basis(self.n, p.apply(q.i), p.apply(q.j));
            for (o, x) in out.coeffs.iter_mut().zip(image.coeffs) {
                *o += c * x;
            }
        }
        out
    }
}

/// `ψ: F ∧ F → Ũ_Inv`, `e_i ∧ e_j ↦ tk_ij`.
pub fn psi(b: &Bivector) -> Result<GroupFunction> {
    let tks = pairs(b.n)
        .into_iter()
        .map(|p| tk_func(b.n, p.i, p.j))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupFunction::linear_combination(&tks[0], &b.coeffs, &tks))
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    (1..=n)
        .map(|k| {
            if k == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// `e_i − e_n`, the basis of `F_1`.
fn f1_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = unit(n, i);
    v[n - 1] -= Rational::one();
    v
}

/// Checks that `ψ` is an equivariant isomorphism carrying `F_1 ∧ F_0` onto
/// `V_1` and `F_1 ∧ F_1` onto `V_2`. Reports the first failing identity.
pub fn wedge_iso_check(n: usize) -> Result<CheckReport> {
    const NAME: &str = "psi: F^F -> U~_Inv equivariant isomorphism";
    check_range(n, MIN_N, MAX_N)?;
    let u_tilde = Subspace::u_tilde(n);
    if u_tilde.is_err() {
        return Ok(CheckReport::fail(
            NAME,
            "tk_ij (i<j) are linearly dependent",
        ));
    }

    let mut gens = Permutation::adjacent_transpositions(n);
    gens.push(Permutation::cyc(n));
    for g in &gens {
        for p in pairs(n) {
            let acted = Bivector::basis(n, p.i, p.j).act(g);
            let lhs = psi(&acted)?;
            let rhs = crate::funcspace::act_relabel(g, &tk_func(n, p.i, p.j)?)?;
            if lhs != rhs {
                return Ok(CheckReport::fail(
                    NAME,
                    format!(
                        "psi(g.(e_{}^e_{})) != g.tk_{}{} for g = [{g}]",
                        p.i, p.j, p.i, p.j
                    ),
                ));
            }
        }
    }

    let all_ones = vec![Rational::one(); n];
    let f1f0 = (1..n)
        .map(|i| psi(&Bivector::wedge(&f1_vector(n, i), &all_ones)?))
        .collect::<Result<Vec<_>>>()?;
    let v1 = Subspace::v1(n)?;
    match Subspace::new(SubspaceTag::Custom, n, f1f0) {
        Ok(image) if image.spans_same(&v1)? => {}
        _ => return Ok(CheckReport::fail(NAME, "psi(F_1 ^ F_0) does not span V_1")),
    }

    let v2 = Subspace::v2(n)?;
    let mut f1f1 = Vec::new();
    for (i, j) in (1..n).tuple_combinations() {
        let image = psi(&Bivector::wedge(&f1_vector(n, i), &f1_vector(n, j))?)?;
        if image != w_func(n, i, j)? {
            return Ok(CheckReport::fail(
                NAME,
                format!("psi((e_{i}-e_{n})^(e_{j}-e_{n})) != w_{i}{j}"),
            ));
        }
        f1f1.push(image);
    }
    match Subspace::new(SubspaceTag::Custom, n, f1f1) {
        Ok(image) if image.spans_same(&v2)? => {}
        _ => return Ok(CheckReport::fail(NAME, "psi(F_1 ^ F_1) does not span V_2")),
    }
    Ok(CheckReport::pass(NAME))
}

/// Node-balance rows: row `j` gives `Σ_{i≠j} u(i, j)` with
/// `u(i, j) = −u(j, i)` for `i > j`.
pub fn node_balance_matrix(n: usize) -> Matrix {
    let ps = pairs(n);
    Matrix::from_fn(n, ps.len(), |row, col| {
        let node = row + 1;
        let p = ps[col];
        if p.j == node {
            Rational::one()
        } else if p.i == node {
            -Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Some `g` with `u(i, j) = g(i) − g(j)` for all `i < j`, if one exists.
pub fn potential_of(n: usize, u: &[Rational]) -> Result<Option<Vec<Rational>>> {
    let ps = pairs(n);
    if u.len() != ps.len() {
        return Err(Error::SizeMismatch {
            left: u.len(),
            right: ps.len(),
        });
    }
    let difference = Matrix::from_fn(ps.len(), n, |r, c| {
        if c + 1 == ps[r].i {
            Rational::one()
        } else if c + 1 == ps[r].j {
            -Rational::one()
        } else {
            Rational::zero()
        }
    });
    exactlin::solve(&difference, u)
}

pub fn is_potential(n: usize, u: &[Rational]) -> Result<bool> {
    Ok(potential_of(n, u)?.is_some())
}

pub fn is_circulation(n: usize, u: &[Rational]) -> Result<bool> {
    Ok(node_balance_matrix(n).mul_vec(u)?.iter().all(Zero::is_zero))
}

/// Coordinates of each basis vector of `sub` in the `tk_ij` basis.
pub fn tk_coordinates(sub: &Subspace) -> Result<Vec<Vec<Rational>>> {
    let u = Subspace::u_tilde(sub.n())?;
    sub.basis()
        .iter()
        .map(|b| {
            u.coordinates(b)?.ok_or_else(|| Error::NotInvariant {
                action: "containment in U~_Inv".into(),
            })
        })
        .collect()
}

/// `V_1` ↔ potentials and `V_2` ↔ circulations, in pair coordinates: every
/// basis vector belongs, and dimensions agree.
pub fn potential_circulation_check(n: usize) -> Result<CheckReport> {
    const NAME: &str = "V_1 = potentials, V_2 = circulations";
    let bundle = build_bundle(n)?;
    let v1 = tk_coordinates(&bundle.v1)?;
    let v2 = tk_coordinates(&bundle.v2)?;
    for (k, u) in v1.iter().enumerate() {
        if !is_potential(n, u)? {
            return Ok(CheckReport::fail(
                NAME,
                format!("V_1 basis vector {k} is not a potential"),
            ));
        }
    }
    for (k, u) in v2.iter().enumerate() {
        if !is_circulation(n, u)? {
            return Ok(CheckReport::fail(
                NAME,
                format!("V_2 basis vector {k} is not a circulation"),
            ));
        }
    }
    let balance = node_balance_matrix(n);
    let potential_dim = exactlin::rank(&balance.transpose());
    let circulation_dim = exactlin::kernel_basis(&balance).len();
    let v1_rank = exactlin::rank(&Matrix::from_rows(v1)?);
    let v2_rank = exactlin::rank(&Matrix::from_rows(v2)?);
    if potential_dim != v1_rank || circulation_dim != v2_rank {
        return Ok(CheckReport::fail(
            NAME,
            format!(
                "dimension mismatch: potentials {potential_dim} vs V_1 {v1_rank}, circulations {circulation_dim} vs V_2 {v2_rank}"
            ),
        ));
    }
    Ok(CheckReport::pass(NAME).with_detail(format!(
        "dim potentials = {potential_dim}, dim circulations = {circulation_dim}"
    )))
}

/// One summand `W_m` (`dim = m − 1`) of the iterated decomposition
/// `Ũ_Inv = W_n ⊥ W_{n−1} ⊥ … ⊥ W_2`.
#[derive(Clone, Debug)]
pub struct ChainLevel {
    pub m: usize,
    pub subspace: Subspace,
    /// `v_1, …, v_m` of level `m`, lifted to `R^{S_n}`.
    pub readers: Vec<GroupFunction>,
}

fn lift_to(f: GroupFunction, n: usize) -> Result<GroupFunction> {
    let mut g = f;
    while g.n() < n {
        g = lift_through_cosets(&g)?;
    }
    Ok(g)
}

/// Applies the `V_1 ⊥ V_2` splitting repeatedly to the `V_2 ≅ Ũ_Inv(n−1)`
/// factor; level-`m` spaces are lifted to `R^{S_n}` through the coset
/// representatives, so all summands live in one ambient space.
pub fn iterate_decomposition(n: usize) -> Result<Vec<ChainLevel>> {
    check_range(n, MIN_N, MAX_N)?;
    (2..=n)
        .rev()
        .map(|m| {
            let readers = (1..=m)
                .map(|i| lift_to(v_func(m, i)?, n))
                .collect::<Result<Vec<_>>>()?;
            let basis = readers[..m - 1].to_vec();
            let tag = if m == n {
                SubspaceTag::V1
            } else {
                SubspaceTag::Custom
            };
            Ok(ChainLevel {
                m,
                subspace: Subspace::new(tag, n, basis)?,
                readers,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub classes: Vec<Vec<usize>>,
    pub class_sizes: Vec<usize>,
    pub v1: Vec<String>,
    pub v2: Vec<String>,
    pub v1_v1: String,
    pub v2_v2: String,
    pub v1_v2: String,
}

/// JSON decomposition report.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub dims: [usize; 3],
    pub orthogonality: bool,
    pub characters: CharacterTable,
    pub gram: Vec<Vec<String>>,
}

pub fn character_table(bundle: &DecompositionBundle) -> Result<CharacterTable> {
    let classes = conjugacy_classes(bundle.n)?;
    let (c1, c2) = (character(&bundle.v1)?, character(&bundle.v2)?);
    Ok(CharacterTable {
        classes: classes.iter().map(|c| c.cycle_type.clone()).collect(),
        class_sizes: classes.iter().map(|c| c.size).collect(),
        v1_v1: format_rational(&char_inner(&c1, &c1)?),
        v2_v2: format_rational(&char_inner(&c2, &c2)?),
        v1_v2: format_rational(&char_inner(&c1, &c2)?),
        v1: c1.to_strings(),
        v2: c2.to_strings(),
    })
}

pub fn decomposition_report(n: usize) -> Result<DecompositionReport> {
    let bundle = build_bundle(n)?;
    Ok(DecompositionReport {
        n,
        dims: bundle.dims(),
        orthogonality: bundle.is_pairwise_orthogonal(),
        characters: character_table(&bundle)?,
        gram: bundle.coordinate_gram.to_strings(),
    })
}

/// Every generator of Z_2 × S_n (adjacent transpositions, the long cycle and
/// the duality) preserves `V_0, V_1, V_2`; duality is `+1` on `V_0` and `−1`
/// on `V_1, V_2`.
pub fn invariance_check(bundle: &DecompositionBundle) -> Result<CheckReport> {
    const NAME: &str = "V_0, V_1, V_2 invariant under Z_2 x S_n";
    let n = bundle.n;
    let mut gens: Vec<Symmetry> = Permutation::adjacent_transpositions(n)
        .into_iter()
        .map(Symmetry::relabel)
        .collect();
    gens.push(Symmetry::relabel(Permutation::cyc(n)));
    gens.push(Symmetry::duality(n));
    for sub in bundle.pieces() {
        for g in &gens {
            let m = match rep_matrix(sub, g) {
                Ok(m) => m,
                Err(e) => return Ok(CheckReport::fail(NAME, format!("{:?}: {e}", sub.tag()))),
            };
            if g.duality {
                let sign = if sub.tag() == SubspaceTag::V0 {
                    int(1)
                } else {
                    int(-1)
                };
                if m != Matrix::identity(sub.dim()).scale(&sign) {
                    return Ok(CheckReport::fail(
                        NAME,
                        format!("duality is not {sign} * identity on {:?}", sub.tag()),
                    ));
                }
            }
        }
    }
    Ok(CheckReport::pass(NAME))
}

/// `M(p) M(q) = M(p ∘ q)` on `V_1` and `V_2` over a deterministic sample
/// of pairs.
pub fn homomorphism_check(bundle: &DecompositionBundle) -> Result<CheckReport> {
    const NAME: &str = "rep_matrix is a homomorphism on V_1, V_2";
    let elements = group(bundle.n)?.elements();
    let step = (elements.len() / 6).max(1);
    let sample: Vec<&Permutation> = elements.iter().step_by(step).collect();
    for sub in [&bundle.v1, &bundle.v2] {
        for p in &sample {
            for q in &sample {
                let pq = p.compose(q)?;
                let lhs = rep_matrix(sub, &Symmetry::relabel((*p).clone()))?
                    .mul(&rep_matrix(sub, &Symmetry::relabel((*q).clone()))?)?;
                let rhs = rep_matrix(sub, &Symmetry::relabel(pq))?;
                if lhs != rhs {
                    return Ok(CheckReport::fail(
                        NAME,
                        format!("M([{p}]) M([{q}]) != M([{p}] o [{q}]) on {:?}", sub.tag()),
                    ));
                }
            }
        }
    }
    Ok(CheckReport::pass(NAME))
}

/// `⟨χ_V1, χ_V1⟩ = ⟨χ_V2, χ_V2⟩ = 1` and `⟨χ_V1, χ_V2⟩ = 0`.
pub fn irreducibility_check(bundle: &DecompositionBundle) -> Result<CheckReport> {
    const NAME: &str = "V_1, V_2 irreducible and non-isomorphic";
    let (c1, c2) = (character(&bundle.v1)?, character(&bundle.v2)?);
    let (a, b, c) = (
        char_inner(&c1, &c1)?,
        char_inner(&c2, &c2)?,
        char_inner(&c1, &c2)?,
    );
    let detail = format!(
        "<X1,X1> = {}, <X2,X2> = {}, <X1,X2> = {}",
        format_rational(&a),
        format_rational(&b),
        format_rational(&c)
    );
    if a.is_one() && b.is_one() && c.is_zero() {
        Ok(CheckReport::pass(NAME).with_detail(detail))
    } else {
        Ok(CheckReport::fail(NAME, detail))
    }
}
