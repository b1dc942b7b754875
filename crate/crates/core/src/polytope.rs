//! Vertex-level geometry: the linear ordering polytope `P_n`, the
//! permutahedron, images of the simplex under orthogonal projections, and
//! the two equivariant projections `P_n → permutahedron` and
//! `P_n → P_{n−1}` with their certificates.
//!
//! A vertex of `P_n` is handled in function space as the projection of the
//! simplex vertex `e_π` onto `U_Inv` (or `Ũ_Inv` for the ±1 coordinates);
//! its pair coordinates are recovered by taking inner products with the
//! `k_ij` (resp. `tk_ij`).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{format_vector, int, InnerProductSpace, Matrix, Rational};
use crate::funcspace::{pairs, v_func, w_func, GroupFunction, Symmetry};
use crate::repdecomp::{
    build_bundle, check_range, iterate_decomposition, rep_matrix, tk_coordinates, Subspace,
};
use crate::report::CheckReport;
use crate::symgroup::{self, binomial, cyclic_cosets, factorial, group, Permutation};

/// Pair-coordinate convention for `P_n`: 0/1 inversion indicators or ±1 signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Basis {
    K,
    TK,
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "K" => Ok(Self::K),
            "TK" => Ok(Self::TK),
            other => Err(Error::Parse(format!(
                "unknown basis {other:?} (expected K or TK)"
            ))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::K => "K",
            Self::TK => "TK",
        })
    }
}

/// Labelled exact points in `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    pub dim: usize,
    pub points: Vec<Vec<Rational>>,
    pub labels: Vec<Permutation>,
}

impl VertexSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn distinct_count(&self) -> usize {
        self.points.iter().unique().count()
    }

    pub fn point_of(&self, label: &Permutation) -> Option<&[Rational]> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|k| self.points[k].as_slice())
    }

    /// Vertex CSV: `label,x_1,…,x_dim` per row, rationals as `p/q`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (label, point) in self.labels.iter().zip(&self.points) {
            out.push_str(&label.to_string());
            for x in point {
                out.push(',');
                out.push_str(&x.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json_rows(&self) -> Vec<LabelledPoint> {
        self.labels
            .iter()
            .zip(&self.points)
            .map(|(l, p)| LabelledPoint {
                label: l.clone(),
                point: format_vector(p),
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelledPoint {
    pub label: Permutation,
    pub point: Vec<String>,
}

/// `x ↦ linear · x + translation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub linear: Matrix,
    pub translation: Vec<Rational>,
}

impl AffineMap {
    pub fn linear_only(linear: Matrix) -> Self {
        let translation = vec![Rational::zero(); linear.rows()];
        Self {
            linear,
            translation,
        }
    }

    /// `scale · x + shift · 𝟙` on `R^dim`.
    pub fn scalar(dim: usize, scale: Rational, shift: Rational) -> Self {
        Self {
            linear: Matrix::identity(dim).scale(&scale),
            translation: vec![shift; dim],
        }
    }

    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        let mut y = self.linear.mul_vec(x)?;
        for (a, b) in y.iter_mut().zip(&self.translation) {
            *a += b;
        }
        Ok(y)
    }

    pub fn to_json(&self) -> AffineMapJson {
        AffineMapJson {
            linear: self.linear.to_strings(),
            translation: format_vector(&self.translation),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AffineMapJson {
    pub linear: Vec<Vec<String>>,
    pub translation: Vec<String>,
}

/// Collapse of source labels onto target labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub target: Permutation,
    pub sources: Vec<Permutation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberMap {
    pub fibers: Vec<Fiber>,
}

fn lop_point(p: &Permutation, basis: Basis) -> Vec<Rational> {
    pairs(p.degree())
        .into_iter()
        .map(|q| {
            let inverted = p.apply(q.i) > p.apply(q.j);
            int(match (basis, inverted) {
                (Basis::K, b) => i64::from(b),
                (Basis::TK, true) => 1,
                (Basis::TK, false) => -1,
            })
        })
        .collect()
}

/// `lop_π = (k_ij(π))_{i<j}` (or the ±1 version) for every `π ∈ S_n`.
pub fn lop_vertices(n: usize, basis: Basis) -> Result<VertexSet> {
    if n < 2 {
        return Err(Error::NOutOfRange {
            n,
            min: 2,
            max: symgroup::MAX_N,
        });
    }
    let labels = symgroup::enumerate(n)?;
    Ok(VertexSet {
        dim: binomial(n, 2),
        points: labels.iter().map(|p| lop_point(p, basis)).collect(),
        labels,
    })
}

/// `(π(1), …, π(n))` for every `π ∈ S_n`.
pub fn permutahedron_vertices(n: usize) -> Result<VertexSet> {
    let labels = symgroup::enumerate(n)?;
    Ok(VertexSet {
        dim: n,
        points: labels
            .iter()
            .map(|p| p.images().into_iter().map(|x| int(x as i64)).collect())
            .collect(),
        labels,
    })
}

/// Projections of the simplex vertices `e_π` onto `sub`, in coordinates
/// with respect to `sub`'s basis. Duplicate points are kept, one per label.
pub fn simplex_image(sub: &Subspace) -> Result<VertexSet> {
    check_range(sub.n(), 1, 6)?;
    let labels = symgroup::enumerate(sub.n())?;
    Ok(VertexSet {
        dim: sub.dim(),
        points: labels
            .iter()
            .map(|p| sub.indicator_coefficients(p))
            .collect(),
        labels,
    })
}

/// Vertex of the polytope of `sub` as a function: the projection of `e_π`.
pub fn vertex_function(sub: &Subspace, p: &Permutation) -> GroupFunction {
    sub.combine(&sub.indicator_coefficients(p))
}

/// With `B` the matrix whose rows are `sub`'s basis, checks that `x ↦ Bx`
/// takes each projected simplex vertex to the column `B e_π`, that `B` is
/// injective on `sub`, and that equal images correspond to equal columns.
pub fn lemma_basis_check(sub: &Subspace) -> Result<CheckReport> {
    let name = format!("Q(U) ~ Q'(basis) for {:?} (dim {})", sub.tag(), sub.dim());
    check_range(sub.n(), 1, 5)?;
    if crate::exactlin::rank(sub.gram()) != sub.dim() {
        return Ok(CheckReport::fail(
            name,
            "B is not injective on the subspace",
        ));
    }
    let mut column_of_image: HashMap<Vec<Rational>, Vec<Rational>> = HashMap::new();
    let mut image_of_column: HashMap<Vec<Rational>, Vec<Rational>> = HashMap::new();
    for p in group(sub.n())?.elements() {
        let e = GroupFunction::indicator(p)?;
        let (projected, coeffs) = sub.project_with_coefficients(&e)?;
        let mapped: Vec<Rational> = sub.basis().iter().map(|b| b.inner(&projected)).collect();
        let column: Vec<Rational> = sub.basis().iter().map(|b| b.value_at(p)).collect();
        if mapped != column {
            return Ok(CheckReport::fail(
                name,
                format!("B·proj(e_π) != B·e_π at π = {p}"),
            ));
        }
        let c1 = column_of_image
            .entry(coeffs.clone())
            .or_insert_with(|| column.clone());
        let c2 = image_of_column
            .entry(column.clone())
            .or_insert_with(|| coeffs.clone());
        if *c1 != column || *c2 != coeffs {
            return Ok(CheckReport::fail(
                name,
                format!("correspondence not bijective at π = {p}"),
            ));
        }
    }
    Ok(CheckReport::pass(name))
}

#[derive(Clone, Debug)]
pub struct PermutahedronProjection {
    /// Functional coordinates `(⟨v_i, y⟩)_{i ≤ n}` of each projected vertex.
    pub images: VertexSet,
    /// Sends the permutahedron vertex `(π(i))_i` to the image of `π`.
    pub map: AffineMap,
}

/// Projects every ±1 vertex of `P_n` onto `V_1` and checks that the image
/// of `π`, read against `v_1, …, v_n`, is `2π(i) − (n+1)`.
pub fn project_to_permutahedron(n: usize) -> Result<PermutahedronProjection> {
    check_range(n, 3, 6)?;
    let u_tilde = Subspace::u_tilde(n)?;
    let v1 = Subspace::v1(n)?;
    let readers = (1..=n).map(|i| v_func(n, i)).collect::<Result<Vec<_>>>()?;
    let map = AffineMap::scalar(n, int(2), int(-(n as i64 + 1)));
    let perm = permutahedron_vertices(n)?;
    let mut points = Vec::with_capacity(perm.len());
    for (p, corner) in perm.labels.iter().zip(&perm.points) {
        let vertex = vertex_function(&u_tilde, p);
        let image = v1.project(&vertex)?;
        let read: Vec<Rational> = readers.iter().map(|r| r.inner(&image)).collect();
        if read != map.apply(corner)? {
            return Err(Error::AffineMismatch {
                vertex: p.to_string(),
            });
        }
        points.push(read);
    }
    Ok(PermutahedronProjection {
        images: VertexSet {
            dim: n,
            points,
            labels: perm.labels,
        },
        map,
    })
}

#[derive(Clone, Debug)]
pub struct PreviousProjection {
    /// One point per coset, in `w̃_ij` functional coordinates, labelled by
    /// the coset representative restricted to `{1..n−1}` (lex order).
    pub images: VertexSet,
    pub fibers: FiberMap,
    /// Coefficients of each image in the `w̃_ij` basis of `V_2`.
    pub coefficients: Vec<Vec<Rational>>,
}

/// Projects every ±1 vertex of `P_n` onto `V_2`, groups equal images,
/// checks the fibers are the cosets `C_n ∘ π`, and checks each image equals
/// the ±1 vertex of `P_{n−1}` of its representative.
pub fn project_to_previous(n: usize) -> Result<PreviousProjection> {
    check_range(n, 3, 6)?;
    let u_tilde = Subspace::u_tilde(n)?;
    let v2 = Subspace::v2(n)?;
    let mut groups: Vec<(Vec<Rational>, Vec<Permutation>, Vec<Rational>)> = Vec::new();
    let mut position: HashMap<Vec<Rational>, usize> = HashMap::new();
    for p in group(n)?.elements() {
        let vertex = vertex_function(&u_tilde, p);
        let (image, coeffs) = v2.project_with_coefficients(&vertex)?;
        match position.get(&coeffs) {
            Some(&k) => groups[k].1.push(p.clone()),
            None => {
                let read: Vec<Rational> = v2.basis().iter().map(|w| w.inner(&image)).collect();
                position.insert(coeffs.clone(), groups.len());
                groups.push((coeffs, vec![p.clone()], read));
            }
        }
    }

    let cosets = cyclic_cosets(n)?;
    if groups.len() != cosets.classes.len() {
        return Err(Error::FiberMismatch(format!(
            "{} distinct images, expected {}",
            groups.len(),
            cosets.classes.len()
        )));
    }
    let previous = lop_vertices(n - 1, Basis::TK)?;
    let mut fibers = Vec::with_capacity(groups.len());
    let mut labelled = Vec::with_capacity(groups.len());
    for (coeffs, mut sources, read) in groups {
        sources.sort();
        let class = cosets
            .class_of(&sources[0])
            .expect("every permutation lies in a coset");
        if sources != cosets.classes[class] {
            return Err(Error::FiberMismatch(format!(
                "fiber of {} is not its cyclic coset",
                sources[0]
            )));
        }
        let target = cosets.representatives[class].restrict()?;
        let expected = previous.point_of(&target).expect("label of P_{n-1}");
        if read != expected {
            return Err(Error::ValueMismatch {
                coset: cosets.representatives[class].to_string(),
                detail: format!(
                    "read [{}], expected [{}]",
                    format_vector(&read).join(", "),
                    format_vector(expected).join(", ")
                ),
            });
        }
        labelled.push((target.clone(), read, coeffs));
        fibers.push(Fiber { target, sources });
    }
    labelled.sort_by(|a, b| a.0.cmp(&b.0));
    fibers.sort_by(|a, b| a.target.cmp(&b.target));
    let (labels, (points, coefficients)): (Vec<_>, (Vec<_>, Vec<_>)) =
        labelled.into_iter().map(|(l, p, c)| (l, (p, c))).unzip();
    Ok(PreviousProjection {
        images: VertexSet {
            dim: binomial(n - 1, 2),
            points,
            labels,
        },
        fibers: FiberMap { fibers },
        coefficients,
    })
}

/// Linear map from ±1 pair coordinates of `P_n` to those of `P_{n−1}`:
/// row `(i,j)` holds the `tk` coordinates of `w̃_ij`.
pub fn factor_map_tk(n: usize) -> Result<AffineMap> {
    let rows = tk_coordinates(&Subspace::v2(n)?)?;
    Ok(AffineMap::linear_only(Matrix::from_rows(rows)?))
}

/// The same factor map in 0/1 coordinates, via `tk = 2k − 1`:
/// `y = M x + (𝟙 − M 𝟙) / 2`.
pub fn factor_map_k(n: usize) -> Result<AffineMap> {
    let tk = factor_map_tk(n)?;
    let ones = vec![Rational::one(); tk.linear.cols()];
    let half = Rational::new(1.into(), 2.into());
    let translation = tk
        .linear
        .mul_vec(&ones)?
        .into_iter()
        .map(|s| (Rational::one() - s) * &half)
        .collect();
    Ok(AffineMap {
        linear: tk.linear,
        translation,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivarianceFailure {
    pub generator: String,
    pub vertex: Permutation,
    pub subspace: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivarianceReport {
    pub n: usize,
    pub comparisons: usize,
    pub failures: Vec<EquivarianceFailure>,
}

impl EquivarianceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_check(&self) -> CheckReport {
        const NAME: &str = "projections equivariant under Z_2 x S_n";
        if self.passed() {
            CheckReport::pass(NAME).with_detail(format!("{} exact comparisons", self.comparisons))
        } else {
            let f = &self.failures[0];
            CheckReport::fail(
                NAME,
                format!(
                    "{} failures; first: g = {} at vertex {} on {}",
                    self.failures.len(),
                    f.generator,
                    f.vertex,
                    f.subspace
                ),
            )
        }
    }
}

/// `proj_{V_k}(g·f) = g·proj_{V_k}(f)` for `k = 1, 2`, every generator `g`
/// of Z_2 × S_n and every vertex `f` of `P_n` as a point of `U_Inv`.
pub fn verify_equivariance(n: usize) -> Result<EquivarianceReport> {
    check_range(n, 3, 5)?;
    let bundle = build_bundle(n)?;
    let u_inv = Subspace::u_inv(n)?;
    let generators = Symmetry::generators(n);
    let mut comparisons = 0;
    let mut failures = Vec::new();
    for p in group(n)?.elements() {
        let vertex = vertex_function(&u_inv, p);
        for sub in [&bundle.v1, &bundle.v2] {
            let projected = sub.project(&vertex)?;
            for g in &generators {
                comparisons += 1;
                if sub.project(&g.act(&vertex)?)? != g.act(&projected)? {
                    failures.push(EquivarianceFailure {
                        generator: g.to_string(),
                        vertex: p.clone(),
                        subspace: format!("{:?}", sub.tag()),
                    });
                }
            }
        }
    }
    Ok(EquivarianceReport {
        n,
        comparisons,
        failures,
    })
}

/// Action of one element of Z_2 × S_n on the vertices of `P_{n−1}`, obtained
/// through the projection onto `V_2`.
#[derive(Clone, Debug)]
pub struct InducedAction {
    pub element: Symmetry,
    /// `vertex_permutation[a] = b` when `g` sends image `a` to image `b`
    /// (indices into [`PreviousProjection::images`]).
    pub vertex_permutation: Vec<usize>,
    /// The map on `w̃` functional coordinates realizing it.
    pub map: AffineMap,
}

/// Induced action computed against a precomputed projection.
pub fn induced_action_on(
    prev: &PreviousProjection,
    v2: &Subspace,
    g: &Symmetry,
) -> Result<InducedAction> {
    let rep = rep_matrix(v2, g)?;
    let gram_inv = v2.gram().inverse().ok_or(Error::SingularGram)?;
    let linear = v2.gram().mul(&rep)?.mul(&gram_inv)?;
    let map = AffineMap::linear_only(linear);
    let index: HashMap<&[Rational], usize> = prev
        .coefficients
        .iter()
        .enumerate()
        .map(|(k, c)| (c.as_slice(), k))
        .collect();
    let mut vertex_permutation = Vec::with_capacity(prev.coefficients.len());
    for (a, coeffs) in prev.coefficients.iter().enumerate() {
        let moved = rep.mul_vec(coeffs)?;
        let b = *index.get(moved.as_slice()).ok_or_else(|| {
            Error::FiberMismatch(format!(
                "{g} moves vertex {} off the projected vertex set",
                prev.images.labels[a]
            ))
        })?;
        if g.act(&v2.combine(coeffs))? != v2.combine(&prev.coefficients[b]) {
            return Err(Error::FiberMismatch(format!(
                "{g} does not act as computed"
            )));
        }
        if map.apply(&prev.images.points[a])? != prev.images.points[b] {
            return Err(Error::AffineMismatch {
                vertex: prev.images.labels[a].to_string(),
            });
        }
        vertex_permutation.push(b);
    }
    Ok(InducedAction {
        element: g.clone(),
        vertex_permutation,
        map,
    })
}

pub fn induced_action(n: usize, g: &Symmetry) -> Result<InducedAction> {
    check_range(n, 3, 5)?;
    induced_action_on(&project_to_previous(n)?, &Subspace::v2(n)?, g)
}

/// Identity acts trivially and `induced(g ∘ h) = induced(g) ∘ induced(h)`
/// over all pairs from the generators plus the long cycle; every induced
/// vertex map is a bijection.
pub fn induced_group_law_check(n: usize) -> Result<CheckReport> {
    const NAME: &str = "induced Z_2 x S_n action on P_{n-1} satisfies the group law";
    check_range(n, 3, 5)?;
    let prev = project_to_previous(n)?;
    let v2 = Subspace::v2(n)?;
    let identity = induced_action_on(&prev, &v2, &Symmetry::identity(n))?;
    if identity
        .vertex_permutation
        .iter()
        .enumerate()
        .any(|(a, &b)| a != b)
    {
        return Ok(CheckReport::fail(NAME, "identity acts nontrivially"));
    }
    let mut sample = Symmetry::generators(n);
    sample.push(Symmetry::relabel(Permutation::cyc(n)));
    let actions = sample
        .iter()
        .map(|g| induced_action_on(&prev, &v2, g))
        .collect::<Result<Vec<_>>>()?;
    for act in &actions {
        if !act.vertex_permutation.iter().all_unique() {
            return Ok(CheckReport::fail(
                NAME,
                format!("{} is not a bijection", act.element),
            ));
        }
    }
    for (g, ag) in sample.iter().zip(&actions) {
        for (h, ah) in sample.iter().zip(&actions) {
            let gh = induced_action_on(&prev, &v2, &g.compose(h)?)?;
            let composed: Vec<usize> = ah
                .vertex_permutation
                .iter()
                .map(|&b| ag.vertex_permutation[b])
                .collect();
            if composed != gh.vertex_permutation
                || ag.map.linear.mul(&ah.map.linear)? != gh.map.linear
            {
                return Ok(CheckReport::fail(
                    NAME,
                    format!("law fails for g = {g}, h = {h}"),
                ));
            }
        }
    }
    Ok(CheckReport::pass(NAME))
}

/// `proj_{V_0} f + proj_{V_1} f + proj_{V_2} f = f` for every vertex `f` of
/// `P_n` in `U_Inv`.
pub fn recomposition_check(n: usize) -> Result<CheckReport> {
    const NAME: &str = "V_0 + V_1 + V_2 projections recompose every vertex";
    let bundle = build_bundle(n)?;
    let u_inv = Subspace::u_inv(n)?;
    for p in group(n)?.elements() {
        let vertex = vertex_function(&u_inv, p);
        let parts = bundle
            .pieces()
            .iter()
            .map(|s| s.project(&vertex))
            .collect::<Result<Vec<_>>>()?;
        let ones = vec![Rational::one(); 3];
        if GroupFunction::linear_combination(&vertex, &ones, &parts) != vertex {
            return Ok(CheckReport::fail(NAME, format!("vertex {p}")));
        }
    }
    Ok(CheckReport::pass(NAME))
}

/// Restriction of `π ∈ S_n` to `S_m` through successive coset
/// representatives.
pub fn restrict_through_cosets(p: &Permutation, m: usize) -> Permutation {
    let mut q = p.clone();
    while q.degree() > m {
        q = q
            .coset_representative()
            .restrict()
            .expect("representative fixes n");
    }
    q
}

/// Checks the iterated decomposition: summands pairwise orthogonal of
/// dimensions `n−1, …, 1` adding up to `C(n,2)`, and for each `m` the image
/// of `P_n` in `W_m`, read against the lifted `v_1, …, v_m`, equals
/// `x ↦ 2x − (m+1)` applied to the `m`-th permutahedron.
pub fn verify_chain(n: usize) -> Result<CheckReport> {
    const NAME: &str = "iterated decomposition W_n _|_ ... _|_ W_2 onto permutahedra";
    let chain = iterate_decomposition(n)?;
    let dims: Vec<usize> = chain.iter().map(|l| l.subspace.dim()).collect();
    let expected: Vec<usize> = (1..n).rev().collect();
    if dims != expected || dims.iter().sum::<usize>() != binomial(n, 2) {
        return Ok(CheckReport::fail(NAME, format!("dims {dims:?}")));
    }
    for (a, b) in chain.iter().tuple_combinations() {
        if !a.subspace.is_orthogonal_to(&b.subspace) {
            return Ok(CheckReport::fail(
                NAME,
                format!("W_{} not orthogonal to W_{}", a.m, b.m),
            ));
        }
    }
    let u_tilde = Subspace::u_tilde(n)?;
    let mut images: Vec<Vec<Vec<Rational>>> = vec![Vec::new(); chain.len()];
    for p in group(n)?.elements() {
        let vertex = vertex_function(&u_tilde, p);
        for (level, seen) in chain.iter().zip(images.iter_mut()) {
            let m = level.m;
            let image = level.subspace.project(&vertex)?;
            let read: Vec<Rational> = level.readers.iter().map(|r| r.inner(&image)).collect();
            let corner = restrict_through_cosets(p, m);
            let expected: Vec<Rational> = (1..=m)
                .map(|i| int(2 * corner.apply(i) as i64 - (m as i64 + 1)))
                .collect();
            if read != expected {
                return Ok(CheckReport::fail(
                    NAME,
                    format!("W_{m} image of {p} is not 2x - {}", m + 1),
                ));
            }
            seen.push(read);
        }
    }
    for (level, seen) in chain.iter().zip(&images) {
        let distinct = seen.iter().unique().count();
        if distinct != factorial(level.m) {
            return Ok(CheckReport::fail(
                NAME,
                format!(
                    "W_{} has {distinct} distinct images, expected {}",
                    level.m,
                    factorial(level.m)
                ),
            ));
        }
    }
    Ok(CheckReport::pass(NAME).with_detail(format!("dims {dims:?}")))
}

#[derive(Clone, Debug, Serialize)]
pub struct PermutahedronReport {
    pub n: usize,
    pub target: &'static str,
    pub vertex_count: usize,
    pub distinct_points: usize,
    pub affine_map: AffineMapJson,
    pub affine_map_verified: bool,
    pub vertices: Vec<LabelledPoint>,
}

impl PermutahedronReport {
    pub fn new(n: usize, proj: &PermutahedronProjection) -> Self {
        Self {
            n,
            target: "permutahedron",
            vertex_count: proj.images.len(),
            distinct_points: proj.images.distinct_count(),
            affine_map: proj.map.to_json(),
            affine_map_verified: true,
            vertices: proj.images.to_json_rows(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PreviousReport {
    pub n: usize,
    pub target: &'static str,
    pub fiber_count: usize,
    pub fiber_size: usize,
    pub fibers_are_cosets: bool,
    pub values_match_previous: bool,
    /// ±1 pair coordinates of `P_n` to those of `P_{n−1}`.
    pub affine_map: AffineMapJson,
    pub fiber_map: FiberMap,
    pub vertices: Vec<LabelledPoint>,
}

impl PreviousReport {
    pub fn new(n: usize, proj: &PreviousProjection) -> Result<Self> {
        Ok(Self {
            n,
            target: "previous",
            fiber_count: proj.fibers.fibers.len(),
            fiber_size: proj.fibers.fibers.first().map_or(0, |f| f.sources.len()),
            fibers_are_cosets: true,
            values_match_previous: true,
            affine_map: factor_map_tk(n)?.to_json(),
            fiber_map: proj.fibers.clone(),
            vertices: proj.images.to_json_rows(),
        })
    }
}

/// Helper for tests and callers that want `w̃_ij` by pair.
pub fn w_basis(n: usize) -> Result<Vec<GroupFunction>> {
    (1..n)
        .tuple_combinations()
        .map(|(i, j)| w_func(n, i, j))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{gram_matrix, rank};
    use crate::repdecomp::SubspaceTag;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn lop_vertices_examples() {
        let vs = lop_vertices(3, Basis::K).unwrap();
        assert_eq!(
            vs.point_of(&p(&[1, 2, 3])).unwrap(),
            ints(&[0, 0, 0]).as_slice()
        );
        assert_eq!(
            vs.point_of(&p(&[3, 2, 1])).unwrap(),
            ints(&[1, 1, 1]).as_slice()
        );
        assert_eq!(
            vs.point_of(&p(&[2, 1, 3])).unwrap(),
            ints(&[1, 0, 0]).as_slice()
        );
        assert!(matches!(
            lop_vertices(9, Basis::K),
            Err(Error::NTooLarge { .. })
        ));
    }

    #[test]
    fn tk_is_affine_image_of_k() {
        for n in 2..=5 {
            let k = lop_vertices(n, Basis::K).unwrap();
            let tk = lop_vertices(n, Basis::TK).unwrap();
            for (a, b) in k.points.iter().zip(&tk.points) {
                let expected: Vec<Rational> = a.iter().map(|x| int(2) * x - int(1)).collect();
                assert_eq!(b, &expected);
            }
        }
    }

    #[test]
    fn lop_is_full_dimensional() {
        for n in 3..=5 {
            let vs = lop_vertices(n, Basis::K).unwrap();
            assert_eq!(vs.distinct_count(), factorial(n));
            let rows: Vec<Vec<Rational>> = vs
                .points
                .iter()
                .map(|x| x.iter().zip(&vs.points[0]).map(|(a, b)| a - b).collect())
                .collect();
            assert_eq!(rank(&Matrix::from_rows(rows).unwrap()), binomial(n, 2));
        }
    }

    #[test]
    fn permutahedron_examples() {
        let p2 = permutahedron_vertices(2).unwrap();
        assert_eq!(p2.points, vec![ints(&[1, 2]), ints(&[2, 1])]);
        let p3 = permutahedron_vertices(3).unwrap();
        assert_eq!(
            p3.point_of(&p(&[1, 2, 3])).unwrap(),
            ints(&[1, 2, 3]).as_slice()
        );
        for n in 1..=5 {
            let total = int((n * (n + 1) / 2) as i64);
            for x in permutahedron_vertices(n).unwrap().points {
                assert_eq!(x.iter().fold(int(0), |a, b| a + b), total);
            }
        }
    }

    #[test]
    fn simplex_image_examples() {
        let v0 = simplex_image(&Subspace::v0(3).unwrap()).unwrap();
        assert_eq!(v0.distinct_count(), 1);
        let v1 = simplex_image(&Subspace::v1(3).unwrap()).unwrap();
        assert_eq!(v1.distinct_count(), 6);
        let v2 = simplex_image(&Subspace::v2(3).unwrap()).unwrap();
        assert_eq!(v2.distinct_count(), 2);
        let counts = v2.points.iter().counts();
        assert!(counts.values().all(|&c| c == 3));
    }

    #[test]
    fn simplex_image_matches_dense_projection() {
        let sub = Subspace::u_inv(4).unwrap();
        let img = simplex_image(&sub).unwrap();
        for (label, point) in img.labels.iter().zip(&img.points).step_by(5) {
            let e = GroupFunction::indicator(label).unwrap();
            assert_eq!(&sub.project_with_coefficients(&e).unwrap().1, point);
        }
    }

    #[test]
    fn basis_checks_pass() {
        assert!(lemma_basis_check(&Subspace::u_inv(3).unwrap())
            .unwrap()
            .passed());
        assert!(lemma_basis_check(&Subspace::v0(3).unwrap())
            .unwrap()
            .passed());
        assert!(lemma_basis_check(&Subspace::u_tilde(4).unwrap())
            .unwrap()
            .passed());
        assert!(matches!(
            lemma_basis_check(&Subspace::v1(6).unwrap()),
            Err(Error::NOutOfRange { .. })
        ));
    }

    /// Columns of B for U_Inv are `(1, lop_π)`.
    #[test]
    fn u_inv_columns_are_lop_vertices() {
        let sub = Subspace::u_inv(3).unwrap();
        let lop = lop_vertices(3, Basis::K).unwrap();
        for (q, x) in lop.labels.iter().zip(&lop.points) {
            let col: Vec<Rational> = sub.basis().iter().map(|b| b.value_at(q)).collect();
            assert_eq!(col[0], int(1));
            assert_eq!(&col[1..], x.as_slice());
        }
    }

    #[test]
    fn permutahedron_projection_examples() {
        let proj = project_to_permutahedron(3).unwrap();
        assert_eq!(
            proj.images.point_of(&p(&[1, 2, 3])).unwrap(),
            ints(&[-2, 0, 2]).as_slice()
        );
        assert_eq!(
            proj.images.point_of(&p(&[3, 2, 1])).unwrap(),
            ints(&[2, 0, -2]).as_slice()
        );
        assert_eq!(proj.images.distinct_count(), 6);
        assert!(matches!(
            project_to_permutahedron(2),
            Err(Error::NOutOfRange { .. })
        ));
    }

    #[test]
    fn previous_projection_examples() {
        let proj = project_to_previous(3).unwrap();
        assert_eq!(proj.images.points, vec![ints(&[-1]), ints(&[1])]);
        assert_eq!(
            proj.images.points,
            lop_vertices(2, Basis::TK).unwrap().points
        );
        assert_eq!(
            proj.fibers.fibers[0].sources,
            vec![p(&[1, 2, 3]), p(&[2, 3, 1]), p(&[3, 1, 2])]
        );
        let proj4 = project_to_previous(4).unwrap();
        assert_eq!(proj4.images.len(), 6);
        assert_eq!(proj4.images, lop_vertices(3, Basis::TK).unwrap());
        assert!(proj4.fibers.fibers.iter().all(|f| f.sources.len() == 4));
    }

    #[test]
    fn factor_maps_send_vertices_to_previous() {
        for n in 3..=5 {
            let (mk, mtk) = (factor_map_k(n).unwrap(), factor_map_tk(n).unwrap());
            let (k, tk) = (
                lop_vertices(n, Basis::K).unwrap(),
                lop_vertices(n, Basis::TK).unwrap(),
            );
            let (k1, tk1) = (
                lop_vertices(n - 1, Basis::K).unwrap(),
                lop_vertices(n - 1, Basis::TK).unwrap(),
            );
            for (a, q) in k.labels.iter().enumerate() {
                let r = q.coset_representative().restrict().unwrap();
                assert_eq!(mk.apply(&k.points[a]).unwrap(), k1.point_of(&r).unwrap());
                assert_eq!(mtk.apply(&tk.points[a]).unwrap(), tk1.point_of(&r).unwrap());
            }
        }
    }

    #[test]
    fn equivariance_small() {
        let r = verify_equivariance(3).unwrap();
        assert!(r.passed());
        assert_eq!(r.comparisons, 6 * 2 * 3);
        assert!(matches!(
            verify_equivariance(6),
            Err(Error::NOutOfRange { .. })
        ));
    }

    #[test]
    fn duality_negates_v2_coordinates_n4() {
        let v2 = Subspace::v2(4).unwrap();
        assert_eq!(
            rep_matrix(&v2, &Symmetry::duality(4)).unwrap(),
            Matrix::identity(3).scale(&int(-1))
        );
    }

    #[test]
    fn induced_action_examples() {
        let id = induced_action(3, &Symmetry::identity(3)).unwrap();
        assert_eq!(id.vertex_permutation, vec![0, 1]);
        let dual = induced_action(3, &Symmetry::duality(3)).unwrap();
        assert_eq!(dual.vertex_permutation, vec![1, 0]);
        assert!(induced_group_law_check(3).unwrap().passed());
    }

    /// The long cycle does not fix the vertices of P_3: it sends the coset
    /// of π to the coset of π ∘ c⁻¹.
    #[test]
    fn induced_action_of_cycle_n4() {
        let prev = project_to_previous(4).unwrap();
        let act = induced_action(4, &Symmetry::relabel(Permutation::cyc(4))).unwrap();
        let cinv = Permutation::cyc(4).inverse();
        for (a, &b) in act.vertex_permutation.iter().enumerate() {
            let rep = prev.images.labels[a].extend();
            let moved = rep
                .compose(&cinv)
                .unwrap()
                .coset_representative()
                .restrict()
                .unwrap();
            assert_eq!(prev.images.labels[b], moved);
        }
        assert!(act
            .vertex_permutation
            .iter()
            .enumerate()
            .any(|(a, &b)| a != b));
    }

    #[test]
    fn recomposition_and_chain() {
        assert!(recomposition_check(4).unwrap().passed());
        assert!(verify_chain(3).unwrap().passed());
        assert!(verify_chain(4).unwrap().passed());
    }

    #[test]
    fn vertex_csv() {
        let csv = lop_vertices(3, Basis::K).unwrap().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], "1 2 3,0,0,0");
        assert_eq!(lines[5], "3 2 1,1,1,1");
    }

    #[test]
    fn w_basis_gram_matches_subspace() {
        let v2 = Subspace::v2(4).unwrap();
        assert_eq!(&gram_matrix(&w_basis(4).unwrap()), v2.gram());
        assert_eq!(v2.tag(), SubspaceTag::V2);
    }
}
