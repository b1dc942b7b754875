//! Facets of `P_n` in 0/1 pair coordinates: exact double-description
//! enumeration, classification, the `n!/2` vertex census, pullbacks along
//! the factor map `P_n → P_{n−1}`, and the text H-representation format.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{primitive_integer_vector, rank, Matrix, Rational};
use crate::funcspace::{pairs, Symmetry};
use crate::polytope::{factor_map_k, lop_vertices, Basis, VertexSet};
use crate::report::CheckReport;
use crate::symgroup::{binomial, factorial};

pub const MAX_DIM: usize = 15;
pub const MAX_POINTS: usize = 720;

/// `coefficients · x <= rhs` with coprime integer entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inequality {
    pub n: usize,
    pub coefficients: Vec<BigInt>,
    pub rhs: BigInt,
}

impl Inequality {
    /// Builds the canonical form: the whole row `(coefficients, rhs)` is
    /// divided by its (positive) gcd. The sense `<=` fixes the sign.
    pub fn new(n: usize, coefficients: Vec<BigInt>, rhs: BigInt) -> Result<Self> {
        let dim = binomial(n, 2);
        if coefficients.len() != dim {
            return Err(Error::SizeMismatch {
                left: coefficients.len(),
                right: dim,
            });
        }
        let g = coefficients.iter().fold(rhs.abs(), |acc, c| acc.gcd(c));
        if g.is_zero() || g.is_one() {
            return Ok(Self {
                n,
                coefficients,
                rhs,
            });
        }
        Ok(Self {
            n,
            coefficients: coefficients.into_iter().map(|c| c / &g).collect(),
            rhs: rhs / &g,
        })
    }

    pub fn from_integers(n: usize, coefficients: &[i64], rhs: i64) -> Result<Self> {
        Self::new(
            n,
            coefficients.iter().map(|&c| BigInt::from(c)).collect(),
            BigInt::from(rhs),
        )
    }

    pub fn from_rationals(n: usize, coefficients: &[Rational], rhs: &Rational) -> Result<Self> {
        let mut row = coefficients.to_vec();
        row.push(rhs.clone());
        let mut ints = primitive_integer_vector(&row);
        let rhs = ints.pop().expect("row is nonempty");
        Self::new(n, ints, rhs)
    }

    /// `rhs − coefficients · x`.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        self.coefficients
            .iter()
            .zip(x)
            .fold(Rational::from(self.rhs.clone()), |acc, (a, v)| {
                acc - Rational::from(a.clone()) * v
            })
    }

    pub fn holds_at(&self, x: &[Rational]) -> bool {
        !self.slack(x).is_negative()
    }

    pub fn is_tight_at(&self, x: &[Rational]) -> bool {
        self.slack(x).is_zero()
    }

    /// Indices of the points of `vs` on the hyperplane.
    pub fn tight_indices(&self, vs: &VertexSet) -> Vec<usize> {
        (0..vs.len())
            .filter(|&k| self.is_tight_at(&vs.points[k]))
            .collect()
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.coefficients {
            write!(f, "{c} ")?;
        }
        write!(f, "<= {}", self.rhs)
    }
}

impl Serialize for Inequality {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FacetClass {
    TrivialLower,
    TrivialUpper,
    ThreeCycle,
    Other,
}

/// Classes up to the Z_2 × S_n symmetry; duality swaps the two trivial kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FacetFamily {
    Trivial,
    ThreeCycle,
    Other,
}

impl FacetClass {
    pub fn family(self) -> FacetFamily {
        match self {
            Self::TrivialLower | Self::TrivialUpper => FacetFamily::Trivial,
            Self::ThreeCycle => FacetFamily::ThreeCycle,
            Self::Other => FacetFamily::Other,
        }
    }

    /// Trivial and 3-cycle facets, the ones tight on `n!/2` vertices.
    pub fn is_maximal_type(self) -> bool {
        self != Self::Other
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::TrivialLower => "TRIVIAL_LOWER",
            Self::TrivialUpper => "TRIVIAL_UPPER",
            Self::ThreeCycle => "THREE_CYCLE",
            Self::Other => "OTHER",
        }
    }
}

impl fmt::Display for FacetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `x_ij >= 0`, `x_ij <= 1`, `x_ij + x_jk − x_ik <= 1` or
/// `−x_ij − x_jk + x_ik <= 0` (`i < j < k`), otherwise `OTHER`.
pub fn classify(ineq: &Inequality) -> FacetClass {
    let index = pairs(ineq.n);
    let support: Vec<(usize, usize, i64)> = ineq
        .coefficients
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .filter_map(|(k, c)| c.to_i64().map(|c| (index[k].i, index[k].j, c)))
        .collect();
    if support.len() != ineq.coefficients.iter().filter(|c| !c.is_zero()).count() {
        return FacetClass::Other;
    }
    let rhs = ineq.rhs.to_i64();
    match (support.as_slice(), rhs) {
        ([(_, _, -1)], Some(0)) => FacetClass::TrivialLower,
        ([(_, _, 1)], Some(1)) => FacetClass::TrivialUpper,
        ([a, b, c], Some(r)) => {
            // PairIndex order puts (i,j) < (i,k) < (j,k).
            let (ij, ik, jk) = (a, b, c);
            let shape = ij.0 == ik.0 && ij.1 == jk.0 && ik.1 == jk.1;
            let signs = (ij.2, jk.2, ik.2);
            match (shape, signs, r) {
                (true, (1, 1, -1), 1) | (true, (-1, -1, 1), 0) => FacetClass::ThreeCycle,
                _ => FacetClass::Other,
            }
        }
        _ => FacetClass::Other,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub inequality: Inequality,
    /// Indices (into the vertex set) of the vertices on the facet.
    pub tight: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRepresentation {
    pub n: usize,
    pub facets: Vec<Facet>,
}

impl HRepresentation {
    /// Attaches tight-vertex lists to given inequalities.
    pub fn from_inequalities(n: usize, inequalities: Vec<Inequality>, vs: &VertexSet) -> Self {
        let facets = inequalities
            .into_iter()
            .map(|inequality| {
                let tight = inequality.tight_indices(vs);
                Facet { inequality, tight }
            })
            .collect();
        Self { n, facets }
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn inequalities(&self) -> Vec<Inequality> {
        self.facets.iter().map(|f| f.inequality.clone()).collect()
    }

    pub fn class_counts(&self) -> BTreeMap<FacetClass, usize> {
        let mut counts = BTreeMap::new();
        for f in &self.facets {
            *counts.entry(classify(&f.inequality)).or_insert(0) += 1;
        }
        counts
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# lop n={} basis=K\n", self.n);
        for f in &self.facets {
            out.push_str(&f.inequality.to_string());
            out.push('\n');
        }
        out
    }
}

/// Parses the text H-representation: a `# lop n=<n> basis=K` header, then
/// one `a_(1,2) … a_(n−1,n) <= b` line per inequality. Blank lines,
/// further `#` lines and trailing `# …` comments are ignored.
pub fn parse_hrep(text: &str) -> Result<(usize, Vec<Inequality>)> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty H-representation".into()))?;
    let n = header
        .strip_prefix("# lop n=")
        .and_then(|rest| rest.strip_suffix(" basis=K"))
        .and_then(|v| v.parse::<usize>().ok())
        .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
    let dim = binomial(n, 2);
    let mut out = Vec::new();
    for line in lines.filter(|l| !l.starts_with('#')) {
        let line = line
            .split_once('#')
            .map_or(line, |(body, _)| body.trim_end());
        let (lhs, rhs) = line
            .split_once("<=")
            .ok_or_else(|| Error::Parse(format!("missing '<=' in {line:?}")))?;
        let parse = |t: &str| {
            t.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
        };
        let coefficients = lhs
            .split_whitespace()
            .map(parse)
            .collect::<Result<Vec<_>>>()?;
        if coefficients.len() != dim {
            return Err(Error::Parse(format!(
                "expected {dim} coefficients, found {} in {line:?}",
                coefficients.len()
            )));
        }
        out.push(Inequality::new(n, coefficients, parse(rhs.trim())?)?);
    }
    Ok((n, out))
}

struct Ray {
    coords: Vec<BigInt>,
    zeros: FixedBitSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

/// Homogenized constraint rows `(1, −v)` scaled to integers.
fn constraint_rows(vs: &VertexSet) -> Vec<Vec<BigInt>> {
    vs.points
        .iter()
        .map(|p| {
            let mut row = vec![Rational::one()];
            row.extend(p.iter().map(|x| -x));
            primitive_integer_vector(&row)
        })
        .collect()
}

/// Greedy choice of a row basis, scanning rows in `order`.
fn independent_rows(rows: &[Vec<BigInt>], order: &[usize]) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut chosen = Vec::new();
    for &k in order {
        let row = &rows[k];
        let mut r: Vec<Rational> = row.iter().cloned().map(Rational::from).collect();
        for (pivot, e) in &echelon {
            if !r[*pivot].is_zero() {
                let f = r[*pivot].clone();
                for (x, y) in r.iter_mut().zip(e) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(pivot) = r.iter().position(|x| !x.is_zero()) {
            let inv = r[pivot].recip();
            r.iter_mut().for_each(|x| *x *= &inv);
            for (_, e) in echelon.iter_mut() {
                if !e[pivot].is_zero() {
                    let f = e[pivot].clone();
                    for (x, y) in e.iter_mut().zip(&r) {
                        *x -= &f * y;
                    }
                }
            }
            echelon.push((pivot, r));
            chosen.push(k);
            if chosen.len() == width {
                break;
            }
        }
    }
    chosen
}

/// All facets of the convex hull of `vs` by the double description method:
/// the cone `{(b, a) : b − a·v >= 0 for all v}` is built by adding the
/// vertex constraints one at a time, and its extreme rays are the facets
/// `a·x <= b`. Vertices are inserted in lexicographic order of the inverse
/// of their labels, which keeps the intermediate cones of `P_n` far smaller
/// than plain lexicographic order. Facets are returned sorted and certified
/// (validity, tight sets, affine rank of tight vertices).
pub fn enumerate_facets(vs: &VertexSet) -> Result<HRepresentation> {
    if vs.dim > MAX_DIM || vs.len() > MAX_POINTS {
        return Err(Error::DimTooLarge {
            dim: vs.dim,
            points: vs.len(),
            max_dim: MAX_DIM,
            max_points: MAX_POINTS,
        });
    }
    let n = vs.labels.first().map_or(0, |p| p.degree());
    let width = vs.dim + 1;
    let rows = constraint_rows(vs);
    let mut order: Vec<usize> = (0..vs.len()).collect();
    order.sort_by_cached_key(|&k| vs.labels[k].inverse());
    let basis = independent_rows(&rows, &order);
    if basis.len() < width {
        return Err(Error::NotFullDimensional {
            rank: basis.len().saturating_sub(1),
            dim: vs.dim,
        });
    }

    let start = Matrix::from_rows(
        basis
            .iter()
            .map(|&k| rows[k].iter().cloned().map(Rational::from).collect())
            .collect(),
    )?;
    let inverse = start.inverse().expect("chosen rows are independent");
    let mut rays: Vec<Ray> = (0..width)
        .map(|c| {
            let mut zeros = FixedBitSet::with_capacity(rows.len());
            for (r, &k) in basis.iter().enumerate() {
                if r != c {
                    zeros.insert(k);
                }
            }
            Ray {
                coords: primitive_integer_vector(&inverse.column(c)),
                zeros,
            }
        })
        .collect();

    let mut in_basis = FixedBitSet::with_capacity(rows.len());
    basis.iter().for_each(|&k| in_basis.insert(k));
    for &k in &order {
        if in_basis.contains(k) {
            continue;
        }
        let row = &rows[k];
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (t, v) in values.iter().enumerate() {
            if v.is_positive() {
                pos.push(t);
            } else if v.is_negative() {
                neg.push(t);
            }
        }
        let mut created = Vec::new();
        if !neg.is_empty() {
            // zero_rays[i]: rays tight at constraint i.
            let mut zero_rays = vec![FixedBitSet::with_capacity(rays.len()); rows.len()];
            for (t, ray) in rays.iter().enumerate() {
                for i in ray.zeros.ones() {
                    zero_rays[i].insert(t);
                }
            }
            let mut others = FixedBitSet::with_capacity(rays.len());
            for &p in &pos {
                for &q in &neg {
                    if rays[p].zeros.intersection_count(&rays[q].zeros) + 2 < width {
                        continue;
                    }
                    let mut common = rays[p].zeros.clone();
                    common.intersect_with(&rays[q].zeros);
                    // Adjacent iff no other ray is tight on every constraint
                    // tight on both. A few constraints narrow the candidates.
                    let mut tight = common.ones();
                    others.clone_from(&zero_rays[tight.next().expect("nonempty")]);
                    for i in tight.take(3) {
                        others.intersect_with(&zero_rays[i]);
                    }
                    let adjacent = others
                        .ones()
                        .all(|t| t == p || t == q || !common.is_subset(&rays[t].zeros));
                    if !adjacent {
                        continue;
                    }
                    let (sp, sq) = (&values[p], -&values[q]);
                    let coords = rays[p]
                        .coords
                        .iter()
                        .zip(&rays[q].coords)
                        .map(|(a, b)| &sq * a + sp * b)
                        .collect();
                    common.insert(k);
                    created.push(Ray {
                        coords: normalize(coords),
                        zeros: common,
                    });
                }
            }
        }
        let mut next = Vec::with_capacity(rays.len() + created.len());
        for (t, mut ray) in rays.into_iter().enumerate() {
            if values[t].is_zero() {
                ray.zeros.insert(k);
                next.push(ray);
            } else if values[t].is_positive() {
                next.push(ray);
            }
        }
        next.extend(created);
        rays = next;
    }

    let mut facets = rays
        .into_iter()
        .map(|r| {
            let rhs = r.coords[0].clone();
            let inequality = Inequality::new(n, r.coords[1..].to_vec(), rhs)?;
            Ok(Facet {
                inequality,
                tight: r.zeros.ones().collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    facets.sort_by(|a, b| a.inequality.cmp(&b.inequality));
    let h = HRepresentation { n, facets };
    certify(&h, vs)?;
    Ok(h)
}

const PRIME: u64 = (1 << 61) - 1;

fn mod_prime(x: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    x.mod_floor(&p).to_u64().expect("reduced below the modulus")
}

/// Product modulo the Mersenne prime `2^61 − 1` by folding the high bits.
fn mul_mod(a: u64, b: u64) -> u64 {
    let x = u128::from(a) * u128::from(b);
    let folded = (x as u64 & PRIME) + (x >> 61) as u64;
    let r = (folded & PRIME) + (folded >> 61);
    if r >= PRIME {
        r - PRIME
    } else {
        r
    }
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    acc
}

fn sub_mod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

/// Incremental row echelon form over `GF(PRIME)`.
#[derive(Default)]
struct ModEchelon {
    rows: Vec<(usize, Vec<u64>)>,
    scratch: Vec<u64>,
}

impl ModEchelon {
    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a row; returns whether the rank went up.
    fn insert(&mut self, row: &[u64]) -> bool {
        let r = &mut self.scratch;
        r.clear();
        r.extend_from_slice(row);
        for (pivot, e) in &self.rows {
            let f = r[*pivot];
            if f != 0 {
                for (x, &y) in r.iter_mut().zip(e) {
                    *x = sub_mod(*x, mul_mod(f, y));
                }
            }
        }
        let Some(pivot) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = pow_mod(r[pivot], PRIME - 2);
        let normalized = r.iter().map(|&x| mul_mod(x, inv)).collect();
        self.rows.push((pivot, normalized));
        true
    }
}

fn rank_mod_prime(rows: &[Vec<BigInt>]) -> usize {
    let mut echelon = ModEchelon::default();
    for row in rows {
        echelon.insert(&row.iter().map(mod_prime).collect::<Vec<_>>());
    }
    echelon.rank()
}

/// Whether rank modulo `PRIME` equals rational rank for every subset of
/// `rows`: by Hadamard's bound every minor is below `k^(k/2) · M^k` for
/// entries bounded by `M`, so no nonzero minor can vanish modulo `PRIME`.
fn modular_rank_is_exact(rows: &[Vec<BigInt>]) -> bool {
    let width = rows.first().map_or(0, Vec::len) as f64;
    let max = rows
        .iter()
        .flatten()
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let Some(max) = max.to_f64() else {
        return false;
    };
    let log_bound = width / 2.0 * width.ln() + width * max.max(1.0).ln();
    log_bound + 1.0 < (PRIME as f64).ln()
}

/// Rank of the homogenized points `(1, v)` for the given vertices, i.e. one
/// more than the affine dimension of their hull.
///
/// The modular rank is used when it is provably exact, or when it already
/// reaches `bound`, a known upper bound (modular rank never exceeds rational
/// rank). Otherwise the rational rank is computed.
pub fn homogeneous_rank(vs: &VertexSet, indices: &[usize], bound: usize) -> usize {
    let rows: Vec<Vec<BigInt>> = indices
        .iter()
        .map(|&k| {
            let mut row = vec![Rational::one()];
            row.extend(vs.points[k].iter().cloned());
            primitive_integer_vector(&row)
        })
        .collect();
    let fast = rank_mod_prime(&rows);
    if fast >= bound || modular_rank_is_exact(&rows) {
        return fast;
    }
    let exact = rows
        .into_iter()
        .map(|r| r.into_iter().map(Rational::from).collect())
        .collect();
    rank(&Matrix::from_rows(exact).expect("rows have equal length"))
}

/// Whether `ineq` is valid on `vs` and its tight vertices span a hyperplane.
pub fn is_facet(ineq: &Inequality, vs: &VertexSet) -> bool {
    if !vs.points.iter().all(|p| ineq.holds_at(p)) {
        return false;
    }
    let tight = ineq.tight_indices(vs);
    tight.len() < vs.len() && homogeneous_rank(vs, &tight, vs.dim) == vs.dim
}

/// Facet certificates: every vertex satisfies every inequality, the stored
/// tight sets are exact, and each tight set has affine rank `dim − 1`.
pub fn certify(h: &HRepresentation, vs: &VertexSet) -> Result<()> {
    for f in &h.facets {
        if let Some(k) = vs.points.iter().position(|p| !f.inequality.holds_at(p)) {
            return Err(Error::NotValid {
                inequality: f.inequality.to_string(),
                vertex: vs.labels[k].to_string(),
            });
        }
        if f.inequality.tight_indices(vs) != f.tight {
            return Err(Error::ClaimViolation {
                facet: f.inequality.to_string(),
                detail: "stored tight set is wrong".into(),
            });
        }
        // Valid inequalities with a nonzero normal cap the rank at dim.
        if homogeneous_rank(vs, &f.tight, vs.dim) != vs.dim || f.tight.len() == vs.len() {
            return Err(Error::ClaimViolation {
                facet: f.inequality.to_string(),
                detail: "tight vertices do not span a hyperplane".into(),
            });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub inequality: Inequality,
    pub class: FacetClass,
    pub tight_vertices: usize,
}

/// Tight-vertex count per facet. Trivial and 3-cycle facets must reach
/// exactly `n!/2`, every other facet must stay below it.
pub fn vertex_census(h: &HRepresentation, vs: &VertexSet) -> Result<Vec<CensusEntry>> {
    let half = factorial(h.n) / 2;
    let mut out = Vec::with_capacity(h.len());
    for f in &h.facets {
        let class = classify(&f.inequality);
        let count = vs
            .points
            .iter()
            .filter(|p| f.inequality.is_tight_at(p))
            .count();
        let violated = if class.is_maximal_type() {
            count != half
        } else {
            count >= half
        };
        if violated {
            return Err(Error::ClaimViolation {
                facet: f.inequality.to_string(),
                detail: format!("{class} facet tight on {count} vertices (n!/2 = {half})"),
            });
        }
        out.push(CensusEntry {
            inequality: f.inequality.clone(),
            class,
            tight_vertices: count,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pullback {
    pub source: Inequality,
    pub source_class: FacetClass,
    pub inequality: Inequality,
    pub is_facet: bool,
    pub class: FacetClass,
    pub tight_vertices: usize,
}

/// Composes an inequality of `P_{n−1}` with the factor map
/// `P_n → P_{n−1}` (0/1 coordinates). The result must be valid on `P_n`;
/// trivial and 3-cycle inputs must come back as trivial or 3-cycle facets.
pub fn pullback_facet(n: usize, ineq: &Inequality) -> Result<Pullback> {
    if ineq.n + 1 != n {
        return Err(Error::SizeMismatch {
            left: ineq.n,
            right: n - 1,
        });
    }
    let map = factor_map_k(n)?;
    let a: Vec<Rational> = ineq
        .coefficients
        .iter()
        .cloned()
        .map(Rational::from)
        .collect();
    let coefficients = map.linear.transpose().mul_vec(&a)?;
    let shift = a
        .iter()
        .zip(&map.translation)
        .fold(Rational::zero(), |acc, (x, t)| acc + x * t);
    let rhs = Rational::from(ineq.rhs.clone()) - shift;
    let pulled = Inequality::from_rationals(n, &coefficients, &rhs)?;

    let vs = lop_vertices(n, Basis::K)?;
    if let Some(k) = vs.points.iter().position(|p| !pulled.holds_at(p)) {
        return Err(Error::NotValid {
            inequality: pulled.to_string(),
            vertex: vs.labels[k].to_string(),
        });
    }
    let tight = pulled.tight_indices(&vs);
    let is_facet = tight.len() < vs.len() && homogeneous_rank(&vs, &tight, vs.dim) == vs.dim;
    let source_class = classify(ineq);
    let class = classify(&pulled);
    if source_class.is_maximal_type() && !(is_facet && class.is_maximal_type()) {
        return Err(Error::ClaimViolation {
            facet: ineq.to_string(),
            detail: format!("pullback {pulled} is {class}, facet = {is_facet}"),
        });
    }
    Ok(Pullback {
        source: ineq.clone(),
        source_class,
        inequality: pulled,
        is_facet,
        class,
        tight_vertices: tight.len(),
    })
}

/// Acting by each generator of Z_2 × S_n on a facet's tight-vertex labels
/// gives the tight-vertex set of another facet of the same family.
pub fn closure_check(h: &HRepresentation, vs: &VertexSet) -> CheckReport {
    const NAME: &str = "facet set closed under Z_2 x S_n";
    let index: HashMap<_, usize> = vs.labels.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let by_tight: HashMap<&[usize], FacetFamily> = h
        .facets
        .iter()
        .map(|f| (f.tight.as_slice(), classify(&f.inequality).family()))
        .collect();
    for g in Symmetry::generators(h.n) {
        for f in &h.facets {
            let mut moved: Vec<usize> = f
                .tight
                .iter()
                .map(|&k| index[&g.act_on_label(&vs.labels[k])])
                .collect();
            moved.sort_unstable();
            match by_tight.get(moved.as_slice()) {
                Some(&family) if family == classify(&f.inequality).family() => {}
                Some(_) => {
                    return CheckReport::fail(
                        NAME,
                        format!("{g} changes the family of {}", f.inequality),
                    )
                }
                None => {
                    return CheckReport::fail(
                        NAME,
                        format!("{g} moves {} off the facet set", f.inequality),
                    )
                }
            }
        }
    }
    CheckReport::pass(NAME)
}

#[derive(Clone, Debug, Serialize)]
pub struct FacetReport {
    pub n: usize,
    pub facet_count: usize,
    pub class_counts: BTreeMap<FacetClass, usize>,
    pub facets: Vec<CensusEntry>,
    pub census: CheckReport,
    pub closure: CheckReport,
}

/// Enumerates, classifies and censuses the facets of `P_n`.
pub fn facet_report(n: usize) -> Result<FacetReport> {
    let vs = lop_vertices(n, Basis::K)?;
    let h = enumerate_facets(&vs)?;
    let census = vertex_census(&h, &vs);
    let census_check = CheckReport::from_result("n!/2 vertex census", census.clone());
    let facets = census.unwrap_or_else(|_| {
        h.facets
            .iter()
            .map(|f| CensusEntry {
                inequality: f.inequality.clone(),
                class: classify(&f.inequality),
                tight_vertices: f.tight.len(),
            })
            .collect()
    });
    Ok(FacetReport {
        n,
        facet_count: h.len(),
        class_counts: h.class_counts(),
        facets,
        census: census_check,
        closure: closure_check(&h, &vs),
    })
}
