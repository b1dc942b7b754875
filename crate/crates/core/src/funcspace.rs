//! The function space `R^{S_n}` with its invariant scalar product, the
//! inversion-indicator functions built on it, and the commuting actions of
//! S_n (relabeling, `(π f)(τ) = f(τ ∘ π)`) and Z_2 (duality,
//! `(w f)(τ) = f(w_n ∘ τ)`).

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{InnerProductSpace, Rational};
use crate::symgroup::{group, Permutation};

/// An exact rational function on S_n, indexed by the lexicographic
/// enumeration of S_n.
///
/// Values are stored as integer numerators over one shared positive
/// denominator, kept coprime, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupFunction {
    n: usize,
    numerators: Vec<BigInt>,
    denominator: BigInt,
}

impl GroupFunction {
    fn from_parts(n: usize, numerators: Vec<BigInt>, denominator: BigInt) -> Self {
        let mut f = Self {
            n,
            numerators,
            denominator,
        };
        f.canonicalize();
        f
    }

    fn canonicalize(&mut self) {
        if self.denominator.is_negative() {
            self.denominator = -&self.denominator;
            for x in &mut self.numerators {
                *x = -&*x;
            }
        }
        let g = self
            .numerators
            .iter()
            .fold(self.denominator.clone(), |acc, x| acc.gcd(x));
        if !g.is_one() && !g.is_zero() {
            for x in &mut self.numerators {
                *x /= &g;
            }
            self.denominator /= &g;
        }
    }

    /// Integer-valued function given by `f(π)` for each `π` in lex order.
    pub fn from_fn(n: usize, mut f: impl FnMut(&Permutation) -> i64) -> Result<Self> {
        let g = group(n)?;
        Ok(Self {
            n,
            numerators: g.elements().iter().map(|p| BigInt::from(f(p))).collect(),
            denominator: BigInt::one(),
        })
    }

    pub fn from_values(n: usize, values: &[Rational]) -> Result<Self> {
        let order = group(n)?.order();
        if values.len() != order {
            return Err(Error::SizeMismatch {
                left: values.len(),
                right: order,
            });
        }
        let lcm = values
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let numerators = values
            .iter()
            .map(|v| v.numer() * (&lcm / v.denom()))
            .collect();
        Ok(Self::from_parts(n, numerators, lcm))
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| 0)
    }

    /// The constant function `𝟙`.
    pub fn one(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| 1)
    }

    /// The canonical basis vector `e_π`.
    pub fn indicator(p: &Permutation) -> Result<Self> {
        Self::from_fn(p.degree(), |q| i64::from(q == p))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.numerators.iter().all(Zero::is_zero)
    }

    pub fn value(&self, index: usize) -> Rational {
        Rational::new(self.numerators[index].clone(), self.denominator.clone())
    }

    pub fn value_at(&self, p: &Permutation) -> Rational {
        self.value(p.lex_rank())
    }

    pub fn values(&self) -> Vec<Rational> {
        (0..self.len()).map(|i| self.value(i)).collect()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::linear_combination(
            self,
            &[Rational::one(), Rational::one()],
            &[self.clone(), other.clone()],
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::linear_combination(
            self,
            &[Rational::one(), -Rational::one()],
            &[self.clone(), other.clone()],
        ))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_parts(
            self.n,
            self.numerators.iter().map(|x| x * s.numer()).collect(),
            &self.denominator * s.denom(),
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            numerators: self.numerators.iter().map(|x| -x).collect(),
            denominator: self.denominator.clone(),
        }
    }

    /// `Σ_π f(π) g(π)`.
    pub fn try_inner(&self, other: &Self) -> Result<Rational> {
        self.check_same(other)?;
        Ok(self.inner(other))
    }

    fn permuted(&self, source_index: impl Fn(&Permutation) -> usize) -> Self {
        let g = group(self.n).expect("function degree already validated");
        Self {
            n: self.n,
            numerators: g
                .elements()
                .iter()
                .map(|tau| self.numerators[source_index(tau)].clone())
                .collect(),
            denominator: self.denominator.clone(),
        }
    }

    /// GroupFunction CSV: header of permutations in enumeration order, then
    /// one row of values.
    pub fn to_csv(&self) -> String {
        let g = group(self.n).expect("function degree already validated");
        let header = g.elements().iter().join(",");
        let values = self.values().iter().join(",");
        format!("{header}\n{values}\n")
    }
}

impl InnerProductSpace for GroupFunction {
    fn inner(&self, other: &Self) -> Rational {
        assert_eq!(
            self.n, other.n,
            "inner product of functions on different groups"
        );
        let mut acc = BigInt::zero();
        for (a, b) in self.numerators.iter().zip(&other.numerators) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        Rational::new(acc, &self.denominator * &other.denominator)
    }

    fn linear_combination(template: &Self, coeffs: &[Rational], vectors: &[Self]) -> Self {
        let mut common = BigInt::one();
        for (c, v) in coeffs.iter().zip(vectors) {
            if !c.is_zero() {
                common = common.lcm(&(c.denom() * &v.denominator));
            }
        }
        let mut numerators = vec![BigInt::zero(); template.len()];
        for (c, v) in coeffs.iter().zip(vectors) {
            if c.is_zero() {
                continue;
            }
            let factor = c.numer() * (&common / (c.denom() * &v.denominator));
            for (out, x) in numerators.iter_mut().zip(&v.numerators) {
                if !x.is_zero() {
                    *out += &factor * x;
                }
            }
        }
        Self::from_parts(template.n, numerators, common)
    }
}

impl fmt::Display for GroupFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.values().iter().join(", "))
    }
}

/// Unordered pair `{i, j}` stored with `1 ≤ i < j ≤ n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PairIndex {
    pub i: usize,
    pub j: usize,
}

impl PairIndex {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j || j > n {
            return Err(Error::InvalidPair { n, i, j });
        }
        Ok(Self { i, j })
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Pairs in coordinate order `(1,2), (1,3), …, (1,n), (2,3), …, (n−1,n)`.
pub fn pairs(n: usize) -> Vec<PairIndex> {
    (1..=n)
        .tuple_combinations()
        .map(|(i, j)| PairIndex { i, j })
        .collect()
}

/// Position of `(i, j)` (with `i < j`) in [`pairs`] order.
pub fn pair_position(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j <= n);
    // pairs starting with a < i: Σ_{a<i} (n − a)
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

fn check_point(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::InvalidPair { n, i, j: i });
    }
    Ok(())
}

/// `k_ij(π) = 1` if `π(i) > π(j)`, else 0.
pub fn k_func(n: usize, p: PairIndex) -> Result<GroupFunction> {
    PairIndex::new(n, p.i, p.j)?;
    GroupFunction::from_fn(n, |q| i64::from(q.apply(p.i) > q.apply(p.j)))
}

/// `tk_ij(π) = sign(π(i) − π(j))`; `tk_ii = 0` and `tk_ji = −tk_ij`.
pub fn tk_func(n: usize, i: usize, j: usize) -> Result<GroupFunction> {
    check_point(n, i)?;
    check_point(n, j)?;
    GroupFunction::from_fn(n, |q| match q.apply(i).cmp(&q.apply(j)) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
    })
}

/// `v_i = Σ_j tk_ij`, built as that sum.
pub fn v_func(n: usize, i: usize) -> Result<GroupFunction> {
    check_point(n, i)?;
    let terms = (1..=n)
        .map(|j| tk_func(n, i, j))
        .collect::<Result<Vec<_>>>()?;
    let ones = vec![Rational::one(); n];
    Ok(GroupFunction::linear_combination(&terms[0], &ones, &terms))
}

/// `w̃_ij = tk_ij − tk_in + tk_jn` for `1 ≤ i < j ≤ n − 1`.
pub fn w_func(n: usize, i: usize, j: usize) -> Result<GroupFunction> {
    if n < 3 || i == 0 || i >= j || j >= n {
        return Err(Error::InvalidPair { n, i, j });
    }
    let terms = [tk_func(n, i, j)?, tk_func(n, i, n)?, tk_func(n, j, n)?];
    let coeffs = [Rational::one(), -Rational::one(), Rational::one()];
    Ok(GroupFunction::linear_combination(
        &terms[0], &coeffs, &terms,
    ))
}

/// Relabeling action: `(p·f)(τ) = f(τ ∘ p)`. This is a left action:
/// `p·(q·f) = (p ∘ q)·f`.
pub fn act_relabel(p: &Permutation, f: &GroupFunction) -> Result<GroupFunction> {
    if p.degree() != f.n {
        return Err(Error::SizeMismatch {
            left: p.degree(),
            right: f.n,
        });
    }
    Ok(f.permuted(|tau| tau.compose_unchecked(p).lex_rank()))
}

/// Duality action: `(w·f)(τ) = f(w_n ∘ τ)`.
pub fn act_duality(f: &GroupFunction) -> GroupFunction {
    let w = Permutation::reversal(f.n);
    f.permuted(|tau| w.compose_unchecked(tau).lex_rank())
}

/// Pulls a function on S_{n−1} back to S_n along `π ↦ restrict(c^k ∘ π)`,
/// the map sending each cyclic coset to its representative fixing `n`.
pub fn lift_through_cosets(f: &GroupFunction) -> Result<GroupFunction> {
    let n = f.n + 1;
    let g = group(n)?;
    let numerators = g
        .elements()
        .iter()
        .map(|p| {
            let rep = p.coset_representative().restrict().expect("rep fixes n");
            f.numerators[rep.lex_rank()].clone()
        })
        .collect();
    Ok(GroupFunction {
        n,
        numerators,
        denominator: f.denominator.clone(),
    })
}

/// An element of Z_2 × S_n acting on `R^{S_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symmetry {
    pub duality: bool,
    pub relabel: Permutation,
}

impl Symmetry {
    pub fn identity(n: usize) -> Self {
        Self {
            duality: false,
            relabel: Permutation::identity(n),
        }
    }

    pub fn relabel(p: Permutation) -> Self {
        Self {
            duality: false,
            relabel: p,
        }
    }

    pub fn duality(n: usize) -> Self {
        Self {
            duality: true,
            relabel: Permutation::identity(n),
        }
    }

    pub fn degree(&self) -> usize {
        self.relabel.degree()
    }

    /// Group product with `(self · other)·f = self·(other·f)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            duality: self.duality ^ other.duality,
            relabel: self.relabel.compose(&other.relabel)?,
        })
    }

    pub fn act(&self, f: &GroupFunction) -> Result<GroupFunction> {
        let moved = if self.relabel.is_identity() && self.relabel.degree() == f.n {
            f.clone()
        } else {
            act_relabel(&self.relabel, f)?
        };
        Ok(if self.duality {
            act_duality(&moved)
        } else {
            moved
        })
    }

    /// Image of the simplex vertex `e_π`: relabeling sends it to
    /// `e_{π ∘ p⁻¹}`, duality to `e_{w_n ∘ π}`.
    pub fn act_on_label(&self, p: &Permutation) -> Permutation {
        let moved = p.compose_unchecked(&self.relabel.inverse());
        if self.duality {
            Permutation::reversal(p.degree()).compose_unchecked(&moved)
        } else {
            moved
        }
    }

    /// Generators of Z_2 × S_n: adjacent transpositions and the duality.
    pub fn generators(n: usize) -> Vec<Self> {
        let mut gens: Vec<Self> = Permutation::adjacent_transpositions(n)
            .into_iter()
            .map(Self::relabel)
            .collect();
        gens.push(Self::duality(n));
        gens
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.duality, self.relabel.is_identity()) {
            (false, true) => write!(f, "id"),
            (true, true) => write!(f, "duality"),
            (false, false) => write!(f, "relabel[{}]", self.relabel),
            (true, false) => write!(f, "duality*relabel[{}]", self.relabel),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;
    use crate::symgroup::enumerate;
    use proptest::prelude::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    fn pair(i: usize, j: usize) -> PairIndex {
        PairIndex { i, j }
    }

    /// Direct evaluation of `Σ_π f(π) g(π)` over the rational values.
    fn brute_inner(f: &GroupFunction, g: &GroupFunction) -> Rational {
        f.values()
            .iter()
            .zip(g.values())
            .fold(int(0), |acc, (a, b)| acc + a * b)
    }

    #[test]
    fn pair_order_and_position() {
        let ps = pairs(4);
        assert_eq!(ps.len(), 6);
        assert_eq!(ps[0], pair(1, 2));
        assert_eq!(ps[3], pair(2, 3));
        for (k, q) in ps.iter().enumerate() {
            assert_eq!(pair_position(4, q.i, q.j), k);
        }
    }

    #[test]
    fn k_values() {
        let k12 = k_func(3, pair(1, 2)).unwrap();
        assert_eq!(k12.value_at(&p(&[1, 2, 3])), int(0));
        assert_eq!(k12.value_at(&p(&[3, 2, 1])), int(1));
        let k13 = k_func(3, pair(1, 3)).unwrap();
        assert_eq!(k13.value_at(&p(&[2, 3, 1])), int(1));
        assert!(k_func(3, pair(2, 2)).is_err());
    }

    #[test]
    fn tk_values() {
        let tk12 = tk_func(3, 1, 2).unwrap();
        assert_eq!(tk12.value_at(&Permutation::identity(3)), int(-1));
        assert!(tk_func(3, 2, 2).unwrap().is_zero());
        assert_eq!(tk_func(3, 2, 1).unwrap(), tk12.neg());
    }

    #[test]
    fn v_values() {
        let id = Permutation::identity(3);
        assert_eq!(v_func(3, 1).unwrap().value_at(&id), int(-2));
        assert_eq!(v_func(3, 3).unwrap().value_at(&id), int(2));
        let vs: Vec<_> = (1..=4).map(|i| v_func(4, i).unwrap()).collect();
        let ones = vec![int(1); 4];
        assert!(GroupFunction::linear_combination(&vs[0], &ones, &vs).is_zero());
    }

    #[test]
    fn w_values() {
        let w12 = w_func(3, 1, 2).unwrap();
        assert_eq!(w12.value_at(&Permutation::identity(3)), int(-1));
        assert_eq!(w12.value_at(&p(&[2, 3, 1])), int(-1));
        assert!(w_func(3, 1, 3).is_err());
    }

    #[test]
    fn inner_examples() {
        let tk12 = tk_func(3, 1, 2).unwrap();
        let tk13 = tk_func(3, 1, 3).unwrap();
        assert_eq!(tk12.inner(&tk12), int(6));
        assert_eq!(tk12.inner(&tk13), brute_inner(&tk12, &tk13));
        assert_eq!(tk12.inner(&tk13), int(2));
        let a = tk_func(4, 1, 2).unwrap();
        let b = tk_func(4, 3, 4).unwrap();
        assert_eq!(a.inner(&b), int(0));
        assert!(matches!(
            a.try_inner(&tk12),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn k_and_tk_relation() {
        for n in 2..=6 {
            let one = GroupFunction::one(n).unwrap();
            for q in pairs(n) {
                let expected = k_func(n, q).unwrap().scale(&int(2)).sub(&one).unwrap();
                assert_eq!(tk_func(n, q.i, q.j).unwrap(), expected);
            }
        }
    }

    #[test]
    fn v_pointwise_formula() {
        for n in 1..=6 {
            for i in 1..=n {
                let v = v_func(n, i).unwrap();
                for q in enumerate(n).unwrap() {
                    assert_eq!(v.value_at(&q), int(2 * q.apply(i) as i64 - (n as i64 + 1)));
                }
            }
        }
    }

    #[test]
    fn w_is_cyclic_invariant_and_matches_tk_on_fixers() {
        for n in 3..=6 {
            let c = Permutation::cyc(n);
            for (i, j) in (1..n).tuple_combinations() {
                let w = w_func(n, i, j).unwrap();
                let tk = tk_func(n, i, j).unwrap();
                for q in enumerate(n).unwrap() {
                    assert_eq!(w.value_at(&c.compose(&q).unwrap()), w.value_at(&q));
                    if q.apply(n) == n {
                        assert_eq!(w.value_at(&q), tk.value_at(&q));
                    }
                }
            }
        }
    }

    /// Pins the composition convention: relabeling is a left action for
    /// `(p ∘ q)(i) = p(q(i))`, and moves `tk_ij` to `tk_{p(i)p(j)}`.
    #[test]
    fn relabel_convention_is_pinned() {
        for n in 2..=5 {
            let s = enumerate(n).unwrap();
            let f = GroupFunction::from_fn(n, |q| q.lex_rank() as i64 * 3 - 7).unwrap();
            for a in &s {
                for b in s.iter().step_by(3) {
                    let lhs = act_relabel(a, &act_relabel(b, &f).unwrap()).unwrap();
                    let rhs = act_relabel(&a.compose(b).unwrap(), &f).unwrap();
                    assert_eq!(lhs, rhs);
                }
                for (i, j) in (1..=n).tuple_combinations() {
                    let moved = act_relabel(a, &tk_func(n, i, j).unwrap()).unwrap();
                    assert_eq!(moved, tk_func(n, a.apply(i), a.apply(j)).unwrap());
                }
            }
        }
    }

    /// `[τ(a) > τ(b)]` for any `a ≠ b`, the reading of `k_ab` with `a > b`.
    fn k_ext(n: usize, a: usize, b: usize) -> GroupFunction {
        GroupFunction::from_fn(n, |q| i64::from(q.apply(a) > q.apply(b))).unwrap()
    }

    #[test]
    fn relabel_on_k() {
        for n in 2..=5 {
            let one = GroupFunction::one(n).unwrap();
            for a in enumerate(n).unwrap() {
                for q in pairs(n) {
                    let moved = act_relabel(&a, &k_func(n, q).unwrap()).unwrap();
                    let (pi, pj) = (a.apply(q.i), a.apply(q.j));
                    let expected = if pi > pj {
                        k_ext(n, pi, pj)
                    } else {
                        one.sub(&k_ext(n, pj, pi)).unwrap()
                    };
                    assert_eq!(moved, expected);
                    // in stored-pair form: k_{π(i)π(j)} when π(i) < π(j), else 𝟙 − k_{π(j)π(i)}
                    let stored = if pi < pj {
                        k_func(n, pair(pi, pj)).unwrap()
                    } else {
                        one.sub(&k_func(n, pair(pj, pi)).unwrap()).unwrap()
                    };
                    assert_eq!(moved, stored);
                }
            }
        }
    }

    #[test]
    fn duality_examples() {
        for n in 2..=5 {
            let one = GroupFunction::one(n).unwrap();
            for q in pairs(n) {
                let k = k_func(n, q).unwrap();
                assert_eq!(act_duality(&k), one.sub(&k).unwrap());
                let tk = tk_func(n, q.i, q.j).unwrap();
                assert_eq!(act_duality(&tk), tk.neg());
                assert_eq!(act_duality(&act_duality(&k)), k);
            }
        }
    }

    #[test]
    fn relabel_identity_is_trivial() {
        let f = v_func(4, 2).unwrap();
        assert_eq!(act_relabel(&Permutation::identity(4), &f).unwrap(), f);
    }

    #[test]
    fn indicator_action_matches_label_action() {
        let n = 4;
        for q in enumerate(n).unwrap().iter().step_by(5) {
            let e = GroupFunction::indicator(q).unwrap();
            for g in Symmetry::generators(n) {
                let moved = g.act(&e).unwrap();
                assert_eq!(moved, GroupFunction::indicator(&g.act_on_label(q)).unwrap());
            }
        }
    }

    #[test]
    fn lift_preserves_scaled_inner() {
        let f = tk_func(3, 1, 2).unwrap();
        let g = tk_func(3, 1, 3).unwrap();
        let (lf, lg) = (
            lift_through_cosets(&f).unwrap(),
            lift_through_cosets(&g).unwrap(),
        );
        assert_eq!(lf.inner(&lg), f.inner(&g) * int(4));
        assert_eq!(lf, w_func(4, 1, 2).unwrap());
        assert_eq!(lg, w_func(4, 1, 3).unwrap());
    }

    #[test]
    fn csv_export() {
        let csv = tk_func(2, 1, 2).unwrap().to_csv();
        assert_eq!(csv, "1 2,2 1\n-1,1\n");
    }

    #[test]
    fn rational_values_roundtrip() {
        let vals: Vec<Rational> = (0..6).map(|k| Rational::new(k.into(), 4.into())).collect();
        let f = GroupFunction::from_values(3, &vals).unwrap();
        assert_eq!(f.values(), vals);
        assert!(GroupFunction::from_values(3, &vals[..5]).is_err());
    }

    fn arb_function(n: usize) -> impl Strategy<Value = GroupFunction> {
        proptest::collection::vec(-5i64..5, crate::symgroup::factorial(n))
            .prop_map(move |v| GroupFunction::from_fn(n, |q| v[q.lex_rank()]).unwrap())
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    proptest! {
        #[test]
        fn duality_commutes_with_relabel(f in arb_function(4), q in arb_perm(4)) {
            let a = act_duality(&act_relabel(&q, &f).unwrap());
            let b = act_relabel(&q, &act_duality(&f)).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn scalar_product_is_invariant(f in arb_function(4), g in arb_function(4), q in arb_perm(4)) {
            let base = f.inner(&g);
            prop_assert_eq!(base.clone(), brute_inner(&f, &g));
            let (rf, rg) = (act_relabel(&q, &f).unwrap(), act_relabel(&q, &g).unwrap());
            prop_assert_eq!(rf.inner(&rg), base.clone());
            prop_assert_eq!(act_duality(&f).inner(&act_duality(&g)), base);
        }
    }
}
