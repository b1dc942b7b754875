//! The full certificate suite for one `n`, as run by `linord verify`.

use serde::Serialize;

use crate::error::Result;
use crate::polytope::{
    induced_group_law_check, lemma_basis_check, project_to_permutahedron, project_to_previous,
    recomposition_check, verify_chain, verify_equivariance,
};
use crate::repdecomp::{
    build_bundle, check_range, homomorphism_check, invariance_check, irreducibility_check,
    potential_circulation_check, wedge_iso_check, Subspace,
};
use crate::report::{CheckReport, CheckStatus};
use crate::symgroup::{binomial, factorial};

/// Largest `n` for the checks that compare against every projected vertex
/// under every generator.
pub const EXHAUSTIVE_MAX_N: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub checks: Vec<CheckReport>,
    pub all_passed: bool,
}

impl VerifyReport {
    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.failed())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("verify n={}\n", self.n);
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            out.push_str(&format!("{tag}  {}", c.name));
            if let Some(d) = &c.detail {
                out.push_str(&format!(" ({d})"));
            }
            out.push('\n');
        }
        out.push_str(if self.all_passed {
            "all checks passed\n"
        } else {
            "some checks failed\n"
        });
        out
    }
}

fn guarded(name: &str, check: impl FnOnce() -> Result<CheckReport>) -> CheckReport {
    match check() {
        Ok(report) => report,
        Err(e) => CheckReport::fail(name, e.to_string()),
    }
}

fn exhaustive(n: usize, name: &str, check: impl FnOnce() -> Result<CheckReport>) -> CheckReport {
    if n > EXHAUSTIVE_MAX_N {
        CheckReport::skipped(name, format!("run for n <= {EXHAUSTIVE_MAX_N}"))
    } else {
        guarded(name, check)
    }
}

/// Runs every check for `3 <= n <= 6`. Failing checks are reported, not
/// returned as errors; only an out-of-range `n` is an error.
pub fn run_verify(n: usize) -> Result<VerifyReport> {
    check_range(n, 3, 6)?;
    let bundle = build_bundle(n)?;
    let mut checks = Vec::new();

    let expected = [1, n - 1, binomial(n - 1, 2)];
    const DIMS: &str = "decomposition U_Inv = V_0 + V_1 + V_2";
    checks.push(guarded(DIMS, || {
        let detail = format!("dims {:?}", bundle.dims());
        Ok(if bundle.dims() != expected {
            CheckReport::fail(DIMS, format!("{detail}, expected {expected:?}"))
        } else if !bundle.is_pairwise_orthogonal() {
            CheckReport::fail(DIMS, "pieces not pairwise orthogonal")
        } else if !bundle.is_complete()? {
            CheckReport::fail(DIMS, "pieces do not span U_Inv")
        } else {
            CheckReport::pass(DIMS).with_detail(detail)
        })
    }));
    checks.push(guarded("invariance", || invariance_check(&bundle)));
    checks.push(guarded("homomorphism", || homomorphism_check(&bundle)));
    checks.push(guarded("characters", || irreducibility_check(&bundle)));
    checks.push(guarded("recomposition", || recomposition_check(n)));

    const PERM: &str = "projection onto V_1 is the permutahedron under 2x - (n+1)";
    checks.push(guarded(PERM, || {
        let proj = project_to_permutahedron(n)?;
        let distinct = proj.images.distinct_count();
        Ok(CheckReport::from_failure(
            PERM,
            (distinct != factorial(n)).then(|| format!("{distinct} distinct images")),
        ))
    }));

    const PREV: &str = "projection onto V_2 is P_{n-1} with cyclic-coset fibers";
    checks.push(guarded(PREV, || {
        let proj = project_to_previous(n)?;
        let sizes_ok = proj.fibers.fibers.iter().all(|f| f.sources.len() == n);
        let count = proj.images.distinct_count();
        Ok(if count != factorial(n - 1) || !sizes_ok {
            CheckReport::fail(PREV, format!("{count} images"))
        } else {
            CheckReport::pass(PREV).with_detail(format!("{count} fibers of size {n}"))
        })
    }));

    const EQUI: &str = "projections equivariant under Z_2 x S_n";
    checks.push(exhaustive(n, EQUI, || {
        Ok(verify_equivariance(n)?.to_check())
    }));
    checks.push(exhaustive(n, "induced action", || {
        induced_group_law_check(n)
    }));

    const BASIS: &str = "Q(U) ~ Q'(basis) for U_Inv, U_Tilde, V_1, V_2";
    checks.push(exhaustive(n, BASIS, || {
        for sub in [
            Subspace::u_inv(n)?,
            Subspace::u_tilde(n)?,
            Subspace::v1(n)?,
            Subspace::v2(n)?,
        ] {
            let report = lemma_basis_check(&sub)?;
            if report.failed() {
                return Ok(report);
            }
        }
        Ok(CheckReport::pass(BASIS))
    }));

    checks.push(guarded("psi isomorphism", || wedge_iso_check(n)));
    checks.push(guarded("potentials and circulations", || {
        potential_circulation_check(n)
    }));
    checks.push(guarded("iterated decomposition", || verify_chain(n)));

    let all_passed = checks.iter().all(|c| !c.failed());
    Ok(VerifyReport {
        n,
        checks,
        all_passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn verify_n3_passes() {
        let report = run_verify(3).unwrap();
        assert!(report.all_passed, "{}", report.to_text());
        assert!(report.checks.iter().all(|c| c.passed()));
        assert!(report.to_text().ends_with("all checks passed\n"));
    }

    #[test]
    fn verify_range() {
        assert!(matches!(run_verify(2), Err(Error::NOutOfRange { .. })));
        assert!(matches!(run_verify(7), Err(Error::NOutOfRange { .. })));
    }
}
