//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Set `LINORD_LONG=1` to include the n = 6 facet census.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use linord::exactlin::{int, Matrix};
use linord::facets::{classify, enumerate_facets, pullback_facet, vertex_census, FacetClass};
use linord::polytope::{
    induced_group_law_check, lemma_basis_check, lop_vertices, permutahedron_vertices,
    project_to_permutahedron, project_to_previous, verify_chain, verify_equivariance,
};
use linord::repdecomp::{
    build_bundle, char_inner, character, potential_circulation_check, rep_matrix, wedge_iso_check,
    Subspace,
};
use linord::symgroup::{binomial, cyclic_cosets, factorial};
use linord::{Basis, Result, Symmetry};

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn within(label: &str, elapsed: Duration, budget: Duration) -> std::result::Result<(), String> {
    if elapsed > budget {
        Err(format!("{label} took {elapsed:.2?}, budget {budget:?}"))
    } else {
        Ok(())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{}: {e}", e.code()))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn decomposition_dims() -> Outcome {
    let mut timing = Duration::ZERO;
    for n in 3..=6 {
        let (bundle, t) = timed(|| build_bundle(n));
        let bundle = lift(bundle)?;
        let expected = [1, n - 1, binomial(n - 1, 2)];
        ensure(bundle.dims() == expected, || {
            format!("n={n}: dims {:?}", bundle.dims())
        })?;
        ensure(
            bundle.dims().iter().sum::<usize>() == 1 + binomial(n, 2),
            || format!("n={n}: sum"),
        )?;
        ensure(bundle.is_pairwise_orthogonal(), || {
            format!("n={n}: not orthogonal")
        })?;
        if n == 6 {
            within("n=6", t, Duration::from_secs(5))?;
            timing = t;
        }
    }
    Ok(format!("n=6 in {timing:.2?}"))
}

fn permutahedron_projection() -> Outcome {
    let mut timing = Duration::ZERO;
    for n in 3..=6 {
        let (proj, t) = timed(|| project_to_permutahedron(n));
        let proj = lift(proj)?;
        let corners = lift(permutahedron_vertices(n))?;
        ensure(proj.images.labels == corners.labels, || {
            format!("n={n}: labels")
        })?;
        for (corner, image) in corners.points.iter().zip(&proj.images.points) {
            let expected: Vec<_> = corner
                .iter()
                .map(|x| int(2) * x - int(n as i64 + 1))
                .collect();
            ensure(*image == expected, || {
                format!("n={n}: read-out differs from 2x - (n+1)")
            })?;
            ensure(lift(proj.map.apply(corner))? == *image, || {
                format!("n={n}: affine map")
            })?;
        }
        ensure(proj.images.distinct_count() == factorial(n), || {
            format!("n={n}: distinct")
        })?;
        if n == 6 {
            within("n=6", t, Duration::from_secs(10))?;
            timing = t;
        }
    }
    Ok(format!("n=6 in {timing:.2?}"))
}

fn previous_projection() -> Outcome {
    for n in 3..=6 {
        let proj = lift(project_to_previous(n))?;
        ensure(proj.images.distinct_count() == factorial(n - 1), || {
            format!("n={n}: image count")
        })?;
        let cosets = lift(cyclic_cosets(n))?;
        let mut fibers: Vec<_> = proj
            .fibers
            .fibers
            .iter()
            .map(|f| f.sources.clone())
            .collect();
        fibers.sort();
        let mut classes = cosets.classes.clone();
        classes.sort();
        ensure(fibers == classes, || {
            format!("n={n}: fibers are not the cosets")
        })?;
        ensure(fibers.iter().all(|f| f.len() == n), || {
            format!("n={n}: fiber size")
        })?;
        let previous = lop_vertices(n - 1, Basis::TK).map_err(|e| e.to_string())?;
        for (rep, fiber) in cosets.representatives.iter().zip(&cosets.classes) {
            let target = lift(rep.restrict())?;
            let k = proj
                .fibers
                .fibers
                .iter()
                .position(|f| &f.sources == fiber)
                .expect("fiber");
            ensure(proj.fibers.fibers[k].target == target, || {
                format!("n={n}: target of {rep}")
            })?;
            ensure(
                proj.images.point_of(&target) == previous.point_of(&target),
                || format!("n={n}: coordinates at {rep}"),
            )?;
        }
    }
    Ok("n=3..6".into())
}

fn equivariance() -> Outcome {
    let mut timing = Duration::ZERO;
    for n in 3..=5 {
        let (result, t) = timed(|| -> std::result::Result<(), String> {
            let report = lift(verify_equivariance(n))?;
            ensure(report.passed(), || {
                format!("n={n}: {} failures", report.failures.len())
            })?;
            let law = lift(induced_group_law_check(n))?;
            ensure(law.passed(), || format!("n={n}: {:?}", law.detail))
        });
        result?;
        if n == 5 {
            within("n=5", t, Duration::from_secs(30))?;
            timing = t;
        }
    }
    Ok(format!("n=5 in {timing:.2?}"))
}

fn iterated_chain() -> Outcome {
    for n in 4..=6 {
        let report = lift(verify_chain(n))?;
        ensure(report.passed(), || format!("n={n}: {:?}", report.detail))?;
    }
    Ok("n=4..6".into())
}

fn irreducibility() -> Outcome {
    for n in 3..=6 {
        let bundle = lift(build_bundle(n))?;
        let (c1, c2) = (lift(character(&bundle.v1))?, lift(character(&bundle.v2))?);
        let values = (
            lift(char_inner(&c1, &c1))?,
            lift(char_inner(&c2, &c2))?,
            lift(char_inner(&c1, &c2))?,
        );
        ensure(values == (int(1), int(1), int(0)), || {
            format!("n={n}: {values:?}")
        })?;
        for sub in [&bundle.v1, &bundle.v2] {
            let m = lift(rep_matrix(sub, &Symmetry::duality(n)))?;
            ensure(m == Matrix::identity(sub.dim()).scale(&int(-1)), || {
                format!("n={n}: duality on {:?}", sub.tag())
            })?;
        }
    }
    Ok("n=3..6".into())
}

fn basis_correspondence() -> Outcome {
    for n in 3..=5 {
        for sub in [
            lift(Subspace::u_inv(n))?,
            lift(Subspace::u_tilde(n))?,
            lift(Subspace::v1(n))?,
            lift(Subspace::v2(n))?,
        ] {
            let report = lift(lemma_basis_check(&sub))?;
            ensure(report.passed(), || {
                format!("n={n}: {}: {:?}", report.name, report.detail)
            })?;
        }
    }
    Ok("U_Inv, U_Tilde, V_1, V_2 at n=3..5".into())
}

fn psi_isomorphism() -> Outcome {
    for n in 3..=6 {
        let report = lift(wedge_iso_check(n))?;
        ensure(report.passed(), || format!("n={n}: {:?}", report.detail))?;
    }
    Ok("n=3..6".into())
}

fn potentials() -> Outcome {
    for n in 3..=6 {
        let report = lift(potential_circulation_check(n))?;
        ensure(report.passed(), || format!("n={n}: {:?}", report.detail))?;
    }
    Ok("n=3..6".into())
}

fn facet_case(
    n: usize,
    budget: Duration,
    expected: Option<(usize, usize, usize)>,
) -> std::result::Result<String, String> {
    let vs = lift(lop_vertices(n, Basis::K))?;
    let (h, t) = timed(|| enumerate_facets(&vs));
    let h = lift(h)?;
    within(&format!("n={n}"), t, budget)?;
    let counts = h.class_counts();
    let get = |c| counts.get(&c).copied().unwrap_or(0);
    let trivial = get(FacetClass::TrivialLower) + get(FacetClass::TrivialUpper);
    let (three, other) = (get(FacetClass::ThreeCycle), get(FacetClass::Other));
    if let Some(exp) = expected {
        ensure((h.len(), trivial, three) == exp && other == 0, || {
            format!(
                "n={n}: {} facets ({trivial} trivial, {three} three-cycle, {other} other)",
                h.len()
            )
        })?;
    }
    let census = lift(vertex_census(&h, &vs))?;
    let half = factorial(n) / 2;
    for entry in &census {
        let ok = if entry.class.is_maximal_type() {
            entry.tight_vertices == half
        } else {
            entry.tight_vertices < half
        };
        ensure(ok, || {
            format!(
                "n={n}: {} tight on {}",
                entry.inequality, entry.tight_vertices
            )
        })?;
    }
    Ok(format!(
        "n={n}: {} facets in {t:.2?} (other {other})",
        h.len()
    ))
}

fn facets() -> Outcome {
    let mut notes = Vec::new();
    for (n, secs, exp) in [
        (3, 10, (8, 6, 2)),
        (4, 60, (20, 12, 8)),
        (5, 600, (40, 20, 20)),
    ] {
        notes.push(facet_case(n, Duration::from_secs(secs), Some(exp))?);
    }
    for n in 3..=5 {
        let previous = lift(lop_vertices(n - 1, Basis::K))?;
        let h = lift(enumerate_facets(&previous))?;
        for f in &h.facets {
            let pb = lift(pullback_facet(n, &f.inequality))?;
            ensure(
                pb.is_facet
                    && pb.class.is_maximal_type() == classify(&f.inequality).is_maximal_type(),
                || {
                    format!(
                        "n={n}: pullback of {} is {} (facet {})",
                        f.inequality, pb.class, pb.is_facet
                    )
                },
            )?;
        }
    }
    notes.push("pullbacks n=3..5".into());
    if std::env::var_os("LINORD_LONG").is_some() {
        notes.push(facet_case(6, Duration::from_secs(24 * 3600), None)?);
    } else {
        notes.push("n=6 census skipped (set LINORD_LONG=1)".into());
    }
    Ok(notes.join("; "))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_linord"))
            .args(["verify", "--n", "4", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), || {
        "verify exited nonzero".into()
    })?;
    ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || {
        "outputs differ".into()
    })?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "decomposition dimensions and orthogonality",
            decomposition_dims,
        ),
        (
            "projection onto the permutahedron",
            permutahedron_projection,
        ),
        ("projection onto P_{n-1}", previous_projection),
        ("equivariance and induced action", equivariance),
        ("iterated decomposition", iterated_chain),
        ("irreducibility certificates", irreducibility),
        ("Q(U) ~ Q'(basis)", basis_correspondence),
        ("psi isomorphism", psi_isomorphism),
        ("potentials and circulations", potentials),
        ("facets", facets),
        ("determinism of verify output", determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(note) => println!("PASS criterion {}: {name} ({note})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
