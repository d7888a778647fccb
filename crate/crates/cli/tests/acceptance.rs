//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use common::{fibre_nonempty, sample_point};
use goodmap_core::poly::{parse_polynomial, Ideal, Polynomial, Rational};
use goodmap_core::sweep::jacobson_ascent_hypotheses;
use goodmap_core::{
    chevalley_image, good_witness, image_preserves_constructible, is_constructible_bruteforce,
    is_constructible_criterion, is_good_characterization, is_good_definition, is_jacobson,
    is_weak_good, AffineConstructible, FiniteSpace, PointSet, PolyMap, SizeCap, SpaceMap, Stratum,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAP: SizeCap = SizeCap::DEFAULT;
const SEED: u64 = 42;

/// Criterion outcome: a one-line summary, or the failure reason.
type Check = Result<String, String>;

type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn spaces_up_to(n: usize) -> Vec<Arc<FiniteSpace>> {
    (0..=n)
        .flat_map(FiniteSpace::all_preorders)
        .map(Arc::new)
        .collect()
}

fn all_maps(n: usize) -> Vec<SpaceMap> {
    let spaces = spaces_up_to(n);
    let mut maps = Vec::new();
    for x in &spaces {
        for y in &spaces {
            for a in x.monotone_assignments(y) {
                maps.push(SpaceMap::new(x.clone(), y.clone(), a).unwrap());
            }
        }
    }
    maps
}

fn random_map(rng: &mut ChaCha8Rng, spaces: &[Arc<FiniteSpace>], x: &Arc<FiniteSpace>) -> SpaceMap {
    loop {
        let y = &spaces[rng.random_range(0..spaces.len())];
        let maps = x.monotone_assignments(y);
        if !maps.is_empty() {
            let a = maps[rng.random_range(0..maps.len())].clone();
            return SpaceMap::new(x.clone(), y.clone(), a).unwrap();
        }
    }
}

fn sampled_maps(count: usize, points: usize, seed: u64) -> Vec<SpaceMap> {
    let spaces = FiniteSpace::all_preorders(points)
        .into_iter()
        .map(Arc::new)
        .collect::<Vec<_>>();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let x = spaces[rng.random_range(0..spaces.len())].clone();
            random_map(&mut rng, &spaces, &x)
        })
        .collect()
}

fn good(f: &SpaceMap) -> bool {
    is_good_definition(f, CAP).unwrap().is_good()
}

fn equivalence_sweep(name: &str, other: impl Fn(&SpaceMap) -> bool) -> Check {
    let exhaustive = all_maps(3);
    let sampled = sampled_maps(10_000, 4, SEED);
    for f in exhaustive.iter().chain(&sampled) {
        ensure(good(f) == other(f), || format!("{name} disagrees on {f:?}"))?;
    }
    Ok(format!(
        "{} exhaustive maps on <= 3 points + {} seeded samples on 4 points, 0 exceptions",
        exhaustive.len(),
        sampled.len()
    ))
}

fn criterion_1() -> Check {
    equivalence_sweep("image_preserves_constructible", |f| {
        image_preserves_constructible(f, CAP).unwrap()
    })
}

fn criterion_2() -> Check {
    equivalence_sweep("is_good_characterization", |f| {
        is_good_characterization(f, CAP).unwrap()
    })
}

fn criterion_3() -> Check {
    let mut subsets = 0;
    let spaces = spaces_up_to(4);
    for x in &spaces {
        for e in x.full().subsets() {
            subsets += 1;
            let criterion = is_constructible_criterion(x, e);
            let brute = is_constructible_bruteforce(x, e, CAP).unwrap();
            ensure(criterion == brute.is_some(), || format!("{e} in {x:?}"))?;
            if let Some(d) = brute {
                ensure(d.union() == e, || {
                    format!("decomposition of {e} covers {}", d.union())
                })?;
            }
        }
    }
    Ok(format!(
        "{subsets} subsets of {} spaces on <= 4 points, 0 exceptions",
        spaces.len()
    ))
}

/// All families of non-empty open sets covering `x`.
fn open_covers(x: &FiniteSpace) -> Vec<Vec<PointSet>> {
    let opens: Vec<PointSet> = x
        .open_sets(CAP)
        .unwrap()
        .into_iter()
        .filter(|o| !o.is_empty())
        .collect();
    (0u64..1 << opens.len())
        .map(|mask| {
            (0..opens.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| opens[i])
                .collect::<Vec<_>>()
        })
        .filter(|cover| cover.iter().fold(PointSet::EMPTY, |a, &o| a.union(o)) == x.full())
        .collect()
}

fn criterion_4() -> Check {
    let (mut source_checks, mut target_checks) = (0, 0);
    for f in all_maps(3) {
        let g = good(&f);
        if f.source().is_sober() {
            for cover in open_covers(f.source()) {
                let pieces = cover.iter().all(|&u| good(&f.restrict(u)));
                ensure(pieces == g, || format!("source cover {cover:?} of {f:?}"))?;
                source_checks += 1;
            }
        }
        if f.target().is_sober() {
            for cover in open_covers(f.target()) {
                let pieces = cover.iter().all(|&v| good(&f.over(v)));
                ensure(pieces == g, || format!("target cover {cover:?} of {f:?}"))?;
                target_checks += 1;
            }
        }
    }
    Ok(format!(
        "{source_checks} (map, source cover) and {target_checks} (map, target cover) pairs, 0 exceptions"
    ))
}

fn criterion_5() -> Check {
    let f = SpaceMap::new(FiniteSpace::point(), FiniteSpace::indiscrete(2), vec![0]).unwrap();
    let verdict = is_good_definition(&f, CAP).unwrap();
    ensure(!verdict.is_good(), || "reported good".into())?;
    ensure(
        verdict.first_failure() == Some(PointSet::singleton(0)),
        || format!("failing U is {:?}", verdict.first_failure()),
    )?;
    ensure(!is_weak_good(&f, CAP).unwrap().is_weak_good(), || {
        "reported weak good".into()
    })?;
    let image = f.image(f.source().full());
    ensure(!is_constructible_criterion(f.target(), image), || {
        "image reported constructible".into()
    })?;
    ensure(
        is_constructible_bruteforce(f.target(), image, CAP)
            .unwrap()
            .is_none(),
        || "brute force found a decomposition".into(),
    )?;
    Ok("not good (U = {0}), not weak good, image {0} not constructible".into())
}

fn criterion_6() -> Check {
    let s = Arc::new(FiniteSpace::sierpinski());
    ensure(s.is_sober(), || "not sober".into())?;
    ensure(!is_jacobson(&s, CAP).unwrap(), || {
        "reported Jacobson".into()
    })?;
    let maps = s.monotone_assignments(&s);
    for a in &maps {
        let f = SpaceMap::new(s.clone(), s.clone(), a.clone()).unwrap();
        ensure(good(&f), || format!("self-map {a:?} not good"))?;
    }
    Ok(format!(
        "sober, not Jacobson, all {} monotone self-maps good",
        maps.len()
    ))
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn poly(text: &str, vars: &[&str]) -> Polynomial<Rational> {
    parse_polynomial(text, &names(vars)).unwrap()
}

fn ideal(vars: &[&str], gens: &[&str]) -> Ideal<Rational> {
    Ideal::new(vars.len(), gens.iter().map(|g| poly(g, vars)).collect()).unwrap()
}

fn poly_map(vars: &[&str], components: &[&str]) -> PolyMap<Rational> {
    PolyMap::new(
        vars.len(),
        components.iter().map(|c| poly(c, vars)).collect(),
    )
    .unwrap()
}

fn image_case(
    label: &str,
    f: &PolyMap<Rational>,
    s: &AffineConstructible<Rational>,
    expected: &AffineConstructible<Rational>,
    seed: u64,
) -> Result<usize, String> {
    let image = chevalley_image(f, s).map_err(|e| format!("{label}: {e}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inside = 0;
    for _ in 0..100 {
        let p = sample_point::<Rational>(&mut rng, f.target_vars());
        let member = image.contains_point(&p).unwrap();
        ensure(member == fibre_nonempty(f, s, &p), || {
            format!("{label}: oracle disagrees at {p:?}")
        })?;
        inside += usize::from(member);
    }
    ensure(
        image.difference(expected).unwrap().is_empty().unwrap(),
        || format!("{label}: image ⊄ expected"),
    )?;
    ensure(
        expected.difference(&image).unwrap().is_empty().unwrap(),
        || format!("{label}: expected ⊄ image"),
    )?;
    Ok(inside)
}

fn criterion_7() -> Check {
    let hyperbola = poly_map(&["x", "y"], &["x"]);
    let on = AffineConstructible::closed(ideal(&["x", "y"], &["x*y - 1"]));
    let punctured = AffineConstructible::from(Stratum::open(ideal(&["z"], &["z"])));
    let a = image_case("hyperbola", &hyperbola, &on, &punctured, SEED)?;

    let z = ["z1", "z2"];
    let x_xy = poly_map(&["x", "y"], &["x", "x*y"]);
    let plane = AffineConstructible::whole(2);
    let expected = AffineConstructible::new(
        2,
        vec![
            Stratum::open(ideal(&z, &["z1"])),
            Stratum::closed(ideal(&z, &["z1", "z2"])),
        ],
    )
    .unwrap();
    let b = image_case("(x, xy)", &x_xy, &plane, &expected, SEED + 1)?;
    Ok(format!(
        "100 oracle points each ({a} and {b} inside the image), symmetric differences empty"
    ))
}

fn criterion_8() -> Check {
    let x = ["x"];
    let xy = ["x", "y"];
    let xyw = ["x", "y", "w"];
    let corpus = [
        (
            "A^1 -> A^0",
            poly_map(&x, &[]),
            ideal(&x, &[]),
            ideal(&x, &["1"]),
        ),
        (
            "A^2 -> A^0",
            poly_map(&xy, &[]),
            ideal(&xy, &[]),
            ideal(&xy, &["1"]),
        ),
        (
            "A^2 -> A^1",
            poly_map(&xy, &["x"]),
            ideal(&xy, &[]),
            ideal(&xy, &["1"]),
        ),
        (
            "A^2 -> A^1 on the hyperbola",
            poly_map(&xy, &["x"]),
            ideal(&xy, &["x*y - 1"]),
            ideal(&xy, &["1"]),
        ),
        (
            "A^1 -> A^1 identity off 0",
            poly_map(&x, &["x"]),
            ideal(&x, &[]),
            ideal(&x, &["x"]),
        ),
        (
            "squaring",
            poly_map(&x, &["x^2"]),
            ideal(&x, &[]),
            ideal(&x, &["1"]),
        ),
        (
            "(x, xy)",
            poly_map(&xy, &["x", "x*y"]),
            ideal(&xy, &[]),
            ideal(&xy, &["1"]),
        ),
        (
            "parabola onto y",
            poly_map(&xy, &["y"]),
            ideal(&xy, &["x^2 - y"]),
            ideal(&xy, &["1"]),
        ),
        (
            "twisted cubic",
            poly_map(&x, &["x", "x^2", "x^3"]),
            ideal(&x, &[]),
            ideal(&x, &["1"]),
        ),
        (
            "xw = y onto (x, y)",
            poly_map(&xyw, &["x", "y"]),
            ideal(&xyw, &["x*w - y"]),
            ideal(&xyw, &["1"]),
        ),
        (
            "(x + y, xy) off the diagonal",
            poly_map(&xy, &["x + y", "x*y"]),
            ideal(&xy, &[]),
            ideal(&xy, &["x - y"]),
        ),
        (
            "A^2 -> A^1 on the hyperbola minus x = 1",
            poly_map(&xy, &["x"]),
            ideal(&xy, &["x*y - 1"]),
            ideal(&xy, &["x - 1"]),
        ),
    ];
    for (label, f, z, j) in &corpus {
        let w = good_witness(f, z, j).map_err(|e| format!("{label}: {e}"))?;
        ensure(
            !w.closure_ideal()
                .radical_contains(w.witness_poly())
                .unwrap(),
            || format!("{label}: s lies in the radical of E"),
        )?;
        let certified = AffineConstructible::from(w.certified_stratum().clone());
        ensure(
            certified.difference(w.image()).unwrap().is_empty().unwrap(),
            || format!("{label}: D(s) ∩ V(E) not inside the image"),
        )?;
    }
    Ok(format!(
        "{} witnesses, both certificates hold, no alarm",
        corpus.len()
    ))
}

fn criterion_9() -> Check {
    let spaces: Vec<Arc<FiniteSpace>> = spaces_up_to(3)
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut applicable = 0;
    let pairs = 1_000;
    for _ in 0..pairs {
        let x = spaces[rng.random_range(0..spaces.len())].clone();
        let f = random_map(&mut rng, &spaces, &x);
        let g = random_map(&mut rng, &spaces, f.target_arc());
        if is_weak_good(&f, CAP).unwrap().is_weak_good()
            && is_weak_good(&g, CAP).unwrap().is_weak_good()
        {
            applicable += 1;
            let h = f.then(&g).unwrap();
            ensure(is_weak_good(&h, CAP).unwrap().is_weak_good(), || {
                format!("{f:?} then {g:?}")
            })?;
        }
    }
    Ok(format!(
        "{pairs} seeded composable pairs, {applicable} with both factors weak good, 0 exceptions"
    ))
}

fn criterion_10() -> Check {
    let mut applicable = 0;
    let maps = all_maps(3);
    for f in &maps {
        if jacobson_ascent_hypotheses(f, CAP).unwrap() {
            applicable += 1;
            ensure(is_jacobson(f.source(), CAP).unwrap(), || format!("{f:?}"))?;
        }
    }
    ensure(applicable > 0, || "no instance met the hypotheses".into())?;
    Ok(format!(
        "{applicable} of {} maps meet the hypotheses, all sources Jacobson",
        maps.len()
    ))
}

fn criterion_11() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_goodmap"))
            .args(["proptest", "--seed", "42"])
            .current_dir(dir.path())
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    ensure(first.status.success(), || {
        format!("exit status {}", first.status)
    })?;
    ensure(
        !first.stdout.is_empty() && first.stdout == second.stdout,
        || "reports differ".into(),
    )?;
    Ok(format!("two runs, {} identical bytes", first.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("chevalley equivalence", criterion_1),
        ("characterization equivalence", criterion_2),
        ("constructibility criterion", criterion_3),
        ("locality on source and target", criterion_4),
        ("negative instances", criterion_5),
        ("two-point model", criterion_6),
        ("affine image oracle", criterion_7),
        ("good witness soundness", criterion_8),
        ("weak-good composition", criterion_9),
        ("jacobson ascent analog", criterion_10),
        ("determinism", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(summary) => println!(
                "criterion {:>2} PASS  {name}: {summary} ({secs:.1}s)",
                i + 1
            ),
            Err(reason) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {reason} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
