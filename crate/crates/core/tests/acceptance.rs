//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the process exits
//! nonzero if any criterion fails.

use std::process::ExitCode;

use bredon_core::degrees::{Axis, KleinDegree, MotivicBidegree, Region};
use bredon_core::f2algebra::{normal_form, F2Element, Gen, Monomial, Sector, ThetaPart};
use bredon_core::figure::RegionMap;
use bredon_core::klein_point::multiply;
use bredon_core::motivic::{motivic_group_r, Status};
use bredon_core::series::dim_point;
use bredon_core::verify::{
    check_s3_symmetry, check_series_oracle, check_series_vs_basis, check_split_ses, check_two_q_splitting,
    check_vanishing, CheckReport,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn from_report(r: CheckReport) -> Outcome {
    if r.ok() {
        Ok(())
    } else {
        Err(r.to_string())
    }
}

fn expect(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn el(s: &str) -> F2Element {
    s.parse().expect("test element parses")
}

fn example_dimensions() -> Outcome {
    let cases = [
        ((2, 0, 1, -3), 2),
        ((2, 0, 1, -2), 1),
        ((1, -2, -2, 2), 2),
        ((2, -2, -2, 2), 2),
        ((3, -2, -2, 2), 0),
        ((3, -3, -2, 3), 1),
    ];
    for ((a, p, b, q), want) in cases {
        let d = KleinDegree::new(a, p, b, q);
        let got = dim_point(d);
        expect(got == want, || format!("dim_point({d}) = {got}, want {want}"))?;
    }
    Ok(())
}

fn named_class_degrees() -> Outcome {
    let (s, e, se) = (Axis::Sigma, Axis::Epsilon, Axis::SigmaEpsilon);
    // (generator, printed degree, degree lies on a single axis or is Θ's)
    let mut classes: Vec<(Monomial, KleinDegree, bool)> = Vec::new();
    for (i, axis) in [s, e, se].into_iter().enumerate() {
        let mut unit = [0; 3];
        unit[i] = 1;
        classes.push((Monomial::gen(Gen::X(axis)), KleinDegree::from_parts(0, unit), true));
        classes.push((Monomial::gen(Gen::Y(axis)), KleinDegree::from_parts(-1, unit), true));
        let twice = unit.map(|c| -2 * c);
        classes.push((Monomial::theta(ThetaPart::new(axis, 0, 0)), KleinDegree::from_parts(2, twice), true));
    }
    let kappas = [(s, [-1, 1, 1]), (e, [1, -1, 1]), (se, [1, 1, -1])];
    for (axis, rep) in kappas {
        classes.push((Monomial::gen(Gen::Kappa(axis)), KleinDegree::from_parts(-1, rep), false));
    }
    let iotas = [(s, [1, -1, -1]), (e, [-1, 1, -1]), (se, [-1, -1, 1])];
    for (axis, rep) in iotas {
        classes.push((Monomial::gen(Gen::Iota(axis)), KleinDegree::from_parts(1, rep), false));
    }
    classes.push((Monomial::gen(Gen::BigTheta), KleinDegree::new(3, -1, -1, -1), true));
    expect(classes.len() == 16, || format!("{} classes listed", classes.len()))?;
    for (m, printed, exact) in classes {
        expect(m.degree() == printed, || format!("{m}: degree {} vs printed {printed}", m.degree()))?;
        let dim = dim_point(printed);
        let ok = if exact { dim == 1 } else { dim >= 1 };
        expect(ok, || format!("{m} at {printed}: dimension {dim}"))?;
    }
    Ok(())
}

fn ring_relations() -> Outcome {
    let mul = |a: &str, b: &str| multiply(&el(a), &el(b)).map_err(|err| format!("{a} * {b}: {err}"));
    let labels = ["1", "2", "3"];
    for (i, ai) in Axis::ALL.into_iter().enumerate() {
        let (j, k) = ai.others();
        let (li, lj, lk) = (labels[i], labels[j.index()], labels[k.index()]);
        let checks = [
            (format!("k{li}"), format!("x{li}"), format!("x{lj}*y{lk} + y{lj}*x{lk}")),
            (format!("k{li}"), format!("y{li}"), format!("y{lj}*y{lk}")),
            (format!("k{li}"), format!("k{lj}"), format!("y{lk}^2")),
            (format!("k{li}"), format!("theta{lj}"), format!("i{lk}")),
            (format!("i{li}"), format!("theta{li}"), "Theta".to_string()),
        ];
        for (a, b, want) in checks {
            let got = mul(&a, &b)?;
            expect(got == el(&want), || format!("{a} * {b} = {got}, want {want}"))?;
        }
        let mut zeros = vec![
            (format!("i{li}"), format!("theta{lj}")),
            (format!("i{li}"), format!("k{li}")),
            (format!("i{li}"), format!("i{lj}")),
            (format!("i{li}"), format!("x{lj}")),
            (format!("i{li}"), format!("y{lj}")),
            (format!("theta{li}"), "Theta".to_string()),
            (format!("k{li}"), "Theta".to_string()),
            (format!("i{li}"), "Theta".to_string()),
            ("Theta".to_string(), format!("x{li}")),
            ("Theta".to_string(), format!("y{li}")),
        ];
        zeros.push(("Theta".to_string(), "Theta".to_string()));
        for (a, b) in zeros {
            let got = mul(&a, &b)?;
            expect(got.is_zero(), || format!("{a} * {b} = {got}, want 0"))?;
        }
    }
    let f = el("x1*y2*y3 + y1*x2*y3 + y1*y2*x3");
    let nf = normal_form(&f, Sector::PositiveCone).map_err(|e| e.to_string())?;
    expect(nf.is_zero(), || format!("f reduces to {nf}"))?;
    for (input, want) in [("k2*y2", "y1*y3"), ("k2*x2", "x1*y3 + x3*y1")] {
        let got = normal_form(&el(input), Sector::ESpace).map_err(|e| e.to_string())?;
        expect(got == el(want), || format!("{input} -> {got}, want {want}"))?;
    }
    Ok(())
}

fn realization_boundaries() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut point = 0;
    while point < 50 {
        let d = MotivicBidegree::new(
            rng.gen_range(-12..=12),
            rng.gen_range(-8..=8),
            rng.gen_range(0..=8),
            rng.gen_range(-8..=8),
        );
        if d.b + d.q < 0 {
            continue;
        }
        point += 1;
        let s = motivic_group_r(d).realization;
        expect(s.raw == Status::Iso && s.refined == Status::Iso, || format!("point region {d}: {s:?}"))?;
    }
    let mut borel = 0;
    while borel < 50 {
        let b = rng.gen_range(-6..=-1);
        let d = MotivicBidegree::new(rng.gen_range(-12..=12), rng.gen_range(-8..=8), b, rng.gen_range(-b..=8));
        assert_eq!(bredon_core::region_of(d), Region::Borel);
        borel += 1;
        let want = if d.a <= 2 * d.b + 2 { Status::Iso } else { Status::Mono };
        let s = motivic_group_r(d).realization;
        expect(s.raw == want, || format!("Borel region {d}: {s:?}, want {want}"))?;
    }
    let s = motivic_group_r(MotivicBidegree::new(3, -3, 1, -3)).realization;
    expect(s.refined == Status::MonoNotEpi, || format!("((3,-3),(1,-3)): {s:?}"))?;
    let s = motivic_group_r(MotivicBidegree::new(3, -2, 1, -2)).realization;
    expect(s.refined == Status::Iso, || format!("((3,-2),(1,-2)): {s:?}"))
}

fn region_map_golden() -> Outcome {
    let golden = include_str!("golden/region_map.txt");
    let rendered = RegionMap::default().to_ascii();
    expect(rendered == golden, || format!("rendered map differs from golden:\n{rendered}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("example-value replay", example_dimensions),
        ("named-class degrees", named_class_degrees),
        ("closed forms vs convolution oracle", || from_report(check_series_oracle(6))),
        ("S3 symmetry of dim_point", || from_report(check_s3_symmetry(8, 5))),
        ("vanishing suites", || from_report(check_vanishing(10))),
        ("split short exact sequence", || from_report(check_split_ses(8, 5))),
        ("2q decomposition", || from_report(check_two_q_splitting((-10, 5), 5, 5))),
        ("ring relations", ring_relations),
        ("realization status boundaries", realization_boundaries),
        ("basis vs series", || from_report(check_series_vs_basis(5))),
        ("region map golden file", region_map_golden),
    ];
    let mut failures = 0;
    for (n, (name, run)) in criteria.into_iter().enumerate() {
        match run() {
            Ok(()) => println!("criterion {:>2} PASS {name}", n + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL {name}: {why}", n + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
