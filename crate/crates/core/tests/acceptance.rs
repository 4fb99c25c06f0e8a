//! Acceptance criteria 1 to 10. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_rational::Rational64;
use rslab_core::constructions::{
    broom_gadget, broom_saturated, caterpillar_construction, double_star_construction, star_forest,
    DoubleStarVariant, FoldedCube,
};
use rslab_core::engine::{
    colouring_class_key, enumerate_colourings, find_rainbow_copy, forces_rainbow, is_proper,
    is_properly_rainbow_saturated, is_saturated, rainbow_free_colouring_classes, DEFAULT_BUDGET,
};
use rslab_core::graph::{all_automorphisms, pair_orbits, Graph, Pattern, PatternSpec};
use rslab_core::oracle::{
    census, enumerate_trees, formula_table, standard_formulas, verify_record, CensusConfig,
    Formula, Quantity,
};

type Outcome = Result<String, String>;

fn pat(s: &str) -> Pattern {
    s.parse::<PatternSpec>().unwrap().compile().unwrap()
}

fn exact(n: usize, p: &str, q: Quantity) -> Result<usize, String> {
    let h = pat(p);
    let rec = census(n, &h, q, CensusConfig::default()).map_err(|e| e.to_string())?;
    verify_record(&rec, &h).map_err(|w| format!("{q}({n}, {p}) witness {w} fails"))?;
    rec.value
        .exact()
        .ok_or_else(|| format!("{q}({n}, {p}) = {}", rec.value))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn closed_form(n: usize) -> usize {
    n - (n + 3) / 5
}

fn prsat_p4_values() -> Outcome {
    let mut got = Vec::new();
    for n in [7, 8] {
        let v = exact(n, "P4", Quantity::Prsat)?;
        ensure(v == closed_form(n), || {
            format!("prsat({n}, P4) = {v}, expected {}", closed_form(n))
        })?;
        got.push(format!("prsat({n},P4)={v}"));
    }
    Ok(got.join(", "))
}

fn sat_subdivided_star_values() -> Outcome {
    let mut got = Vec::new();
    for n in 7..=9 {
        let v = exact(n, "T5star", Quantity::Sat)?;
        ensure(v == closed_form(n), || {
            format!("sat({n}, T5star) = {v}, expected {}", closed_form(n))
        })?;
        got.push(format!("sat({n},T5*)={v}"));
    }
    Ok(got.join(", "))
}

fn star_equality() -> Outcome {
    let p = exact(6, "K1,3", Quantity::Prsat)?;
    let s = exact(6, "K1,3", Quantity::Sat)?;
    ensure(p == 5 && s == 5, || format!("prsat={p}, sat={s}"))?;
    Ok(format!("prsat(6,K1,3)=sat(6,K1,3)={p}"))
}

fn folded_cube_certificate() -> Outcome {
    for (index, colours, path) in [(4, 4, "P5"), (5, 5, "P6")] {
        let f = FoldedCube::new(index).map_err(|e| e.to_string())?;
        let g = f.graph();
        let c = f.difference_colouring(&g);
        ensure(is_proper(&g, &c).unwrap(), || {
            format!("F_{index} colouring is not proper")
        })?;
        ensure(c.colour_count() == colours, || {
            format!("F_{index} uses {} colours", c.colour_count())
        })?;
        if let Some(e) = find_rainbow_copy(&g, &pat(path), &c).unwrap() {
            return Err(format!("F_{index} has a rainbow {path}: {:?}", e.map));
        }
    }
    Ok("F_4: proper, 4 colours, no rainbow P5; F_5: no rainbow P6".into())
}

fn folded_cube_lemma() -> Outcome {
    let k4 = Graph::complete(4);
    let p4 = pat("P4");
    let mut counts = BTreeSet::new();
    let total = enumerate_colourings(&k4, Some(&p4), DEFAULT_BUDGET, |c| {
        counts.insert(c.colour_count());
    })
    .ok_or("enumeration on K4 ran out of budget")?;
    ensure(total > 0 && counts == BTreeSet::from([3]), || {
        format!("colour counts {counts:?} over {total}")
    })?;
    let v = is_properly_rainbow_saturated(&k4, &p4, DEFAULT_BUDGET);
    ensure(v.is_established(), || format!("K4 vs P4: {:?}", v.status))?;

    let f4 = FoldedCube::new(4).unwrap().graph();
    let p5 = pat("P5");
    let reps = pair_orbits(&f4).non_edge_representatives();
    for &(u, v) in &reps {
        let r = forces_rainbow(&f4.with_edge(u, v).unwrap(), &p5, 1_000_000_000);
        ensure(r.is_established(), || {
            format!(
                "F_4 + {u}{v}: {:?} after {} nodes",
                r.status, r.nodes_explored
            )
        })?;
    }
    Ok(format!("K4: {total} rainbow-P4-free colourings, all with 3 colours; F_4: {} non-edge orbits forced", reps.len()))
}

fn broom_gadget_claims() -> Outcome {
    let b = broom_gadget(1).map_err(|e| e.to_string())?;
    let p5 = pat("P5");
    ensure(is_proper(&b.graph, &b.colouring).unwrap(), || {
        "gadget colouring is not proper".into()
    })?;
    ensure(
        find_rainbow_copy(&b.graph, &p5, &b.colouring)
            .unwrap()
            .is_none(),
        || "gadget colouring has a rainbow P5".into(),
    )?;

    let classes = rainbow_free_colouring_classes(&b.graph, &p5, DEFAULT_BUDGET)
        .ok_or("enumeration ran out of budget")?;
    let own = colouring_class_key(&b.graph, &b.colouring, &all_automorphisms(&b.graph));
    ensure(classes.len() == 1 && classes.contains(&own), || {
        format!("{} colouring classes", classes.len())
    })?;

    let host = b.graph.disjoint_union(&Graph::complete(2));
    let mut forced = 0;
    for (u, v) in pair_orbits(&host).non_edge_representatives() {
        if u >= b.graph.n() && v >= b.graph.n() {
            continue;
        }
        let r = forces_rainbow(&host.with_edge(u, v).unwrap(), &p5, DEFAULT_BUDGET);
        ensure(r.is_established(), || {
            format!("adding {u}{v}: {:?}", r.status)
        })?;
        forced += 1;
    }
    Ok(format!("explicit colouring unique up to symmetry; {forced} gadget-incident additions force a rainbow P5"))
}

fn tree_exclusion() -> Outcome {
    let p6 = pat("P6");
    let mut counts = Vec::new();
    for n in 3..=8 {
        let trees = enumerate_trees(n);
        counts.push(trees.len());
        for t in &trees {
            let v = is_properly_rainbow_saturated(t, &p6, DEFAULT_BUDGET);
            ensure(v.is_refuted(), || {
                format!("tree {:?}: {:?}", t.edges(), v.status)
            })?;
        }
    }
    ensure(counts == [1, 2, 3, 6, 11, 23], || {
        format!("tree counts {counts:?}")
    })?;
    Ok(format!(
        "{} trees, all refuted",
        counts.iter().sum::<usize>()
    ))
}

fn broom_lower_bound() -> Outcome {
    let mut got = Vec::new();
    for n in [5, 6] {
        let v = exact(n, "P5", Quantity::Prsat)?;
        ensure(v >= n - 1, || format!("prsat({n}, P5) = {v} < {}", n - 1))?;
        got.push(format!("prsat({n},P5)={v}"));
    }
    Ok(got.join(", "))
}

fn construction_self_checks() -> Outcome {
    let g = broom_saturated(9, 1).map_err(|e| e.to_string())?;
    let v = is_properly_rainbow_saturated(&g, &pat("B4,1"), DEFAULT_BUDGET);
    ensure(v.is_established(), || {
        format!("broom_saturated(9,1): {:?}", v.status)
    })?;
    let g = star_forest(10, 4).map_err(|e| e.to_string())?;
    let v = is_properly_rainbow_saturated(&g, &pat("P4"), DEFAULT_BUDGET);
    ensure(v.is_established(), || {
        format!("star_forest(10,4): {:?}", v.status)
    })?;
    let g =
        double_star_construction(10, 2, 1, DoubleStarVariant::Sat).map_err(|e| e.to_string())?;
    ensure(is_saturated(&g, &pat("S3,2")).holds, || {
        "double star construction is not S3,2-saturated".into()
    })?;
    Ok("broom_saturated(9,1), star_forest(10,4) established; double star S3,2-saturated".into())
}

fn property_suites() -> Outcome {
    let mut notes = Vec::new();
    let mut points = 0;
    for (p, ns) in [
        ("P4", 4..=8),
        ("P5", 5..=7),
        ("K1,3", 4..=7),
        ("T5star", 5..=7),
    ] {
        let h = pat(p);
        let is_star = h.graph().max_degree() + 1 == h.order();
        for n in ns {
            let sat = exact(n, p, Quantity::Sat)?;
            let ssat = exact(n, p, Quantity::Ssat)?;
            let prsat = exact(n, p, Quantity::Prsat)?;
            ensure(ssat <= prsat && ssat <= sat, || {
                format!("{p} n={n}: ssat={ssat} prsat={prsat} sat={sat}")
            })?;
            points += 1;
            if is_star {
                continue;
            }
            let rows = formula_table(
                &Formula::SecondDegreeLower {
                    pattern: h.spec().clone(),
                },
                n as i64..=n as i64,
            )
            .map_err(|e| e.to_string())?;
            for r in rows.iter().filter(|r| r.quantity == Quantity::Prsat) {
                let lower = r.lower.unwrap();
                ensure(lower <= Rational64::from_integer(prsat as i64), || {
                    format!("{p} n={n}: second-degree bound {lower} > prsat {prsat}")
                })?;
            }
        }
    }
    notes.push(format!(
        "sandwich and second-degree bound at {points} census points"
    ));

    let mut rows = 0;
    for f in standard_formulas() {
        for r in formula_table(&f, 4..=80).map_err(|e| e.to_string())? {
            ensure(r.is_consistent(), || format!("inconsistent row {r:?}"))?;
            rows += 1;
        }
    }
    notes.push(format!("{rows} formula rows consistent"));

    let b = caterpillar_construction(28, 6, 4).map_err(|e| e.to_string())?;
    ensure(b.graph.edge_count() == 30, || {
        format!("caterpillar n=28 has {} edges", b.graph.edge_count())
    })?;
    let h = PatternSpec::caterpillar_target(6, 4)
        .unwrap()
        .compile()
        .unwrap();
    ensure(is_proper(&b.graph, &b.colouring).unwrap(), || {
        "caterpillar colouring is not proper".into()
    })?;
    ensure(
        find_rainbow_copy(&b.graph, &h, &b.colouring)
            .unwrap()
            .is_none(),
        || "caterpillar colouring has a rainbow copy".into(),
    )?;
    let mut spot = Vec::new();
    for (u, v) in pair_orbits(&b.graph)
        .non_edge_representatives()
        .into_iter()
        .take(5)
    {
        let r = forces_rainbow(&b.graph.with_edge(u, v).unwrap(), &h, 50_000_000);
        ensure(!r.is_refuted(), || {
            format!("caterpillar + {u}{v} does not force a rainbow copy")
        })?;
        spot.push(format!("{u}{v}:{:?}", r.status));
    }
    let full = is_properly_rainbow_saturated(&b.graph, &h, 1_000_000_000);
    ensure(!full.is_refuted(), || {
        "caterpillar n=28 is not properly rainbow saturated".into()
    })?;
    notes.push(format!(
        "caterpillar n=28: 30 edges, rainbow-free colouring, spot checks [{}], full saturation {:?}",
        spot.join(" "),
        full.status
    ));
    Ok(notes.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        (
            "prsat(n, P4) census equals n - floor((n+3)/5) for n = 7, 8",
            prsat_p4_values,
        ),
        (
            "sat(n, T5*) census equals n - floor((n+3)/5) for n = 7, 8, 9",
            sat_subdivided_star_values,
        ),
        ("prsat(6, K1,3) = sat(6, K1,3) = 5", star_equality),
        (
            "folded cube difference colourings are proper and rainbow-free",
            folded_cube_certificate,
        ),
        (
            "folded cube colouring and saturation properties at path lengths 4 and 5",
            folded_cube_lemma,
        ),
        (
            "broom gadget colouring, uniqueness and forcing for m = 1",
            broom_gadget_claims,
        ),
        (
            "no tree on 3..=8 vertices is properly rainbow P6-saturated",
            tree_exclusion,
        ),
        ("prsat(n, P5) >= n - 1 for n = 5, 6", broom_lower_bound),
        (
            "constructions pass their own saturation checks",
            construction_self_checks,
        ),
        (
            "sandwich, second-degree, formula consistency and caterpillar property suites",
            property_suites,
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
