//! Small reproduction run: constructions, Maxwell counts, ranks and implied
//! edges on the smallest members of each family.

use std::process::ExitCode;

use anyhow::Result;
use rigidkit::maxwell::EnumOptions;
use rigidkit::{
    banana_bunch, binom2, check_condition1, check_maxwell, check_row_space_dependence, classify,
    even_hyperbanana, hyperbanana, implied_edges, trivial_motions, Classification, RankMode,
    RankOptions,
};

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn odd_family(rank: &RankOptions, en: &EnumOptions, out: &mut Vec<Check>) -> Result<()> {
    for b in 2..=4 {
        let d = 2 * b - 1;
        let (g, _) = hyperbanana(d, b)?;
        let mx = check_maxwell(&g, d, en)?;
        let v = classify(&g, d, &rank.mode(RankMode::Exact))?;
        let want = trivial_motions(d) + binom2(b);
        out.push(Check {
            name: format!("H_{{{d},{b}}} is a flexible Maxwell graph"),
            pass: mx.pass && v.nullity == want && v.dof == binom2(b),
            detail: format!("maxwell {}, nullity {} (want {want})", mx.pass, v.nullity),
        });
    }
    Ok(())
}

fn even_family(rank: &RankOptions, en: &EnumOptions, out: &mut Vec<Check>) -> Result<()> {
    for b in 2..=3 {
        let d = 2 * b;
        let (g, _) = even_hyperbanana(d, b)?;
        let mx = check_maxwell(&g, d, en)?;
        let v = classify(&g, d, rank)?;
        let conj = trivial_motions(d) + binom2(b);
        out.push(Check {
            name: format!("H+_{{{d},{b}}} is a flexible Maxwell graph"),
            pass: mx.pass && v.dof >= 1,
            detail: format!(
                "maxwell {}, nullity {} (conjectured {conj}: {})",
                mx.pass,
                v.nullity,
                if v.nullity == conj {
                    "consistent"
                } else {
                    "mismatch"
                }
            ),
        });
    }
    Ok(())
}

fn counts(rank: &RankOptions, out: &mut Vec<Check>) -> Result<()> {
    let (h43, _) = hyperbanana(4, 3)?;
    let c = check_condition1(&h43, 4)?;
    out.push(Check {
        name: "H_{4,3} has too many edges".into(),
        pass: !c.pass && c.actual == 36 && c.expected == 34,
        detail: format!("{} vs {}", c.actual, c.expected),
    });
    let (h63, _) = hyperbanana(6, 3)?;
    let c = check_condition1(&h63, 6)?;
    let v = classify(&h63, 6, rank)?;
    out.push(Check {
        name: "H_{6,3} is underconstrained and flexible".into(),
        pass: !c.pass && c.actual == 66 && c.expected == 69 && !v.classification.is_rigid(),
        detail: format!("{} vs {}, {}", c.actual, c.expected, v.classification),
    });
    Ok(())
}

fn bunches(rank: &RankOptions, out: &mut Vec<Check>) -> Result<()> {
    for (d, b) in [(3, 2), (4, 3), (5, 3), (7, 4)] {
        let (g, _) = banana_bunch(d, b)?;
        let v = classify(&g, d, rank)?;
        out.push(Check {
            name: format!("B_{{{d},{b}}} is minimally rigid"),
            pass: v.classification == Classification::MinimallyRigid,
            detail: format!("rank {} of {}", v.rank, g.m()),
        });
    }
    Ok(())
}

fn implied(rank: &RankOptions, out: &mut Vec<Check>) -> Result<()> {
    let (g, l) = hyperbanana(3, 2)?;
    let found = implied_edges(&g, 3, None, rank)?;
    out.push(Check {
        name: "double banana has one implied hinge".into(),
        pass: found == l.banana_pairs(),
        detail: format!("{found:?}"),
    });
    let (g, l) = hyperbanana(5, 3)?;
    let pairs = l.banana_pairs();
    let found = implied_edges(&g, 5, Some(&pairs), rank)?;
    out.push(Check {
        name: "H_{5,3} has 3 implied banana pairs".into(),
        pass: found == pairs,
        detail: format!("{found:?}"),
    });
    for (d, b) in [(3, 2), (4, 2), (5, 3)] {
        let ok = check_row_space_dependence(d, b, rank)?;
        out.push(Check {
            name: format!("banana pairs of B_{{{d},{b}}} lie in its row space"),
            pass: ok,
            detail: String::new(),
        });
    }
    Ok(())
}

pub fn run(rank: RankOptions, en: EnumOptions) -> Result<ExitCode> {
    let mut checks = Vec::new();
    odd_family(&rank, &en, &mut checks)?;
    even_family(&rank, &en, &mut checks)?;
    counts(&rank, &mut checks)?;
    bunches(&rank, &mut checks)?;
    implied(&rank, &mut checks)?;
    for c in &checks {
        let word = if c.pass { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            println!("{word}  {}", c.name);
        } else {
            println!("{word}  {}  [{}]", c.name, c.detail);
        }
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    println!("{} checks, {failed} failed", checks.len());
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
