//! Problems and resolutions as S-expressions:
//!
//! ```text
//! (problem <unknown> <condition> (<domain>...))
//! (routine <problem> (<solution>...))
//! (trial (<candidate>...))
//! (inverse) | (inverse (<domain>...))
//! (analogy <transform> <combiner> (<resolution>...))
//! ```

use super::{Problem, ProblemError, Resolution};
use crate::sexpr::SExpr;

fn malformed(what: &'static str, e: &SExpr) -> ProblemError {
    ProblemError::Malformed {
        what,
        found: e.to_string(),
    }
}

/// Splits `(head a b ...)` into its arguments when the head matches.
fn tagged(e: &SExpr, tag: &str, what: &'static str) -> Result<Vec<SExpr>, ProblemError> {
    let mut items = e.to_vec().ok_or_else(|| malformed(what, e))?;
    if items.first().and_then(SExpr::as_symbol) != Some(tag) {
        return Err(malformed(what, e));
    }
    items.remove(0);
    Ok(items)
}

fn list(e: &SExpr, what: &'static str, whole: &SExpr) -> Result<Vec<SExpr>, ProblemError> {
    e.to_vec().ok_or_else(|| malformed(what, whole))
}

pub fn serialize_problem(p: &Problem) -> SExpr {
    SExpr::list([
        SExpr::sym("problem"),
        SExpr::sym(&p.unknown),
        p.condition.clone(),
        SExpr::list(p.domain.iter().cloned()),
    ])
}

pub fn deserialize_problem(e: &SExpr) -> Result<Problem, ProblemError> {
    let args = tagged(e, "problem", "problem")?;
    let [unknown, condition, domain] =
        <[SExpr; 3]>::try_from(args).map_err(|_| malformed("problem", e))?;
    let unknown = unknown
        .as_symbol()
        .ok_or_else(|| malformed("problem", e))?
        .to_string();
    Ok(Problem {
        unknown,
        condition,
        domain: list(&domain, "problem", e)?,
    })
}

pub fn serialize_resolution(r: &Resolution) -> SExpr {
    match r {
        Resolution::Routine { key, solutions } => SExpr::list([
            SExpr::sym("routine"),
            key.clone(),
            SExpr::list(solutions.iter().cloned()),
        ]),
        Resolution::Trial { candidates } => {
            SExpr::list([SExpr::sym("trial"), SExpr::list(candidates.iter().cloned())])
        }
        Resolution::Inverse { domain: None } => SExpr::list([SExpr::sym("inverse")]),
        Resolution::Inverse { domain: Some(d) } => {
            SExpr::list([SExpr::sym("inverse"), SExpr::list(d.iter().cloned())])
        }
        Resolution::Analogy {
            transform,
            combiner,
            children,
        } => SExpr::list([
            SExpr::sym("analogy"),
            transform.clone(),
            combiner.clone(),
            SExpr::list(children.iter().map(serialize_resolution)),
        ]),
    }
}

pub fn deserialize_resolution(e: &SExpr) -> Result<Resolution, ProblemError> {
    const WHAT: &str = "resolution";
    let items = e.to_vec().ok_or_else(|| malformed(WHAT, e))?;
    let Some((head, args)) = items.split_first() else {
        return Err(malformed(WHAT, e));
    };
    match (head.as_symbol(), args) {
        (Some("routine"), [key, sols]) => Ok(Resolution::Routine {
            key: key.clone(),
            solutions: list(sols, WHAT, e)?,
        }),
        (Some("trial"), [cands]) => Ok(Resolution::Trial {
            candidates: list(cands, WHAT, e)?,
        }),
        (Some("inverse"), []) => Ok(Resolution::Inverse { domain: None }),
        (Some("inverse"), [dom]) => Ok(Resolution::Inverse {
            domain: Some(list(dom, WHAT, e)?),
        }),
        (Some("analogy"), [transform, combiner, children]) => Ok(Resolution::Analogy {
            transform: transform.clone(),
            combiner: combiner.clone(),
            children: list(children, WHAT, e)?
                .iter()
                .map(deserialize_resolution)
                .collect::<Result<_, _>>()?,
        }),
        _ => Err(malformed(WHAT, e)),
    }
}
