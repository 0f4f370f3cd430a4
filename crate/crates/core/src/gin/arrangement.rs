use serde::Serialize;

use super::{Cell, Diagram, GinError};

/// Largest degree accepted by [`enumerate_arrangements`].
pub const MAX_ENUMERATION_DEGREE: u32 = 30;

/// A line meeting a curve in more than this many points lies on every cubic
/// surface containing the curve.
const CUBIC_SECANT_THRESHOLD: u32 = 3;

/// Circle counts `λ_0 > λ_1 > ... > λ_k > 0` of a plane section diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CircleArrangement {
    parts: Vec<u32>,
}

impl CircleArrangement {
    pub fn new(parts: Vec<u32>) -> Result<CircleArrangement, GinError> {
        let strict = parts.windows(2).all(|w| w[0] > w[1]);
        if !strict || parts.last() == Some(&0) {
            return Err(GinError::NotStrictPartition(parts));
        }
        Ok(CircleArrangement { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `λ_i`, zero past the last part.
    pub fn lambda(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Diagram with circles at `(i, j)` for `j < λ_i` and bullets elsewhere.
    pub fn to_diagram(&self) -> Diagram {
        let support = self.lambda(0) as usize;
        Diagram::from_fn(support, |i, j| {
            if (j as u32) < self.lambda(i) {
                Cell::Infinite
            } else {
                Cell::BULLET
            }
        })
    }

    /// Genus of the circle-only diagram, an upper bound for every diagram
    /// with this plane section.
    pub fn genus_bound(&self) -> i64 {
        self.to_diagram()
            .genus()
            .expect("strict partitions give valid diagrams")
    }
}

impl std::fmt::Display for CircleArrangement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All circle arrangements of the given degree, i.e. partitions into
/// distinct parts, in lexicographically descending order.
pub fn enumerate_arrangements(degree: u32) -> Result<Vec<CircleArrangement>, GinError> {
    if degree == 0 || degree > MAX_ENUMERATION_DEGREE {
        return Err(GinError::DegreeOutOfRange(degree));
    }
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<CircleArrangement>) {
        if rest == 0 {
            out.push(CircleArrangement {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(degree, degree, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Length `λ_0` of a collinear subscheme forced by `λ_0 > λ_1 + 2`.
pub fn secant_test(lambda: &CircleArrangement) -> Option<u32> {
    let (l0, l1) = (lambda.lambda(0), lambda.lambda(1));
    (l0 > l1 + 2).then_some(l0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    /// A general plane section has this many collinear points, so the curve
    /// is not on an irreducible cubic.
    SecantContradiction {
        length: u32,
    },
    GenusBound {
        max_genus: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrangementVerdict {
    pub arrangement: CircleArrangement,
    pub lambda0: u32,
    pub lambda1: u32,
    pub secant_length: Option<u32>,
    pub genus_bound: i64,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// Case analysis for sextic curves on an irreducible cubic surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SexticReport {
    pub degree: u32,
    pub arrangements: Vec<ArrangementVerdict>,
    /// Largest genus of a sextic on an irreducible cubic.
    pub max_genus_on_cubic: i64,
    /// Arrangements attaining the maximum; the genus is attained only with
    /// no numeric entries.
    pub extremal: Vec<CircleArrangement>,
    /// Smallest hypersurface degree forced by the extremal diagram.
    pub extremal_min_hypersurface_degree: u32,
    /// Complete intersection type forced at maximal genus, if any.
    pub complete_intersection: Option<(u32, u32)>,
}

pub fn sextic_theorem_report() -> SexticReport {
    const DEGREE: u32 = 6;
    const CUBIC: u32 = 3;
    let arrangements: Vec<ArrangementVerdict> = enumerate_arrangements(DEGREE)
        .expect("degree in range")
        .into_iter()
        .map(|arrangement| {
            let secant_length = secant_test(&arrangement);
            let genus_bound = arrangement.genus_bound();
            let verdict = match secant_length {
                Some(length) if length > CUBIC_SECANT_THRESHOLD => {
                    Verdict::SecantContradiction { length }
                }
                _ => Verdict::GenusBound {
                    max_genus: genus_bound,
                },
            };
            ArrangementVerdict {
                lambda0: arrangement.lambda(0),
                lambda1: arrangement.lambda(1),
                arrangement,
                secant_length,
                genus_bound,
                verdict,
            }
        })
        .collect();
    let max_genus_on_cubic = arrangements
        .iter()
        .filter_map(|a| match a.verdict {
            Verdict::GenusBound { max_genus } => Some(max_genus),
            Verdict::SecantContradiction { .. } => None,
        })
        .max()
        .expect("some arrangement survives");
    let extremal: Vec<CircleArrangement> = arrangements
        .iter()
        .filter(|a| {
            a.verdict
                == Verdict::GenusBound {
                    max_genus: max_genus_on_cubic,
                }
        })
        .map(|a| a.arrangement.clone())
        .collect();
    // with numeric entries the genus drops below the bound, so the extremal
    // curve has exactly the circle-only diagram
    let extremal_min_hypersurface_degree = extremal
        .iter()
        .map(|a| {
            a.to_diagram()
                .min_hypersurface_degree()
                .expect("valid diagram")
        })
        .max()
        .expect("nonempty");
    let q = extremal_min_hypersurface_degree;
    let complete_intersection =
        (extremal.len() == 1 && q < CUBIC && q * CUBIC == DEGREE).then_some((q, CUBIC));
    SexticReport {
        degree: DEGREE,
        arrangements,
        max_genus_on_cubic,
        extremal,
        extremal_min_hypersurface_degree,
        complete_intersection,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(parts: &[u32]) -> CircleArrangement {
        CircleArrangement::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn strict_partitions_only() {
        assert!(CircleArrangement::new(vec![3, 3]).is_err());
        assert!(CircleArrangement::new(vec![2, 3]).is_err());
        assert!(CircleArrangement::new(vec![2, 0]).is_err());
        assert_eq!(arr(&[]).degree(), 0);
        assert_eq!(arr(&[4, 2]).to_string(), "(4,2)");
    }

    #[test]
    fn enumeration_of_small_degrees() {
        let six: Vec<Vec<u32>> = enumerate_arrangements(6)
            .unwrap()
            .iter()
            .map(|a| a.parts().to_vec())
            .collect();
        assert_eq!(six, vec![vec![6], vec![5, 1], vec![4, 2], vec![3, 2, 1]]);
        assert_eq!(enumerate_arrangements(1).unwrap(), vec![arr(&[1])]);
        assert_eq!(
            enumerate_arrangements(0),
            Err(GinError::DegreeOutOfRange(0))
        );
        assert_eq!(
            enumerate_arrangements(31),
            Err(GinError::DegreeOutOfRange(31))
        );
        assert_eq!(enumerate_arrangements(30).unwrap().len(), 296);
    }

    #[test]
    fn arrangement_diagrams() {
        let d = arr(&[6]).to_diagram();
        assert_eq!(d.degree().unwrap(), 6);
        assert_eq!(d.support(), 6);
        assert_eq!(
            arr(&[5, 1]).to_diagram().lambda_sequence().unwrap(),
            arr(&[5, 1])
        );
        assert_eq!(arr(&[4, 2]).genus_bound(), 4);
        assert_eq!(arr(&[3, 2, 1]).genus_bound(), 3);
        assert_eq!(arr(&[4, 1]).genus_bound(), 3);
        assert_eq!(
            arr(&[4, 2]).to_diagram().min_hypersurface_degree().unwrap(),
            2
        );
        assert_eq!(arr(&[]).to_diagram(), Diagram::all_bullets());
    }

    #[test]
    fn secant_lengths() {
        assert_eq!(secant_test(&arr(&[6])), Some(6));
        assert_eq!(secant_test(&arr(&[5, 1])), Some(5));
        assert_eq!(secant_test(&arr(&[4, 2])), None);
        assert_eq!(secant_test(&arr(&[4, 1])), Some(4));
        assert_eq!(secant_test(&arr(&[3, 2, 1])), None);
    }

    #[test]
    fn sextic_report() {
        let r = sextic_theorem_report();
        let verdicts: Vec<Verdict> = r.arrangements.iter().map(|a| a.verdict).collect();
        assert_eq!(
            verdicts,
            vec![
                Verdict::SecantContradiction { length: 6 },
                Verdict::SecantContradiction { length: 5 },
                Verdict::GenusBound { max_genus: 4 },
                Verdict::GenusBound { max_genus: 3 },
            ]
        );
        assert_eq!(r.max_genus_on_cubic, 4);
        assert_eq!(r.extremal, vec![arr(&[4, 2])]);
        assert_eq!(r.extremal_min_hypersurface_degree, 2);
        assert_eq!(r.complete_intersection, Some((2, 3)));
        let json = serde_json::to_value(&r.arrangements[0]).unwrap();
        assert_eq!(json["verdict"], "SECANT-CONTRADICTION");
        assert_eq!(json["length"], 6);
        assert_eq!(json["arrangement"], serde_json::json!([6]));
    }
}
