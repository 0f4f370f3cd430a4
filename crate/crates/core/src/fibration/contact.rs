//! Local determinant identities for the contact of the quartic `K` with the
//! discriminant: `M = diag(1, 1, δ)` and `N` in one of three normal forms.

use serde::Serialize;

use super::FibrationError;
use crate::algebra::matrix::PolyMatrix;
use crate::algebra::poly::MultiPoly;
use crate::algebra::ring::{RationalField, Ring};

type Poly = MultiPoly<RationalField>;

/// Variables of the local ring.
pub const NAMES: [&str; 5] = ["f", "g", "d", "s", "t"];
const F: usize = 0;
const G: usize = 1;
const D: usize = 2;
const S: usize = 3;
const T: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub computed: String,
    pub expected: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContactReport {
    pub checks: Vec<IdentityCheck>,
}

impl ContactReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn var(i: usize) -> Poly {
    Poly::var(RationalField, NAMES.len(), i)
}

fn int(n: i64) -> Poly {
    Poly::constant(RationalField, NAMES.len(), RationalField.from_i64(n))
}

fn show(f: &Poly) -> String {
    f.fmt_with(&NAMES)
}

fn matrix(rows: Vec<Vec<Poly>>) -> PolyMatrix<RationalField> {
    PolyMatrix::from_rows(rows).expect("rectangular")
}

/// The three normal forms of `N`.
pub fn normal_forms() -> [PolyMatrix<RationalField>; 3] {
    let (f, g) = (var(F), var(G));
    [
        matrix(vec![
            vec![int(1), int(0), f.clone()],
            vec![int(0), int(1), g.clone()],
        ]),
        matrix(vec![
            vec![int(1), f.clone(), int(0)],
            vec![int(0), g.clone(), int(1)],
        ]),
        matrix(vec![vec![f, int(1), int(0)], vec![g, int(0), int(1)]]),
    ]
}

/// `det(N M Nᵗ)` with `M = diag(1, 1, δ)`.
pub fn contact_determinant(
    n: &PolyMatrix<RationalField>,
    delta: &Poly,
) -> Result<Poly, FibrationError> {
    let m = matrix(vec![
        vec![int(1), int(0), int(0)],
        vec![int(0), int(1), int(0)],
        vec![int(0), int(0), delta.clone()],
    ]);
    Ok(n.mul(&m)?.mul(&n.transpose())?.determinant()?)
}

fn check(name: &str, computed: &Poly, expected: &Poly) -> IdentityCheck {
    IdentityCheck {
        name: name.to_string(),
        computed: show(computed),
        expected: show(expected),
        holds: computed == expected,
    }
}

/// Sets `var = 0`.
fn at_zero(f: &Poly, v: usize) -> Poly {
    let images: Vec<Poly> = (0..NAMES.len())
        .map(|i| if i == v { int(0) } else { var(i) })
        .collect();
    f.substitute(&images).expect("matching arity")
}

/// Checks all identities; fails on the first one that does not hold, with
/// the symbolic difference.
pub fn contact_identities() -> Result<ContactReport, FibrationError> {
    let (f, g, d, s, t) = (var(F), var(G), var(D), var(S), var(T));
    let one = int(1);
    let ff = &f * &f;
    let gg = &g * &g;
    let [n1, n2, n3] = normal_forms();
    let det1 = contact_determinant(&n1, &d)?;
    let det2 = contact_determinant(&n2, &d)?;
    let det3 = contact_determinant(&n3, &d)?;

    let mut checks = vec![
        check("case 1: det(NMN^t)", &det1, &(&one + &(&d * &(&ff + &gg)))),
        check("case 1: det(NMN^t) mod d", &at_zero(&det1, D), &one),
        check("case 2: det(NMN^t)", &det2, &(&(&(&one + &ff) * &d) + &gg)),
        check("case 3: det(NMN^t)", &det3, &(&(&(&ff + &one) * &d) + &gg)),
    ];
    // with d = s t the quartic restricted to either branch is a square
    let st = &s * &t;
    let det3_st = contact_determinant(&n3, &st)?;
    checks.push(check(
        "case 3, d = st: det mod s",
        &at_zero(&det3_st, S),
        &gg,
    ));
    checks.push(check(
        "case 3, d = st: det mod t",
        &at_zero(&det3_st, T),
        &gg,
    ));

    // degeneracy scheme of N^∨ → E, represented by [[f, g], [1, 0], [0, d]]
    let phi = matrix(vec![
        vec![f.clone(), g.clone()],
        vec![int(1), int(0)],
        vec![int(0), d.clone()],
    ]);
    let minors = phi.minors(2)?;
    let target = [d.clone(), g.clone()];
    let minors_in_target = minors.iter().all(|m| {
        m.divide_by(&target)
            .map(|(_, r)| r.is_zero())
            .unwrap_or(false)
    });
    let nonzero: Vec<Poly> = minors.iter().filter(|m| !m.is_zero()).cloned().collect();
    let target_in_minors = target.iter().all(|x| {
        x.divide_by(&nonzero)
            .map(|(_, r)| r.is_zero())
            .unwrap_or(false)
    });
    checks.push(IdentityCheck {
        name: "degeneracy ideal of [[f,g],[1,0],[0,d]] equals (d, g)".to_string(),
        computed: format!(
            "({})",
            minors.iter().map(show).collect::<Vec<_>>().join(", ")
        ),
        expected: "(d, g)".to_string(),
        holds: minors_in_target && target_in_minors,
    });

    if let Some(bad) = checks.iter().find(|c| !c.holds) {
        return Err(FibrationError::IdentityFailure {
            case: bad.name.clone(),
            difference: format!("{} - ({})", bad.computed, bad.expected),
        });
    }
    Ok(ContactReport { checks })
}
