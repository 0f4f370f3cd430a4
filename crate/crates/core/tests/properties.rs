use std::collections::BTreeSet;

use gmdeg::algebra::groebner::{groebner, GroebnerConfig, IdealBasis};
use gmdeg::algebra::hilbert::{hilbert_series, DimDegree};
use gmdeg::algebra::matrix::{rank_mod_p, PolyMatrix};
use gmdeg::algebra::poly::MultiPoly;
use gmdeg::algebra::ring::{rat, Fp, PrimeField};
use gmdeg::chow::{char_to_chern, chern_to_char, euler_characteristic, ChernVector, SheafClass};
use gmdeg::gin::{enumerate_arrangements, gin_to_diagram};
use gmdeg::lattice::{solve_sextic_multiplicities, DivisorClass, SexticConstraints, NODES};
use proptest::prelude::*;

const P: u32 = 101;

type Poly = MultiPoly<PrimeField>;

fn field() -> PrimeField {
    PrimeField::new(P).unwrap()
}

fn poly_strategy(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, nvars), 0..P),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        let f = field();
        MultiPoly::from_terms(
            f,
            nvars,
            terms.into_iter().map(|(e, c)| (e, f.elem(c as i64))),
        )
    })
}

fn point_strategy(nvars: usize) -> impl Strategy<Value = Vec<Fp>> {
    prop::collection::vec(0..P, nvars)
        .prop_map(|v| v.into_iter().map(|c| Fp::new(c as i64, P)).collect())
}

/// All exponent vectors of total degree `d` in `n` variables.
fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|a| {
            monomials_of_degree(n - 1, d - a)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, a);
                    rest
                })
        })
        .collect()
}

fn coefficient_row(f: &Poly, basis: &[Vec<u32>]) -> Vec<u32> {
    basis
        .iter()
        .map(|e| {
            f.coeff(&gmdeg::algebra::poly::Monomial::new(e.clone()))
                .value()
        })
        .collect()
}

/// Membership of a homogeneous `f` in the ideal generated by homogeneous
/// `gens`, by linear algebra in the degree of `f`.
fn naive_member(gens: &[Poly], f: &Poly) -> bool {
    let n = f.nvars();
    let Some(d) = f.total_degree() else {
        return true;
    };
    let basis = monomials_of_degree(n, d);
    let mut rows = Vec::new();
    for g in gens {
        let Some(e) = g.total_degree() else { continue };
        if e > d {
            continue;
        }
        for m in monomials_of_degree(n, d - e) {
            let shifted = g.mul_term(&gmdeg::algebra::poly::Monomial::new(m), &field().elem(1));
            rows.push(coefficient_row(&shifted, &basis));
        }
    }
    let before = rank_mod_p(&mut rows.clone(), P);
    rows.push(coefficient_row(f, &basis));
    rank_mod_p(&mut rows, P) == before
}

fn homogeneous_strategy(nvars: usize, deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    let basis = monomials_of_degree(nvars, deg);
    prop::collection::vec((0..basis.len(), 1..P), 1..=max_terms).prop_map(move |terms| {
        let f = field();
        MultiPoly::from_terms(
            f,
            nvars,
            terms
                .into_iter()
                .map(|(i, c)| (basis[i].clone(), f.elem(c as i64))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(
        a in poly_strategy(3, 3, 5),
        b in poly_strategy(3, 3, 5),
        c in poly_strategy(3, 3, 5),
        pt in point_strategy(3),
    ) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        // evaluation is a ring homomorphism
        let ev = |f: &Poly| f.eval(&pt).unwrap().value();
        prop_assert_eq!(ev(&(&a * &b)), ((ev(&a) as u64 * ev(&b) as u64) % P as u64) as u32);
        prop_assert_eq!(ev(&(&a + &b)), (ev(&a) + ev(&b)) % P);
    }

    #[test]
    fn determinant_is_multiplicative(
        a in prop::collection::vec(poly_strategy(2, 1, 2), 9),
        b in prop::collection::vec(poly_strategy(2, 1, 2), 9),
    ) {
        let mat = |v: &[Poly]| PolyMatrix::from_rows(v.chunks(3).map(|r| r.to_vec()).collect()).unwrap();
        let (ma, mb) = (mat(&a), mat(&b));
        let lhs = ma.mul(&mb).unwrap().determinant().unwrap();
        let rhs = &ma.determinant().unwrap() * &mb.determinant().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chern_character_round_trip(
        rank in 0u64..6,
        c in prop::collection::vec((-30i64..30, 1i64..7), 3),
    ) {
        let v = ChernVector::new(rank, rat(c[0].0, c[0].1), rat(c[1].0, c[1].1), rat(c[2].0, c[2].1));
        prop_assert_eq!(char_to_chern(&chern_to_char(&v)).unwrap(), v);
    }

    #[test]
    fn line_bundle_euler_characteristic_is_binomial(m in -40i64..40) {
        let expected = rat((m + 1) * (m + 2) * (m + 3), 6);
        prop_assert_eq!(euler_characteristic(&SheafClass::line_bundle(m)), expected);
    }

    #[test]
    fn groebner_membership_agrees_with_linear_algebra(
        gens in prop::collection::vec(homogeneous_strategy(3, 2, 4), 1..=3),
        mults in prop::collection::vec(homogeneous_strategy(3, 1, 3), 3),
        other in homogeneous_strategy(3, 3, 6),
    ) {
        let ideal = IdealBasis::new(field(), 3, gens.clone()).unwrap();
        let gb = groebner(&ideal, &GroebnerConfig::default()).unwrap();
        prop_assert!(gb.is_groebner());
        let mut combo = Poly::zero(field(), 3);
        for (g, m) in gens.iter().zip(&mults) {
            combo = &combo + &(g * m);
        }
        prop_assert!(gb.contains(&combo).unwrap());
        prop_assert_eq!(gb.contains(&other).unwrap(), naive_member(&gens, &other));
    }

    #[test]
    fn linear_forms_cut_a_linear_space(
        n in 2usize..=5,
        forms in prop::collection::vec(prop::collection::vec(0..P, 5), 1..=5),
    ) {
        let f = field();
        let forms: Vec<Vec<u32>> = forms.into_iter().map(|v| v[..n].to_vec()).collect();
        let r = rank_mod_p(&mut forms.clone(), P);
        prop_assume!(r > 0);
        let gens: Vec<Poly> = forms
            .iter()
            .map(|v| MultiPoly::linear(f, &v.iter().map(|&c| f.elem(c as i64)).collect::<Vec<_>>()))
            .collect();
        let gb = groebner(&IdealBasis::new(f, n, gens).unwrap(), &GroebnerConfig::default()).unwrap();
        let hs = hilbert_series(&gb).unwrap();
        let expected = if r == n { DimDegree::Empty } else { DimDegree::Variety { dim: n - 1 - r, degree: 1 } };
        prop_assert_eq!(hs.dim_degree(), expected);
        prop_assert_eq!(hs.krull_dim, n - r);
    }
}

/// Borel-fixed closure of some monomials in `x0, x1, x2`.
fn borel_closure(seeds: &[[u32; 3]]) -> Vec<[u32; 3]> {
    let mut seen: BTreeSet<[u32; 3]> = seeds.iter().copied().collect();
    let mut stack: Vec<[u32; 3]> = seeds.to_vec();
    while let Some(m) = stack.pop() {
        let mut next = Vec::new();
        if m[1] > 0 {
            next.push([m[0] + 1, m[1] - 1, m[2]]);
        }
        if m[2] > 0 {
            next.push([m[0] + 1, m[1], m[2] - 1]);
            next.push([m[0], m[1] + 1, m[2] - 1]);
        }
        for n in next {
            if seen.insert(n) {
                stack.push(n);
            }
        }
    }
    seen.into_iter().collect()
}

/// Monomials of degree `t` in `x0..x3` outside the ideal.
fn hilbert_function(gens: &[[u32; 3]], t: u32) -> i64 {
    monomials_of_degree(4, t)
        .iter()
        .filter(|e| !gens.iter().any(|g| (0..3).all(|v| g[v] <= e[v])))
        .count() as i64
}

fn borel_fixture() -> impl Strategy<Value = Vec<[u32; 3]>> {
    (
        1u32..=6,
        prop::collection::vec((0u32..=4, 0u32..=4, 0u32..=4), 0..=4),
    )
        .prop_map(|(r, seeds)| {
            let mut seeds: Vec<[u32; 3]> = seeds
                .into_iter()
                .filter(|&(i, j, _)| i + j > 0)
                .map(|(i, j, k)| [i, j, k])
                .collect();
            seeds.push([0, r, 0]);
            borel_closure(&seeds)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn diagram_invariants_match_monomial_counting(gens in borel_fixture()) {
        let d = gin_to_diagram(&gens).unwrap();
        prop_assert!(d.validate().is_ok(), "{}", d.to_text());
        let t = 40;
        let (h0, h1) = (hilbert_function(&gens, t), hilbert_function(&gens, t + 1));
        let degree = h1 - h0;
        let genus = 1 - (h0 - degree * i64::from(t));
        prop_assert_eq!(d.degree().unwrap() as i64, degree);
        prop_assert_eq!(d.genus().unwrap(), genus);
        let lambda = d.lambda_sequence().unwrap();
        prop_assert_eq!(i64::from(lambda.degree()), degree);
    }

    #[test]
    fn genus_is_permutation_invariant_and_satisfies_adjunction(
        d in 1u32..12,
        a in prop::collection::vec(0u32..4, NODES),
        shuffle in Just((0..NODES).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let arr: [u32; NODES] = a.clone().try_into().unwrap();
        let permuted: [u32; NODES] = std::array::from_fn(|i| arr[shuffle[i]]);
        let c = DivisorClass::new(d, arr).unwrap();
        let c2 = DivisorClass::new(d, permuted).unwrap();
        prop_assert_eq!(c.genus(), c2.genus());
        prop_assert_eq!(c.self_intersection(), c2.self_intersection());
        // C² = 2g − 2 on a K3 surface
        prop_assert_eq!(c.self_intersection(), c.genus() * rat(2, 1) - rat(2, 1));
    }

    #[test]
    fn sextic_solver_agrees_with_direct_check(a in prop::collection::vec(0u32..=2, NODES)) {
        let arr: [u32; NODES] = a.try_into().unwrap();
        let class = DivisorClass::new(6, arr).unwrap();
        let g = class.genus();
        let singular = arr.iter().filter(|&&x| x >= 2).count() as i64;
        let admissible = g.is_integer() && g <= rat(15 - singular, 1);
        let mut counts = vec![0u32; 3];
        for &x in &arr {
            counts[x as usize] += 1;
        }
        let solved = solve_sextic_multiplicities(SexticConstraints::default());
        prop_assert_eq!(solved.iter().any(|s| s.counts == counts), admissible);
    }
}

/// Number of subsets of `{1, …, n}` summing to `n`.
fn subsets_summing_to(n: u32) -> usize {
    (0u32..1 << n)
        .filter(|mask| {
            (0..n)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| b + 1)
                .sum::<u32>()
                == n
        })
        .count()
}

#[test]
fn arrangement_counts_are_strict_partition_counts() {
    for n in 1..=20 {
        let list = enumerate_arrangements(n).unwrap();
        assert_eq!(list.len(), subsets_summing_to(n), "degree {n}");
        for a in &list {
            assert_eq!(a.degree(), n);
            let d = a.to_diagram();
            assert!(d.validate().is_ok());
            assert_eq!(d.degree().unwrap(), n as usize);
            assert!(a.parts().windows(2).all(|w| w[0] > w[1]));
        }
    }
}
