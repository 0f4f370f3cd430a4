//! Gröbner bases of homogeneous ideals over `F_p` in graded reverse
//! lexicographic order.
//!
//! Pairs are managed as in Buchberger's algorithm with the Gebauer–Möller
//! installation of both criteria and the normal (sugar) selection strategy,
//! which for homogeneous input means lowest degree first. All pairs of the
//! current degree are reduced together in one sparse matrix over `F_p`.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::poly::{Monomial, MultiPoly};
use super::ring::{inv_mod, mul_mod, PrimeField, Ring};
use super::AlgebraError;

/// Largest number of variables the packed monomial encoding supports.
pub const MAX_VARS: usize = 6;
/// Default cap on the number of processed pairs.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;
/// Environment variable that overrides [`DEFAULT_PAIR_BUDGET`].
pub const BUDGET_ENV: &str = "GMDEG_GROEBNER_BUDGET";

const FIELD_BITS: u32 = 8;
const EXP_MAX: u32 = 0x7f;
const MASK: u64 = 0x7f7f_7f7f_7f7f;
const GUARD: u64 = 0x8080_8080_8080;
const LOW: u64 = (1 << 48) - 1;

/// Monomial packed as an order key: total degree in the top 16 bits, then
/// `0x7f - e_i` in byte `i`, so that comparing keys as integers is grevlex.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct PMono(u64);

impl PMono {
    fn from_exps(e: &[u32]) -> Result<Self, AlgebraError> {
        let mut packed = 0u64;
        let mut deg = 0u64;
        for (i, &x) in e.iter().enumerate() {
            if x > EXP_MAX {
                return Err(AlgebraError::ExponentOverflow);
            }
            packed |= (x as u64) << (FIELD_BITS * i as u32);
            deg += x as u64;
        }
        Ok(PMono((deg << 48) | (MASK - packed)))
    }

    #[inline]
    fn packed(self) -> u64 {
        MASK - (self.0 & LOW)
    }

    #[inline]
    fn degree(self) -> u32 {
        (self.0 >> 48) as u32
    }

    fn exps(self, n: usize) -> Vec<u32> {
        let p = self.packed();
        (0..n)
            .map(|i| ((p >> (FIELD_BITS * i as u32)) & 0xff) as u32)
            .collect()
    }

    #[inline]
    fn mul(self, o: PMono) -> PMono {
        debug_assert!(self.fits_product(o));
        PMono(self.0 + o.0 - MASK)
    }

    fn fits_product(self, o: PMono) -> bool {
        let (a, b) = (self.packed(), o.packed());
        (0..MAX_VARS).all(|i| {
            let s = FIELD_BITS * i as u32;
            ((a >> s) & 0xff) + ((b >> s) & 0xff) <= EXP_MAX as u64
        })
    }

    /// Whether `self` divides `o`.
    #[inline]
    fn divides(self, o: PMono) -> bool {
        ((o.packed() | GUARD) - self.packed()) & GUARD == GUARD
    }

    /// `o / self`, assuming divisibility.
    #[inline]
    fn quotient_of(self, o: PMono) -> PMono {
        let packed = o.packed() - self.packed();
        let deg = (o.degree() - self.degree()) as u64;
        PMono((deg << 48) | (MASK - packed))
    }

    fn lcm(self, o: PMono) -> PMono {
        let (a, b) = (self.packed(), o.packed());
        let mut packed = 0u64;
        let mut deg = 0u64;
        for i in 0..MAX_VARS {
            let s = FIELD_BITS * i as u32;
            let x = ((a >> s) & 0xff).max((b >> s) & 0xff);
            packed |= x << s;
            deg += x;
        }
        PMono((deg << 48) | (MASK - packed))
    }

    #[inline]
    fn coprime(self, o: PMono) -> bool {
        let (a, b) = (self.packed(), o.packed());
        (0..MAX_VARS).all(|i| {
            let s = FIELD_BITS * i as u32;
            (a >> s) & 0xff == 0 || (b >> s) & 0xff == 0
        })
    }
}

/// Polynomial with terms sorted by descending monomial, leading coefficient 1.
#[derive(Clone, Debug)]
struct PPoly {
    terms: Vec<(PMono, u32)>,
}

impl PPoly {
    fn lm(&self) -> PMono {
        self.terms[0].0
    }
}

/// Limits for a Gröbner basis computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of pairs (including input generators) that may be
    /// reduced before giving up.
    pub pair_budget: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            pair_budget: DEFAULT_PAIR_BUDGET,
        }
    }
}

impl GroebnerConfig {
    /// Default configuration, with the budget overridden by
    /// `GMDEG_GROEBNER_BUDGET` when that variable holds a positive integer.
    pub fn from_env() -> Self {
        let mut cfg = Self::default();
        if let Some(b) = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&b| b > 0)
        {
            cfg.pair_budget = b;
        }
        cfg
    }
}

/// Statistics of a finished computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GroebnerStats {
    pub pairs_reduced: usize,
    pub max_degree: u32,
}

/// Generators of a homogeneous ideal in `F_p[x_0..x_{n-1}]`, optionally
/// certified as a reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealBasis {
    field: PrimeField,
    nvars: usize,
    generators: Vec<MultiPoly<PrimeField>>,
    groebner: bool,
}

impl IdealBasis {
    pub fn new(
        field: PrimeField,
        nvars: usize,
        generators: Vec<MultiPoly<PrimeField>>,
    ) -> Result<Self, AlgebraError> {
        for g in &generators {
            if *g.ring() != field || g.nvars() != nvars {
                return Err(AlgebraError::IncompatibleRings);
            }
            if !g.is_homogeneous() {
                return Err(AlgebraError::NotHomogeneous);
            }
        }
        Ok(IdealBasis {
            field,
            nvars,
            generators,
            groebner: false,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[MultiPoly<PrimeField>] {
        &self.generators
    }

    /// True when produced by [`groebner`] (reduced basis).
    pub fn is_groebner(&self) -> bool {
        self.groebner
    }

    /// Leading monomials of the generators.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    /// Remainder of `f` on division by the generators. For a Gröbner basis
    /// this is the normal form, zero exactly for ideal members.
    pub fn reduce(&self, f: &MultiPoly<PrimeField>) -> Result<MultiPoly<PrimeField>, AlgebraError> {
        let nonzero: Vec<MultiPoly<PrimeField>> = self
            .generators
            .iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect();
        Ok(f.divide_by(&nonzero)?.1)
    }

    /// Ideal membership; requires a Gröbner basis.
    pub fn contains(&self, f: &MultiPoly<PrimeField>) -> Result<bool, AlgebraError> {
        if !self.groebner {
            return Err(AlgebraError::NotGroebner);
        }
        Ok(self.reduce(f)?.is_zero())
    }

    /// Checks Buchberger's criterion directly: every S-polynomial reduces to
    /// zero.
    pub fn satisfies_buchberger_criterion(&self) -> Result<bool, AlgebraError> {
        let gens: Vec<&MultiPoly<PrimeField>> =
            self.generators.iter().filter(|g| !g.is_zero()).collect();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let s = s_polynomial(gens[i], gens[j]);
                if !self.reduce(&s)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The S-polynomial of two nonzero polynomials.
pub fn s_polynomial<R: Ring>(f: &MultiPoly<R>, g: &MultiPoly<R>) -> MultiPoly<R> {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(mg);
    let ring = f.ring();
    let a = f.mul_term(&mf.quotient_of(&l), &ring.inv(cf).expect("field"));
    let b = g.mul_term(&mg.quotient_of(&l), &ring.inv(cg).expect("field"));
    &a - &b
}

#[derive(Clone, Copy, Debug)]
enum PairKind {
    Input(usize),
    Spair(usize, usize),
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    kind: PairKind,
    lcm: PMono,
}

struct Engine {
    p: u32,
    polys: Vec<PPoly>,
    /// Indices into `polys` forming the current basis.
    basis: Vec<usize>,
    /// `polys[..num_inputs]` are the input generators, never used as pivots.
    num_inputs: usize,
    pairs: Vec<Pair>,
    stats: GroebnerStats,
}

/// Computes the reduced Gröbner basis of `ideal` in grevlex.
///
/// Fails with [`AlgebraError::GroebnerBudgetExhausted`] (carrying the
/// partial basis) once more than `config.pair_budget` pairs have been
/// reduced.
pub fn groebner(ideal: &IdealBasis, config: &GroebnerConfig) -> Result<IdealBasis, AlgebraError> {
    groebner_with_stats(ideal, config).map(|(g, _)| g)
}

pub fn groebner_with_stats(
    ideal: &IdealBasis,
    config: &GroebnerConfig,
) -> Result<(IdealBasis, GroebnerStats), AlgebraError> {
    let n = ideal.nvars;
    if n > MAX_VARS {
        return Err(AlgebraError::TooManyVariables(n));
    }
    let p = ideal.field.modulus();
    let mut engine = Engine {
        p,
        polys: Vec::new(),
        basis: Vec::new(),
        num_inputs: 0,
        pairs: Vec::new(),
        stats: GroebnerStats::default(),
    };
    for g in &ideal.generators {
        if let Some(pp) = to_packed(g, p)? {
            let lm = pp.lm();
            engine.polys.push(pp);
            engine.pairs.push(Pair {
                kind: PairKind::Input(engine.polys.len() - 1),
                lcm: lm,
            });
        }
    }
    engine.num_inputs = engine.polys.len();
    let mut inputs_left: HashSet<usize> = (0..engine.polys.len()).collect();
    while !engine.pairs.is_empty() {
        let d = engine
            .pairs
            .iter()
            .map(|pr| pr.lcm.degree())
            .min()
            .expect("nonempty");
        let (now, later): (Vec<Pair>, Vec<Pair>) =
            engine.pairs.iter().partition(|pr| pr.lcm.degree() == d);
        engine.pairs = later;
        if engine.stats.pairs_reduced + now.len() > config.pair_budget {
            let partial = engine.export(ideal, false, n);
            return Err(AlgebraError::GroebnerBudgetExhausted {
                pairs: engine.stats.pairs_reduced,
                partial: Box::new(partial),
            });
        }
        engine.stats.pairs_reduced += now.len();
        engine.stats.max_degree = engine.stats.max_degree.max(d);
        for pr in &now {
            if let PairKind::Input(k) = pr.kind {
                inputs_left.remove(&k);
            }
        }
        let new_polys = engine.reduce_degree(&now);
        for np in new_polys {
            engine.polys.push(np);
            let h = engine.polys.len() - 1;
            engine.update(h);
        }
    }
    debug_assert!(inputs_left.is_empty());
    let reduced = engine.interreduce();
    engine.polys = reduced;
    engine.basis = (0..engine.polys.len()).collect();
    let out = engine.export(ideal, true, n);
    Ok((out, engine.stats))
}

fn to_packed(f: &MultiPoly<PrimeField>, p: u32) -> Result<Option<PPoly>, AlgebraError> {
    if f.is_zero() {
        return Ok(None);
    }
    let mut terms: Vec<(PMono, u32)> = f
        .terms()
        .map(|(m, c)| Ok((PMono::from_exps(m.exps())?, c.value())))
        .collect::<Result<_, AlgebraError>>()?;
    terms.sort_by_key(|t| std::cmp::Reverse(t.0));
    let inv = inv_mod(terms[0].1, p);
    for t in terms.iter_mut() {
        t.1 = mul_mod(t.1, inv, p);
    }
    Ok(Some(PPoly { terms }))
}

fn from_packed(f: &PPoly, field: PrimeField, n: usize) -> MultiPoly<PrimeField> {
    MultiPoly::from_terms(
        field,
        n,
        f.terms
            .iter()
            .map(|(m, c)| (m.exps(n), field.elem(*c as i64))),
    )
}

impl Engine {
    fn export(&self, ideal: &IdealBasis, groebner: bool, n: usize) -> IdealBasis {
        let mut gens: Vec<&PPoly> = self.basis.iter().map(|&i| &self.polys[i]).collect();
        gens.sort_by_key(|g| g.lm());
        IdealBasis {
            field: ideal.field,
            nvars: n,
            generators: gens
                .into_iter()
                .map(|g| from_packed(g, ideal.field, n))
                .collect(),
            groebner,
        }
    }

    /// Gebauer–Möller update with the new basis element `h`.
    fn update(&mut self, h: usize) {
        let lh = self.polys[h].lm();
        let cands: Vec<(usize, PMono)> = self
            .basis
            .iter()
            .map(|&g| (g, self.polys[g].lm().lcm(lh)))
            .collect();
        // chain criterion among the new pairs
        let mut keep: Vec<(usize, PMono, bool)> = Vec::new();
        for (idx, &(g, l)) in cands.iter().enumerate() {
            let lg = self.polys[g].lm();
            let coprime = lg.coprime(lh);
            if coprime {
                keep.push((g, l, true));
                continue;
            }
            let dominated_later = cands[idx + 1..].iter().any(|&(_, l2)| l2.divides(l));
            let dominated_kept = keep.iter().any(|&(_, l2, _)| l2.divides(l));
            if !dominated_later && !dominated_kept {
                keep.push((g, l, false));
            }
        }
        // equal lcms: keep one representative, prefer coprime (then drop all)
        let mut by_lcm: HashMap<PMono, (usize, bool)> = HashMap::new();
        for &(g, l, c) in &keep {
            by_lcm
                .entry(l)
                .and_modify(|e| {
                    if c {
                        *e = (g, true);
                    }
                })
                .or_insert((g, c));
        }
        // old pairs eliminated by h
        let polys = &self.polys;
        self.pairs.retain(|pr| match pr.kind {
            PairKind::Input(_) => true,
            PairKind::Spair(a, b) => {
                let l = pr.lcm;
                !(lh.divides(l) && polys[a].lm().lcm(lh) != l && polys[b].lm().lcm(lh) != l)
            }
        });
        let mut fresh: Vec<(usize, PMono)> = by_lcm
            .into_iter()
            .filter(|(_, (_, coprime))| !coprime)
            .map(|(l, (g, _))| (g, l))
            .collect();
        fresh.sort();
        for (g, l) in fresh {
            self.pairs.push(Pair {
                kind: PairKind::Spair(g, h),
                lcm: l,
            });
        }
        // drop basis elements whose leading monomial is a multiple of lm(h)
        let polys = &self.polys;
        self.basis.retain(|&g| !lh.divides(polys[g].lm()));
        self.basis.push(h);
    }

    fn find_reducer(&self, m: PMono) -> Option<usize> {
        self.basis
            .iter()
            .copied()
            .filter(|&g| self.polys[g].lm().divides(m))
            .min_by_key(|&g| (self.polys[g].terms.len(), g))
    }

    /// Reduces all pairs of one degree together and returns the new basis
    /// elements (monic, with leading monomials outside the current leading
    /// ideal).
    fn reduce_degree(&self, pairs: &[Pair]) -> Vec<PPoly> {
        let p = self.p;
        // rows are (multiplier, poly index)
        let mut rows: Vec<(PMono, usize)> = Vec::new();
        let mut row_set: HashSet<(PMono, usize)> = HashSet::new();
        let mut pivot_mons: HashSet<PMono> = HashSet::new();
        let one = PMono::from_exps(&[]).expect("constant");
        let mut push_row = |r: (PMono, usize), rows: &mut Vec<(PMono, usize)>| {
            if row_set.insert(r) {
                rows.push(r);
            }
        };
        for pr in pairs {
            match pr.kind {
                PairKind::Input(k) => push_row((one, k), &mut rows),
                PairKind::Spair(a, b) => {
                    for g in [a, b] {
                        let q = self.polys[g].lm().quotient_of(pr.lcm);
                        push_row((q, g), &mut rows);
                    }
                }
            }
            pivot_mons.insert(pr.lcm);
        }
        let mut seen: HashSet<PMono> = HashSet::new();
        let mut todo: Vec<PMono> = Vec::new();
        for &(q, g) in &rows {
            for &(m, _) in &self.polys[g].terms {
                let mm = q.mul(m);
                if seen.insert(mm) {
                    todo.push(mm);
                }
            }
        }
        while let Some(m) = todo.pop() {
            if pivot_mons.contains(&m) {
                continue;
            }
            if let Some(g) = self.find_reducer(m) {
                pivot_mons.insert(m);
                let q = self.polys[g].lm().quotient_of(m);
                push_row((q, g), &mut rows);
                for &(t, _) in &self.polys[g].terms[1..] {
                    let mm = q.mul(t);
                    if seen.insert(mm) {
                        todo.push(mm);
                    }
                }
            }
        }
        let mut cols: Vec<PMono> = seen.into_iter().collect();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        let col_of: HashMap<PMono, u32> = cols
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i as u32))
            .collect();
        let ncols = cols.len();

        let sparse_rows: Vec<Vec<(u32, u32)>> = rows
            .iter()
            .map(|&(q, g)| {
                self.polys[g]
                    .terms
                    .iter()
                    .map(|&(m, c)| (col_of[&q.mul(m)], c))
                    .collect()
            })
            .collect();

        let mut pivot: Vec<Option<usize>> = vec![None; ncols];
        let mut to_reduce: Vec<usize> = Vec::new();
        for (r, row) in sparse_rows.iter().enumerate() {
            let lead = row[0].0 as usize;
            if pivot[lead].is_none() && rows[r].1 >= self.num_inputs {
                pivot[lead] = Some(r);
            } else {
                to_reduce.push(r);
            }
        }

        let big = u64::MAX - (p as u64) * (p as u64);
        let mut acc = vec![0u64; ncols];
        let mut reduced: Vec<Vec<(u32, u32)>> = Vec::new();
        for &r in &to_reduce {
            let row = &sparse_rows[r];
            for &(c, v) in row {
                acc[c as usize] = v as u64;
            }
            let start = row[0].0 as usize;
            let mut out = Vec::new();
            for c in start..ncols {
                let v = (acc[c] % p as u64) as u32;
                acc[c] = 0;
                if v == 0 {
                    continue;
                }
                match pivot[c] {
                    Some(pr) => {
                        let f = (p - v) as u64;
                        for &(cc, cv) in &sparse_rows[pr][1..] {
                            let slot = &mut acc[cc as usize];
                            *slot += f * cv as u64;
                            if *slot >= big {
                                *slot %= p as u64;
                            }
                        }
                    }
                    None => out.push((c as u32, v)),
                }
            }
            if !out.is_empty() {
                reduced.push(out);
            }
        }

        // echelon form of the reduced rows; all entries sit in non-pivot columns
        reduced.sort_by_key(|r| r[0].0);
        let mut new_pivot: BTreeMap<u32, Vec<(u32, u32)>> = BTreeMap::new();
        for row in reduced {
            for &(c, v) in &row {
                acc[c as usize] = v as u64;
            }
            let start = row[0].0 as usize;
            let mut out: Vec<(u32, u32)> = Vec::new();
            for c in start..ncols {
                let v = (acc[c] % p as u64) as u32;
                acc[c] = 0;
                if v == 0 {
                    continue;
                }
                if !out.is_empty() {
                    out.push((c as u32, v));
                    continue;
                }
                match new_pivot.get(&(c as u32)) {
                    Some(pr) => {
                        let f = (p - v) as u64;
                        for &(cc, cv) in &pr[1..] {
                            let slot = &mut acc[cc as usize];
                            *slot += f * cv as u64;
                            if *slot >= big {
                                *slot %= p as u64;
                            }
                        }
                    }
                    None => out.push((c as u32, v)),
                }
            }
            if out.is_empty() {
                continue;
            }
            let inv = inv_mod(out[0].1, p);
            for t in out.iter_mut() {
                t.1 = mul_mod(t.1, inv, p);
            }
            new_pivot.insert(out[0].0, out);
        }
        new_pivot
            .into_values()
            .map(|row| PPoly {
                terms: row
                    .into_iter()
                    .map(|(c, v)| (cols[c as usize], v))
                    .collect(),
            })
            .collect()
    }

    /// Minimal reduced basis from the current basis.
    fn interreduce(&self) -> Vec<PPoly> {
        let mut gens: Vec<&PPoly> = self.basis.iter().map(|&i| &self.polys[i]).collect();
        gens.sort_by_key(|g| g.lm());
        let mut minimal: Vec<&PPoly> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|h| h.lm().divides(g.lm())) {
                minimal.push(g);
            }
        }
        let lms: Vec<PMono> = minimal.iter().map(|g| g.lm()).collect();
        minimal
            .iter()
            .map(|g| {
                let mut work: BTreeMap<PMono, u32> = g.terms[1..].iter().copied().collect();
                let mut out = vec![g.terms[0]];
                while let Some((m, c)) = work.pop_last() {
                    match minimal.iter().zip(&lms).find(|(_, l)| l.divides(m)) {
                        Some((h, l)) => {
                            let q = l.quotient_of(m);
                            let f = self.p - c;
                            for &(t, tc) in &h.terms[1..] {
                                let mm = q.mul(t);
                                let add = mul_mod(f, tc, self.p);
                                let e = work.entry(mm).or_insert(0);
                                *e = (*e + add) % self.p;
                                if *e == 0 {
                                    work.remove(&mm);
                                }
                            }
                        }
                        None => out.push((m, c)),
                    }
                }
                PPoly { terms: out }
            })
            .collect()
    }
}

/// Saturation `I : x_{n-1}^∞` from a grevlex Gröbner basis, by stripping
/// the last variable from every element and recomputing a reduced basis.
/// Returns the saturated basis and whether any element changed.
pub fn saturate_last_variable(
    gb: &IdealBasis,
    config: &GroebnerConfig,
) -> Result<(IdealBasis, bool), AlgebraError> {
    if !gb.groebner {
        return Err(AlgebraError::NotGroebner);
    }
    let n = gb.nvars;
    let last = n - 1;
    let mut changed = false;
    let mut gens = Vec::with_capacity(gb.generators.len());
    for g in &gb.generators {
        let k = g.terms().map(|(m, _)| m.exps()[last]).min().unwrap_or(0);
        if k > 0 {
            changed = true;
            let mut e = vec![0; n];
            e[last] = k;
            let div = MultiPoly::term(gb.field, Monomial::new(e), gb.field.one());
            gens.push(g.div_exact(&div)?);
        } else {
            gens.push(g.clone());
        }
    }
    if !changed {
        return Ok((gb.clone(), false));
    }
    let ideal = IdealBasis::new(gb.field, n, gens)?;
    Ok((groebner(&ideal, config)?, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn var(field: PrimeField, n: usize, i: usize) -> MultiPoly<PrimeField> {
        MultiPoly::var(field, n, i)
    }

    #[test]
    fn packed_monomials_follow_grevlex() {
        let cases = [
            (vec![0, 0, 2], vec![1, 0, 0]),
            (vec![0, 2, 0], vec![1, 0, 1]),
            (vec![2, 0, 0], vec![0, 2, 0]),
            (vec![1, 1, 0], vec![1, 0, 1]),
        ];
        for (a, b) in cases {
            let pa = PMono::from_exps(&a).unwrap();
            let pb = PMono::from_exps(&b).unwrap();
            assert_eq!(
                pa.cmp(&pb),
                Monomial::new(a.clone()).cmp(&Monomial::new(b.clone())),
                "{a:?} vs {b:?}"
            );
        }
        let a = PMono::from_exps(&[1, 2, 0]).unwrap();
        let b = PMono::from_exps(&[3, 2, 1]).unwrap();
        assert!(a.divides(b));
        assert!(!b.divides(a));
        assert_eq!(a.quotient_of(b).exps(3), vec![2, 0, 1]);
        assert_eq!(a.mul(a).exps(3), vec![2, 4, 0]);
        assert_eq!(
            a.lcm(PMono::from_exps(&[0, 3, 1]).unwrap()).exps(3),
            vec![1, 3, 1]
        );
        assert!(PMono::from_exps(&[128]).is_err());
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let k = f(32003);
        let (x, y) = (var(k, 2, 0), var(k, 2, 1));
        let ideal = IdealBasis::new(k, 2, vec![&x * &x, &x * &y]).unwrap();
        let gb = groebner(&ideal, &GroebnerConfig::default()).unwrap();
        assert!(gb.is_groebner());
        assert_eq!(gb.generators().len(), 2);
        assert!(gb.generators().contains(&(&x * &x)));
        assert!(gb.generators().contains(&(&x * &y)));
    }

    #[test]
    fn variables_generate_themselves() {
        let k = f(32003);
        let (x, y) = (var(k, 3, 0), var(k, 3, 1));
        let ideal = IdealBasis::new(k, 3, vec![x.clone(), y.clone(), &x + &y]).unwrap();
        let gb = groebner(&ideal, &GroebnerConfig::default()).unwrap();
        assert_eq!(gb.generators().len(), 2);
        assert!(gb.contains(&x).unwrap());
        assert!(gb.contains(&y).unwrap());
        assert!(!gb.contains(&var(k, 3, 2)).unwrap());
    }

    #[test]
    fn non_homogeneous_and_oversized_inputs_are_rejected() {
        let k = f(101);
        let x = var(k, 2, 0);
        let one = MultiPoly::one(k, 2);
        assert_eq!(
            IdealBasis::new(k, 2, vec![&x + &one]),
            Err(AlgebraError::NotHomogeneous)
        );
        let ideal = IdealBasis::new(k, 7, vec![var(k, 7, 0)]).unwrap();
        assert_eq!(
            groebner(&ideal, &GroebnerConfig::default()),
            Err(AlgebraError::TooManyVariables(7))
        );
    }

    #[test]
    fn budget_exhaustion_carries_partial_basis() {
        let k = f(32003);
        let v: Vec<_> = (0..4).map(|i| var(k, 4, i)).collect();
        // three general quadrics: the basis needs S-pairs beyond degree 2
        let gens = vec![
            &(&(&v[0] * &v[0]) + &(&v[1] * &v[2])) + &(&v[3] * &v[3]),
            &(&(&v[1] * &v[1]) + &(&v[0] * &v[3])) - &(&v[2] * &v[3]),
            &(&(&v[2] * &v[2]) + &(&v[0] * &v[1])) + &(&v[1] * &v[3]),
        ];
        let ideal = IdealBasis::new(k, 4, gens).unwrap();
        let err = groebner(&ideal, &GroebnerConfig { pair_budget: 3 }).unwrap_err();
        match &err {
            AlgebraError::GroebnerBudgetExhausted { partial, .. } => {
                assert!(!partial.is_groebner());
                assert!(!partial.generators().is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(err.to_string().starts_with("groebner budget exhausted"));
    }

    #[test]
    fn output_satisfies_buchberger_criterion() {
        let k = f(101);
        let v: Vec<_> = (0..4).map(|i| var(k, 4, i)).collect();
        let gens = vec![
            &(&v[0] * &v[2]) - &(&v[1] * &v[1]),
            &(&v[0] * &v[3]) - &(&v[1] * &v[2]),
            &(&v[1] * &v[3]) - &(&v[2] * &v[2]),
        ];
        let ideal = IdealBasis::new(k, 4, gens.clone()).unwrap();
        let gb = groebner(&ideal, &GroebnerConfig::default()).unwrap();
        assert!(gb.satisfies_buchberger_criterion().unwrap());
        for g in &gens {
            assert!(gb.contains(g).unwrap());
        }
    }

    #[test]
    fn saturation_strips_last_variable() {
        let k = f(101);
        let v: Vec<_> = (0..3).map(|i| var(k, 3, i)).collect();
        // (x0*x2, x1*x2) : x2^inf = (x0, x1)
        let ideal = IdealBasis::new(k, 3, vec![&v[0] * &v[2], &v[1] * &v[2]]).unwrap();
        let gb = groebner(&ideal, &GroebnerConfig::default()).unwrap();
        let (sat, changed) = saturate_last_variable(&gb, &GroebnerConfig::default()).unwrap();
        assert!(changed);
        assert_eq!(sat.generators().len(), 2);
        assert!(sat.contains(&v[0]).unwrap() && sat.contains(&v[1]).unwrap());
    }
}
