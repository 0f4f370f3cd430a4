//! Random GM data over `F_p`: a quadric `q` on `Λ²W`, a hyperplane form `h`
//! on `Λ²W` and a hyperplane `V ⊂ W`, with `dim W = 5`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::FibrationError;
use crate::algebra::matrix::{kernel_mod_p, rank_mod_p};
use crate::algebra::ring::{add_mod, mul_mod, sub_mod, PrimeField};

/// Dimension of `W`.
pub const DIM_W: usize = 5;
/// Dimension of `Λ²W`.
pub const DIM_L2W: usize = 10;
/// Default cap on genericity retries.
pub const DEFAULT_RETRY_CAP: usize = 100;

/// Plücker index pairs `(a, b)` with `a < b`, in lexicographic order.
pub const PLUCKER: [(usize, usize); DIM_L2W] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

/// Plücker coordinates of `v ∧ w` for numeric vectors.
pub fn wedge(v: &[u32], w: &[u32], p: u32) -> [u32; DIM_L2W] {
    let mut out = [0u32; DIM_L2W];
    for (k, &(a, b)) in PLUCKER.iter().enumerate() {
        out[k] = sub_mod(mul_mod(v[a], w[b], p), mul_mod(v[b], w[a], p), p);
    }
    out
}

/// `xᵀ q y` for a symmetric `q` on `Λ²W`.
pub fn bilinear(q: &[Vec<u32>], x: &[u32], y: &[u32], p: u32) -> u32 {
    let mut acc = 0u32;
    for (i, row) in q.iter().enumerate() {
        if x[i] == 0 {
            continue;
        }
        let mut s = 0u32;
        for (j, &c) in row.iter().enumerate() {
            s = add_mod(s, mul_mod(c, y[j], p), p);
        }
        acc = add_mod(acc, mul_mod(x[i], s, p), p);
    }
    acc
}

pub fn dot(h: &[u32], x: &[u32], p: u32) -> u32 {
    h.iter()
        .zip(x)
        .fold(0, |acc, (&a, &b)| add_mod(acc, mul_mod(a, b, p), p))
}

/// The skew-symmetric 5×5 matrix of `h ∈ Λ²W^∨`.
pub fn skew_matrix(h: &[u32], p: u32) -> Vec<Vec<u32>> {
    let mut m = vec![vec![0u32; DIM_W]; DIM_W];
    for (k, &(a, b)) in PLUCKER.iter().enumerate() {
        m[a][b] = h[k];
        m[b][a] = sub_mod(0, h[k], p);
    }
    m
}

/// `Λ²A` acting on Plücker coordinates, for a 5×5 matrix `A`.
pub fn lambda2(a: &[Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    let mut m = vec![vec![0u32; DIM_L2W]; DIM_L2W];
    for (r, &(i, j)) in PLUCKER.iter().enumerate() {
        for (c, &(k, l)) in PLUCKER.iter().enumerate() {
            m[r][c] = sub_mod(
                mul_mod(a[i][k], a[j][l], p),
                mul_mod(a[i][l], a[j][k], p),
                p,
            );
        }
    }
    m
}

/// `Mᵀ q M` for square matrices mod `p`.
pub fn congruence(q: &[Vec<u32>], m: &[Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    let n = q.len();
    let mut qm = vec![vec![0u32; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0;
            for k in 0..n {
                s = add_mod(s, mul_mod(q[i][k], m[k][j], p), p);
            }
            qm[i][j] = s;
        }
    }
    let mut out = vec![vec![0u32; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0;
            for k in 0..n {
                s = add_mod(s, mul_mod(m[k][i], qm[k][j], p), p);
            }
            out[i][j] = s;
        }
    }
    out
}

/// One rejected draw during sampling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Retry {
    pub attempt: usize,
    pub reason: String,
}

/// Data of one fibration experiment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationInstance {
    pub p: u32,
    pub seed: u64,
    /// Symmetric 10×10 matrix of the quadric on `Λ²W`.
    pub q: Vec<Vec<u32>>,
    /// The hyperplane form on `Λ²W`.
    pub h: Vec<u32>,
    /// Rows span `V ⊂ W`.
    pub v: Vec<Vec<u32>>,
    /// Kernel of the skew form `h`, the vanishing point of its section.
    pub vertex: Vec<u32>,
    pub retries: Vec<Retry>,
}

impl FibrationInstance {
    /// Validates raw data. `vertex` is computed.
    pub fn from_parts(
        p: u32,
        seed: u64,
        q: Vec<Vec<u32>>,
        h: Vec<u32>,
        v: Vec<Vec<u32>>,
    ) -> Result<Self, FibrationError> {
        PrimeField::new(p)?;
        let invalid = |r: &str| Err(FibrationError::InvalidInstance(r.to_string()));
        if q.len() != DIM_L2W || q.iter().any(|r| r.len() != DIM_L2W) || h.len() != DIM_L2W {
            return invalid("wrong dimensions");
        }
        if v.len() != 4 || v.iter().any(|r| r.len() != DIM_W) {
            return invalid("wrong dimensions");
        }
        let all_reduced = q
            .iter()
            .flatten()
            .chain(&h)
            .chain(v.iter().flatten())
            .all(|&x| x < p);
        if !all_reduced {
            return invalid("entries not reduced mod p");
        }
        if (0..DIM_L2W).any(|i| (0..i).any(|j| q[i][j] != q[j][i])) {
            return invalid("q is not symmetric");
        }
        if rank_mod_p(&mut v.clone(), p) < 4 {
            return invalid("rank(V) < 4");
        }
        if h.iter().all(|&x| x == 0) {
            return invalid("h = 0");
        }
        let skew = skew_matrix(&h, p);
        let ker = kernel_mod_p(&skew, p);
        if ker.len() != 1 {
            return invalid("h has rank < 4");
        }
        let vertex = ker.into_iter().next().expect("one kernel vector");
        let mut with_vertex = v.clone();
        with_vertex.push(vertex.clone());
        if rank_mod_p(&mut with_vertex, p) < DIM_W {
            return invalid("vertex lies on P(V)");
        }
        Ok(FibrationInstance {
            p,
            seed,
            q,
            h,
            v,
            vertex,
            retries: Vec::new(),
        })
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("validated")
    }

    /// The point `Σ y_i V_i` of `W`.
    pub fn point_of_v(&self, y: &[u32]) -> Vec<u32> {
        let p = self.p;
        (0..DIM_W)
            .map(|c| (0..4).fold(0, |acc, i| add_mod(acc, mul_mod(y[i], self.v[i][c], p), p)))
            .collect()
    }

    /// First standard basis vector of `W` completing `V` to a basis.
    pub fn complement_vector(&self) -> usize {
        (0..DIM_W)
            .find(|&m| {
                let mut rows = self.v.clone();
                let mut e = vec![0u32; DIM_W];
                e[m] = 1;
                rows.push(e);
                rank_mod_p(&mut rows, self.p) == DIM_W
            })
            .expect("V has rank 4")
    }

    /// The same data after the coordinate change `A` of `W` (acting on
    /// `Λ²W` by `Λ²A`); `V` and `h` are carried along.
    pub fn transformed(&self, a: &[Vec<u32>]) -> Result<Self, FibrationError> {
        let p = self.p;
        let l2 = lambda2(a, p);
        let q = congruence(&self.q, &l2, p);
        // h' = (Λ²A)ᵀ h, and V' = A⁻¹ V as column vectors
        let h: Vec<u32> = (0..DIM_L2W)
            .map(|j| {
                (0..DIM_L2W).fold(0, |acc, i| add_mod(acc, mul_mod(l2[i][j], self.h[i], p), p))
            })
            .collect();
        let ainv = invert(a, p)
            .ok_or_else(|| FibrationError::InvalidInstance("singular coordinate change".into()))?;
        let v: Vec<Vec<u32>> = self
            .v
            .iter()
            .map(|row| {
                (0..DIM_W)
                    .map(|j| {
                        (0..DIM_W).fold(0, |acc, k| add_mod(acc, mul_mod(ainv[j][k], row[k], p), p))
                    })
                    .collect()
            })
            .collect();
        let mut out = Self::from_parts(p, self.seed, q, h, v)?;
        out.retries = self.retries.clone();
        Ok(out)
    }
}

/// Inverse of a square matrix mod `p`.
pub fn invert(a: &[Vec<u32>], p: u32) -> Option<Vec<Vec<u32>>> {
    let n = a.len();
    let mut m: Vec<Vec<u32>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| u32::from(i == j)));
            row
        })
        .collect();
    if rank_mod_p(&mut m, p) < n {
        return None;
    }
    // rank_mod_p leaves the reduced row echelon form
    if (0..n).any(|i| m[i][i] != 1) {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Uniform random matrix mod `p`.
pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, p: u32) -> Vec<Vec<u32>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(0..p)).collect())
        .collect()
}

/// Samples an instance deterministically from `(p, seed)`, redrawing until
/// the genericity conditions hold.
pub fn sample_instance(p: u32, seed: u64) -> Result<FibrationInstance, FibrationError> {
    sample_instance_with_cap(p, seed, DEFAULT_RETRY_CAP)
}

pub fn sample_instance_with_cap(
    p: u32,
    seed: u64,
    cap: usize,
) -> Result<FibrationInstance, FibrationError> {
    PrimeField::new(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut retries = Vec::new();
    for attempt in 0..=cap {
        let mut q = random_matrix(&mut rng, DIM_L2W, DIM_L2W, p);
        for i in 0..DIM_L2W {
            for j in 0..i {
                q[i][j] = q[j][i];
            }
        }
        let h: Vec<u32> = (0..DIM_L2W).map(|_| rng.gen_range(0..p)).collect();
        let v = random_matrix(&mut rng, 4, DIM_W, p);
        match FibrationInstance::from_parts(p, seed, q, h, v) {
            Ok(mut inst) => {
                inst.retries = retries;
                return Ok(inst);
            }
            Err(FibrationError::InvalidInstance(reason)) => retries.push(Retry { attempt, reason }),
            Err(e) => return Err(e),
        }
    }
    Err(FibrationError::RetryCapExceeded { cap })
}
