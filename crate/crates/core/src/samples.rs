//! Small named algebras and seeded random generators of valid data, used by
//! tests, benchmarks and the acceptance suite.
//!
//! Random algebras come from a catalog of Leibniz algebras of dimension at
//! most 3. For each entry every Rota-Baxter operator with entries in
//! `{-1, 0, 1}` is enumerated once; a sample is a catalog bracket with one of
//! its operators, carried to a random basis.

use std::sync::OnceLock;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{BilinearMap, LeibnizAlgebra, LinearOperator, RBLeibnizAlgebra};
use crate::cohomology::{d_matrix, Cochain, CochainSpace, ComplexKind};
use crate::extension::{canonical_section, AbelianExtension, Section};
use crate::linalg::rational::int;
use crate::linalg::{inverse, kernel_basis, RatMatrix, RatVector, Rational};
use crate::repr::{dual_representation, self_representation, Representation};

/// `R²` with `[e_2, e_1] = [e_2, e_2] = e_1`.
pub fn plane_leibniz() -> LeibnizAlgebra {
    LeibnizAlgebra::new(BilinearMap::from_i64(2, &[(1, 0, 0, 1), (1, 1, 0, 1)])).expect("plane bracket is Leibniz")
}

/// The plane algebra with `T e_2 = b e_1`, `T e_1 = 0`.
pub fn plane_rb(b: Rational) -> RBLeibnizAlgebra {
    let mut m = RatMatrix::zeros(2, 2);
    m[(0, 1)] = b;
    RBLeibnizAlgebra::new(plane_leibniz(), LinearOperator::new(m)).expect("plane operator is Rota-Baxter")
}

/// `R³` with `[e_3, e_2] = e_2`, `[e_3, e_1] = e_1 + e_2`.
pub fn solvable3_leibniz() -> LeibnizAlgebra {
    LeibnizAlgebra::new(BilinearMap::from_i64(3, &[(2, 1, 1, 1), (2, 0, 0, 1), (2, 0, 1, 1)]))
        .expect("solvable bracket is Leibniz")
}

/// The solvable algebra with `T e_3 = b e_1 + c e_2`, `T e_1 = T e_2 = 0`.
pub fn solvable3_rb(b: Rational, c: Rational) -> RBLeibnizAlgebra {
    let mut m = RatMatrix::zeros(3, 3);
    m[(0, 2)] = b;
    m[(1, 2)] = c;
    RBLeibnizAlgebra::new(solvable3_leibniz(), LinearOperator::new(m)).expect("solvable operator is Rota-Baxter")
}

/// Zero bracket and zero operator.
pub fn abelian_rb(dim: usize) -> RBLeibnizAlgebra {
    RBLeibnizAlgebra::new_unchecked(LeibnizAlgebra::abelian(dim), LinearOperator::zeros(dim, dim))
}

/// Heisenberg Lie algebra `[e_1, e_2] = -[e_2, e_1] = e_3`.
pub fn heisenberg() -> LeibnizAlgebra {
    LeibnizAlgebra::new(BilinearMap::from_i64(3, &[(0, 1, 2, 1), (1, 0, 2, -1)])).expect("Heisenberg is Lie")
}

type Entries = &'static [(usize, usize, usize, i64)];

const CATALOG: &[(usize, Entries)] = &[
    (1, &[]),
    (2, &[]),
    (3, &[]),
    (2, &[(1, 0, 0, 1), (1, 1, 0, 1)]),
    (2, &[(0, 0, 1, 1)]),
    (2, &[(0, 1, 1, 1), (1, 0, 1, -1)]),
    (3, &[(2, 1, 1, 1), (2, 0, 0, 1), (2, 0, 1, 1)]),
    (3, &[(0, 1, 2, 1), (1, 0, 2, -1)]),
    (3, &[(0, 0, 2, 1)]),
    (3, &[(0, 0, 1, 1), (0, 1, 2, 1)]),
    (3, &[(2, 0, 0, 1), (2, 1, 1, 1)]),
];

struct CatalogEntry {
    bracket: BilinearMap,
    operators: Vec<LinearOperator>,
}

/// Integer Rota-Baxter check `[Tx, Ty] = T([Tx, y] + [x, Ty])` on basis pairs.
fn is_rb_i64(n: usize, c: &[i64], t: &[i64]) -> bool {
    // c[(i*n + j)*n + k], t[row*n + col]
    let br = |x: &[i64], y: &[i64]| {
        let mut out = vec![0i64; n];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] == 0 {
                    continue;
                }
                for k in 0..n {
                    out[k] += x[i] * y[j] * c[(i * n + j) * n + k];
                }
            }
        }
        out
    };
    let apply = |v: &[i64]| (0..n).map(|r| (0..n).map(|s| t[r * n + s] * v[s]).sum()).collect::<Vec<i64>>();
    let col = |j: usize| (0..n).map(|r| t[r * n + j]).collect::<Vec<i64>>();
    let unit = |j: usize| (0..n).map(|r| i64::from(r == j)).collect::<Vec<i64>>();
    for i in 0..n {
        for j in 0..n {
            let lhs = br(&col(i), &col(j));
            let inner: Vec<i64> = br(&col(i), &unit(j)).iter().zip(br(&unit(i), &col(j))).map(|(a, b)| a + b).collect();
            if lhs != apply(&inner) {
                return false;
            }
        }
    }
    true
}

fn catalog() -> &'static [CatalogEntry] {
    static CELL: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CELL.get_or_init(|| {
        CATALOG
            .iter()
            .map(|&(n, entries)| {
                let mut c = vec![0i64; n * n * n];
                for &(i, j, k, v) in entries {
                    c[(i * n + j) * n + k] += v;
                }
                let total = 3usize.pow((n * n) as u32);
                let mut operators = Vec::new();
                let mut t = vec![0i64; n * n];
                for code in 0..total {
                    let mut x = code;
                    for slot in t.iter_mut() {
                        *slot = (x % 3) as i64 - 1;
                        x /= 3;
                    }
                    if is_rb_i64(n, &c, &t) {
                        let rows: Vec<Vec<Rational>> =
                            (0..n).map(|r| (0..n).map(|s| int(t[r * n + s])).collect()).collect();
                        operators.push(LinearOperator::new(RatMatrix::from_rows(rows).expect("square")));
                    }
                }
                CatalogEntry { bracket: BilinearMap::from_i64(n, entries), operators }
            })
            .collect()
    })
}

/// Catalog brackets, in order.
pub fn catalog_brackets() -> Vec<BilinearMap> {
    catalog().iter().map(|e| e.bracket.clone()).collect()
}

/// All `{-1, 0, 1}` Rota-Baxter operators of catalog entry `index`.
pub fn catalog_operators(index: usize) -> &'static [LinearOperator] {
    &catalog()[index].operators
}

fn random_unit_triangular<R: Rng>(rng: &mut R, n: usize, lower: bool) -> RatMatrix {
    let mut m = RatMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            if (lower && j < i) || (!lower && j > i) {
                m[(i, j)] = int(rng.gen_range(-1..=1));
            }
        }
    }
    m
}

/// A random invertible integer matrix (unit lower times unit upper
/// triangular) and its inverse.
pub fn random_basis_change<R: Rng>(rng: &mut R, n: usize) -> (LinearOperator, LinearOperator) {
    let l = random_unit_triangular(rng, n, true);
    let u = random_unit_triangular(rng, n, false);
    let p = l.mul(&u).expect("square");
    let p_inv = inverse(&p).expect("unit triangular factors are invertible");
    (LinearOperator::new(p), LinearOperator::new(p_inv))
}

/// A random valid Rota-Baxter Leibniz algebra of dimension at most 3.
pub fn random_rb_algebra<R: Rng>(rng: &mut R) -> RBLeibnizAlgebra {
    let entries = catalog();
    let e = &entries[rng.gen_range(0..entries.len())];
    let t = e.operators.choose(rng).expect("the zero operator is always present").clone();
    let a = RBLeibnizAlgebra::new_unchecked(LeibnizAlgebra::new_unchecked(e.bracket.clone()), t);
    let (p, p_inv) = random_basis_change(rng, a.dim());
    a.transport(&p, &p_inv)
}

/// A random valid algebra whose operator is idempotent, if the catalog
/// offers one for the drawn bracket.
pub fn random_idempotent_rb_algebra<R: Rng>(rng: &mut R) -> Option<RBLeibnizAlgebra> {
    let entries = catalog();
    let e = &entries[rng.gen_range(0..entries.len())];
    let idem: Vec<&LinearOperator> = e.operators.iter().filter(|t| t.is_idempotent() && !t.is_zero()).collect();
    let t = (*idem.choose(rng)?).clone();
    let a = RBLeibnizAlgebra::new_unchecked(LeibnizAlgebra::new_unchecked(e.bracket.clone()), t);
    let (p, p_inv) = random_basis_change(rng, a.dim());
    Some(a.transport(&p, &p_inv))
}

/// A random valid algebra with a nonzero nilpotent operator, if available.
pub fn random_nilpotent_rb_algebra<R: Rng>(rng: &mut R) -> Option<RBLeibnizAlgebra> {
    let entries = catalog();
    let e = &entries[rng.gen_range(0..entries.len())];
    let nil: Vec<&LinearOperator> = e
        .operators
        .iter()
        .filter(|t| !t.is_zero() && t.pow(t.dim_in()).is_zero())
        .collect();
    let t = (*nil.choose(rng)?).clone();
    let a = RBLeibnizAlgebra::new_unchecked(LeibnizAlgebra::new_unchecked(e.bracket.clone()), t);
    let (p, p_inv) = random_basis_change(rng, a.dim());
    Some(a.transport(&p, &p_inv))
}

/// A random operator with entries in `-range..=range`.
pub fn random_operator<R: Rng>(rng: &mut R, rows: usize, cols: usize, range: i64) -> LinearOperator {
    let entries = (0..rows * cols).map(|_| int(rng.gen_range(-range..=range))).collect();
    LinearOperator::new(RatMatrix::from_entries(rows, cols, entries).expect("sizes match"))
}

/// A random square bracket with about `density` nonzero entries in `{-1, 1}`.
pub fn random_bracket<R: Rng>(rng: &mut R, dim: usize, density: f64) -> BilinearMap {
    let mut b = BilinearMap::square(dim);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                if rng.gen_bool(density) {
                    *b.get_mut(i, j, k) = int(if rng.gen_bool(0.5) { 1 } else { -1 });
                }
            }
        }
    }
    b
}

/// A random valid representation of `a`, of dimension at most `max_dim_v`
/// when possible: the self-representation, zero actions with a random
/// operator, their duals and direct sums, in a random basis.
pub fn random_representation<R: Rng>(rng: &mut R, a: &RBLeibnizAlgebra, max_dim_v: usize) -> Representation {
    let dg = a.dim();
    let pick = |rng: &mut R, small: bool| -> Representation {
        let cap = if small { 1 } else { max_dim_v.max(1) };
        let choice = if dg <= cap { rng.gen_range(0..4) } else { rng.gen_range(2..4) };
        match choice {
            0 => self_representation(a),
            1 => dual_representation(a, &self_representation(a)).expect("self-representation is valid"),
            _ => {
                let dv = rng.gen_range(1..=cap);
                Representation::trivial(dg, random_operator(rng, dv, dv, 1))
            }
        }
    };
    let mut r = pick(rng, false);
    if r.dim_v() < max_dim_v && rng.gen_bool(0.3) {
        let extra = pick(rng, true);
        if r.dim_v() + extra.dim_v() <= max_dim_v {
            r = r.direct_sum(&extra);
        }
    }
    let (q, q_inv) = random_basis_change(rng, r.dim_v());
    r.transport(&q, &q_inv)
}

/// A random 2-cocycle of the combined complex: an integer combination of a
/// kernel basis of `d²`.
pub fn random_cocycle<R: Rng>(rng: &mut R, a: &RBLeibnizAlgebra, r: &Representation) -> Cochain {
    let basis = kernel_basis(&d_matrix(a, r, 2).expect("shapes match"));
    let space = CochainSpace::new(ComplexKind::Rbla, 2, a.dim(), r.dim_v());
    let mut z = RatVector::zeros(space.dim());
    for v in &basis {
        let c = int(rng.gen_range(-2..=2));
        if !c.is_zero() {
            z.add_scaled(&c, v);
        }
    }
    Cochain::new(space, z).expect("kernel vectors have the right length")
}

/// A random valid abelian extension: synthesized from a random cocycle and
/// presented in a random basis of the total algebra.
pub fn random_extension<R: Rng>(rng: &mut R, max_dim_v: usize) -> AbelianExtension {
    let a = random_rb_algebra(rng);
    let r = random_representation(rng, &a, max_dim_v);
    let z = random_cocycle(rng, &a, &r);
    let (psi, chi) = z.split().expect("combined cochain");
    let e = AbelianExtension::from_cocycle(
        &a,
        &r,
        &psi.to_bilinear().expect("2-cochain"),
        &chi.expect("degree 2 has an operator part").to_operator().expect("1-cochain"),
    )
    .expect("shapes match");
    let (xi, xi_inv) = random_basis_change(rng, e.total().dim());
    e.transport(&xi, &xi_inv).expect("shapes match")
}

/// A random section: the canonical one shifted by a random `i ∘ γ`.
pub fn random_section<R: Rng>(rng: &mut R, e: &AbelianExtension) -> Section {
    let base = canonical_section(e).expect("valid extension");
    let gamma = random_operator(rng, e.dim_v(), e.base().dim(), 2);
    base.shifted(e, &gamma).expect("shifts keep p s = 1")
}
