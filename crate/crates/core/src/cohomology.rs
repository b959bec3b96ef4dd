//! The Loday-Pirashvili complex `δ`, the Rota-Baxter operator complex `∂`,
//! the comparison maps `φ` and the combined complex `d`, assembled as exact
//! matrices in fixed bases.
//!
//! An `n`-cochain is stored by its values on basis tuples: coordinate
//! `((i_1 * dim_g + i_2) * dim_g + ... + i_n) * dim_v + a` is the `v_a`
//! component of `f(e_{i_1}, ..., e_{i_n})`. Matrices are built column by
//! column from basis cochains; columns are independent and may be evaluated
//! in parallel.
//!
//! In degree zero `C⁰ = V`, `δ⁰(v)(x) = -r(v, x)`, `∂⁰(v)(x) = -r'(v, x)`
//! and `φ⁰` is the identity of `V` (the comparison formula with no
//! arguments), so that `d⁰ = [δ⁰; -1]`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::{induced_bracket_star, BilinearMap, LeibnizAlgebra, LinearOperator, RBLeibnizAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{in_column_space_with, rank_with, RatMatrix, RatVector, Rational};
use crate::par::{map_range, Exec};
use crate::repr::{induced_actions, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexKind {
    /// Loday-Pirashvili complex of the underlying Leibniz algebra.
    La,
    /// Complex of the Rota-Baxter operator (star algebra, induced actions).
    Rbo,
    /// `C^n_LA ⊕ C^{n-1}_RBO` with the combined differential.
    Rbla,
}

impl ComplexKind {
    pub fn name(self) -> &'static str {
        match self {
            ComplexKind::La => "la",
            ComplexKind::Rbo => "rbo",
            ComplexKind::Rbla => "rbla",
        }
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ComplexKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "la" => Ok(ComplexKind::La),
            "rbo" => Ok(ComplexKind::Rbo),
            "rbla" => Ok(ComplexKind::Rbla),
            other => Err(Error::Document(format!("unknown complex {other:?}, expected la, rbo or rbla"))),
        }
    }
}

fn pow(base: usize, n: usize) -> usize {
    base.checked_pow(n as u32).expect("cochain space dimension overflows usize")
}

/// `Hom(g^{⊗n}, V)` for one of the three complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CochainSpace {
    pub kind: ComplexKind,
    pub arity: usize,
    pub dim_g: usize,
    pub dim_v: usize,
}

impl CochainSpace {
    pub fn new(kind: ComplexKind, arity: usize, dim_g: usize, dim_v: usize) -> Self {
        CochainSpace { kind, arity, dim_g, dim_v }
    }

    /// Dimension of the plain multilinear part `dim_v · dim_g^n`.
    pub fn multilinear_dim(arity: usize, dim_g: usize, dim_v: usize) -> usize {
        dim_v * pow(dim_g, arity)
    }

    pub fn dim(&self) -> usize {
        let la = Self::multilinear_dim(self.arity, self.dim_g, self.dim_v);
        match (self.kind, self.arity) {
            (ComplexKind::Rbla, 0) => self.dim_v,
            (ComplexKind::Rbla, n) => la + Self::multilinear_dim(n - 1, self.dim_g, self.dim_v),
            _ => la,
        }
    }

    /// Splits an RBLA space into its LA and RBO summands.
    pub fn summands(&self) -> Option<(CochainSpace, Option<CochainSpace>)> {
        match (self.kind, self.arity) {
            (ComplexKind::Rbla, 0) => Some((CochainSpace::new(ComplexKind::La, 0, self.dim_g, self.dim_v), None)),
            (ComplexKind::Rbla, n) => Some((
                CochainSpace::new(ComplexKind::La, n, self.dim_g, self.dim_v),
                Some(CochainSpace::new(ComplexKind::Rbo, n - 1, self.dim_g, self.dim_v)),
            )),
            _ => None,
        }
    }
}

/// An element of a [`CochainSpace`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    space: CochainSpace,
    coords: RatVector,
}

impl Cochain {
    pub fn new(space: CochainSpace, coords: RatVector) -> Result<Self> {
        if coords.len() != space.dim() {
            return Err(Error::Shape(format!(
                "cochain of length {} in a space of dimension {}",
                coords.len(),
                space.dim()
            )));
        }
        Ok(Cochain { space, coords })
    }

    pub fn zero(space: CochainSpace) -> Self {
        Cochain { space, coords: RatVector::zeros(space.dim()) }
    }

    pub fn space(&self) -> &CochainSpace {
        &self.space
    }

    pub fn coords(&self) -> &RatVector {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    /// A bilinear `g × g → V` map as a 2-cochain of the given kind.
    pub fn from_bilinear(kind: ComplexKind, map: &BilinearMap) -> Result<Self> {
        if map.dim_left() != map.dim_right() {
            return Err(Error::Shape("2-cochain needs a map on g × g".into()));
        }
        let space = CochainSpace::new(kind, 2, map.dim_left(), map.dim_out());
        if kind == ComplexKind::Rbla {
            return Err(Error::Shape("an RBLA 2-cochain is a pair; use Cochain::pair".into()));
        }
        Cochain::new(space, RatVector::new(map.coeffs().to_vec()))
    }

    /// A linear map `g → V` as a 1-cochain of the given kind.
    pub fn from_operator(kind: ComplexKind, op: &LinearOperator) -> Result<Self> {
        if kind == ComplexKind::Rbla {
            return Err(Error::Shape("an RBLA 1-cochain is a pair; use Cochain::pair".into()));
        }
        let (dg, dv) = (op.dim_in(), op.dim_out());
        let m = op.matrix();
        let coords = (0..dg).flat_map(|i| (0..dv).map(move |a| m[(a, i)].clone())).collect();
        Cochain::new(CochainSpace::new(kind, 1, dg, dv), coords)
    }

    /// A vector of `V` as a 0-cochain.
    pub fn from_vector(kind: ComplexKind, dim_g: usize, v: RatVector) -> Result<Self> {
        let len = v.len();
        Cochain::new(CochainSpace::new(kind, 0, dim_g, len), v)
    }

    pub fn to_bilinear(&self) -> Result<BilinearMap> {
        if self.space.arity != 2 || self.space.kind == ComplexKind::Rbla {
            return Err(Error::Shape("not a plain 2-cochain".into()));
        }
        let s = &self.space;
        BilinearMap::from_coeffs(s.dim_g, s.dim_g, s.dim_v, self.coords.entries().to_vec())
    }

    pub fn to_operator(&self) -> Result<LinearOperator> {
        if self.space.arity != 1 || self.space.kind == ComplexKind::Rbla {
            return Err(Error::Shape("not a plain 1-cochain".into()));
        }
        let (dg, dv) = (self.space.dim_g, self.space.dim_v);
        let mut m = RatMatrix::zeros(dv, dg);
        for i in 0..dg {
            for a in 0..dv {
                m[(a, i)] = self.coords[i * dv + a].clone();
            }
        }
        Ok(LinearOperator::new(m))
    }

    /// `(α, β) ∈ C^n_LA ⊕ C^{n-1}_RBO`.
    pub fn pair(alpha: &Cochain, beta: &Cochain) -> Result<Self> {
        let (sa, sb) = (alpha.space, beta.space);
        if sa.kind != ComplexKind::La
            || sb.kind != ComplexKind::Rbo
            || sa.arity != sb.arity + 1
            || sa.dim_g != sb.dim_g
            || sa.dim_v != sb.dim_v
        {
            return Err(Error::Shape("pair needs an LA n-cochain and an RBO (n-1)-cochain".into()));
        }
        let space = CochainSpace::new(ComplexKind::Rbla, sa.arity, sa.dim_g, sa.dim_v);
        Cochain::new(space, alpha.coords.concat(&beta.coords))
    }

    /// The LA and RBO parts of an RBLA cochain (RBO part absent in degree 0).
    pub fn split(&self) -> Result<(Cochain, Option<Cochain>)> {
        let (la, rbo) = self.space.summands().ok_or_else(|| Error::Shape("split needs an RBLA cochain".into()))?;
        let e = self.coords.entries();
        let alpha = Cochain { space: la, coords: RatVector::new(e[..la.dim()].to_vec()) };
        let beta = rbo.map(|s| Cochain { space: s, coords: RatVector::new(e[la.dim()..].to_vec()) });
        Ok((alpha, beta))
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_space(other)?;
        Ok(Cochain { space: self.space, coords: self.coords.add(&other.coords) })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.same_space(other)?;
        Ok(Cochain { space: self.space, coords: self.coords.sub(&other.coords) })
    }

    pub fn scale(&self, s: &Rational) -> Cochain {
        Cochain { space: self.space, coords: self.coords.scale(s) }
    }

    fn same_space(&self, other: &Cochain) -> Result<()> {
        if self.space != other.space {
            return Err(Error::Shape(format!("cochains live in different spaces: {:?} vs {:?}", self.space, other.space)));
        }
        Ok(())
    }
}

/// Basis-level data of a Loday-Pirashvili differential: brackets of basis
/// pairs and both actions of basis elements on basis vectors of `V`.
struct LpData {
    dg: usize,
    dv: usize,
    /// `[e_i, e_j]`, at `i * dg + j`
    br: Vec<RatVector>,
    /// `l(e_i, v_a)`, at `i * dv + a`
    left: Vec<RatVector>,
    /// `r(v_a, e_i)`, at `a * dg + i`
    right: Vec<RatVector>,
}

impl LpData {
    fn plain(b: &BilinearMap, r: &Representation) -> Self {
        let (dg, dv) = (r.dim_g(), r.dim_v());
        LpData {
            dg,
            dv,
            br: (0..dg * dg).map(|p| b.on_basis(p / dg, p % dg)).collect(),
            left: (0..dg * dv).map(|p| r.left().on_basis(p / dv, p % dv)).collect(),
            right: (0..dv * dg).map(|p| r.right().on_basis(p / dg, p % dg)).collect(),
        }
    }

    /// Expanded Rota-Baxter operator data from `T` and `T_V` directly:
    /// `[Te_i, e_j] + [e_i, Te_j]`, `l(Te_i, v_a) - T_V l(e_i, v_a)`,
    /// `r(v_a, Te_i) - T_V r(v_a, e_i)`.
    fn expanded(a: &RBLeibnizAlgebra, r: &Representation) -> Self {
        let (dg, dv) = (r.dim_g(), r.dim_v());
        let b = a.bracket();
        let t = a.operator();
        let tv = r.operator();
        let tcol: Vec<RatVector> = (0..dg).map(|i| t.column(i)).collect();
        let br = (0..dg * dg)
            .map(|p| {
                let (i, j) = (p / dg, p % dg);
                b.apply_right_basis(&tcol[i], j).add(&b.apply_left_basis(i, &tcol[j]))
            })
            .collect();
        let left = (0..dg * dv)
            .map(|p| {
                let (i, u) = (p / dv, p % dv);
                let direct = r.act_left(&tcol[i], &RatVector::unit(dv, u));
                direct.sub(&tv.apply(&r.left().on_basis(i, u)))
            })
            .collect();
        let right = (0..dv * dg)
            .map(|p| {
                let (u, i) = (p / dg, p % dg);
                let direct = r.act_right(&RatVector::unit(dv, u), &tcol[i]);
                direct.sub(&tv.apply(&r.right().on_basis(u, i)))
            })
            .collect();
        LpData { dg, dv, br, left, right }
    }
}

/// Decodes a flat tuple index into `n` base-`dg` digits, most significant first.
fn digits(mut idx: usize, n: usize, dg: usize, out: &mut [usize]) {
    for k in (0..n).rev() {
        out[k] = idx % dg;
        idx /= dg;
    }
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Column of the LP differential for the basis cochain `e_I* ⊗ v_a`.
fn lp_column(d: &LpData, n: usize, col: usize) -> RatVector {
    let (dg, dv) = (d.dg, d.dv);
    let a = col % dv;
    let mut idx = vec![0; n];
    digits(col / dv, n, dg, &mut idx);
    let tuples = pow(dg, n + 1);
    let mut out = RatVector::zeros(tuples * dv);
    let mut j = vec![0; n + 1];
    let mut rest = Vec::with_capacity(n);
    for t in 0..tuples {
        digits(t, n + 1, dg, &mut j);
        let mut val = RatVector::zeros(dv);
        // Σ_i (-1)^{i+1} l(x_i, f(.., x̂_i, ..)), 1-based i from 1 to n
        for i in 0..n {
            rest.clear();
            rest.extend(j.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x));
            if rest == idx {
                val.add_scaled(&sign(i), &d.left[j[i] * dv + a]);
            }
        }
        // (-1)^{n+1} r(f(x_1..x_n), x_{n+1})
        if j[..n] == idx[..] {
            val.add_scaled(&sign(n + 1), &d.right[a * dg + j[n]]);
        }
        // Σ_{i<k} (-1)^i f(.., x̂_i, .., [x_i, x_k], ..), 1-based i
        for i in 0..=n {
            for k in i + 1..=n {
                // reduced argument list: j without position i; the bracket
                // sits at position k - 1 of that list
                let slot = k - 1;
                let matches = (0..n).all(|p| {
                    if p == slot {
                        return true;
                    }
                    let src = if p < i { p } else { p + 1 };
                    j[src] == idx[p]
                });
                if matches {
                    let c = &d.br[j[i] * dg + j[k]][idx[slot]];
                    if !c.is_zero() {
                        val[a] += sign(i + 1) * c;
                    }
                }
            }
        }
        for (b, x) in val.into_entries().into_iter().enumerate() {
            out[t * dv + b] = x;
        }
    }
    out
}

fn lp_matrix(d: &LpData, n: usize, exec: Exec) -> RatMatrix {
    let cols = CochainSpace::multilinear_dim(n, d.dg, d.dv);
    let rows = CochainSpace::multilinear_dim(n + 1, d.dg, d.dv);
    let columns = map_range(exec, cols, |c| lp_column(d, n, c));
    RatMatrix::from_columns(rows, &columns)
}

fn check_shapes(dim_g: usize, r: &Representation) -> Result<()> {
    if r.dim_g() != dim_g {
        return Err(Error::Shape(format!(
            "representation is over a {}-dimensional algebra, expected {dim_g}",
            r.dim_g()
        )));
    }
    Ok(())
}

/// Matrix of `δⁿ: C^n_LA → C^{n+1}_LA`. Inputs are not re-validated, so
/// non-Leibniz data can be used as a negative control.
pub fn delta_matrix(a: &LeibnizAlgebra, r: &Representation, n: usize) -> Result<RatMatrix> {
    delta_matrix_with(a, r, n, Exec::default())
}

pub fn delta_matrix_with(a: &LeibnizAlgebra, r: &Representation, n: usize, exec: Exec) -> Result<RatMatrix> {
    check_shapes(a.dim(), r)?;
    Ok(lp_matrix(&LpData::plain(a.bracket(), r), n, exec))
}

/// Matrix of `∂ⁿ: C^n_RBO → C^{n+1}_RBO` from the expanded formula in `T`
/// and `T_V`.
pub fn partial_matrix(a: &RBLeibnizAlgebra, r: &Representation, n: usize) -> Result<RatMatrix> {
    partial_matrix_with(a, r, n, Exec::default())
}

pub fn partial_matrix_with(a: &RBLeibnizAlgebra, r: &Representation, n: usize, exec: Exec) -> Result<RatMatrix> {
    check_shapes(a.dim(), r)?;
    Ok(lp_matrix(&LpData::expanded(a, r), n, exec))
}

/// `δⁿ` of the star algebra with the induced representation; agrees with
/// [`partial_matrix`].
pub fn partial_matrix_via_star(a: &RBLeibnizAlgebra, r: &Representation, n: usize) -> Result<RatMatrix> {
    check_shapes(a.dim(), r)?;
    let star = induced_bracket_star(a);
    let induced = induced_actions(a, r);
    delta_matrix(star.algebra(), &induced, n)
}

fn phi_column(t: &LinearOperator, tv: &LinearOperator, dg: usize, dv: usize, n: usize, col: usize) -> RatVector {
    let a = col % dv;
    let mut idx = vec![0; n];
    digits(col / dv, n, dg, &mut idx);
    let tuples = pow(dg, n);
    let m = t.matrix();
    let tva = tv.column(a);
    let mut out = RatVector::zeros(tuples * dv);
    let mut j = vec![0; n];
    for p in 0..tuples {
        digits(p, n, dg, &mut j);
        // f(Tx_1, ..., Tx_n)
        let full: Rational = (0..n).map(|k| m[(idx[k], j[k])].clone()).product();
        out[p * dv + a] += &full;
        // Σ_i T_V f(Tx_1, .., x_i, .., Tx_n)
        for i in 0..n {
            if idx[i] != j[i] {
                continue;
            }
            let c: Rational = (0..n).filter(|&k| k != i).map(|k| m[(idx[k], j[k])].clone()).product();
            if c.is_zero() {
                continue;
            }
            for b in 0..dv {
                let x = &tva[b] * &c;
                out[p * dv + b] -= x;
            }
        }
    }
    out
}

/// Matrix of `φⁿ: C^n_LA → C^n_RBO`,
/// `φⁿ(f)(x_1..x_n) = f(Tx_1..Tx_n) - Σ_i T_V f(Tx_1..x_i..Tx_n)`;
/// `φ⁰` is the identity of `V`.
pub fn phi_matrix(a: &RBLeibnizAlgebra, r: &Representation, n: usize) -> Result<RatMatrix> {
    phi_matrix_with(a, r, n, Exec::default())
}

pub fn phi_matrix_with(a: &RBLeibnizAlgebra, r: &Representation, n: usize, exec: Exec) -> Result<RatMatrix> {
    check_shapes(a.dim(), r)?;
    let (dg, dv) = (a.dim(), r.dim_v());
    let size = CochainSpace::multilinear_dim(n, dg, dv);
    let columns = map_range(exec, size, |c| phi_column(a.operator(), r.operator(), dg, dv, n, c));
    Ok(RatMatrix::from_columns(size, &columns))
}

/// Matrix of `dⁿ` on `C^n_LA ⊕ C^{n-1}_RBO`: `[[δⁿ, 0], [-φⁿ, -∂^{n-1}]]`,
/// and `[δ⁰; -φ⁰]` in degree zero.
pub fn d_matrix(a: &RBLeibnizAlgebra, r: &Representation, n: usize) -> Result<RatMatrix> {
    d_matrix_with(a, r, n, Exec::default())
}

pub fn d_matrix_with(a: &RBLeibnizAlgebra, r: &Representation, n: usize, exec: Exec) -> Result<RatMatrix> {
    let delta = delta_matrix_with(a.algebra(), r, n, exec)?;
    let phi = phi_matrix_with(a, r, n, exec)?.neg();
    if n == 0 {
        return RatMatrix::vstack(&delta, &phi);
    }
    let partial = partial_matrix_with(a, r, n - 1, exec)?.neg();
    let zero = RatMatrix::zeros(delta.rows(), partial.cols());
    RatMatrix::block(&delta, &zero, &phi, &partial)
}

/// The degree-`n` differential of the chosen complex.
pub fn differential(a: &RBLeibnizAlgebra, r: &Representation, kind: ComplexKind, n: usize) -> Result<RatMatrix> {
    differential_with(a, r, kind, n, Exec::default())
}

pub fn differential_with(
    a: &RBLeibnizAlgebra,
    r: &Representation,
    kind: ComplexKind,
    n: usize,
    exec: Exec,
) -> Result<RatMatrix> {
    match kind {
        ComplexKind::La => delta_matrix_with(a.algebra(), r, n, exec),
        ComplexKind::Rbo => partial_matrix_with(a, r, n, exec),
        ComplexKind::Rbla => d_matrix_with(a, r, n, exec),
    }
}

/// Applies the degree-`n` differential to a cochain of the matching space.
pub fn coboundary(a: &RBLeibnizAlgebra, r: &Representation, z: &Cochain) -> Result<Cochain> {
    let s = *z.space();
    if s.dim_g != a.dim() || s.dim_v != r.dim_v() {
        return Err(Error::Shape("cochain does not match the algebra and representation".into()));
    }
    let m = differential(a, r, s.kind, s.arity)?;
    let next = CochainSpace::new(s.kind, s.arity + 1, s.dim_g, s.dim_v);
    Cochain::new(next, m.mul_vec(z.coords())?)
}

/// Ranks behind one cohomology dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSummary {
    pub degree: usize,
    /// `dim C^n`
    pub cochains: usize,
    /// `rank dⁿ`
    pub rank_out: usize,
    /// `rank d^{n-1}` (zero in degree 0)
    pub rank_in: usize,
}

impl DegreeSummary {
    pub fn kernel(&self) -> usize {
        self.cochains - self.rank_out
    }

    pub fn dimension(&self) -> usize {
        self.kernel() - self.rank_in
    }
}

/// `dim ker dⁿ - rank d^{n-1}` for the chosen complex.
pub fn cohomology_dimension(a: &RBLeibnizAlgebra, r: &Representation, n: usize, kind: ComplexKind) -> Result<usize> {
    Ok(degree_summary(a, r, n, kind, Exec::default())?.dimension())
}

pub fn degree_summary(
    a: &RBLeibnizAlgebra,
    r: &Representation,
    n: usize,
    kind: ComplexKind,
    exec: Exec,
) -> Result<DegreeSummary> {
    let out = differential_with(a, r, kind, n, exec)?;
    let rank_in = if n == 0 { 0 } else { rank_with(&differential_with(a, r, kind, n - 1, exec)?, exec) };
    Ok(DegreeSummary { degree: n, cochains: out.cols(), rank_out: rank_with(&out, exec), rank_in })
}

/// Summaries for degrees `0..=max_degree`, reusing each rank once.
pub fn cohomology_table(
    a: &RBLeibnizAlgebra,
    r: &Representation,
    kind: ComplexKind,
    max_degree: usize,
    exec: Exec,
) -> Result<Vec<DegreeSummary>> {
    let mut rows = Vec::with_capacity(max_degree + 1);
    let mut rank_in = 0;
    for n in 0..=max_degree {
        let m = differential_with(a, r, kind, n, exec)?;
        let rank_out = rank_with(&m, exec);
        rows.push(DegreeSummary { degree: n, cochains: m.cols(), rank_out, rank_in });
        rank_in = rank_out;
    }
    Ok(rows)
}

/// Whether `d^{n+1} d^n = 0` for every `n < n_max`.
pub fn verify_complex(a: &RBLeibnizAlgebra, r: &Representation, kind: ComplexKind, n_max: usize) -> Result<bool> {
    verify_complex_with(a, r, kind, n_max, Exec::default())
}

pub fn verify_complex_with(
    a: &RBLeibnizAlgebra,
    r: &Representation,
    kind: ComplexKind,
    n_max: usize,
    exec: Exec,
) -> Result<bool> {
    if n_max == 0 {
        return Err(Error::Precondition("verify_complex needs n_max >= 1".into()));
    }
    let mut prev = differential_with(a, r, kind, 0, exec)?;
    for n in 0..n_max {
        let next = differential_with(a, r, kind, n + 1, exec)?;
        if !next.mul(&prev)?.is_zero() {
            return Ok(false);
        }
        prev = next;
    }
    Ok(true)
}

/// Whether `φ^{n+1} δⁿ = ∂ⁿ φⁿ` for every `n < n_max`, starting at `n = 0`.
pub fn verify_phi_chain_map(a: &RBLeibnizAlgebra, r: &Representation, n_max: usize) -> Result<bool> {
    if n_max == 0 {
        return Err(Error::Precondition("verify_phi_chain_map needs n_max >= 1".into()));
    }
    for n in 0..n_max {
        let lhs = phi_matrix(a, r, n + 1)?.mul(&delta_matrix(a.algebra(), r, n)?)?;
        let rhs = partial_matrix(a, r, n)?.mul(&phi_matrix(a, r, n)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_cocycle(a: &RBLeibnizAlgebra, r: &Representation, z: &Cochain) -> Result<()> {
    if !coboundary(a, r, z)?.is_zero() {
        return Err(Error::NotACocycle { degree: z.space().arity });
    }
    Ok(())
}

/// Whether two `n`-cocycles differ by a coboundary. Non-cocycles are an error.
pub fn same_class(
    a: &RBLeibnizAlgebra,
    r: &Representation,
    n: usize,
    kind: ComplexKind,
    z1: &Cochain,
    z2: &Cochain,
) -> Result<bool> {
    let space = CochainSpace::new(kind, n, a.dim(), r.dim_v());
    for z in [z1, z2] {
        if *z.space() != space {
            return Err(Error::Shape(format!("expected a cochain in {space:?}, got {:?}", z.space())));
        }
        check_cocycle(a, r, z)?;
    }
    let diff = z1.sub(z2)?;
    if n == 0 {
        return Ok(diff.is_zero());
    }
    let image = differential(a, r, kind, n - 1)?;
    in_column_space_with(&image, diff.coords(), Exec::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kernel_basis, rank};
    use crate::repr::self_representation;
    use crate::samples;

    fn one() -> Rational {
        Rational::one()
    }

    fn abelian_zero(dg: usize, dv: usize) -> (RBLeibnizAlgebra, Representation) {
        let a = RBLeibnizAlgebra::from_parts(BilinearMap::square(dg), LinearOperator::zeros(dg, dg)).unwrap();
        (a, Representation::trivial(dg, LinearOperator::zeros(dv, dv)))
    }

    #[test]
    fn space_dimensions() {
        assert_eq!(CochainSpace::new(ComplexKind::La, 0, 3, 2).dim(), 2);
        assert_eq!(CochainSpace::new(ComplexKind::La, 2, 3, 2).dim(), 18);
        assert_eq!(CochainSpace::new(ComplexKind::Rbla, 0, 3, 2).dim(), 2);
        assert_eq!(CochainSpace::new(ComplexKind::Rbla, 2, 3, 2).dim(), 18 + 6);
    }

    #[test]
    fn delta_examples() {
        let (a, r) = abelian_zero(2, 2);
        for n in 0..=3 {
            assert!(delta_matrix(a.algebra(), &r, n).unwrap().is_zero());
        }
        let plane = samples::plane_rb(one());
        let s = self_representation(&plane);
        let id = Cochain::from_operator(ComplexKind::La, &LinearOperator::identity(2)).unwrap();
        let image = delta_matrix(plane.algebra(), &s, 1).unwrap().mul_vec(id.coords()).unwrap();
        assert_eq!(image.entries(), plane.bracket().coeffs());
        // δ⁰(v)(x) = -[v, x]; the e_1 column vanishes since [e_1, ·] = 0
        let d0 = delta_matrix(plane.algebra(), &s, 0).unwrap();
        assert!(d0.column(0).is_zero());
        assert_eq!(d0.column(1).entries(), plane.bracket().coeffs()[4..].iter().map(|x| -x).collect::<Vec<_>>());
    }

    #[test]
    fn h0_of_plane_self_representation() {
        let plane = samples::plane_rb(one());
        let s = self_representation(&plane);
        assert_eq!(cohomology_dimension(&plane, &s, 0, ComplexKind::La).unwrap(), 1);
    }

    #[test]
    fn partial_examples() {
        let (a, r) = abelian_zero(3, 2);
        for n in 0..=3 {
            assert!(partial_matrix(&a, &r, n).unwrap().is_zero());
        }
        let ab = RBLeibnizAlgebra::from_parts(BilinearMap::square(2), LinearOperator::from_i64(&[&[1, 2], &[0, 1]])).unwrap();
        assert!(partial_matrix(&ab, &self_representation(&ab), 1).unwrap().is_zero());
        for a in [samples::plane_rb(one()), samples::solvable3_rb(one(), one())] {
            let s = self_representation(&a);
            let t = Cochain::from_operator(ComplexKind::Rbo, a.operator()).unwrap();
            assert!(partial_matrix(&a, &s, 1).unwrap().mul_vec(t.coords()).unwrap().is_zero());
        }
    }

    #[test]
    fn phi_examples() {
        let plane = samples::plane_rb(one());
        let s = self_representation(&plane);
        let id = Cochain::from_operator(ComplexKind::La, &LinearOperator::identity(2)).unwrap();
        assert!(phi_matrix(&plane, &s, 1).unwrap().mul_vec(id.coords()).unwrap().is_zero());

        // T = 0: φⁿ vanishes for n >= 2 and φ¹ f = -T_V f
        let z = RBLeibnizAlgebra::new_unchecked(plane.algebra().clone(), LinearOperator::zeros(2, 2));
        let tv = LinearOperator::from_i64(&[&[1, 2], &[3, 4]]);
        let r = Representation::trivial(2, tv.clone());
        assert!(phi_matrix(&z, &r, 2).unwrap().is_zero());
        let f = LinearOperator::from_i64(&[&[1, -1], &[0, 2]]);
        let fc = Cochain::from_operator(ComplexKind::La, &f).unwrap();
        let expect = Cochain::from_operator(ComplexKind::Rbo, &tv.compose(&f).scale(&-one())).unwrap();
        assert_eq!(&phi_matrix(&z, &r, 1).unwrap().mul_vec(fc.coords()).unwrap(), expect.coords());
    }

    #[test]
    fn phi_two_on_plane_bracket() {
        // T e_2 = e_1 and [e_1, ·] = 0, so f(Te_i, Te_j) and f(Te_i, e_j)
        // vanish; f(e_i, Te_j) survives only at (e_2, e_2) with value
        // [e_2, e_1] = e_1, then T e_1 = 0. Hence φ²(bracket) = 0.
        let plane = samples::plane_rb(one());
        let s = self_representation(&plane);
        let f = Cochain::from_bilinear(ComplexKind::La, plane.bracket()).unwrap();
        assert!(phi_matrix(&plane, &s, 2).unwrap().mul_vec(f.coords()).unwrap().is_zero());
        // with b = 3 every term is still killed by T e_1 = 0 or [e_1, ·] = 0
        let p3 = samples::plane_rb(Rational::from_integer(3.into()));
        assert!(phi_matrix(&p3, &self_representation(&p3), 2).unwrap().mul_vec(f.coords()).unwrap().is_zero());
    }

    #[test]
    fn d_examples() {
        let (a, r) = abelian_zero(2, 1);
        for n in 1..=3 {
            assert!(d_matrix(&a, &r, n).unwrap().is_zero());
        }
        let plane = samples::plane_rb(one());
        let s = self_representation(&plane);
        let d1 = d_matrix(&plane, &s, 1).unwrap();
        let d2 = d_matrix(&plane, &s, 2).unwrap();
        assert!(d2.mul(&d1).unwrap().is_zero());
        // upper-right block
        let la = CochainSpace::multilinear_dim(2, 2, 2);
        assert!(d2.submatrix(0, la, d2.rows() - la, d2.cols() - la).is_zero());
        assert!(d_matrix(&plane, &s, 1).unwrap().mul(&d_matrix(&plane, &s, 0).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn golden_dimensions_for_plane() {
        let plane = samples::plane_rb(one());
        let s = self_representation(&plane);
        let dims = |k| (1..=2).map(|n| cohomology_dimension(&plane, &s, n, k).unwrap()).collect::<Vec<_>>();
        assert_eq!(dims(ComplexKind::La), vec![0, 0]);
        assert_eq!(dims(ComplexKind::Rbo), vec![1, 1]);
        assert_eq!(dims(ComplexKind::Rbla), vec![0, 1]);
    }

    #[test]
    fn abelian_combined_dimensions() {
        let (a, r) = abelian_zero(3, 2);
        // d⁰ = [0; -1] is injective, so H⁰ = 0 and H¹ loses the image
        assert_eq!(cohomology_dimension(&a, &r, 0, ComplexKind::Rbla).unwrap(), 0);
        assert_eq!(cohomology_dimension(&a, &r, 1, ComplexKind::Rbla).unwrap(), 2 * 3);
        for n in 2..=3 {
            let expect = 2 * (3usize.pow(n as u32) + 3usize.pow(n as u32 - 1));
            assert_eq!(cohomology_dimension(&a, &r, n, ComplexKind::Rbla).unwrap(), expect);
        }
    }

    #[test]
    fn complexes_close_on_samples() {
        for a in [samples::plane_rb(one()), samples::solvable3_rb(one(), one())] {
            let s = self_representation(&a);
            for k in [ComplexKind::La, ComplexKind::Rbo, ComplexKind::Rbla] {
                assert!(verify_complex(&a, &s, k, 3).unwrap(), "{k}");
            }
            assert!(verify_phi_chain_map(&a, &s, 3).unwrap());
            for n in 0..=2 {
                assert_eq!(partial_matrix(&a, &s, n).unwrap(), partial_matrix_via_star(&a, &s, n).unwrap());
            }
        }
    }

    #[test]
    fn non_leibniz_bracket_breaks_the_complex() {
        let bad = BilinearMap::from_i64(2, &[(0, 0, 1, 1), (0, 1, 0, 1)]);
        let a = RBLeibnizAlgebra::new_unchecked(LeibnizAlgebra::new_unchecked(bad), LinearOperator::zeros(2, 2));
        let s = self_representation(&a);
        assert!(!verify_complex(&a, &s, ComplexKind::La, 3).unwrap());
    }

    #[test]
    fn same_class_examples() {
        let plane = samples::plane_rb(one());
        let s = self_representation(&plane);
        let d1 = d_matrix(&plane, &s, 1).unwrap();
        let d2 = d_matrix(&plane, &s, 2).unwrap();
        let space = CochainSpace::new(ComplexKind::Rbla, 2, 2, 2);
        let cocycles = kernel_basis(&d2);
        let z = Cochain::new(space, cocycles[0].clone()).unwrap();
        assert!(same_class(&plane, &s, 2, ComplexKind::Rbla, &z, &z).unwrap());
        let w: RatVector = (0..d1.cols()).map(|i| Rational::from_integer((i as i64 - 3).into())).collect();
        let shifted = Cochain::new(space, z.coords().add(&d1.mul_vec(&w).unwrap())).unwrap();
        assert!(same_class(&plane, &s, 2, ComplexKind::Rbla, &shifted, &z).unwrap());

        let (a, r) = abelian_zero(2, 1);
        let sp = CochainSpace::new(ComplexKind::La, 2, 2, 1);
        let nz = Cochain::new(sp, RatVector::unit(4, 1)).unwrap();
        assert!(!same_class(&a, &r, 2, ComplexKind::La, &nz, &Cochain::zero(sp)).unwrap());

        let not_cocycle = Cochain::new(space, RatVector::unit(space.dim(), 0)).unwrap();
        if !d2.mul_vec(not_cocycle.coords()).unwrap().is_zero() {
            assert!(matches!(
                same_class(&plane, &s, 2, ComplexKind::Rbla, &not_cocycle, &z),
                Err(Error::NotACocycle { degree: 2 })
            ));
        }
    }

    #[test]
    fn rank_nullity_and_short_exact_sequence() {
        let a = samples::solvable3_rb(one(), one());
        let s = self_representation(&a);
        for n in 0..=2 {
            let m = d_matrix(&a, &s, n).unwrap();
            assert_eq!(kernel_basis(&m).len() + rank(&m), m.cols());
            if n >= 1 {
                let la = CochainSpace::new(ComplexKind::La, n, 3, 3).dim();
                let rbo = CochainSpace::new(ComplexKind::Rbo, n - 1, 3, 3).dim();
                assert_eq!(m.cols(), la + rbo);
            }
        }
    }

    #[test]
    fn sequential_and_parallel_assembly_agree() {
        let a = samples::solvable3_rb(one(), one());
        let s = self_representation(&a);
        for n in 0..=2 {
            assert_eq!(
                d_matrix_with(&a, &s, n, Exec::Sequential).unwrap(),
                d_matrix_with(&a, &s, n, Exec::Parallel).unwrap()
            );
        }
    }

    #[test]
    fn cochain_round_trips() {
        let b = BilinearMap::from_i64(2, &[(1, 0, 0, 3), (0, 1, 1, -2)]);
        assert_eq!(Cochain::from_bilinear(ComplexKind::La, &b).unwrap().to_bilinear().unwrap(), b);
        let op = LinearOperator::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        let c = Cochain::from_operator(ComplexKind::Rbo, &op).unwrap();
        assert_eq!(c.space().dim_g, 3);
        assert_eq!(c.to_operator().unwrap(), op);
        let p = Cochain::pair(&Cochain::from_bilinear(ComplexKind::La, &b).unwrap(), &Cochain::from_operator(ComplexKind::Rbo, &LinearOperator::identity(2)).unwrap()).unwrap();
        let (x, y) = p.split().unwrap();
        assert_eq!(x.to_bilinear().unwrap(), b);
        assert_eq!(y.unwrap().to_operator().unwrap(), LinearOperator::identity(2));
    }

    mod props {
        use super::*;
        use crate::samples;
        use proptest::prelude::*;
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(12))]

            #[test]
            fn differentials_square_to_zero(seed in any::<u64>()) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let a = samples::random_rb_algebra(&mut rng);
                let r = samples::random_representation(&mut rng, &a, 2);
                for k in [ComplexKind::La, ComplexKind::Rbo, ComplexKind::Rbla] {
                    prop_assert!(verify_complex(&a, &r, k, 2).unwrap());
                }
                prop_assert!(verify_phi_chain_map(&a, &r, 2).unwrap());
            }

            #[test]
            fn two_routes_to_the_operator_complex_agree(seed in any::<u64>()) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let a = samples::random_rb_algebra(&mut rng);
                let r = samples::random_representation(&mut rng, &a, 2);
                for n in 0..=2 {
                    prop_assert_eq!(partial_matrix(&a, &r, n).unwrap(), partial_matrix_via_star(&a, &r, n).unwrap());
                }
            }

            #[test]
            fn coboundaries_share_a_class(seed in any::<u64>()) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let a = samples::random_rb_algebra(&mut rng);
                let r = samples::random_representation(&mut rng, &a, 2);
                let z = samples::random_cocycle(&mut rng, &a, &r);
                let d1 = d_matrix(&a, &r, 1).unwrap();
                let w: RatVector = (0..d1.cols()).map(|_| Rational::from_integer(rand::Rng::gen_range(&mut rng, -2..=2).into())).collect();
                let shifted = Cochain::new(*z.space(), z.coords().add(&d1.mul_vec(&w).unwrap())).unwrap();
                prop_assert!(same_class(&a, &r, 2, ComplexKind::Rbla, &z, &shifted).unwrap());
            }
        }
    }
}
