//! Structure-constant model of Leibniz algebras and their Rota-Baxter
//! operators (weight zero).
//!
//! Brackets are stored as rank-3 tensors `c[i][j][k]` with
//! `[e_i, e_j] = sum_k c[i][j][k] e_k`. All checks run over basis elements;
//! bilinearity extends them to the whole space.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::rational::binomial;
use crate::linalg::{rank, RatMatrix, RatVector, Rational};
use crate::violation::{record, Law, Violation};

/// Bilinear map `U x W -> Out` in fixed bases, stored row-major over
/// `(i, j, k)` with `k` fastest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    dim_left: usize,
    dim_right: usize,
    dim_out: usize,
    c: Vec<Rational>,
}

impl BilinearMap {
    pub fn zeros(dim_left: usize, dim_right: usize, dim_out: usize) -> Self {
        BilinearMap { dim_left, dim_right, dim_out, c: vec![Rational::zero(); dim_left * dim_right * dim_out] }
    }

    /// A square map `g x g -> g` of the given dimension, all zero.
    pub fn square(dim: usize) -> Self {
        Self::zeros(dim, dim, dim)
    }

    pub fn from_coeffs(dim_left: usize, dim_right: usize, dim_out: usize, c: Vec<Rational>) -> Result<Self> {
        if c.len() != dim_left * dim_right * dim_out {
            return Err(Error::Shape(format!(
                "bilinear map {dim_left}x{dim_right}->{dim_out} needs {} coefficients, got {}",
                dim_left * dim_right * dim_out,
                c.len()
            )));
        }
        Ok(BilinearMap { dim_left, dim_right, dim_out, c })
    }

    /// Builds a map from sparse `(i, j, k, value)` entries; unspecified
    /// coefficients are zero and repeated entries accumulate.
    pub fn from_entries(
        dim_left: usize,
        dim_right: usize,
        dim_out: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut m = Self::zeros(dim_left, dim_right, dim_out);
        for (i, j, k, v) in entries {
            if i >= dim_left || j >= dim_right || k >= dim_out {
                return Err(Error::Shape(format!("entry ({i},{j},{k}) out of range")));
            }
            *m.get_mut(i, j, k) += v;
        }
        Ok(m)
    }

    /// Square map from small-integer sparse entries.
    pub fn from_i64(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        Self::from_entries(dim, dim, dim, entries.iter().map(|&(i, j, k, v)| (i, j, k, Rational::from_integer(v.into()))))
            .expect("entries in range")
    }

    pub fn dim_left(&self) -> usize {
        self.dim_left
    }

    pub fn dim_right(&self) -> usize {
        self.dim_right
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn is_square(&self) -> bool {
        self.dim_left == self.dim_right && self.dim_right == self.dim_out
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.dim_right + j) * self.dim_out
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[self.offset(i, j) + k]
    }

    pub fn get_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Rational {
        let o = self.offset(i, j);
        &mut self.c[o + k]
    }

    /// Value on a pair of basis vectors.
    pub fn on_basis(&self, i: usize, j: usize) -> RatVector {
        let o = self.offset(i, j);
        RatVector::new(self.c[o..o + self.dim_out].to_vec())
    }

    fn accumulate_basis(&self, out: &mut RatVector, s: &Rational, i: usize, j: usize) {
        let o = self.offset(i, j);
        for k in 0..self.dim_out {
            let x = &self.c[o + k];
            if !x.is_zero() {
                out[k] += s * x;
            }
        }
    }

    pub fn apply(&self, u: &RatVector, w: &RatVector) -> RatVector {
        debug_assert_eq!(u.len(), self.dim_left);
        debug_assert_eq!(w.len(), self.dim_right);
        let mut out = RatVector::zeros(self.dim_out);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in w.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                self.accumulate_basis(&mut out, &(a * b), i, j);
            }
        }
        out
    }

    /// `apply(e_i, w)`
    pub fn apply_left_basis(&self, i: usize, w: &RatVector) -> RatVector {
        let mut out = RatVector::zeros(self.dim_out);
        for (j, b) in w.iter().enumerate() {
            if !b.is_zero() {
                self.accumulate_basis(&mut out, b, i, j);
            }
        }
        out
    }

    /// `apply(u, e_j)`
    pub fn apply_right_basis(&self, u: &RatVector, j: usize) -> RatVector {
        let mut out = RatVector::zeros(self.dim_out);
        for (i, a) in u.iter().enumerate() {
            if !a.is_zero() {
                self.accumulate_basis(&mut out, a, i, j);
            }
        }
        out
    }

    /// `(u, w) -> self(f u, g w)`
    pub fn precompose(&self, f: &LinearOperator, g: &LinearOperator) -> BilinearMap {
        assert_eq!(f.dim_out(), self.dim_left);
        assert_eq!(g.dim_out(), self.dim_right);
        let mut out = BilinearMap::zeros(f.dim_in(), g.dim_in(), self.dim_out);
        for i in 0..f.dim_in() {
            let fi = f.column(i);
            for j in 0..g.dim_in() {
                let v = self.apply(&fi, &g.column(j));
                let o = out.offset(i, j);
                out.c[o..o + self.dim_out].clone_from_slice(v.entries());
            }
        }
        out
    }

    /// `(u, w) -> h(self(u, w))`
    pub fn postcompose(&self, h: &LinearOperator) -> BilinearMap {
        assert_eq!(h.dim_in(), self.dim_out);
        let mut out = BilinearMap::zeros(self.dim_left, self.dim_right, h.dim_out());
        for i in 0..self.dim_left {
            for j in 0..self.dim_right {
                let v = h.apply(&self.on_basis(i, j));
                let o = out.offset(i, j);
                out.c[o..o + h.dim_out()].clone_from_slice(v.entries());
            }
        }
        out
    }

    fn assert_same_shape(&self, other: &BilinearMap) {
        assert_eq!(
            (self.dim_left, self.dim_right, self.dim_out),
            (other.dim_left, other.dim_right, other.dim_out),
            "bilinear map shape mismatch"
        );
    }

    pub fn add(&self, other: &BilinearMap) -> BilinearMap {
        self.assert_same_shape(other);
        self.with_coeffs(self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &BilinearMap) -> BilinearMap {
        self.assert_same_shape(other);
        self.with_coeffs(self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rational) -> BilinearMap {
        self.with_coeffs(self.c.iter().map(|a| a * s).collect())
    }

    fn with_coeffs(&self, c: Vec<Rational>) -> BilinearMap {
        BilinearMap { dim_left: self.dim_left, dim_right: self.dim_right, dim_out: self.dim_out, c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Nonzero coefficients as `(i, j, k, value)` in index order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dim_left {
            for j in 0..self.dim_right {
                for k in 0..self.dim_out {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Linear map given by a `dim_out x dim_in` matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOperator {
    m: RatMatrix,
}

impl LinearOperator {
    pub fn new(m: RatMatrix) -> Self {
        LinearOperator { m }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(RatMatrix::identity(n))
    }

    pub fn zeros(dim_out: usize, dim_in: usize) -> Self {
        Self::new(RatMatrix::zeros(dim_out, dim_in))
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::new(RatMatrix::from_i64(rows))
    }

    pub fn dim_in(&self) -> usize {
        self.m.cols()
    }

    pub fn dim_out(&self) -> usize {
        self.m.rows()
    }

    pub fn is_square(&self) -> bool {
        self.m.is_square()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> RatMatrix {
        self.m
    }

    /// Image of the `j`-th basis vector.
    pub fn column(&self, j: usize) -> RatVector {
        self.m.column(j)
    }

    pub fn apply(&self, v: &RatVector) -> RatVector {
        self.m.apply(v)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinearOperator) -> LinearOperator {
        Self::new(self.m.mul(&other.m).expect("composable operators"))
    }

    pub fn add(&self, other: &LinearOperator) -> LinearOperator {
        Self::new(self.m.add(&other.m).expect("same shape"))
    }

    pub fn sub(&self, other: &LinearOperator) -> LinearOperator {
        Self::new(self.m.sub(&other.m).expect("same shape"))
    }

    pub fn scale(&self, s: &Rational) -> LinearOperator {
        Self::new(self.m.scale(s))
    }

    pub fn transpose(&self) -> LinearOperator {
        Self::new(self.m.transpose())
    }

    pub fn pow(&self, k: usize) -> LinearOperator {
        Self::new(self.m.pow(k))
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn rank(&self) -> usize {
        rank(&self.m)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.dim_in()
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.compose(self) == *self
    }
}

/// A (left) Leibniz algebra given by its structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeibnizAlgebra {
    bracket: BilinearMap,
}

impl LeibnizAlgebra {
    /// Validating constructor: the bracket must be square and satisfy the
    /// Leibniz identity.
    pub fn new(bracket: BilinearMap) -> Result<Self> {
        let violations = check_leibniz(&bracket)?;
        if !violations.is_empty() {
            return Err(Error::Axioms { what: "bracket", violations });
        }
        Ok(LeibnizAlgebra { bracket })
    }

    /// Wraps a square bracket without checking the Leibniz identity.
    pub fn new_unchecked(bracket: BilinearMap) -> Self {
        assert!(bracket.is_square(), "bracket must be square");
        LeibnizAlgebra { bracket }
    }

    pub fn abelian(dim: usize) -> Self {
        LeibnizAlgebra { bracket: BilinearMap::square(dim) }
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim_out
    }

    pub fn bracket(&self) -> &BilinearMap {
        &self.bracket
    }

    pub fn br(&self, x: &RatVector, y: &RatVector) -> RatVector {
        self.bracket.apply(x, y)
    }
}

/// A Leibniz algebra with a Rota-Baxter operator of weight zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RBLeibnizAlgebra {
    alg: LeibnizAlgebra,
    t: LinearOperator,
}

impl RBLeibnizAlgebra {
    pub fn new(alg: LeibnizAlgebra, t: LinearOperator) -> Result<Self> {
        let violations = check_rota_baxter(&alg, &t)?;
        if !violations.is_empty() {
            return Err(Error::Axioms { what: "Rota-Baxter operator", violations });
        }
        Ok(RBLeibnizAlgebra { alg, t })
    }

    /// Pairs a bracket and operator without checking either axiom.
    pub fn new_unchecked(alg: LeibnizAlgebra, t: LinearOperator) -> Self {
        assert!(t.is_square() && t.dim_in() == alg.dim(), "operator shape must match the algebra");
        RBLeibnizAlgebra { alg, t }
    }

    /// Validates both the Leibniz identity and the Rota-Baxter identity.
    pub fn from_parts(bracket: BilinearMap, t: LinearOperator) -> Result<Self> {
        Self::new(LeibnizAlgebra::new(bracket)?, t)
    }

    pub fn from_parts_unchecked(bracket: BilinearMap, t: LinearOperator) -> Self {
        Self::new_unchecked(LeibnizAlgebra::new_unchecked(bracket), t)
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.alg
    }

    pub fn bracket(&self) -> &BilinearMap {
        self.alg.bracket()
    }

    pub fn operator(&self) -> &LinearOperator {
        &self.t
    }

    /// Transports bracket and operator along an invertible change of basis
    /// `p`: the new bracket is `p [p⁻¹x, p⁻¹y]` and the new operator `p T p⁻¹`.
    pub fn transport(&self, p: &LinearOperator, p_inv: &LinearOperator) -> RBLeibnizAlgebra {
        let bracket = self.bracket().precompose(p_inv, p_inv).postcompose(p);
        let t = p.compose(&self.t).compose(p_inv);
        RBLeibnizAlgebra { alg: LeibnizAlgebra::new_unchecked(bracket), t }
    }
}

/// All basis triples `(i, j, k)` where
/// `[e_i,[e_j,e_k]] != [[e_i,e_j],e_k] + [e_j,[e_i,e_k]]`.
pub fn check_leibniz(b: &BilinearMap) -> Result<Vec<Violation>> {
    if !b.is_square() {
        return Err(Error::Shape(format!(
            "bracket must be square, got {}x{}->{}",
            b.dim_left, b.dim_right, b.dim_out
        )));
    }
    let n = b.dim_out;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let ij = b.on_basis(i, j);
            for k in 0..n {
                let lhs = b.apply_left_basis(i, &b.on_basis(j, k));
                let mut defect = lhs.sub(&b.apply_right_basis(&ij, k));
                defect = defect.sub(&b.apply_left_basis(j, &b.on_basis(i, k)));
                record(&mut out, Law::Leibniz, vec![i, j, k], defect);
            }
        }
    }
    Ok(out)
}

/// All basis pairs where `[T e_i, T e_j] != T([T e_i, e_j] + [e_i, T e_j])`.
pub fn check_rota_baxter(a: &LeibnizAlgebra, t: &LinearOperator) -> Result<Vec<Violation>> {
    let n = a.dim();
    if !t.is_square() || t.dim_in() != n {
        return Err(Error::Shape(format!("operator must be {n}x{n}, got {}x{}", t.dim_out(), t.dim_in())));
    }
    let b = a.bracket();
    let cols: Vec<RatVector> = (0..n).map(|i| t.column(i)).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = b.apply(&cols[i], &cols[j]);
            let inner = b.apply_right_basis(&cols[i], j).add(&b.apply_left_basis(i, &cols[j]));
            record(&mut out, Law::RotaBaxter, vec![i, j], lhs.sub(&t.apply(&inner)));
        }
    }
    Ok(out)
}

/// Checks that `f` is a homomorphism of brackets intertwining the operators.
pub fn check_morphism(src: &RBLeibnizAlgebra, dst: &RBLeibnizAlgebra, f: &LinearOperator) -> Result<Vec<Violation>> {
    if f.dim_in() != src.dim() || f.dim_out() != dst.dim() {
        return Err(Error::Shape(format!(
            "map must be {}x{}, got {}x{}",
            dst.dim(),
            src.dim(),
            f.dim_out(),
            f.dim_in()
        )));
    }
    let mut out = Vec::new();
    let images: Vec<RatVector> = (0..src.dim()).map(|i| f.column(i)).collect();
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = f.apply(&src.bracket().on_basis(i, j));
            let rhs = dst.bracket().apply(&images[i], &images[j]);
            record(&mut out, Law::MorphismBracket, vec![i, j], lhs.sub(&rhs));
        }
    }
    let lhs = dst.operator().compose(f);
    let rhs = f.compose(src.operator());
    for j in 0..src.dim() {
        record(&mut out, Law::MorphismOperator, vec![j], lhs.column(j).sub(&rhs.column(j)));
    }
    Ok(out)
}

/// `[x,y]_* = [x, Ty] + [Tx, y]` with the same operator.
pub fn induced_bracket_star(a: &RBLeibnizAlgebra) -> RBLeibnizAlgebra {
    let star = star_of(a.bracket(), a.operator());
    RBLeibnizAlgebra::new_unchecked(LeibnizAlgebra::new_unchecked(star), a.operator().clone())
}

fn star_of(b: &BilinearMap, t: &LinearOperator) -> BilinearMap {
    let id = LinearOperator::identity(t.dim_in());
    b.precompose(&id, t).add(&b.precompose(t, &id))
}

/// `[·,·]_n` by the recursion `[x,y]_r = [x,Ty]_{r-1} + [Tx,y]_{r-1}`.
pub fn iterated_bracket(a: &RBLeibnizAlgebra, n: usize) -> BilinearMap {
    let mut b = a.bracket().clone();
    for _ in 0..n {
        b = star_of(&b, a.operator());
    }
    b
}

/// `[·,·]_n` by the binomial sum `Σ_r C(n,r) [T^{n-r} x, T^r y]`.
pub fn iterated_bracket_closed(a: &RBLeibnizAlgebra, n: usize) -> BilinearMap {
    let powers: Vec<LinearOperator> = (0..=n).map(|k| a.operator().pow(k)).collect();
    let mut acc = BilinearMap::square(a.dim());
    for r in 0..=n {
        let term = a.bracket().precompose(&powers[n - r], &powers[r]);
        acc = acc.add(&term.scale(&binomial(n, r)));
    }
    acc
}

/// Smallest `n >= 1` with `T^n = 0`, or `None` when `T^dim != 0`.
pub fn nilpotency_degree(t: &LinearOperator) -> Result<Option<usize>> {
    if !t.is_square() {
        return Err(Error::Shape("nilpotency needs a square operator".into()));
    }
    let mut p = t.clone();
    for n in 1..=t.dim_in().max(1) {
        if p.is_zero() {
            return Ok(Some(n));
        }
        p = p.compose(t);
    }
    Ok(None)
}

/// Evaluates `[·,·]_k` for a nilpotent operator of degree `n` and reports
/// whether it vanishes; requires `k >= 2n + 1`.
pub fn verify_nilpotent_vanishing(a: &RBLeibnizAlgebra, k: usize) -> Result<bool> {
    let n = nilpotency_degree(a.operator())?.ok_or(Error::NotNilpotent)?;
    if k < 2 * n + 1 {
        return Err(Error::Precondition(format!("need k >= 2n+1 = {}, got {k}", 2 * n + 1)));
    }
    Ok(iterated_bracket(a, k).is_zero())
}

/// `[x,y]_1 + (2^n - 2)[Tx, Ty]`, the closed form for idempotent operators
/// (`n >= 1`).
pub fn idempotent_iterated_bracket(a: &RBLeibnizAlgebra, n: usize) -> BilinearMap {
    assert!(n >= 1);
    let t = a.operator();
    let coeff = Rational::from_integer((num_bigint::BigInt::one() << n) - 2);
    iterated_bracket(a, 1).add(&a.bracket().precompose(t, t).scale(&coeff))
}
