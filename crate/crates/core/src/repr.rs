//! Representations `(V, l_V, r_V, T_V)` of Rota-Baxter Leibniz algebras.

use num_traits::Zero;

use crate::algebra::{induced_bracket_star, BilinearMap, LeibnizAlgebra, LinearOperator, RBLeibnizAlgebra};
use crate::error::{Error, Result};
use crate::linalg::RatVector;
use crate::violation::{record, Law, Violation};

/// Left action tensor `(i, a, b)`: `l(e_i, v_a) = Σ_b left[i][a][b] v_b`;
/// right action tensor `(a, i, b)`: `r(v_a, e_i) = Σ_b right[a][i][b] v_b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    left: BilinearMap,
    right: BilinearMap,
    t_v: LinearOperator,
}

impl Representation {
    pub fn new(left: BilinearMap, right: BilinearMap, t_v: LinearOperator) -> Result<Self> {
        let (g, v) = (left.dim_left(), left.dim_right());
        let ok = left.dim_out() == v
            && right.dim_left() == v
            && right.dim_right() == g
            && right.dim_out() == v
            && t_v.is_square()
            && t_v.dim_in() == v;
        if !ok {
            return Err(Error::Shape(format!(
                "inconsistent representation shapes: left {}x{}->{}, right {}x{}->{}, T_V {}x{}",
                left.dim_left(),
                left.dim_right(),
                left.dim_out(),
                right.dim_left(),
                right.dim_right(),
                right.dim_out(),
                t_v.dim_out(),
                t_v.dim_in()
            )));
        }
        Ok(Representation { left, right, t_v })
    }

    /// Zero actions on a `dim_v`-dimensional space with the given operator.
    pub fn trivial(dim_g: usize, t_v: LinearOperator) -> Self {
        let v = t_v.dim_in();
        Representation { left: BilinearMap::zeros(dim_g, v, v), right: BilinearMap::zeros(v, dim_g, v), t_v }
    }

    pub fn dim_g(&self) -> usize {
        self.left.dim_left()
    }

    pub fn dim_v(&self) -> usize {
        self.t_v.dim_in()
    }

    pub fn left(&self) -> &BilinearMap {
        &self.left
    }

    pub fn right(&self) -> &BilinearMap {
        &self.right
    }

    pub fn operator(&self) -> &LinearOperator {
        &self.t_v
    }

    /// `l_V(x, u)`
    pub fn act_left(&self, x: &RatVector, u: &RatVector) -> RatVector {
        self.left.apply(x, u)
    }

    /// `r_V(u, x)`
    pub fn act_right(&self, u: &RatVector, x: &RatVector) -> RatVector {
        self.right.apply(u, x)
    }

    /// `V ⊕ W` with block-diagonal actions and operator.
    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert_eq!(self.dim_g(), other.dim_g());
        let (g, a, b) = (self.dim_g(), self.dim_v(), other.dim_v());
        let n = a + b;
        let mut left = BilinearMap::zeros(g, n, n);
        let mut right = BilinearMap::zeros(n, g, n);
        for i in 0..g {
            for (src, off, d) in [(self, 0, a), (other, a, b)] {
                for p in 0..d {
                    for q in 0..d {
                        *left.get_mut(i, off + p, off + q) = src.left.get(i, p, q).clone();
                        *right.get_mut(off + p, i, off + q) = src.right.get(p, i, q).clone();
                    }
                }
            }
        }
        let mut t = crate::linalg::RatMatrix::zeros(n, n);
        for (src, off, d) in [(self, 0, a), (other, a, b)] {
            for p in 0..d {
                for q in 0..d {
                    t[(off + p, off + q)] = src.t_v.matrix()[(p, q)].clone();
                }
            }
        }
        Representation { left, right, t_v: LinearOperator::new(t) }
    }

    /// Same representation in the basis of `V` given by the columns of `q⁻¹`.
    pub fn transport(&self, q: &LinearOperator, q_inv: &LinearOperator) -> Representation {
        let id = LinearOperator::identity(self.dim_g());
        Representation {
            left: self.left.precompose(&id, q_inv).postcompose(q),
            right: self.right.precompose(q_inv, &id).postcompose(q),
            t_v: q.compose(&self.t_v).compose(q_inv),
        }
    }
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

/// The three Leibniz representation identities on all basis triples `(x, y, u)`.
pub fn check_representation(a: &LeibnizAlgebra, r: &Representation) -> Result<Vec<Violation>> {
    check_shapes(a.dim(), r)?;
    let (g, v) = (a.dim(), r.dim_v());
    let b = a.bracket();
    let (l, rr) = (&r.left, &r.right);
    let mut out = Vec::new();
    for i in 0..g {
        for j in 0..g {
            let xy = b.on_basis(i, j);
            for u in 0..v {
                let ly_u = l.on_basis(j, u);
                let lx_u = l.on_basis(i, u);
                let ru_y = rr.on_basis(u, j);
                let ru_x = rr.on_basis(u, i);

                let d1 = l.apply_left_basis(i, &ly_u).sub(&l.apply_right_basis(&xy, u)).sub(&l.apply_left_basis(j, &lx_u));
                record(&mut out, Law::RepLeftLeft, vec![i, j, u], d1);

                let ru_xy = rr.apply_left_basis(u, &xy);
                let d2 = l.apply_left_basis(i, &ru_y).sub(&rr.apply_right_basis(&lx_u, j)).sub(&ru_xy);
                record(&mut out, Law::RepLeftRight, vec![i, j, u], d2);

                let d3 = ru_xy.sub(&rr.apply_right_basis(&ru_x, j)).sub(&l.apply_left_basis(i, &ru_y));
                record(&mut out, Law::RepRightRight, vec![i, j, u], d3);
            }
        }
    }
    Ok(out)
}

/// The two operator compatibilities on all basis pairs `(x, u)`:
/// `l(Tx, T_V u) = T_V(l(Tx, u) + l(x, T_V u))` and
/// `r(T_V u, Tx) = T_V(r(T_V u, x) + r(u, Tx))`.
pub fn check_rb_representation(a: &RBLeibnizAlgebra, r: &Representation) -> Result<Vec<Violation>> {
    check_shapes(a.dim(), r)?;
    let (g, v) = (a.dim(), r.dim_v());
    let t = a.operator();
    let tv = &r.t_v;
    let mut out = Vec::new();
    for i in 0..g {
        let x = RatVector::unit(g, i);
        let tx = t.column(i);
        for u in 0..v {
            let uu = RatVector::unit(v, u);
            let tu = tv.column(u);
            let lhs = r.act_left(&tx, &tu);
            let rhs = tv.apply(&r.act_left(&tx, &uu).add(&r.act_left(&x, &tu)));
            record(&mut out, Law::RbRepLeft, vec![i, u], lhs.sub(&rhs));
            let lhs = r.act_right(&tu, &tx);
            let rhs = tv.apply(&r.act_right(&tu, &x).add(&r.act_right(&uu, &tx)));
            record(&mut out, Law::RbRepRight, vec![i, u], lhs.sub(&rhs));
        }
    }
    Ok(out)
}

/// Runs both checkers and turns any violation into an error.
pub fn validate_rb_representation(a: &RBLeibnizAlgebra, r: &Representation) -> Result<()> {
    let mut v = check_representation(a.algebra(), r)?;
    v.extend(check_rb_representation(a, r)?);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Axioms { what: "representation", violations: v })
    }
}

/// `V = g`, both actions given by the bracket, `T_V = T`.
pub fn self_representation(a: &RBLeibnizAlgebra) -> Representation {
    Representation { left: a.bracket().clone(), right: a.bracket().clone(), t_v: a.operator().clone() }
}

/// `l'(x,u) = l(Tx,u) - T_V l(x,u)`, `r'(u,x) = r(u,Tx) - T_V r(u,x)`; a
/// representation of the star algebra with the same `T_V`.
pub fn induced_representation(a: &RBLeibnizAlgebra, r: &Representation) -> Result<Representation> {
    validate_rb_representation(a, r)?;
    let out = induced_actions(a, r);
    let star = induced_bracket_star(a);
    if let Err(e) = validate_rb_representation(&star, &out) {
        return Err(Error::Internal(format!("induced representation failed validation: {e}")));
    }
    Ok(out)
}

pub(crate) fn induced_actions(a: &RBLeibnizAlgebra, r: &Representation) -> Representation {
    let t = a.operator();
    let tv = &r.t_v;
    let id_g = LinearOperator::identity(a.dim());
    let id_v = LinearOperator::identity(r.dim_v());
    let left = r.left.precompose(t, &id_v).sub(&r.left.postcompose(tv));
    let right = r.right.precompose(&id_v, t).sub(&r.right.postcompose(tv));
    debug_assert_eq!(id_g.dim_in(), left.dim_left());
    Representation { left, right, t_v: tv.clone() }
}

/// Dual representation on `V*` (dual basis):
/// `l*(x,f)(u) = -f(l(x,u))`, `r*(f,x)(u) = f(l(x,u) + r(u,x))`, operator `-T_Vᵀ`.
pub fn dual_representation(a: &RBLeibnizAlgebra, r: &Representation) -> Result<Representation> {
    validate_rb_representation(a, r)?;
    let (g, v) = (a.dim(), r.dim_v());
    let mut left = BilinearMap::zeros(g, v, v);
    let mut right = BilinearMap::zeros(v, g, v);
    for i in 0..g {
        for b in 0..v {
            for c in 0..v {
                // coefficient of f_c in l*(e_i, f_b) is l*(e_i, f_b)(v_c)
                let l_icb = r.left.get(i, c, b);
                *left.get_mut(i, b, c) = -l_icb.clone();
                let val = l_icb + r.right.get(c, i, b);
                if !val.is_zero() {
                    *right.get_mut(b, i, c) = val;
                }
            }
        }
    }
    let t_v = LinearOperator::new(r.t_v.matrix().transpose().neg());
    Ok(Representation { left, right, t_v })
}
