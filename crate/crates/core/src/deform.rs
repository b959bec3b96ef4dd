//! Truncated formal deformations `(μ_t, T_t)` and formal isomorphisms,
//! checked coefficient by coefficient.

use num_traits::One;

use crate::algebra::{BilinearMap, LeibnizAlgebra, LinearOperator, RBLeibnizAlgebra};
use crate::cohomology::{
    d_matrix, degree_summary, delta_matrix, phi_matrix, same_class, Cochain, CochainSpace, ComplexKind, DegreeSummary,
};
use crate::error::{Error, Result};
use crate::linalg::{solve, RatVector, Rational};
use crate::par::{map_range, Exec};
use crate::repr::self_representation;
use crate::violation::{Law, Violation};

/// Coefficients `μ_0..μ_N` and `T_0..T_N`; `(μ_0, T_0)` is the base algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation {
    mu: Vec<BilinearMap>,
    t: Vec<LinearOperator>,
}

impl TruncatedDeformation {
    pub fn new(mu: Vec<BilinearMap>, t: Vec<LinearOperator>) -> Result<Self> {
        if mu.is_empty() || mu.len() != t.len() {
            return Err(Error::Shape(format!(
                "need equally many bracket and operator coefficients, got {} and {}",
                mu.len(),
                t.len()
            )));
        }
        let n = mu[0].dim_out();
        let bad_mu = mu.iter().any(|m| !m.is_square() || m.dim_out() != n);
        let bad_t = t.iter().any(|x| !x.is_square() || x.dim_in() != n);
        if bad_mu || bad_t {
            return Err(Error::Shape(format!("all coefficients must act on a {n}-dimensional space")));
        }
        Ok(TruncatedDeformation { mu, t })
    }

    /// Base algebra followed by the given higher coefficients `(μ_i, T_i)`, `i >= 1`.
    pub fn from_base(a: &RBLeibnizAlgebra, mu: Vec<BilinearMap>, t: Vec<LinearOperator>) -> Result<Self> {
        let mut all_mu = vec![a.bracket().clone()];
        all_mu.extend(mu);
        let mut all_t = vec![a.operator().clone()];
        all_t.extend(t);
        Self::new(all_mu, all_t)
    }

    /// `μ_i = 0`, `T_i = 0` for `1 <= i <= order`.
    pub fn constant(a: &RBLeibnizAlgebra, order: usize) -> Self {
        let n = a.dim();
        let mut mu = vec![a.bracket().clone()];
        mu.resize(order + 1, BilinearMap::square(n));
        let mut t = vec![a.operator().clone()];
        t.resize(order + 1, LinearOperator::zeros(n, n));
        TruncatedDeformation { mu, t }
    }

    pub fn order(&self) -> usize {
        self.mu.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.mu[0].dim_out()
    }

    pub fn mu(&self) -> &[BilinearMap] {
        &self.mu
    }

    pub fn t(&self) -> &[LinearOperator] {
        &self.t
    }

    /// `(μ_0, T_0)` as an algebra, without validation.
    pub fn base(&self) -> RBLeibnizAlgebra {
        RBLeibnizAlgebra::new_unchecked(LeibnizAlgebra::new_unchecked(self.mu[0].clone()), self.t[0].clone())
    }

    fn mu_at(&self, i: usize) -> Option<&BilinearMap> {
        self.mu.get(i)
    }

    fn t_at(&self, i: usize) -> Option<&LinearOperator> {
        self.t.get(i)
    }
}

/// Coefficients `ψ_0 = 1, ψ_1, .., ψ_N` of a formal isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedIsomorphism {
    psi: Vec<LinearOperator>,
}

impl TruncatedIsomorphism {
    pub fn new(psi: Vec<LinearOperator>) -> Result<Self> {
        let Some(first) = psi.first() else {
            return Err(Error::Shape("an isomorphism needs at least ψ_0".into()));
        };
        if *first != LinearOperator::identity(first.dim_in()) {
            return Err(Error::Precondition("ψ_0 must be the identity".into()));
        }
        let n = first.dim_in();
        if psi.iter().any(|p| !p.is_square() || p.dim_in() != n) {
            return Err(Error::Shape(format!("all ψ_i must be {n}x{n}")));
        }
        Ok(TruncatedIsomorphism { psi })
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        let mut psi = vec![LinearOperator::identity(dim)];
        psi.resize(order + 1, LinearOperator::zeros(dim, dim));
        TruncatedIsomorphism { psi }
    }

    /// `1 + t ψ_1`.
    pub fn first_order(psi1: LinearOperator) -> Self {
        let n = psi1.dim_in();
        TruncatedIsomorphism { psi: vec![LinearOperator::identity(n), psi1] }
    }

    pub fn order(&self) -> usize {
        self.psi.len() - 1
    }

    pub fn psi(&self) -> &[LinearOperator] {
        &self.psi
    }

    fn at(&self, i: usize) -> Option<&LinearOperator> {
        self.psi.get(i)
    }

    /// Coefficients of `ψ_t⁻¹` up to `order`.
    fn inverse_series(&self, order: usize) -> Vec<LinearOperator> {
        let n = self.psi[0].dim_in();
        let mut inv = vec![LinearOperator::identity(n)];
        for k in 1..=order {
            let mut acc = LinearOperator::zeros(n, n);
            for i in 1..=k {
                if let Some(p) = self.at(i) {
                    acc = acc.sub(&p.compose(&inv[k - i]));
                }
            }
            inv.push(acc);
        }
        inv
    }
}

fn leibniz_defect(d: &TruncatedDeformation, n: usize, x: usize, y: usize, z: usize) -> RatVector {
    let dim = d.dim();
    let mut acc = RatVector::zeros(dim);
    for i in 0..=n {
        let (Some(mi), Some(mj)) = (d.mu_at(i), d.mu_at(n - i)) else {
            continue;
        };
        acc = acc.add(&mi.apply_left_basis(x, &mj.on_basis(y, z)));
        acc = acc.sub(&mi.apply_right_basis(&mj.on_basis(x, y), z));
        acc = acc.sub(&mi.apply_left_basis(y, &mj.on_basis(x, z)));
    }
    acc
}

fn operator_defect(d: &TruncatedDeformation, n: usize, x: usize, y: usize) -> RatVector {
    let dim = d.dim();
    let ex = RatVector::unit(dim, x);
    let ey = RatVector::unit(dim, y);
    let mut acc = RatVector::zeros(dim);
    for i in 0..=n {
        for j in 0..=n - i {
            let k = n - i - j;
            // μ_i(T_j x, T_k y)
            if let (Some(m), Some(tj), Some(tk)) = (d.mu_at(i), d.t_at(j), d.t_at(k)) {
                acc = acc.add(&m.apply(&tj.column(x), &tk.column(y)));
            }
            // T_i(μ_j(T_k x, y) + μ_j(x, T_k y))
            if let (Some(ti), Some(m), Some(tk)) = (d.t_at(i), d.mu_at(j), d.t_at(k)) {
                let inner = m.apply(&tk.apply(&ex), &ey).add(&m.apply(&ex, &tk.apply(&ey)));
                acc = acc.sub(&ti.apply(&inner));
            }
        }
    }
    acc
}

fn degree_violations(d: &TruncatedDeformation, n: usize) -> Vec<Violation> {
    let dim = d.dim();
    let mut out = Vec::new();
    for x in 0..dim {
        for y in 0..dim {
            for z in 0..dim {
                let defect = leibniz_defect(d, n, x, y, z);
                if !defect.is_zero() {
                    out.push(Violation::new(Law::DeformBracket, vec![x, y, z], defect).at_degree(n));
                }
            }
        }
    }
    for x in 0..dim {
        for y in 0..dim {
            let defect = operator_defect(d, n, x, y);
            if !defect.is_zero() {
                out.push(Violation::new(Law::DeformOperator, vec![x, y], defect).at_degree(n));
            }
        }
    }
    out
}

/// Violations of the order-`n` bracket and operator equations for all
/// `0 <= n <= up_to`, in degree order.
pub fn check_deformation(d: &TruncatedDeformation, up_to: usize) -> Result<Vec<Violation>> {
    check_deformation_with(d, up_to, Exec::default())
}

pub fn check_deformation_with(d: &TruncatedDeformation, up_to: usize, exec: Exec) -> Result<Vec<Violation>> {
    if up_to > d.order() {
        return Err(Error::Precondition(format!(
            "cannot check degree {up_to} of a deformation truncated at order {}",
            d.order()
        )));
    }
    Ok(map_range(exec, up_to + 1, |n| degree_violations(d, n)).into_iter().flatten().collect())
}

/// Left-hand minus right-hand sides of both equations at order `N + 1`,
/// with all coefficients beyond `N` taken as zero: a trilinear and a
/// bilinear map, as cochains. Purely diagnostic.
pub fn order_residual(d: &TruncatedDeformation) -> (Cochain, Cochain) {
    let n = d.order() + 1;
    let dim = d.dim();
    let mut tri = Vec::with_capacity(dim * dim * dim * dim);
    for x in 0..dim {
        for y in 0..dim {
            for z in 0..dim {
                tri.extend(leibniz_defect(d, n, x, y, z).into_entries());
            }
        }
    }
    let mut bi = Vec::with_capacity(dim * dim * dim);
    for x in 0..dim {
        for y in 0..dim {
            bi.extend(operator_defect(d, n, x, y).into_entries());
        }
    }
    let tri = Cochain::new(CochainSpace::new(ComplexKind::La, 3, dim, dim), RatVector::new(tri)).expect("sizes match");
    let bi = Cochain::new(CochainSpace::new(ComplexKind::Rbo, 2, dim, dim), RatVector::new(bi)).expect("sizes match");
    (tri, bi)
}

/// The first nonzero pair `(μ_n, T_n)`, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Infinitesimal {
    pub degree: usize,
    pub mu: BilinearMap,
    pub t: LinearOperator,
}

impl Infinitesimal {
    /// `(μ_n, T_n)` in `C²_RBLA = C²_LA ⊕ C¹_RBO`.
    pub fn cochain(&self) -> Cochain {
        let alpha = Cochain::from_bilinear(ComplexKind::La, &self.mu).expect("square bracket");
        let beta = Cochain::from_operator(ComplexKind::Rbo, &self.t).expect("square operator");
        Cochain::pair(&alpha, &beta).expect("matching dimensions")
    }
}

pub fn infinitesimal(d: &TruncatedDeformation) -> Option<Infinitesimal> {
    (1..=d.order()).find(|&n| !d.mu[n].is_zero() || !d.t[n].is_zero()).map(|n| Infinitesimal {
        degree: n,
        mu: d.mu[n].clone(),
        t: d.t[n].clone(),
    })
}

fn check_base(a: &RBLeibnizAlgebra, d: &TruncatedDeformation) -> Result<()> {
    if d.mu[0] != *a.bracket() || d.t[0] != *a.operator() {
        return Err(Error::Precondition("deformation does not start at the given algebra".into()));
    }
    Ok(())
}

/// Whether the infinitesimal `(μ_n, T_n)` satisfies `d²(μ_n, T_n) = 0`
/// (self-representation coefficients). A constant deformation is vacuously
/// fine; failing equations below degree `n` are an error.
pub fn check_infinitesimal_cocycle(a: &RBLeibnizAlgebra, d: &TruncatedDeformation) -> Result<bool> {
    check_base(a, d)?;
    let Some(inf) = infinitesimal(d) else {
        return Ok(true);
    };
    let earlier = check_deformation(d, inf.degree - 1)?;
    if !earlier.is_empty() {
        return Err(Error::Axioms { what: "deformation", violations: earlier });
    }
    let s = self_representation(a);
    Ok(d_matrix(a, &s, 2)?.mul_vec(inf.cochain().coords())?.is_zero())
}

/// Violations of `Σ ψ_i μ'_j = Σ μ_i(ψ_j ·, ψ_k ·)` and
/// `Σ ψ_i T'_j = Σ T_i ψ_j` for orders `0..=up_to`, where `iso` goes from
/// `d1 = (μ, T)` to `d2 = (μ', T')`.
pub fn check_equivalence(
    a: &RBLeibnizAlgebra,
    d1: &TruncatedDeformation,
    d2: &TruncatedDeformation,
    iso: &TruncatedIsomorphism,
    up_to: usize,
) -> Result<Vec<Violation>> {
    check_base(a, d1)?;
    check_base(a, d2)?;
    for d in [d1, d2] {
        let v = check_deformation(d, up_to)?;
        if !v.is_empty() {
            return Err(Error::Axioms { what: "deformation", violations: v });
        }
    }
    let dim = a.dim();
    let zero_op = LinearOperator::zeros(dim, dim);
    let psi = |i: usize| iso.at(i).unwrap_or(&zero_op);
    let mut out = Vec::new();
    for n in 0..=up_to {
        for x in 0..dim {
            for y in 0..dim {
                let mut defect = RatVector::zeros(dim);
                for i in 0..=n {
                    defect = defect.add(&psi(i).apply(&d2.mu[n - i].on_basis(x, y)));
                    for j in 0..=n - i {
                        let k = n - i - j;
                        defect = defect.sub(&d1.mu[i].apply(&psi(j).column(x), &psi(k).column(y)));
                    }
                }
                if !defect.is_zero() {
                    out.push(Violation::new(Law::EquivalenceBracket, vec![x, y], defect).at_degree(n));
                }
            }
        }
        let mut lhs = zero_op.clone();
        for i in 0..=n {
            lhs = lhs.add(&psi(i).compose(&d2.t[n - i])).sub(&d1.t[i].compose(psi(n - i)));
        }
        for j in 0..dim {
            let col = lhs.column(j);
            if !col.is_zero() {
                out.push(Violation::new(Law::EquivalenceOperator, vec![j], col).at_degree(n));
            }
        }
    }
    Ok(out)
}

/// The deformation `ψ_t⁻¹ ∘ μ_t ∘ (ψ_t ⊗ ψ_t)`, `ψ_t⁻¹ ∘ T_t ∘ ψ_t`,
/// truncated at the order of `d`; `iso` goes from `d` to the result.
pub fn transform(d: &TruncatedDeformation, iso: &TruncatedIsomorphism) -> Result<TruncatedDeformation> {
    if iso.psi[0].dim_in() != d.dim() {
        return Err(Error::Shape("isomorphism and deformation act on different spaces".into()));
    }
    let order = d.order();
    let dim = d.dim();
    let zero_op = LinearOperator::zeros(dim, dim);
    let psi = |i: usize| iso.at(i).unwrap_or(&zero_op).clone();
    let inv = iso.inverse_series(order);
    // μ_t ∘ (ψ_t ⊗ ψ_t) and T_t ∘ ψ_t
    let mut inner_mu = Vec::with_capacity(order + 1);
    let mut inner_t = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut m = BilinearMap::square(dim);
        let mut t = zero_op.clone();
        for i in 0..=n {
            for j in 0..=n - i {
                m = m.add(&d.mu[i].precompose(&psi(j), &psi(n - i - j)));
            }
            t = t.add(&d.t[i].compose(&psi(n - i)));
        }
        inner_mu.push(m);
        inner_t.push(t);
    }
    let mut mu = Vec::with_capacity(order + 1);
    let mut t = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut m = BilinearMap::square(dim);
        let mut op = zero_op.clone();
        for i in 0..=n {
            m = m.add(&inner_mu[n - i].postcompose(&inv[i]));
            op = op.add(&inv[i].compose(&inner_t[n - i]));
        }
        mu.push(m);
        t.push(op);
    }
    TruncatedDeformation::new(mu, t)
}

/// Whether two deformations have cohomologous infinitesimals. A missing
/// infinitesimal counts as zero in the other's degree.
pub fn class_of_infinitesimals_equal(
    a: &RBLeibnizAlgebra,
    d1: &TruncatedDeformation,
    d2: &TruncatedDeformation,
) -> Result<bool> {
    check_base(a, d1)?;
    check_base(a, d2)?;
    let (i1, i2) = (infinitesimal(d1), infinitesimal(d2));
    let zero_space = CochainSpace::new(ComplexKind::Rbla, 2, a.dim(), a.dim());
    let (z1, z2) = match (&i1, &i2) {
        (None, None) => return Ok(true),
        (Some(x), Some(y)) if x.degree != y.degree => return Err(Error::DegreeMismatch(x.degree, y.degree)),
        (Some(x), Some(y)) => (x.cochain(), y.cochain()),
        (Some(x), None) => (x.cochain(), Cochain::zero(zero_space)),
        (None, Some(y)) => (Cochain::zero(zero_space), y.cochain()),
    };
    same_class(a, &self_representation(a), 2, ComplexKind::Rbla, &z1, &z2)
}

/// Ranks showing `H²_RBLA(g, g) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityCertificate {
    pub degree_two: DegreeSummary,
}

/// Present exactly when the second combined cohomology with
/// self-representation coefficients vanishes.
pub fn rigidity_certificate(a: &RBLeibnizAlgebra) -> Result<Option<RigidityCertificate>> {
    let s = self_representation(a);
    let summary = degree_summary(a, &s, 2, ComplexKind::Rbla, Exec::default())?;
    Ok((summary.dimension() == 0).then_some(RigidityCertificate { degree_two: summary }))
}

/// If `(μ_1, T_1) = d¹(ψ'_1, x)`, returns `ψ_1 = ψ'_1 + δ⁰(x)`, for which
/// `μ_1 = δ¹ψ_1` and `T_1 = -φ¹ψ_1`. `None` when `(μ_1, T_1)` is not a
/// coboundary.
pub fn first_order_trivializer(a: &RBLeibnizAlgebra, d: &TruncatedDeformation) -> Result<Option<LinearOperator>> {
    check_base(a, d)?;
    if d.order() < 1 {
        return Err(Error::Precondition("deformation has no first-order term".into()));
    }
    let dim = a.dim();
    let s = self_representation(a);
    let z = Infinitesimal { degree: 1, mu: d.mu[1].clone(), t: d.t[1].clone() }.cochain();
    let Some(pre) = solve(&d_matrix(a, &s, 1)?, z.coords())? else {
        return Ok(None);
    };
    let split = dim * dim;
    let psi_prime = RatVector::new(pre.entries()[..split].to_vec());
    let x = RatVector::new(pre.entries()[split..].to_vec());
    let shift = delta_matrix(a.algebra(), &s, 0)?.mul_vec(&x)?;
    let psi1 = Cochain::new(CochainSpace::new(ComplexKind::La, 1, dim, dim), psi_prime.add(&shift))?;
    Ok(Some(psi1.to_operator()?))
}

/// The `(δ¹ψ, -φ¹ψ)` pair for a linear map `ψ: g → g`.
pub fn coboundary_of_map(a: &RBLeibnizAlgebra, psi: &LinearOperator) -> Result<(BilinearMap, LinearOperator)> {
    let s = self_representation(a);
    let c = Cochain::from_operator(ComplexKind::La, psi)?;
    let mu = delta_matrix(a.algebra(), &s, 1)?.mul_vec(c.coords())?;
    let t = phi_matrix(a, &s, 1)?.mul_vec(c.coords())?.neg();
    let dim = a.dim();
    let mu = Cochain::new(CochainSpace::new(ComplexKind::La, 2, dim, dim), mu)?.to_bilinear()?;
    let t = Cochain::new(CochainSpace::new(ComplexKind::Rbo, 1, dim, dim), t)?.to_operator()?;
    Ok((mu, t))
}

/// `1 - t ψ_1`, the isomorphism that removes a trivialized first-order term.
pub fn trivializing_isomorphism(psi1: &LinearOperator) -> TruncatedIsomorphism {
    TruncatedIsomorphism::first_order(psi1.scale(&-Rational::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_leibniz, check_rota_baxter};
    use crate::linalg::kernel_basis;
    use crate::samples;
    use num_traits::Zero;

    fn one() -> Rational {
        Rational::one()
    }

    #[test]
    fn constant_deformation_is_fine() {
        let a = samples::solvable3_rb(one(), one());
        let d = TruncatedDeformation::constant(&a, 3);
        assert!(check_deformation(&d, 3).unwrap().is_empty());
        assert!(infinitesimal(&d).is_none());
        assert!(check_infinitesimal_cocycle(&a, &d).unwrap());
        assert!(check_deformation(&d, 4).is_err());
    }

    #[test]
    fn order_zero_matches_axioms() {
        let bad = BilinearMap::from_i64(2, &[(0, 0, 1, 1), (0, 1, 0, 1)]);
        let d = TruncatedDeformation::new(vec![bad.clone()], vec![LinearOperator::zeros(2, 2)]).unwrap();
        assert_eq!(check_deformation(&d, 0).unwrap().is_empty(), check_leibniz(&bad).unwrap().is_empty());
        let plane = samples::plane_rb(one());
        let d = TruncatedDeformation::new(vec![plane.bracket().clone()], vec![LinearOperator::identity(2)]).unwrap();
        let axioms = check_rota_baxter(plane.algebra(), &LinearOperator::identity(2)).unwrap();
        assert!(!axioms.is_empty());
        assert!(!check_deformation(&d, 0).unwrap().is_empty());
    }

    #[test]
    fn plane_with_t_one_equal_to_t() {
        let a = samples::plane_rb(one());
        let mut t = vec![a.operator().clone()];
        t.resize(3, LinearOperator::zeros(2, 2));
        let d = TruncatedDeformation::from_base(&a, vec![BilinearMap::square(2); 3], t).unwrap();
        assert_eq!(d.order(), 3);
        assert!(check_deformation(&d, 3).unwrap().is_empty());
        let inf = infinitesimal(&d).unwrap();
        assert_eq!(inf.degree, 1);
        assert!(inf.mu.is_zero());
        assert!(check_infinitesimal_cocycle(&a, &d).unwrap());
    }

    #[test]
    fn infinitesimal_degree() {
        let a = samples::plane_rb(one());
        let mu2 = BilinearMap::from_i64(2, &[(1, 1, 0, 1)]);
        let d = TruncatedDeformation::from_base(
            &a,
            vec![BilinearMap::square(2), mu2.clone()],
            vec![LinearOperator::zeros(2, 2); 2],
        )
        .unwrap();
        let inf = infinitesimal(&d).unwrap();
        assert_eq!(inf.degree, 2);
        assert_eq!(inf.mu, mu2);
    }

    #[test]
    fn coboundary_pairs_are_equivalent() {
        let a = samples::solvable3_rb(one(), one());
        let psi1 = LinearOperator::from_i64(&[&[1, 0, 2], &[0, -1, 0], &[3, 0, 0]]);
        let (dmu, dt) = coboundary_of_map(&a, &psi1).unwrap();
        // μ_t = (1 + t)μ, T_t = (1 + t)T is a deformation of any algebra
        let d1 = TruncatedDeformation::from_base(&a, vec![a.bracket().clone()], vec![a.operator().clone()]).unwrap();
        assert!(check_deformation(&d1, 1).unwrap().is_empty());
        let d2 = TruncatedDeformation::from_base(&a, vec![d1.mu()[1].add(&dmu)], vec![d1.t()[1].add(&dt)]).unwrap();
        let iso = TruncatedIsomorphism::first_order(psi1);
        assert!(check_equivalence(&a, &d1, &d2, &iso, 1).unwrap().is_empty());
        assert!(class_of_infinitesimals_equal(&a, &d1, &d2).unwrap());
        assert_eq!(transform(&d1, &iso).unwrap(), d2);
    }

    #[test]
    fn non_coboundary_perturbation_is_detected() {
        let a = samples::plane_rb(one());
        let s = self_representation(&a);
        let d2m = d_matrix(&a, &s, 2).unwrap();
        let d1m = d_matrix(&a, &s, 1).unwrap();
        // a cocycle outside the image of d¹ exists since H² = 1
        let z = kernel_basis(&d2m)
            .into_iter()
            .find(|z| solve(&d1m, z).unwrap().is_none())
            .expect("nontrivial class");
        let c = Cochain::new(CochainSpace::new(ComplexKind::Rbla, 2, 2, 2), z).unwrap();
        let (alpha, beta) = c.split().unwrap();
        let d_pert =
            TruncatedDeformation::from_base(&a, vec![alpha.to_bilinear().unwrap()], vec![beta.unwrap().to_operator().unwrap()])
                .unwrap();
        let d0 = TruncatedDeformation::constant(&a, 1);
        let iso = TruncatedIsomorphism::identity(2, 1);
        assert!(!check_equivalence(&a, &d0, &d_pert, &iso, 1).unwrap().is_empty());
        assert!(!class_of_infinitesimals_equal(&a, &d0, &d_pert).unwrap());
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let a = samples::plane_rb(one());
        let d1 = TruncatedDeformation::from_base(
            &a,
            vec![BilinearMap::square(2); 2],
            vec![a.operator().clone(), LinearOperator::zeros(2, 2)],
        )
        .unwrap();
        let d2 = TruncatedDeformation::from_base(
            &a,
            vec![BilinearMap::square(2); 2],
            vec![LinearOperator::zeros(2, 2), a.operator().clone()],
        )
        .unwrap();
        assert!(matches!(class_of_infinitesimals_equal(&a, &d1, &d2), Err(Error::DegreeMismatch(1, 2))));
    }

    #[test]
    fn rigidity_examples() {
        let ab = RBLeibnizAlgebra::from_parts(BilinearMap::square(2), LinearOperator::zeros(2, 2)).unwrap();
        assert!(rigidity_certificate(&ab).unwrap().is_none());
        let empty = RBLeibnizAlgebra::from_parts(BilinearMap::square(0), LinearOperator::zeros(0, 0)).unwrap();
        assert!(rigidity_certificate(&empty).unwrap().is_some());
        assert!(rigidity_certificate(&samples::plane_rb(one())).unwrap().is_none());
    }

    #[test]
    fn first_order_step_removes_coboundary_term() {
        let a = samples::solvable3_rb(one(), one());
        let psi = LinearOperator::from_i64(&[&[0, 1, 0], &[2, 0, 0], &[0, 0, 1]]);
        let (mu1, t1) = coboundary_of_map(&a, &psi).unwrap();
        let d = TruncatedDeformation::from_base(&a, vec![mu1.clone()], vec![t1.clone()]).unwrap();
        let psi1 = first_order_trivializer(&a, &d).unwrap().expect("coboundary");
        let (m, t) = coboundary_of_map(&a, &psi1).unwrap();
        assert_eq!((m, t), (mu1, t1));
        let bar = transform(&d, &trivializing_isomorphism(&psi1)).unwrap();
        assert!(bar.mu()[1].is_zero() && bar.t()[1].is_zero());
    }

    #[test]
    fn residual_of_constant_is_zero() {
        let a = samples::plane_rb(one());
        let (x, y) = order_residual(&TruncatedDeformation::constant(&a, 2));
        assert!(x.is_zero() && y.is_zero());
        let d = TruncatedDeformation::from_base(&a, vec![BilinearMap::from_i64(2, &[(1, 1, 1, 1)])], vec![LinearOperator::zeros(2, 2)]).unwrap();
        let (x, _) = order_residual(&d);
        assert!(x.coords().iter().any(|c| !c.is_zero()));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(16))]

            #[test]
            fn coboundary_perturbations_stay_in_class(seed in any::<u64>()) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let a = samples::random_rb_algebra(&mut rng);
                let s = self_representation(&a);
                let z = samples::random_cocycle(&mut rng, &a, &s);
                let (alpha, beta) = z.split().unwrap();
                let d1 = TruncatedDeformation::from_base(
                    &a,
                    vec![alpha.to_bilinear().unwrap()],
                    vec![beta.unwrap().to_operator().unwrap()],
                ).unwrap();
                prop_assert!(check_deformation(&d1, 1).unwrap().is_empty());
                prop_assert!(check_infinitesimal_cocycle(&a, &d1).unwrap());
                let psi1 = samples::random_operator(&mut rng, a.dim(), a.dim(), 2);
                let iso = TruncatedIsomorphism::first_order(psi1);
                let d2 = transform(&d1, &iso).unwrap();
                prop_assert!(check_equivalence(&a, &d1, &d2, &iso, 1).unwrap().is_empty());
                prop_assert!(check_infinitesimal_cocycle(&a, &d2).unwrap());
                prop_assert!(class_of_infinitesimals_equal(&a, &d1, &d2).unwrap());
            }
        }
    }
}
