//! Abelian extensions `0 → V → ĝ → g → 0` of Rota-Baxter Leibniz algebras,
//! their sections and the `(ψ, χ)` cocycles they determine.

use num_traits::One;

use crate::algebra::{check_leibniz, check_morphism, check_rota_baxter, BilinearMap, LinearOperator, RBLeibnizAlgebra};
use crate::cohomology::{same_class, Cochain, ComplexKind};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, inverse, solve, RatMatrix, RatVector, Rational};
use crate::repr::{check_rb_representation, check_representation, Representation};
use crate::violation::{record, Law, Violation};

/// Raw extension data: the total algebra `(ĝ, T̂)`, the fiber operator
/// `T_V`, the inclusion `i: V → ĝ`, the projection `p: ĝ → g` and the base
/// `(g, T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianExtension {
    total: RBLeibnizAlgebra,
    fiber_operator: LinearOperator,
    inclusion: LinearOperator,
    projection: LinearOperator,
    base: RBLeibnizAlgebra,
    /// `(iᵀ i)⁻¹ iᵀ`, present when `i` is injective
    left_inverse: Option<LinearOperator>,
}

impl AbelianExtension {
    /// Checks shapes only; see [`check_extension`] for the axioms.
    pub fn new(
        total: RBLeibnizAlgebra,
        fiber_operator: LinearOperator,
        inclusion: LinearOperator,
        projection: LinearOperator,
        base: RBLeibnizAlgebra,
    ) -> Result<Self> {
        let (dh, dv, dg) = (total.dim(), fiber_operator.dim_in(), base.dim());
        let ok = fiber_operator.is_square()
            && inclusion.dim_in() == dv
            && inclusion.dim_out() == dh
            && projection.dim_in() == dh
            && projection.dim_out() == dg;
        if !ok {
            return Err(Error::Shape(format!(
                "extension maps do not fit: total {dh}, fiber {dv}, base {dg}, i {}x{}, p {}x{}",
                inclusion.dim_out(),
                inclusion.dim_in(),
                projection.dim_out(),
                projection.dim_in()
            )));
        }
        let it = inclusion.matrix().transpose();
        let left_inverse = it
            .mul(inclusion.matrix())
            .ok()
            .and_then(|g| inverse(&g))
            .map(|g| LinearOperator::new(g.mul(&it).expect("shapes match")));
        Ok(AbelianExtension { total, fiber_operator, inclusion, projection, base, left_inverse })
    }

    /// `ĝ = g ⊕ V` with `[(x,u),(y,v)] = ([x,y], l(x,v) + r(u,y) + ψ(x,y))`
    /// and `T̂(x,u) = (Tx, T_V u + χ(x))`.
    pub fn from_cocycle(base: &RBLeibnizAlgebra, r: &Representation, psi: &BilinearMap, chi: &LinearOperator) -> Result<Self> {
        let (dg, dv) = (base.dim(), r.dim_v());
        if r.dim_g() != dg
            || (psi.dim_left(), psi.dim_right(), psi.dim_out()) != (dg, dg, dv)
            || (chi.dim_out(), chi.dim_in()) != (dv, dg)
        {
            return Err(Error::Shape("cocycle data does not match the base and representation".into()));
        }
        let n = dg + dv;
        let mut br = BilinearMap::square(n);
        for x in 0..dg {
            for y in 0..dg {
                for k in 0..dg {
                    *br.get_mut(x, y, k) = base.bracket().get(x, y, k).clone();
                }
                for k in 0..dv {
                    *br.get_mut(x, y, dg + k) = psi.get(x, y, k).clone();
                }
            }
            for u in 0..dv {
                for k in 0..dv {
                    *br.get_mut(x, dg + u, dg + k) = r.left().get(x, u, k).clone();
                    *br.get_mut(dg + u, x, dg + k) = r.right().get(u, x, k).clone();
                }
            }
        }
        let t = RatMatrix::block(
            base.operator().matrix(),
            &RatMatrix::zeros(dg, dv),
            chi.matrix(),
            r.operator().matrix(),
        )?;
        let total = RBLeibnizAlgebra::from_parts_unchecked(br, LinearOperator::new(t));
        let i = RatMatrix::vstack(&RatMatrix::zeros(dg, dv), &RatMatrix::identity(dv))?;
        let mut p = RatMatrix::zeros(dg, n);
        for k in 0..dg {
            p[(k, k)] = Rational::one();
        }
        AbelianExtension::new(total, r.operator().clone(), LinearOperator::new(i), LinearOperator::new(p), base.clone())
    }

    /// The split extension `g ⋉ V` with `T ⊕ T_V`.
    pub fn split(base: &RBLeibnizAlgebra, r: &Representation) -> Result<Self> {
        let (dg, dv) = (base.dim(), r.dim_v());
        Self::from_cocycle(base, r, &BilinearMap::zeros(dg, dg, dv), &LinearOperator::zeros(dv, dg))
    }

    /// The same extension with `ĝ` re-expressed through the isomorphism
    /// `xi`: total algebra transported, `i' = xi i`, `p' = p xi⁻¹`.
    pub fn transport(&self, xi: &LinearOperator, xi_inv: &LinearOperator) -> Result<Self> {
        AbelianExtension::new(
            self.total.transport(xi, xi_inv),
            self.fiber_operator.clone(),
            xi.compose(&self.inclusion),
            self.projection.compose(xi_inv),
            self.base.clone(),
        )
    }

    pub fn total(&self) -> &RBLeibnizAlgebra {
        &self.total
    }

    pub fn base(&self) -> &RBLeibnizAlgebra {
        &self.base
    }

    pub fn fiber_operator(&self) -> &LinearOperator {
        &self.fiber_operator
    }

    pub fn inclusion(&self) -> &LinearOperator {
        &self.inclusion
    }

    pub fn projection(&self) -> &LinearOperator {
        &self.projection
    }

    pub fn dim_v(&self) -> usize {
        self.fiber_operator.dim_in()
    }

    /// Coordinates `w` with `i(w) = value`; errors when `value ∉ i(V)`.
    pub fn fiber_coordinates(&self, value: &RatVector) -> Result<RatVector> {
        let l = self
            .left_inverse
            .as_ref()
            .ok_or_else(|| Error::Precondition("inclusion is not injective".into()))?;
        let w = l.apply(value);
        if self.inclusion.apply(&w) != *value {
            let shown: Vec<String> = value.iter().map(format_rational).collect();
            return Err(Error::EscapesFiber(format!("[{}]", shown.join(", "))));
        }
        Ok(w)
    }
}

/// A linear map `s: g → ĝ` with `p ∘ s = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    s: LinearOperator,
}

impl Section {
    pub fn new(e: &AbelianExtension, s: LinearOperator) -> Result<Self> {
        if s.dim_in() != e.base.dim() || s.dim_out() != e.total.dim() {
            return Err(Error::Shape("section has the wrong shape".into()));
        }
        let defect = e.projection.compose(&s).sub(&LinearOperator::identity(e.base.dim()));
        let mut v = Vec::new();
        for j in 0..e.base.dim() {
            record(&mut v, Law::SectionRightInverse, vec![j], defect.column(j));
        }
        if !v.is_empty() {
            return Err(Error::Axioms { what: "section", violations: v });
        }
        Ok(Section { s })
    }

    pub fn map(&self) -> &LinearOperator {
        &self.s
    }

    /// `s + i ∘ γ` for `γ: g → V`.
    pub fn shifted(&self, e: &AbelianExtension, gamma: &LinearOperator) -> Result<Section> {
        Section::new(e, self.s.add(&e.inclusion.compose(gamma)))
    }
}

/// A deterministic right inverse of `p`, column by column.
pub fn canonical_section(e: &AbelianExtension) -> Result<Section> {
    let dg = e.base.dim();
    let mut cols = Vec::with_capacity(dg);
    for j in 0..dg {
        let x = solve(e.projection.matrix(), &RatVector::unit(dg, j))?
            .ok_or_else(|| Error::Precondition("projection is not surjective".into()))?;
        cols.push(x);
    }
    Section::new(e, LinearOperator::new(RatMatrix::from_columns(e.total.dim(), &cols)))
}

fn scalar_defect(d: i64) -> RatVector {
    RatVector::new(vec![Rational::from_integer(d.into())])
}

/// Every failed extension axiom: dimensions, exactness, the abelian fiber,
/// `p` and `T̂` compatibilities, and the axioms of the total algebra.
pub fn check_extension(e: &AbelianExtension) -> Result<Vec<Violation>> {
    let (dh, dv, dg) = (e.total.dim(), e.dim_v(), e.base.dim());
    let i = &e.inclusion;
    let p = &e.projection;
    let mut out = Vec::new();
    if dh != dg + dv {
        out.push(Violation::new(Law::ExtensionShape, vec![dh, dg, dv], scalar_defect(dh as i64 - (dg + dv) as i64)));
    }
    let pi = p.compose(i);
    for u in 0..dv {
        record(&mut out, Law::ExtensionExactness, vec![u], pi.column(u));
    }
    let ri = i.rank();
    if ri != dv {
        out.push(Violation::new(Law::ExtensionInjective, vec![], scalar_defect((dv - ri) as i64)));
    }
    let rp = p.rank();
    if rp != dg {
        out.push(Violation::new(Law::ExtensionSurjective, vec![], scalar_defect((dg - rp) as i64)));
    }
    let hb = e.total.bracket();
    let icols: Vec<RatVector> = (0..dv).map(|u| i.column(u)).collect();
    for u in 0..dv {
        for v in 0..dv {
            record(&mut out, Law::ExtensionAbelianFiber, vec![u, v], hb.apply(&icols[u], &icols[v]));
        }
    }
    let pcols: Vec<RatVector> = (0..dh).map(|x| p.column(x)).collect();
    for x in 0..dh {
        for y in 0..dh {
            let lhs = p.apply(&hb.on_basis(x, y));
            let rhs = e.base.bracket().apply(&pcols[x], &pcols[y]);
            record(&mut out, Law::ExtensionProjectionBracket, vec![x, y], lhs.sub(&rhs));
        }
    }
    let fiber = e.total.operator().compose(i).sub(&i.compose(&e.fiber_operator));
    for u in 0..dv {
        record(&mut out, Law::ExtensionFiberOperator, vec![u], fiber.column(u));
    }
    let basesq = p.compose(e.total.operator()).sub(&e.base.operator().compose(p));
    for x in 0..dh {
        record(&mut out, Law::ExtensionBaseOperator, vec![x], basesq.column(x));
    }
    for mut v in check_leibniz(hb)? {
        v.law = Law::ExtensionTotalLeibniz;
        out.push(v);
    }
    for mut v in check_rota_baxter(e.total.algebra(), e.total.operator())? {
        v.law = Law::ExtensionTotalRotaBaxter;
        out.push(v);
    }
    Ok(out)
}

fn require_valid(e: &AbelianExtension) -> Result<()> {
    let v = check_extension(e)?;
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Axioms { what: "extension", violations: v })
    }
}

/// `l̄(x, u) = [s x, i u]`, `r̄(u, x) = [i u, s x]` in fiber coordinates,
/// with the fiber operator. Validated against the base algebra.
pub fn section_induced_actions(e: &AbelianExtension, s: &Section) -> Result<Representation> {
    require_valid(e)?;
    let (dg, dv) = (e.base.dim(), e.dim_v());
    let hb = e.total.bracket();
    let scols: Vec<RatVector> = (0..dg).map(|x| s.s.column(x)).collect();
    let icols: Vec<RatVector> = (0..dv).map(|u| e.inclusion.column(u)).collect();
    let mut left = BilinearMap::zeros(dg, dv, dv);
    let mut right = BilinearMap::zeros(dv, dg, dv);
    for (x, sx) in scols.iter().enumerate() {
        for (u, iu) in icols.iter().enumerate() {
            let l = e.fiber_coordinates(&hb.apply(sx, iu))?;
            let r = e.fiber_coordinates(&hb.apply(iu, sx))?;
            for k in 0..dv {
                *left.get_mut(x, u, k) = l[k].clone();
                *right.get_mut(u, x, k) = r[k].clone();
            }
        }
    }
    let rep = Representation::new(left, right, e.fiber_operator.clone())?;
    let mut bad = check_representation(e.base.algebra(), &rep)?;
    bad.extend(check_rb_representation(&e.base, &rep)?);
    if !bad.is_empty() {
        return Err(Error::Internal(format!(
            "section-induced actions fail {} representation identities",
            bad.len()
        )));
    }
    Ok(rep)
}

/// `ψ(x, y) = [s x, s y] - s[x, y]` and `χ(x) = T̂ s x - s T x`, in fiber
/// coordinates, as `(C²_LA, C¹_RBO)` cochains.
pub fn extension_cocycle(e: &AbelianExtension, s: &Section) -> Result<(Cochain, Cochain)> {
    require_valid(e)?;
    let (dg, dv) = (e.base.dim(), e.dim_v());
    let hb = e.total.bracket();
    let scols: Vec<RatVector> = (0..dg).map(|x| s.s.column(x)).collect();
    let mut psi = BilinearMap::zeros(dg, dg, dv);
    for x in 0..dg {
        for y in 0..dg {
            let value = hb.apply(&scols[x], &scols[y]).sub(&s.s.apply(&e.base.bracket().on_basis(x, y)));
            let w = e.fiber_coordinates(&value)?;
            for k in 0..dv {
                *psi.get_mut(x, y, k) = w[k].clone();
            }
        }
    }
    let chi_map = e.total.operator().compose(&s.s).sub(&s.s.compose(e.base.operator()));
    let mut chi = RatMatrix::zeros(dv, dg);
    for x in 0..dg {
        let w = e.fiber_coordinates(&chi_map.column(x))?;
        for k in 0..dv {
            chi[(k, x)] = w[k].clone();
        }
    }
    Ok((
        Cochain::from_bilinear(ComplexKind::La, &psi)?,
        Cochain::from_operator(ComplexKind::Rbo, &LinearOperator::new(chi))?,
    ))
}

/// The cocycle as a single element of `C²_RBLA`.
pub fn extension_cocycle_pair(e: &AbelianExtension, s: &Section) -> Result<Cochain> {
    let (psi, chi) = extension_cocycle(e, s)?;
    Cochain::pair(&psi, &chi)
}

/// Whether the cocycles of two sections are cohomologous.
pub fn sections_same_class(e: &AbelianExtension, s1: &Section, s2: &Section) -> Result<bool> {
    let r1 = section_induced_actions(e, s1)?;
    let r2 = section_induced_actions(e, s2)?;
    if r1 != r2 {
        return Err(Error::Internal("sections induce different actions".into()));
    }
    let z1 = extension_cocycle_pair(e, s1)?;
    let z2 = extension_cocycle_pair(e, s2)?;
    same_class(&e.base, &r1, 2, ComplexKind::Rbla, &z1, &z2)
}

/// Checks that `xi: ĝ_1 → ĝ_2` is an invertible morphism with
/// `xi ∘ i_1 = i_2` and `p_2 ∘ xi = p_1`.
pub fn check_extension_isomorphism(e1: &AbelianExtension, e2: &AbelianExtension, xi: &LinearOperator) -> Result<Vec<Violation>> {
    let mut out = check_morphism(&e1.total, &e2.total, xi)?;
    if !xi.is_invertible() {
        out.push(Violation::new(Law::ExtensionMapInvertible, vec![], scalar_defect((xi.dim_in() - xi.rank()) as i64)));
    }
    if e1.inclusion.dim_in() != e2.inclusion.dim_in() || e1.projection.dim_out() != e2.projection.dim_out() {
        return Err(Error::Shape("extensions have different fibers or bases".into()));
    }
    let inc = xi.compose(&e1.inclusion).sub(&e2.inclusion);
    for u in 0..inc.dim_in() {
        record(&mut out, Law::ExtensionMapInclusion, vec![u], inc.column(u));
    }
    let proj = e2.projection.compose(xi).sub(&e1.projection);
    for x in 0..proj.dim_in() {
        record(&mut out, Law::ExtensionMapProjection, vec![x], proj.column(x));
    }
    Ok(out)
}

/// Compares the classes of `e1` (canonical section `s_1`) and `e2`
/// (section `xi ∘ s_1`). `xi` must pass [`check_extension_isomorphism`].
pub fn extensions_same_class(e1: &AbelianExtension, e2: &AbelianExtension, xi: &LinearOperator) -> Result<bool> {
    if e1.base != e2.base {
        return Err(Error::Precondition("extensions of different base algebras".into()));
    }
    let v = check_extension_isomorphism(e1, e2, xi)?;
    if !v.is_empty() {
        return Err(Error::Axioms { what: "extension isomorphism", violations: v });
    }
    let s1 = canonical_section(e1)?;
    let s2 = Section::new(e2, xi.compose(&s1.s))?;
    let r1 = section_induced_actions(e1, &s1)?;
    let r2 = section_induced_actions(e2, &s2)?;
    if r1 != r2 {
        return Err(Error::Internal("isomorphic extensions induce different actions".into()));
    }
    let z1 = extension_cocycle_pair(e1, &s1)?;
    let z2 = extension_cocycle_pair(e2, &s2)?;
    same_class(&e1.base, &r1, 2, ComplexKind::Rbla, &z1, &z2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{d_matrix, CochainSpace};
    use crate::linalg::kernel_basis;
    use crate::repr::self_representation;
    use crate::samples;

    fn one() -> Rational {
        Rational::one()
    }

    fn plane_split() -> (RBLeibnizAlgebra, Representation, AbelianExtension) {
        let a = samples::plane_rb(one());
        let r = self_representation(&a);
        let e = AbelianExtension::split(&a, &r).unwrap();
        (a, r, e)
    }

    #[test]
    fn split_extension_is_valid() {
        let (_, _, e) = plane_split();
        assert!(check_extension(&e).unwrap().is_empty());
        let (psi, chi) = extension_cocycle(&e, &canonical_section(&e).unwrap()).unwrap();
        assert!(psi.is_zero() && chi.is_zero());
    }

    #[test]
    fn fiber_bracket_is_detected() {
        let (_, _, e) = plane_split();
        let mut br = e.total.bracket().clone();
        *br.get_mut(2, 3, 2) = one();
        let bad = AbelianExtension::new(
            RBLeibnizAlgebra::from_parts_unchecked(br, e.total.operator().clone()),
            e.fiber_operator.clone(),
            e.inclusion.clone(),
            e.projection.clone(),
            e.base.clone(),
        )
        .unwrap();
        let v = check_extension(&bad).unwrap();
        assert!(v.iter().any(|x| x.law == Law::ExtensionAbelianFiber));
    }

    #[test]
    fn operator_perturbation_is_detected() {
        let (_, _, e) = plane_split();
        let mut t = e.total.operator().matrix().clone();
        t[(0, 0)] = one();
        let bad = AbelianExtension::new(
            RBLeibnizAlgebra::from_parts_unchecked(e.total.bracket().clone(), LinearOperator::new(t)),
            e.fiber_operator.clone(),
            e.inclusion.clone(),
            e.projection.clone(),
            e.base.clone(),
        )
        .unwrap();
        assert!(check_extension(&bad).unwrap().iter().any(|x| x.law == Law::ExtensionBaseOperator));
    }

    #[test]
    fn split_section_recovers_actions() {
        let (_, r, e) = plane_split();
        let s = canonical_section(&e).unwrap();
        assert_eq!(section_induced_actions(&e, &s).unwrap(), r);
        let gamma = LinearOperator::from_i64(&[&[1, -2], &[0, 3]]);
        let s2 = s.shifted(&e, &gamma).unwrap();
        assert_eq!(section_induced_actions(&e, &s2).unwrap(), r);
        let zero = Representation::trivial(2, LinearOperator::zeros(1, 1));
        let a = samples::plane_rb(one());
        let ez = AbelianExtension::split(&a, &zero).unwrap();
        let rz = section_induced_actions(&ez, &canonical_section(&ez).unwrap()).unwrap();
        assert!(rz.left().is_zero() && rz.right().is_zero());
    }

    #[test]
    fn section_change_shifts_by_coboundary() {
        let (a, r, e) = plane_split();
        let s = canonical_section(&e).unwrap();
        let gamma = LinearOperator::from_i64(&[&[2, 1], &[-1, 0]]);
        let s2 = s.shifted(&e, &gamma).unwrap();
        let diff = extension_cocycle_pair(&e, &s2).unwrap().sub(&extension_cocycle_pair(&e, &s).unwrap()).unwrap();
        let g = Cochain::from_operator(ComplexKind::La, &gamma).unwrap();
        let g0 = Cochain::pair(&g, &Cochain::zero(CochainSpace::new(ComplexKind::Rbo, 0, 2, 2))).unwrap();
        let expect = d_matrix(&a, &r, 1).unwrap().mul_vec(g0.coords()).unwrap();
        assert_eq!(diff.coords(), &expect);
        assert!(sections_same_class(&e, &s, &s2).unwrap());
    }

    #[test]
    fn synthesized_extension_round_trips() {
        let a = samples::plane_rb(one());
        let r = self_representation(&a);
        let z = kernel_basis(&d_matrix(&a, &r, 2).unwrap());
        for zc in z {
            let c = Cochain::new(CochainSpace::new(ComplexKind::Rbla, 2, 2, 2), zc).unwrap();
            let (psi, chi) = c.split().unwrap();
            let e = AbelianExtension::from_cocycle(&a, &r, &psi.to_bilinear().unwrap(), &chi.unwrap().to_operator().unwrap())
                .unwrap();
            assert!(check_extension(&e).unwrap().is_empty());
            assert_eq!(extension_cocycle_pair(&e, &canonical_section(&e).unwrap()).unwrap(), c);
        }
    }

    #[test]
    fn non_cocycle_gives_invalid_extension() {
        let a = samples::plane_rb(one());
        let r = self_representation(&a);
        let chi = LinearOperator::identity(2);
        let e = AbelianExtension::from_cocycle(&a, &r, &BilinearMap::zeros(2, 2, 2), &chi).unwrap();
        let space = CochainSpace::new(ComplexKind::Rbla, 2, 2, 2);
        let pair = Cochain::pair(
            &Cochain::zero(CochainSpace::new(ComplexKind::La, 2, 2, 2)),
            &Cochain::from_operator(ComplexKind::Rbo, &chi).unwrap(),
        )
        .unwrap();
        let is_cocycle = d_matrix(&a, &r, 2).unwrap().mul_vec(pair.coords()).unwrap().is_zero();
        assert_eq!(check_extension(&e).unwrap().is_empty(), is_cocycle);
        assert_eq!(pair.space(), &space);
    }

    #[test]
    fn isomorphic_extensions_share_a_class() {
        let (_, _, e) = plane_split();
        assert!(extensions_same_class(&e, &e, &LinearOperator::identity(4)).unwrap());
        // ξ(x, u) = (x, u + γ x)
        let gamma = RatMatrix::from_i64(&[&[1, 0], &[2, -1]]);
        let xi = RatMatrix::block(&RatMatrix::identity(2), &RatMatrix::zeros(2, 2), &gamma, &RatMatrix::identity(2)).unwrap();
        let xi_inv = RatMatrix::block(&RatMatrix::identity(2), &RatMatrix::zeros(2, 2), &gamma.neg(), &RatMatrix::identity(2)).unwrap();
        let (xi, xi_inv) = (LinearOperator::new(xi), LinearOperator::new(xi_inv));
        let e2 = e.transport(&xi, &xi_inv).unwrap();
        assert!(check_extension(&e2).unwrap().is_empty());
        assert!(extensions_same_class(&e, &e2, &xi).unwrap());
        let fake = LinearOperator::from_i64(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert!(matches!(extensions_same_class(&e, &e2, &fake), Err(Error::Axioms { .. })));
    }

    #[test]
    fn escaping_values_are_reported() {
        let (_, _, e) = plane_split();
        let v = RatVector::unit(4, 0);
        assert!(matches!(e.fiber_coordinates(&v), Err(Error::EscapesFiber(_))));
        assert_eq!(e.fiber_coordinates(&RatVector::unit(4, 3)).unwrap(), RatVector::unit(2, 1));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(16))]

            #[test]
            fn sections_agree_on_actions_and_class(seed in any::<u64>()) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let e = samples::random_extension(&mut rng, 2);
                let s1 = samples::random_section(&mut rng, &e);
                let s2 = samples::random_section(&mut rng, &e);
                prop_assert_eq!(section_induced_actions(&e, &s1).unwrap(), section_induced_actions(&e, &s2).unwrap());
                prop_assert!(sections_same_class(&e, &s1, &s2).unwrap());
                let rep = section_induced_actions(&e, &s1).unwrap();
                let z = extension_cocycle_pair(&e, &s1).unwrap();
                prop_assert!(d_matrix(e.base(), &rep, 2).unwrap().mul_vec(z.coords()).unwrap().is_zero());
            }
        }
    }
}
