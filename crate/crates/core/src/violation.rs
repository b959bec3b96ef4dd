use std::fmt;

use crate::linalg::RatVector;

/// The identity a [`Violation`] refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    Leibniz,
    RotaBaxter,
    MorphismBracket,
    MorphismOperator,
    /// `l(x, l(y,u)) = l([x,y],u) + l(y, l(x,u))`
    RepLeftLeft,
    /// `l(x, r(u,y)) = r(l(x,u),y) + r(u,[x,y])`
    RepLeftRight,
    /// `r(u,[x,y]) = r(r(u,x),y) + l(x, r(u,y))`
    RepRightRight,
    RbRepLeft,
    RbRepRight,
    DeformBracket,
    DeformOperator,
    EquivalenceBracket,
    EquivalenceOperator,
    IsomorphismLeadingTerm,
    ExtensionShape,
    ExtensionExactness,
    ExtensionInjective,
    ExtensionSurjective,
    ExtensionAbelianFiber,
    ExtensionProjectionBracket,
    ExtensionFiberOperator,
    ExtensionBaseOperator,
    ExtensionTotalLeibniz,
    ExtensionTotalRotaBaxter,
    SectionRightInverse,
    ExtensionMapInvertible,
    ExtensionMapInclusion,
    ExtensionMapProjection,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::Leibniz => "leibniz",
            Law::RotaBaxter => "rota-baxter",
            Law::MorphismBracket => "morphism-bracket",
            Law::MorphismOperator => "morphism-operator",
            Law::RepLeftLeft => "rep-left-left",
            Law::RepLeftRight => "rep-left-right",
            Law::RepRightRight => "rep-right-right",
            Law::RbRepLeft => "rb-rep-left",
            Law::RbRepRight => "rb-rep-right",
            Law::DeformBracket => "deform-bracket",
            Law::DeformOperator => "deform-operator",
            Law::EquivalenceBracket => "equivalence-bracket",
            Law::EquivalenceOperator => "equivalence-operator",
            Law::IsomorphismLeadingTerm => "isomorphism-leading-term",
            Law::ExtensionShape => "extension-shape",
            Law::ExtensionExactness => "extension-p-after-i",
            Law::ExtensionInjective => "extension-i-injective",
            Law::ExtensionSurjective => "extension-p-surjective",
            Law::ExtensionAbelianFiber => "extension-abelian-fiber",
            Law::ExtensionProjectionBracket => "extension-p-bracket",
            Law::ExtensionFiberOperator => "extension-fiber-operator",
            Law::ExtensionBaseOperator => "extension-base-operator",
            Law::ExtensionTotalLeibniz => "extension-total-leibniz",
            Law::ExtensionTotalRotaBaxter => "extension-total-rota-baxter",
            Law::SectionRightInverse => "section-right-inverse",
            Law::ExtensionMapInvertible => "extension-map-invertible",
            Law::ExtensionMapInclusion => "extension-map-inclusion",
            Law::ExtensionMapProjection => "extension-map-projection",
        }
    }
}

/// A failed identity instance: which law, at which basis indices (and
/// deformation degree, if any), with the exact nonzero defect vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub degree: Option<usize>,
    pub indices: Vec<usize>,
    pub defect: RatVector,
}

impl Violation {
    pub fn new(law: Law, indices: Vec<usize>, defect: RatVector) -> Self {
        Violation { law, degree: None, indices, defect }
    }

    pub fn at_degree(mut self, n: usize) -> Self {
        self.degree = Some(n);
        self
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.law.name())?;
        if let Some(n) = self.degree {
            write!(f, " @t^{n}")?;
        }
        let idx: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        let def: Vec<String> = self.defect.iter().map(ToString::to_string).collect();
        write!(f, " ({}) defect [{}]", idx.join(","), def.join(", "))
    }
}

/// Pushes a violation when `defect` is nonzero.
pub(crate) fn record(out: &mut Vec<Violation>, law: Law, indices: Vec<usize>, defect: RatVector) {
    if !defect.is_zero() {
        out.push(Violation::new(law, indices, defect));
    }
}
