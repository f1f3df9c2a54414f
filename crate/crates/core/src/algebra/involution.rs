use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::poly::{cheb_t, ExactPoly};

use super::Triple;

/// A polynomial map `t -> (x(t), y(t), z(t))`.
pub type Parametrization = [ExactPoly; 3];

pub fn chebyshev_parametrization(t: Triple) -> Parametrization {
    [cheb_t(t.i as usize), cheb_t(t.j as usize), cheb_t(t.k as usize)]
}

/// A product `f(u, v) = left(u) * right(v)` in two variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separable {
    pub left: ExactPoly,
    pub right: ExactPoly,
}

impl Separable {
    pub fn new(left: ExactPoly, right: ExactPoly) -> Self {
        Separable { left, right }
    }

    pub fn substitute(&self, u: &ExactPoly, v: &ExactPoly) -> ExactPoly {
        self.left.compose(u) * self.right.compose(v)
    }
}

/// The nine elementary involutions of affine 3-space used to move between
/// parametrizations. Each one is its own inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Involution {
    /// `(x, z, y)`
    SwapYZ,
    /// `(y, x, z)`
    SwapXY,
    /// `(z, y, x)`
    SwapXZ,
    /// `(f(y, z) - x, y, z)`
    ShearX(Separable),
    /// `(x, f(x, z) - y, z)`
    ShearY(Separable),
    /// `(x, y, f(x, y) - z)`
    ShearZ(Separable),
    /// `(g(z) - x, h(z) - y, z)`
    FromZ { g: ExactPoly, h: ExactPoly },
    /// `(g(y) - x, y, h(y) - z)`
    FromY { g: ExactPoly, h: ExactPoly },
    /// `(x, g(x) - y, h(x) - z)`
    FromX { g: ExactPoly, h: ExactPoly },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvolutionForm {
    SwapYZ,
    SwapXY,
    SwapXZ,
    ShearX,
    ShearY,
    ShearZ,
    FromZ,
    FromY,
    FromX,
}

impl InvolutionForm {
    pub fn as_str(self) -> &'static str {
        match self {
            InvolutionForm::SwapYZ => "(x,z,y)",
            InvolutionForm::SwapXY => "(y,x,z)",
            InvolutionForm::SwapXZ => "(z,y,x)",
            InvolutionForm::ShearX => "(f(y,z)-x,y,z)",
            InvolutionForm::ShearY => "(x,f(x,z)-y,z)",
            InvolutionForm::ShearZ => "(x,y,f(x,y)-z)",
            InvolutionForm::FromZ => "(g(z)-x,h(z)-y,z)",
            InvolutionForm::FromY => "(g(y)-x,y,h(y)-z)",
            InvolutionForm::FromX => "(x,g(x)-y,h(x)-z)",
        }
    }
}

impl fmt::Display for InvolutionForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Involution {
    pub fn form(&self) -> InvolutionForm {
        match self {
            Involution::SwapYZ => InvolutionForm::SwapYZ,
            Involution::SwapXY => InvolutionForm::SwapXY,
            Involution::SwapXZ => InvolutionForm::SwapXZ,
            Involution::ShearX(_) => InvolutionForm::ShearX,
            Involution::ShearY(_) => InvolutionForm::ShearY,
            Involution::ShearZ(_) => InvolutionForm::ShearZ,
            Involution::FromZ { .. } => InvolutionForm::FromZ,
            Involution::FromY { .. } => InvolutionForm::FromY,
            Involution::FromX { .. } => InvolutionForm::FromX,
        }
    }

    /// The polynomial data of the map: `[left, right]` for shears, `[g, h]`
    /// for the graph forms, empty for permutations.
    pub fn payload(&self) -> Vec<&ExactPoly> {
        match self {
            Involution::SwapYZ | Involution::SwapXY | Involution::SwapXZ => vec![],
            Involution::ShearX(f) | Involution::ShearY(f) | Involution::ShearZ(f) => {
                vec![&f.left, &f.right]
            }
            Involution::FromZ { g, h } | Involution::FromY { g, h } | Involution::FromX { g, h } => {
                vec![g, h]
            }
        }
    }

    pub fn is_permutation(&self) -> bool {
        matches!(self, Involution::SwapYZ | Involution::SwapXY | Involution::SwapXZ)
    }

    /// Composes the involution with a parametrization.
    pub fn apply(&self, p: &Parametrization) -> Parametrization {
        let [x, y, z] = p;
        match self {
            Involution::SwapYZ => [x.clone(), z.clone(), y.clone()],
            Involution::SwapXY => [y.clone(), x.clone(), z.clone()],
            Involution::SwapXZ => [z.clone(), y.clone(), x.clone()],
            Involution::ShearX(f) => [f.substitute(y, z) - x, y.clone(), z.clone()],
            Involution::ShearY(f) => [x.clone(), f.substitute(x, z) - y, z.clone()],
            Involution::ShearZ(f) => [x.clone(), y.clone(), f.substitute(x, y) - z],
            Involution::FromZ { g, h } => [g.compose(z) - x, h.compose(z) - y, z.clone()],
            Involution::FromY { g, h } => [g.compose(y) - x, y.clone(), h.compose(y) - z],
            Involution::FromX { g, h } => [x.clone(), g.compose(x) - y, h.compose(x) - z],
        }
    }
}

pub fn apply_involutions<'a>(
    maps: impl IntoIterator<Item = &'a Involution>,
    p: &Parametrization,
) -> Parametrization {
    maps.into_iter().fold(p.clone(), |acc, m| m.apply(&acc))
}

impl Serialize for Involution {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Involution", 2)?;
        st.serialize_field("form", self.form().as_str())?;
        st.serialize_field("payload", &self.payload())?;
        st.end()
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Involution::SwapYZ | Involution::SwapXY | Involution::SwapXZ => {
                f.write_str(self.form().as_str())
            }
            Involution::ShearX(s) => write!(f, "([{}](y)*[{}](z) - x, y, z)", s.left, s.right),
            Involution::ShearY(s) => write!(f, "(x, [{}](x)*[{}](z) - y, z)", s.left, s.right),
            Involution::ShearZ(s) => write!(f, "(x, y, [{}](x)*[{}](y) - z)", s.left, s.right),
            Involution::FromZ { g, h } => write!(f, "([{g}](z) - x, [{h}](z) - y, z)"),
            Involution::FromY { g, h } => write!(f, "([{g}](y) - x, y, [{h}](y) - z)"),
            Involution::FromX { g, h } => write!(f, "(x, [{g}](x) - y, [{h}](x) - z)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Parametrization {
        [
            ExactPoly::from_i64(&[1, 2, 0, -1]),
            ExactPoly::from_i64(&[0, 0, 3]),
            ExactPoly::from_i64(&[-2, 1]),
        ]
    }

    fn all_forms() -> Vec<Involution> {
        let g = ExactPoly::from_i64(&[0, 1, 1]);
        let h = ExactPoly::from_i64(&[2, 0, -1]);
        let f = Separable::new(g.clone(), h.clone());
        vec![
            Involution::SwapYZ,
            Involution::SwapXY,
            Involution::SwapXZ,
            Involution::ShearX(f.clone()),
            Involution::ShearY(f.clone()),
            Involution::ShearZ(f),
            Involution::FromZ { g: g.clone(), h: h.clone() },
            Involution::FromY { g: g.clone(), h: h.clone() },
            Involution::FromX { g, h },
        ]
    }

    #[test]
    fn every_form_is_an_involution() {
        let p = sample();
        for m in all_forms() {
            assert_eq!(m.apply(&m.apply(&p)), p, "{}", m.form());
        }
    }

    #[test]
    fn trefoil_shear_lowers_the_third_degree() {
        // 2 T_1(x) T_1(y) - z applied to (T_3, T_4, T_7) gives T_1.
        let shear = Involution::ShearZ(Separable::new(cheb_t(1).scale_int(2), cheb_t(1)));
        let out = shear.apply(&chebyshev_parametrization(Triple::new(3, 4, 7)));
        assert_eq!(out[2], cheb_t(1));
    }

    #[test]
    fn serializes_form_and_payload() {
        let json = serde_json::to_value(Involution::SwapXY).unwrap();
        assert_eq!(json["form"], "(y,x,z)");
        assert_eq!(json["payload"].as_array().unwrap().len(), 0);
    }
}
