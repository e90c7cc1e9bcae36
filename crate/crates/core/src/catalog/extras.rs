//! Stand-alone examples: the j-invariant of the cubic in family II, a
//! characteristic-two annihilator, and a connected sum.

use super::CatalogError;
use crate::field::{FieldDescriptor, Scalar};
use crate::groebner::Ideal;
use crate::invsys::{annihilator, connected_sum_witness_check, ConnectedSumType, DualGenerator};
use crate::poly::{LinearChange, Polynomial};
use crate::text::{parse_dual, parse_poly, parse_poly_list};

/// `j(a) = 256 (a^2 - a + 1)^3 / (a^2 (a - 1)^2)`; undefined where the
/// cubic degenerates (`a = 0` or `a = 1`).
pub fn j_invariant(a: &Scalar) -> Result<Scalar, CatalogError> {
    let f = a.field();
    let one = f.one();
    let am1 = a.try_sub(&one)?;
    let den = a.try_mul(a)?.try_mul(&am1)?.try_mul(&am1)?;
    if den.is_zero() {
        return Err(CatalogError::DegenerateCubic(format!("a = {a} makes the cubic singular")));
    }
    let q = a.try_mul(a)?.try_sub(a)?.try_add(&one)?;
    Ok(f.from_i64(256).try_mul(&q.pow(3))?.try_div(&den)?)
}

/// Annihilator of `X^[3] + XYZ + XYW + XZW + YZW` over GF(2) and over Q.
#[derive(Debug, Clone)]
pub struct CharTwoReport {
    pub gf2_generators: Vec<Polynomial>,
    pub gf2_matches_listed: bool,
    /// `x^3 + yzw` is a minimal generator over GF(2).
    pub gf2_has_cubic: bool,
    pub q_generators: Vec<Polynomial>,
    pub q_matches_listed: bool,
}

impl CharTwoReport {
    /// Seven generators, not all quadrics, in characteristic two; six
    /// quadrics over Q.
    pub fn pass(&self) -> bool {
        self.gf2_matches_listed
            && self.gf2_has_cubic
            && self.gf2_generators.len() == 7
            && self.q_matches_listed
            && self.q_generators.len() == 6
            && self.q_generators.iter().all(|g| g.degree() == Some(2))
    }
}

const CHAR_TWO_FORM: &str = "X[3] + X*Y*Z + X*Y*W + X*Z*W + Y*Z*W";
const CHAR_TWO_GF2: &str = "x*y + y*z + y*w, x*z + y*z + z*w, x*w + y*w + z*w, y^2, z^2, w^2, x^3 + y*z*w";
const CHAR_TWO_Q: &str = "2*x^2 + x*w - y*w - z*w, x*y - y*z - x*w + z*w, x*z - y*z - x*w + y*w, y^2, z^2, w^2";

fn annihilator_of(text: &str, field: FieldDescriptor) -> Result<Ideal, CatalogError> {
    let form = parse_dual(text, field).expect("constant form parses");
    Ok(annihilator(&DualGenerator::new(form)?))
}

fn listed(text: &str, field: FieldDescriptor) -> Ideal {
    let gens = parse_poly_list(text, field).expect("listed generators parse");
    Ideal::new(field, gens).expect("listed generators are nonzero")
}

pub fn example_char_two() -> Result<CharTwoReport, CatalogError> {
    let gf2 = FieldDescriptor::prime(2)?;
    let q = FieldDescriptor::Rationals;
    let a2 = annihilator_of(CHAR_TWO_FORM, gf2)?;
    let aq = annihilator_of(CHAR_TWO_FORM, q)?;
    let m2 = a2.minimal_generators();
    let cubic = parse_poly("x^3 + y*z*w", gf2).expect("parses");
    let quadrics = Ideal::new(gf2, m2.generators.iter().filter(|g| g.degree() == Some(2)).cloned().collect())?;
    Ok(CharTwoReport {
        gf2_matches_listed: a2 == listed(CHAR_TWO_GF2, gf2),
        gf2_has_cubic: !quadrics.contains(&cubic) && a2.contains(&cubic),
        gf2_generators: m2.generators,
        q_matches_listed: aq == listed(CHAR_TWO_Q, q),
        q_generators: aq.minimal_generators().generators,
    })
}

/// The connected sum `XY^[2] + Y(Z^[2] + aW^[2]) + Z^[3] + W^[3]` of type (2,2).
#[derive(Debug, Clone)]
pub struct ConnectedSumReport {
    pub annihilator: Ideal,
    pub matches_listed: bool,
    /// The images of `x, y, z, w` under the change of variables.
    pub change: [Polynomial; 4],
    /// `x'z', x'w', y'z', y'w'` all lie in the annihilator.
    pub two_two: bool,
}

impl ConnectedSumReport {
    pub fn pass(&self) -> bool {
        self.matches_listed && self.two_two
    }
}

pub fn connected_sum_example(a: &Scalar) -> Result<ConnectedSumReport, CatalogError> {
    let field = a.field();
    let sub = |s: &str| s.replace('a', &format!("({a})"));
    let form = parse_dual(&sub("X*Y[2] + Y*(Z[2] + a*W[2]) + Z[3] + W[3]"), field).expect("form parses");
    let ann = annihilator(&DualGenerator::new(form)?);
    let listed_i = listed(&sub("x^2, x*z, x*w, x*y + y*z - z^2, a^2*x*y + y*w - a*w^2, z*w, x*y^2 - w^3, y^3, z^3 - w^3"), field);
    let p = |s: &str| parse_poly(&sub(s), field).expect("change of variables parses");
    let change = [p("x"), p("y - z - a*w"), p("z + x"), p("w + a^2*x")];
    let l = LinearChange::from_images(&change)?;
    Ok(ConnectedSumReport {
        matches_listed: ann == listed_i,
        two_two: connected_sum_witness_check(&ann, &l, ConnectedSumType::TwoTwo),
        annihilator: ann,
        change,
    })
}
