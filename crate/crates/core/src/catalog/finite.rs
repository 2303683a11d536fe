use std::sync::{Arc, OnceLock};

use crate::actions::{
    coaction_from_r, ActionMap, CoactionMap, FinAlgebra, HAlgebra, RMatrix, Representation, UniversalRForm,
};
use crate::hopf::{Elem, FinHopf, HopfData};
use crate::linalg::Mat;
use crate::scalar::Rational;

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn half() -> Rational {
    Rational::new(1, 2)
}

fn labels(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn cached(cell: &'static OnceLock<Arc<FinHopf>>, f: fn() -> FinHopf) -> Arc<FinHopf> {
    cell.get_or_init(|| Arc::new(f())).clone()
}

/// The group algebra of `C₂ = {1, g}`.
pub fn kc2() -> Arc<FinHopf> {
    static C: OnceLock<Arc<FinHopf>> = OnceLock::new();
    cached(&C, || FinHopf::group_algebra("kC2", labels(&["1", "g"]), |a, b| (a + b) % 2).expect("kC2"))
}

/// The group algebra of `C₃ = {1, g, g²}`.
pub fn kc3() -> Arc<FinHopf> {
    static C: OnceLock<Arc<FinHopf>> = OnceLock::new();
    cached(&C, || FinHopf::group_algebra("kC3", labels(&["1", "g", "g^2"]), |a, b| (a + b) % 3).expect("kC3"))
}

const S3: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];

/// The group algebra of `S₃`; permutations act on `{1,2,3}` and compose right to left.
pub fn ks3() -> Arc<FinHopf> {
    static C: OnceLock<Arc<FinHopf>> = OnceLock::new();
    cached(&C, || {
        let compose = |a: usize, b: usize| {
            let p: [usize; 3] = std::array::from_fn(|i| S3[a][S3[b][i]]);
            S3.iter().position(|q| *q == p).expect("closed")
        };
        FinHopf::group_algebra("kS3", labels(&["e", "(12)", "(23)", "(13)", "(123)", "(132)"]), compose).expect("kS3")
    })
}

/// Sweedler's four-dimensional algebra on `{1, g, x, gx}`.
pub fn sweedler_h4() -> Arc<FinHopf> {
    static C: OnceLock<Arc<FinHopf>> = OnceLock::new();
    cached(&C, || {
        let (one, g, x, gx) = (0, 1, 2, 3);
        let mut mult = Vec::new();
        // g^a x^b with x g = -g x, g² = 1, x² = 0.
        let decode = |i: usize| (i & 1, i >> 1);
        for i in 0..4 {
            for j in 0..4 {
                let ((a1, b1), (a2, b2)) = (decode(i), decode(j));
                if b1 + b2 > 1 {
                    continue;
                }
                let sign = if b1 == 1 && a2 == 1 { -1 } else { 1 };
                let k = ((a1 + a2) % 2) | ((b1 + b2) << 1);
                mult.push((i, j, k, r(sign)));
            }
        }
        let coprod = vec![
            (one, one, one, r(1)),
            (g, g, g, r(1)),
            (x, x, one, r(1)),
            (x, g, x, r(1)),
            (gx, gx, g, r(1)),
            (gx, one, gx, r(1)),
        ];
        let data = HopfData {
            name: "H4".into(),
            labels: labels(&["1", "g", "x", "gx"]),
            mult,
            unit: Elem::unit(one),
            coprod,
            counit: vec![r(1), r(1), r(0), r(0)],
            antipode: vec![Elem::unit(one), Elem::unit(g), Elem::single(gx, r(-1)), Elem::unit(x)],
            antipode_inv: vec![Elem::unit(one), Elem::unit(g), Elem::unit(gx), Elem::single(x, r(-1))],
        };
        FinHopf::new(data).expect("H4")
    })
}

/// `k[y]/(y² − 1)` on `{1, y}`.
pub fn sign_line_algebra() -> FinAlgebra {
    FinAlgebra::from_fn("k[y]/(y^2-1)", labels(&["1", "y"]), Elem::unit(0), |i, j| Elem::unit((i + j) % 2))
        .expect("sign line")
}

/// `g·y = −y`.
pub fn sign_action() -> ActionMap {
    ActionMap::from_fn(2, 2, |g, a| Elem::single(a, r(if g == 1 && a == 1 { -1 } else { 1 })))
}

/// The sign line over `kC₂` with trivial coaction.
pub fn sign_line() -> HAlgebra {
    let h = kc2();
    HAlgebra::new("sign-line", sign_line_algebra(), h.clone(), sign_action(), Some(CoactionMap::trivial(&h, 2)))
        .expect("sign line")
}

/// The sign line with `ρ(y) = y⊗g` coming from [`kc2_r_matrix`].
pub fn sign_line_braided() -> HAlgebra {
    let h = kc2();
    let co = coaction_from_r(&h, 2, &sign_action(), &kc2_r_matrix());
    HAlgebra::new("sign-line (R-coaction)", sign_line_algebra(), h, sign_action(), Some(co)).expect("braided sign line")
}

/// `R = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)`.
pub fn kc2_r_matrix() -> RMatrix {
    let h = kc2();
    let c = half();
    RMatrix::from_terms(&h, &[(0, 0, c.clone()), (0, 1, c.clone()), (1, 0, c.clone()), (1, 1, -c)]).expect("invertible")
}

/// `ℛ(gⁱ⊗gʲ) = (−1)^{ij}`, its own convolution inverse.
pub fn kc2_form() -> UniversalRForm {
    let m = Mat::from_rows(vec![vec![r(1), r(1)], vec![r(1), r(-1)]]);
    UniversalRForm::new(m.clone(), m).expect("2×2")
}

/// `ℛ(g⊗g) = 2` and `1` elsewhere, paired with itself as claimed inverse.
pub fn kc2_bad_form() -> UniversalRForm {
    let m = Mat::from_rows(vec![vec![r(1), r(1)], vec![r(1), r(2)]]);
    UniversalRForm::new(m.clone(), m).expect("2×2")
}

/// Invariant idempotent `½(1⊗1 + y⊗diag(1, −1))` in the sign line tensor the regular representation.
pub fn sign_line_idempotent_entries() -> Vec<(usize, Mat)> {
    let c = half();
    vec![(0, Mat::identity(2).scale(&c)), (1, Mat::diag(vec![c.clone(), -c]))]
}

pub fn regular_kc2() -> Representation {
    Representation::regular(&kc2())
}

pub fn trivial_rep(h: &FinHopf) -> Representation {
    Representation::trivial(h, 1)
}

/// Adjoint structures for each finite catalog Hopf algebra.
pub fn adjoint_algebras() -> Vec<HAlgebra> {
    [kc2(), kc3(), ks3(), sweedler_h4()].into_iter().map(|h| HAlgebra::adjoint(h).expect("adjoint")).collect()
}

/// Self Yetter-Drinfeld structures for each finite catalog Hopf algebra.
pub fn self_yd_algebras() -> Vec<HAlgebra> {
    [kc2(), kc3(), ks3(), sweedler_h4()].into_iter().map(|h| HAlgebra::self_yd(h).expect("self YD")).collect()
}

/// `½(1⊗1 + y⊗J)` with `J = [[0, 1], [−1, 0]]`, invariant for the braided sign line.
pub fn sign_line_braided_idempotent_entries() -> Vec<(usize, Mat)> {
    let c = half();
    let j = Mat::from_rows(vec![vec![r(0), c.clone()], vec![-c.clone(), r(0)]]);
    vec![(0, Mat::identity(2).scale(&c)), (1, j)]
}

/// `1 ⊗ [[2, 1], [1, 2]]`, invariant and invertible in the sign line tensor `End(kC₂)`.
pub fn kc2_invertible_entries() -> Vec<(usize, Mat)> {
    vec![(0, Mat::from_rows(vec![vec![r(2), r(1)], vec![r(1), r(2)]]))]
}

/// Two-dimensional representation of `H₄`: `g ↦ diag(1, −1)`, `x ↦ E₂₁`.
pub fn h4_rep2() -> Representation {
    let m = |a: i64, b: i64, c: i64, d: i64| Mat::from_rows(vec![vec![r(a), r(b)], vec![r(c), r(d)]]);
    Representation::new(&sweedler_h4(), "V2", vec![Mat::identity(2), m(1, 0, 0, -1), m(0, 0, 1, 0), m(0, 0, -1, 0)])
        .expect("H4 representation")
}
