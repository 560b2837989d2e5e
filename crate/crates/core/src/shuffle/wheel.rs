use super::element::ShuffleElement;
use crate::exactalg::RatV;
use crate::polyring::ColorVar;

/// A wheel `x_{i,r1} = v x_{i+eps,s} = v^2 x_{i,r2}` on which the numerator does not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WheelViolation {
    pub outer: ColorVar,
    pub inner: ColorVar,
    pub middle: ColorVar,
}

/// True iff `F` vanishes on every wheel.
///
/// No pole factor vanishes on a wheel (`v^2 t - v t != 0`), so it suffices to
/// substitute `(v^2 t, t, v t)` into the numerator.
pub fn wheel_check(f: &ShuffleElement) -> bool {
    find_wheel_violation(f).is_none()
}

pub fn find_wheel_violation(f: &ShuffleElement) -> Option<WheelViolation> {
    let deg = f.degree();
    let nv = deg.total();
    let colors = deg.num_colors();
    let vars = deg.vars();
    for i in 1..=colors {
        let ki = deg.get(i);
        if ki < 2 {
            continue;
        }
        for nb in [i.checked_sub(1), Some(i + 1)].into_iter().flatten() {
            if nb == 0 || nb > colors {
                continue;
            }
            for r1 in 1..=ki {
                for r2 in 1..=ki {
                    if r1 == r2 {
                        continue;
                    }
                    for s in 1..=deg.get(nb) {
                        let outer = ColorVar::new(i, r1);
                        let inner = ColorVar::new(i, r2);
                        let middle = ColorVar::new(nb, s);
                        // t is the extra variable at position nv
                        let images: Vec<(usize, RatV)> = vars
                            .iter()
                            .enumerate()
                            .map(|(p, v)| {
                                if *v == outer {
                                    (nv, RatV::v_pow(2))
                                } else if *v == inner {
                                    (nv, RatV::one())
                                } else if *v == middle {
                                    (nv, RatV::v_pow(1))
                                } else {
                                    (p, RatV::one())
                                }
                            })
                            .collect();
                        let img = f.numerator().poly().substitute_monomial(&images, nv + 1);
                        if !img.is_zero() {
                            return Some(WheelViolation { outer, inner, middle });
                        }
                    }
                }
            }
        }
    }
    None
}
