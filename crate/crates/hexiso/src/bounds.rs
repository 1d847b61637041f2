//! Exact-arithmetic checkers for the isoperimetric bounds, plus the
//! scalar radius-threshold functions.
//!
//! Every verdict is decided on an equivalent integer inequality; floating
//! point only appears in `f`, `g` and `r_threshold`.

use num_rational::Rational64;

use crate::{Error, Result};

pub const SQRT3: f64 = 1.732_050_807_568_877_2;
pub const SQRT6: f64 = 2.449_489_742_783_178;

/// c² numerator for the finite-grid neighbor/boundary bound: the constant
/// 0.6053 squared, scaled by 10^8.
pub const FINITE_NB_Q_NUM: i128 = 36_638_809;
pub const FINITE_NB_Q_DEN: i128 = 100_000_000;

/// Outcome of one exact bound check. `holds` means `lhs >= rhs` in the
/// integerized comparison; `tight` means equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub holds: bool,
    pub tight: bool,
    pub lhs: i128,
    pub rhs: i128,
}

impl BoundCheck {
    fn from_cmp(name: &'static str, lhs: i128, rhs: i128) -> Self {
        BoundCheck {
            name,
            holds: lhs >= rhs,
            tight: lhs == rhs,
            lhs,
            rhs,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "holds": self.holds,
            "tight": self.tight,
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
        })
    }
}

fn nonneg(name: &str, v: i64) -> Result<i128> {
    if v < 0 {
        Err(Error::InvalidArguments(format!("{name} must be nonnegative")))
    } else {
        Ok(v as i128)
    }
}

/// Infinite grid, neighbor vertices: |N| ≥ √6·√|W|, checked as N² ≥ 6|W|.
pub fn check_inf_n(w_size: i64, n_count: i64) -> Result<BoundCheck> {
    let w = nonneg("w_size", w_size)?;
    let n = nonneg("n_count", n_count)?;
    Ok(BoundCheck::from_cmp("inf_N", n * n, 6 * w))
}

/// Infinite grid, outgoing edges: |E| ≥ √6·√|W|, checked as E² ≥ 6|W|.
pub fn check_inf_e(w_size: i64, e_count: i64) -> Result<BoundCheck> {
    let w = nonneg("w_size", w_size)?;
    let e = nonneg("e_count", e_count)?;
    Ok(BoundCheck::from_cmp("inf_E", e * e, 6 * w))
}

/// Infinite grid, boundary vertices: |B| ≥ √6·√(|W|+3/2) − 3, checked as
/// B² + 6B ≥ 6|W|.
pub fn check_inf_b(w_size: i64, b_count: i64) -> Result<BoundCheck> {
    let w = nonneg("w_size", w_size)?;
    let b = nonneg("b_count", b_count)?;
    Ok(BoundCheck::from_cmp("inf_B", b * b + 6 * b, 6 * w))
}

/// Finite grid, in-grid neighbors: |N_in| ≥ 0.6053·√|W|, checked as
/// 10⁸·N² ≥ 36638809·|W|.
pub fn check_fin_n(w_size: i64, n_in_count: i64) -> Result<BoundCheck> {
    let w = nonneg("w_size", w_size)?;
    let n = nonneg("n_in_count", n_in_count)?;
    Ok(BoundCheck::from_cmp(
        "fin_N",
        FINITE_NB_Q_DEN * n * n,
        FINITE_NB_Q_NUM * w,
    ))
}

/// Finite grid, boundary vertices, same constant as `check_fin_n`:
/// 10⁸·B² + 36638809·B ≥ 36638809·|W|.
pub fn check_fin_b(w_size: i64, b_count: i64) -> Result<BoundCheck> {
    let w = nonneg("w_size", w_size)?;
    let b = nonneg("b_count", b_count)?;
    Ok(BoundCheck::from_cmp(
        "fin_B",
        FINITE_NB_Q_DEN * b * b + FINITE_NB_Q_NUM * b,
        FINITE_NB_Q_NUM * w,
    ))
}

/// Finite grid, outgoing edges: |E| ≥ (√6−√3)·√|W| with c² = 9−6√2,
/// decided exactly: E² ≥ 9|W| immediately suffices; otherwise the deficit
/// 9|W|−E² is nonnegative and squaring gives (9|W|−E²)² ≤ 72|W|².
pub fn check_fin_e(w_size: i64, e_count: i64) -> Result<BoundCheck> {
    let w = nonneg("w_size", w_size)?;
    let e = nonneg("e_count", e_count)?;
    if e * e >= 9 * w {
        Ok(BoundCheck::from_cmp("fin_E", e * e, 9 * w))
    } else {
        let deficit = 9 * w - e * e;
        Ok(BoundCheck::from_cmp("fin_E", 72 * w * w, deficit * deficit))
    }
}

fn positive_l(l: (i64, i64, i64)) -> Result<(i128, i128, i128)> {
    if l.0 < 1 || l.1 < 1 || l.2 < 1 {
        return Err(Error::InvalidArguments(
            "gray row counts must be positive".into(),
        ));
    }
    Ok((l.0 as i128, l.1 as i128, l.2 as i128))
}

/// Lower bound on |N(W)| from the gray-row counts: l1 + l2 + l3.
pub fn eq1_lower(l: (i64, i64, i64)) -> Result<i64> {
    positive_l(l)?;
    Ok(l.0 + l.1 + l.2)
}

/// Upper bound on |W| for a bad-row-free set:
/// −½(l1²+l2²+l3²) + (l1l2 + l1l3 + l2l3), an exact half-integer.
pub fn eq2_upper(l: (i64, i64, i64)) -> Result<Rational64> {
    let (a, b, c) = positive_l(l)?;
    let num = -(a * a + b * b + c * c) + 2 * (a * b + a * c + b * c);
    let num = i64::try_from(num)
        .map_err(|_| Error::InvalidArguments("gray row counts too large".into()))?;
    Ok(Rational64::new(num, 2))
}

/// Radius bound √3·c / (−2√3·(c+√3)·(c−√6+√3)), valid on
/// −√3 < c < √6−√3.
pub fn f(c: f64) -> Result<f64> {
    if !(c > -SQRT3 && c < SQRT6 - SQRT3) {
        return Err(Error::Domain(format!(
            "f is defined for -sqrt(3) < c < sqrt(6)-sqrt(3), got {c}"
        )));
    }
    Ok(SQRT3 * c / (-2.0 * SQRT3 * (c + SQRT3) * (c - SQRT6 + SQRT3)))
}

/// The ratio (24c − 12√6) / ((−4c² + 4c√6 − 12)·√3); its denominator has
/// no real roots.
pub fn g(c: f64) -> f64 {
    (24.0 * c - 12.0 * SQRT6) / ((-4.0 * c * c + 4.0 * c * SQRT6 - 12.0) * SQRT3)
}

/// Smallest radius from which |N(W)| ≥ c·√|W| is guaranteed: ⌈f(c)⌉,
/// for 0 ≤ c < √6−√3.
pub fn r_threshold(c: f64) -> Result<u32> {
    if !(0.0..SQRT6 - SQRT3).contains(&c) {
        return Err(Error::Domain(format!(
            "r_threshold is defined for 0 <= c < sqrt(6)-sqrt(3), got {c}"
        )));
    }
    if c == 0.0 {
        return Ok(0);
    }
    Ok(f(c)?.ceil() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::sample::SplitMix64;

    #[test]
    fn inf_n_examples() {
        for r in 1..=50i64 {
            let chk = check_inf_n(6 * r * r, 6 * r).unwrap();
            assert!(chk.holds && chk.tight, "r={r}");
        }
        assert!(check_inf_n(1, 3).unwrap().holds);
        let chk = check_inf_n(7, 6).unwrap();
        assert!(!chk.holds); // 36 < 42
        assert!(check_inf_n(-1, 3).is_err());
    }

    #[test]
    fn inf_e_examples() {
        for r in 1..=50i64 {
            assert!(check_inf_e(6 * r * r, 6 * r).unwrap().tight);
        }
        assert!(check_inf_e(1, 3).unwrap().holds);
        assert!(check_inf_e(2, 4).unwrap().holds); // 16 >= 12
    }

    #[test]
    fn inf_b_examples() {
        for r in 1..=50i64 {
            let chk = check_inf_b(6 * r * r + 6 * r, 6 * r).unwrap();
            assert!(chk.holds && chk.tight, "r={r}");
        }
        assert!(check_inf_b(1, 1).unwrap().holds); // 7 >= 6
        assert!(!check_inf_b(4, 2).unwrap().holds); // 16 < 24
    }

    #[test]
    fn tight_only_on_the_known_families() {
        // scan a window of (w, count) pairs: equality appears exactly at
        // the square-law points
        for w in 0..2000i64 {
            for m in 0..120i64 {
                let n_tight = check_inf_n(w, m).unwrap().tight;
                assert_eq!(n_tight, m * m == 6 * w);
                let b_tight = check_inf_b(w, m).unwrap().tight;
                assert_eq!(b_tight, m * m + 6 * m == 6 * w);
            }
        }
    }

    #[test]
    fn fin_n_and_b_examples() {
        assert!(check_fin_n(3, 2).unwrap().holds); // 4e8 >= 3*36638809
        assert!(check_fin_n(1, 1).unwrap().holds);
        assert!(check_fin_b(1, 1).unwrap().holds);
        assert!(!check_fin_n(100, 0).unwrap().holds);
    }

    #[test]
    fn fin_e_examples() {
        // deficit branch: (27-4)^2 = 529 <= 72*9 = 648
        assert!(check_fin_e(3, 2).unwrap().holds);
        // (9-4)^2 = 25 <= 72
        assert!(check_fin_e(1, 2).unwrap().holds);
        // direct branch
        assert!(check_fin_e(1, 3).unwrap().holds);
        assert!(!check_fin_e(10, 0).unwrap().holds);
    }

    #[test]
    fn eq1_eq2_examples() {
        assert_eq!(eq1_lower((1, 1, 1)).unwrap(), 3);
        assert_eq!(eq1_lower((2, 2, 2)).unwrap(), 6);
        assert_eq!(eq1_lower((2, 1, 1)).unwrap(), 4);
        assert!(eq1_lower((0, 1, 1)).is_err());

        assert_eq!(eq2_upper((2, 2, 2)).unwrap(), Rational64::from_integer(6));
        assert_eq!(eq2_upper((1, 1, 1)).unwrap(), Rational64::new(3, 2));
        assert_eq!(eq2_upper((1, 1, 2)).unwrap(), Rational64::from_integer(2));
        // symmetric in the arguments, so the WLOG relabeling is a no-op
        assert_eq!(eq2_upper((3, 1, 2)).unwrap(), eq2_upper((1, 2, 3)).unwrap());
    }

    #[test]
    fn middle_inequality_of_the_square_law() {
        // (l1+l2+l3)^2 >= 6 * eq2_upper(l) for all positive counts
        for a in 1..=12i64 {
            for b in 1..=12i64 {
                for c in 1..=12i64 {
                    let s = (a + b + c) * (a + b + c);
                    let upper = eq2_upper((a, b, c)).unwrap();
                    let lhs = Rational64::from_integer(s);
                    assert!(lhs >= upper * 6, "l=({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn scalar_function_values() {
        // recorded by direct evaluation
        let v = f(0.6053).unwrap();
        assert!(v <= 2.0);
        assert!((v - 1.1547).abs() < 5e-3, "f(0.6053) = {v}");
        assert!((f(0.6).unwrap() - 1.0954).abs() < 5e-3);
        assert!(f(0.8).is_err());
        assert!(f(-2.0).is_err());

        assert!((g(SQRT6 - SQRT3) - 1.0).abs() < 1e-12);
        assert!((g(0.0) - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!(g(0.5) > 1.0);

        assert_eq!(r_threshold(0.6053).unwrap(), 2);
        assert_eq!(r_threshold(0.0).unwrap(), 0);
        assert_eq!(r_threshold(0.6).unwrap(), 2);
        assert!(r_threshold(0.72).is_err());
    }

    #[test]
    fn f_is_increasing_on_its_checker_domain() {
        let hi = SQRT6 - SQRT3;
        let mut prev = f(0.0 + 1e-12).unwrap();
        for i in 1..1000 {
            let c = (i as f64 / 1000.0) * (hi - 1e-9);
            let cur = f(c).unwrap();
            assert!(cur >= prev, "f not increasing at c={c}");
            prev = cur;
        }
    }

    #[test]
    fn integerized_checks_agree_with_float_evaluation() {
        let mut rng = SplitMix64::new(2024);
        let margin = 1e-9;
        for _ in 0..100_000 {
            let w = rng.below(100_000) as i64;
            let m = rng.below(1000) as i64;
            let wf = w as f64;
            let mf = m as f64;

            let cases: [(bool, f64); 5] = [
                (check_inf_n(w, m).unwrap().holds, mf - SQRT6 * wf.sqrt()),
                (check_inf_e(w, m).unwrap().holds, mf - SQRT6 * wf.sqrt()),
                (
                    check_inf_b(w, m).unwrap().holds,
                    mf - (SQRT6 * (wf + 1.5).sqrt() - 3.0),
                ),
                (check_fin_n(w, m).unwrap().holds, mf - 0.6053 * wf.sqrt()),
                (
                    check_fin_e(w, m).unwrap().holds,
                    mf - (SQRT6 - SQRT3) * wf.sqrt(),
                ),
            ];
            for (exact, float_diff) in cases {
                if float_diff.abs() > margin {
                    assert_eq!(exact, float_diff >= 0.0, "w={w} m={m}");
                }
            }
        }
    }
}
