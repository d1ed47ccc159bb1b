// Float helpers that `core` does not provide without `std`.

/// `base` raised to a non-negative integer power.
pub(crate) fn powu(base: f64, exp: u32) -> f64 {
    let mut acc = 1.0;
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Round half away from zero. Valid for |x| < 2^62.
pub(crate) fn round_to_i64(x: f64) -> i64 {
    let t = x as i64;
    let frac = x - t as f64;
    if frac >= 0.5 {
        t + 1
    } else if frac <= -0.5 {
        t - 1
    } else {
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers() {
        assert_eq!(powu(0.8, 0), 1.0);
        assert_eq!(powu(0.8, 1), 0.8);
        assert!((powu(0.8, 3) - 0.512).abs() < 1e-15);
        assert_eq!(powu(1.0, 40), 1.0);
    }

    #[test]
    fn rounding() {
        assert_eq!(round_to_i64(2.5), 3);
        assert_eq!(round_to_i64(2.49), 2);
        assert_eq!(round_to_i64(-2.5), -3);
        assert_eq!(round_to_i64(-0.2), 0);
        assert_eq!(round_to_i64(640_000_000.0000001), 640_000_000);
    }
}
