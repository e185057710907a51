//! Small numeric helpers shared by the solver and the bounds.

/// Neumaier-compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

pub fn kahan_sum<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    let mut k = KahanSum::new();
    for v in it {
        k.add(v);
    }
    k.value()
}

fn exact_falling(n: u64, r: u64) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.checked_mul((n - i) as u128)?;
    }
    Some(acc)
}

/// Falling factorial (n)_r = n(n-1)...(n-r+1); zero when r > n.
pub fn falling_factorial(n: usize, r: usize) -> f64 {
    if r > n {
        return 0.0;
    }
    match exact_falling(n as u64, r as u64) {
        Some(v) => v as f64,
        None => (0..r).map(|i| (n - i) as f64).product(),
    }
}

pub fn factorial(r: usize) -> f64 {
    falling_factorial(r, r)
}

pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i as u128 + 1),
            None => {
                return (0..k).map(|i| (n - i) as f64 / (i + 1) as f64).product();
            }
        }
    }
    acc as f64
}

pub fn p_norm(x: &[f64], p: f64) -> f64 {
    if p == 1.0 {
        return kahan_sum(x.iter().map(|v| v.abs()));
    }
    let m = x.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    if m == 0.0 {
        return 0.0;
    }
    kahan_sum(x.iter().map(|v| (v.abs() / m).powf(p))).powf(1.0 / p) * m
}

/// Scales `x` onto the unit l^p sphere. Returns false for the zero vector.
pub fn normalize_p(x: &mut [f64], p: f64) -> bool {
    let nrm = p_norm(x, p);
    if nrm == 0.0 || !nrm.is_finite() {
        return false;
    }
    for v in x.iter_mut() {
        *v /= nrm;
    }
    true
}

/// sign(v)|v|^{e}
pub fn signed_pow(v: f64, e: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v.signum() * v.abs().powf(e)
    }
}

/// Euclidean projection onto the probability simplex.
pub fn project_simplex(v: &[f64]) -> Vec<f64> {
    let mut u: Vec<f64> = v.to_vec();
    u.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    let mut css = 0.0;
    let mut theta = 0.0;
    for (i, &ui) in u.iter().enumerate() {
        css += ui;
        let t = (css - 1.0) / (i + 1) as f64;
        if ui - t > 0.0 {
            theta = t;
        }
    }
    v.iter().map(|&vi| (vi - theta).max(0.0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        assert_eq!(falling_factorial(5, 3), 60.0);
        assert_eq!(falling_factorial(3, 4), 0.0);
        assert_eq!(factorial(4), 24.0);
        assert_eq!(binomial(7, 2), 21.0);
        assert_eq!(binomial(40, 3), 9880.0);
        let exact: u128 = (991..=1000u128).product();
        assert_eq!(falling_factorial(1000, 10), exact as f64);
    }

    #[test]
    fn kahan_beats_naive() {
        let v: Vec<f64> = std::iter::once(1.0).chain(std::iter::repeat_n(1e-16, 10_000)).collect();
        assert!((kahan_sum(v.iter().copied()) - (1.0 + 1e-12)).abs() < 1e-15);
    }

    #[test]
    fn norms_and_projection() {
        let mut x = vec![3.0, -4.0];
        assert!((p_norm(&x, 2.0) - 5.0).abs() < 1e-15);
        normalize_p(&mut x, 1.0);
        assert!((p_norm(&x, 1.0) - 1.0).abs() < 1e-15);
        let y = project_simplex(&[0.5, 0.5, 0.5]);
        assert!(y.iter().all(|v| (v - 1.0 / 3.0).abs() < 1e-15));
        let y = project_simplex(&[2.0, 0.0]);
        assert_eq!(y, vec![1.0, 0.0]);
    }
}
