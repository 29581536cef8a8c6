//! Compensated accumulation and limit extrapolation shared by the series and
//! quadrature layers.

/// Neumaier (improved Kahan–Babuška) running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = NeumaierSum::new();
        for v in iter {
            s.add(v);
        }
        s
    }
}

/// Double-double number hi + lo with |lo| ≤ ulp(hi)/2, about 106 bits.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

impl DoubleDouble {
    pub fn new(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    #[inline]
    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        Self {
            hi: s,
            lo: (a - (s - bb)) + (b - bb),
        }
    }

    #[inline]
    fn quick(a: f64, b: f64) -> Self {
        let s = a + b;
        Self { hi: s, lo: b - (s - a) }
    }

    #[inline]
    pub fn add(self, o: Self) -> Self {
        let s = Self::two_sum(self.hi, o.hi);
        let t = Self::two_sum(self.lo, o.lo);
        let u = Self::quick(s.hi, s.lo + t.hi);
        Self::quick(u.hi, u.lo + t.lo)
    }

    #[inline]
    pub fn mul(self, o: Self) -> Self {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        Self::quick(p, e + (self.hi * o.lo + self.lo * o.hi))
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Self {
        self.mul(Self::new(x))
    }

    #[inline]
    pub fn div_f64(self, d: f64) -> Self {
        let q1 = self.hi / d;
        let r = self.add(Self::new(q1).mul_f64(-d));
        let q2 = r.hi / d;
        let r = r.add(Self::new(q2).mul_f64(-d));
        let q3 = r.hi / d;
        Self::quick(q1, q2).add(Self::new(q3))
    }

    pub fn powi(self, n: u32) -> Self {
        let (mut acc, mut base, mut k) = (Self::new(1.0), self, n);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            k >>= 1;
        }
        acc
    }

    pub fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn value(self) -> f64 {
        self.hi + self.lo
    }
}

/// Compensated sum of an iterator.
pub fn csum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<NeumaierSum>().value()
}

/// Value of the interpolating polynomial through `(xs[i], ys[i])` at `x = 0`
/// (Neville). Returns the extrapolant from all points and the one obtained
/// without the first (coarsest) point.
pub fn neville_at_zero(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    assert_eq!(xs.len(), ys.len());
    assert!(xs.len() >= 2);
    let full = neville(xs, ys);
    let reduced = neville(&xs[1..], &ys[1..]);
    (full, reduced)
}

fn neville(xs: &[f64], ys: &[f64]) -> f64 {
    let mut p = ys.to_vec();
    let n = xs.len();
    for m in 1..n {
        for i in 0..n - m {
            p[i] = (xs[i + m] * p[i] - xs[i] * p[i + 1]) / (xs[i + m] - xs[i]);
        }
    }
    p[0]
}

/// One basis function in a generalized Richardson fit: `N^exponent * ln(N)^log_power`.
#[derive(Debug, Clone, Copy)]
pub struct Basis {
    pub exponent: f64,
    pub log_power: u32,
}

impl Basis {
    fn eval(&self, n: f64) -> f64 {
        n.powf(self.exponent) * n.ln().powi(self.log_power as i32)
    }
}

/// Fits `S_N = S + Σ c_k g_k(N)` exactly through the last `basis.len() + 1`
/// points and returns `S`. Points are (N, partial sum).
fn fit_limit(ns: &[f64], sums: &[f64], basis: &[Basis]) -> Option<f64> {
    let k = basis.len() + 1;
    if ns.len() < k {
        return None;
    }
    let ns = &ns[ns.len() - k..];
    let sums = &sums[sums.len() - k..];
    // Unknowns: [S, c_1 .. c_K]; columns scaled to unit max norm.
    let mut mat = vec![vec![0.0; k + 1]; k];
    for (row, (&n, &s)) in mat.iter_mut().zip(ns.iter().zip(sums)) {
        row[0] = 1.0;
        for (j, b) in basis.iter().enumerate() {
            row[j + 1] = b.eval(n);
        }
        row[k] = s;
    }
    let mut scale = vec![1.0; k];
    for (j, sc) in scale.iter_mut().enumerate().skip(1) {
        let m = mat.iter().map(|r| r[j].abs()).fold(0.0, f64::max);
        if m > 0.0 {
            *sc = m;
            for r in mat.iter_mut() {
                r[j] /= m;
            }
        }
    }
    solve_in_place(&mut mat)?;
    Some(mat[0][k] / scale[0])
}

/// Gaussian elimination with partial pivoting on an augmented k×(k+1) matrix.
/// On success the last column holds the solution.
fn solve_in_place(m: &mut [Vec<f64>]) -> Option<()> {
    let k = m.len();
    for col in 0..k {
        let piv = (col..k).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))?;
        if m[piv][col] == 0.0 {
            return None;
        }
        m.swap(col, piv);
        for r in 0..k {
            if r != col {
                let f = m[r][col] / m[col][col];
                if f != 0.0 {
                    for c in col..=k {
                        let v = m[col][c];
                        m[r][c] -= f * v;
                    }
                }
            }
        }
    }
    for r in 0..k {
        m[r][k] /= m[r][r];
    }
    Some(())
}

/// Richardson extrapolation of partial sums with a known asymptotic basis.
///
/// Returns `(limit, spread)` where `spread` compares the fit against a fit on
/// the previous window and a fit with one fewer basis function.
pub fn richardson_limit(ns: &[f64], sums: &[f64], basis: &[Basis]) -> Option<(f64, f64)> {
    let best = fit_limit(ns, sums, basis)?;
    let shifted = fit_limit(&ns[..ns.len() - 1], &sums[..sums.len() - 1], basis)?;
    let smaller = fit_limit(ns, sums, &basis[..basis.len() - 1])?;
    let spread = (best - shifted).abs().max((best - smaller).abs());
    Some((best, spread))
}
