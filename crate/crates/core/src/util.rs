pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Sum over all `t`-subsets of the product of their entries.
pub(crate) fn elementary_symmetric(values: &[u32], t: usize) -> u128 {
    let mut e = vec![0u128; t + 1];
    e[0] = 1;
    for &v in values {
        for j in (1..=t).rev() {
            e[j] += e[j - 1] * v as u128;
        }
    }
    e[t]
}

pub(crate) fn ceil_div(num: u128, den: u128) -> u128 {
    num.div_ceil(den)
}

/// Fixed-width row bitset used for unions and subset tests.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub(crate) fn zeros(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }

    pub(crate) fn from_rows(n: usize, rows: &[u32]) -> Self {
        let mut b = Self::zeros(n);
        for &r in rows {
            b.0[r as usize / 64] |= 1 << (r % 64);
        }
        b
    }

    pub(crate) fn or_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    pub(crate) fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn to_rows(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (w, &word) in self.0.iter().enumerate() {
            let mut x = word;
            while x != 0 {
                let b = x.trailing_zeros();
                out.push(w as u32 * 64 + b);
                x &= x - 1;
            }
        }
        out
    }
}
