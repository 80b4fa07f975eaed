//! Correctly rounded floating-point summation.

/// Exact running sum of `f64` values kept as a non-overlapping expansion
/// (Shewchuk). [`ExactSum::value`] is the correctly rounded total, so it does
/// not depend on the order values were added or how partial sums were merged.
#[derive(Debug, Clone, Default)]
pub struct ExactSum {
    partials: Vec<f64>,
}

impl ExactSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, mut x: f64) {
        let mut i = 0;
        for j in 0..self.partials.len() {
            let mut y = self.partials[j];
            if x.abs() < y.abs() {
                std::mem::swap(&mut x, &mut y);
            }
            let hi = x + y;
            let lo = y - (hi - x);
            if lo != 0.0 {
                self.partials[i] = lo;
                i += 1;
            }
            x = hi;
        }
        self.partials.truncate(i);
        self.partials.push(x);
    }

    pub fn merge(&mut self, other: &ExactSum) {
        for &p in &other.partials {
            self.add(p);
        }
    }

    pub fn value(&self) -> f64 {
        let p = &self.partials;
        let mut n = p.len();
        if n == 0 {
            return 0.0;
        }
        n -= 1;
        let mut hi = p[n];
        let mut lo = 0.0;
        while n > 0 {
            let x = hi;
            n -= 1;
            let y = p[n];
            hi = x + y;
            let yr = hi - x;
            lo = y - yr;
            if lo != 0.0 {
                break;
            }
        }
        // Round half to even across the remaining partials.
        if n > 0 && ((lo < 0.0 && p[n - 1] < 0.0) || (lo > 0.0 && p[n - 1] > 0.0)) {
            let y = lo * 2.0;
            let x = hi + y;
            let yr = x - hi;
            if y == yr {
                hi = x;
            }
        }
        hi
    }
}

impl FromIterator<f64> for ExactSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = ExactSum::new();
        for v in iter {
            s.add(v);
        }
        s
    }
}

pub fn exact_sum<'a>(values: impl IntoIterator<Item = &'a f64>) -> f64 {
    values.into_iter().copied().collect::<ExactSum>().value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cancels_exactly() {
        assert_eq!(exact_sum(&[1e100, 1.0, -1e100]), 1.0);
        assert_eq!(exact_sum(&[0.1, 0.2, 0.3]), 0.6);
        assert_eq!(exact_sum(&[]), 0.0);
    }

    proptest! {
        #[test]
        fn order_and_split_independent(values in prop::collection::vec(0.0f64..1e3, 1..200), k in 0usize..200) {
            let k = k % (values.len() + 1);
            let whole = exact_sum(&values);
            let mut left: ExactSum = values[..k].iter().copied().collect();
            let right: ExactSum = values[k..].iter().copied().collect();
            left.merge(&right);
            prop_assert_eq!(left.value(), whole);
            let mut rev = values.clone();
            rev.reverse();
            prop_assert_eq!(exact_sum(&rev), whole);
        }
    }
}
