//! Compensated (Neumaier) summation for real and complex accumulators.

use crate::ComplexValue;

/// Neumaier variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for KahanSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = KahanSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Component-wise compensated sum of complex values.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexKahanSum {
    re: KahanSum,
    im: KahanSum,
}

impl ComplexKahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, z: ComplexValue) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> ComplexValue {
        ComplexValue::new(self.re.value(), self.im.value())
    }
}

impl FromIterator<ComplexValue> for ComplexKahanSum {
    fn from_iter<I: IntoIterator<Item = ComplexValue>>(iter: I) -> Self {
        let mut acc = ComplexKahanSum::new();
        for z in iter {
            acc.add(z);
        }
        acc
    }
}
