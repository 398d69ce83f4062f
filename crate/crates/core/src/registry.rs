//! Reference functions with the positive intervals they are sampled on.

use crate::fexpr::GFunction;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegistryEntry {
    pub name: &'static str,
    pub text: &'static str,
    pub lo: f64,
    pub hi: f64,
}

impl RegistryEntry {
    pub fn function(&self) -> GFunction {
        GFunction::parse(self.text)
            .expect("registry expressions parse")
            .positive_on(self.lo, self.hi)
    }

    /// `n` evenly spaced points strictly inside `(lo, hi)`.
    pub fn samples(&self, n: usize) -> Vec<f64> {
        interior_samples(self.lo, self.hi, n)
    }
}

pub fn interior_samples(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n as f64 + 1.0);
    (1..=n).map(|i| lo + step * i as f64).collect()
}

/// exp, sin on (0, π), x^n for n ∈ {1, 3, 7}, x^{ln x}, a·b^x and the
/// quotient `e^{-1/x²}/(x² sin x)`.
pub const REGISTRY: [RegistryEntry; 8] = [
    RegistryEntry {
        name: "exp",
        text: "exp(x)",
        lo: 0.1,
        hi: 4.0,
    },
    RegistryEntry {
        name: "sin",
        text: "sin(x)",
        lo: 0.0,
        hi: std::f64::consts::PI,
    },
    RegistryEntry {
        name: "x",
        text: "x",
        lo: 0.1,
        hi: 5.0,
    },
    RegistryEntry {
        name: "x^3",
        text: "x^3",
        lo: 0.1,
        hi: 5.0,
    },
    RegistryEntry {
        name: "x^7",
        text: "x^7",
        lo: 0.1,
        hi: 5.0,
    },
    RegistryEntry {
        name: "x^{ln x}",
        text: "x^(ln(x))",
        lo: 0.1,
        hi: 5.0,
    },
    RegistryEntry {
        name: "3*2^x",
        text: "3*2^x",
        lo: 0.1,
        hi: 5.0,
    },
    RegistryEntry {
        name: "quotient",
        text: "exp(-1/x^2)/(x^2*sin(x))",
        lo: 0.4,
        hi: 2.8,
    },
];

pub fn registry() -> &'static [RegistryEntry] {
    &REGISTRY
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_parse_and_are_positive() {
        for entry in registry() {
            let f = entry.function();
            for x in entry.samples(20) {
                assert!(f.eval(x).unwrap() > 0.0, "{} at {x}", entry.name);
            }
        }
    }

    #[test]
    fn samples_are_interior() {
        let s = interior_samples(0.0, 1.0, 3);
        assert_eq!(s, vec![0.25, 0.5, 0.75]);
    }
}
