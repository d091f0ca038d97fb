//! Pass/fail reports for identity checkers.

use std::fmt;

use crate::linalg::Vector;

/// First failing basis tuple of one named identity, with the nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    /// 0-based basis indices, in the order the identity's variables are listed.
    pub tuple: Vec<usize>,
    pub residual: Vector,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tuple: Vec<String> = self.tuple.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{} at ({}) residual {}", self.law, tuple.join(","), self.residual)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self, law: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }

    /// Scans every tuple of `shape` in lexicographic order and records the first one
    /// whose residual is nonzero.
    pub fn check<F>(&mut self, law: &'static str, shape: &[usize], mut residual: F)
    where
        F: FnMut(&[usize]) -> Vector,
    {
        if let Some((tuple, residual)) = first_failure(shape, &mut residual) {
            self.violations.push(Violation { law, tuple, residual });
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "passed");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

fn first_failure<F>(shape: &[usize], residual: &mut F) -> Option<(Vec<usize>, Vector)>
where
    F: FnMut(&[usize]) -> Vector,
{
    let mut found = None;
    for_each_tuple(shape, |t| {
        let r = residual(t);
        if r.is_zero() {
            true
        } else {
            found = Some((t.to_vec(), r));
            false
        }
    });
    found
}

/// Visits every index tuple `t` with `t[i] < shape[i]`, lexicographically, until `visit` returns false.
pub fn for_each_tuple<F: FnMut(&[usize]) -> bool>(shape: &[usize], mut visit: F) {
    if shape.contains(&0) {
        return;
    }
    let mut t = vec![0usize; shape.len()];
    loop {
        if !visit(&t) {
            return;
        }
        let mut pos = shape.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < shape[pos] {
                break;
            }
            t[pos] = 0;
        }
    }
}
