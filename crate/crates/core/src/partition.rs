//! Integer partitions.

use std::fmt;

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part (1-indexed); zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// |λ|, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// ℓ(λ), the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate (transposed Young diagram).
    pub fn conjugate(&self) -> Partition {
        let max = self.parts.first().copied().unwrap_or(0) as usize;
        let mut parts = Vec::with_capacity(max);
        for c in 1..=max {
            parts.push(self.parts.iter().filter(|&&p| p as usize >= c).count() as u32);
        }
        Partition { parts }
    }

    /// Componentwise doubling: 2λ.
    pub fn doubled(&self) -> Partition {
        Partition { parts: self.parts.iter().map(|p| 2 * p).collect() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// Shape constraint for [`enumerate_partitions`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    None,
    /// ℓ(λ) ≤ L
    MaxLength(usize),
    /// λ₁ ≤ L
    MaxPart(u32),
    /// all parts even
    AllEven,
    /// exactly m parts, all odd (i.e. of the form 1 + 2μᵢ with μ padded to length m)
    ExactOddParts(usize),
}

/// Every partition of size ≤ `max_size` meeting the constraint, in a
/// deterministic order (by size, then lexicographic).
pub fn enumerate_partitions(max_size: u32, constraint: Constraint) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        let mut buf = Vec::new();
        gen(n, u32::MAX, &mut buf, &mut out, constraint);
    }
    out
}

fn gen(
    remaining: u32,
    max_part: u32,
    buf: &mut Vec<u32>,
    out: &mut Vec<Partition>,
    constraint: Constraint,
) {
    if remaining == 0 {
        let p = Partition { parts: buf.clone() };
        if admits(&p, constraint) {
            out.push(p);
        }
        return;
    }
    let hi = max_part.min(remaining);
    for part in (1..=hi).rev() {
        buf.push(part);
        gen(remaining - part, part, buf, out, constraint);
        buf.pop();
    }
}

fn admits(p: &Partition, c: Constraint) -> bool {
    match c {
        Constraint::None => true,
        Constraint::MaxLength(l) => p.len() <= l,
        Constraint::MaxPart(l) => p.part(1) <= l,
        Constraint::AllEven => p.parts().iter().all(|&x| x % 2 == 0),
        Constraint::ExactOddParts(m) => p.len() == m && p.parts().iter().all(|&x| x % 2 == 1),
    }
}
