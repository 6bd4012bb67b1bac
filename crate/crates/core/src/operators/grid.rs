use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    /// Endpoints included: `h = (b - a)/(N - 1)`.
    Bounded,
    /// Right endpoint identified with the left: `h = (b - a)/N`.
    Periodic,
}

/// Uniform one-dimensional grid `x_i = a + i h`, `i = 0..N-1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    n: usize,
    a: f64,
    b: f64,
    h: f64,
    topology: Topology,
}

impl Grid {
    pub fn bounded(a: f64, b: f64, n: usize) -> Result<Self> {
        Self::new(a, b, n, Topology::Bounded)
    }

    pub fn periodic(a: f64, b: f64, n: usize) -> Result<Self> {
        Self::new(a, b, n, Topology::Periodic)
    }

    pub fn new(a: f64, b: f64, n: usize, topology: Topology) -> Result<Self> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidParameter(format!("grid interval [{a}, {b}] is empty")));
        }
        let h = match topology {
            Topology::Bounded if n >= 2 => (b - a) / (n - 1) as f64,
            Topology::Periodic if n >= 1 => (b - a) / n as f64,
            _ => return Err(Error::InvalidParameter(format!("too few grid nodes: {n}"))),
        };
        Ok(Self {
            n,
            a,
            b,
            h,
            topology,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn is_periodic(&self) -> bool {
        self.topology == Topology::Periodic
    }

    /// `a + i h`; also valid for indices outside `0..N` (exterior nodes).
    pub fn x(&self, i: isize) -> f64 {
        self.a + i as f64 * self.h
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n as isize).map(|i| self.x(i)).collect()
    }

    /// Samples `f` at the nodes.
    pub fn sample<T, F: Fn(f64) -> T>(&self, f: F) -> Vec<T> {
        (0..self.n as isize).map(|i| f(self.x(i))).collect()
    }
}
