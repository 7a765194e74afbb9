use std::cmp::Ordering;
use std::fmt;

/// Exact rational density |E(S)| / |S|.
///
/// Kept as an integer numerator/denominator pair so that oracle equality
/// tests are exact: distinct subgraph densities can differ by as little as
/// 1/(n(n-1)), which floating point cannot reliably separate.
#[derive(Clone, Copy, Debug)]
pub struct Density {
    num: i64,
    den: i64,
}

impl Density {
    /// `num` edges over `den` vertices. `den` must be >= 1.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den >= 1, "density denominator must be >= 1");
        assert!(num >= 0, "density numerator must be >= 0");
        Density { num, den }
    }

    pub fn zero() -> Self {
        Density { num: 0, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Exact comparison against another rational given as `p/q`.
    pub fn cmp_ratio(&self, p: i64, q: i64) -> Ordering {
        assert!(q >= 1);
        (self.num as i128 * q as i128).cmp(&(p as i128 * self.den as i128))
    }
}

impl PartialEq for Density {
    fn eq(&self, other: &Self) -> bool {
        self.num as i128 * other.den as i128 == other.num as i128 * self.den as i128
    }
}

impl Eq for Density {}

impl PartialOrd for Density {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Density {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
