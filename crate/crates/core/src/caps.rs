/// Size limits for the exponential routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest order accepted by the `n!` permutation enumeration.
    pub perms: usize,
    /// Largest order accepted by the `2^n` principal-minor enumeration.
    pub subsets: usize,
    /// Most elementary circuits enumerated before giving up.
    pub circuits: usize,
    /// Largest vertex count for extended-circuit enumeration.
    pub exhaustive: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            perms: 9,
            subsets: 16,
            circuits: 1_000_000,
            exhaustive: 10,
        }
    }
}
