use crate::error::{Error, Result};

/// Caps on the exhaustive scans, keyed on the size of the vertex universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanLimits {
    /// `2^m` full subcomplexes for the Tor table.
    pub hochster_max_m: usize,
    /// `3^m` disjoint pairs for the product scan.
    pub product_max_m: usize,
    /// Koszul complex oracle.
    pub koszul_max_m: usize,
    /// Ignore the caps.
    pub force: bool,
}

impl Default for ScanLimits {
    fn default() -> Self {
        ScanLimits { hochster_max_m: 24, product_max_m: 16, koszul_max_m: 12, force: false }
    }
}

impl ScanLimits {
    pub fn forced() -> Self {
        ScanLimits { force: true, ..Self::default() }
    }

    pub(crate) fn check(&self, what: &'static str, m: usize, cap: usize) -> Result<()> {
        if !self.force && m > cap {
            return Err(Error::CapExceeded { what, m, cap });
        }
        Ok(())
    }
}
