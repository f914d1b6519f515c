use crate::error::{Error, Result};

/// Resource caps shared by enumeration and construction.
///
/// `visits` bounds the partial assignments tried by map enumeration and
/// category isomorphism search. `simplices` bounds the size of any single
/// level of a constructed simplicial set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub visits: u64,
    pub simplices: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { visits: 1_000_000, simplices: 1_000_000 }
    }
}

impl Budget {
    pub fn new(visits: u64) -> Self {
        Budget { visits, simplices: visits }
    }

    pub fn unlimited() -> Self {
        Budget { visits: u64::MAX, simplices: u64::MAX }
    }

    pub fn check_size(&self, what: &str, size: u128) -> Result<()> {
        if size > self.simplices as u128 {
            Err(Error::BudgetExceeded { what: format!("{what} ({size} simplices in one level)"), limit: self.simplices })
        } else {
            Ok(())
        }
    }
}

/// Counter for visited partial assignments.
pub(crate) struct Meter {
    used: u64,
    limit: u64,
    what: &'static str,
}

impl Meter {
    pub(crate) fn new(limit: u64, what: &'static str) -> Self {
        Meter { used: 0, limit, what }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { what: self.what.to_string(), limit: self.limit })
        } else {
            Ok(())
        }
    }
}
