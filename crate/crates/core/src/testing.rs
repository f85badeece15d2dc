//! Deliberately corrupted operations for negative tests.

use crate::error::{LaverError, Result};
use crate::table::{Element, LaverTable, Magma};

/// A Laver table with the single entry `(p, q)` overwritten.
///
/// Only the unrolled cell `(p, q)` changes; other periodic copies of the
/// row keep their original value.
#[derive(Debug, Clone, Copy)]
pub struct Mutated<'a> {
    base: &'a LaverTable,
    p: Element,
    q: Element,
    value: Element,
}

impl<'a> Mutated<'a> {
    pub fn new(base: &'a LaverTable, p: Element, q: Element, value: Element) -> Result<Self> {
        for x in [p, q, value] {
            if !base.contains(x) {
                return Err(LaverError::Domain(format!("{x} is not an element of A_{}", base.n())));
            }
        }
        Ok(Mutated { base, p, q, value })
    }

    pub fn base(&self) -> &LaverTable {
        self.base
    }
}

impl Magma for Mutated<'_> {
    fn order(&self) -> u32 {
        self.base.size()
    }

    fn op(&self, p: Element, q: Element) -> Element {
        if (p, q) == (self.p, self.q) {
            self.value
        } else {
            self.base.op(p, q)
        }
    }
}
