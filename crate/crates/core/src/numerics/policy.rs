use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Precision schedule for rigorous decisions: start at `start_bits` and
/// multiply by `growth` until `max_bits` is passed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecisionPolicy {
    pub start_bits: u32,
    pub max_bits: u32,
    pub growth: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy { start_bits: 128, max_bits: 8192, growth: 2 }
    }
}

impl PrecisionPolicy {
    pub fn new(start_bits: u32, max_bits: u32, growth: u32) -> Result<Self> {
        if start_bits < 2 {
            return Err(Error::Policy(format!("start_bits {start_bits} < 2")));
        }
        if start_bits > max_bits {
            return Err(Error::Policy(format!(
                "start_bits {start_bits} exceeds max_bits {max_bits}"
            )));
        }
        if growth < 2 {
            return Err(Error::Policy(format!("growth {growth} < 2")));
        }
        Ok(PrecisionPolicy { start_bits, max_bits, growth })
    }

    /// The precisions tried, in order; the last one never exceeds `max_bits`.
    pub fn schedule(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut p = self.start_bits;
        loop {
            out.push(p);
            if p >= self.max_bits {
                break;
            }
            p = p.saturating_mul(self.growth).min(self.max_bits);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_schedule() {
        let s = PrecisionPolicy::default().schedule();
        assert_eq!(s, vec![128, 256, 512, 1024, 2048, 4096, 8192]);
    }

    #[test]
    fn capped_schedule() {
        let s = PrecisionPolicy::new(100, 500, 3).unwrap().schedule();
        assert_eq!(s, vec![100, 300, 500]);
    }

    #[test]
    fn rejects_bad_policies() {
        assert!(PrecisionPolicy::new(256, 128, 2).is_err());
        assert!(PrecisionPolicy::new(128, 256, 1).is_err());
        assert!(PrecisionPolicy::new(1, 256, 2).is_err());
    }
}
