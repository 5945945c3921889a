//! Closed-form evaluators, each checked elsewhere against the brute-force
//! oracle.

mod fixed_diag;
mod mshape;
mod rho;
mod vshape;

use std::fmt;
use std::str::FromStr;

pub use fixed_diag::{box_via_fixed_diag, fixed_diag_rhs, macmahon_box, ssyt_box, staircase_plus};
pub use mshape::{chi, m_exponent, s_m_bounded, s_m_factored, s_m_gf, trace_gf_formula, triple_product};
pub use rho::{f_rho, f_rho_conjecture11, f_rho_intro, rho_limit_from_q_analog};
pub use vshape::{g_v_closed, g_v_hook, g_v_hook_with_region};

use crate::error::Error;

/// Stable identifiers for the evaluators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Rho,
    RhoSymmetric,
    VHook,
    VClosed,
    MBounded,
    MProduct,
    MTrace,
    FixedDiagRpp,
    FixedDiagSsyt,
    FixedDiagRst,
    MacMahon,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::Rho,
        TheoremId::RhoSymmetric,
        TheoremId::VHook,
        TheoremId::VClosed,
        TheoremId::MBounded,
        TheoremId::MProduct,
        TheoremId::MTrace,
        TheoremId::FixedDiagRpp,
        TheoremId::FixedDiagSsyt,
        TheoremId::FixedDiagRst,
        TheoremId::MacMahon,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Rho => "thm3.1",
            TheoremId::RhoSymmetric => "conj1.1",
            TheoremId::VHook => "thm4.1-hook",
            TheoremId::VClosed => "thm4.1-closed",
            TheoremId::MBounded => "thm5.1",
            TheoremId::MProduct => "mpp4.2",
            TheoremId::MTrace => "thm6.1",
            TheoremId::FixedDiagRpp => "thm2.3",
            TheoremId::FixedDiagSsyt => "cor2.4-ssyt",
            TheoremId::FixedDiagRst => "cor2.4-rst",
            TheoremId::MacMahon => "macmahon",
        }
    }

    /// Descriptive name accepted wherever an id is.
    pub fn alias(self) -> &'static str {
        match self {
            TheoremId::Rho => "rho",
            TheoremId::RhoSymmetric => "rho-symmetric",
            TheoremId::VHook => "v-hook",
            TheoremId::VClosed => "v-closed",
            TheoremId::MBounded => "m-bounded",
            TheoremId::MProduct => "m-product",
            TheoremId::MTrace => "m-trace",
            TheoremId::FixedDiagRpp => "fixed-diag-rpp",
            TheoremId::FixedDiagSsyt => "fixed-diag-ssyt",
            TheoremId::FixedDiagRst => "fixed-diag-rst",
            TheoremId::MacMahon => "macmahon",
        }
    }

    /// Names of the swept parameters, in report order.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            TheoremId::Rho => &["n", "a", "b", "c", "d"],
            TheoremId::RhoSymmetric => &["a", "n"],
            TheoremId::VHook | TheoremId::VClosed => &["n", "a", "b", "m"],
            TheoremId::MBounded => &["n", "a", "b", "c", "d", "N"],
            TheoremId::MProduct | TheoremId::MTrace => &["n", "a", "b", "c", "d", "m"],
            TheoremId::FixedDiagRpp | TheoremId::FixedDiagSsyt | TheoremId::FixedDiagRst => {
                &["n", "l1", "l2", "l3", "d1", "d2", "d3"]
            }
            TheoremId::MacMahon => &["a", "b", "c"],
        }
    }

    /// Whether the evaluator compares truncated series, so needs `T`.
    pub fn uses_truncation(self) -> bool {
        matches!(
            self,
            TheoremId::MProduct
                | TheoremId::MTrace
                | TheoremId::FixedDiagRpp
                | TheoremId::FixedDiagSsyt
                | TheoremId::FixedDiagRst
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s || t.alias() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem id {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
            assert_eq!(t.alias().parse::<TheoremId>().unwrap(), t);
        }
        assert!("thm9.9".parse::<TheoremId>().is_err());
    }
}
