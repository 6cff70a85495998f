//! Frobenius-splitting invariants of `R = F_p[x_1..x_n]/I` at the
//! homogeneous maximal ideal: Fedder's F-purity test, the splitting ideals
//! `A_e = (m^{[q]} : (I^{[q]} : I))`, free ranks `a_q = λ(S/A_e)`, the
//! splitting prime, splitting dimension estimates, strong F-regularity
//! witnesses and Hilbert–Kunz lengths.

mod checks;
mod presentation;
mod prime;
mod ratio;
mod sdim;
mod splitting;

pub use checks::{
    flat_extension_check, hk_sequence, main_claim_check, strongly_f_regular_witness, HkEntry, MainClaim,
    WitnessOutcome,
};
pub use presentation::{Engine, RingPresentation};
pub use prime::{splitting_prime, Certificate, PrimeStatus, SplittingPrimeResult};
pub use ratio::Fraction;
pub use sdim::{empirical_sdim, sdim_report, tail_len, Sdim, SdimReport};
pub use splitting::{
    aq, fedder_is_fpure, frobenius_colon, q_for, split_test, splitting_ideal, splitting_report,
    SplittingEntry, SplittingReport, Q_CAP,
};
