//! Numbers with prescribed irrationality exponent, produced by folding a
//! seed expansion over and over with middle digits `b^{u_n}`.

pub mod radix;
pub mod schedule;
pub mod xi;

pub use radix::{
    decode_base_b, encode_base_b, encode_fraction, lacunary_fraction, DigitExpansion,
    KataiSzaboBase,
};
pub use schedule::{
    schedule_from_psi, schedule_from_tau, w_variant_from_bits, w_variant_schedules,
    FoldingSchedule, Psi, PsiSchedule, PsiStage, TauSchedule,
};
pub use xi::{
    affine_sign, build_xi, estimate_exponent, lacunary_partial_sums, modulus_digits, Canonicity,
    ExponentBracket, StageCheck, XiNumber, XiStage, XiVariant,
};
