//! Null-space certificates for incidence matrices.

pub mod certificate;
pub mod finder;
pub mod structure;

pub use certificate::{
    dual_side_certificate, equal_partition_certificate, general_combination_certificate, ratio_partition_certificate,
    root_of_unity_certificate, three_set_certificate, unit_pair_certificate, verify_certificate, CertificateKind,
    CertificateType, InducedVector, KernelCertificate, Part, Side, Verification,
};
pub use finder::{find_certificates_exhaustive, FinderBounds};
pub use structure::{
    extension_theorem_check, nullity_decomposition, sw_subspace, ExtensionReport, NullityReport, SwReport, SwSubspace,
};
