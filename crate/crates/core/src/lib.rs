//! Exact tensor-product decompositions for the irreducible representations of
//! `GL2(F_q)`, `q` odd.
//!
//! The closed-form engine lives in [`formulas`]; [`oracle`] recomputes every
//! multiplicity by brute-force character inner products over conjugacy classes
//! (and by Frobenius reciprocity for induced representations), so every closed
//! form can be checked independently. [`analysis`] builds the classification
//! results on top: multiplicity freeness, self-duality and the unique
//! decomposition property.
//!
//! ```
//! use gl2_tensor::{parse_label, tensor_decompose, FieldParams};
//!
//! let q5 = FieldParams::from_q(5).unwrap();
//! let st = parse_label(&q5, "st:0").unwrap();
//! let d = tensor_decompose(&st, &st).unwrap();
//! assert_eq!(d.to_string(), "1d:0 + st:0 + st:2 + ps:1,3 + cusp:4 + cusp:8");
//! assert_eq!(d.total_dimension(), 25);
//! ```

pub mod analysis;
pub mod chars;
pub mod chartable;
pub mod cyclo;
pub mod decomposition;
pub mod error;
pub mod formulas;
pub mod irrep;
pub mod oracle;
pub mod par;
pub mod params;
pub mod verify;

pub use analysis::{
    is_multiplicity_free, ps_cusp_products_agree, self_dual_classify, unique_decomp_witness,
    verify_unique_decomposition, verify_unique_decomposition_with,
};
pub use chars::{MultChar, TorusChar};
pub use chartable::{char_value, enumerate_classes, CharTable, ClassData, ConjClassLabel};
pub use cyclo::{CycloValue, ModularEvaluator, DEFAULT_SEED};
pub use decomposition::Decomposition;
pub use error::{Error, Result};
pub use formulas::{
    ind_t1_decompose, ind_tm1_decompose, ind_zu_decompose, pantoja_tensor, tensor_decompose,
};
pub use irrep::{
    build_s, build_v, build_w, enumerate_irreps, parse_label, Family, IrrepLabel, RawLabel,
};
pub use oracle::{
    induction_multiplicity, oracle_induced_decompose, oracle_tensor_decompose, tensor_multiplicity,
    InducingData,
};
pub use par::Execution;
pub use params::FieldParams;
pub use verify::{run_suite, CheckReport, Suite};
