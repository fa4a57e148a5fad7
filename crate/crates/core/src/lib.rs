pub mod combinat;
pub mod error;
pub mod schur;

pub use combinat::{codim_of_subset, dual_partition, solve_degree, subset_to_partition, Partition, SchubertSubset};
pub use error::{Error, Result};
pub use schur::{lr_coefficient, lr_tableau_count, schur_product, SchurSum};
pub mod quantum;
pub use quantum::{gw_number, quantum_product, vafa_intriligator_estimate, QuantumClass};
pub mod shifting;
pub use shifting::{generalized_gw, normalize_weights_1n, shift_condition_down, shift_condition_up, ShiftedCondition, WeightedPoint1N};

pub type Q = num_rational::BigRational;
pub mod report;
pub use report::{ExistenceReport, InequalityRecord, LinearForm, RecordKind, Solution};
pub mod hodge;
pub use hodge::{check_1n, check_unitary, enumerate_inequalities_1n, HodgeProblem1N, LabeledPoint1N, UnitaryPoint};
pub mod lowrank;
pub use lowrank::{
    biswas_check, biswas_report, check_11, check_111, check_12, check_chain, classify_points_12, shifted_splitting_12,
    valid_line_degrees, ChainPoint, ChainProblem, HodgeProblem12, Point11, Point12, SplittingType,
};
