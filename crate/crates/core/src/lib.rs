//! Conjugacy class sizes of the simple Zassenhaus groups PSL(2,q) and Sz(q),
//! their divisibility graphs, and a brute-force matrix-group oracle.

pub mod brute_force;
pub mod closed_form;
pub mod divgraph;
pub mod finite_field;
pub mod numtheory;

pub use closed_form::{
    check_class_equation, class_table, psl2_table, sz_table, ClassEntry, ClassSizeTable, Family,
    GroupError, GroupSpec, Origin,
};
pub use finite_field::{field_make, FieldCtx, FieldElement, FieldError, FieldOp, FieldTables};
pub use divgraph::{
    build_divgraph, classify_shape, components, export_graph, Component, ComponentShape,
    DivisibilityGraph, ExportFormat, GraphError,
};
pub use brute_force::{
    conjugacy_classes, enumerate_psl2, generate_sz, suzuki_unipotent, BruteForceError,
    BruteForceGroup, MatrixElement, MatrixGroup, TiReport,
};
