//! Integer points of flow polytopes `F_G(a)` and their weighted sums.

mod enumerate;
mod gn;
mod sum;
mod tesler;
mod weight;

pub use enumerate::{enumerate_flows, weak_compositions, FlowIter, IntegerFlow, NetflowVector};
pub use gn::{gn_sum, gn_weight, GnVariant};
pub use sum::{
    count_flows, ehrhart_qt, ehrhart_specialized, surplus_factor, weighted_flow_sum, FlowRing,
};
pub use tesler::{flow_to_tesler, TeslerMatrix};
pub use weight::weight_qt;
