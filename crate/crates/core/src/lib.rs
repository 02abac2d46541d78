//! Weighted edge ideals: graphs, monomial ideals, integral closure of powers
//! and a structural classifier for integral closedness and normality.

pub mod classifier;
pub mod closure;
pub mod ideal;
pub mod wgraph;
