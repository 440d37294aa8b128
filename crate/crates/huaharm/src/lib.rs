//! Numerical harmonic analysis on Siegel tube domains and the Heisenberg group.
//!
//! The crate provides, at desk scale:
//!
//! * bounded solutions of the confluent-hypergeometric-type and Legendre-type
//!   half-line equations, with quadrature evaluation, differentiation under the
//!   integral sign and boundary-asymptotic extraction ([`specfun`]);
//! * the Heisenberg group `H^n`, its one-dimensional extension `S`, the
//!   operators `L_alpha` / `calL_alpha` as finite-difference derivations, the
//!   Schrödinger representation and the pointwise Cauchy / log kernels
//!   ([`heisenberg`]);
//! * Poisson-type kernels `Q_a^alpha` and `P_a^alpha`, derivative probes
//!   `I_p(a)` and the blow-up-exponent dichotomy detector ([`kernels`]);
//! * Euclidean Jordan algebras (symmetric-matrix instances), Peirce
//!   decomposition, the solvable groups acting on the cone and the special
//!   boundary coordinates ([`jordan`]);
//! * the strongly diagonal Hua operators and pluriharmonicity probes
//!   ([`hua`]);
//! * an experiment harness with flat-file configs, CSV tables and JSON run
//!   manifests ([`cli`]).

pub mod cli;
pub mod heisenberg;
pub mod hua;
pub mod jordan;
pub mod kernels;
pub mod specfun;
