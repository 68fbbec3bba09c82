#![allow(dead_code)]

use std::sync::Arc;

use hyperschubert::fga::{Fga, FglMode};
use hyperschubert::gkm::GkmSpace;
use hyperschubert::qw::TwistedAlgebra;
use hyperschubert::roots::{CartanSpec, Family, RootSystem, WeylGroup};

pub fn group(f: Family, r: usize) -> Arc<WeylGroup> {
    let sys = Arc::new(RootSystem::new(CartanSpec::new(f, r).unwrap()).unwrap());
    Arc::new(WeylGroup::new(sys).unwrap())
}

pub fn algebra(f: Family, r: usize, mode: FglMode) -> TwistedAlgebra {
    let g = group(f, r);
    let fga = Arc::new(Fga::new(g.system_arc().clone(), mode));
    TwistedAlgebra::new(g, fga)
}

pub fn space(f: Family, r: usize, mode: FglMode) -> GkmSpace {
    GkmSpace::new(CartanSpec::new(f, r).unwrap(), mode).unwrap()
}

/// Every implemented system of rank at most 3.
pub fn small_systems() -> Vec<(Family, usize)> {
    vec![
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 2),
        (Family::C, 3),
        (Family::D, 3),
        (Family::G2, 2),
    ]
}
