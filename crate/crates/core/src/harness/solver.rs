use std::collections::HashMap;

use parking_lot::Mutex;

use crate::boolfn::BooleanFunction;
use crate::degrees::{ndeg, sdeg, NdegWitness, SignWitness};

/// Memoizes the two LP/nullspace solvers by truth table. Shared across
/// threads during corpus runs; results do not depend on fill order.
#[derive(Debug, Default)]
pub struct Solver {
    ndeg: Mutex<HashMap<BooleanFunction, NdegWitness>>,
    sdeg: Mutex<HashMap<BooleanFunction, SignWitness>>,
}

impl Solver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ndeg(&self, f: &BooleanFunction) -> NdegWitness {
        if let Some(w) = self.ndeg.lock().get(f) {
            return w.clone();
        }
        let w = ndeg(f);
        self.ndeg.lock().insert(f.clone(), w.clone());
        w
    }

    pub fn sdeg(&self, f: &BooleanFunction) -> SignWitness {
        if let Some(w) = self.sdeg.lock().get(f) {
            return w.clone();
        }
        let w = sdeg(f);
        self.sdeg.lock().insert(f.clone(), w.clone());
        w
    }

    pub fn cached(&self) -> (usize, usize) {
        (self.ndeg.lock().len(), self.sdeg.lock().len())
    }
}
