//! Step budgets shared by every evaluator.

use crate::error::Error;
use crate::value::Outcome;

/// Why an evaluation stopped without a value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stop {
    Diverged,
    OutOfFuel,
    Fault(Error),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Fault(e)
    }
}

pub type Eval<T> = Result<T, Stop>;

/// Folds an internal evaluation result into the public `Outcome`,
/// keeping genuine errors separate.
pub fn settle<T>(r: Eval<T>) -> Result<Outcome<T>, Error> {
    match r {
        Ok(v) => Ok(Outcome::Converged(v)),
        Err(Stop::Diverged) => Ok(Outcome::Diverged),
        Err(Stop::OutOfFuel) => Ok(Outcome::FuelExhausted),
        Err(Stop::Fault(e)) => Err(e),
    }
}

/// Lifts an outcome back into the `?`-friendly form.
pub fn unsettle<T>(o: Outcome<T>) -> Eval<T> {
    match o {
        Outcome::Converged(v) => Ok(v),
        Outcome::Diverged => Err(Stop::Diverged),
        Outcome::FuelExhausted => Err(Stop::OutOfFuel),
    }
}

/// A budget of evaluator steps. One unit is one term-reduction step, one
/// machine transition, or one μ-search probe.
#[derive(Debug, Clone)]
pub struct Fuel {
    remaining: u64,
    spent: u64,
}

impl Fuel {
    pub fn new(budget: u64) -> Self {
        Fuel { remaining: budget, spent: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> Eval<()> {
        self.charge(1)
    }

    #[inline]
    pub fn charge(&mut self, units: u64) -> Eval<()> {
        if self.remaining < units {
            self.spent += self.remaining;
            self.remaining = 0;
            return Err(Stop::OutOfFuel);
        }
        self.remaining -= units;
        self.spent += units;
        Ok(())
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustion() {
        let mut f = Fuel::new(2);
        assert!(f.tick().is_ok());
        assert!(f.tick().is_ok());
        assert_eq!(f.tick(), Err(Stop::OutOfFuel));
        assert_eq!(f.spent(), 2);
    }
}
