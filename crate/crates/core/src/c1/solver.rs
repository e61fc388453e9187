//! Small DPLL engine: unit propagation plus chronological backtracking over
//! a fixed decision order. No clause learning.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Lit {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Lit {
        Lit { var, positive: false }
    }
}

/// Outcome of an enumeration that may stop early.
pub(crate) enum Walk {
    Continue,
    Stop,
}

pub(crate) struct Solver {
    clauses: Vec<Vec<Lit>>,
    occurs: Vec<Vec<usize>>,
    assign: Vec<Option<bool>>,
    trail: Vec<usize>,
    /// Decision variables in branching order, with the value tried first.
    order: Vec<(usize, bool)>,
    decisions: u64,
    max_decisions: u64,
}

impl Solver {
    pub fn new(vars: usize, order: Vec<(usize, bool)>, max_decisions: u64) -> Self {
        Solver {
            clauses: Vec::new(),
            occurs: vec![Vec::new(); vars],
            assign: vec![None; vars],
            trail: Vec::new(),
            order,
            decisions: 0,
            max_decisions,
        }
    }

    pub fn add_clause(&mut self, lits: Vec<Lit>) {
        let id = self.clauses.len();
        for lit in &lits {
            if self.occurs[lit.var].last() != Some(&id) {
                self.occurs[lit.var].push(id);
            }
        }
        self.clauses.push(lits);
    }

    fn value(&self, lit: Lit) -> Option<bool> {
        self.assign[lit.var].map(|v| v == lit.positive)
    }

    fn set(&mut self, var: usize, value: bool) {
        self.assign[var] = Some(value);
        self.trail.push(var);
    }

    fn undo(&mut self, len: usize) {
        while self.trail.len() > len {
            let var = self.trail.pop().expect("trail entry");
            self.assign[var] = None;
        }
    }

    /// Examines one clause; `Err(())` on conflict, otherwise the unit literal if any.
    fn inspect(&self, clause: usize) -> Result<Option<Lit>, ()> {
        let mut unassigned = None;
        let mut count = 0;
        for &lit in &self.clauses[clause] {
            match self.value(lit) {
                Some(true) => return Ok(None),
                Some(false) => {}
                None => {
                    count += 1;
                    unassigned = Some(lit);
                }
            }
        }
        match count {
            0 => Err(()),
            1 => Ok(unassigned),
            _ => Ok(None),
        }
    }

    /// Propagates from trail position `from`; false on conflict.
    fn propagate(&mut self, mut from: usize) -> bool {
        while from < self.trail.len() {
            let var = self.trail[from];
            from += 1;
            for k in 0..self.occurs[var].len() {
                let clause = self.occurs[var][k];
                match self.inspect(clause) {
                    Err(()) => return false,
                    Ok(Some(unit)) => self.set(unit.var, unit.positive),
                    Ok(None) => {}
                }
            }
        }
        true
    }

    fn initial_propagation(&mut self) -> bool {
        for clause in 0..self.clauses.len() {
            match self.inspect(clause) {
                Err(()) => return false,
                Ok(Some(unit)) => {
                    let start = self.trail.len();
                    self.set(unit.var, unit.positive);
                    if !self.propagate(start) {
                        return false;
                    }
                }
                Ok(None) => {}
            }
        }
        true
    }

    fn next_decision(&self) -> Option<(usize, bool)> {
        self.order.iter().copied().find(|(var, _)| self.assign[*var].is_none())
    }

    /// First model in decision order, `Ok(None)` when unsatisfiable,
    /// `Err(())` when the decision budget runs out.
    pub fn solve(mut self) -> Result<Option<Vec<bool>>, ()> {
        let mut found = None;
        self.walk(&mut |model| {
            found = Some(model.to_vec());
            Walk::Stop
        })?;
        Ok(found)
    }

    /// Visits every model in decision order.
    pub fn for_each_model(mut self, visit: &mut dyn FnMut(&[bool]) -> Walk) -> Result<(), ()> {
        self.walk(visit)
    }

    fn walk(&mut self, visit: &mut dyn FnMut(&[bool]) -> Walk) -> Result<(), ()> {
        if !self.initial_propagation() {
            return Ok(());
        }
        self.descend(visit).map(|_| ())
    }

    fn descend(&mut self, visit: &mut dyn FnMut(&[bool]) -> Walk) -> Result<Walk, ()> {
        let Some((var, first)) = self.next_decision() else {
            if let Some(unset) = self.assign.iter().position(Option::is_none) {
                // variable outside the decision order: branch on it as well
                return self.branch(unset, false, visit);
            }
            let model: Vec<bool> = self.assign.iter().map(|v| v.expect("complete assignment")).collect();
            return Ok(visit(&model));
        };
        self.branch(var, first, visit)
    }

    fn branch(&mut self, var: usize, first: bool, visit: &mut dyn FnMut(&[bool]) -> Walk) -> Result<Walk, ()> {
        for value in [first, !first] {
            self.decisions += 1;
            if self.decisions > self.max_decisions {
                return Err(());
            }
            let mark = self.trail.len();
            self.set(var, value);
            if self.propagate(mark) {
                if let Walk::Stop = self.descend(visit)? {
                    self.undo(mark);
                    return Ok(Walk::Stop);
                }
            }
            self.undo(mark);
        }
        Ok(Walk::Continue)
    }
}
