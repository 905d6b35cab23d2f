//! Interned variable symbols.
//!
//! A [`Var`] is a small integer handle into a process-wide table of names.
//! Handles compare and hash by id; anything user-visible (printing, the
//! canonical monomial order) goes through [`Var::name`] so output never
//! depends on interning order.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

#[derive(Default)]
struct Interner {
    names: Vec<&'static str>,
    ids: HashMap<&'static str, u32>,
}

fn table() -> &'static RwLock<Interner> {
    static TABLE: OnceLock<RwLock<Interner>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

impl Var {
    /// Interns `name`, returning the existing handle when already present.
    pub fn new(name: &str) -> Var {
        if let Some(&id) = table().read().expect("symbol table poisoned").ids.get(name) {
            return Var(id);
        }
        let mut t = table().write().expect("symbol table poisoned");
        if let Some(&id) = t.ids.get(name) {
            return Var(id);
        }
        let id = t.names.len() as u32;
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        t.names.push(leaked);
        t.ids.insert(leaked, id);
        Var(id)
    }

    /// `prefix1, prefix2, …, prefixN`.
    pub fn indexed(prefix: &str, count: usize) -> Vec<Var> {
        (1..=count).map(|i| Var::new(&format!("{prefix}{i}"))).collect()
    }

    pub fn name(self) -> &'static str {
        table().read().expect("symbol table poisoned").names[self.0 as usize]
    }

    pub fn id(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
