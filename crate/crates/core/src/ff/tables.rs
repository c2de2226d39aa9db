use std::sync::Arc;

use super::{Fq, FqField};

/// Full addition and multiplication tables on element indices, for the
/// brute-force enumeration kernels. Restricted to `q <= MAX_ORDER`.
#[derive(Debug, Clone)]
pub struct FieldTables {
    field: Arc<FqField>,
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

impl FieldTables {
    pub const MAX_ORDER: u128 = 1024;

    pub fn new(field: &Arc<FqField>) -> Option<Self> {
        if field.order() > Self::MAX_ORDER {
            return None;
        }
        let q = field.order() as usize;
        let elems: Vec<Fq> = field.elements().collect();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for i in 0..q {
            for j in i..q {
                let s = (&elems[i] + &elems[j]).index() as u16;
                let m = (&elems[i] * &elems[j]).index() as u16;
                add[i * q + j] = s;
                add[j * q + i] = s;
                mul[i * q + j] = m;
                mul[j * q + i] = m;
            }
        }
        let neg = elems.iter().map(|e| (-e).index() as u16).collect();
        Some(FieldTables {
            field: field.clone(),
            q,
            add,
            mul,
            neg,
        })
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    pub fn index_of(&self, a: &Fq) -> u16 {
        a.index() as u16
    }
}
