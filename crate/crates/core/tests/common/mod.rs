#![allow(dead_code)]

use dforms::linalg::basis_keys;
use dforms::rational::int;
use dforms::{CurvatureTensor, DoubleForm, Form, MultiIndex};
use proptest::prelude::*;

fn coefficient() -> impl Strategy<Value = i64> {
    prop_oneof![3 => Just(0i64), 2 => -3i64..=3]
}

pub fn form(n: usize, p: usize) -> impl Strategy<Value = Form> {
    let keys: Vec<MultiIndex> = MultiIndex::subsets(n, p).collect();
    prop::collection::vec(coefficient(), keys.len()).prop_map(move |cs| {
        Form::from_terms(n, p, keys.iter().zip(cs).map(|(k, c)| (*k, int(c)))).unwrap()
    })
}

pub fn double(n: usize, p: usize, q: usize) -> impl Strategy<Value = DoubleForm> {
    let keys = basis_keys(n, p, q);
    prop::collection::vec(coefficient(), keys.len()).prop_map(move |cs| {
        DoubleForm::from_terms(n, p, q, keys.iter().zip(cs).map(|(k, c)| (*k, int(c)))).unwrap()
    })
}

pub fn symmetric(n: usize, p: usize) -> impl Strategy<Value = DoubleForm> {
    double(n, p, p).prop_map(|w| &w + &w.transpose())
}

pub fn curvature(n: usize) -> impl Strategy<Value = CurvatureTensor> {
    any::<u64>().prop_map(move |seed| {
        let r = dforms::random::curvature(&mut dforms::random::rng(seed), n);
        CurvatureTensor::validate(r).unwrap()
    })
}

/// Sum that treats zeros of any bidegree as the identity.
pub fn plus(a: &DoubleForm, b: &DoubleForm) -> DoubleForm {
    if a.is_zero() {
        b.clone()
    } else if b.is_zero() {
        a.clone()
    } else {
        a + b
    }
}

pub fn same(a: &DoubleForm, b: &DoubleForm) -> bool {
    a == b || (a.is_zero() && b.is_zero())
}
